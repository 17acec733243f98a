//! The ring catalog.
//!
//! Every ring this crate computes over is one of six kinds: the integers,
//! an integer quotient `Z/n`, a prime field `GF(p)`, a univariate polynomial
//! ring `GF(p)[t]`, a quotient `GF(p)[t]/(f)`, or an abstract discrete
//! valuation ring `DVR`. All are commutative noetherian; `Z` and `GF(p)[t]`
//! are principal ideal domains, the quotients are artinian, and the DVR is
//! local of dimension one.
//!
//! The DVR is deliberately element-free: no DVR element is ever
//! materialized except formal powers of the uniformizer `x`, which is all
//! the valuation-normal-form data in [`crate::modules`] and
//! [`crate::formal`] ever needs.
//!
//! Arithmetic is exact. Factorization is trial division over `Z` and
//! exhaustive monic enumeration over `GF(p)[t]`; inputs are desk-scale by
//! design.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Exponent of the DVR uniformizer; wide enough for `31!`.
pub type DvrExp = u128;

// ---------------------------------------------------------------------------
// polynomials over F_p
// ---------------------------------------------------------------------------

/// A polynomial over `GF(p)`, coefficients ascending, reduced mod `p`,
/// with no trailing zero coefficient (the zero polynomial has no
/// coefficients at all).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn t(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = (a + b) % p;
        }
        FpPoly::new(p, out)
    }

    pub fn neg(&self) -> FpPoly {
        let p = self.p;
        FpPoly::new(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p as u128;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let v = (out[i + j] as u128 + (a as u128) * (b as u128)) % p;
                out[i + j] = v as u64;
            }
        }
        FpPoly::new(self.p, out)
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        self.mul(&FpPoly::constant(self.p, c))
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn div_rem(&self, div: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let p = self.p;
        let lead_inv = mod_inverse(div.leading(), p);
        let mut rem = self.clone();
        let dd = div.degree().unwrap();
        let mut q = vec![0u64; self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = ((rem.leading() as u128 * lead_inv as u128) % p as u128) as u64;
            let shift = rd - dd;
            q[shift] = c;
            // rem -= c * t^shift * div
            let mut sub = vec![0u64; shift];
            sub.extend(
                div.coeffs
                    .iter()
                    .map(|&a| ((a as u128 * c as u128) % p as u128) as u64),
            );
            rem = rem.sub(&FpPoly::new(p, sub));
        }
        (FpPoly::new(p, q), rem)
    }

    pub fn rem(&self, div: &FpPoly) -> FpPoly {
        self.div_rem(div).1
    }

    pub fn divides(&self, other: &FpPoly) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Monic associate plus the unit scaling it back: `self = unit * monic`.
    pub fn monic(&self) -> (u64, FpPoly) {
        if self.is_zero() {
            return (1, self.clone());
        }
        let u = self.leading();
        (u, self.scale(mod_inverse(u, self.p)))
    }

    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic().1
    }

    pub fn pow(&self, e: u32) -> FpPoly {
        let mut out = FpPoly::constant(self.p, 1);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p as u128;
        let mut acc: u128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * (x as u128) + c as u128) % p;
        }
        acc as u64
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_poly(&self.coeffs, "t"))
    }
}

/// Renders a coefficient list (ascending) as `3t^2+t+4`-style text.
pub(crate) fn render_poly(coeffs: &[u64], var: &str) -> String {
    if coeffs.iter().all(|&c| c == 0) {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match k {
            0 => format!("{c}"),
            1 if c == 1 => var.to_string(),
            1 => format!("{c}{var}"),
            _ if c == 1 => format!("{var}^{k}"),
            _ => format!("{c}{var}^{k}"),
        };
        parts.push(part);
    }
    parts.join("+")
}

/// Parses `3t^2+t+4`-style text into an ascending coefficient list.
pub(crate) fn parse_poly(s: &str, var: char) -> Result<Vec<u64>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut coeffs: Vec<u64> = Vec::new();
    for term in s.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in '{s}'")));
        }
        let (coeff, exp) = match term.find(var) {
            None => {
                let c: u64 = term
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient '{term}'")))?;
                (c, 0usize)
            }
            Some(pos) => {
                let cs = &term[..pos];
                let c: u64 = if cs.is_empty() {
                    1
                } else {
                    cs.parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient '{term}'")))?
                };
                let rest = &term[pos + var.len_utf8()..];
                let e: usize = if rest.is_empty() {
                    1
                } else if let Some(es) = rest.strip_prefix('^') {
                    es.parse()
                        .map_err(|_| Error::Parse(format!("bad exponent '{term}'")))?
                } else {
                    return Err(Error::Parse(format!("bad term '{term}'")));
                };
                (c, e)
            }
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] += coeff;
    }
    Ok(coeffs)
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended euclid; p prime, a nonzero mod p
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "{a} is not invertible mod {p}");
    t.rem_euclid(p as i128) as u64
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|s| s <= n).unwrap_or(false) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

// ---------------------------------------------------------------------------
// ring elements
// ---------------------------------------------------------------------------

/// An element of a catalog ring, in canonical form for its ring:
/// an arbitrary-precision integer for `Z` (and the class representative in
/// `[0, n)` for `Z/n` and `GF(p)`), a reduced polynomial for the polynomial
/// kinds, and a formal power of the uniformizer over the DVR.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Poly(FpPoly),
    /// `x^k` over the DVR (`k = 0` is the unit).
    DvrPow(DvrExp),
    /// Zero over the DVR.
    DvrZero,
}

impl Elem {
    pub fn int(v: i64) -> Elem {
        Elem::Int(BigInt::from(v))
    }

    pub fn as_int(&self) -> &BigInt {
        match self {
            Elem::Int(v) => v,
            _ => panic!("expected an integer element"),
        }
    }

    pub fn as_poly(&self) -> &FpPoly {
        match self {
            Elem::Poly(q) => q,
            _ => panic!("expected a polynomial element"),
        }
    }
}

impl PartialOrd for Elem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Elem {
    fn cmp(&self, other: &Self) -> Ordering {
        use Elem::*;
        match (self, other) {
            (Int(a), Int(b)) => a.cmp(b),
            (Poly(a), Poly(b)) => a.cmp(b),
            (DvrPow(a), DvrPow(b)) => a.cmp(b),
            (DvrZero, DvrZero) => Ordering::Equal,
            (Int(_), _) => Ordering::Less,
            (_, Int(_)) => Ordering::Greater,
            (Poly(_), _) => Ordering::Less,
            (_, Poly(_)) => Ordering::Greater,
            (DvrPow(_), _) => Ordering::Less,
            (_, DvrPow(_)) => Ordering::Greater,
        }
    }
}

// ---------------------------------------------------------------------------
// rings
// ---------------------------------------------------------------------------

/// A member of the ring catalog. See the module docs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    IntegersMod(u64),
    PrimeField(u64),
    PolyRing(u64),
    PolyQuotient(u64, FpPoly),
    Dvr,
}

impl Ring {
    /// Parses the ring spec grammar:
    /// `Z | Z/<n> | GF(<p>) | GF(<p>)[t] | GF(<p>)[t]/(<poly>) | DVR`.
    pub fn parse(spec: &str) -> Result<Ring> {
        let s = spec.trim();
        if s == "Z" {
            return Ok(Ring::Integers);
        }
        if s == "DVR" {
            return Ok(Ring::Dvr);
        }
        if let Some(ns) = s.strip_prefix("Z/") {
            let n: u64 = ns
                .parse()
                .map_err(|_| Error::Parse(format!("bad modulus '{ns}'")))?;
            if n < 2 {
                return Err(Error::Parse(format!(
                    "Z/{n} is not in the catalog (n >= 2)"
                )));
            }
            return Ok(Ring::IntegersMod(n));
        }
        if let Some(rest) = s.strip_prefix("GF(") {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unterminated GF( in '{s}'")))?;
            let p: u64 = rest[..close]
                .parse()
                .map_err(|_| Error::Parse(format!("bad characteristic in '{s}'")))?;
            if !is_prime_u64(p) {
                return Err(Error::NotPrime(p));
            }
            let tail = &rest[close + 1..];
            if tail.is_empty() {
                return Ok(Ring::PrimeField(p));
            }
            if tail == "[t]" {
                return Ok(Ring::PolyRing(p));
            }
            if let Some(fs) = tail.strip_prefix("[t]/(") {
                let fs = fs
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unterminated modulus in '{s}'")))?;
                let f = FpPoly::new(p, parse_poly(fs, 't')?);
                match f.degree() {
                    Some(d) if d >= 1 && f.is_monic() => return Ok(Ring::PolyQuotient(p, f)),
                    _ => {
                        return Err(Error::Parse(format!(
                            "modulus '{fs}' must be monic of degree >= 1"
                        )))
                    }
                }
            }
        }
        Err(Error::Parse(format!("unrecognized ring spec '{spec}'")))
    }

    pub fn is_artinian(&self) -> bool {
        matches!(
            self,
            Ring::IntegersMod(_) | Ring::PrimeField(_) | Ring::PolyQuotient(_, _)
        )
    }

    pub fn is_field(&self) -> bool {
        match self {
            Ring::PrimeField(_) => true,
            Ring::PolyQuotient(p, f) => poly_is_irreducible(*p, f),
            _ => false,
        }
    }

    pub fn is_domain(&self) -> bool {
        match self {
            Ring::Integers | Ring::PolyRing(_) | Ring::Dvr | Ring::PrimeField(_) => true,
            Ring::IntegersMod(_) | Ring::PolyQuotient(_, _) => self.is_field(),
        }
    }

    /// `Z` and `GF(p)[t]` have infinitely many maximal ideals; everything
    /// else in the catalog has a finite spectrum.
    pub fn has_finite_spectrum(&self) -> bool {
        !matches!(self, Ring::Integers | Ring::PolyRing(_))
    }

    pub fn supports_elements(&self) -> bool {
        !matches!(self, Ring::Dvr)
    }

    /// The PID whose quotient this ring is, plus the modulus if any.
    /// Matrix work over the quotients lifts here.
    pub fn covering_pid(&self) -> (Ring, Option<Elem>) {
        match self {
            Ring::Integers | Ring::PolyRing(_) | Ring::Dvr => (self.clone(), None),
            Ring::IntegersMod(n) => (Ring::Integers, Some(Elem::Int(BigInt::from(*n)))),
            Ring::PrimeField(p) => (Ring::Integers, Some(Elem::Int(BigInt::from(*p)))),
            Ring::PolyQuotient(p, f) => (Ring::PolyRing(*p), Some(Elem::Poly(f.clone()))),
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            Ring::Integers | Ring::IntegersMod(_) | Ring::PrimeField(_) => {
                Elem::Int(BigInt::zero())
            }
            Ring::PolyRing(p) | Ring::PolyQuotient(p, _) => Elem::Poly(FpPoly::zero(*p)),
            Ring::Dvr => Elem::DvrZero,
        }
    }

    pub fn one(&self) -> Elem {
        match self {
            Ring::Integers | Ring::IntegersMod(_) | Ring::PrimeField(_) => Elem::Int(BigInt::one()),
            Ring::PolyRing(p) | Ring::PolyQuotient(p, _) => Elem::Poly(FpPoly::constant(*p, 1)),
            Ring::Dvr => Elem::DvrPow(0),
        }
    }

    pub fn from_i64(&self, v: i64) -> Elem {
        self.reduce(Elem::Int(BigInt::from(v)))
    }

    /// Canonicalizes an element for this ring (reduces mod the modulus).
    pub fn reduce(&self, e: Elem) -> Elem {
        match (self, e) {
            (Ring::Integers, Elem::Int(v)) => Elem::Int(v),
            (Ring::IntegersMod(n), Elem::Int(v)) => Elem::Int(v.mod_floor(&BigInt::from(*n))),
            (Ring::PrimeField(p), Elem::Int(v)) => Elem::Int(v.mod_floor(&BigInt::from(*p))),
            (Ring::PolyRing(p), Elem::Poly(q)) => {
                assert_eq!(q.p, *p);
                Elem::Poly(q)
            }
            (Ring::PolyQuotient(p, f), Elem::Poly(q)) => {
                assert_eq!(q.p, *p);
                Elem::Poly(q.rem(f))
            }
            // integers coerce into polynomial rings as constants
            (Ring::PolyRing(p) | Ring::PolyQuotient(p, _), Elem::Int(v)) => {
                let c = v.mod_floor(&BigInt::from(*p));
                let c: u64 = c.try_into().unwrap();
                self.reduce(Elem::Poly(FpPoly::constant(*p, c)))
            }
            (Ring::Dvr, e @ (Elem::DvrPow(_) | Elem::DvrZero)) => e,
            (r, e) => panic!("element {e:?} does not belong to {r}"),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => self.reduce(Elem::Int(x + y)),
            (Elem::Poly(x), Elem::Poly(y)) => self.reduce(Elem::Poly(x.add(y))),
            _ => panic!("addition is not defined over {self}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::Int(x) => self.reduce(Elem::Int(-x)),
            Elem::Poly(x) => self.reduce(Elem::Poly(x.neg())),
            _ => panic!("negation is not defined over {self}"),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => self.reduce(Elem::Int(x * y)),
            (Elem::Poly(x), Elem::Poly(y)) => self.reduce(Elem::Poly(x.mul(y))),
            (Elem::DvrPow(x), Elem::DvrPow(y)) => Elem::DvrPow(x + y),
            (Elem::DvrZero, _) | (_, Elem::DvrZero) => Elem::DvrZero,
            _ => panic!("mixed-kind multiplication"),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(v) => v.is_zero(),
            Elem::Poly(q) => q.is_zero(),
            Elem::DvrPow(_) => false,
            Elem::DvrZero => true,
        }
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        match (self, a) {
            (Ring::Integers, Elem::Int(v)) => v.abs().is_one(),
            (Ring::IntegersMod(n), Elem::Int(v)) => v.gcd(&BigInt::from(*n)).is_one(),
            (Ring::PrimeField(_), Elem::Int(v)) => !v.is_zero(),
            (Ring::PolyRing(_), Elem::Poly(q)) => q.is_unit(),
            (Ring::PolyQuotient(_, f), Elem::Poly(q)) => q.gcd(f).is_unit(),
            (Ring::Dvr, Elem::DvrPow(k)) => *k == 0,
            (Ring::Dvr, Elem::DvrZero) => false,
            _ => panic!("element does not belong to {self}"),
        }
    }

    /// Euclidean division in the covering PID; only `Z` and `GF(p)[t]`
    /// (and fields) support this. The integer version rounds the quotient
    /// to keep remainders small.
    pub fn div_rem(&self, a: &Elem, b: &Elem) -> (Elem, Elem) {
        match self {
            Ring::Integers => {
                let (x, y) = (a.as_int(), b.as_int());
                assert!(!y.is_zero());
                let (mut q, mut r) = x.div_rem(y);
                // round the quotient so |r| <= |y|/2
                if r.abs() * 2u8 > y.abs() {
                    if r.sign() == y.sign() {
                        q += 1;
                        r -= y;
                    } else {
                        q -= 1;
                        r += y;
                    }
                }
                (Elem::Int(q), Elem::Int(r))
            }
            Ring::PolyRing(_) => {
                let (q, r) = a.as_poly().div_rem(b.as_poly());
                (Elem::Poly(q), Elem::Poly(r))
            }
            Ring::PrimeField(p) => {
                // a field: exact division, remainder zero
                let y = b.as_int();
                assert!(!y.is_zero());
                let yu: u64 = y.mod_floor(&BigInt::from(*p)).try_into().unwrap();
                let inv = BigInt::from(mod_inverse(yu, *p));
                let q = self.reduce(Elem::Int(a.as_int() * inv));
                (q, Elem::Int(BigInt::zero()))
            }
            _ => panic!("euclidean division is not defined over {self}"),
        }
    }

    /// Exact division `a / b` when `b` divides `a`; `None` otherwise.
    pub fn exact_div(&self, a: &Elem, b: &Elem) -> Option<Elem> {
        match self {
            Ring::Integers | Ring::PolyRing(_) | Ring::PrimeField(_) => {
                if self.is_zero(b) {
                    return self.is_zero(a).then(|| self.zero());
                }
                let (q, r) = self.div_rem(a, b);
                self.is_zero(&r).then_some(q)
            }
            Ring::Dvr => match (a, b) {
                (Elem::DvrZero, _) => Some(Elem::DvrZero),
                (_, Elem::DvrZero) => None,
                (Elem::DvrPow(x), Elem::DvrPow(y)) => (x >= y).then(|| Elem::DvrPow(x - y)),
                _ => None,
            },
            _ => panic!("exact division over {self} goes through the covering PID"),
        }
    }

    /// Normalizes `a` to its canonical associate (nonnegative integer /
    /// monic polynomial / the given power of `x`).
    pub fn canonical_associate(&self, a: &Elem) -> Elem {
        match (self, a) {
            (Ring::Integers, Elem::Int(v)) => Elem::Int(v.abs()),
            (Ring::PolyRing(_), Elem::Poly(q)) => Elem::Poly(q.monic().1),
            (Ring::PrimeField(_), Elem::Int(v)) => {
                if v.is_zero() {
                    self.zero()
                } else {
                    self.one()
                }
            }
            (Ring::Dvr, e) => e.clone(),
            _ => panic!("canonical associates over {self} go through the covering PID"),
        }
    }

    /// The unit `u` with `u * a = canonical_associate(a)`, for nonzero `a`
    /// over the element PIDs.
    pub fn unit_to_canonical(&self, a: &Elem) -> Elem {
        match (self, a) {
            (Ring::Integers, Elem::Int(v)) => {
                if v.is_negative() {
                    Elem::int(-1)
                } else {
                    Elem::int(1)
                }
            }
            (Ring::PolyRing(p), Elem::Poly(q)) => {
                let u = q.leading();
                Elem::Poly(FpPoly::constant(*p, mod_inverse(u, *p)))
            }
            (Ring::PrimeField(p), Elem::Int(v)) => {
                if v.is_zero() {
                    self.one()
                } else {
                    let vu: u64 = v.mod_floor(&BigInt::from(*p)).try_into().unwrap();
                    Elem::Int(BigInt::from(mod_inverse(vu, *p)))
                }
            }
            _ => panic!("unit_to_canonical over {self}"),
        }
    }

    /// gcd in the PIDs (and the DVR, where it is the minimum power).
    pub fn gcd(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            Ring::Integers => Elem::Int(a.as_int().gcd(b.as_int())),
            Ring::PolyRing(_) => Elem::Poly(a.as_poly().gcd(b.as_poly())),
            Ring::PrimeField(_) => {
                if self.is_zero(a) && self.is_zero(b) {
                    self.zero()
                } else {
                    self.one()
                }
            }
            Ring::Dvr => match (a, b) {
                (Elem::DvrZero, x) | (x, Elem::DvrZero) => x.clone(),
                (Elem::DvrPow(x), Elem::DvrPow(y)) => Elem::DvrPow(*x.min(y)),
                _ => panic!("bad DVR elements"),
            },
            _ => panic!("gcd over {self} goes through the covering PID"),
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        match self {
            Ring::Integers | Ring::IntegersMod(_) | Ring::PrimeField(_) => {
                let v: BigInt = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer '{s}'")))?;
                Ok(self.reduce(Elem::Int(v)))
            }
            Ring::PolyRing(p) | Ring::PolyQuotient(p, _) => {
                let q = FpPoly::new(*p, parse_poly(s, 't')?);
                Ok(self.reduce(Elem::Poly(q)))
            }
            Ring::Dvr => Err(Error::UnsupportedRing(
                "DVR elements are never materialized".into(),
            )),
        }
    }

    pub fn render_elem(&self, e: &Elem) -> String {
        match e {
            Elem::Int(v) => v.to_string(),
            Elem::Poly(q) => q.to_string(),
            Elem::DvrPow(0) => "1".to_string(),
            Elem::DvrPow(1) => "x".to_string(),
            Elem::DvrPow(k) => format!("x^{k}"),
            Elem::DvrZero => "0".to_string(),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::IntegersMod(n) => write!(f, "Z/{n}"),
            Ring::PrimeField(p) => write!(f, "GF({p})"),
            Ring::PolyRing(p) => write!(f, "GF({p})[t]"),
            Ring::PolyQuotient(p, poly) => write!(f, "GF({p})[t]/({poly})"),
            Ring::Dvr => write!(f, "DVR"),
        }
    }
}

// ---------------------------------------------------------------------------
// factorization
// ---------------------------------------------------------------------------

/// Factors a nonzero element of `Z` or `GF(p)[t]` into canonical prime
/// powers (positive primes ascending / monic irreducibles by degree then
/// coefficients). The unit in front is dropped; the product of the factors
/// is the canonical associate of `e`.
pub fn factor(ring: &Ring, e: &Elem) -> Result<Vec<(Elem, u32)>> {
    if ring.is_zero(e) {
        return Err(Error::ZeroElement);
    }
    match ring {
        Ring::Integers => {
            let mut n = e.as_int().abs();
            let mut out: Vec<(Elem, u32)> = Vec::new();
            let two = BigInt::from(2);
            let mut k = 0u32;
            while n.is_even() {
                n /= &two;
                k += 1;
            }
            if k > 0 {
                out.push((Elem::Int(two), k));
            }
            let mut d = BigInt::from(3);
            while &d * &d <= n {
                let mut k = 0u32;
                while (&n % &d).is_zero() {
                    n /= &d;
                    k += 1;
                }
                if k > 0 {
                    out.push((Elem::Int(d.clone()), k));
                }
                d += 2;
            }
            if n > BigInt::one() {
                out.push((Elem::Int(n), 1));
            }
            Ok(out)
        }
        Ring::PolyRing(p) => {
            let (_, mut rem) = e.as_poly().monic();
            let mut out: Vec<(Elem, u32)> = Vec::new();
            let mut deg = 1usize;
            while rem.degree().map(|d| d >= deg).unwrap_or(false) {
                for g in monic_polys_of_degree(*p, deg) {
                    if rem.degree().map(|d| d < deg).unwrap_or(true) {
                        break;
                    }
                    let mut k = 0u32;
                    while g.divides(&rem) {
                        rem = rem.div_rem(&g).0;
                        k += 1;
                    }
                    if k > 0 {
                        out.push((Elem::Poly(g), k));
                    }
                }
                deg += 1;
            }
            if !rem.is_unit() {
                // remainder of degree >= current bound is irreducible
                out.push((Elem::Poly(rem), 1));
            }
            Ok(out)
        }
        _ => Err(Error::UnsupportedRing(format!(
            "factorization runs over Z or GF(p)[t], not {ring}"
        ))),
    }
}

/// Monic polynomials of the given degree over `GF(p)`, ascending by the
/// base-`p` encoding of the lower coefficients.
fn monic_polys_of_degree(p: u64, deg: usize) -> impl Iterator<Item = FpPoly> {
    let count = (p as u128)
        .checked_pow(deg as u32)
        .expect("degree too large");
    (0..count).map(move |mut code| {
        let mut coeffs = vec![0u64; deg + 1];
        for c in coeffs.iter_mut().take(deg) {
            *c = (code % p as u128) as u64;
            code /= p as u128;
        }
        coeffs[deg] = 1;
        FpPoly::new(p, coeffs)
    })
}

pub fn poly_is_irreducible(p: u64, f: &FpPoly) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(d) => {
            for deg in 1..=d / 2 {
                for g in monic_polys_of_degree(p, deg) {
                    if g.divides(f) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

// ---------------------------------------------------------------------------
// prime ideals and ideals
// ---------------------------------------------------------------------------

/// A prime ideal of a catalog ring: the zero ideal of a domain, a maximal
/// ideal generated by a prime integer or monic irreducible polynomial, or
/// the maximal ideal `(x)` of the DVR.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeIdeal {
    Zero,
    Principal(Elem),
    DvrMax,
}

impl PrimeIdeal {
    /// Validated constructor for a maximal principal prime of `ring`.
    pub fn principal(ring: &Ring, gen: Elem) -> Result<PrimeIdeal> {
        // generators of quotient-ring primes are stored as lifts in the
        // covering PID: over a field quotient the point is cut out by the
        // modulus itself, whose image in the ring is zero
        let gen = ring.covering_pid().0.canonical_associate(&gen);
        let ok = match ring {
            Ring::Integers => u64::try_from(gen.as_int())
                .map(is_prime_u64)
                .unwrap_or(false),
            Ring::IntegersMod(n) => {
                let g: u64 = gen
                    .as_int()
                    .try_into()
                    .map_err(|_| Error::Parse("prime too large".into()))?;
                is_prime_u64(g) && g != 0 && n % g == 0
            }
            Ring::PrimeField(_) => false,
            Ring::PolyRing(p) => poly_is_irreducible(*p, gen.as_poly()),
            Ring::PolyQuotient(p, f) => {
                let g = gen.as_poly();
                poly_is_irreducible(*p, g) && g.divides(f)
            }
            Ring::Dvr => false,
        };
        if ok {
            Ok(PrimeIdeal::Principal(gen))
        } else {
            Err(Error::Parse(format!(
                "({}) is not a maximal prime of {ring}",
                ring.render_elem(&gen)
            )))
        }
    }

    pub fn render(&self, ring: &Ring) -> String {
        match self {
            PrimeIdeal::Zero => "(0)".to_string(),
            PrimeIdeal::Principal(g) => format!("({})", ring.render_elem(g)),
            PrimeIdeal::DvrMax => "(x)".to_string(),
        }
    }

    pub fn parse(ring: &Ring, s: &str) -> Result<PrimeIdeal> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("prime ideal '{s}' must be parenthesized")))?
            .trim();
        if inner == "0" {
            return match ring {
                Ring::Integers | Ring::PolyRing(_) | Ring::Dvr | Ring::PrimeField(_) => {
                    Ok(PrimeIdeal::Zero)
                }
                _ => Err(Error::Parse(format!("(0) is not prime in {ring}"))),
            };
        }
        if *ring == Ring::Dvr {
            if inner == "x" {
                return Ok(PrimeIdeal::DvrMax);
            }
            return Err(Error::Parse(format!("bad DVR prime '{s}'")));
        }
        // parse the generator in the covering PID so the lift survives
        // (reducing "(7)" modulo 7 would collapse the point of Z/7)
        PrimeIdeal::principal(ring, ring.covering_pid().0.parse_elem(inner)?)
    }

    /// Is the ideal maximal in its ring? `(0)` is maximal only in fields.
    pub fn is_maximal(&self, ring: &Ring) -> bool {
        match self {
            PrimeIdeal::Zero => ring.is_field(),
            PrimeIdeal::Principal(_) | PrimeIdeal::DvrMax => true,
        }
    }
}

/// A (principal) ideal with a canonical generator: a nonnegative integer,
/// a monic polynomial or zero, or a formal `x^k`/zero over the DVR. For the
/// artinian quotients the generator is the canonical divisor of the modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    pub ring: Ring,
    generator: Elem,
}

impl Ideal {
    pub fn new(ring: Ring, gen: Elem) -> Ideal {
        let generator = match &ring {
            Ring::Integers | Ring::PolyRing(_) | Ring::PrimeField(_) => {
                ring.canonical_associate(&ring.reduce(gen))
            }
            Ring::IntegersMod(_) | Ring::PolyQuotient(_, _) => {
                // (g) = (gcd(g, modulus)) canonically; the zero ideal is (0)
                let (pid, modulus) = ring.covering_pid();
                let modulus = modulus.unwrap();
                let g = match gen {
                    Elem::Int(v) => Elem::Int(v),
                    Elem::Poly(q) => Elem::Poly(q),
                    _ => panic!("bad generator"),
                };
                let d = pid.canonical_associate(&pid.gcd(&g, &modulus));
                if d == pid.canonical_associate(&modulus) {
                    ring.zero()
                } else {
                    d
                }
            }
            Ring::Dvr => match gen {
                e @ (Elem::DvrPow(_) | Elem::DvrZero) => e,
                _ => panic!("bad DVR generator"),
            },
        };
        Ideal { ring, generator }
    }

    pub fn zero(ring: Ring) -> Ideal {
        let z = ring.zero();
        Ideal::new(ring, z)
    }

    pub fn unit(ring: Ring) -> Ideal {
        let o = ring.one();
        Ideal::new(ring, o)
    }

    /// Ideal generated by a list of elements (gcd in the covering PID).
    pub fn generated_by(ring: Ring, gens: &[Elem]) -> Ideal {
        let (pid, modulus) = ring.covering_pid();
        let mut g = modulus.unwrap_or_else(|| pid.zero());
        for e in gens {
            let lift = ring.reduce(e.clone());
            g = pid.gcd(&g, &lift);
        }
        Ideal::new(ring, g)
    }

    pub fn generator(&self) -> &Elem {
        &self.generator
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.generator)
    }

    pub fn is_unit(&self) -> bool {
        match &self.ring {
            Ring::Dvr => matches!(self.generator, Elem::DvrPow(0)),
            r => {
                !r.is_zero(&self.generator) && {
                    let (pid, _) = r.covering_pid();
                    pid.is_unit(&self.generator)
                }
            }
        }
    }

    pub fn render(&self) -> String {
        format!("({})", self.ring.render_elem(&self.generator))
    }

    /// Does this ideal contain the other (same ring)? Containment of
    /// principal ideals is divisibility of generators.
    pub fn contains(&self, other: &Ideal) -> bool {
        assert_eq!(self.ring, other.ring);
        match &self.ring {
            Ring::Dvr => match (&self.generator, &other.generator) {
                (Elem::DvrZero, Elem::DvrZero) => true,
                (Elem::DvrZero, _) => false,
                (_, Elem::DvrZero) => true,
                (Elem::DvrPow(a), Elem::DvrPow(b)) => a <= b,
                _ => unreachable!(),
            },
            _ => {
                // lift both sides to the covering PID: the zero ideal of a
                // quotient lifts to the modulus, everything else to its
                // canonical generator; containment is divisibility there.
                let (pid, modulus) = self.ring.covering_pid();
                let lift = |g: &Elem| -> Elem {
                    if pid.is_zero(g) {
                        modulus.clone().unwrap_or_else(|| pid.zero())
                    } else {
                        g.clone()
                    }
                };
                let g = lift(&self.generator);
                let h = lift(&other.generator);
                if pid.is_zero(&g) {
                    pid.is_zero(&h)
                } else {
                    pid.exact_div(&h, &g).is_some()
                }
            }
        }
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ring, other.ring);
        match &self.ring {
            Ring::Dvr => {
                let g = match (&self.generator, &other.generator) {
                    (Elem::DvrZero, _) | (_, Elem::DvrZero) => Elem::DvrZero,
                    (Elem::DvrPow(a), Elem::DvrPow(b)) => Elem::DvrPow(a + b),
                    _ => unreachable!(),
                };
                Ideal::new(Ring::Dvr, g)
            }
            r => {
                let (pid, _) = r.covering_pid();
                Ideal::new(r.clone(), pid.mul(&self.generator, &other.generator))
            }
        }
    }

    pub fn pow(&self, e: u32) -> Ideal {
        let mut out = Ideal::unit(self.ring.clone());
        for _ in 0..e {
            out = out.product(self);
        }
        out
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

// ---------------------------------------------------------------------------
// spectra of the finite-spectrum rings
// ---------------------------------------------------------------------------

/// The complete, duplicate-free `Spec R` for the artinian catalog rings and
/// the DVR; `Z` and `GF(p)[t]` report an infinite spectrum.
pub fn spec_list(ring: &Ring) -> Result<Vec<PrimeIdeal>> {
    match ring {
        Ring::IntegersMod(n) => {
            let fs = factor(&Ring::Integers, &Elem::Int(BigInt::from(*n)))?;
            Ok(fs
                .into_iter()
                .map(|(p, _)| PrimeIdeal::Principal(p))
                .collect())
        }
        Ring::PolyQuotient(p, f) => {
            let fs = factor(&Ring::PolyRing(*p), &Elem::Poly(f.clone()))?;
            Ok(fs
                .into_iter()
                .map(|(g, _)| PrimeIdeal::Principal(g))
                .collect())
        }
        Ring::PrimeField(_) => Ok(vec![PrimeIdeal::Zero]),
        Ring::Dvr => Ok(vec![PrimeIdeal::Zero, PrimeIdeal::DvrMax]),
        Ring::Integers | Ring::PolyRing(_) => Err(Error::InfiniteSpectrum(ring.to_string())),
    }
}

/// The residue field `κ(p)` at a maximal prime, as a catalog ring.
pub fn residue_field(ring: &Ring, p: &PrimeIdeal) -> Result<Ring> {
    if !p.is_maximal(ring) {
        return Err(Error::NotMaximal(p.render(ring)));
    }
    match (ring, p) {
        (Ring::PrimeField(q), PrimeIdeal::Zero) => Ok(Ring::PrimeField(*q)),
        (Ring::Integers | Ring::IntegersMod(_), PrimeIdeal::Principal(g)) => {
            let q: u64 = g
                .as_int()
                .try_into()
                .map_err(|_| Error::Parse("prime too large".into()))?;
            Ok(Ring::PrimeField(q))
        }
        (Ring::PolyRing(q) | Ring::PolyQuotient(q, _), PrimeIdeal::Principal(g)) => {
            Ok(Ring::PolyQuotient(*q, g.as_poly().clone()))
        }
        _ => Err(Error::UnsupportedRing(format!(
            "no residue field at {} over {ring}",
            p.render(ring)
        ))),
    }
}

/// Image of `e` in `κ(p)`, canonical.
pub fn residue_field_reduce(ring: &Ring, p: &PrimeIdeal, e: &Elem) -> Result<(Ring, Elem)> {
    let field = residue_field(ring, p)?;
    let image = match e {
        Elem::Int(v) => field.reduce(Elem::Int(v.clone())),
        Elem::Poly(q) => field.reduce(Elem::Poly(q.clone())),
        _ => {
            return Err(Error::UnsupportedRing(
                "DVR has no element arithmetic".into(),
            ))
        }
    };
    Ok((field, image))
}

/// Does the maximal prime `p` contain the (canonical) element `e`?
pub fn prime_contains(ring: &Ring, p: &PrimeIdeal, e: &Elem) -> bool {
    match p {
        PrimeIdeal::Zero => ring.is_zero(e),
        PrimeIdeal::DvrMax => match e {
            Elem::DvrZero => true,
            Elem::DvrPow(k) => *k >= 1,
            _ => panic!("bad DVR element"),
        },
        PrimeIdeal::Principal(g) => {
            let (pid, _) = ring.covering_pid();
            pid.exact_div(e, g).is_some()
        }
    }
}
