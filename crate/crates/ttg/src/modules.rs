//! Finitely generated modules over catalog rings in invariant-factor
//! normal form: Smith-normal-form presentations, tensor and Tor,
//! localization, length and Loewy length.
//!
//! Presentation convention: columns are generators, rows are relations; the
//! module is the cokernel of the transposed action on column vectors.
//!
//! Over the artinian quotients a module is represented by lifting to the
//! covering PID and recording the torsion of the lift; an invariant factor
//! equal to the ring modulus is a copy of the ring itself and counts toward
//! `free_rank`. This reuses the PID Smith normal form verbatim.

use crate::error::{Error, Result};
use crate::matrix::{smith_normal_form, IntMatrix};
use crate::rings::{prime_contains, DvrExp, Elem, PrimeIdeal, Ring};
use crate::spectra::{prime_in_spec, v_of, SpclSet};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// A finitely generated module in normal form: a free rank plus a
/// divisibility chain of torsion invariant factors `d_1 | d_2 | ⋯`,
/// each a nonzero nonunit of the covering PID. DVR torsion is a sorted
/// list of uniformizer exponents, meaning `⊕ R/x^{a_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgModule {
    pub ring: Ring,
    pub free_rank: usize,
    torsion: Vec<Elem>,
}

/// Loewy length: 0 exactly for the zero module, finite for finite-length
/// modules over the local catalog rings, infinite for anything with a free
/// summand over the DVR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LoewyLength {
    Finite(u128),
    Infinite,
}

impl fmt::Display for LoewyLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoewyLength::Finite(v) => write!(f, "{v}"),
            LoewyLength::Infinite => write!(f, "inf"),
        }
    }
}

impl FgModule {
    pub fn zero(ring: Ring) -> FgModule {
        FgModule {
            ring,
            free_rank: 0,
            torsion: vec![],
        }
    }

    pub fn free(ring: Ring, rank: usize) -> FgModule {
        FgModule {
            ring,
            free_rank: rank,
            torsion: vec![],
        }
    }

    /// `R/(d)`; a unit gives the zero module, zero gives a free rank-one
    /// module, and over a quotient ring a generator associate to the
    /// modulus gives the ring itself.
    pub fn cyclic(ring: Ring, d: Elem) -> FgModule {
        FgModule::from_invariants(ring, 0, vec![d])
    }

    /// A DVR module `R^rank ⊕ (⊕_i R/x^{a_i})`; exponents must be ≥ 1.
    pub fn dvr(free_rank: usize, mut exponents: Vec<DvrExp>) -> FgModule {
        assert!(
            exponents.iter().all(|&a| a >= 1),
            "torsion exponents are >= 1"
        );
        exponents.sort_unstable();
        FgModule {
            ring: Ring::Dvr,
            free_rank,
            torsion: exponents.into_iter().map(Elem::DvrPow).collect(),
        }
    }

    /// Normal form from an arbitrary multiset of cyclic torsion generators.
    pub fn from_invariants(ring: Ring, mut free_rank: usize, gens: Vec<Elem>) -> FgModule {
        if ring == Ring::Dvr {
            let mut exps = Vec::new();
            for g in gens {
                match g {
                    Elem::DvrZero => free_rank += 1,
                    Elem::DvrPow(0) => {}
                    Elem::DvrPow(a) => exps.push(a),
                    _ => panic!("bad DVR torsion generator"),
                }
            }
            let mut m = FgModule::dvr(0, exps);
            m.free_rank = free_rank;
            return m;
        }
        let (pid, modulus) = ring.covering_pid();
        let mut kept = Vec::new();
        for g in gens {
            let g = ring.reduce(g);
            // over the quotient, clip by the modulus
            let g = match &modulus {
                Some(m) => pid.gcd(&g, m),
                None => g,
            };
            if pid.is_zero(&g) {
                free_rank += 1;
            } else if !pid.is_unit(&g) {
                kept.push(pid.canonical_associate(&g));
            }
        }
        // the chain condition comes from the SNF of the diagonal matrix
        let chain = if kept.len() <= 1 {
            kept
        } else {
            let n = kept.len();
            let mut diag = IntMatrix::zero(pid.clone(), n, n);
            for (i, g) in kept.into_iter().enumerate() {
                diag.set(i, i, g);
            }
            let snf = smith_normal_form(&diag).expect("PID snf");
            snf.diag.into_iter().filter(|d| !pid.is_unit(d)).collect()
        };
        // over a quotient ring, invariant factors hitting the modulus are
        // copies of the ring itself
        let mut torsion = Vec::new();
        for d in chain {
            match &modulus {
                Some(m) if d == pid.canonical_associate(m) => free_rank += 1,
                _ => torsion.push(d),
            }
        }
        FgModule {
            ring,
            free_rank,
            torsion,
        }
    }

    pub fn torsion(&self) -> &[Elem] {
        &self.torsion
    }

    /// DVR torsion exponents (ascending).
    pub fn dvr_exponents(&self) -> Vec<DvrExp> {
        assert_eq!(self.ring, Ring::Dvr);
        self.torsion
            .iter()
            .map(|e| match e {
                Elem::DvrPow(a) => *a,
                _ => unreachable!(),
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &FgModule) -> FgModule {
        assert_eq!(self.ring, other.ring, "ring mismatch in direct sum");
        let gens = self
            .torsion
            .iter()
            .chain(other.torsion.iter())
            .cloned()
            .collect();
        FgModule::from_invariants(self.ring.clone(), self.free_rank + other.free_rank, gens)
    }

    /// Cardinality when finite (integers only; used by the enumeration
    /// oracle in tests).
    pub fn cardinality(&self) -> Option<BigInt> {
        if self.ring != Ring::Integers || self.free_rank > 0 {
            return None;
        }
        let mut n = BigInt::one();
        for d in &self.torsion {
            n *= d.as_int();
        }
        Some(n)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("R".to_string()),
            r => parts.push(format!("R^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("R/({})", self.ring.render_elem(d)));
        }
        parts.join(" + ")
    }
}

impl fmt::Display for FgModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The cokernel of the presentation `m` (columns = generators, rows =
/// relations) in normal form. Isomorphic presentations yield identical
/// values.
pub fn module_from_presentation(m: &IntMatrix) -> Result<FgModule> {
    let ring = m.ring.clone();
    let (pid, modulus) = ring.covering_pid();
    if ring == Ring::Dvr {
        return Err(Error::UnsupportedRing(
            "DVR matrices never materialize".into(),
        ));
    }
    let lifted = m.map_ring(&pid);
    let stacked = match &modulus {
        Some(md) => {
            let block = IntMatrix::scalar(pid.clone(), m.cols, md);
            lifted.vstack(&block)
        }
        None => lifted,
    };
    let snf = smith_normal_form(&stacked)?;
    let nonzero = snf.rank(&pid);
    let free = m.cols - nonzero;
    let gens: Vec<Elem> = snf.diag.into_iter().filter(|d| !pid.is_zero(d)).collect();
    Ok(FgModule::from_invariants(ring, free, gens))
}

/// Tensor product of modules over a PID or the DVR: cyclics multiply by
/// gcd of generators, free summands are flat.
pub fn tensor_mod(a: &FgModule, b: &FgModule) -> Result<FgModule> {
    let ring = same_pid_ring(a, b)?;
    let mut gens = Vec::new();
    let mut free = a.free_rank * b.free_rank;
    for d in &a.torsion {
        for _ in 0..b.free_rank {
            gens.push(d.clone());
        }
    }
    for e in &b.torsion {
        for _ in 0..a.free_rank {
            gens.push(e.clone());
        }
    }
    for d in &a.torsion {
        for e in &b.torsion {
            gens.push(ring.gcd(d, e));
        }
    }
    let m = FgModule::from_invariants(ring, 0, gens);
    free += m.free_rank; // no new free parts can appear, but keep the form
    Ok(FgModule {
        free_rank: free,
        ..m
    })
}

/// `Tor_1` over a PID or the DVR: cyclic pairs contribute `R/gcd`, free
/// summands contribute nothing.
pub fn tor1(a: &FgModule, b: &FgModule) -> Result<FgModule> {
    let ring = same_pid_ring(a, b)?;
    let mut gens = Vec::new();
    for d in &a.torsion {
        for e in &b.torsion {
            gens.push(ring.gcd(d, e));
        }
    }
    Ok(FgModule::from_invariants(ring, 0, gens))
}

fn same_pid_ring(a: &FgModule, b: &FgModule) -> Result<Ring> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch(a.ring.to_string(), b.ring.to_string()));
    }
    match &a.ring {
        Ring::Integers | Ring::PolyRing(_) | Ring::Dvr | Ring::PrimeField(_) => Ok(a.ring.clone()),
        r => Err(Error::UnsupportedRing(format!(
            "tensor/Tor needs a PID or the DVR, not {r}"
        ))),
    }
}

/// Is `M_p = 0`? True exactly when the module has no free part and no
/// torsion generator lies in `p` (at `p = (0)`: when the module is
/// torsion).
pub fn localize_vanishes(m: &FgModule, p: &PrimeIdeal) -> Result<bool> {
    if !prime_in_spec(&m.ring, p) {
        return Err(Error::RingMismatch(
            m.ring.to_string(),
            format!("prime {}", p.render(&m.ring)),
        ));
    }
    if m.free_rank > 0 {
        return Ok(false);
    }
    if *p == PrimeIdeal::Zero {
        // torsion dies in the fraction field (and a field is its own
        // fraction field, where only the zero module vanishes)
        return Ok(m.torsion.is_empty() || !m.ring.is_field());
    }
    Ok(m.torsion.iter().all(|d| !prime_contains(&m.ring, p, d)))
}

/// Annihilator: zero if there is a free summand, otherwise the ideal of
/// the largest invariant factor (the unit ideal for the zero module).
pub fn ann_module(m: &FgModule) -> crate::rings::Ideal {
    use crate::rings::Ideal;
    if m.free_rank > 0 {
        return Ideal::zero(m.ring.clone());
    }
    match m.torsion.last() {
        None => Ideal::unit(m.ring.clone()),
        Some(d) => Ideal::new(m.ring.clone(), d.clone()),
    }
}

/// `Supp M = V(Ann M)` for finitely generated modules.
pub fn supp_module(m: &FgModule) -> Result<SpclSet> {
    v_of(&ann_module(m))
}

/// Loewy length over the local catalog rings. Non-local rings are
/// rejected rather than silently generalized through the Jacobson radical.
pub fn loewy_length(m: &FgModule) -> Result<LoewyLength> {
    if m.is_zero() {
        return Ok(LoewyLength::Finite(0));
    }
    match &m.ring {
        Ring::Dvr => {
            if m.free_rank > 0 {
                return Ok(LoewyLength::Infinite);
            }
            Ok(LoewyLength::Finite(
                m.dvr_exponents().into_iter().max().unwrap_or(0),
            ))
        }
        Ring::PrimeField(_) => Ok(LoewyLength::Finite(1)),
        Ring::IntegersMod(n) => {
            let fs = crate::rings::factor(&Ring::Integers, &Elem::Int(BigInt::from(*n)))?;
            let [(p, k)] = fs.as_slice() else {
                return Err(Error::UnsupportedRing(format!(
                    "Loewy length needs a local ring; {} is not local",
                    m.ring
                )));
            };
            let mut max = if m.free_rank > 0 { *k as u128 } else { 0 };
            for d in &m.torsion {
                max = max.max(padic_valuation(d.as_int(), p.as_int()));
            }
            Ok(LoewyLength::Finite(max))
        }
        Ring::PolyQuotient(p, f) => {
            let pid = Ring::PolyRing(*p);
            let fs = crate::rings::factor(&pid, &Elem::Poly(f.clone()))?;
            let [(g, k)] = fs.as_slice() else {
                return Err(Error::UnsupportedRing(format!(
                    "Loewy length needs a local ring; {} is not local",
                    m.ring
                )));
            };
            let mut max = if m.free_rank > 0 { *k as u128 } else { 0 };
            for d in &m.torsion {
                let mut v = 0u128;
                let mut rem = d.clone();
                while let Some(q) = pid.exact_div(&rem, g) {
                    v += 1;
                    rem = q;
                }
                max = max.max(v);
            }
            Ok(LoewyLength::Finite(max))
        }
        r => Err(Error::UnsupportedRing(format!(
            "Loewy length needs a local ring; {r} is not local"
        ))),
    }
}

fn padic_valuation(d: &BigInt, p: &BigInt) -> u128 {
    let mut v = 0u128;
    let mut rem = d.clone();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&rem, p);
        if !num_traits::Zero::is_zero(&r) {
            return v;
        }
        v += 1;
        rem = q;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;

    #[test]
    fn presentation_normal_form() {
        // Z^2/(2e1, 3e2) ≅ Z/6
        let m = IntMatrix::from_i64_rows(&Ring::Integers, &[&[2, 0], &[0, 3]]);
        let md = module_from_presentation(&m).unwrap();
        assert_eq!(md.free_rank, 0);
        assert_eq!(md.torsion(), &[Elem::int(6)]);

        // no relations on one generator
        let m = IntMatrix::zero(Ring::Integers, 0, 1);
        let md = module_from_presentation(&m).unwrap();
        assert_eq!(md.free_rank, 1);
        assert!(md.torsion().is_empty());

        // Z/4 as a Z/12-module
        let z12 = Ring::parse("Z/12").unwrap();
        let m = IntMatrix::from_i64_rows(&z12, &[&[4]]);
        let md = module_from_presentation(&m).unwrap();
        assert_eq!(md.free_rank, 0);
        assert_eq!(md.torsion(), &[Elem::int(4)]);

        // the ring itself over Z/12 counts as free
        let m = IntMatrix::zero(z12.clone(), 0, 1);
        let md = module_from_presentation(&m).unwrap();
        assert_eq!(md.free_rank, 1);
        assert!(md.torsion().is_empty());
    }

    #[test]
    fn isomorphic_presentations_agree() {
        // Z/2 ⊕ Z/3 and Z/6 have the same normal form
        let a = FgModule::from_invariants(Ring::Integers, 0, vec![Elem::int(2), Elem::int(3)]);
        let b = FgModule::cyclic(Ring::Integers, Elem::int(6));
        assert_eq!(a, b);
        // Z/4 ⊕ Z/3 over Z/12 is a free copy of the ring
        let z12 = Ring::parse("Z/12").unwrap();
        let c = FgModule::from_invariants(z12.clone(), 0, vec![Elem::int(4), Elem::int(3)]);
        assert_eq!(c, FgModule::free(z12, 1));
    }

    #[test]
    fn tensor_and_tor() {
        let d = FgModule::dvr(0, vec![3]);
        let e = FgModule::dvr(0, vec![5]);
        assert_eq!(tensor_mod(&d, &e).unwrap(), FgModule::dvr(0, vec![3]));
        assert_eq!(tor1(&d, &e).unwrap(), FgModule::dvr(0, vec![3]));

        let r = FgModule::free(Ring::Dvr, 1);
        assert_eq!(tensor_mod(&r, &e).unwrap(), FgModule::dvr(0, vec![5]));
        assert!(tor1(&r, &e).unwrap().is_zero());

        let a = FgModule::cyclic(Ring::Integers, Elem::int(4));
        let b = FgModule::cyclic(Ring::Integers, Elem::int(6));
        assert_eq!(
            tensor_mod(&a, &b).unwrap(),
            FgModule::cyclic(Ring::Integers, Elem::int(2))
        );
        assert_eq!(
            tor1(&a, &b).unwrap(),
            FgModule::cyclic(Ring::Integers, Elem::int(2))
        );
    }

    #[test]
    fn localization() {
        let z12 = FgModule::cyclic(Ring::Integers, Elem::int(12));
        let p5 = PrimeIdeal::Principal(Elem::int(5));
        let p2 = PrimeIdeal::Principal(Elem::int(2));
        assert!(localize_vanishes(&z12, &p5).unwrap());
        assert!(!localize_vanishes(&z12, &p2).unwrap());
        let free = FgModule::free(Ring::Integers, 1);
        assert!(!localize_vanishes(&free, &PrimeIdeal::Zero).unwrap());
        assert!(localize_vanishes(&z12, &PrimeIdeal::Zero).unwrap());
    }

    #[test]
    fn ann_and_supp() {
        let z12 = FgModule::cyclic(Ring::Integers, Elem::int(12));
        assert_eq!(ann_module(&z12).render(), "(12)");
        let s = supp_module(&z12).unwrap();
        assert_eq!(s.render(), "{(2),(3)}");

        let free = FgModule::free(Ring::Integers, 1);
        assert!(ann_module(&free).is_zero());
        assert!(supp_module(&free).unwrap().is_all());

        let d = FgModule::dvr(0, vec![7]);
        assert_eq!(ann_module(&d).render(), "(x^7)");
        assert_eq!(supp_module(&d).unwrap().render(), "{(x)}");
    }

    #[test]
    fn loewy_lengths() {
        assert_eq!(
            loewy_length(&FgModule::dvr(0, vec![7])).unwrap(),
            LoewyLength::Finite(7)
        );
        assert_eq!(
            loewy_length(&FgModule::dvr(1, vec![])).unwrap(),
            LoewyLength::Infinite
        );
        let z8 = Ring::parse("Z/8").unwrap();
        assert_eq!(
            loewy_length(&FgModule::free(z8.clone(), 1)).unwrap(),
            LoewyLength::Finite(3)
        );
        assert_eq!(
            loewy_length(&FgModule::zero(Ring::Dvr)).unwrap(),
            LoewyLength::Finite(0)
        );
        let z12 = Ring::parse("Z/12").unwrap();
        assert!(loewy_length(&FgModule::free(z12, 1)).is_err());
    }

    #[test]
    fn supp_of_tensor_is_intersection() {
        let a = FgModule::cyclic(Ring::Integers, Elem::int(4));
        let b = FgModule::cyclic(Ring::Integers, Elem::int(6));
        let t = tensor_mod(&a, &b).unwrap();
        let sa = supp_module(&a).unwrap();
        let sb = supp_module(&b).unwrap();
        assert_eq!(supp_module(&t).unwrap(), sa.intersect(&sb));
    }
}
