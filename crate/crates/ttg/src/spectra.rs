//! Spec R as a poset, specialization-closed subsets with exact set algebra,
//! and the order-reversing correspondence between prime ideals and tame
//! prime thick tensor ideals.
//!
//! A specialization-closed subset of any catalog spectrum is one of four
//! representable kinds: empty, a finite set of maximal ideals, a cofinite
//! set of maximal ideals, or the whole spectrum. Every support arising from
//! a finite object or catalog descriptor lands in these kinds, which is
//! what makes the set algebra exactly decidable.

use crate::error::{Error, Result};
use crate::rings::{factor, spec_list, Elem, FpPoly, Ideal, PrimeIdeal, Ring};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

// ---------------------------------------------------------------------------
// specialization-closed subsets
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpclKind {
    Empty,
    /// A finite set of maximal ideals; never contains the zero ideal.
    FinMax(BTreeSet<PrimeIdeal>),
    /// All maximal ideals except a finite excluded set. `CofinMax(∅)` is
    /// `Max R`, which differs from `AllSpec` exactly by the zero ideal.
    CofinMax(BTreeSet<PrimeIdeal>),
    AllSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpclSet {
    pub ring: Ring,
    kind: SpclKind,
}

impl SpclSet {
    /// Normalizing constructor. Any set containing the zero ideal of a
    /// domain is the whole spectrum (`V((0)) = Spec R`); over rings with a
    /// finite spectrum the cofinite kind collapses into the finite one; a
    /// finite set covering all of an artinian spectrum is `AllSpec`.
    pub fn new(ring: Ring, kind: SpclKind) -> SpclSet {
        let kind = match kind {
            SpclKind::FinMax(s) if s.contains(&PrimeIdeal::Zero) => SpclKind::AllSpec,
            SpclKind::FinMax(s) if s.is_empty() => SpclKind::Empty,
            k => k,
        };
        // collapse cofinite kinds over finite spectra
        let kind = match kind {
            SpclKind::CofinMax(excl) if ring.has_finite_spectrum() => {
                let maxes: BTreeSet<PrimeIdeal> = spec_list(&ring)
                    .expect("finite spectrum")
                    .into_iter()
                    .filter(|p| p.is_maximal(&ring))
                    .collect();
                let s: BTreeSet<PrimeIdeal> = maxes.difference(&excl).cloned().collect();
                if s.is_empty() {
                    SpclKind::Empty
                } else if s.contains(&PrimeIdeal::Zero) {
                    SpclKind::AllSpec
                } else {
                    SpclKind::FinMax(s)
                }
            }
            k => k,
        };
        // a finite set covering the whole artinian spectrum is everything
        let kind = match kind {
            SpclKind::FinMax(s) if ring.is_artinian() => {
                let spec: BTreeSet<PrimeIdeal> =
                    spec_list(&ring).expect("artinian").into_iter().collect();
                if s == spec {
                    SpclKind::AllSpec
                } else {
                    SpclKind::FinMax(s)
                }
            }
            k => k,
        };
        SpclSet { ring, kind }
    }

    pub fn empty(ring: Ring) -> SpclSet {
        SpclSet::new(ring, SpclKind::Empty)
    }

    pub fn all(ring: Ring) -> SpclSet {
        SpclSet::new(ring, SpclKind::AllSpec)
    }

    pub fn fin(ring: Ring, primes: impl IntoIterator<Item = PrimeIdeal>) -> SpclSet {
        SpclSet::new(ring, SpclKind::FinMax(primes.into_iter().collect()))
    }

    pub fn cofin(ring: Ring, excluded: impl IntoIterator<Item = PrimeIdeal>) -> SpclSet {
        SpclSet::new(ring, SpclKind::CofinMax(excluded.into_iter().collect()))
    }

    pub fn kind(&self) -> &SpclKind {
        &self.kind
    }

    pub fn is_empty(&self) -> bool {
        self.kind == SpclKind::Empty
    }

    pub fn is_all(&self) -> bool {
        self.kind == SpclKind::AllSpec
    }

    pub fn contains(&self, p: &PrimeIdeal) -> bool {
        match &self.kind {
            SpclKind::Empty => false,
            SpclKind::AllSpec => true,
            SpclKind::FinMax(s) => s.contains(p),
            SpclKind::CofinMax(excl) => *p != PrimeIdeal::Zero && !excl.contains(p),
        }
    }

    pub fn union(&self, other: &SpclSet) -> SpclSet {
        assert_eq!(self.ring, other.ring, "ring mismatch in spcl union");
        use SpclKind::*;
        let kind = match (&self.kind, &other.kind) {
            (AllSpec, _) | (_, AllSpec) => AllSpec,
            (Empty, k) | (k, Empty) => k.clone(),
            (FinMax(a), FinMax(b)) => FinMax(a.union(b).cloned().collect()),
            (FinMax(a), CofinMax(b)) | (CofinMax(b), FinMax(a)) => {
                CofinMax(b.difference(a).cloned().collect())
            }
            (CofinMax(a), CofinMax(b)) => CofinMax(a.intersection(b).cloned().collect()),
        };
        SpclSet::new(self.ring.clone(), kind)
    }

    pub fn intersect(&self, other: &SpclSet) -> SpclSet {
        assert_eq!(self.ring, other.ring, "ring mismatch in spcl intersection");
        use SpclKind::*;
        let kind = match (&self.kind, &other.kind) {
            (Empty, _) | (_, Empty) => Empty,
            (AllSpec, k) | (k, AllSpec) => k.clone(),
            (FinMax(a), FinMax(b)) => FinMax(a.intersection(b).cloned().collect()),
            (FinMax(a), CofinMax(b)) | (CofinMax(b), FinMax(a)) => {
                FinMax(a.difference(b).cloned().collect())
            }
            (CofinMax(a), CofinMax(b)) => CofinMax(a.union(b).cloned().collect()),
        };
        SpclSet::new(self.ring.clone(), kind)
    }

    pub fn subset_of(&self, other: &SpclSet) -> bool {
        assert_eq!(self.ring, other.ring);
        use SpclKind::*;
        match (&self.kind, &other.kind) {
            (Empty, _) => true,
            (_, AllSpec) => true,
            (AllSpec, _) => false,
            (_, Empty) => false,
            (FinMax(a), FinMax(b)) => a.is_subset(b),
            (FinMax(a), CofinMax(b)) => a.is_disjoint(b),
            // cofinitely many maximal ideals never fit in a finite set
            // (these kinds only survive normalization over Z and GF(p)[t])
            (CofinMax(_), FinMax(_)) => false,
            (CofinMax(a), CofinMax(b)) => b.is_subset(a),
        }
    }

    pub fn render(&self) -> String {
        let render_set = |s: &BTreeSet<PrimeIdeal>| {
            s.iter()
                .map(|p| p.render(&self.ring))
                .collect::<Vec<_>>()
                .join(",")
        };
        match &self.kind {
            SpclKind::Empty => "{}".to_string(),
            SpclKind::AllSpec => "all".to_string(),
            SpclKind::FinMax(s) => format!("{{{}}}", render_set(s)),
            SpclKind::CofinMax(s) => format!("cofinmax{{{}}}", render_set(s)),
        }
    }

    /// Parses `{}`, `{(2),(3)}`, `cofinmax{(5)}`, `all`.
    pub fn parse(ring: &Ring, s: &str) -> Result<SpclSet> {
        let s = s.trim();
        if s == "all" {
            return Ok(SpclSet::all(ring.clone()));
        }
        let (cofin, body) = match s.strip_prefix("cofinmax") {
            Some(rest) => (true, rest.trim()),
            None => (false, s),
        };
        let inner = body
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("bad spcl set '{s}'")))?
            .trim();
        let mut primes = BTreeSet::new();
        if !inner.is_empty() {
            let mut depth = 0usize;
            let mut start = 0usize;
            for (i, ch) in inner.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        primes.insert(PrimeIdeal::parse(ring, &inner[start..i])?);
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            primes.insert(PrimeIdeal::parse(ring, &inner[start..])?);
        }
        Ok(if cofin {
            SpclSet::cofin(ring.clone(), primes)
        } else {
            SpclSet::fin(ring.clone(), primes)
        })
    }
}

impl fmt::Display for SpclSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

// ---------------------------------------------------------------------------
// V(I) and the poset of primes
// ---------------------------------------------------------------------------

/// The closed set `V(I)` of primes containing the (principal) ideal.
pub fn v_of(ideal: &Ideal) -> Result<SpclSet> {
    let ring = ideal.ring.clone();
    if ideal.is_unit() {
        return Ok(SpclSet::empty(ring));
    }
    if ideal.is_zero() {
        return Ok(SpclSet::all(ring));
    }
    match &ring {
        Ring::Integers | Ring::PolyRing(_) | Ring::IntegersMod(_) | Ring::PolyQuotient(_, _) => {
            let (pid, _) = ring.covering_pid();
            let fs = factor(&pid, ideal.generator())?;
            Ok(SpclSet::fin(
                ring,
                fs.into_iter().map(|(p, _)| PrimeIdeal::Principal(p)),
            ))
        }
        Ring::PrimeField(_) => unreachable!("field ideals are zero or unit"),
        Ring::Dvr => match ideal.generator() {
            Elem::DvrPow(_) => Ok(SpclSet::fin(ring, [PrimeIdeal::DvrMax])),
            _ => unreachable!("zero/unit handled above"),
        },
    }
}

/// Inclusion `p ⊆ q` in Spec R.
pub fn prime_leq(p: &PrimeIdeal, q: &PrimeIdeal) -> bool {
    match (p, q) {
        (PrimeIdeal::Zero, _) => true,
        (_, PrimeIdeal::Zero) => *p == PrimeIdeal::Zero,
        _ => p == q,
    }
}

/// Membership of `p` in Spec R (validates a caller-supplied prime).
pub fn prime_in_spec(ring: &Ring, p: &PrimeIdeal) -> bool {
    match (ring, p) {
        (Ring::Integers | Ring::PolyRing(_), PrimeIdeal::Zero) => true,
        (Ring::PrimeField(_), PrimeIdeal::Zero) => true,
        (Ring::Dvr, PrimeIdeal::Zero | PrimeIdeal::DvrMax) => true,
        (_, PrimeIdeal::Principal(g)) => PrimeIdeal::principal(ring, g.clone())
            .map(|q| q == *p)
            .unwrap_or(false),
        _ => false,
    }
}

// ---------------------------------------------------------------------------
// the maps S and s
// ---------------------------------------------------------------------------

/// `Supp S(p) = {q ∈ Spec R | q ⊄ p}` as a representable set.
pub fn supp_of_sp(ring: &Ring, p: &PrimeIdeal) -> Result<SpclSet> {
    if !prime_in_spec(ring, p) {
        return Err(Error::Parse(format!(
            "{} is not a prime of {ring}",
            p.render(ring)
        )));
    }
    let set = match (ring, p) {
        (Ring::PrimeField(_), PrimeIdeal::Zero) => SpclSet::empty(ring.clone()),
        (Ring::Integers | Ring::PolyRing(_), PrimeIdeal::Zero) => SpclSet::cofin(ring.clone(), []),
        (Ring::Integers | Ring::PolyRing(_), PrimeIdeal::Principal(_)) => {
            SpclSet::cofin(ring.clone(), [p.clone()])
        }
        (Ring::IntegersMod(_) | Ring::PolyQuotient(_, _), PrimeIdeal::Principal(_)) => {
            let others = spec_list(ring)?.into_iter().filter(|q| q != p);
            SpclSet::fin(ring.clone(), others)
        }
        (Ring::Dvr, PrimeIdeal::Zero) => SpclSet::fin(ring.clone(), [PrimeIdeal::DvrMax]),
        (Ring::Dvr, PrimeIdeal::DvrMax) => SpclSet::empty(ring.clone()),
        _ => unreachable!("validated above"),
    };
    Ok(set)
}

/// Outcome of `s` on a support: either the unique maximal element of the
/// complement, or a deterministic witness that there is none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SOfSupport {
    Prime(PrimeIdeal),
    NotPrimeSupport(NotPrimeWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotPrimeWitness {
    /// The support is everything, so the ideal would be the whole category.
    EmptyComplement,
    /// Two incomparable maximal elements of the complement.
    Incomparable(PrimeIdeal, PrimeIdeal),
}

impl SOfSupport {
    pub fn render(&self, ring: &Ring) -> String {
        match self {
            SOfSupport::Prime(p) => format!("prime {}", p.render(ring)),
            SOfSupport::NotPrimeSupport(NotPrimeWitness::EmptyComplement) => {
                "not-prime (empty complement)".to_string()
            }
            SOfSupport::NotPrimeSupport(NotPrimeWitness::Incomparable(a, b)) => format!(
                "not-prime (incomparable complement maxima {} and {})",
                a.render(ring),
                b.render(ring)
            ),
        }
    }
}

/// First `count` maximal ideals of `Z` or `GF(p)[t]` not in `skip`,
/// in the canonical enumeration order.
fn fresh_maximals(ring: &Ring, skip: &BTreeSet<PrimeIdeal>, count: usize) -> Vec<PrimeIdeal> {
    let mut out = Vec::new();
    match ring {
        Ring::Integers => {
            let mut n = 2u64;
            while out.len() < count {
                if crate::rings::is_prime_u64(n) {
                    let p = PrimeIdeal::Principal(Elem::int(n as i64));
                    if !skip.contains(&p) {
                        out.push(p);
                    }
                }
                n += 1;
            }
        }
        Ring::PolyRing(p) => {
            let mut deg = 1usize;
            while out.len() < count {
                for code in 0..(*p as u128).pow(deg as u32) {
                    let mut coeffs = vec![0u64; deg + 1];
                    let mut c = code;
                    for slot in coeffs.iter_mut().take(deg) {
                        *slot = (c % *p as u128) as u64;
                        c /= *p as u128;
                    }
                    coeffs[deg] = 1;
                    let g = FpPoly::new(*p, coeffs);
                    if crate::rings::poly_is_irreducible(*p, &g) {
                        let q = PrimeIdeal::Principal(Elem::Poly(g));
                        if !skip.contains(&q) {
                            out.push(q);
                            if out.len() >= count {
                                break;
                            }
                        }
                    }
                }
                deg += 1;
            }
        }
        _ => unreachable!("only the infinite-spectrum rings need fresh maximals"),
    }
    out
}

/// Decides whether `W` is the support of a (tame) prime thick tensor
/// ideal: exactly when the complement of `W` has a unique maximal element.
pub fn s_of_support(w: &SpclSet) -> SOfSupport {
    let ring = &w.ring;
    if w.is_all() {
        return SOfSupport::NotPrimeSupport(NotPrimeWitness::EmptyComplement);
    }
    if ring.has_finite_spectrum() {
        let complement: Vec<PrimeIdeal> = spec_list(ring)
            .expect("finite spectrum")
            .into_iter()
            .filter(|p| !w.contains(p))
            .collect();
        let maximal: Vec<&PrimeIdeal> = complement
            .iter()
            .filter(|p| !complement.iter().any(|q| *q != **p && prime_leq(p, q)))
            .collect();
        match maximal.as_slice() {
            [] => SOfSupport::NotPrimeSupport(NotPrimeWitness::EmptyComplement),
            [p] => SOfSupport::Prime((*p).clone()),
            [p, q, ..] => SOfSupport::NotPrimeSupport(NotPrimeWitness::Incomparable(
                (*p).clone(),
                (*q).clone(),
            )),
        }
    } else {
        // Z or GF(p)[t]
        match w.kind() {
            SpclKind::CofinMax(excl) => {
                let mut it = excl.iter();
                match (it.next(), it.next()) {
                    (None, _) => SOfSupport::Prime(PrimeIdeal::Zero),
                    (Some(p), None) => SOfSupport::Prime(p.clone()),
                    (Some(p), Some(q)) => SOfSupport::NotPrimeSupport(
                        NotPrimeWitness::Incomparable(p.clone(), q.clone()),
                    ),
                }
            }
            SpclKind::Empty | SpclKind::FinMax(_) => {
                // infinitely many maximal ideals survive in the complement
                let skip = match w.kind() {
                    SpclKind::FinMax(s) => s.clone(),
                    _ => BTreeSet::new(),
                };
                let two = fresh_maximals(ring, &skip, 2);
                SOfSupport::NotPrimeSupport(NotPrimeWitness::Incomparable(
                    two[0].clone(),
                    two[1].clone(),
                ))
            }
            SpclKind::AllSpec => unreachable!("handled above"),
        }
    }
}

// ---------------------------------------------------------------------------
// the artinian report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct TamePrimeEntry {
    pub prime: String,
    pub ideal: String,
    pub support: String,
}

/// Poset-isomorphism data for `S : Spec R → Spc D⁻(R)` over an artinian
/// ring, with the `s∘S = id` identity checked on every prime.
#[derive(Debug, Clone, Serialize)]
pub struct ArtinianSpcReport {
    pub ring: String,
    pub primes: Vec<String>,
    pub tame_primes: Vec<TamePrimeEntry>,
    pub mx: Vec<String>,
    pub mn: Vec<String>,
    #[serde(rename = "s_of_S_identity")]
    pub s_of_s_identity: bool,
    pub notes: Vec<String>,
}

pub fn artinian_spc_report(ring: &Ring) -> Result<ArtinianSpcReport> {
    if !ring.is_artinian() {
        return Err(Error::NotArtinian(ring.to_string()));
    }
    let primes = spec_list(ring)?;
    let mut tame = Vec::new();
    let mut identity = true;
    for p in &primes {
        let supp = supp_of_sp(ring, p)?;
        if s_of_support(&supp) != SOfSupport::Prime(p.clone()) {
            identity = false;
        }
        tame.push(TamePrimeEntry {
            prime: p.render(ring),
            ideal: format!("S({})", p.render(ring)),
            support: supp.render(),
        });
    }
    // over an artinian ring Min R = Max R = Spec R; the maximal thick
    // tensor ideals are S of the minimal primes and vice versa
    let sp_names: Vec<String> = primes
        .iter()
        .map(|p| format!("S({})", p.render(ring)))
        .collect();
    let mut notes = Vec::new();
    if primes.len() == 1 {
        notes.push(format!(
            "S({}) = 0 is the unique minimal prime thick tensor ideal",
            primes[0].render(ring)
        ));
    }
    Ok(ArtinianSpcReport {
        ring: ring.to_string(),
        primes: primes.iter().map(|p| p.render(ring)).collect(),
        tame_primes: tame,
        mx: sp_names.clone(),
        mn: sp_names,
        s_of_s_identity: identity,
        notes,
    })
}

impl fmt::Display for ArtinianSpcReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "spc report for {}", self.ring)?;
        writeln!(f, "primes: {}", self.primes.join(" "))?;
        for t in &self.tame_primes {
            writeln!(
                f,
                "tame_primes: {} -> {} support {}",
                t.prime, t.ideal, t.support
            )?;
        }
        writeln!(f, "mx: {}", self.mx.join(" "))?;
        writeln!(f, "mn: {}", self.mn.join(" "))?;
        writeln!(f, "s_of_S_identity: {}", self.s_of_s_identity)?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zi(n: i64) -> PrimeIdeal {
        PrimeIdeal::Principal(Elem::int(n))
    }

    #[test]
    fn v_of_examples() {
        let v12 = v_of(&Ideal::new(Ring::Integers, Elem::int(12))).unwrap();
        assert_eq!(v12, SpclSet::fin(Ring::Integers, [zi(2), zi(3)]));
        let v0 = v_of(&Ideal::zero(Ring::Integers)).unwrap();
        assert!(v0.is_all());
        let vu = v_of(&Ideal::unit(Ring::Integers)).unwrap();
        assert!(vu.is_empty());
    }

    #[test]
    fn set_algebra() {
        let r = Ring::Integers;
        let a = SpclSet::cofin(r.clone(), [zi(2)]);
        let b = SpclSet::fin(r.clone(), [zi(2), zi(3)]);
        assert_eq!(a.intersect(&b), SpclSet::fin(r.clone(), [zi(3)]));
        assert_eq!(a.union(&b), SpclSet::cofin(r.clone(), []));
        assert!(b.intersect(&a).subset_of(&b));
        assert!(!SpclSet::cofin(r.clone(), []).subset_of(&b));
    }

    #[test]
    fn normalization() {
        // a set containing (0) is everything
        let s = SpclSet::fin(Ring::Integers, [PrimeIdeal::Zero, zi(2)]);
        assert!(s.is_all());
        // over Z/12 the full finite spectrum is AllSpec
        let z12 = Ring::parse("Z/12").unwrap();
        let s = SpclSet::fin(z12.clone(), [zi(2), zi(3)]);
        assert!(s.is_all());
        // over the DVR, Max R is representable and distinct from AllSpec
        let m = SpclSet::cofin(Ring::Dvr, []);
        assert_eq!(m, SpclSet::fin(Ring::Dvr, [PrimeIdeal::DvrMax]));
        assert!(!m.is_all());
    }

    #[test]
    fn supp_of_sp_examples() {
        let s = supp_of_sp(&Ring::Integers, &zi(5)).unwrap();
        assert_eq!(s, SpclSet::cofin(Ring::Integers, [zi(5)]));
        let s = supp_of_sp(&Ring::Integers, &PrimeIdeal::Zero).unwrap();
        assert_eq!(s, SpclSet::cofin(Ring::Integers, []));
        let s = supp_of_sp(&Ring::Dvr, &PrimeIdeal::DvrMax).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn s_of_support_examples() {
        let r = Ring::Integers;
        assert_eq!(
            s_of_support(&SpclSet::cofin(r.clone(), [zi(5)])),
            SOfSupport::Prime(zi(5))
        );
        assert_eq!(
            s_of_support(&SpclSet::cofin(r.clone(), [])),
            SOfSupport::Prime(PrimeIdeal::Zero)
        );
        match s_of_support(&SpclSet::fin(r.clone(), [zi(2), zi(3)])) {
            SOfSupport::NotPrimeSupport(NotPrimeWitness::Incomparable(a, b)) => {
                assert_eq!((a, b), (zi(5), zi(7)));
            }
            other => panic!("expected incomparable witness, got {other:?}"),
        }
    }

    #[test]
    fn s_after_supp_is_identity_on_catalog() {
        for spec in ["Z/12", "Z/30", "GF(2)[t]/(t^3+t^2)", "DVR", "Z"] {
            let r = Ring::parse(spec).unwrap();
            let primes: Vec<PrimeIdeal> = if r.has_finite_spectrum() {
                spec_list(&r).unwrap()
            } else {
                vec![PrimeIdeal::Zero, zi(2), zi(3), zi(5), zi(7)]
            };
            for p in primes {
                let w = supp_of_sp(&r, &p).unwrap();
                assert_eq!(s_of_support(&w), SOfSupport::Prime(p.clone()), "ring {r}");
            }
        }
    }

    #[test]
    fn order_reversal() {
        // p ⊆ q implies Supp S(q) ⊆ Supp S(p), over every comparable pair
        for spec in ["Z", "DVR", "GF(5)[t]"] {
            let r = Ring::parse(spec).unwrap();
            let pairs: Vec<(PrimeIdeal, PrimeIdeal)> = match &r {
                Ring::Dvr => vec![(PrimeIdeal::Zero, PrimeIdeal::DvrMax)],
                Ring::Integers => vec![(PrimeIdeal::Zero, zi(3))],
                Ring::PolyRing(_) => {
                    let t = PrimeIdeal::Principal(Elem::Poly(FpPoly::t(5)));
                    vec![(PrimeIdeal::Zero, t)]
                }
                _ => vec![],
            };
            for (p, q) in pairs {
                assert!(prime_leq(&p, &q));
                let sp = supp_of_sp(&r, &p).unwrap();
                let sq = supp_of_sp(&r, &q).unwrap();
                assert!(sq.subset_of(&sp));
            }
        }
    }

    #[test]
    fn artinian_report_counts() {
        let r = Ring::parse("Z/12").unwrap();
        let rep = artinian_spc_report(&r).unwrap();
        assert_eq!(rep.primes.len(), 2);
        assert_eq!(rep.tame_primes.len(), 2);
        assert!(rep.s_of_s_identity);

        let r8 = Ring::parse("Z/8").unwrap();
        let rep = artinian_spc_report(&r8).unwrap();
        assert_eq!(rep.primes.len(), 1);
        assert!(!rep.notes.is_empty());
    }

    #[test]
    fn spcl_parse_render_round_trip() {
        let r = Ring::Integers;
        for s in ["{}", "{(2),(3)}", "cofinmax{(5)}", "cofinmax{}", "all"] {
            let set = SpclSet::parse(&r, s).unwrap();
            assert_eq!(set.render(), s);
        }
    }

    #[test]
    fn lattice_laws_exhaustive_small() {
        // associativity, commutativity, absorption over a pool of kinds
        let r = Ring::Integers;
        let pool: Vec<PrimeIdeal> = vec![zi(2), zi(3), zi(5), zi(7)];
        let mut sets = vec![SpclSet::empty(r.clone()), SpclSet::all(r.clone())];
        for mask in 0u32..16 {
            let sub: Vec<PrimeIdeal> = pool
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, p)| p.clone())
                .collect();
            sets.push(SpclSet::fin(r.clone(), sub.clone()));
            sets.push(SpclSet::cofin(r.clone(), sub));
        }
        for a in &sets {
            for b in &sets {
                assert_eq!(a.union(b), b.union(a));
                assert_eq!(a.intersect(b), b.intersect(a));
                assert_eq!(a.union(&a.intersect(b)), a.clone(), "absorption");
                assert_eq!(a.intersect(&a.union(b)), a.clone(), "absorption");
                for c in sets.iter().take(8) {
                    assert_eq!(a.union(b).union(c), a.union(&b.union(c)));
                    assert_eq!(a.intersect(b).intersect(c), a.intersect(&b.intersect(c)));
                }
            }
        }
    }
}
