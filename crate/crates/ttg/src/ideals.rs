//! Thick tensor-ideal descriptors with membership oracles, the closure
//! operators, the compact-ideal lattice, the full artinian classification,
//! and the DVR fiber report.
//!
//! Ideals are named descriptors with oracles, never extensional object
//! sets: the category is infinite, and the classification results are
//! exactly the normal-form identifications between descriptors. Where only
//! strictness is known (the radical of a proper compact ideal over a PID),
//! the closure answers `Unknown` instead of guessing.

use crate::complexes::{ann_complex, FreeComplex};
use crate::error::{Error, Result};
use crate::formal::{factorial_complex, g_complex, member_lc, minimal_c, FormalComplex, LcAnswer};
use crate::rings::{PrimeIdeal, Ring};
use crate::spectra::{
    prime_in_spec, s_of_support, supp_of_sp, v_of, SOfSupport, SpclKind, SpclSet,
};
use serde::Serialize;
use std::fmt;

// ---------------------------------------------------------------------------
// descriptors
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DescriptorKind {
    Zero,
    Whole,
    /// `⟨W⟩`: generated by the bounded residue objects with support in `W`;
    /// membership is `V(Ann X) ⊆ W`.
    Compact(SpclSet),
    /// `Supp⁻¹W`: membership is `Supp X ⊆ W`.
    Tame(SpclSet),
    /// `S(p)`: the complexes vanishing at `p`.
    Sp(PrimeIdeal),
    /// The DVR Loewy class `L_c`, `c ≥ 1`.
    Lc(u32),
    /// Generated by explicit bounded complexes.
    GenBounded(Vec<FreeComplex>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDescriptor {
    pub ring: Ring,
    pub kind: DescriptorKind,
}

impl IdealDescriptor {
    pub fn new(ring: Ring, kind: DescriptorKind) -> Result<IdealDescriptor> {
        match &kind {
            DescriptorKind::Compact(w) | DescriptorKind::Tame(w) => {
                if w.ring != ring {
                    return Err(Error::RingMismatch(ring.to_string(), w.ring.to_string()));
                }
            }
            DescriptorKind::Sp(p) => {
                if !prime_in_spec(&ring, p) {
                    return Err(Error::Parse(format!(
                        "{} is not a prime of {ring}",
                        p.render(&ring)
                    )));
                }
            }
            DescriptorKind::Lc(c) => {
                if ring != Ring::Dvr {
                    return Err(Error::UnsupportedRing(format!(
                        "L_c classes live over the DVR, not {ring}"
                    )));
                }
                if *c == 0 {
                    return Err(Error::Parse("the classes L_c start at c = 1".into()));
                }
            }
            DescriptorKind::GenBounded(gs) => {
                for g in gs {
                    if g.ring != ring {
                        return Err(Error::RingMismatch(ring.to_string(), g.ring.to_string()));
                    }
                }
            }
            DescriptorKind::Zero | DescriptorKind::Whole => {}
        }
        Ok(IdealDescriptor { ring, kind })
    }

    pub fn zero(ring: Ring) -> IdealDescriptor {
        IdealDescriptor {
            ring,
            kind: DescriptorKind::Zero,
        }
    }

    pub fn whole(ring: Ring) -> IdealDescriptor {
        IdealDescriptor {
            ring,
            kind: DescriptorKind::Whole,
        }
    }

    pub fn compact(w: SpclSet) -> IdealDescriptor {
        IdealDescriptor {
            ring: w.ring.clone(),
            kind: DescriptorKind::Compact(w),
        }
    }

    pub fn tame(w: SpclSet) -> IdealDescriptor {
        IdealDescriptor {
            ring: w.ring.clone(),
            kind: DescriptorKind::Tame(w),
        }
    }

    pub fn lc(c: u32) -> IdealDescriptor {
        IdealDescriptor::new(Ring::Dvr, DescriptorKind::Lc(c)).expect("valid Lc")
    }

    /// The support of the descriptor (the support of the ideal it names).
    pub fn supp(&self) -> Result<SpclSet> {
        match &self.kind {
            DescriptorKind::Zero => Ok(SpclSet::empty(self.ring.clone())),
            DescriptorKind::Whole => Ok(SpclSet::all(self.ring.clone())),
            DescriptorKind::Compact(w) | DescriptorKind::Tame(w) => Ok(w.clone()),
            DescriptorKind::Sp(p) => supp_of_sp(&self.ring, p),
            DescriptorKind::Lc(_) => Ok(SpclSet::fin(Ring::Dvr, [PrimeIdeal::DvrMax])),
            DescriptorKind::GenBounded(gs) => {
                let mut s = SpclSet::empty(self.ring.clone());
                for g in gs {
                    s = s.union(&g.supp()?);
                }
                Ok(s)
            }
        }
    }

    /// Normal form under the classification identifications:
    /// `Compact(∅) = Tame(∅) = 0`, `Compact(all) = Tame(all) = Whole`,
    /// `S(p) = Tame(Supp S(p))`, `GenBounded(gs) = Compact(∪ Supp g)`,
    /// and `Compact({(x)}) = L_1` over the DVR.
    pub fn normalize(&self) -> Result<IdealDescriptor> {
        let ring = self.ring.clone();
        let out = match &self.kind {
            DescriptorKind::Zero | DescriptorKind::Whole | DescriptorKind::Lc(_) => self.clone(),
            DescriptorKind::Sp(p) => IdealDescriptor::tame(supp_of_sp(&ring, p)?).normalize()?,
            DescriptorKind::GenBounded(_) => IdealDescriptor::compact(self.supp()?).normalize()?,
            DescriptorKind::Tame(w) => {
                if w.is_empty() {
                    IdealDescriptor::zero(ring)
                } else if w.is_all() {
                    IdealDescriptor::whole(ring)
                } else {
                    self.clone()
                }
            }
            DescriptorKind::Compact(w) => {
                if w.is_empty() {
                    IdealDescriptor::zero(ring)
                } else if w.is_all() {
                    IdealDescriptor::whole(ring)
                } else if ring == Ring::Dvr {
                    // the only proper nonzero spcl set over the DVR is
                    // {(x)}, and ⟨{(x)}⟩ is the first Loewy class
                    IdealDescriptor::lc(1)
                } else {
                    self.clone()
                }
            }
        };
        Ok(out)
    }

    pub fn render(&self) -> String {
        let spcl_inner = |w: &SpclSet| match w.kind() {
            SpclKind::Empty => String::new(),
            SpclKind::FinMax(_) => {
                let full = w.render();
                full[1..full.len() - 1].to_string()
            }
            SpclKind::CofinMax(_) => w.render(),
            SpclKind::AllSpec => "all".to_string(),
        };
        match &self.kind {
            DescriptorKind::Zero => "zero".to_string(),
            DescriptorKind::Whole => "whole".to_string(),
            DescriptorKind::Compact(w) => format!("compact{{{}}}", spcl_inner(w)),
            DescriptorKind::Tame(w) => format!("tame{{{}}}", spcl_inner(w)),
            DescriptorKind::Sp(p) => format!("S({})", p.render(&self.ring)),
            DescriptorKind::Lc(c) => format!("L{c}"),
            DescriptorKind::GenBounded(gs) => format!("gen[{} generators]", gs.len()),
        }
    }

    /// Parses `zero | whole | compact{..} | tame{..} | S(..) | L<c>`
    /// (generator lists come from files and are assembled by the caller).
    pub fn parse(ring: &Ring, s: &str) -> Result<IdealDescriptor> {
        let s = s.trim();
        if s == "zero" {
            return Ok(IdealDescriptor::zero(ring.clone()));
        }
        if s == "whole" {
            return Ok(IdealDescriptor::whole(ring.clone()));
        }
        if let Some(rest) = s.strip_prefix("compact{") {
            let inner = rest
                .strip_suffix('}')
                .ok_or_else(|| Error::Parse(format!("bad descriptor '{s}'")))?;
            return Ok(IdealDescriptor::compact(parse_spcl_inner(ring, inner)?));
        }
        if let Some(rest) = s.strip_prefix("tame{") {
            let inner = rest
                .strip_suffix('}')
                .ok_or_else(|| Error::Parse(format!("bad descriptor '{s}'")))?;
            return Ok(IdealDescriptor::tame(parse_spcl_inner(ring, inner)?));
        }
        if let Some(rest) = s.strip_prefix("S(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("bad descriptor '{s}'")))?;
            let p = PrimeIdeal::parse(ring, inner)?;
            return IdealDescriptor::new(ring.clone(), DescriptorKind::Sp(p));
        }
        if let Some(cs) = s.strip_prefix('L') {
            let c: u32 = cs
                .parse()
                .map_err(|_| Error::Parse(format!("bad descriptor '{s}'")))?;
            return IdealDescriptor::new(ring.clone(), DescriptorKind::Lc(c));
        }
        Err(Error::Parse(format!("unrecognized descriptor '{s}'")))
    }
}

fn parse_spcl_inner(ring: &Ring, inner: &str) -> Result<SpclSet> {
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(SpclSet::empty(ring.clone()));
    }
    if inner == "all" {
        return Ok(SpclSet::all(ring.clone()));
    }
    if inner.starts_with("cofinmax") {
        return SpclSet::parse(ring, inner);
    }
    SpclSet::parse(ring, &format!("{{{inner}}}"))
}

impl fmt::Display for IdealDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

// ---------------------------------------------------------------------------
// membership
// ---------------------------------------------------------------------------

/// An object a membership question can be asked about.
#[derive(Debug, Clone)]
pub enum Obj {
    Free(FreeComplex),
    Formal(FormalComplex),
}

impl Obj {
    pub fn ring(&self) -> Ring {
        match self {
            Obj::Free(x) => x.ring.clone(),
            Obj::Formal(_) => Ring::Dvr,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Answer {
    Yes,
    No,
    Unknown(String),
}

#[derive(Debug, Clone, Serialize)]
pub enum Evidence {
    /// An inclusion test of computed sets.
    Sets {
        relation: String,
        computed: String,
        target: String,
    },
    /// A Loewy-class comparison.
    Class { minimal: String, asked: u32 },
    /// A localization test at one prime.
    Vanishing { prime: String, vanishes: bool },
}

#[derive(Debug, Clone, Serialize)]
pub struct MembershipAnswer {
    pub answer: Answer,
    pub evidence: Option<Evidence>,
}

impl MembershipAnswer {
    fn yes(e: Evidence) -> Self {
        MembershipAnswer {
            answer: Answer::Yes,
            evidence: Some(e),
        }
    }

    fn no(e: Evidence) -> Self {
        MembershipAnswer {
            answer: Answer::No,
            evidence: Some(e),
        }
    }

    fn unknown(reason: &str) -> Self {
        MembershipAnswer {
            answer: Answer::Unknown(reason.to_string()),
            evidence: None,
        }
    }
}

impl fmt::Display for MembershipAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.answer {
            Answer::Yes => write!(f, "yes")?,
            Answer::No => write!(f, "no")?,
            Answer::Unknown(r) => write!(f, "unknown ({r})")?,
        }
        if let Some(e) = &self.evidence {
            match e {
                Evidence::Sets {
                    relation,
                    computed,
                    target,
                } => write!(f, " [{relation} = {computed}, target {target}]")?,
                Evidence::Class { minimal, asked } => {
                    write!(f, " [minimal class {minimal}, asked L{asked}]")?
                }
                Evidence::Vanishing { prime, vanishes } => {
                    write!(f, " [localization at {prime} vanishes: {vanishes}]")?
                }
            }
        }
        Ok(())
    }
}

fn sets_evidence(relation: &str, computed: &SpclSet, target: &SpclSet) -> Evidence {
    Evidence::Sets {
        relation: relation.to_string(),
        computed: computed.render(),
        target: target.render(),
    }
}

/// `V(Ann X)` bounds for a formal DVR complex: the annihilator of a
/// zero-differential complex is the intersection of the homology
/// annihilators, so it is zero exactly when the torsion exponents are
/// unbounded or a free summand occurs.
fn formal_v_ann_bounds(x: &FormalComplex) -> (SpclSet, SpclSet) {
    use crate::formal::TailRule;
    let max_set = SpclSet::fin(Ring::Dvr, [PrimeIdeal::DvrMax]);
    let all = SpclSet::all(Ring::Dvr);
    let empty = SpclSet::empty(Ring::Dvr);
    let window_nonzero = !x.prefix().is_empty();
    match &x.tail().rule {
        TailRule::Zero => {
            if x.prefix().values().any(|m| m.free_rank > 0) {
                (all.clone(), all)
            } else if window_nonzero {
                (max_set.clone(), max_set)
            } else {
                (empty.clone(), empty)
            }
        }
        TailRule::Free { .. } => (all.clone(), all),
        TailRule::Factorial(_) => (all.clone(), all),
        TailRule::Poly(gs) => {
            let bounded = gs.iter().all(|(g, _)| g.degree().unwrap_or(0) == 0);
            if x.prefix().values().any(|m| m.free_rank > 0) || !bounded {
                (all.clone(), all)
            } else {
                (max_set.clone(), max_set)
            }
        }
        TailRule::Window { fl, envelope } => {
            let lower = if window_nonzero {
                max_set.clone()
            } else {
                empty
            };
            let upper = match (fl, envelope) {
                (true, Some(g)) if g.degree().unwrap_or(0) == 0 => max_set,
                _ => all,
            };
            (lower, upper)
        }
    }
}

/// Decides membership of an object in the ideal a descriptor names.
pub fn member(d: &IdealDescriptor, x: &Obj) -> Result<MembershipAnswer> {
    if d.ring != x.ring() {
        return Err(Error::RingMismatch(
            d.ring.to_string(),
            x.ring().to_string(),
        ));
    }
    match (&d.kind, x) {
        (DescriptorKind::Whole, _) => Ok(MembershipAnswer {
            answer: Answer::Yes,
            evidence: None,
        }),
        (DescriptorKind::Zero, Obj::Free(c)) => {
            let s = c.supp()?;
            let target = SpclSet::empty(d.ring.clone());
            let ev = sets_evidence("Supp X", &s, &target);
            Ok(if s.is_empty() {
                MembershipAnswer::yes(ev)
            } else {
                MembershipAnswer::no(ev)
            })
        }
        (DescriptorKind::Zero, Obj::Formal(c)) => match c.is_zero_object() {
            Some(true) => Ok(MembershipAnswer::yes(sets_evidence(
                "Supp X",
                &SpclSet::empty(Ring::Dvr),
                &SpclSet::empty(Ring::Dvr),
            ))),
            Some(false) => Ok(MembershipAnswer::no(sets_evidence(
                "Supp X",
                &c.supp_lower(),
                &SpclSet::empty(Ring::Dvr),
            ))),
            None => Ok(MembershipAnswer::unknown(
                "the window tail hides whether the object is zero",
            )),
        },
        (DescriptorKind::Compact(w), Obj::Free(c)) => {
            let va = v_of(&ann_complex(c)?)?;
            let ev = sets_evidence("V(Ann X)", &va, w);
            Ok(if va.subset_of(w) {
                MembershipAnswer::yes(ev)
            } else {
                MembershipAnswer::no(ev)
            })
        }
        (DescriptorKind::Compact(w), Obj::Formal(c)) => {
            let (lower, upper) = formal_v_ann_bounds(c);
            if upper.subset_of(w) {
                Ok(MembershipAnswer::yes(sets_evidence("V(Ann X)", &upper, w)))
            } else if !lower.subset_of(w) {
                Ok(MembershipAnswer::no(sets_evidence("V(Ann X)", &lower, w)))
            } else {
                Ok(MembershipAnswer::unknown(
                    "V(Ann X) is not determined by the window",
                ))
            }
        }
        (DescriptorKind::GenBounded(_), Obj::Free(c)) => {
            let w = d.supp()?;
            let va = v_of(&ann_complex(c)?)?;
            let ev = sets_evidence("V(Ann X)", &va, &w);
            Ok(if va.subset_of(&w) {
                MembershipAnswer::yes(ev)
            } else {
                MembershipAnswer::no(ev)
            })
        }
        (DescriptorKind::Tame(w), Obj::Free(c)) => {
            let s = c.supp()?;
            let ev = sets_evidence("Supp X", &s, w);
            Ok(if s.subset_of(w) {
                MembershipAnswer::yes(ev)
            } else {
                MembershipAnswer::no(ev)
            })
        }
        (DescriptorKind::Tame(w), Obj::Formal(c)) => {
            let (lower, upper) = (c.supp_lower(), c.supp_upper());
            if upper.subset_of(w) {
                Ok(MembershipAnswer::yes(sets_evidence("Supp X", &upper, w)))
            } else if !lower.subset_of(w) {
                Ok(MembershipAnswer::no(sets_evidence("Supp X", &lower, w)))
            } else {
                Ok(MembershipAnswer::unknown(
                    "Supp X is not determined by the window",
                ))
            }
        }
        (DescriptorKind::Sp(p), Obj::Free(c)) => {
            let v = c.vanishes_at(p)?;
            let ev = Evidence::Vanishing {
                prime: p.render(&d.ring),
                vanishes: v,
            };
            Ok(if v {
                MembershipAnswer::yes(ev)
            } else {
                MembershipAnswer::no(ev)
            })
        }
        (DescriptorKind::Sp(p), Obj::Formal(c)) => {
            let v = match p {
                PrimeIdeal::DvrMax => c.is_zero_object(),
                PrimeIdeal::Zero => c.is_finite_length(),
                PrimeIdeal::Principal(_) => unreachable!("validated prime over the DVR"),
            };
            match v {
                Some(v) => {
                    let ev = Evidence::Vanishing {
                        prime: p.render(&d.ring),
                        vanishes: v,
                    };
                    Ok(if v {
                        MembershipAnswer::yes(ev)
                    } else {
                        MembershipAnswer::no(ev)
                    })
                }
                None => Ok(MembershipAnswer::unknown(
                    "the window tail hides the localization",
                )),
            }
        }
        (DescriptorKind::Lc(c), Obj::Formal(f)) => {
            let ev = Evidence::Class {
                minimal: minimal_c(f).to_string(),
                asked: *c,
            };
            Ok(match member_lc(f, *c) {
                LcAnswer::Yes => MembershipAnswer::yes(ev),
                LcAnswer::No => MembershipAnswer::no(ev),
                LcAnswer::UnknownWindow => {
                    MembershipAnswer::unknown("Loewy growth beyond the window is unknown")
                }
            })
        }
        (DescriptorKind::Lc(_), Obj::Free(_)) | (DescriptorKind::GenBounded(_), Obj::Formal(_)) => {
            Err(Error::UnsupportedCombination(format!(
                "descriptor {} cannot test this object kind",
                d.render()
            )))
        }
    }
}

// ---------------------------------------------------------------------------
// closure operators
// ---------------------------------------------------------------------------

/// `X^tame = Supp⁻¹ Supp X`.
pub fn tame_closure(d: &IdealDescriptor) -> Result<IdealDescriptor> {
    IdealDescriptor::tame(d.supp()?).normalize()
}

/// `X_cpt = ⟨Supp X⟩`.
pub fn cpt_interior(d: &IdealDescriptor) -> Result<IdealDescriptor> {
    IdealDescriptor::compact(d.supp()?).normalize()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadClosure {
    Known(IdealDescriptor),
    /// Only strictness between the compact ideal and its tame closure is
    /// known; the radical itself is undetermined.
    Unknown(String),
}

/// The radical closure where it is determined: tame ideals (and `S(p)`)
/// are radical, everything over an artinian ring is radical, primes and
/// the trivial ideals are radical, and every compact ideal over the DVR is
/// one of `0`, `L_1`, `Whole`.
pub fn rad_closure(d: &IdealDescriptor) -> Result<RadClosure> {
    if d.ring.is_artinian() {
        return Ok(RadClosure::Known(d.clone()));
    }
    match &d.kind {
        DescriptorKind::Zero
        | DescriptorKind::Whole
        | DescriptorKind::Tame(_)
        | DescriptorKind::Sp(_)
        | DescriptorKind::Lc(_) => Ok(RadClosure::Known(d.clone())),
        DescriptorKind::Compact(_) | DescriptorKind::GenBounded(_) => {
            let n = d.normalize()?;
            match n.kind {
                DescriptorKind::Zero | DescriptorKind::Whole | DescriptorKind::Lc(_) => {
                    Ok(RadClosure::Known(d.clone()))
                }
                _ => Ok(RadClosure::Unknown(format!(
                    "the radical of {} lies strictly between it and its tame closure; \
                     its exact value is undetermined",
                    d.render()
                ))),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// the compact lattice
// ---------------------------------------------------------------------------

fn as_compact_support(d: &IdealDescriptor) -> Result<SpclSet> {
    let n = d.normalize()?;
    match &n.kind {
        DescriptorKind::Zero | DescriptorKind::Whole | DescriptorKind::Compact(_) => n.supp(),
        DescriptorKind::Lc(1) => n.supp(),
        _ => Err(Error::NotCompactDescriptor(d.render())),
    }
}

/// `⟨A⟩ ∧ ⟨B⟩ = ⟨A ∩ B⟩` on compact descriptors.
pub fn meet(d1: &IdealDescriptor, d2: &IdealDescriptor) -> Result<IdealDescriptor> {
    if d1.ring != d2.ring {
        return Err(Error::RingMismatch(
            d1.ring.to_string(),
            d2.ring.to_string(),
        ));
    }
    let (a, b) = (as_compact_support(d1)?, as_compact_support(d2)?);
    IdealDescriptor::compact(a.intersect(&b)).normalize()
}

/// `⟨A⟩ ∨ ⟨B⟩ = ⟨A ∪ B⟩` on compact descriptors.
pub fn join(d1: &IdealDescriptor, d2: &IdealDescriptor) -> Result<IdealDescriptor> {
    if d1.ring != d2.ring {
        return Err(Error::RingMismatch(
            d1.ring.to_string(),
            d2.ring.to_string(),
        ));
    }
    let (a, b) = (as_compact_support(d1)?, as_compact_support(d2)?);
    IdealDescriptor::compact(a.union(&b)).normalize()
}

// ---------------------------------------------------------------------------
// artinian classification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ArtinianLattice {
    pub ring: String,
    pub spec_size: usize,
    pub ideal_count: usize,
    pub ideals: Vec<ArtinianIdealEntry>,
    pub lattice_tables_ok: bool,
    pub membership_samples: usize,
    pub membership_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArtinianIdealEntry {
    pub subset: String,
    pub descriptor: String,
}

/// Enumerates all `2^|Spec|` thick tensor ideals of an artinian ring,
/// checks the meet/join tables against set operations, and checks
/// membership of the sample objects against `Supp X ⊆ S`.
pub fn enumerate_artinian(ring: &Ring, samples: &[FreeComplex]) -> Result<ArtinianLattice> {
    if !ring.is_artinian() {
        return Err(Error::NotArtinian(ring.to_string()));
    }
    let primes = crate::rings::spec_list(ring)?;
    let n = primes.len();
    let mut subsets: Vec<SpclSet> = Vec::new();
    for mask in 0u32..(1 << n) {
        let sel = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| p.clone());
        subsets.push(SpclSet::fin(ring.clone(), sel));
    }
    let ideals: Vec<IdealDescriptor> = subsets
        .iter()
        .map(|w| IdealDescriptor::compact(w.clone()).normalize())
        .collect::<Result<_>>()?;
    // lattice tables must transport the set operations
    let mut lattice_ok = true;
    for (wa, da) in subsets.iter().zip(&ideals) {
        for (wb, db) in subsets.iter().zip(&ideals) {
            let m = meet(da, db)?;
            let j = join(da, db)?;
            let expect_m = IdealDescriptor::compact(wa.intersect(wb)).normalize()?;
            let expect_j = IdealDescriptor::compact(wa.union(wb)).normalize()?;
            if m != expect_m || j != expect_j {
                lattice_ok = false;
            }
        }
    }
    // membership agrees with support containment on the samples
    let mut membership_ok = true;
    for x in samples {
        let s = x.supp()?;
        for (w, d) in subsets.iter().zip(&ideals) {
            let ans = member(d, &Obj::Free(x.clone()))?;
            let expect = s.subset_of(w);
            let got = ans.answer == Answer::Yes;
            if got != expect {
                membership_ok = false;
            }
        }
    }
    Ok(ArtinianLattice {
        ring: ring.to_string(),
        spec_size: n,
        ideal_count: subsets.len(),
        ideals: subsets
            .iter()
            .zip(&ideals)
            .map(|(w, d)| ArtinianIdealEntry {
                subset: w.render(),
                descriptor: d.render(),
            })
            .collect(),
        lattice_tables_ok: lattice_ok,
        membership_samples: samples.len(),
        membership_ok,
    })
}

impl fmt::Display for ArtinianLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "thick tensor ideals of D-({})", self.ring)?;
        writeln!(
            f,
            "spec size {} -> {} ideals",
            self.spec_size, self.ideal_count
        )?;
        for e in &self.ideals {
            writeln!(f, "subset {} -> {}", e.subset, e.descriptor)?;
        }
        writeln!(f, "lattice_tables_ok: {}", self.lattice_tables_ok)?;
        writeln!(
            f,
            "membership_ok: {} ({} samples)",
            self.membership_ok, self.membership_samples
        )?;
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// the DVR fiber report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct FiberPrime {
    pub name: String,
    pub supp: String,
    pub s_value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Separation {
    pub smaller: String,
    pub larger: String,
    pub witness: String,
    pub in_larger: String,
    pub in_smaller: String,
    pub verified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DvrFiberReport {
    pub c_max: u32,
    pub fiber_over_zero: Vec<FiberPrime>,
    pub fiber_over_max: Vec<String>,
    pub separations: Vec<Separation>,
    pub distinct_primes_over_zero: usize,
    pub note: String,
}

/// The fibers of `s : Spc D⁻(R) → Spec R` over a DVR: the chain
/// `L_1 ⊊ L_2 ⊊ ⋯ ⊊ L_cmax ⊊ D⁻_fl` all mapping to `(0)`, with pairwise
/// separating witnesses verified by membership, and the fiber `{0}` over
/// the maximal ideal. Two distinct primes over one point defeat local
/// injectivity of the comparison map, which `s` agrees with.
pub fn dvr_fiber_report(c_max: u32) -> Result<DvrFiberReport> {
    assert!(c_max >= 2, "the fiber report needs c_max >= 2");
    let mut fiber_zero = Vec::new();
    let mut chain: Vec<(String, IdealDescriptor)> = (1..=c_max)
        .map(|c| (format!("L{c}"), IdealDescriptor::lc(c)))
        .collect();
    let dfl = IdealDescriptor::tame(SpclSet::fin(Ring::Dvr, [PrimeIdeal::DvrMax]));
    chain.push(("D-fl".to_string(), dfl));
    for (name, d) in &chain {
        let supp = d.supp()?;
        let s_val = match s_of_support(&supp) {
            SOfSupport::Prime(p) => p.render(&Ring::Dvr),
            other => other.render(&Ring::Dvr),
        };
        fiber_zero.push(FiberPrime {
            name: name.clone(),
            supp: supp.render(),
            s_value: s_val,
        });
    }
    // the fiber over (x): only the zero ideal (its support is empty and
    // s(∅-supported) = (x))
    let zero_supp = IdealDescriptor::zero(Ring::Dvr).supp()?;
    let s_zero = s_of_support(&zero_supp);
    let fiber_max = vec![format!(
        "zero (s = {})",
        match s_zero {
            SOfSupport::Prime(p) => p.render(&Ring::Dvr),
            other => other.render(&Ring::Dvr),
        }
    )];
    // separating witnesses
    let mut separations = Vec::new();
    for c in 1..c_max {
        let g = g_complex(c + 1);
        let in_larger = member(&IdealDescriptor::lc(c + 1), &Obj::Formal(g.clone()))?;
        let in_smaller = member(&IdealDescriptor::lc(c), &Obj::Formal(g.clone()))?;
        separations.push(Separation {
            smaller: format!("L{c}"),
            larger: format!("L{}", c + 1),
            witness: format!("G_{}", c + 1),
            in_larger: in_larger.to_string(),
            in_smaller: in_smaller.to_string(),
            verified: in_larger.answer == Answer::Yes && in_smaller.answer == Answer::No,
        });
    }
    let e = factorial_complex();
    let dfl = IdealDescriptor::tame(SpclSet::fin(Ring::Dvr, [PrimeIdeal::DvrMax]));
    let in_dfl = member(&dfl, &Obj::Formal(e.clone()))?;
    let mut all_no = true;
    for c in 1..=c_max {
        let ans = member(&IdealDescriptor::lc(c), &Obj::Formal(e.clone()))?;
        if ans.answer != Answer::No {
            all_no = false;
        }
    }
    separations.push(Separation {
        smaller: format!("L{c_max}"),
        larger: "D-fl".to_string(),
        witness: "factorial complex".to_string(),
        in_larger: in_dfl.to_string(),
        in_smaller: format!("no (for every L_c, c <= {c_max})"),
        verified: in_dfl.answer == Answer::Yes && all_no,
    });
    Ok(DvrFiberReport {
        c_max,
        distinct_primes_over_zero: fiber_zero.len(),
        fiber_over_zero: fiber_zero,
        fiber_over_max: fiber_max,
        separations,
        note: "every listed prime has s-value (0); s agrees with the graded \
               endomorphism comparison map, so that map is not locally injective"
            .to_string(),
    })
}

impl fmt::Display for DvrFiberReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fiber report over the DVR (c_max = {})", self.c_max)?;
        writeln!(
            f,
            "fiber over (0): {} distinct primes",
            self.distinct_primes_over_zero
        )?;
        for p in &self.fiber_over_zero {
            writeln!(f, "  {} supp {} s {}", p.name, p.supp, p.s_value)?;
        }
        writeln!(f, "fiber over (x): {}", self.fiber_over_max.join(", "))?;
        for s in &self.separations {
            writeln!(
                f,
                "  {} strictly inside {}: witness {} [in larger: {}; in smaller: {}; verified {}]",
                s.smaller, s.larger, s.witness, s.in_larger, s.in_smaller, s.verified
            )?;
        }
        writeln!(f, "note: {}", self.note)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{koszul, FreeComplex};
    use crate::rings::Elem;

    fn zi(n: i64) -> PrimeIdeal {
        PrimeIdeal::Principal(Elem::int(n))
    }

    #[test]
    fn member_compact_examples() {
        let r = Ring::Integers;
        let d = IdealDescriptor::compact(SpclSet::fin(r.clone(), [zi(2), zi(3)]));
        let x = FreeComplex::cyclic_resolution(r.clone(), Elem::int(12)).unwrap();
        assert_eq!(member(&d, &Obj::Free(x)).unwrap().answer, Answer::Yes);

        let d2 = IdealDescriptor::compact(SpclSet::fin(r.clone(), [zi(2)]));
        let y = FreeComplex::cyclic_resolution(r.clone(), Elem::int(10)).unwrap();
        assert_eq!(member(&d2, &Obj::Free(y)).unwrap().answer, Answer::No);
    }

    #[test]
    fn member_tame_dfl_example() {
        // Z/2[0] ⊕ Z/3[1] lies in Supp⁻¹(Max Z)
        let r = Ring::Integers;
        let a = FreeComplex::cyclic_resolution(r.clone(), Elem::int(2)).unwrap();
        let b = FreeComplex::cyclic_resolution(r.clone(), Elem::int(3))
            .unwrap()
            .shift(1);
        let x = a.direct_sum(&b).unwrap();
        let d = IdealDescriptor::tame(SpclSet::cofin(r.clone(), []));
        assert_eq!(member(&d, &Obj::Free(x)).unwrap().answer, Answer::Yes);
    }

    #[test]
    fn normalization_identifications() {
        let r = Ring::Integers;
        assert_eq!(
            IdealDescriptor::compact(SpclSet::empty(r.clone()))
                .normalize()
                .unwrap()
                .kind,
            DescriptorKind::Zero
        );
        assert_eq!(
            IdealDescriptor::compact(SpclSet::all(r.clone()))
                .normalize()
                .unwrap()
                .kind,
            DescriptorKind::Whole
        );
        // over the DVR: compact{(x)} is L1
        let d = IdealDescriptor::compact(SpclSet::fin(Ring::Dvr, [PrimeIdeal::DvrMax]));
        assert_eq!(d.normalize().unwrap().kind, DescriptorKind::Lc(1));
        // S((x)) over the DVR is the zero ideal
        let sp = IdealDescriptor::new(Ring::Dvr, DescriptorKind::Sp(PrimeIdeal::DvrMax)).unwrap();
        assert_eq!(sp.normalize().unwrap().kind, DescriptorKind::Zero);
        // normalization is idempotent on a spread of descriptors
        for d in [
            IdealDescriptor::zero(r.clone()),
            IdealDescriptor::whole(r.clone()),
            IdealDescriptor::compact(SpclSet::fin(r.clone(), [zi(2)])),
            IdealDescriptor::tame(SpclSet::cofin(r.clone(), [zi(5)])),
            IdealDescriptor::new(r.clone(), DescriptorKind::Sp(zi(3))).unwrap(),
            IdealDescriptor::lc(2),
        ] {
            let once = d.normalize().unwrap();
            assert_eq!(once.normalize().unwrap(), once);
        }
    }

    #[test]
    fn supp_descriptor_examples() {
        assert_eq!(IdealDescriptor::lc(3).supp().unwrap().render(), "{(x)}");
        let sp0 =
            IdealDescriptor::new(Ring::Integers, DescriptorKind::Sp(PrimeIdeal::Zero)).unwrap();
        assert_eq!(sp0.supp().unwrap().render(), "cofinmax{}");
        let k2 = koszul(&Ring::Integers, &[Elem::int(2)]).unwrap();
        let gen =
            IdealDescriptor::new(Ring::Integers, DescriptorKind::GenBounded(vec![k2])).unwrap();
        assert_eq!(gen.supp().unwrap().render(), "{(2)}");
    }

    #[test]
    fn closures() {
        // tame closure of L_c is D⁻_fl, separated by the factorial complex
        let lc = IdealDescriptor::lc(2);
        let t = tame_closure(&lc).unwrap();
        assert_eq!(
            t.kind,
            DescriptorKind::Tame(SpclSet::fin(Ring::Dvr, [PrimeIdeal::DvrMax]))
        );
        let e = factorial_complex();
        assert_eq!(
            member(&t, &Obj::Formal(e.clone())).unwrap().answer,
            Answer::Yes
        );
        assert_eq!(member(&lc, &Obj::Formal(e)).unwrap().answer, Answer::No);

        // rad closure is the identity on primes and tame ideals
        assert_eq!(rad_closure(&lc).unwrap(), RadClosure::Known(lc.clone()));
        assert_eq!(rad_closure(&t).unwrap(), RadClosure::Known(t.clone()));

        // and unknown for a proper compact ideal over Z
        let c = IdealDescriptor::compact(SpclSet::fin(Ring::Integers, [zi(2)]));
        assert!(matches!(rad_closure(&c).unwrap(), RadClosure::Unknown(_)));
    }

    #[test]
    fn closure_diagram_identities() {
        // supp(tame_closure d) = supp d and cpt_interior(tame_closure d) =
        // cpt_interior d, across descriptor kinds
        let z12 = Ring::parse("Z/12").unwrap();
        let descriptors = vec![
            IdealDescriptor::zero(z12.clone()),
            IdealDescriptor::whole(z12.clone()),
            IdealDescriptor::compact(SpclSet::fin(z12.clone(), [zi(2)])),
            IdealDescriptor::tame(SpclSet::fin(z12.clone(), [zi(3)])),
            IdealDescriptor::new(z12.clone(), DescriptorKind::Sp(zi(2))).unwrap(),
            IdealDescriptor::lc(1),
            IdealDescriptor::lc(3),
            IdealDescriptor::tame(SpclSet::fin(Ring::Dvr, [PrimeIdeal::DvrMax])),
        ];
        for d in descriptors {
            let t = tame_closure(&d).unwrap();
            assert_eq!(
                t.supp().unwrap(),
                d.supp().unwrap(),
                "supp of {}",
                d.render()
            );
            assert_eq!(
                cpt_interior(&t).unwrap(),
                cpt_interior(&d).unwrap(),
                "cpt interior of {}",
                d.render()
            );
        }
    }

    #[test]
    fn lattice_ops() {
        let r = Ring::Integers;
        let a = IdealDescriptor::compact(SpclSet::fin(r.clone(), [zi(2)]));
        let b = IdealDescriptor::compact(SpclSet::fin(r.clone(), [zi(3)]));
        assert_eq!(meet(&a, &b).unwrap().kind, DescriptorKind::Zero);
        assert_eq!(
            join(&a, &b).unwrap(),
            IdealDescriptor::compact(SpclSet::fin(r.clone(), [zi(2), zi(3)]))
        );
        let whole = IdealDescriptor::whole(r.clone());
        assert_eq!(meet(&a, &whole).unwrap(), a);
        // a non-compact descriptor is rejected
        let t = IdealDescriptor::tame(SpclSet::fin(r.clone(), [zi(2)]));
        assert!(matches!(meet(&t, &a), Err(Error::NotCompactDescriptor(_))));
        assert!(matches!(
            meet(&IdealDescriptor::lc(2), &IdealDescriptor::lc(1)),
            Err(Error::NotCompactDescriptor(_))
        ));
    }

    #[test]
    fn artinian_enumeration_counts() {
        for (spec, count) in [("Z/12", 4usize), ("Z/30", 8), ("Z/8", 2)] {
            let r = Ring::parse(spec).unwrap();
            let rep = enumerate_artinian(&r, &[]).unwrap();
            assert_eq!(rep.ideal_count, count, "{spec}");
            assert!(rep.lattice_tables_ok);
        }
        assert!(enumerate_artinian(&Ring::Integers, &[]).is_err());
    }

    #[test]
    fn fiber_report() {
        let rep = dvr_fiber_report(3).unwrap();
        assert_eq!(rep.distinct_primes_over_zero, 4);
        assert!(rep.fiber_over_zero.iter().all(|p| p.s_value == "(0)"));
        assert!(rep.separations.iter().all(|s| s.verified));
        assert_eq!(rep.fiber_over_max.len(), 1);
        assert!(rep.fiber_over_max[0].contains("(x)"));
    }

    #[test]
    fn descriptor_parse_render() {
        let r = Ring::Integers;
        for s in [
            "zero",
            "whole",
            "compact{(2),(3)}",
            "compact{}",
            "compact{all}",
            "tame{cofinmax{(5)}}",
            "S((0))",
            "S((7))",
        ] {
            let d = IdealDescriptor::parse(&r, s).unwrap();
            assert_eq!(d.render(), s, "round trip of '{s}'");
        }
        let d = IdealDescriptor::parse(&Ring::Dvr, "L3").unwrap();
        assert_eq!(d.kind, DescriptorKind::Lc(3));
        assert!(IdealDescriptor::parse(&r, "L3").is_err());
    }
}
