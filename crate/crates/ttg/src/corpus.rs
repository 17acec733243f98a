//! Seeded random generators for modules, complexes and chain maps, used by
//! the property suites, the acceptance tests and the examples. Everything
//! is deterministic for a fixed seed.
//!
//! Random complexes are built as direct sums of elementary pieces (free
//! singles and two-term cyclic resolutions) and then conjugated degreewise
//! by random unimodular matrices, which scrambles the presentation without
//! touching the quasi-isomorphism type.

use crate::complexes::{ChainMap, FreeComplex};
use crate::matrix::IntMatrix;
use crate::rings::{Elem, Ring};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random canonical element, `|value| <= bound` over `Z`, degree <= 2
/// over the polynomial rings.
pub fn rand_elem(ring: &Ring, rng: &mut StdRng, bound: i64) -> Elem {
    match ring {
        Ring::Integers => ring.from_i64(rng.gen_range(-bound..=bound)),
        Ring::IntegersMod(n) => ring.from_i64(rng.gen_range(0..*n as i64)),
        Ring::PrimeField(p) => ring.from_i64(rng.gen_range(0..*p as i64)),
        Ring::PolyRing(p) | Ring::PolyQuotient(p, _) => {
            let deg = rng.gen_range(0..=2usize);
            let coeffs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..*p)).collect();
            ring.reduce(Elem::Poly(crate::rings::FpPoly::new(*p, coeffs)))
        }
        Ring::Dvr => panic!("the DVR has no element arithmetic"),
    }
}

/// A random nonzero canonical element.
pub fn rand_nonzero_elem(ring: &Ring, rng: &mut StdRng, bound: i64) -> Elem {
    loop {
        let e = rand_elem(ring, rng, bound);
        if !ring.is_zero(&e) {
            return e;
        }
    }
}

/// A random unimodular matrix together with its inverse, as a product of
/// elementary operations.
pub fn rand_unimodular(ring: &Ring, n: usize, rng: &mut StdRng) -> (IntMatrix, IntMatrix) {
    let mut p = IntMatrix::identity(ring.clone(), n);
    let mut pinv = IntMatrix::identity(ring.clone(), n);
    if n < 2 {
        return (p, pinv);
    }
    let steps = rng.gen_range(1..=2 * n);
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c = rand_elem(ring, rng, 2);
        // p := E p, pinv := pinv E^{-1}, with E = I + c e_{ij}
        let mut e = IntMatrix::identity(ring.clone(), n);
        e.set(i, j, c.clone());
        let mut einv = IntMatrix::identity(ring.clone(), n);
        einv.set(i, j, ring.neg(&c));
        p = e.mul(&p);
        pinv = pinv.mul(&einv);
    }
    (p, pinv)
}

/// A random bounded free complex with ranks `<= max_rank` over at most
/// `max_len` degrees starting at 0, with scrambled presentation.
pub fn rand_complex(ring: &Ring, rng: &mut StdRng, max_rank: usize, max_len: usize) -> FreeComplex {
    let len = rng.gen_range(1..=max_len.max(1));
    // elementary pieces: free singles and cyclic resolutions
    let mut acc = FreeComplex::zero(ring.clone());
    let pieces = rng.gen_range(1..=max_rank.max(1));
    for _ in 0..pieces {
        let deg = rng.gen_range(0..len) as i64;
        let piece = if rng.gen_bool(0.3) {
            FreeComplex::free_single(ring.clone(), 1, deg)
        } else {
            let d = rand_nonzero_elem(ring, rng, 40);
            FreeComplex::cyclic_resolution(ring.clone(), d)
                .expect("cyclic resolution")
                .shift(deg)
        };
        acc = acc.direct_sum(&piece).expect("same ring");
    }
    // conjugate degreewise: d'_i = P_{i-1} d_i P_i^{-1}
    let lo = acc.lo();
    let hi = acc.hi();
    let mut ps: BTreeMap<i64, (IntMatrix, IntMatrix)> = BTreeMap::new();
    for i in lo..=hi {
        ps.insert(i, rand_unimodular(ring, acc.rank_at(i), rng));
    }
    let ranks: Vec<usize> = (lo..=hi).map(|i| acc.rank_at(i)).collect();
    let diffs: Vec<IntMatrix> = (lo + 1..=hi)
        .map(|i| {
            let (p_prev, _) = &ps[&(i - 1)];
            let (_, pinv_i) = &ps[&i];
            p_prev.mul(&acc.diff_at(i)).mul(pinv_i)
        })
        .collect();
    FreeComplex::new(ring.clone(), lo, ranks, diffs).expect("conjugation preserves d²=0")
}

/// A random null-homotopic endomorphism `ds + sd` of `x`.
pub fn rand_nullhomotopic_endo(x: &FreeComplex, rng: &mut StdRng, bound: i64) -> ChainMap {
    let ring = x.ring.clone();
    let mut maps = BTreeMap::new();
    // random s_i : X_i → X_{i+1}
    let mut s: BTreeMap<i64, IntMatrix> = BTreeMap::new();
    for i in x.lo()..=x.hi() {
        let (r, c) = (x.rank_at(i + 1), x.rank_at(i));
        if r == 0 || c == 0 {
            continue;
        }
        let mut m = IntMatrix::zero(ring.clone(), r, c);
        for p in 0..r {
            for q in 0..c {
                m.set(p, q, rand_elem(&ring, rng, bound));
            }
        }
        s.insert(i, m);
    }
    let s_at = |i: i64| {
        s.get(&i)
            .cloned()
            .unwrap_or_else(|| IntMatrix::zero(ring.clone(), x.rank_at(i + 1), x.rank_at(i)))
    };
    for i in x.lo()..=x.hi() {
        if x.rank_at(i) == 0 {
            continue;
        }
        let m = x
            .diff_at(i + 1)
            .mul(&s_at(i))
            .add(&s_at(i - 1).mul(&x.diff_at(i)));
        if !m.is_zero() {
            maps.insert(i, m);
        }
    }
    ChainMap::new(x.clone(), x.clone(), maps).expect("ds + sd is a chain map")
}

/// A random endomorphism `a·id + ds + sd`.
pub fn rand_endo(x: &FreeComplex, rng: &mut StdRng, bound: i64) -> ChainMap {
    let a = rand_elem(&x.ring, rng, bound);
    let scalar = ChainMap::scalar_endo(x, &a);
    let null = rand_nullhomotopic_endo(x, rng, bound);
    scalar.add(&null).expect("same shape")
}

/// A random finite-length formal DVR prefix: exponents `<= max_exp` over
/// `<= max_len` degrees starting at 0.
pub fn rand_formal_bounded(
    rng: &mut StdRng,
    max_exp: u64,
    max_len: usize,
) -> crate::formal::FormalComplex {
    use crate::modules::FgModule;
    let len = rng.gen_range(1..=max_len.max(1));
    let mut map = BTreeMap::new();
    for i in 0..len {
        let k = rng.gen_range(0..=2usize);
        let exps: Vec<u128> = (0..k).map(|_| rng.gen_range(1..=max_exp) as u128).collect();
        if !exps.is_empty() {
            map.insert(i as i64, FgModule::dvr(0, exps));
        }
    }
    crate::formal::FormalComplex::bounded(map).expect("bounded formal complex")
}
