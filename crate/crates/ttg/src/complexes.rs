//! Bounded complexes of finite free modules and chain maps between them:
//! homology, Koszul complexes, shifts, cones, direct sums, tensor products,
//! a null-homotopy solver, annihilators of complexes and morphisms,
//! supports, and residue-field base change.
//!
//! Chain (homological) indexing throughout: the differential `d_i` maps
//! degree `i` to degree `i-1`. Cochain statements translate by negating
//! degrees.
//!
//! Null-homotopy questions are one big linear system over the ring,
//! decided by Smith normal form over the covering PID with congruence
//! unknowns for the artinian quotients. Witnesses are re-verified by
//! multiplication before they are returned.

use crate::error::{Error, Result};
use crate::matrix::{kernel_basis, solve, IntMatrix};
use crate::modules::{localize_vanishes, module_from_presentation, supp_module, FgModule};
use crate::rings::{residue_field, residue_field_reduce, Elem, Ideal, PrimeIdeal, Ring};
use crate::spectra::SpclSet;
use crate::DEFAULT_SIZE_BUDGET;
use std::collections::BTreeMap;
use std::fmt;

// ---------------------------------------------------------------------------
// complexes
// ---------------------------------------------------------------------------

/// A bounded complex of finite free modules. Ranks outside `[lo, hi]` are
/// zero; `d_i ∘ d_{i+1} = 0` is validated at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeComplex {
    pub ring: Ring,
    lo: i64,
    ranks: Vec<usize>,
    /// `diffs[k]` is `d_{lo+k+1} : X_{lo+k+1} → X_{lo+k}`, of shape
    /// `ranks[k] × ranks[k+1]`.
    diffs: Vec<IntMatrix>,
}

impl FreeComplex {
    pub fn new(ring: Ring, lo: i64, ranks: Vec<usize>, diffs: Vec<IntMatrix>) -> Result<Self> {
        if !ring.supports_elements() {
            return Err(Error::UnsupportedRing(
                "free complexes need element arithmetic; use formal complexes over the DVR".into(),
            ));
        }
        if !ranks.is_empty() && diffs.len() + 1 != ranks.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} ranks need {} differentials, got {}",
                ranks.len(),
                ranks.len() - 1,
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.ring != ring {
                return Err(Error::RingMismatch(ring.to_string(), d.ring.to_string()));
            }
            if d.rows != ranks[k] || d.cols != ranks[k + 1] {
                return Err(Error::ShapeMismatch(format!(
                    "d_{} has shape {}x{}, expected {}x{}",
                    lo + k as i64 + 1,
                    d.rows,
                    d.cols,
                    ranks[k],
                    ranks[k + 1]
                )));
            }
        }
        for k in 0..diffs.len().saturating_sub(1) {
            if !diffs[k].mul(&diffs[k + 1]).is_zero() {
                return Err(Error::NotAComplex(lo + k as i64 + 2));
            }
        }
        let mut c = FreeComplex {
            ring,
            lo,
            ranks,
            diffs,
        };
        c.trim();
        Ok(c)
    }

    /// Canonical form: no zero ranks at either end.
    fn trim(&mut self) {
        while self.ranks.first() == Some(&0) {
            self.ranks.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        while self.ranks.last() == Some(&0) {
            self.ranks.pop();
            self.diffs.pop();
        }
        if self.ranks.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
    }

    pub fn zero(ring: Ring) -> Self {
        FreeComplex {
            ring,
            lo: 0,
            ranks: vec![],
            diffs: vec![],
        }
    }

    /// `R^rank` concentrated in one degree.
    pub fn free_single(ring: Ring, rank: usize, degree: i64) -> Self {
        if rank == 0 {
            return Self::zero(ring);
        }
        FreeComplex {
            ring,
            lo: degree,
            ranks: vec![rank],
            diffs: vec![],
        }
    }

    /// The unit object `R` in degree 0.
    pub fn unit(ring: Ring) -> Self {
        Self::free_single(ring, 1, 0)
    }

    /// The two-term complex `R --d--> R` in degrees 1, 0; over a domain its
    /// only homology is `R/(d)` in degree 0.
    pub fn cyclic_resolution(ring: Ring, d: Elem) -> Result<Self> {
        let m = IntMatrix::from_rows(ring.clone(), vec![vec![d]])?;
        FreeComplex::new(ring, 0, vec![1, 1], vec![m])
    }

    /// Two-term complex presenting a module in degree 0 (columns =
    /// generators, rows = relations).
    pub fn from_presentation(m: &IntMatrix) -> Result<Self> {
        FreeComplex::new(m.ring.clone(), 0, vec![m.cols, m.rows], vec![m.transpose()])
    }

    /// Two-term resolution of a module in normal form.
    pub fn resolve_module(m: &FgModule) -> Result<Self> {
        let ring = m.ring.clone();
        let nt = m.torsion().len();
        let cols = nt + m.free_rank;
        let mut pres = IntMatrix::zero(ring.clone(), nt, cols);
        for (i, d) in m.torsion().iter().enumerate() {
            pres.set(i, i, d.clone());
        }
        Self::from_presentation(&pres)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn is_zero_complex(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank_at(&self, i: i64) -> usize {
        if i < self.lo {
            return 0;
        }
        self.ranks.get((i - self.lo) as usize).copied().unwrap_or(0)
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// `d_i : X_i → X_{i-1}` (a zero matrix of the right shape outside the
    /// stored range).
    pub fn diff_at(&self, i: i64) -> IntMatrix {
        let k = i - 1 - self.lo;
        if k >= 0 && (k as usize) < self.diffs.len() {
            self.diffs[k as usize].clone()
        } else {
            IntMatrix::zero(self.ring.clone(), self.rank_at(i - 1), self.rank_at(i))
        }
    }

    pub fn shift(&self, n: i64) -> Self {
        let mut out = self.clone();
        out.lo += n;
        if n.rem_euclid(2) == 1 {
            for d in out.diffs.iter_mut() {
                *d = d.neg();
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &FreeComplex) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        if self.is_zero_complex() {
            return Ok(other.clone());
        }
        if other.is_zero_complex() {
            return Ok(self.clone());
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let ranks: Vec<usize> = (lo..=hi)
            .map(|i| self.rank_at(i) + other.rank_at(i))
            .collect();
        let mut diffs = Vec::new();
        for i in lo + 1..=hi {
            let (a, b) = (self.diff_at(i), other.diff_at(i));
            let mut d = IntMatrix::zero(
                self.ring.clone(),
                self.rank_at(i - 1) + other.rank_at(i - 1),
                self.rank_at(i) + other.rank_at(i),
            );
            for r in 0..a.rows {
                for c in 0..a.cols {
                    d.set(r, c, a.at(r, c).clone());
                }
            }
            for r in 0..b.rows {
                for c in 0..b.cols {
                    d.set(a.rows + r, a.cols + c, b.at(r, c).clone());
                }
            }
            diffs.push(d);
        }
        FreeComplex::new(self.ring.clone(), lo, ranks, diffs)
    }

    /// Homology in one degree, in module normal form.
    pub fn homology_at(&self, i: i64) -> Result<FgModule> {
        let ring = self.ring.clone();
        if self.rank_at(i) == 0 {
            return Ok(FgModule::zero(ring));
        }
        let (pid, modulus) = ring.covering_pid();
        let d_in = self.diff_at(i + 1).map_ring(&pid); // X_{i+1} → X_i
        let d_out = self.diff_at(i).map_ring(&pid); // X_i → X_{i-1}
        match modulus {
            None => {
                // kernel basis, then the image expressed in those coordinates
                let k = kernel_basis(&d_out)?;
                let b = solve(&k, &d_in)?.expect("image lies in the kernel");
                module_from_presentation(&b.transpose().map_ring(&ring))
            }
            Some(md) => {
                // generators of {v : d_out·v ≡ 0 (mod md)} from a stacked
                // kernel; relations are the image columns, the syzygies of
                // the generators, and the modulus multiples (the latter
                // stacked by the presentation itself)
                let r_out = d_out.rows;
                let r_here = d_out.cols;
                let aug = d_out.hstack(&IntMatrix::scalar(pid.clone(), r_out, &md));
                let kfull = kernel_basis(&aug)?;
                let gens = kfull.take_rows(r_here);
                let images = d_in.hstack(&IntMatrix::scalar(pid.clone(), r_here, &md));
                let y = solve(&gens, &images)?.expect("image lies in the mod-kernel");
                let syz = kernel_basis(&gens)?;
                let rel = y.hstack(&syz).transpose().map_ring(&ring);
                module_from_presentation(&rel)
            }
        }
    }

    pub fn homology(&self) -> Result<BTreeMap<i64, FgModule>> {
        let mut out = BTreeMap::new();
        for i in self.lo..=self.hi() {
            let h = self.homology_at(i)?;
            if !h.is_zero() {
                out.insert(i, h);
            }
        }
        Ok(out)
    }

    pub fn is_exact(&self) -> Result<bool> {
        Ok(self.homology()?.is_empty())
    }

    /// Union of the homology supports; for bounded complexes this equals
    /// `V(Ann X)`.
    pub fn supp(&self) -> Result<SpclSet> {
        let mut s = SpclSet::empty(self.ring.clone());
        for (_, h) in self.homology()? {
            s = s.union(&supp_module(&h)?);
        }
        Ok(s)
    }

    /// `X_p ≅ 0`: every homology module localizes to zero at `p`.
    pub fn vanishes_at(&self, p: &PrimeIdeal) -> Result<bool> {
        for (_, h) in self.homology()? {
            if !localize_vanishes(&h, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Degreewise reduction of the complex modulo a maximal prime.
    pub fn base_change_residue(&self, p: &PrimeIdeal) -> Result<FreeComplex> {
        let field = residue_field(&self.ring, p)?;
        let diffs = self
            .diffs
            .iter()
            .map(|d| reduce_matrix(d, &self.ring, p, &field))
            .collect::<Result<Vec<_>>>()?;
        FreeComplex::new(field, self.lo, self.ranks.clone(), diffs)
    }
}

fn reduce_matrix(m: &IntMatrix, ring: &Ring, p: &PrimeIdeal, field: &Ring) -> Result<IntMatrix> {
    let mut out = IntMatrix::zero(field.clone(), m.rows, m.cols);
    for r in 0..m.rows {
        for c in 0..m.cols {
            let (_, v) = residue_field_reduce(ring, p, m.at(r, c))?;
            out.set(r, c, v);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Koszul complexes
// ---------------------------------------------------------------------------

/// Sorted `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return vec![];
    }
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + (k - i) < n {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The exterior-algebra Koszul complex on `xs`, with ranks `C(n,k)` in
/// degrees `0..=n` and the standard signs. The empty sequence gives `R` in
/// degree 0.
pub fn koszul(ring: &Ring, xs: &[Elem]) -> Result<FreeComplex> {
    if !ring.supports_elements() {
        return Err(Error::UnsupportedRing(format!(
            "Koszul complexes need element arithmetic, not {ring}"
        )));
    }
    let n = xs.len();
    let xs: Vec<Elem> = xs.iter().map(|x| ring.reduce(x.clone())).collect();
    let mut ranks = Vec::new();
    let mut bases: Vec<Vec<Vec<usize>>> = Vec::new();
    for k in 0..=n {
        let b = subsets(n, k);
        ranks.push(b.len());
        bases.push(b);
    }
    let mut diffs = Vec::new();
    for k in 1..=n {
        let src = &bases[k];
        let tgt = &bases[k - 1];
        let index_of = |s: &Vec<usize>| tgt.iter().position(|t| t == s).unwrap();
        let mut d = IntMatrix::zero(ring.clone(), tgt.len(), src.len());
        for (col, s) in src.iter().enumerate() {
            for (pos, &j) in s.iter().enumerate() {
                let mut face = s.clone();
                face.remove(pos);
                let row = index_of(&face);
                let mut coeff = xs[j].clone();
                if pos % 2 == 1 {
                    coeff = ring.neg(&coeff);
                }
                let v = ring.add(d.at(row, col), &coeff);
                d.set(row, col, v);
            }
        }
        diffs.push(d);
    }
    FreeComplex::new(ring.clone(), 0, ranks, diffs)
}

// ---------------------------------------------------------------------------
// chain maps
// ---------------------------------------------------------------------------

/// A degreewise map of complexes; the commuting squares are validated at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    pub source: FreeComplex,
    pub target: FreeComplex,
    maps: BTreeMap<i64, IntMatrix>,
}

impl ChainMap {
    pub fn new(
        source: FreeComplex,
        target: FreeComplex,
        mut maps: BTreeMap<i64, IntMatrix>,
    ) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch(
                source.ring.to_string(),
                target.ring.to_string(),
            ));
        }
        maps.retain(|_, m| !m.is_zero());
        let f = ChainMap {
            source,
            target,
            maps,
        };
        for (i, m) in &f.maps {
            if m.rows != f.target.rank_at(*i) || m.cols != f.source.rank_at(*i) {
                return Err(Error::ShapeMismatch(format!(
                    "f_{i} has shape {}x{}, expected {}x{}",
                    m.rows,
                    m.cols,
                    f.target.rank_at(*i),
                    f.source.rank_at(*i)
                )));
            }
        }
        let lo = f.source.lo().min(f.target.lo());
        let hi = f.source.hi().max(f.target.hi());
        for i in lo..=hi {
            let lhs = f.target.diff_at(i).mul(&f.map_at(i));
            let rhs = f.map_at(i - 1).mul(&f.source.diff_at(i));
            if lhs != rhs {
                return Err(Error::NotAChainMap(i));
            }
        }
        Ok(f)
    }

    pub fn map_at(&self, i: i64) -> IntMatrix {
        self.maps.get(&i).cloned().unwrap_or_else(|| {
            IntMatrix::zero(
                self.source.ring.clone(),
                self.target.rank_at(i),
                self.source.rank_at(i),
            )
        })
    }

    pub fn is_zero_map(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn zero_map(source: FreeComplex, target: FreeComplex) -> Result<Self> {
        ChainMap::new(source, target, BTreeMap::new())
    }

    pub fn identity(x: &FreeComplex) -> Self {
        let maps = (x.lo()..=x.hi())
            .filter(|&i| x.rank_at(i) > 0)
            .map(|i| (i, IntMatrix::identity(x.ring.clone(), x.rank_at(i))))
            .collect();
        ChainMap::new(x.clone(), x.clone(), maps).expect("identity is a chain map")
    }

    /// `a · id_X`.
    pub fn scalar_endo(x: &FreeComplex, a: &Elem) -> Self {
        ChainMap::identity(x).scale(a)
    }

    pub fn scale(&self, a: &Elem) -> Self {
        let ring = self.source.ring.clone();
        let a = ring.reduce(a.clone());
        let mut maps: BTreeMap<i64, IntMatrix> = self
            .maps
            .iter()
            .map(|(i, m)| (*i, m.scalar_mul(&a)))
            .collect();
        maps.retain(|_, m| !m.is_zero());
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            maps,
        }
    }

    pub fn add(&self, other: &ChainMap) -> Result<Self> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ShapeMismatch("chain map addition".into()));
        }
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        let mut maps = BTreeMap::new();
        for i in lo..=hi {
            if self.source.rank_at(i) == 0 || self.target.rank_at(i) == 0 {
                continue;
            }
            let m = self.map_at(i).add(&other.map_at(i));
            if !m.is_zero() {
                maps.insert(i, m);
            }
        }
        ChainMap::new(self.source.clone(), self.target.clone(), maps)
    }

    /// Degreewise reduction modulo a maximal prime.
    pub fn base_change_residue(&self, p: &PrimeIdeal) -> Result<ChainMap> {
        let ring = &self.source.ring;
        let field = residue_field(ring, p)?;
        let source = self.source.base_change_residue(p)?;
        let target = self.target.base_change_residue(p)?;
        let mut maps = BTreeMap::new();
        for (i, m) in &self.maps {
            maps.insert(*i, reduce_matrix(m, ring, p, &field)?);
        }
        ChainMap::new(source, target, maps)
    }
}

/// Mapping cone: `C_i = X_{i-1} ⊕ Y_i`, fitting the triangle
/// `X → Y → cone(f) → X[1]`.
pub fn cone(f: &ChainMap) -> Result<FreeComplex> {
    let ring = f.source.ring.clone();
    let x = &f.source;
    let y = &f.target;
    if x.is_zero_complex() && y.is_zero_complex() {
        return Ok(FreeComplex::zero(ring));
    }
    let lo = (x.lo() + 1).min(y.lo());
    let hi = (x.hi() + 1).max(y.hi());
    let ranks: Vec<usize> = (lo..=hi).map(|i| x.rank_at(i - 1) + y.rank_at(i)).collect();
    let mut diffs = Vec::new();
    for i in lo + 1..=hi {
        let dx = x.diff_at(i - 1).neg();
        let dy = y.diff_at(i);
        let fm = f.map_at(i - 1).neg();
        let rows = x.rank_at(i - 2) + y.rank_at(i - 1);
        let cols = x.rank_at(i - 1) + y.rank_at(i);
        let mut d = IntMatrix::zero(ring.clone(), rows, cols);
        for r in 0..dx.rows {
            for c in 0..dx.cols {
                d.set(r, c, dx.at(r, c).clone());
            }
        }
        for r in 0..fm.rows {
            for c in 0..fm.cols {
                d.set(dx.rows + r, c, fm.at(r, c).clone());
            }
        }
        for r in 0..dy.rows {
            for c in 0..dy.cols {
                d.set(dx.rows + r, dx.cols + c, dy.at(r, c).clone());
            }
        }
        diffs.push(d);
    }
    FreeComplex::new(ring, lo, ranks, diffs)
}

// ---------------------------------------------------------------------------
// tensor products
// ---------------------------------------------------------------------------

/// Basis bookkeeping for `(X ⊗ Y)_n = ⊕_{i+j=n} X_i ⊗ Y_j`: blocks are
/// ordered by ascending `i`, and within a block the basis is
/// `(a, b) ↦ a · rank(Y_j) + b`.
fn tensor_blocks(x: &FreeComplex, y: &FreeComplex, n: i64) -> Vec<(i64, usize, usize)> {
    let mut blocks = Vec::new();
    for i in x.lo()..=x.hi() {
        let j = n - i;
        let (rx, ry) = (x.rank_at(i), y.rank_at(j));
        if rx > 0 && ry > 0 {
            blocks.push((i, rx, ry));
        }
    }
    blocks
}

fn block_offset(blocks: &[(i64, usize, usize)], i: i64) -> Option<usize> {
    let mut off = 0;
    for (bi, rx, ry) in blocks {
        if *bi == i {
            return Some(off);
        }
        off += rx * ry;
    }
    None
}

/// Total complex of the tensor product, with the Koszul sign
/// `d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy`. Fails when the resulting total rank
/// would exceed `budget`.
pub fn tensor(x: &FreeComplex, y: &FreeComplex, budget: usize) -> Result<FreeComplex> {
    if x.ring != y.ring {
        return Err(Error::RingMismatch(x.ring.to_string(), y.ring.to_string()));
    }
    let ring = x.ring.clone();
    if x.is_zero_complex() || y.is_zero_complex() {
        return Ok(FreeComplex::zero(ring));
    }
    let lo = x.lo() + y.lo();
    let hi = x.hi() + y.hi();
    let rank_of = |n: i64| -> usize { tensor_blocks(x, y, n).iter().map(|(_, a, b)| a * b).sum() };
    let total: usize = (lo..=hi).map(rank_of).sum();
    if total > budget {
        return Err(Error::SizeBudgetExceeded { got: total, budget });
    }
    let ranks: Vec<usize> = (lo..=hi).map(rank_of).collect();
    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let src = tensor_blocks(x, y, n);
        let tgt = tensor_blocks(x, y, n - 1);
        let rows: usize = tgt.iter().map(|(_, a, b)| a * b).sum();
        let cols: usize = src.iter().map(|(_, a, b)| a * b).sum();
        let mut d = IntMatrix::zero(ring.clone(), rows, cols);
        let mut col_off = 0usize;
        for (i, rx, ry) in &src {
            let j = n - i;
            // dx ⊗ id : block (i, j) → block (i-1, j)
            let dx = x.diff_at(*i);
            if let Some(row_off) = block_offset(&tgt, i - 1) {
                let ry_t = y.rank_at(j);
                for a2 in 0..dx.rows {
                    for a in 0..*rx {
                        let c = dx.at(a2, a);
                        if ring.is_zero(c) {
                            continue;
                        }
                        for b in 0..*ry {
                            d.set(row_off + a2 * ry_t + b, col_off + a * ry + b, c.clone());
                        }
                    }
                }
            }
            // (-1)^i id ⊗ dy : block (i, j) → block (i, j-1)
            let dy = y.diff_at(j);
            if let Some(row_off) = block_offset(&tgt, *i) {
                let ry_t = y.rank_at(j - 1);
                let sign_neg = i.rem_euclid(2) == 1;
                for b2 in 0..dy.rows {
                    for b in 0..*ry {
                        let mut c = dy.at(b2, b).clone();
                        if ring.is_zero(&c) {
                            continue;
                        }
                        if sign_neg {
                            c = ring.neg(&c);
                        }
                        for a in 0..*rx {
                            d.set(row_off + a * ry_t + b2, col_off + a * ry + b, c.clone());
                        }
                    }
                }
            }
            col_off += rx * ry;
        }
        diffs.push(d);
    }
    FreeComplex::new(ring, lo, ranks, diffs)
}

/// `f ⊗ g` on total complexes (no signs: chain maps have degree zero).
pub fn tensor_maps(f: &ChainMap, g: &ChainMap, budget: usize) -> Result<ChainMap> {
    let source = tensor(&f.source, &g.source, budget)?;
    let target = tensor(&f.target, &g.target, budget)?;
    let ring = source.ring.clone();
    let mut maps = BTreeMap::new();
    let lo = source.lo().min(target.lo());
    let hi = source.hi().max(target.hi());
    for n in lo..=hi {
        let src = tensor_blocks(&f.source, &g.source, n);
        let tgt = tensor_blocks(&f.target, &g.target, n);
        let rows: usize = tgt.iter().map(|(_, a, b)| a * b).sum();
        let cols: usize = src.iter().map(|(_, a, b)| a * b).sum();
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut m = IntMatrix::zero(ring.clone(), rows, cols);
        let mut col_off = 0usize;
        for (i, rx, ry) in &src {
            let j = n - i;
            let fi = f.map_at(*i);
            let gj = g.map_at(j);
            if let Some(row_off) = block_offset(&tgt, *i) {
                let ry_t = g.target.rank_at(j);
                for a2 in 0..fi.rows {
                    for a in 0..*rx {
                        let fa = fi.at(a2, a);
                        if ring.is_zero(fa) {
                            continue;
                        }
                        for b2 in 0..gj.rows {
                            for b in 0..*ry {
                                let v = ring.mul(fa, gj.at(b2, b));
                                if ring.is_zero(&v) {
                                    continue;
                                }
                                m.set(row_off + a2 * ry_t + b2, col_off + a * ry + b, v);
                            }
                        }
                    }
                }
            }
            col_off += rx * ry;
        }
        if !m.is_zero() {
            maps.insert(n, m);
        }
    }
    ChainMap::new(source, target, maps)
}

/// `f ⊗ id_C`.
pub fn tensor_map_complex(f: &ChainMap, c: &FreeComplex, budget: usize) -> Result<ChainMap> {
    tensor_maps(f, &ChainMap::identity(c), budget)
}

/// Tensor power `X^{⊗n}` under the rank budget.
pub fn tensor_power(x: &FreeComplex, n: u32, budget: usize) -> Result<FreeComplex> {
    assert!(n >= 1);
    let mut out = x.clone();
    for _ in 1..n {
        out = tensor(&out, x, budget)?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// the homotopy solver
// ---------------------------------------------------------------------------

/// A null-homotopy witness `s` with `f = d s + s d`; `maps[i] : X_i → Y_{i+1}`.
#[derive(Debug, Clone)]
pub struct Homotopy {
    pub maps: BTreeMap<i64, IntMatrix>,
}

impl Homotopy {
    /// Re-verifies the witness identity degreewise.
    pub fn verifies(&self, f: &ChainMap) -> bool {
        let ring = &f.source.ring;
        let lo = f.source.lo().min(f.target.lo()) - 1;
        let hi = f.source.hi().max(f.target.hi()) + 1;
        for i in lo..=hi {
            let s_i = self.maps.get(&i).cloned().unwrap_or_else(|| {
                IntMatrix::zero(ring.clone(), f.target.rank_at(i + 1), f.source.rank_at(i))
            });
            let s_prev = self.maps.get(&(i - 1)).cloned().unwrap_or_else(|| {
                IntMatrix::zero(ring.clone(), f.target.rank_at(i), f.source.rank_at(i - 1))
            });
            let lhs = f.map_at(i);
            let rhs = f
                .target
                .diff_at(i + 1)
                .mul(&s_i)
                .add(&s_prev.mul(&f.source.diff_at(i)));
            if lhs != rhs {
                return false;
            }
        }
        true
    }
}

/// Degrees where homotopy unknowns/equations live, plus flattened offsets.
struct HomotopySystem {
    /// (degree, rows of s_i, cols of s_i, offset into the unknown vector)
    unknowns: Vec<(i64, usize, usize, usize)>,
    n_unknowns: usize,
    /// (degree, rows of f_i, cols of f_i, offset into the equation vector)
    equations: Vec<(i64, usize, usize, usize)>,
    n_equations: usize,
}

fn homotopy_system(f: &ChainMap) -> HomotopySystem {
    let x = &f.source;
    let y = &f.target;
    let lo = x.lo().min(y.lo()) - 1;
    let hi = x.hi().max(y.hi()) + 1;
    let mut unknowns = Vec::new();
    let mut n_unknowns = 0usize;
    let mut equations = Vec::new();
    let mut n_equations = 0usize;
    for i in lo..=hi {
        let (r, c) = (y.rank_at(i + 1), x.rank_at(i));
        if r > 0 && c > 0 {
            unknowns.push((i, r, c, n_unknowns));
            n_unknowns += r * c;
        }
        let (er, ec) = (y.rank_at(i), x.rank_at(i));
        if er > 0 && ec > 0 {
            equations.push((i, er, ec, n_equations));
            n_equations += er * ec;
        }
    }
    HomotopySystem {
        unknowns,
        n_unknowns,
        equations,
        n_equations,
    }
}

/// Coefficient matrix of `(s_i) ↦ d s + s d`, flattened row-major per
/// degree, over the covering PID.
fn homotopy_matrix(f: &ChainMap, sys: &HomotopySystem, pid: &Ring) -> IntMatrix {
    let x = &f.source;
    let y = &f.target;
    let mut a = IntMatrix::zero(pid.clone(), sys.n_equations, sys.n_unknowns);
    let unknown_off = |deg: i64| -> Option<(usize, usize, usize)> {
        sys.unknowns
            .iter()
            .find(|(i, _, _, _)| *i == deg)
            .map(|(_, r, c, off)| (*r, *c, *off))
    };
    for (i, er, ec, eq_off) in &sys.equations {
        // d^Y_{i+1} · s_i : coefficient dY[p][r] at unknown s_i[r][q]
        if let Some((sr, sc, s_off)) = unknown_off(*i) {
            let dy = y.diff_at(i + 1).map_ring(pid);
            debug_assert_eq!(dy.rows, *er);
            debug_assert_eq!(sc, *ec);
            for p in 0..*er {
                for r in 0..sr {
                    let coeff = dy.at(p, r);
                    if pid.is_zero(coeff) {
                        continue;
                    }
                    for q in 0..*ec {
                        let row = eq_off + p * ec + q;
                        let col = s_off + r * sc + q;
                        let v = pid.add(a.at(row, col), coeff);
                        a.set(row, col, v);
                    }
                }
            }
        }
        // s_{i-1} · d^X_i : coefficient dX[c][q] at unknown s_{i-1}[p][c]
        if let Some((sr, sc, s_off)) = unknown_off(i - 1) {
            let dx = x.diff_at(*i).map_ring(pid);
            debug_assert_eq!(sr, *er);
            debug_assert_eq!(dx.rows, sc);
            for p in 0..*er {
                for c in 0..sc {
                    for q in 0..*ec {
                        let coeff = dx.at(c, q);
                        if pid.is_zero(coeff) {
                            continue;
                        }
                        let row = eq_off + p * ec + q;
                        let col = s_off + p * sc + c;
                        let v = pid.add(a.at(row, col), coeff);
                        a.set(row, col, v);
                    }
                }
            }
        }
    }
    a
}

fn flatten_maps(f: &ChainMap, sys: &HomotopySystem, pid: &Ring) -> IntMatrix {
    let mut b = IntMatrix::zero(pid.clone(), sys.n_equations, 1);
    for (i, _er, ec, eq_off) in &sys.equations {
        let fi = f.map_at(*i).map_ring(pid);
        for p in 0..fi.rows {
            for q in 0..fi.cols {
                b.set(eq_off + p * ec + q, 0, fi.at(p, q).clone());
            }
        }
    }
    b
}

/// Decides `f ≃ 0` and produces a verified witness on success. The `false`
/// answer is the exact infeasibility of the stacked homotopy system.
pub fn is_nullhomotopic(f: &ChainMap) -> Result<(bool, Option<Homotopy>)> {
    let ring = f.source.ring.clone();
    let (pid, modulus) = ring.covering_pid();
    let sys = homotopy_system(f);
    let a = homotopy_matrix(f, &sys, &pid);
    let b = flatten_maps(f, &sys, &pid);
    let a = match &modulus {
        Some(md) => a.hstack(&IntMatrix::scalar(pid.clone(), sys.n_equations, md)),
        None => a,
    };
    let Some(z) = solve(&a, &b)? else {
        return Ok((false, None));
    };
    let mut maps = BTreeMap::new();
    for (i, r, c, off) in &sys.unknowns {
        let mut s = IntMatrix::zero(ring.clone(), *r, *c);
        for p in 0..*r {
            for q in 0..*c {
                s.set(p, q, z.at(off + p * c + q, 0).clone());
            }
        }
        if !s.is_zero() {
            maps.insert(*i, s);
        }
    }
    let h = Homotopy { maps };
    assert!(h.verifies(f), "homotopy witness failed re-verification");
    Ok((true, Some(h)))
}

/// `Ann(f) = {a : a·f ≃ 0}`, computed by projecting the solution module of
/// the parametric system `a·f = ds + sd` onto the `a`-coordinate. Principal
/// in every catalog ring; the canonical generator is returned.
pub fn ann_map(f: &ChainMap) -> Result<Ideal> {
    let ring = f.source.ring.clone();
    let (pid, modulus) = ring.covering_pid();
    let sys = homotopy_system(f);
    let hs = homotopy_matrix(f, &sys, &pid).neg();
    let fv = flatten_maps(f, &sys, &pid);
    // columns: [a | s ... | congruence ...]
    let mut a = fv.hstack(&hs);
    if let Some(md) = &modulus {
        a = a.hstack(&IntMatrix::scalar(pid.clone(), sys.n_equations, md));
    }
    let ker = kernel_basis(&a)?;
    let mut g = pid.zero();
    for c in 0..ker.cols {
        g = pid.gcd(&g, ker.at(0, c));
    }
    Ok(Ideal::new(ring, g))
}

/// `Ann(X) = Ann(id_X)`.
pub fn ann_complex(x: &FreeComplex) -> Result<Ideal> {
    ann_map(&ChainMap::identity(x))
}

/// Quotient of a catalog ring by a principal ideal, when the quotient is
/// again a catalog ring (used for `f ⊗ R/(a)` on complexes of free
/// modules, where derived and plain tensor agree).
pub fn ring_quotient_by(ring: &Ring, a: &Elem) -> Result<Ring> {
    let a = ring.reduce(a.clone());
    let (pid, modulus) = ring.covering_pid();
    let g = match &modulus {
        Some(md) => pid.gcd(&a, md),
        None => pid.canonical_associate(&a),
    };
    match &pid {
        Ring::Integers => {
            let n: u64 = g
                .as_int()
                .try_into()
                .map_err(|_| Error::Parse("modulus too large".into()))?;
            if n < 2 {
                return Err(Error::UnsupportedRing(format!(
                    "quotient of {ring} by ({}) is not in the catalog",
                    ring.render_elem(&a)
                )));
            }
            Ok(Ring::IntegersMod(n))
        }
        Ring::PolyRing(p) => {
            let q = g.as_poly();
            if q.degree().map(|d| d >= 1).unwrap_or(false) {
                Ok(Ring::PolyQuotient(*p, q.clone()))
            } else {
                Err(Error::UnsupportedRing(format!(
                    "quotient of {ring} by ({}) is not in the catalog",
                    ring.render_elem(&a)
                )))
            }
        }
        _ => Err(Error::UnsupportedRing(ring.to_string())),
    }
}

/// Base change of a complex along `R → R/(a)` (plain reduction is exact
/// here because the terms are free).
pub fn reduce_complex_mod(x: &FreeComplex, quotient: &Ring) -> Result<FreeComplex> {
    let diffs = (x.lo() + 1..=x.hi())
        .map(|i| x.diff_at(i).map_ring(quotient))
        .collect();
    FreeComplex::new(
        quotient.clone(),
        x.lo(),
        (x.lo()..=x.hi()).map(|i| x.rank_at(i)).collect(),
        diffs,
    )
}

/// Base change of a chain map along `R → R/(a)`.
pub fn reduce_map_mod(f: &ChainMap, quotient: &Ring) -> Result<ChainMap> {
    let source = reduce_complex_mod(&f.source, quotient)?;
    let target = reduce_complex_mod(&f.target, quotient)?;
    let lo = source.lo().min(target.lo());
    let hi = source.hi().max(target.hi());
    let maps = (lo..=hi)
        .filter_map(|i| {
            let m = f.map_at(i).map_ring(quotient);
            (!m.is_zero()).then_some((i, m))
        })
        .collect();
    ChainMap::new(source, target, maps)
}

// ---------------------------------------------------------------------------
// file format
// ---------------------------------------------------------------------------

impl FreeComplex {
    /// Canonical, byte-stable text rendering:
    /// `ring <spec>`, then `deg <i> rank <r>` per degree ascending, then
    /// `d <i>` blocks with `r(i-1)` rows of `r(i)` entries.
    pub fn render(&self) -> String {
        let mut out = format!("ring {}\n", self.ring);
        for i in self.lo..=self.hi() {
            out.push_str(&format!("deg {} rank {}\n", i, self.rank_at(i)));
        }
        for i in self.lo + 1..=self.hi() {
            if self.rank_at(i) == 0 || self.rank_at(i - 1) == 0 {
                continue;
            }
            out.push_str(&format!("d {i}\n"));
            for line in self.diff_at(i).render_rows() {
                out.push_str(&line);
                out.push('\n');
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<FreeComplex> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let first = lines
            .next()
            .ok_or_else(|| Error::Parse("empty complex file".into()))?;
        let ring =
            Ring::parse(first.strip_prefix("ring ").ok_or_else(|| {
                Error::Parse("complex file must start with 'ring <spec>'".into())
            })?)?;
        let mut degs: BTreeMap<i64, usize> = BTreeMap::new();
        let mut dblocks: BTreeMap<i64, Vec<Vec<Elem>>> = BTreeMap::new();
        let mut current: Option<i64> = None;
        for line in lines {
            if let Some(rest) = line.strip_prefix("deg ") {
                let mut it = rest.split_whitespace();
                let i: i64 = it
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad deg line '{line}'")))?;
                let r: usize = match (it.next(), it.next()) {
                    (Some("rank"), Some(rs)) => rs
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad rank in '{line}'")))?,
                    _ => return Err(Error::Parse(format!("bad deg line '{line}'"))),
                };
                degs.insert(i, r);
                current = None;
            } else if let Some(rest) = line.strip_prefix("d ") {
                let i: i64 = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad d line '{line}'")))?;
                dblocks.insert(i, Vec::new());
                current = Some(i);
            } else if let Some(i) = current {
                let row: Vec<Elem> = line
                    .split_whitespace()
                    .map(|tok| ring.parse_elem(tok))
                    .collect::<Result<_>>()?;
                dblocks.get_mut(&i).unwrap().push(row);
            } else {
                return Err(Error::Parse(format!("unexpected line '{line}'")));
            }
        }
        if degs.is_empty() {
            return Ok(FreeComplex::zero(ring));
        }
        let lo = *degs.keys().next().unwrap();
        let hi = *degs.keys().last().unwrap();
        let ranks: Vec<usize> = (lo..=hi)
            .map(|i| degs.get(&i).copied().unwrap_or(0))
            .collect();
        let mut diffs = Vec::new();
        for i in lo + 1..=hi {
            let rows = ranks[(i - 1 - lo) as usize];
            let cols = ranks[(i - lo) as usize];
            let m = match dblocks.remove(&i) {
                Some(data) => {
                    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
                        return Err(Error::Parse(format!("d {i} has the wrong shape")));
                    }
                    IntMatrix::from_rows(ring.clone(), data)?
                }
                None => IntMatrix::zero(ring.clone(), rows, cols),
            };
            diffs.push(m);
        }
        FreeComplex::new(ring, lo, ranks, diffs)
    }
}

impl ChainMap {
    /// `ring <spec>`, a `source`/`target` pair of complex bodies, then
    /// `f <i>` blocks.
    pub fn render(&self) -> String {
        let ring_line = format!("ring {}\n", self.source.ring);
        let body = |x: &FreeComplex| {
            let full = x.render();
            full.strip_prefix(&ring_line)
                .map(str::to_string)
                .unwrap_or(full)
        };
        let mut out = ring_line.clone();
        out.push_str("source\n");
        out.push_str(&body(&self.source));
        out.push_str("target\n");
        out.push_str(&body(&self.target));
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        for i in lo..=hi {
            if self.source.rank_at(i) == 0 || self.target.rank_at(i) == 0 {
                continue;
            }
            out.push_str(&format!("f {i}\n"));
            for line in self.map_at(i).render_rows() {
                out.push_str(&line);
                out.push('\n');
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<ChainMap> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let first = lines
            .next()
            .ok_or_else(|| Error::Parse("empty map file".into()))?;
        let ring_spec = first
            .strip_prefix("ring ")
            .ok_or_else(|| Error::Parse("map file must start with 'ring <spec>'".into()))?;
        let ring = Ring::parse(ring_spec)?;
        #[derive(PartialEq)]
        enum Section {
            None,
            Source,
            Target,
            Maps,
        }
        let mut section = Section::None;
        let mut src_text = format!("ring {ring_spec}\n");
        let mut tgt_text = format!("ring {ring_spec}\n");
        let mut fblocks: BTreeMap<i64, Vec<Vec<Elem>>> = BTreeMap::new();
        let mut current: Option<i64> = None;
        for line in lines {
            match line {
                "source" => section = Section::Source,
                "target" => section = Section::Target,
                _ if line.starts_with("f ") => {
                    section = Section::Maps;
                    let i: i64 = line[2..]
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad f line '{line}'")))?;
                    fblocks.insert(i, Vec::new());
                    current = Some(i);
                }
                _ => match section {
                    Section::Source => {
                        src_text.push_str(line);
                        src_text.push('\n');
                    }
                    Section::Target => {
                        tgt_text.push_str(line);
                        tgt_text.push('\n');
                    }
                    Section::Maps => {
                        let i = current.ok_or_else(|| {
                            Error::Parse(format!("matrix row outside an f block: '{line}'"))
                        })?;
                        let row: Vec<Elem> = line
                            .split_whitespace()
                            .map(|tok| ring.parse_elem(tok))
                            .collect::<Result<_>>()?;
                        fblocks.get_mut(&i).unwrap().push(row);
                    }
                    Section::None => return Err(Error::Parse(format!("unexpected line '{line}'"))),
                },
            }
        }
        let source = FreeComplex::parse(&src_text)?;
        let target = FreeComplex::parse(&tgt_text)?;
        let mut maps = BTreeMap::new();
        for (i, data) in fblocks {
            let rows = target.rank_at(i);
            let cols = source.rank_at(i);
            if data.len() != rows || data.iter().any(|r| r.len() != cols) {
                return Err(Error::Parse(format!("f {i} has the wrong shape")));
            }
            let m = IntMatrix::from_rows(ring.clone(), data)?;
            maps.insert(i, m);
        }
        ChainMap::new(source, target, maps)
    }
}

impl fmt::Display for FreeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Convenience: the default budget.
pub fn default_budget() -> usize {
    DEFAULT_SIZE_BUDGET
}
