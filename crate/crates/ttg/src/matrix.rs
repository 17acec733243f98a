//! Exact matrices over the catalog rings and Smith normal form with
//! unimodular transforms.
//!
//! The normal form runs over the euclidean PIDs (`Z`, `GF(p)[t]`, fields).
//! Matrices over the artinian quotients lift to the covering PID, get
//! reduced there, and reduce back; congruence conditions are handled by the
//! callers stacking modulus blocks onto their systems. DVR matrices never
//! materialize.

use crate::error::{Error, Result};
use crate::rings::{Elem, Ring};
use num_traits::Signed;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub ring: Ring,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Elem>, // row-major
}

impl IntMatrix {
    pub fn zero(ring: Ring, rows: usize, cols: usize) -> Self {
        let z = ring.zero();
        IntMatrix {
            ring,
            rows,
            cols,
            entries: vec![z; rows * cols],
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Self::zero(ring.clone(), n, n);
        let one = ring.one();
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }

    /// n×n scalar matrix `c·I`.
    pub fn scalar(ring: Ring, n: usize, c: &Elem) -> Self {
        let mut m = Self::zero(ring.clone(), n, n);
        let c = ring.reduce(c.clone());
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        if rows.iter().any(|v| v.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let entries = rows.into_iter().flatten().map(|e| ring.reduce(e)).collect();
        Ok(IntMatrix {
            ring,
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn from_i64_rows(ring: &Ring, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| ring.from_i64(v)).collect())
            .collect();
        Self::from_rows(ring.clone(), data).unwrap()
    }

    pub fn at(&self, r: usize, c: usize) -> &Elem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: Elem) {
        self.entries[r * self.cols + c] = self.ring.reduce(e);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zero(self.ring.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let ring = &self.ring;
        let mut out = IntMatrix::zero(ring.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if ring.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let v = ring.add(out.at(r, c), &ring.mul(a, b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        let mut out = self.clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.ring.add(self.at(r, c), other.at(r, c)));
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = self.ring.neg(e);
        }
        out
    }

    pub fn scalar_mul(&self, c: &Elem) -> IntMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = self.ring.mul(e, c);
        }
        out
    }

    /// Side-by-side concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = IntMatrix::zero(self.ring.clone(), self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.at(r, c).clone());
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut out = IntMatrix::zero(self.ring.clone(), self.rows + other.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..self.cols {
                out.set(self.rows + r, c, other.at(r, c).clone());
            }
        }
        out
    }

    /// The first `n` rows of `self`.
    pub fn take_rows(&self, n: usize) -> IntMatrix {
        let mut out = IntMatrix::zero(self.ring.clone(), n, self.cols);
        for r in 0..n {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
        }
        out
    }

    /// Columns `sel` of `self`, in order.
    pub fn select_cols(&self, sel: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zero(self.ring.clone(), self.rows, sel.len());
        for r in 0..self.rows {
            for (k, &c) in sel.iter().enumerate() {
                out.set(r, k, self.at(r, c).clone());
            }
        }
        out
    }

    /// Reinterprets the entries in `target` (used to reduce a lift back to
    /// a quotient, or to push a quotient matrix to its covering PID).
    pub fn map_ring(&self, target: &Ring) -> IntMatrix {
        let mut out = IntMatrix::zero(target.clone(), self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
        }
        out
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_dst += c * row_src
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &Elem) {
        for k in 0..self.cols {
            let v = self
                .ring
                .add(self.at(dst, k), &self.ring.mul(c, self.at(src, k)));
            self.set(dst, k, v);
        }
    }

    /// col_dst += c * col_src
    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &Elem) {
        for k in 0..self.rows {
            let v = self
                .ring
                .add(self.at(k, dst), &self.ring.mul(c, self.at(k, src)));
            self.set(k, dst, v);
        }
    }

    fn scale_row(&mut self, i: usize, c: &Elem) {
        for k in 0..self.cols {
            let v = self.ring.mul(self.at(i, k), c);
            self.set(i, k, v);
        }
    }
}

impl IntMatrix {
    pub fn render_rows(&self) -> Vec<String> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.ring.render_elem(self.at(r, c)))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.render_rows() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

/// `left · a · right = diag`, with `left`/`right` products of elementary
/// matrices (hence invertible) and `diag` canonical with `d_i | d_{i+1}`.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub diag: Vec<Elem>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithNormalForm {
    pub fn diag_matrix(&self, ring: &Ring, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zero(ring.clone(), rows, cols);
        for (i, e) in self.diag.iter().enumerate() {
            d.set(i, i, e.clone());
        }
        d
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self, ring: &Ring) -> usize {
        self.diag.iter().filter(|e| !ring.is_zero(e)).count()
    }
}

/// Pivoting norm: absolute value over `Z`, degree over `GF(p)[t]`,
/// constant over a field.
fn norm_less(ring: &Ring, a: &Elem, b: &Elem) -> bool {
    match ring {
        Ring::Integers => a.as_int().abs() < b.as_int().abs(),
        Ring::PolyRing(_) => a.as_poly().degree() < b.as_poly().degree(),
        Ring::PrimeField(_) => false,
        _ => unreachable!("SNF pivoting over {ring}"),
    }
}

/// Smith normal form over the catalog rings with element arithmetic.
/// Quotient rings lift to the covering PID and reduce back.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SmithNormalForm> {
    match &a.ring {
        Ring::Integers | Ring::PolyRing(_) | Ring::PrimeField(_) => snf_pid(a),
        Ring::IntegersMod(_) | Ring::PolyQuotient(_, _) => {
            let (pid, _) = a.ring.covering_pid();
            let lifted = a.map_ring(&pid);
            let snf = snf_pid(&lifted)?;
            Ok(SmithNormalForm {
                diag: snf.diag.into_iter().map(|e| a.ring.reduce(e)).collect(),
                left: snf.left.map_ring(&a.ring),
                right: snf.right.map_ring(&a.ring),
            })
        }
        Ring::Dvr => Err(Error::UnsupportedRing(
            "DVR matrices never materialize".into(),
        )),
    }
}

fn snf_pid(a: &IntMatrix) -> Result<SmithNormalForm> {
    let ring = a.ring.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut b = a.clone();
    let mut u = IntMatrix::identity(ring.clone(), rows);
    let mut v = IntMatrix::identity(ring.clone(), cols);
    let m = rows.min(cols);

    for k in 0..m {
        // locate a minimal-norm nonzero pivot in the trailing block
        let find_pivot = |b: &IntMatrix| -> Option<(usize, usize)> {
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if ring.is_zero(b.at(i, j)) {
                        continue;
                    }
                    best = match best {
                        None => Some((i, j)),
                        Some((bi, bj)) => {
                            if norm_less(&ring, b.at(i, j), b.at(bi, bj)) {
                                Some((i, j))
                            } else {
                                Some((bi, bj))
                            }
                        }
                    };
                }
            }
            best
        };

        let Some((pi, pj)) = find_pivot(&b) else {
            break; // trailing block is zero
        };
        b.swap_rows(k, pi);
        u.swap_rows(k, pi);
        b.swap_cols(k, pj);
        v.swap_cols(k, pj);

        loop {
            // clear column k with row operations
            let mut clean = true;
            for i in k + 1..rows {
                if ring.is_zero(b.at(i, k)) {
                    continue;
                }
                let (q, r) = ring.div_rem(b.at(i, k), b.at(k, k));
                let nq = ring.neg(&q);
                b.add_row_multiple(i, k, &nq);
                u.add_row_multiple(i, k, &nq);
                if !ring.is_zero(&r) {
                    clean = false;
                }
            }
            if !clean {
                // a remainder survived; promote the smallest entry of
                // column k and start over
                let mut bi = k;
                for i in k + 1..rows {
                    if ring.is_zero(b.at(i, k)) {
                        continue;
                    }
                    if ring.is_zero(b.at(bi, k)) || norm_less(&ring, b.at(i, k), b.at(bi, k)) {
                        bi = i;
                    }
                }
                b.swap_rows(k, bi);
                u.swap_rows(k, bi);
                continue;
            }
            // clear row k with column operations
            let mut clean = true;
            for j in k + 1..cols {
                if ring.is_zero(b.at(k, j)) {
                    continue;
                }
                let (q, r) = ring.div_rem(b.at(k, j), b.at(k, k));
                let nq = ring.neg(&q);
                b.add_col_multiple(j, k, &nq);
                v.add_col_multiple(j, k, &nq);
                if !ring.is_zero(&r) {
                    clean = false;
                }
            }
            if !clean {
                let mut bj = k;
                for j in k + 1..cols {
                    if ring.is_zero(b.at(k, j)) {
                        continue;
                    }
                    if ring.is_zero(b.at(k, bj)) || norm_less(&ring, b.at(k, j), b.at(k, bj)) {
                        bj = j;
                    }
                }
                b.swap_cols(k, bj);
                v.swap_cols(k, bj);
                continue;
            }
            // column clearing may have disturbed row k only at (k, k); row
            // clearing leaves column k intact. Re-check both are zero.
            let col_ok = (k + 1..rows).all(|i| ring.is_zero(b.at(i, k)));
            let row_ok = (k + 1..cols).all(|j| ring.is_zero(b.at(k, j)));
            if !(col_ok && row_ok) {
                continue;
            }
            // divisibility sweep: the pivot must divide the trailing block
            let mut bad = None;
            'outer: for i in k + 1..rows {
                for j in k + 1..cols {
                    if ring.exact_div(b.at(i, j), b.at(k, k)).is_none() {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let one = ring.one();
                    b.add_row_multiple(k, i, &one);
                    u.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }

        // canonicalize the pivot by a unit row scaling
        let pivot = b.at(k, k).clone();
        if ring.canonical_associate(&pivot) != pivot {
            let unit = ring.unit_to_canonical(&pivot);
            b.scale_row(k, &unit);
            u.scale_row(k, &unit);
        }
    }

    let diag = (0..m).map(|i| b.at(i, i).clone()).collect();
    Ok(SmithNormalForm {
        diag,
        left: u,
        right: v,
    })
}

/// Basis of `ker(a)` as matrix columns, over the PID rings.
pub fn kernel_basis(a: &IntMatrix) -> Result<IntMatrix> {
    let snf = snf_pid(a)?;
    let m = a.rows.min(a.cols);
    let sel: Vec<usize> = (0..a.cols)
        .filter(|&j| j >= m || a.ring.is_zero(&snf.diag[j]))
        .collect();
    Ok(snf.right.select_cols(&sel))
}

/// Solves `a · x = rhs` exactly over the PID rings (`rhs` may have several
/// columns); `None` when no solution exists.
pub fn solve(a: &IntMatrix, rhs: &IntMatrix) -> Result<Option<IntMatrix>> {
    assert_eq!(a.rows, rhs.rows, "rhs height mismatch");
    let ring = &a.ring;
    let snf = snf_pid(a)?;
    let c = snf.left.mul(rhs);
    let m = a.rows.min(a.cols);
    let mut y = IntMatrix::zero(ring.clone(), a.cols, rhs.cols);
    for i in 0..a.rows {
        for t in 0..rhs.cols {
            let ci = c.at(i, t);
            if i < m && !ring.is_zero(&snf.diag[i]) {
                match ring.exact_div(ci, &snf.diag[i]) {
                    Some(q) => y.set(i, t, q),
                    None => return Ok(None),
                }
            } else if !ring.is_zero(ci) {
                return Ok(None);
            }
        }
    }
    Ok(Some(snf.right.mul(&y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Ring;

    fn check_snf(a: &IntMatrix) {
        let snf = smith_normal_form(a).unwrap();
        let d = snf.diag_matrix(&a.ring, a.rows, a.cols);
        assert_eq!(snf.left.mul(a).mul(&snf.right), d, "U·A·V = D fails");
        // divisibility chain
        for w in snf.diag.windows(2) {
            if !a.ring.is_zero(&w[0]) {
                if a.ring.is_zero(&w[1]) {
                    continue;
                }
                let (pid, _) = a.ring.covering_pid();
                assert!(
                    pid.exact_div(&w[1], &w[0]).is_some(),
                    "divisibility fails: {:?} | {:?}",
                    w[0],
                    w[1]
                );
            } else {
                assert!(a.ring.is_zero(&w[1]), "zero before nonzero in diag");
            }
        }
        // transforms are unimodular: their SNF diagonals are all units
        for t in [&snf.left, &snf.right] {
            if t.ring == Ring::Dvr {
                continue;
            }
            let (pid, _) = t.ring.covering_pid();
            let lifted = t.map_ring(&pid);
            let s = smith_normal_form(&lifted).unwrap();
            // over a quotient the lift of an invertible matrix need not be
            // invertible over the PID, so only check the PID rings directly
            if t.ring == pid {
                assert!(
                    s.diag.iter().all(|e| pid.is_unit(e)),
                    "transform not unimodular"
                );
            }
        }
    }

    #[test]
    fn snf_diagonal_example() {
        let a = IntMatrix::from_i64_rows(&Ring::Integers, &[&[2, 0], &[0, 3]]);
        let snf = smith_normal_form(&a).unwrap();
        assert_eq!(snf.diag, vec![Elem::int(1), Elem::int(6)]);
        check_snf(&a);
    }

    #[test]
    fn snf_gcd_row() {
        let a = IntMatrix::from_i64_rows(&Ring::Integers, &[&[4, 6]]);
        let snf = smith_normal_form(&a).unwrap();
        assert_eq!(snf.diag, vec![Elem::int(2)]);
        check_snf(&a);
    }

    #[test]
    fn snf_zero_matrix() {
        let a = IntMatrix::zero(Ring::Integers, 2, 3);
        let snf = smith_normal_form(&a).unwrap();
        assert_eq!(snf.diag, vec![Elem::int(0), Elem::int(0)]);
        check_snf(&a);
    }

    #[test]
    fn snf_known_4x4() {
        let a = IntMatrix::from_i64_rows(
            &Ring::Integers,
            &[
                &[-6, 111, -36, 6],
                &[5, -672, 210, 74],
                &[0, -255, 81, 24],
                &[-7, 255, -81, -10],
            ],
        );
        let snf = smith_normal_form(&a).unwrap();
        assert_eq!(
            snf.diag,
            vec![Elem::int(1), Elem::int(3), Elem::int(21), Elem::int(0)]
        );
        check_snf(&a);
    }

    #[test]
    fn snf_over_f2_t() {
        let r = Ring::PolyRing(2);
        let t = r.parse_elem("t").unwrap();
        let t1 = r.parse_elem("t+1").unwrap();
        let a = IntMatrix::from_rows(
            r.clone(),
            vec![vec![t.clone(), r.zero()], vec![r.zero(), t1.clone()]],
        )
        .unwrap();
        let snf = smith_normal_form(&a).unwrap();
        assert_eq!(
            snf.diag
                .iter()
                .map(|e| r.render_elem(e))
                .collect::<Vec<_>>(),
            vec!["1", "t^2+t"]
        );
        check_snf(&a);
    }

    #[test]
    fn snf_over_quotient_reduces() {
        let r = Ring::parse("Z/12").unwrap();
        let a = IntMatrix::from_i64_rows(&r, &[&[4, 6], &[0, 12]]);
        let snf = smith_normal_form(&a).unwrap();
        let d = snf.diag_matrix(&r, 2, 2);
        assert_eq!(snf.left.mul(&a).mul(&snf.right), d);
    }

    #[test]
    fn kernel_and_solve() {
        let a = IntMatrix::from_i64_rows(&Ring::Integers, &[&[2, 4]]);
        let k = kernel_basis(&a).unwrap();
        assert_eq!(k.cols, 1);
        assert!(a.mul(&k).is_zero());

        let rhs = IntMatrix::from_i64_rows(&Ring::Integers, &[&[6]]);
        let x = solve(&a, &rhs).unwrap().unwrap();
        assert_eq!(a.mul(&x), rhs);

        let rhs_bad = IntMatrix::from_i64_rows(&Ring::Integers, &[&[3]]);
        assert!(solve(&a, &rhs_bad).unwrap().is_none());
    }
}
