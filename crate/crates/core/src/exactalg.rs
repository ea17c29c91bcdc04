//! Exact rational linear algebra: dense matrices, reduced row echelon form,
//! kernels and repeated right-hand-side solves.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Sparse vector: strictly increasing indices with non-zero entries.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixQ {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        MatrixQ { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    /// Builds from columns of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(r, c, x.clone());
                }
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Rational) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(r, c);
                if !x.is_zero() {
                    t.set(c, r, x.clone());
                }
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &MatrixQ) -> MatrixQ {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let mut s = Rational::zero();
                for &i in &nz {
                    if !row[i].is_zero() {
                        s += &row[i] * &v[i];
                    }
                }
                s
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &MatrixQ) -> MatrixQ {
        assert_eq!(self.rows, other.rows, "row count mismatch in hstack");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        MatrixQ { rows: self.rows, cols, data }
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    fn into_rows(self) -> Vec<Vec<Rational>> {
        let cols = self.cols;
        if cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        let mut out = Vec::with_capacity(self.rows);
        let mut it = self.data.into_iter();
        for _ in 0..self.rows {
            out.push(it.by_ref().take(cols).collect());
        }
        out
    }
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    pub echelon: MatrixQ,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

fn reduce_rows(rows: &mut [Vec<Rational>], cols: usize, limit: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit.min(cols) {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        let mut nz = Vec::new();
        for j in c..cols {
            if !rows[r][j].is_zero() {
                if j != c {
                    rows[r][j] *= &inv;
                }
                nz.push(j);
            }
        }
        rows[r][c] = Rational::one();
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row.is_empty() || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] -= &f * &pivot_row[j];
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form with pivot columns and rank.
pub fn rref(m: &MatrixQ) -> Rref {
    let cols = m.cols;
    let mut rows = m.clone().into_rows();
    let pivots = reduce_rows(&mut rows, cols, cols);
    let rank = pivots.len();
    Rref { echelon: MatrixQ::from_rows(cols, rows), pivot_cols: pivots, rank }
}

/// Canonical kernel basis: one column per free variable, with that variable
/// set to 1 and the other free variables set to 0.
pub fn kernel_basis(m: &MatrixQ) -> MatrixQ {
    let red = rref(m);
    kernel_from_rref(&red, m.ncols())
}

fn kernel_from_rref(red: &Rref, ncols: usize) -> MatrixQ {
    let mut is_pivot = vec![false; ncols];
    for &p in &red.pivot_cols {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ncols).filter(|&c| !is_pivot[c]).collect();
    let mut k = MatrixQ::zeros(ncols, free.len());
    for (idx, &f) in free.iter().enumerate() {
        k.set(f, idx, Rational::one());
        for (r, &p) in red.pivot_cols.iter().enumerate() {
            let x = red.echelon.get(r, f);
            if !x.is_zero() {
                k.set(p, idx, -x.clone());
            }
        }
    }
    k
}

/// Canonical particular solution of `a x = b` with all free variables zero,
/// or `None` when the system is inconsistent.
pub fn solve(a: &MatrixQ, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.nrows(), b.len(), "right-hand side length mismatch");
    let aug = a.hstack(&MatrixQ::from_columns(b.len(), &[b.to_vec()]));
    let red = rref(&aug);
    let last = a.ncols();
    if red.pivot_cols.last() == Some(&last) {
        return None;
    }
    let mut x = vec![Rational::zero(); a.ncols()];
    for (r, &p) in red.pivot_cols.iter().enumerate() {
        x[p] = red.echelon.get(r, last).clone();
    }
    Some(x)
}

/// Column order used when choosing pivots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotOrder {
    #[default]
    Natural,
    /// Pivots are chosen scanning columns from last to first.
    Reversed,
}

/// Factorised `A` for solving `A x = b` for many right-hand sides.
///
/// Row-reduces `[A | I]` once; the right block is an invertible `E` with
/// `E A = rref(A)`.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    rows: usize,
    cols: usize,
    rank: usize,
    pivots: Vec<usize>,
    transform: Vec<SparseVec>,
    order: PivotOrder,
}

impl LinearSolver {
    pub fn new(a: &MatrixQ) -> Self {
        Self::with_order(a, PivotOrder::Natural)
    }

    pub fn with_order(a: &MatrixQ, order: PivotOrder) -> Self {
        let (m, n) = (a.nrows(), a.ncols());
        let mut rows: Vec<Vec<Rational>> = (0..m)
            .map(|r| {
                let mut row = Vec::with_capacity(n + m);
                match order {
                    PivotOrder::Natural => row.extend_from_slice(a.row(r)),
                    PivotOrder::Reversed => row.extend(a.row(r).iter().rev().cloned()),
                }
                row.extend((0..m).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        let pivots = reduce_rows(&mut rows, n + m, n);
        let rank = pivots.len();
        let transform = rows
            .iter()
            .map(|row| {
                row[n..]
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| (i, x.clone()))
                    .collect()
            })
            .collect();
        LinearSolver { rows: m, cols: n, rank, pivots, transform, order }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let dot = |row: &SparseVec| {
            let mut s = Rational::zero();
            for (i, x) in row {
                if !b[*i].is_zero() {
                    s += x * &b[*i];
                }
            }
            s
        };
        for r in self.rank..self.rows {
            if !dot(&self.transform[r]).is_zero() {
                return None;
            }
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &p) in self.pivots.iter().enumerate() {
            let col = match self.order {
                PivotOrder::Natural => p,
                PivotOrder::Reversed => self.cols - 1 - p,
            };
            x[col] = dot(&self.transform[r]);
        }
        Some(x)
    }
}

/// Growing subspace kept in echelon form; used for spanning computations.
#[derive(Clone, Debug, Default)]
pub struct IncrementalSpan {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl IncrementalSpan {
    pub fn new(dim: usize) -> Self {
        IncrementalSpan { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        v[j] -= &f * x;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns `true` if the span grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((p, w));
        true
    }

    /// Canonical basis of the span (rows of its reduced echelon form).
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        let m = MatrixQ::from_rows(self.dim, self.rows.iter().map(|(_, r)| r.clone()).collect());
        let red = rref(&m);
        (0..red.rank).map(|r| red.echelon.row(r).to_vec()).collect()
    }
}

pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn det(m: &MatrixQ) -> Rational {
        // Laplace expansion; oracle for small matrices only.
        let n = m.nrows();
        if n == 0 {
            return Rational::one();
        }
        let mut s = Rational::zero();
        for c in 0..n {
            let x = m.get(0, c);
            if x.is_zero() {
                continue;
            }
            let minor = MatrixQ::from_rows(
                n - 1,
                (1..n).map(|r| (0..n).filter(|&j| j != c).map(|j| m.get(r, j).clone()).collect()).collect(),
            );
            let term = x * det(&minor);
            if c % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        s
    }

    /// Rank as the largest non-vanishing minor.
    fn minor_rank(m: &MatrixQ) -> usize {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        for k in (1..=m.nrows().min(m.ncols())).rev() {
            for rs in subsets(m.nrows(), k) {
                for cs in subsets(m.ncols(), k) {
                    let sub = MatrixQ::from_rows(
                        k,
                        rs.iter().map(|&r| cs.iter().map(|&c| m.get(r, c).clone()).collect()).collect(),
                    );
                    if !det(&sub).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rref_known_matrix() {
        let m = MatrixQ::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let r = rref(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);
        assert_eq!(r.echelon, MatrixQ::from_i64(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]));
    }

    #[test]
    fn kernel_known_matrix() {
        let m = MatrixQ::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k, MatrixQ::from_i64(&[&[-1], &[-1], &[1]]));
    }

    #[test]
    fn solve_fractional_and_inconsistent() {
        let a = MatrixQ::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve(&a, &[q(1), q(1)]), Some(vec![qf(1, 2), qf(1, 3)]));
        let a = MatrixQ::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&a, &[q(1), q(2)]), None);
        assert_eq!(solve(&a, &[q(2), q(2)]), Some(vec![q(2), q(0)]));
    }

    #[test]
    fn reversed_solver_prefers_last_columns() {
        let a = MatrixQ::from_i64(&[&[1, 1]]);
        let nat = LinearSolver::new(&a).solve(&[q(5)]).unwrap();
        let rev = LinearSolver::with_order(&a, PivotOrder::Reversed).solve(&[q(5)]).unwrap();
        assert_eq!(nat, vec![q(5), q(0)]);
        assert_eq!(rev, vec![q(0), q(5)]);
    }

    #[test]
    fn empty_shapes() {
        let a = MatrixQ::zeros(0, 3);
        assert_eq!(kernel_basis(&a).ncols(), 3);
        let a = MatrixQ::zeros(2, 0);
        assert_eq!(LinearSolver::new(&a).solve(&[q(0), q(0)]), Some(vec![]));
        assert_eq!(LinearSolver::new(&a).solve(&[q(1), q(0)]), None);
    }

    #[test]
    fn incremental_span_basis_is_canonical() {
        let mut s = IncrementalSpan::new(3);
        assert!(s.insert(&[q(0), q(2), q(2)]));
        assert!(s.insert(&[q(1), q(1), q(1)]));
        assert!(!s.insert(&[q(1), q(3), q(3)]));
        assert_eq!(s.basis(), vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(1)]]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    fn small_matrix() -> impl Strategy<Value = MatrixQ> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                MatrixQ::from_rows(c, v.chunks(c).map(|ch| ch.iter().map(|&x| q(x)).collect()).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn rank_matches_minor_oracle(m in small_matrix()) {
            prop_assert_eq!(rref(&m).rank, minor_rank(&m));
        }

        #[test]
        fn kernel_is_annihilated_and_full(m in small_matrix()) {
            let k = kernel_basis(&m);
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.ncols() + rref(&m).rank, m.ncols());
            prop_assert_eq!(k.rank(), k.ncols());
        }

        #[test]
        fn solver_agrees_with_direct_solve(m in small_matrix(), seed in prop::collection::vec(-2i64..=2, 5)) {
            let x0: Vec<Rational> = (0..m.ncols()).map(|i| q(seed[i])).collect();
            let b = m.mul_vec(&x0);
            for order in [PivotOrder::Natural, PivotOrder::Reversed] {
                let x = LinearSolver::with_order(&m, order).solve(&b).unwrap();
                prop_assert_eq!(m.mul_vec(&x), b.clone());
            }
            prop_assert_eq!(LinearSolver::new(&m).solve(&b), solve(&m, &b));
        }

        #[test]
        fn transpose_preserves_rank(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }
    }
}
