//! Minimal graded free resolutions of the residue field over a truncated quotient.
//!
//! `F_i` is free on homogeneous generators. Its degree-`j` part has the basis
//! `m * g` for generators `g` (in order) and standard monomials `m` of degree
//! `j - deg g`; that is the coordinate system of every slice below.

use crate::error::{Error, Result};
use crate::exactalg::{kernel_basis, rref, LinearSolver, MatrixQ, PivotOrder, Rational};
use crate::gradedquot::GradedQuotient;
use num_traits::Zero;
use serde::Serialize;
use std::ops::Range;
use std::sync::Arc;

pub const DEFAULT_MAX_LEVEL: usize = 6;
pub const DEFAULT_MAX_DEGREE: u32 = 12;

/// Free generator of `F_i`; `boundary` lives in `(F_{i-1})_{degree}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub degree: u32,
    pub boundary: Vec<Rational>,
    pub name: Option<String>,
}

#[derive(Clone, Debug)]
struct SliceLayout {
    offsets: Vec<usize>,
    dim: usize,
}

#[derive(Clone, Debug)]
pub struct FreeResolution {
    quotient: Arc<GradedQuotient>,
    levels: Vec<Vec<Generator>>,
    layouts: Vec<Vec<SliceLayout>>,
    differentials: Vec<Vec<MatrixQ>>,
    max_degree: u32,
    complete_rows: Vec<bool>,
}

fn layout(q: &GradedQuotient, gens: &[Generator], j: u32) -> SliceLayout {
    let mut offsets = Vec::with_capacity(gens.len());
    let mut dim = 0;
    for g in gens {
        offsets.push(dim);
        if g.degree <= j {
            dim += q.dim(j - g.degree);
        }
    }
    SliceLayout { offsets, dim }
}

impl FreeResolution {
    pub fn quotient(&self) -> &Arc<GradedQuotient> {
        &self.quotient
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn generators(&self, i: usize) -> &[Generator] {
        &self.levels[i]
    }

    /// `dim (F_i)_j`.
    pub fn slice_dim(&self, i: usize, j: u32) -> usize {
        self.layouts[i][j as usize].dim
    }

    /// Coordinates of the block `R_{j - deg g} * g` inside `(F_i)_j`.
    pub fn block(&self, i: usize, j: u32, g: usize) -> Range<usize> {
        let gen = &self.levels[i][g];
        let start = self.layouts[i][j as usize].offsets[g];
        let len = if gen.degree <= j { self.quotient.dim(j - gen.degree) } else { 0 };
        start..start + len
    }

    /// Matrix of `∂_i : (F_i)_j -> (F_{i-1})_j`, for `1 <= i`.
    pub fn differential(&self, i: usize, j: u32) -> &MatrixQ {
        &self.differentials[i][j as usize]
    }

    pub fn solver(&self, i: usize, j: u32, order: PivotOrder) -> LinearSolver {
        LinearSolver::with_order(self.differential(i, j), order)
    }

    /// `β_{i,j}`: generators of `F_i` in internal degree `j`.
    pub fn beta(&self, i: usize, j: u32) -> usize {
        self.levels.get(i).map_or(0, |l| l.iter().filter(|g| g.degree == j).count())
    }

    pub fn total_beta(&self, i: usize) -> usize {
        self.levels.get(i).map_or(0, |l| l.len())
    }

    /// Whether row `i` of the Betti table is known to be complete, i.e. no
    /// generators of `F_i` live above the truncation degree.
    pub fn row_complete(&self, i: usize) -> bool {
        self.complete_rows.get(i).copied().unwrap_or(false)
    }

    /// Adds `coeff * m * x` to `out`, where `x ∈ (F_i)_e`, `m` is standard
    /// monomial `k` of degree `s`, and `out ∈ (F_i)_{e+s}`.
    pub fn add_monomial_multiple(
        &self,
        i: usize,
        x: &[Rational],
        e: u32,
        s: u32,
        k: usize,
        coeff: &Rational,
        out: &mut [Rational],
    ) {
        let q = &self.quotient;
        for (h, gen) in self.levels[i].iter().enumerate() {
            if gen.degree > e {
                continue;
            }
            let src = self.block(i, e, h);
            let dst = self.block(i, e + s, h).start;
            for (v, c) in x[src].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let cc = c * coeff;
                for (t, y) in q.multiply_basis(s, k, e - gen.degree, v) {
                    out[dst + t] += &cc * y;
                }
            }
        }
    }

    /// Product `r * x` for `r ∈ R_s` and `x ∈ (F_i)_e`.
    pub fn scale_element(&self, i: usize, x: &[Rational], e: u32, r: &[Rational], s: u32) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.slice_dim(i, e + s)];
        for (k, c) in r.iter().enumerate() {
            if !c.is_zero() {
                self.add_monomial_multiple(i, x, e, s, k, c, &mut out);
            }
        }
        out
    }

    /// Coefficients of `x ∈ (F_i)_j` on the generators of degree exactly `j`,
    /// i.e. its image in `F_i / m F_i`, indexed by generator.
    pub fn constant_part(&self, i: usize, j: u32, x: &[Rational]) -> Vec<(usize, Rational)> {
        self.levels[i]
            .iter()
            .enumerate()
            .filter(|(_, g)| g.degree == j)
            .map(|(h, _)| (h, x[self.block(i, j, h).start].clone()))
            .collect()
    }

    fn differential_slice(&self, i: usize, j: u32) -> MatrixQ {
        let q = &self.quotient;
        let rows = self.slice_dim(i - 1, j);
        let mut cols = Vec::with_capacity(self.slice_dim(i, j));
        for g in &self.levels[i] {
            if g.degree > j {
                continue;
            }
            let s = j - g.degree;
            for k in 0..q.dim(s) {
                let mut col = vec![Rational::zero(); rows];
                self.add_monomial_multiple(i - 1, &g.boundary, g.degree, s, k, &Rational::from_integer(1.into()), &mut col);
                cols.push(col);
            }
        }
        MatrixQ::from_columns(rows, &cols)
    }

    pub(crate) fn push_level(&mut self, gens: Vec<Generator>) {
        let q = self.quotient.clone();
        let lay = (0..=self.max_degree).map(|j| layout(&q, &gens, j)).collect();
        self.levels.push(gens);
        self.layouts.push(lay);
        let i = self.levels.len() - 1;
        let diffs = (0..=self.max_degree).map(|j| self.differential_slice(i, j)).collect();
        self.differentials.push(diffs);
    }

    fn start(quotient: Arc<GradedQuotient>, max_degree: u32) -> Self {
        let f0 = vec![Generator { degree: 0, boundary: Vec::new(), name: None }];
        let lay = (0..=max_degree).map(|j| layout(&quotient, &f0, j)).collect();
        FreeResolution {
            quotient,
            levels: vec![f0],
            layouts: vec![lay],
            differentials: vec![Vec::new()],
            max_degree,
            complete_rows: Vec::new(),
        }
    }

    /// Assembles a resolution from explicit generators of `F_1, F_2, ...`
    /// (with `F_0 = R`); no minimality or exactness is assumed.
    pub fn from_parts(quotient: Arc<GradedQuotient>, levels: Vec<Vec<Generator>>, max_degree: u32) -> Result<Self> {
        if max_degree > quotient.truncation() {
            return Err(Error::InvalidBounds(format!(
                "degree bound {max_degree} exceeds quotient truncation {}",
                quotient.truncation()
            )));
        }
        let mut res = Self::start(quotient, max_degree);
        for (idx, gens) in levels.into_iter().enumerate() {
            let i = idx + 1;
            if gens.windows(2).any(|w| w[0].degree > w[1].degree) {
                return Err(Error::InvalidBounds(format!("generators of F_{i} are not sorted by degree")));
            }
            for g in &gens {
                if g.degree > max_degree {
                    return Err(Error::InvalidBounds(format!("generator of F_{i} above degree bound")));
                }
                if g.boundary.len() != res.slice_dim(i - 1, g.degree) {
                    return Err(Error::InvalidBounds(format!("boundary of a generator of F_{i} has wrong length")));
                }
            }
            res.push_level(gens);
        }
        res.complete_rows = res.compute_certification();
        Ok(res)
    }

    pub(crate) fn finalize(&mut self) {
        self.complete_rows = self.compute_certification();
    }

    fn compute_certification(&self) -> Vec<bool> {
        let q = &self.quotient;
        let d = self.max_degree;
        let p = self.max_level();
        let mut out = vec![true];
        if q.is_polynomial_ring() {
            let mut w: Vec<u32> = q.ring().weights().to_vec();
            w.sort_unstable_by(|a, b| b.cmp(a));
            for i in 1..=p {
                let top: u32 = w.iter().take(i).sum();
                out.push(top <= d);
            }
        } else if let Some(s) = q.socle_degree().filter(|&s| s <= d) {
            for i in 1..=p {
                let prev = self.levels[i - 1].iter().map(|g| g.degree).max().unwrap_or(0);
                out.push(out[i - 1] && prev + s <= d);
            }
        } else {
            let wmax = q.ring().weights().iter().copied().max().unwrap_or(0);
            for i in 1..=p {
                out.push(i == 1 && wmax <= d);
            }
        }
        out
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut entries = Vec::new();
        let mut rows = Vec::new();
        for i in 0..=self.max_level() {
            for j in 0..=self.max_degree {
                let beta = self.beta(i, j);
                if beta > 0 {
                    entries.push(BettiEntry { i, j, beta, certified: true });
                }
            }
            rows.push(BettiRow { i, total: self.total_beta(i), complete: self.row_complete(i) });
        }
        BettiTable { max_level: self.max_level(), max_degree: self.max_degree, entries, rows }
    }

    /// `Σ β_i t^i` with per-coefficient completeness.
    pub fn poincare_series(&self) -> PoincareSeries {
        PoincareSeries {
            coefficients: (0..=self.max_level()).map(|i| self.total_beta(i)).collect(),
            complete: (0..=self.max_level()).map(|i| self.row_complete(i)).collect(),
        }
    }

    /// Checks `∂∂ = 0`, exactness of `F_P -> ... -> F_0 -> k` below `P`, and
    /// minimality of every differential.
    pub fn verify(&self) -> VerificationReport {
        let q = &self.quotient;
        let p = self.max_level();
        let mut violations = Vec::new();
        for i in 2..=p {
            for j in 0..=self.max_degree {
                if !self.differential(i - 1, j).mul(self.differential(i, j)).is_zero() {
                    violations.push(Violation { kind: ViolationKind::Composition, level: i, degree: j });
                }
            }
        }
        for i in 0..p {
            for j in 0..=self.max_degree {
                let ok = if i == 0 {
                    let expected = if j == 0 { 0 } else { q.dim(j) };
                    rref(self.differential(1, j)).rank == expected
                } else {
                    rref(self.differential(i, j)).rank + rref(self.differential(i + 1, j)).rank == self.slice_dim(i, j)
                };
                if !ok {
                    violations.push(Violation { kind: ViolationKind::Exactness, level: i, degree: j });
                }
            }
        }
        for i in 1..=p {
            for g in &self.levels[i] {
                let constant = self.constant_part(i - 1, g.degree, &g.boundary);
                if constant.iter().any(|(_, c)| !c.is_zero()) {
                    violations.push(Violation { kind: ViolationKind::Minimality, level: i, degree: g.degree });
                }
            }
        }
        VerificationReport { violations }
    }
}

/// Minimal free resolution of `k` over `q`, through homological degree
/// `max_level` and internal degree `max_degree`.
pub fn minimal_resolution(q: Arc<GradedQuotient>, max_level: usize, max_degree: u32) -> Result<FreeResolution> {
    if max_level < 1 {
        return Err(Error::InvalidBounds("homological bound must be at least 1".into()));
    }
    if max_degree > q.truncation() {
        return Err(Error::InvalidBounds(format!(
            "degree bound {max_degree} exceeds quotient truncation {}",
            q.truncation()
        )));
    }
    let mut res = FreeResolution::start(q.clone(), max_degree);
    for i in 1..=max_level {
        let mut gens: Vec<Generator> = Vec::new();
        for j in 0..=max_degree {
            let target_dim = res.slice_dim(i - 1, j);
            let kernel = if i == 1 {
                if j == 0 {
                    MatrixQ::zeros(target_dim, 0)
                } else {
                    MatrixQ::identity(target_dim)
                }
            } else {
                kernel_basis(res.differential(i - 1, j))
            };
            if kernel.ncols() == 0 {
                continue;
            }
            let mut old_cols = Vec::new();
            for g in &gens {
                let s = j - g.degree;
                for k in 0..q.dim(s) {
                    let mut col = vec![Rational::zero(); target_dim];
                    res.add_monomial_multiple(i - 1, &g.boundary, g.degree, s, k, &Rational::from_integer(1.into()), &mut col);
                    old_cols.push(col);
                }
            }
            let n_old = old_cols.len();
            let combined = MatrixQ::from_columns(target_dim, &old_cols).hstack(&kernel);
            let red = rref(&combined);
            for &p in red.pivot_cols.iter().filter(|&&p| p >= n_old) {
                gens.push(Generator { degree: j, boundary: kernel.column(p - n_old), name: None });
            }
        }
        res.push_level(gens);
    }
    res.complete_rows = res.compute_certification();
    Ok(res)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub beta: usize,
    /// The value is exact: the truncation covers internal degree `j`.
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRow {
    pub i: usize,
    pub total: usize,
    /// No generators of `F_i` lie beyond the truncation degree.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub max_level: usize,
    pub max_degree: u32,
    pub entries: Vec<BettiEntry>,
    pub rows: Vec<BettiRow>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.iter().find(|e| e.i == i && e.j == j).map_or(0, |e| e.beta)
    }

    pub fn totals(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.total).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareSeries {
    pub coefficients: Vec<usize>,
    pub complete: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Composition,
    Exactness,
    Minimality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub level: usize,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::polyring::{Polynomial, RingSpec};

    fn quot(vars: &[(&str, u32)], gens: &[&str], d: u32) -> Arc<GradedQuotient> {
        let r = RingSpec::new(vars.iter().map(|&(n, w)| (n, w))).unwrap();
        let g = gens.iter().map(|s| Polynomial::parse(&r, s).unwrap()).collect();
        Arc::new(GradedQuotient::new(&r, g, d).unwrap())
    }

    #[test]
    fn dual_numbers_are_periodic() {
        let res = minimal_resolution(quot(&[("x", 1)], &["x^2"], 8), 6, 8).unwrap();
        for i in 0..=6 {
            assert_eq!(res.total_beta(i), 1);
            assert_eq!(res.beta(i, i as u32), 1);
        }
        assert!(res.verify().is_ok());
        assert!((0..=6).all(|i| res.row_complete(i)));
    }

    #[test]
    fn polynomial_ring_gives_koszul() {
        let res = minimal_resolution(quot(&[("x", 1), ("y", 1), ("z", 1)], &[], 5), 4, 5).unwrap();
        assert_eq!(res.poincare_series().coefficients, [1, 3, 3, 1, 0]);
        assert!(res.verify().is_ok());
        assert!(res.row_complete(3) && res.row_complete(4));
    }

    #[test]
    fn x2_y2_betti() {
        // (1 + t)^2 / (1 - t^2)^2 = 1 + 2t + 3t^2 + 4t^3 + ...
        let res = minimal_resolution(quot(&[("x", 1), ("y", 1)], &["x^2", "y^2"], 10), 5, 10).unwrap();
        assert_eq!(res.poincare_series().coefficients, [1, 2, 3, 4, 5, 6]);
        assert!(res.verify().is_ok());
    }

    #[test]
    fn weighted_truncated_rows_are_incomplete() {
        // Q[x]/(x^3), |x| = 2: F_i lives in degrees 0, 2, 6, 8, 12, ...
        let res = minimal_resolution(quot(&[("x", 2)], &["x^3"], 10), 4, 10).unwrap();
        assert_eq!(res.beta(2, 6), 1);
        assert_eq!(res.beta(3, 8), 1);
        assert_eq!(res.total_beta(4), 0);
        assert!(res.row_complete(3));
        assert!(!res.row_complete(4));
    }

    #[test]
    fn padded_resolution_is_not_minimal() {
        // Q[x]/(x^2) with an extra cancelling pair R(-1) -> R(-1) spliced into F_1, F_2.
        let qt = quot(&[("x", 1)], &["x^2"], 4);
        let f1 = vec![
            Generator { degree: 1, boundary: vec![q(1)], name: None },
            Generator { degree: 1, boundary: vec![q(0)], name: Some("pad".into()) },
        ];
        // (F_1)_1 = <g1, g2> in coordinates (g1, g2).
        let f2 = vec![
            Generator { degree: 1, boundary: vec![q(0), q(1)], name: Some("pad".into()) },
            Generator { degree: 2, boundary: vec![q(1), q(0)], name: None },
        ];
        let res = FreeResolution::from_parts(qt, vec![f1, f2], 4).unwrap();
        let report = res.verify();
        assert!(report.has(ViolationKind::Minimality));
        assert!(!report.has(ViolationKind::Composition));
    }

    #[test]
    fn dropped_generator_breaks_exactness() {
        let qt = quot(&[("x", 1), ("y", 1)], &["x^2", "y^2"], 6);
        let full = minimal_resolution(qt.clone(), 3, 6).unwrap();
        let mut f2 = full.generators(2).to_vec();
        f2.pop();
        let res = FreeResolution::from_parts(qt, vec![full.generators(1).to_vec(), f2], 6).unwrap();
        let report = res.verify();
        assert!(report.has(ViolationKind::Exactness));
        assert!(!report.has(ViolationKind::Minimality));
    }

    #[test]
    fn bounds_are_validated() {
        let qt = quot(&[("x", 1)], &["x^2"], 4);
        assert!(minimal_resolution(qt.clone(), 0, 4).is_err());
        assert!(minimal_resolution(qt, 2, 5).is_err());
    }
}
