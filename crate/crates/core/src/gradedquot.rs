//! Degreewise linear algebra for `R = S / I` up to a truncation degree.

use crate::error::{Error, Result};
use crate::exactalg::{rref, MatrixQ, Rational, SparseVec};
use crate::polyring::{Monomial, Polynomial, Ring};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;

/// Everything known about `S_d`, `I_d` and `R_d` in one degree.
#[derive(Clone, Debug)]
pub struct DegreeData {
    pub degree: u32,
    /// Monomials of `S_d`, largest first.
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Rows span `I_d`, in reduced echelon form.
    pub ideal_echelon: MatrixQ,
    pub pivot_cols: Vec<usize>,
    /// Indices (into `monomials`) of the standard monomials: a basis of `R_d`.
    pub standard: Vec<usize>,
    nf: Vec<SparseVec>,
}

impl DegreeData {
    fn build(ring: &Ring, gens: &[(Polynomial, u32)], d: u32) -> Self {
        let monomials = ring.monomials_of_degree(d);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let rows = multiples_in_degree(ring, gens, d, &index, |_, _| true);
        let ncols = monomials.len();
        let red = rref(&MatrixQ::from_rows(ncols, rows));
        let mut is_pivot = vec![None; ncols];
        for (r, &p) in red.pivot_cols.iter().enumerate() {
            is_pivot[p] = Some(r);
        }
        let standard: Vec<usize> = (0..ncols).filter(|&c| is_pivot[c].is_none()).collect();
        let mut std_pos = vec![usize::MAX; ncols];
        for (k, &c) in standard.iter().enumerate() {
            std_pos[c] = k;
        }
        let nf = (0..ncols)
            .map(|c| match is_pivot[c] {
                None => vec![(std_pos[c], Rational::from_integer(1.into()))],
                Some(r) => standard
                    .iter()
                    .enumerate()
                    .filter_map(|(k, &f)| {
                        let x = red.echelon.get(r, f);
                        (!x.is_zero()).then(|| (k, -x.clone()))
                    })
                    .collect(),
            })
            .collect();
        let echelon = MatrixQ::from_rows(ncols, (0..red.rank).map(|r| red.echelon.row(r).to_vec()).collect());
        DegreeData { degree: d, monomials, index, ideal_echelon: echelon, pivot_cols: red.pivot_cols, standard, nf }
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn ideal_dim(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn standard_monomial(&self, k: usize) -> &Monomial {
        &self.monomials[self.standard[k]]
    }

    /// Normal form of a monomial of this degree, in standard-monomial coordinates.
    pub fn nf_monomial(&self, m: &Monomial) -> &SparseVec {
        &self.nf[self.index[m]]
    }
}

/// Coordinates of `m * c_j` for every monomial `m` and generator `c_j`
/// landing in degree `d`, restricted by `keep(j, deg m)`.
fn multiples_in_degree(
    ring: &Ring,
    gens: &[(Polynomial, u32)],
    d: u32,
    index: &HashMap<Monomial, usize>,
    keep: impl Fn(usize, u32) -> bool,
) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for (j, (g, dj)) in gens.iter().enumerate() {
        if *dj > d || !keep(j, d - dj) {
            continue;
        }
        for m in ring.monomials_of_degree(d - dj) {
            let mut row = vec![Rational::zero(); index.len()];
            for (t, c) in g.terms() {
                row[index[&m.mul(t)]] += c;
            }
            rows.push(row);
        }
    }
    rows
}

fn validate(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<(Polynomial, u32)>> {
    gens.iter()
        .enumerate()
        .map(|(i, g)| {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                return Err(Error::ConstantGenerator { index: i });
            }
            match g.degree() {
                None => Err(Error::NonHomogeneous { index: i }),
                Some(0) => Err(Error::ConstantGenerator { index: i }),
                Some(d) => Ok((g.clone(), d)),
            }
        })
        .collect()
}

/// Truncated quotient `S / I` in degrees `0..=D`.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    ring: Ring,
    generators: Vec<Polynomial>,
    generator_degrees: Vec<u32>,
    truncation: u32,
    degrees: Vec<DegreeData>,
}

impl GradedQuotient {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>, truncation: u32) -> Result<Self> {
        let gens = validate(ring, &generators)?;
        if let Some(&needed) = gens.iter().map(|(_, d)| d).max() {
            if needed > truncation {
                return Err(Error::TruncationTooSmall { truncation, needed });
            }
        }
        let degrees: Vec<DegreeData> =
            (0..=truncation).into_par_iter().map(|d| DegreeData::build(ring, &gens, d)).collect();
        Ok(GradedQuotient {
            ring: ring.clone(),
            generator_degrees: gens.iter().map(|(_, d)| *d).collect(),
            generators,
            truncation,
            degrees,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn generator_degrees(&self) -> &[u32] {
        &self.generator_degrees
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn degree(&self, d: u32) -> &DegreeData {
        &self.degrees[d as usize]
    }

    pub fn dim(&self, d: u32) -> usize {
        self.degrees.get(d as usize).map_or(0, |x| x.dim())
    }

    /// `dim R_d` for `d = 0..=D`.
    pub fn hilbert(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim()).collect()
    }

    pub fn standard_monomials(&self, d: u32) -> Vec<&Monomial> {
        let dd = self.degree(d);
        (0..dd.dim()).map(|k| dd.standard_monomial(k)).collect()
    }

    /// Columns span `I_d` inside `S_d`.
    pub fn ideal_subspace(&self, d: u32) -> MatrixQ {
        self.degree(d).ideal_echelon.transpose()
    }

    /// Normal form of a homogeneous polynomial, as coordinates in `R_d`.
    pub fn normal_form(&self, p: &Polynomial) -> Result<(u32, Vec<Rational>)> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let d = if p.is_zero() { 0 } else { p.degree().ok_or(Error::NonHomogeneous { index: 0 })? };
        if d > self.truncation {
            return Err(Error::DegreeExceedsTruncation { degree: d, truncation: self.truncation });
        }
        let dd = self.degree(d);
        let mut v = vec![Rational::zero(); dd.dim()];
        for (m, c) in p.terms() {
            for (k, x) in dd.nf_monomial(m) {
                v[*k] += c * x;
            }
        }
        Ok((d, v))
    }

    /// Normal form of the product of standard monomials `(d1, i1)` and `(d2, i2)`.
    pub fn multiply_basis(&self, d1: u32, i1: usize, d2: u32, i2: usize) -> &SparseVec {
        let m = self.degree(d1).standard_monomial(i1).mul(self.degree(d2).standard_monomial(i2));
        self.degree(d1 + d2).nf_monomial(&m)
    }

    /// Product of `a ∈ R_{d1}` and `b ∈ R_{d2}`.
    pub fn multiply(&self, d1: u32, a: &[Rational], d2: u32, b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim(d1 + d2)];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, z) in self.multiply_basis(d1, i, d2, j) {
                    out[*k] += &xy * z;
                }
            }
        }
        out
    }

    pub fn to_polynomial(&self, d: u32, coords: &[Rational]) -> Polynomial {
        let dd = self.degree(d);
        Polynomial::from_terms(
            &self.ring,
            coords.iter().enumerate().map(|(k, c)| (dd.standard_monomial(k).clone(), c.clone())),
        )
    }

    /// Largest degree with `R_d != 0`, provided `R` visibly vanishes beyond it
    /// (a run of zero degrees at least as long as the largest weight).
    pub fn socle_degree(&self) -> Option<u32> {
        let w = *self.ring.weights().iter().max()?;
        let top = (0..=self.truncation).rev().find(|&d| self.dim(d) > 0)?;
        (self.truncation >= top + w).then_some(top)
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Minimal-generator analysis of a homogeneous ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalGenerators {
    pub count: usize,
    /// Number of minimal generators needed in each degree `0..=D`.
    pub per_degree: Vec<usize>,
    /// Degrees of a minimal generating set, ascending.
    pub minimal_degrees: Vec<u32>,
    /// `redundant[j]` if `c_j` lies in the ideal generated by the others.
    pub redundant: Vec<bool>,
}

pub fn minimal_generator_count(ring: &Ring, generators: &[Polynomial], truncation: u32) -> Result<MinimalGenerators> {
    let gens = validate(ring, generators)?;
    if let Some(&needed) = gens.iter().map(|(_, d)| d).max() {
        if needed > truncation {
            return Err(Error::TruncationTooSmall { truncation, needed });
        }
    }
    let per_degree: Vec<usize> = (0..=truncation)
        .into_par_iter()
        .map(|d| {
            let idx = index_of(ring, d);
            let full = multiples_in_degree(ring, &gens, d, &idx, |_, _| true);
            let shifted = multiples_in_degree(ring, &gens, d, &idx, |_, e| e > 0);
            rank_rows(idx.len(), full) - rank_rows(idx.len(), shifted)
        })
        .collect();
    let redundant = (0..gens.len())
        .into_par_iter()
        .map(|i| {
            let d = gens[i].1;
            let idx = index_of(ring, d);
            let others = multiples_in_degree(ring, &gens, d, &idx, |j, _| j != i);
            let with = multiples_in_degree(ring, &gens, d, &idx, |j, e| j != i || e == 0);
            rank_rows(idx.len(), others.clone()) == rank_rows(idx.len(), with)
        })
        .collect();
    let minimal_degrees =
        per_degree.iter().enumerate().flat_map(|(d, &c)| std::iter::repeat_n(d as u32, c)).collect();
    Ok(MinimalGenerators { count: per_degree.iter().sum(), per_degree, minimal_degrees, redundant })
}

fn index_of(ring: &Ring, d: u32) -> HashMap<Monomial, usize> {
    ring.monomials_of_degree(d).into_iter().enumerate().map(|(i, m)| (m, i)).collect()
}

fn rank_rows(ncols: usize, rows: Vec<Vec<Rational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(&MatrixQ::from_rows(ncols, rows)).rank
}

/// Power series `prod (1 - t^{d_j}) / prod (1 - t^{w_i})` up to `t^D`.
pub fn complete_intersection_series(weights: &[u32], degrees: &[u32], truncation: u32) -> Vec<i128> {
    let n = truncation as usize + 1;
    let mut s = vec![0i128; n];
    s[0] = 1;
    for &w in weights {
        for k in w as usize..n {
            s[k] += s[k - w as usize];
        }
    }
    for &d in degrees {
        for k in (d as usize..n).rev() {
            s[k] -= s[k - d as usize];
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CiVerdict {
    /// Hilbert function agrees with a complete intersection through `certified_to`.
    Yes { certified_to: u32 },
    No { reason: String },
    Unknown { reason: String },
}

impl CiVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, CiVerdict::Yes { .. })
    }
}

/// Complete-intersection test.
///
/// `No` when more minimal generators than variables are needed, or when the
/// Hilbert function departs from the complete-intersection series. `Yes` is
/// only certified through the truncation degree, and `Unknown` is returned
/// when the truncation does not reach past the top generator degree.
pub fn is_complete_intersection(q: &GradedQuotient) -> Result<CiVerdict> {
    let ring = q.ring();
    let mg = minimal_generator_count(ring, q.generators(), q.truncation())?;
    let n = ring.nvars();
    if mg.count > n {
        return Ok(CiVerdict::No {
            reason: format!("{} minimal generators exceed {} variables", mg.count, n),
        });
    }
    let series = complete_intersection_series(ring.weights(), &mg.minimal_degrees, q.truncation());
    for (d, (&got, &want)) in q.hilbert().iter().zip(&series).enumerate() {
        if got as i128 != want {
            return Ok(CiVerdict::No {
                reason: format!("dim R_{d} = {got}, complete intersection predicts {want}"),
            });
        }
    }
    let top = mg.minimal_degrees.last().copied().unwrap_or(0);
    if mg.count > 0 && q.truncation() <= top {
        return Ok(CiVerdict::Unknown {
            reason: format!("truncation {} does not exceed generator degree {}", q.truncation(), top),
        });
    }
    Ok(CiVerdict::Yes { certified_to: q.truncation() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::polyring::RingSpec;
    use proptest::prelude::*;

    fn quot(vars: &[(&str, u32)], gens: &[&str], d: u32) -> GradedQuotient {
        let r = RingSpec::new(vars.iter().map(|&(n, w)| (n, w))).unwrap();
        let g = gens.iter().map(|s| Polynomial::parse(&r, s).unwrap()).collect();
        GradedQuotient::new(&r, g, d).unwrap()
    }

    #[test]
    fn hilbert_of_x2_y2() {
        let qt = quot(&[("x", 1), ("y", 1)], &["x^2", "y^2"], 4);
        assert_eq!(qt.hilbert(), [1, 2, 1, 0, 0]);
        let names: Vec<String> = qt.standard_monomials(2).iter().map(|m| m.format(qt.ring())).collect();
        assert_eq!(names, ["x*y"]);
        assert_eq!(qt.socle_degree(), Some(2));
    }

    #[test]
    fn normal_form_reduces_leading_terms() {
        // x^2 ≡ y^2 in Q[x,y]/(x^2 - y^2).
        let qt = quot(&[("x", 1), ("y", 1)], &["x^2 - y^2"], 3);
        assert_eq!(qt.hilbert(), [1, 2, 2, 2]);
        let p = Polynomial::parse(qt.ring(), "x^2").unwrap();
        let (d, v) = qt.normal_form(&p).unwrap();
        assert_eq!(qt.to_polynomial(d, &v).to_string(), "y^2");
        let m = qt.multiply(1, &[q(1), q(0)], 1, &[q(1), q(0)]);
        assert_eq!(qt.to_polynomial(2, &m).to_string(), "y^2");
    }

    #[test]
    fn weighted_quotient() {
        let qt = quot(&[("x", 2)], &["x^3"], 8);
        assert_eq!(qt.hilbert(), [1, 0, 1, 0, 1, 0, 0, 0, 0]);
        assert_eq!(qt.socle_degree(), Some(4));
    }

    #[test]
    fn validation_errors() {
        let r = RingSpec::new([("x", 1), ("y", 1)]).unwrap();
        let p = |s| Polynomial::parse(&r, s).unwrap();
        assert_eq!(GradedQuotient::new(&r, vec![p("x + y^2")], 4).unwrap_err(), Error::NonHomogeneous { index: 0 });
        assert_eq!(GradedQuotient::new(&r, vec![p("x"), p("3")], 4).unwrap_err(), Error::ConstantGenerator { index: 1 });
        assert_eq!(
            GradedQuotient::new(&r, vec![p("x^3")], 2).unwrap_err(),
            Error::TruncationTooSmall { truncation: 2, needed: 3 }
        );
    }

    #[test]
    fn minimal_generators_detects_redundancy() {
        let r = RingSpec::new([("x", 1), ("y", 1)]).unwrap();
        let g: Vec<Polynomial> = ["x^2", "x*y", "x^2*y + x*y^2", "y^3"].iter().map(|s| Polynomial::parse(&r, s).unwrap()).collect();
        let mg = minimal_generator_count(&r, &g, 4).unwrap();
        assert_eq!(mg.count, 3);
        assert_eq!(mg.minimal_degrees, [2, 2, 3]);
        assert_eq!(mg.redundant, [false, false, true, false]);
    }

    #[test]
    fn ci_verdicts() {
        let ci = quot(&[("x", 1), ("y", 1)], &["x^2", "y^2"], 5);
        assert_eq!(is_complete_intersection(&ci).unwrap(), CiVerdict::Yes { certified_to: 5 });
        let not = quot(&[("x", 1), ("y", 1)], &["x^2", "x*y", "y^2"], 4);
        assert!(matches!(is_complete_intersection(&not).unwrap(), CiVerdict::No { .. }));
        // Two generators sharing a factor: not regular, caught by the series.
        let shared = quot(&[("x", 1), ("y", 1)], &["x^2", "x*y"], 4);
        assert!(matches!(is_complete_intersection(&shared).unwrap(), CiVerdict::No { .. }));
        let tight = quot(&[("x", 1), ("y", 1)], &["x^2", "y^2"], 2);
        assert!(matches!(is_complete_intersection(&tight).unwrap(), CiVerdict::Unknown { .. }));
    }

    #[test]
    fn ci_series() {
        assert_eq!(complete_intersection_series(&[1, 1], &[2, 2], 4), [1, 2, 1, 0, 0]);
        assert_eq!(complete_intersection_series(&[2], &[], 4), [1, 0, 1, 0, 1]);
    }

    proptest! {
        #[test]
        fn monomial_ideal_dims(a in 1u32..4, b in 1u32..4, c in 1u32..4) {
            // Q[x,y,z]/(x^a, y^b, z^c): dim R_d counts exponent triples in the box.
            let g = [format!("x^{a}"), format!("y^{b}"), format!("z^{c}")];
            let gs: Vec<&str> = g.iter().map(|s| s.as_str()).collect();
            let qt = quot(&[("x", 1), ("y", 1), ("z", 1)], &gs, 9);
            for d in 0..=9u32 {
                let mut count = 0;
                for i in 0..a { for j in 0..b { for k in 0..c { if i + j + k == d { count += 1; } } } }
                prop_assert_eq!(qt.dim(d), count);
            }
            prop_assert!(is_complete_intersection(&qt).unwrap().is_yes());
        }

        #[test]
        fn nf_is_idempotent_and_multiplicative(c1 in -3i64..=3, c2 in -3i64..=3, c3 in -3i64..=3) {
            let qt = quot(&[("x", 1), ("y", 1)], &["x^2 + y^2", "x*y^2"], 6);
            let r = qt.ring().clone();
            let mono = |s: &str, c: i64| Polynomial::parse(&r, s).unwrap().scale(&q(c));
            let p = &(&mono("x^3", c1) + &mono("x^2*y", c2)) + &mono("y^3", c3);
            prop_assume!(!p.is_zero());
            let (d, v) = qt.normal_form(&p).unwrap();
            let back = qt.to_polynomial(d, &v);
            prop_assert_eq!(qt.normal_form(&back).unwrap().1, v.clone());
            let x = Polynomial::parse(&r, "x + y").unwrap();
            let lhs = qt.normal_form(&(&x * &p)).unwrap().1;
            let (_, xv) = qt.normal_form(&x).unwrap();
            prop_assert_eq!(qt.multiply(1, &xv, d, &v), lhs);
        }
    }
}
