//! Tate resolutions of complete intersections, the Clifford-type presentation
//! of their Ext algebras, and the modified complete intersection of an
//! arbitrary quotient.

use crate::error::{Error, Result};
use crate::exactalg::{binomial, Rational};
use crate::gradedquot::{is_complete_intersection, minimal_generator_count, CiVerdict, GradedQuotient};
use crate::polyring::{Monomial, Polynomial, Ring, RingSpec};
use crate::resolution::{minimal_resolution, FreeResolution, Generator, VerificationReport};
use crate::yoneda::{ExtAlgebra, Verdict};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::Arc;

/// Splitting `c_j = Σ_i c_{j,i} t_i` and `c_{j,i} = Σ_l s_j^{i,l} t_l`.
///
/// Each monomial goes to its smallest variable index, and then to the
/// smallest index of what remains; so `s_j^{i,l} = 0` unless `i <= l`.
#[derive(Clone, Debug)]
pub struct QuadraticSplit {
    pub c: Vec<Vec<Polynomial>>,
    pub s: Vec<Vec<Vec<Polynomial>>>,
    /// Constant terms of `s_j^{i,l}`.
    pub s_bar: Vec<Vec<Vec<Rational>>>,
}

pub fn split_generators(ring: &Ring, gens: &[Polynomial]) -> Result<QuadraticSplit> {
    let n = ring.nvars();
    let mut c = Vec::new();
    let mut s = Vec::new();
    let mut s_bar = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ConstantGenerator { index: j });
        }
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous { index: j });
        }
        let mut cj: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); n];
        let mut sj: Vec<Vec<Vec<(Monomial, Rational)>>> = vec![vec![Vec::new(); n]; n];
        for (m, coef) in g.terms() {
            if m.total_degree() < 2 {
                return Err(Error::LinearTerm { index: j });
            }
            let i = m.0.iter().position(|&e| e > 0).expect("non-constant");
            let mut rest = m.clone();
            rest.0[i] -= 1;
            let l = rest.0.iter().position(|&e| e > 0).expect("degree at least two");
            cj[i].push((rest.clone(), coef.clone()));
            rest.0[l] -= 1;
            sj[i][l].push((rest, coef.clone()));
        }
        let sjp: Vec<Vec<Polynomial>> =
            sj.into_iter().map(|row| row.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect()).collect();
        s_bar.push(
            sjp.iter()
                .map(|row| row.iter().map(|p| p.coefficient(&Monomial(vec![0; n]))).collect())
                .collect(),
        );
        c.push(cj.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect());
        s.push(sjp);
    }
    Ok(QuadraticSplit { c, s, s_bar })
}

/// Generator `S^a T_E` of the Tate complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TateGenerator {
    pub s_exponents: Vec<u32>,
    /// Strictly increasing variable indices.
    pub t_indices: Vec<usize>,
    pub degree: u32,
}

impl TateGenerator {
    pub fn hom_degree(&self) -> usize {
        2 * self.s_exponents.iter().sum::<u32>() as usize + self.t_indices.len()
    }

    pub fn name(&self) -> String {
        let mut out = String::new();
        for (j, &a) in self.s_exponents.iter().enumerate() {
            match a {
                0 => {}
                1 => out.push_str(&format!("S{}", j + 1)),
                _ => out.push_str(&format!("S{}^{}", j + 1, a)),
            }
        }
        for &i in &self.t_indices {
            out.push_str(&format!("T{}", i + 1));
        }
        out
    }
}

/// The Tate complex `R[S_1..S_r; T_1..T_n]`, truncated in internal degree.
#[derive(Clone, Debug)]
pub struct TateComplex {
    pub split: QuadraticSplit,
    pub levels: Vec<Vec<TateGenerator>>,
    resolution: FreeResolution,
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = Vec::new();
    for last in k - 1..n {
        for mut s in subsets(last, k - 1) {
            s.push(last);
            out.push(s);
        }
    }
    out.sort();
    out
}

impl TateComplex {
    /// Builds `X_0, ..., X_{max_level}` over `q`, keeping generators of
    /// internal degree `<= max_degree`.
    pub fn new(q: Arc<GradedQuotient>, max_level: usize, max_degree: u32) -> Result<Self> {
        let ring = q.ring().clone();
        let n = ring.nvars();
        let split = split_generators(&ring, q.generators())?;
        let r = q.generators().len();
        let dj = q.generator_degrees().to_vec();
        let mut levels: Vec<Vec<TateGenerator>> = vec![vec![TateGenerator {
            s_exponents: vec![0; r],
            t_indices: vec![],
            degree: 0,
        }]];
        for m in 1..=max_level {
            let mut gens = Vec::new();
            for a in 0..=m / 2 {
                let b = m - 2 * a;
                for s in compositions(a as u32, r) {
                    for e in subsets(n, b) {
                        let degree = s.iter().zip(&dj).map(|(x, d)| x * d).sum::<u32>()
                            + e.iter().map(|&i| ring.weight(i)).sum::<u32>();
                        if degree <= max_degree {
                            gens.push(TateGenerator { s_exponents: s.clone(), t_indices: e, degree });
                        }
                    }
                }
            }
            gens.sort_by_key(|g| g.degree);
            levels.push(gens);
        }
        let mut layout_res = FreeResolution::from_parts(q.clone(), vec![], max_degree)?;
        for m in 1..=max_level {
            let index: HashMap<&TateGenerator, usize> = levels[m - 1].iter().enumerate().map(|(k, g)| (g, k)).collect();
            let mut gens = Vec::new();
            for g in &levels[m] {
                let mut boundary = vec![Rational::zero(); layout_res.slice_dim(m - 1, g.degree)];
                let mut add = |target: TateGenerator, poly: &Polynomial, coeff: Rational| -> Result<()> {
                    if poly.is_zero() || coeff.is_zero() {
                        return Ok(());
                    }
                    let k = index[&target];
                    let (_, nf) = q.normal_form(poly)?;
                    let start = layout_res.block(m - 1, g.degree, k).start;
                    for (t, x) in nf.iter().enumerate() {
                        boundary[start + t] += x * &coeff;
                    }
                    Ok(())
                };
                for j in 0..r {
                    let aj = g.s_exponents[j];
                    if aj == 0 {
                        continue;
                    }
                    for i in 0..n {
                        if g.t_indices.contains(&i) {
                            continue;
                        }
                        let pos = g.t_indices.iter().filter(|&&e| e < i).count();
                        let mut s_exp = g.s_exponents.clone();
                        s_exp[j] -= 1;
                        let mut t = g.t_indices.clone();
                        t.insert(pos, i);
                        let degree = g.degree - dj[j] + ring.weight(i);
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        add(
                            TateGenerator { s_exponents: s_exp, t_indices: t, degree },
                            &split.c[j][i],
                            Rational::from_integer((sign * aj as i64).into()),
                        )?;
                    }
                }
                for (k, &i) in g.t_indices.iter().enumerate() {
                    let mut t = g.t_indices.clone();
                    t.remove(k);
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    add(
                        TateGenerator { s_exponents: g.s_exponents.clone(), t_indices: t, degree: g.degree - ring.weight(i) },
                        &Polynomial::var(&ring, i),
                        Rational::from_integer(sign.into()),
                    )?;
                }
                gens.push(Generator { degree: g.degree, boundary, name: Some(g.name()) });
            }
            layout_res.push_level(gens);
        }
        layout_res.finalize();
        Ok(TateComplex { split, levels, resolution: layout_res })
    }

    /// The complex as a free resolution (exact only for complete intersections).
    pub fn to_resolution(&self) -> &FreeResolution {
        &self.resolution
    }

    pub fn generator_index(&self, g: &TateGenerator) -> Option<usize> {
        self.levels.get(g.hom_degree())?.iter().position(|h| h == g)
    }
}

/// `rank X_m = Σ_{2a+b=m} C(r-1+a, a) C(n, b)`: coefficients of `(1+t)^n / (1-t^2)^r`.
pub fn closed_form_rank(n: usize, r: usize, m: usize) -> u64 {
    (0..=m / 2)
        .map(|a| {
            let b = m - 2 * a;
            let sa = if r == 0 { u64::from(a == 0) } else { binomial((r - 1 + a) as u64, a as u64) };
            sa * binomial(n as u64, b as u64)
        })
        .sum()
}

pub fn ci_ext_series(n: usize, r: usize, max: usize) -> Vec<u64> {
    (0..=max).map(|m| closed_form_rank(n, r, m)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCheck {
    pub level: usize,
    pub computed: usize,
    pub closed_form: u64,
    pub row_complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TateVerification {
    pub verdict: Verdict,
    pub ci: CiVerdict,
    pub certified_to: u32,
    pub levels: usize,
    pub complex: VerificationReport,
    /// Betti numbers of the Tate complex agree with the minimal resolution.
    pub betti_agree: bool,
    pub ranks: Vec<RankCheck>,
}

/// Checks the Tate complex of `R = S/(c)` against the minimal resolution
/// and the closed-form ranks, through internal degree `max_degree` and
/// homological degree `max_degree + 1`.
pub fn verify_tate(ring: &Ring, gens: &[Polynomial], max_degree: u32) -> Result<TateVerification> {
    let q = Arc::new(GradedQuotient::new(ring, gens.to_vec(), max_degree)?);
    let ci = is_complete_intersection(&q)?;
    let levels = max_degree as usize + 1;
    let tate = TateComplex::new(q.clone(), levels, max_degree)?;
    let tres = tate.to_resolution();
    let complex = tres.verify();
    let minimal = minimal_resolution(q, levels, max_degree)?;
    let betti_agree = (0..=levels).all(|i| (0..=max_degree).all(|j| tres.beta(i, j) == minimal.beta(i, j)));
    let (n, r) = (ring.nvars(), gens.len());
    let ranks: Vec<RankCheck> = (0..=levels)
        .map(|m| RankCheck {
            level: m,
            computed: minimal.total_beta(m),
            closed_form: closed_form_rank(n, r, m),
            row_complete: minimal.row_complete(m),
        })
        .collect();
    let ranks_ok = ranks.iter().all(|c| !c.row_complete || c.computed as u64 == c.closed_form);
    let verdict = if complex.is_ok() && betti_agree && ranks_ok && ci.is_yes() { Verdict::Pass } else { Verdict::Fail };
    Ok(TateVerification { verdict, ci, certified_to: max_degree, levels, complex, betti_agree, ranks })
}

/// `α_i α_k + α_k α_i + Σ_j coeffs[j] β_j = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordRelation {
    pub i: usize,
    pub k: usize,
    pub beta_coefficients: Vec<String>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CiPresentation {
    pub alphas: Vec<String>,
    pub betas: Vec<String>,
    pub alpha_degrees: Vec<u32>,
    pub beta_degrees: Vec<u32>,
    pub relations: Vec<CliffordRelation>,
    /// Every generator lies in `m^3`, so the algebra is `Q[β] ⊗ Λ[α]`.
    pub commutative: bool,
    pub dims: Vec<u64>,
}

fn fmt_coeff_term(c: &Rational, name: &str, first: bool) -> String {
    let neg = c.is_negative();
    let a = c.abs();
    let body = if a.is_one() { name.to_string() } else { format!("{a}*{name}") };
    match (first, neg) {
        (true, false) => body,
        (true, true) => format!("-{body}"),
        (false, false) => format!(" + {body}"),
        (false, true) => format!(" - {body}"),
    }
}

/// Presentation of `Ext_R(k,k)` for a complete intersection `R = S/(c)` with
/// every `c_j ∈ m^2`: exterior-type generators `α_i` (dual to `t_i`),
/// polynomial generators `β_j`, and relations
/// `α_i α_k + α_k α_i = -Σ_j (s̄_j^{i,k} + s̄_j^{k,i}) β_j`.
pub fn ci_ext_presentation(ring: &Ring, gens: &[Polynomial], max_level: usize) -> Result<CiPresentation> {
    let split = split_generators(ring, gens)?;
    let n = ring.nvars();
    let r = gens.len();
    let alphas: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let betas: Vec<String> = (1..=r).map(|j| format!("b{j}")).collect();
    let mut relations = Vec::new();
    for i in 0..n {
        for k in i..n {
            let coeffs: Vec<Rational> = (0..r).map(|j| &split.s_bar[j][i][k] + &split.s_bar[j][k][i]).collect();
            let mut text = if i == k {
                format!("2*{}^2", alphas[i])
            } else {
                format!("{}*{} + {}*{}", alphas[i], alphas[k], alphas[k], alphas[i])
            };
            for (j, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    text.push_str(&fmt_coeff_term(c, &betas[j], false));
                }
            }
            text.push_str(" = 0");
            relations.push(CliffordRelation {
                i,
                k,
                beta_coefficients: coeffs.iter().map(|c| c.to_string()).collect(),
                text,
            });
        }
    }
    let commutative = gens.iter().all(|g| g.min_total_degree().is_some_and(|d| d >= 3));
    Ok(CiPresentation {
        alphas,
        betas,
        alpha_degrees: ring.weights().to_vec(),
        beta_degrees: gens.iter().map(|g| g.degree().unwrap_or(0)).collect(),
        relations,
        commutative,
        dims: ci_ext_series(n, r, max_level),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationCheck {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

/// Compares engine products `α_k α_i` over the Tate complex with
/// `-Σ_j s̄_j^{i,k} β_j - (T_k T_i)*`.
pub fn check_presentation(tate: &TateComplex, ext: &ExtAlgebra) -> PresentationCheck {
    let n = tate.split.c.first().map_or(0, |c| c.len());
    let r = tate.split.c.len();
    let find = |s: Vec<u32>, t: Vec<usize>| {
        let level = 2 * s.iter().sum::<u32>() as usize + t.len();
        tate.levels[level].iter().position(|g| g.s_exponents == s && g.t_indices == t)
    };
    let alpha = |i: usize| {
        find(vec![0; r], vec![i])
    };
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for i in 0..n {
        for k in 0..n {
            let (Some(ai), Some(ak)) = (alpha(i), alpha(k)) else { continue };
            let got = ext.product_basis((1, ak), (1, ai));
            let mut want = vec![Rational::zero(); ext.dim(2)];
            for j in 0..r {
                let mut e = vec![0; r];
                e[j] = 1;
                if let Some(b) = find(e, vec![]) {
                    want[b] -= &tate.split.s_bar[j][i][k];
                }
            }
            if i != k {
                let (lo, hi) = (i.min(k), i.max(k));
                if let Some(t) = find(vec![0; r], vec![lo, hi]) {
                    // (T_k T_i)* is +(T_lo T_hi)* when k < i.
                    let sign = if k < i { -Rational::one() } else { Rational::one() };
                    want[t] += sign;
                }
            }
            checked += 1;
            if got != want.as_slice() {
                mismatches.push(format!("a{}·a{}", k + 1, i + 1));
            }
        }
    }
    PresentationCheck { checked, mismatches }
}

/// `R̃ = S[t̃_1..t̃_r] / (c_j - t̃_j^{d_j})`, a complete intersection mapping onto `R`.
#[derive(Clone, Debug)]
pub struct ModifiedCi {
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
    pub new_variables: Vec<String>,
    pub ci: CiVerdict,
    pub presentation: CiPresentation,
}

fn check_minimal_quadratic(ring: &Ring, gens: &[Polynomial]) -> Result<()> {
    split_generators(ring, gens)?;
    let top = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let mg = minimal_generator_count(ring, gens, top)?;
    if let Some(index) = mg.redundant.iter().position(|&x| x) {
        return Err(Error::NotMinimal { index });
    }
    Ok(())
}

pub fn modified_ci(ring: &Ring, gens: &[Polynomial], check_degree: u32, max_level: usize) -> Result<ModifiedCi> {
    check_minimal_quadratic(ring, gens)?;
    let mut vars: Vec<(String, u32)> = ring.names().iter().cloned().zip(ring.weights().iter().copied()).collect();
    let mut new_variables = Vec::new();
    for j in 1..=gens.len() {
        let mut name = format!("u{j}");
        while vars.iter().any(|(n, _)| n == &name) {
            name.insert(0, '_');
        }
        new_variables.push(name.clone());
        vars.push((name, 1));
    }
    let big = RingSpec::new(vars)?;
    let map: Vec<usize> = (0..ring.nvars()).collect();
    let generators: Vec<Polynomial> = gens
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let d = g.degree().expect("validated homogeneous");
            let u = Polynomial::var(&big, ring.nvars() + j).pow(d);
            &g.embed(&big, &map) - &u
        })
        .collect();
    let top = generators.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let q = GradedQuotient::new(&big, generators.clone(), check_degree.max(top))?;
    let ci = is_complete_intersection(&q)?;
    let presentation = ci_ext_presentation(&big, &generators, max_level)?;
    Ok(ModifiedCi { ring: big, generators, new_variables, ci, presentation })
}

/// Target for `Ext_R(k,k)` of an arbitrary quotient: the complete-intersection
/// presentation built from `R`'s own minimal relations, with `n` α's and `r` β's.
pub fn quotient_target(ring: &Ring, gens: &[Polynomial], max_level: usize) -> Result<CiPresentation> {
    check_minimal_quadratic(ring, gens)?;
    ci_ext_presentation(ring, gens, max_level)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundRow {
    pub degree: usize,
    pub computed: usize,
    pub target: u64,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundReport {
    pub verdict: Verdict,
    pub rows: Vec<LowerBoundRow>,
}

/// `Pass` if every computed dimension reaches the target (computed values
/// never exceed the true ones), `Fail` if a complete row falls short.
pub fn verify_lower_bound_dims(dims: &[usize], complete: &[bool], target: &[u64]) -> LowerBoundReport {
    let rows: Vec<LowerBoundRow> = target
        .iter()
        .enumerate()
        .map(|(i, &t)| LowerBoundRow {
            degree: i,
            computed: dims.get(i).copied().unwrap_or(0),
            target: t,
            complete: complete.get(i).copied().unwrap_or(false),
        })
        .collect();
    let verdict = if rows.iter().all(|r| r.computed as u64 >= r.target) {
        Verdict::Pass
    } else if rows.iter().any(|r| r.complete && (r.computed as u64) < r.target) {
        Verdict::Fail
    } else {
        Verdict::Unknown
    };
    LowerBoundReport { verdict, rows }
}

pub fn verify_lower_bound(ext: &ExtAlgebra, target: &[u64]) -> LowerBoundReport {
    let res = ext.resolution();
    let complete: Vec<bool> = (0..=ext.max_degree()).map(|i| res.row_complete(i)).collect();
    verify_lower_bound_dims(&ext.dims(), &complete, target)
}
