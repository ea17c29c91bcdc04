use crate::report::Report;
use crate::{Bounds, Convention};
use c2coh::document::RingDocument;
use c2coh::gradedquot::{is_complete_intersection, minimal_generator_count, GradedQuotient};
use c2coh::resolution::{minimal_resolution, DEFAULT_MAX_DEGREE, DEFAULT_MAX_LEVEL};
use c2coh::tate::{check_presentation, ci_ext_presentation, quotient_target, verify_lower_bound, verify_tate, TateComplex};
use c2coh::voa::{
    affine_c2, tensor_c2, virasoro_c2, weyl_nk, C2Presentation, LieAlgebraBasis, Provenance, RootSystem, RootType,
    VirasoroMode,
};
use c2coh::yoneda::{
    commutative_quotient, graded_commutator_report, polynomial_subalgebra_witness, ExtAlgebra, LiftStrategy,
    ProductConvention, Verdict,
};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use thiserror::Error;

pub const ENV_DEFAULT_P: &str = "C2COH_DEFAULT_P";
pub const ENV_DEFAULT_D: &str = "C2COH_DEFAULT_D";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Read { path: PathBuf, message: String },
    #[error("cannot write {path}: {message}")]
    Write { path: PathBuf, message: String },
    #[error("{path}: {source}")]
    Document { path: PathBuf, source: c2coh::Error },
    #[error("environment variable {var} = {value:?} is not a non-negative integer")]
    Env { var: &'static str, value: String },
    #[error(transparent)]
    Core(#[from] c2coh::Error),
}

pub enum Status {
    Success,
    VerdictFailed,
}

type CliResult = Result<Status, CliError>;

fn env_default<T: std::str::FromStr>(var: &'static str, fallback: T) -> Result<T, CliError> {
    match std::env::var(var) {
        Ok(value) => value.trim().parse().map_err(|_| CliError::Env { var, value }),
        Err(_) => Ok(fallback),
    }
}

/// Flags beat the document, the document beats the environment.
fn resolve_bounds(doc: &RingDocument, b: Bounds) -> Result<(usize, u32), CliError> {
    let p = match b.p.or(doc.max_level()) {
        Some(p) => p,
        None => env_default(ENV_DEFAULT_P, DEFAULT_MAX_LEVEL)?,
    };
    let d = match b.d.or(doc.max_degree()) {
        Some(d) => d,
        None => env_default(ENV_DEFAULT_D, DEFAULT_MAX_DEGREE)?,
    };
    Ok((p, d))
}

fn load(path: &Path) -> Result<RingDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Read { path: path.into(), message: e.to_string() })?;
    let doc = RingDocument::from_toml(&text).map_err(|source| CliError::Document { path: path.into(), source })?;
    doc.build().map_err(|source| CliError::Document { path: path.into(), source })?;
    Ok(doc)
}

fn echo(doc: &RingDocument) -> Value {
    serde_json::to_value(doc).expect("documents serialise")
}

fn print(report: Report) {
    println!("{}", report.render());
}

fn status(failed: bool) -> Status {
    if failed {
        Status::VerdictFailed
    } else {
        Status::Success
    }
}

pub fn ring_check(path: &Path, bounds: Bounds, timing: bool) -> CliResult {
    let doc = load(path)?;
    let (p, d) = resolve_bounds(&doc, bounds)?;
    let (ring, gens) = doc.build()?;
    let minimal = minimal_generator_count(&ring, &gens, d)?;
    let quot = GradedQuotient::new(&ring, gens, d)?;
    let mut r = Report::new("ring check", timing).truncation(Some(p), Some(d)).input(echo(&doc));
    r.set("hilbert_function", quot.hilbert());
    r.set("socle_degree", quot.socle_degree());
    r.set("polynomial_ring", quot.is_polynomial_ring());
    r.set("minimal_generators", &minimal);
    r.verdict("complete_intersection", is_complete_intersection(&quot)?);
    r.verdict("minimal", minimal.redundant.iter().all(|x| !x));
    print(r);
    Ok(Status::Success)
}

pub fn resolve(path: &Path, bounds: Bounds, timing: bool) -> CliResult {
    let doc = load(path)?;
    let (p, d) = resolve_bounds(&doc, bounds)?;
    let (ring, gens) = doc.build()?;
    let res = minimal_resolution(Arc::new(GradedQuotient::new(&ring, gens, d)?), p, d)?;
    let check = res.verify();
    let mut r = Report::new("resolve", timing).truncation(Some(p), Some(d)).input(echo(&doc));
    r.set("betti", res.betti_table());
    r.set("poincare_series", res.poincare_series());
    r.verdict("complex", &check);
    print(r);
    Ok(status(!check.is_ok()))
}

pub fn ext(
    path: &Path,
    bounds: Bounds,
    lower_bound: bool,
    witness: Option<usize>,
    convention: Convention,
    timing: bool,
) -> CliResult {
    let doc = load(path)?;
    let (p, d) = resolve_bounds(&doc, bounds)?;
    let (ring, gens) = doc.build()?;
    let res = Arc::new(minimal_resolution(Arc::new(GradedQuotient::new(&ring, gens.clone(), d)?), p, d)?);
    let ext = ExtAlgebra::compute(res.clone(), p, LiftStrategy::Canonical)?;
    let (conv, conv_name) = match convention {
        Convention::ShiftedChainMap => (ProductConvention::ShiftedChainMap, "shifted-chain-map"),
        Convention::Composition => (ProductConvention::Composition, "composition"),
    };
    let mut records = Vec::new();
    for q in 1..=p {
        for pp in 1..=p - q {
            for c in 0..ext.dim(q) {
                for b in 0..ext.dim(pp) {
                    let v = ext
                        .multiply_with(conv, q, &ext.basis_vector(q, c), pp, &ext.basis_vector(pp, b))
                        .expect("within range");
                    let (l, rt) = (&ext.basis(q)[c].label, &ext.basis(pp)[b].label);
                    records.push(json!({
                        "p": pp,
                        "q": q,
                        "left_label": l,
                        "right_label": rt,
                        "target_coeffs": v.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "text": format!("{l}·{rt} = {}", ext.format_element(q + pp, &v)),
                    }));
                }
            }
        }
    }
    let levels: Vec<Value> = (0..=p)
        .map(|i| json!({ "degree": i, "dim": ext.dim(i), "complete": res.row_complete(i), "basis": ext.basis(i) }))
        .collect();
    let mut r = Report::new("ext", timing).convention(conv_name).truncation(Some(p), Some(d)).input(echo(&doc));
    r.set("levels", levels);
    r.set("products", records);
    r.set("graded_commutator", graded_commutator_report(&ext));
    r.set("commutative_quotient", commutative_quotient(&ext));
    let mut failed = false;
    if lower_bound {
        let target = quotient_target(&ring, &gens, p)?;
        let report = verify_lower_bound(&ext, &target.dims);
        failed |= report.verdict == Verdict::Fail;
        r.set("lower_bound_target", &target);
        r.verdict("lower_bound", &report);
    }
    if let Some(expected) = witness {
        let report = polynomial_subalgebra_witness(&ext, expected)?;
        failed |= report.verdict == Verdict::Fail;
        r.verdict("polynomial_witness", &report);
    }
    print(r);
    Ok(status(failed))
}

pub fn tate(path: &Path, bounds: Bounds, timing: bool) -> CliResult {
    let doc = load(path)?;
    let (p, d) = resolve_bounds(&doc, bounds)?;
    let (ring, gens) = doc.build()?;
    let v = verify_tate(&ring, &gens, d)?;
    let mut r = Report::new("tate", timing).truncation(Some(p), Some(d)).input(echo(&doc));
    let mut failed = v.verdict != Verdict::Pass;
    if v.ci.is_yes() {
        let pres = ci_ext_presentation(&ring, &gens, p)?;
        let quot = Arc::new(GradedQuotient::new(&ring, gens, d)?);
        let complex = TateComplex::new(quot, 2, d)?;
        let ext = ExtAlgebra::compute(Arc::new(complex.to_resolution().clone()), 2, LiftStrategy::Canonical)?;
        let check = check_presentation(&complex, &ext);
        failed |= !check.mismatches.is_empty();
        r.set("presentation", &pres);
        r.verdict("presentation_products", &check);
    }
    r.verdict("tate", &v);
    print(r);
    Ok(status(failed))
}

fn write_document(pres: &C2Presentation, out: Option<&Path>) -> CliResult {
    let text = RingDocument::from_presentation(pres, None).to_toml();
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Write { path: path.into(), message: e.to_string() })?
        }
        None => print!("{text}"),
    }
    Ok(Status::Success)
}

pub fn voa_affine(root_type: &str, rank: usize, level: u64, out: Option<&Path>) -> CliResult {
    let lie = LieAlgebraBasis::new(root_type.parse::<RootType>()?, rank)?;
    write_document(&affine_c2(&lie, level)?, out)
}

pub fn voa_virasoro(pq: Option<(u64, u64)>, generic: bool, out: Option<&Path>) -> CliResult {
    let mode = match (pq, generic) {
        (Some((p, q)), false) => VirasoroMode::Minimal { p, q },
        _ => VirasoroMode::Generic,
    };
    write_document(&virasoro_c2(mode)?, out)
}

pub fn nk(root_type: &str, rank: usize, level: Option<u64>, timing: bool) -> CliResult {
    let t: RootType = root_type.parse()?;
    let rs = RootSystem::new(t, rank)?;
    let nk = weyl_nk(&rs, level);
    let mut r = Report::new("nk", timing).truncation(None, None).input(json!({
        "type": t.to_string(),
        "rank": rank,
        "level": level,
    }));
    r.set("dim", rs.dim());
    r.set("dual_coxeter", rs.dual_coxeter);
    r.set("degree", rs.nk_degree()?);
    r.set("nk", &nk);
    print(r);
    Ok(Status::Success)
}

fn presentation_of(path: &Path) -> Result<C2Presentation, CliError> {
    let doc = load(path)?;
    let (ring, generators) = doc.build()?;
    let label = doc.provenance.clone().unwrap_or_else(|| path.display().to_string());
    Ok(C2Presentation { ring, generators, provenance: Provenance::Document { label } })
}

pub fn compose_tensor(left: &Path, right: &Path, out: Option<&Path>) -> CliResult {
    let t = tensor_c2(&presentation_of(left)?, &presentation_of(right)?)?;
    write_document(&t, out)
}
