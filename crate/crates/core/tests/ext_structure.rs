use c2coh::exactalg::q;
use c2coh::gradedquot::GradedQuotient;
use c2coh::polyring::{Polynomial, RingSpec};
use c2coh::resolution::minimal_resolution;
use c2coh::tate::{check_presentation, closed_form_rank, modified_ci, quotient_target, TateComplex};
use c2coh::voa::{affine_c2, virasoro_c2, LieAlgebraBasis, RootType, VirasoroMode};
use c2coh::yoneda::{graded_commutator_report, polynomial_subalgebra_witness, ExtAlgebra, LiftStrategy, Verdict};
use std::sync::Arc;

fn ext(vars: &[(&str, u32)], gens: &[&str], p: usize, d: u32) -> ExtAlgebra {
    let r = RingSpec::new(vars.iter().map(|&(n, w)| (n, w))).unwrap();
    let g = gens.iter().map(|s| Polynomial::parse(&r, s).unwrap()).collect();
    let quot = Arc::new(GradedQuotient::new(&r, g, d).unwrap());
    ExtAlgebra::compute(Arc::new(minimal_resolution(quot, p, d).unwrap()), p, LiftStrategy::Canonical).unwrap()
}

#[test]
fn sl2_level2_beta_classes_are_polynomial() {
    let lie = LieAlgebraBasis::new(RootType::A, 1).unwrap();
    let c = affine_c2(&lie, 2).unwrap();
    let quot = Arc::new(c.quotient(10).unwrap());
    let res = Arc::new(minimal_resolution(quot, 4, 10).unwrap());
    let e = ExtAlgebra::compute(res, 4, LiftStrategy::Canonical).unwrap();
    let w = polynomial_subalgebra_witness(&e, 7).unwrap();
    assert_eq!(w.beta_classes.len(), 7);
    assert_eq!(w.verdict, Verdict::Pass, "{w:?}");
    assert_eq!((w.checks[0].power, w.checks[0].expected), (2, 28));
}

#[test]
fn witness_reports_wrong_count() {
    let e = ext(&[("x", 1), ("y", 1)], &["x^2", "y^2"], 4, 8);
    let w = polynomial_subalgebra_witness(&e, 3).unwrap();
    assert_eq!(w.verdict, Verdict::Fail);
    assert_eq!(polynomial_subalgebra_witness(&e, 2).unwrap().verdict, Verdict::Pass);
}

#[test]
fn dual_numbers_are_commutative_not_graded_commutative() {
    // Ext is Q[α] with |α| = 1: α·α³ = α³·α, whereas graded commutativity wants a sign.
    let e = ext(&[("x", 1)], &["x^2"], 4, 6);
    let rep = graded_commutator_report(&e);
    assert!(!rep.graded_commutative_on_pairs);
    let pairs: Vec<(&str, &str)> = rep.failures.iter().map(|f| (f.left.as_str(), f.right.as_str())).collect();
    assert_eq!(pairs, [("z1_1", "z3_1")]);
    assert_eq!(rep.odd_squares, ["z1_1"]);
    let e = ext(&[("x", 1)], &["x^3"], 4, 8);
    assert!(graded_commutator_report(&e).odd_squares.is_empty());
}

#[test]
fn virasoro_cube_has_exterior_alpha() {
    let v = virasoro_c2(VirasoroMode::Minimal { p: 3, q: 4 }).unwrap();
    let res = Arc::new(minimal_resolution(Arc::new(v.quotient(16).unwrap()), 4, 16).unwrap());
    let e = ExtAlgebra::compute(res, 4, LiftStrategy::Reversed).unwrap();
    let a = e.basis_vector(1, 0);
    assert_eq!(e.multiply(1, &a, 1, &a).unwrap(), vec![q(0)]);
    let b = e.basis_vector(2, 0);
    assert_eq!(e.multiply(2, &b, 2, &b).unwrap(), vec![q(1)]);
}

#[test]
fn tate_products_match_clifford_presentation() {
    for gens in [vec!["x^2", "y^2"], vec!["x^2 + y^2", "x*y"], vec!["x*y", "x^2 - y^2 + x*z", "z^2"]] {
        let nvars = if gens.len() == 3 { 3 } else { 2 };
        let vars: Vec<(&str, u32)> = [("x", 1), ("y", 1), ("z", 1)][..nvars].to_vec();
        let r = RingSpec::new(vars.iter().map(|&(n, w)| (n, w))).unwrap();
        let g: Vec<Polynomial> = gens.iter().map(|s| Polynomial::parse(&r, s).unwrap()).collect();
        let quot = Arc::new(GradedQuotient::new(&r, g, 8).unwrap());
        let tate = TateComplex::new(quot, 3, 8).unwrap();
        assert!(tate.to_resolution().verify().is_ok(), "{gens:?}");
        for m in 0..=3 {
            assert_eq!(tate.levels[m].len() as u64, closed_form_rank(nvars, gens.len(), m));
        }
        let res = Arc::new(tate.to_resolution().clone());
        let e = ExtAlgebra::compute(res, 2, LiftStrategy::Canonical).unwrap();
        let chk = check_presentation(&tate, &e);
        assert_eq!(chk.checked, nvars * nvars);
        assert!(chk.mismatches.is_empty(), "{gens:?}: {:?}", chk.mismatches);
    }
}

#[test]
fn modified_ci_of_sl2_level1() {
    let lie = LieAlgebraBasis::new(RootType::A, 1).unwrap();
    let c = affine_c2(&lie, 1).unwrap();
    let m = modified_ci(&c.ring, &c.generators, 6, 4).unwrap();
    assert_eq!(m.new_variables.len(), 5);
    assert!(m.ci.is_yes(), "{:?}", m.ci);
    assert_eq!(m.presentation.dims, [1, 8, 28 + 5, 56 + 40, 70 + 140 + 15]);
    let t = quotient_target(&c.ring, &c.generators, 4).unwrap();
    assert_eq!(t.dims, [1, 3, 3 + 5, 1 + 15, 15 + 15]);
}
