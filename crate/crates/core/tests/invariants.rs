use c2coh::gradedquot::{complete_intersection_series, GradedQuotient};
use c2coh::polyring::{Polynomial, RingSpec};
use c2coh::resolution::minimal_resolution;
use c2coh::tate::{ci_ext_series, closed_form_rank};
use c2coh::yoneda::{ExtAlgebra, LiftStrategy};
use proptest::prelude::*;
use std::sync::Arc;

fn ideal() -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
    // Up to three binomials a*x^i*y^(d-i) + b*x^(d-i')*y^i' of degree 2 or 3.
    prop::collection::vec((0u32..=3, 0u32..=3, -2i64..=2), 1..=3)
}

fn build(terms: &[(u32, u32, i64)]) -> (c2coh::polyring::Ring, Vec<Polynomial>) {
    let r = RingSpec::new([("x", 1), ("y", 1)]).unwrap();
    let gens = terms
        .iter()
        .map(|&(i, j, c)| {
            let d = 2 + (i + j) % 2;
            let (i, j) = (i.min(d), j.min(d));
            let a = &Polynomial::var(&r, 0).pow(i) * &Polynomial::var(&r, 1).pow(d - i);
            let b = &Polynomial::var(&r, 0).pow(d - j) * &Polynomial::var(&r, 1).pow(j);
            &a + &b.scale(&c2coh::exactalg::q(c))
        })
        .filter(|g: &Polynomial| !g.is_zero())
        .collect();
    (r, gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolutions_are_exact_minimal_complexes(terms in ideal()) {
        let (r, gens) = build(&terms);
        prop_assume!(!gens.is_empty());
        let quot = Arc::new(GradedQuotient::new(&r, gens, 7).unwrap());
        let res = minimal_resolution(quot.clone(), 4, 7).unwrap();
        prop_assert!(res.verify().is_ok());
        for i in 0..=4 {
            for j in 0..i as u32 {
                prop_assert_eq!(res.beta(i, j), 0);
            }
        }
        // Euler characteristic: Σ_i (-1)^i Σ_j β_ij H_R(d - j) = [d = 0] for d < levels.
        let h = quot.hilbert();
        for d in 0..=4u32 {
            let mut chi = 0i64;
            for i in 0..=4 {
                for j in 0..=d {
                    chi += (-1i64).pow(i as u32) * (res.beta(i, j) * h[(d - j) as usize]) as i64;
                }
            }
            prop_assert_eq!(chi, i64::from(d == 0));
        }
    }

    #[test]
    fn lifts_do_not_change_products(terms in ideal()) {
        let (r, gens) = build(&terms);
        prop_assume!(!gens.is_empty());
        let quot = Arc::new(GradedQuotient::new(&r, gens, 6).unwrap());
        let res = Arc::new(minimal_resolution(quot, 3, 6).unwrap());
        let a = ExtAlgebra::compute(res.clone(), 3, LiftStrategy::Canonical).unwrap();
        let b = ExtAlgebra::compute(res, 3, LiftStrategy::Reversed).unwrap();
        for p in 0..=3 {
            for qd in 0..=3 - p {
                for c in 0..a.dim(qd) {
                    for k in 0..a.dim(p) {
                        prop_assert_eq!(a.product_basis((qd, c), (p, k)), b.product_basis((qd, c), (p, k)));
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_matches_series(n in 0usize..6, r in 0usize..5, m in 0usize..9) {
        prop_assert_eq!(ci_ext_series(n, r, m)[m], closed_form_rank(n, r, m));
    }
}

#[test]
fn ci_series_of_two_quadrics() {
    assert_eq!(complete_intersection_series(&[1, 1], &[2, 2], 4), [1, 2, 1, 0, 0]);
}
