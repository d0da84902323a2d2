//! Randomized contracts for the arithmetic core and the certificate engine.
//!
//! Everything here is exact: a failing case is a genuine counterexample,
//! never numerical noise. Case counts are kept modest because each instance
//! exercises big-rational arithmetic end to end.

use proptest::prelude::*;

use polycert::{
    cumulative_support, falsify, find_min_level, log_set, rational, search_certificate,
    search_certificate_with, verify_certificate, LevelSearch, LinearProgram,
    LpFormulation, LpOutcome, MultiIndex, ProblemInstance, Rational, SearchOutcome,
    SparsePolynomial,
};

fn arb_dimension() -> impl Strategy<Value = usize> {
    1usize..=3
}

/// Up to `max_terms` monomials, per-variable exponents at most `max_exp`,
/// coefficients with numerators in `numers` and denominators in 1..=4.
fn arb_poly(
    dimension: usize,
    max_exp: u32,
    max_terms: usize,
    numers: std::ops::RangeInclusive<i64>,
) -> BoxedStrategy<SparsePolynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, dimension), numers, 1i64..=4),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        SparsePolynomial::from_terms(
            dimension,
            terms
                .into_iter()
                .map(|(exps, nu, de)| (MultiIndex::new(exps), rational(nu, de))),
        )
    })
    .boxed()
}

fn arb_poly_pair() -> impl Strategy<Value = (SparsePolynomial, SparsePolynomial)> {
    arb_dimension().prop_flat_map(|d| (arb_poly(d, 2, 5, -9..=9), arb_poly(d, 2, 5, -9..=9)))
}

fn arb_nonneg_pair() -> impl Strategy<Value = (SparsePolynomial, SparsePolynomial)> {
    arb_dimension().prop_flat_map(|d| (arb_poly(d, 2, 5, 0..=9), arb_poly(d, 2, 5, 0..=9)))
}

fn arb_point(dimension: usize) -> BoxedStrategy<Vec<Rational>> {
    prop::collection::vec((-4i64..=4, 1i64..=3).prop_map(|(n, d)| rational(n, d)), dimension)
        .boxed()
}

/// A level form with every unit monomial present plus a few nonnegative
/// extras, so the support precondition always holds.
fn arb_level_form() -> BoxedStrategy<SparsePolynomial> {
    arb_dimension()
        .prop_flat_map(|d| {
            (
                prop::collection::vec(1i64..=3, d),
                prop::collection::vec(
                    (prop::collection::vec(0u32..=2, d), 0i64..=3, 1i64..=2),
                    0..=3,
                ),
            )
                .prop_map(move |(units, extras)| {
                    let units = units
                        .into_iter()
                        .enumerate()
                        .map(|(i, c)| (MultiIndex::unit(d, i), rational(c, 1)));
                    let extras = extras
                        .into_iter()
                        .map(|(exps, nu, de)| (MultiIndex::new(exps), rational(nu, de)));
                    SparsePolynomial::from_terms(d, units.chain(extras))
                })
        })
        .boxed()
}

/// An instance certified at level 1 by construction: f = q + h(r - 1) with
/// q carrying a positive coefficient (at least 1/2) on every monomial of
/// the level-1 cumulative support.
fn arb_positive_instance() -> BoxedStrategy<ProblemInstance> {
    arb_level_form()
        .prop_flat_map(|r| {
            let d = r.dimension();
            let support: Vec<MultiIndex> =
                cumulative_support(&r, 1).unwrap().iter().cloned().collect();
            let len = support.len();
            (
                Just(r),
                prop::collection::vec(1i64..=6, len),
                arb_poly(d, 1, 3, -3..=3),
            )
        })
        .prop_map(|(r, numers, h)| {
            let d = r.dimension();
            let support = cumulative_support(&r, 1).unwrap();
            let q = SparsePolynomial::from_terms(
                d,
                support.iter().cloned().zip(numers.into_iter().map(|n| rational(n, 2))),
            );
            let shifted = &r - &SparsePolynomial::one(d);
            let f = &q + &(&h * &shifted);
            ProblemInstance::new(f, r, rational(1, 1)).unwrap()
        })
        .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_hold(((a, b), c) in arb_poly_pair().prop_flat_map(|(a, b)| {
        let d = a.dimension();
        (Just((a, b)), arb_poly(d, 2, 5, -9..=9))
    })) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, SparsePolynomial::zero(a.dimension()));
        prop_assert_eq!(&a * &SparsePolynomial::one(a.dimension()), a.clone());
    }

    #[test]
    fn powers_match_repeated_multiplication((a, _) in arb_poly_pair(), k in 0u32..=3) {
        let mut expected = SparsePolynomial::one(a.dimension());
        for _ in 0..k {
            expected = &expected * &a;
        }
        prop_assert_eq!(a.pow(k), expected);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        ((a, b), x) in arb_poly_pair().prop_flat_map(|(a, b)| {
            let d = a.dimension();
            (Just((a, b)), arb_point(d))
        })
    ) {
        prop_assert_eq!((&a + &b).evaluate(&x), a.evaluate(&x) + b.evaluate(&x));
        prop_assert_eq!((&a * &b).evaluate(&x), a.evaluate(&x) * b.evaluate(&x));
    }

    #[test]
    fn division_recomposes_and_remainder_is_reduced((f, d) in arb_poly_pair()) {
        prop_assume!(!d.is_zero());
        let (quotient, remainder) = f.div_rem(&d);
        prop_assert_eq!(&(&quotient * &d) + &remainder, f.clone());
        prop_assert_eq!(f.reduce_mod(&d), remainder.clone());
        let (lead, _) = d.leading_term().unwrap();
        for (index, _) in remainder.terms() {
            prop_assert!(!lead.divides(index));
        }
    }

    #[test]
    fn exact_division_inverts_multiplication((f, d) in arb_poly_pair()) {
        prop_assume!(!d.is_zero());
        let product = &f * &d;
        prop_assert_eq!(product.divide_exact(&d), Some(f));
    }

    #[test]
    fn log_set_identities_hold((p, q) in arb_nonneg_pair(), k in 0u32..=3, c in 1i64..=5) {
        let lp = log_set(&p).unwrap();
        let lq = log_set(&q).unwrap();
        prop_assert_eq!(log_set(&(&p + &q)).unwrap(), lp.union(&lq));
        prop_assert_eq!(log_set(&(&p * &q)).unwrap(), lp.minkowski_sum(&lq));
        prop_assert_eq!(log_set(&p.scale(&rational(c, 3))).unwrap(), lp.clone());
        prop_assert_eq!(log_set(&p.pow(k)).unwrap(), lp.minkowski_power(k));
    }

    #[test]
    fn display_round_trips_through_the_parser((p, _) in arb_poly_pair()) {
        let text = p.to_string();
        let reparsed = polycert::parse_polynomial(&text, p.dimension()).unwrap();
        prop_assert_eq!(reparsed, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Programs built around a known feasible point are never reported
    /// infeasible, and any reported optimum satisfies the constraints and
    /// dominates the known point.
    #[test]
    fn lp_respects_a_known_feasible_point(
        (rows, x0, objective) in (2usize..=4, 1usize..=3).prop_flat_map(|(nv, nr)| {
            (
                prop::collection::vec(prop::collection::vec(-4i64..=4, nv), nr),
                prop::collection::vec(0i64..=5, nv),
                prop::collection::vec(-3i64..=3, nv),
            )
        })
    ) {
        let nv = x0.len();
        let x0: Vec<Rational> = x0.into_iter().map(|v| rational(v, 1)).collect();
        let mut lp = LinearProgram::new(nv);
        lp.set_objective(objective.iter().map(|&c| rational(c, 1)).collect());
        for row in &rows {
            let coeffs: Vec<Rational> = row.iter().map(|&a| rational(a, 1)).collect();
            let rhs = coeffs
                .iter()
                .zip(&x0)
                .map(|(a, x)| a * x)
                .fold(rational(0, 1), |acc, v| acc + v);
            lp.add_equality(coeffs, rhs);
        }
        match lp.solve() {
            LpOutcome::Optimal { assignment, objective: value } => {
                for row in &rows {
                    let lhs = row
                        .iter()
                        .zip(&assignment)
                        .map(|(&a, x)| rational(a, 1) * x)
                        .fold(rational(0, 1), |acc, v| acc + v);
                    let rhs = row
                        .iter()
                        .zip(&x0)
                        .map(|(&a, x)| rational(a, 1) * x)
                        .fold(rational(0, 1), |acc, v| acc + v);
                    prop_assert_eq!(lhs, rhs);
                }
                for x in &assignment {
                    prop_assert!(*x >= rational(0, 1));
                }
                let at_x0 = objective
                    .iter()
                    .zip(&x0)
                    .map(|(&c, x)| rational(c, 1) * x)
                    .fold(rational(0, 1), |acc, v| acc + v);
                prop_assert!(value >= at_x0);
            }
            LpOutcome::Unbounded => {}
            LpOutcome::Infeasible => prop_assert!(false, "feasible program reported infeasible"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn averaged_power_sum_satisfies_its_contract(r in arb_level_form(), level in 0u32..=3) {
        let d = r.dimension();
        let g = polycert::build_g(&r, level, &rational(1, 1)).unwrap();
        let difference = &g - &SparsePolynomial::one(d);
        let shifted = &r - &SparsePolynomial::one(d);
        if shifted.is_zero() {
            prop_assert!(difference.is_zero());
        } else {
            prop_assert!(difference.divide_exact(&shifted).is_some());
        }
        prop_assert_eq!(log_set(&g).unwrap(), cumulative_support(&r, level).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// An instance built as f = q + h(r - 1) with full-support positive q is
    /// certified at level 1 or below, the certificate re-verifies, and the
    /// search keeps succeeding one level higher.
    #[test]
    fn constructed_positive_instances_certify_and_extend(instance in arb_positive_instance()) {
        let LevelSearch::Found(certificate) = find_min_level(&instance, 1) else {
            return Err(TestCaseError::fail("constructed instance not certified by level 1"));
        };
        prop_assert!(verify_certificate(&instance, &certificate).passed());
        let SearchOutcome::Found(next) = search_certificate(&instance, certificate.level + 1)
        else {
            return Err(TestCaseError::fail("certificate did not extend one level up"));
        };
        prop_assert!(verify_certificate(&instance, &next).passed());
        prop_assert!(falsify(&instance, 8, 1e-9).unwrap().is_none());
    }

    #[test]
    fn lp_formulations_agree_on_certifiability(instance in arb_positive_instance()) {
        for level in 0..=1 {
            let direct = search_certificate_with(&instance, level, LpFormulation::Direct);
            let normal = search_certificate_with(&instance, level, LpFormulation::NormalForm);
            match (direct, normal) {
                (SearchOutcome::Found(a), SearchOutcome::Found(b)) => {
                    prop_assert!(verify_certificate(&instance, &a).passed());
                    prop_assert!(verify_certificate(&instance, &b).passed());
                }
                (SearchOutcome::NotAtThisLevel, SearchOutcome::NotAtThisLevel) => {}
                _ => prop_assert!(false, "formulations disagree at level {}", level),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    /// Forcing f to be negative at a slice vertex makes the falsifier find a
    /// witness and leaves nothing for the certificate search to find.
    #[test]
    fn certification_and_refutation_exclude_each_other(
        (r, f0, axis) in arb_level_form().prop_flat_map(|r| {
            let d = r.dimension();
            (Just(r), arb_poly(d, 2, 4, -5..=5), 0..d)
        })
    ) {
        let d = r.dimension();
        let vertex: Vec<Rational> = (0..d)
            .map(|i| if i == axis { rational(1, 1) } else { rational(0, 1) })
            .collect();
        let scaled = r.scale(&r.evaluate(&vertex).recip());
        let offset = f0.evaluate(&vertex) + rational(1, 1);
        let f = &f0 - &SparsePolynomial::constant(d, offset);
        let instance = ProblemInstance::new(f, scaled, rational(1, 1)).unwrap();

        let witness = falsify(&instance, 8, 1e-9).unwrap();
        prop_assert!(witness.is_some(), "vertex counterexample missed");
        let certified = matches!(find_min_level(&instance, 2), LevelSearch::Found(_));
        prop_assert!(!certified, "instance certified despite a negative slice point");
    }

    /// The minimal level is invariant under rescaling the height to 1, and
    /// certificates transport across the rescaling.
    #[test]
    fn height_rescaling_preserves_certificates(
        instance in arb_positive_instance(),
        numer in 1i64..=4,
        denom in 1i64..=4,
    ) {
        let height = rational(numer, denom);
        let scaled = ProblemInstance::new(
            instance.target().clone(),
            instance.level_form().scale(&height),
            height.clone(),
        )
        .unwrap();
        let unit = scaled.with_unit_height();
        match (find_min_level(&scaled, 2), find_min_level(&unit, 2)) {
            (LevelSearch::Found(a), LevelSearch::Found(b)) => {
                prop_assert_eq!(a.level, b.level);
                prop_assert!(verify_certificate(&unit, &a.rescaled_to_unit()).passed());
                prop_assert!(verify_certificate(&scaled, &b.rescaled_from_unit(&height)).passed());
            }
            (LevelSearch::Exhausted { .. }, LevelSearch::Exhausted { .. }) => {
                prop_assert!(false, "constructed instance not certified by level 2");
            }
            _ => prop_assert!(false, "height rescaling changed certifiability"),
        }
    }
}
