use proptest::prelude::*;
use qbinpos::analysis::{is_reciprocal, is_unimodal};
use qbinpos::criteria::{thm8_exponent, thm9_exponent};
use qbinpos::{q_binomial, CyclotomicCache, FactoredQExpression, FakeGaussianSpec, QuotientSpec};

fn factors() -> impl Strategy<Value = Vec<(u64, i64)>> {
    prop::collection::vec((1u64..=40, -2i64..=3), 0..8)
}

fn quotient() -> impl Strategy<Value = QuotientSpec> {
    (2u64..=80)
        .prop_flat_map(|n| (Just(n), 0..=n, 0..=n))
        .prop_map(|(n, k, l)| QuotientSpec::new(n, k, l))
}

fn fake_gaussian() -> impl Strategy<Value = FakeGaussianSpec> {
    (1u64..=30, prop::collection::vec(0u64..=4, 1..7)).prop_map(|(m, a)| FakeGaussianSpec::new(m, a))
}

#[test]
fn quotients_with_l_zero_are_q_binomials() {
    for n in 0..=60u64 {
        for k in 0..=n {
            let e = FactoredQExpression::from_quotient_spec(QuotientSpec::new(n, k, 0));
            assert_eq!(e.expand(), Ok(q_binomial(n as usize, k as i64)), "({n},{k})");
        }
    }
}

#[test]
fn l_one_exponents_match_floor_formula() {
    for n in 2..=120u64 {
        for k in 1..n {
            let e = FactoredQExpression::from_quotient_spec(QuotientSpec::new(n, k, 1));
            for d in 2..=n {
                assert_eq!(
                    e.cyclotomic_exponent(d),
                    thm8_exponent(n, k, d),
                    "(n={n}, k={k}, d={d})"
                );
            }
        }
    }
}

#[test]
fn l_two_exponents_match_floor_formula() {
    for n in 4..=120u64 {
        for k in 2..=n - 2 {
            let e = FactoredQExpression::from_quotient_spec(QuotientSpec::new(n, k, 2));
            for d in 2..=n {
                assert_eq!(
                    e.cyclotomic_exponent(d),
                    thm9_exponent(n, k, d),
                    "(n={n}, k={k}, d={d})"
                );
            }
        }
    }
}

#[test]
fn q_binomials_are_unimodal() {
    for n in 0..=60usize {
        for k in 0..=n as i64 {
            assert!(is_unimodal(&q_binomial(n, k)), "({n},{k})");
        }
    }
}

proptest! {
    #[test]
    fn both_expansion_routes_agree(f in factors()) {
        let e = FactoredQExpression::from_factors(f);
        let cache = CyclotomicCache::new();
        let via_cyclotomics = e.expand_via_cyclotomics(&cache);
        prop_assert_eq!(via_cyclotomics.is_ok(), e.is_polynomial());
        if let Ok(p) = via_cyclotomics {
            prop_assert_eq!(e.expand(), Ok(p));
        }
    }

    #[test]
    fn polynomiality_matches_expansion(f in factors()) {
        let e = FactoredQExpression::from_factors(f);
        prop_assert_eq!(e.is_polynomial(), e.expand().is_ok());
    }

    #[test]
    fn quotient_polynomiality_matches_expansion(spec in quotient()) {
        let e = FactoredQExpression::from_quotient_spec(spec);
        let expanded = e.expand();
        prop_assert_eq!(e.is_polynomial(), expanded.is_ok());
        if let Ok(p) = expanded {
            prop_assert!(is_reciprocal(&p));
            prop_assert!(p.coeff(0) == 1.into());
            prop_assert_eq!(p.degree(), Some(e.net_degree() as usize));
        }
    }

    #[test]
    fn fake_gaussian_polynomiality_matches_expansion(spec in fake_gaussian()) {
        let e = FactoredQExpression::from_fake_gaussian(&spec);
        let expanded = e.expand();
        prop_assert_eq!(e.is_polynomial(), expanded.is_ok());
        if let Ok(p) = expanded {
            prop_assert!(is_reciprocal(&p));
        }
    }

    #[test]
    fn quotient_symmetry(spec in quotient()) {
        let flipped = QuotientSpec::new(spec.n, spec.n - spec.k, spec.n - spec.l);
        prop_assert_eq!(
            FactoredQExpression::from_quotient_spec(spec),
            FactoredQExpression::from_quotient_spec(flipped)
        );
        prop_assert_eq!(
            FactoredQExpression::from_quotient_spec(spec),
            FactoredQExpression::from_quotient_spec(spec.normalized())
        );
    }

    #[test]
    fn inverse_cancels(f in factors()) {
        let e = FactoredQExpression::from_factors(f);
        prop_assert!(e.mul(&e.inverse()).is_one());
    }

    #[test]
    fn serde_round_trip(f in factors()) {
        let e = FactoredQExpression::from_factors(f);
        let json = serde_json::to_string(&e).unwrap();
        prop_assert_eq!(serde_json::from_str::<FactoredQExpression>(&json).unwrap(), e);
    }
}
