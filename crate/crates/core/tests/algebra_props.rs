use clusterbench::algebra::{is_laurent, parse_expression, poly_gcd, Polynomial, RationalFunction};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const NVARS: usize = 3;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, NVARS), -4i64..=4), 0..5)
        .prop_map(|terms| Polynomial::from_terms(NVARS, terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational() -> impl Strategy<Value = RationalFunction> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RationalFunction::new(n, d).expect("nonzero denominator"))
}

fn point() -> Vec<BigRational> {
    [3, -2, 5].iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parse_round_trip(f in rational()) {
        let back = parse_expression(&f.to_string(), NVARS).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn ring_axioms(f in rational(), g in rational(), h in rational()) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
        if !f.is_zero() {
            prop_assert!(f.div(&f).unwrap().is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(n in poly(), d in nonzero_poly(), r in nonzero_poly()) {
        // multiplying numerator and denominator by a common factor changes nothing
        let f = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let g = RationalFunction::new(n.mul(&r), d.mul(&r)).unwrap();
        prop_assert_eq!(&f, &g);
        if !f.is_zero() {
            prop_assert_eq!(poly_gcd(f.numerator(), f.denominator()).total_degree(), 0);
        }
    }

    #[test]
    fn gcd_scales_with_common_factor(p in nonzero_poly(), q in nonzero_poly(), r in nonzero_poly()) {
        let lhs = poly_gcd(&p.mul(&r), &q.mul(&r));
        let rhs = r.primitive_normalized().mul(&poly_gcd(&p, &q)).primitive_normalized();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_both(p in nonzero_poly(), q in nonzero_poly()) {
        let g = poly_gcd(&p, &q);
        prop_assert!(p.exact_div(&g).is_some());
        prop_assert!(q.exact_div(&g).is_some());
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in rational(), g in rational()) {
        let pt = point();
        if let (Ok(a), Ok(b)) = (f.evaluate(&pt), g.evaluate(&pt)) {
            prop_assert_eq!(f.mul(&g).evaluate(&pt).unwrap(), &a * &b);
            prop_assert_eq!(f.add(&g).evaluate(&pt).unwrap(), a + b);
        }
    }

    #[test]
    fn laurent_test_matches_denominator_shape(p in poly(), e in prop::collection::vec(0u32..3, NVARS)) {
        let den = Polynomial::from_terms(NVARS, [(e, BigInt::from(1))]);
        let f = RationalFunction::new(p, den).unwrap();
        let l = is_laurent(&f).expect("divided by a monomial");
        prop_assert_eq!(l.to_rational(), f.clone());
        let g = f.div(&parse_expression("1 + x1", NVARS).unwrap()).unwrap();
        if !f.is_zero() {
            prop_assert!(is_laurent(&g).is_none());
        }
    }
}

#[test]
fn non_monic_monomial_denominator_is_not_laurent() {
    let f = parse_expression("x1/2", 1).unwrap();
    assert!(is_laurent(&f).is_none());
    assert!(is_laurent(&parse_expression("(x1^2 + 1)/x1", 1).unwrap()).is_some());
}

#[test]
fn substitution_of_exchange_relation() {
    use std::collections::BTreeMap;
    let f = parse_expression("(1 + x2)/x1", 2).unwrap();
    let x1 = parse_expression("(1 + x2)/x1", 2).unwrap();
    let sub = BTreeMap::from([(0, x1), (1, parse_expression("x2", 2).unwrap())]);
    assert_eq!(f.substitute(&sub).unwrap(), parse_expression("x1", 2).unwrap());
}
