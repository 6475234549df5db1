mod common;

use clusterbench::algebra::{is_laurent, parse_expression, RationalFunction};
use clusterbench::coxeter::DynkinDiagram;
use clusterbench::quiver::{gls_quiver, random_quiver, IceQuiver};
use clusterbench::seed::{
    closure, localization_certificate, specialize_frozen, starfish_membership, AlgebraFlavor,
    SeedError,
};
use clusterbench::Seed;
use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const U: AlgebraFlavor = AlgebraFlavor::InvertibleCoefficients;
const U_PLUS: AlgebraFlavor = AlgebraFlavor::NonInvertibleCoefficients;

fn small_wild(seed: u64) -> (IceQuiver, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=4);
    let nf = rng.gen_range(0..=1).min(n - 1);
    let q = random_quiver(&mut rng, n, nf, 2);
    let mutable = q.mutable_vertices();
    let len = rng.gen_range(0..=4);
    let seq = (0..len).map(|_| *mutable.choose(&mut rng).unwrap()).collect();
    (q, seq)
}

fn point(n: usize) -> Vec<BigRational> {
    [2, 3, 5, 7, 11, 13]
        .iter()
        .take(n)
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect()
}

fn a3_w0_quiver() -> IceQuiver {
    gls_quiver(&DynkinDiagram::type_a(3), &"1,2,1,3,2,1".parse().unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn variables_are_laurent_and_match_the_numeric_oracle(seed in any::<u64>()) {
        let (q, seq) = small_wild(seed);
        let s = Seed::initial(&q).mutate_sequence(&seq).unwrap();
        let pt = point(q.len());
        let expected = numeric_cluster_after(q.matrix(), &seq, &pt);
        for (v, x) in s.cluster().iter().enumerate() {
            prop_assert!(is_laurent(x).is_some(), "x{} = {} is not Laurent", v + 1, x);
            prop_assert_eq!(&x.evaluate(&pt).unwrap(), &expected[v]);
        }
        prop_assert_eq!(s.quiver(), &q.mutate_sequence(&seq).unwrap());
    }

    #[test]
    fn specialization_commutes_with_mutation(seed in any::<u64>()) {
        let (q, seq) = small_wild(seed);
        for f in q.frozen_vertices() {
            let lhs = specialize_frozen(&Seed::initial(&q).mutate_sequence(&seq).unwrap(), f).unwrap();
            let shifted: Vec<usize> = seq.iter().map(|&k| if k > f { k - 1 } else { k }).collect();
            let base = specialize_frozen(&Seed::initial(&q), f).unwrap();
            let rhs = base.mutate_sequence(&shifted).unwrap();
            prop_assert_eq!(lhs.cluster(), rhs.cluster());
            prop_assert_eq!(lhs.quiver(), rhs.quiver());
        }
    }

    #[test]
    fn freezing_keeps_the_other_mutations(seed in any::<u64>()) {
        let (q, seq) = small_wild(seed);
        let mutable = q.mutable_vertices();
        prop_assume!(mutable.len() >= 2);
        let k = mutable[seed as usize % mutable.len()];
        let rest: Vec<usize> = seq.into_iter().filter(|&v| v != k).collect();
        let frozen = Seed::initial(&q).freeze(k).unwrap();
        prop_assert!(frozen.mutate(k).is_err());
        let a = frozen.mutate_sequence(&rest).unwrap();
        let b = Seed::initial(&q).mutate_sequence(&rest).unwrap();
        prop_assert_eq!(a.cluster(), b.cluster());
        // arrows between two frozen vertices are not updated, so compare exchange columns
        let cols = a.quiver().mutable_vertices();
        for row in 0..q.len() {
            for &c in &cols {
                prop_assert_eq!(a.quiver().entry(row, c), b.quiver().entry(row, c));
            }
        }
    }
}

#[test]
fn finite_type_variables_have_positive_coefficients() {
    let a2 = IceQuiver::from_arrows(vec![false, false], &[(0, 1, 1)]);
    let a3 = IceQuiver::from_arrows(vec![false; 3], &[(0, 1, 1), (1, 2, 1)]);
    for q in [a2, a3, a3_w0_quiver()] {
        let report = closure(&Seed::initial(&q), 100).unwrap();
        for x in &report.variables {
            let l = is_laurent(x).unwrap_or_else(|| panic!("{x} is not Laurent"));
            assert!(l.terms().all(|(_, c)| c.is_positive()), "{x}");
        }
    }
}

#[test]
fn closure_exchange_graphs() {
    // pentagon and the associahedron of type A3: 14 vertices, 21 edges
    let a2 = IceQuiver::from_arrows(vec![false, false], &[(0, 1, 1)]);
    let r = closure(&Seed::initial(&a2), 100).unwrap();
    assert_eq!((r.seeds.len(), r.variables.len(), r.edges.len()), (5, 5, 5));
    let mut degree = [0; 5];
    for &(a, b, _) in &r.edges {
        assert!(a < b);
        degree[a] += 1;
        degree[b] += 1;
    }
    assert_eq!(degree, [2; 5]);
    let a3 = IceQuiver::from_arrows(vec![false; 3], &[(0, 1, 1), (1, 2, 1)]);
    let r = closure(&Seed::initial(&a3), 100).unwrap();
    assert_eq!((r.seeds.len(), r.variables.len(), r.edges.len()), (14, 9, 21));
    assert_eq!(brute_force_cluster_counts(a3.matrix(), 8), (14, 9));
    // the same counts with frozen vertices attached
    let r = closure(&Seed::initial(&a3_w0_quiver()), 100).unwrap();
    assert_eq!((r.seeds.len(), r.variables.len(), r.edges.len()), (14, 9, 21));
    let json = r.to_json();
    assert_eq!(json["seeds"], 14);
    assert_eq!(json["exchange_graph"].as_array().unwrap().len(), 21);
    // Kronecker is infinite: the guard trips
    let kronecker = IceQuiver::from_arrows(vec![false, false], &[(0, 1, 2)]);
    assert!(closure(&Seed::initial(&kronecker), 50).is_err());
}

#[test]
fn starfish_accepts_closure_variables_and_rejects_the_rest() {
    let q = a3_w0_quiver();
    let n = q.len();
    let report = closure(&Seed::initial(&q), 100).unwrap();
    for x in &report.variables {
        assert!(starfish_membership(&q, x, U_PLUS).unwrap().member, "{x}");
    }
    for bad in ["1/(1 + x1)", "1/x1", "x1/x2"] {
        let f = parse_expression(bad, n).unwrap();
        assert!(!starfish_membership(&q, &f, U).unwrap().member, "{bad}");
    }
    let frozen = q.frozen_vertices()[0];
    let inv = RationalFunction::var_pow(n, frozen, -1);
    assert!(starfish_membership(&q, &inv, U).unwrap().member);
    assert!(!starfish_membership(&q, &inv, U_PLUS).unwrap().member);
    let wrong_ring = parse_expression("x1", n + 1).unwrap();
    assert!(matches!(
        starfish_membership(&q, &wrong_ring, U),
        Err(SeedError::WrongRing { .. })
    ));
}

#[test]
fn localization_certificates_are_minimal() {
    let q = a3_w0_quiver();
    let n = q.len();
    for k in q.mutable_vertices() {
        for j in q.mutable_vertices().into_iter().filter(|&j| j != k) {
            for e in 0..=2 {
                // x_j / x_k^e needs exactly x_k^e
                let f = RationalFunction::var(n, j).mul(&RationalFunction::var_pow(n, k, -e));
                let d = localization_certificate(&q, k, &f, 4, U).unwrap();
                assert_eq!(d, Some(e as u32), "x{}/x{}^{e}", j + 1, k + 1);
                if e > 0 {
                    let lower = f.mul(&RationalFunction::var_pow(n, k, e - 1));
                    assert!(!starfish_membership(&q, &lower, U).unwrap().member);
                }
            }
        }
    }
    let k = q.mutable_vertices()[0];
    let f = RationalFunction::var_pow(n, k, -3);
    assert_eq!(localization_certificate(&q, k, &f, 2, U).unwrap(), None);
    // not in the frozen upper algebra to begin with
    let g = parse_expression("1/(1 + x1)", n).unwrap();
    assert!(matches!(
        localization_certificate(&q, k, &g, 2, U),
        Err(SeedError::NotInFrozenUpper(_))
    ));
    let frozen = q.frozen_vertices()[0];
    assert!(localization_certificate(&q, frozen, &g, 2, U).is_err());
}
