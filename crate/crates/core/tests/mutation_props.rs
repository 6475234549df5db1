mod common;

use clusterbench::coxeter::{DynkinDiagram, ReducedWord, WeylGroup};
use clusterbench::quiver::{
    apply_reduction, find_reddening, find_reddening_parallel, gls_quiver, is_reddening_sequence,
    random_quiver, FramedState, IceQuiver, QuiverError, QuiverFile, ReductionScript,
    ReductionScriptFile,
};
use clusterbench::Seed;
use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn wild(seed: u64) -> (IceQuiver, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=6);
    let nf = rng.gen_range(0..n.min(3));
    let q = random_quiver(&mut rng, n, nf, 3);
    (q, rng)
}

fn random_sequence(rng: &mut ChaCha8Rng, q: &IceQuiver, len: usize) -> Vec<usize> {
    let mutable = q.mutable_vertices();
    (0..len).map(|_| *mutable.choose(rng).expect("mutable vertex")).collect()
}

fn is_skew_symmetric(q: &IceQuiver) -> bool {
    (0..q.len()).all(|i| (0..q.len()).all(|j| q.entry(i, j) == -q.entry(j, i)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mutation_is_an_involution(seed in any::<u64>()) {
        let (q, _) = wild(seed);
        for k in q.mutable_vertices() {
            let once = q.mutate(k).unwrap();
            prop_assert!(is_skew_symmetric(&once));
            prop_assert_eq!(once.frozen_flags(), q.frozen_flags());
            prop_assert_eq!(once.mutate(k).unwrap(), q.clone());
        }
    }

    #[test]
    fn exchange_rank_is_invariant(seed in any::<u64>(), len in 0usize..8) {
        let (q, mut rng) = wild(seed);
        prop_assume!(!q.mutable_vertices().is_empty());
        let seq = random_sequence(&mut rng, &q, len);
        let expected = rank_oracle(&q.exchange_matrix());
        prop_assert_eq!(q.exchange_rank(), expected);
        let mut cur = q.clone();
        for k in seq {
            cur = cur.mutate(k).unwrap();
            prop_assert_eq!(rank_oracle(&cur.exchange_matrix()), expected);
            prop_assert_eq!(cur.exchange_rank(), expected);
        }
    }

    #[test]
    fn c_vectors_stay_sign_coherent(seed in any::<u64>(), len in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=4);
        let nf = rng.gen_range(0..2);
        let q = random_quiver(&mut rng, n, nf, 2);
        let seq = random_sequence(&mut rng, &q, len);
        let mut state = FramedState::new(&q);
        for k in seq {
            state = state.mutate(k).unwrap();
            for v in state.mutable_vertices().to_vec() {
                let c = state.c_vector(v);
                let pos = c.iter().any(|&x| x > 0);
                let neg = c.iter().any(|&x| x < 0);
                prop_assert!(pos != neg, "c-vector {:?} of vertex {} is not sign coherent", c, v + 1);
                prop_assert_eq!(state.is_green(v), pos);
            }
        }
        prop_assert_eq!(state.base(), q.mutate_sequence(state.history()).unwrap());
    }

    #[test]
    fn reduction_scripts_compose(seed in any::<u64>()) {
        let (q, mut rng) = wild(seed);
        let mutable = q.mutable_vertices();
        prop_assume!(!mutable.is_empty());
        let len = rng.gen_range(0..4);
        let muts = random_sequence(&mut rng, &q, len);
        let freeze = *mutable.choose(&mut rng).unwrap();
        let first = ReductionScript { mutations: muts, ..Default::default() };
        let mid = apply_reduction(&q, &first).unwrap();
        let second = ReductionScript {
            mutations: random_sequence(&mut rng, &mid, 2),
            freezes: vec![freeze],
            deletions: Vec::new(),
        };
        let after_two = apply_reduction(&mid, &second).unwrap();
        let mut frozen = after_two.frozen_vertices();
        frozen.shuffle(&mut rng);
        frozen.truncate(rng.gen_range(1..=frozen.len()));
        let third = ReductionScript { deletions: frozen, ..Default::default() };
        let stepwise = apply_reduction(&after_two, &third).unwrap();
        let composed = first.then(&second).unwrap().then(&third).unwrap();
        prop_assert_eq!(apply_reduction(&q, &composed).unwrap(), stepwise);

        // Deletion labels of a later script refer to the smaller quiver.
        if after_two.frozen_vertices().len() >= 2 {
            let fv = after_two.frozen_vertices();
            let a = ReductionScript { deletions: vec![fv[0]], ..Default::default() };
            let smaller = apply_reduction(&after_two, &a).unwrap();
            let b = ReductionScript { deletions: vec![smaller.frozen_vertices()[0]], ..Default::default() };
            let two = apply_reduction(&smaller, &b).unwrap();
            prop_assert_eq!(apply_reduction(&after_two, &a.then(&b).unwrap()).unwrap(), two);
        }
    }

    #[test]
    fn quiver_and_seed_json_round_trip(seed in any::<u64>(), len in 0usize..4) {
        let (q, mut rng) = wild(seed);
        prop_assert_eq!(IceQuiver::from_json(&q.to_json()).unwrap(), q.clone());
        prop_assert_eq!(QuiverFile::from_quiver(&q).to_quiver().unwrap(), q.clone());
        prop_assume!(!q.mutable_vertices().is_empty());
        let seq = random_sequence(&mut rng, &q, len);
        let s = Seed::initial(&q).mutate_sequence(&seq).unwrap();
        let back = Seed::from_json(&s.to_json()).unwrap();
        prop_assert_eq!(back.quiver(), s.quiver());
        prop_assert_eq!(back.cluster(), s.cluster());
        prop_assert_eq!(back.to_json(), s.to_json());
    }
}

#[test]
fn gls_vertex_and_frozen_counts() {
    for rank in 2..=4 {
        let diagram = DynkinDiagram::type_a(rank);
        let g = WeylGroup::new(diagram.clone());
        let words = g.enumerate_reduced_words(&g.longest_element()).unwrap();
        for w in words.iter().step_by(if rank == 4 { 37 } else { 1 }) {
            let q = gls_quiver(&diagram, w).unwrap();
            assert_eq!(q.len(), w.len());
            assert_eq!(q.frozen_vertices().len(), rank);
            // the frozen vertices are the last occurrences of each letter
            for (k, &i) in w.letters().iter().enumerate() {
                let last = !w.letters()[k + 1..].contains(&i);
                assert_eq!(q.is_frozen(k), last, "word {w}, position {}", k + 1);
            }
            assert!(is_skew_symmetric(&q));
            assert!(q.has_full_rank(), "word {w}");
        }
    }
    let d = DynkinDiagram::type_a(4);
    let q = gls_quiver(&d, &WORD_RICHARDSON.parse().unwrap()).unwrap();
    assert_eq!((q.len(), q.frozen_vertices().len(), q.arrow_count()), (7, 4, 11));
    let short: ReducedWord = "2".parse().unwrap();
    let q = gls_quiver(&d, &short).unwrap();
    assert_eq!((q.len(), q.frozen_vertices().len()), (1, 1));
    assert!(gls_quiver(&d, &"1,1".parse().unwrap()).is_err());
}

#[test]
fn reddening_sequences_replay() {
    let d = DynkinDiagram::type_a(4);
    for word in [WORD_RICHARDSON, WORD_W0_A4] {
        let q = gls_quiver(&d, &word.parse().unwrap()).unwrap();
        let serial = find_reddening(&q, 10).expect("reddening sequence");
        assert!(is_reddening_sequence(&q, &serial).unwrap());
        let replay = FramedState::new(&q).mutate_sequence(&serial).unwrap();
        assert!(replay.is_all_red());
        for jobs in [2, 4] {
            assert_eq!(find_reddening_parallel(&q, 10, jobs), Some(serial.clone()));
        }
    }
    // acyclic: mutating at sources gives a maximal green sequence
    let kronecker = IceQuiver::from_arrows(vec![false, false], &[(0, 1, 2)]);
    assert_eq!(find_reddening(&kronecker, 6), Some(vec![0, 1]));
    // Markov quiver: no reddening sequence exists, so nothing is found.
    let markov = IceQuiver::from_arrows(vec![false; 3], &[(0, 1, 2), (1, 2, 2), (2, 0, 2)]);
    assert_eq!(find_reddening(&markov, 5), None);
    // a single green vertex is reddened by mutating it
    let a1 = IceQuiver::with_vertices(vec![false]);
    assert_eq!(find_reddening(&a1, 3), Some(vec![0]));
}

#[test]
fn reddening_agrees_across_job_counts_on_random_quivers() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let q = random_tame_quiver(&mut rng, 4, 2);
        let serial = find_reddening(&q, 6);
        assert_eq!(find_reddening_parallel(&q, 6, 3), serial);
        if let Some(seq) = serial {
            assert!(is_reddening_sequence(&q, &seq).unwrap());
        }
    }
}

#[test]
fn reduction_script_file_validation() {
    let f: ReductionScriptFile =
        serde_json::from_str(r#"{"steps":[{"op":"freeze","vertex":1},{"op":"mutate","vertex":2}]}"#).unwrap();
    assert!(matches!(f.to_script(), Err(QuiverError::PhaseOrder(_))));
    let f: ReductionScriptFile = serde_json::from_str(r#"{"mutations":[0]}"#).unwrap();
    assert!(f.to_script().is_err());
    assert!(serde_json::from_str::<ReductionScriptFile>(r#"{"mutate":[1]}"#).is_err());
    let s = ReductionScript { mutations: vec![0, 2], freezes: vec![1], deletions: vec![3] };
    assert_eq!(ReductionScriptFile::from_script(&s).to_script().unwrap(), s);
}
