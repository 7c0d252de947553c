use proptest::prelude::*;
use quandle_core::cohomology::{catalog, pullback_cocycle};
use quandle_core::knots::{linking_matrix, oracle_tk, state_sum};
use quandle_core::quandle::is_isomorphic;
use quandle_core::{BraidWord, Coefficients, Cochain, Quandle};

fn braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|strands| {
        let letter = (1..strands as i64, any::<bool>()).prop_map(|(i, neg)| if neg { -i } else { i });
        prop::collection::vec(letter, 1..8).prop_map(move |ls| BraidWord::new(strands, ls).unwrap())
    })
}

fn trivial_cocycle(weights: &[Vec<i64>]) -> Cochain {
    let k = weights.len();
    let mut terms: Vec<([usize; 2], i64)> = Vec::new();
    for (i, row) in weights.iter().enumerate() {
        for (j, &w) in row.iter().enumerate() {
            if i != j && w != 0 {
                terms.push(([i, j], w));
            }
        }
    }
    let refs: Vec<(&[usize], i64)> = terms.iter().map(|(t, w)| (&t[..], *w)).collect();
    Cochain::from_terms(k, 2, Coefficients::Integers, &refs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn trivial_quandle_sums_follow_linking_numbers(
        b in braid(),
        raw in prop::collection::vec(-3i64..=3, 9),
    ) {
        let weights: Vec<Vec<i64>> = raw.chunks(3).map(|r| r.to_vec()).collect();
        let phi = trivial_cocycle(&weights);
        let got = state_sum(&b, &Quandle::trivial(3), &phi).unwrap();
        prop_assert_eq!(got, oracle_tk(&linking_matrix(&b), &weights).unwrap());
    }

    #[test]
    fn markov_moves_preserve_the_invariant(
        b in braid(),
        conj in prop::collection::vec(1i64..=3, 0..3),
        positive in any::<bool>(),
    ) {
        let s4 = Quandle::s4();
        let phi = catalog::phi_s4();
        let base = state_sum(&b, &s4, &phi).unwrap();
        let w: Vec<i64> = conj.into_iter().filter(|&i| (i as usize) < b.strands()).collect();
        if !w.is_empty() {
            let w = BraidWord::new(b.strands(), w).unwrap();
            prop_assert_eq!(&state_sum(&b.conjugate_by(&w), &s4, &phi).unwrap(), &base);
        }
        prop_assert_eq!(state_sum(&b.stabilize(positive), &s4, &phi).unwrap(), base);
    }

    #[test]
    fn isomorphic_quandles_give_equal_sums(b in braid()) {
        let s4 = Quandle::s4();
        let alex = Quandle::alexander(2, &[1, 1, 1]).unwrap();
        let h = is_isomorphic(&alex, &s4).expect("S4 is Z2[T]/(T^2+T+1)");
        let phi = catalog::phi_s4();
        let pulled = pullback_cocycle(&h, &phi).unwrap();
        prop_assert_eq!(state_sum(&b, &alex, &pulled).unwrap(), state_sum(&b, &s4, &phi).unwrap());
    }

    #[test]
    fn linking_matrix_is_symmetric(b in braid()) {
        let l = linking_matrix(&b);
        for u in 0..l.component_count() {
            for v in 0..l.component_count() {
                prop_assert_eq!(l.between(&[u], &[v]), l.between(&[v], &[u]));
            }
        }
    }
}
