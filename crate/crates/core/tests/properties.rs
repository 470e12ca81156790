mod common;

use common::*;
use ncbtt_core::exactla::{kernel, rank, solve, Field, Scalar, SparseMatrix, SparseVec};
use ncbtt_core::hochschild::{chain_cochain_pairing, connes_b, delta, hoch_diff, is_cyclic, cyclic_project};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix(rows: usize, cols: usize, entries: &[i64], field: Field) -> SparseMatrix {
    let mut m = SparseMatrix::new(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, field.from_i64(entries[(r * cols + c) % entries.len()]));
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..6, entries in prop::collection::vec(-2i64..=2, 1..36), p in prop::sample::select(vec![0u64, 2, 3, 7])) {
        let field = if p == 0 { Field::Rational } else { Field::prime(p).unwrap() };
        let m = matrix(rows, cols, &entries, field);
        let ker = kernel(&m);
        prop_assert_eq!(rank(&m) + ker.len(), cols);
        for v in &ker {
            prop_assert!(m.mul_vec(v).is_empty());
        }
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn solve_returns_a_solution(rows in 1usize..6, cols in 1usize..6, entries in prop::collection::vec(-3i64..=3, 1..36), x in prop::collection::vec(-3i64..=3, 6)) {
        let m = matrix(rows, cols, &entries, Field::Rational);
        let xv: SparseVec = (0..cols).filter(|&i| x[i] != 0).map(|i| (i, Scalar::from(x[i]))).collect();
        let b = m.mul_vec(&xv);
        let y = solve(&m, &b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn operator_identities_on_random_inputs(seed in any::<u64>(), which in 0usize..7, n in 0usize..3, odd in any::<bool>()) {
        let a = &sign_zoo()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = rand_cochain(a, n, odd, &mut rng);
        prop_assert!(hoch_diff(a, &hoch_diff(a, &phi).unwrap()).unwrap().is_zero());
        prop_assert!(delta(a, &delta(a, &phi).unwrap()).unwrap().is_zero());
        let p = cyclic_project(a, &phi).unwrap();
        prop_assert!(is_cyclic(a, &p).unwrap());
        prop_assert_eq!(cyclic_project(a, &p).unwrap(), p.clone());
        prop_assert!(delta(a, &p).unwrap().is_zero());
        // ⟨Δφ, c⟩ = ±⟨φ, Bc⟩ on a random chain of matching weight.
        if n > 0 {
            let c = rand_chain(a, n - 1, !odd, &mut rng);
            let lhs = chain_cochain_pairing(a, &delta(a, &phi).unwrap(), &c).unwrap();
            let rhs = chain_cochain_pairing(a, &phi, &connes_b(a, &c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs.signed(!odd));
        }
    }
}
