//! Property tests for the Kleisli isomorphism, free-theory normal forms,
//! `.mat` rendering and the adjunction transposes.

use lawvere::adjunctions::roundtrip::{math_identity, srng_identity};
use lawvere::adjunctions::{transpose_math_down, transpose_math_up, transpose_srng_down, transpose_srng_up};
use lawvere::freetheory::{tl_relation_check, FreeTerm};
use lawvere::kleisli::{theta_scalars, xi_scalars, KleisliMap};
use lawvere::matcat::{parse_mat, render_mat};
use lawvere::{Aleph0Map, Elem, FiniteCarrier, GaussianRational, Matrix, MultisetMonad, Nat, Tropical};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn nat_matrix(rows: usize, cols: usize, entries: Vec<u64>) -> Matrix<Nat> {
    Matrix::new(rows, cols, entries.into_iter().take(rows * cols).map(Nat::new).collect()).unwrap()
}

fn dims() -> impl Strategy<Value = (usize, usize, Vec<u64>)> {
    (0usize..4, 0usize..4, proptest::collection::vec(0u64..6, 16))
}

proptest! {
    #[test]
    fn theta_and_xi_are_inverse((rows, cols, entries) in dims()) {
        let h = nat_matrix(rows, cols, entries);
        let k = xi_scalars(&h).unwrap();
        prop_assert_eq!(theta_scalars(&k).unwrap(), h);
    }

    #[test]
    fn theta_turns_kleisli_composition_into_matrix_products(
        (a, b, e1) in dims(),
        c in 0usize..4,
        e2 in proptest::collection::vec(0u64..6, 16),
    ) {
        let (g, h) = (nat_matrix(a, b, e1), nat_matrix(b, c, e2));
        let kl = xi_scalars(&g).unwrap().compose(&xi_scalars(&h).unwrap()).unwrap();
        prop_assert_eq!(theta_scalars(&kl).unwrap(), g.compose(&h).unwrap());
    }

    #[test]
    fn kleisli_composition_is_associative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = KleisliMap::<MultisetMonad<Tropical>>::random(&mut rng, 2, 3, 3).unwrap();
        let g = KleisliMap::random(&mut rng, 3, 2, 3).unwrap();
        let h = KleisliMap::random(&mut rng, 2, 4, 3).unwrap();
        prop_assert_eq!(f.compose(&g).unwrap().compose(&h).unwrap(), f.compose(&g.compose(&h).unwrap()).unwrap());
    }

    #[test]
    fn relation_holds_for_any_reindexing(
        table in proptest::collection::vec(0usize..3, 0..4),
        coefficients in proptest::collection::vec(0u64..5, 4),
        picks in proptest::collection::vec(0usize..2, 3),
    ) {
        let f = Aleph0Map::new(3, table.clone()).unwrap();
        let g = nat_matrix(1, table.len(), coefficients);
        let v: Vec<Elem> = picks.iter().map(|&i| Elem::sym(["x", "y"][i])).collect();
        prop_assert!(tl_relation_check(&f, &g, &v).unwrap());
    }

    #[test]
    fn normal_forms_ignore_the_order_of_arguments(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = FreeTerm::<Nat>::random(&mut rng, &FiniteCarrier::symbols(&["x", "y", "z"]), 4);
        let n = t.arity();
        let rev_g = Matrix::from_fn(1, n, |_, j| t.coefficients().get(0, n - 1 - j).clone());
        let rev_v: Vec<Elem> = t.elems().iter().rev().cloned().collect();
        let flipped = FreeTerm::new(rev_g, rev_v).unwrap();
        prop_assert_eq!(flipped.normalize().unwrap(), t.normalize().unwrap());
    }

    #[test]
    fn rendered_matrices_parse_back(re in proptest::collection::vec(-4i64..5, 6), im in proptest::collection::vec(-4i64..5, 6)) {
        let m = Matrix::new(2, 3, re.iter().zip(&im).map(|(&a, &b)| GaussianRational::int(a, b)).collect()).unwrap();
        prop_assert_eq!(parse_mat::<GaussianRational>(&render_mat(&m)).unwrap(), m);
    }

    #[test]
    fn theory_transpose_round_trips((rows, cols, entries) in dims()) {
        let f = math_identity::<Nat>().unwrap();
        let functor = transpose_math_up(&f);
        let h = nat_matrix(rows, cols, entries);
        prop_assert_eq!(functor.apply(&h).unwrap(), h.clone());
        let again = transpose_math_up(&transpose_math_down(&functor).unwrap());
        prop_assert_eq!(again.apply(&h).unwrap(), h);
    }

    #[test]
    fn semiring_transpose_round_trips(counts in proptest::collection::vec(0u64..5, 3)) {
        let f = srng_identity::<Nat>().unwrap();
        let up = transpose_srng_up(&f);
        let phi = lawvere::Multiset::from_pairs(
            counts.iter().enumerate().map(|(i, &c)| (Elem::Idx(i), Nat::new(c))),
        );
        prop_assert_eq!(up.apply(&phi).unwrap(), phi.clone());
        let again = transpose_srng_up(&transpose_srng_down(&up).unwrap());
        prop_assert_eq!(again.apply(&phi).unwrap(), phi);
    }
}
