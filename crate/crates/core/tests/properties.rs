//! Cross-module properties over random inputs.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use graphshift::builtin::{grid_source, grid_word, torus_graph, PeriodicColoring};
use graphshift::cayley::{covering_from_cayley, hard_square, GroupPresentation};
use graphshift::config::Caps;
use graphshift::metric::{distance, Distance};
use graphshift::random;
use graphshift::sft::{is_member, member_finite};
use graphshift::symmetry::{is_covering, quotient, SubgroupSpec};
use graphshift::{canonicalize, GraphSource, Label};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_vertex_names(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random::alphabets(3, 2);
        let g = random::connected_graph(&mut rng, 9, 3, 2);
        let c = canonicalize(&g, &a).unwrap();
        prop_assert_eq!(canonicalize(&random::shuffled(&mut rng, &g), &a).unwrap(), c.clone());
        prop_assert_eq!(canonicalize(&c.to_based_graph(&a), &a).unwrap(), c);
    }

    #[test]
    fn distance_is_symmetric_and_zero_only_on_equals(s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = random::alphabets(2, 2);
        let x = canonicalize(&random::connected_graph(&mut ChaCha8Rng::seed_from_u64(s1), 5, 2, 2), &a).unwrap();
        let y = canonicalize(&random::connected_graph(&mut ChaCha8Rng::seed_from_u64(s2), 5, 2, 2), &a).unwrap();
        let (gx, gy) = (GraphSource::Finite(x.clone()), GraphSource::Finite(y.clone()));
        let d = distance(&gx, &gy, 10).unwrap();
        prop_assert_eq!(d, distance(&gy, &gx, 10).unwrap());
        prop_assert_eq!(d == Distance::Zero, x == y);
    }

    #[test]
    fn periodic_hard_square_grids_fold_to_members(mask in 0u32..512) {
        // a 3×3-periodic colouring of the grid is valid exactly when its torus is
        let f = move |i: usize, j: usize| Label((mask >> (3 * i + j) & 1) as u8);
        let torus = torus_graph(3, 3, f);
        let grid = grid_source(PeriodicColoring::from_fn(3, 3, f));
        let h = SubgroupSpec::new([grid_word(3, 0), grid_word(0, 3)]);
        let q = quotient(&grid, &h, &Caps::default()).unwrap();
        prop_assert_eq!(&q, &torus);
        prop_assert!(is_covering(&grid, &GraphSource::Finite(q), 5).is_yes());
        let d = hard_square();
        if is_member(&d, &torus) {
            prop_assert!(covering_from_cayley(&GroupPresentation::z2(), &torus, 5).unwrap().is_yes());
        }
    }

    #[test]
    fn membership_is_invariant_under_shifts(k in 1usize..5, mask in 0u32..16) {
        let f = move |i: usize, j: usize| Label((mask >> ((i % 2) * 2 + j % 2) & 1) as u8);
        let x = torus_graph(2 * k, 2, f);
        let d = hard_square();
        let verdict = member_finite(&d, &x).unwrap().is_member();
        for u in x.names() {
            prop_assert_eq!(is_member(&d, &x.shift(&u).unwrap()), verdict);
        }
    }
}
