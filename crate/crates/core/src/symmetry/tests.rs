use proptest::prelude::*;

use crate::error::Error;

use super::*;
use crate::alphabet::{Label, Port};
use crate::builtin::{grid_source, grid_word, monochromatic_grid, monochromatic_torus, torus_graph, PeriodicColoring};
use crate::canonical::CanonicalGraph;
use crate::config::Caps;
use crate::language::PrefixLanguage;
use crate::source::GraphSource;

fn w(p: &[(u8, u8)]) -> PathWord {
    PathWord::from_pairs(p)
}

fn aa(k: usize) -> PathWord {
    grid_word(k as i64, 0)
}

fn bb(k: usize) -> PathWord {
    grid_word(0, k as i64)
}

fn marked_torus() -> CanonicalGraph {
    torus_graph(2, 2, |i, j| Label(u8::from(i == 0 && j == 0)))
}

fn path3() -> CanonicalGraph {
    // a - b - c joined a→b by port 0/1 and b→c by port 0/1: an asymmetric path
    crate::canonical::canonicalize_raw(2, 3, 0, |v| Label(v as u8), |v, p| match (v, p.0) {
        (0, 0) => Some((1, Port(1))),
        (1, 1) => Some((0, Port(0))),
        (1, 0) => Some((2, Port(1))),
        (2, 1) => Some((1, Port(0))),
        _ => None,
    })
    .unwrap()
}

#[test]
fn periods() {
    let t3 = monochromatic_torus(3, 3);
    assert!(is_period(&t3, &PathWord::empty()).unwrap());
    assert!(is_period(&t3, &w(&[(0, 1)])).unwrap());
    assert!(!is_period(&marked_torus(), &w(&[(0, 1)])).unwrap());
    assert!(is_period(&t3, &w(&[(0, 0)])).is_err());
}

#[test]
fn stabilizer_orders() {
    assert_eq!(stabilizer(&CanonicalGraph::single_vertex(2, Label(0))).order(), 1);
    for k in 2..=4 {
        let s = stabilizer(&monochromatic_torus(k, k));
        assert_eq!(s.order(), k * k);
        assert!(s.check_axioms());
    }
    let s = stabilizer(&marked_torus());
    assert_eq!(s.order(), 1);
    assert!(s.check_axioms());
    // the 2×2 torus coloured by row has stabilizer of order 2
    let rows = stabilizer(&torus_graph(2, 2, |i, _| Label(i as u8)));
    assert_eq!(rows.order(), 2);
    assert!(rows.check_axioms());
}

#[test]
fn periodicity_classes() {
    assert_eq!(
        classify_periodicity(&CanonicalGraph::single_vertex(4, Label(0))),
        Periodicity::StronglyPeriodic { weakly_periodic: false, density_radius: 0 }
    );
    assert_eq!(
        classify_periodicity(&monochromatic_torus(3, 3)),
        Periodicity::StronglyPeriodic { weakly_periodic: true, density_radius: 0 }
    );
    assert!(matches!(classify_periodicity(&path3()), Periodicity::StronglyPeriodic { weakly_periodic: false, density_radius: 2 }));
    let caps = Caps::default();
    assert_eq!(
        classify_source(&monochromatic_grid(), &caps).unwrap(),
        Periodicity::StronglyPeriodic { weakly_periodic: true, density_radius: 0 }
    );
    let sparse = grid_source(PeriodicColoring::from_fn(3, 3, |i, j| Label(u8::from(i == 0 && j == 0))));
    assert_eq!(
        classify_source(&sparse, &caps).unwrap(),
        Periodicity::StronglyPeriodic { weakly_periodic: true, density_radius: 2 }
    );
    assert!(classify_source(&crate::builtin::free_tree_source(2), &caps).is_ok());
}

#[test]
fn finite_quotients() {
    let caps = Caps::default();
    let t3 = GraphSource::Finite(monochromatic_torus(3, 3));
    assert_eq!(quotient(&t3, &SubgroupSpec::trivial(), &caps).unwrap(), monochromatic_torus(3, 3));
    let t4 = GraphSource::Finite(monochromatic_torus(4, 4));
    assert_eq!(quotient(&t4, &SubgroupSpec::new([aa(2)]), &caps).unwrap(), monochromatic_torus(2, 4));
    let bad = quotient(&GraphSource::Finite(marked_torus()), &SubgroupSpec::new([aa(1)]), &caps);
    assert!(matches!(bad, Err(Error::NotAPeriod(_))));
}

#[test]
fn grid_quotients_are_tori() {
    let caps = Caps::default();
    for k in 1..=5 {
        let q = quotient_map(&monochromatic_grid(), &SubgroupSpec::new([aa(k), bb(k)]), &caps).unwrap();
        assert_eq!(q.graph, monochromatic_torus(k, k));
        assert!(q.coset_map.check(2 * k + 2).is_ok());
    }
    let cyl = quotient(&monochromatic_grid(), &SubgroupSpec::new([aa(3)]), &Caps { cosets: 100, ..Caps::default() });
    assert_eq!(cyl.unwrap_err(), Error::InfiniteIndex(100));
}

#[test]
fn coverings_between_tori() {
    let t3 = GraphSource::Finite(monochromatic_torus(3, 3));
    let t6 = GraphSource::Finite(monochromatic_torus(6, 6));
    assert!(is_covering(&t3, &t3, 0).is_yes());
    assert!(is_covering(&t6, &t3, 0).is_yes());
    let v = is_covering(&t3, &t6, 0);
    assert!(v.is_no());
    assert_eq!(v.witness(), Some(&aa(3)));
    assert!(is_covering(&monochromatic_grid(), &t3, 4).is_yes());
    // a finite graph never covers the infinite grid
    assert!(is_covering(&t3, &monochromatic_grid(), 4).is_no());
    let marked = GraphSource::Finite(marked_torus());
    assert!(is_covering(&monochromatic_grid(), &marked, 4).is_no());
}

#[test]
fn coverings_carry_periods() {
    // every period of the cover is a period of the covered graph
    let t6 = monochromatic_torus(6, 6);
    let t3 = monochromatic_torus(3, 3);
    assert!(is_covering(&GraphSource::Finite(t6.clone()), &GraphSource::Finite(t3.clone()), 0).is_yes());
    for u in stabilizer(&t6).elements() {
        assert!(is_period(&t3, &u).unwrap());
    }
}

#[test]
fn separation() {
    let ball = PrefixLanguage::ball(4, 1);
    let mm = ball.product(&ball);
    let grid = monochromatic_grid();
    assert!(is_separated(&grid, &SubgroupSpec::trivial(), &mm).unwrap());
    assert!(is_separated(&grid, &SubgroupSpec::new([aa(3), bb(3)]), &mm).unwrap());
    assert!(!is_separated(&grid, &SubgroupSpec::new([aa(1)]), &mm).unwrap());
    let t6 = GraphSource::Finite(monochromatic_torus(6, 6));
    assert!(is_separated(&t6, &SubgroupSpec::new([aa(3)]), &mm).unwrap());
    assert!(!is_separated(&t6, &SubgroupSpec::new([aa(2)]), &mm).unwrap());
}

#[test]
fn window_preservation() {
    let caps = Caps::default();
    let ball = PrefixLanguage::ball(4, 1);
    let grid = monochromatic_grid();
    let r = verify_window_preservation(&grid, &SubgroupSpec::trivial(), &PrefixLanguage::epsilon(), &Caps { cosets: 10, ..caps });
    assert!(matches!(r, Err(Error::InfiniteIndex(_))));
    let t = GraphSource::Finite(torus_graph(3, 3, |i, j| Label(u8::from(i == j))));
    let r = verify_window_preservation(&t, &SubgroupSpec::trivial(), &ball, &caps).unwrap();
    assert!(r.ok());
    assert_eq!(r.checked, 9);
    let r = verify_window_preservation(&grid, &SubgroupSpec::new([aa(3), bb(3)]), &ball, &caps).unwrap();
    assert!(r.ok(), "{r:?}");
    assert_eq!(r.checked, 9);
    // the a-neighbours (1,0) and (2,0) are adjacent in the 3×3 torus only
    assert_eq!(r.induced_failures.len(), 9);
    let r = verify_window_preservation(&grid, &SubgroupSpec::new([aa(4), bb(4)]), &ball, &caps).unwrap();
    assert!(r.ok() && r.induced_failures.is_empty());
    let r = verify_window_preservation(&grid, &SubgroupSpec::new([aa(1), bb(3)]), &ball, &caps);
    assert!(matches!(r, Err(Error::PreconditionViolated(_))));
}

#[test]
fn conjugation() {
    let caps = Caps::default();
    let t4 = GraphSource::Finite(monochromatic_torus(4, 4));
    let h = SubgroupSpec::new([aa(2)]);
    assert!(conjugate_stabilizer_check(&t4, &h, &PathWord::empty(), &caps).unwrap());
    assert!(conjugate_stabilizer_check(&t4, &h, &bb(1), &caps).unwrap());
    let h3 = SubgroupSpec::new([aa(3), bb(3)]);
    assert!(conjugate_stabilizer_check(&monochromatic_grid(), &h3, &aa(1), &caps).unwrap());
    let striped = grid_source(PeriodicColoring::from_fn(3, 1, |i, _| Label(u8::from(i == 0))));
    assert!(conjugate_stabilizer_check(&striped, &h3, &w(&[(0, 1), (2, 3)]), &caps).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn stabilizers_are_groups(k1 in 1usize..4, k2 in 1usize..4, seed in any::<u16>()) {
        let x = torus_graph(k1, k2, |i, j| Label(((seed >> ((i * 3 + j) % 16)) & 1) as u8));
        let s = stabilizer(&x);
        prop_assert!(s.check_axioms());
        for u in s.elements() {
            prop_assert!(is_period(&x, &u).unwrap());
        }
    }

    #[test]
    fn quotients_are_covered(k1 in 1usize..5, k2 in 1usize..5, d1 in 1usize..3, d2 in 1usize..3) {
        let x = monochromatic_torus(k1 * d1, k2 * d2);
        let h = SubgroupSpec::new([aa(k1), bb(k2)]);
        let q = quotient_map(&GraphSource::Finite(x), &h, &Caps::default()).unwrap();
        prop_assert_eq!(q.graph.vertex_count(), k1 * k2);
        prop_assert!(q.coset_map.check(usize::MAX).is_ok());
    }
}
