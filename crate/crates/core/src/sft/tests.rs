use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::alphabet::{LabelAlphabet, PortAlphabet};
use crate::builtin::{monochromatic_grid, monochromatic_torus, torus_graph, grid_source, PeriodicColoring};
use crate::graph::{BasedGraph, ConcreteGraph};
use crate::language::prefix_close;

fn w(p: &[(u8, u8)]) -> PathWord {
    PathWord::from_pairs(p)
}

fn alphabets(ports: &[&str], labels: usize) -> Alphabets {
    Alphabets::new(PortAlphabet::new(ports.iter().copied()).unwrap(), LabelAlphabet::numeric(labels))
}

fn grid_rules(labels: usize) -> Vec<ConstraintGroup> {
    let mut groups = Vec::new();
    for (p, inv) in [(0u8, 1u8), (1, 0), (2, 3), (3, 2)] {
        let win = prefix_close((0..4).map(|q| w(&[(p, q)])));
        groups.push(ConstraintGroup::new(win, ShapeRule::PortInverse { port: Port(p), inverse: Port(inv) }));
    }
    let relator = w(&[(0, 1), (2, 3), (1, 0), (3, 2)]);
    groups.push(ConstraintGroup::new(prefix_close([relator.clone()]), ShapeRule::RelatorCycle { word: relator }));
    let _ = labels;
    groups
}

fn hard_square() -> SftDefinition {
    let mut groups = grid_rules(2);
    for (p, q) in [(0u8, 1u8), (1, 0), (2, 3), (3, 2)] {
        let letter = Letter { exit: Port(p), entry: Port(q) };
        groups.push(ConstraintGroup::new(
            prefix_close([w(&[(p, q)])]),
            ShapeRule::NearestNeighbor { letter, pairs: BTreeSet::from([(Label(1), Label(1))]) },
        ));
    }
    SftDefinition::new(Alphabets::grid(2), Mode::Forbid, groups).unwrap()
}

fn torus_support(k: usize) -> BasedGraph {
    monochromatic_torus(k, k).to_based_graph(&Alphabets::grid(2))
}

#[test]
fn epsilon_window_graphs() {
    let caps = Caps::default();
    let one = window_graphs(&PrefixLanguage::epsilon(), &alphabets(&["a"], 1), &caps).unwrap();
    assert_eq!(one.len(), 2);
    let two = window_graphs(&PrefixLanguage::epsilon(), &alphabets(&["a"], 2), &caps).unwrap();
    assert_eq!(two.len(), 4);
}

#[test]
fn window_graphs_are_their_own_cuts() {
    let m = prefix_close([w(&[(0, 1), (1, 0)]), w(&[(1, 1)])]);
    let ys = window_graphs(&m, &alphabets(&["a", "b"], 1), &Caps::default()).unwrap();
    assert!(!ys.is_empty());
    for y in &ys {
        assert_eq!(navigate::cut_at(y, &0, &m), *y);
    }
}

#[test]
fn window_graphs_match_cuts_of_small_graphs() {
    // every cut of a graph is a window graph, and every window graph is a cut of itself
    let a = alphabets(&["a", "b"], 1);
    let m = PrefixLanguage::ball(2, 1);
    let ys = window_graphs(&m, &a, &Caps::default()).unwrap();
    let cuts: BTreeSet<CanonicalGraph> = all_graphs_naive(&a, 3).iter().map(|x| navigate::cut_at(x, &0, &m)).collect();
    assert_eq!(ys, cuts);
}

#[test]
fn window_graphs_cap() {
    let caps = Caps { window_graphs: 10, ..Caps::default() };
    let err = window_graphs(&PrefixLanguage::ball(4, 1), &Alphabets::grid(2), &caps).unwrap_err();
    assert!(matches!(err, Error::CapExceeded { .. }));
}

#[test]
fn hard_square_on_tori() {
    let d = hard_square();
    assert!(is_member(&d, &monochromatic_torus(3, 3)));
    let bad = torus_graph(3, 3, |i, j| Label(u8::from(i == 0 && j < 2)));
    let v = member_finite(&d, &bad).unwrap();
    assert!(v.is_violation());
    assert_eq!(colorings(&d, &torus_support(2)).unwrap().count, 7);
    assert_eq!(colorings(&d, &torus_support(3)).unwrap().count, 34);
}

#[test]
fn violation_witness_matches() {
    let d = hard_square();
    let x = torus_graph(2, 3, |i, _| Label(u8::from(i == 0)));
    let MembershipVerdict::Violation { witness, pattern } = member_finite(&d, &x).unwrap() else {
        panic!("expected a violation");
    };
    let s = GraphSource::Finite(x);
    assert!(crate::pattern::matches(&s, &witness, &pattern).unwrap());
}

#[test]
fn lazy_membership() {
    let d = hard_square();
    assert_eq!(member_up_to_radius(&d, &monochromatic_grid(), 5).unwrap(), MembershipVerdict::ConsistentUpToRadius(5));
    let ones = grid_source(PeriodicColoring::constant(Label(1)));
    assert!(member_up_to_radius(&d, &ones, 1).unwrap().is_violation());
    let torus = GraphSource::Finite(monochromatic_torus(2, 2));
    assert_eq!(member_up_to_radius(&d, &torus, 3).unwrap(), MembershipVerdict::Member);
}

#[test]
fn enumerate_one_vertex() {
    let caps = Caps::default();
    let e = enumerate(&hard_square(), 1, &caps).unwrap();
    assert_eq!(e.members.len(), 1);
    assert_eq!(e.members[0], monochromatic_torus(1, 1));
    let full = SftDefinition::new(alphabets(&["a"], 1), Mode::Forbid, vec![]).unwrap();
    assert_eq!(enumerate(&full, 1, &caps).unwrap().members.len(), 2);
}

#[test]
fn enumerate_cap() {
    let full = SftDefinition::new(alphabets(&["a"], 1), Mode::Forbid, vec![]).unwrap();
    let caps = Caps { enumerate_vertices: 2, ..Caps::default() };
    assert!(matches!(enumerate(&full, 3, &caps), Err(Error::CapExceeded { .. })));
}

#[test]
fn enumerate_matches_naive() {
    let caps = Caps::default();
    let full = SftDefinition::new(alphabets(&["a", "b"], 2), Mode::Forbid, vec![]).unwrap();
    for n in 1..=3 {
        assert_eq!(enumerate(&full, n, &caps).unwrap(), enumerate_naive(&full, n));
    }
    let hs = hard_square();
    assert_eq!(enumerate(&hs, 2, &caps).unwrap(), enumerate_naive(&hs, 2));
}

#[test]
fn orbits_group_shifts() {
    // the path a-b with two vertices has two pointed classes but one orbit
    let full = SftDefinition::new(alphabets(&["a", "b"], 1), Mode::Forbid, vec![]).unwrap();
    let e = enumerate(&full, 2, &Caps::default()).unwrap();
    let sizes: usize = e.orbits.iter().map(Vec::len).sum();
    assert_eq!(sizes, e.members.len());
    assert!(e.orbit_count() < e.members.len());
    for orbit in &e.orbits {
        let x = &e.members[orbit[0]];
        for &i in orbit {
            assert!(x.vertices().any(|v| x.rebase(v) == e.members[i]));
        }
    }
}

#[test]
fn colorings_single_vertex() {
    let mut g = ConcreteGraph::new(1);
    g.add_vertex("v", Label(0)).unwrap();
    let d = SftDefinition::new(alphabets(&["a"], 1), Mode::Forbid, vec![]).unwrap();
    assert_eq!(colorings(&d, &BasedGraph::new(g, 0).unwrap()).unwrap().count, 1);
}

#[test]
fn colorings_checkerboard() {
    let mut groups = grid_rules(2);
    for (p, q) in [(0u8, 1u8), (1, 0), (2, 3), (3, 2)] {
        let letter = Letter { exit: Port(p), entry: Port(q) };
        let pairs = BTreeSet::from([(Label(0), Label(0)), (Label(1), Label(1))]);
        groups.push(ConstraintGroup::new(prefix_close([w(&[(p, q)])]), ShapeRule::NearestNeighbor { letter, pairs }));
    }
    let d = SftDefinition::new(Alphabets::grid(2), Mode::Forbid, groups).unwrap();
    assert_eq!(colorings(&d, &torus_support(2)).unwrap().count, 2);
}

#[test]
fn symbolic_duals_agree() {
    let d = hard_square();
    let allow = to_allow_form_symbolic(&d);
    let forbid = to_forbid_form_symbolic(&allow);
    assert_eq!(allow.mode(), Mode::Allow);
    for x in [monochromatic_torus(2, 2), torus_graph(2, 2, |i, j| Label(((i + j) % 2) as u8)), torus_graph(2, 3, |i, _| Label(i as u8))] {
        let m = is_member(&d, &x);
        assert_eq!(is_member(&allow, &x), m);
        assert_eq!(is_member(&forbid, &x), m);
    }
}

#[test]
fn patterns_materialize_rules() {
    let a = alphabets(&["a"], 2);
    let win = PrefixLanguage::epsilon();
    let ones = ShapeRule::NearestNeighbor { letter: Letter { exit: Port(0), entry: Port(0) }, pairs: BTreeSet::from([(Label(1), Label(1))]) };
    let d = SftDefinition::new(a, Mode::Forbid, vec![ConstraintGroup::new(win, ones)]).unwrap();
    // the ε cut keeps the origin's own loop, so only the looped 1-vertex is forbidden
    let ps = d.patterns(&Caps::default()).unwrap();
    assert_eq!(ps.len(), 1);
    assert_eq!(ps[0].shape().label(0), Label(1));
    assert_eq!(ps[0].shape().neighbor(0, Port(0)), Some((0, Port(0))));
}

fn small_alphabets() -> Alphabets {
    alphabets(&["a", "b"], 2)
}

fn small_universe() -> &'static Vec<CanonicalGraph> {
    static U: std::sync::OnceLock<Vec<CanonicalGraph>> = std::sync::OnceLock::new();
    U.get_or_init(|| all_graphs_naive(&small_alphabets(), 4).into_iter().collect())
}

fn ball_graphs() -> &'static Vec<CanonicalGraph> {
    static Y: std::sync::OnceLock<Vec<CanonicalGraph>> = std::sync::OnceLock::new();
    Y.get_or_init(|| window_graphs(&PrefixLanguage::ball(2, 1), &small_alphabets(), &Caps::default()).unwrap().into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn explicit_duality(picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..6), allow_mode in any::<bool>()) {
        let ys = ball_graphs();
        let set: BTreeSet<CanonicalGraph> = picks.iter().map(|i| ys[i.index(ys.len())].clone()).collect();
        let mode = if allow_mode { Mode::Allow } else { Mode::Forbid };
        let group = ConstraintGroup::new(PrefixLanguage::ball(2, 1), ShapeRule::Listed(set));
        let d = SftDefinition::new(small_alphabets(), mode, vec![group]).unwrap();
        let caps = Caps::default();
        let allow = to_allow_form(&d, &caps).unwrap();
        let back = to_forbid_form(&allow, &caps).unwrap();
        for x in small_universe() {
            let m = is_member(&d, x);
            prop_assert_eq!(is_member(&allow, x), m);
            prop_assert_eq!(is_member(&back, x), m);
        }
    }

    #[test]
    fn membership_is_shift_invariant(i in any::<prop::sample::Index>(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let ys = ball_graphs();
        let set: BTreeSet<CanonicalGraph> = picks.iter().map(|i| ys[i.index(ys.len())].clone()).collect();
        let group = ConstraintGroup::new(PrefixLanguage::ball(2, 1), ShapeRule::Listed(set));
        let d = SftDefinition::new(small_alphabets(), Mode::Forbid, vec![group]).unwrap();
        let u = small_universe();
        let x = &u[i.index(u.len())];
        let m = is_member(&d, x);
        for name in x.names() {
            prop_assert_eq!(is_member(&d, &x.shift(&name).unwrap()), m);
        }
    }
}
