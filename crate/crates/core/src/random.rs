//! Seeded random port graphs, for property checks and the verification suite.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::alphabet::{Alphabets, Label, LabelAlphabet, Port, PortAlphabet};
use crate::graph::{BasedGraph, ConcreteGraph};

/// Alphabets with ports `p0..` and numeric labels.
pub fn alphabets(ports: usize, labels: usize) -> Alphabets {
    Alphabets::new(
        PortAlphabet::new((0..ports).map(|p| format!("p{p}"))).expect("distinct port names"),
        LabelAlphabet::numeric(labels),
    )
}

/// A connected port graph with at most `max_vertices` vertices: a random
/// spanning tree, then random extra edges and singleton loops on free ports.
pub fn connected_graph<R: Rng>(rng: &mut R, max_vertices: usize, ports: usize, labels: usize) -> BasedGraph {
    assert!(max_vertices >= 1 && ports >= 1 && labels >= 1);
    let target = rng.gen_range(1..=max_vertices);
    let mut g = ConcreteGraph::new(ports);
    let label = |rng: &mut R| Label(rng.gen_range(0..labels) as u8);
    let l = label(rng);
    g.add_vertex("v0", l).expect("fresh name");
    let free = |g: &ConcreteGraph| -> Vec<(usize, Port)> {
        (0..g.vertex_count())
            .flat_map(|v| (0..ports).map(move |p| (v, Port(p as u8))))
            .filter(|&(v, p)| g.slot(v, p).is_none())
            .collect()
    };
    while g.vertex_count() < target {
        let Some(&(v, p)) = free(&g).choose(rng) else { break };
        let l = label(rng);
        let w = g.add_vertex(format!("v{}", g.vertex_count()), l).expect("fresh name");
        let q = Port(rng.gen_range(0..ports) as u8);
        g.add_edge(v, p, w, q).expect("both slots free");
    }
    let extra = rng.gen_range(0..=g.vertex_count() * ports / 2);
    for _ in 0..extra {
        let slots = free(&g);
        let (Some(&a), Some(&b)) = (slots.choose(rng), slots.choose(rng)) else { break };
        if a == b {
            g.add_loop(a.0, a.1).expect("slot free");
        } else {
            g.add_edge(a.0, a.1, b.0, b.1).expect("slots free");
        }
    }
    let origin = rng.gen_range(0..g.vertex_count());
    BasedGraph::new(g, origin).expect("connected by construction")
}

/// The same pointed graph with vertices renamed and stored in a random order.
pub fn shuffled<R: Rng>(rng: &mut R, g: &BasedGraph) -> BasedGraph {
    let c = &g.graph;
    let n = c.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut h = ConcreteGraph::new(c.port_count());
    for (i, &v) in order.iter().enumerate() {
        h.add_vertex(format!("u{i}"), c.label(v)).expect("fresh name");
    }
    for ((v, p), (w, q)) in c.edges() {
        if (v, p) == (w, q) {
            h.add_loop(position[v], p).expect("slot free");
        } else {
            h.add_edge(position[v], p, position[w], q).expect("slots free");
        }
    }
    BasedGraph::new(h, position[g.origin]).expect("connected")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn graphs_are_connected_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let g = connected_graph(&mut rng, 6, 3, 2);
            assert!(g.graph.vertex_count() <= 6);
        }
    }

    #[test]
    fn shuffling_keeps_the_edge_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let g = connected_graph(&mut rng, 8, 4, 3);
        let h = shuffled(&mut rng, &g);
        assert_eq!(g.graph.edges().len(), h.graph.edges().len());
    }
}
