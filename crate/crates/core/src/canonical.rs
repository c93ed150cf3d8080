//! Pointed graphs modulo isomorphism.
//!
//! A [`CanonicalGraph`] numbers its vertices in breadth-first order from the
//! origin, exploring ports in alphabet order. The vertex numbered `i` is named
//! by the shortlex-least path reaching it, so two pointed graphs are isomorphic
//! exactly when their canonical values are equal.

use std::collections::VecDeque;
use std::fmt;

use crate::alphabet::{Alphabets, Label, Port};
use crate::error::{Error, Result};
use crate::graph::{BasedGraph, ConcreteGraph};
use crate::navigate::{self, Navigate};
use crate::word::{Letter, PathWord};

/// Vertex index within a canonical graph. The origin is always `0`.
pub type VertexId = u32;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalGraph {
    ports: u8,
    labels: Vec<Label>,
    adj: Vec<Option<(VertexId, Port)>>,
}

/// Canonicalizes the connected component of `origin` in an arbitrary indexed
/// port graph with `n` vertices. Fails with [`Error::Disconnected`] when some
/// of the `n` vertices are not reached.
pub(crate) fn canonicalize_raw(
    ports: usize,
    n: usize,
    origin: usize,
    label: impl Fn(usize) -> Label,
    step: impl Fn(usize, Port) -> Option<(usize, Port)>,
) -> Result<CanonicalGraph> {
    let mut map: Vec<u32> = vec![u32::MAX; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    map[origin] = 0;
    order.push(origin);
    let mut adj = Vec::with_capacity(n * ports);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for p in 0..ports {
            let slot = step(v, Port(p as u8)).map(|(w, q)| {
                if map[w] == u32::MAX {
                    map[w] = order.len() as u32;
                    order.push(w);
                }
                (map[w], q)
            });
            adj.push(slot);
        }
        i += 1;
    }
    if order.len() < n {
        return Err(Error::Disconnected { reached: order.len(), total: n });
    }
    let labels = order.iter().map(|&v| label(v)).collect();
    Ok(CanonicalGraph { ports: ports as u8, labels, adj })
}

/// Canonical form of a based graph, checked against `alphabets`.
pub fn canonicalize(g: &BasedGraph, alphabets: &Alphabets) -> Result<CanonicalGraph> {
    g.graph.check_alphabets(alphabets)?;
    canonicalize_unchecked(g)
}

pub(crate) fn canonicalize_unchecked(g: &BasedGraph) -> Result<CanonicalGraph> {
    let cg = &g.graph;
    canonicalize_raw(
        cg.port_count(),
        cg.vertex_count(),
        g.origin,
        |v| cg.label(v),
        |v, p| cg.slot(v, p),
    )
}

impl CanonicalGraph {
    /// The one-vertex graph without edges.
    pub fn single_vertex(ports: usize, label: Label) -> Self {
        CanonicalGraph { ports: ports as u8, labels: vec![label], adj: vec![None; ports] }
    }

    pub fn port_count(&self) -> usize {
        self.ports as usize
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.labels.len() as VertexId
    }

    pub fn label(&self, v: VertexId) -> Label {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn neighbor(&self, v: VertexId, p: Port) -> Option<(VertexId, Port)> {
        self.adj[v as usize * self.ports as usize + p.index()]
    }

    pub fn max_label(&self) -> Label {
        self.labels.iter().copied().max().unwrap_or(Label(0))
    }

    /// Each edge once, as `((v, p), (w, q))` with `(v, p) <= (w, q)`.
    pub fn edges(&self) -> Vec<((VertexId, Port), (VertexId, Port))> {
        let mut out = Vec::new();
        for v in self.vertices() {
            for p in 0..self.ports {
                let p = Port(p);
                if let Some((w, q)) = self.neighbor(v, p) {
                    if (v, p) <= (w, q) {
                        out.push(((v, p), (w, q)));
                    }
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn follow_from(&self, v: VertexId, u: &PathWord) -> Option<VertexId> {
        let mut cur = v;
        for l in u.letters() {
            match self.neighbor(cur, l.exit) {
                Some((w, q)) if q == l.entry => cur = w,
                _ => return None,
            }
        }
        Some(cur)
    }

    /// The vertex designated by `u` from the origin, if `u` is in the language.
    pub fn follow(&self, u: &PathWord) -> Option<VertexId> {
        self.follow_from(0, u)
    }

    pub fn contains_path(&self, u: &PathWord) -> bool {
        self.follow(u).is_some()
    }

    fn require(&self, u: &PathWord) -> Result<VertexId> {
        self.follow(u).ok_or_else(|| Error::PathNotInLanguage(format!("{u:?}")))
    }

    /// Breadth-first parent of every non-origin vertex.
    fn parents(&self) -> Vec<Option<(VertexId, Letter)>> {
        let mut parent = vec![None; self.vertex_count()];
        let mut seen = vec![false; self.vertex_count()];
        seen[0] = true;
        for v in self.vertices() {
            for p in 0..self.ports {
                if let Some((w, q)) = self.neighbor(v, Port(p)) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        parent[w as usize] = Some((v, Letter::new(Port(p), q)));
                    }
                }
            }
        }
        parent
    }

    /// Canonical names: the shortlex-least path from the origin to each vertex.
    pub fn names(&self) -> Vec<PathWord> {
        let parents = self.parents();
        let mut names: Vec<PathWord> = Vec::with_capacity(self.vertex_count());
        // parents always have smaller indices
        for parent in parents {
            let name = match parent {
                None => PathWord::empty(),
                Some((u, l)) => names[u as usize].pushed(l),
            };
            names.push(name);
        }
        names
    }

    pub fn name(&self, v: VertexId) -> PathWord {
        self.names().swap_remove(v as usize)
    }

    /// The same graph pointed at vertex `v`.
    pub fn rebase(&self, v: VertexId) -> CanonicalGraph {
        canonicalize_raw(
            self.port_count(),
            self.vertex_count(),
            v as usize,
            |x| self.label(x as VertexId),
            |x, p| self.neighbor(x as VertexId, p).map(|(w, q)| (w as usize, q)),
        )
        .expect("canonical graphs are connected")
    }

    /// `X` shifted by `u`.
    pub fn shift(&self, u: &PathWord) -> Result<CanonicalGraph> {
        Ok(self.rebase(self.require(u)?))
    }

    /// Whether `u` and `v` designate the same vertex.
    pub fn paths_equivalent(&self, u: &PathWord, v: &PathWord) -> Result<bool> {
        Ok(self.require(u)? == self.require(v)?)
    }

    /// Graph distances from the origin.
    pub fn distances(&self) -> Vec<usize> {
        self.distances_from(0)
    }

    pub fn distances_from(&self, s: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut q = VecDeque::new();
        dist[s as usize] = 0;
        q.push_back(s);
        while let Some(v) = q.pop_front() {
            for p in 0..self.ports {
                if let Some((w, _)) = self.neighbor(v, Port(p)) {
                    if dist[w as usize] == usize::MAX {
                        dist[w as usize] = dist[v as usize] + 1;
                        q.push_back(w);
                    }
                }
            }
        }
        dist
    }

    /// Largest distance from the origin.
    pub fn eccentricity(&self) -> usize {
        self.distances().into_iter().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        self.vertices().map(|v| self.distances_from(v).into_iter().max().unwrap_or(0)).max().unwrap_or(0)
    }

    /// The induced subgraph on vertices at distance at most `r` from the origin.
    pub fn disk(&self, r: usize) -> CanonicalGraph {
        navigate::disk_at(self, &0, r)
    }

    /// Turns the canonical value back into a named graph, vertices named by
    /// their rendered canonical paths.
    pub fn to_based_graph(&self, alphabets: &Alphabets) -> BasedGraph {
        let mut g = ConcreteGraph::new(self.port_count());
        for (v, name) in self.names().iter().enumerate() {
            g.add_vertex(name.render(&alphabets.ports), self.labels[v]).expect("names are distinct");
        }
        for ((v, p), (w, q)) in self.edges() {
            g.add_edge(v as usize, p, w as usize, q).expect("canonical graph has no conflicts");
        }
        BasedGraph { graph: g, origin: 0 }
    }

    /// Checks labels and port count against an alphabet pair.
    pub fn check_alphabets(&self, alphabets: &Alphabets) -> Result<()> {
        if self.port_count() != alphabets.port_count() {
            return Err(Error::AlphabetMismatch(format!(
                "graph has {} ports, alphabet has {}",
                self.port_count(),
                alphabets.port_count()
            )));
        }
        if self.max_label().index() >= alphabets.label_count() {
            return Err(Error::AlphabetMismatch(format!(
                "label #{} outside the label alphabet",
                self.max_label().0
            )));
        }
        Ok(())
    }

    /// Internal constructor used by enumerators that already produce canonical
    /// numberings; `debug_assert`s the fixed-point property.
    pub(crate) fn from_parts_unchecked(
        ports: usize,
        labels: Vec<Label>,
        adj: Vec<Option<(VertexId, Port)>>,
    ) -> CanonicalGraph {
        let g = CanonicalGraph { ports: ports as u8, labels, adj };
        debug_assert_eq!(g.rebase(0), g);
        g
    }
}

impl Navigate for CanonicalGraph {
    type Vertex = VertexId;

    fn port_count(&self) -> usize {
        self.ports as usize
    }

    fn origin(&self) -> VertexId {
        0
    }

    fn label(&self, v: &VertexId) -> Label {
        self.labels[*v as usize]
    }

    fn step(&self, v: &VertexId, p: Port) -> Option<(VertexId, Port)> {
        self.neighbor(*v, p)
    }
}

impl fmt::Debug for CanonicalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalGraph[")?;
        for v in self.vertices() {
            write!(f, "{}:{}{{", v, self.label(v).0)?;
            for p in 0..self.ports {
                match self.neighbor(v, Port(p)) {
                    Some((w, q)) => write!(f, "{p}->{w}.{} ", q.0)?,
                    None => write!(f, "{p}-- ")?,
                }
            }
            write!(f, "}} ")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::torus_graph;

    fn pair_graph(x: &str, y: &str) -> BasedGraph {
        let mut g = ConcreteGraph::new(2);
        let a = g.add_vertex(x, Label(0)).unwrap();
        let b = g.add_vertex(y, Label(0)).unwrap();
        g.add_edge(a, Port(0), b, Port(1)).unwrap();
        BasedGraph::new(g, a).unwrap()
    }

    #[test]
    fn single_vertex_is_named_epsilon() {
        let mut g = ConcreteGraph::new(1);
        g.add_vertex("x", Label(0)).unwrap();
        let c = canonicalize_unchecked(&BasedGraph::new(g, 0).unwrap()).unwrap();
        assert_eq!(c.vertex_count(), 1);
        assert_eq!(c.names(), vec![PathWord::empty()]);
        assert_eq!(c, CanonicalGraph::single_vertex(1, Label(0)));
        assert_eq!(c.follow(&PathWord::empty()), Some(0));
    }

    #[test]
    fn renaming_gives_identical_values() {
        let a = canonicalize_unchecked(&pair_graph("x", "y")).unwrap();
        let b = canonicalize_unchecked(&pair_graph("p", "q")).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.follow(&PathWord::from_pairs(&[(0, 1)])), Some(1));
        assert_eq!(a.follow(&PathWord::from_pairs(&[(0, 0)])), None);
    }

    #[test]
    fn disconnected_input_rejected() {
        let mut g = ConcreteGraph::new(1);
        g.add_vertex("x", Label(0)).unwrap();
        g.add_vertex("y", Label(0)).unwrap();
        let err = canonicalize_unchecked(&BasedGraph::new(g, 0).unwrap()).unwrap_err();
        assert_eq!(err, Error::Disconnected { reached: 1, total: 2 });
    }

    #[test]
    fn unknown_label_rejected() {
        let mut g = ConcreteGraph::new(4);
        g.add_vertex("x", Label(3)).unwrap();
        let err = canonicalize(&BasedGraph::new(g, 0).unwrap(), &Alphabets::grid(2)).unwrap_err();
        assert!(matches!(err, Error::UnknownLabel(_)));
    }

    #[test]
    fn monochromatic_torus_same_at_every_basepoint() {
        let t = torus_graph(3, 3, |_, _| Label(0));
        for v in t.vertices() {
            assert_eq!(t.rebase(v), t);
        }
    }

    #[test]
    fn torus_paths() {
        let t = torus_graph(3, 3, |_, _| Label(0));
        let aa = PathWord::from_pairs(&[(0, 1)]);
        assert!(t.paths_equivalent(&aa.power(3), &PathWord::empty()).unwrap());
        assert!(!t.paths_equivalent(&aa, &PathWord::from_pairs(&[(2, 3)])).unwrap());
        let back = PathWord::from_pairs(&[(0, 1), (1, 0)]);
        assert_eq!(t.follow(&back), Some(0));
        assert!(t.paths_equivalent(&PathWord::from_pairs(&[(0, 0)]), &aa).is_err());
    }

    #[test]
    fn names_are_shortlex_minimal() {
        let t = torus_graph(4, 4, |_, _| Label(0));
        let names = t.names();
        for (v, n) in names.iter().enumerate() {
            assert_eq!(t.follow(n), Some(v as VertexId));
        }
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(sorted, names);
    }

    #[test]
    fn disk_of_torus3() {
        let t = torus_graph(3, 3, |_, _| Label(0));
        assert_eq!(t.disk(0), CanonicalGraph::single_vertex(4, Label(0)));
        let d1 = t.disk(1);
        assert_eq!(d1.vertex_count(), 5);
        // four spokes plus the two wrap edges between opposite neighbours
        assert_eq!(d1.edge_count(), 6);
    }
}
