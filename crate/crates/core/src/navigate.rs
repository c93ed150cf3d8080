//! Traversal shared by finite graphs and lazily generated infinite graphs.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::alphabet::{Label, Port};
use crate::canonical::{canonicalize_raw, CanonicalGraph};
use crate::language::PrefixLanguage;
use crate::word::{Letter, PathWord};

/// Anything whose vertices can be visited port by port from an origin.
pub trait Navigate {
    type Vertex: Clone + Eq + Hash;

    fn port_count(&self) -> usize;
    fn origin(&self) -> Self::Vertex;
    fn label(&self, v: &Self::Vertex) -> Label;
    fn step(&self, v: &Self::Vertex, p: Port) -> Option<(Self::Vertex, Port)>;
}

pub fn follow_from<N: Navigate>(n: &N, v: &N::Vertex, u: &PathWord) -> Option<N::Vertex> {
    let mut cur = v.clone();
    for l in u.letters() {
        match n.step(&cur, l.exit) {
            Some((w, q)) if q == l.entry => cur = w,
            _ => return None,
        }
    }
    Some(cur)
}

/// Vertices within distance `r` of `center`, in breadth-first order, each
/// with its distance and the shortlex-least path reaching it.
pub fn ball<N: Navigate>(n: &N, center: &N::Vertex, r: usize) -> Vec<(N::Vertex, usize, PathWord)> {
    let mut seen: HashMap<N::Vertex, ()> = HashMap::new();
    let mut out = vec![(center.clone(), 0, PathWord::empty())];
    seen.insert(center.clone(), ());
    let mut q = VecDeque::from([0usize]);
    while let Some(i) = q.pop_front() {
        let (v, d, path) = out[i].clone();
        if d == r {
            continue;
        }
        for p in 0..n.port_count() {
            if let Some((w, e)) = n.step(&v, Port(p as u8)) {
                if seen.insert(w.clone(), ()).is_none() {
                    out.push((w, d + 1, path.pushed(Letter::new(Port(p as u8), e))));
                    q.push_back(out.len() - 1);
                }
            }
        }
    }
    out
}

/// Canonical form of the subgraph induced on `vertices`, pointed at the first
/// one. The set must induce a connected subgraph.
pub fn induced<N: Navigate>(n: &N, vertices: &[N::Vertex]) -> CanonicalGraph {
    let index: HashMap<&N::Vertex, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    canonicalize_raw(
        n.port_count(),
        vertices.len(),
        0,
        |i| n.label(&vertices[i]),
        |i, p| n.step(&vertices[i], p).and_then(|(w, q)| index.get(&w).map(|&j| (j, q))),
    )
    .expect("induced vertex set is connected")
}

/// The disk of radius `r` around `center`.
pub fn disk_at<N: Navigate>(n: &N, center: &N::Vertex, r: usize) -> CanonicalGraph {
    let verts: Vec<N::Vertex> = ball(n, center, r).into_iter().map(|(v, _, _)| v).collect();
    induced(n, &verts)
}

/// Vertices designated from `center` by the words of `lang` that are in the
/// language of the graph.
pub fn designated<N: Navigate>(n: &N, center: &N::Vertex, lang: &PrefixLanguage) -> Vec<N::Vertex> {
    let mut out = vec![center.clone()];
    // position of each word, in the order of `lang.steps()`, ε first
    let mut pos: Vec<Option<N::Vertex>> = Vec::with_capacity(lang.len());
    pos.push(Some(center.clone()));
    for &(parent, l) in lang.steps() {
        let target = pos[parent].as_ref().and_then(|v| match n.step(v, l.exit) {
            Some((x, q)) if q == l.entry => Some(x),
            _ => None,
        });
        if let Some(t) = &target {
            if !out.contains(t) {
                out.push(t.clone());
            }
        }
        pos.push(target);
    }
    out
}

/// The designated vertices together with only the edges that words of
/// `lang` actually traverse: the part of the cut that `lang` itself sees.
pub fn traced_cut_at<N: Navigate>(n: &N, center: &N::Vertex, lang: &PrefixLanguage) -> CanonicalGraph {
    let vertices = designated(n, center, lang);
    let index: HashMap<&N::Vertex, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut pos: Vec<Option<usize>> = Vec::with_capacity(lang.len());
    pos.push(Some(0));
    let mut edges: HashMap<(usize, Port), (usize, Port)> = HashMap::new();
    for &(parent, l) in lang.steps() {
        let target = pos[parent].and_then(|i| match n.step(&vertices[i], l.exit) {
            Some((x, q)) if q == l.entry => {
                let j = index[&x];
                edges.insert((i, l.exit), (j, q));
                edges.insert((j, q), (i, l.exit));
                Some(j)
            }
            _ => None,
        });
        pos.push(target);
    }
    canonicalize_raw(n.port_count(), vertices.len(), 0, |i| n.label(&vertices[i]), |i, p| edges.get(&(i, p)).copied())
        .expect("traced vertices are connected")
}

/// The `lang`-cut at `center`: induced subgraph on the designated vertices.
pub fn cut_at<N: Navigate>(n: &N, center: &N::Vertex, lang: &PrefixLanguage) -> CanonicalGraph {
    induced(n, &designated(n, center, lang))
}
