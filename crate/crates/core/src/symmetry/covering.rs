//! Homomorphisms and coverings.
//!
//! A homomorphism sends the vertex named `u` to the vertex named `u`, so it
//! is determined by source and target; what has to be checked is that it is
//! well defined and preserves labels and port occupancy.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::Port;
use crate::builtin::{grid_word, ZSquare, A, A_INV, B, B_INV};
use crate::canonical::{CanonicalGraph, VertexId};
use crate::navigate::{self, Navigate};
use crate::source::{GraphSource, LazySource};
use crate::word::{Letter, PathWord};

/// A verified homomorphism `û ↦ û` from `source` to `target`.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: GraphSource,
    target: GraphSource,
}

/// Outcome of a covering test.
#[derive(Clone, Debug)]
pub enum CoveringVerdict {
    Yes(Homomorphism),
    /// `witness` is a path whose behaviour differs between the two graphs
    /// (a cycle in one only, a path in one only, or a label mismatch at its end).
    No { witness: Option<PathWord>, reason: String },
    /// No discrepancy within this radius of an infinite source.
    UnknownUpToRadius(usize),
}

impl CoveringVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, CoveringVerdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, CoveringVerdict::No { .. })
    }

    pub fn witness(&self) -> Option<&PathWord> {
        match self {
            CoveringVerdict::No { witness, .. } => witness.as_ref(),
            _ => None,
        }
    }
}

impl Homomorphism {
    pub fn source(&self) -> &GraphSource {
        &self.source
    }

    pub fn target(&self) -> &GraphSource {
        &self.target
    }

    /// The image of the source vertex named `u`, for a finite target.
    pub fn image(&self, u: &PathWord) -> Option<VertexId> {
        self.target.as_finite()?.follow(u)
    }

    /// Image of every source vertex, when both graphs are finite.
    pub fn vertex_map(&self) -> Option<Vec<VertexId>> {
        let (x, y) = (self.source.as_finite()?, self.target.as_finite()?);
        x.names().iter().map(|u| y.follow(u)).collect()
    }

    /// Re-checks well-definedness and preservation of labels and ports on
    /// every source vertex within `radius`; returns the first offending path.
    pub fn check(&self, radius: usize) -> Result<(), PathWord> {
        traverse_sources(&self.source, &self.target, Some(radius)).map(|_| ()).map_err(|(w, _)| w)
    }
}

type Mismatch = (PathWord, &'static str);

/// Walks `x` breadth first from its origin, mapping each vertex to the
/// target vertex of the same name and checking every edge on the way.
/// Returns the number of distinct images.
fn traverse<X: Navigate, Y: Navigate>(x: &X, y: &Y, radius: Option<usize>) -> Result<usize, Mismatch> {
    let ports = x.port_count();
    let mut map: HashMap<X::Vertex, (Y::Vertex, PathWord, usize)> = HashMap::new();
    let mut images: std::collections::HashSet<Y::Vertex> = std::collections::HashSet::new();
    let (ox, oy) = (x.origin(), y.origin());
    map.insert(ox.clone(), (oy.clone(), PathWord::empty(), 0));
    images.insert(oy);
    let mut queue = VecDeque::from([ox]);
    while let Some(v) = queue.pop_front() {
        let (t, u, d) = map[&v].clone();
        if x.label(&v) != y.label(&t) {
            return Err((u, "labels differ"));
        }
        for p in 0..ports {
            let p = Port(p as u8);
            match (x.step(&v, p), y.step(&t, p)) {
                (None, None) => {}
                (None, Some((_, q))) => return Err((u.pushed(Letter::new(p, q)), "path of the target is missing in the source")),
                (Some((_, q)), None) => return Err((u.pushed(Letter::new(p, q)), "path of the source is missing in the target")),
                (Some((w, q)), Some((t2, q2))) => {
                    let step = u.pushed(Letter::new(p, q));
                    if q != q2 {
                        return Err((step, "path of the source is missing in the target"));
                    }
                    match map.get(&w) {
                        Some((tw, uw, _)) => {
                            if *tw != t2 {
                                return Err((step.concat(&uw.reverse()).reduce(), "cycle of the source is not a cycle of the target"));
                            }
                        }
                        None if radius.is_none_or(|r| d < r) => {
                            images.insert(t2.clone());
                            map.insert(w.clone(), (t2, step, d + 1));
                            queue.push_back(w);
                        }
                        None => {}
                    }
                }
            }
        }
    }
    Ok(images.len())
}

fn traverse_sources(x: &GraphSource, y: &GraphSource, radius: Option<usize>) -> Result<usize, Mismatch> {
    match (x, y) {
        (GraphSource::Finite(a), GraphSource::Finite(b)) => traverse(a, b, radius),
        (GraphSource::Finite(a), GraphSource::Lazy(b)) => traverse(a, b, radius),
        (GraphSource::Lazy(a), GraphSource::Finite(b)) => traverse(a, b, radius),
        (GraphSource::Lazy(a), GraphSource::Lazy(b)) => traverse(a, b, radius),
    }
}

fn no(witness: Option<PathWord>, reason: impl Into<String>) -> CoveringVerdict {
    CoveringVerdict::No { witness, reason: reason.into() }
}

/// `isCovering`: whether `û ↦ û` is a surjective homomorphism from `x` onto `y`.
///
/// Exact when `x` is finite, and when `x` is a square-grid source and `y`
/// finite; otherwise a bounded search that can only refute.
pub fn is_covering(x: &GraphSource, y: &GraphSource, max_radius: usize) -> CoveringVerdict {
    if x.port_count() != y.port_count() {
        return no(None, "port alphabets differ");
    }
    if let (GraphSource::Lazy(l), GraphSource::Finite(t)) = (x, y) {
        if let Some(z) = l.zsquare() {
            return zsquare_covering(l, z, t);
        }
    }
    let radius = if x.is_finite() { None } else { Some(max_radius) };
    let images = match traverse_sources(x, y, radius) {
        Ok(n) => n,
        Err((w, reason)) => return no(Some(w), reason),
    };
    let hom = Homomorphism { source: x.clone(), target: y.clone() };
    match (x, y) {
        (GraphSource::Finite(_), GraphSource::Finite(t)) => {
            if images == t.vertex_count() {
                CoveringVerdict::Yes(hom)
            } else {
                no(None, format!("not surjective: {images} of {} target vertices reached", t.vertex_count()))
            }
        }
        (GraphSource::Finite(s), GraphSource::Lazy(t)) => {
            // a connected target with more vertices than the source has them within that radius
            let reach = navigate::ball(t, &t.origin(), s.vertex_count()).len();
            if images == reach {
                CoveringVerdict::Yes(hom)
            } else {
                no(None, format!("not surjective: {images} target vertices reached, at least {reach} exist"))
            }
        }
        _ => CoveringVerdict::UnknownUpToRadius(max_radius),
    }
}

/// Exact covering test from a square-grid source onto a finite graph.
///
/// The target must be grid-like: ports `a, a'` and `b, b'` paired into two
/// commuting permutations. The map `(i, j) ↦ A^i B^j (origin)` is then
/// well defined iff the wrap lattice acts trivially, and labels only need
/// comparing over one common period box.
fn zsquare_covering(l: &LazySource, z: &ZSquare, y: &CanonicalGraph) -> CoveringVerdict {
    let n = y.vertex_count();
    let names = y.names();
    let inverse = |p: Port| match p {
        A => A_INV,
        A_INV => A,
        B => B_INV,
        _ => B,
    };
    for v in y.vertices() {
        for p in [A, A_INV, B, B_INV] {
            match y.neighbor(v, p) {
                Some((_, q)) if q == inverse(p) => {}
                _ => return no(Some(names[v as usize].pushed(Letter::new(p, inverse(p)))), "path of the source is missing in the target"),
            }
        }
    }
    let perm = |p: Port| -> Vec<usize> { (0..n).map(|v| y.neighbor(v as VertexId, p).expect("checked").0 as usize).collect() };
    let (pa, pb) = (perm(A), perm(B));
    for v in 0..n {
        if pa[pb[v]] != pb[pa[v]] {
            let square = PathWord::from_letters([Letter::new(A, A_INV), Letter::new(B, B_INV), Letter::new(A_INV, A), Letter::new(B_INV, B)]);
            return no(Some(names[v].concat(&square)), "cycle of the source is not a cycle of the target");
        }
    }
    let (oa, ob) = (order(&pa) as i64, order(&pb) as i64);
    let act = |i: i64, j: i64| -> usize {
        let mut v = 0;
        for _ in 0..i.rem_euclid(oa) {
            v = pa[v];
        }
        for _ in 0..j.rem_euclid(ob) {
            v = pb[v];
        }
        v
    };
    for (i, j) in z.wrap().generators() {
        if act(i, j) != 0 {
            return no(Some(grid_word(i, j)), "cycle of the source is not a cycle of the target");
        }
    }
    let (p, q) = z.coloring().period();
    let (bi, bj) = (lcm(p, oa as usize) as i64, lcm(q, ob as usize) as i64);
    let (oi, oj) = (l.origin_key()[0], l.origin_key()[1]);
    for i in 0..bi {
        for j in 0..bj {
            if z.coloring().label(oi + i, oj + j) != y.label(act(i, j) as VertexId) {
                return no(Some(grid_word(i, j)), "labels differ");
            }
        }
    }
    CoveringVerdict::Yes(Homomorphism { source: GraphSource::Lazy(l.clone()), target: GraphSource::Finite(y.clone()) })
}

/// Order of a permutation.
fn order(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut result = 1;
    for s in 0..perm.len() {
        let mut len = 0;
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            v = perm[v];
            len += 1;
        }
        if len > 0 {
            result = lcm(result, len);
        }
    }
    result
}

fn lcm(a: usize, b: usize) -> usize {
    let mut x = a;
    let mut y = b;
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}
