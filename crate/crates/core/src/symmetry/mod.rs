//! Periods, stabilizers, quotients and coverings.
//!
//! A path `u` is a period of `X` when `X_u = X`. The periods of a finite
//! graph form a group under `û·v̂ = follow(u·v)`; a subgroup given by
//! generators is quotiented out by merging the vertices its elements identify.

use std::collections::VecDeque;

use crate::canonical::{CanonicalGraph, VertexId};
use crate::error::{Error, Result};
use crate::word::PathWord;

mod covering;
mod quotient;
mod separation;

pub use covering::{is_covering, CoveringVerdict, Homomorphism};
pub use quotient::{classify_source, quotient, quotient_map, Quotient};
pub use separation::{conjugate_stabilizer_check, is_separated, verify_window_preservation, WindowReport};

/// A subgroup of the stabilizer, given by generating periods.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SubgroupSpec {
    pub generators: Vec<PathWord>,
}

impl SubgroupSpec {
    pub fn new(generators: impl IntoIterator<Item = PathWord>) -> Self {
        SubgroupSpec { generators: generators.into_iter().collect() }
    }

    pub fn trivial() -> Self {
        SubgroupSpec::default()
    }

    /// Conjugate by `u`: each generator `g` becomes `ū·g·u`, a period of `X_u`.
    pub fn conjugate(&self, u: &PathWord) -> SubgroupSpec {
        let ubar = u.reverse();
        SubgroupSpec::new(self.generators.iter().map(|g| ubar.concat(g).concat(u).reduce()))
    }

    pub(crate) fn max_len(&self) -> usize {
        self.generators.iter().map(PathWord::len).max().unwrap_or(0)
    }
}

/// `isPeriod`: whether shifting along `u` gives back the same graph.
pub fn is_period(x: &CanonicalGraph, u: &PathWord) -> Result<bool> {
    Ok(x.shift(u)? == *x)
}

/// The stabilizer of a finite graph with its multiplication table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stabilizer {
    carrier: CanonicalGraph,
    vertices: Vec<VertexId>,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

impl Stabilizer {
    pub fn carrier(&self) -> &CanonicalGraph {
        &self.carrier
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Canonical names of the periods, identity first.
    pub fn elements(&self) -> Vec<PathWord> {
        self.vertices.iter().map(|&v| self.carrier.name(v)).collect()
    }

    /// The vertices of the carrier that are periods.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Index of the product of elements `i` and `j`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Associativity, neutral element and inverses, checked exhaustively.
    pub fn check_axioms(&self) -> bool {
        let n = self.order();
        let neutral = (0..n).all(|i| self.mul(0, i) == i && self.mul(i, 0) == i);
        let inverses = (0..n).all(|i| self.mul(i, self.inverse(i)) == 0 && self.mul(self.inverse(i), i) == 0);
        let assoc = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.mul(self.mul(i, j), k) == self.mul(i, self.mul(j, k)))));
        neutral && inverses && assoc
    }

    /// Generators of the whole stabilizer, as a subgroup spec.
    pub fn as_subgroup(&self) -> SubgroupSpec {
        SubgroupSpec::new(self.elements().into_iter().skip(1))
    }
}

/// `stabilizer`: every vertex whose rebased graph equals the carrier.
pub fn stabilizer(x: &CanonicalGraph) -> Stabilizer {
    let vertices: Vec<VertexId> = x.vertices().filter(|&v| v == 0 || x.rebase(v) == *x).collect();
    let names: Vec<PathWord> = vertices.iter().map(|&v| x.name(v)).collect();
    let index_of = |v: VertexId| vertices.iter().position(|&w| w == v).expect("product of periods is a period");
    let table = names
        .iter()
        .map(|u| names.iter().map(|v| index_of(x.follow(&u.concat(v)).expect("periods share the language"))).collect())
        .collect();
    let inverses = names.iter().map(|u| index_of(x.follow(&u.reverse()).expect("reverse of a path"))).collect();
    Stabilizer { carrier: x.clone(), vertices, table, inverses }
}

/// Periodicity class, with a density witness when strongly periodic: every
/// vertex lies within `density_radius` of some period.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Periodicity {
    StronglyAperiodic,
    WeaklyPeriodic,
    StronglyPeriodic { weakly_periodic: bool, density_radius: usize },
}

/// `classifyPeriodicity` for a finite graph, which is always strongly periodic.
pub fn classify_periodicity(x: &CanonicalGraph) -> Periodicity {
    let stab = stabilizer(x);
    Periodicity::StronglyPeriodic {
        weakly_periodic: stab.order() > 1,
        density_radius: nearest_distance(x, stab.vertices()).into_iter().max().unwrap_or(0),
    }
}

/// Distance from each vertex to the nearest of `sources`.
fn nearest_distance(x: &CanonicalGraph, sources: &[VertexId]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; x.vertex_count()];
    let mut queue = VecDeque::new();
    for &s in sources {
        dist[s as usize] = 0;
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        for p in 0..x.port_count() {
            if let Some((w, _)) = x.neighbor(v, crate::alphabet::Port(p as u8)) {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = dist[v as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

/// Union-find over vertex indices.
pub(crate) struct Partition {
    parent: Vec<usize>,
}

impl Partition {
    pub(crate) fn new(n: usize) -> Self {
        Partition { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Orbits of the vertices of `x` under the automorphisms induced by the
/// generators: vertex `û` is identified with `follow(g·u)`.
pub(crate) fn orbits(x: &CanonicalGraph, h: &SubgroupSpec) -> Result<Vec<usize>> {
    for g in &h.generators {
        if !is_period(x, g)? {
            return Err(Error::NotAPeriod(format!("{g:?}")));
        }
    }
    let names = x.names();
    let mut part = Partition::new(x.vertex_count());
    for g in &h.generators {
        for (v, u) in names.iter().enumerate() {
            let image = x.follow(&g.concat(u)).expect("periods share the language");
            part.union(v, image as usize);
        }
    }
    Ok((0..x.vertex_count()).map(|v| part.find(v)).collect())
}

#[cfg(test)]
mod tests;
