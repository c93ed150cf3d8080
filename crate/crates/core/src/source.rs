//! Finite and lazily generated graphs behind one interface.

use std::fmt;
use std::sync::Arc;

use crate::alphabet::{Label, Port};
use crate::builtin::ZSquare;
use crate::canonical::CanonicalGraph;
use crate::error::{Error, Result};
use crate::language::PrefixLanguage;
use crate::navigate::{self, Navigate};
use crate::word::PathWord;

/// Vertex key of a lazily generated graph.
pub type Key = Vec<i64>;

/// A locally finite, possibly infinite, port graph given by its local rules.
///
/// Disks of any radius are computed by exploring from a vertex, so the
/// radius-`r` disk of a radius-`r'` disk always matches the radius-`r` disk.
pub trait LocalGraph: fmt::Debug + Send + Sync {
    fn port_count(&self) -> usize;
    fn label(&self, v: &Key) -> Label;
    fn step(&self, v: &Key, p: Port) -> Option<(Key, Port)>;
    fn describe(&self) -> String;

    /// Square-grid sources expose their translation structure, which is what
    /// makes exact periods and quotients available.
    fn as_zsquare(&self) -> Option<&ZSquare> {
        None
    }

    /// Promise that every vertex is a period (the graph looks the same from
    /// everywhere), so one basepoint stands for all.
    fn homogeneous(&self) -> bool {
        false
    }
}

/// A lazy graph pointed at one of its vertices.
#[derive(Clone, Debug)]
pub struct LazySource {
    graph: Arc<dyn LocalGraph>,
    origin: Key,
}

impl LazySource {
    pub fn new(graph: Arc<dyn LocalGraph>, origin: Key) -> Self {
        LazySource { graph, origin }
    }

    pub fn graph(&self) -> &Arc<dyn LocalGraph> {
        &self.graph
    }

    pub fn origin_key(&self) -> &Key {
        &self.origin
    }

    pub fn rebase(&self, origin: Key) -> Self {
        LazySource { graph: self.graph.clone(), origin }
    }

    pub fn zsquare(&self) -> Option<&ZSquare> {
        self.graph.as_zsquare()
    }
}

impl Navigate for LazySource {
    type Vertex = Key;

    fn port_count(&self) -> usize {
        self.graph.port_count()
    }

    fn origin(&self) -> Key {
        self.origin.clone()
    }

    fn label(&self, v: &Key) -> Label {
        self.graph.label(v)
    }

    fn step(&self, v: &Key, p: Port) -> Option<(Key, Port)> {
        self.graph.step(v, p)
    }
}

/// A graph that is either finite (canonical) or lazily generated.
#[derive(Clone, Debug)]
pub enum GraphSource {
    Finite(CanonicalGraph),
    Lazy(LazySource),
}

impl From<CanonicalGraph> for GraphSource {
    fn from(g: CanonicalGraph) -> Self {
        GraphSource::Finite(g)
    }
}

impl From<LazySource> for GraphSource {
    fn from(g: LazySource) -> Self {
        GraphSource::Lazy(g)
    }
}

impl GraphSource {
    pub fn port_count(&self) -> usize {
        match self {
            GraphSource::Finite(g) => g.port_count(),
            GraphSource::Lazy(l) => l.port_count(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, GraphSource::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&CanonicalGraph> {
        match self {
            GraphSource::Finite(g) => Some(g),
            GraphSource::Lazy(_) => None,
        }
    }

    pub fn as_lazy(&self) -> Option<&LazySource> {
        match self {
            GraphSource::Finite(_) => None,
            GraphSource::Lazy(l) => Some(l),
        }
    }

    /// The disk of radius `r` around the origin.
    pub fn disk(&self, r: usize) -> DiskValue {
        let content = match self {
            GraphSource::Finite(g) => g.disk(r),
            GraphSource::Lazy(l) => navigate::disk_at(l, &l.origin(), r),
        };
        DiskValue { radius: r, content }
    }

    pub fn contains_path(&self, u: &PathWord) -> bool {
        match self {
            GraphSource::Finite(g) => g.contains_path(u),
            GraphSource::Lazy(l) => navigate::follow_from(l, &l.origin(), u).is_some(),
        }
    }

    /// Rebases at the vertex designated by `u`.
    pub fn shift(&self, u: &PathWord) -> Result<GraphSource> {
        match self {
            GraphSource::Finite(g) => g.shift(u).map(GraphSource::Finite),
            GraphSource::Lazy(l) => navigate::follow_from(l, &l.origin(), u)
                .map(|k| GraphSource::Lazy(l.rebase(k)))
                .ok_or_else(|| Error::PathNotInLanguage(format!("{u:?}"))),
        }
    }

    /// `X↾L`: the subgraph induced by the vertices designated by words of `l`.
    pub fn cut(&self, l: &PrefixLanguage) -> CanonicalGraph {
        match self {
            GraphSource::Finite(g) => navigate::cut_at(g, &0, l),
            GraphSource::Lazy(s) => navigate::cut_at(s, &s.origin(), l),
        }
    }

    pub fn origin_label(&self) -> Label {
        match self {
            GraphSource::Finite(g) => g.label(0),
            GraphSource::Lazy(l) => l.label(&l.origin()),
        }
    }
}

/// A disk together with its radius.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiskValue {
    pub radius: usize,
    pub content: CanonicalGraph,
}

/// `disk(s, r)`.
pub fn disk(s: &GraphSource, r: usize) -> DiskValue {
    s.disk(r)
}
