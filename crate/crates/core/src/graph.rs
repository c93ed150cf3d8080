//! Concrete port graphs with named vertices.

use std::collections::HashMap;

use crate::alphabet::{Alphabets, Label, Port};
use crate::error::{Error, Result};

/// Where a port leads: the neighbouring vertex and the port it is entered by.
///
/// A singleton self-loop `{(v, p)}` is stored as `(v, p)` at port `p` of `v`,
/// which is exactly what following the letter `(p, p)` does.
pub type Slot = Option<(usize, Port)>;

/// A finite port graph whose vertices carry names.
///
/// Connectivity is not enforced while building; it is checked on
/// canonicalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcreteGraph {
    ports: usize,
    names: Vec<String>,
    labels: Vec<Label>,
    adj: Vec<Vec<Slot>>,
    index: HashMap<String, usize>,
}

impl ConcreteGraph {
    pub fn new(ports: usize) -> Self {
        ConcreteGraph {
            ports,
            names: Vec::new(),
            labels: Vec::new(),
            adj: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn port_count(&self) -> usize {
        self.ports
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>, label: Label) -> Result<usize> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(Error::Malformed(format!("duplicate vertex `{name}`")));
        }
        let id = self.names.len();
        self.index.insert(name.clone(), id);
        self.names.push(name);
        self.labels.push(label);
        self.adj.push(vec![None; self.ports]);
        Ok(id)
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn set_label(&mut self, v: usize, label: Label) {
        self.labels[v] = label;
    }

    pub fn slot(&self, v: usize, p: Port) -> Slot {
        self.adj[v][p.index()]
    }

    fn check_port(&self, v: usize, p: Port) -> Result<()> {
        if p.index() >= self.ports {
            return Err(Error::UnknownPort(format!("#{}", p.0)));
        }
        if self.adj[v][p.index()].is_some() {
            return Err(Error::PortConflict { vertex: self.names[v].clone(), port: format!("#{}", p.0) });
        }
        Ok(())
    }

    /// Adds the edge `{(v, p), (w, q)}`. When `(v, p) == (w, q)` this is the
    /// singleton self-loop.
    pub fn add_edge(&mut self, v: usize, p: Port, w: usize, q: Port) -> Result<()> {
        self.check_port(v, p)?;
        if (v, p) != (w, q) {
            self.check_port(w, q)?;
        }
        self.adj[v][p.index()] = Some((w, q));
        self.adj[w][q.index()] = Some((v, p));
        Ok(())
    }

    pub fn add_loop(&mut self, v: usize, p: Port) -> Result<()> {
        self.add_edge(v, p, v, p)
    }

    /// Each edge once, as `((v, p), (w, q))` with `(v, p) <= (w, q)`.
    pub fn edges(&self) -> Vec<((usize, Port), (usize, Port))> {
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            for (pi, slot) in self.adj[v].iter().enumerate() {
                let p = Port(pi as u8);
                if let Some((w, q)) = *slot {
                    if (v, p) <= (w, q) {
                        out.push(((v, p), (w, q)));
                    }
                }
            }
        }
        out
    }

    pub fn check_alphabets(&self, alphabets: &Alphabets) -> Result<()> {
        if self.ports != alphabets.port_count() {
            return Err(Error::AlphabetMismatch(format!(
                "graph has {} ports, alphabet has {}",
                self.ports,
                alphabets.port_count()
            )));
        }
        if let Some(l) = self.labels.iter().find(|l| l.index() >= alphabets.label_count()) {
            return Err(Error::UnknownLabel(format!("#{}", l.0)));
        }
        Ok(())
    }
}

/// A concrete graph with a distinguished origin vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedGraph {
    pub graph: ConcreteGraph,
    pub origin: usize,
}

impl BasedGraph {
    pub fn new(graph: ConcreteGraph, origin: usize) -> Result<Self> {
        if origin >= graph.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{origin}")));
        }
        Ok(BasedGraph { graph, origin })
    }

    pub fn rebased(&self, origin: usize) -> Result<Self> {
        BasedGraph::new(self.graph.clone(), origin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn port_used_twice_is_rejected() {
        let mut g = ConcreteGraph::new(2);
        let x = g.add_vertex("x", Label(0)).unwrap();
        let y = g.add_vertex("y", Label(0)).unwrap();
        g.add_edge(x, Port(0), y, Port(1)).unwrap();
        assert!(matches!(g.add_edge(x, Port(0), y, Port(0)), Err(Error::PortConflict { .. })));
        assert!(matches!(g.add_loop(y, Port(1)), Err(Error::PortConflict { .. })));
        g.add_loop(y, Port(0)).unwrap();
        assert_eq!(g.edges().len(), 2);
    }

    #[test]
    fn duplicate_names_rejected() {
        let mut g = ConcreteGraph::new(1);
        g.add_vertex("x", Label(0)).unwrap();
        assert!(g.add_vertex("x", Label(0)).is_err());
        assert!(matches!(g.vertex("z"), Err(Error::UnknownVertex(_))));
    }
}
