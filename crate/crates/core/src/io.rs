//! JSON file formats.
//!
//! Graphs, patterns and SFTs use symbolic labels and ports; words are
//! rendered as `p.q` letters joined by `/`, with ε as the empty string.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabets, Label, LabelAlphabet, PortAlphabet};
use crate::builtin::{FreeTree, PeriodicColoring, ZSquare};
use crate::cayley::{GroupPresentation, MultiplicationTable};
use crate::canonical::{canonicalize, CanonicalGraph};
use crate::error::{Error, Result};
use crate::graph::{BasedGraph, ConcreteGraph};
use crate::language::PrefixLanguage;
use crate::lattice::Lattice;
use crate::sft::{ConstraintGroup, Mode, SftDefinition, ShapeRule};
use crate::source::{GraphSource, LazySource};
use crate::symmetry::SubgroupSpec;
use crate::word::{Letter, PathWord};

fn malformed(e: serde_json::Error) -> Error {
    Error::Malformed(e.to_string())
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct VertexDoc {
    pub name: String,
    pub label: String,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct IncidenceDoc {
    pub v: String,
    pub port: String,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub sigma: Vec<String>,
    pub pi: Vec<String>,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<Vec<IncidenceDoc>>,
    pub origin: String,
}

impl GraphDoc {
    pub fn alphabets(&self) -> Result<Alphabets> {
        Ok(Alphabets::new(PortAlphabet::new(self.pi.iter().cloned())?, LabelAlphabet::new(self.sigma.iter().cloned())?))
    }

    pub fn to_based(&self) -> Result<(BasedGraph, Alphabets)> {
        let alphabets = self.alphabets()?;
        let mut g = ConcreteGraph::new(alphabets.port_count());
        for v in &self.vertices {
            g.add_vertex(v.name.clone(), alphabets.labels.lookup(&v.label)?)?;
        }
        for e in &self.edges {
            let inc = |i: &IncidenceDoc| -> Result<_> { Ok((g.vertex(&i.v)?, alphabets.ports.lookup(&i.port)?)) };
            match e.as_slice() {
                [a] => {
                    let (v, p) = inc(a)?;
                    g.add_loop(v, p)?;
                }
                [a, b] => {
                    let ((v, p), (w, q)) = (inc(a)?, inc(b)?);
                    g.add_edge(v, p, w, q)?;
                }
                _ => return Err(Error::Malformed("an edge has one or two incidences".into())),
            }
        }
        let origin = g.vertex(&self.origin)?;
        Ok((BasedGraph::new(g, origin)?, alphabets))
    }

    pub fn to_canonical(&self) -> Result<(CanonicalGraph, Alphabets)> {
        let (g, alphabets) = self.to_based()?;
        Ok((canonicalize(&g, &alphabets)?, alphabets))
    }

    /// Canonical document: vertices named by their rendered minimal paths.
    pub fn from_canonical(x: &CanonicalGraph, alphabets: &Alphabets) -> Self {
        GraphDoc::from_based(&x.to_based_graph(alphabets), alphabets)
    }

    pub fn from_based(g: &BasedGraph, alphabets: &Alphabets) -> Self {
        let c = &g.graph;
        let vertices = (0..c.vertex_count())
            .map(|v| VertexDoc { name: c.name(v).to_string(), label: alphabets.labels.symbol(c.label(v)).to_string() })
            .collect();
        let inc = |v: usize, p| IncidenceDoc { v: c.name(v).to_string(), port: alphabets.ports.symbol(p).to_string() };
        let edges = c
            .edges()
            .into_iter()
            .map(|((v, p), (w, q))| if (v, p) == (w, q) { vec![inc(v, p)] } else { vec![inc(v, p), inc(w, q)] })
            .collect();
        GraphDoc {
            sigma: alphabets.labels.symbols().to_vec(),
            pi: alphabets.ports.symbols().to_vec(),
            vertices,
            edges,
            origin: c.name(g.origin).to_string(),
        }
    }
}

pub fn parse_graph(json: &str) -> Result<(CanonicalGraph, Alphabets)> {
    serde_json::from_str::<GraphDoc>(json).map_err(malformed)?.to_canonical()
}

pub fn parse_based_graph(json: &str) -> Result<(BasedGraph, Alphabets)> {
    serde_json::from_str::<GraphDoc>(json).map_err(malformed)?.to_based()
}

pub fn graph_to_json(x: &CanonicalGraph, alphabets: &Alphabets) -> String {
    to_json(&GraphDoc::from_canonical(x, alphabets))
}

/// Intensional shape sets, as an alternative to a listed `graph`.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum RuleDoc {
    AllExcept(Vec<GraphDoc>),
    PortInverse { port: String, inverse: String },
    RelatorCycle { word: String },
    NearestNeighbor { letter: String, pairs: Vec<(String, String)> },
    Satisfying(Box<SftDoc>),
    Violating(Box<SftDoc>),
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct PatternDoc {
    pub language: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<RuleDoc>,
}

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
pub enum ModeDoc {
    Forbid,
    Allow,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct SftDoc {
    pub sigma: Vec<String>,
    pub pi: Vec<String>,
    pub mode: ModeDoc,
    pub patterns: Vec<PatternDoc>,
}

fn shape(doc: &GraphDoc, alphabets: &Alphabets) -> Result<CanonicalGraph> {
    let (x, a) = doc.to_canonical()?;
    a.ensure_same(alphabets)?;
    Ok(x)
}

impl SftDoc {
    pub fn to_sft(&self) -> Result<SftDefinition> {
        let alphabets = Alphabets::new(PortAlphabet::new(self.pi.iter().cloned())?, LabelAlphabet::new(self.sigma.iter().cloned())?);
        let ports = &alphabets.ports;
        let mut groups: Vec<ConstraintGroup> = Vec::new();
        for p in &self.patterns {
            let window = PrefixLanguage::parse(&p.language, ports)?;
            match (&p.graph, &p.rule) {
                (Some(g), None) => {
                    let y = shape(g, &alphabets)?;
                    let listed = groups.iter_mut().find(|grp| grp.window == window && matches!(grp.rule, ShapeRule::Listed(_)));
                    match listed {
                        Some(ConstraintGroup { rule: ShapeRule::Listed(set), .. }) => {
                            set.insert(y);
                        }
                        _ => groups.push(ConstraintGroup::new(window, ShapeRule::Listed(BTreeSet::from([y])))),
                    }
                }
                (None, Some(rule)) => {
                    let rule = match rule {
                        RuleDoc::AllExcept(gs) => ShapeRule::AllExcept(gs.iter().map(|g| shape(g, &alphabets)).collect::<Result<_>>()?),
                        RuleDoc::PortInverse { port, inverse } => {
                            ShapeRule::PortInverse { port: ports.lookup(port)?, inverse: ports.lookup(inverse)? }
                        }
                        RuleDoc::RelatorCycle { word } => ShapeRule::RelatorCycle { word: PathWord::parse(word, ports)? },
                        RuleDoc::NearestNeighbor { letter, pairs } => ShapeRule::NearestNeighbor {
                            letter: Letter::parse(letter, ports)?,
                            pairs: pairs
                                .iter()
                                .map(|(x, y)| Ok((alphabets.labels.lookup(x)?, alphabets.labels.lookup(y)?)))
                                .collect::<Result<_>>()?,
                        },
                        RuleDoc::Satisfying(d) => ShapeRule::Satisfying(Box::new(d.to_sft()?)),
                        RuleDoc::Violating(d) => ShapeRule::Violating(Box::new(d.to_sft()?)),
                    };
                    groups.push(ConstraintGroup::new(window, rule));
                }
                _ => return Err(Error::Malformed("a pattern has exactly one of `graph` and `rule`".into())),
            }
        }
        let mode = match self.mode {
            ModeDoc::Forbid => Mode::Forbid,
            ModeDoc::Allow => Mode::Allow,
        };
        SftDefinition::new(alphabets, mode, groups)
    }

    pub fn from_sft(d: &SftDefinition) -> Self {
        let a = d.alphabets();
        let ports = &a.ports;
        let graph = |y: &CanonicalGraph| GraphDoc::from_canonical(y, a);
        let mut patterns = Vec::new();
        for g in d.groups() {
            let language = g.window.render(ports);
            let rule = match &g.rule {
                ShapeRule::Listed(set) => {
                    patterns.extend(set.iter().map(|y| PatternDoc { language: language.clone(), graph: Some(graph(y)), rule: None }));
                    continue;
                }
                ShapeRule::AllExcept(set) => RuleDoc::AllExcept(set.iter().map(graph).collect()),
                ShapeRule::PortInverse { port, inverse } => {
                    RuleDoc::PortInverse { port: ports.symbol(*port).into(), inverse: ports.symbol(*inverse).into() }
                }
                ShapeRule::RelatorCycle { word } => RuleDoc::RelatorCycle { word: word.render(ports) },
                ShapeRule::NearestNeighbor { letter, pairs } => RuleDoc::NearestNeighbor {
                    letter: letter.render(ports),
                    pairs: pairs.iter().map(|&(x, y)| (a.labels.symbol(x).into(), a.labels.symbol(y).into())).collect(),
                },
                ShapeRule::Satisfying(inner) => RuleDoc::Satisfying(Box::new(SftDoc::from_sft(inner))),
                ShapeRule::Violating(inner) => RuleDoc::Violating(Box::new(SftDoc::from_sft(inner))),
            };
            patterns.push(PatternDoc { language, graph: None, rule: Some(rule) });
        }
        SftDoc {
            sigma: a.labels.symbols().to_vec(),
            pi: ports.symbols().to_vec(),
            mode: match d.mode() {
                Mode::Forbid => ModeDoc::Forbid,
                Mode::Allow => ModeDoc::Allow,
            },
            patterns,
        }
    }
}

pub fn parse_sft(json: &str) -> Result<SftDefinition> {
    serde_json::from_str::<SftDoc>(json).map_err(malformed)?.to_sft()
}

pub fn sft_to_json(d: &SftDefinition) -> String {
    to_json(&SftDoc::from_sft(d))
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct PresentationDoc {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
    #[serde(default = "default_suffix")]
    pub inverse_suffix: String,
}

fn default_suffix() -> String {
    "-".into()
}

pub fn parse_presentation(json: &str) -> Result<GroupPresentation> {
    let doc: PresentationDoc = serde_json::from_str(json).map_err(malformed)?;
    GroupPresentation::parse(&doc.generators, &doc.relators, &doc.inverse_suffix)
}

pub fn presentation_to_json(p: &GroupPresentation, inverse_suffix: &str) -> String {
    to_json(&PresentationDoc {
        generators: p.generators().to_vec(),
        relators: p.render_relators(inverse_suffix),
        inverse_suffix: inverse_suffix.into(),
    })
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct TableDoc {
    pub elements: Vec<String>,
    pub product: Vec<Vec<String>>,
    pub generators: Vec<String>,
}

pub fn parse_table(json: &str) -> Result<MultiplicationTable> {
    let doc: TableDoc = serde_json::from_str(json).map_err(malformed)?;
    let index = |s: &String| {
        doc.elements.iter().position(|e| e == s).ok_or_else(|| Error::InvalidPresentation(format!("unknown element `{s}`")))
    };
    let t = MultiplicationTable {
        elements: doc.elements.clone(),
        product: doc.product.iter().map(|r| r.iter().map(index).collect::<Result<_>>()).collect::<Result<_>>()?,
        generators: doc.generators.iter().map(index).collect::<Result<_>>()?,
    };
    t.validate()?;
    Ok(t)
}

pub fn table_to_json(t: &MultiplicationTable) -> String {
    let name = |i: &usize| t.elements[*i].clone();
    to_json(&TableDoc {
        elements: t.elements.clone(),
        product: t.product.iter().map(|r| r.iter().map(name).collect()).collect(),
        generators: t.generators.iter().map(name).collect(),
    })
}

/// Built-in infinite graphs.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum LazyDoc {
    /// The grid with `coloring[i][j]` on every `(i + kp, j + lq)`.
    Grid {
        sigma: Vec<String>,
        coloring: Vec<Vec<String>>,
        #[serde(default)]
        origin: (i64, i64),
    },
    /// Infinite along `a`, of the given circumference along `b`.
    Cylinder {
        sigma: Vec<String>,
        circumference: usize,
        coloring: Vec<Vec<String>>,
        #[serde(default)]
        origin: (i64, i64),
    },
    /// The 2k-regular tree, one label.
    Tree { generators: usize },
}

impl LazyDoc {
    pub fn to_source(&self) -> Result<(GraphSource, Alphabets)> {
        let zsquare = |sigma: &[String], coloring: &[Vec<String>], wrap: Lattice, origin: (i64, i64)| -> Result<_> {
            let labels = LabelAlphabet::new(sigma.iter().cloned())?;
            let rows = coloring.iter().map(|r| r.iter().map(|l| labels.lookup(l)).collect::<Result<Vec<Label>>>()).collect::<Result<_>>()?;
            let z = ZSquare::new(wrap, PeriodicColoring::new(rows)?)?;
            let key = z.key(origin.0, origin.1);
            let alphabets = Alphabets::new(Alphabets::grid(1).ports, labels);
            Ok((GraphSource::Lazy(LazySource::new(Arc::new(z), key)), alphabets))
        };
        match self {
            LazyDoc::Grid { sigma, coloring, origin } => zsquare(sigma, coloring, Lattice::zero(), *origin),
            LazyDoc::Cylinder { sigma, circumference, coloring, origin } => {
                if *circumference == 0 {
                    return Err(Error::Malformed("cylinder circumference must be positive".into()));
                }
                zsquare(sigma, coloring, Lattice::from_generators(&[(0, *circumference as i64)]), *origin)
            }
            LazyDoc::Tree { generators } => {
                if *generators == 0 {
                    return Err(Error::Malformed("a tree needs at least one generator".into()));
                }
                let ports = PortAlphabet::new(crate::builtin::free_ports(*generators))?;
                let source = GraphSource::Lazy(LazySource::new(Arc::new(FreeTree::new(*generators)), vec![]));
                Ok((source, Alphabets::new(ports, LabelAlphabet::numeric(1))))
            }
        }
    }
}

pub fn parse_lazy(json: &str) -> Result<(GraphSource, Alphabets)> {
    serde_json::from_str::<LazyDoc>(json).map_err(malformed)?.to_source()
}

pub fn lazy_to_json(doc: &LazyDoc) -> String {
    to_json(doc)
}

/// Reads either a graph document or a built-in infinite graph.
pub fn parse_source(json: &str) -> Result<(GraphSource, Alphabets)> {
    let value: serde_json::Value = serde_json::from_str(json).map_err(malformed)?;
    if value.get("kind").is_some() {
        parse_lazy(json)
    } else {
        let (x, a) = parse_graph(json)?;
        Ok((GraphSource::Finite(x), a))
    }
}

/// A subgroup as a JSON list of rendered period words, or the same words
/// separated by commas or whitespace.
pub fn parse_subgroup(text: &str, ports: &PortAlphabet) -> Result<SubgroupSpec> {
    let words: Vec<String> = match serde_json::from_str::<Vec<String>>(text) {
        Ok(ws) => ws,
        Err(_) => text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(String::from).collect(),
    };
    Ok(SubgroupSpec::new(words.iter().map(|w| PathWord::parse(w, ports)).collect::<Result<Vec<_>>>()?))
}

pub fn subgroup_to_json(h: &SubgroupSpec, ports: &PortAlphabet) -> String {
    to_json(&h.generators.iter().map(|g| g.render(ports)).collect::<Vec<_>>())
}

/// Graphviz rendering: one node per vertex, named by its path; edges carry
/// their two ports, singleton loops are dashed.
pub fn to_dot(x: &CanonicalGraph, alphabets: &Alphabets) -> String {
    let names = x.names();
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in x.vertices() {
        let name = names[v as usize].render(&alphabets.ports);
        let shown = if name.is_empty() { "ε".to_string() } else { name };
        let style = if v == 0 { ", peripheries=2" } else { "" };
        out.push_str(&format!("  n{v} [label=\"{}\\n{}\"{style}];\n", escape(&shown), escape(alphabets.labels.symbol(x.label(v)))));
    }
    for ((v, p), (w, q)) in x.edges() {
        let (ps, qs) = (escape(alphabets.ports.symbol(p)), escape(alphabets.ports.symbol(q)));
        if (v, p) == (w, q) {
            out.push_str(&format!("  n{v} -- n{v} [label=\"{ps}\", style=dashed];\n"));
        } else {
            out.push_str(&format!("  n{v} -- n{w} [taillabel=\"{ps}\", headlabel=\"{qs}\"];\n"));
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests;
