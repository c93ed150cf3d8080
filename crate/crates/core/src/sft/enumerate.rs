//! Finite members of an SFT, and colorings of a fixed support.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rayon::prelude::*;

use crate::alphabet::{Alphabets, Label, Port};
use crate::canonical::{canonicalize_raw, CanonicalGraph, VertexId};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::graph::BasedGraph;
use crate::navigate::Navigate;

use super::{is_member, window, SftDefinition};

/// Finite members up to a vertex bound, as pointed classes and as shift orbits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Enumeration {
    /// Canonical forms, sorted.
    pub members: Vec<CanonicalGraph>,
    /// Indices into `members`; each inner list is one orbit under shift.
    pub orbits: Vec<Vec<usize>>,
}

impl Enumeration {
    fn from_members(members: BTreeSet<CanonicalGraph>) -> Self {
        let members: Vec<CanonicalGraph> = members.into_iter().collect();
        let mut by_key: BTreeMap<CanonicalGraph, Vec<usize>> = BTreeMap::new();
        for (i, x) in members.iter().enumerate() {
            let key = x.vertices().map(|v| x.rebase(v)).min().expect("non-empty graph");
            by_key.entry(key).or_default().push(i);
        }
        Enumeration { members, orbits: by_key.into_values().collect() }
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Slot {
    Open,
    Empty,
    To(usize, Port),
}

struct Partial {
    ports: usize,
    labels: Vec<Label>,
    adj: Vec<Slot>,
}

impl Navigate for Partial {
    type Vertex = usize;

    fn port_count(&self) -> usize {
        self.ports
    }

    fn origin(&self) -> usize {
        0
    }

    fn label(&self, v: &usize) -> Label {
        self.labels[*v]
    }

    fn step(&self, v: &usize, p: Port) -> Option<(usize, Port)> {
        match self.adj[v * self.ports + p.index()] {
            Slot::To(w, q) => Some((w, q)),
            _ => None,
        }
    }
}

impl Partial {
    fn connect(&mut self, v: usize, p: usize, w: usize, q: usize) {
        self.adj[v * self.ports + p] = Slot::To(w, Port(q as u8));
        self.adj[w * self.ports + q] = Slot::To(v, Port(p as u8));
    }

    fn open(&mut self, v: usize, p: usize, w: usize, q: usize) {
        self.adj[v * self.ports + p] = Slot::Open;
        self.adj[w * self.ports + q] = Slot::Open;
    }

    fn len(&self) -> usize {
        self.labels.len()
    }

    /// Whether every vertex within `depth` of `v` has index `<= closed`.
    fn settled(&self, v: usize, depth: usize, closed: usize) -> bool {
        let mut dist = vec![usize::MAX; self.len()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            if x > closed {
                return false;
            }
            if dist[x] == depth {
                continue;
            }
            for p in 0..self.ports {
                if let Slot::To(y, _) = self.adj[x * self.ports + p] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        true
    }

    fn to_canonical(&self) -> CanonicalGraph {
        let adj = self
            .adj
            .iter()
            .map(|s| match *s {
                Slot::To(w, q) => Some((w as VertexId, q)),
                _ => None,
            })
            .collect();
        CanonicalGraph::from_parts_unchecked(self.ports, self.labels.clone(), adj)
    }
}

/// Generates canonical graphs directly: vertices are numbered in the order a
/// breadth-first search from the origin discovers them, so each pointed class
/// is produced exactly once.
struct Generator<'a, F: FnMut(CanonicalGraph)> {
    d: &'a SftDefinition,
    alphabet: Vec<Label>,
    max: usize,
    depth: usize,
    g: Partial,
    checked: Vec<bool>,
    visit: F,
}

impl<F: FnMut(CanonicalGraph)> Generator<'_, F> {
    fn go(&mut self, i: usize, p: usize) {
        let ports = self.g.ports;
        if i == self.g.len() {
            (self.visit)(self.g.to_canonical());
            return;
        }
        if p == ports {
            let mut newly = Vec::new();
            let mut ok = true;
            for v in 0..=i {
                if !self.checked[v] && self.g.settled(v, self.depth, i) {
                    self.checked[v] = true;
                    newly.push(v);
                    if !self.d.holds_at(&self.g, &v) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.go(i + 1, 0);
            }
            for v in newly {
                self.checked[v] = false;
            }
            return;
        }
        let s = i * ports + p;
        if self.g.adj[s] != Slot::Open {
            return self.go(i, p + 1);
        }
        self.g.adj[s] = Slot::Empty;
        self.go(i, p + 1);
        self.g.adj[s] = Slot::Open;
        for j in i..self.g.len() {
            let first = if j == i { p } else { 0 };
            for q in first..ports {
                if self.g.adj[j * ports + q] != Slot::Open {
                    continue;
                }
                self.g.connect(i, p, j, q);
                self.go(i, p + 1);
                self.g.open(i, p, j, q);
            }
        }
        if self.g.len() < self.max {
            for li in 0..self.alphabet.len() {
                let z = self.g.len();
                self.g.labels.push(self.alphabet[li]);
                self.g.adj.extend(std::iter::repeat_n(Slot::Open, ports));
                self.checked.push(false);
                for q in 0..ports {
                    self.g.connect(i, p, z, q);
                    self.go(i, p + 1);
                    self.g.open(i, p, z, q);
                }
                self.checked.pop();
                self.g.labels.pop();
                self.g.adj.truncate(z * ports);
            }
        }
    }
}

/// All finite members with at most `max_vertices` vertices.
pub fn enumerate(d: &SftDefinition, max_vertices: usize, caps: &Caps) -> Result<Enumeration> {
    let found = generate(d, max_vertices, caps, |visit| {
        let mut out = Vec::new();
        visit(&mut |x| out.push(x));
        out
    })?;
    Ok(Enumeration::from_members(found.into_iter().flatten().collect()))
}

/// Calls `f` on every finite member with at most `max_vertices` vertices,
/// without collecting them. Each pointed class is visited exactly once, in
/// no particular order.
pub fn for_each_member(d: &SftDefinition, max_vertices: usize, caps: &Caps, f: impl Fn(&CanonicalGraph) + Sync) -> Result<()> {
    generate(d, max_vertices, caps, |visit| visit(&mut |x| f(&x)))?;
    Ok(())
}

type Run<'r> = &'r mut dyn FnMut(&mut dyn FnMut(CanonicalGraph));

/// Runs the generator once per origin label, in parallel; `per_label` wraps
/// each run with its own sink.
fn generate<T: Send>(
    d: &SftDefinition,
    max_vertices: usize,
    caps: &Caps,
    per_label: impl Fn(Run<'_>) -> T + Sync,
) -> Result<Vec<T>> {
    if max_vertices > caps.enumerate_vertices {
        return Err(Error::CapExceeded { what: "enumerate vertices", limit: caps.enumerate_vertices });
    }
    if max_vertices == 0 {
        return Ok(Vec::new());
    }
    let ports = d.alphabets().port_count();
    let alphabet: Vec<Label> = d.alphabets().labels.labels().collect();
    let depth = window(d).max_len();
    Ok(alphabet
        .par_iter()
        .map(|&l| {
            per_label(&mut |sink| {
                let mut gen = Generator {
                    d,
                    alphabet: alphabet.clone(),
                    max: max_vertices,
                    depth,
                    g: Partial { ports, labels: vec![l], adj: vec![Slot::Open; ports] },
                    checked: vec![false],
                    visit: sink,
                };
                gen.go(0, 0);
            })
        })
        .collect())
}

/// Every connected canonical graph with at most `max_vertices` vertices,
/// produced by brute force over named graphs.
pub fn all_graphs_naive(alphabets: &Alphabets, max_vertices: usize) -> BTreeSet<CanonicalGraph> {
    let ports = alphabets.port_count();
    let labels = alphabets.label_count();
    let mut out = BTreeSet::new();
    for n in 1..=max_vertices {
        let slots = n * ports;
        // the first slot's fate splits the work: empty, or matched with slot t
        let firsts: Vec<Option<usize>> = std::iter::once(None).chain((0..slots).map(Some)).collect();
        let found: Vec<BTreeSet<CanonicalGraph>> = firsts
            .par_iter()
            .map(|first| {
                let mut m = vec![UNDECIDED; slots];
                match *first {
                    None => m[0] = EMPTY,
                    Some(t) => {
                        m[0] = t;
                        m[t] = 0;
                    }
                }
                let mut set = BTreeSet::new();
                involutions(&mut m, 1, &mut |m| {
                    for code in 0..labels.pow(n as u32) {
                        let label = |v: usize| Label(((code / labels.pow(v as u32)) % labels) as u8);
                        let step = |v: usize, p: Port| {
                            let t = m[v * ports + p.index()];
                            (t != EMPTY).then(|| (t / ports, Port((t % ports) as u8)))
                        };
                        if let Ok(g) = canonicalize_raw(ports, n, 0, label, step) {
                            set.insert(g);
                        }
                    }
                });
                set
            })
            .collect();
        out.extend(found.into_iter().flatten());
    }
    out
}

const UNDECIDED: usize = usize::MAX;
const EMPTY: usize = usize::MAX - 1;

/// Visits every way to make each undecided slot empty, a singleton loop, or
/// paired with another undecided slot.
fn involutions(m: &mut Vec<usize>, from: usize, visit: &mut impl FnMut(&[usize])) {
    let Some(s) = (from..m.len()).find(|&s| m[s] == UNDECIDED) else {
        visit(m);
        return;
    };
    m[s] = EMPTY;
    involutions(m, s + 1, visit);
    for t in s..m.len() {
        if t != s && m[t] != UNDECIDED {
            continue;
        }
        m[s] = t;
        m[t] = s;
        involutions(m, s + 1, visit);
        m[t] = UNDECIDED;
    }
    m[s] = UNDECIDED;
}

/// Reference enumeration: brute force over all small graphs, then filter.
pub fn enumerate_naive(d: &SftDefinition, max_vertices: usize) -> Enumeration {
    let members = all_graphs_naive(d.alphabets(), max_vertices).into_iter().filter(|x| is_member(d, x)).collect();
    Enumeration::from_members(members)
}

/// Labelings of a fixed support that make it a member.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Colorings {
    pub count: usize,
    /// One label per named vertex of the support, in the support's vertex order.
    pub labelings: Vec<Vec<Label>>,
}

struct Relabeled<'a> {
    support: &'a BasedGraph,
    labels: &'a [Label],
}

impl Navigate for Relabeled<'_> {
    type Vertex = usize;

    fn port_count(&self) -> usize {
        self.support.graph.port_count()
    }

    fn origin(&self) -> usize {
        self.support.origin
    }

    fn label(&self, v: &usize) -> Label {
        self.labels[*v]
    }

    fn step(&self, v: &usize, p: Port) -> Option<(usize, Port)> {
        self.support.graph.slot(*v, p)
    }
}

/// `colorings`: every labeling of the named vertices of `support` under
/// which its canonical form is a member. Labels already on `support` are ignored.
pub fn colorings(d: &SftDefinition, support: &BasedGraph) -> Result<Colorings> {
    let alphabets = d.alphabets();
    if support.graph.port_count() != alphabets.port_count() {
        return Err(Error::AlphabetMismatch("support and definition have different port counts".into()));
    }
    let n = support.graph.vertex_count();
    let k = alphabets.label_count();
    let reach: Vec<usize> = {
        let probe = Relabeled { support, labels: &vec![Label(0); n] };
        crate::navigate::ball(&probe, &support.origin, n).into_iter().map(|(v, _, _)| v).collect()
    };
    let total = (k as u128).checked_pow(n as u32).filter(|t| *t <= u64::MAX as u128);
    let Some(total) = total else {
        return Err(Error::CapExceeded { what: "colorings labelings", limit: usize::MAX });
    };
    let mut labelings = Vec::new();
    let mut labels = vec![Label(0); n];
    for code in 0..total as u64 {
        let mut c = code;
        for l in labels.iter_mut() {
            *l = Label((c % k as u64) as u8);
            c /= k as u64;
        }
        let x = Relabeled { support, labels: &labels };
        if reach.iter().all(|v| d.holds_at(&x, v)) {
            labelings.push(labels.clone());
        }
    }
    Ok(Colorings { count: labelings.len(), labelings })
}
