//! Built-in graphs on the square grid and the free group.
//!
//! Grid ports are `a, a', b, b'` (indices 0..4): port `a` of `(i, j)` is
//! joined to port `a'` of `(i+1, j)` and port `b` to port `b'` of `(i, j+1)`.

use std::sync::Arc;

use crate::alphabet::{Label, Port};
use crate::canonical::{canonicalize_raw, CanonicalGraph, VertexId};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::source::{GraphSource, Key, LazySource, LocalGraph};
use crate::word::{Letter, PathWord};

pub const A: Port = Port(0);
pub const A_INV: Port = Port(1);
pub const B: Port = Port(2);
pub const B_INV: Port = Port(3);

/// The letter `(a, a')`: one step in the first coordinate.
pub fn step_a() -> Letter {
    Letter::new(A, A_INV)
}

/// The letter `(b, b')`: one step in the second coordinate.
pub fn step_b() -> Letter {
    Letter::new(B, B_INV)
}

/// The path `(a,a')^i (b,b')^j`, using inverse letters for negative counts.
pub fn grid_word(i: i64, j: i64) -> PathWord {
    let mut w = PathWord::empty();
    let la = if i >= 0 { step_a() } else { step_a().reversed() };
    let lb = if j >= 0 { step_b() } else { step_b().reversed() };
    for _ in 0..i.unsigned_abs() {
        w.push(la);
    }
    for _ in 0..j.unsigned_abs() {
        w.push(lb);
    }
    w
}

/// Displacement of a grid word, or `None` if it uses a letter the grid lacks.
pub fn grid_displacement(u: &PathWord) -> Option<(i64, i64)> {
    let (mut x, mut y) = (0, 0);
    for l in u.letters() {
        match (l.exit, l.entry) {
            (A, A_INV) => x += 1,
            (A_INV, A) => x -= 1,
            (B, B_INV) => y += 1,
            (B_INV, B) => y -= 1,
            _ => return None,
        }
    }
    Some((x, y))
}

/// A labelling of Z² with period `(p, q)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PeriodicColoring {
    p: usize,
    q: usize,
    table: Vec<Label>,
}

impl PeriodicColoring {
    /// `rows[i][j]` is the label of every `(i + kp, j + lq)`.
    pub fn new(rows: Vec<Vec<Label>>) -> Result<Self> {
        let p = rows.len();
        let q = rows.first().map_or(0, Vec::len);
        if p == 0 || q == 0 || rows.iter().any(|r| r.len() != q) {
            return Err(Error::Malformed("coloring table must be a non-empty rectangle".into()));
        }
        Ok(PeriodicColoring { p, q, table: rows.into_iter().flatten().collect() })
    }

    pub fn constant(label: Label) -> Self {
        PeriodicColoring { p: 1, q: 1, table: vec![label] }
    }

    pub fn from_fn(p: usize, q: usize, f: impl Fn(usize, usize) -> Label) -> Self {
        let mut table = Vec::with_capacity(p * q);
        for i in 0..p {
            for j in 0..q {
                table.push(f(i, j));
            }
        }
        PeriodicColoring { p, q, table }
    }

    pub fn period(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn rows(&self) -> Vec<Vec<Label>> {
        self.table.chunks(self.q).map(<[Label]>::to_vec).collect()
    }

    pub fn label(&self, i: i64, j: i64) -> Label {
        let a = i.rem_euclid(self.p as i64) as usize;
        let b = j.rem_euclid(self.q as i64) as usize;
        self.table[a * self.q + b]
    }

    /// Whether translating by `d` preserves the labelling.
    pub fn invariant_under(&self, d: (i64, i64)) -> bool {
        (0..self.p as i64).all(|i| (0..self.q as i64).all(|j| self.label(i + d.0, j + d.1) == self.label(i, j)))
    }

    pub fn max_label(&self) -> Label {
        self.table.iter().copied().max().unwrap_or(Label(0))
    }

    /// Every translation preserving the labelling.
    pub fn period_lattice(&self) -> Lattice {
        let (p, q) = (self.p as i64, self.q as i64);
        let mut gens = vec![(p, 0), (0, q)];
        gens.extend((0..p).flat_map(|i| (0..q).map(move |j| (i, j))).filter(|&d| self.invariant_under(d)));
        Lattice::from_generators(&gens)
    }
}

/// Z² modulo a lattice of translations, with a periodic labelling.
///
/// The trivial lattice gives the infinite grid, `⟨(0, k)⟩` a cylinder.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZSquare {
    wrap: Lattice,
    coloring: PeriodicColoring,
}

impl ZSquare {
    pub fn new(wrap: Lattice, coloring: PeriodicColoring) -> Result<Self> {
        if !wrap.generators().into_iter().all(|g| coloring.invariant_under(g)) {
            return Err(Error::Malformed("coloring is not invariant under the wrapping lattice".into()));
        }
        Ok(ZSquare { wrap, coloring })
    }

    pub fn wrap(&self) -> &Lattice {
        &self.wrap
    }

    pub fn coloring(&self) -> &PeriodicColoring {
        &self.coloring
    }

    pub fn key(&self, i: i64, j: i64) -> Key {
        let (x, y) = self.wrap.reduce((i, j));
        vec![x, y]
    }

    /// Whether translating by `d` is a period: it must preserve the labels.
    /// Translations are always automorphisms of the support.
    pub fn is_period(&self, d: (i64, i64)) -> bool {
        self.coloring.invariant_under(d)
    }
}

impl LocalGraph for ZSquare {
    fn port_count(&self) -> usize {
        4
    }

    fn label(&self, v: &Key) -> Label {
        self.coloring.label(v[0], v[1])
    }

    fn step(&self, v: &Key, p: Port) -> Option<(Key, Port)> {
        let (i, j) = (v[0], v[1]);
        Some(match p {
            A => (self.key(i + 1, j), A_INV),
            A_INV => (self.key(i - 1, j), A),
            B => (self.key(i, j + 1), B_INV),
            B_INV => (self.key(i, j - 1), B),
            _ => return None,
        })
    }

    fn describe(&self) -> String {
        format!("Z² / {:?} with {:?}-periodic coloring", self.wrap.generators(), self.coloring.period())
    }

    fn as_zsquare(&self) -> Option<&ZSquare> {
        Some(self)
    }

    fn homogeneous(&self) -> bool {
        self.coloring.period_lattice().index() == Some(1)
    }
}

/// The infinite grid with a periodic labelling, pointed at `(0, 0)`.
pub fn grid_source(coloring: PeriodicColoring) -> GraphSource {
    let z = ZSquare::new(Lattice::zero(), coloring).expect("trivial lattice");
    GraphSource::Lazy(LazySource::new(Arc::new(z), vec![0, 0]))
}

/// The monochromatic grid.
pub fn monochromatic_grid() -> GraphSource {
    grid_source(PeriodicColoring::constant(Label(0)))
}

/// The cylinder Z × (Z/k), infinite along `a` and of circumference `k` along `b`.
pub fn cylinder_source(k: usize, coloring: PeriodicColoring) -> Result<GraphSource> {
    if k == 0 {
        return Err(Error::Malformed("cylinder circumference must be positive".into()));
    }
    let z = ZSquare::new(Lattice::from_generators(&[(0, k as i64)]), coloring)?;
    Ok(GraphSource::Lazy(LazySource::new(Arc::new(z), vec![0, 0])))
}

/// The k1 × k2 torus: vertices Z/k1 × Z/k2, `a`-edges along the first
/// coordinate, `b`-edges along the second.
pub fn torus_graph(k1: usize, k2: usize, coloring: impl Fn(usize, usize) -> Label) -> CanonicalGraph {
    assert!(k1 >= 1 && k2 >= 1, "torus sides must be positive");
    let idx = |i: usize, j: usize| (i % k1) * k2 + (j % k2);
    canonicalize_raw(
        4,
        k1 * k2,
        0,
        |v| coloring(v / k2, v % k2),
        |v, p| {
            let (i, j) = (v / k2, v % k2);
            Some(match p {
                A => (idx(i + 1, j), A_INV),
                A_INV => (idx(i + k1 - 1, j), A),
                B => (idx(i, j + 1), B_INV),
                B_INV => (idx(i, j + k2 - 1), B),
                _ => return None,
            })
        },
    )
    .expect("tori are connected")
}

pub fn monochromatic_torus(k1: usize, k2: usize) -> CanonicalGraph {
    torus_graph(k1, k2, |_, _| Label(0))
}

/// Ports `g0, g0', g1, g1', …` of the free group on `k` generators.
pub fn free_ports(k: usize) -> Vec<String> {
    const NAMES: &[&str] = &["a", "b", "c", "d", "e", "f", "g", "h"];
    (0..k)
        .flat_map(|g| {
            let base = NAMES.get(g).map_or_else(|| format!("g{g}"), |s| s.to_string());
            [base.clone(), format!("{base}'")]
        })
        .collect()
}

/// The Cayley graph of the free group on `k` generators: the 2k-regular tree.
///
/// Vertices are reduced words, letters encoded as `±(g+1)`. Labels are
/// constant, or pulled back from a finite graph whose ports are all paired
/// `g ↔ g'`.
#[derive(Clone, Debug)]
pub struct FreeTree {
    generators: usize,
    pullback: Option<CanonicalGraph>,
}

impl FreeTree {
    pub fn new(generators: usize) -> Self {
        FreeTree { generators, pullback: None }
    }

    /// Labels each tree vertex by the label of the vertex the same word reaches in `target`.
    pub fn pulled_back(generators: usize, target: CanonicalGraph) -> Result<Self> {
        if target.port_count() != 2 * generators {
            return Err(Error::AlphabetMismatch("pullback target has the wrong port count".into()));
        }
        for v in target.vertices() {
            for g in 0..generators {
                let (p, pi) = (Port(2 * g as u8), Port(2 * g as u8 + 1));
                let ok_fwd = matches!(target.neighbor(v, p), Some((_, q)) if q == pi);
                let ok_back = matches!(target.neighbor(v, pi), Some((_, q)) if q == p);
                if !ok_fwd || !ok_back {
                    return Err(Error::NotAMember("pullback target is not 2k-regular with inverse ports".into()));
                }
            }
        }
        Ok(FreeTree { generators, pullback: Some(target) })
    }

    fn target_vertex(&self, v: &Key) -> Option<VertexId> {
        let t = self.pullback.as_ref()?;
        let mut cur = 0;
        for &s in v {
            let g = (s.unsigned_abs() - 1) as u8;
            let p = if s > 0 { Port(2 * g) } else { Port(2 * g + 1) };
            cur = t.neighbor(cur, p).expect("regular target").0;
        }
        Some(cur)
    }
}

impl LocalGraph for FreeTree {
    fn port_count(&self) -> usize {
        2 * self.generators
    }

    fn label(&self, v: &Key) -> Label {
        match (&self.pullback, self.target_vertex(v)) {
            (Some(t), Some(x)) => t.label(x),
            _ => Label(0),
        }
    }

    fn step(&self, v: &Key, p: Port) -> Option<(Key, Port)> {
        if p.index() >= 2 * self.generators {
            return None;
        }
        let g = (p.index() / 2) as i64 + 1;
        let (s, entry) = if p.index().is_multiple_of(2) { (g, Port(p.0 + 1)) } else { (-g, Port(p.0 - 1)) };
        let mut w = v.clone();
        if w.last() == Some(&-s) {
            w.pop();
        } else {
            w.push(s);
        }
        Some((w, entry))
    }

    fn describe(&self) -> String {
        format!("{}-regular tree", 2 * self.generators)
    }

    fn homogeneous(&self) -> bool {
        self.pullback.is_none()
    }
}

pub fn free_tree_source(generators: usize) -> GraphSource {
    GraphSource::Lazy(LazySource::new(Arc::new(FreeTree::new(generators)), vec![]))
}
