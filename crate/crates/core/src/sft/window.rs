//! Defining windows, window graphs, and the forbid/allow duality.

use std::collections::BTreeSet;

use crate::alphabet::{Alphabets, Label, Port};
use crate::canonical::{canonicalize_raw, CanonicalGraph};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::language::PrefixLanguage;
use crate::word::PathWord;

use super::{ConstraintGroup, Mode, SftDefinition, ShapeRule};

/// Union of all group windows (prefix-stable, not necessarily minimal).
pub fn window(d: &SftDefinition) -> PrefixLanguage {
    d.groups().iter().fold(PrefixLanguage::epsilon(), |acc, g| acc.union(&g.window))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Slot {
    Open,
    Empty,
    To(usize, Port),
}

struct Search<'a> {
    ports: usize,
    labels: &'a [Label],
    words: Vec<(Option<usize>, PathWord)>,
    cap: usize,
    candidates: usize,
    out: BTreeSet<CanonicalGraph>,
    vertex_labels: Vec<Label>,
    slots: Vec<Slot>,
    designation: Vec<Option<usize>>,
}

impl Search<'_> {
    fn slot(&self, v: usize, p: usize) -> Slot {
        self.slots[v * self.ports + p]
    }

    fn connect(&mut self, v: usize, p: usize, w: usize, q: usize) {
        self.slots[v * self.ports + p] = Slot::To(w, Port(q as u8));
        self.slots[w * self.ports + q] = Slot::To(v, Port(p as u8));
    }

    fn open(&mut self, v: usize, p: usize, w: usize, q: usize) {
        self.slots[v * self.ports + p] = Slot::Open;
        self.slots[w * self.ports + q] = Slot::Open;
    }

    fn push_vertex(&mut self, label: Label) -> usize {
        self.vertex_labels.push(label);
        self.slots.extend(std::iter::repeat_n(Slot::Open, self.ports));
        self.vertex_labels.len() - 1
    }

    fn pop_vertex(&mut self) {
        self.vertex_labels.pop();
        self.slots.truncate(self.vertex_labels.len() * self.ports);
    }

    /// Resolves the words in shortlex order, deciding each port the first
    /// time a word crosses it. Word `k` has designation slot `k + 1`.
    fn resolve(&mut self, k: usize) -> Result<()> {
        if k == self.words.len() {
            return self.fill(0);
        }
        let (parent, word) = self.words[k].clone();
        let letter = word.last().expect("non-empty word");
        let (a, b) = (letter.exit.index(), letter.entry);
        let Some(x) = parent.and_then(|i| self.designation[i]) else {
            self.designation[k + 1] = None;
            return self.resolve(k + 1);
        };
        match self.slot(x, a) {
            Slot::Empty => {
                self.designation[k + 1] = None;
                self.resolve(k + 1)
            }
            Slot::To(y, q) => {
                self.designation[k + 1] = (q == b).then_some(y);
                self.resolve(k + 1)
            }
            Slot::Open => {
                self.slots[x * self.ports + a] = Slot::Empty;
                self.designation[k + 1] = None;
                self.resolve(k + 1)?;
                self.slots[x * self.ports + a] = Slot::Open;
                let n = self.vertex_labels.len();
                for y in 0..n {
                    for q in 0..self.ports {
                        if self.slot(y, q) != Slot::Open {
                            continue;
                        }
                        self.connect(x, a, y, q);
                        self.designation[k + 1] = (Port(q as u8) == b).then_some(y);
                        self.resolve(k + 1)?;
                        self.open(x, a, y, q);
                    }
                }
                // every vertex needs a designating word, so at most one per word
                if n < self.words.len() + 1 {
                    for li in 0..self.labels.len() {
                        let z = self.push_vertex(self.labels[li]);
                        for q in 0..self.ports {
                            self.connect(x, a, z, q);
                            self.designation[k + 1] = (Port(q as u8) == b).then_some(z);
                            self.resolve(k + 1)?;
                            self.open(x, a, z, q);
                        }
                        self.pop_vertex();
                    }
                }
                Ok(())
            }
        }
    }

    /// Decides the ports no word crosses: empty, or an edge among existing vertices.
    fn fill(&mut self, from: usize) -> Result<()> {
        let Some(s) = (from..self.slots.len()).find(|&i| self.slots[i] == Slot::Open) else {
            return self.emit();
        };
        let (v, p) = (s / self.ports, s % self.ports);
        self.slots[s] = Slot::Empty;
        self.fill(s + 1)?;
        for t in s..self.slots.len() {
            if self.slots[t] != Slot::Open && t != s {
                continue;
            }
            let (w, q) = (t / self.ports, t % self.ports);
            self.slots[s] = Slot::Open;
            self.connect(v, p, w, q);
            self.fill(s + 1)?;
            self.open(v, p, w, q);
        }
        self.slots[s] = Slot::Open;
        Ok(())
    }

    fn emit(&mut self) -> Result<()> {
        self.candidates += 1;
        if self.candidates > self.cap {
            return Err(Error::CapExceeded { what: "window graph candidates", limit: self.cap });
        }
        let n = self.vertex_labels.len();
        let mut designated = vec![false; n];
        designated[0] = true;
        for v in self.designation.iter().flatten() {
            designated[*v] = true;
        }
        if designated.iter().all(|&d| d) {
            let g = canonicalize_raw(
                self.ports,
                n,
                0,
                |v| self.vertex_labels[v],
                |v, p| match self.slots[v * self.ports + p.index()] {
                    Slot::To(w, q) => Some((w, q)),
                    _ => None,
                },
            )
            .expect("designated vertices are connected");
            self.out.insert(g);
        }
        Ok(())
    }
}

/// `windowGraphs(m)`: every canonical graph all of whose vertices are
/// designated by words of `m`, i.e. every possible `m`-cut.
pub fn window_graphs(m: &PrefixLanguage, alphabets: &Alphabets, caps: &Caps) -> Result<BTreeSet<CanonicalGraph>> {
    let ports = alphabets.port_count();
    if m.max_port().is_some_and(|p| p.index() >= ports) {
        return Err(Error::AlphabetMismatch("language uses an undeclared port".into()));
    }
    let all: Vec<&PathWord> = m.words().collect();
    // index 0 is ε; `words` skips it and stores parent indices shifted by one
    let words: Vec<(Option<usize>, PathWord)> = all[1..]
        .iter()
        .map(|w| {
            let parent = w.parent().expect("non-empty");
            let idx = all.iter().position(|u| **u == parent).expect("prefix-stable");
            (Some(idx), (*w).clone())
        })
        .collect();
    let labels: Vec<Label> = alphabets.labels.labels().collect();
    let mut search = Search {
        ports,
        labels: &labels,
        words: Vec::new(),
        cap: caps.window_graphs,
        candidates: 0,
        out: BTreeSet::new(),
        vertex_labels: Vec::new(),
        slots: Vec::new(),
        designation: Vec::new(),
    };
    search.words = words;
    for &l in &labels {
        search.push_vertex(l);
        search.designation = vec![None; all.len()];
        search.designation[0] = Some(0);
        search.resolve(0)?;
        search.pop_vertex();
    }
    Ok(search.out)
}

fn explicit_split(d: &SftDefinition, caps: &Caps) -> Result<(PrefixLanguage, BTreeSet<CanonicalGraph>, BTreeSet<CanonicalGraph>)> {
    let m = window(d);
    let universe = window_graphs(&m, d.alphabets(), caps)?;
    let (allowed, forbidden): (BTreeSet<_>, BTreeSet<_>) = universe.into_iter().partition(|y| d.holds_at(y, &0));
    Ok((m, allowed, forbidden))
}

/// Equivalent allow-mode definition over the single window `M = window(d)`,
/// listing `𝒳↾M` minus the shapes `d` rejects.
pub fn to_allow_form(d: &SftDefinition, caps: &Caps) -> Result<SftDefinition> {
    let (m, allowed, _) = explicit_split(d, caps)?;
    SftDefinition::new(d.alphabets().clone(), Mode::Allow, vec![ConstraintGroup::new(m, ShapeRule::Listed(allowed))])
}

/// Equivalent forbid-mode definition over the single window `M = window(d)`.
pub fn to_forbid_form(d: &SftDefinition, caps: &Caps) -> Result<SftDefinition> {
    let (m, _, forbidden) = explicit_split(d, caps)?;
    SftDefinition::new(d.alphabets().clone(), Mode::Forbid, vec![ConstraintGroup::new(m, ShapeRule::Listed(forbidden))])
}

/// Allow-mode form whose allowed set is described by `d` itself rather than
/// listed; for definitions whose window graphs are too many to list.
pub fn to_allow_form_symbolic(d: &SftDefinition) -> SftDefinition {
    let m = window(d);
    SftDefinition::new(d.alphabets().clone(), Mode::Allow, vec![ConstraintGroup::new(m, ShapeRule::Satisfying(Box::new(d.clone())))])
        .expect("same alphabets")
}

/// Forbid-mode counterpart of [`to_allow_form_symbolic`].
pub fn to_forbid_form_symbolic(d: &SftDefinition) -> SftDefinition {
    let m = window(d);
    SftDefinition::new(d.alphabets().clone(), Mode::Forbid, vec![ConstraintGroup::new(m, ShapeRule::Violating(Box::new(d.clone())))])
        .expect("same alphabets")
}

