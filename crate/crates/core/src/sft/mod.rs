//! Subshifts of finite type over pointed port graphs.
//!
//! A definition is a finite list of constraint groups. Each group pairs a
//! window (a finite prefix-stable language) with a finite set of shapes, all
//! of them window graphs of that window. In forbid mode a graph is a member
//! when no vertex's window cut lies in any group's set; in allow mode every
//! vertex must have its cut in at least one group's set.
//!
//! Shape sets are given either as explicit lists or by a rule that decides
//! membership of a window graph (for instance "the relator word is not a
//! cycle"). A rule denotes exactly the finite set of window graphs it accepts,
//! and [`SftDefinition::patterns`] materializes it when that set is small
//! enough to list.

use std::collections::BTreeSet;

use crate::alphabet::{Alphabets, Label, Port};
use crate::canonical::CanonicalGraph;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::language::PrefixLanguage;
use crate::navigate::{self, Navigate};
use crate::pattern::Pattern;
use crate::source::GraphSource;
use crate::word::{Letter, PathWord};

mod enumerate;
mod window;

pub use enumerate::{all_graphs_naive, colorings, enumerate, enumerate_naive, for_each_member, Colorings, Enumeration};
pub use window::{to_allow_form, to_allow_form_symbolic, to_forbid_form, to_forbid_form_symbolic, window, window_graphs};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    Forbid,
    Allow,
}

/// A finite set of window graphs, listed or described by a rule.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ShapeRule {
    /// Exactly these graphs.
    Listed(BTreeSet<CanonicalGraph>),
    /// Every window graph except these.
    AllExcept(BTreeSet<CanonicalGraph>),
    /// Window graphs whose origin has `port` empty, or joined to a port other than `inverse`.
    PortInverse { port: Port, inverse: Port },
    /// Window graphs in which `word` is not a cycle back to the origin.
    RelatorCycle { word: PathWord },
    /// Window graphs in which `letter` leads from a vertex labelled `x` to one
    /// labelled `y` for some `(x, y)` in `pairs`.
    NearestNeighbor { letter: Letter, pairs: BTreeSet<(Label, Label)> },
    /// Window graphs on which the inner definition holds at the origin.
    Satisfying(Box<SftDefinition>),
    /// Window graphs on which the inner definition fails at the origin.
    Violating(Box<SftDefinition>),
}

impl ShapeRule {
    /// Whether the window graph `y` belongs to the set.
    pub fn contains(&self, y: &CanonicalGraph) -> bool {
        match self {
            ShapeRule::Listed(set) => set.contains(y),
            ShapeRule::AllExcept(set) => !set.contains(y),
            ShapeRule::PortInverse { port, inverse } => match y.neighbor(0, *port) {
                None => true,
                Some((_, q)) => q != *inverse,
            },
            ShapeRule::RelatorCycle { word } => y.follow(word) != Some(0),
            ShapeRule::NearestNeighbor { letter, pairs } => {
                match y.follow(&PathWord::from_letters([*letter])) {
                    Some(t) => pairs.contains(&(y.label(0), y.label(t))),
                    None => false,
                }
            }
            ShapeRule::Satisfying(d) => d.holds_at(y, &0),
            ShapeRule::Violating(d) => !d.holds_at(y, &0),
        }
    }

    fn is_listed(&self) -> bool {
        matches!(self, ShapeRule::Listed(_))
    }
}

/// One window together with its set of shapes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstraintGroup {
    pub window: PrefixLanguage,
    pub rule: ShapeRule,
}

impl ConstraintGroup {
    pub fn new(window: PrefixLanguage, rule: ShapeRule) -> Self {
        ConstraintGroup { window, rule }
    }

    pub fn contains(&self, y: &CanonicalGraph) -> bool {
        self.rule.contains(y)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SftDefinition {
    alphabets: Alphabets,
    mode: Mode,
    groups: Vec<ConstraintGroup>,
}

/// Outcome of a membership check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MembershipVerdict {
    Member,
    /// The vertex designated by `witness` breaks the definition; in forbid
    /// mode `pattern` is the forbidden pattern found there, in allow mode it
    /// is the cut that no allowed pattern matches.
    Violation { witness: PathWord, pattern: Pattern },
    /// No violation within the checked radius of a graph not known to be finite.
    ConsistentUpToRadius(usize),
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipVerdict::Member)
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, MembershipVerdict::Violation { .. })
    }
}

impl SftDefinition {
    pub fn new(alphabets: Alphabets, mode: Mode, groups: Vec<ConstraintGroup>) -> Result<Self> {
        let d = SftDefinition { alphabets, mode, groups };
        d.validate()?;
        Ok(d)
    }

    /// Groups explicit patterns by window.
    pub fn from_patterns(alphabets: Alphabets, mode: Mode, patterns: impl IntoIterator<Item = Pattern>) -> Result<Self> {
        let mut by_window: Vec<(PrefixLanguage, BTreeSet<CanonicalGraph>)> = Vec::new();
        for p in patterns {
            match by_window.iter_mut().find(|(w, _)| w == p.window()) {
                Some((_, set)) => {
                    set.insert(p.shape().clone());
                }
                None => by_window.push((p.window().clone(), BTreeSet::from([p.shape().clone()]))),
            }
        }
        let groups = by_window.into_iter().map(|(w, s)| ConstraintGroup::new(w, ShapeRule::Listed(s))).collect();
        SftDefinition::new(alphabets, mode, groups)
    }

    fn validate(&self) -> Result<()> {
        let ports = self.alphabets.port_count();
        for g in &self.groups {
            if g.window.max_port().is_some_and(|p| p.index() >= ports) {
                return Err(Error::AlphabetMismatch("window uses an undeclared port".into()));
            }
            match &g.rule {
                ShapeRule::Listed(s) | ShapeRule::AllExcept(s) => {
                    for y in s {
                        y.check_alphabets(&self.alphabets)?;
                        if navigate::cut_at(y, &0, &g.window) != *y {
                            return Err(Error::InvalidPattern("shape is not its own window cut".into()));
                        }
                    }
                }
                ShapeRule::PortInverse { port, inverse } => {
                    if port.index() >= ports || inverse.index() >= ports {
                        return Err(Error::AlphabetMismatch("rule uses an undeclared port".into()));
                    }
                }
                ShapeRule::RelatorCycle { word } => {
                    if word.max_port().is_some_and(|p| p.index() >= ports) {
                        return Err(Error::AlphabetMismatch("relator uses an undeclared port".into()));
                    }
                }
                ShapeRule::NearestNeighbor { letter, pairs } => {
                    if letter.exit.index() >= ports || letter.entry.index() >= ports {
                        return Err(Error::AlphabetMismatch("constraint uses an undeclared port".into()));
                    }
                    if pairs.iter().any(|(x, y)| x.index().max(y.index()) >= self.alphabets.label_count()) {
                        return Err(Error::AlphabetMismatch("constraint uses an undeclared label".into()));
                    }
                }
                ShapeRule::Satisfying(d) | ShapeRule::Violating(d) => {
                    self.alphabets.ensure_same(&d.alphabets)?;
                }
            }
        }
        Ok(())
    }

    pub fn alphabets(&self) -> &Alphabets {
        &self.alphabets
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn groups(&self) -> &[ConstraintGroup] {
        &self.groups
    }

    /// Adds the groups of `other` (same alphabets and mode required).
    pub fn extended(&self, other: &SftDefinition) -> Result<SftDefinition> {
        self.alphabets.ensure_same(&other.alphabets)?;
        if self.mode != other.mode {
            return Err(Error::InvalidPattern("cannot merge definitions of different modes".into()));
        }
        let mut groups = self.groups.clone();
        groups.extend(other.groups.iter().cloned());
        SftDefinition::new(self.alphabets.clone(), self.mode, groups)
    }

    /// Whether every group is an explicit list.
    pub fn is_explicit(&self) -> bool {
        self.groups.iter().all(|g| g.rule.is_listed())
    }

    /// All `(window, shape)` pairs, materializing rules through window-graph
    /// enumeration.
    pub fn patterns(&self, caps: &Caps) -> Result<Vec<Pattern>> {
        let mut out = Vec::new();
        for g in &self.groups {
            let shapes: Vec<CanonicalGraph> = match &g.rule {
                ShapeRule::Listed(s) => s.iter().cloned().collect(),
                rule => window_graphs(&g.window, &self.alphabets, caps)?.into_iter().filter(|y| rule.contains(y)).collect(),
            };
            out.extend(shapes.into_iter().map(|s| Pattern::new_unchecked(g.window.clone(), s)));
        }
        Ok(out)
    }

    /// The first group whose check fails at `v`, with the cut that failed.
    pub(crate) fn failure_at<N: Navigate>(&self, n: &N, v: &N::Vertex) -> Option<(usize, CanonicalGraph)> {
        // groups often share a window; compute each distinct cut once
        let mut cache: Vec<(usize, CanonicalGraph)> = Vec::new();
        let mut cut = |i: usize| -> CanonicalGraph {
            let w = &self.groups[i].window;
            if let Some((_, c)) = cache.iter().find(|(j, _)| self.groups[*j].window == *w) {
                return c.clone();
            }
            let c = navigate::cut_at(n, v, w);
            cache.push((i, c.clone()));
            c
        };
        match self.mode {
            Mode::Forbid => {
                for (i, g) in self.groups.iter().enumerate() {
                    let c = cut(i);
                    if g.contains(&c) {
                        return Some((i, c));
                    }
                }
                None
            }
            Mode::Allow => {
                for (i, g) in self.groups.iter().enumerate() {
                    if g.contains(&cut(i)) {
                        return None;
                    }
                }
                let first = self.groups.first().map_or_else(PrefixLanguage::epsilon, |g| g.window.clone());
                let c = navigate::cut_at(n, v, &first);
                Some((0, c))
            }
        }
    }

    /// Whether the local condition holds at vertex `v`.
    pub(crate) fn holds_at<N: Navigate>(&self, n: &N, v: &N::Vertex) -> bool {
        self.failure_at(n, v).is_none()
    }

    fn violation<N: Navigate>(&self, n: &N, v: &N::Vertex, witness: impl FnOnce() -> PathWord) -> Option<MembershipVerdict> {
        self.failure_at(n, v).map(|(i, shape)| {
            let window = self.groups.get(i).map_or_else(PrefixLanguage::epsilon, |g| g.window.clone());
            MembershipVerdict::Violation { witness: witness(), pattern: Pattern::new_unchecked(window, shape) }
        })
    }

    fn check_graph_alphabets(&self, x: &CanonicalGraph) -> Result<()> {
        x.check_alphabets(&self.alphabets)
    }
}

/// `memberFinite`: checks every vertex of a finite graph.
pub fn member_finite(d: &SftDefinition, x: &CanonicalGraph) -> Result<MembershipVerdict> {
    d.check_graph_alphabets(x)?;
    let names = x.names();
    for v in x.vertices() {
        if let Some(verdict) = d.violation(x, &v, || names[v as usize].clone()) {
            return Ok(verdict);
        }
    }
    Ok(MembershipVerdict::Member)
}

/// Whether `x` is a member; alphabet mismatches count as non-members.
pub fn is_member(d: &SftDefinition, x: &CanonicalGraph) -> bool {
    matches!(member_finite(d, x), Ok(MembershipVerdict::Member))
}

/// `memberUpToRadius`: checks every vertex within distance `r` of the origin.
///
/// Never answers `Member` for a lazy source; for a finite one it does when
/// the radius reaches every vertex.
pub fn member_up_to_radius(d: &SftDefinition, s: &GraphSource, r: usize) -> Result<MembershipVerdict> {
    if s.port_count() != d.alphabets.port_count() {
        return Err(Error::AlphabetMismatch("source and definition have different port counts".into()));
    }
    match s {
        GraphSource::Finite(x) => {
            d.check_graph_alphabets(x)?;
            let ball = navigate::ball(x, &0, r);
            for (v, _, path) in &ball {
                if let Some(verdict) = d.violation(x, v, || path.clone()) {
                    return Ok(verdict);
                }
            }
            if ball.len() == x.vertex_count() {
                Ok(MembershipVerdict::Member)
            } else {
                Ok(MembershipVerdict::ConsistentUpToRadius(r))
            }
        }
        GraphSource::Lazy(l) => {
            for (v, _, path) in navigate::ball(l, &l.origin(), r) {
                if let Some(verdict) = d.violation(l, &v, || path.clone()) {
                    return Ok(verdict);
                }
            }
            Ok(MembershipVerdict::ConsistentUpToRadius(r))
        }
    }
}

#[cfg(test)]
mod tests;
