//! Separation of a subgroup by a window, and what it buys: the quotient
//! keeps every window cut.

use crate::builtin::grid_displacement;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::language::PrefixLanguage;
use crate::navigate;
use crate::source::GraphSource;
use crate::word::PathWord;

use super::{orbits, quotient, SubgroupSpec};

/// `isSeparated`: whether no word of `m` leads from a vertex to a different
/// vertex of its own orbit.
pub fn is_separated(s: &GraphSource, h: &SubgroupSpec, m: &PrefixLanguage) -> Result<bool> {
    if h.generators.iter().all(PathWord::is_empty) {
        return Ok(true);
    }
    match s {
        GraphSource::Finite(x) => {
            let orbit = orbits(x, h)?;
            for v in x.vertices() {
                for w in m.words() {
                    if let Some(t) = x.follow_from(v, w) {
                        if t != v && orbit[t as usize] == orbit[v as usize] {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        GraphSource::Lazy(l) => {
            let z = l.zsquare().ok_or_else(|| Error::UnsupportedSource(format!("separation on {}", l.graph().describe())))?;
            let mut gens = Vec::new();
            for g in &h.generators {
                let d = grid_displacement(g).ok_or_else(|| Error::PathNotInLanguage(format!("{g:?}")))?;
                if !z.is_period(d) {
                    return Err(Error::NotAPeriod(format!("{g:?}")));
                }
                gens.push(d);
            }
            // translations act the same at every vertex, so the origin stands for all
            let lattice = z.wrap().join(&crate::lattice::Lattice::from_generators(&gens));
            Ok(m.words().filter_map(grid_displacement).all(|d| !lattice.contains(d) || z.wrap().contains(d)))
        }
    }
}

/// Result of comparing window cuts before and after quotienting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WindowReport {
    /// Coset representatives examined.
    pub checked: usize,
    /// Representatives where the vertices designated by `M`, or the edges
    /// its words traverse, changed.
    pub failures: Vec<PathWord>,
    /// Representatives where the induced cut gained edges between designated
    /// vertices. Separation by `M·M̄` does not rule this out: on the grid
    /// modulo `⟨(aa')³, (bb')³⟩` the two `a`-neighbours of a vertex become adjacent.
    pub induced_failures: Vec<PathWord>,
}

impl WindowReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `verifyWindowPreservation`: for one representative `û` of every coset,
/// compares what `M` sees from `û` in `X` and from `H·û` in the quotient.
pub fn verify_window_preservation(s: &GraphSource, h: &SubgroupSpec, m: &PrefixLanguage, caps: &Caps) -> Result<WindowReport> {
    if !is_separated(s, h, &m.product(m))? {
        return Err(Error::PreconditionViolated("subgroup is not separated by M·M̄".into()));
    }
    let q = quotient(s, h, caps)?;
    let reps = representatives(s, h, &q)?;
    let mut failures = Vec::new();
    let mut induced_failures = Vec::new();
    for u in &reps {
        let image = q.follow(u).ok_or_else(|| Error::PathNotInLanguage(format!("{u:?}")))?;
        let shifted = s.shift(u)?;
        let traced = match &shifted {
            GraphSource::Finite(x) => navigate::traced_cut_at(x, &0, m),
            GraphSource::Lazy(l) => navigate::traced_cut_at(l, &l.origin_key().clone(), m),
        };
        if traced != navigate::traced_cut_at(&q, &image, m) {
            failures.push(u.clone());
        }
        if shifted.cut(m) != navigate::cut_at(&q, &image, m) {
            induced_failures.push(u.clone());
        }
    }
    Ok(WindowReport { checked: reps.len(), failures, induced_failures })
}

/// A path from the origin to one vertex of each coset.
fn representatives(s: &GraphSource, h: &SubgroupSpec, q: &crate::CanonicalGraph) -> Result<Vec<PathWord>> {
    match s {
        GraphSource::Finite(x) => {
            let orbit = orbits(x, h)?;
            let names = x.names();
            let mut seen = std::collections::HashSet::new();
            Ok(x.vertices().filter(|&v| seen.insert(orbit[v as usize])).map(|v| names[v as usize].clone()).collect())
        }
        // the quotient's own names are paths in the cover as well
        GraphSource::Lazy(_) => Ok(q.names()),
    }
}

/// `conjugateStabilizerCheck`: quotienting `X_u` by `ū·H·u` gives the
/// quotient of `X` by `H`, shifted along `u`.
pub fn conjugate_stabilizer_check(s: &GraphSource, h: &SubgroupSpec, u: &PathWord, caps: &Caps) -> Result<bool> {
    let left = quotient(&s.shift(u)?, &h.conjugate(u), caps)?;
    let right = quotient(s, h, caps)?.shift(u)?;
    Ok(left == right)
}
