//! Finite prefix-stable languages of path words.

use std::collections::BTreeSet;

use crate::alphabet::{Port, PortAlphabet};
use crate::error::{Error, Result};
use crate::word::{Letter, PathWord};

/// A finite language `L` with `ε ∈ L` and `u·v ∈ L ⇒ u ∈ L`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PrefixLanguage {
    words: BTreeSet<PathWord>,
    /// For each word after ε, in order: its parent's index and last letter.
    steps: Vec<(usize, Letter)>,
}

impl PrefixLanguage {
    fn build(words: BTreeSet<PathWord>) -> Self {
        let index: std::collections::HashMap<&PathWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let steps = words
            .iter()
            .skip(1)
            .map(|w| (index[&w.parent().expect("only ε lacks a parent")], w.last().expect("non-empty")))
            .collect();
        PrefixLanguage { words, steps }
    }

    /// Every word after ε, in shortlex order, as the index of its parent in
    /// [`Self::words`] and its last letter.
    pub fn steps(&self) -> &[(usize, Letter)] {
        &self.steps
    }

    /// `{ε}`.
    pub fn epsilon() -> Self {
        PrefixLanguage::build(BTreeSet::from([PathWord::empty()]))
    }

    /// Validates prefix-stability of an explicit word set.
    pub fn new(words: impl IntoIterator<Item = PathWord>) -> Result<Self> {
        let words: BTreeSet<PathWord> = words.into_iter().collect();
        if !words.contains(&PathWord::empty()) {
            return Err(Error::NotPrefixStable("ε".into()));
        }
        for w in &words {
            if let Some(p) = w.parent() {
                if !words.contains(&p) {
                    return Err(Error::NotPrefixStable(format!("{p:?}")));
                }
            }
        }
        Ok(PrefixLanguage::build(words))
    }

    /// Smallest prefix-stable superset of `words` containing ε.
    pub fn prefix_close(words: impl IntoIterator<Item = PathWord>) -> Self {
        let mut set = BTreeSet::from([PathWord::empty()]);
        for w in words {
            set.extend(w.prefixes());
        }
        PrefixLanguage::build(set)
    }

    /// All words of length at most `r` over `ports × ports`.
    pub fn ball(ports: usize, r: usize) -> Self {
        let letters: Vec<Letter> = (0..ports)
            .flat_map(|a| (0..ports).map(move |b| Letter::new(Port(a as u8), Port(b as u8))))
            .collect();
        let mut set = BTreeSet::from([PathWord::empty()]);
        let mut frontier = vec![PathWord::empty()];
        for _ in 0..r {
            let mut next = Vec::new();
            for w in &frontier {
                for &l in &letters {
                    next.push(w.pushed(l));
                }
            }
            set.extend(next.iter().cloned());
            frontier = next;
        }
        PrefixLanguage::build(set)
    }

    /// Words of length at most `r` along letters `(p, q)` restricted to the given set.
    pub fn ball_over(letters: &[Letter], r: usize) -> Self {
        let mut set = BTreeSet::from([PathWord::empty()]);
        let mut frontier = vec![PathWord::empty()];
        for _ in 0..r {
            let mut next = Vec::new();
            for w in &frontier {
                for &l in letters {
                    next.push(w.pushed(l));
                }
            }
            set.extend(next.iter().cloned());
            frontier = next;
        }
        PrefixLanguage::build(set)
    }

    /// Words in shortlex order (ε first).
    pub fn words(&self) -> impl Iterator<Item = &PathWord> {
        self.words.iter()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &PathWord) -> bool {
        self.words.contains(w)
    }

    pub fn max_len(&self) -> usize {
        self.words.iter().map(PathWord::len).max().unwrap_or(0)
    }

    pub fn is_subset(&self, other: &PrefixLanguage) -> bool {
        self.words.is_subset(&other.words)
    }

    pub fn union(&self, other: &PrefixLanguage) -> PrefixLanguage {
        PrefixLanguage::build(self.words.union(&other.words).cloned().collect())
    }

    /// Prefix closure of `{u · reverse(v) : u ∈ self, v ∈ other}`.
    pub fn product(&self, other: &PrefixLanguage) -> PrefixLanguage {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for u in &self.words {
            for v in &other.words {
                out.push(u.concat(&v.reverse()));
            }
        }
        PrefixLanguage::prefix_close(out)
    }

    pub fn max_port(&self) -> Option<Port> {
        self.words.iter().filter_map(PathWord::max_port).max()
    }

    pub fn render(&self, ports: &PortAlphabet) -> Vec<String> {
        self.words.iter().map(|w| w.render(ports)).collect()
    }

    /// Parses a list of rendered words; the list must already be prefix-stable.
    pub fn parse(words: &[String], ports: &PortAlphabet) -> Result<Self> {
        PrefixLanguage::new(words.iter().map(|w| PathWord::parse(w, ports)).collect::<Result<Vec<_>>>()?)
    }
}

/// `prefixClose`, the free-function form.
pub fn prefix_close(words: impl IntoIterator<Item = PathWord>) -> PrefixLanguage {
    PrefixLanguage::prefix_close(words)
}

/// `languageProduct(m, n)`: prefix closure of `m · reverse(n)`.
pub fn language_product(m: &PrefixLanguage, n: &PrefixLanguage) -> PrefixLanguage {
    m.product(n)
}
