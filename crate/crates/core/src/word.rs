//! Path words over Π = π × π.
//!
//! A letter `(a, b)` crosses one edge, leaving the current vertex through
//! port `a` and entering the next one through port `b`. Words are ordered
//! shortlex (length first, then lexicographically by port order), which is
//! the order used to pick canonical vertex names.

use std::cmp::Ordering;
use std::fmt;

use crate::alphabet::{Port, PortAlphabet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub exit: Port,
    pub entry: Port,
}

impl Letter {
    pub fn new(exit: Port, entry: Port) -> Self {
        Letter { exit, entry }
    }

    /// The letter crossing the same edge in the opposite direction.
    pub fn reversed(self) -> Self {
        Letter { exit: self.entry, entry: self.exit }
    }

    pub fn render(self, ports: &PortAlphabet) -> String {
        format!("{}.{}", ports.symbol(self.exit), ports.symbol(self.entry))
    }

    pub fn parse(s: &str, ports: &PortAlphabet) -> Result<Self> {
        let (a, b) = s.split_once('.').ok_or_else(|| Error::MalformedWord(s.to_string()))?;
        Ok(Letter::new(ports.lookup(a)?, ports.lookup(b)?))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PathWord(Vec<Letter>);

impl PathWord {
    /// The empty word ε.
    pub fn empty() -> Self {
        PathWord(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        PathWord(letters.into_iter().collect())
    }

    /// Convenience constructor from `(exit, entry)` index pairs.
    pub fn from_pairs(pairs: &[(u8, u8)]) -> Self {
        PathWord(pairs.iter().map(|&(a, b)| Letter::new(Port(a), Port(b))).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn pushed(&self, letter: Letter) -> PathWord {
        let mut w = self.clone();
        w.0.push(letter);
        w
    }

    pub fn concat(&self, other: &PathWord) -> PathWord {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        PathWord(v)
    }

    /// `w` repeated `n` times.
    pub fn power(&self, n: usize) -> PathWord {
        PathWord(self.0.iter().copied().cycle().take(self.len() * n).collect())
    }

    /// Maps `(a,b)…(c,d)` to `(d,c)…(b,a)`.
    pub fn reverse(&self) -> PathWord {
        PathWord(self.0.iter().rev().map(|l| l.reversed()).collect())
    }

    /// Deletes adjacent pairs `(a,b)(b,a)` until none remain.
    pub fn reduce(&self) -> PathWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.0 {
            if out.last() == Some(&l.reversed()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        PathWord(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[1] != w[0].reversed())
    }

    /// The word without its last letter, or `None` for ε.
    pub fn parent(&self) -> Option<PathWord> {
        if self.is_empty() {
            None
        } else {
            Some(PathWord(self.0[..self.len() - 1].to_vec()))
        }
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// All prefixes, from ε up to the word itself.
    pub fn prefixes(&self) -> impl Iterator<Item = PathWord> + '_ {
        (0..=self.len()).map(move |k| PathWord(self.0[..k].to_vec()))
    }

    pub fn max_port(&self) -> Option<Port> {
        self.0.iter().map(|l| l.exit.max(l.entry)).max()
    }

    /// Letters joined by `/`, ports joined by `.`; ε renders as the empty string.
    pub fn render(&self, ports: &PortAlphabet) -> String {
        self.0.iter().map(|l| l.render(ports)).collect::<Vec<_>>().join("/")
    }

    pub fn parse(s: &str, ports: &PortAlphabet) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(PathWord::empty());
        }
        s.split('/').map(|l| Letter::parse(l, ports)).collect::<Result<Vec<_>>>().map(PathWord)
    }
}

impl Ord for PathWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PathWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for l in &self.0 {
            write!(f, "({},{})", l.exit.0, l.entry.0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(p: &[(u8, u8)]) -> PathWord {
        PathWord::from_pairs(p)
    }

    #[test]
    fn reduce_cancels_back_and_forth() {
        assert_eq!(w(&[(0, 1), (1, 0)]).reduce(), PathWord::empty());
        // (a,a')(b,b')(b',b)(a',a): two cancellation steps
        assert_eq!(w(&[(0, 1), (2, 3), (3, 2), (1, 0)]).reduce(), PathWord::empty());
        assert_eq!(w(&[(0, 1), (0, 1)]).reduce(), w(&[(0, 1), (0, 1)]));
    }

    #[test]
    fn reverse_swaps_and_flips() {
        // (a,b)(c,d) -> (d,c)(b,a)
        assert_eq!(w(&[(0, 1), (2, 3)]).reverse(), w(&[(3, 2), (1, 0)]));
    }

    #[test]
    fn shortlex_order() {
        assert!(w(&[(3, 3)]) < w(&[(0, 0), (0, 0)]));
        assert!(w(&[(0, 1)]) < w(&[(1, 0)]));
        assert!(PathWord::empty() < w(&[(0, 0)]));
    }

    #[test]
    fn render_and_parse() {
        let pi = PortAlphabet::new(["a", "a'", "b", "b'"]).unwrap();
        let u = w(&[(0, 1), (2, 3)]);
        assert_eq!(u.render(&pi), "a.a'/b.b'");
        assert_eq!(PathWord::parse("a.a'/b.b'", &pi).unwrap(), u);
        assert_eq!(PathWord::parse("", &pi).unwrap(), PathWord::empty());
        assert!(PathWord::parse("a", &pi).is_err());
        assert!(PathWord::parse("a.c", &pi).is_err());
    }

    fn arb_word() -> impl Strategy<Value = PathWord> {
        prop::collection::vec((0u8..4, 0u8..4), 0..12).prop_map(|v| w(&v))
    }

    proptest! {
        #[test]
        fn word_times_reverse_reduces_to_empty(u in arb_word()) {
            prop_assert_eq!(u.concat(&u.reverse()).reduce(), PathWord::empty());
        }

        #[test]
        fn reduce_is_idempotent(u in arb_word()) {
            let r = u.reduce();
            prop_assert!(r.is_reduced());
            prop_assert_eq!(r.reduce(), r.clone());
        }

        #[test]
        fn reverse_is_involution(u in arb_word()) {
            prop_assert_eq!(u.reverse().reverse(), u);
        }
    }
}
