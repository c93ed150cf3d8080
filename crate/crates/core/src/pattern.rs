//! Cuts, cylinders and pattern matching.

use crate::canonical::CanonicalGraph;
use crate::error::{Error, Result};
use crate::language::PrefixLanguage;
use crate::navigate;
use crate::source::GraphSource;
use crate::word::PathWord;

/// A finite graph together with the window it is read through.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Pattern {
    window: PrefixLanguage,
    shape: CanonicalGraph,
}

impl Pattern {
    /// Every vertex of `shape` must be designated by a word of `window`.
    pub fn new(window: PrefixLanguage, shape: CanonicalGraph) -> Result<Self> {
        if navigate::cut_at(&shape, &0, &window) != shape {
            return Err(Error::InvalidPattern("shape is not its own window cut".into()));
        }
        Ok(Pattern { window, shape })
    }

    pub(crate) fn new_unchecked(window: PrefixLanguage, shape: CanonicalGraph) -> Self {
        Pattern { window, shape }
    }

    pub fn window(&self) -> &PrefixLanguage {
        &self.window
    }

    pub fn shape(&self) -> &CanonicalGraph {
        &self.shape
    }
}

/// `X↾L`. Words of `l` outside the language of `s` are ignored.
pub fn cut(s: &GraphSource, l: &PrefixLanguage) -> CanonicalGraph {
    s.cut(l)
}

/// Whether the window cut of `s` shifted by `v` is exactly the pattern's shape.
pub fn matches(s: &GraphSource, v: &PathWord, p: &Pattern) -> Result<bool> {
    Ok(s.shift(v)?.cut(&p.window) == p.shape)
}

/// Whether `s` lies in the cylinder of `z` for language `l`.
pub fn cylinder_contains(s: &GraphSource, l: &PrefixLanguage, z: &CanonicalGraph) -> bool {
    s.cut(l) == *z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Label;
    use crate::builtin::{monochromatic_grid, monochromatic_torus, torus_graph};
    use crate::language::prefix_close;

    fn w(p: &[(u8, u8)]) -> PathWord {
        PathWord::from_pairs(p)
    }

    #[test]
    fn epsilon_cut_is_origin() {
        let t = GraphSource::Finite(torus_graph(2, 2, |i, _| Label(i as u8)));
        assert_eq!(cut(&t, &PrefixLanguage::epsilon()), crate::CanonicalGraph::single_vertex(4, Label(0)));
    }

    #[test]
    fn grid_square_cut() {
        let l = prefix_close([w(&[(0, 1), (2, 3)]), w(&[(2, 3)])]);
        let sq = cut(&monochromatic_grid(), &l);
        assert_eq!(sq.vertex_count(), 4);
        assert_eq!(sq.edge_count(), 4);
        let names = sq.names();
        assert!(names.contains(&w(&[(0, 1), (2, 3)])));
    }

    #[test]
    fn words_outside_the_language_are_ignored() {
        let g = monochromatic_grid();
        let with_junk = prefix_close([w(&[(0, 1)]), w(&[(0, 0), (1, 1)])]);
        assert_eq!(cut(&g, &with_junk), cut(&g, &prefix_close([w(&[(0, 1)])])));
    }

    #[test]
    fn pattern_shape_must_be_window_cut() {
        let t = monochromatic_torus(3, 3);
        assert!(Pattern::new(PrefixLanguage::epsilon(), t.clone()).is_err());
        let p = Pattern::new(PrefixLanguage::ball(4, 1), t.disk(1)).unwrap();
        assert!(matches(&GraphSource::Finite(t.clone()), &w(&[(0, 1)]), &p).unwrap());
        assert!(!matches(&monochromatic_grid(), &PathWord::empty(), &p).unwrap());
        assert!(matches(&GraphSource::Finite(t), &w(&[(0, 0)]), &p).is_err());
    }

    #[test]
    fn cylinders() {
        let t3 = GraphSource::Finite(monochromatic_torus(3, 3));
        let ball = PrefixLanguage::ball(4, 1);
        let z = t3.cut(&ball);
        assert!(cylinder_contains(&t3, &ball, &z));
        assert!(!cylinder_contains(&monochromatic_grid(), &ball, &z));
        let full = PrefixLanguage::ball(4, 3);
        assert!(cylinder_contains(&t3, &full, &monochromatic_torus(3, 3)));
        assert!(cylinder_contains(&t3, &PrefixLanguage::epsilon(), &crate::CanonicalGraph::single_vertex(4, Label(0))));
    }
}
