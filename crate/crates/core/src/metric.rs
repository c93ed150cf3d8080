//! The Cantor-style ultrametric on pointed graphs: `d(X, Y) = 2^-r` where `r`
//! is the least radius at which the disks differ.

use std::fmt;

use crate::error::{Error, Result};
use crate::source::GraphSource;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Distance {
    /// Both graphs are finite and equal.
    Zero,
    /// Disks first differ at this radius; the distance is `2^-radius`.
    Exact(usize),
    /// Disks agree up to this radius; the distance is at most `2^-(radius+1)`.
    AtMost(usize),
}

impl Distance {
    /// Numeric value; for a bounded verdict, the upper bound.
    pub fn value(self) -> f64 {
        match self {
            Distance::Zero => 0.0,
            Distance::Exact(r) => 0.5f64.powi(r as i32),
            Distance::AtMost(r) => 0.5f64.powi(r as i32 + 1),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Zero => write!(f, "0"),
            Distance::Exact(r) => write!(f, "2^-{r}"),
            Distance::AtMost(r) => write!(f, "<= 2^-{}", r + 1),
        }
    }
}

pub fn distance(x: &GraphSource, y: &GraphSource, max_radius: usize) -> Result<Distance> {
    if x.port_count() != y.port_count() {
        return Err(Error::AlphabetMismatch(format!(
            "{} ports vs {} ports",
            x.port_count(),
            y.port_count()
        )));
    }
    if let (GraphSource::Finite(a), GraphSource::Finite(b)) = (x, y) {
        if a == b {
            return Ok(Distance::Zero);
        }
    }
    for r in 0..=max_radius {
        if x.disk(r) != y.disk(r) {
            return Ok(Distance::Exact(r));
        }
    }
    Ok(Distance::AtMost(max_radius))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{monochromatic_grid, monochromatic_torus};

    #[test]
    fn grid_versus_tori() {
        let grid = monochromatic_grid();
        let t3 = GraphSource::Finite(monochromatic_torus(3, 3));
        let t5 = GraphSource::Finite(monochromatic_torus(5, 5));
        assert_eq!(distance(&grid, &t3, 4).unwrap(), Distance::Exact(1));
        assert_eq!(distance(&grid, &t5, 4).unwrap(), Distance::Exact(2));
        assert_eq!(distance(&grid, &t5, 4).unwrap().to_string(), "2^-2");
        assert_eq!(distance(&grid, &grid, 3).unwrap(), Distance::AtMost(3));
        assert_eq!(distance(&t3, &t3, 0).unwrap(), Distance::Zero);
    }

    #[test]
    fn port_mismatch() {
        let one = GraphSource::Finite(crate::CanonicalGraph::single_vertex(2, crate::Label(0)));
        assert!(distance(&one, &monochromatic_grid(), 2).is_err());
    }
}
