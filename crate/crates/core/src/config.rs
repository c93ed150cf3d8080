//! Search caps for the exponential searches.

use crate::error::{Error, Result};

/// Limits on exhaustive searches. Exceeding one yields [`Error::CapExceeded`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Caps {
    /// Candidate graphs examined while enumerating window graphs.
    pub window_graphs: usize,
    /// Largest vertex count accepted by `enumerate`.
    pub enumerate_vertices: usize,
    /// Cosets built before a quotient is declared of infinite index.
    pub cosets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { window_graphs: 1_000_000, enumerate_vertices: 6, cosets: 10_000 }
    }
}

impl Caps {
    /// Reads `GRAPHSHIFT_CAP`, either a bare number (window-graph candidates)
    /// or a comma-separated list such as `window=2000000,vertices=7,cosets=50000`.
    pub fn from_env() -> Result<Self> {
        match std::env::var("GRAPHSHIFT_CAP") {
            Ok(v) => Caps::parse(&v),
            Err(_) => Ok(Caps::default()),
        }
    }

    pub fn parse(spec: &str) -> Result<Self> {
        let mut caps = Caps::default();
        let bad = || Error::Malformed(format!("bad GRAPHSHIFT_CAP value `{spec}`"));
        let spec = spec.trim();
        if let Ok(n) = spec.parse::<usize>() {
            caps.window_graphs = n;
            return Ok(caps);
        }
        for part in spec.split(',').filter(|s| !s.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(bad)?;
            let v: usize = v.trim().parse().map_err(|_| bad())?;
            match k.trim() {
                "window" => caps.window_graphs = v,
                "vertices" => caps.enumerate_vertices = v,
                "cosets" => caps.cosets = v,
                _ => return Err(bad()),
            }
        }
        Ok(caps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(Caps::parse("500").unwrap().window_graphs, 500);
        let c = Caps::parse("vertices=7,cosets=12").unwrap();
        assert_eq!((c.enumerate_vertices, c.cosets), (7, 12));
        assert!(Caps::parse("nope=1").is_err());
    }
}
