//! Quotients by subgroups of the stabilizer.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::alphabet::Port;
use crate::builtin::{grid_displacement, ZSquare, A, A_INV, B, B_INV};
use crate::canonical::{canonicalize_raw, CanonicalGraph};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::source::{GraphSource, LazySource};

use super::{classify_periodicity, orbits, CoveringVerdict, Homomorphism, Periodicity, SubgroupSpec};

/// A quotient graph together with its coset map.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub graph: CanonicalGraph,
    pub coset_map: Homomorphism,
}

/// `quotient`: the graph of cosets `H·û`, pointed at `H`.
pub fn quotient(s: &GraphSource, h: &SubgroupSpec, caps: &Caps) -> Result<CanonicalGraph> {
    match s {
        GraphSource::Finite(x) => finite_quotient(x, h),
        GraphSource::Lazy(l) => zsquare_quotient(l, h, caps),
    }
}

/// Like [`quotient`], and also checks that the coset map is a homomorphism onto the quotient.
pub fn quotient_map(s: &GraphSource, h: &SubgroupSpec, caps: &Caps) -> Result<Quotient> {
    let graph = quotient(s, h, caps)?;
    let radius = graph.diameter() + h.max_len() + 1;
    let target = GraphSource::Finite(graph.clone());
    match super::is_covering(s, &target, radius) {
        CoveringVerdict::Yes(coset_map) => Ok(Quotient { graph, coset_map }),
        other => Err(Error::NotAPeriod(format!("coset map is not a covering: {other:?}"))),
    }
}

fn finite_quotient(x: &CanonicalGraph, h: &SubgroupSpec) -> Result<CanonicalGraph> {
    let roots = orbits(x, h)?;
    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut reps = Vec::new();
    let class: Vec<usize> = roots
        .iter()
        .enumerate()
        .map(|(v, &r)| {
            *class_of_root.entry(r).or_insert_with(|| {
                reps.push(v as u32);
                reps.len() - 1
            })
        })
        .collect();
    canonicalize_raw(
        x.port_count(),
        reps.len(),
        class[0],
        |c| x.label(reps[c]),
        |c, p| x.neighbor(reps[c], p).map(|(w, q)| (class[w as usize], q)),
    )
}

/// The translation lattice generated by `h` together with the wrap of `z`.
fn subgroup_lattice(z: &ZSquare, h: &SubgroupSpec) -> Result<Lattice> {
    let mut gens = Vec::new();
    for g in &h.generators {
        let d = grid_displacement(g).ok_or_else(|| Error::PathNotInLanguage(format!("{g:?}")))?;
        if !z.is_period(d) {
            return Err(Error::NotAPeriod(format!("{g:?}")));
        }
        gens.push(d);
    }
    Ok(z.wrap().join(&Lattice::from_generators(&gens)))
}

/// Cosets of `lattice` reachable from `origin`, breadth first, with the cap.
fn coset_representatives(lattice: &Lattice, origin: (i64, i64), cap: usize) -> Result<Vec<(i64, i64)>> {
    let start = lattice.reduce(origin);
    let mut seen = HashMap::from([(start, 0usize)]);
    let mut reps = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some((i, j)) = queue.pop_front() {
        for d in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let r = lattice.reduce((i + d.0, j + d.1));
            if let Entry::Vacant(e) = seen.entry(r) {
                if reps.len() >= cap {
                    return Err(Error::InfiniteIndex(cap));
                }
                e.insert(reps.len());
                reps.push(r);
                queue.push_back(r);
            }
        }
    }
    Ok(reps)
}

fn zsquare_quotient(l: &LazySource, h: &SubgroupSpec, caps: &Caps) -> Result<CanonicalGraph> {
    let z = l.zsquare().ok_or_else(|| Error::UnsupportedSource(format!("cannot quotient {}", l.graph().describe())))?;
    let lattice = subgroup_lattice(z, h)?;
    let o = (l.origin_key()[0], l.origin_key()[1]);
    let reps = coset_representatives(&lattice, o, caps.cosets)?;
    let index: HashMap<(i64, i64), usize> = reps.iter().enumerate().map(|(k, &r)| (r, k)).collect();
    let at = |i: i64, j: i64| index[&lattice.reduce((i, j))];
    canonicalize_raw(
        4,
        reps.len(),
        0,
        |c| z.coloring().label(reps[c].0, reps[c].1),
        |c, p: Port| {
            let (i, j) = reps[c];
            Some(match p {
                A => (at(i + 1, j), A_INV),
                A_INV => (at(i - 1, j), A),
                B => (at(i, j + 1), B_INV),
                B_INV => (at(i, j - 1), B),
                _ => return None,
            })
        },
    )
}

/// Periodicity of a finite graph, or of a lazy source whose stabilizer is
/// known exactly (square-grid sources, homogeneous sources).
pub fn classify_source(s: &GraphSource, caps: &Caps) -> Result<Periodicity> {
    match s {
        GraphSource::Finite(x) => Ok(classify_periodicity(x)),
        GraphSource::Lazy(l) => {
            if let Some(z) = l.zsquare() {
                let periods = z.wrap().join(&z.coloring().period_lattice());
                let o = (l.origin_key()[0], l.origin_key()[1]);
                let reps = coset_representatives(&periods, o, caps.cosets)?;
                // the quotient by the full stabilizer measures how far vertices sit from periods
                let q = zsquare_quotient(l, &lattice_spec(&periods), caps)?;
                debug_assert_eq!(q.vertex_count(), reps.len());
                let weakly_periodic = periods.generators().iter().any(|&d| !z.wrap().contains(d));
                Ok(Periodicity::StronglyPeriodic { weakly_periodic, density_radius: q.eccentricity() })
            } else if l.graph().homogeneous() {
                Ok(Periodicity::StronglyPeriodic { weakly_periodic: true, density_radius: 0 })
            } else {
                Err(Error::UnsupportedSource(format!("stabilizer of {} is not known", l.graph().describe())))
            }
        }
    }
}

fn lattice_spec(l: &Lattice) -> SubgroupSpec {
    SubgroupSpec::new(l.generators().into_iter().map(|(i, j)| crate::builtin::grid_word(i, j)))
}
