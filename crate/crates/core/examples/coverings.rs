//! Coverings between graphs, with witnesses when there is none.
//!
//! Run with `cargo run --example coverings`.

use graphshift::alphabet::Alphabets;
use graphshift::builtin::{free_tree_source, monochromatic_grid, monochromatic_torus, torus_graph};
use graphshift::symmetry::{is_covering, CoveringVerdict};
use graphshift::{GraphSource, Label};

fn show(name: &str, v: &CoveringVerdict) {
    let ports = Alphabets::grid(1).ports;
    match v {
        CoveringVerdict::Yes(_) => println!("{name}: yes"),
        CoveringVerdict::No { witness, reason } => {
            println!("{name}: no, {reason}; witness {:?}", witness.as_ref().map(|w| w.render(&ports)))
        }
        CoveringVerdict::UnknownUpToRadius(r) => println!("{name}: consistent up to radius {r}"),
    }
}

fn main() {
    let t3 = GraphSource::Finite(monochromatic_torus(3, 3));
    let t6 = GraphSource::Finite(monochromatic_torus(6, 6));
    let marked = GraphSource::Finite(torus_graph(3, 3, |i, j| Label(u8::from(i + j == 0))));
    show("torus6 → torus3", &is_covering(&t6, &t3, 0));
    show("torus3 → torus6", &is_covering(&t3, &t6, 0));
    show("grid → torus3", &is_covering(&monochromatic_grid(), &t3, 6));
    show("grid → marked torus3", &is_covering(&monochromatic_grid(), &marked, 6));
    show("tree → torus3", &is_covering(&free_tree_source(2), &t3, 4));
}
