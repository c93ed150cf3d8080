//! The ultrametric: how far apart two pointed graphs look from their origins.
//!
//! Run with `cargo run --example distances`.

use graphshift::builtin::{free_tree_source, monochromatic_grid, monochromatic_torus};
use graphshift::metric::distance;
use graphshift::GraphSource;

fn main() -> graphshift::Result<()> {
    let grid = monochromatic_grid();
    for k in 1..=6 {
        let torus = GraphSource::Finite(monochromatic_torus(k, k));
        println!("grid vs {k}×{k} torus: {}", distance(&grid, &torus, 8)?);
    }
    println!("grid vs 4-regular tree: {}", distance(&grid, &free_tree_source(2), 8)?);
    println!("grid vs itself: {}", distance(&grid, &grid, 8)?);
    Ok(())
}
