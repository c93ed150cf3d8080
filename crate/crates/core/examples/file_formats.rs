//! Reading and writing the JSON file formats.
//!
//! Run from `crates/core` with `cargo run --example file_formats`.

use std::fs;

use graphshift::io;
use graphshift::sft::member_finite;

fn main() -> graphshift::Result<()> {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let read = |name: &str| fs::read_to_string(format!("{data}/{name}")).expect("bundled data file");

    let d = io::parse_sft(&read("hardsquare.sft"))?;
    println!("hard-square: {} constraint groups, mode {:?}", d.groups().len(), d.mode());
    for name in ["torus2_all0.graph", "torus2_adjacent1.graph", "torus3_diagonal.graph"] {
        let (x, _) = io::parse_graph(&read(name))?;
        println!("{name}: {:?}", member_finite(&d, &x)?.is_member());
    }

    let (x, a) = io::parse_graph(&read("torus3.graph"))?;
    let again = io::graph_to_json(&x, &a);
    println!("canonical torus3 survives a round trip: {}", io::parse_graph(&again)?.0 == x);

    let (grid, _) = io::parse_source(&read("grid_diagonal3.lazy"))?;
    println!("diagonal grid is finite: {}", grid.is_finite());
    let p = io::parse_presentation(&read("z2.presentation"))?;
    println!("presentation relators: {:?}", p.render_relators("^-1"));
    let t = io::parse_table(&read("klein4.table"))?;
    println!("klein4 table has {} elements", t.elements.len());
    Ok(())
}
