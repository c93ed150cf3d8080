//! Folding the infinite grid onto tori by quotienting with period lattices.
//!
//! Run with `cargo run --example quotients`.

use graphshift::builtin::{grid_source, grid_word, monochromatic_grid, monochromatic_torus, PeriodicColoring};
use graphshift::config::Caps;
use graphshift::symmetry::{quotient, quotient_map, SubgroupSpec};
use graphshift::{Error, Label};

fn main() -> graphshift::Result<()> {
    let caps = Caps::default();
    let grid = monochromatic_grid();
    for k in 1..=5 {
        let h = SubgroupSpec::new([grid_word(k, 0), grid_word(0, k)]);
        let q = quotient_map(&grid, &h, &caps)?;
        let ok = q.coset_map.check(q.graph.diameter() + 2).is_ok();
        println!("grid / <(aa')^{k}, (bb')^{k}>: {} vertices, torus: {}, coset map ok: {ok}", q.graph.vertex_count(), q.graph == monochromatic_torus(k as usize, k as usize));
    }

    // a skew lattice gives a twisted torus
    let skew = quotient(&grid, &SubgroupSpec::new([grid_word(3, 1), grid_word(0, 2)]), &caps)?;
    println!("grid / <(3,1), (0,2)>: {} vertices", skew.vertex_count());

    // labels must be invariant: stripes of period 2 only fold by even steps
    let stripes = grid_source(PeriodicColoring::from_fn(2, 1, |i, _| Label(i as u8)));
    match quotient(&stripes, &SubgroupSpec::new([grid_word(3, 0), grid_word(0, 1)]), &caps) {
        Err(Error::NotAPeriod(w)) => println!("stripes / <(3,0), (0,1)>: {w} is not a period"),
        other => println!("stripes: unexpected {other:?}"),
    }

    // an infinite-index subgroup: the search gives up at the coset cap
    let small = Caps { cosets: 200, ..caps };
    match quotient(&grid, &SubgroupSpec::new([grid_word(0, 3)]), &small) {
        Err(e) => println!("grid / <(bb')^3>: {e}"),
        Ok(q) => println!("unexpected finite quotient with {} vertices", q.vertex_count()),
    }
    Ok(())
}
