//! The hard-square shift: no two adjacent 1s on a grid-like graph.
//!
//! Run with `cargo run --example hard_square`.

use graphshift::builtin::{cylinder_source, monochromatic_torus, torus_graph, PeriodicColoring};
use graphshift::cayley::hard_square;
use graphshift::sft::{colorings, member_finite, member_up_to_radius, MembershipVerdict};
use graphshift::Label;

fn main() -> graphshift::Result<()> {
    let d = hard_square();
    let a = d.alphabets().clone();

    println!("all-0 2×2 torus: {:?}", member_finite(&d, &monochromatic_torus(2, 2))?);
    let stripe = torus_graph(2, 2, |_, j| Label(u8::from(j == 0)));
    if let MembershipVerdict::Violation { witness, pattern } = member_finite(&d, &stripe)? {
        println!("stripe of 1s: violation at {:?} with a {}-vertex pattern", witness.render(&a.ports), pattern.shape().vertex_count());
    }

    // valid labelings of the k×k torus support
    for k in 1..=4 {
        let c = colorings(&d, &monochromatic_torus(k, k).to_based_graph(&a))?;
        println!("{k}×{k} torus: {} colorings", c.count);
    }

    // an infinite cylinder of circumference 3 can only be checked up to a radius
    let rows = vec![vec![Label(1), Label(0), Label(0)], vec![Label(0), Label(1), Label(0)]];
    let cylinder = cylinder_source(3, PeriodicColoring::new(rows)?)?;
    println!("cylinder: {:?}", member_up_to_radius(&d, &cylinder, 4)?);
    Ok(())
}
