//! Cayley SFTs from group presentations, and Cayley covers of their members.
//!
//! Run with `cargo run --example cayley`.

use graphshift::alphabet::LabelAlphabet;
use graphshift::builtin::{free_tree_source, monochromatic_torus, torus_graph};
use graphshift::cayley::{cayley_sft, covering_from_cayley, locally_grid_like_sft, GroupPresentation, MultiplicationTable};
use graphshift::sft::{is_member, member_up_to_radius};
use graphshift::Label;

fn main() -> graphshift::Result<()> {
    let z2 = GroupPresentation::parse(&["a".into(), "b".into()], &["a b a- b-".into()], "-")?;
    let d = cayley_sft(&z2, LabelAlphabet::numeric(1));
    for k in 1..=4 {
        println!("{k}×{k} torus in the Z² Cayley SFT: {}", is_member(&d, &monochromatic_torus(k, k)));
    }
    println!("tree in the Z² Cayley SFT: {:?}", member_up_to_radius(&d, &free_tree_source(2), 2)?.is_violation());
    let f2 = cayley_sft(&GroupPresentation::free(2), LabelAlphabet::numeric(1));
    println!("tree in the F₂ Cayley SFT: {:?}", member_up_to_radius(&f2, &free_tree_source(2), 5)?);

    // which tori look locally like the grid
    let lgl = locally_grid_like_sft();
    let passing: Vec<String> = (1..=5)
        .flat_map(|k1| (1..=5).map(move |k2| (k1, k2)))
        .filter(|&(k1, k2)| is_member(&lgl, &monochromatic_torus(k1, k2)))
        .map(|(k1, k2)| format!("{k1}×{k2}"))
        .collect();
    println!("locally grid-like tori: {}", passing.join(" "));

    // a valid hard-square torus is covered by a periodic colouring of the grid
    let x = torus_graph(3, 3, |i, j| Label(u8::from(i == j)));
    println!("Cayley cover of the diagonal torus: {}", covering_from_cayley(&z2, &x, 6)?.is_yes());

    // a finite group by its table: Z/4 generated by 1
    let t = MultiplicationTable {
        elements: (0..4).map(|i| i.to_string()).collect(),
        product: (0..4).map(|i| (0..4).map(|j| (i + j) % 4).collect()).collect(),
        generators: vec![1],
    };
    let c4 = t.cayley_graph(|_| Label(0))?;
    println!("Cayley graph of Z/4: {} vertices, {} edges", c4.vertex_count(), c4.edge_count());
    Ok(())
}
