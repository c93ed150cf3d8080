//! Rewriting a forbid-mode SFT as an allow-mode one and back.
//!
//! Run with `cargo run --example forbid_allow`.

use std::collections::BTreeSet;

use graphshift::alphabet::{Alphabets, LabelAlphabet, PortAlphabet};
use graphshift::config::Caps;
use graphshift::sft::{all_graphs_naive, is_member, to_allow_form, to_forbid_form, window_graphs, ConstraintGroup, Mode, SftDefinition, ShapeRule};
use graphshift::{CanonicalGraph, PrefixLanguage};

fn main() -> graphshift::Result<()> {
    // ports a, b and labels 0, 1; forbid every one-step window in which the
    // a-neighbour of a 1 is also a 1
    let alphabets = Alphabets::new(PortAlphabet::new(["a", "b"])?, LabelAlphabet::numeric(2));
    let window = PrefixLanguage::parse(&["".into(), "a.a".into(), "a.b".into()], &alphabets.ports)?;
    let caps = Caps::default();
    let shapes: BTreeSet<CanonicalGraph> = window_graphs(&window, &alphabets, &caps)?
        .into_iter()
        .filter(|y| y.label(0).0 == 1 && y.vertices().skip(1).any(|v| y.label(v).0 == 1))
        .collect();
    println!("{} forbidden window graphs", shapes.len());
    let d = SftDefinition::new(alphabets.clone(), Mode::Forbid, vec![ConstraintGroup::new(window, ShapeRule::Listed(shapes))])?;

    let allow = to_allow_form(&d, &caps)?;
    let back = to_forbid_form(&allow, &caps)?;
    let universe = all_graphs_naive(&alphabets, 3);
    let members = universe.iter().filter(|x| is_member(&d, x)).count();
    let agree = universe.iter().all(|x| is_member(&d, x) == is_member(&allow, x) && is_member(&d, x) == is_member(&back, x));
    println!("{members} of {} graphs with ≤3 vertices are members; all three forms agree: {agree}", universe.len());
    Ok(())
}
