//! Periods, stabilizer groups and periodicity classes of finite graphs.
//!
//! Run with `cargo run --example symmetry`.

use graphshift::alphabet::Alphabets;
use graphshift::builtin::{monochromatic_grid, torus_graph};
use graphshift::config::Caps;
use graphshift::symmetry::{classify_periodicity, classify_source, stabilizer};
use graphshift::Label;

fn main() -> graphshift::Result<()> {
    let ports = Alphabets::grid(2).ports;
    let examples = [
        ("all-0 3×3 torus", torus_graph(3, 3, |_, _| Label(0))),
        ("diagonal 3×3 torus", torus_graph(3, 3, |i, j| Label(u8::from(i == j)))),
        ("one marked vertex", torus_graph(3, 3, |i, j| Label(u8::from(i + j == 0)))),
    ];
    for (name, x) in examples {
        let s = stabilizer(&x);
        let periods: Vec<String> = s.elements().iter().map(|u| format!("{:?}", u.render(&ports))).collect();
        println!("{name}: order {}, group axioms hold: {}", s.order(), s.check_axioms());
        println!("  periods {}", periods.join(" "));
        println!("  {:?}", classify_periodicity(&x));
    }
    println!("all-0 grid: {:?}", classify_source(&monochromatic_grid(), &Caps::default())?);
    Ok(())
}
