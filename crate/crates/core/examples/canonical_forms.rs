//! Building a port graph by hand and reducing it to its canonical form.
//!
//! Run with `cargo run --example canonical_forms`.

use graphshift::alphabet::{Alphabets, Label, LabelAlphabet, PortAlphabet};
use graphshift::graph::{BasedGraph, ConcreteGraph};
use graphshift::{canonicalize, io, PathWord};

fn main() -> graphshift::Result<()> {
    // a triangle with one marked vertex; ports p and q, a singleton loop on r
    let alphabets = Alphabets::new(PortAlphabet::new(["p", "q", "r"])?, LabelAlphabet::new(["white", "red"])?);
    let (p, q, r) = (alphabets.ports.lookup("p")?, alphabets.ports.lookup("q")?, alphabets.ports.lookup("r")?);
    let mut g = ConcreteGraph::new(3);
    let x = g.add_vertex("x", Label(0))?;
    let y = g.add_vertex("y", Label(1))?;
    let z = g.add_vertex("z", Label(0))?;
    g.add_edge(x, p, y, q)?;
    g.add_edge(y, p, z, q)?;
    g.add_edge(z, p, x, q)?;
    g.add_loop(y, r)?;

    // the same graph seen from each vertex: three pointed classes
    for origin in [x, y, z] {
        let c = canonicalize(&BasedGraph::new(g.clone(), origin)?, &alphabets)?;
        let names: Vec<String> = c.names().iter().map(|w| format!("{:?}", w.render(&alphabets.ports))).collect();
        println!("from {}: {} vertices, {} edges, names {}", g.name(origin), c.vertex_count(), c.edge_count(), names.join(" "));
    }

    // paths identify vertices: following p then q from x returns to x's class
    let c = canonicalize(&BasedGraph::new(g, x)?, &alphabets)?;
    let u = PathWord::parse("p.q/p.q/p.q", &alphabets.ports)?;
    println!("p.q three times is a cycle: {}", c.follow(&u) == Some(0));

    println!("\n{}", io::graph_to_json(&c, &alphabets));
    print!("{}", io::to_dot(&c, &alphabets));
    Ok(())
}
