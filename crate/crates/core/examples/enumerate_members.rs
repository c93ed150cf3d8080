//! Listing the small finite members of the built-in SFTs.
//!
//! Run with `cargo run --release --example enumerate_members [max_vertices]`.

use graphshift::cayley::catalog;
use graphshift::config::Caps;
use graphshift::sft::enumerate;

fn main() -> graphshift::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let caps = Caps::from_env()?;
    for entry in catalog() {
        let e = enumerate(&entry.sft, max, &caps)?;
        println!("{:<20} {:>7} pointed members, {:>6} up to shift", entry.name, e.members.len(), e.orbit_count());
    }
    Ok(())
}
