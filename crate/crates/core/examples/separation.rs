//! When quotienting keeps local windows intact.
//!
//! Run with `cargo run --example separation`.

use graphshift::builtin::{grid_word, monochromatic_grid};
use graphshift::config::Caps;
use graphshift::symmetry::{is_separated, verify_window_preservation, SubgroupSpec};
use graphshift::PrefixLanguage;

fn main() -> graphshift::Result<()> {
    let grid = monochromatic_grid();
    let ball = PrefixLanguage::ball(4, 1);
    let caps = Caps::default();
    for k in 1..=5 {
        let h = SubgroupSpec::new([grid_word(k, 0), grid_word(0, k)]);
        let separated = is_separated(&grid, &h, &ball.product(&ball))?;
        print!("k = {k}: separated by M·M̄ {separated}");
        match verify_window_preservation(&grid, &h, &ball, &caps) {
            Ok(r) => println!(
                "; {} cosets, traced cuts preserved {}, induced cuts gaining an edge {}",
                r.checked,
                r.ok(),
                r.induced_failures.len()
            ),
            Err(e) => println!("; {e}"),
        }
    }
    Ok(())
}
