//! Runs the verification checks, all or those named on the command line.
//!
//! Run with `cargo run --release --example verify_suite [id ...]`.

use graphshift::verify::{run_check, SuiteOptions, CHECKS};

fn main() {
    let ids: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).filter(|id| (1..=CHECKS.len()).contains(id)).collect();
    let ids = if ids.is_empty() { (1..=CHECKS.len()).collect() } else { ids };
    let opts = SuiteOptions::default();
    let mut failed = 0;
    for id in ids {
        let r = run_check(id, &opts);
        failed += usize::from(!r.passed);
        println!("{r}");
    }
    std::process::exit(i32::from(failed > 0));
}
