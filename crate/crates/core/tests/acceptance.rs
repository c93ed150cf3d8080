//! Runs the twelve acceptance checks, one PASS/FAIL line each.

use graphshift::verify::{run_check, SuiteOptions, CHECKS};

#[test]
fn acceptance_suite() {
    let opts = SuiteOptions::default();
    let mut failed = Vec::new();
    for id in 1..=CHECKS.len() {
        let report = run_check(id, &opts);
        println!("{report}");
        if !report.passed {
            failed.push(report.name);
        }
    }
    assert!(failed.is_empty(), "failed checks: {failed:?}");
}
