//! The command-line front end on the bundled data files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_graphshift"));
    for a in args {
        match a.strip_prefix('@') {
            Some(name) => cmd.arg(data(name)),
            None => cmd.arg(a),
        };
    }
    cmd.env_remove("GRAPHSHIFT_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn check_member() {
    let o = run(&["check", "@hardsquare.sft", "@torus2_all0.graph"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Member");
}

#[test]
fn check_violation_exits_one() {
    let o = run(&["check", "@hardsquare.sft", "@torus2_adjacent1.graph"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("Violation at"));
}

#[test]
fn colorings_of_torus3() {
    let o = run(&["colorings", "@hardsquare.sft", "@torus3.graph"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "34");
}

#[test]
fn distance_grid_torus3() {
    let o = run(&["distance", "@grid.lazy", "@torus3.graph", "--max-radius", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2^-1");
}

#[test]
fn check_lazy_cylinder() {
    let o = run(&["check-lazy", "@hardsquare.sft", "@cylinder3.lazy", "--max-radius", "4"]);
    assert_eq!(stdout(&o).trim(), "ConsistentUpToRadius(4)");
}

#[test]
fn cover_verdicts() {
    assert_eq!(run(&["cover", "@torus6.graph", "@torus3.graph"]).status.code(), Some(0));
    let o = run(&["cover", "@torus3.graph", "@torus6.graph", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"], "a.a'/a.a'/a.a'");
}

#[test]
fn quotient_of_grid_is_torus3() {
    let q = run(&["quotient", "@grid.lazy", "a.a'/a.a'/a.a', b.b'/b.b'/b.b'"]);
    assert_eq!(q.status.code(), Some(0));
    let t = run(&["cut", "@torus3.graph", "", "a.a'", "a.a'/a.a'"]);
    assert_eq!(t.status.code(), Some(0));
    let (q, _) = graphshift::io::parse_graph(&stdout(&q)).unwrap();
    assert_eq!(q, graphshift::builtin::monochromatic_torus(3, 3));
}

#[test]
fn stabilizer_order() {
    let o = run(&["stabilizer", "@torus3_diagonal.graph", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 3);
}

#[test]
fn enumerate_and_dot() {
    let dot = std::env::temp_dir().join(format!("graphshift-cli-{}.dot", std::process::id()));
    let o = run(&["enumerate", "@hardsquare.sft", "--max-vertices", "2", "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("6 members, 5 shift orbits"));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches("graph G {").count(), 6);
    std::fs::remove_file(dot).ok();
}

#[test]
fn cayley_commands() {
    let o = run(&["cayley", "@z2.presentation", "--labels", "2", "--forbid", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let d = graphshift::io::parse_sft(&stdout(&o)).unwrap();
    assert!(graphshift::sft::is_member(&d, &graphshift::builtin::monochromatic_torus(3, 3)));
    assert_eq!(run(&["cayley", "@z2.presentation", "--cover", "@torus3_diagonal.graph"]).status.code(), Some(0));
    let t = run(&["cayley", "@klein4.table"]);
    let (x, _) = graphshift::io::parse_graph(&stdout(&t)).unwrap();
    assert_eq!(x.vertex_count(), 4);
}

#[test]
fn verify_single_check_and_examples() {
    let o = run(&["verify", "--only", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS  4"));
    let e = run(&["examples"]);
    assert!(stdout(&e).lines().any(|l| l.starts_with("hard-square")));
}

#[test]
fn errors_exit_two_with_distinct_messages() {
    let cases = [
        (vec!["check", "@hardsquare.sft", "@nope.graph"], "cannot read"),
        (vec!["check", "@hardsquare.sft", "@grid.lazy"], "malformed file"),
        (vec!["check-lazy", "@hardsquare.sft", "@tree2.lazy"], "alphabet mismatch"),
        (vec!["verify", "--only", "13"], "no check 13"),
    ];
    for (args, msg) in cases {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains(msg), "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_graphshift"))
        .args(["enumerate", data("hardsquare.sft").to_str().unwrap(), "--max-vertices", "3"])
        .env("GRAPHSHIFT_CAP", "vertices=2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("search cap exceeded"));
}

#[test]
fn reports_are_deterministic() {
    for args in [vec!["enumerate", "@hardsquare.sft", "--max-vertices", "2"], vec!["stabilizer", "@torus3.graph"]] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}
