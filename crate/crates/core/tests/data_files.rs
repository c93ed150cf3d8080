//! Every bundled data file parses, and parse ∘ serialize is the identity.

use std::fs;
use std::path::PathBuf;

use graphshift::io;

fn files(ext: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut out: Vec<(String, String)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == ext))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no .{ext} files");
    out
}

#[test]
fn graphs_round_trip() {
    for (name, text) in files("graph") {
        let (x, a) = io::parse_graph(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let json = io::graph_to_json(&x, &a);
        let (y, b) = io::parse_graph(&json).unwrap();
        assert_eq!(x, y, "{name}");
        a.ensure_same(&b).unwrap();
        assert_eq!(io::graph_to_json(&y, &b), json, "{name}");
    }
}

#[test]
fn sfts_round_trip() {
    for (name, text) in files("sft") {
        let d = io::parse_sft(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(io::parse_sft(&io::sft_to_json(&d)).unwrap(), d, "{name}");
        assert_eq!(io::sft_to_json(&d), text, "{name} is stored in canonical form");
    }
}

#[test]
fn presentations_round_trip() {
    for (name, text) in files("presentation") {
        let p = io::parse_presentation(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(io::parse_presentation(&io::presentation_to_json(&p, "-")).unwrap(), p, "{name}");
    }
}

#[test]
fn tables_round_trip() {
    for (name, text) in files("table") {
        let t = io::parse_table(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(io::parse_table(&io::table_to_json(&t)).unwrap(), t, "{name}");
    }
}

#[test]
fn lazy_sources_round_trip() {
    for (name, text) in files("lazy") {
        let doc: io::LazyDoc = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let back: io::LazyDoc = serde_json::from_str(&io::lazy_to_json(&doc)).unwrap();
        assert_eq!(back, doc, "{name}");
        let (s, _) = io::parse_lazy(&text).unwrap();
        assert!(!s.is_finite());
    }
}
