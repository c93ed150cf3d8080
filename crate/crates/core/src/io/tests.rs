use super::*;
use crate::alphabet::Port;
use crate::builtin::monochromatic_torus;
use crate::cayley::{self, GroupPresentation};
use crate::sft::is_member;

const TORUS: &str = r#"{
  "sigma": ["0"],
  "pi": ["a", "a'", "b", "b'"],
  "vertices": [{"name": "x", "label": "0"}],
  "edges": [[{"v": "x", "port": "a"}, {"v": "x", "port": "a'"}],
            [{"v": "x", "port": "b"}, {"v": "x", "port": "b'"}]],
  "origin": "x"
}"#;

#[test]
fn graph_document_parses() {
    let (x, a) = parse_graph(TORUS).unwrap();
    assert_eq!(x, monochromatic_torus(1, 1));
    assert_eq!(a.port_count(), 4);
}

#[test]
fn graph_round_trip() {
    let a = Alphabets::grid(1);
    for (k1, k2) in [(1, 1), (2, 3), (3, 3)] {
        let x = monochromatic_torus(k1, k2);
        let (y, b) = parse_graph(&graph_to_json(&x, &a)).unwrap();
        assert_eq!(x, y);
        a.ensure_same(&b).unwrap();
    }
}

#[test]
fn singleton_loops_round_trip() {
    let json = r#"{"sigma":["0","1"],"pi":["p"],"vertices":[{"name":"v","label":"1"}],
                   "edges":[[{"v":"v","port":"p"}]],"origin":"v"}"#;
    let (x, a) = parse_graph(json).unwrap();
    assert_eq!(x.neighbor(0, Port(0)), Some((0, Port(0))));
    assert_eq!(parse_graph(&graph_to_json(&x, &a)).unwrap().0, x);
}

#[test]
fn graph_errors() {
    let dup = TORUS.replace(r#""edges": ["#, r#""edges": [[{"v": "x", "port": "a"}], "#);
    assert!(matches!(parse_graph(&dup), Err(Error::PortConflict { .. })));
    let lost = TORUS.replace(r#""origin": "x""#, r#""origin": "y""#);
    assert!(matches!(parse_graph(&lost), Err(Error::UnknownVertex(_))));
    assert!(matches!(parse_graph("{"), Err(Error::Malformed(_))));
    let three = TORUS.replace(r#"{"v": "x", "port": "b'"}"#, r#"{"v": "x", "port": "b'"}, {"v": "x", "port": "b'"}"#);
    assert!(matches!(parse_graph(&three), Err(Error::Malformed(_))));
}

#[test]
fn sft_round_trip_for_catalog() {
    for entry in cayley::catalog() {
        let json = sft_to_json(&entry.sft);
        let back = parse_sft(&json).unwrap();
        assert_eq!(sft_to_json(&back), json, "{}", entry.name);
        let x = monochromatic_torus(3, 3);
        if entry.sft.alphabets().port_count() == 4 {
            assert_eq!(is_member(&entry.sft, &x), is_member(&back, &x), "{}", entry.name);
        }
    }
}

#[test]
fn listed_patterns_merge_by_window() {
    let d = cayley::hard_square();
    let json = sft_to_json(&d);
    let back = parse_sft(&json).unwrap();
    assert_eq!(back.groups().len(), d.groups().len());
}

#[test]
fn pattern_needs_one_shape() {
    let json = r#"{"sigma":["0"],"pi":["p"],"mode":"forbid","patterns":[{"language":[""]}]}"#;
    assert!(matches!(parse_sft(json), Err(Error::Malformed(_))));
}

#[test]
fn presentation_round_trip() {
    let json = r#"{"generators":["a","b"],"relators":["a b a- b-"],"inverseSuffix":"-"}"#;
    let p = parse_presentation(json).unwrap();
    assert_eq!(p, GroupPresentation::z2());
    assert_eq!(parse_presentation(&presentation_to_json(&p, "-")).unwrap(), p);
}

#[test]
fn table_round_trip() {
    let json = r#"{"elements":["e","s"],"product":[["e","s"],["s","e"]],"generators":["s"]}"#;
    let t = parse_table(json).unwrap();
    assert_eq!(t.generators, vec![1]);
    assert_eq!(parse_table(&table_to_json(&t)).unwrap(), t);
    let bad = r#"{"elements":["e","s"],"product":[["e","s"],["s","s"]],"generators":["s"]}"#;
    assert!(parse_table(bad).is_err());
}

#[test]
fn lazy_documents() {
    let (g, a) = parse_source(r#"{"kind":"grid","sigma":["0","1"],"coloring":[["0","1"],["1","0"]]}"#).unwrap();
    assert!(!g.is_finite());
    assert_eq!(a.label_count(), 2);
    assert_eq!(g.disk(1).content.vertex_count(), 5);
    let (c, _) = parse_lazy(r#"{"kind":"cylinder","sigma":["0"],"circumference":2,"coloring":[["0"]]}"#).unwrap();
    assert_eq!(c.disk(2).content.vertex_count(), 8);
    let (t, a) = parse_lazy(r#"{"kind":"tree","generators":2}"#).unwrap();
    assert_eq!(a.port_count(), 4);
    assert_eq!(t.disk(1).content.vertex_count(), 5);
    let (f, _) = parse_source(TORUS).unwrap();
    assert!(f.is_finite());
    assert!(parse_lazy(r#"{"kind":"cylinder","sigma":["0"],"circumference":0,"coloring":[["0"]]}"#).is_err());
}

#[test]
fn subgroup_forms() {
    let ports = Alphabets::grid(1).ports;
    let h = parse_subgroup(r#"["a.a'/a.a'", "b.b'"]"#, &ports).unwrap();
    assert_eq!(h.generators.len(), 2);
    assert_eq!(parse_subgroup("a.a'/a.a', b.b'", &ports).unwrap(), h);
    assert_eq!(parse_subgroup(&subgroup_to_json(&h, &ports), &ports).unwrap(), h);
}

#[test]
fn dot_output() {
    let dot = to_dot(&monochromatic_torus(2, 1), &Alphabets::grid(1));
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches(" -- ").count(), 4);
    assert!(!dot.contains("style=dashed"));
}
