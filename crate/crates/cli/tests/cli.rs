use std::path::PathBuf;
use std::process::{Command, Output};

use interior_core::fixtures;
use interior_core::graph::parse_graph_file;
use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(name).to_string_lossy().into_owned()
}

fn sbg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbg")).args(args).output().expect("runs")
}

/// The JSON line, which is always last on stdout.
fn json(out: &Output) -> Value {
    let stdout = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(stdout.lines().last().expect("output")).expect("json")
}

fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(root().join("fixtures"))
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    names
}

#[test]
fn interior_of_k23() {
    let out = sbg(&["interior", &fixture("k23.graph"), "--json-only"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "{\"format\":1,\"coeffs\":[1,2]}\n");
    let out = sbg(&["interior", &fixture("k23.graph")]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("I' = 1x^0+2x^1\n"));
}

#[test]
fn shipped_graphs_match_library_fixtures() {
    let load = |n: &str| parse_graph_file(&std::fs::read_to_string(fixture(n)).unwrap()).unwrap();
    assert_eq!(load("k23.graph").graph, fixtures::k23());
    assert_eq!(load("hexagon.graph").graph, fixtures::hexagon());
    assert_eq!(load("table1.graph").graph, fixtures::table1());
    assert_eq!(load("figure.graph").graph, fixtures::figure_graph());
    assert_eq!(load("hexagon_dot.graph").graph, fixtures::hexagon_plus_isolated());
    assert_eq!(load("table1.graph").embedding, Some(fixtures::table1_plane().1));
}

#[test]
fn signed_interior_ledger() {
    let out = sbg(&["signed-interior", &fixture("table1.graph"), "--trace", "--json-only"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["coeffs"], serde_json::json!([0, 0, 0, 1]));
    let rows = v["ledger"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let sizes: Vec<i64> = rows.iter().map(|r| r["size"].as_i64().unwrap()).collect();
    assert_eq!(sizes, [0, 1, 2, 3]);
    let plain = json(&sbg(&["signed-interior", &fixture("table1.graph"), "--no-shortcut"]));
    assert_eq!(plain["coeffs"], v["coeffs"]);
}

#[test]
fn verify_table_graph() {
    let out = sbg(&["verify", &fixture("table1.graph")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["equal"], true);
    assert_eq!(v["exponent"], -3);
    assert_eq!(v["format"], 1);
}

#[test]
fn verify_accepts_every_fixture() {
    for name in fixture_names() {
        let out = sbg(&["verify", &fixture(&name), "--json-only"]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(json(&out)["equal"], true, "{name}");
    }
}

#[test]
fn median_output_round_trips() {
    let out = sbg(&["median", &fixture("table1.graph"), "--json-only"]);
    let pd = json(&out)["pd"].as_str().unwrap().to_string();
    let path = std::env::temp_dir().join(format!("sbg-median-{}.pd", std::process::id()));
    std::fs::write(&path, pd).unwrap();
    let s = json(&sbg(&["seifert", path.to_str().unwrap(), "--json-only"]));
    std::fs::remove_file(&path).ok();
    let graph_json = serde_json::to_value(interior_core::graph::GraphJson::from_graph(&fixtures::table1(), None)).unwrap();
    assert_eq!(s["graph"], graph_json);
}

#[test]
fn homfly_of_trefoil_and_budget() {
    let v = json(&sbg(&["homfly", &fixture("trefoil.pd"), "--json-only"]));
    assert_eq!(v["morton_bound"], 2);
    assert_eq!(v["top"]["terms"], serde_json::json!([{"v": 2, "z": 0, "c": 1}]));
    let out = sbg(&["homfly", &fixture("table1.pd"), "--max-crossings", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ehrhart_counts() {
    let v = json(&sbg(&["ehrhart", &fixture("k23.graph"), "--max-s", "2", "--order", "3", "--json-only"]));
    assert_eq!(v["counts"], serde_json::json!([1, 6, 18]));
    assert_eq!(v["series"], serde_json::json!([1, 6, 18, 40]));
    let v = json(&sbg(&["ehrhart", &fixture("table1.graph"), "--max-s", "1", "--json-only"]));
    // I+ = x^3 over (1 - x)^6, with 4 + 3 - 1 = 6.
    assert_eq!(v["signed_series"], serde_json::json!([0, 0, 0, 1, 6, 21, 56, 126, 252]));
}

#[test]
fn recursion_trace_sums_to_interior() {
    let v = json(&sbg(&["recursion-trace", &fixture("k23.graph"), "--json-only"]));
    assert_eq!(v["value"]["coeffs"], serde_json::json!([1, 2]));
    assert_eq!(v["tree"]["branches"].as_array().unwrap().len(), 3);
    let v = json(&sbg(&["recursion-trace", &fixture("tree.graph"), "--json-only"]));
    assert_eq!(v["leaves"], 1);
    assert_eq!(v["value"]["coeffs"], serde_json::json!([1]));
    let v = json(&sbg(&["recursion-trace", &fixture("hexagon.graph"), "--json-only"]));
    assert_eq!(v["value"]["coeffs"], serde_json::json!([1, 1, 1]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify", "table1.graph"],
        vec!["signed-interior", "table1.graph", "--trace"],
        vec!["ehrhart", "figure.graph"],
        vec!["recursion-trace", "figure.graph"],
    ] {
        let mut a: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        a[1] = fixture(args[1]);
        let a: Vec<&str> = a.iter().map(String::as_str).collect();
        assert_eq!(sbg(&a).stdout, sbg(&a).stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(sbg(&["frobnicate", "x"]).status.code(), Some(64));
    assert_eq!(sbg(&["interior"]).status.code(), Some(64));
    assert_eq!(sbg(&["interior", "/nonexistent/file.graph"]).status.code(), Some(66));
    assert_eq!(sbg(&["--help"]).status.code(), Some(0));

    let path = std::env::temp_dir().join(format!("sbg-bad-{}.graph", std::process::id()));
    std::fs::write(&path, "E a\nV b\n+ a c\n").unwrap();
    let out = sbg(&["interior", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"), "{}", String::from_utf8_lossy(&out.stderr));
    std::fs::write(&path, "X 1 2 3\n").unwrap();
    assert_eq!(sbg(&["homfly", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_file(&path).ok();

    // Negative edges have no unsigned interior polynomial.
    assert_eq!(sbg(&["interior", &fixture("table1.graph")]).status.code(), Some(1));
}

#[test]
fn swapping_color_classes_still_verifies() {
    // Relabelling the circles with swapped colors transposes the Seifert
    // graph; both sides of the comparison are unchanged by that.
    let path = std::env::temp_dir().join(format!("sbg-swap-{}.pd", std::process::id()));
    let text = String::from_utf8_lossy(&sbg(&["median", &fixture("table1.graph")]).stdout).into_owned();
    let text: Vec<&str> = text.lines().filter(|l| !l.starts_with('{')).collect();
    let swapped = text.join("\n").replace("S E ", "S T ").replace("S V ", "S E ").replace("S T ", "S V ");
    std::fs::write(&path, swapped).unwrap();
    let out = sbg(&["verify", path.to_str().unwrap(), "--json-only"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["seifert_graph"]["E"], serde_json::json!(["v1", "v2", "v3"]));
    assert_eq!(v["signed_interior"]["coeffs"], serde_json::json!([0, 0, 0, 1]));
}
