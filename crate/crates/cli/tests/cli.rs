use std::process::{Command, Output};

fn gencay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gencay")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn abelian_census_survivor_line() {
    let o = gencay(&["census", "--kind", "abelian", "--orders", "4,6,8,10,12,20,24,30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("survivors: Z6, Z2^3, Z8\n"));
}

#[test]
fn census_csv_header() {
    let o = gencay(&["census", "--kind", "nonabelian", "--orders", "6,8", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("group,order,alpha_class,subset,connected,bipartite,integral,branch\n"));
}

#[test]
fn check_reports_both_routes() {
    let o = gencay(&["check", "Z14", "--alpha", "g->g^-1", "--set", "g,g^3,g^5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("connected=true (search); true (generation/index"));
    assert!(out.contains("bipartite=true (search); true (odd product criterion)"));
}

#[test]
fn table1_and_fixtures_succeed() {
    assert_eq!(gencay(&["table1"]).status.code(), Some(0));
    let o = gencay(&["fixtures", "run"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn graph_export_formats() {
    let dot = gencay(&["graph", "build", "D6", "--alpha", "a->a^-1,b->b", "--set", "b,ab,a^2b"]);
    assert!(stdout(&dot).starts_with("graph { \"e\" -- \"b\";"));
    let json = gencay(&["graph", "build", "D6", "--alpha", "a->a^-1,b->b", "--set", "b,ab,a^2b", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 9);
}

#[test]
fn invalid_subset_fails_and_bad_input_is_usage_error() {
    assert_eq!(gencay(&["check", "D8", "--alpha", "a->a^-1, b->ab", "--set", "a"]).status.code(), Some(1));
    assert_eq!(gencay(&["check", "Z7", "--alpha", "inv", "--set", "h"]).status.code(), Some(2));
    assert_eq!(gencay(&["group", "info", "D7"]).status.code(), Some(2));
    assert_eq!(gencay(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn aut_lists_classes() {
    let o = gencay(&["aut", "Q8", "--involutions", "--classes"]);
    let out = stdout(&o);
    assert!(out.contains("|Aut(Q8)| = 24"));
    assert!(out.contains("involution classes: 2"));
}
