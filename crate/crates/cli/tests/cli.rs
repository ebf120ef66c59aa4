use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ramsey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramsey"))
        .args(args)
        .env_remove("RAMSEY_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn ramsey_exact_values() {
    let o = ramsey(&["ramsey", "--pattern", "Bw"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("exact 6\n"));
    let o = ramsey(&["ramsey", "--family", "path", "--v", "4"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("exact 5\n"));
    assert!(out.contains("path_law 5\nedge_expression 5 m=3\n"));
}

#[test]
fn path_law_flags_even_edge_counts() {
    for v in 3..=7usize {
        let o = ramsey(&["ramsey", "--family", "path", "--v", &v.to_string()]);
        let out = stdout(&o);
        let law = v + v / 2 - 1;
        assert!(out.starts_with(&format!("exact {law}\n")), "{out}");
        let m = v - 1;
        let flagged = out.contains("DISCREPANCY");
        assert_eq!(flagged, m % 2 == 0, "{out}");
    }
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(code(&ramsey(&["ramsey", "--pattern", "!!"])), 1);
    assert_eq!(code(&ramsey(&["ramsey"])), 1);
    assert_eq!(code(&ramsey(&["nonsense"])), 1);
    assert_eq!(code(&ramsey(&["spectrum", "--n", "9"])), 1);
}

#[test]
fn interval_result_exits_two() {
    let o = ramsey(&["ramsey", "--family", "clique", "--v", "4", "--max-nodes", "1000"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).starts_with("interval "));
}

#[test]
fn construct_examples() {
    let o = ramsey(&["construct", "--preset", "f=n", "--n", "5"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("case One\n") && out.contains("t 2\n"), "{out}");
    let g = out.lines().next().unwrap().strip_prefix("graph6 ").unwrap();
    let built = ramsey_core::graph::parse_graph6(g).unwrap();
    let expected = ramsey_core::constructions::biclique_path_graph(2, 5).unwrap();
    assert_eq!(
        ramsey_core::graph::canonical_form(&built),
        ramsey_core::graph::canonical_form(&expected)
    );

    let o = ramsey(&["construct", "--variant", "multipartite", "--k", "3", "--t", "1", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("graph6 Bw\n"));
}

#[test]
fn construct_insufficient_oracle_exits_three() {
    let o = ramsey(&[
        "construct", "--preset", "f=2nlog2n", "--n", "6", "--variant", "case2", "--max-seconds", "1",
    ]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).starts_with("ORACLE_INSUFFICIENT K_5 in ["), "{}", stdout(&o));
}

#[test]
fn construct_reads_table_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("f.txt");
    fs::write(&table, "# n f\n1 1\n2 2\n3 3\n4 4\n5 5\n").unwrap();
    let cache = dir.path().join("cache");
    let o = Command::new(env!("CARGO_BIN_EXE_ramsey"))
        .args(["construct", "--f", path_str(&table), "--n", "5"])
        .env("RAMSEY_CACHE", &cache)
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let ledger = fs::read_to_string(cache.join("oracle.ledger")).unwrap();
    assert!(ledger.lines().any(|l| l.starts_with("Ktt 2 6 6 PROVED_BY_SEARCH")), "{ledger}");
}

#[test]
fn blocked_witness_verifies_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    let o = ramsey(&["witness", "blocked", "--g", "Bw", "--h", "Bw", "--out", path_str(&w)]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(&w).unwrap();
    assert!(text.starts_with("# no monochromatic Bw\n# R_3(Bw) >= 11\n10 3\n"));
    assert_eq!(code(&ramsey(&["verify", path_str(&w)])), 0);

    // recolour {0,1}, {0,2}, {1,2} red
    let mut c: ramsey_core::EdgeColouring = text.parse().unwrap();
    for (u, v) in [(0, 1), (0, 2), (1, 2)] {
        c.set(u, v, 0);
    }
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, format!("# no monochromatic Bw\n{c}")).unwrap();
    let o = ramsey(&["verify", path_str(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).starts_with("INVALID"));
}

#[test]
fn extraction_trace_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    for (case, t, n, size) in [("1", "2", "8", "30"), ("2", "3", "9", "20")] {
        let trace = dir.path().join(format!("trace{case}.json"));
        let o = ramsey(&[
            "extract", "--random", size, "--seed", "5", "--case", case, "--t", t, "--n", n, "--trace-out",
            path_str(&trace),
        ]);
        assert_eq!(code(&o), 0);
        let out = stdout(&o);
        assert!(out.starts_with("EMBEDDING") || out.starts_with("FAILURE"));
        assert_eq!(code(&ramsey(&["verify", path_str(&trace)])), 0);

        let mut json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&trace).unwrap()).unwrap();
        json["n"] = serde_json::json!(json["n"].as_u64().unwrap() + 1);
        fs::write(&trace, json.to_string()).unwrap();
        assert_eq!(code(&ramsey(&["verify", path_str(&trace)])), 2);
    }
}

#[test]
fn extraction_needs_seed_for_random_hosts() {
    assert_eq!(code(&ramsey(&["extract", "--random", "20", "--case", "1", "--t", "2", "--n", "8"])), 1);
}

#[test]
fn stochastic_witnesses_are_seeded_and_verified() {
    let a = ramsey(&["witness", "biclique", "--t", "2", "--n", "5", "--seed", "3"]);
    let b = ramsey(&["witness", "biclique", "--t", "2", "--n", "5", "--seed", "3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(code(&ramsey(&["witness", "biclique", "--t", "2", "--n", "5"])), 1);
    assert_eq!(code(&ramsey(&["witness", "biclique", "--t", "2", "--n", "6", "--seed", "0", "--tries", "200"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("k3.txt");
    let o = ramsey(&["witness", "search", "--pattern", "Bw", "--n", "5", "--seed", "1", "--out", path_str(&w)]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&ramsey(&["verify", path_str(&w)])), 0);
}

#[test]
fn result_records_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = ramsey(&["ramsey", "--pattern", "Bw"]);
    let rec = dir.path().join("rec.json");
    fs::write(&rec, stdout(&o).lines().nth(1).unwrap()).unwrap();
    assert_eq!(code(&ramsey(&["verify", path_str(&rec)])), 0);
}

#[test]
fn spectrum_three_golden() {
    let o = ramsey(&["spectrum", "--n", "3"]);
    assert_eq!(code(&o), 0);
    let golden = "\
n = 3
graph6     connected no_isolated    lo    hi  certificate
B?             false       false     3     3  PROVED_BY_SEARCH
B_             false       false     3     3  PROVED_BY_SEARCH
BW              true        true     3     3  PROVED_BY_SEARCH
Bw              true        true     6     6  PROVED_BY_SEARCH
R_n = {3, 6}
R_n_no_isolated = {3, 6}
R_n_connected = {3, 6}
UNRESOLVED = []
floor 3 PASS min 3 attained by [BW]
gaps c=3/2 on [3, 6] = {}
";
    assert_eq!(stdout(&o), golden);
}

#[test]
fn results_do_not_depend_on_jobs() {
    let one = ramsey(&["--jobs", "1", "spectrum", "--n", "4", "--max-nodes", "200000"]);
    let four = ramsey(&["--jobs", "4", "spectrum", "--n", "4", "--max-nodes", "200000"]);
    assert_eq!(code(&one), code(&four));
    assert_eq!(stdout(&one), stdout(&four));
}
