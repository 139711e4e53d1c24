use std::io::BufReader;
use std::path::Path;

use tokbin::cli::{main_with, EXIT_FAILED, EXIT_INPUT, EXIT_OK};
use tokbin::trace::TraceFile;

fn tokbin(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = main_with(std::iter::once("tokbin").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn run_reports_stabilization_period_and_tree() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.jsonl");
    let (code, out) = tokbin(&["run", "--graph", "path:3", "--init", "all-reset", "--out", p(&trace)]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("configuration period 12"), "{out}");
    assert!(out.contains("token period at depth 1: 3"), "{out}");
    assert!(out.contains("token period at depth 2: 6"), "{out}");
    assert!(out.contains("tree: 1->0 2->1"), "{out}");

    let (code, out) = tokbin(&["verify", p(&trace)]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("0 findings"));
}

#[test]
fn trace_round_trips_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.jsonl");
    let (code, _) = tokbin(&["run", "--graph", "suite:diamond", "--init", "random", "--seed", "7", "--overlay-color", "--out", p(&trace)]);
    assert_eq!(code, EXIT_OK);
    let bytes = std::fs::read(&trace).unwrap();
    let file = TraceFile::read(BufReader::new(bytes.as_slice())).unwrap();
    let mut again = Vec::new();
    file.write(&mut again).unwrap();
    assert_eq!(bytes, again);
    assert!(file.audit().unwrap().clean());
}

#[test]
fn corrupted_trace_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.jsonl");
    tokbin(&["run", "--graph", "cycle:4", "--init", "legal", "--out", p(&trace)]);
    let text = std::fs::read_to_string(&trace).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    lines[4] = lines[4].replacen("\"1:", "\"2:", 1);
    let bad = dir.path().join("bad.jsonl");
    std::fs::write(&bad, lines.join("\n")).unwrap();
    let (code, out) = tokbin(&["verify", p(&bad)]);
    assert_eq!(code, EXIT_FAILED, "{out}");
    assert!(out.contains("Transition"), "{out}");

    // tampered readings are caught even when the states are intact
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    lines[2] = lines[2].replacen("\"Phi\":0", "\"Phi\":3", 1);
    std::fs::write(&bad, lines.join("\n")).unwrap();
    let (code, out) = tokbin(&["verify", p(&bad)]);
    assert_eq!(code, EXIT_FAILED, "{out}");
    assert!(out.contains("Readings"), "{out}");
}

#[test]
fn malformed_inputs_exit_with_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.jsonl");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(tokbin(&["verify", p(&empty)]).0, EXIT_INPUT);
    let junk = dir.path().join("junk.jsonl");
    std::fs::write(&junk, "{\"format\":\"other\"}\n").unwrap();
    assert_eq!(tokbin(&["verify", p(&junk)]).0, EXIT_INPUT);
    assert_eq!(tokbin(&["run", "--graph", "/no/such/graph.json"]).0, EXIT_INPUT);
    assert_eq!(tokbin(&["run", "--graph", "path:3", "--init", "random"]).0, EXIT_INPUT);
    assert_eq!(tokbin(&["run", "--graph", "path:3", "--init", "explicit", "--states", "1:T:1 -:F:0 -:F:0"]).0, EXIT_INPUT);
    assert_eq!(tokbin(&["sweep", "--graph", "path:3", "--mode", "random", "--count", "5"]).0, EXIT_INPUT);
    assert_eq!(tokbin(&["frobnicate"]).0, EXIT_INPUT);
}

#[test]
fn budget_zero_records_one_configuration() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.jsonl");
    let (code, _) = tokbin(&["run", "--graph", "path:3", "--budget", "0", "--out", p(&trace)]);
    assert_eq!(code, EXIT_OK);
    let file = TraceFile::read(BufReader::new(std::fs::File::open(&trace).unwrap())).unwrap();
    assert_eq!(file.records.len(), 1);
    assert_eq!(tokbin(&["verify", p(&trace)]).0, EXIT_OK);
}

#[test]
fn graph_documents_with_ports_load() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    std::fs::write(
        &graph,
        r#"{"nodes":3,"root":0,"edges":[[0,1],[1,2],[0,2]],"ports":[[[5,1],[2,2]],[[0,0],[1,2]],[[9,0],[3,1]]]}"#,
    )
    .unwrap();
    let (code, out) = tokbin(&["run", "--graph", p(&graph)]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("tree: 1->0 2->0"), "{out}");
}

#[test]
fn sweeps_exit_codes_and_determinism() {
    let (code, out) = tokbin(&["sweep", "--graph", "suite:P2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("converged 36/36"), "{out}");
    assert_eq!(tokbin(&["sweep", "--graph", "path:8"]).0, EXIT_INPUT);

    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for f in [&a, &b] {
        tokbin(&["sweep", "--graph", "path:5", "--mode", "random", "--count", "1000", "--seed", "1", "--out", p(f)]);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn failing_sweep_writes_a_replayable_witness() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.jsonl");
    let (code, out) = tokbin(&["sweep", "--graph", "suite:C3", "--variant", "no-er-rank", "--witness-out", p(&witness)]);
    assert_eq!(code, EXIT_FAILED, "{out}");
    let file = TraceFile::read(BufReader::new(std::fs::File::open(&witness).unwrap())).unwrap();
    let audit = file.audit().unwrap();
    assert!(audit.findings.iter().all(|f| matches!(f, tokbin::trace::Finding::Lemma(_))));
}
