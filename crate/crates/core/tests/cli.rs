use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn chromideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chromideal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = chromideal(&full);
    let value =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), value)
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn invariants_of_c9() {
    let (code, v) = json(&["invariants", "--builtin", "cycle:9"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["chi"], 3);
    assert_eq!(v["results"]["critical"], true);
    assert_eq!(v["results"]["chi_f"], "9/4");
    assert_eq!(v["inputs"]["graph"]["n"], 9);
}

#[test]
fn invariants_with_bfold() {
    let (code, v) = json(&["invariants", "--builtin", "complete:4", "--bfold", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["chi_b"][0]["b"], 2);
    assert_eq!(v["results"]["chi_b"][0]["value"], 8);
}

#[test]
fn invariants_of_antihole() {
    let (_, v) = json(&["invariants", "--builtin", "antihole:7", "--bfold", "1,2"]);
    assert_eq!(v["results"]["chi"], 4);
    assert_eq!(v["results"]["chi_f"], "7/2");
    assert_eq!(v["results"]["chi_f_window"], true);
    assert_eq!(v["results"]["chi_b"][1]["value"], 7);
}

#[test]
fn decompose_c5() {
    let (code, v) = json(&["decompose", "--builtin", "cycle:5", "--power", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["component_count"], 5);
    assert_eq!(v["results"]["components"][0], serde_json::json!(["x1^1", "x2^1"]));

    let (_, v) = json(&["decompose", "--builtin", "cycle:5", "--power", "2"]);
    let components = v["results"]["components"].as_array().unwrap();
    let full = serde_json::json!(["x1^2", "x2^2", "x3^2", "x4^2", "x5^2"]);
    assert!(components.contains(&full));
    assert!(v["results"]["associated_primes"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([0, 1, 2, 3, 4])));
}

#[test]
fn decompose_engines_agree() {
    let (_, a) = json(&["decompose", "--builtin", "petersen", "--power", "2"]);
    let (_, b) = json(&[
        "decompose",
        "--builtin",
        "petersen",
        "--power",
        "2",
        "--engine",
        "splitting",
    ]);
    assert_eq!(a["results"], b["results"]);
}

#[test]
fn decompose_without_edges_is_an_input_error() {
    let out = chromideal(&["decompose", "--builtin", "path:1", "--power", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no edges"));
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_checks() {
    let (code, v) = json(&[
        "verify",
        "--builtin",
        "cycle:5",
        "--power",
        "2",
        "correspondence",
        "--converse",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["all_verified"], true);
    assert_eq!(v["results"]["converse_candidates"], 242);

    let (code, v) = json(&["verify", "--builtin", "cycle:7", "--power", "1", "persistence"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["holds"], true);

    let (code, v) = json(&[
        "verify",
        "--builtin",
        "complete:3",
        "technical-lemma",
        "--W",
        "0",
        "--b",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["holds"], true);
    assert_eq!(v["results"]["d"], 4);
}

#[test]
fn conjecture_search() {
    let (code, v) = json(&["conjecture", "--builtin", "cycle:5"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["witness"]["expanded_chi"], 4);
    assert_eq!(v["results"]["witness"]["w"], serde_json::json!([0, 2]));

    let (code, v) = json(&["conjecture", "--builtin", "cycle:5", "--W", "1,3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["probe"]["expanded_critical"], true);

    let (code, v) = json(&["conjecture", "--builtin", "mycielski-cycle:9"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["witness"]["expanded_chi"], 5);
}

#[test]
fn probe_that_is_not_a_witness_exits_one() {
    let (code, v) = json(&["conjecture", "--builtin", "cycle:9", "--W", "1,4,7"]);
    assert_eq!(code, 1);
    assert_eq!(v["passed"], false);
    assert_eq!(v["results"]["probe"]["expanded_chi"], 3);
}

#[test]
fn conjecture_on_non_critical_graph_is_an_error() {
    let out = chromideal(&["conjecture", "--builtin", "cycle:6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not critical"));
}

#[test]
fn edge_list_on_stdin() {
    let out = with_stdin(&["--json", "invariants"], "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["chi_f"], "5/2");
    assert_eq!(v["inputs"]["graph"]["name"], "stdin");
}

#[test]
fn graph6_file_input() {
    let dir = std::env::temp_dir().join(format!("chromideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.g6");
    std::fs::write(&path, "Dhc\n").unwrap();
    let (code, v) = json(&["invariants", "--file", path.to_str().unwrap(), "--format", "graph6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["chi"], 3);
    assert_eq!(v["inputs"]["graph"]["format"], "graph6");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn malformed_input_exits_two() {
    let out = with_stdin(&["invariants"], "3 2\n0 1\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("header announces 2 edges"));
    let out = chromideal(&["invariants", "--builtin", "wheel:5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = chromideal(&["invariants", "--file", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));
    let out = chromideal(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_over_connected_graphs() {
    let (code, v) = json(&["sweep", "--connected", "4", "--s-max", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["graphs"], 1 + 2 + 6);
    assert_eq!(v["results"]["clean"], true);
}

#[test]
fn sweep_over_graph6_corpus_on_stdin() {
    let out = with_stdin(&["--json", "sweep", "--s-max", "1"], "Dhc\nBw\n");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["graphs"], 2);
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        &["--json", "invariants", "--builtin", "petersen", "--bfold", "2,3"][..],
        &["--json", "decompose", "--builtin", "cycle:7", "--power", "2"],
        &["conjecture", "--builtin", "mycielski-cycle:5"],
    ] {
        let a = chromideal(args);
        let b = chromideal(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn json_keys_are_sorted() {
    let out = chromideal(&["--json", "invariants", "--builtin", "cycle:5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let top: Vec<usize> = ["\"command\"", "\"inputs\"", "\"passed\"", "\"results\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(top.windows(2).all(|w| w[0] < w[1]));
    assert!(!text.contains("timing_ms"));
}

#[test]
fn timing_is_opt_in() {
    let (_, v) = json(&["--timing", "invariants", "--builtin", "cycle:5"]);
    assert!(v["timing_ms"].as_f64().unwrap() >= 0.0);
    let out = chromideal(&["--timing", "invariants", "--builtin", "cycle:5"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("timing_ms:"));
}

#[test]
fn thread_count_from_environment() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_chromideal"))
            .env("CE_THREADS", threads)
            .args(["--json", "conjecture", "--builtin", "mycielski-cycle:9"])
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let bad = run("zero");
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("CE_THREADS"));
}

#[test]
fn help_exits_zero() {
    let out = chromideal(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("decompose"));
}

#[test]
fn in_process_runner() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = chromideal::cli::run(
        ["chromideal", "--json", "invariants"],
        &mut "3 3\n0 1\n1 2\n0 2\n".as_bytes(),
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["results"]["chi"], 3);
    assert!(err.is_empty());
}
