use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_walkhde"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = if stdout.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&stdout).expect("stdout is JSON")
    };
    (out.status.code().unwrap(), json, String::from_utf8(out.stderr).unwrap())
}

fn code(args: &[&str]) -> i32 {
    run(args).0
}

fn graph_file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn without_timing(text: &str) -> String {
    let mut v: Value = serde_json::from_str(text).unwrap();
    v.as_object_mut().unwrap().remove("timing");
    serde_json::to_string(&v).unwrap()
}

#[test]
fn hde_flagship_t1() {
    let (c, v, _) = run(&["hde", "--f1", "union:2*path:0+1*path:3", "--f2", "path:1"]);
    assert_eq!(c, 0);
    assert_eq!(v["result"]["hde"], "3/1");
    assert_eq!(v["result"]["verified"], true);
    assert!(v["result"]["lp"]["vars"].as_u64().unwrap() > 0);
    assert_eq!(v["tool"], format!("walkhde {}", env!("CARGO_PKG_VERSION")));
    assert_eq!(v["config"]["command"]["subcommand"], "hde");
}

#[test]
fn hde_trivial_and_gates() {
    let (c, v, _) = run(&["hde", "--f1", "path:1", "--f2", "path:1"]);
    assert_eq!((c, v["result"]["hde"].as_str()), (0, Some("1/1")));
    assert_eq!(code(&["hde", "--f1", "cycle:4", "--f2", "path:2"]), 3);
    assert_eq!(code(&["hde", "--f1", "path:2", "--f2", "complete:4"]), 3);
    assert_eq!(code(&["hde", "--f1", "path:x", "--f2", "path:2"]), 2);
    assert_eq!(code(&["hde", "--f1", "path:2"]), 2);
}

#[test]
fn hde_reads_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let p2 = graph_file(dir.path(), "p2.txt", "3 2\n0 1\n1 2\n");
    let (c, v, _) = run(&["hde", "--f1", s(&p2), "--f2", "path:2"]);
    assert_eq!((c, v["result"]["hde"].as_str()), (0, Some("1/1")));
}

#[test]
fn walks_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let p2 = graph_file(dir.path(), "p2.txt", "3 2\n0 1\n1 2\n");
    let (c, v, _) = run(&["walks", s(&p2), "--k", "3"]);
    assert_eq!(c, 0);
    let r = &v["result"];
    assert_eq!(
        (r["walks"].as_str(), r["w_k"].as_str(), r["d"].as_str()),
        (Some("8"), Some("8/3"), Some("4/3"))
    );
    let (_, v, _) = run(&["walks", s(&p2), "--k", "0"]);
    assert_eq!(v["result"]["walks"], "3");
    let star = graph_file(dir.path(), "star.txt", "4 3\n0 1\n0 2\n0 3\n");
    let (_, v, _) = run(&["walks", s(&star), "--k", "1"]);
    assert_eq!(v["result"]["w_k"], v["result"]["d"]);
}

#[test]
fn walks_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = graph_file(dir.path(), "bad.txt", "3 2\n0 1\n");
    assert_eq!(code(&["walks", s(&bad), "--k", "2"]), 2);
    let empty = graph_file(dir.path(), "empty.txt", "0 0\n");
    assert_eq!(code(&["walks", s(&empty), "--k", "2"]), 2);
    assert_eq!(code(&["walks", "/nonexistent/graph.txt", "--k", "2"]), 2);
}

#[test]
fn verify_exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (
            &[
                "--mode",
                "walk-inequality",
                "--t",
                "3",
                "--k",
                "5",
                "--exhaustive-n",
                "5",
            ],
            0,
        ),
        (
            &[
                "--mode",
                "walk-inequality",
                "--t",
                "2",
                "--k",
                "3",
                "--exhaustive-n",
                "3",
            ],
            1,
        ),
        (
            &[
                "--mode",
                "counterexample",
                "--t",
                "2",
                "--k",
                "3",
                "--exhaustive-n",
                "3",
            ],
            0,
        ),
        (
            &["--mode", "counterexample", "--t", "2", "--k", "3", "--regular", "5"],
            1,
        ),
        (
            &[
                "--mode",
                "counterexample",
                "--t",
                "3",
                "--k",
                "5",
                "--exhaustive-n",
                "3",
            ],
            2,
        ),
        (&["--mode", "chain", "--t", "3", "--k", "9"], 0),
        (&["--mode", "chain", "--t", "2", "--k", "9"], 2),
        (&["--mode", "chain", "--t", "1", "--k", "5", "--exhaustive-n", "4"], 0),
        (&["--mode", "blakley-roy", "--k", "3", "--exhaustive-n", "4"], 0),
        (
            &["--mode", "density-form", "--t", "1", "--k", "3", "--exhaustive-n", "4"],
            0,
        ),
        (
            &[
                "--mode",
                "density-form",
                "--t",
                "2",
                "--k",
                "3",
                "--stars-and-paths",
                "5",
                "--expect",
                "violation",
            ],
            0,
        ),
        (&["--mode", "lemma-identity", "--t", "4", "--batch", "3"], 0),
        (
            &[
                "--mode",
                "hde-definition",
                "--f1",
                "union:2*path:0+1*path:3",
                "--f2",
                "path:1",
                "--c",
                "3",
                "--exhaustive-n",
                "4",
            ],
            0,
        ),
        (
            &[
                "--mode",
                "hde-definition",
                "--f1",
                "union:2*path:0+1*path:3",
                "--f2",
                "path:1",
                "--c",
                "31/10",
                "--exhaustive-n",
                "3",
            ],
            1,
        ),
        (
            &[
                "--mode",
                "hde-definition",
                "--f1",
                "path:1",
                "--f2",
                "path:1",
                "--c",
                "-1/2",
                "--exhaustive-n",
                "3",
            ],
            2,
        ),
        (
            &[
                "--mode",
                "walk-inequality",
                "--t",
                "1",
                "--k",
                "3",
                "--exhaustive-n",
                "7",
            ],
            2,
        ),
        (&["--mode", "walk-inequality", "--t", "1", "--k", "3"], 2),
        (&["--mode", "walk-inequality", "--k", "3", "--exhaustive-n", "3"], 2),
        (
            &[
                "--mode",
                "walk-inequality",
                "--t",
                "1",
                "--k",
                "3",
                "--exhaustive-n",
                "3",
                "--regular",
                "3",
            ],
            2,
        ),
        (&["--mode", "no-such-mode"], 2),
    ];
    for (args, expected) in cases {
        let mut full = vec!["verify"];
        full.extend_from_slice(args);
        assert_eq!(code(&full), *expected, "{args:?}");
    }
}

#[test]
fn counterexample_witness_is_p2() {
    let (_, v, _) = run(&[
        "verify",
        "--mode",
        "counterexample",
        "--t",
        "2",
        "--k",
        "3",
        "--exhaustive-n",
        "3",
    ]);
    let w = &v["result"]["report"]["witnesses"][0];
    assert_eq!((w["lhs"].as_str(), w["rhs"].as_str()), (Some("64/9"), Some("8/1")));
    let graph = w["graph"].as_str().unwrap();
    assert!(graph.starts_with("3 2\n"), "{graph}");
}

#[test]
fn chain_reports_product() {
    let (_, v, _) = run(&["verify", "--mode", "chain", "--t", "3", "--k", "9"]);
    assert_eq!(v["result"]["product"], "3/1");
}

#[test]
fn certificate_values() {
    let (c, v, _) = run(&["certificate", "--t", "1", "--batch", "4"]);
    assert_eq!(c, 0);
    assert_eq!(v["result"]["upper"], "3/1");
    assert_eq!(v["result"]["lower"].as_array().unwrap().len(), 4);
    assert!(v["result"]["lower"].as_array().unwrap().iter().all(|x| x == "3/1"));
    let (c, v, _) = run(&["certificate", "--t", "3", "--batch", "3"]);
    assert_eq!((c, v["result"]["upper"].as_str()), (0, Some("5/1")));
    assert_eq!(code(&["certificate", "--t", "2"]), 2);
}

#[test]
fn dump_polytope_lists_rows() {
    let (c, v, _) = run(&["dump-polytope", "--f2", "path:1"]);
    assert_eq!(c, 0);
    let rows = v["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), v["result"]["constraints"].as_u64().unwrap() as usize);
    assert!(rows
        .iter()
        .any(|r| r == "submodular: 1/1*p[] + 1/1*p[0,1] + -1/1*p[0] + -1/1*p[1] <= 0/1"));
    let (_, u, _) = run(&["dump-polytope", "--f2", "empty:2", "--unpruned"]);
    let (_, p, _) = run(&["dump-polytope", "--f2", "empty:2"]);
    assert!(u["result"]["constraints"].as_u64() > p["result"]["constraints"].as_u64());
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let (c, v, _) = run(&["--out", s(&out), "verify", "--mode", "chain", "--t", "1", "--k", "7"]);
    assert_eq!((c, v), (0, Value::Null));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written["result"]["product"], "7/1");
    assert!(written["timing"]["elapsed_ms"].is_u64());
}

#[test]
fn replay_is_byte_identical_modulo_timing() {
    let dir = tempfile::tempdir().unwrap();
    let p2 = graph_file(dir.path(), "p2.txt", "3 2\n0 1\n1 2\n");
    let runs: Vec<Vec<&str>> = vec![
        vec!["hde", "--f1", "union:2*path:0+1*path:3", "--f2", "path:1"],
        vec!["walks", s(&p2), "--k", "4"],
        vec![
            "verify",
            "--mode",
            "walk-inequality",
            "--t",
            "1",
            "--k",
            "5",
            "--samples",
            "30",
            "--n",
            "7",
            "--edge-prob",
            "2/5",
            "--seed",
            "17",
        ],
        vec![
            "verify",
            "--mode",
            "lemma-identity",
            "--t",
            "3",
            "--batch",
            "4",
            "--seed",
            "3",
        ],
        vec!["certificate", "--t", "3", "--batch", "2", "--seed", "5"],
    ];
    for (i, args) in runs.iter().enumerate() {
        let first = dir.path().join(format!("first{i}.json"));
        let second = dir.path().join(format!("second{i}.json"));
        let mut full = vec!["--out", s(&first)];
        full.extend_from_slice(args);
        assert_eq!(code(&full), 0, "{args:?}");
        assert_eq!(code(&["--out", s(&second), "replay", "--config", s(&first)]), 0);
        let a = std::fs::read_to_string(&first).unwrap();
        let b = std::fs::read_to_string(&second).unwrap();
        assert_eq!(without_timing(&a), without_timing(&b), "{args:?}");
        let strip = |t: &str| {
            t.lines()
                .filter(|l| !l.contains("timestamp") && !l.contains("elapsed_ms"))
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(strip(&a), strip(&b));
    }
}

#[test]
fn replay_rejects_garbage() {
    let dir = tempfile::tempdir().unwrap();
    let junk = graph_file(dir.path(), "junk.json", "{\"config\": 5}");
    assert_eq!(code(&["replay", "--config", s(&junk)]), 2);
    assert_eq!(code(&["replay", "--config", "/nonexistent.json"]), 2);
}
