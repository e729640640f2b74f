use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_copnumlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_reports_witnesses() {
    let o = run(&["classify", "C5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("Dhc"));
    assert!(s.lines().any(|l| l.contains("(P5,C5)-free") && l.contains("induced C5")));
}

#[test]
fn copnumber() {
    let o = run(&["copnumber", "petersen"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains('3'));
    let o = run(&["copnumber", "C4", "--kmax", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn play_emits_json_lines() {
    let o = run(&["play", "petersen", "--strategy", "p3p1"]);
    assert_eq!(o.status.code(), Some(2), "Petersen is not P3 + P1-free");
    let o = run(&["play", "C5"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .filter(|l| l.starts_with('{'))
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(lines.len() >= 2);
    for robber in ["random", "greedy-far"] {
        let o = run(&["play", "K2,2,2", "--robber", robber, "--seed", "3"]);
        assert_eq!(o.status.code(), Some(0), "{robber}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn verify_writes_report() {
    let dir = std::env::temp_dir().join(format!("copnumlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("r.json");
    let o = run(&["verify", "--theorem", "paw", "--nmax", "6", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["failures"].as_array().unwrap().len(), 0);
    assert_eq!(r["graphs_tested"], r["captures"]);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--theorem", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "not-a-graph-!!"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["play", "C5", "--strategy", "nope"]).status.code(), Some(2));
}
