use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use floorsq_cli::output::RunManifest;

fn floorsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_floorsq")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{}-{name}", std::process::id()))
}

#[test]
fn exit_codes() {
    assert_eq!(code(&floorsq(&["enum", "--alpha", "1/2", "--x", "100"])), 0);
    assert_eq!(code(&floorsq(&["verify", "--alpha", "1/2", "--idx", "2,3,4"])), 1);
    assert_eq!(code(&floorsq(&["enum", "--alpha", "abc", "--x", "10"])), 2);
    assert_eq!(code(&floorsq(&["enum", "--alpha", "3/2", "--x", "10"])), 2);
    assert_eq!(code(&floorsq(&["enum", "--alpha", "1/2", "--x", "100", "--abox", "1,2"])), 2);
    assert_eq!(code(&floorsq(&["nonsense"])), 2);
    assert_eq!(code(&floorsq(&["enum", "--alpha", "1/2", "--x", "100000", "--memory-mib", "1"])), 3);
    assert_eq!(code(&floorsq(&["enum", "--alpha", "1/2", "--x", "5000000000"])), 3);
}

#[test]
fn unverified_note_goes_to_stderr() {
    let out = floorsq(&["verify", "--alpha", "1/2", "--idx", "2,3,4"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("failing sums"), "{err}");
    assert_eq!(json(&out)["result"]["verified"], Value::Bool(false));
}

#[test]
fn json_is_reproducible_across_runs_and_workers() {
    let args = ["enum", "--alpha", "11/20", "--x", "400"];
    let a = floorsq(&args);
    let b = floorsq(&args);
    assert_eq!(a.stdout, b.stdout);
    let one = floorsq(&[&args[..], &["--workers", "1"]].concat());
    let two = floorsq(&[&args[..], &["--workers", "2"]].concat());
    let strip = |o: &Output| {
        let mut v = json(o);
        v["manifest"].as_object_mut().unwrap().remove("workers");
        v
    };
    assert_eq!(strip(&one), strip(&two));
    assert_eq!(json(&two)["manifest"]["workers"], 2);
}

#[test]
fn seeded_equidist_is_reproducible() {
    let args = ["equidist", "--n", "50", "--count", "3", "--seed", "7"];
    assert_eq!(floorsq(&args).stdout, floorsq(&args).stdout);
    let other = floorsq(&["equidist", "--n", "50", "--count", "3", "--seed", "8"]);
    assert_ne!(floorsq(&args).stdout, other.stdout);
    assert_eq!(json(&other)["manifest"]["parameters"]["seed"], "8");
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&floorsq(&["vsearch", "--x", "2000"]));
    assert!(plain["manifest"].get("wall_time_ms").is_none());
    let timed = json(&floorsq(&["vsearch", "--x", "2000", "--timing"]));
    assert!(timed["manifest"]["wall_time_ms"].is_u64());
}

#[test]
fn manifest_round_trips() {
    let out = json(&floorsq(&["figure", "--alpha", "1/2", "--x", "200"]));
    let m: RunManifest = serde_json::from_value(out["manifest"].clone()).unwrap();
    assert_eq!(m.subcommand, "figure");
    assert_eq!(m.parameters["alpha"], "1/2");
    assert_eq!(serde_json::to_value(&m).unwrap(), out["manifest"]);
}

#[test]
fn csv_is_two_column_headerless() {
    let out = floorsq(&["figure", "--alpha", "1/2", "--x", "300", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<(u64, u64)> = text
        .lines()
        .map(|l| {
            let (a, b) = l.split_once(',').unwrap();
            (a.parse().unwrap(), b.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.first().map(|r| r.0), Some(2));
    assert_eq!(rows.last().map(|r| r.0), Some(300));
    assert!(rows.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 <= w[1].1));
    let enumerated = json(&floorsq(&["enum", "--alpha", "1/2", "--x", "300"]));
    assert_eq!(enumerated["result"]["count_t"], rows.last().unwrap().1);
}

#[test]
fn csv_rejected_where_unsupported() {
    let out = floorsq(&["construct", "--family", "floor", "--alpha", "1/2", "--n", "1", "--format", "csv"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn out_flag_writes_file() {
    let path = scratch("figure.csv");
    let p = path.to_str().unwrap();
    let out = floorsq(&["figure", "--alpha", "1/2", "--x", "100", "--format", "csv", "--out", p]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.lines().last().unwrap().starts_with("100,"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn floor_family_example() {
    let out = floorsq(&["construct", "--family", "floor", "--alpha", "1/2", "--n", "1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"]["indices"], serde_json::json!(["12", "12", "71"]));
    assert_eq!(v["result"]["record"]["verified"], Value::Bool(true));
}

#[test]
fn ceiling_at_one_is_empty() {
    let v = json(&floorsq(&["enum", "--alpha", "1/1", "--x", "100", "--bar"]));
    assert_eq!(v["result"]["count_t"], 0);
    assert_eq!(v["result"]["index_triples"], serde_json::json!([]));
}

#[test]
fn table1_single_row() {
    let out = floorsq(&["table1", "--alpha", "1/2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"]["rows"][0]["count_u"], 15);
    assert_eq!(v["result"]["all_match"], Value::Bool(true));
}

#[test]
fn vsearch_matches_golden() {
    let out = floorsq(&["vsearch"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["result"]["triples"].as_array().unwrap().len(), 7);
}

#[test]
fn fit_from_saved_figure_reproduces() {
    let path = scratch("fit.csv");
    let p = path.to_str().unwrap();
    let saved = floorsq(&["figure", "--alpha", "1/10", "--x", "5000", "--format", "csv", "--out", p]);
    assert_eq!(code(&saved), 0);
    let direct = json(&floorsq(&["fit", "--alpha", "1/10", "--x", "5000"]));
    let refit = json(&floorsq(&["fit", "--input", p]));
    std::fs::remove_file(path).unwrap();
    for key in ["dense", "jumps"] {
        assert_eq!(direct["result"][key], refit["result"][key], "{key}");
    }
}

#[test]
fn homog_scan_and_bridge() {
    let v = json(&floorsq(&["homog", "--alpha", "1/2", "--n", "200"]));
    assert_eq!(v["result"]["density"], "1/1");
    let out = floorsq(&["homog", "--alpha", "1/2", "--n", "3", "--bridge", "240,117,44,267,244,125"]);
    assert_eq!(code(&out), 0);
}
