use std::process::Command;

use latin_hadamard::coloring::{is_latin_hadamard, SignedLatinSquare};
use latin_hadamard::LatinSquare;
use serde_json::Value;

fn lh(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lh"))
        .args(args)
        .env_remove("LH_SEED")
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = lh(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn enumerate_valid_only_lists_sixteen() {
    let v = json(&["enumerate", "--w", "3", "--valid-only", "--format", "json"]);
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 16);
    for r in records {
        assert_eq!(r["w"], 3);
        assert_eq!(r["latin_hadamard"], true);
        assert_eq!(r["choices"].as_str().unwrap().len(), 4);
        // Round trip through the emitted JSON.
        let rows: Vec<Vec<i64>> = serde_json::from_value(r["H"].clone()).unwrap();
        let h = SignedLatinSquare::from_rows(&rows).unwrap();
        assert_eq!(h.rows(), rows);
        assert!(is_latin_hadamard(&h));
    }
}

#[test]
fn enumerate_order_sixteen_has_no_survivor() {
    let v = json(&["enumerate", "--w", "4", "--valid-only"]);
    assert!(v.as_array().unwrap().is_empty());
    let all = json(&["enumerate", "--w", "4", "--threads", "2"]);
    assert_eq!(all.as_array().unwrap().len(), 2048);
}

#[test]
fn construct_round_trip() {
    let v = json(&["construct", "--w", "4"]);
    let rows: Vec<Vec<u32>> = serde_json::from_value(v["entries"].clone()).unwrap();
    assert_eq!(LatinSquare::from_rows(&rows).unwrap(), LatinSquare::new(4));
    let (code, csv, _) = lh(&["construct", "--w", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv, "c1,c2,c3,c4\n1,2,3,4\n2,1,4,3\n3,4,1,2\n4,3,2,1\n");
}

#[test]
fn size_guard_and_bad_input() {
    let (code, _, err) = lh(&["construct", "--w", "9"]);
    assert_eq!(code, 1);
    assert!(err.contains("limit"));
    assert_eq!(lh(&["construct", "--w", "2", "--nope"]).0, 1);
    assert_eq!(lh(&["design", "--show", "--verify"]).0, 1);
    assert_eq!(
        lh(&[
            "decompose",
            "--p",
            "0.5,0.6",
            "--counts",
            "1,2",
            "--matrix",
            "builtin4:0"
        ])
        .0,
        1
    );
    assert_eq!(lh(&["power", "--alt", "beta:1,2"]).0, 1);
    assert_eq!(lh(&["enumerate", "--w", "5"]).0, 1);
}

#[test]
fn sedenion_zero_divisor_listing() {
    let (code, out, _) = lh(&[
        "algebra",
        "--dim",
        "16",
        "--report",
        "zero-divisors",
        "--format",
        "pretty",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(!lines.is_empty());
    assert!(lines
        .iter()
        .all(|l| l.starts_with("(e_") && l.ends_with(") = 0")));
    let v = json(&["algebra", "--dim", "8", "--report", "zero-divisors"]);
    assert_eq!(v["count"], 0);
}

#[test]
fn algebra_from_coloring_file() {
    let dir = std::env::temp_dir().join(format!("lh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h.json");
    let (code, _, _) = lh(&[
        "enumerate",
        "--w",
        "3",
        "--valid-only",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let v = json(&[
        "algebra",
        "--from-coloring",
        path.to_str().unwrap(),
        "--report",
        "zero-divisors",
    ]);
    assert_eq!(v["count"], 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn design_subcommands() {
    let v = json(&["design", "--verify"]);
    assert_eq!(v["verified"], true);
    let v = json(&["design", "--verify", "--printed"]);
    assert_eq!(v["verified"], false);
    let (_, pretty, _) = lh(&["design", "--show", "--format", "pretty"]);
    assert_eq!(pretty.lines().count(), 16);
    assert!(pretty
        .lines()
        .next()
        .unwrap()
        .trim_start()
        .starts_with("+x1"));
    let q = "0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625";
    let v = json(&["design", "--eigenbasis", "--pvars", q]);
    assert!(v["orthonormality_error"].as_f64().unwrap() < 1e-12);
}

#[test]
fn decompose_json_schema() {
    let v = json(&[
        "decompose",
        "--p",
        "preset b",
        "--counts",
        "12,19,33,38,41,29,18,10",
    ]);
    assert!(v["X2"].as_f64().unwrap() > 0.0);
    assert_eq!(v["components"].as_array().unwrap().len(), 7);
    assert!(v["sum_check"].as_f64().unwrap().abs() < 1e-10);
    let v = json(&[
        "decompose", "--p", "0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625,0.0625",
        "--counts", "3,4,5,6,7,8,9,10,3,4,5,6,7,8,9,10", "--matrix", "sylvester",
    ]);
    assert_eq!(v["components"].as_array().unwrap().len(), 15);
    assert!(v["sum_check"].as_f64().unwrap().abs() < 1e-10);
}

#[test]
fn power_csv_header_and_seed_override() {
    let args = [
        "power",
        "--alt",
        "normal:0,1.3",
        "--reps",
        "300",
        "--format",
        "csv",
        "--seed",
        "4",
    ];
    let (code, a, _) = lh(&args);
    assert_eq!(code, 0);
    assert!(a.starts_with("statistic,rate,se\nX2,"));
    assert_eq!(a.lines().count(), 9);
    let out = Command::new(env!("CARGO_BIN_EXE_lh"))
        .args([
            "power",
            "--alt",
            "normal:0,1.3",
            "--reps",
            "300",
            "--format",
            "csv",
            "--seed",
            "999",
        ])
        .env("LH_SEED", "4")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), a);
}
