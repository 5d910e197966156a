use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coordination"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn table_s_csv() {
    assert_eq!(
        stdout(&["table", "S", "5", "5", "--format", "csv"]),
        "1,1,1,1,1\n0,2,4,6,8\n0,2,8,18,32\n0,2,12,38,88\n0,2,16,66,192\n"
    );
}

#[test]
fn table_d_json() {
    let v: Value = serde_json::from_str(&stdout(&["table", "D", "5", "5", "--format", "json"])).unwrap();
    assert_eq!(v["family"], "D");
    assert_eq!(v["rows"][4][4], 321);
    assert_eq!(v["rows"][3][3], 63);
}

#[test]
fn triangle_and_single_cell() {
    assert_eq!(
        stdout(&["table", "c-tri", "5", "--format", "csv"]),
        "1\n2,1\n2,4,1\n2,8,6,1\n2,12,18,8,1\n"
    );
    assert_eq!(stdout(&["table", "D", "1", "1", "--format", "csv"]), "1\n");
    assert_eq!(stdout(&["table", "L(3)", "2", "3", "--format", "csv"]), "1,1,1\n3,5,7\n");
}

#[test]
fn bad_family_is_a_usage_error() {
    let out = run(&["table", "Q", "3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown family"));
}

#[test]
fn series_outputs() {
    assert_eq!(stdout(&["series", "C", "5", "--format", "csv"]), "n,value\n0,1\n1,4\n2,18\n3,88\n4,450\n");
    let v: Value = serde_json::from_str(&stdout(&["series", "r", "5", "--format", "json"])).unwrap();
    assert_eq!(v["terms"], serde_json::json!([1, 2, 6, 22, 90]));
    let big: Value = serde_json::from_str(&stdout(&["series", "D", "40", "--format", "json"])).unwrap();
    // D_39 exceeds 64 bits and is carried as a string.
    assert!(big["terms"][39].is_string());
}

#[test]
fn verify_hankel_report() {
    let args = ["verify", "hankel", "--N", "8", "--no-timing", "--format", "json"];
    let text = stdout(&args);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["suite"], "hankel");
    assert_eq!(v["params"]["N"], 8);
    let checks = v["checks"].as_array().unwrap();
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(checks.iter().all(|c| c["verdict"] == "pass"));
    assert!(checks.iter().all(|c| c.get("millis").is_none()));
    let c = checks.iter().find(|c| c["id"] == "hankel.sm.C").unwrap();
    assert_eq!(c["witness"]["verdict"], "not-sm");
    assert_eq!(c["witness"]["h"], -4);
    assert_eq!(c["witness"]["n"], 2);
    // Byte-identical on a second run.
    assert_eq!(stdout(&args), text);
}

#[test]
fn verify_csv_has_header() {
    let text = stdout(&["verify", "riordan", "--smoke", "--no-timing", "--format", "csv"]);
    assert!(text.starts_with("id,paper_ref,verdict,witness,millis\n"));
    assert!(text.lines().skip(1).all(|l| l.contains(",PASS,")));
}

#[test]
fn failing_check_sets_exit_status() {
    // With only five rows there is nothing to compare the N = 5 density against.
    let out = run(&["verify", "zeros", "--max-n", "5", "--no-timing", "--format", "json"]);
    assert!(!out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let density = v["checks"].as_array().unwrap().iter().find(|c| c["id"] == "zeros.density").unwrap();
    assert_eq!(density["verdict"], "fail");
}

#[test]
fn verify_all_smoke() {
    let start = std::time::Instant::now();
    let out = run(&["verify", "all", "--smoke", "--no-timing", "--seed", "7"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert!(v["checks"].as_array().unwrap().len() > 40);
    assert!(start.elapsed().as_secs() < 60);
}
