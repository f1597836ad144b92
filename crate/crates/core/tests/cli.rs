//! Command-line behaviour: golden reports, determinism and exit codes.
//! Set `UPDATE_GOLDEN=1` to rewrite the golden files after an intended
//! change.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn hfusion(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hfusion")).args(args).output().expect("binary runs")
}

fn check_golden(command: &str, grid: &str) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let grid = golden_dir().join(grid);
    let status = hfusion(&["--grid", grid.to_str().unwrap(), "--out", out.to_str().unwrap(), command]);
    assert_eq!(status.status.code(), Some(0), "{}", String::from_utf8_lossy(&status.stderr));
    let got = std::fs::read_to_string(&out).unwrap();
    let golden = golden_dir().join(format!("{command}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&golden, &got).unwrap();
    }
    let want = std::fs::read_to_string(&golden).expect("golden file exists; run with UPDATE_GOLDEN=1");
    assert!(got == want, "{command} output differs from {}", golden.display());
}

#[test]
fn golden_generators() {
    check_golden("generators", "grid.txt");
}

#[test]
fn golden_potential() {
    check_golden("potential", "grid.txt");
}

#[test]
fn golden_quotient() {
    check_golden("quotient", "grid.txt");
}

#[test]
fn golden_verlinde() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("classical.txt");
    let text = std::fs::read_to_string(golden_dir().join("grid.txt")).unwrap();
    let classical: String = text.lines().filter(|l| l.starts_with("classical")).map(|l| format!("{l}\n")).collect();
    std::fs::write(&grid, classical).unwrap();
    let out = dir.path().join("report.json");
    let run = hfusion(&["verlinde", "--grid", grid.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(0));
    let got = std::fs::read_to_string(&out).unwrap();
    let golden = golden_dir().join("verlinde.json");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&golden, &got).unwrap();
    }
    assert_eq!(got, std::fs::read_to_string(&golden).unwrap());
}

#[test]
fn golden_koszul() {
    check_golden("koszul", "koszul_grid.txt");
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["--classical", "3,2", "quotient"];
    let a = hfusion(&args);
    let b = hfusion(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = ["--format", "text", "--rank", "3", "--functor", "1,1", "koszul"];
    assert_eq!(hfusion(&text).stdout, hfusion(&text).stdout);
}

#[test]
fn threads_do_not_change_output() {
    let grid = golden_dir().join("grid.txt");
    let serial = hfusion(&["generators", "--grid", grid.to_str().unwrap()]);
    let parallel = Command::new(env!("CARGO_BIN_EXE_hfusion"))
        .env("HFUSION_THREADS", "4")
        .args(["generators", "--grid", grid.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn documented_examples() {
    let run = hfusion(&["--classical", "2,1", "quotient"]);
    assert_eq!(run.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["report"]["result"]["dimension"], 2);

    let run = hfusion(&["--rank", "2", "--functor", "0,1", "generators"]);
    let v: Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(v["report"]["result"]["symmetric"][0], "1");
    assert_eq!(v["report"]["result"]["unit_ideal"], true);

    let run = hfusion(&["--classical", "3,1", "verlinde"]);
    let v: Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(v["report"]["result"]["match"], true);
    assert_eq!(v["report"]["result"]["dimension"], 3);
}

#[test]
fn exit_codes() {
    assert_eq!(hfusion(&["quotient"]).status.code(), Some(2));
    assert_eq!(hfusion(&["--classical", "2", "quotient"]).status.code(), Some(2));
    assert_eq!(hfusion(&["--rank", "2", "--functor", "1", "quotient"]).status.code(), Some(2));
    assert_eq!(hfusion(&["--classical", "2,1", "--degree-window", "5,1", "koszul"]).status.code(), Some(2));
    assert_eq!(hfusion(&["--help"]).status.code(), Some(0));
    // a window too narrow to leave any unflagged degree cannot certify anything
    let narrow = hfusion(&["--classical", "2,1", "--degree-window", "0,2", "koszul"]);
    assert_eq!(narrow.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&narrow.stdout).unwrap();
    assert!(v["report"]["result"]["cohomology"]["warning"]["unreliable"].as_array().unwrap().len() == 3);
}

#[test]
fn text_format_renders_aligned_lines() {
    let run = hfusion(&["--classical", "2,1", "--format", "text", "quotient"]);
    let text = String::from_utf8(run.stdout).unwrap();
    let width = text.lines().map(|l| l.find("  ").unwrap()).max().unwrap();
    assert!(text.lines().any(|l| l.starts_with("report.result.dimension") && l.trim_end().ends_with(" 2")));
    assert!(text.lines().all(|l| l.len() > width));
}
