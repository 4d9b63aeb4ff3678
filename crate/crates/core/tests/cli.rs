use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn bielliptic(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_bielliptic")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let run = bielliptic(args);
    assert_eq!(run.code, 0, "{args:?}: {}", run.stderr);
    serde_json::from_str(&run.stdout).unwrap()
}

macro_rules! golden {
    ($name:ident, $file:literal, $($arg:literal),+) => {
        #[test]
        fn $name() {
            let run = bielliptic(&[$($arg),+]);
            assert_eq!(run.code, 0);
            assert_eq!(run.stdout, include_str!(concat!("golden/", $file)));
        }
    };
}

golden!(golden_chi, "chi.json", "chi", "--v", "1,3,2,6");
golden!(golden_surface, "surface_4.json", "surface", "--type", "4");
golden!(golden_decide, "decide_6_2_2.json", "ulrich", "decide", "--type", "6", "--r", "2", "--k", "2");
golden!(golden_irr, "irr_6.json", "irr", "--type", "6", "--certificate");
golden!(golden_walls, "walls.json", "walls", "--v", "2,1,1,0");

#[test]
fn pair_and_twist() {
    assert_eq!(json(&["pair", "--v", "2,1,1,0", "--w", "1,0,0,3"])["result"]["pair"], -6);
    let t = json(&["twist", "--v", "2,-1,-1,0", "--class", "1,1"]);
    assert_eq!(t["result"]["twist"], serde_json::json!({"r": 2, "c1": [1, 1], "s": 0}));
}

#[test]
fn pullback_reports_l() {
    let p = json(&["pullback", "--type", "6", "--v", "2,3,2,3"]);
    assert_eq!(p["result"]["l"], 1);
    assert_eq!(p["result"]["cover"]["kind"], "canonical_cover");
    assert_eq!(p["result"]["pullback"], serde_json::json!({"r": 2, "c1": [3, 2], "s": 9}));
}

#[test]
fn wbn_failure_carries_warning_and_citation() {
    let w = json(&["wbn", "--type", "4", "--class", "0,3"]);
    assert_eq!(w["result"]["moduli_status"], "FAILS");
    assert!(!w["citations"].as_array().unwrap().is_empty());
    assert_eq!(w["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn nonempty_and_generic() {
    let n = json(&["nonempty", "--type", "1", "--H", "1,2", "--v", "2,3,2,3"]);
    assert_eq!(n["result"]["nonempty"], true);
    let g = json(&["generic", "--H", "1,1", "--v", "2,1,1,0"]);
    assert_eq!(g["result"]["generic"], false);
    assert_eq!(g["result"]["wall"]["xi"], serde_json::json!([1, -1]));
}

#[test]
fn hyphenated_verbs() {
    let a = bielliptic(&["ulrich-enumerate", "--H", "1,1", "--rank", "2"]);
    let b = bielliptic(&["ulrich", "enumerate", "--H", "1,1", "--rank", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["result"]["candidates"].as_array().unwrap().len(), 3);
}

#[test]
fn divisible_polarization_warns() {
    let v = json(&["ulrich", "enumerate", "--H", "2,2", "--rank", "1"]);
    assert_eq!(v["result"]["candidates"].as_array().unwrap().len(), 3);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["surface", "--type", "0"][..],
        &["chi", "--v", "1,x,2,6"],
        &["wbn", "--type", "1"],
        &["launch"],
    ] {
        let run = bielliptic(args);
        assert_eq!(run.code, 2, "{args:?}");
        assert!(run.stdout.is_empty());
        assert!(!run.stderr.is_empty());
    }
}

#[test]
fn precondition_errors_exit_1() {
    let run = bielliptic(&["ulrich", "decide", "--type", "1", "--r", "2", "--k", "7"]);
    assert_eq!(run.code, 1);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["ok"], false);
    assert!(run.stderr.contains("outside [r, 2r]"));
    let run = bielliptic(&["walls", "--v", "2,0,0,1"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("v^2 = -4"));
}

#[test]
fn table_output_is_aligned() {
    let run = bielliptic(&["--format", "table", "irr", "--type", "2"]);
    assert_eq!(run.code, 0);
    let value_columns: Vec<usize> = run
        .stdout
        .lines()
        .map(|l| l.find("  ").unwrap() + l[l.find("  ").unwrap()..].find(|c: char| c != ' ').unwrap())
        .collect();
    assert!(value_columns.windows(2).all(|w| w[0] == w[1]), "{}", run.stdout);
}

#[test]
fn selftest_single_suite() {
    let v = json(&["selftest", "--suite", "walls"]);
    let suites = v["result"]["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    assert_eq!(suites[0]["suite"], "walls");
    assert_eq!(v["result"]["passed"], true);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["ulrich", "decide", "--type", "7", "--r", "6", "--k", "9"];
    let first = bielliptic(&args).stdout;
    for _ in 0..3 {
        assert_eq!(bielliptic(&args).stdout, first);
    }
}
