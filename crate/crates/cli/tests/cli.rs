use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vassiliev"))
        .args(args)
        .env_remove("VASSILIEV_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn json(s: &str) -> Value {
    serde_json::from_str(s.trim()).unwrap()
}

#[test]
fn family_value() {
    assert_eq!(
        ok(&["family", "--spec", "omega:2", "--eval", "gl"]),
        "2*c^3 - 2*c\n"
    );
    let both = ok(&["family", "--spec", "omega:3", "--eval", "both"]);
    assert_eq!(both, "gl: c^4 - c^2\nso: c^4 - 5*c^3 + 8*c^2 - 4*c\n");
}

#[test]
fn brauer_square() {
    assert_eq!(
        ok(&["brauer", "--k", "2", "--expr", "a*a"]),
        "(c)*{t1-t2,b1-b2}\n"
    );
    assert_eq!(
        ok(&["brauer", "--k", "3", "--expr", "(d-h)^2", "--trace"]),
        "2*c^3 - 2*c\n"
    );
    let v = json(&ok(&[
        "--format", "json", "brauer", "--k", "2", "--expr", "b", "--trace",
    ]));
    assert_eq!(v["trace"], "c");
}

#[test]
fn dims_formats() {
    let v = json(&ok(&["dims", "--n", "1", "--l", "1", "--format", "json"]));
    assert_eq!(v["dim_H"], 0);
    assert_eq!(v["dim_F"], 0);
    assert!(v.get("elapsed").is_none());
    assert_eq!(
        ok(&["dims", "--n", "3", "--l", "2", "--format", "csv"]),
        "n,l,dim_H,dim_F,dim_sum,dim_cap,diagram_count\n3,2,2,4,4,2,105\n"
    );
}

#[test]
fn diagram_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("psi.json");
    let p = path.to_str().unwrap();
    ok(&["family", "--spec", "psi", "--out", p]);
    let direct = ok(&["family", "--spec", "psi", "--eval", "both"]);
    assert_eq!(ok(&["eval", "--in", p]), direct);
    assert!(direct.starts_with("gl: c^7 + 13*c^5 - 14*c^3\n"));
    let framed = json(&ok(&[
        "eval", "--in", p, "--framed", "--flavor", "gl", "--format", "json",
    ]));
    assert_eq!(framed["deframed"], false);
    assert!(framed.get("so").is_none());
}

#[test]
fn input_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"circles": [["a", "b"]], "edges": [["a", "c"]]}"#).unwrap();
    let o = run(&["eval", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["--format", "json", "eval", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&stdout(&o));
    assert_eq!(v["error"]["kind"], "input");
    assert_eq!(run(&["family", "--spec", "omega:0"]).status.code(), Some(3));
    assert_eq!(
        run(&["brauer", "--k", "2", "--expr", "a +"]).status.code(),
        Some(3)
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["brauer", "--k", "2", "--expr", "a", "--format", "csv"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["dims", "--n", "9", "--l", "1"]).status.code(),
        Some(2)
    );
    let o = run(&["--format", "json", "dims", "--n", "x", "--l", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&stdout(&o))["error"]["kind"], "usage");
}

#[test]
fn verification_exit_codes() {
    let o = run(&["verify", "--suite", "psi"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("psi: 2/2 checks passed"));
    // With too small a vertex limit the evaluations fail, so the checks do.
    let o = run(&["verify", "--suite", "psi", "--max-vertices", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]"));
}

#[test]
fn enumerate_lists_and_counts() {
    assert_eq!(ok(&["enumerate", "--n", "2", "--l", "1", "--count"]), "3\n");
    assert_eq!(
        ok(&["enumerate", "--n", "2", "--l", "1"]).lines().count(),
        3
    );
    let lines = ok(&["--format", "json", "enumerate", "--n", "1", "--l", "2"]);
    for line in lines.lines() {
        assert!(json(line)["circles"].is_array());
    }
    assert_eq!(lines.lines().count(), 3);
}

#[test]
fn output_does_not_depend_on_threads() {
    let args = |jobs: &'static str| {
        [
            "--jobs",
            jobs,
            "--format",
            "json",
            "rank",
            "--list",
            "Sigma:6;omega:2#omega:4",
        ]
    };
    let one = run(&args("1"));
    let many = run(&args("4"));
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
    assert!(json(&stdout(&one))["rank"].as_u64().is_some());
}

#[test]
fn cache_is_used_and_bad_entries_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = ok(&[
        "--cache", d, "dims", "--n", "3", "--l", "2", "--format", "json",
    ]);
    let files: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(files.len(), 1);
    assert_eq!(
        ok(&["--cache", d, "dims", "--n", "3", "--l", "2", "--format", "json"]),
        first
    );

    fs::write(&files[0], "garbage").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_vassiliev"))
        .args(["dims", "--n", "3", "--l", "2", "--format", "json"])
        .env("VASSILIEV_CACHE", d)
        .output()
        .unwrap();
    assert_eq!(stdout(&o), first);
    assert!(fs::read_to_string(&files[0]).unwrap().contains("dim_H"));
}
