use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn adomian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adomian")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = adomian(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read_to_string(path).unwrap()
}

#[test]
fn gen_goldens() {
    assert_eq!(stdout(&["gen", "--power", "2", "--order", "3", "--algo", "matrix"]), golden("gen_power2_order3.txt"));
    assert_eq!(stdout(&["gen", "--power", "1", "--order", "2"]), golden("gen_power1_order2.txt"));
    assert_eq!(
        stdout(&["gen", "--power", "2", "--dim", "2", "--rows", "1", "--cols", "1"]),
        golden("gen_2d_power2_1x1.txt")
    );
}

#[test]
fn gen_is_identical_across_algorithms() {
    for (power, order) in [("2", "3"), ("3", "8"), ("5", "7")] {
        let base = ["gen", "--power", power, "--order", order];
        for format in ["text", "json"] {
            let reference = stdout(&[&base[..], &["--algo", "oracle", "--format", format]].concat());
            for algo in ["matrix", "duan1", "duan3"] {
                let got = stdout(&[&base[..], &["--algo", algo, "--format", format]].concat());
                assert_eq!(got, reference, "{algo} N={power} n={order} {format}");
            }
        }
    }
    let dims = ["gen", "--power", "3", "--dim", "2", "--rows", "3", "--cols", "4"];
    assert_eq!(stdout(&[&dims[..], &["--algo", "matrix"]].concat()), stdout(&[&dims[..], &["--algo", "oracle"]].concat()));
}

#[test]
fn gen_2d_is_row_major() {
    let text = stdout(&["gen", "--power", "2", "--dim", "2", "--rows", "2", "--cols", "3"]);
    let prefixes: Vec<&str> = text.lines().map(|l| l.split(" = ").next().unwrap()).collect();
    assert_eq!(prefixes, ["A[0,0]", "A[0,1]", "A[0,2]", "A[1,0]", "A[1,1]", "A[1,2]"]);
}

#[test]
fn gen_json_shape() {
    let text = stdout(&["gen", "--power", "2", "--order", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["power"], 2);
    assert_eq!(doc["shape"], serde_json::json!([2]));
    assert_eq!(doc["polynomials"][1]["index"], serde_json::json!([1]));
    assert_eq!(doc["polynomials"][1]["polynomial"][0]["coeff"], "2");
}

#[test]
fn deterministic_output() {
    let args = ["gen", "--power", "4", "--dim", "2", "--rows", "3", "--cols", "3"];
    assert_eq!(stdout(&args), stdout(&args));
    let solve = ["solve", "--a", "1/2", "--c", "-1", "--power", "3", "--g", "1 - x", "--u0", "2", "--depth", "4"];
    assert_eq!(stdout(&solve), stdout(&solve));
}

#[test]
fn invalid_gen_flags_exit_2() {
    for args in [
        &["gen", "--power", "2", "--dim", "2", "--rows", "2", "--cols", "2", "--algo", "duan1"][..],
        &["gen", "--power", "2", "--dim", "2", "--rows", "2", "--cols", "2", "--algo", "duan3"],
        &["gen", "--power", "0", "--order", "3"],
        &["gen", "--power", "2"],
        &["gen", "--power", "2", "--dim", "2", "--rows", "2"],
        &["gen", "--power", "2", "--order", "3", "--dim", "3"],
        &["gen", "--power", "2", "--order", "3", "--algo", "foo"],
    ] {
        assert_eq!(adomian(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn solve_goldens() {
    let geometric = ["solve", "--a", "0", "--c", "1", "--power", "2", "--g", "0", "--u0", "1", "--depth", "3"];
    assert_eq!(stdout(&geometric), golden("solve_geometric.txt"));
    let decay = ["solve", "--a", "-1", "--c", "0", "--power", "2", "--g", "0", "--u0", "1", "--depth", "2"];
    assert_eq!(stdout(&decay), golden("solve_decay.txt"));
}

#[test]
fn solve_zero_initial_value() {
    let text = stdout(&["solve", "--u0", "0", "--c", "1", "--power", "2", "--a", "0", "--g", "0"]);
    assert!(text.lines().all(|l| l.ends_with(" = 0")), "{text}");
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn solve_json() {
    let text = stdout(&["solve", "--a", "-1", "--c", "0", "--power", "2", "--u0", "1", "--depth", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["partial_sum"], serde_json::json!(["1", "-1", "1/2"]));
    assert_eq!(doc["components"][1], serde_json::json!(["0", "-1"]));
}

#[test]
fn solve_parse_errors_exit_2() {
    for args in [
        &["solve", "--a", "x", "--c", "1", "--power", "2", "--u0", "1"][..],
        &["solve", "--a", "0", "--c", "1/0", "--power", "2", "--u0", "1"],
        &["solve", "--a", "0", "--c", "1", "--power", "2", "--u0", "1", "--g", "y^2"],
        &["solve", "--a", "0", "--c", "1", "--power", "0", "--u0", "1"],
    ] {
        assert_eq!(adomian(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bench_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = adomian(&[
        "bench", "--algos", "matrix,duan3", "--powers", "3", "--orders", "10", "--reps", "3", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "algorithm,power,order,repetition,seconds,status");
    assert_eq!(lines.len(), 7);
    assert!(lines[1..].iter().all(|l| l.ends_with(",ok")));
    let summary = String::from_utf8(out.stdout).unwrap();
    assert!(summary.contains("matrix") && summary.contains("duan3"), "{summary}");

    let json_path = dir.path().join("r.json");
    let out = adomian(&[
        "bench", "--algos", "matrix", "--powers", "2", "--orders", "5", "--out", json_path.to_str().unwrap(), "--format",
        "json",
    ]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 1);
    assert_eq!(rows[0]["status"], "ok");
}

#[test]
fn bench_exit_codes() {
    let out = adomian(&["bench", "--algos", "matrix,foo"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("matrix, duan1, duan3, oracle"), "{err}");

    let out = adomian(&["bench", "--algos", "matrix", "--powers", "3", "--orders", "10,20", "--timeout", "0.000001"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stdout).unwrap().contains("timeout"));

    assert_eq!(adomian(&["bench", "--reps", "0"]).status.code(), Some(2));
    assert_eq!(adomian(&["bench", "--format", "xml"]).status.code(), Some(2));
}
