use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracsusy")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fracsusy-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn normal_form_in_text() {
    let o = run(&["normalize-u", "--p", "3", "k p+"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q * p+ k\n");
    let o = run(&["normalize-a", "--p", "3", "e+^3"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "0"));
}

#[test]
fn signature_report_is_json() {
    let o = run(&["signature", "--p", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "signature");
    assert_eq!(v["conventions_version"], "1");
    assert_eq!(v["passed"], true);
    assert_eq!(v["config"]["p"], 5);
    assert_eq!(v["ledger"]["h_sign"], "-1");
    assert!(v["generated_at"].is_u64());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["--p", "4", "signature"][..],
        &["no-such-command"],
        &["normalize-u", "--format", "csv", "k"],
        &["normalize-u", "--p", "3", "k p+ )"],
        &["kernel-eval", "--quad", "5"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn kernel_verify_writes_csv_and_json_sidecar() {
    let dir = scratch("verify");
    let path = dir.join("grid.csv");
    let o = run(&[
        "kernel-verify", "--p", "3", "--quad", "1", "--grid", "r=1;rho=1,2;beta=0;a=0",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    assert_eq!(&rdr.headers().unwrap()[0], "quadrant");
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    for row in &rows {
        let residual: f64 = row.get(row.len() - 1).unwrap().parse().unwrap();
        assert!(residual < 1e-19);
    }
    let side: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path.with_extension("json")).unwrap()).unwrap();
    assert_eq!(side["command"], "kernel-verify");
    assert_eq!(side["passed"], true);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn failing_check_exits_one() {
    let o = run(&["ladder-suite", "--p", "3", "--prec", "128"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
}
