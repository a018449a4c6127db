use std::process::{Command, Output};

fn qf48(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qf48"))
        .args(args)
        .env_remove("QF48_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_prints_the_number() {
    let o = qf48(&["count", "--form", "q1:1,1,1,4", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "6");
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "--prec", "60", "decompose", "--form", "q2:1,2"];
    let a = qf48(&args);
    let b = qf48(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["command"], "decompose");
    assert_eq!(doc["coefficients"][0], "1/4");
    assert_eq!(doc["coefficients"][1], "-1/2");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["count", "--form", "q9:1", "--n", "1"][..],
        &["formula", "--name", "no_such_formula", "--n", "3"],
        &["--prec", "10", "basis", "--space", "chi0"],
        &["expand", "E2(chi5,1,1)"],
    ] {
        assert_eq!(qf48(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn table_c_verifies_cleanly() {
    let o = qf48(&["--prec", "60", "verify-tables", "--tables", "C"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4 confirmed, 0 with discrepancies"));
}

#[test]
fn paper_discrepancies_do_not_fail_the_run() {
    let o = qf48(&["--json", "--prec", "60", "verify-tables", "--tables", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["status"], "paper-discrepancy");
}

#[test]
fn out_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("qf48-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("count.json");
    let o = qf48(&["--json", "--out", path.to_str().unwrap(), "count", "--form", "q3:1,1,1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["count"], qf48::oracle::count_q3([1, 1, 1], 3));
    std::fs::remove_dir_all(dir).ok();
}
