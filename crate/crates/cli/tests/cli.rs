use std::process::{Command, Output};

use serde_json::Value;

fn specfn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specfn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_known_values() {
    let o = specfn(&["eval", "lnbarnesg", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0.693147180559945"), "{}", stdout(&o));
    let o = specfn(&["eval", "lngamma", "0.5"]);
    assert!(stdout(&o).contains("0.5723649429247"));
}

#[test]
fn eval_domain_error_exits_2() {
    let o = specfn(&["eval", "lnbarnesg", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain error"));
    let o = specfn(&["eval", "zfunc", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_json() {
    let o = specfn(&["eval", "clausen2", "1.0471975511965976", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let value = v[0]["value"].as_f64().unwrap();
    assert!((value - 1.014_941_606_409_653_6).abs() < 1e-14);
}

#[test]
fn coeffs_tables() {
    let o = specfn(&["coeffs", "xlgamma", "1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let gamma = 0.577_215_664_901_532_9;
    let b1 = rows[1]["b_n"].as_f64().unwrap();
    assert!((b1 - gamma / (2.0 * std::f64::consts::PI)).abs() < 1e-14);

    let o = specfn(&["coeffs", "b2", "2", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,a_n,b_n"));
    let a2: f64 = lines.nth(2).unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!((a2 - 1.0 / (4.0 * std::f64::consts::PI.powi(2))).abs() < 1e-15);
}

#[test]
fn coeffs_check_residuals() {
    let o = specfn(&["coeffs", "kummer", "3", "--check", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for row in v.as_array().unwrap() {
        assert!(row["residual"].as_f64().unwrap() < 1e-8);
    }
}

#[test]
fn coeffs_unknown_series_is_usage_error() {
    let o = specfn(&["coeffs", "nope", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_filter() {
    let o = specfn(&["verify", "--filter", "raabe"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 passed, 0 failed"));
    let o = specfn(&["verify", "--filter", "no-such-thing"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_json_document() {
    let o = specfn(&["verify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids = v["identities"].as_array().unwrap();
    assert!(ids.len() > 20);
    for r in ids {
        for field in ["id", "lhs", "rhs", "residual", "tolerance", "pass"] {
            assert!(r.get(field).is_some(), "missing {field}");
        }
    }
    assert_eq!(v["summary"]["failed"], 0);
    assert!(!v["adjudication"].as_array().unwrap().is_empty());
}

#[test]
fn verify_fails_with_tiny_tolerance() {
    let o = specfn(&["verify", "--filter", "connon-expansion", "--tol-scale", "1e-9"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_is_deterministic() {
    let a = stdout(&specfn(&["verify", "--filter", "G2", "--format", "json"]));
    let b = stdout(&specfn(&["verify", "--filter", "G2", "--format", "json"]));
    assert_eq!(a, b);
}

#[test]
fn asymptotics_tables() {
    let o = specfn(&["asymptotics", "4", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let signs: Vec<bool> = rows.iter().map(|r| r["G_n"].as_f64().unwrap() > 0.0).collect();
    assert_eq!(signs, [true, false, true]);

    let o = specfn(&["asymptotics", "10", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 10);

    let o = specfn(&["asymptotics", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_environment_is_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_specfn"))
        .args(["verify", "--filter", "raabe"])
        .env("SPECFN_MAX_LEVELS", "99")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
