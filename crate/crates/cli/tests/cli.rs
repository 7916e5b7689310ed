use std::process::{Command, Output};

use serde_json::Value;

fn heckelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heckelab"))
        .args(args)
        .env_remove("HECKELAB_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim().to_string()
}

#[test]
fn computes_symmetrized_quasi_polynomial() {
    let o = heckelab(&[
        "compute", "p_pm", "--type", "GL", "--rank", "2", "--c", "1/2,0", "--y", "1/2,0", "--sign", "+",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t*x^(0,1/2) + x^(1/2,0)");

    let o = heckelab(&[
        "compute", "p_pm", "--type", "GL", "--rank", "2", "--c", "1/2,0", "--y", "1/2,0", "--json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn computes_spherical_whittaker_function() {
    let o = heckelab(&[
        "compute", "whittaker", "--flavor", "spherical", "--type", "GL", "--rank", "2", "--n", "1",
        "--lambda", "0,0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    // v = q², so 1 − v·y₁/y₂.
    assert_eq!(stdout(&o), "1 - q^2*x^(1,-1)");
}

#[test]
fn precondition_violation_exits_with_one() {
    let o = heckelab(&["compute", "p_pm", "--c", "1,0", "--type", "GL", "--rank", "2", "--y", "1,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not in C0"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(heckelab(&["verify", "--suite", "nosuch"]).status.code(), Some(2));
    assert_eq!(heckelab(&["compute", "nosuch", "--type", "GL", "--rank", "2"]).status.code(), Some(2));
    let o = heckelab(&["compute", "p_pm", "--type", "GL", "--rank", "2", "--c", "1/2", "--y", "0,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_writes_reproducible_reports() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |p: &std::path::Path| {
        vec![
            "verify".to_string(),
            "--suite".into(),
            "thm-1.1-GLr".into(),
            "--rank".into(),
            "2".into(),
            "--n".into(),
            "3".into(),
            "--out".into(),
            p.to_str().unwrap().to_string(),
        ]
    };
    let run = |p: &std::path::Path, jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_heckelab"))
            .args(args(p))
            .env("HECKELAB_JOBS", jobs)
            .output()
            .unwrap()
    };
    assert_eq!(run(&a, "1").status.code(), Some(0));
    assert_eq!(run(&b, "4").status.code(), Some(0));
    let ta = std::fs::read(&a).unwrap();
    assert_eq!(ta, std::fs::read(&b).unwrap());
    let v: Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["summary"]["total"].as_u64().unwrap() > 0);
    assert!(v["summary"].get("wall_time_ms").is_none());
}

#[test]
fn flipped_sign_produces_failure_witness() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("flip.json");
    let o = heckelab(&[
        "verify", "--suite", "thm-1.1-GLr", "--rank", "2", "--n", "2", "--flip", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    let failed: Vec<&Value> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c["witness"].is_object()));
}

#[test]
fn list_names_suites_and_objects() {
    let o = heckelab(&["list"]);
    let text = stdout(&o);
    for name in ["hecke-axioms", "thm-1.1-GLr", "all", "p_pm", "duality-constants"] {
        assert!(text.contains(name), "{name}");
    }
}

#[test]
fn full_verification_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = heckelab(&[
        "verify", "--suite", "all", "--max-rank", "3", "--seed", "7", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    let coverage = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "coverage")
        .expect("coverage record");
    assert_eq!(coverage["status"], "pass");
}
