use std::process::{Command, Output};

use serde_json::Value;

fn qmul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmul"))
        .args(args)
        .env_remove("QMUL_SEED")
        .output()
        .expect("run qmul")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON report")
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("duration_ms");
    v
}

#[test]
fn synth_modmult_reports_counts() {
    let out = qmul(&["synth", "modmult", "--field", "4,1,0"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["stats"]["tof_count"], 9);
    assert_eq!(r["stats"]["cnot_count"], 44);
    assert_eq!(r["stats"]["qubits"], 12);
    assert_eq!(r["modulus"], serde_json::json!([4, 1, 0]));
    assert_eq!(r["command"], "synth modmult --field 4,1,0");
}

#[test]
fn synth_schoolbook_and_constmult() {
    let r = report(&qmul(&["synth", "schoolbook", "--n", "16", "--field", "16,5,3,1,0"]));
    assert_eq!(r["stats"]["tof_count"], 256);
    assert_eq!(r["stats"]["cnot_count"], 15 * 3);
    let r = report(&qmul(&["synth", "constmult", "--field", "4,1,0", "--poly", "2,0"]));
    assert_eq!(r["stats"]["cnot_count"], 5);
    assert_eq!(r["factor"], "5");
}

#[test]
fn registered_degree_can_stand_in_for_field() {
    let r = report(&qmul(&["synth", "modmult", "--n", "163"]));
    assert_eq!(r["modulus"], serde_json::json!([163, 7, 6, 3, 0]));
    assert_eq!(r["stats"]["tof_count"], 4387);
}

#[test]
fn netlist_output_is_deterministic_and_parses() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.net");
    let b = dir.path().join("b.net");
    let args = |p: &std::path::Path| {
        vec!["synth".to_string(), "modmult".into(), "--field".into(), "16,5,3,1,0".into(), "--out".into(), p.display().to_string()]
    };
    let run = |p: &std::path::Path| {
        let v = args(p);
        let v: Vec<&str> = v.iter().map(String::as_str).collect();
        qmul(&v)
    };
    let (ra, rb) = (run(&a), run(&b));
    let (ta, tb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    assert_eq!(ta, tb);
    let mut ja = without_timing(report(&ra));
    let mut jb = without_timing(report(&rb));
    // The echoed command differs only in the output path.
    ja.as_object_mut().unwrap().remove("command");
    jb.as_object_mut().unwrap().remove("command");
    assert_eq!(ja, jb);

    let c = qmul_core::Circuit::parse_netlist(&ta).unwrap();
    assert_eq!(c.to_netlist(), ta);
    assert_eq!(c.stats().tof_count, 81);
    assert!(ta.starts_with("qubits 48\nperm "));
}

#[test]
fn qasm_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.qasm");
    let out = qmul(&[
        "synth", "kmult", "--n", "2", "--format", "qasm", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("ccx ")).count(), 3);
    assert_eq!(text.lines().filter(|l| l.starts_with("cx ")).count(), 8);
}

#[test]
fn verify_exhaustive_and_random() {
    let out = qmul(&["verify", "modmult", "--field", "4,1,0", "--mode", "exhaustive"]);
    assert!(out.status.success());
    let v = &report(&out)["verification"];
    assert_eq!((v["trials"].as_u64(), v["passed"].as_u64()), (Some(256), Some(256)));

    let out = qmul(&["verify", "modmult", "--field", "163,7,6,3,0", "--trials", "100", "--seed", "1"]);
    assert!(out.status.success());
    let v = &report(&out)["verification"];
    assert_eq!((v["passed"].as_u64(), v["failures"].as_u64()), (Some(100), Some(0)));
    assert_eq!(v["seed"], 1);

    let out = qmul(&["verify", "kmult", "--n", "2", "--mode", "exhaustive"]);
    assert!(out.status.success());
    assert_eq!(report(&out)["verification"]["passed"], 128);
}

#[test]
fn same_seed_same_report() {
    let args = ["verify", "modmult", "--field", "32,7,3,2,0", "--trials", "70", "--seed", "9"];
    let a = without_timing(report(&qmul(&args)));
    let b = without_timing(report(&qmul(&args)));
    assert_eq!(a, b);
}

#[test]
fn seed_env_overrides_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_qmul"))
        .args(["verify", "modmult", "--field", "8,4,3,1,0", "--trials", "10", "--seed", "3"])
        .env("QMUL_SEED", "42")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(report(&out)["verification"]["seed"], 42);
}

#[test]
fn exit_codes() {
    let out = qmul(&["synth", "modmult", "--field", "4,0,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("descending"));

    let out = qmul(&["synth", "modmult", "--field", "4,2,0", "--check-irreducible"]);
    assert_eq!(out.status.code(), Some(3));

    let out = qmul(&["verify", "kmult", "--n", "9", "--mode", "exhaustive"]);
    assert_eq!(out.status.code(), Some(2));

    let out = qmul(&["synth", "kmult"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tables() {
    let out = qmul(&["table", "constmult"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row4 = text.lines().find(|l| l.starts_with("4\t")).unwrap();
    assert_eq!(row4, "4\t[4,1,0]\tehcc\t5\t4\t-");

    let out = qmul(&["table", "modmult"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let cols = |deg: &str| -> Vec<String> {
        text.lines()
            .find(|l| l.starts_with(&format!("{deg}\t")))
            .unwrap()
            .split('\t')
            .map(str::to_string)
            .collect()
    };
    assert_eq!(cols("1024")[3], "59049");
    assert_eq!(cols("571")[3], "31171");
    assert_eq!(cols("16")[2], "256");
}
