//! End-to-end tests of the `hmnc` binary: instance parsing, subcommands,
//! exit codes, and byte-level determinism of JSON output.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, Output};

use hilbert_mnc::algebra::{AlgebraDesc, AlgebraElement};
use hilbert_mnc::hilbert_module::{ModuleOperator, ModuleVector};
use hilbert_mnc::io::{
    element_to_data, operator_to_data, vector_to_data, InstanceFile, OperatorRef, SamplingData,
    SetExprData, SCHEMA,
};
use num_complex::Complex64;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hmnc"))
}

fn work_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hmnc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn scalar_instance() -> InstanceFile {
    let desc = AlgebraDesc::scalar();
    let len = 8usize;
    let e1 = ModuleVector::basis(&desc, len, 0).unwrap();
    let e3 = ModuleVector::basis(&desc, len, 2).unwrap();
    let shift = ModuleOperator::shift(&desc, len);
    let mut sets = BTreeMap::new();
    sets.insert("unit_ball".into(), SetExprData::Ball { center: None, radius: 1.0 });
    sets.insert("big_ball".into(), SetExprData::Ball { center: None, radius: 2.0 });
    sets.insert(
        "two_points".into(),
        SetExprData::Finite { points: vec![vector_to_data(&e1), vector_to_data(&e3)] },
    );
    sets.insert(
        "image".into(),
        SetExprData::OperatorImage { operator: OperatorRef::Name("shift".into()) },
    );
    let mut operators = BTreeMap::new();
    operators.insert("shift".into(), operator_to_data(&shift));
    InstanceFile {
        schema: SCHEMA.into(),
        algebra: hilbert_mnc::io::AlgebraData { blocks: vec![1] },
        length: len,
        seed: Some(7),
        sampling: SamplingData::default(),
        sets,
        operators,
    }
}

fn golden_instance() -> InstanceFile {
    let desc = AlgebraDesc::new(vec![1, 1]).unwrap();
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let p = AlgebraElement::scalar_blocks(&desc, &[one, zero]).unwrap();
    let q = AlgebraElement::scalar_blocks(&desc, &[zero, one]).unwrap();
    let split = SetExprData::Sum {
        left: Box::new(SetExprData::RightMul {
            factor: element_to_data(&p),
            child: Box::new(SetExprData::Ball { center: None, radius: 1.0 }),
        }),
        right: Box::new(SetExprData::RightMul {
            factor: element_to_data(&q),
            child: Box::new(SetExprData::Ball { center: None, radius: 2.0 }),
        }),
    };
    let mut sets = BTreeMap::new();
    sets.insert("split".into(), split.clone());
    sets.insert(
        "split_pushed".into(),
        SetExprData::RightMul { factor: element_to_data(&p), child: Box::new(split) },
    );
    InstanceFile {
        schema: SCHEMA.into(),
        algebra: hilbert_mnc::io::AlgebraData { blocks: vec![1, 1] },
        length: 6,
        seed: Some(7),
        sampling: SamplingData::default(),
        sets,
        operators: BTreeMap::new(),
    }
}

fn write_instance(name: &str, file: &InstanceFile) -> PathBuf {
    let path = work_dir().join(name);
    std::fs::write(&path, file.to_json()).unwrap();
    path
}

fn run_ok(args: &[&str]) -> Output {
    let out = bin().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "command {args:?} failed with {:?}\nstdout: {}\nstderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

#[test]
fn lambda_profile_of_the_unit_ball() {
    let path = write_instance("scalar.json", &scalar_instance());
    let file = path.to_str().unwrap();
    let out = run_ok(&["--file", file, "--format", "json", "lambda", "unit_ball", "--nmax", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let profile = v["profile"].as_array().unwrap();
    assert_eq!(profile.len(), 7);
    for entry in profile {
        assert!((entry["lo"].as_f64().unwrap() - 1.0).abs() <= 1e-9);
        assert!((entry["hi"].as_f64().unwrap() - 1.0).abs() <= 1e-9);
    }
    assert!((v["estimate_lo"].as_f64().unwrap() - 1.0).abs() <= 1e-9);
    // text mode prints twelve significant digits
    let text = run_ok(&["--file", file, "lambda", "unit_ball", "--nmax", "2"]);
    let s = String::from_utf8_lossy(&text.stdout).to_string();
    assert!(s.contains("1.00000000000e0"), "{s}");
}

#[test]
fn golden_split_profiles_via_cli() {
    let path = write_instance("golden.json", &golden_instance());
    let file = path.to_str().unwrap();
    let out = run_ok(&["--file", file, "--format", "json", "lambda", "split"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["estimate_lo"].as_f64().unwrap() - 2.0).abs() <= 1e-9);
    let out = run_ok(&["--file", file, "--format", "json", "lambda", "split_pushed"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["estimate_lo"].as_f64().unwrap() - 1.0).abs() <= 1e-9);
}

#[test]
fn witness_certificate_and_determinism() {
    let path = write_instance("scalar-w.json", &scalar_instance());
    let file = path.to_str().unwrap();
    let args = ["--file", file, "--format", "json", "witness", "big_ball", "--eps", "0.1"];
    let first = run_ok(&args);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert!(v["separation"].as_f64().unwrap() >= 1.95 - 1e-9);
    assert!(v["points"].as_array().unwrap().len() >= 4);
    let second = run_ok(&args);
    assert_eq!(first.stdout, second.stdout, "same seed and file must give identical bytes");
    // a different seed changes the sampling but not the certificate floor
    let other = bin().args(["--file", file, "--seed", "99", "--format", "json"]).args(["witness", "big_ball", "--eps", "0.1"]).output().unwrap();
    assert!(other.status.success());
    let v2: serde_json::Value = serde_json::from_slice(&other.stdout).unwrap();
    assert!(v2["separation"].as_f64().unwrap() >= 1.95 - 1e-9);
}

#[test]
fn bounds_star_on_finite_set_is_certified_zero() {
    let path = write_instance("scalar-b.json", &scalar_instance());
    let file = path.to_str().unwrap();
    let out = run_ok(&[
        "--file", file, "--format", "json", "bounds", "two_points", "--measure", "istratescu",
        "--star", "--seminorms", "4",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["lower"].as_f64().unwrap(), 0.0);
    assert_eq!(v["upper"].as_f64().unwrap(), 0.0);
    assert_eq!(v["validity"].as_str().unwrap(), "certified");
    // non-star single-semi-norm route
    let out = run_ok(&["--file", file, "--format", "json", "bounds", "unit_ball", "--measure", "chi"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["lower"].as_f64().unwrap() <= v["upper"].as_f64().unwrap());
}

#[test]
fn operator_commands() {
    let path = write_instance("scalar-o.json", &scalar_instance());
    let file = path.to_str().unwrap();
    let out = run_ok(&["--file", file, "--format", "json", "opnorm", "shift"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["norm"].as_f64().unwrap() - 1.0).abs() <= 1e-12);
    // the shift keeps a full tail at every level: it is far from compact
    let out = run_ok(&["--file", file, "--format", "json", "opmnc", "shift", "--measure", "lambda0"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for e in v["profile"].as_array().unwrap() {
        assert!((e["hi"].as_f64().unwrap() - 1.0).abs() <= 1e-12);
    }
    let out = run_ok(&["--file", file, "--format", "json", "opmnc", "shift", "--measure", "chi0"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["upper"].as_f64().unwrap() <= 1.0 + 1e-9);
}

#[test]
fn verify_and_report_subcommands() {
    let out = run_ok(&["verify", "--suite", "witness", "--seed", "7"]);
    let s = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(s.contains("verdict: pass"), "{s}");
    let out = run_ok(&["report", "--format", "csv", "--suite", "witness", "--seed", "7"]);
    let s = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(s.starts_with("id,cases,failures,worst_slack,allowed_slack"), "{s}");
    let out = run_ok(&["report", "--format", "json", "--suite", "witness", "--seed", "7"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"].as_str().unwrap(), "pass");
}

#[test]
fn exit_codes_for_failures() {
    // missing file
    let out = bin().args(["lambda", "unit_ball"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // malformed schema
    let bad = work_dir().join("bad.json");
    std::fs::write(&bad, r#"{"schema":"nope","algebra":{"blocks":[1]},"length":2}"#).unwrap();
    let out = bin().args(["--file", bad.to_str().unwrap(), "lambda", "unit_ball"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("schema"));

    // unknown reference
    let path = write_instance("scalar-e.json", &scalar_instance());
    let out = bin().args(["--file", path.to_str().unwrap(), "lambda", "nonexistent"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // numerical failure: a finite set admits no separated witness
    let out = bin()
        .args(["--file", path.to_str().unwrap(), "witness", "two_points", "--eps", "0.1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("replay: seed="), "{err}");
}

#[test]
fn instance_round_trip_is_idempotent() {
    let file = scalar_instance();
    let once = file.to_json();
    let reparsed = InstanceFile::from_json(&once).unwrap();
    assert_eq!(reparsed, file);
    assert_eq!(reparsed.to_json(), once);
}
