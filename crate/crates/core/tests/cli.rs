use std::process::{Command, Output};

use seqlab::descriptor::AlgebraDescriptor;

fn seqlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn verify_json_passes() {
    let out = seqlab(&["verify", "--algebra", "complex:2", "--samples", "200", "--seed", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["algebra"], "complex:2");
    assert_eq!(v["seed"], 1);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 15);
    for r in reports {
        for key in ["suite", "algebra", "seed", "samples", "pass", "failures", "elapsed_s"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["samples"], 200);
    }
}

#[test]
fn loctom_false_verdict_exits_one() {
    let out = seqlab(&["loctom", "--algebra", "real:3", "--samples", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("summand"));
    assert!(text.lines().any(|l| l.trim_start().starts_with("real:3") && l.trim_end().ends_with("no")));
    assert!(text.contains("verdict: FAIL"));

    let out = seqlab(&["loctom", "--algebra", "complex:3", "--samples", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["computation"]["verdict"], true);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--algebra", "bogus:9"][..],
        &["verify"],
        &["verify", "--algebra", "real:2", "--samples", "-3"],
        &["verify", "--algebra", "real:2", "--format", "yaml"],
        &["verify", "--algebra", "real:2", "--tol", "0"],
        &["frobnicate", "--algebra", "real:2"],
        &[],
    ] {
        let out = seqlab(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"), "{args:?}");
    }
}

#[test]
fn tol_override_is_reported() {
    let out = seqlab(&["spectral", "--algebra", "real:3", "--samples", "5", "--tol", "1e-8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["eq_tol"], 1e-8);
    assert!((v["computation"]["eps"].as_f64().unwrap() - 1e-8 * 6.0).abs() < 1e-20);
}

#[test]
fn descriptors_are_reemitted_canonically() {
    for input in ["complex:02+spin:3", "quat:2", "real:1+real:1", "spin:005"] {
        let out = seqlab(&["lattice", "--algebra", input, "--samples", "3", "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{input}");
        let emitted = json(&out)["algebra"].as_str().unwrap().to_string();
        let parsed: AlgebraDescriptor = input.parse().unwrap();
        assert_eq!(emitted, parsed.to_string());
        assert_eq!(emitted.parse::<AlgebraDescriptor>().unwrap(), parsed);
        for r in json(&out)["reports"].as_array().unwrap() {
            assert_eq!(r["algebra"], emitted.as_str());
        }
    }
}

#[test]
fn text_mode_is_a_fixed_width_table() {
    let out = seqlab(&["reconstruct", "--algebra", "spin:3", "--samples", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("reconstruction ") || l.starts_with("t-commutation ")).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].len(), rows[1].len());
    assert!(text.ends_with("verdict: pass\n"));
}
