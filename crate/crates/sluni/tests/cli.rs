//! End-to-end checks of the command-line interface: output schema, the
//! JSON round-trip invariant, and exit codes.

use std::process::{Command, Output};

fn sluni(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sluni"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn rho_nonstandard_su111() {
    let out = sluni(&["rho", "--sig", "1,1,1", "--system", "nonstandard"]);
    let v = stdout_json(&out);
    assert_eq!(v["rho"], "0,0|0");
    let out = sluni(&[
        "rho",
        "--sig",
        "1,1,1",
        "--system",
        "nonstandard",
        "--table",
    ]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "rho = 0,0|0");
}

#[test]
fn classify_emits_verdict_schema() {
    let out = sluni(&["classify", "--sig", "2,0,1", "--weight", "3,1|2"]);
    let v = stdout_json(&out);
    assert_eq!(v["unitarizable"], true);
    assert_eq!(v["case"], "compact");
    let reasons = v["reasons"].as_array().unwrap();
    assert!(!reasons.is_empty());
    for r in reasons {
        assert!(r["condition"].is_string());
        assert!(r["root"].is_string() || r["root"].is_null());
        assert!(r["margin"].is_string() || r["margin"].is_null());
    }
}

#[test]
fn classify_round_trips_through_reported_weight() {
    for (sig, weight) in [
        ("2,0,1", "3,1|2"),
        ("2,0,2", "2,1|3,1"),
        ("1,1,2", "-3/2,1/2|1/2,-1/2"),
        ("1,1,1", "-1,2|1/2"),
    ] {
        let first = stdout_json(&sluni(&["classify", "--sig", sig, "--weight", weight]));
        let reported = first["weight"].as_str().unwrap();
        let second = stdout_json(&sluni(&["classify", "--sig", sig, "--weight", reported]));
        assert_eq!(first["unitarizable"], second["unitarizable"]);
        assert_eq!(first["reasons"], second["reasons"]);
    }
}

#[test]
fn family_sweep_matches_expected_set() {
    let out = sluni(&[
        "family", "--sig", "2,0,2", "--a", "0,1", "--b", "2,0", "--sweep", "0:5:1/2",
    ]);
    let v = stdout_json(&out);
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 11);
    for p in points {
        let x = p["x"].as_str().unwrap();
        let expected = matches!(x, "2" | "5/2" | "3" | "7/2" | "4" | "9/2" | "5");
        assert_eq!(p["unitarizable"], expected, "x = {x}");
    }
}

#[test]
fn psl_flag_enforces_supertrace() {
    let ok = sluni(&["classify", "--sig", "1,1,2", "--weight", "1,0|1,0", "--psl"]);
    assert!(ok.status.success());
    let bad = sluni(&["classify", "--sig", "1,1,2", "--weight", "1,0|0,0", "--psl"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn margins_and_gram_and_ksdet_schema() {
    let m = stdout_json(&sluni(&[
        "margins", "--sig", "1,1,2", "--weight", "-2,1|1,0",
    ]));
    assert_eq!(m["margins"].as_array().unwrap().len(), 4);

    let g = stdout_json(&sluni(&[
        "gram",
        "--sig",
        "2,0,1",
        "--weight",
        "7/2,-1/2|7/2",
        "--eta",
        "1,0|-1",
    ]));
    assert_eq!(g["dim"], 2);
    assert_eq!(g["rank"], 2);
    assert_eq!(g["psd"], true);
    assert_eq!(g["entries"][0][0], "7");

    let k = stdout_json(&sluni(&[
        "ksdet",
        "--sig",
        "2,0,1",
        "--weight",
        "7/2,-1/2|7/2",
        "--eta",
        "1,0|-1",
    ]));
    assert_eq!(k["value"], "96");
    assert_eq!(k["factors"].as_array().unwrap().len(), 3);
}

#[test]
fn oracle_exit_codes_and_depth_cap() {
    let ok = sluni(&[
        "oracle", "--sig", "1,1,1", "--a", "0,0", "--b", "0", "--lambda", "-3", "--sweep",
        "-2:2:1", "--depth", "2",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["agree"], true);

    let too_deep = sluni(&[
        "oracle", "--sig", "1,1,1", "--weight", "0,0|0", "--depth", "9",
    ]);
    assert_eq!(too_deep.status.code(), Some(2));
}

#[test]
fn validation_and_usage_exit_codes() {
    // unparseable flags: usage error, exit 64
    let usage = sluni(&["classify", "--sig"]);
    assert_eq!(usage.status.code(), Some(64));
    let unknown = sluni(&["classify", "--sig", "2,0,1", "--weight", "1,0|0", "--bogus"]);
    assert_eq!(unknown.status.code(), Some(64));
    // well-formed flags with invalid content: validation error, exit 2
    let bad_weight = sluni(&["classify", "--sig", "2,0,1", "--weight", "1,0"]);
    assert_eq!(bad_weight.status.code(), Some(2));
    let bad_sig = sluni(&["rho", "--sig", "0,0,1"]);
    assert_eq!(bad_sig.status.code(), Some(2));
    let bad_system = sluni(&["rho", "--sig", "2,0,1", "--system", "nonstandard"]);
    assert_eq!(bad_system.status.code(), Some(2));
    // sweep validation
    let bad_sweep = sluni(&[
        "family", "--sig", "2,0,1", "--a", "0,1", "--b", "0", "--sweep", "0:5:0",
    ]);
    assert_eq!(bad_sweep.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = sluni(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
