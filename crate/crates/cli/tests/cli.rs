use std::process::{Command, Output};

use hztower::gallery;
use hztower_cli::descriptor::{ModuleDescriptor, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use serde_json::Value;

fn hztower(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hztower")).args(args).env_remove("HZTOWER_IMAX_DEFAULT").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = hztower(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write_temp(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("hztower-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn analyze_builtins() {
    let r = json(&["analyze", "klein"]);
    assert_eq!(r["result"]["mu"], "x + 1");
    assert_eq!(r["result"]["tame"]["status"], "tame");
    let r = json(&["analyze", "z13"]);
    assert_eq!(r["result"]["mu"], "x - 3");
    assert_eq!(r["result"]["tame"]["generator"], "t");
}

#[test]
fn analyze_file_not_tame() {
    let p = write_temp("two-thirds.json", r#"{"representation": "lattice", "action": [["2/3"]], "generators": [[1]]}"#);
    let r = json(&["analyze", p.to_str().unwrap()]);
    assert_eq!(r["result"]["tame"]["status"], "not tame");
    let out = hztower(&["classify", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_table() {
    for (name, verdict) in [
        ("klein", "AtMostOmegaPlusOne"),
        ("z13", "AtMostOmega"),
        ("root", "WitnessAtLeastOmegaPlusTwo"),
        ("perfectm-demo", "LessThanOmega"),
    ] {
        assert_eq!(json(&["classify", name])["result"]["verdict"], verdict, "{name}");
    }
}

#[test]
fn complete_respects_imax_and_env() {
    let r = json(&["complete", "klein", "--imax", "5"]);
    let groups: Vec<_> = r["result"]["stages"].as_array().unwrap().iter().map(|s| s["group"].clone()).collect();
    assert_eq!(groups, ["Z/2", "Z/4", "Z/8", "Z/16", "Z/32"]);
    let r = json(&["complete", "z12"]);
    assert_eq!(r["result"]["stages"].as_array().unwrap().len(), 12);
    let out = Command::new(env!("CARGO_BIN_EXE_hztower"))
        .args(["--json", "complete", "root"])
        .env("HZTOWER_IMAX_DEFAULT", "4")
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["result"]["stages"][3]["group"], "Z/16 + Z/16");
    assert_eq!(r["result"]["stages"].as_array().unwrap().len(), 4);
}

#[test]
fn h2_and_cohomology() {
    assert_eq!(json(&["h2", "klein", "--imax", "3"])["result"]["h2"], "0");
    assert_eq!(json(&["h2", "root", "--imax", "3"])["result"]["h2"], "Z");
    assert_eq!(json(&["h2", "trivial2", "--imax", "2"])["result"]["h2"], "Z^3");
    let r = json(&["cohomology", "unit-z2"]);
    assert_eq!(r["result"]["h2"], "Z/2");
    assert_eq!(r["result"]["extension_classes"], 2);
    let p = write_temp("hom.json", r#"{"domain": "Z4", "codomain": "Z2", "images": [0, 1, 0, 1], "coefficients": [2]}"#);
    let r = json(&["cohomology", p.to_str().unwrap()]);
    assert_eq!(r["result"]["perfect"], true);
    let bad = write_temp("nothom.json", r#"{"domain": "Z2", "codomain": "Z3", "images": [0, 1], "coefficients": [2]}"#);
    assert_eq!(hztower(&["cohomology", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_suites_and_exit_codes() {
    let out = hztower(&["verify-paper", "--suite", "lemma61"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
    let out = hztower(&["verify-paper", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn input_errors_exit_with_two() {
    let out = hztower(&["analyze", "/nonexistent/module.json"]);
    assert_eq!(out.status.code(), Some(2));
    let p = write_temp("broken.json", "{\n  \"representation\": \"zfinite\",\n  \"action\": [[1, 2]\n}");
    let out = hztower(&["analyze", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
    let p = write_temp("singular.json", r#"{"representation": "zfinite", "action": [[2]]}"#);
    assert_eq!(hztower(&["analyze", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [["classify", "root"], ["complete", "root"], ["verify-paper", "--suite=properties"]] {
        let strip = |mut v: Value| {
            v.as_object_mut().unwrap().remove("elapsed_ms");
            serde_json::to_string(&v).unwrap()
        };
        assert_eq!(strip(json(&args)), strip(json(&args)), "{args:?}");
    }
}

#[test]
fn gallery_descriptors_round_trip() {
    for e in gallery::ENTRIES {
        let m = (e.build)();
        let d = ModuleDescriptor::from_module(&m, Some(e.name));
        let text = d.to_json();
        let back = ModuleDescriptor::parse(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_json(), text);
        assert_eq!(back.to_module().unwrap(), m);
    }
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (-50i64..50).prop_map(|n| Scalar(BigRational::from_integer(n.into()))),
        (-50i64..50, 1i64..12).prop_map(|(p, q)| Scalar(BigRational::new(p.into(), q.into()))),
        (1u32..4).prop_map(|k| Scalar(BigRational::from_integer(BigInt::from(10).pow(20 * k) + 1))),
    ]
}

proptest! {
    #[test]
    fn canonical_descriptors_round_trip(
        action in proptest::collection::vec(proptest::collection::vec(scalar(), 3), 3),
        gens in proptest::collection::vec(proptest::collection::vec(scalar(), 3), 0..4),
        name in proptest::option::of("[a-z]{1,8}"),
    ) {
        let d = ModuleDescriptor::Lattice { name, action, generators: gens };
        let text = d.to_json();
        let back = ModuleDescriptor::parse(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_json(), text);
    }
}
