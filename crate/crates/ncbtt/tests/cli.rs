use std::path::PathBuf;

use ncbtt::cli::{run, Outcome};
use serde_json::Value;

fn algebra(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("algebras").join(format!("{}.json", name)).display().to_string()
}

fn ncbtt(args: &[&str]) -> Outcome {
    run(std::iter::once("ncbtt").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = ncbtt(&full);
    assert!(o.stderr.is_empty(), "{}", o.stderr);
    (o.code, serde_json::from_str(&o.stdout).expect("valid JSON"))
}

#[test]
fn validate_accepts_the_corpus() {
    for name in ["point", "kxk", "m2", "cl1", "oddext", "dualnumbers"] {
        let (code, v) = json(&["validate", &algebra(name)]);
        assert_eq!(code, 0, "{}", name);
        assert_eq!(v["passed"], Value::Bool(true));
    }
}

#[test]
fn validate_reports_a_witness_for_a_broken_file() {
    let dir = std::env::temp_dir().join(format!("ncbtt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = std::fs::read_to_string(algebra("kxk")).unwrap();
    let mut f: ncbtt::io::AlgebraFile = serde_json::from_str(&text).unwrap();
    f.pairing.retain(|(x, _, _)| x != "e");
    let p = dir.join("degenerate.json");
    std::fs::write(&p, serde_json::to_string(&f).unwrap()).unwrap();
    let (code, v) = json(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    let failing: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().any(|c| c.get("witness").is_some()));
}

#[test]
fn degeneration_fails_on_dual_numbers() {
    let (code, v) = json(&["degen", &algebra("dualnumbers"), "--u-order", "3", "--max-weight", "8"]);
    assert_eq!(code, 1);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts[0]["verdict"], "PASS");
    assert_eq!(verdicts[1]["verdict"], "FAIL");
    assert_eq!(verdicts[1]["witness"]["total_weight"], 1);
    assert_eq!(v["window"]["reliable_max"], 7);
    let text = ncbtt(&["degen", &algebra("kxk"), "--u-order", "3", "--max-weight", "6"]);
    assert_eq!(text.code, 0);
    assert!(text.stdout.starts_with(ncbtt::cli::BANNER));
}

#[test]
fn dual_numbers_deform_cyclically_to_order_five() {
    let (code, v) = json(&["deform", &algebra("dualnumbers"), "--order", "5", "--cyclic"]);
    assert_eq!(code, 0);
    let probes = v["probes"].as_array().unwrap();
    assert!(!probes.is_empty());
    for p in probes {
        assert_eq!(p["certified_order"], 5);
        assert!(p.get("certificate").is_none());
        if p["cyclic"] == false {
            assert!(p["cyclic_lift"].is_array(), "plain lifts carry a cyclic lift");
            assert!(p["gauge_trace"].is_array());
        }
    }
    assert!(probes.iter().any(|p| p["tangent_class"]["weights"][0]["weight"] == 2));
}

#[test]
fn hh_of_dual_numbers() {
    let (code, v) = json(&["hh", &algebra("dualnumbers"), "--max-weight", "4"]);
    assert_eq!(code, 0);
    let dims: Vec<u64> = v["groups"].as_array().unwrap().iter().map(|g| g["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [2, 1, 1, 1]);
    let (_, v) = json(&["--field", "fp:2", "hh", &algebra("dualnumbers"), "--max-weight", "4"]);
    assert_eq!(v["field"], "Fp:2");
    let dims: Vec<u64> = v["groups"].as_array().unwrap().iter().map(|g| g["dim"].as_u64().unwrap()).collect();
    // In characteristic 2 the Hochschild differential of k[x]/x² vanishes.
    assert_eq!(dims, [2, 2, 2, 2]);
}

#[test]
fn trees_enum_matches_golden() {
    let o = ncbtt(&["trees", "enum", "--arity", "2"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, include_str!("golden/trees_enum_arity2.txt"));
    let (_, v) = json(&["trees", "enum", "--arity", "1", "--max-degree", "1"]);
    assert_eq!(v["trees"], serde_json::json!(["w1", "w1~0"]));
}

#[test]
fn trees_verify_with_and_without_an_algebra() {
    assert_eq!(ncbtt(&["trees", "verify", "--arity", "3"]).code, 0);
    let o = ncbtt(&["--seed", "5", "trees", "verify", &algebra("m2"), "--arity", "2"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("ker_delta_vanishing"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(ncbtt(&[]).code, 2);
    assert_eq!(ncbtt(&["hh"]).code, 2);
    assert_eq!(ncbtt(&["hh", "/nonexistent.json"]).code, 2);
    assert_eq!(ncbtt(&["--field", "fp:4", "hh", &algebra("kxk")]).code, 2);
    let o = ncbtt(&["hh", &algebra("kxk"), "--max-weight", "0"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("error"));
    assert_eq!(ncbtt(&["--help"]).code, 0);
}

#[test]
fn window_incomplete_exits_two() {
    // Lifting weight-4 tangents of k[x]/x³ to order 5 produces residuals
    // two weights above a window of 4.
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/trunc3.json");
    let p = p.to_str().unwrap();
    let args = ["deform", p, "--order", "5", "--max-weight", "4", "--tangent-weight", "4"];
    let o = ncbtt(&args);
    assert_eq!(o.code, 2, "{}{}", o.stdout, o.stderr);
    assert!(o.stderr.contains("window-incomplete"));
    assert!(o.stderr.contains("window_incomplete_weight"));
    let o = ncbtt(&["deform", p, "--order", "5", "--max-weight", "3", "--tangent-weight", "3"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
}

#[test]
fn node_cap_is_enforced() {
    std::env::set_var("NCBTT_MAX_NODES", "10");
    let o = ncbtt(&["trees", "enum", "--arity", "3"]);
    std::env::remove_var("NCBTT_MAX_NODES");
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("cap"));
}
