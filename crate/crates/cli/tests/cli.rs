use std::process::{Command, Output};

use serde_json::Value;

fn lwcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lwcert")).args(args).env_remove("LWCERT_FAULT").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    assert_eq!(code(o), 0, "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn decimal(s: &str) -> f64 {
    match s.split_once('/') {
        Some((n, d)) => n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap(),
        None => s.parse().unwrap(),
    }
}

const SQRT2: &str = "root:x^2-2@1.41";
const MSQRT2: &str = "root:x^2-2@-1.41";

#[test]
fn arith_example() {
    let v = json(&lwcert(&["arith", "--op", "mul", "--a", SQRT2, "--b", "root:x^2-3@1.73"]));
    assert_eq!(v["result"]["minpoly"], "x^2 - 6");
    assert!(v["result"]["approx"]["re"].as_str().unwrap().starts_with("2.449489742783178"));
}

#[test]
fn certify_pi_example() {
    let v = json(&lwcert(&["certify-pi", "--poly", "x - 1", "--pmax", "11", "--prec", "256"]));
    let certs = v["certificates"].as_array().unwrap();
    let c3 = certs.iter().find(|c| c["p"] == 3).unwrap();
    assert_eq!(c3["C"], "-119");
    assert_eq!(c3["F0"], "32");
    assert_eq!(c3["residue_ok"], true);
    let keys: Vec<&str> = c3.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["machine", "p", "C", "residue_ok", "B", "F0", "lower_bound", "enclosure", "precision_bits"]);
    let enc: Vec<&str> = c3["enclosure"].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(enc, ["re_mid", "im_mid", "radius"]);
    assert_eq!(c3["precision_bits"], 256);
    let lb = decimal(v["best"]["lower_bound"].as_str().unwrap());
    assert!(lb > 3.6 && lb <= 3.71829, "{lb}");
}

#[test]
fn certify_lw_carries_index() {
    let alphas = format!("{SQRT2}, {MSQRT2}");
    let v = json(&lwcert(&["certify-lw", "--alphas", &alphas, "--b", "1, 1", "--pmax", "13"]));
    let best = &v["best"];
    assert!(best["j"].is_u64());
    assert_eq!(best["machine"]["kind"], "lw");
    let lb = decimal(best["lower_bound"].as_str().unwrap());
    assert!(lb > 0.0 && lb <= 18.978);
}

#[test]
fn symcheck_example() {
    let o = lwcert(&["symcheck", "--set", "root:x^2+1@i, root:x^2+1@-i"]);
    assert_eq!(json(&o)["polynomial"], "x^2 + 1");
}

#[test]
fn empty_sweep() {
    let o = lwcert(&["certify-pi", "--poly", "x - 1", "--pmax", "1"]);
    assert_eq!(json(&o), serde_json::json!({"certificates": []}));
}

#[test]
fn embeddings_table_has_a_row_per_embedding() {
    for gens in ["root:x^4-10*x^2+1@3.146", "root:x^2-2@1.41, root:x^2-3@1.73"] {
        let o = lwcert(&["embeddings", "--gens", gens, "--format", "table"]);
        assert_eq!(code(&o), 0);
        let text = String::from_utf8(o.stdout).unwrap();
        // header, rule, rows
        assert_eq!(text.lines().count(), 2 + 4, "{text}");
    }
}

#[test]
fn reduce_example() {
    let c = format!("{SQRT2}, {MSQRT2}");
    let v = json(&lwcert(&["reduce-qbar", "--c", &c, "--alphas", "0, 1"]));
    assert_eq!(v["coefficients"], serde_json::json!(["-2", "4", "-2"]));
    assert_eq!(v["degree"], 2);
}

#[test]
fn lemma_commands() {
    let v = json(&lwcert(&["norm", "--gen", "root:x^3-2@1.26", "--elem", "x + 1"]));
    assert_eq!((v["norm"].as_str(), v["closed_form"].as_str()), (Some("3"), Some("3")));
    let v = json(&lwcert(&["denominator", "--value", "root:2*x^2-3@1.22"]));
    assert_eq!((v["d"].as_str(), v["algebraic_integer"].as_bool()), (Some("2"), Some(false)));
    let v = json(&lwcert(&["primediv", "--value", "root:x^2-12@3.46"]));
    assert_eq!(v["primes"], serde_json::json!(["2"]));
    let v = json(&lwcert(&["conjugates", "--value", "root:x^3-2@1.26"]));
    assert_eq!(v["conjugates"].as_array().unwrap().len(), 3);
    let v = json(&lwcert(&["minpoly", "--value", "root:x^4+x+1@0.727+0.934i"]));
    assert_eq!(v["degree"], 4);
}

#[test]
fn json_is_byte_stable() {
    let alphas = format!("{SQRT2}, {MSQRT2}");
    let args = ["certify-lw", "--alphas", &alphas, "--b", "1,1", "--pmax", "11"];
    let (a, b) = (lwcert(&args), lwcert(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let args = ["certify-pi", "--poly", "x^2 + 1", "--pmax", "7"];
    let direct = lwcert(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let o = lwcert(&with_out);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn exit_2_on_usage_and_parse_errors() {
    for args in [
        vec!["minpoly", "--value", "3", "--bogus"],
        vec!["certify-pi", "--poly", "x^^2"],
        vec!["minpoly", "--value", "root:x^2-2"],
        vec!["minpoly", "--value", "root:x^2-2@abc"],
        vec!["certify-pi", "--poly", "x - 1", "--prec", "0"],
        vec!["certify-pi", "--poly", "x - 1", "--cap", "0"],
        vec!["arith", "--op", "pow", "--a", "1", "--b", "2"],
        vec!["certify-lw", "--alphas", "0, 1", "--b", "1"],
        vec!["frobnicate"],
    ] {
        assert_eq!(code(&lwcert(&args)), 2, "{args:?}");
    }
}

#[test]
fn exit_3_on_domain_errors() {
    for args in [
        // not closed under conjugation
        vec!["symcheck", "--set", SQRT2],
        // the hint box holds both roots of x^2 - 1/100
        vec!["minpoly", "--value", "root:x^2-1/100@0"],
        // no root within 0.01 of 1.5
        vec!["minpoly", "--value", "root:x^2-2@1.50"],
        vec!["certify-lw", "--alphas", "1, 1", "--b", "1, 1"],
        vec!["arith", "--op", "div", "--a", "1", "--b", "0"],
        vec!["certify-lw", "--alphas", &format!("{SQRT2}, {MSQRT2}"), "--b", "1,1", "--cap", "3"],
    ] {
        let o = lwcert(&args);
        assert_eq!(code(&o), 3, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn exit_4_on_consistency_failure() {
    let o = Command::new(env!("CARGO_BIN_EXE_lwcert"))
        .args(["norm", "--gen", "root:x^3-2@1.26", "--elem", "x + 1"])
        .env("LWCERT_FAULT", "consistency")
        .output()
        .unwrap();
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("consistency"));
}

#[test]
fn exit_5_on_unwritable_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.json");
    let o = lwcert(&["minpoly", "--value", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 5);
}
