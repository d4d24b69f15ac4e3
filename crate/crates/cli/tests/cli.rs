use std::process::{Command, Output};

use octoroots::solver::verify_root;
use octoroots::{Algebra, AlgebraParams, Rational, Side};
use octoroots_cli::literal::{parse_octonion, parse_polynomial};
use serde_json::Value;

fn octoroots(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octoroots"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn solve_golden_polynomial() {
    let v = json(&octoroots(&["solve", "--poly", "i*z^2 + j*z + l"]));
    assert_eq!(v["companion"], serde_json::json!(["1", "0", "1", "0", "1"]));
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 2);
    assert_eq!(classes[0]["trace"], "1");
    assert_eq!(classes[0]["norm"], "1");
    assert_eq!(classes[0]["resolution"], "single_root");
    assert_eq!(classes[0]["root_literal"], "1/2 + 1/2*k + 1/2*il + 1/2*jl");
    assert_eq!(
        classes[0]["root"],
        serde_json::json!(["1/2", "0", "0", "1/2", "0", "1/2", "1/2", "0"])
    );
    assert_eq!(classes[1]["trace"], "-1");
    assert_eq!(classes[1]["resolution"], "single_root");
    assert_eq!(classes[1]["root_literal"], "-1/2 + 1/2*k - 1/2*il + 1/2*jl");
}

#[test]
fn key_order_is_fixed() {
    let out = octoroots(&["solve", "--poly", "i*z^2 + j*z + l"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let pos: Vec<usize> = ["\"algebra\"", "\"polynomial\"", "\"companion\"", "\"classes\"", "\"warnings\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{text}");
    let class = &text[text.find("\"classes\"").unwrap()..];
    let pos: Vec<usize> = ["\"trace\"", "\"norm\"", "\"field_degree\"", "\"multiplicity\"", "\"resolution\"", "\"root\""]
        .iter()
        .map(|k| class.find(k).unwrap())
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{class}");
}

#[test]
fn solve_full_class() {
    let v = json(&octoroots(&["solve", "--poly", "z^2 + 1"]));
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0]["trace"], "0");
    assert_eq!(classes[0]["norm"], "1");
    assert_eq!(classes[0]["multiplicity"], 2);
    assert_eq!(classes[0]["resolution"], "full_class");
    assert_eq!(classes[0]["witness_literal"], "i");
}

#[test]
fn split_algebra_exits_3() {
    let out = octoroots(&["solve", "--gamma", "1", "--poly", "z + i"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("unsupported algebra"));
    assert!(out.stdout.is_empty());
}

#[test]
fn input_errors_exit_2() {
    let out = octoroots(&["solve", "--poly", "2*m*z"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("column 3"), "{}", stderr(&out));

    let out = octoroots(&["solve", "--poly", "0.5*z + 1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("float mode"));

    let out = octoroots(&["solve", "--poly", "z^20"]);
    assert_eq!(out.status.code(), Some(2));

    let out = octoroots(&["solve", "--poly", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = octoroots(&["solve", "--alpha", "0", "--poly", "z"]);
    assert_eq!(out.status.code(), Some(2));

    let out = octoroots(&["eigen", "--poly", "2*z^2 + i*z", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("monic"));

    let out = octoroots(&["solve"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eigen_examples() {
    let poly = "z^2 + i*z + (1+k)";
    let v = json(&octoroots(&["eigen", "--poly", poly, "--lambda", "j", "--side", "left"]));
    assert_eq!(v["member"], true);
    assert_eq!(v["kernel_element"], "l");
    assert_eq!(v["class"]["trace"], "0");
    assert_eq!(v["class"]["norm"], "1");

    let v = json(&octoroots(&["eigen", "--poly", poly, "--lambda", "-j", "--side", "right"]));
    assert_eq!(v["member"], true);
    assert_eq!(v["kernel_element"], "1");
    assert_eq!(v["eigenvector"], serde_json::json!(["1", "-j"]));

    for side in ["left", "right"] {
        let v = json(&octoroots(&["eigen", "--poly", poly, "--lambda", "1", "--side", side]));
        assert_eq!(v["member"], false);
        assert_eq!(v["kernel_element"], Value::Null);
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["solve", "--poly", "i*z^2 + j*z + l"][..],
        &["solve", "--poly", "z^3 + (1 + il)*z^2 - kl*z + 2 - j", "--pretty"],
        &["eigen", "--poly", "z^2 + i*z + (1+k)", "--lambda", "1/2*j + il"],
    ] {
        let a = octoroots(args);
        let b = octoroots(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn printed_roots_parse_back_to_roots() {
    let alg = Algebra::<Rational>::new(AlgebraParams::standard());
    for poly in ["i*z^2 + j*z + l", "z^2 + i*z + (1+k)", "z^3 - 2*z + (1/2*i + jl)"] {
        let v = json(&octoroots(&["solve", "--poly", poly]));
        let phi = parse_polynomial::<Rational>(poly, Side::Left).unwrap();
        for class in v["classes"].as_array().unwrap() {
            for key in ["root_literal", "witness_literal"] {
                if let Some(lit) = class[key].as_str() {
                    let x = parse_octonion::<Rational>(lit).unwrap();
                    assert!(verify_root(&alg, &phi, &x), "{lit} from {poly}");
                }
            }
        }
    }
}

#[test]
fn mirror_and_float_modes() {
    let v = json(&octoroots(&["solve", "--poly", "z^2 + i*z + (1+k)", "--mirror"]));
    assert_eq!(v["polynomial"]["side"], "right");
    let lits: Vec<&str> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|c| c["root_literal"].as_str())
        .collect();
    assert_eq!(lits, ["j", "-i + j"]);

    let v = json(&octoroots(&["solve", "--mode", "float", "--poly", "i*z^2 + j*z + l"]));
    assert_eq!(v["algebra"]["mode"], "float");
    let root: Vec<f64> = v["classes"][0]["root"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect();
    let want = [0.5, 0.0, 0.0, 0.5, 0.0, 0.5, 0.5, 0.0];
    assert!(root.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-12), "{root:?}");
}
