use std::process::{Command, Output};

use qhsing::catalog::{catalog_normal_form, catalog_vars, Family, TypeTag};
use qhsing::exactpoly::rat_int;
use qhsing_cli::analyze;
use serde_json::Value;

fn qhsing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhsing"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn qhsing_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhsing"))
        .args(args)
        .env("RAYON_NUM_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("single JSON document")
}

#[test]
fn analyze_p8_surface() {
    let out = qhsing(&["analyze", "z1^3+z2^3+z3^3", "--vars", "z1,z2,z3", "--p", "2"]);
    let v = json(&out);
    let text = String::from_utf8(out.stdout).unwrap();
    let top: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("  \"")?.split('"').next())
        .collect();
    assert_eq!(top, ["input", "weights", "invariants", "link", "lift", "meta"]);
    assert_eq!(v["invariants"]["recognized_type"], "P8");
    assert_eq!(v["invariants"]["milnor_number"], "8");
    assert_eq!(v["weights"]["kappa"], "1/1");
    assert_eq!(v["link"]["rational_sphere"], false);
    assert_eq!(v["lift"]["lifts_to_ih"], "no");
    assert_eq!(
        v["invariants"]["characteristic_polynomial"]["expanded"],
        "t^8 + t^7 + t^6 - 2*t^5 - 2*t^4 - 2*t^3 + t^2 + t + 1"
    );
}

#[test]
fn analyze_e6_surface() {
    let v = json(&qhsing(&["analyze", "z1^3+z2^4+z3^2", "--vars", "z1,z2,z3"]));
    assert_eq!(v["invariants"]["recognized_type"], "E6");
    assert_eq!(v["invariants"]["milnor_number"], "6");
    assert_eq!(v["weights"]["kappa"], "13/12");
    assert_eq!(v["lift"]["lifts_to_ih"], "yes");
    assert_eq!(v["weights"]["a"], serde_json::json!(["1/3", "1/4", "1/2"]));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| qhsing(args).status.code();
    assert_eq!(code(&["analyze", "z1^2+z1^3", "--vars", "z1"]), Some(3));
    assert_eq!(code(&["analyze", "z1^2+", "--vars", "z1"]), Some(2));
    assert_eq!(code(&["analyze", "w^2", "--vars", "z1"]), Some(2));
    assert_eq!(code(&["analyze", "z1^2", "--vars", "z1,z2"]), Some(4));
    assert_eq!(code(&["analyze", "z1^2*z2^2", "--vars", "z1,z2"]), Some(5));
    assert_eq!(code(&["analyze", "z1^2+z2^2", "--vars", "z1,z2", "--p", "abc"]), Some(2));
    assert_eq!(code(&["catalog", "X9", "--n", "1", "--modulus", "2"]), Some(2));
    assert_eq!(code(&["catalog", "X9", "--n", "1", "--modulus", "-2"]), Some(2));
    assert_eq!(code(&["verify"]), Some(0));
}

#[test]
fn output_is_deterministic_across_runs_and_threads() {
    let args = ["analyze", "z1^3+z2^7+z3^2+z4^2", "--vars", "z1,z2,z3,z4", "--p", "5/2"];
    let one = qhsing_threads(&args, "1");
    let many = qhsing_threads(&args, "4");
    let again = qhsing_threads(&args, "4");
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(many.stdout, again.stdout);
    let md = ["analyze", "x*y+y^100+z^2+t^2", "--vars", "x,y,z,t", "--format", "markdown"];
    assert_eq!(qhsing_threads(&md, "1").stdout, qhsing_threads(&md, "3").stdout);
}

#[test]
fn tables_json() {
    let v = json(&qhsing(&["tables", "parabolic", "--n", "3", "--format", "json"]));
    let p8 = &v["rows"][0];
    assert_eq!(p8["type"], "P8");
    assert_eq!(p8["b"], "yes");
    assert_eq!(p8["factored"], "Phi2^2*Phi6^3");
    let w = json(&qhsing(&["tables", "weights", "--n", "4", "--k-range", "2..3", "--format", "json"]));
    let types: Vec<&str> = w["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["type"].as_str().unwrap())
        .collect();
    assert_eq!(types, ["A2", "A3", "E6", "E7", "E8", "P8", "X9", "J10"]);
    assert_eq!(qhsing(&["tables", "simple", "--k-range", "0..3"]).status.code(), Some(2));
}

#[test]
fn catalog_commands() {
    let out = qhsing(&["catalog", "A3", "--n", "2"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "A3 (n = 2): `z1^4 + z2^2 + z3^2`\n");
    let v = json(&qhsing(&["catalog", "P8", "--n", "2", "--format", "json"]));
    assert_eq!(v["polynomial"], "z1^3 + z2^3 + z3^3");
    assert_eq!(v["modulus"], "0/1");
    let list = json(&qhsing(&["catalog", "--format", "json"]));
    assert_eq!(list.as_array().unwrap().len(), 8);
}

#[test]
fn catalog_round_trip() {
    let mut tags: Vec<TypeTag> = (1..=8).map(TypeTag::a).collect();
    tags.extend((4..=9).map(TypeTag::d));
    tags.extend(
        [Family::E6, Family::E7, Family::E8, Family::P8, Family::X9, Family::J10]
            .map(TypeTag::exceptional),
    );
    for tag in tags {
        for n in tag.family().min_n()..=3 {
            let moduli = if tag.family().is_parabolic() { vec![None, Some(rat_int(1))] } else { vec![None] };
            for a in moduli {
                let vars = catalog_vars(n);
                let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
                let text = catalog_normal_form(&tag, n, a.as_ref()).unwrap().to_text(&refs);
                let report = analyze(&text, &vars, &rat_int(2)).unwrap();
                assert_eq!(report.invariants.recognized_type, tag.to_string(), "{text}");
            }
        }
    }
}
