use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_g2split")).args(args).output().expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

#[test]
fn invariants_of_x6_minus_1() {
    let (code, v) = run(&["invariants", "x^6-1"]);
    assert_eq!(code, 0);
    assert!(v["classical"]["J2"].is_string());
    assert!(v["absolute"]["i1"].is_string());
}

#[test]
fn classify_z10() {
    let (code, v) = run(&["classify", "x^6-x"]);
    assert_eq!(code, 0);
    assert_eq!(v["aut"], "Z10");
}

#[test]
fn fiber_of_example_six() {
    let (code, v) = run(&["fiber", "--i1", "576/361", "--i2", "60480/6859", "--i3", "243/2476099"]);
    assert_eq!(code, 0);
    assert_eq!(v["e3"], 1);
    assert_eq!(v["rational_solutions"][0]["u"], "20");
    assert_eq!(v["rational_solutions"][0]["v"], "16");
}

#[test]
fn deg2_j_and_reconstruct() {
    let (code, v) = run(&["deg2-j", "--family", "d8", "--t", "1/5"]);
    assert_eq!(code, 0);
    assert_eq!(v["field_kernel"], "5");
    let (code, v) = run(&["reconstruct", "--family", "d12", "--i1", "576/361", "--i2", "60480/6859", "--i3", "243/2476099"]);
    assert_eq!(code, 0);
    assert_eq!(v["t"], "-4/11");
}

#[test]
fn domain_and_usage_errors() {
    let (code, v) = run(&["subcovers", "--u", "1", "--v", "27"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "degenerate-sextic");
    let (code, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);
    let (code, v) = run(&["classify", "x^3+1"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "bad-degree");
}

#[test]
fn rational_points_with_certificate_file() {
    let dir = std::env::temp_dir().join(format!("g2split-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let certs = dir.join("certs.json");
    std::fs::write(&certs, r#"[{"curve-id": "E", "rank": 0, "provenance": "example 2"}]"#).unwrap();
    let (code, v) = run(&["rational-points", "(3x^2+4)(x^3+x)", "--certs", certs.to_str().unwrap(), "--bound", "50"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["points"][0]["x"], "0");
    assert_eq!(v["report"]["points"][1]["infinity"], "single");
    assert_eq!(v["naive"]["agrees"], true);
    std::fs::write(&certs, r#"[{"curve-id": "E", "rank": 1, "provenance": "none"}]"#).unwrap();
    let (code, v) = run(&["rational-points", "(3x^2+4)(x^3+x)", "--certs", certs.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "insufficient-certificates");
}

#[test]
fn examples_are_thin_wrappers() {
    let (code, v) = run(&["examples", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v, g2split_cli::cmd_examples(2).unwrap());
    assert_eq!(v["rational_points"]["matches_printed"], true);
    let (_, v6) = run(&["examples", "6"]);
    assert_eq!(v6["rational_points"]["status"], "undetermined");
    let (_, v3) = run(&["examples", "3"]);
    assert_eq!(v3["subcovers_over"], "Q(sqrt(5))");
}

#[test]
fn table1_is_deterministic() {
    let (code, v) = run(&["table1"]);
    assert_eq!(code, 0);
    let lib = serde_json::to_value(g2split_cli::cmd_table1().unwrap()).unwrap();
    assert_eq!(v, lib);
    assert_eq!(v["records"].as_array().unwrap().len(), 7);
}
