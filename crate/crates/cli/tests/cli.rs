use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn morita(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morita"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn input(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "inputs", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn all_checks_pass(r: &Value) -> bool {
    r["checks"].as_array().expect("checks array").iter().all(|c| c["pass"] == true)
}

#[test]
fn demo_list_is_stable() {
    let out = morita(&["demo", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        report(&out)["result"],
        serde_json::json!([
            "scharlau",
            "azumaya-no-involution",
            "goldman",
            "hyperbolic-quaternion",
            "dyadic",
            "rank-bounds"
        ])
    );
}

#[test]
fn demo_exit_codes_and_citations() {
    for (name, code) in [
        ("scharlau", 2),
        ("azumaya-no-involution", 2),
        ("goldman", 0),
        ("hyperbolic-quaternion", 0),
        ("dyadic", 0),
        ("rank-bounds", 0),
    ] {
        let out = morita(&["demo", name]);
        assert_eq!(out.status.code(), Some(code), "demo {name}");
        let r = report(&out);
        assert!(!r["citation"].as_str().unwrap().is_empty(), "demo {name}");
        assert!(all_checks_pass(&r), "demo {name}: {r}");
    }
}

#[test]
fn scharlau_lists_anti_automorphisms_but_no_involution() {
    let r = report(&morita(&["demo", "scharlau"]));
    assert!(!r["result"]["anti_automorphisms"].as_array().unwrap().is_empty());
    assert_eq!(r["result"]["involutions"], serde_json::json!([]));
    assert_eq!(r["result"]["center_dim"], 1);
}

#[test]
fn azumaya_certificate() {
    let r = report(&morita(&["demo", "azumaya-no-involution"]));
    assert_eq!(r["certificate"]["gcd"], 16);
    assert_eq!(r["certificate"]["delta"], 24);
    assert_eq!(r["certificate"]["modulus"], 48);
    assert_eq!(r["result"]["order_of_l"], 16);
}

#[test]
fn demos_are_byte_identical_across_runs() {
    for name in ["scharlau", "goldman", "hyperbolic-quaternion"] {
        let a = morita(&["demo", name, "--seed", "7"]);
        let b = morita(&["demo", name, "--seed", "7"]);
        assert_eq!(a.stdout, b.stdout, "demo {name}");
    }
}

#[test]
fn transfer_on_transpose_of_m3q_gives_identity() {
    let out = morita(&["transfer", "--input", &input("m3q-transpose.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["beta"], serde_json::json!([["1/1"]]));
    assert!(all_checks_pass(&r));
}

#[test]
fn transfer_over_f2_has_no_symmetric_unit() {
    let out = morita(&[
        "transfer",
        "--input",
        r#"{"algebra": {"builtin": "scalar"}, "n": 2, "alpha": "transpose"}"#,
        "--field",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out)["result"]["error"], "no symmetric unit");
}

#[test]
fn poset_check_exit_codes() {
    let out = morita(&["poset-check", "--input", &input("kite-poset.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(!r["result"]["involutions"].as_array().unwrap().is_empty());
    // a chain with a pendant element below its top has no order-reversing bijection
    let out = morita(&["poset-check", "--input", r#"{"size": 4, "cover": [[0, 1], [1, 2], [3, 2]]}"#]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn algebra_commands_pass_their_checks() {
    for (cmd, file) in [
        ("radical", "ut3.json"),
        ("center", "ut3.json"),
        ("idempotents", "ut3.json"),
        ("basic", "ut3.json"),
        ("poset-of-algebra", "ut3.json"),
        ("hyperbolic", "m2-f5-hyperbolic.json"),
        ("hyperbolic", "quaternion-anti-structure.json"),
        ("anti-structure-m2", "quaternion-anti-structure.json"),
        ("reduce-standard", "m3q-transpose.json"),
        ("incidence", "kite-poset.json"),
        ("form-correspond", "m2q-forms.json"),
        ("orbit", "m2-f5-hyperbolic.json"),
    ] {
        let out = morita(&[cmd, "--input", &input(file)]);
        assert_eq!(out.status.code(), Some(0), "{cmd} {file}: {}", String::from_utf8_lossy(&out.stderr));
        let r = report(&out);
        assert_eq!(r["command"], cmd);
        assert!(all_checks_pass(&r), "{cmd} {file}: {r}");
    }
}

#[test]
fn radical_of_ut3_is_strictly_upper() {
    let r = report(&morita(&["radical", "--input", &input("ut3.json")]));
    assert_eq!(r["result"]["dim"], 3);
}

#[test]
fn steinitz_with_a_solvable_class() {
    let out = morita(&["steinitz", "--input", r#"{"pic": [48], "l": [0], "j": [5]}"#]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["exists"], true);
}

#[test]
fn small_characteristic_is_inconclusive_not_negative() {
    let out = morita(&["radical", "--input", r#"{"builtin": "upper_triangular", "n": 2}"#, "--field", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn input_errors_exit_one_on_stderr() {
    let out = morita(&["radical", "--input", "{not json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    let out = morita(&["demo", "no-such-demo"]);
    assert_eq!(out.status.code(), Some(1));
    let out = morita(&["steinitz", "--input", r#"{"pic": [48]}"#]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = morita(&["demo", "dyadic", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["result"]["orbit_of_2"][1], "1");
}
