//! End-to-end tests of the `irrcert` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn irrcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irrcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_auto_irreducible() {
    let out = irrcert(&["check", "-f", "x^2 + x + 4"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["outcome"]["kind"], "Irreducible");
    assert_eq!(doc["input"], "x^2 + x + 4");
    assert_eq!(doc["content"], "1");
    assert!(doc["hypothesis_trace"].as_array().unwrap().iter().all(|h| h["holds"] == true));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Irreducible"));
}

#[test]
fn check_explicit_theorems() {
    let out = irrcert(&["check", "-f", "4+x+x^2", "--criterion", "thm1", "--p", "2", "--k", "2", "--d", "1", "--j", "1"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["theorem"], "T1");
    assert_eq!(doc["witnesses"]["p"], 2);
    assert_eq!(doc["witnesses"]["d"], "1");

    let out = irrcert(&["check", "-f", "6+x+x^2", "--criterion", "thmA", "--p", "3", "--d", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["root_proof"]["radius"], "2");

    let out = irrcert(&["check", "-f", "6+2x+3x^2", "--criterion", "thm2", "--p", "3", "--k", "1", "--d", "1", "--j", "1"]);
    assert_eq!(code(&out), 0);

    let out = irrcert(&["check", "-f", "x^3+2x+2", "--criterion", "thmB", "--p", "2", "--k", "1"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn check_reducible_and_inconclusive() {
    let out = irrcert(&["check", "-f", "x^2+3x+2"]);
    assert_eq!(code(&out), 1);
    let doc = json(&out);
    assert_eq!(doc["outcome"]["kind"], "Reducible");
    assert_eq!(doc["outcome"]["factors"].as_array().unwrap().len(), 2);

    let out = irrcert(&["check", "-f", "x^4+4x^2+4", "--criterion", "thmB", "--p", "2", "--k", "1"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["outcome"]["kind"], "Inconclusive");

    // no criterion applies and the degree exceeds the oracle cap
    let out = irrcert(&["check", "-f", "x^2+x+1", "--max-degree", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_and_parse_errors() {
    let out = irrcert(&["check", "-f", "x^2+x+4", "--criterion", "thm1", "--p", "2"]);
    assert_eq!(code(&out), 64);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--k"));

    assert_eq!(code(&irrcert(&["check", "-f", "x^2+x+4", "--criterion", "thmA", "--p", "4", "--d", "1"])), 64);
    assert_eq!(code(&irrcert(&["frobnicate"])), 64);
    assert_eq!(code(&irrcert(&["generate", "x", "--p", "2", "--k", "2", "--j", "2", "--n", "5"])), 64);
    assert_eq!(code(&irrcert(&["generate", "y", "--p", "3", "--k", "1", "--j", "1", "--n", "2"])), 64);

    let out = irrcert(&["check", "-f", "x^^2"]);
    assert_eq!(code(&out), 65);
    assert!(String::from_utf8_lossy(&out.stderr).contains("column"));

    assert_eq!(code(&irrcert(&["--help"])), 0);
}

#[test]
fn bound_exceeded_is_70() {
    let out = irrcert(&["oracle", "-f", "x^7+x+1"]);
    assert_eq!(code(&out), 70);
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound exceeded"));
}

#[test]
fn reads_polynomial_from_file() {
    let dir = std::env::temp_dir().join(format!("irrcert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.txt");
    std::fs::write(&path, "3x^2 + 2x + 6\n").unwrap();
    let out = irrcert(&["check", "-f", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["input"], "3x^2 + 2x + 6");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bound_reports_both_methods() {
    let out = irrcert(&["bound", "-f", "x^2+x+6", "--d", "2", "--json"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let proofs = doc["proofs"].as_array().unwrap();
    assert_eq!(proofs[0]["verdict"], "Inconclusive");
    assert_eq!(proofs[1]["verdict"], "CertifiedOutside");

    let out = irrcert(&["bound", "-f", "x^2+4", "--d", "2", "--method", "schur"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("NotAllOutside"));
    assert_eq!(code(&irrcert(&["bound", "-f", "x+3", "--d", "0"])), 64);
}

#[test]
fn generate_families() {
    let out = irrcert(&["generate", "x", "--p", "3", "--k", "2", "--j", "1", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["input"], "3x^3 + 3x^2 + 8x + 27");
    assert_eq!(doc["witnesses"]["k"], 3);

    let out = irrcert(&["generate", "y", "--p", "3", "--k", "1", "--j", "1", "--n", "2", "--m", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["theorem"], "T2");
}

#[test]
fn oracle_and_fuzz() {
    let out = irrcert(&["oracle", "-f", "x^4+4"]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("(x^2 - 2x + 2)(x^2 + 2x + 2)"), "{text}");

    let out = irrcert(&["oracle", "-f", "x^2+x+1", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["irreducible"], true);

    let a = irrcert(&["fuzz", "--trials", "200", "--seed", "7", "--json"]);
    let b = irrcert(&["fuzz", "--trials", "200", "--seed", "7", "--json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["violated"], 0);
}

#[test]
fn certificate_output_is_deterministic() {
    let args = ["check", "-f", "x^4 + 3x^3 + 3x + 3"];
    let first = irrcert(&args);
    assert_eq!(first.stdout, irrcert(&args).stdout);
    assert!(first.stdout.ends_with(b"}\n"));
}

#[test]
fn quiet_suppresses_summary() {
    let out = irrcert(&["--quiet", "check", "-f", "x^2+x+4"]);
    assert_eq!(code(&out), 0);
    assert!(out.stderr.is_empty());
    assert!(!out.stdout.is_empty());
}

#[test]
fn document_has_fixed_fields() {
    let doc = json(&irrcert(&["check", "-f", "2x^2+2x+8"]));
    let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    let mut expected = vec![
        "input",
        "primitive_part",
        "content",
        "outcome",
        "theorem",
        "witnesses",
        "root_proof",
        "hypothesis_trace",
        "tool_version",
    ];
    let mut got = keys.clone();
    got.sort_unstable();
    expected.sort_unstable();
    assert_eq!(got, expected);
    assert_eq!(doc["content"], "2");
    assert_eq!(doc["primitive_part"], "x^2 + x + 4");
}
