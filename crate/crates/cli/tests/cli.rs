use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn skewalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json_report(args: &[&str], dir: &Path, file: &str) -> (Output, Value) {
    let path = dir.join(file);
    let mut all = args.to_vec();
    let p = path.to_str().unwrap();
    all.extend(["--json", p]);
    let out = skewalg(&all);
    let report = serde_json::from_str(&std::fs::read_to_string(&path).expect("report written")).unwrap();
    (out, report)
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../docs/report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).expect("schema compiles")
}

fn assert_valid(report: &Value) {
    let v = schema();
    let errors: Vec<String> = v.iter_errors(report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{report:#}");
}

#[test]
fn example_verification_passes() {
    let out = skewalg(&["verify", "example", "--right-degree", "3", "--window", "4", "--samples", "40"]);
    assert!(out.status.success(), "{}{}", stdout(&out), stderr(&out));
    let text = stdout(&out);
    for name in ["example_minpoly", "right_alg_kernel", "left_sanity_kernel", "monomial_witness"] {
        assert!(text.contains(&format!("PASS {name}")), "{text}");
    }
}

#[test]
fn minpoly_prints_a_degree_two_certificate() {
    let out = skewalg(&["minpoly", "--element", "x0+t", "--over", "K", "--bound", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree: 2"), "{text}");
    assert!(text.contains("poly: X^2 - (x0 + x1)*X + (x0*x1 - t^2)"), "{text}");
}

#[test]
fn minpoly_over_smaller_subrings_reports_the_bound() {
    for over in ["F", "Q"] {
        let out = skewalg(&["minpoly", "--element", "x0 + t", "--over", over, "--bound", "3"]);
        assert!(out.status.success());
        assert!(stdout(&out).contains("no left relation of degree <= 3"), "{}", stdout(&out));
    }
}

#[test]
fn pipeline_bound_violation_fails() {
    let out = skewalg(&["quat", "pipeline", "--a", "-1", "--b", "-1", "--x", "j", "--d", "1"]);
    assert!(!out.status.success());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("pipeline"));
    assert!(stdout(&out).contains("m = 2 exceeds d = 1"));
}

#[test]
fn pipeline_on_j_with_room() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["quat", "pipeline", "--x", "j", "--d", "2"];
    let (out, report) = json_report(&args, dir.path(), "pipe.json");
    assert!(out.status.success());
    assert_valid(&report);
    let checks = report["checks"].as_array().unwrap();
    let pipeline = checks.iter().find(|c| c["name"] == "pipeline").unwrap();
    assert_eq!(pipeline["certificate"]["u_minpoly"], "X^2 + 1");
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn split_algebras_are_refused() {
    let out = skewalg(&["quat", "minpoly", "--a", "1", "--b", "1", "--q", "i"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("split"), "{}", stderr(&out));
}

#[test]
fn quaternion_minpoly_over_the_center() {
    let out = skewalg(&["quat", "minpoly", "--q", "1 + i + j"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("poly: X^2 - 2*X + 3"));
}

#[test]
fn parse_errors_name_the_offset() {
    let out = skewalg(&["minpoly", "--element", "t^x0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("byte 2"), "{}", stderr(&out));
    let out = skewalg(&["quat", "minpoly", "--q", "2*"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_sorted_valid_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "normal-subgroup", "--samples", "30", "--seed", "11"];
    let (first_out, mut first) = json_report(&args, dir.path(), "a.json");
    let (_, mut second) = json_report(&args, dir.path(), "b.json");
    assert!(first_out.status.success());
    assert_valid(&first);
    let names: Vec<&str> = first["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
    assert_eq!(first["seed"], 11);
    assert_eq!(first["params"]["samples"], "30");
    first.as_object_mut().unwrap().remove("timings");
    second.as_object_mut().unwrap().remove("timings");
    assert_eq!(first, second);
}

#[test]
fn every_verify_subcommand_produces_a_valid_report() {
    let dir = tempfile::tempdir().unwrap();
    for sub in ["degmin", "centralizer", "thm23", "lemma22"] {
        let args = ["verify", sub, "--samples", "12", "--precision", "8"];
        let (out, report) = json_report(&args, dir.path(), &format!("{sub}.json"));
        assert!(out.status.success(), "{sub}: {}{}", stdout(&out), stderr(&out));
        assert_valid(&report);
        assert_eq!(report["command"], format!("verify {sub}"));
    }
}
