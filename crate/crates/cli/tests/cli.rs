use std::process::{Command, Output};

use niven::cyclofield::CycloElement;
use niven::independence::Verdict;
use niven::report::{ClassifyReport, CycloReport, ElementJson, IndepReport, MinPolyReport, SuiteReport};

fn niven(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_niven")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = niven(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    niven(args).status.code().unwrap()
}

#[test]
fn cyclo_text() {
    let s = stdout(&["cyclo", "12"]);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("Φ_12(z) = z⁴ − z² + 1"));
    assert_eq!(lines.next(), Some("triple (0, −1, 0)"));
}

#[test]
fn cyclo_json() {
    let r: CycloReport = serde_json::from_str(&stdout(&["cyclo", "105", "--json"])).unwrap();
    assert_eq!(r.n, 105);
    assert_eq!(r.phi_n, 48);
    // the famous −2 sits at z^7 and z^41
    assert_eq!(r.poly.coeff(7).to_string(), "-2");
}

#[test]
fn phi_at_i() {
    assert_eq!(stdout(&["phi-i", "21"]).trim(), "Φ_21(i) = −1");
    assert_eq!(stdout(&["phi-i", "3"]).trim(), "Φ_3(i) = i");
}

#[test]
fn minpoly_root_round_trips() {
    let r: MinPolyReport = serde_json::from_str(&stdout(&["--json", "minpoly", "sin", "3/10"])).unwrap();
    let root = CycloElement::try_from(&r.root).unwrap();
    let back = ElementJson::from(&root);
    assert_eq!(serde_json::to_value(&back).unwrap(), serde_json::to_value(&r.root).unwrap());
    assert_eq!(r.degree, r.poly.degree().unwrap() as u64);
}

#[test]
fn minpoly_text() {
    let s = stdout(&["minpoly", "cos", "1/5"]);
    assert!(s.starts_with("z² − z − 1"), "{s}");
    assert_eq!(stdout(&["--quiet", "minpoly", "cos", "-1/3"]).trim(), "z − 1 = P_3(z)");
}

#[test]
fn golden_dependence() {
    let s = stdout(&["indep", "1/5", "2/5", "--oracle"]);
    assert_eq!(s.lines().next(), Some("dependent: 2cos(π/5) − 2cos(2π/5) = 1"));
    let s = stdout(&["indep", "1/7", "2/7"]);
    assert_eq!(s.trim(), "independent");
}

#[test]
fn indep_json_round_trip() {
    let text = stdout(&["--json", "indep", "1/8", "3/8", "--field", "2"]);
    let r: IndepReport = serde_json::from_str(&text).unwrap();
    assert!(!r.verdict().unwrap().independent);
    assert_eq!(serde_json::to_string_pretty(&r).unwrap(), text.trim());
}

#[test]
fn oracle_many() {
    let v: Verdict = serde_json::from_str(&stdout(&["--json", "oracle", "1/7", "3/7", "5/7"])).unwrap();
    assert!(!v.independent);
    assert_eq!(stdout(&["oracle", "1/9", "2/9"]).trim(), "independent");
}

#[test]
fn factor_q() {
    let s = stdout(&["factor-q", "8", "--d1", "2"]);
    assert_eq!(s.lines().count(), 3);
    assert!(s.contains("z² − 2 − √2"), "{s}");
    let s = stdout(&["factor-q", "7"]);
    assert_eq!(s.lines().count(), 2);
}

#[test]
fn classify_twelve() {
    let r: ClassifyReport = serde_json::from_str(&stdout(&["triangles", "classify", "--max-n", "12", "--json"])).unwrap();
    assert_eq!(r.triangles.len(), 14);
    assert_eq!((r.isosceles, r.right, r.neither), (7, 3, 5));
}

#[test]
fn triangle_check() {
    assert!(stdout(&["triangles", "check", "1", "5", "6", "12"]).contains("high school triangle"));
    assert!(stdout(&["triangles", "check", "1", "2", "4", "7"]).contains("not a high school"));
    assert_eq!(code(&["triangles", "check", "1", "1", "1", "4"]), 2);
}

#[test]
fn pair_table() {
    let s = stdout(&["figure3"]);
    assert_eq!(s.lines().count(), 16);
    assert!(s.lines().nth(2).unwrap().trim_start().starts_with("2  x  #  #  ."));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["cyclo", "0"]), 2);
    assert_eq!(code(&["indep", "1/8", "3/8", "--field", "4"]), 2);
    assert_eq!(code(&["minpoly", "tan", "1/5"]), 2);
    assert_eq!(code(&["minpoly", "cos", "1/0"]), 2);
    assert_eq!(code(&["verify", "--suite", "nope"]), 2);
    assert_eq!(code(&["nope"]), 2);
    assert_eq!(code(&["indep", "1/8", "3/8", "--field", "-1"]), 2);
    assert_eq!(code(&["cyclo", "1"]), 0);
}

#[test]
fn verify_small_suite_json() {
    let r: SuiteReport = serde_json::from_str(&stdout(&["verify", "--suite", "identities", "--json"])).unwrap();
    assert!(r.passed);
    assert!(r.checks.iter().all(|c| c.passed));
}

#[test]
fn verify_all() {
    let out = niven(&["verify", "--suite", "all"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{s}");
    assert!(s.lines().last().unwrap().ends_with("0 failed"));
    assert!(!s.contains("FAIL"));
}
