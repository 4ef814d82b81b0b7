use std::path::Path;
use std::process::{Command, Output};

use logchern_cli::parse_json;

fn logchern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logchern")).args(args).env_remove("LOGCHERN_CATALOG").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const P2_FILE: &str = "space Plane\ndim 2\ngen H 2\nrel H^3\npoint H^2\nctx 1+3*H+3*H^2\n\
                       divisor toric = H, H, H\ndivisor conic = 2*H\nstrata nodal = 3*H; 3*H^2\n\
                       center pt { dim 0; pdY H^2; cN 1 }\n";

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn toric_boundary_is_trivial() {
    let o = logchern(&["logchern", "catalog:P2", "toric"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("c(TX(-log V)):\n  deg 0: 1\n"), "{out}");
    assert!(out.contains("[PASS] integrality of c(TX(-log V))"));
}

#[test]
fn point_blowup_verifies() {
    let o = logchern(&["verify-cor15", "catalog:P2", "twolines", "pt_in_P2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("lhs: 1 + H\n  rhs: 1 + H\n"), "{out}");
    assert!(out.contains("deg 2: 3*H - e\n  deg 4: 4*H^2\n"));
    assert!(out.ends_with("result: PASS\n"));
}

#[test]
fn line_blowup_ring() {
    let o = logchern(&["blowup", "catalog:P3", "line_in_P3", "--emit-ring"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("  e^2 - 2*H*e + H^2\n"), "{out}");
    assert!(out.contains("betti: (1,2,2,1)"));
    assert!(out.contains("integral of e^3 = -2"));
    let plain = stdout(&logchern(&["blowup", "catalog:P3", "line_in_P3"]));
    assert!(!plain.contains("ring relations"));
}

#[test]
fn verdict_failure_exits_one() {
    let o = logchern(&["verify-cor15", "catalog:P2", "toric", "pt_in_P2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] number of components equals codimension"));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["logchern", "catalog:P2", "nothing"],
        vec!["logchern", "catalog:P42", "toric"],
        vec!["logchern", "catalog:P2"],
        vec!["verify-grr", "/no/such/file", "x"],
    ] {
        let o = logchern(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: ["), "{args:?}");
    }
}

#[test]
fn parse_errors_are_positioned() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.space", &P2_FILE.replace("rel H^3", "rel H^3 + H"));
    let o = logchern(&["logchern", &path, "toric"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("line 4, column 5: [degree-mismatch]"), "{err}");
    let o = logchern(&["logchern", &path, "toric", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["error"]["code"], "degree-mismatch");
    assert_eq!(v["error"]["line"], 4);
    assert_eq!(v["error"]["column"], 5);
}

#[test]
fn space_files_and_strata() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "plane.space", P2_FILE);
    let o = logchern(&["logchern", &path, "toric"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&logchern(&["strata", &path, "nodal"]));
    assert!(out.contains("PD[V^(2)]:\n  deg 4: 3*H^2\n"), "{out}");
    let o = logchern(&["logchern", &path, "nodal"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("c(TX(-log V)):\n  deg 0: 1\nc1(O(V)):\n  deg 2: 3*H\n"));
    let o = logchern(&["verify-grr", &path, "nodal"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[unsupported]"));
    let o = logchern(&["blowup", &path, "pt"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn catalog_directories() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "plane.space", P2_FILE);
    let d = dir.path().display().to_string();
    let o = logchern(&["logchern", "catalog:Plane", "conic", "--catalog-dir", &d]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("deg 2: H\n"));
    let o = Command::new(env!("CARGO_BIN_EXE_logchern"))
        .args(["logchern", "catalog:Plane", "conic"])
        .env("LOGCHERN_CATALOG", &d)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let listing = stdout(&logchern(&["catalog", "--catalog-dir", &d]));
    assert!(listing.contains("P1xP1: product P1 x P1"));
    assert!(listing.contains("Plane: "));
}

#[test]
fn catalog_entry_description() {
    let o = logchern(&["catalog", "P1xP1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("[PASS] integral of c_n(TX) equals the recorded Euler characteristic"));
    assert!(out.contains("space file:\nspace P1xP1\ndim 2\ngen a 2\ngen b 2\n"), "{out}");
}

#[test]
fn json_reports_round_trip_and_are_deterministic() {
    let args = ["verify-cor15", "catalog:P3", "twoplanes", "line_in_P3", "--json"];
    let first = logchern(&args);
    let second = logchern(&args);
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    let report = parse_json(&text).unwrap();
    assert_eq!(logchern_cli::emit_json(&report), text);
    let c = report.classes.iter().find(|c| c.name == "c(TX~)").unwrap();
    assert_eq!(c.coefficients["4"]["H^2"], "7");
    assert_eq!(c.coefficients["4"]["H*e"], "-4");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(text.find("\"classes\"").unwrap() < text.find("\"command\"").unwrap());
    let text_a = logchern(&["verify-cor15", "catalog:P3", "twoplanes", "line_in_P3"]);
    let text_b = logchern(&["verify-cor15", "catalog:P3", "twoplanes", "line_in_P3"]);
    assert_eq!(text_a.stdout, text_b.stdout);
}

#[test]
fn max_degree_and_timing() {
    let out = stdout(&logchern(&["verify-cor15", "catalog:P3", "twoplanes", "line_in_P3", "--max-degree", "2"]));
    assert!(out.contains("c(TX~):\n  deg 0: 1\n  deg 2: 4*H - e\n  (components above degree 2 hidden)\n"), "{out}");
    let out = stdout(&logchern(&["logchern", "catalog:P2", "toric", "--timing"]));
    assert!(out.contains("elapsed: "));
}

#[test]
fn every_command_runs() {
    for args in [
        vec!["strata", "catalog:P3", "threeplanes"],
        vec!["verify-logpullback", "catalog:P3", "twoplanes", "line_in_P3"],
        vec!["verify-split", "catalog:P3", "threeplanes"],
        vec!["verify-split", "catalog:P1xP1", "toric", "a1"],
        vec!["verify-grr", "catalog:P2", "toric"],
        vec!["check-integrality", "catalog:P1xP2", "toric"],
        vec!["catalog"],
    ] {
        let o = logchern(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    }
}
