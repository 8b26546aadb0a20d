use std::process::{Command, Output};

fn qhmin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhmin")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = qhmin(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn products() {
    assert_eq!(stdout(&["product", "E6/P1", "H", "H"]), "s2");
    assert_eq!(stdout(&["product", "E6/P1", "s'4", "s''4"]), "2·s'8 + s''8");
    assert_eq!(stdout(&["product", "E6/P1", "pt", "pt", "--quantum"]), "q^2·s8");
    assert_eq!(stdout(&["product", "E6/P1", "pt", "pt"]), "0");
    assert_eq!(stdout(&["product", "E7/P7", "pt", "pt", "--quantum"]), "q^3·s0");
    assert_eq!(stdout(&["product", "A3/P2", "H", "s3", "--quantum"]), "s4 + q·s0");
}

#[test]
fn product_json() {
    let out = stdout(&["product", "E6/P1", "s''12", "H", "--quantum", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["u"], "s''12");
    let terms = v["product"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert!(terms.iter().any(|t| t["class"] == "s1" && t["q"] == 1 && t["coef"] == 1));
}

#[test]
fn small_queries() {
    assert_eq!(stdout(&["degree", "E6/P1", "X"]), "78");
    assert_eq!(stdout(&["degree", "E7/P7", "top"]), "13110");
    assert_eq!(stdout(&["delta", "E6/P1", "s8"]), "2");
    assert_eq!(stdout(&["dual", "E6/P1", "s'4"]), "s'12");
    assert_eq!(stdout(&["dual", "E6/P1", "pt", "--q-degree", "1"]), "s''11");
    assert_eq!(stdout(&["min-q", "E6/P1", "pt", "pt"]), "2");
    assert_eq!(stdout(&["classes", "A2/P1"]), "s0\t0\ns1\t1\ns2\t2");
}

#[test]
fn verify_reports() {
    let out = stdout(&["verify", "A2/P1", "all"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["schema_version"], 1);
    let out = stdout(&["verify", "E6/P1", "quantum", "--jobs", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn partial_spaces_fail_verification() {
    let out = qhmin(&["verify", "A4/P2", "classical"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let out = qhmin(&["product", "A4/P2", "s'2", "s'2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    let out = qhmin(&["product", "E6/P1", "s'3", "H"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("valid names: s0, s1, s2"), "{err}");
    for args in [
        &["product", "E9/P1", "H", "H"][..],
        &["product", "E6/P2", "H", "H"],
        &["product", "E6", "H", "H"],
        &["bogus"],
        &["export", "E6/P1", "quiver-Fd"],
    ] {
        assert_eq!(qhmin(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn hasse_dot() {
    let dot = stdout(&["export", "A2/P1", "hasse"]);
    assert!(dot.starts_with("digraph"));
    assert!(dot.is_ascii());
    assert_eq!(dot.matches("->").count(), 2);
}

#[test]
fn export_json_and_files() {
    let out = stdout(&["export", "E7/P7", "hasse", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 56);
    let dir = std::env::temp_dir().join(format!("qhmin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("quiver.dot");
    stdout(&["export", "E6/P1", "quiver", "--class", "s8", "--out", path.to_str().unwrap()]);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph") && dot.is_ascii());
    for target in [&["quiver-F"][..], &["quiver-Fd", "--d", "2"]] {
        let mut args = vec!["export", "E7/P7"];
        args.extend_from_slice(target);
        assert!(stdout(&args).starts_with("digraph"));
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "E6/P1", "--quantum", "--provenance"][..],
        &["export", "E6/P1", "quiver"],
        &["verify", "E6/P1", "all", "--jobs", "4"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}
