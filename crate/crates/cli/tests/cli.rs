//! End-to-end tests of the command-line interface: exit codes, JSON
//! round-trips, and the construct-then-verify pipeline.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn minkarr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minkarr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn minkarr_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_minkarr"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a single JSON document")
}

#[test]
fn construct_then_verify_cube_grid() {
    let grid = minkarr(&["construct", "cube-grid", "--d", "2"]);
    assert!(grid.status.success());
    let verify = minkarr_stdin(
        &["verify", "-", "--mode", "minkowski", "--intersecting"],
        std::str::from_utf8(&grid.stdout).unwrap(),
    );
    assert_eq!(verify.status.code(), Some(0));
    let report = stdout_json(&verify);
    assert_eq!(report["count"], 9);
    assert_eq!(report["minkowski"], true);
    assert_eq!(report["pairwise_intersecting"], true);
}

#[test]
fn every_construct_output_reparses_and_verifies() {
    for args in [
        vec!["construct", "cube-grid", "--d", "3"],
        vec!["construct", "triangle-product", "--d", "2"],
        vec!["construct", "witness", "--name", "circles8"],
        vec!["construct", "witness", "--name", "triangles10"],
    ] {
        let out = minkarr(&args);
        assert!(out.status.success(), "{args:?} failed");
        let verify =
            minkarr_stdin(&["verify", "-"], std::str::from_utf8(&out.stdout).unwrap());
        assert_eq!(verify.status.code(), Some(0), "{args:?} output failed verification");
    }
}

#[test]
fn empty_arrangement_is_vacuously_true() {
    let body = r#"{"dim":2,"shape":{"hpolytope":{"facets":[
        {"a":["1","0"],"b":"1"},{"a":["-1","0"],"b":"1"},
        {"a":["0","1"],"b":"1"},{"a":["0","-1"],"b":"1"}]}}}"#;
    let arrangement = format!(r#"{{"body":{body},"homothets":[]}}"#);
    let out = minkarr_stdin(&["verify", "-", "--mode", "strict", "--intersecting"], &arrangement);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn strict_failure_exits_one() {
    // The 3^2 grid is not strict.
    let grid = minkarr(&["construct", "cube-grid", "--d", "2"]);
    let verify = minkarr_stdin(
        &["verify", "-", "--mode", "strict"],
        std::str::from_utf8(&grid.stdout).unwrap(),
    );
    assert_eq!(verify.status.code(), Some(1));
}

#[test]
fn malformed_input_exits_two() {
    let out = minkarr_stdin(&["verify", "-"], "not json at all");
    assert_eq!(out.status.code(), Some(2));
    // Origin on the boundary is rejected at parse time.
    let bad = r#"{"body":{"dim":1,"shape":{"hpolytope":{"facets":[
        {"a":["1"],"b":"0"},{"a":["-1"],"b":"1"}]}}},"homothets":[]}"#;
    let out = minkarr_stdin(&["verify", "-"], bad);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_kappa_upper_triangle() {
    let dir = std::env::temp_dir().join("minkarr-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("triangle.json");
    std::fs::write(
        &path,
        r#"{"dim":2,"shape":{"vpolytope":{"vertices":[["1","0"],["0","1"],["-1","-1"]]}}}"#,
    )
    .unwrap();
    let out = minkarr(&["bound", "kappa-upper", "--body", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["value"]["exact"], "216");
    assert_eq!(report["inputs"]["theta"]["exact"], "2");
    assert_eq!(report["inputs"]["N"]["exact"], "5");
}

#[test]
fn sample_is_seed_deterministic() {
    let dir = std::env::temp_dir().join("minkarr-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("disc.json");
    std::fs::write(&path, r#"{"dim":2,"shape":{"ball":{"r":"1"}}}"#).unwrap();
    let args = ["sample", "--body", path.to_str().unwrap(), "--n", "5", "--seed", "123"];
    let a = minkarr(&args);
    let b = minkarr(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn search_miss_exits_one() {
    // Twelve strict unit discs with almost no annealing budget: a miss.
    let out = minkarr(&[
        "search",
        "--count",
        "12",
        "--mode",
        "strict",
        "--steps",
        "50",
        "--restarts",
        "1",
        "--lambda-lo",
        "1",
        "--lambda-hi",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_small_target_succeeds_and_verifies() {
    let out = minkarr(&[
        "search", "--count", "3", "--mode", "strict", "--seed", "1", "--steps", "40000",
        "--restarts", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let verify = minkarr_stdin(
        &["verify", "-", "--mode", "strict", "--intersecting"],
        std::str::from_utf8(&out.stdout).unwrap(),
    );
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn estimate_f_emits_bound_and_error() {
    let dir = std::env::temp_dir().join("minkarr-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("square.json");
    std::fs::write(
        &path,
        r#"{"dim":2,"shape":{"hpolytope":{"facets":[
            {"a":["1","0"],"b":"1"},{"a":["-1","0"],"b":"1"},
            {"a":["0","1"],"b":"1"},{"a":["0","-1"],"b":"1"}]}}}"#,
    )
    .unwrap();
    let out = minkarr(&[
        "estimate-f", "--body", path.to_str().unwrap(), "--t", "1.0", "--pairs", "20000",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let est = v["estimate"].as_f64().unwrap();
    let se = v["std_err"].as_f64().unwrap();
    let bound = v["bound"].as_f64().unwrap();
    assert!((bound - 0.75).abs() < 1e-12);
    assert!(est + 3.0 * se <= bound);
}

#[test]
fn icosahedron_constructs_verified_config() {
    let out = minkarr(&["construct", "icosahedron", "--amplify", "1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["count"], 24);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["strict_unit_config_verified"], true);
}

#[test]
fn randomized_constructions_through_cli() {
    let dir = std::env::temp_dir().join("minkarr-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let square = dir.join("square2.json");
    std::fs::write(
        &square,
        r#"{"dim":2,"shape":{"hpolytope":{"facets":[
            {"a":["1","0"],"b":"1"},{"a":["-1","0"],"b":"1"},
            {"a":["0","1"],"b":"1"},{"a":["0","-1"],"b":"1"}]}}}"#,
    )
    .unwrap();
    let out = minkarr(&[
        "construct", "strict-random", "--body", square.to_str().unwrap(), "--seed", "4",
        "--oversample", "8",
    ]);
    assert!(out.status.success());
    let verify = minkarr_stdin(
        &["verify", "-", "--mode", "strict", "--intersecting"],
        std::str::from_utf8(&out.stdout).unwrap(),
    );
    assert_eq!(verify.status.code(), Some(0));

    let tri = dir.join("tri.json");
    std::fs::write(
        &tri,
        r#"{"dim":2,"shape":{"vpolytope":{"vertices":[["1","0"],["0","1"],["-1","-1"]]}}}"#,
    )
    .unwrap();
    let out = minkarr(&[
        "construct", "boundary-points", "--body", tri.to_str().unwrap(), "--seed", "3",
        "--oversample", "16",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(!v["points"].as_array().unwrap().is_empty());
}

#[test]
fn projection_direction_with_tolerance() {
    let dir = std::env::temp_dir().join("minkarr-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let tri = dir.join("tri2.json");
    std::fs::write(
        &tri,
        r#"{"dim":2,"shape":{"vpolytope":{"vertices":[["1","0"],["0","1"],["-1","-1"]]}}}"#,
    )
    .unwrap();
    let out = minkarr(&[
        "construct", "projection-direction", "--body", tri.to_str().unwrap(), "--tol", "1e-9",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let u = v["u"].as_array().unwrap();
    let norm: f64 = u.iter().map(|c| c.as_f64().unwrap().powi(2)).sum::<f64>().sqrt();
    assert!((norm - 1.0).abs() < 1e-9);
}
