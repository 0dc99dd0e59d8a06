use std::path::Path;
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

fn workbench(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_workbench")).args(args).output().expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout).into_owned() + &String::from_utf8_lossy(&out.stderr);
    (out.status.code().expect("exit code"), text)
}

fn with_report(dir: &TempDir, name: &str, args: &[&str]) -> (i32, Value) {
    let path = dir.path().join(format!("{name}.json"));
    let mut all: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    all.extend(["--json", &p]);
    let (code, text) = workbench(&all);
    let report = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("no report for {args:?}: {text}"));
    (code, serde_json::from_str(&report).unwrap())
}

fn strip_timings(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("timings");
            map.remove("elapsed_ms");
            map.values_mut().for_each(strip_timings);
        }
        Value::Array(xs) => xs.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

#[test]
fn fibre_charts_at_zero() {
    let dir = TempDir::new().unwrap();
    let (code, r) = with_report(&dir, "charts", &["charts", "--p", "2,2,2", "--gamma", "zero"]);
    assert_eq!(code, 0);
    let items = r["items"].as_array().unwrap();
    assert_eq!(items.len(), 12);
    for item in items {
        assert_eq!(item["certificate"]["status"], "smooth");
        assert_eq!(item["certificate"]["dimension"], 2);
        assert_eq!(item["certificate"]["one_in_jacobian"], true);
        assert_eq!(item["oracle_match"], true);
    }
    assert_eq!(r["status"], "success");
    assert_eq!(r["config"]["seed"], 0);
}

#[test]
fn cover_at_222() {
    let dir = TempDir::new().unwrap();
    let (code, r) = with_report(&dir, "cover", &["cover", "--p", "2,2,2", "--jobs", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["summary"]["supports"], 4096);
    assert_eq!(r["summary"]["counterexamples"], 0);
}

#[test]
fn conjecture_over_prime_field() {
    let dir = TempDir::new().unwrap();
    let (code, r) = with_report(&dir, "conj", &["conjecture", "--p", "2,2,2", "--field", "fp:65521"]);
    assert_eq!(code, 0);
    assert_eq!(r["items"][0]["status"], "confirmed");
    assert_eq!(r["items"][0]["probabilistic"], true);
    assert_eq!(r["items"][0]["containment_minors_in_kernel"], true);
    assert_eq!(r["items"][1]["equal"], true);
    assert_eq!(r["items"][0]["kernel_generators"].as_array().unwrap().len(), 3);
}

#[test]
fn exhausted_budget_exits_inconclusive() {
    let dir = TempDir::new().unwrap();
    let (code, r) = with_report(&dir, "kernel", &["kernel", "--p", "3,3,3", "--spair-cap", "1"]);
    assert_eq!(code, 2);
    assert_eq!(r["status"], "inconclusive");
    assert_eq!(r["items"][0]["status"], "inconclusive");
    assert!(r["items"][0]["equal"].is_null());
}

#[test]
fn usage_errors_exit_3() {
    for args in [
        &["charts", "--p", "1,2,2"][..],
        &["charts", "--bogus"],
        &["nonsense"],
        &[],
        &["gb"],
        &["kernel", "--spair-cap", "0"],
        &["charts", "--gamma", "random:x"],
        &["kernel", "--field", "fp:12"],
        &["pi", "--point", "1,2"],
        &["cover", "--p", "5,5,5"],
    ] {
        assert_eq!(workbench(args).0, 3, "{args:?}");
    }
    assert_eq!(workbench(&["--help"]).0, 0);
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    for (name, args) in [
        ("props", &["props", "--seed", "11"][..]),
        ("fibre", &["fibre", "--p", "3,2,2", "--gamma", "random:4", "--seed", "9"]),
        ("charts", &["charts", "--p", "3,2,2", "--gamma", "random:2", "--jobs", "4"]),
    ] {
        let (c1, mut a) = with_report(&dir, &format!("{name}1"), args);
        let (c2, mut b) = with_report(&dir, &format!("{name}2"), args);
        assert_eq!((c1, c2), (0, 0), "{name}");
        strip_timings(&mut a);
        strip_timings(&mut b);
        assert_eq!(a, b, "{name}");
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gamma_files() {
    let dir = TempDir::new().unwrap();
    // a = -(γ₁ - γ₂ + A), b = -(γ₃ - γ₂ + B)
    let inside = r#"{"gamma1": ["1/2"], "gamma2": ["-3"], "gamma3": ["2"], "a": "-9/2", "b": "-6", "A": "1", "B": "1"}"#;
    let off = r#"{"gamma1": ["1/2"], "gamma2": ["-3"], "gamma3": ["2"], "a": "0", "b": "-6", "A": "1", "B": "1"}"#;
    let inside = format!("file:{}", write(dir.path(), "in.json", inside));
    let off = format!("file:{}", write(dir.path(), "off.json", off));
    let (code, r) = with_report(&dir, "in", &["charts", "--gamma", &inside]);
    assert_eq!(code, 0);
    assert_eq!(r["summary"]["gamma"]["a"], "-9/2");
    assert_eq!(workbench(&["charts", "--gamma", &off]).0, 3);
    let (code, r) = with_report(&dir, "off", &["fibre", "--gamma", &off, "--samples", "0"]);
    assert_eq!(code, 0);
    assert_eq!(r["items"][0]["rep_ideal_unit"], true);
    let bad = format!("file:{}", write(dir.path(), "bad.json", r#"{"gamma1": []}"#));
    assert_eq!(workbench(&["fibre", "--gamma", &bad]).0, 3);
}

#[test]
fn groebner_on_an_ideal_file() {
    let dir = TempDir::new().unwrap();
    let ideal = write(dir.path(), "cubic.txt", "# twisted cubic\nvars: x, y, z\norder: grevlex\ny - x^2\nz - x^3\n");
    let (code, r) = with_report(&dir, "gb", &["gb", "--ideal", &ideal]);
    assert_eq!(code, 0);
    assert_eq!(r["summary"]["dimension"], 1);
    assert_eq!(r["summary"]["basis_size"], 3);
    let (code, r) = with_report(&dir, "gb1", &["gb", "--ideal", &ideal, "--field", "fp:101"]);
    assert_eq!(code, 0);
    assert_eq!(r["config"]["field"], "fp:101");
    let broken = write(dir.path(), "broken.txt", "vars: x\norder: lex\nx +* 1\n");
    assert_eq!(workbench(&["gb", "--ideal", &broken]).0, 3);
}

#[test]
fn pi_on_a_point() {
    let dir = TempDir::new().unwrap();
    let (code, r) = with_report(&dir, "pi", &["pi", "--p", "2,2,2", "--point", "1,1,1,1,2,3,4,5,6"]);
    assert_eq!(code, 0);
    let g = &r["items"][0]["gamma"];
    assert_eq!((g["gamma1"][0].as_str(), g["a"].as_str(), g["b"].as_str(), g["A"].as_str(), g["B"].as_str()), (Some("-1"), Some("2"), Some("-2"), Some("-2"), Some("2")));
}
