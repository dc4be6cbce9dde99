use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use bisemikit::bipoint::AlgebraicBipoint;
use bisemikit::function_space::Bifunction;
use bisemikit::linalg::Matrix;
use bisemikit::scalar::{Complex64, Rational};
use serde_json::Value;
use tempfile::TempDir;

fn bisemikit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bisemikit"))
        .args(args)
        .env_remove("BISEMIKIT_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn decompose_identity() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "id.json", "[[1,0,0],[0,1,0],[0,0,1]]");
    let out = bisemikit(&["decompose", &input]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let id = Matrix::<Rational>::identity(3);
    for key in ["xi_R", "xi_L", "T_R", "T_L"] {
        assert_eq!(Matrix::<Rational>::from_json(&v[key]).unwrap(), id, "{key}");
    }
    assert_eq!(v["residual"], 0.0);
}

#[test]
fn decompose_reports_zero_minor() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "swap.json", "[[0,1],[1,0]]");
    let out = bisemikit(&["decompose", &input]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["error"], "DecompositionUndefined");
    assert_eq!(v["location"], 1);
    assert!(v["detail"].is_string());
}

#[test]
fn decompose_reads_csv() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.csv", "4,2\n8,5\n");
    let out = bisemikit(&["decompose", &input, "--rule", "delta-sqrt"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["rule"], "delta-sqrt");
    let t_r = Matrix::<Rational>::from_json(&v["T_R"]).unwrap();
    let t_l = Matrix::<Rational>::from_json(&v["T_L"]).unwrap();
    assert_eq!(
        t_r.mul(&t_l).unwrap(),
        Matrix::from_json(&serde_json::json!([[4, 2], [8, 5]])).unwrap()
    );

    let input = write(&dir, "c.csv", "1+1i,2\n3,4-2i\n");
    let out = bisemikit(&["decompose", &input, "--backend", "complex"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(Matrix::<Complex64>::from_json(&stdout_json(&out)["xi_R"]).is_ok());
}

#[test]
fn output_path_is_honoured() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.json", r#"[["2","1"],["4","3"]]"#);
    let target = dir.path().join("out.json");
    let out = bisemikit(&["decompose", &input, "--output", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["delta"], serde_json::json!(["2/1", "1/1"]));
    let mut names: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    assert_eq!(names, ["a.json", "out.json"]);
}

#[test]
fn bipoint_round_trips() {
    let dir = TempDir::new().unwrap();
    let r = write(&dir, "r.json", "[-1, -2]");
    let l = write(&dir, "l.json", "[1, 2]");
    let out = bisemikit(&["bipoint", &r, &l]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["n"], 2);
    let bp = AlgebraicBipoint::<Rational>::from_json(&v).unwrap();
    assert_eq!(
        bp.entries(),
        &Matrix::from_json(&serde_json::json!([[-1, -2], [-2, -4]])).unwrap()
    );

    let short = write(&dir, "short.json", "[-1]");
    let out = bisemikit(&["bipoint", &short, &l]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"], "DimensionMismatch");
}

#[test]
fn inner_traces_the_pipeline() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "v.json", r#"{"right": [-1, -2], "left": [1, 2]}"#);
    let cases = [
        ("mixed", "diag", "-5/1", vec![]),
        ("mixed", "ext", "-9/1", vec![]),
        ("mixed", "offdiag", "-4/1", vec![]),
        ("external", "diag", "5/1", vec!["p_L"]),
        ("internal", "ext", "9/1", vec!["p_L", "B_L"]),
    ];
    for (stage, mode, value, trace) in cases {
        let out = bisemikit(&["inner", &input, "--stage", stage, "--mode", mode]);
        assert_eq!(out.status.code(), Some(0), "{stage} {mode}");
        let v = stdout_json(&out);
        assert_eq!(v["value"], value, "{stage} {mode}");
        assert_eq!(v["trace"], serde_json::json!(trace));
    }

    let input = write(&dir, "z.json", r#"{"left": [1, {"re": 0, "im": 1}]}"#);
    let out = bisemikit(&[
        "inner",
        &input,
        "--stage",
        "internal",
        "--backend",
        "complex",
    ]);
    assert_eq!(
        stdout_json(&out)["value"],
        serde_json::json!({"re": 2.0, "im": 0.0})
    );
}

#[test]
fn hopf_reports() {
    for group in ["z2", "z3", "z4", "s3", "z2xz2"] {
        let out = bisemikit(&["hopf", "--group", group]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout_json(&out)["all_pass"], true, "{group}");
    }
    let dir = TempDir::new().unwrap();
    let table = write(&dir, "t.json", "[[0,1],[1,0]]");
    let out = bisemikit(&["hopf", "--group", &format!("table:{table}")]);
    assert_eq!(stdout_json(&out)["order"], 2);

    let bad = write(&dir, "bad.json", "[[0,0],[1,1]]");
    let out = bisemikit(&["hopf", "--group", &format!("table:{bad}")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"], "InvalidGroup");

    let out = bisemikit(&["hopf", "--group", "s3", "--backend", "complex", "--star"]);
    let v = stdout_json(&out);
    assert!(v["star"]["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["holds"] == true));
    assert_eq!(
        bisemikit(&["hopf", "--group", "s3", "--star"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn check_is_deterministic() {
    let args = [
        "check",
        "--structure",
        "bisemiring",
        "--samples",
        "100",
        "--seed",
        "7",
    ];
    let a = bisemikit(&args);
    let b = bisemikit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["seed"], 7);
    assert!(v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["holds"] == true));
}

#[test]
fn check_seed_from_environment() {
    let run = |env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_bisemikit"));
        cmd.args(["check", "--structure", "semifield", "--backend", "rational"]);
        match env {
            Some(s) => cmd.env("BISEMIKIT_SEED", s),
            None => cmd.env_remove("BISEMIKIT_SEED"),
        };
        cmd.output().unwrap()
    };
    assert_eq!(stdout_json(&run(Some("42")))["seed"], 42);
    assert_eq!(stdout_json(&run(None))["seed"], 0);
    assert_eq!(run(Some("nope")).status.code(), Some(2));
}

#[test]
fn transform_outputs() {
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "f.json",
        r#"{"samples_R": [1, 2], "samples_L": [{"re": 1, "im": 1}, 2], "weights": [0.5, 0.5]}"#,
    );
    let out = bisemikit(&["transform", &input]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["l2"], 3.0);
    let sq = Bifunction::from_json(&v["squared_samples"]).unwrap();
    assert_eq!(sq.phi_r().samples()[0], Complex64::new(1.0, -1.0));
    let l11 = v["l11"].as_f64().unwrap();
    assert!((l11 - 1.5 * (2f64.sqrt() / 2.0 + 1.0)).abs() < 1e-12);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bisemikit(&[]).status.code(), Some(2));
    assert_eq!(bisemikit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        bisemikit(&["check", "--structure", "bisemiring", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bisemikit(&["check", "--structure", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bisemikit(&["check", "--structure", "semiring", "--samples", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bisemikit(&["decompose", "x.json", "--rule", "cholesky"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn help_and_version() {
    let out = bisemikit(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("bisemikit "));
    let out = bisemikit(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let help = String::from_utf8_lossy(&out.stdout);
    for sub in [
        "decompose",
        "bipoint",
        "inner",
        "hopf",
        "check",
        "transform",
    ] {
        assert!(help.contains(sub), "{sub}");
    }
}

#[test]
fn missing_input_is_a_domain_error() {
    let out = bisemikit(&["decompose", "/nonexistent/matrix.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"], "Io");
    assert!(!Path::new("/nonexistent/matrix.json").exists());
}
