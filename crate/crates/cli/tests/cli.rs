use std::f64::consts::PI;
use std::path::Path;
use std::process::{Command, Output};

use tanhspec_cli::Table;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tanhspec")).args(args).output().expect("binary runs")
}

fn ok(args: &[&str]) -> (Table, String) {
    let out = run(args);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(out.status.success(), "{args:?}: {stderr}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let table = if stdout.is_empty() { Table::new(Vec::<String>::new()) } else { Table::parse(&stdout).unwrap() };
    (table, stderr)
}

fn fails(args: &[&str], code: i32, prefix: &str) -> String {
    let out = run(args);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(out.status.code(), Some(code), "{args:?}: {stderr}");
    assert_eq!(stderr.lines().count(), 1, "{stderr}");
    assert!(stderr.starts_with(prefix), "{stderr}");
    stderr
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn expand_sech_resolves() {
    let (t, stderr) = ok(&["expand", "--fn", "sech", "--alpha", "-0.5", "--beta", "-0.5", "--n", "64"]);
    assert_eq!(t.len(), 64);
    assert_eq!(t.columns(), ["m", "c"]);
    assert!(t.rows()[63][1].abs() < 1e-10);
    assert!(stderr.contains("tail |c_63|"));
}

#[test]
fn domain_errors() {
    let e = fails(&["expand", "--fn", "sech", "--alpha", "-1.0"], 2, "error[domain]:");
    assert!(e.contains("alpha must exceed -1"));
    let e =
        fails(&["expand", "--mode", "half", "--alpha", "0.5", "--beta", "0.0", "--fn", "sech"], 2, "error[domain]:");
    assert!(e.contains("half mode requires alpha = beta"));
    fails(
        &["expand", "--mode", "half", "--alpha", "0", "--beta", "0", "--fn", "sech", "--n", "7"],
        2,
        "error[domain]:",
    );
    fails(&["expand", "--fn", "cosh"], 2, "error[usage]:");
    fails(&["expand", "--fn", "sech", "--format", "xml"], 2, "error[usage]:");
    fails(&["frobnicate"], 2, "error[usage]:");
    fails(&["eval", "--in", "/nonexistent/coeffs.csv"], 2, "error[io]:");
    fails(&["solve", "--a", "sech", "--fn", "sech", "--n", "8", "--bandwidth", "8"], 2, "error[domain]:");
    fails(&["solve", "--a", "poly:0", "--fn", "sech", "--n", "16"], 3, "error[numerical]:");
}

#[test]
fn eval_of_first_basis_function() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("e0.csv");
    std::fs::write(&p, "m,c\n0,1\n").unwrap();
    let (t, _) = ok(&["eval", "--in", path_str(&p), "--points", "0"]);
    assert!((t.rows()[0][1] - 1.0 / PI.sqrt()).abs() < 1e-15);

    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, "m,c\n").unwrap();
    fails(&["eval", "--in", path_str(&empty)], 2, "error[input]:");
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "m,c\n0,zz\n").unwrap();
    fails(&["eval", "--in", path_str(&bad)], 2, "error[input]:");
}

#[test]
fn diff_matches_finite_differences_of_eval() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c.csv");
    let (_, _) =
        ok(&["expand", "--fn", "gaussian", "--alpha", "0", "--beta", "0", "--n", "128", "--out", path_str(&c)]);
    let pts = "-3:3:25";
    let (d, _) = ok(&["diff", "--in", path_str(&c), "--alpha", "0", "--beta", "0", "--points", pts]);
    let h = 1e-3;
    let shifted = |s: f64| {
        let list: Vec<String> = d.column("x").unwrap().iter().map(|x| format!("{:?}", x + s)).collect();
        let arg = list.join(",");
        ok(&["eval", "--in", path_str(&c), "--alpha", "0", "--beta", "0", "--points", &arg]).0.column("value").unwrap()
    };
    let (m2, m1, p1, p2) = (shifted(-2.0 * h), shifted(-h), shifted(h), shifted(2.0 * h));
    for (k, v) in d.column("value").unwrap().iter().enumerate() {
        let fd = (m2[k] - 8.0 * m1[k] + 8.0 * p1[k] - p2[k]) / (12.0 * h);
        assert!((v - fd).abs() < 1e-6, "row {k}");
    }
}

#[test]
fn ft_of_sech() {
    // sech = √2 φ_0 for α = β = 0, and F[sech](ξ) = √(π/2) sech(πξ/2)
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c.json");
    ok(&[
        "expand",
        "--fn",
        "sech",
        "--alpha",
        "0",
        "--beta",
        "0",
        "--n",
        "16",
        "--format",
        "json",
        "--out",
        path_str(&c),
    ]);
    let (t, _) = ok(&["ft", "--in", path_str(&c), "--alpha", "0", "--beta", "0", "--points", "-8:8:33"]);
    assert_eq!(t.columns(), ["xi", "re", "im"]);
    for row in t.rows() {
        let want = (PI / 2.0).sqrt() / (0.5 * PI * row[0]).cosh();
        assert!((row[1] - want).abs() < 1e-12 && row[2].abs() < 1e-14, "ξ={}", row[0]);
    }
    fails(&["ft", "--in", path_str(&c), "--mode", "half", "--alpha", "0", "--beta", "0"], 2, "error[domain]:");
}

#[test]
fn manufactured_solve_and_json_round_trip() {
    // u = sech^{1/2} x solves u' + (1 + tanh(x)/2) u = sech^{1/2} x
    let dir = tempfile::tempdir().unwrap();
    let u = dir.path().join("u.json");
    let s = dir.path().join("s.csv");
    let out = run(&[
        "solve",
        "--a",
        "poly:1,0.5",
        "--fn",
        "sech:0.5",
        "--n",
        "32",
        "--format",
        "json",
        "--out",
        path_str(&u),
        "--points",
        "-4:4:9",
        "--samples",
        path_str(&s),
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    let residual: f64 = stderr.lines().find_map(|l| l.strip_prefix("residual = ")).unwrap().parse().unwrap();
    assert!(residual < 1e-9);
    let samples = Table::parse(&std::fs::read_to_string(&s).unwrap()).unwrap();
    let (evaluated, _) = ok(&["eval", "--in", path_str(&u), "--points", "-4:4:9"]);
    for (a, b) in samples.rows().iter().zip(evaluated.rows()) {
        let want = 1.0 / a[0].cosh().sqrt();
        assert!((a[1] - want).abs() < 1e-12);
        assert!((b[1] - want).abs() < 1e-12);
    }
}

#[test]
fn basis_table() {
    let (t, _) = ok(&["basis", "--alpha", "0.5", "--beta", "0.5", "--points", "-30:30:6001"]);
    assert_eq!(t.columns(), ["x", "phi_0", "phi_1", "phi_2", "phi_3", "phi_4"]);
    let phi0 = t.column("phi_0").unwrap();
    let imax = (0..phi0.len()).max_by(|&a, &b| phi0[a].total_cmp(&phi0[b])).unwrap();
    assert_eq!(t.rows()[imax][0], 0.0);
    let h = 0.01;
    for k in 1..=5 {
        let col: Vec<f64> = t.rows().iter().map(|r| r[k]).collect();
        let trap = h * (col.iter().map(|v| v * v).sum::<f64>() - 0.5 * (col[0].powi(2) + col[col.len() - 1].powi(2)));
        assert!((1.0 - 1e-6..=1.0).contains(&trap), "column {k}: {trap}");
    }
    let (t, _) = ok(&["basis", "--m", "7,2", "--points", "0,1"]);
    assert_eq!(t.columns(), ["x", "phi_7", "phi_2"]);
}

#[test]
fn sampled_input_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("g.csv");
    let mut text = String::from("x,value\n");
    for k in 0..=1200 {
        let x = -12.0 + 0.02 * k as f64;
        text.push_str(&format!("{x:?},{:?}\n", (-x * x).exp()));
    }
    std::fs::write(&p, text).unwrap();
    let spec = format!("file:{}", path_str(&p));
    let (a, _) = ok(&["expand", "--fn", &spec, "--n", "32"]);
    let (b, _) = ok(&["expand", "--fn", "gaussian", "--n", "32"]);
    for (ra, rb) in a.rows().iter().zip(b.rows()) {
        assert!((ra[1] - rb[1]).abs() < 1e-7, "m={}", ra[0]);
    }
    std::fs::write(&p, "x,value\n0,1\n0,2\n").unwrap();
    fails(&["expand", "--fn", &spec], 2, "error[input]:");
}

#[test]
fn output_is_deterministic() {
    let args = ["expand", "--fn", "runge_tanh", "--alpha", "1.3", "--beta", "0.2", "--n", "40", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["basis", "--mode", "half", "--alpha", "0.5", "--beta", "0.5"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn help_exits_cleanly() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("expand"));
}
