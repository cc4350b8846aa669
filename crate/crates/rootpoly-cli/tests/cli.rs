//! End-to-end tests of the `rootpoly` binary: formats, exit codes, JSON
//! output, and corpus determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use rootpoly::matroid::MatroidRep;
use rootpoly_cli::formats;
use rootpoly_cli::report::{poly_from_coeffs, RunReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(path: &Path, content: &str) {
    fs::write(path, content).unwrap();
}

const FIG: &str = "digraph 6 9\n1 2\n3 1\n1 4\n5 1\n3 4\n4 5\n6 3\n4 6\n2 3\n";

#[test]
fn check_reports_example_facts() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("fig.digraph");
    write(&file, FIG);
    let out = run(&["check", file.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let report: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.facts["eulerian"], "true");
    assert_eq!(report.facts["dual_rank"], "4");
    assert_eq!(report.facts["dual_polytope_dim"], "3");
}

#[test]
fn lambda_all_methods_pass_and_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("fig.digraph");
    write(&file, FIG);
    let out = run(&["lambda", file.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let report: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.passed());
    assert_eq!(report.polynomials.len(), 6);
    let activity = poly_from_coeffs(&report.polynomials["activity"]).unwrap();
    for coeffs in report.polynomials.values() {
        assert_eq!(poly_from_coeffs(coeffs).unwrap(), activity);
    }
    // lambda(t) = t^4 + 2 t^3
    assert_eq!(report.polynomials["activity"], vec!["0", "0", "0", "2", "1"]);
}

#[test]
fn lambda_reports_identical_polynomials_for_each_root() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("fig.digraph");
    write(&file, FIG);
    let mut seen = Vec::new();
    for root in 1..=6 {
        let out = run(&[
            "lambda",
            file.to_str().unwrap(),
            "--root",
            &root.to_string(),
            "--method",
            "semiactivity,dual_complex",
            "--json",
        ]);
        assert!(out.status.success());
        let report: RunReport = serde_json::from_slice(&out.stdout).unwrap();
        seen.push(report.polynomials["semiactivity"].clone());
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn hstar_matches_between_graph_and_matrix_entry_points() {
    let dir = tempfile::tempdir().unwrap();
    let graph_file = dir.path().join("fig.digraph");
    write(&graph_file, FIG);

    // write the dual representation as a matrix file
    let g = formats::parse_digraph(FIG).unwrap();
    let dual = MatroidRep::graphic(&g).unwrap().dual().unwrap();
    let matrix = dual.matrix();
    let mut text = format!("matrix {} {}\n", matrix.rows(), matrix.cols());
    for i in 0..matrix.rows() {
        let row: Vec<String> = (0..matrix.cols()).map(|j| matrix.entry(i, j).to_string()).collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    let matrix_file = dir.path().join("dual.matrix");
    write(&matrix_file, &text);

    let from_graph = run(&[
        "hstar",
        graph_file.to_str().unwrap(),
        "--method",
        "ehrhart",
        "--json",
    ]);
    assert!(from_graph.status.success());
    let from_matrix = run(&[
        "hstar",
        matrix_file.to_str().unwrap(),
        "--method",
        "ehrhart",
        "--json",
    ]);
    assert!(from_matrix.status.success());
    let graph_report: RunReport = serde_json::from_slice(&from_graph.stdout).unwrap();
    let matrix_report: RunReport = serde_json::from_slice(&from_matrix.stdout).unwrap();
    assert_eq!(
        graph_report.polynomials["ehrhart"],
        matrix_report.polynomials["ehrhart"]
    );
    // h* = 1 + 2x
    assert_eq!(graph_report.polynomials["ehrhart"], vec!["1", "2"]);
}

#[test]
fn verify_passes_on_example() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("fig.digraph");
    write(&file, FIG);
    let out = run(&["verify", file.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let report: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.passed());
    assert_eq!(report.verdicts.len(), 4);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    // missing file
    let out = run(&["check", dir.path().join("nope").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // malformed line carries its number
    let bad = dir.path().join("bad.digraph");
    write(&bad, "digraph 2 2\n1 2\nx y\n");
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    // h* routes refuse non-Eulerian digraphs
    let noneuler = dir.path().join("path.digraph");
    write(&noneuler, "digraph 2 1\n1 2\n");
    let out = run(&["hstar", noneuler.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // matrices carry no greedoid
    let matrix = dir.path().join("m.matrix");
    write(&matrix, "matrix 1 2\n1 1\n");
    let out = run(&["lambda", matrix.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // unknown method name
    let fig = dir.path().join("fig.digraph");
    write(&fig, FIG);
    let out = run(&["lambda", fig.to_str().unwrap(), "--method", "magic"]);
    assert_eq!(out.status.code(), Some(2));

    // root out of range
    let out = run(&["lambda", fig.to_str().unwrap(), "--root", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scale_cap_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("fig.digraph");
    write(&file, FIG);
    let out = run(&["ehrhart", file.to_str().unwrap(), "--max-box", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let message = String::from_utf8_lossy(&out.stderr);
    assert!(message.contains("scale cap"), "got: {message}");
}

#[test]
fn gen_corpus_is_deterministic() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    for dir in [&dir_a, &dir_b] {
        let out = run(&[
            "gen-corpus",
            "--out",
            dir.path().to_str().unwrap(),
            "--count",
            "8",
            "--seed",
            "11",
        ]);
        assert!(out.status.success());
    }
    let list = |dir: &tempfile::TempDir| {
        let mut names: Vec<String> = fs::read_dir(dir.path())
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        names.sort();
        names
    };
    let names_a = list(&dir_a);
    assert_eq!(names_a, list(&dir_b));
    assert!(names_a.contains(&"cycle_5.digraph".to_string()));
    assert!(names_a.contains(&"bundle_3.digraph".to_string()));
    for name in &names_a {
        let a = fs::read(dir_a.path().join(name)).unwrap();
        let b = fs::read(dir_b.path().join(name)).unwrap();
        assert_eq!(a, b, "corpus file {name} differs between runs");
    }
    // a different seed changes the random part
    let dir_c = tempfile::tempdir().unwrap();
    let out = run(&[
        "gen-corpus",
        "--out",
        dir_c.path().to_str().unwrap(),
        "--count",
        "8",
        "--seed",
        "12",
    ]);
    assert!(out.status.success());
    let differs = names_a.iter().filter(|n| n.starts_with("random_")).any(|name| {
        fs::read(dir_a.path().join(name)).unwrap() != fs::read(dir_c.path().join(name)).unwrap()
    });
    assert!(differs);
}

#[test]
fn every_generated_corpus_file_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "gen-corpus",
        "--out",
        dir.path().to_str().unwrap(),
        "--count",
        "3",
        "--seed",
        "5",
    ]);
    assert!(out.status.success());
    // spot-check a few files end to end through the verify command
    for name in ["cycle_4.digraph", "bundle_2.digraph", "random_0001.digraph"] {
        let path = dir.path().join(name);
        let out = run(&["verify", path.to_str().unwrap()]);
        assert!(out.status.success(), "verify failed on {name}");
    }
}
