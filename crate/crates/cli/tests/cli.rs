use std::path::PathBuf;
use std::process::{Command, Output};

use qehrhart_cli::{parse_polynomial_json, PolytopeDocument};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qehrhart")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_doc(dir: &tempfile::TempDir, text: &str) -> String {
    let path = dir.path().join("doc.json");
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn compute_triangle_text() {
    let o = run(&["compute", data("triangle.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q^3/(q + 1)*x^2 + (2*q^2 + q)/(q + 1)*x + 1\n");
}

#[test]
fn compute_square_all_ones() {
    let o = run(&["compute", data("cube2.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q^2*x^2 + 2*q*x + 1\n");
}

#[test]
fn compute_flags() {
    let o = run(&["compute", data("triangle.json").to_str().unwrap(), "--limit", "--poles"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("limit at x = 1/(1 - q): 1/(q^3 - q^2 - q + 1)"), "{text}");
    assert!(text.contains("x^2: Phi_2"), "{text}");

    let o = run(&["compute", data("triangle.json").to_str().unwrap(), "--constituents"]);
    assert!(stdout(&o).starts_with("C^0 = q^3/(q + 1)*x^2"));

    let o = run(&["compute", data("triangle.json").to_str().unwrap(), "--format", "latex"]);
    assert!(stdout(&o).contains(r"\frac{q^{3}}{q + 1} x^{2}"), "{}", stdout(&o));

    let o = run(&["compute", data("triangle.json").to_str().unwrap(), "--format", "json", "--limit"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn rational_polytope_prints_constituents() {
    let o = run(&["compute", data("lecturehall2.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2);
    assert!(text.starts_with("C^0 = "));
    assert!(text.lines().nth(1).unwrap().starts_with("C^1 = "));
}

#[test]
fn json_output_round_trips_byte_for_byte() {
    for (file, extra) in [("triangle.json", None), ("halfsimplex.json", None), ("cube2.json", Some("--constituents"))] {
        let path = data(file);
        let mut args = vec!["compute", path.to_str().unwrap(), "--format", "json"];
        args.extend(extra);
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let parsed = parse_polynomial_json(&text).unwrap();
        let again = if parsed.len() == 1 && extra.is_none() {
            parsed[0].to_json_string()
        } else {
            serde_json::to_string_pretty(&parsed.iter().map(|c| c.to_json()).collect::<Vec<_>>()).unwrap()
        };
        assert_eq!(again + "\n", text, "{file}");
    }
}

#[test]
fn verify_documents_pass() {
    let o = run(&["verify", data("triangle.json").to_str().unwrap(), "--tmax", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("all checks passed\n"));

    let o = run(&["verify", data("halfsimplex.json").to_str().unwrap(), "--tmax", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("period 2"));
    assert!(text.contains("pass  interior counts: t = 1..=8"));
}

#[test]
fn diagonal_edge_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let doc = temp_doc(
        &dir,
        r#"{"vertices": [["0","0"],["1","0"],["0","1"],["1","1"]], "lambda": ["1","1"],
            "edges": [[0,1],[0,2],[1,3],[2,3],[0,3]]}"#,
    );
    let o = run(&["compute", &doc]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("edge validation failed"), "{}", stderr(&o));
}

#[test]
fn negative_vertex_value_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let doc = temp_doc(&dir, r#"{"vertices": [["0","0"],["1","0"],["0","1"]], "lambda": ["-1","2"]}"#);
    for cmd in ["compute", "verify"] {
        let o = run(&[cmd, &doc]);
        assert_eq!(o.status.code(), Some(2), "{cmd}");
        assert!(stderr(&o).contains("negative value"), "{}", stderr(&o));
    }
}

#[test]
fn malformed_input_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    for text in [
        r#"{"vertices": [[0.5, 0]], "lambda": [1, 1]}"#,
        r#"{"vertices": [["0","0"]], "lambda": ["1"]}"#,
        "not json",
    ] {
        let doc = temp_doc(&dir, text);
        let o = run(&["compute", &doc]);
        assert_eq!(o.status.code(), Some(1), "{text}");
        assert!(stderr(&o).starts_with("error: "));
    }
    let o = run(&["compute", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn box_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qehrhart"))
        .args(["verify", data("triangle.json").to_str().unwrap()])
        .env("QEHRHART_MAX_BOX", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("exceeds the cap of 4"), "{}", stderr(&o));

    let o = Command::new(env!("CARGO_BIN_EXE_qehrhart"))
        .args(["verify", data("triangle.json").to_str().unwrap()])
        .env("QEHRHART_MAX_BOX", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn wrong_number_of_supplied_constituents() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["compute", data("triangle.json").to_str().unwrap(), "--format", "json"]);
    let poly = dir.path().join("p.json");
    std::fs::write(&poly, stdout(&o)).unwrap();
    let o = run(&["verify", data("halfsimplex.json").to_str().unwrap(), "--polynomial", poly.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("period 2"), "{}", stderr(&o));
}

#[test]
fn examples_matrix() {
    let o = run(&["examples", "--only", "carlitz"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().filter(|l| l.starts_with("carlitz")).count() == 6);
    assert!(text.lines().all(|l| l.starts_with("carlitz") || l.contains("checks")));

    let o = run(&["examples", "--only", "lecturehall", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("lecturehall  n=3  q-difference equation"));
    assert!(text.ends_with("0 failed\n"));

    let o = run(&["examples"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for family in ["cube", "simplex", "carlitz", "lecturehall"] {
        assert!(text.lines().any(|l| l.starts_with(family)), "{family}");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn sample_documents_parse() {
    for file in ["triangle.json", "cube2.json", "halfsimplex.json", "lecturehall2.json"] {
        let doc = PolytopeDocument::read(&data(file)).unwrap().parse().unwrap();
        assert!(doc.polytope.num_vertices() >= 3, "{file}");
    }
}
