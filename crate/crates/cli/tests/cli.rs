use std::process::{Command, Output};

use leviform::parser::{parse_holomorphic, parse_real_analytic};
use leviform::{HermitianPoly, Poly};
use serde_json::Value;

fn leviform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leviform"))
        .args(args)
        .env_remove("LEVIFORM_DEGREE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = leviform(&all);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn milnor_of_the_cusp_family_member() {
    let o = leviform(&["milnor", "-n", "2", "x^2*y+y^3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn arnold_normal_form() {
    let o = leviform(&["arnold", "-n", "2", "x^5+y^5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^5+y^5 + c1*x^3*y^3\n");
}

#[test]
fn levicheck_flat_and_not_flat() {
    let o = leviform(&["levicheck", "-n", "2", "Re(x^2*y+y^3)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "FLAT\n");
    let o = leviform(&["levicheck", "-n", "2", "z1*conj(z1) + Re(z2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("NOT_FLAT\nwitness: "));
}

#[test]
fn non_isolated_is_a_domain_error() {
    let o = leviform(&["milnor", "-n", "2", "x^2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(stderr(&o).starts_with("NON_ISOLATED"), "{}", stderr(&o));
}

#[test]
fn error_categories() {
    let o = leviform(&["milnor", "-n", "2", "x^2 +* y"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("SYNTAX"));
    assert!(stderr(&o).contains("1:6"), "{}", stderr(&o));

    let o = leviform(&["arnold", "-n", "2", "x^2+x^3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("NOT_QUASIHOMOGENEOUS"));

    let o = leviform(&["normalform", "-n", "2", "Re(x^2*y^2)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("NON_ISOLATED"));

    let o = Command::new(env!("CARGO_BIN_EXE_leviform"))
        .args(["milnor", "-n", "2", "x^2*y+y^3"])
        .env("LEVIFORM_DEGREE_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("RESOURCE_LIMIT"), "{}", stderr(&o));
}

#[test]
fn usage_errors() {
    assert_eq!(leviform(&[]).status.code(), Some(2));
    assert_eq!(leviform(&["frobnicate", "-n", "2", "x"]).status.code(), Some(2));
    assert_eq!(leviform(&["milnor", "x^2*y"]).status.code(), Some(2));
    assert_eq!(leviform(&["milnor", "-n", "0", "x"]).status.code(), Some(2));
    assert_eq!(leviform(&["milnor", "-n", "2"]).status.code(), Some(2));
    assert_eq!(leviform(&["milnor", "-n", "2", "--degree-cap", "0", "x^2+y^2"]).status.code(), Some(2));
    assert_eq!(leviform(&["milnor", "-n", "2", "--file", "/nonexistent/input"]).status.code(), Some(2));
}

#[test]
fn ambient_dimension_is_explicit() {
    // z3 absent from the expression still means a three-variable ring
    assert_eq!(stdout(&leviform(&["milnor", "-n", "2", "z1^2+z2^2"])), "1\n");
    let o = leviform(&["milnor", "-n", "3", "z1^2+z2^2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("NON_ISOLATED"));
}

#[test]
fn reads_from_file() {
    let dir = std::env::temp_dir().join(format!("leviform-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.txt");
    std::fs::write(&path, "x^2*y\n + y^5\n").unwrap();
    let o = leviform(&["milnor", "-n", "2", "--file", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "6\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_round_trips() {
    let v = json(&["jet", "-n", "2", "-k", "3", "x^2*y+y^3+x^4"]);
    let p: Poly = serde_json::from_value(v).unwrap();
    assert_eq!(p, parse_holomorphic("x^2*y+y^3", 2).unwrap());

    let v = json(&["split", "-n", "2", "x^2*y+y^3+x^4"]);
    let q: Poly = serde_json::from_value(v["Q"].clone()).unwrap();
    let fp: Poly = serde_json::from_value(v["Fprime"].clone()).unwrap();
    assert_eq!(&q + &fp, parse_holomorphic("x^2*y+y^3+x^4", 2).unwrap());
    assert_eq!(v["weights"], serde_json::json!({"alpha": ["1/3", "1/3"], "d": "1"}));

    let v = json(&["complexify", "-n", "1", "z1*conj(z1) + Re(i*z1^2)"]);
    let fc: Poly = serde_json::from_value(v["poly"].clone()).unwrap();
    let f = parse_real_analytic("z1*conj(z1) + Re(i*z1^2)", 1).unwrap();
    assert_eq!(&fc, leviform::levi::complexify(&f).poly());
    let back = HermitianPoly::from_bipoly(&leviform::BiPoly::new(1, fc).unwrap()).unwrap();
    assert_eq!(back, f);
}

#[test]
fn golden_json() {
    let v = json(&["arnold", "-n", "2", "x^5+y^5"]);
    let expected = serde_json::json!({
        "base": {"nvars": 2, "terms": [
            {"exps": [5, 0], "re": "1/1", "im": "0/1"},
            {"exps": [0, 5], "re": "1/1", "im": "0/1"}
        ]},
        "extras": [{"monomial": [3, 3], "name": "c1"}],
        "mu": 16,
        "bound": 17,
        "heuristic": false,
        "weights": {"alpha": ["1/5", "1/5"], "d": "1"}
    });
    assert_eq!(v, expected);

    assert_eq!(json(&["milnor", "-n", "2", "x^2*y+y^3"]), serde_json::json!({"mu": 4}));
    assert_eq!(json(&["singcheck", "-n", "2", "Re(x^2*y^2)"]), serde_json::json!({"singular_locus_is_origin": false}));
    assert_eq!(json(&["levicheck", "-n", "2", "Re(x^2*y+y^3)"])["verdict"], "FLAT");
    assert_eq!(
        json(&["basis", "-n", "2", "x^2*y+y^3"]),
        serde_json::json!({"monomials": [[0, 0], [1, 0], [0, 1], [0, 2]], "mu": 4})
    );
}

#[test]
fn normalform_reports_both_shapes() {
    let o = leviform(&["normalform", "-n", "2", "Re(x^2*y+y^3)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("coarse: x^2*y+y^3 + c1*x^4"));
    assert!(out.contains("c11*y^5"));
    assert!(out.contains("refined: x^2*y+y^3\nmu = 4, bound = 5"));

    let v = json(&["normalform", "-n", "2", "--shape", "semiqh", "Re(x^2*y+y^4)"]);
    assert_eq!(v["heuristic"], true);
    assert_eq!(v["weights"]["alpha"], serde_json::json!(["3/8", "1/4"]));
}

#[test]
fn deterministic_output() {
    for args in [
        &["arnold", "-n", "2", "x^5+y^5", "--json"][..],
        &["levicheck", "-n", "2", "z1*conj(z1) + Re(z2)", "--json"][..],
        &["basis", "-n", "3", "z1^3+z2^3+z3^3"][..],
        &["milnor", "-n", "2", "x^2"][..],
    ] {
        let a = leviform(args);
        let b = leviform(args);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stderr, b.stderr);
    }
}
