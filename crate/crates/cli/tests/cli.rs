//! End-to-end runs of the `skewtor` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use skewtor::models::{GammaElement, StabilizerModel};
use skewtor::scalar;
use skewtor::tensor::SkewEndo;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewtor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["schema_version"], 1);
    v["payload"].clone()
}

/// Sorted runs of ASCII digits, the numeric content of a report.
fn digit_runs(s: &str) -> Vec<String> {
    let mut runs: Vec<String> = s
        .split(|c: char| !c.is_ascii_digit())
        .filter(|r| !r.is_empty())
        .map(str::to_string)
        .collect();
    runs.sort();
    runs
}

/// Digits of every leaf value of a JSON report, keys excluded.
fn json_value_digits(v: &Value) -> Vec<String> {
    fn walk(v: &Value, out: &mut String) {
        match v {
            Value::Array(a) => a.iter().for_each(|x| walk(x, out)),
            Value::Object(o) => o.values().for_each(|x| walk(x, out)),
            Value::String(s) => out.push_str(s),
            other => out.push_str(&other.to_string()),
        }
        out.push(' ');
    }
    let mut s = String::new();
    walk(v, &mut s);
    digit_runs(&s)
}

/// Digits of a markdown report with field names removed: section headings,
/// table header rows, bold labels and `key:` prefixes inside inline objects.
fn markdown_value_digits(md: &str) -> Vec<String> {
    let lines: Vec<&str> = md.lines().collect();
    let mut kept = String::new();
    for (i, line) in lines.iter().enumerate() {
        let header_row = lines.get(i + 1).is_some_and(|n| n.starts_with("| ---"));
        if (line.starts_with("##") && i > 0) || header_row || line.starts_with("| ---") {
            continue;
        }
        let mut l = line.to_string();
        if let Some(rest) = l.strip_prefix("- **") {
            l = rest.split_once("**").map_or(String::new(), |(_, v)| v.to_string());
        }
        kept.push_str(&strip_inline_keys(&l));
        kept.push('\n');
    }
    digit_runs(&kept)
}

fn strip_inline_keys(line: &str) -> String {
    let mut out = String::new();
    for (i, piece) in line.split(": ").enumerate() {
        if i > 0 {
            out.push(' ');
        }
        // drop the trailing identifier that precedes each ": "
        let cut = piece
            .rfind(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .map_or(0, |p| p + 1);
        let is_key = i + 1 < line.split(": ").count();
        out.push_str(if is_key { &piece[..cut] } else { piece });
    }
    out
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("skewtor-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        &["cases"][..],
        &["decompose", "U3-in-SO6", "--format", "json"],
        &["classify"],
        &["isotropy", "--example", "heisenberg", "--format", "json"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn json_and_markdown_carry_the_same_numbers() {
    for args in [
        &["decompose", "G2-in-SO7"][..],
        &["torsion", "Spin7-in-SO8"],
        &["theta-rank", "g2-3form"],
        &["classify", "--max-m", "8"],
        &["isotropy", "--example", "solvable"],
    ] {
        let md = stdout(args);
        let mut a = args.to_vec();
        a.extend(["--format", "json"]);
        let js: Value = serde_json::from_str(&stdout(&a)).unwrap();
        // the markdown title repeats the command line without the format flag
        let mut want = json_value_digits(&js["payload"]);
        want.extend(json_value_digits(&js["schema_version"]));
        want.extend(digit_runs(&args.join(" ")));
        want.sort();
        assert_eq!(markdown_value_digits(&md), want, "{args:?}");
    }
}

#[test]
fn unknown_case_is_a_usage_error() {
    let out = run(&["decompose", "E8-in-SO248"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("E8-in-SO248"));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["theta-rank", "octonions"]).status.code(), Some(2));
}

#[test]
fn decompose_g2_reports_types() {
    let p = json(&["decompose", "G2-in-SO7"]);
    assert_eq!(p["n"], 7);
    assert_eq!(p["dim_g"], 14);
    let dims: Vec<u64> = p["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 7, 14, 27]);
    assert_eq!(p["summary"]["lambda3"], "1 + 7 + 27");
}

#[test]
fn classify_has_one_survivor() {
    let p = json(&["classify"]);
    let s = p["survivors"].as_array().unwrap();
    assert_eq!(s.len(), 1);
    assert_eq!((s[0]["t"].as_u64(), s[0]["k"].as_u64()), (Some(3), Some(2)));
    assert_eq!((s[0]["n"].as_u64(), s[0]["dim_g"].as_u64()), (Some(8), Some(21)));
    assert_eq!(p["max_rank"], 5);
}

#[test]
fn solvable_isotropy_is_abelian_plane() {
    let p = json(&["isotropy", "--example", "solvable"]);
    assert_eq!(p["dim_gt"], 2);
    assert_eq!(p["abelian"], true);
    assert_eq!(p["contains_reference_basis"], true);
}

#[test]
fn solve_torsion_from_a_gamma_file() {
    let model = StabilizerModel::named("cayley-4form").unwrap();
    let values = (1..=8)
        .map(|a| {
            let mut x = SkewEndo::elementary(8, a, a % 8 + 1).unwrap();
            x.set(1, 5, scalar::frac(a as i64, 3));
            model.pr_split(&x).unwrap().1
        })
        .collect();
    let gamma = GammaElement { values };
    let path = temp_file("gamma.txt", &gamma.to_record());
    let p = json(&["solve-torsion", "cayley-4form", "--gamma", path.to_str().unwrap()]);
    assert_eq!(p["status"], "unique");
    assert_eq!(p["back_substitution"], true);

    // a 𝔤-valued entry is rejected
    let g = model.g.vectors[0].clone();
    let bad = GammaElement {
        values: (0..8).map(|_| g.clone()).collect(),
    };
    let path = temp_file("bad.txt", &bad.to_record());
    let out = run(&["solve-torsion", "cayley-4form", "--gamma", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = run(&["solve-torsion", "cayley-4form", "--gamma", "/nonexistent/gamma"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn e8_gamma_has_no_solution() {
    let model = StabilizerModel::named("kaehler-2form").unwrap();
    let e8 = skewtor::models::e8_component(&model).unwrap();
    let path = temp_file("e8.txt", &e8[0].to_record());
    let p = json(&["solve-torsion", "kaehler-2form", "--gamma", path.to_str().unwrap()]);
    assert_eq!(p["status"], "no-solution");
}
