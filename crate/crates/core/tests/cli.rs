use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const EXAMPLE2: &str = "frame: w1 w2 w3
w1: 0.4
w2: 0.05
w3: 0.1
w1 w2: 0.1
w1 w3: 0.2
w1 w2 w3: 0.15
";

fn bpa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bpa"))
        .args(args)
        .output()
        .expect("run bpa")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn distribution(out: &str) -> Vec<f64> {
    let line = out
        .lines()
        .find(|l| l.starts_with("distribution:"))
        .expect("distribution line");
    let inner = line
        .trim_start_matches("distribution: (")
        .trim_end_matches(')');
    inner.split(", ").map(|x| x.parse().unwrap()).collect()
}

#[test]
fn transform_entropy_match_example2() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "ex2.bpa", EXAMPLE2);
    let o = bpa(&["transform", &file, "--precision", "9"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let p = distribution(&out);
    assert!((p[0] - 0.4).abs() < 1e-6 && (p[1] - 0.3).abs() < 1e-6 && (p[2] - 0.3).abs() < 1e-6);
    assert!(out.contains("regime: above-max"));
    assert!(out.contains("log base: 2 (bits)"));
}

#[test]
fn transform_baselines() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "ex2.bpa", EXAMPLE2);
    let o = bpa(&["transform", &file, "--method", "pignistic"]);
    assert!(o.status.success());
    assert_eq!(distribution(&stdout(&o)), vec![0.6, 0.15, 0.25]);
    let o = bpa(&["transform", &file, "--method", "plausibility"]);
    assert_eq!(distribution(&stdout(&o)), vec![0.53125, 0.1875, 0.28125]);
    let o = bpa(&["transform", &file, "--method", "nonsense"]);
    assert!(!o.status.success());
}

#[test]
fn relative_belief_on_vacuous_fails_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "vac.bpa", "frame: a b\na b: 1\n");
    let o = bpa(&["transform", &file, "--method", "relative-belief"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("singleton beliefs are zero"));
}

#[test]
fn entropy_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "ex2.bpa", EXAMPLE2);
    let out = stdout(&bpa(&["entropy", &file]));
    assert!(out.contains("deng entropy: 3.180776"), "{out}");
    assert!(!out.contains("shannon"));

    let bayes = write(dir.path(), "b.bpa", "frame: a b\na: 0.5\nb: 0.5\n");
    let out = stdout(&bpa(&["entropy", &bayes, "--base", "2"]));
    assert!(out.contains("deng entropy: 1.000000"));
    assert!(out.contains("shannon entropy: 1.000000"));

    let out = stdout(&bpa(&["bounds", &file]));
    assert!(out.contains("w1       0.400000  0.850000"), "{out}");
    assert!(out.contains("w3       0.100000  0.450000"));

    assert_eq!(
        bpa(&["entropy", &file, "--base", "0.5"]).status.code(),
        Some(1)
    );
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(
        dir.path(),
        "good.bpa",
        "frame: a b\na: 0.7\nb: 0.0\na b: 0.3\n",
    );
    let o = bpa(&["validate", &good]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("dropped zero-mass entries: 1"));

    let bad = write(dir.path(), "bad.bpa", "frame: a b\na: 0.6\n");
    let o = bpa(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("masses sum to 0.6"));

    let syntax = write(dir.path(), "syntax.bpa", "frame: a b\na c: 1\n");
    let o = bpa(&["validate", &syntax]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 3"));
}

#[test]
fn capacity_errors_exit_two() {
    let labels: Vec<String> = (0..31).map(|i| format!("e{i}")).collect();
    let dir = tempfile::tempdir().unwrap();
    let text = format!("frame: {}\n{}: 1\n", labels.join(" "), labels.join(" "));
    let file = write(dir.path(), "big.bpa", &text);
    assert_eq!(bpa(&["validate", &file]).status.code(), Some(2));
    assert_eq!(
        bpa(&["random", "--n", "31", "--focal", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn compare_table_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "ex2.bpa", EXAMPLE2);
    let out = stdout(&bpa(&["compare", &file]));
    for name in [
        "pignistic",
        "plausibility",
        "relative-belief",
        "proportional",
        "entropy-match",
    ] {
        assert!(out.contains(name));
    }
    assert!(out.contains("log base: 2 (bits)"));

    let out = stdout(&bpa(&["compare", &file, "--csv", "--precision", "3"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(
        lines[5].contains("entropy-match,3.181,1.571,1.610,w1,,0.400,0.300,0.300"),
        "{out}"
    );
}

#[test]
fn compare_batch_keeps_input_order() {
    let dir = tempfile::tempdir().unwrap();
    let inputs = dir.path().join("inputs");
    fs::create_dir(&inputs).unwrap();
    write(&inputs, "a.bpa", EXAMPLE2);
    write(&inputs, "b.bpa", "frame: x y\nx y: 1\n");
    write(
        &inputs,
        "c.json",
        r#"{"frame": ["p", "q"], "masses": [{"subset": ["p"], "mass": 1}]}"#,
    );
    let o = bpa(&["compare", "--batch", inputs.to_str().unwrap(), "--csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let firsts: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(firsts.len(), 15);
    assert!(
        firsts[0].ends_with("a.bpa")
            && firsts[5].ends_with("b.bpa")
            && firsts[10].ends_with("c.json")
    );
    assert!(out.contains("all singleton beliefs are zero"));
}

#[test]
fn random_is_reproducible_and_parseable() {
    let a = stdout(&bpa(&["random", "--n", "3", "--focal", "4", "--seed", "7"]));
    let b = stdout(&bpa(&["random", "--n", "3", "--focal", "4", "--seed", "7"]));
    assert_eq!(a, b);
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "r.bpa", &a);
    let o = bpa(&["validate", &file]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("focal elements: 4"));

    let json = stdout(&bpa(&[
        "random", "--n", "2", "--focal", "3", "--seed", "1", "--json",
    ]));
    let file = write(dir.path(), "r.json", &json);
    assert!(bpa(&["validate", &file]).status.success());

    assert_eq!(
        bpa(&["random", "--n", "2", "--focal", "4"]).status.code(),
        Some(1)
    );
}
