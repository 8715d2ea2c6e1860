use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn lmn(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lmn"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("failed to run lmn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn axioms() {
    let dir = TempDir::new().unwrap();
    let out = lmn(&["axioms", "-n", "4"], dir.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("all 8 axiom groups pass"));
    assert_eq!(code(&lmn(&["axioms", "-n", "1"], dir.path())), 2);
    assert_eq!(code(&lmn(&["axioms", "-n", "8"], dir.path())), 0);
}

#[test]
fn eval() {
    let dir = TempDir::new().unwrap();
    let run = |args: &[&str]| {
        let out = lmn(args, dir.path());
        (code(&out), stdout(&out).trim().to_string())
    };
    assert_eq!(run(&["eval", "-n", "4", "D2(x1)", "--set", "x1=3/4"]), (0, "1".into()));
    assert_eq!(run(&["eval", "-n", "2", "x1 | !x1", "--set", "x1=1/2"]), (0, "1/2".into()));
    assert_eq!(run(&["eval", "-n", "3", "J2(x1)", "--set", "x1=2/3"]), (0, "1".into()));
    assert_eq!(run(&["eval", "-n", "4", "x1 & !x2", "--set", "x1=3", "--set", "x2=1"]), (0, "3/4".into()));
    assert_eq!(run(&["eval", "-n", "4", "x2", "--set", "x2=2"]), (0, "2/4".into()));
    assert_eq!(run(&["eval", "-n", "4", "x1 &", "--set", "x1=1"]).0, 2);
    assert_eq!(run(&["eval", "-n", "4", "x1 & x2", "--set", "x1=1"]).0, 2);
    assert_eq!(run(&["eval", "-n", "4", "x1", "--set", "x1=1/3"]).0, 2);
    assert_eq!(run(&["eval", "-n", "4", "D5(x1)", "--set", "x1=1"]).0, 2);
}

#[test]
fn table_formats() {
    let dir = TempDir::new().unwrap();
    let out = lmn(&["table", "-n", "2", "-r", "1", "x1", "-o", "id.json"], dir.path());
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(dir.path().join("id.json")).unwrap();
    assert_eq!(text, "{\"n\":2,\"arity\":1,\"outputs\":[0,1,2]}\n");

    let out = lmn(&["table", "-n", "4", "-r", "2", "x1 & x2", "--format", "csv"], dir.path());
    let csv = stdout(&out);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 26);
    assert_eq!(lines[0], "x1,x2,f");
    assert_eq!(lines[1], "0,0,0");
    assert_eq!(lines[7], "1,1,1");
    assert_eq!(lines[25], "4,4,4");

    let out = lmn(&["table", "-n", "3", "-r", "1", "J0(x1)"], dir.path());
    assert_eq!(stdout(&out), "{\"n\":3,\"arity\":1,\"outputs\":[3,0,0,0]}\n");

    let out = lmn(&["table", "-n", "3", "-r", "1", "x1", "--format", "text"], dir.path());
    assert!(stdout(&out).starts_with("(0) -> 0\n(1/3) -> 1/3\n"));

    assert_eq!(code(&lmn(&["table", "-n", "3", "-r", "1", "x2"], dir.path())), 2);
    assert_eq!(code(&lmn(&["table", "-n", "3", "-r", "1", "x1", "-o", "no/such/dir/t.json"], dir.path())), 2);
    assert_eq!(code(&lmn(&["table", "-n", "9", "-r", "7", "x1"], dir.path())), 2);
}

#[test]
fn check_and_synthesize() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    // Łukasiewicz implication at n = 4 and n = 3, written by hand as JSON
    let imp = |n: u32| {
        let outputs: Vec<String> = (0..=n)
            .flat_map(|a| (0..=n).map(move |b| n.min(n - a + b).to_string()))
            .collect();
        format!("{{\"n\":{n},\"arity\":2,\"outputs\":[{}]}}", outputs.join(","))
    };
    std::fs::write(p.join("imp4.json"), imp(4)).unwrap();
    std::fs::write(p.join("imp3.json"), imp(3)).unwrap();
    lmn(&["table", "-n", "5", "-r", "1", "x1", "-o", "id5.json"], p);
    lmn(&["table", "-n", "5", "-r", "1", "0", "-o", "zero.json"], p);
    lmn(&["table", "-n", "2", "-r", "1", "x1", "-o", "id2.csv", "--format", "csv"], p);

    let out = lmn(&["check", "imp4.json"], p);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "tuple=(3/4,1/4) output=2/4 allowed={0,1/4,3/4,1}");
    assert_eq!(code(&lmn(&["check", "imp3.json"], p)), 0);
    assert_eq!(stdout(&lmn(&["check", "id5.json"], p)).trim(), "representable");
    assert_eq!(code(&lmn(&["check", "id2.csv"], p)), 0);

    std::fs::write(p.join("bad.json"), "{\"n\":2,\"arity\":1,\"outputs\":[0,1]}").unwrap();
    assert_eq!(code(&lmn(&["check", "bad.json"], p)), 2);
    assert_eq!(code(&lmn(&["check", "missing.json"], p)), 2);

    let out = lmn(&["synthesize", "id2.csv", "--simplify"], p);
    assert_eq!(code(&out), 0);
    let term = stdout(&out).trim().to_string();
    let out = lmn(&["table", "-n", "2", "-r", "1", &term], p);
    assert_eq!(stdout(&out), "{\"n\":2,\"arity\":1,\"outputs\":[0,1,2]}\n");

    let out = lmn(&["synthesize", "zero.json", "--simplify"], p);
    assert_eq!(stdout(&out), "0\n");

    let out = lmn(&["synthesize", "imp4.json"], p);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("tuple=(3/4,1/4)"));
}

#[test]
fn verify() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    lmn(&["table", "-n", "3", "-r", "1", "x1", "-o", "id.json"], p);
    lmn(&["table", "-n", "3", "-r", "1", "!x1", "-o", "neg.json"], p);
    lmn(&["table", "-n", "3", "-r", "2", "D2(x1) & !x2 | J1(x2)", "-o", "f.json"], p);

    assert_eq!(code(&lmn(&["verify", "x1", "-t", "id.json"], p)), 0);
    let out = lmn(&["verify", "x1", "-t", "neg.json"], p);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "mismatch: tuple=(0) expected=1 got=0");

    let out = lmn(&["synthesize", "f.json", "-o", "f.term"], p);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&lmn(&["verify", "--term-file", "f.term", "-t", "f.json"], p)), 0);
    assert_eq!(code(&lmn(&["verify", "--term-file", "f.term", "-t", "id.json"], p)), 2);
    assert_eq!(code(&lmn(&["verify", "x1 |", "-t", "id.json"], p)), 2);
    assert_eq!(code(&lmn(&["verify", "-t", "id.json"], p)), 2);
}

#[test]
fn subalgebras() {
    let dir = TempDir::new().unwrap();
    let out = stdout(&lmn(&["subalgebras", "-n", "5"], dir.path()));
    assert_eq!(out.lines().count(), 4);
    assert_eq!(stdout(&lmn(&["subalgebras", "-n", "2"], dir.path())).lines().count(), 2);
    let out = stdout(&lmn(&["subalgebras", "-n", "3"], dir.path()));
    assert_eq!(out, "  2  {0,1}\n  4  {0,1/3,2/3,1}\n");
}

#[test]
fn free() {
    let dir = TempDir::new().unwrap();
    let out = lmn(&["free", "-n", "3", "-r", "1"], dir.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("2^2 · 4^2 = 64"));
    assert!(stdout(&out).trim_end().ends_with("consistent"));

    let out = lmn(&["free", "-n", "2", "-r", "1"], dir.path());
    assert!(stdout(&out).contains("2^2 · 3^1 = 12"));

    let out = lmn(&["free", "-n", "5", "-r", "1"], dir.path());
    let text = stdout(&out);
    assert!(text.contains("2^2 · 4^2 · 4^2 = 1024"));
    assert!(text.lines().any(|l| l.contains("{0,1/5,2/5,3/5,4/5,1}") && l.split_whitespace().nth(2) == Some("0")));

    let out = lmn(&["free", "-n", "3", "-r", "2", "--format", "json"], dir.path());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["checks"]["formula"], true);

    assert_eq!(code(&lmn(&["free", "-n", "9", "-r", "7"], dir.path())), 2);
    assert_eq!(code(&lmn(&["free", "-n", "3", "-r", "3", "--max-table", "10"], dir.path())), 2);
    assert_eq!(code(&lmn(&["free", "-n", "3", "-r", "0"], dir.path())), 2);
}

#[test]
fn demo_implication() {
    let dir = TempDir::new().unwrap();
    let out = lmn(&["demo-implication", "-n", "4"], dir.path());
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("(3/4 -> 1/4) = 2/4, which is not in {0,1/4,3/4,1}"));

    let out = lmn(&["demo-implication", "-n", "2"], dir.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("representable"));
    assert!(stdout(&out).contains("term: "));

    let out = lmn(&["demo-implication", "-n", "6"], dir.path());
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not representable: tuple=(5/6,1/6) output=2/6"));
}
