use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn resdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn compute_path() {
    let dir = tempfile::tempdir().unwrap();
    let edges: String = (0..9).map(|i| format!("{i} {}\n", i + 1)).collect();
    let p10 = write(dir.path(), "p10.el", &format!("10 9\n{edges}"));
    let o = resdom(&[
        "compute",
        "--input",
        &p10,
        "--k",
        "2",
        "--invariants",
        "gammark",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let inv = &v["invariants"][0];
    assert_eq!(inv["invariant"], "gamma_rk");
    assert_eq!(inv["value"], 2);
    assert_eq!(inv["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn compute_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("5 10\n");
    for u in 0..5 {
        for v in u + 1..5 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    let k5 = write(dir.path(), "k5.el", &text);
    let o = resdom(&["compute", "--input", &k5, "--k", "3"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let value = |name: &str| {
        v["invariants"]
            .as_array()
            .unwrap()
            .iter()
            .find(|i| i["invariant"] == name)
            .unwrap()["value"]
            .as_u64()
            .unwrap()
    };
    assert_eq!(
        (value("dim"), value("gamma_k"), value("gamma_rk")),
        (4, 1, 4)
    );

    let o = resdom(&["compute", "--input", &k5, "--k", "3", "--format", "csv"]);
    assert!(stdout(&o).starts_with("invariant,k,value,witness\n"));
}

#[test]
fn compute_errors() {
    let dir = tempfile::tempdir().unwrap();
    let split = write(dir.path(), "disconnected.el", "4 2\n0 1\n2 3\n");
    let o = resdom(&[
        "compute",
        "--input",
        &split,
        "--k",
        "1",
        "--invariants",
        "dim",
    ]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not connected"));

    let bad = write(dir.path(), "dup.el", "3 2\n0 1\n1 0\n");
    assert_eq!(code(&resdom(&["compute", "--input", &bad])), 2);
    assert_eq!(code(&resdom(&["compute", "--input", "/nonexistent.el"])), 2);
    assert_eq!(code(&resdom(&["compute"])), 2);
}

#[test]
fn generate_examples() {
    let o = resdom(&[
        "generate",
        "--family",
        "extremal-gr",
        "--k",
        "1",
        "--r",
        "2",
    ]);
    assert_eq!(code(&o), 0);
    let g = resdom::edge_list::parse(&stdout(&o)).unwrap();
    assert_eq!(g.order(), 8);

    let o = resdom(&[
        "generate",
        "--family",
        "t4",
        "--k",
        "2",
        "--m",
        "1",
        "--l",
        "1",
        "--r",
        "3",
        "--certify",
    ]);
    assert_eq!(code(&o), 0);
    let g = resdom::edge_list::parse(&stdout(&o)).unwrap();
    assert!(g.is_tree());
    assert!(String::from_utf8_lossy(&o.stderr).contains("dim=4 gamma_k=3 gamma_rk=6"));

    assert_eq!(
        code(&resdom(&[
            "generate", "--family", "t1", "--k", "2", "--m", "0", "--l", "0"
        ])),
        2
    );
    assert_eq!(code(&resdom(&["generate", "--family", "nosuch"])), 2);
}

#[test]
fn generate_realize() {
    let o = resdom(&[
        "generate",
        "--realize",
        "--k",
        "2",
        "--beta",
        "2",
        "--gamma",
        "3",
        "--alpha",
        "5",
        "--certify",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["claim"]["dim"], 2);
    assert_eq!(v["claim"]["gamma_k"], 3);
    assert_eq!(v["claim"]["gamma_rk"], 5);
    let o = resdom(&[
        "generate",
        "--realize",
        "--k",
        "2",
        "--beta",
        "1",
        "--gamma",
        "2",
        "--alpha",
        "3",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn sweep_examples() {
    let o = resdom(&["sweep", "--family", "cycle", "--k", "2", "--n", "3..20"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("family,k,n,m,l,r,solver,predicted,match")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 18);
    assert!(rows.iter().all(|r| r.ends_with(",true")));

    let o = resdom(&["sweep", "--family", "path", "--k", "1", "--n", "2..16"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().skip(1).all(|r| r.ends_with(",true")));

    let o = resdom(&[
        "sweep", "--family", "t1", "--k", "2", "--m", "1", "--l", "1..3",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("t1,2,"));

    assert_eq!(
        code(&resdom(&[
            "sweep", "--family", "path", "--k", "0", "--n", "2..5"
        ])),
        2
    );
    assert_eq!(
        code(&resdom(&[
            "sweep", "--family", "path", "--k", "1", "--n", "5..2"
        ])),
        2
    );
    assert_eq!(
        code(&resdom(&[
            "sweep", "--family", "path", "--k", "1", "--n", "5"
        ])),
        2
    );
}

#[test]
fn verify_examples() {
    let o = resdom(&[
        "verify",
        "--check",
        "chk_cycle_resolving",
        "--kmax",
        "4",
        "--nmax",
        "20",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["checks"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["status"] == "PASS"));
    assert!(rows
        .iter()
        .any(|r| r["params"]["expect"] == "not-resolving"));

    assert_eq!(code(&resdom(&["verify", "--check", "nonexistent"])), 2);
    assert_eq!(code(&resdom(&["verify"])), 2);
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let o = resdom(&[
            "verify",
            "--check",
            "sandwich,ld_dominates",
            "--level",
            "smoke",
            "--deterministic",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
    }
    let a = std::fs::read(a).unwrap();
    assert_eq!(a, std::fs::read(b).unwrap());
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["run_id"], "smoke-seed42");
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn enumerate_counts() {
    let o = resdom(&["enumerate", "--n", "4", "--connected"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 38);
    let o = resdom(&["enumerate", "--n", "3", "--format", "el"]);
    assert_eq!(stdout(&o).matches("# graph").count(), 8);
    assert_eq!(code(&resdom(&["enumerate", "--n", "8"])), 2);
}
