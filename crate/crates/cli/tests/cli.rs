use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const C4: &str = "c the 4-cycle\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";

fn tclq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tclq"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_writes_a_verifiable_witness() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "c4.col", C4);
    for algo in ["dp", "pmc", "auto"] {
        let out = dir.path().join(format!("{algo}.tcd"));
        let o = tclq(&["solve", "--input", s(&g), "--algo", algo, "--out", s(&out)]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o), "tcl 2\n");
        let v = tclq(&["verify", s(&g), s(&out)]);
        assert_eq!(v.status.code(), Some(0));
        assert_eq!(stdout(&v), "valid, width 2\n");
    }
    let o = tclq(&["solve", "--input", s(&g), "--algo", "oracle"]);
    assert_eq!(stdout(&o), "tcl 2\n");
}

#[test]
fn decision_mode() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "c4.col", C4);
    for algo in ["dp", "pmc", "oracle"] {
        let no = tclq(&["solve", "--input", s(&g), "--algo", algo, "--k", "1"]);
        assert_eq!(
            (no.status.code(), stdout(&no)),
            (Some(1), "NO\n".to_string())
        );
        let yes = tclq(&["solve", "--input", s(&g), "--algo", algo, "--k", "2"]);
        assert_eq!(
            (yes.status.code(), stdout(&yes)),
            (Some(0), "YES\n".to_string())
        );
    }
    let out = dir.path().join("w.tcd");
    let yes = tclq(&[
        "solve",
        "--input",
        s(&g),
        "--algo",
        "dp",
        "--k",
        "3",
        "--out",
        s(&out),
    ]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(tclq(&["verify", s(&g), s(&out)]).status.code(), Some(0));
    assert_eq!(
        tclq(&["solve", "--input", s(&g), "--k", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn special_inputs() {
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "c4.ct", "(1 (0 a b) (0 c d))\n");
    let o = tclq(&["solve", "--cograph", s(&t)]);
    assert_eq!(
        (o.status.code(), stdout(&o)),
        (Some(0), "tcl 2\n".to_string())
    );
    let o = tclq(&["solve", "--cograph", s(&t), "--k", "1"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(1), "NO\n".to_string()));

    let p = file(&dir, "c4.pi", "3 4 1 2\n");
    let out = dir.path().join("p.tcd");
    let o = tclq(&["solve", "--perm", s(&p), "--out", s(&out)]);
    assert_eq!(
        (o.status.code(), stdout(&o)),
        (Some(0), "tcl 2\n".to_string())
    );
    let g = file(&dir, "c4.col", "p edge 4 4\ne 1 3\ne 1 4\ne 2 3\ne 2 4\n");
    assert_eq!(tclq(&["verify", s(&g), s(&out)]).status.code(), Some(0));
    let o = tclq(&["solve", "--perm", s(&p), "--k", "1"]);
    assert_eq!(o.status.code(), Some(1));

    let bad = file(&dir, "bad.pi", "1 1\n");
    assert_eq!(tclq(&["solve", "--perm", s(&bad)]).status.code(), Some(2));
    let bad = file(&dir, "bad.ct", "(2 a b)\n");
    assert_eq!(
        tclq(&["solve", "--cograph", s(&bad)]).status.code(),
        Some(2)
    );
}

#[test]
fn cover_methods_agree() {
    let dir = TempDir::new().unwrap();
    let g = file(
        &dir,
        "c5.col",
        "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n",
    );
    for method in ["lawler", "fast", "ie"] {
        let o = tclq(&["cover", "--input", s(&g), "--method", method]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("vcc 3"));
        let mut seen: Vec<usize> = lines
            .flat_map(|l| {
                l.strip_prefix("clique ")
                    .unwrap()
                    .split(' ')
                    .map(|x| x.parse::<usize>().unwrap())
                    .collect::<Vec<_>>()
            })
            .collect();
        seen.sort();
        assert_eq!(seen, vec![1, 2, 3, 4, 5]);
    }
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "c4.col", C4);
    let bad = file(&dir, "bad.col", "p edge 2 1\ne 1 3\n");
    let o = tclq(&["solve", "--input", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let missing = file(
        &dir,
        "missing.tcd",
        "tcd 2 2 4\nb 1 1 2 3\nc 1 1 2\nc 1 2 3\nb 2 3 4\nc 2 3 4\nt 1 2\n",
    );
    let o = tclq(&["verify", s(&g), s(&missing)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("edge 1-4 is in no bag"),
        "{}",
        stdout(&o)
    );

    let header = file(&dir, "header.tcd", "tcd two 1 4\n");
    let o = tclq(&["verify", s(&g), s(&header)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));

    let path = |n: usize| {
        format!(
            "p edge {n} {}\n{}",
            n - 1,
            (1..n)
                .map(|i| format!("e {i} {}\n", i + 1))
                .collect::<String>()
        )
    };
    let big = file(&dir, "p30.col", &path(30));
    assert_eq!(tclq(&["solve", "--input", s(&big)]).status.code(), Some(3));
    assert_eq!(tclq(&["cover", "--input", s(&big)]).status.code(), Some(3));
    let ten = file(&dir, "p10.col", &path(10));
    assert_eq!(
        tclq(&["solve", "--input", s(&ten), "--algo", "oracle"])
            .status
            .code(),
        Some(0)
    );
    let twelve = file(&dir, "p12.col", &path(12));
    assert_eq!(
        tclq(&["solve", "--input", s(&twelve), "--algo", "oracle"])
            .status
            .code(),
        Some(3)
    );

    assert_eq!(tclq(&["solve"]).status.code(), Some(2));
    assert_eq!(
        tclq(&["solve", "--input", s(&dir.path().join("nope.col"))])
            .status
            .code(),
        Some(2)
    );
    let out = dir.path().join("x.tcd");
    assert_eq!(
        tclq(&[
            "solve",
            "--input",
            s(&g),
            "--algo",
            "oracle",
            "--out",
            s(&out)
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn gen_is_deterministic_and_parseable() {
    let a = tclq(&["gen", "--family", "random", "--seed", "4", "--n", "7"]);
    let b = tclq(&["gen", "--family", "random", "--seed", "4", "--n", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("p edge 7 "));

    let o = tclq(&["gen", "--family", "reduction", "--n", "3", "--apexes", "4"]);
    assert!(stdout(&o).starts_with("p edge 7 "), "{}", stdout(&o));
    let o = tclq(&["gen", "--family", "reduction", "--n", "3", "--apexes", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(
        tclq(&["gen", "--family", "ktree", "--count", "3"])
            .status
            .code(),
        Some(2)
    );

    let dir = TempDir::new().unwrap();
    for family in ["ktree", "cograph", "permutation", "reduction", "random"] {
        let o = tclq(&[
            "gen",
            "--family",
            family,
            "--n",
            "6",
            "--count",
            "3",
            "--out-dir",
            s(dir.path()),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    let mut names: Vec<String> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 5 * 3 + 3 + 3 + 3);
    for name in names.iter().filter(|n| n.ends_with(".col")) {
        let o = tclq(&["solve", "--input", s(&dir.path().join(name))]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
    }
    for name in names.iter().filter(|n| n.ends_with(".ct")) {
        assert_eq!(
            tclq(&["solve", "--cograph", s(&dir.path().join(name))])
                .status
                .code(),
            Some(0)
        );
    }
    for name in names.iter().filter(|n| n.ends_with(".pi")) {
        assert_eq!(
            tclq(&["solve", "--perm", s(&dir.path().join(name))])
                .status
                .code(),
            Some(0)
        );
    }
}
