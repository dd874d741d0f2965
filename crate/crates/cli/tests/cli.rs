use std::process::{Command, Output};

const M4: &str = "123412314231243121342132413214321";

fn superperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superperm")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_prints_m4() {
    let o = superperm(&["build", "-n", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), format!("{M4}\n"));
}

#[test]
fn build_refuses_large_n_without_override() {
    let o = superperm(&["build", "-n", "13"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn family_count_n7() {
    let o = superperm(&["family", "count", "-n", "7"]);
    assert_eq!(stdout(&o), "8153726976\n");
}

#[test]
fn verify_exit_codes() {
    let o = superperm(&["verify", "-n", "3", "123121321"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("superpermutation: true"));

    let o = superperm(&["verify", "-n", "3", "--format", "report", "1231213"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("n=3 length=7 superpermutation=false"));

    let o = superperm(&["verify", "-n", "3", "12341"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 3"));

    let o = superperm(&["verify", "-n", "3", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.txt");
    std::fs::write(&path, "121\n212\n").unwrap();
    let o = superperm(&["verify", "-n", "2", "--file", path.to_str().unwrap(), "--format", "report"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn emitted_strings_verify() {
    let mut lines: Vec<(usize, String)> = Vec::new();
    for n in 1..=6 {
        lines.push((n, stdout(&superperm(&["build", "-n", &n.to_string()])).trim().to_string()));
    }
    for line in stdout(&superperm(&["family", "enumerate", "-n", "5"])).lines() {
        lines.push((5, line.to_string()));
    }
    for line in stdout(&superperm(&["family", "sample", "-n", "7", "--count", "3", "--seed", "1"])).lines() {
        lines.push((7, line.to_string()));
    }
    for (n, s) in lines {
        let o = superperm(&["verify", "-n", &n.to_string(), &s]);
        assert!(o.status.success(), "n = {n}");
    }
}

#[test]
fn enumerate_n6_is_deterministic() {
    let a = superperm(&["family", "enumerate", "-n", "6"]);
    let b = superperm(&["family", "enumerate", "-n", "6"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 96);
    assert!(text.lines().all(|l| l.len() == 873 && l.starts_with("123456")));
}

#[test]
fn family_get_and_range() {
    let o = superperm(&["family", "enumerate", "-n", "6", "--range", "5..7", "--format", "report"]);
    let text = stdout(&o);
    let got: Vec<&str> = text.lines().map(|l| l.split(' ').next().unwrap()).collect();
    assert_eq!(got, vec!["index=5", "index=6"]);
    let second = text.lines().nth(1).unwrap().split("string=").nth(1).unwrap().to_string();
    let g = superperm(&["family", "get", "-n", "6", "--index", "6"]);
    assert_eq!(stdout(&g).trim(), second);

    let big = "320352637207127391364950814323398779319161580421119";
    let o = superperm(&["family", "get", "-n", "8", "--index", big]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim().len(), 46233);

    let o = superperm(&["family", "enumerate", "-n", "5", "--range", "0..3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn segment_and_codec() {
    let o = superperm(&["segment", "-n", "3", "-k", "2", "-j", "0"]);
    assert_eq!(stdout(&o), "[0, 5)\n12312\n");

    let o = superperm(&["codec", "-n", "5", "--circ", "0121", "--format", "report"]);
    assert_eq!(stdout(&o), "n=5 oneline=42351 circ=0,1,2,1 shift_rank=31 lehmer_rank=81\n");
    let o = superperm(&["codec", "-n", "3", "--rank", "3"]);
    assert!(stdout(&o).starts_with("one-line: 213\n"));
    let o = superperm(&["codec", "-n", "4", "--lehmer", "23"]);
    assert!(stdout(&o).starts_with("one-line: 4321\n"));
    let o = superperm(&["codec", "-n", "3", "--circ", "20"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_outputs() {
    let o = superperm(&["search", "-n", "4", "--format", "report"]);
    let text = stdout(&o);
    assert!(text.starts_with("n=4 minimal_length=33 witnesses=1 "));
    assert!(text.trim_end().ends_with(&format!("witness_strings={M4}")));
    assert_eq!(superperm(&["search", "-n", "5"]).status.code(), Some(3));
    assert_eq!(superperm(&["search", "-n", "4", "--budget", "5"]).status.code(), Some(3));
}

#[test]
fn stats_reports_symbol_counts() {
    let o = superperm(&["stats", "-n", "3", "123121321"]);
    let text = stdout(&o);
    assert!(text.contains("palindrome: true"));
    assert!(text.contains("symbol 1: 4"));
    assert!(text.contains("symbol 3 count equals (3-1)! = 2: true"));
}

#[test]
fn wide_alphabet_uses_commas() {
    let o = superperm(&["verify", "-n", "13", "--streaming", "--format", "report", "1,2,3,4,5,6,7,8,9,10,11,12,13"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("distinct=1"));
}
