use std::fs;
use std::process::{Command, Output};

fn barry(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_barry"))
        .args(args)
        .output()
        .expect("run barry")
}

fn stdout(args: &[&str]) -> String {
    let out = barry(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn values(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split_once(' ').unwrap().1.to_string())
        .collect()
}

#[test]
fn triangle_tables() {
    let exact = stdout(&["triangle", "9"]);
    assert_eq!(exact.lines().count(), 9);
    assert_eq!(exact.lines().last(), Some("1 1 16 31 38 31 16 1 1"));
    let parity = stdout(&["triangle", "9", "--mode", "parity"]);
    assert_eq!(parity.lines().last(), Some("1 1 0 1 0 1 0 1 1"));
    assert_eq!(stdout(&["triangle", "1"]), "1\n");
    assert_eq!(barry(&["triangle", "0"]).status.code(), Some(2));
}

#[test]
fn sequence_examples() {
    assert_eq!(
        values(&stdout(&["seq", "d", "0..6", "--method", "fast"])),
        ["1", "1", "2", "2", "3", "3", "3"]
    );
    assert_eq!(
        values(&stdout(&["seq", "r", "0..8", "--method", "closed"])),
        ["1", "2", "3", "4", "4", "4", "6", "8", "6"]
    );
    assert_eq!(
        values(&stdout(&["seq", "stern", "0..5"])),
        ["0", "1", "1", "2", "1", "3"]
    );
    assert_eq!(stdout(&["seq", "d", "8"]), "8 4\n");
    assert_eq!(stdout(&["seq", "t-row", "7"]), "7 1 1 11 19 19 11 1 1\n");
}

#[test]
fn methods_emit_identical_streams() {
    let range = "0..16384";
    let seq = |which: &str, method: &str| stdout(&["seq", which, range, "--method", method]);

    let d = seq("d", "fast");
    assert_eq!(d.lines().count(), 16385);
    for m in ["brute", "recurrence", "linrep"] {
        assert!(seq("d", m) == d, "d --method {m}");
    }
    assert!(seq("r", "brute") == seq("r", "closed"));
    assert!(seq("stern", "carlitz") == seq("stern", "fast"));

    let rows = "0..200";
    let parity_fast = stdout(&["seq", "t-row", rows, "--mode", "parity", "--method", "fast"]);
    let parity_brute = stdout(&[
        "seq", "t-row", rows, "--mode", "parity", "--method", "brute",
    ]);
    assert!(parity_fast == parity_brute);
}

#[test]
fn invalid_method_pairs_are_usage_errors() {
    for args in [
        ["seq", "r", "0..3", "--method", "fast"],
        ["seq", "d", "0..3", "--method", "closed"],
        ["seq", "stern", "0..3", "--method", "brute"],
        ["seq", "t-row", "0..3", "--method", "fast"],
    ] {
        let out = barry(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
    assert_eq!(barry(&["seq", "d", "5..2"]).status.code(), Some(2));
    assert_eq!(barry(&["seq", "d", "-1"]).status.code(), Some(2));
}

#[test]
fn continuant_and_runs() {
    assert_eq!(stdout(&["continuant", "3,4,5"]), "68\n");
    assert_eq!(stdout(&["continuant", "2,1"]), "3\n");
    assert_eq!(stdout(&["runs", "3615"]), "3,4,5\n");
    assert_eq!(barry(&["continuant", "3,0"]).status.code(), Some(2));
    assert_eq!(barry(&["continuant", "3,-4"]).status.code(), Some(2));
    // 2^200 − 1 has one run of 200 ones
    let n = "1606938044258990275541962092341162602522202993782792835301375";
    assert_eq!(stdout(&["runs", n]), "200\n");
}

#[test]
fn bfile_output() {
    assert_eq!(stdout(&["bfile", "A114214", "3"]), "0 1\n1 1\n2 2\n3 2\n");
    assert_eq!(stdout(&["bfile", "A114212", "0"]), "0 1\n");
    assert!(stdout(&["bfile", "A114213", "10"]).starts_with("0 1\n1 1\n2 1\n"));
    assert_eq!(barry(&["bfile", "A000001", "3"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("missing").join("b.txt");
    let out = barry(&["bfile", "A114214", "3", "-o", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("b.txt"));
}

#[test]
fn bfile_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for id in ["A119326", "A114213", "A114212", "A114214"] {
        let a = dir.path().join("a.txt");
        let b = dir.path().join("b.txt");
        stdout(&["bfile", id, "2000", "-o", a.to_str().unwrap()]);
        stdout(&["bfile", id, "2000", "-o", b.to_str().unwrap()]);
        assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap(), "{id}");
        assert_eq!(
            fs::read_to_string(&a).unwrap(),
            stdout(&["bfile", id, "2000"])
        );
    }
}

#[test]
fn bfile_compare_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b114214.txt");
    let p = path.to_str().unwrap();
    stdout(&["bfile", "A114214", "100", "-o", p]);
    assert_eq!(
        stdout(&["bfile-compare", "A114214", p]),
        "A114214: 101 records agree\n"
    );

    // corrupt the value on line 5 (index 4, d(4) = 3)
    let text = fs::read_to_string(&path)
        .unwrap()
        .replacen("4 3\n", "4 7\n", 1);
    fs::write(&path, text).unwrap();
    let out = barry(&["bfile-compare", "A114214", p]);
    assert_eq!(out.status.code(), Some(1));
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains("index 4: expected 3, found 7"), "{report}");

    fs::write(&path, "").unwrap();
    let out = barry(&["bfile-compare", "A114214", p]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no records"));

    fs::write(&path, "# header\n0 1\n1 one\n").unwrap();
    let out = barry(&["bfile-compare", "A114214", p]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    // OEIS-style file indexed from 1
    fs::write(&path, "1 1\n2 2\n3 3\n4 4\n5 4\n").unwrap();
    assert!(
        barry(&["bfile-compare", "A114212", p, "--first-index", "1"])
            .status
            .success()
    );
    assert_eq!(
        barry(&["bfile-compare", "A114212", p]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_exit_status() {
    let out = barry(&["verify", "thm1", "--max-n", "4096"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("PASS").count(), 3);

    let out = barry(&["verify", "remark", "--max-n", "10000"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout)
            .unwrap()
            .matches("PASS")
            .count(),
        4
    );

    assert!(barry(&["verify", "thm2", "--max-n", "4096"])
        .status
        .success());
    assert!(barry(&["verify", "all", "--max-n", "128"]).status.success());
    assert_eq!(
        barry(&["verify", "thm1", "--max-n", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(barry(&["verify", "thm9"]).status.code(), Some(2));
}

#[test]
fn help_on_every_subcommand() {
    for sub in [
        "triangle",
        "seq",
        "continuant",
        "runs",
        "bfile",
        "bfile-compare",
        "verify",
        "bench",
    ] {
        let out = barry(&[sub, "--help"]);
        assert!(out.status.success(), "{sub}");
        assert!(
            String::from_utf8_lossy(&out.stdout).contains("Usage"),
            "{sub}"
        );
    }
}

#[test]
fn bench_refuses_brute_force_on_huge_inputs() {
    let text = stdout(&[
        "bench", "d-brute", "--sizes", "100000", "--bits", "--reps", "1",
    ]);
    assert!(text.contains("refused"), "{text}");
    let text = stdout(&[
        "bench", "d-fast", "--sizes", "100000", "--bits", "--reps", "1",
    ]);
    assert!(text.contains("100000b") && text.contains("us"), "{text}");
    assert!(!text.contains("refused"));
    let text = stdout(&["bench", "rowsum-closed", "--sizes", "1000000000"]);
    assert!(text.contains("median of 5"), "{text}");
}

#[test]
fn brute_force_time_grows() {
    let text = stdout(&["bench", "d-brute", "--sizes", "1024,16384", "--reps", "9"]);
    let micros: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(3).unwrap().parse().unwrap())
        .collect();
    assert!(micros[1] > micros[0], "{text}");
}
