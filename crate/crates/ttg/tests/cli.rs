//! End-to-end tests of the binary: golden output stability, JSON/text
//! parity, and the exit-code contract.

use std::io::Write;
use std::process::{Command, Output};

fn ttg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ttg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

#[test]
fn koszul_annihilator_of_two() {
    let out = ttg(&["ann", "--ring", "Z", "--koszul", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(2)\n");
}

#[test]
fn golden_reports_are_byte_stable() {
    let a = ttg(&["spc-report", "--ring", "Z/12"]);
    let b = ttg(&["spc-report", "--ring", "Z/12"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let expected = "\
spc report for Z/12
primes: (2) (3)
tame_primes: (2) -> S((2)) support {(3)}
tame_primes: (3) -> S((3)) support {(2)}
mx: S((2)) S((3))
mn: S((2)) S((3))
s_of_S_identity: true
";
    assert_eq!(stdout(&a), expected);

    // the complex file format round-trips byte-exactly through the CLI
    let k = ttg(&["koszul", "--ring", "Z", "--elements", "2,3"]);
    assert!(k.status.success());
    let file = write_temp(&stdout(&k));
    let s = ttg(&[
        "supp",
        "--ring",
        "Z",
        "--complex",
        file.path().to_str().unwrap(),
    ]);
    assert_eq!(stdout(&s), "{}\n"); // a regular sequence is exact
}

#[test]
fn json_and_text_carry_the_same_data() {
    let t = ttg(&["spc-report", "--ring", "Z/30"]);
    let j = ttg(&["--format", "json", "spc-report", "--ring", "Z/30"]);
    let text = stdout(&t);
    let v: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert_eq!(v["ring"], "Z/30");
    let primes: Vec<String> = v["primes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p.as_str().unwrap().to_string())
        .collect();
    assert!(text.contains(&format!("primes: {}", primes.join(" "))));
    assert_eq!(
        v["s_of_S_identity"].as_bool().unwrap(),
        text.contains("s_of_S_identity: true")
    );
    for entry in v["tame_primes"].as_array().unwrap() {
        let line = format!(
            "tame_primes: {} -> {} support {}",
            entry["prime"].as_str().unwrap(),
            entry["ideal"].as_str().unwrap(),
            entry["support"].as_str().unwrap()
        );
        assert!(text.contains(&line), "missing line: {line}");
    }
}

#[test]
fn member_answers_and_expectations() {
    // Z/10 in degree 0 is not in <{(2)}>: V(Ann) contains (5)
    let x = "ring Z\ndeg 0 rank 1\ndeg 1 rank 1\nd 1\n10\n";
    let f = write_temp(x);
    let path = f.path().to_str().unwrap();

    let out = ttg(&[
        "member",
        "--ring",
        "Z",
        "--ideal",
        "compact{(2)}",
        "--complex",
        path,
    ]);
    assert!(out.status.success(), "plain member answers with exit 0");
    assert!(stdout(&out).starts_with("no"));

    let out = ttg(&[
        "member",
        "--ring",
        "Z",
        "--ideal",
        "compact{(2)}",
        "--complex",
        path,
        "--expect",
        "yes",
    ]);
    assert_eq!(out.status.code(), Some(1), "--expect mismatch exits 1");

    let out = ttg(&[
        "member",
        "--ring",
        "Z",
        "--ideal",
        "compact{(2),(5)}",
        "--complex",
        path,
        "--expect",
        "yes",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("yes"));
}

#[test]
fn unknown_answers_exit_three() {
    // a windowed tensor has an unknown tail; Zero membership is unknown
    let g2 = "ring DVR\ntail poly i from 1\n";
    let f1 = write_temp(g2);
    let f2 = write_temp(g2);
    let t = ttg(&[
        "tensor",
        "--ring",
        "DVR",
        "--formal",
        f1.path().to_str().unwrap(),
        f2.path().to_str().unwrap(),
        "--window",
        "8",
    ]);
    assert!(t.status.success());
    let windowed = stdout(&t);
    assert!(windowed.contains("tail unknown"));

    let f3 = write_temp(g2);
    let out = ttg(&["minimal-c", "--formal", f3.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("some 2"));
}

#[test]
fn usage_errors_exit_two() {
    let out = ttg(&["ann", "--ring", "Z/1", "--koszul", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ttg(&["ann", "--ring", "Z"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ttg(&["bogus-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_three() {
    let k = ttg(&["koszul", "--ring", "Z", "--elements", "2,3"]);
    let f1 = write_temp(&stdout(&k));
    let f2 = write_temp(&stdout(&k));
    let out = ttg(&[
        "tensor",
        "--ring",
        "Z",
        "--complex",
        f1.path().to_str().unwrap(),
        f2.path().to_str().unwrap(),
        "--budget",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn size_budget_env_override() {
    let k = ttg(&["koszul", "--ring", "Z", "--elements", "2,3"]);
    let f1 = write_temp(&stdout(&k));
    let f2 = write_temp(&stdout(&k));
    let out = Command::new(env!("CARGO_BIN_EXE_ttg"))
        .env("TT_SIZE_BUDGET", "3")
        .args([
            "tensor",
            "--ring",
            "Z",
            "--complex",
            f1.path().to_str().unwrap(),
            f2.path().to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_and_fiber_report_succeed() {
    let out = ttg(&["verify", "--suite", "thm3.9"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass"));

    let out = ttg(&["verify", "--suite", "ex7.5", "--window", "8"]);
    assert!(out.status.success());

    let out = ttg(&["fiber-report", "--cmax", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("4 distinct primes"));

    let out = ttg(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nilpotence_cli_runs() {
    // 2·id on the unit complex over Z/4, as a map file
    let map = "ring Z/4\nsource\ndeg 0 rank 1\ntarget\ndeg 0 rank 1\nf 0\n2\n";
    let f = write_temp(map);
    let out = ttg(&[
        "nilpotence",
        "--ring",
        "Z/4",
        "--map",
        f.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("vanishes at tensor power 2"));
    assert!(stdout(&out).contains("annihilator chain: (2) <= (1)"));
}

#[test]
fn classify_artinian_counts() {
    let out = ttg(&["--format", "json", "classify-artinian", "--ring", "Z/30"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ideal_count"], 8);
    assert_eq!(v["lattice_tables_ok"], true);
    assert_eq!(v["membership_ok"], true);
}

#[test]
fn lattice_cli() {
    let out = ttg(&[
        "lattice",
        "--ring",
        "Z",
        "--a",
        "compact{(2)}",
        "--b",
        "compact{(3)}",
    ]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("meet zero"));
    assert!(s.contains("join compact{(2),(3)}"));
}
