use std::process::{Command, Output};

fn ordseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn os_prints_canonical_text() {
    let o = ordseq(&["os", "A(4)"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "n=12; (1,1)(2,3)(3,8)\n");
    assert_eq!(
        stdout(&ordseq(&["os", "S(3) x D(22)"])),
        stdout(&ordseq(&["os", "S(3)×D(22)"]))
    );
}

#[test]
fn compare_accepts_expressions_literals_and_fixtures() {
    assert_eq!(
        stdout(&ordseq(&["compare", "C(12)", "A(4)"])),
        "ProperlyDominates\n"
    );
    assert_eq!(
        stdout(&ordseq(&["compare", "(1,1)(2,3)(3,8)", "D(12)"])),
        "Incomparable\n"
    );
    assert_eq!(
        stdout(&ordseq(&[
            "compare",
            "fixture:T3_72_40",
            "fixture:T3_72_35"
        ])),
        "Equal\n"
    );
    assert_eq!(
        stdout(&ordseq(&["compare", "C(2) x C(6)", "Dic(12)"])),
        "Incomparable\n"
    );
}

#[test]
fn psi_and_product() {
    assert_eq!(stdout(&ordseq(&["psi", "fixture:S_L2_64"])), "12106687\n");
    let o = ordseq(&["product", "n=2; (1,1)(2,1)", "(1,1)(2,1)"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "n=4; (1,1)(2,2)(4,1)\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("φ(4)"));
}

#[test]
fn classify_reports_witnesses() {
    let out = stdout(&ordseq(&["classify", "Cat(S3xD2p,11)"]));
    assert!(out.contains("supersolvable: true"));
    assert!(out.contains("prime-order normal chain:"));
    let out = stdout(&ordseq(&["classify", "A(5)"]));
    assert!(out.contains("solvable: false"));
    assert!(out.contains("derived series orders: 60"));
}

#[test]
fn poset_emitters() {
    let dot = stdout(&ordseq(&["poset", "--order", "300", "--emit", "dot"]));
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("\"T1_300_23\" -> \"T1_300_22\""));
    let csv = stdout(&ordseq(&["poset", "C(12)", "A(4)", "--emit", "csv"]));
    assert_eq!(
        csv,
        "label,C(12),A(4)\nC(12),Equal,ProperlyDominates\nA(4),ProperlyDominatedBy,Equal\n"
    );
}

#[test]
fn verify_suites_exit_codes() {
    let o = ordseq(&["verify", "thm25", "--primes", "11,17"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS thm25:"));
    let o = ordseq(&["verify", "props"]);
    assert_eq!(code(&o), 3);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("FAIL")).count(), 2);
    assert!(out.contains("FAIL props: C2xC6 vs Dic12"));
}

#[test]
fn user_errors_exit_one() {
    assert_eq!(code(&ordseq(&["os", "F(3"])), 1);
    assert_eq!(code(&ordseq(&["compare", "C(4)", "C(6)"])), 1);
    assert_eq!(code(&ordseq(&["catalog", "CpxA4", "--p", "4"])), 1);
    assert_eq!(code(&ordseq(&["catalog", "nope"])), 1);
    assert_eq!(code(&ordseq(&["verify", "table9"])), 1);
    assert_eq!(code(&ordseq(&["verify", "simple", "--primes", "5"])), 1);
    assert_eq!(code(&ordseq(&["bogus"])), 1);
    assert_eq!(code(&ordseq(&["compare", "fixture:missing", "C(2)"])), 1);
}

#[test]
fn cache_round_trip_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.tsv");
    let p = path.to_str().unwrap();
    assert_eq!(code(&ordseq(&["--cache", p, "os", "D(10) x F7"])), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("D(10) x F7\tn=420;"));
    let o = ordseq(&["--cache", p, "--check-cache", "os", "C(2)"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS cache D(10) x F7"));
    std::fs::write(&path, "C(4)\tn=4; (1,1)(2,3)\n").unwrap();
    assert_eq!(
        code(&ordseq(&["--cache", p, "--check-cache", "os", "C(2)"])),
        3
    );
}

#[test]
fn catalog_and_fixture_listing() {
    let list = stdout(&ordseq(&["catalog"]));
    assert!(list.contains("C5^2:Dic12"));
    assert_eq!(
        stdout(&ordseq(&["catalog", "CpxA4", "--p", "11"])),
        "n=132; (1,1)(2,3)(3,8)(11,10)(22,30)(33,80)\n"
    );
    let fx = stdout(&ordseq(&["fixtures", "--order", "72"]));
    assert_eq!(fx.lines().count(), 2);
}
