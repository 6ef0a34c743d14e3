use commonhol::cli::main_with;
use commonhol::codec::encode;
use commonhol_core::platform::build_platform_theory;
use commonhol_core::session::Session;
use commonhol_core::trace::export;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str], input: &str) -> Run {
    let argv: Vec<String> = std::iter::once("commonhol").chain(args.iter().copied()).map(String::from).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = main_with(&argv, &mut input.as_bytes(), &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn info_reports_platform_version() {
    let r = run(&["info"], "");
    assert_eq!(r.code, 0);
    assert!(r.out.lines().any(|l| l == "platform_version 0.5"), "{}", r.out);
}

#[test]
fn parse_prints_canonical_forms() {
    let r = run(&["parse", "--term", "!x. x + 0 = x"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.trim(), "!x. x + 0 = x");

    let r = run(&["parse", "--type", "nat -> bool"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with(':'), "{}", r.out);
}

#[test]
fn parse_errors_exit_nonzero() {
    let r = run(&["parse", "--term", "(x + "], "");
    assert_eq!(r.code, 1);
    assert!(r.err.contains("error"), "{}", r.err);
    assert_eq!(run(&["parse"], "").code, 1);
    assert_eq!(run(&["no-such-command"], "").code, 1);
}

#[test]
fn eval_proves_numeral_results() {
    let r = run(&["eval", "12 * 12"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.trim(), "|- 12 * 12 = 144");
    assert_eq!(run(&["eval", "1 div 0"], "").code, 1);
}

#[test]
fn theory_list_sections() {
    let r = run(&["theory", "list", "--axioms"], "");
    assert_eq!(r.code, 0);
    assert_eq!(r.out.lines().count(), 22);
    assert!(r.out.lines().all(|l| l.starts_with("axiom ")));

    let r = run(&["theory", "list", "--types"], "");
    for ty in ["bool", "fun", "ind", "prod", "nat"] {
        assert!(r.out.lines().any(|l| l.split(' ').nth(1) == Some(ty)), "{}", ty);
    }
}

#[test]
fn conformance_passes() {
    let r = run(&["conformance"], "");
    assert_eq!(r.code, 0, "{}", r.out);
    assert_eq!(r.out.lines().filter(|l| l.starts_with("pass ")).count(), 7);
}

#[test]
fn exported_trace_imports_and_reexports_identically() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("platform.trace");
    let r = run(&["trace", "export", first.to_str().unwrap()], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.trim(), "wrote 691 steps, 64 exports");

    let r = run(&["trace", "import", "--bare", first.to_str().unwrap()], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.lines().count(), 64);
    assert!(r.out.lines().any(|l| l == "truth_thm: |- true"), "{}", r.out);

}

/// A short derivation over the standard theory, written as a script.
fn script() -> String {
    let s = Session::new();
    build_platform_theory(&s).unwrap();
    s.record_mode(true);
    let p = s.parse_term("p /\\ q").unwrap();
    let a = s.assume_rule(&p).unwrap();
    let q = s.conjunct2_rule(&a).unwrap();
    let th = s.disch_rule(&p, &q).unwrap();
    let sum = s.eval_conv(&s.parse_term("7 + 8").unwrap()).unwrap();
    let tr = export(&s, "test", "0", &[("and_elim", &th), ("sum", &sum)]).unwrap();
    encode(&tr)
}

#[test]
fn script_export_replays_to_the_same_theorems() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("script.trace");
    std::fs::write(&src, script()).unwrap();
    let out = dir.path().join("recorded.trace");
    let r = run(&["trace", "export", out.to_str().unwrap(), "--script", src.to_str().unwrap()], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.ends_with("2 exports\n"), "{}", r.out);

    let direct = run(&["trace", "import", src.to_str().unwrap()], "");
    let recorded = run(&["trace", "import", out.to_str().unwrap()], "");
    assert_eq!(direct.code, 0, "{}", direct.err);
    assert_eq!(direct.out, recorded.out);
    assert_eq!(direct.out, "and_elim: |- p /\\ q ==> q\nsum: |- 7 + 8 = 15\n");
    assert_eq!(run(&["trace", "import", "--bare", src.to_str().unwrap()], "").code, 1);
}

#[test]
fn import_of_missing_file_fails() {
    let r = run(&["trace", "import", "/nonexistent/x.trace"], "");
    assert_eq!(r.code, 1);
}

#[test]
fn repl_continues_after_errors() {
    let input = "# comment\ninfo\neval \"2 + 2\"\nparse --term \"(\"\n\neval \"3 < 4\"\nquit\neval \"1 + 1\"\n";
    let r = run(&["repl"], input);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("|- 2 + 2 = 4"), "{}", r.out);
    assert!(r.out.contains("|- 3 < 4 <=> true"), "{}", r.out);
    assert!(!r.out.contains("1 + 1"));
    assert_eq!(r.err.lines().filter(|l| l.starts_with("error:")).count(), 1, "{}", r.err);

    let r = run(&["repl"], "eval \"5 - 7\"\n");
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.trim(), "|- 5 - 7 = 0");
}
