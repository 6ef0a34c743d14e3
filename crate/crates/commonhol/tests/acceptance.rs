//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero when any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;
#[path = "acceptance/congruence.rs"]
mod congruence;
#[path = "acceptance/fuzz.rs"]
mod fuzz;

use std::time::{Duration, Instant};

use commonhol::codec;
use commonhol::config::Config;
use commonhol::conformance;
use commonhol_core::kernel::{soundness_alarm, thm_alpha_eq};
use commonhol_core::num::dest_nat;
use commonhol_core::platform::{
    build_platform_theory, manifest_axioms, platform_session, BOOL_CASES_THM, EXCLUDED_MIDDLE_THM,
    PLATFORM_VERSION, TRUTH_THM,
};
use commonhol_core::session::Session;
use commonhol_core::syntax::{dest_eq, false_tm, true_tm};
use commonhol_core::trace::{export_saved, import};
use commonhol_core::{Term, Theorem};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::Gen;

const SEED: u64 = 0x5eed_c0de;

const AUDIT_LIMIT: Duration = Duration::from_secs(5);
const ALPHA_LIMIT: Duration = Duration::from_secs(60);
const NUMERAL_LIMIT: Duration = Duration::from_secs(60);
const REPLAY_LIMIT: Duration = Duration::from_secs(30);

const ALPHA_MIN_RULES: usize = 25;
const ALPHA_PAIRS: usize = 500;
const ALPHA_MIN_SUCCESSES: usize = 100;
const ASSUMPTION_CASES: usize = 200;
const CONGRUENCE_CASES: usize = 200;
const ROUND_TRIPS: usize = 1000;
const GRID_MAX: u128 = 100;
const RANDOM_PAIRS: usize = 200;
const RANDOM_BOUND: u128 = 1_000_000_000_000_000_000_000_000_000_000;
const EXP_RANDOM_MAX: u128 = 16;
const MIN_TRACE_STEPS: usize = 500;

type Verdict = Result<String, String>;

fn report(n: u32, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let verdict = f();
    let took = start.elapsed();
    let (ok, detail) = match verdict {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    let timing = match limit {
        Some(l) => format!("{:.2} s, limit {} s", took.as_secs_f64(), l.as_secs()),
        None => format!("{:.2} s", took.as_secs_f64()),
    };
    let ok = ok && limit.is_none_or(|l| took < l);
    println!("{} [{:>2}] {}: {} ({})", if ok { "PASS" } else { "FAIL" }, n, name, detail, timing);
    ok
}

fn first_errors(errs: &[String]) -> String {
    errs.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
}

fn platform_audit() -> Verdict {
    let (s, m) = platform_session().map_err(|e| e.message().to_string())?;
    let mut got: Vec<String> = s.theory().get_all_axioms().into_iter().map(|(l, _)| l).collect();
    got.sort();
    let mut want: Vec<String> = manifest_axioms().iter().map(|l| l.to_string()).collect();
    want.sort();
    let mut listed: Vec<String> = m
        .labels(commonhol_core::platform::StepKind::Axiom)
        .into_iter()
        .map(String::from)
        .collect();
    listed.sort();
    if got != want || listed != want {
        return Err(format!("axioms {:?}, manifest {:?}", got, listed));
    }
    let axioms: Vec<Theorem> = s.theory().get_all_axioms().into_iter().map(|(_, t)| t).collect();
    for label in [TRUTH_THM, EXCLUDED_MIDDLE_THM, BOOL_CASES_THM] {
        let th = s.get_theorem(label).map_err(|_| format!("{} missing", label))?;
        if !th.asms().is_empty() || axioms.iter().any(|a| thm_alpha_eq(a, &th)) {
            return Err(format!("{} is not a derivation: {}", label, s.print_thm(&th)));
        }
    }
    Ok(format!("{} axioms match the manifest; 3 core theorems derived", got.len()))
}

fn alpha_robustness() -> Verdict {
    let (s, _) = platform_session().map_err(|e| e.message().to_string())?;
    let rules = fuzz::rules();
    let mut errs = Vec::new();
    let mut ok = 0;
    let mut total = 0;
    let mut weakest = ("", usize::MAX);
    for (i, r) in rules.iter().enumerate() {
        let t = fuzz::alpha_parity(&s, r, SEED + i as u64, ALPHA_PAIRS);
        if std::env::var_os("ACCEPTANCE_VERBOSE").is_some() {
            eprintln!("  {} {}/{}", r.name, t.succeeded, t.cases);
        }
        if t.succeeded < weakest.1 {
            weakest = (r.name, t.succeeded);
        }
        ok += t.succeeded;
        total += t.cases;
        errs.extend(t.mismatches);
    }
    let detail = format!(
        "{} rules x {} pairs, {} both succeeded (fewest: {} {}), {} mismatches",
        rules.len(),
        ALPHA_PAIRS,
        ok,
        weakest.0,
        weakest.1,
        errs.len()
    );
    // Each rule must mostly see inputs it accepts, or parity is vacuous.
    if weakest.1 < ALPHA_MIN_SUCCESSES {
        errs.push(format!("{} succeeded only {} times", weakest.0, weakest.1));
    }
    if rules.len() < ALPHA_MIN_RULES || total != rules.len() * ALPHA_PAIRS || !errs.is_empty() {
        return Err(format!("{}: {}", detail, first_errors(&errs)));
    }
    Ok(detail)
}

fn assumption_insensitivity() -> Verdict {
    let (s, _) = platform_session().map_err(|e| e.message().to_string())?;
    let rules = fuzz::rules();
    let mut errs = Vec::new();
    let mut parts = Vec::new();
    for (i, name) in fuzz::ASSUMPTION_RULES.iter().enumerate() {
        let r = rules.iter().find(|r| r.name == *name).ok_or(format!("no rule {}", name))?;
        let t = fuzz::irrelevant_assumption(&s, r, SEED ^ (i as u64 + 1) << 32, ASSUMPTION_CASES);
        if t.cases != ASSUMPTION_CASES {
            errs.push(format!("{}: only {} cases", name, t.cases));
        }
        parts.push(format!("{} {}/{}", name, t.succeeded, t.cases));
        errs.extend(t.mismatches);
    }
    let detail = format!(
        "{} rules x {} cases ({} ok), {} failures",
        parts.len(),
        ASSUMPTION_CASES,
        parts.join(", "),
        errs.len()
    );
    if errs.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{}: {}", detail, first_errors(&errs)))
    }
}

// Reference semantics on unbounded naturals, independent of the library.
enum Want {
    Num(BigUint),
    Bool(bool),
    Fails,
}

fn oracle(op: &str, a: &BigUint, b: &BigUint) -> Want {
    let zero = BigUint::from(0u8);
    let one = BigUint::from(1u8);
    match op {
        "suc" => Want::Num(a + &one),
        "pre" => Want::Num(if *a == zero { zero } else { a - &one }),
        "+" => Want::Num(a + b),
        "-" => Want::Num(if a < b { zero } else { a - b }),
        "*" => Want::Num(a * b),
        "exp" => {
            let mut r = one;
            let mut k = zero.clone();
            while k < *b {
                r *= a;
                k += 1u8;
            }
            Want::Num(r)
        }
        "div" if *b == zero => Want::Fails,
        "mod" if *b == zero => Want::Fails,
        "div" => Want::Num(a / b),
        "mod" => Want::Num(a % b),
        "<" => Want::Bool(a < b),
        "<=" => Want::Bool(a <= b),
        ">" => Want::Bool(a > b),
        ">=" => Want::Bool(a >= b),
        "even" => Want::Bool(a % 2u8 == zero),
        _ => unreachable!(),
    }
}

const NUM_OPS: [&str; 13] = ["suc", "pre", "+", "-", "*", "exp", "div", "mod", "<", "<=", ">", ">=", "even"];

fn num_source(op: &str, a: &BigUint, b: &BigUint) -> String {
    match op {
        "suc" | "pre" | "even" => format!("{} {}", op, a),
        _ => format!("{} {} {}", a, op, b),
    }
}

fn num_conv(s: &Session, op: &str, t: &Term) -> commonhol_core::Result<Theorem> {
    match op {
        "suc" => s.suc_conv(t),
        "pre" => s.pre_conv(t),
        "+" => s.add_conv(t),
        "-" => s.sub_conv(t),
        "*" => s.mult_conv(t),
        "exp" => s.exp_conv(t),
        "div" => s.div_conv(t),
        "mod" => s.mod_conv(t),
        "<" => s.lt_conv(t),
        "<=" => s.le_conv(t),
        ">" => s.gt_conv(t),
        ">=" => s.ge_conv(t),
        "even" => s.even_conv(t),
        _ => unreachable!(),
    }
}

struct Truths {
    t: Term,
    f: Term,
}

fn num_case(s: &Session, tv: &Truths, op: &str, a: &BigUint, b: &BigUint) -> Result<(), String> {
    let src = num_source(op, a, b);
    let t = s.parse_term(&src).map_err(|e| format!("{}: {}", src, e.message()))?;
    let got = num_conv(s, op, &t);
    let (want, th) = match (oracle(op, a, b), got) {
        (Want::Fails, Err(_)) => return Ok(()),
        (Want::Fails, Ok(th)) => return Err(format!("{} should fail, got {}", src, s.print_thm(&th))),
        (_, Err(e)) => return Err(format!("{} failed: {}", src, e.message())),
        (w, Ok(th)) => (w, th),
    };
    let (l, r) = dest_eq(th.concl()).map_err(|_| format!("{}: not an equation", src))?;
    if !th.asms().is_empty() || l != t {
        return Err(format!("{}: unexpected theorem {}", src, s.print_thm(&th)));
    }
    let ok = match want {
        Want::Num(n) => dest_nat(&r).map(|m| m == n).unwrap_or(false),
        Want::Bool(p) => r == if p { tv.t.clone() } else { tv.f.clone() },
        Want::Fails => unreachable!(),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("{}: wrong result {}", src, s.print_thm(&th)))
    }
}

fn numeral_oracle() -> Verdict {
    let (s, _) = platform_session().map_err(|e| e.message().to_string())?;
    let tv = {
        let thy = s.theory();
        Truths {
            t: true_tm(&thy).map_err(|e| e.message().to_string())?,
            f: false_tm(&thy).map_err(|e| e.message().to_string())?,
        }
    };
    let mut errs = Vec::new();
    let mut cases = 0usize;
    for op in NUM_OPS {
        for a in 0..=GRID_MAX {
            for b in 0..=GRID_MAX {
                cases += 1;
                if let Err(e) = num_case(&s, &tv, op, &BigUint::from(a), &BigUint::from(b)) {
                    errs.push(e);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_PAIRS {
        let a: u128 = rng.gen_range(0..=RANDOM_BOUND);
        let b: u128 = match rng.gen_range(0..8) {
            0 => a,
            1 => 0,
            2 => rng.gen_range(0..=1000),
            _ => rng.gen_range(0..=RANDOM_BOUND),
        };
        for op in NUM_OPS {
            let b = if op == "exp" { b % (EXP_RANDOM_MAX + 1) } else { b };
            cases += 1;
            if let Err(e) = num_case(&s, &tv, op, &BigUint::from(a), &BigUint::from(b)) {
                errs.push(e);
            }
        }
    }
    let detail = format!("{} evaluations over 13 conversions, {} mismatches", cases, errs.len());
    if errs.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{}: {}", detail, first_errors(&errs)))
    }
}

fn conformance_suite() -> Verdict {
    let (s, _) = platform_session().map_err(|e| e.message().to_string())?;
    let checks = conformance::run(&s);
    let failed: Vec<String> = checks
        .iter()
        .filter_map(|c| c.outcome.as_ref().err().map(|m| format!("{}: {}", c.name, m)))
        .collect();
    if checks.len() != 7 || !failed.is_empty() {
        return Err(format!("{} checks, failures: {}", checks.len(), failed.join("; ")));
    }
    Ok(format!("{}/7 checks pass", checks.len()))
}

fn congruence_oracle() -> Verdict {
    let (s, _) = platform_session().map_err(|e| e.message().to_string())?;
    let rules = congruence::rules();
    let mut errs = Vec::new();
    let mut agreed = 0;
    let mut failed = 0;
    for (i, c) in rules.iter().enumerate() {
        let o = congruence::check(&s, c, SEED + 1000 + i as u64, CONGRUENCE_CASES);
        agreed += o.agreed;
        failed += o.both_failed;
        errs.extend(o.mismatches);
    }
    let detail = format!(
        "{} rules x {} cases, {} equal, {} both failed, {} mismatches",
        rules.len(),
        CONGRUENCE_CASES,
        agreed,
        failed,
        errs.len()
    );
    if errs.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{}: {}", detail, first_errors(&errs)))
    }
}

fn round_trip() -> Verdict {
    let (s, _) = platform_session().map_err(|e| e.message().to_string())?;
    let mut g = Gen::new(&s, SEED + 7);
    let mut errs = Vec::new();
    for _ in 0..ROUND_TRIPS {
        let ty = g.ty(2);
        let t = g.term(&ty, 4);
        let src = s.print_term(&t);
        match s.parse_term(&src) {
            Ok(back) if back == t => {}
            Ok(back) => errs.push(format!("{} reparsed as {}", src, s.print_term(&back))),
            Err(e) => errs.push(format!("{}: {}", src, e.message())),
        }
    }
    for _ in 0..ROUND_TRIPS {
        let ty = g.ty(4);
        let src = s.print_type(&ty);
        match s.parse_type(&src) {
            Ok(back) if back == ty => {}
            Ok(back) => errs.push(format!("{} reparsed as {}", src, s.print_type(&back))),
            Err(e) => errs.push(format!("{}: {}", src, e.message())),
        }
    }
    let detail = format!("{} terms and {} types, {} mismatches", ROUND_TRIPS, ROUND_TRIPS, errs.len());
    if errs.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{}: {}", detail, first_errors(&errs)))
    }
}

fn trace_replay() -> Verdict {
    let msg = |e: commonhol_core::Failure| e.message().to_string();
    let s = Session::new();
    s.record_mode(true);
    build_platform_theory(&s).map_err(msg)?;
    let steps = s.recorder().steps().len();
    if steps < MIN_TRACE_STEPS {
        return Err(format!("only {} steps recorded", steps));
    }
    let cfg = Config::default();
    let tr = export_saved(&s, &cfg.system_name, &cfg.system_version).map_err(msg)?;
    let text = codec::encode(&tr);
    let back = codec::decode(&text).map_err(|e| e.to_string())?;
    if back != tr || codec::encode(&back) != text {
        return Err("codec round trip is not exact".into());
    }
    let fresh = Session::new();
    let got = import(&fresh, &back).map_err(msg)?;
    for (label, _) in &tr.exports {
        let orig = s.get_theorem(label).map_err(msg)?;
        match got.get(label) {
            Some(th) if thm_alpha_eq(&orig, th) => {}
            _ => return Err(format!("{} differs after replay", label)),
        }
    }
    Ok(format!(
        "{} steps, {} exports replayed, {} bytes round-tripped",
        tr.steps.len(),
        tr.exports.len(),
        text.len()
    ))
}

fn platform_version() -> Verdict {
    let cfg = Config::default();
    let tr = commonhol_core::trace::Trace::new("x", "y");
    if PLATFORM_VERSION == "0.5" && cfg.platform_version == "0.5" && tr.version == "0.5" {
        Ok("platform_version 0.5".into())
    } else {
        Err(format!("got {} / {} / {}", PLATFORM_VERSION, cfg.platform_version, tr.version))
    }
}

fn no_false_theorem() -> Verdict {
    if soundness_alarm() {
        Err("an assumption-free |- false was produced".into())
    } else {
        Ok("no assumption-free |- false produced during the run".into())
    }
}

fn main() {
    let results = [
        report(1, "platform build audit", Some(AUDIT_LIMIT), platform_audit),
        report(2, "alpha-robustness", Some(ALPHA_LIMIT), alpha_robustness),
        report(3, "assumption-insensitivity", None, assumption_insensitivity),
        report(4, "numeral oracle", Some(NUMERAL_LIMIT), numeral_oracle),
        report(5, "conformance suite", None, conformance_suite),
        report(6, "congruence vs primitives", None, congruence_oracle),
        report(7, "parse/print round trip", None, round_trip),
        report(8, "trace replay", Some(REPLAY_LIMIT), trace_replay),
        report(10, "platform version", None, platform_version),
        report(9, "soundness smoke", None, no_false_theorem),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
