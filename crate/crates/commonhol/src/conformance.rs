//! Behavioral checks every conforming build must pass.

use commonhol_core::session::Session;
use commonhol_core::support::funpow;
use commonhol_core::syntax::dest_imp;
use commonhol_core::term::{mk_var, term_free_in, variant};
use commonhol_core::types::{bool_ty, mk_fun_type, mk_var_type};
use commonhol_core::{Failure, Term};

pub struct Check {
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

type CheckFn = fn(&Session) -> Result<(), String>;

pub const CHECKS: &[(&str, CheckFn)] = &[
    ("disch_absent_assumption", disch_absent),
    ("inst_type_domain_guard", inst_type_guard),
    ("funpow_negative_guard", funpow_guard),
    ("dest_imp_rejects_negation", dest_imp_negation),
    ("mk_const_instance_check", mk_const_check),
    ("term_free_in_modulo_alpha", term_free_in_alpha),
    ("variant_avoid_guard", variant_guard),
];

/// Run every check against a session holding the standard theory.
pub fn run(s: &Session) -> Vec<Check> {
    CHECKS
        .iter()
        .map(|(name, f)| Check {
            name,
            outcome: f(s),
        })
        .collect()
}

fn tm(s: &Session, src: &str) -> Result<Term, String> {
    s.parse_term(src).map_err(|e| e.message().to_string())
}

fn expect_failure<T>(r: commonhol_core::Result<T>, origin: &str) -> Result<(), String> {
    match r {
        Ok(_) => Err(format!("{} succeeded", origin)),
        Err(Failure::Normal { origin: o, .. }) if o == origin => Ok(()),
        Err(e) => Err(format!("wrong failure: {:?}", e)),
    }
}

fn disch_absent(s: &Session) -> Result<(), String> {
    let th = s.assume_rule(&tm(s, "(q:bool)")?).map_err(|e| e.message().to_string())?;
    let d = s
        .disch_rule(&tm(s, "(p:bool)")?, &th)
        .map_err(|e| format!("disch failed: {}", e.message()))?;
    if d.concl() != &tm(s, "p ==> q")? || d.asms() != th.asms() {
        return Err(format!("unexpected result {}", s.print_thm(&d)));
    }
    Ok(())
}

fn inst_type_guard(s: &Session) -> Result<(), String> {
    let th = s.truth().map_err(|e| e.message().to_string())?;
    expect_failure(
        s.inst_type_rule(&[(bool_ty(), mk_var_type("a"))], &th),
        "inst_type_rule",
    )
}

fn funpow_guard(_: &Session) -> Result<(), String> {
    expect_failure(funpow(-1, |x: u32| x + 1, 0), "funpow")?;
    match funpow(0, |x: u32| x + 1, 7) {
        Ok(7) => Ok(()),
        other => Err(format!("funpow 0 gave {:?}", other.ok())),
    }
}

fn dest_imp_negation(s: &Session) -> Result<(), String> {
    expect_failure(dest_imp(&tm(s, "~p")?), "dest_imp")?;
    dest_imp(&tm(s, "p ==> q")?).map_err(|e| e.message().to_string())?;
    Ok(())
}

fn mk_const_check(s: &Session) -> Result<(), String> {
    let thy = s.theory();
    let bb = mk_fun_type(bool_ty(), bool_ty());
    expect_failure(thy.mk_const("=", &bb), "mk_const")?;
    let eq_ty = mk_fun_type(bool_ty(), bb);
    thy.mk_const("=", &eq_ty).map_err(|e| e.message().to_string())?;
    Ok(())
}

fn term_free_in_alpha(s: &Session) -> Result<(), String> {
    let sub = tm(s, "\\x:bool. x /\\ p")?;
    let whole = tm(s, "f (\\y:bool. y /\\ p) (q:bool)")?;
    if !term_free_in(&sub, &whole) {
        return Err("alpha-variant subterm not detected".into());
    }
    let x = mk_var("x", bool_ty());
    if term_free_in(&x, &tm(s, "\\x:bool. x")?) {
        return Err("bound occurrence counted as free".into());
    }
    Ok(())
}

fn variant_guard(s: &Session) -> Result<(), String> {
    let x = mk_var("x", bool_ty());
    expect_failure(variant(&[tm(s, "true")?], &x), "variant")?;
    let v = variant(std::slice::from_ref(&x), &x).map_err(|e| e.message().to_string())?;
    if v == x {
        return Err("variant did not rename".into());
    }
    Ok(())
}
