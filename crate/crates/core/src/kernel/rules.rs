//! Primitive inference rules.
//!
//! Every assumption removal works modulo alpha and succeeds when the
//! assumption is absent. Rules that build connectives take the theory so
//! that they refuse to run before the connective is defined.

use alloc::vec::Vec;

use super::{asm_normalise, asm_remove, asm_single, asm_union, Theorem, Theory};
use crate::error::{fail, Result, ResultExt};
use crate::syntax::{self, dest_binop_named, dest_binder_named};
use crate::term::{
    alpha_eq, check_term_instn, inst_types, list_free_vars, var_free_in, vsubst, Term, TermKind,
};
use crate::types::{check_type_instn, Type};

fn check_bool(origin: &str, t: &Term) -> Result<()> {
    if t.ty().is_bool() {
        Ok(())
    } else {
        fail(origin, "term is not boolean")
    }
}

fn dest_eq_parts<'a>(origin: &str, t: &'a Term) -> Result<(&'a Term, &'a Term)> {
    match dest_binop_named(syntax::EQ, t) {
        Some(p) => Ok(p),
        None => fail(origin, "conclusion is not an equation"),
    }
}

// The equality constant of an equation.
fn eq_op_of(t: &Term) -> &Term {
    t.as_comb().and_then(|(f, _)| f.as_comb()).map(|(e, _)| e).expect("equation")
}

fn free_in_asms(v: &Term, asms: &[Term]) -> bool {
    asms.iter().any(|a| var_free_in(v, a))
}

/// `{p} |- p`
pub fn assume_rule(p: &Term) -> Result<Theorem> {
    check_bool("assume_rule", p)?;
    Ok(Theorem::make(asm_single(p), p.clone()))
}

/// `|- t = t`
pub fn refl_conv(t: &Term) -> Result<Theorem> {
    Ok(Theorem::make(Vec::new(), syntax::mk_eq(t, t)?))
}

/// `|- (\x. b) a = b[a/x]`
pub fn beta_conv(t: &Term) -> Result<Theorem> {
    let (f, a) = match t.as_comb() {
        Some(p) => p,
        None => return fail("beta_conv", "not a beta-redex"),
    };
    let (x, b) = match f.as_abs() {
        Some(p) => p,
        None => return fail("beta_conv", "not a beta-redex"),
    };
    let r = vsubst(&[(x.clone(), a.clone())], b);
    Ok(Theorem::make(Vec::new(), syntax::mk_eq(t, &r)?))
}

/// `|- (\x. f x) = f` when `x` is not free in `f`.
pub fn eta_conv(t: &Term) -> Result<Theorem> {
    let (x, body) = match t.as_abs() {
        Some(p) => p,
        None => return fail("eta_conv", "not an abstraction"),
    };
    let (f, y) = match body.as_comb() {
        Some(p) => p,
        None => return fail("eta_conv", "body is not an application"),
    };
    if y != x || var_free_in(x, f) {
        return fail("eta_conv", "not an eta-redex");
    }
    Ok(Theorem::make(Vec::new(), syntax::mk_eq(t, f)?))
}

/// From `A1 |- f = g` and `A2 |- a = b` derive `A1 u A2 |- f a = g b`.
pub fn mk_comb_rule(th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "mk_comb_rule";
    let (f, g) = dest_eq_parts(ORIGIN, th1.concl())?;
    let (a, b) = dest_eq_parts(ORIGIN, th2.concl())?;
    match f.ty().dest_fun() {
        Some((d, _)) if d == a.ty() => {}
        _ => return fail(ORIGIN, "types do not agree"),
    }
    let l = Term::comb_unchecked(f.clone(), a.clone());
    let r = Term::comb_unchecked(g.clone(), b.clone());
    let concl = if l.ty() == a.ty() {
        syntax::mk_eq_with(eq_op_of(th2.concl()), &l, &r)
    } else {
        syntax::mk_eq(&l, &r)?
    };
    Ok(Theorem::make(asm_union(th1.asms(), th2.asms()), concl))
}

/// From `A |- a = b` derive `A |- (\v. a) = (\v. b)`, `v` not free in `A`.
pub fn mk_abs_rule(v: &Term, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "mk_abs_rule";
    if !v.is_var() {
        return fail(ORIGIN, "not a variable");
    }
    let (a, b) = dest_eq_parts(ORIGIN, th.concl())?;
    if free_in_asms(v, th.asms()) {
        return fail(ORIGIN, "variable is free in the assumptions");
    }
    let l = Term::abs_unchecked(v.clone(), a.clone());
    let r = Term::abs_unchecked(v.clone(), b.clone());
    Ok(Theorem::make(th.asms().to_vec(), syntax::mk_eq(&l, &r)?))
}

/// From `A1 |- a = b` and `A2 |- b' = c` with `b` alpha-equal to `b'`
/// derive `A1 u A2 |- a = c`.
pub fn eq_trans_rule(th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "eq_trans_rule";
    let (a, b) = dest_eq_parts(ORIGIN, th1.concl())?;
    let (b2, c) = dest_eq_parts(ORIGIN, th2.concl())?;
    if !alpha_eq(b, b2) {
        return fail(ORIGIN, "middle terms are not alpha-equivalent");
    }
    let concl = syntax::mk_eq_with(eq_op_of(th1.concl()), a, c);
    Ok(Theorem::make(asm_union(th1.asms(), th2.asms()), concl))
}

/// From `A1 |- p <=> q` and `A2 |- p'` derive `A1 u A2 |- q`.
pub fn eq_mp_rule(th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "eq_mp_rule";
    let (p, q) = dest_eq_parts(ORIGIN, th1.concl())?;
    if !p.ty().is_bool() {
        return fail(ORIGIN, "not a boolean equation");
    }
    if !alpha_eq(p, th2.concl()) {
        return fail(ORIGIN, "left side does not match the second theorem");
    }
    Ok(Theorem::make(asm_union(th1.asms(), th2.asms()), q.clone()))
}

/// From `A1 |- p` and `A2 |- q` derive `(A1 - {q}) u (A2 - {p}) |- p <=> q`.
pub fn deduct_antisym_rule(th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    let a1 = asm_remove(th1.asms(), th2.concl());
    let a2 = asm_remove(th2.asms(), th1.concl());
    Ok(Theorem::make(asm_union(&a1, &a2), syntax::mk_eq(th1.concl(), th2.concl())?))
}

/// Instantiate type variables throughout assumptions and conclusion.
pub fn inst_type_rule(theta: &[(Type, Type)], th: &Theorem) -> Result<Theorem> {
    check_type_instn("inst_type_rule", theta)?;
    if theta.is_empty() {
        return Ok(th.clone());
    }
    let asms = th.asms().iter().map(|a| inst_types(theta, a)).collect();
    Ok(Theorem::make(asm_normalise(asms), inst_types(theta, th.concl())))
}

/// Instantiate free variables throughout assumptions and conclusion.
pub fn var_inst_rule(theta: &[(Term, Term)], th: &Theorem) -> Result<Theorem> {
    check_term_instn("var_inst_rule", theta)?;
    if theta.is_empty() {
        return Ok(th.clone());
    }
    let asms = th.asms().iter().map(|a| vsubst(theta, a)).collect();
    Ok(Theorem::make(asm_normalise(asms), vsubst(theta, th.concl())))
}

/// From `Ai |- li = ri` and `A |- p` derive `A u Ai |- p[ri/li]`, replacing
/// free occurrences of each `li` modulo alpha.
pub fn subst_rule(eqs: &[Theorem], th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "subst_rule";
    let mut theta = Vec::with_capacity(eqs.len());
    let mut asms = th.asms().to_vec();
    for e in eqs {
        let (l, r) = dest_eq_parts(ORIGIN, e.concl())?;
        theta.push((l.clone(), r.clone()));
        asms = asm_union(&asms, e.asms());
    }
    let concl = crate::term::subst(&theta, th.concl()).origin(ORIGIN)?;
    Ok(Theorem::make(asms, concl))
}

/// From `A |- q` derive `A - {p} |- p ==> q`.
pub fn disch_rule(thy: &Theory, p: &Term, th: &Theorem) -> Result<Theorem> {
    check_bool("disch_rule", p)?;
    let concl = syntax::mk_imp(thy, p, th.concl()).origin("disch_rule")?;
    Ok(Theorem::make(asm_remove(th.asms(), p), concl))
}

/// From `A1 |- p ==> q` and `A2 |- p'` derive `A1 u A2 |- q`.
pub fn mp_rule(th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "mp_rule";
    let (p, q) = match dest_binop_named(syntax::IMP, th1.concl()) {
        Some(x) => x,
        None => return fail(ORIGIN, "first theorem is not an implication"),
    };
    if !alpha_eq(p, th2.concl()) {
        return fail(ORIGIN, "antecedent does not match the second theorem");
    }
    Ok(Theorem::make(asm_union(th1.asms(), th2.asms()), q.clone()))
}

/// From `A |- p` derive `A |- !v. p`, `v` not free in `A`.
pub fn gen_rule(thy: &Theory, v: &Term, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "gen_rule";
    if !v.is_var() {
        return fail(ORIGIN, "not a variable");
    }
    if free_in_asms(v, th.asms()) {
        return fail(ORIGIN, "variable is free in the assumptions");
    }
    let concl = syntax::mk_forall(thy, v, th.concl()).origin(ORIGIN)?;
    Ok(Theorem::make(th.asms().to_vec(), concl))
}

/// From `A |- !x. p` derive `A |- p[t/x]`.
pub fn spec_rule(t: &Term, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "spec_rule";
    let (x, p) = match dest_binder_named(syntax::FORALL, th.concl()) {
        Some(b) => b,
        None => return fail(ORIGIN, "not a universal quantification"),
    };
    if x.ty() != t.ty() {
        return fail(ORIGIN, "term has the wrong type");
    }
    Ok(Theorem::make(th.asms().to_vec(), vsubst(&[(x.clone(), t.clone())], p)))
}

/// From `A1 |- p` and `A2 |- q` derive `A1 u A2 |- p /\ q`.
pub fn conj_rule(thy: &Theory, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    let concl = syntax::mk_conj(thy, th1.concl(), th2.concl()).origin("conj_rule")?;
    Ok(Theorem::make(asm_union(th1.asms(), th2.asms()), concl))
}

fn conj_parts<'a>(origin: &str, th: &'a Theorem) -> Result<(&'a Term, &'a Term)> {
    match dest_binop_named(syntax::CONJ, th.concl()) {
        Some(p) => Ok(p),
        None => fail(origin, "not a conjunction"),
    }
}

pub fn conjunct1_rule(th: &Theorem) -> Result<Theorem> {
    let (p, _) = conj_parts("conjunct1_rule", th)?;
    Ok(Theorem::make(th.asms().to_vec(), p.clone()))
}

pub fn conjunct2_rule(th: &Theorem) -> Result<Theorem> {
    let (_, q) = conj_parts("conjunct2_rule", th)?;
    Ok(Theorem::make(th.asms().to_vec(), q.clone()))
}

/// From `A |- p` derive `A |- p \/ q`.
pub fn disj1_rule(thy: &Theory, th: &Theorem, q: &Term) -> Result<Theorem> {
    let concl = syntax::mk_disj(thy, th.concl(), q).origin("disj1_rule")?;
    Ok(Theorem::make(th.asms().to_vec(), concl))
}

/// From `A |- q` derive `A |- p \/ q`.
pub fn disj2_rule(thy: &Theory, p: &Term, th: &Theorem) -> Result<Theorem> {
    let concl = syntax::mk_disj(thy, p, th.concl()).origin("disj2_rule")?;
    Ok(Theorem::make(th.asms().to_vec(), concl))
}

/// From `A |- p \/ q`, `A1 |- r` and `A2 |- r'` derive
/// `A u (A1 - {p}) u (A2 - {q}) |- r`.
pub fn disj_cases_rule(th: &Theorem, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "disj_cases_rule";
    let (p, q) = match dest_binop_named(syntax::DISJ, th.concl()) {
        Some(x) => x,
        None => return fail(ORIGIN, "first theorem is not a disjunction"),
    };
    if !alpha_eq(th1.concl(), th2.concl()) {
        return fail(ORIGIN, "case conclusions differ");
    }
    let a1 = asm_remove(th1.asms(), p);
    let a2 = asm_remove(th2.asms(), q);
    let asms = asm_union(th.asms(), &asm_union(&a1, &a2));
    Ok(Theorem::make(asms, th1.concl().clone()))
}

/// From `A |- p[t/x]` derive `A |- ?x. p`.
pub fn exists_rule(ex: &Term, t: &Term, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "exists_rule";
    let (x, p) = match dest_binder_named(syntax::EXISTS, ex) {
        Some(b) => b,
        None => return fail(ORIGIN, "not an existential"),
    };
    if x.ty() != t.ty() {
        return fail(ORIGIN, "witness has the wrong type");
    }
    let inst = vsubst(&[(x.clone(), t.clone())], p);
    if !alpha_eq(&inst, th.concl()) {
        return fail(ORIGIN, "theorem does not match the witness instance");
    }
    Ok(Theorem::make(th.asms().to_vec(), ex.clone()))
}

/// From `A1 |- ?x. p` and `A2 |- q` derive `A1 u (A2 - {p[v/x]}) |- q`,
/// where `v` is not free in `?x. p`, `q` or the remaining `A2`.
pub fn choose_rule(v: &Term, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "choose_rule";
    if !v.is_var() {
        return fail(ORIGIN, "not a variable");
    }
    let (x, p) = match dest_binder_named(syntax::EXISTS, th1.concl()) {
        Some(b) => b,
        None => return fail(ORIGIN, "first theorem is not an existential"),
    };
    if x.ty() != v.ty() {
        return fail(ORIGIN, "variable has the wrong type");
    }
    let pv = vsubst(&[(x.clone(), v.clone())], p);
    let a2 = asm_remove(th2.asms(), &pv);
    if var_free_in(v, th1.concl()) || var_free_in(v, th2.concl()) || free_in_asms(v, &a2) {
        return fail(ORIGIN, "variable occurs free where it must not");
    }
    Ok(Theorem::make(asm_union(th1.asms(), &a2), th2.concl().clone()))
}

/// From `A |- P t` derive `A |- P (@P)`.
pub fn select_rule(thy: &Theory, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "select_rule";
    let (pred, t) = match th.concl().kind() {
        TermKind::Comb(p, t) => (p, t),
        _ => return fail(ORIGIN, "conclusion is not an application"),
    };
    let sel_ty = crate::types::mk_fun_type(pred.ty().clone(), t.ty().clone());
    let sel = thy.mk_const(syntax::SELECT, &sel_ty).origin(ORIGIN)?;
    let chosen = Term::comb_unchecked(sel, pred.clone());
    Ok(Theorem::make(th.asms().to_vec(), Term::comb_unchecked(pred.clone(), chosen)))
}

fn check_false(origin: &str, th: &Theorem) -> Result<()> {
    if th.concl().is_const_named(syntax::FALSE) {
        Ok(())
    } else {
        fail(origin, "conclusion is not false")
    }
}

/// From `A |- false` derive `A |- p`.
pub fn contr_rule(p: &Term, th: &Theorem) -> Result<Theorem> {
    check_bool("contr_rule", p)?;
    check_false("contr_rule", th)?;
    Ok(Theorem::make(th.asms().to_vec(), p.clone()))
}

/// From `A |- false` derive `A - {~p} |- p`.
pub fn ccontr_rule(thy: &Theory, p: &Term, th: &Theorem) -> Result<Theorem> {
    check_bool("ccontr_rule", p)?;
    check_false("ccontr_rule", th)?;
    let np = syntax::mk_not(thy, p).origin("ccontr_rule")?;
    Ok(Theorem::make(asm_remove(th.asms(), &np), p.clone()))
}

/// From `A |- p ==> false` derive `A |- ~p`.
pub fn not_intro_rule(thy: &Theory, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "not_intro_rule";
    let (p, f) = match dest_binop_named(syntax::IMP, th.concl()) {
        Some(x) => x,
        None => return fail(ORIGIN, "not an implication"),
    };
    if !f.is_const_named(syntax::FALSE) {
        return fail(ORIGIN, "consequent is not false");
    }
    let concl = syntax::mk_not(thy, p).origin(ORIGIN)?;
    Ok(Theorem::make(th.asms().to_vec(), concl))
}

/// From `A |- ~p` derive `A |- p ==> false`.
pub fn not_elim_rule(thy: &Theory, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "not_elim_rule";
    let p = syntax::dest_not(th.concl()).origin(ORIGIN)?;
    let f = syntax::false_tm(thy).origin(ORIGIN)?;
    let concl = syntax::mk_imp(thy, &p, &f).origin(ORIGIN)?;
    Ok(Theorem::make(th.asms().to_vec(), concl))
}

fn iff_parts<'a>(origin: &str, th: &'a Theorem) -> Result<(&'a Term, &'a Term)> {
    let (p, q) = dest_eq_parts(origin, th.concl())?;
    if !p.ty().is_bool() {
        return fail(origin, "not a boolean equation");
    }
    Ok((p, q))
}

/// From `A |- p <=> q` derive `A |- p ==> q`.
pub fn eq_imp_rule1(thy: &Theory, th: &Theorem) -> Result<Theorem> {
    let (p, q) = iff_parts("eq_imp_rule1", th)?;
    let concl = syntax::mk_imp(thy, p, q).origin("eq_imp_rule1")?;
    Ok(Theorem::make(th.asms().to_vec(), concl))
}

/// From `A |- p <=> q` derive `A |- q ==> p`.
pub fn eq_imp_rule2(thy: &Theory, th: &Theorem) -> Result<Theorem> {
    let (p, q) = iff_parts("eq_imp_rule2", th)?;
    let concl = syntax::mk_imp(thy, q, p).origin("eq_imp_rule2")?;
    Ok(Theorem::make(th.asms().to_vec(), concl))
}

/// From `A1 |- p ==> q` and `A2 |- q' ==> p'` derive `A1 u A2 |- p <=> q`.
pub fn imp_antisym_rule(th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "imp_antisym_rule";
    let (p, q) = match dest_binop_named(syntax::IMP, th1.concl()) {
        Some(x) => x,
        None => return fail(ORIGIN, "first theorem is not an implication"),
    };
    let (q2, p2) = match dest_binop_named(syntax::IMP, th2.concl()) {
        Some(x) => x,
        None => return fail(ORIGIN, "second theorem is not an implication"),
    };
    if !alpha_eq(p, p2) || !alpha_eq(q, q2) {
        return fail(ORIGIN, "implications do not match");
    }
    Ok(Theorem::make(asm_union(th1.asms(), th2.asms()), syntax::mk_eq(p, q)?))
}

/// Free variables of a theorem's assumptions and conclusion.
pub fn thm_free_vars(th: &Theorem) -> Vec<Term> {
    let mut all = th.asms().to_vec();
    all.push(th.concl().clone());
    list_free_vars(&all)
}
