//! Randomized rule applications for the alpha and assumption checks.

use commonhol_core::kernel::thm_alpha_eq;
use commonhol_core::session::Session;
use commonhol_core::syntax::{self, false_tm};
use commonhol_core::term::{free_vars, mk_comb, var_inst, Term};
use commonhol_core::types::{bool_ty, mk_fun_type, mk_var_type};
use commonhol_core::{Result, Theorem};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::common::Gen;

type Inputs = fn(&mut Gen) -> Vec<Term>;
type Prep = fn(&Session, &[Term]) -> Result<Vec<Theorem>>;
type Apply = fn(&Session, &[Term], &[Theorem]) -> Result<Theorem>;

pub struct Rule {
    pub name: &'static str,
    inputs: Inputs,
    prep: Prep,
    apply: Apply,
}

impl Rule {
    fn run(&self, s: &Session, ts: &[Term]) -> Result<Theorem> {
        let ths = (self.prep)(s, ts)?;
        (self.apply)(s, ts, &ths)
    }
}

fn asm(s: &Session, t: &Term) -> Result<Theorem> {
    s.assume_rule(t)
}

fn eq(l: &Term, r: &Term) -> Result<Term> {
    syntax::mk_eq(l, r)
}

fn imp(s: &Session, p: &Term, q: &Term) -> Result<Term> {
    syntax::mk_imp(&s.theory(), p, q)
}

fn conj(s: &Session, p: &Term, q: &Term) -> Result<Term> {
    syntax::mk_conj(&s.theory(), p, q)
}

fn neg(s: &Session, p: &Term) -> Result<Term> {
    syntax::mk_not(&s.theory(), p)
}

fn exists(s: &Session, v: &Term, b: &Term) -> Result<Term> {
    syntax::mk_exists(&s.theory(), v, b)
}

fn falsity(s: &Session) -> Result<Term> {
    false_tm(&s.theory())
}

/// `|- p ==> p`, a closed-assumption theorem mentioning `p`.
fn taut(s: &Session, p: &Term) -> Result<Theorem> {
    s.disch_rule(p, &asm(s, p)?)
}

/// `A u {q} |- p` from `A |- p`.
fn with_asm(s: &Session, th: Theorem, q: &Term) -> Result<Theorem> {
    s.conjunct1_rule(&s.conj_rule(&th, &asm(s, q)?)?)
}

fn same_or_new(g: &mut Gen, t: &Term) -> Term {
    if g.chance(0.75) {
        t.clone()
    } else {
        g.bool_term()
    }
}

fn bools(g: &mut Gen, n: usize) -> Vec<Term> {
    let mut v: Vec<Term> = Vec::new();
    for _ in 0..n {
        let t = match v.choose(&mut g.rng) {
            Some(prev) if g.chance(0.15) => prev.clone(),
            _ => g.bool_term(),
        };
        v.push(t);
    }
    v
}

/// Two terms of one random type, the second sometimes the first.
fn pair_of_type(g: &mut Gen) -> (Term, Term) {
    let ty = g.ty(2);
    let a = g.term(&ty, 3);
    let b = if g.chance(0.2) { a.clone() } else { g.term(&ty, 3) };
    (a, b)
}

fn var_and_body(g: &mut Gen) -> (Term, Term) {
    let ty = g.small_ty();
    let v = g.free_var(ty);
    let b = g.body_with(&v);
    (v, b)
}

fn no_prep(_: &Session, _: &[Term]) -> Result<Vec<Theorem>> {
    Ok(Vec::new())
}

fn assume_all(s: &Session, ts: &[Term]) -> Result<Vec<Theorem>> {
    ts.iter().map(|t| asm(s, t)).collect()
}

macro_rules! rule {
    ($name:expr, $inputs:expr, $prep:expr, $apply:expr) => {
        Rule {
            name: $name,
            inputs: $inputs,
            prep: $prep,
            apply: $apply,
        }
    };
}

pub fn rules() -> Vec<Rule> {
    vec![
        rule!("assume_rule", |g| vec![g.bool_term()], no_prep, |s, t, _| asm(s, &t[0])),
        rule!(
            "refl_conv",
            |g| {
                let ty = g.ty(2);
                vec![g.term(&ty, 4)]
            },
            no_prep,
            |s, t, _| s.refl_conv(&t[0])
        ),
        rule!(
            "beta_conv",
            |g| {
                let a = g.small_ty();
                let b = g.ty(2);
                let f = g.abs(a.clone(), &b, 3);
                let x = g.term(&a, 3);
                vec![f, x]
            },
            no_prep,
            |s, t, _| s.beta_conv(&mk_comb(&t[0], &t[1])?)
        ),
        rule!(
            "mk_comb_rule",
            |g| {
                let a = g.small_ty();
                let b = g.small_ty();
                let fty = mk_fun_type(a.clone(), b);
                let f = g.term(&fty, 3);
                let f2 = g.term(&fty, 3);
                let x = g.term(&a, 3);
                let xty = if g.chance(0.9) { a } else { g.small_ty() };
                let y = g.term(&xty, 3);
                vec![f, f2, x, y]
            },
            |s, t| Ok(vec![asm(s, &eq(&t[0], &t[1])?)?, asm(s, &eq(&t[2], &t[3])?)?]),
            |s, _, th| s.mk_comb_rule(&th[0], &th[1])
        ),
        rule!(
            "mk_abs_rule",
            |g| {
                let (l, r) = pair_of_type(g);
                let ty = g.small_ty();
                vec![g.free_var(ty), l, r]
            },
            |s, t| Ok(vec![asm(s, &eq(&t[1], &t[2])?)?]),
            |s, t, th| s.mk_abs_rule(&t[0], &th[0])
        ),
        rule!(
            "eq_trans_rule",
            |g| {
                let (a, b) = pair_of_type(g);
                let b2 = if g.chance(0.8) { b.clone() } else { a.clone() };
                let c = g.term(b.ty(), 3);
                vec![a, b, b2, c]
            },
            |s, t| Ok(vec![asm(s, &eq(&t[0], &t[1])?)?, asm(s, &eq(&t[2], &t[3])?)?]),
            |s, _, th| s.eq_trans_rule(&th[0], &th[1])
        ),
        rule!(
            "eq_mp_rule",
            |g| {
                let v = bools(g, 2);
                let p2 = same_or_new(g, &v[0]);
                vec![v[0].clone(), v[1].clone(), p2]
            },
            |s, t| Ok(vec![asm(s, &eq(&t[0], &t[1])?)?, asm(s, &t[2])?]),
            |s, _, th| s.eq_mp_rule(&th[0], &th[1])
        ),
        rule!("deduct_antisym_rule", |g| bools(g, 2), assume_all, |s, _, th| {
            s.deduct_antisym_rule(&th[0], &th[1])
        }),
        rule!(
            "inst_type_rule",
            |g| {
                let ty = g.ty(2);
                let w = g.free_var(ty);
                vec![g.bool_term(), w]
            },
            |s, t| Ok(vec![asm(s, &t[0])?]),
            |s, t, th| {
                let a = mk_var_type("a");
                s.inst_type_rule(&[(a, t[1].ty().clone())], &th[0])
            }
        ),
        rule!(
            "var_inst_rule",
            |g| {
                let p = g.bool_term();
                let fv = free_vars(&p);
                let x = match fv.choose(&mut g.rng) {
                    Some(x) if g.chance(0.85) => x.clone(),
                    _ => {
                        let ty = g.small_ty();
                        g.free_var(ty)
                    }
                };
                let r = g.term(&x.ty().clone(), 3);
                vec![p, x, r]
            },
            |s, t| Ok(vec![asm(s, &t[0])?]),
            |s, t, th| s.var_inst_rule(&[(t[1].clone(), t[2].clone())], &th[0])
        ),
        rule!(
            "subst_rule",
            |g| {
                let p = g.bool_term();
                let fv = free_vars(&p);
                let l = match fv.choose(&mut g.rng) {
                    Some(x) => x.clone(),
                    None => g.bool_term(),
                };
                let r = g.term(&l.ty().clone(), 3);
                vec![l, r, p]
            },
            |s, t| Ok(vec![asm(s, &eq(&t[0], &t[1])?)?, asm(s, &t[2])?]),
            |s, _, th| s.subst_rule(&th[..1], &th[1])
        ),
        rule!(
            "disch_rule",
            |g| {
                let p = g.bool_term();
                let q = same_or_new(g, &p);
                vec![p, q]
            },
            |s, t| Ok(vec![asm(s, &t[1])?]),
            |s, t, th| s.disch_rule(&t[0], &th[0])
        ),
        rule!(
            "mp_rule",
            |g| {
                let v = bools(g, 2);
                let p2 = same_or_new(g, &v[0]);
                vec![v[0].clone(), v[1].clone(), p2]
            },
            |s, t| Ok(vec![asm(s, &imp(s, &t[0], &t[1])?)?, asm(s, &t[2])?]),
            |s, _, th| s.mp_rule(&th[0], &th[1])
        ),
        rule!(
            "gen_rule",
            |g| {
                let (v, p) = var_and_body(g);
                vec![v, p, g.bool_term()]
            },
            |s, t| Ok(vec![with_asm(s, taut(s, &t[1])?, &t[2])?]),
            |s, t, th| s.gen_rule(&t[0], &th[0])
        ),
        rule!(
            "spec_rule",
            |g| {
                let (v, p) = var_and_body(g);
                let ty = if g.chance(0.9) { v.ty().clone() } else { g.small_ty() };
                let x = g.term(&ty, 3);
                vec![v, p, x]
            },
            |s, t| Ok(vec![s.gen_rule(&t[0], &taut(s, &t[1])?)?]),
            |s, t, th| s.spec_rule(&t[2], &th[0])
        ),
        rule!("conj_rule", |g| bools(g, 2), assume_all, |s, _, th| s.conj_rule(&th[0], &th[1])),
        rule!(
            "conjunct1_rule",
            |g| bools(g, 2),
            |s, t| Ok(vec![asm(s, &conj(s, &t[0], &t[1])?)?]),
            |s, _, th| s.conjunct1_rule(&th[0])
        ),
        rule!(
            "conjunct2_rule",
            |g| bools(g, 2),
            |s, t| Ok(vec![asm(s, &conj(s, &t[0], &t[1])?)?]),
            |s, _, th| s.conjunct2_rule(&th[0])
        ),
        rule!(
            "disj1_rule",
            |g| bools(g, 2),
            |s, t| Ok(vec![asm(s, &t[0])?]),
            |s, t, th| s.disj1_rule(&th[0], &t[1])
        ),
        rule!(
            "disj2_rule",
            |g| bools(g, 2),
            |s, t| Ok(vec![asm(s, &t[1])?]),
            |s, t, th| s.disj2_rule(&t[0], &th[0])
        ),
        rule!(
            "disj_cases_rule",
            |g| {
                let v = bools(g, 3);
                let r2 = same_or_new(g, &v[2]);
                vec![v[0].clone(), v[1].clone(), v[2].clone(), r2]
            },
            prep_disj_cases,
            |s, _, th| s.disj_cases_rule(&th[0], &th[1], &th[2])
        ),
        rule!(
            "exists_rule",
            |g| {
                let (v, b) = var_and_body(g);
                let x = g.term(&v.ty().clone(), 3);
                vec![v, b, x]
            },
            |s, t| Ok(vec![asm(s, &var_inst(&[(t[0].clone(), t[2].clone())], &t[1])?)?]),
            |s, t, th| s.exists_rule(&exists(s, &t[0], &t[1])?, &t[2], &th[0])
        ),
        rule!(
            "choose_rule",
            |g| {
                let (v, b) = var_and_body(g);
                vec![v, b, g.bool_term()]
            },
            prep_choose,
            |s, t, th| s.choose_rule(&t[0], &th[0], &th[1])
        ),
        rule!(
            "select_rule",
            |g| {
                let (v, b) = var_and_body(g);
                vec![v, b]
            },
            |s, t| Ok(vec![asm(s, &exists(s, &t[0], &t[1])?)?]),
            |s, _, th| s.select_rule(&th[0])
        ),
        rule!(
            "contr_rule",
            |g| vec![g.bool_term()],
            |s, _| Ok(vec![asm(s, &falsity(s)?)?]),
            |s, t, th| s.contr_rule(&t[0], &th[0])
        ),
        rule!(
            "ccontr_rule",
            |g| {
                let p = g.bool_term();
                let p2 = same_or_new(g, &p);
                vec![p, p2]
            },
            prep_ccontr,
            |s, t, th| s.ccontr_rule(&t[0], &th[0])
        ),
        rule!(
            "not_intro_rule",
            |g| vec![g.bool_term()],
            |s, t| Ok(vec![asm(s, &imp(s, &t[0], &falsity(s)?)?)?]),
            |s, _, th| s.not_intro_rule(&th[0])
        ),
        rule!(
            "not_elim_rule",
            |g| vec![g.bool_term()],
            |s, t| Ok(vec![asm(s, &neg(s, &t[0])?)?]),
            |s, _, th| s.not_elim_rule(&th[0])
        ),
        rule!(
            "eq_imp_rule1",
            |g| bools(g, 2),
            |s, t| Ok(vec![asm(s, &eq(&t[0], &t[1])?)?]),
            |s, _, th| s.eq_imp_rule1(&th[0])
        ),
        rule!(
            "eq_imp_rule2",
            |g| bools(g, 2),
            |s, t| Ok(vec![asm(s, &eq(&t[0], &t[1])?)?]),
            |s, _, th| s.eq_imp_rule2(&th[0])
        ),
        rule!(
            "imp_antisym_rule",
            |g| {
                let v = bools(g, 2);
                let p2 = same_or_new(g, &v[0]);
                vec![v[0].clone(), v[1].clone(), p2]
            },
            |s, t| Ok(vec![asm(s, &imp(s, &t[0], &t[1])?)?, asm(s, &imp(s, &t[1], &t[2])?)?]),
            |s, _, th| s.imp_antisym_rule(&th[0], &th[1])
        ),
        rule!(
            "sym_rule",
            |g| {
                let (a, b) = pair_of_type(g);
                vec![a, b]
            },
            |s, t| Ok(vec![asm(s, &eq(&t[0], &t[1])?)?]),
            |s, _, th| s.sym_rule(&th[0])
        ),
        rule!(
            "prove_asm_rule",
            |g| {
                let p = g.bool_term();
                let p2 = same_or_new(g, &p);
                vec![p, g.bool_term(), p2]
            },
            prep_prove_asm,
            |s, _, th| s.prove_asm_rule(&th[0], &th[1])
        ),
        rule!(
            "undisch_rule",
            |g| bools(g, 2),
            |s, t| Ok(vec![asm(s, &imp(s, &t[0], &t[1])?)?]),
            |s, _, th| s.undisch_rule(&th[0])
        ),
        rule!("eqt_intro_rule", |g| vec![g.bool_term()], assume_all, |s, _, th| s.eqt_intro_rule(&th[0])),
        rule!("beta_rule", |g| vec![g.bool_term()], assume_all, |s, _, th| s.beta_rule(&th[0])),
        rule!(
            "alpha_rule",
            |g| {
                let p = g.bool_term();
                let p2 = if g.chance(0.9) { g.alpha_variant(&p) } else { g.bool_term() };
                vec![p, p2]
            },
            |s, t| Ok(vec![asm(s, &t[0])?]),
            |s, t, th| s.alpha_rule(&t[1], &th[0])
        ),
        rule!(
            "gen_all_rule",
            |g| vec![g.bool_term()],
            |s, t| Ok(vec![taut(s, &t[0])?]),
            |s, _, th| s.gen_all_rule(&th[0])
        ),
        rule!(
            "spec_all_rule",
            |g| {
                let (v, p) = var_and_body(g);
                vec![v, p]
            },
            |s, t| Ok(vec![s.gen_rule(&t[0], &taut(s, &t[1])?)?]),
            |s, _, th| s.spec_all_rule(&th[0])
        ),
    ]
}

fn prep_disj_cases(s: &Session, t: &[Term]) -> Result<Vec<Theorem>> {
    let d = syntax::mk_disj(&s.theory(), &t[0], &t[1])?;
    let th1 = s.mp_rule(&asm(s, &imp(s, &t[0], &t[2])?)?, &asm(s, &t[0])?)?;
    let th2 = s.mp_rule(&asm(s, &imp(s, &t[1], &t[3])?)?, &asm(s, &t[1])?)?;
    Ok(vec![asm(s, &d)?, th1, th2])
}

fn prep_choose(s: &Session, t: &[Term]) -> Result<Vec<Theorem>> {
    let ex = asm(s, &exists(s, &t[0], &t[1])?)?;
    let th = s.conjunct2_rule(&s.conj_rule(&asm(s, &t[1])?, &asm(s, &t[2])?)?)?;
    Ok(vec![ex, th])
}

fn prep_ccontr(s: &Session, t: &[Term]) -> Result<Vec<Theorem>> {
    let np = neg(s, &t[1])?;
    let th = s.mp_rule(&asm(s, &imp(s, &np, &falsity(s)?)?)?, &asm(s, &np)?)?;
    Ok(vec![th])
}

fn prep_prove_asm(s: &Session, t: &[Term]) -> Result<Vec<Theorem>> {
    Ok(vec![asm(s, &t[0])?, with_asm(s, asm(s, &t[1])?, &t[2])?])
}

pub struct Tally {
    pub cases: usize,
    pub succeeded: usize,
    pub mismatches: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally {
            cases: 0,
            succeeded: 0,
            mismatches: Vec::new(),
        }
    }
}

/// Apply `rule` to `n` random inputs and to alpha-variants of the same
/// inputs; both runs must agree.
pub fn alpha_parity(s: &Session, rule: &Rule, seed: u64, n: usize) -> Tally {
    let mut g = Gen::new(s, seed);
    let mut tally = Tally::new();
    for _ in 0..n {
        let ts = (rule.inputs)(&mut g);
        let vs: Vec<Term> = ts.iter().map(|t| g.alpha_variant(t)).collect();
        let r1 = rule.run(s, &ts);
        let r2 = rule.run(s, &vs);
        tally.cases += 1;
        match (&r1, &r2) {
            (Ok(a), Ok(b)) if thm_alpha_eq(a, b) => tally.succeeded += 1,
            (Err(_), Err(_)) => {}
            _ => tally.mismatches.push(format!(
                "{}: {} vs {}",
                rule.name,
                show(s, &r1),
                show(s, &r2)
            )),
        }
    }
    tally
}

fn show(s: &Session, r: &Result<Theorem>) -> String {
    match r {
        Ok(th) => s.print_thm(th),
        Err(e) => format!("failure ({})", e.message()),
    }
}

pub const ASSUMPTION_RULES: &[&str] = &[
    "disch_rule",
    "ccontr_rule",
    "choose_rule",
    "disj_cases_rule",
    "deduct_antisym_rule",
    "prove_asm_rule",
];

/// Add a fresh assumption to one input theorem of `rule`; success must not
/// change and the assumption must survive into the result.
pub fn irrelevant_assumption(s: &Session, rule: &Rule, seed: u64, n: usize) -> Tally {
    let mut g = Gen::new(s, seed);
    let mut tally = Tally::new();
    let mut attempts = 0;
    while tally.cases < n && attempts < 50 * n {
        attempts += 1;
        let ts = (rule.inputs)(&mut g);
        let ths = match (rule.prep)(s, &ts) {
            Ok(ths) if !ths.is_empty() => ths,
            _ => continue,
        };
        let h = g.fresh_var("h", bool_ty());
        let i = g.rng.gen_range(0..ths.len());
        let mut ths2 = ths.clone();
        ths2[i] = match s.add_asm_rule(&h, &ths[i]) {
            Ok(th) => th,
            Err(e) => {
                tally.mismatches.push(format!("{}: add_asm_rule failed: {}", rule.name, e.message()));
                continue;
            }
        };
        tally.cases += 1;
        let r1 = (rule.apply)(s, &ts, &ths);
        let r2 = (rule.apply)(s, &ts, &ths2);
        match (&r1, &r2) {
            (Ok(a), Ok(b)) => {
                let rest: Vec<&Term> = b.asms().iter().filter(|t| **t != h).collect();
                let same_rest = rest.len() == a.asms().len() && a.asms().iter().all(|t| rest.contains(&t));
                if b.asms().contains(&h) && b.concl() == a.concl() && same_rest {
                    tally.succeeded += 1;
                } else {
                    tally
                        .mismatches
                        .push(format!("{}: {} vs {}", rule.name, s.print_thm(a), s.print_thm(b)));
                }
            }
            (Err(_), Err(_)) => {}
            _ => tally
                .mismatches
                .push(format!("{}: {} vs {}", rule.name, show(s, &r1), show(s, &r2))),
        }
    }
    tally
}
