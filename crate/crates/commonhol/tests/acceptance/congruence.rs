//! Congruence rules against their derivation from `mk_comb_rule`,
//! `mk_abs_rule` and `refl_conv`.

use commonhol_core::kernel::thm_alpha_eq;
use commonhol_core::session::Session;
use commonhol_core::syntax::eq_const;
use commonhol_core::term::{free_vars, mk_comb, Term};
use commonhol_core::types::{bool_ty, mk_fun_type, Type};
use commonhol_core::{Result, Theorem};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::common::Gen;

/// Inputs shared by every rule: a binary operator, two equations of its
/// argument types, an equation between functions, terms of the argument
/// types and a variable.
struct Case {
    op: Term,
    fth: Theorem,
    th1: Theorem,
    th2: Theorem,
    a: Term,
    b: Term,
    v: Term,
}

type Run = fn(&Session, &Case) -> Result<Theorem>;

/// Operator each family builds, given the argument types.
#[derive(Clone, Copy)]
enum Op {
    Any,
    Bool,
    Eq,
    Named(&'static str),
    Pair,
    Binder,
}

pub struct Cong {
    pub name: &'static str,
    op: Op,
    rule: Run,
    oracle: Run,
}

fn refl(s: &Session, t: &Term) -> Result<Theorem> {
    s.refl_conv(t)
}

fn bin(s: &Session, op: &Term, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    s.mk_comb_rule(&s.mk_comb_rule(&refl(s, op)?, th1)?, th2)
}

fn lhs_of(th: &Theorem) -> Term {
    commonhol_core::syntax::lhs(th.concl()).unwrap()
}

fn neg_op(s: &Session) -> Result<Term> {
    s.theory().mk_const("~", &mk_fun_type(bool_ty(), bool_ty()))
}

fn binder(s: &Session, c: &Case, name: &str) -> Result<Theorem> {
    let ran = lhs_of(&c.th1).ty().clone();
    let dom = c.v.ty().clone();
    let res = if name == "@" { dom.clone() } else { bool_ty() };
    let k = s.theory().mk_const(name, &mk_fun_type(mk_fun_type(dom, ran), res))?;
    s.mk_comb_rule(&refl(s, &k)?, &s.mk_abs_rule(&c.v, &c.th1)?)
}

macro_rules! cong {
    ($name:expr, $op:expr, $rule:expr, $oracle:expr) => {
        Cong {
            name: $name,
            op: $op,
            rule: $rule,
            oracle: $oracle,
        }
    };
}

pub fn rules() -> Vec<Cong> {
    use Op::*;
    vec![
        cong!("mk_bin_rule", Any, |s, c| s.mk_bin_rule(&c.op, &c.th1, &c.th2), |s, c| bin(s, &c.op, &c.th1, &c.th2)),
        cong!(
            "mk_bin1_rule",
            Any,
            |s, c| s.mk_bin1_rule(&c.op, &c.th1, &c.b),
            |s, c| bin(s, &c.op, &c.th1, &refl(s, &c.b)?)
        ),
        cong!(
            "mk_bin2_rule",
            Any,
            |s, c| s.mk_bin2_rule(&c.op, &c.a, &c.th2),
            |s, c| bin(s, &c.op, &refl(s, &c.a)?, &c.th2)
        ),
        cong!(
            "mk_comb1_rule",
            Any,
            |s, c| s.mk_comb1_rule(&c.fth, &c.a),
            |s, c| s.mk_comb_rule(&c.fth, &refl(s, &c.a)?)
        ),
        cong!(
            "mk_comb2_rule",
            Any,
            |s, c| s.mk_comb2_rule(&c.op, &c.th1),
            |s, c| s.mk_comb_rule(&refl(s, &c.op)?, &c.th1)
        ),
        cong!("mk_eq_rule", Eq, |s, c| s.mk_eq_rule(&c.th1, &c.th2), |s, c| bin(s, &c.op, &c.th1, &c.th2)),
        cong!(
            "mk_eq1_rule",
            Eq,
            |s, c| s.mk_eq1_rule(&c.th1, &c.b),
            |s, c| bin(s, &c.op, &c.th1, &refl(s, &c.b)?)
        ),
        cong!(
            "mk_eq2_rule",
            Eq,
            |s, c| s.mk_eq2_rule(&c.a, &c.th2),
            |s, c| bin(s, &c.op, &refl(s, &c.a)?, &c.th2)
        ),
        cong!("mk_conj_rule", Named("/\\"), |s, c| s.mk_conj_rule(&c.th1, &c.th2), |s, c| bin(s, &c.op, &c.th1, &c.th2)),
        cong!(
            "mk_conj1_rule",
            Named("/\\"),
            |s, c| s.mk_conj1_rule(&c.th1, &c.b),
            |s, c| bin(s, &c.op, &c.th1, &refl(s, &c.b)?)
        ),
        cong!(
            "mk_conj2_rule",
            Named("/\\"),
            |s, c| s.mk_conj2_rule(&c.a, &c.th2),
            |s, c| bin(s, &c.op, &refl(s, &c.a)?, &c.th2)
        ),
        cong!("mk_disj_rule", Named("\\/"), |s, c| s.mk_disj_rule(&c.th1, &c.th2), |s, c| bin(s, &c.op, &c.th1, &c.th2)),
        cong!(
            "mk_disj1_rule",
            Named("\\/"),
            |s, c| s.mk_disj1_rule(&c.th1, &c.b),
            |s, c| bin(s, &c.op, &c.th1, &refl(s, &c.b)?)
        ),
        cong!(
            "mk_disj2_rule",
            Named("\\/"),
            |s, c| s.mk_disj2_rule(&c.a, &c.th2),
            |s, c| bin(s, &c.op, &refl(s, &c.a)?, &c.th2)
        ),
        cong!("mk_imp_rule", Named("==>"), |s, c| s.mk_imp_rule(&c.th1, &c.th2), |s, c| bin(s, &c.op, &c.th1, &c.th2)),
        cong!(
            "mk_imp1_rule",
            Named("==>"),
            |s, c| s.mk_imp1_rule(&c.th1, &c.b),
            |s, c| bin(s, &c.op, &c.th1, &refl(s, &c.b)?)
        ),
        cong!(
            "mk_imp2_rule",
            Named("==>"),
            |s, c| s.mk_imp2_rule(&c.a, &c.th2),
            |s, c| bin(s, &c.op, &refl(s, &c.a)?, &c.th2)
        ),
        cong!(
            "mk_not_rule",
            Bool,
            |s, c| s.mk_not_rule(&c.th1),
            |s, c| s.mk_comb_rule(&refl(s, &neg_op(s)?)?, &c.th1)
        ),
        cong!("mk_forall_rule", Binder, |s, c| s.mk_forall_rule(&c.v, &c.th1), |s, c| binder(s, c, "!")),
        cong!("mk_exists_rule", Binder, |s, c| s.mk_exists_rule(&c.v, &c.th1), |s, c| binder(s, c, "?")),
        cong!("mk_uexists_rule", Binder, |s, c| s.mk_uexists_rule(&c.v, &c.th1), |s, c| binder(s, c, "?!")),
        cong!("mk_select_rule", Binder, |s, c| s.mk_select_rule(&c.v, &c.th1), |s, c| binder(s, c, "@")),
        cong!("mk_pair_rule", Pair, |s, c| s.mk_pair_rule(&c.th1, &c.th2), |s, c| bin(s, &c.op, &c.th1, &c.th2)),
        cong!(
            "mk_pair1_rule",
            Pair,
            |s, c| s.mk_pair1_rule(&c.th1, &c.b),
            |s, c| bin(s, &c.op, &c.th1, &refl(s, &c.b)?)
        ),
        cong!(
            "mk_pair2_rule",
            Pair,
            |s, c| s.mk_pair2_rule(&c.a, &c.th2),
            |s, c| bin(s, &c.op, &refl(s, &c.a)?, &c.th2)
        ),
    ]
}

/// An equation between terms of type `ty`: assumed, a beta reduction or
/// a reflexivity.
fn equation(g: &mut Gen, ty: &Type) -> Theorem {
    let s = g.s;
    match g.rng.gen_range(0..3) {
        0 => {
            let l = g.term(ty, 3);
            let r = g.term(ty, 3);
            s.assume_rule(&commonhol_core::syntax::mk_eq(&l, &r).unwrap()).unwrap()
        }
        1 => {
            let a = g.small_ty();
            let f = g.abs(a.clone(), ty, 3);
            let x = g.term(&a, 3);
            s.beta_conv(&mk_comb(&f, &x).unwrap()).unwrap()
        }
        _ => s.refl_conv(&g.term(ty, 3)).unwrap(),
    }
}

fn case(g: &mut Gen, op: Op) -> Case {
    let s = g.s;
    let (ta, tb) = match op {
        Op::Any | Op::Pair => (g.small_ty(), g.small_ty()),
        Op::Eq => {
            let t = g.small_ty();
            (t.clone(), t)
        }
        Op::Bool | Op::Named(_) | Op::Binder => (bool_ty(), bool_ty()),
    };
    let th1 = equation(g, &ta);
    let th2 = equation(g, &tb);
    let opt = match op {
        Op::Any => {
            let res = g.small_ty();
            g.free_var(mk_fun_type(ta.clone(), mk_fun_type(tb.clone(), res)))
        }
        Op::Eq => eq_const(&ta),
        Op::Named(n) => s.theory().mk_const(n, &mk_fun_type(bool_ty(), mk_fun_type(bool_ty(), bool_ty()))).unwrap(),
        Op::Pair => {
            let p = g.prod_ty(ta.clone(), tb.clone());
            s.theory().mk_const(",", &mk_fun_type(ta.clone(), mk_fun_type(tb.clone(), p))).unwrap()
        }
        Op::Bool | Op::Binder => g.free_var(bool_ty()),
    };
    let fres = g.small_ty();
    let fth = equation(g, &mk_fun_type(ta.clone(), fres));
    let a = g.term(&ta, 3);
    let b = g.term(&tb, 3);
    let fv = free_vars(th1.concl());
    let v = match fv.choose(&mut g.rng) {
        Some(x) if g.chance(0.7) => x.clone(),
        _ => {
            let ty = g.small_ty();
            g.free_var(ty)
        }
    };
    Case {
        op: opt,
        fth,
        th1,
        th2,
        a,
        b,
        v,
    }
}

pub struct Outcome {
    pub agreed: usize,
    pub both_failed: usize,
    pub mismatches: Vec<String>,
}

pub fn check(s: &Session, c: &Cong, seed: u64, n: usize) -> Outcome {
    let mut g = Gen::new(s, seed);
    let mut out = Outcome {
        agreed: 0,
        both_failed: 0,
        mismatches: Vec::new(),
    };
    for _ in 0..n {
        let k = case(&mut g, c.op);
        let r = (c.rule)(s, &k);
        let o = (c.oracle)(s, &k);
        match (&r, &o) {
            (Ok(x), Ok(y)) if thm_alpha_eq(x, y) => out.agreed += 1,
            (Err(_), Err(_)) => out.both_failed += 1,
            _ => out.mismatches.push(format!(
                "{}: {} vs {}",
                c.name,
                r.as_ref().map(|t| s.print_thm(t)).unwrap_or_else(|e| e.message().to_string()),
                o.as_ref().map(|t| s.print_thm(t)).unwrap_or_else(|e| e.message().to_string())
            )),
        }
    }
    out
}
