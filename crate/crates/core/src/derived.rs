//! Derived inference rules: the mid-level rules, the congruence family and
//! the conversion glue. Everything here is built from the primitives in
//! [`crate::kernel::rules`].

use alloc::vec::Vec;

use crate::error::{fail, Result, ResultExt};
use crate::kernel::rules::*;
use crate::kernel::{Theorem, Theory};
use crate::syntax::{self, dest_binop_named};
use crate::term::{list_free_vars, variant, Term};
use crate::types::{bool_ty, mk_fun_type, Type};

/// A conversion maps a term `t` to a theorem `|- t = t'`.
pub trait Conv: Fn(&Term) -> Result<Theorem> {}
impl<F: Fn(&Term) -> Result<Theorem>> Conv for F {}

fn eq_sides<'a>(origin: &str, th: &'a Theorem) -> Result<(&'a Term, &'a Term)> {
    match dest_binop_named(syntax::EQ, th.concl()) {
        Some(p) => Ok(p),
        None => fail(origin, "conclusion is not an equation"),
    }
}

fn iff_sides<'a>(origin: &str, th: &'a Theorem) -> Result<(&'a Term, &'a Term)> {
    let (l, r) = eq_sides(origin, th)?;
    if !l.ty().is_bool() {
        return fail(origin, "conclusion is not a boolean equation");
    }
    Ok((l, r))
}

/// `|- true`, from the registry when the platform is built, otherwise
/// derived from the definition of `true`.
pub fn truth(thy: &Theory) -> Result<Theorem> {
    if let Ok(th) = thy.get_theorem("truth_thm") {
        return Ok(th);
    }
    let def = thy.get_const_definition(syntax::TRUE).origin("truth")?;
    let (_, r) = syntax::dest_eq(def.concl())?;
    let (l, _) = syntax::dest_eq(&r)?;
    eq_mp_rule(&sym_rule(&def)?, &refl_conv(&l)?)
}

/// From `A |- a = b` derive `A |- b = a`.
pub fn sym_rule(th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "sym_rule";
    let (a, _) = eq_sides(ORIGIN, th)?;
    let eq = syntax::eq_const(a.ty());
    let t1 = mk_comb_rule(&refl_conv(&eq)?, th).origin(ORIGIN)?;
    let refl_a = refl_conv(a)?;
    let t2 = mk_comb_rule(&t1, &refl_a).origin(ORIGIN)?;
    eq_mp_rule(&t2, &refl_a).origin(ORIGIN)
}

/// `|- (a = b) <=> (b = a)`
pub fn sym_conv(t: &Term) -> Result<Theorem> {
    const ORIGIN: &str = "sym_conv";
    let (a, b) = syntax::dest_eq(t).origin(ORIGIN)?;
    let flipped = syntax::mk_eq(&b, &a)?;
    let th1 = sym_rule(&assume_rule(&flipped)?)?;
    let th2 = sym_rule(&assume_rule(t)?)?;
    deduct_antisym_rule(&th1, &th2).origin(ORIGIN)
}

/// Cut: from `A1 |- p` and `A2 |- q` derive `A1 u (A2 - {p}) |- q`.
pub fn prove_asm_rule(thy: &Theory, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    let d = disch_rule(thy, th1.concl(), th2).origin("prove_asm_rule")?;
    mp_rule(&d, th1).origin("prove_asm_rule")
}

/// Restore an assumption of `orig` that an intermediate step discharged.
fn restore_asm(thy: &Theory, orig: &Theorem, a: &Term, th: Theorem) -> Result<Theorem> {
    if th.asms().len() < orig.asms().len() {
        add_asm_rule(thy, a, &th)
    } else {
        Ok(th)
    }
}

/// From `A |- p` derive `A |- p <=> true`.
pub fn eqt_intro_rule(thy: &Theory, th: &Theorem) -> Result<Theorem> {
    let t = truth(thy).origin("eqt_intro_rule")?;
    let r = deduct_antisym_rule(th, &t).origin("eqt_intro_rule")?;
    restore_asm(thy, th, t.concl(), r)
}

/// From `A |- p <=> true` derive `A |- p`.
pub fn eqt_elim_rule(thy: &Theory, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "eqt_elim_rule";
    let (_, r) = iff_sides(ORIGIN, th)?;
    if !r.is_const_named(syntax::TRUE) {
        return fail(ORIGIN, "right-hand side is not true");
    }
    let t = truth(thy).origin(ORIGIN)?;
    eq_mp_rule(&sym_rule(th)?, &t).origin(ORIGIN)
}

/// From `A |- ~p` derive `A |- p <=> false`.
pub fn eqf_intro_rule(thy: &Theory, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "eqf_intro_rule";
    let p = syntax::dest_not(th.concl()).origin(ORIGIN)?;
    let f = syntax::false_tm(thy).origin(ORIGIN)?;
    let th_false = undisch_rule(&not_elim_rule(thy, th)?).origin(ORIGIN)?;
    let th_p = contr_rule(&p, &assume_rule(&f)?)?;
    let r = deduct_antisym_rule(&th_p, &th_false).origin(ORIGIN)?;
    restore_asm(thy, th, &p, r)
}

/// From `A |- p <=> false` derive `A |- ~p`.
pub fn eqf_elim_rule(thy: &Theory, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "eqf_elim_rule";
    let (p, r) = iff_sides(ORIGIN, th)?;
    if !r.is_const_named(syntax::FALSE) {
        return fail(ORIGIN, "right-hand side is not false");
    }
    let th1 = eq_mp_rule(th, &assume_rule(p)?)?;
    let th2 = disch_rule(thy, p, &th1).origin(ORIGIN)?;
    let out = not_intro_rule(thy, &th2).origin(ORIGIN)?;
    restore_asm(thy, th, p, out)
}

/// From `A |- p ==> q` derive `A u {p} |- q`.
pub fn undisch_rule(th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "undisch_rule";
    let p = match dest_binop_named(syntax::IMP, th.concl()) {
        Some((p, _)) => p.clone(),
        None => return fail(ORIGIN, "not an implication"),
    };
    mp_rule(th, &assume_rule(&p)?).origin(ORIGIN)
}

/// From `A |- q` derive `A u {p} |- q`.
pub fn add_asm_rule(thy: &Theory, p: &Term, th: &Theorem) -> Result<Theorem> {
    let d = disch_rule(thy, p, th).origin("add_asm_rule")?;
    mp_rule(&d, &assume_rule(p)?).origin("add_asm_rule")
}

/// Specialise every outer universal quantifier to its own variable,
/// renamed away from the theorem's free variables where necessary.
pub fn spec_all_rule(th: &Theorem) -> Result<Theorem> {
    let mut avoid = th.asms().to_vec();
    avoid.push(th.concl().clone());
    let mut avoid = list_free_vars(&avoid);
    let mut out = th.clone();
    while let Ok((v, _)) = syntax::dest_forall(out.concl()) {
        let v2 = variant(&avoid, &v)?;
        avoid.push(v2.clone());
        out = spec_rule(&v2, &out).origin("spec_all_rule")?;
    }
    Ok(out)
}

/// Generalise over each variable, the first becoming outermost.
pub fn list_gen_rule(thy: &Theory, vs: &[Term], th: &Theorem) -> Result<Theorem> {
    let mut out = th.clone();
    for v in vs.iter().rev() {
        out = gen_rule(thy, v, &out).origin("list_gen_rule")?;
    }
    Ok(out)
}

/// Specialise outer quantifiers to the given terms in order.
pub fn list_spec_rule(ts: &[Term], th: &Theorem) -> Result<Theorem> {
    let mut out = th.clone();
    for t in ts {
        out = spec_rule(t, &out).origin("list_spec_rule")?;
    }
    Ok(out)
}

/// Generalise over all free variables not free in the assumptions.
pub fn gen_all_rule(thy: &Theory, th: &Theorem) -> Result<Theorem> {
    let asm_frees = list_free_vars(th.asms());
    let vs: Vec<Term> = crate::term::free_vars(th.concl())
        .into_iter()
        .filter(|v| !asm_frees.contains(v))
        .collect();
    list_gen_rule(thy, &vs, th).origin("gen_all_rule")
}

// ---------------------------------------------------------------------------
// Congruence rules

fn bool_op(thy: &Theory, origin: &str, name: &str) -> Result<Term> {
    thy.mk_const(name, &mk_fun_type(bool_ty(), mk_fun_type(bool_ty(), bool_ty())))
        .origin(origin)
}

fn check_iff(origin: &str, th: &Theorem) -> Result<()> {
    iff_sides(origin, th).map(|_| ())
}

/// From `A1 |- a = a'` and `A2 |- b = b'` derive `A1 u A2 |- op a b = op a' b'`.
pub fn mk_bin_rule(op: &Term, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "mk_bin_rule";
    let t = mk_comb_rule(&refl_conv(op)?, th1).origin(ORIGIN)?;
    mk_comb_rule(&t, th2).origin(ORIGIN)
}

/// From `A |- a = a'` derive `A |- op a b = op a' b`.
pub fn mk_bin1_rule(op: &Term, th: &Theorem, b: &Term) -> Result<Theorem> {
    const ORIGIN: &str = "mk_bin1_rule";
    let t = mk_comb_rule(&refl_conv(op)?, th).origin(ORIGIN)?;
    mk_comb_rule(&t, &refl_conv(b)?).origin(ORIGIN)
}

/// From `A |- b = b'` derive `A |- op a b = op a b'`.
pub fn mk_bin2_rule(op: &Term, a: &Term, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "mk_bin2_rule";
    let f = crate::term::mk_comb(op, a).origin(ORIGIN)?;
    mk_comb_rule(&refl_conv(&f)?, th).origin(ORIGIN)
}

/// From `A |- f = g` derive `A |- f x = g x`.
pub fn mk_comb1_rule(th: &Theorem, x: &Term) -> Result<Theorem> {
    mk_comb_rule(th, &refl_conv(x)?).origin("mk_comb1_rule")
}

/// From `A |- a = b` derive `A |- f a = f b`.
pub fn mk_comb2_rule(f: &Term, th: &Theorem) -> Result<Theorem> {
    mk_comb_rule(&refl_conv(f)?, th).origin("mk_comb2_rule")
}

fn eq_op(origin: &str, th: &Theorem) -> Result<Term> {
    let (a, _) = eq_sides(origin, th)?;
    Ok(syntax::eq_const(a.ty()))
}

pub fn mk_eq_rule(th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    let op = eq_op("mk_eq_rule", th1)?;
    mk_bin_rule(&op, th1, th2).origin("mk_eq_rule")
}

pub fn mk_eq1_rule(th: &Theorem, b: &Term) -> Result<Theorem> {
    let op = eq_op("mk_eq1_rule", th)?;
    mk_bin1_rule(&op, th, b).origin("mk_eq1_rule")
}

pub fn mk_eq2_rule(a: &Term, th: &Theorem) -> Result<Theorem> {
    let op = syntax::eq_const(a.ty());
    mk_bin2_rule(&op, a, th).origin("mk_eq2_rule")
}

macro_rules! bool_congruence {
    ($both:ident, $left:ident, $right:ident, $name:expr) => {
        pub fn $both(thy: &Theory, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
            const ORIGIN: &str = stringify!($both);
            check_iff(ORIGIN, th1)?;
            check_iff(ORIGIN, th2)?;
            let op = bool_op(thy, ORIGIN, $name)?;
            mk_bin_rule(&op, th1, th2).origin(ORIGIN)
        }

        pub fn $left(thy: &Theory, th: &Theorem, q: &Term) -> Result<Theorem> {
            const ORIGIN: &str = stringify!($left);
            check_iff(ORIGIN, th)?;
            let op = bool_op(thy, ORIGIN, $name)?;
            mk_bin1_rule(&op, th, q).origin(ORIGIN)
        }

        pub fn $right(thy: &Theory, p: &Term, th: &Theorem) -> Result<Theorem> {
            const ORIGIN: &str = stringify!($right);
            check_iff(ORIGIN, th)?;
            let op = bool_op(thy, ORIGIN, $name)?;
            mk_bin2_rule(&op, p, th).origin(ORIGIN)
        }
    };
}

bool_congruence!(mk_conj_rule, mk_conj1_rule, mk_conj2_rule, syntax::CONJ);
bool_congruence!(mk_disj_rule, mk_disj1_rule, mk_disj2_rule, syntax::DISJ);
bool_congruence!(mk_imp_rule, mk_imp1_rule, mk_imp2_rule, syntax::IMP);

/// From `A |- p <=> q` derive `A |- ~p <=> ~q`.
pub fn mk_not_rule(thy: &Theory, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "mk_not_rule";
    check_iff(ORIGIN, th)?;
    let op = thy
        .mk_const(syntax::NOT, &mk_fun_type(bool_ty(), bool_ty()))
        .origin(ORIGIN)?;
    mk_comb2_rule(&op, th).origin(ORIGIN)
}

fn binder_congruence(
    thy: &Theory,
    origin: &str,
    name: &str,
    v: &Term,
    th: &Theorem,
) -> Result<Theorem> {
    let (l, _) = eq_sides(origin, th)?;
    if !l.ty().is_bool() {
        return fail(origin, "body is not boolean");
    }
    let ranty: Type = if name == syntax::SELECT { v.ty().clone() } else { bool_ty() };
    let op = thy
        .mk_const(name, &mk_fun_type(mk_fun_type(v.ty().clone(), bool_ty()), ranty))
        .origin(origin)?;
    let abs = mk_abs_rule(v, th).origin(origin)?;
    mk_comb2_rule(&op, &abs).origin(origin)
}

/// From `A |- p <=> q` derive `A |- (!v. p) <=> (!v. q)`.
pub fn mk_forall_rule(thy: &Theory, v: &Term, th: &Theorem) -> Result<Theorem> {
    binder_congruence(thy, "mk_forall_rule", syntax::FORALL, v, th)
}

pub fn mk_exists_rule(thy: &Theory, v: &Term, th: &Theorem) -> Result<Theorem> {
    binder_congruence(thy, "mk_exists_rule", syntax::EXISTS, v, th)
}

pub fn mk_uexists_rule(thy: &Theory, v: &Term, th: &Theorem) -> Result<Theorem> {
    binder_congruence(thy, "mk_uexists_rule", syntax::UEXISTS, v, th)
}

/// From `A |- p <=> q` derive `A |- (@v. p) = (@v. q)`.
pub fn mk_select_rule(thy: &Theory, v: &Term, th: &Theorem) -> Result<Theorem> {
    binder_congruence(thy, "mk_select_rule", syntax::SELECT, v, th)
}

fn pair_op(thy: &Theory, origin: &str, a: &Term, b: &Term) -> Result<Term> {
    let p = syntax::mk_pair(thy, a, b).origin(origin)?;
    Ok(p.strip_comb().0)
}

/// From `A1 |- a = a'` and `A2 |- b = b'` derive `A1 u A2 |- (a,b) = (a',b')`.
pub fn mk_pair_rule(thy: &Theory, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "mk_pair_rule";
    let (a, _) = eq_sides(ORIGIN, th1)?;
    let (b, _) = eq_sides(ORIGIN, th2)?;
    let op = pair_op(thy, ORIGIN, a, b)?;
    mk_bin_rule(&op, th1, th2).origin(ORIGIN)
}

pub fn mk_pair1_rule(thy: &Theory, th: &Theorem, b: &Term) -> Result<Theorem> {
    const ORIGIN: &str = "mk_pair1_rule";
    let (a, _) = eq_sides(ORIGIN, th)?;
    let op = pair_op(thy, ORIGIN, a, b)?;
    mk_bin1_rule(&op, th, b).origin(ORIGIN)
}

pub fn mk_pair2_rule(thy: &Theory, a: &Term, th: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "mk_pair2_rule";
    let (b, _) = eq_sides(ORIGIN, th)?;
    let op = pair_op(thy, ORIGIN, a, b)?;
    mk_bin2_rule(&op, a, th).origin(ORIGIN)
}

// ---------------------------------------------------------------------------
// Conversions

/// `|- t = t`
pub fn id_conv(t: &Term) -> Result<Theorem> {
    refl_conv(t).origin("id_conv")
}

/// From `A |- p` and a conversion proving `|- p = p'`, derive `A |- p'`.
pub fn conv_rule(conv: impl Conv, th: &Theorem) -> Result<Theorem> {
    let eq = conv(th.concl()).origin("conv_rule")?;
    eq_mp_rule(&eq, th).origin("conv_rule")
}

/// Apply `conv` to the operand of an application.
pub fn rand_conv(conv: impl Conv, t: &Term) -> Result<Theorem> {
    match t.as_comb() {
        Some((f, x)) => mk_comb2_rule(f, &conv(x)?),
        None => fail("rand_conv", "not an application"),
    }
}

/// Apply `conv` to the operator of an application.
pub fn rator_conv(conv: impl Conv, t: &Term) -> Result<Theorem> {
    match t.as_comb() {
        Some((f, x)) => mk_comb1_rule(&conv(f)?, x),
        None => fail("rator_conv", "not an application"),
    }
}

/// Chain two equations `a = b` and `b = c`, skipping reflexive links.
pub(crate) fn trans_chain(th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    if let Some((l, r)) = dest_binop_named(syntax::EQ, th2.concl()) {
        if l.ptr_eq(r) {
            return Ok(th1.clone());
        }
    }
    if let Some((l, r)) = dest_binop_named(syntax::EQ, th1.concl()) {
        if l.ptr_eq(r) {
            return Ok(th2.clone());
        }
    }
    eq_trans_rule(th1, th2)
}

/// Fully beta-normalise a term, proving `|- t = t'`.
pub fn beta_norm_conv(t: &Term) -> Result<Theorem> {
    use crate::term::TermKind;
    match t.kind() {
        TermKind::Var(_) | TermKind::Const(_) => refl_conv(t),
        TermKind::Abs(v, b) => {
            let th = beta_norm_conv(b)?;
            mk_abs_rule(v, &th)
        }
        TermKind::Comb(f, x) => {
            let thf = beta_norm_conv(f)?;
            let thx = beta_norm_conv(x)?;
            let th = mk_comb_rule(&thf, &thx)?;
            let (_, r) = eq_sides("beta_norm_conv", &th)?;
            let r = r.clone();
            match r.as_comb() {
                Some((g, _)) if g.is_abs() => {
                    let b = beta_conv(&r)?;
                    let (_, r2) = eq_sides("beta_norm_conv", &b)?;
                    let r2 = r2.clone();
                    let rest = beta_norm_conv(&r2)?;
                    trans_chain(&trans_chain(&th, &b)?, &rest)
                }
                _ => Ok(th),
            }
        }
    }
}

/// Beta-normalise the conclusion of a theorem.
pub fn beta_rule(th: &Theorem) -> Result<Theorem> {
    conv_rule(beta_norm_conv, th).origin("beta_rule")
}

/// Convert `A |- p` into `A |- p'` for an alpha-equivalent `p'`.
pub fn alpha_rule(p: &Term, th: &Theorem) -> Result<Theorem> {
    eq_mp_rule(&refl_conv(p)?, th).origin("alpha_rule")
}

/// From `A1 |- p ==> q` and `A2 |- q ==> r` derive `A1 u A2 |- p ==> r`.
pub fn imp_trans_rule(thy: &Theory, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    const ORIGIN: &str = "imp_trans_rule";
    let (p, _) = match dest_binop_named(syntax::IMP, th1.concl()) {
        Some(x) => x,
        None => return fail(ORIGIN, "not an implication"),
    };
    let q = mp_rule(th1, &assume_rule(p)?).origin(ORIGIN)?;
    let r = mp_rule(th2, &q).origin(ORIGIN)?;
    disch_rule(thy, p, &r).origin(ORIGIN)
}
