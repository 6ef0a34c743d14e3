//! Basic syntactic categories of the standard theory: equality, the
//! connectives, quantifiers, choice and pairs.
//!
//! Constructors for categories whose constants are introduced by theory
//! extension take the [`Theory`] so that they can refuse to build terms
//! over undeclared constants. Equality is part of the bootstrap theory and
//! needs no registry.

use alloc::vec::Vec;

use crate::error::{fail, Result, ResultExt};
use crate::kernel::Theory;
use crate::term::{mk_comb, Term, TermKind};
use crate::types::{bool_ty, mk_fun_type, Type};

pub const EQ: &str = "=";
pub const CONJ: &str = "/\\";
pub const DISJ: &str = "\\/";
pub const IMP: &str = "==>";
pub const NOT: &str = "~";
pub const FORALL: &str = "!";
pub const EXISTS: &str = "?";
pub const UEXISTS: &str = "?!";
pub const SELECT: &str = "@";
pub const TRUE: &str = "true";
pub const FALSE: &str = "false";
pub const PAIR: &str = ",";

fn bool_binop_ty() -> Type {
    mk_fun_type(bool_ty(), mk_fun_type(bool_ty(), bool_ty()))
}

/// The equality constant at `ty -> ty -> bool`.
pub fn eq_const(ty: &Type) -> Term {
    Term::const_unchecked(EQ, mk_fun_type(ty.clone(), mk_fun_type(ty.clone(), bool_ty())))
}

fn binop(op: &Term, l: &Term, r: &Term) -> Term {
    Term::comb_unchecked(Term::comb_unchecked(op.clone(), l.clone()), r.clone())
}

/// Destructure `op l r` where `op` is the named constant.
pub fn dest_binop_named<'a>(name: &str, t: &'a Term) -> Option<(&'a Term, &'a Term)> {
    let (f, r) = t.as_comb()?;
    let (op, l) = f.as_comb()?;
    if op.is_const_named(name) {
        Some((l, r))
    } else {
        None
    }
}

fn dest_unop_named<'a>(name: &str, t: &'a Term) -> Option<&'a Term> {
    let (op, x) = t.as_comb()?;
    if op.is_const_named(name) {
        Some(x)
    } else {
        None
    }
}

/// Destructure `c (\v. body)` where `c` is the named binder constant.
pub fn dest_binder_named<'a>(name: &str, t: &'a Term) -> Option<(&'a Term, &'a Term)> {
    let (op, abs) = t.as_comb()?;
    if !op.is_const_named(name) {
        return None;
    }
    abs.as_abs()
}

pub fn mk_eq(l: &Term, r: &Term) -> Result<Term> {
    if l.ty() != r.ty() {
        return fail("mk_eq", "sides have different types");
    }
    Ok(binop(&eq_const(l.ty()), l, r))
}

/// `l = r` using an equality constant already at the sides' type.
pub(crate) fn mk_eq_with(eq: &Term, l: &Term, r: &Term) -> Term {
    binop(eq, l, r)
}

pub fn dest_eq(t: &Term) -> Result<(Term, Term)> {
    match dest_binop_named(EQ, t) {
        Some((l, r)) => Ok((l.clone(), r.clone())),
        None => fail("dest_eq", "not an equation"),
    }
}

pub fn is_eq(t: &Term) -> bool {
    dest_binop_named(EQ, t).is_some()
}

pub fn lhs(t: &Term) -> Result<Term> {
    dest_eq(t).map(|(l, _)| l).origin("lhs")
}

pub fn rhs(t: &Term) -> Result<Term> {
    dest_eq(t).map(|(_, r)| r).origin("rhs")
}

pub fn true_tm(thy: &Theory) -> Result<Term> {
    thy.mk_const(TRUE, &bool_ty()).origin("true_tm")
}

pub fn false_tm(thy: &Theory) -> Result<Term> {
    thy.mk_const(FALSE, &bool_ty()).origin("false_tm")
}

fn mk_bool_binop(thy: &Theory, origin: &str, name: &str, p: &Term, q: &Term) -> Result<Term> {
    if !p.ty().is_bool() || !q.ty().is_bool() {
        return fail(origin, "operand is not boolean");
    }
    let op = thy.mk_const(name, &bool_binop_ty()).origin(origin)?;
    Ok(binop(&op, p, q))
}

fn dest_bool_binop(origin: &str, name: &str, t: &Term) -> Result<(Term, Term)> {
    match dest_binop_named(name, t) {
        Some((l, r)) if l.ty().is_bool() => Ok((l.clone(), r.clone())),
        _ => fail(origin, "wrong syntactic category"),
    }
}

pub fn mk_conj(thy: &Theory, p: &Term, q: &Term) -> Result<Term> {
    mk_bool_binop(thy, "mk_conj", CONJ, p, q)
}

pub fn dest_conj(t: &Term) -> Result<(Term, Term)> {
    dest_bool_binop("dest_conj", CONJ, t)
}

pub fn is_conj(t: &Term) -> bool {
    dest_binop_named(CONJ, t).is_some()
}

pub fn mk_disj(thy: &Theory, p: &Term, q: &Term) -> Result<Term> {
    mk_bool_binop(thy, "mk_disj", DISJ, p, q)
}

pub fn dest_disj(t: &Term) -> Result<(Term, Term)> {
    dest_bool_binop("dest_disj", DISJ, t)
}

pub fn is_disj(t: &Term) -> bool {
    dest_binop_named(DISJ, t).is_some()
}

pub fn mk_imp(thy: &Theory, p: &Term, q: &Term) -> Result<Term> {
    mk_bool_binop(thy, "mk_imp", IMP, p, q)
}

/// Succeeds only on implications; a negation is not an implication.
pub fn dest_imp(t: &Term) -> Result<(Term, Term)> {
    dest_bool_binop("dest_imp", IMP, t)
}

pub fn is_imp(t: &Term) -> bool {
    dest_binop_named(IMP, t).is_some()
}

pub fn mk_iff(p: &Term, q: &Term) -> Result<Term> {
    if !p.ty().is_bool() || !q.ty().is_bool() {
        return fail("mk_iff", "operand is not boolean");
    }
    mk_eq(p, q).origin("mk_iff")
}

pub fn mk_not(thy: &Theory, p: &Term) -> Result<Term> {
    if !p.ty().is_bool() {
        return fail("mk_not", "operand is not boolean");
    }
    let op = thy
        .mk_const(NOT, &mk_fun_type(bool_ty(), bool_ty()))
        .origin("mk_not")?;
    Ok(Term::comb_unchecked(op, p.clone()))
}

pub fn dest_not(t: &Term) -> Result<Term> {
    match dest_unop_named(NOT, t) {
        Some(p) => Ok(p.clone()),
        None => fail("dest_not", "not a negation"),
    }
}

pub fn is_not(t: &Term) -> bool {
    dest_unop_named(NOT, t).is_some()
}

fn mk_binder(thy: &Theory, origin: &str, name: &str, v: &Term, body: &Term) -> Result<Term> {
    if !v.is_var() {
        return fail(origin, "bound term is not a variable");
    }
    let ranty = if name == SELECT { v.ty().clone() } else { bool_ty() };
    if !body.ty().is_bool() {
        return fail(origin, "body is not boolean");
    }
    let pred_ty = mk_fun_type(v.ty().clone(), bool_ty());
    let op = thy
        .mk_const(name, &mk_fun_type(pred_ty, ranty))
        .origin(origin)?;
    let abs = Term::abs_unchecked(v.clone(), body.clone());
    Ok(Term::comb_unchecked(op, abs))
}

fn dest_binder(origin: &str, name: &str, t: &Term) -> Result<(Term, Term)> {
    match dest_binder_named(name, t) {
        Some((v, b)) => Ok((v.clone(), b.clone())),
        None => fail(origin, "wrong syntactic category"),
    }
}

pub fn mk_forall(thy: &Theory, v: &Term, body: &Term) -> Result<Term> {
    mk_binder(thy, "mk_forall", FORALL, v, body)
}

pub fn dest_forall(t: &Term) -> Result<(Term, Term)> {
    dest_binder("dest_forall", FORALL, t)
}

pub fn is_forall(t: &Term) -> bool {
    dest_binder_named(FORALL, t).is_some()
}

pub fn mk_exists(thy: &Theory, v: &Term, body: &Term) -> Result<Term> {
    mk_binder(thy, "mk_exists", EXISTS, v, body)
}

pub fn dest_exists(t: &Term) -> Result<(Term, Term)> {
    dest_binder("dest_exists", EXISTS, t)
}

pub fn is_exists(t: &Term) -> bool {
    dest_binder_named(EXISTS, t).is_some()
}

pub fn mk_uexists(thy: &Theory, v: &Term, body: &Term) -> Result<Term> {
    mk_binder(thy, "mk_uexists", UEXISTS, v, body)
}

pub fn dest_uexists(t: &Term) -> Result<(Term, Term)> {
    dest_binder("dest_uexists", UEXISTS, t)
}

pub fn is_uexists(t: &Term) -> bool {
    dest_binder_named(UEXISTS, t).is_some()
}

pub fn mk_select(thy: &Theory, v: &Term, body: &Term) -> Result<Term> {
    mk_binder(thy, "mk_select", SELECT, v, body)
}

pub fn dest_select(t: &Term) -> Result<(Term, Term)> {
    dest_binder("dest_select", SELECT, t)
}

pub fn is_select(t: &Term) -> bool {
    dest_binder_named(SELECT, t).is_some()
}

pub fn mk_pair(thy: &Theory, a: &Term, b: &Term) -> Result<Term> {
    let pty = thy.mk_comp_type(crate::types::PROD, &[a.ty().clone(), b.ty().clone()]).origin("mk_pair")?;
    let cty = mk_fun_type(a.ty().clone(), mk_fun_type(b.ty().clone(), pty));
    let op = thy.mk_const(PAIR, &cty).origin("mk_pair")?;
    Ok(binop(&op, a, b))
}

pub fn dest_pair(t: &Term) -> Result<(Term, Term)> {
    match dest_binop_named(PAIR, t) {
        Some((a, b)) => Ok((a.clone(), b.clone())),
        None => fail("dest_pair", "not a pair"),
    }
}

pub fn is_pair(t: &Term) -> bool {
    dest_binop_named(PAIR, t).is_some()
}

pub fn list_mk_forall(thy: &Theory, vs: &[Term], body: &Term) -> Result<Term> {
    let mut acc = body.clone();
    for v in vs.iter().rev() {
        acc = mk_forall(thy, v, &acc).origin("list_mk_forall")?;
    }
    Ok(acc)
}

pub fn strip_forall(t: &Term) -> (Vec<Term>, Term) {
    strip_binder(FORALL, t)
}

pub fn list_mk_exists(thy: &Theory, vs: &[Term], body: &Term) -> Result<Term> {
    let mut acc = body.clone();
    for v in vs.iter().rev() {
        acc = mk_exists(thy, v, &acc).origin("list_mk_exists")?;
    }
    Ok(acc)
}

pub fn strip_exists(t: &Term) -> (Vec<Term>, Term) {
    strip_binder(EXISTS, t)
}

fn strip_binder(name: &str, t: &Term) -> (Vec<Term>, Term) {
    let mut vs = Vec::new();
    let mut cur = t.clone();
    loop {
        let next = match dest_binder_named(name, &cur) {
            Some((v, b)) => (v.clone(), b.clone()),
            None => break,
        };
        vs.push(next.0);
        cur = next.1;
    }
    (vs, cur)
}

pub fn list_mk_conj(thy: &Theory, ps: &[Term]) -> Result<Term> {
    let (last, init) = match ps.split_last() {
        Some(x) => x,
        None => return fail("list_mk_conj", "empty list"),
    };
    let mut acc = last.clone();
    for p in init.iter().rev() {
        acc = mk_conj(thy, p, &acc).origin("list_mk_conj")?;
    }
    Ok(acc)
}

pub fn strip_conj(t: &Term) -> Vec<Term> {
    let mut out = Vec::new();
    let mut cur = t.clone();
    while let Some((l, r)) = dest_binop_named(CONJ, &cur).map(|(l, r)| (l.clone(), r.clone())) {
        out.push(l);
        cur = r;
    }
    out.push(cur);
    out
}

pub fn list_mk_disj(thy: &Theory, ps: &[Term]) -> Result<Term> {
    let (last, init) = match ps.split_last() {
        Some(x) => x,
        None => return fail("list_mk_disj", "empty list"),
    };
    let mut acc = last.clone();
    for p in init.iter().rev() {
        acc = mk_disj(thy, p, &acc).origin("list_mk_disj")?;
    }
    Ok(acc)
}

pub fn strip_disj(t: &Term) -> Vec<Term> {
    let mut out = Vec::new();
    let mut cur = t.clone();
    while let Some((l, r)) = dest_binop_named(DISJ, &cur).map(|(l, r)| (l.clone(), r.clone())) {
        out.push(l);
        cur = r;
    }
    out.push(cur);
    out
}

/// Apply a binary operator term: `op l r`.
pub fn mk_bin(op: &Term, l: &Term, r: &Term) -> Result<Term> {
    let f = mk_comb(op, l).origin("mk_bin")?;
    mk_comb(&f, r).origin("mk_bin")
}

/// Head constant name of a term, if it is an application spine over a
/// constant.
pub fn head_const_name(t: &Term) -> Option<&str> {
    let mut cur = t;
    loop {
        match cur.kind() {
            TermKind::Comb(f, _) => cur = f,
            TermKind::Const(n) => return Some(n),
            _ => return None,
        }
    }
}
