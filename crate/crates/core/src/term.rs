//! HOL terms: variables, constants, applications and abstractions.
//!
//! Terms are name-carrying and immutable. Structural equality (`==`) is
//! exposed for the plain set operations, but the semantic comparison is
//! [`alpha_eq`]. Every term built through this module is well-typed.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{fail, Result};
use crate::types::{self, mk_fun_type, type_inst, Name, Type};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term(Arc<TermNode>);

#[derive(PartialEq, Eq, PartialOrd, Ord, Hash)]
struct TermNode {
    kind: TermKind,
    ty: Type,
    // Conservative: true only if the term certainly has no free variables.
    closed: bool,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TermKind {
    Var(Name),
    Const(Name),
    Comb(Term, Term),
    Abs(Term, Term),
}

/// Term instantiation: old variable to new term, old-to-new order.
pub type TermInstn = Vec<(Term, Term)>;

impl Term {
    fn node(kind: TermKind, ty: Type, closed: bool) -> Term {
        Term(Arc::new(TermNode { kind, ty, closed }))
    }

    pub fn kind(&self) -> &TermKind {
        &self.0.kind
    }

    pub fn ty(&self) -> &Type {
        &self.0.ty
    }

    pub fn ptr_eq(&self, other: &Term) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub(crate) fn is_closed_hint(&self) -> bool {
        self.0.closed
    }

    /// Constant without registry checks; the kernel guards its use.
    pub(crate) fn const_unchecked(name: &str, ty: Type) -> Term {
        Term::node(TermKind::Const(Name::from(name)), ty, true)
    }

    pub(crate) fn const_named(name: Name, ty: Type) -> Term {
        Term::node(TermKind::Const(name), ty, true)
    }

    /// Application whose typing the caller has already established.
    pub(crate) fn comb_unchecked(f: Term, x: Term) -> Term {
        let ty = match f.ty().dest_fun() {
            Some((_, r)) => r.clone(),
            None => unreachable!("comb_unchecked on non-function"),
        };
        let closed = f.0.closed && x.0.closed;
        Term::node(TermKind::Comb(f, x), ty, closed)
    }

    pub(crate) fn abs_unchecked(v: Term, body: Term) -> Term {
        let ty = mk_fun_type(v.ty().clone(), body.ty().clone());
        let closed = body.0.closed || body == v;
        Term::node(TermKind::Abs(v, body), ty, closed)
    }

    pub fn is_var(&self) -> bool {
        matches!(self.kind(), TermKind::Var(_))
    }

    pub fn is_const(&self) -> bool {
        matches!(self.kind(), TermKind::Const(_))
    }

    pub fn is_comb(&self) -> bool {
        matches!(self.kind(), TermKind::Comb(..))
    }

    pub fn is_abs(&self) -> bool {
        matches!(self.kind(), TermKind::Abs(..))
    }

    pub fn name(&self) -> Option<&str> {
        match self.kind() {
            TermKind::Var(n) | TermKind::Const(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_comb(&self) -> Option<(&Term, &Term)> {
        match self.kind() {
            TermKind::Comb(f, x) => Some((f, x)),
            _ => None,
        }
    }

    pub fn as_abs(&self) -> Option<(&Term, &Term)> {
        match self.kind() {
            TermKind::Abs(v, b) => Some((v, b)),
            _ => None,
        }
    }

    /// Is this the constant `name` (at any type)?
    pub fn is_const_named(&self, name: &str) -> bool {
        matches!(self.kind(), TermKind::Const(n) if &**n == name)
    }

    /// Strip `f a1 .. an` into the head and argument list.
    pub fn strip_comb(&self) -> (Term, Vec<Term>) {
        let mut args = Vec::new();
        let mut cur = self.clone();
        while let Some((f, x)) = cur.as_comb().map(|(f, x)| (f.clone(), x.clone())) {
            args.push(x);
            cur = f;
        }
        args.reverse();
        (cur, args)
    }

    pub fn size(&self) -> usize {
        match self.kind() {
            TermKind::Var(_) | TermKind::Const(_) => 1,
            TermKind::Comb(f, x) => 1 + f.size() + x.size(),
            TermKind::Abs(v, b) => 1 + v.size() + b.size(),
        }
    }
}

pub fn mk_var(name: &str, ty: Type) -> Term {
    Term::node(TermKind::Var(Name::from(name)), ty, false)
}

pub(crate) fn mk_var_named(name: Name, ty: Type) -> Term {
    Term::node(TermKind::Var(name), ty, false)
}

pub fn dest_var(t: &Term) -> Result<(&str, &Type)> {
    match t.kind() {
        TermKind::Var(n) => Ok((n, t.ty())),
        _ => fail("dest_var", "not a variable"),
    }
}

pub fn dest_const(t: &Term) -> Result<(&str, &Type)> {
    match t.kind() {
        TermKind::Const(n) => Ok((n, t.ty())),
        _ => fail("dest_const", "not a constant"),
    }
}

pub fn mk_comb(f: &Term, x: &Term) -> Result<Term> {
    match f.ty().dest_fun() {
        Some((dom, _)) if dom == x.ty() => Ok(Term::comb_unchecked(f.clone(), x.clone())),
        Some(_) => fail("mk_comb", "argument type does not match function domain"),
        None => fail("mk_comb", "function term does not have a function type"),
    }
}

pub fn dest_comb(t: &Term) -> Result<(Term, Term)> {
    match t.kind() {
        TermKind::Comb(f, x) => Ok((f.clone(), x.clone())),
        _ => fail("dest_comb", "not an application"),
    }
}

pub fn list_mk_comb(f: &Term, args: &[Term]) -> Result<Term> {
    let mut acc = f.clone();
    for a in args {
        acc = mk_comb(&acc, a).map_err(|e| e.reraise("list_mk_comb"))?;
    }
    Ok(acc)
}

pub fn rator(t: &Term) -> Result<Term> {
    match t.kind() {
        TermKind::Comb(f, _) => Ok(f.clone()),
        _ => fail("rator", "not an application"),
    }
}

pub fn rand(t: &Term) -> Result<Term> {
    match t.kind() {
        TermKind::Comb(_, x) => Ok(x.clone()),
        _ => fail("rand", "not an application"),
    }
}

pub fn mk_abs(v: &Term, body: &Term) -> Result<Term> {
    if !v.is_var() {
        return fail("mk_abs", "binder is not a variable");
    }
    Ok(Term::abs_unchecked(v.clone(), body.clone()))
}

pub fn dest_abs(t: &Term) -> Result<(Term, Term)> {
    match t.kind() {
        TermKind::Abs(v, b) => Ok((v.clone(), b.clone())),
        _ => fail("dest_abs", "not an abstraction"),
    }
}

pub fn list_mk_abs(vs: &[Term], body: &Term) -> Result<Term> {
    let mut acc = body.clone();
    for v in vs.iter().rev() {
        acc = mk_abs(v, &acc).map_err(|e| e.reraise("list_mk_abs"))?;
    }
    Ok(acc)
}

pub fn strip_abs(t: &Term) -> (Vec<Term>, Term) {
    let mut vs = Vec::new();
    let mut cur = t.clone();
    while let Some((v, b)) = cur.as_abs().map(|(v, b)| (v.clone(), b.clone())) {
        vs.push(v);
        cur = b;
    }
    (vs, cur)
}

pub fn is_var(t: &Term) -> bool {
    t.is_var()
}

pub fn is_const(t: &Term) -> bool {
    t.is_const()
}

pub fn is_comb(t: &Term) -> bool {
    t.is_comb()
}

pub fn is_abs(t: &Term) -> bool {
    t.is_abs()
}

pub fn type_of(t: &Term) -> Type {
    t.ty().clone()
}

// ---------------------------------------------------------------------------
// Variable analysis

fn push_unique(acc: &mut Vec<Term>, t: &Term) {
    if !acc.contains(t) {
        acc.push(t.clone());
    }
}

fn collect_frees(t: &Term, bound: &mut Vec<Term>, acc: &mut Vec<Term>) {
    if t.is_closed_hint() {
        return;
    }
    match t.kind() {
        TermKind::Var(_) => {
            if !bound.contains(t) {
                push_unique(acc, t);
            }
        }
        TermKind::Const(_) => {}
        TermKind::Comb(f, x) => {
            collect_frees(f, bound, acc);
            collect_frees(x, bound, acc);
        }
        TermKind::Abs(v, b) => {
            bound.push(v.clone());
            collect_frees(b, bound, acc);
            bound.pop();
        }
    }
}

/// Free variables, left-to-right first occurrence.
pub fn free_vars(t: &Term) -> Vec<Term> {
    let mut acc = Vec::new();
    collect_frees(t, &mut Vec::new(), &mut acc);
    acc
}

pub fn list_free_vars(ts: &[Term]) -> Vec<Term> {
    let mut acc = Vec::new();
    for t in ts {
        collect_frees(t, &mut Vec::new(), &mut acc);
    }
    acc
}

fn collect_all_vars(t: &Term, acc: &mut Vec<Term>) {
    match t.kind() {
        TermKind::Var(_) => push_unique(acc, t),
        TermKind::Const(_) => {}
        TermKind::Comb(f, x) => {
            collect_all_vars(f, acc);
            collect_all_vars(x, acc);
        }
        TermKind::Abs(v, b) => {
            push_unique(acc, v);
            collect_all_vars(b, acc);
        }
    }
}

/// Every variable, free or bound, first occurrence order.
pub fn all_vars(t: &Term) -> Vec<Term> {
    let mut acc = Vec::new();
    collect_all_vars(t, &mut acc);
    acc
}

pub fn list_all_vars(ts: &[Term]) -> Vec<Term> {
    let mut acc = Vec::new();
    for t in ts {
        collect_all_vars(t, &mut acc);
    }
    acc
}

/// Does variable `v` occur free in `t`?
pub fn var_free_in(v: &Term, t: &Term) -> bool {
    if t.is_closed_hint() {
        return false;
    }
    match t.kind() {
        TermKind::Var(_) => v == t,
        TermKind::Const(_) => false,
        TermKind::Comb(f, x) => var_free_in(v, f) || var_free_in(v, x),
        TermKind::Abs(w, b) => w != v && var_free_in(v, b),
    }
}

/// Does `t1` occur free in `t2`, modulo alpha-equivalence?
pub fn term_free_in(t1: &Term, t2: &Term) -> bool {
    if alpha_eq(t1, t2) {
        return true;
    }
    match t2.kind() {
        TermKind::Comb(f, x) => term_free_in(t1, f) || term_free_in(t1, x),
        TermKind::Abs(v, b) => !var_free_in(v, t1) && term_free_in(t1, b),
        _ => false,
    }
}

fn collect_term_tyvars(t: &Term, acc: &mut Vec<Type>) {
    match t.kind() {
        TermKind::Var(_) | TermKind::Const(_) => types::collect_tyvars(t.ty(), acc),
        TermKind::Comb(f, x) => {
            collect_term_tyvars(f, acc);
            collect_term_tyvars(x, acc);
        }
        TermKind::Abs(v, b) => {
            collect_term_tyvars(v, acc);
            collect_term_tyvars(b, acc);
        }
    }
}

pub fn term_tyvars(t: &Term) -> Vec<Type> {
    let mut acc = Vec::new();
    collect_term_tyvars(t, &mut acc);
    acc
}

pub fn list_term_tyvars(ts: &[Term]) -> Vec<Type> {
    let mut acc = Vec::new();
    for t in ts {
        collect_term_tyvars(t, &mut acc);
    }
    acc
}

// ---------------------------------------------------------------------------
// Alpha-equivalence

struct AlphaEnv<'a> {
    pairs: Vec<(&'a Term, &'a Term)>,
    renamed: usize,
}

fn bound_index(pairs: &[(&Term, &Term)], v: &Term, left: bool) -> Option<usize> {
    pairs
        .iter()
        .rev()
        .position(|(a, b)| if left { *a == v } else { *b == v })
}

fn kind_rank(t: &Term) -> u8 {
    match t.kind() {
        TermKind::Var(_) => 0,
        TermKind::Const(_) => 1,
        TermKind::Comb(..) => 2,
        TermKind::Abs(..) => 3,
    }
}

fn alpha_cmp_in<'a>(env: &mut AlphaEnv<'a>, t1: &'a Term, t2: &'a Term) -> Ordering {
    if env.renamed == 0 && t1.ptr_eq(t2) {
        return Ordering::Equal;
    }
    match (t1.kind(), t2.kind()) {
        (TermKind::Var(n1), TermKind::Var(n2)) => {
            let i = bound_index(&env.pairs, t1, true);
            let j = bound_index(&env.pairs, t2, false);
            match (i, j) {
                (Some(i), Some(j)) => i.cmp(&j),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => n1.cmp(n2).then_with(|| t1.ty().cmp(t2.ty())),
            }
        }
        (TermKind::Const(n1), TermKind::Const(n2)) => n1.cmp(n2).then_with(|| t1.ty().cmp(t2.ty())),
        (TermKind::Comb(f1, x1), TermKind::Comb(f2, x2)) => {
            alpha_cmp_in(env, f1, f2).then_with(|| alpha_cmp_in(env, x1, x2))
        }
        (TermKind::Abs(v1, b1), TermKind::Abs(v2, b2)) => {
            let c = v1.ty().cmp(v2.ty());
            if c != Ordering::Equal {
                return c;
            }
            let renamed = v1 != v2;
            env.pairs.push((v1, v2));
            if renamed {
                env.renamed += 1;
            }
            let r = alpha_cmp_in(env, b1, b2);
            env.pairs.pop();
            if renamed {
                env.renamed -= 1;
            }
            r
        }
        _ => kind_rank(t1).cmp(&kind_rank(t2)),
    }
}

/// Total order on terms that identifies alpha-equivalent terms.
pub fn alpha_cmp(t1: &Term, t2: &Term) -> Ordering {
    let mut env = AlphaEnv {
        pairs: Vec::new(),
        renamed: 0,
    };
    alpha_cmp_in(&mut env, t1, t2)
}

pub fn alpha_eq(t1: &Term, t2: &Term) -> bool {
    t1.ptr_eq(t2) || alpha_cmp(t1, t2) == Ordering::Equal
}

// ---------------------------------------------------------------------------
// Fresh names and instantiation

/// Prime `name` until it is not in `avoid`.
pub(crate) fn fresh_name(avoid: &[&str], name: &str) -> String {
    let mut s = String::from(name);
    while avoid.iter().any(|a| *a == s) {
        s.push('\'');
    }
    s
}

fn variant_names(avoid: &[Term], v: &Term) -> Term {
    let names: Vec<&str> = avoid.iter().filter_map(|t| t.name()).collect();
    let (name, ty) = match v.kind() {
        TermKind::Var(n) => (n, v.ty()),
        _ => unreachable!(),
    };
    if !names.contains(&&**name) {
        return v.clone();
    }
    mk_var(&fresh_name(&names, name), ty.clone())
}

/// A variable like `v` whose name differs from every variable in `avoid`,
/// obtained by appending primes.
pub fn variant(avoid: &[Term], v: &Term) -> Result<Term> {
    if !v.is_var() {
        return fail("variant", "not a variable");
    }
    if avoid.iter().any(|t| !t.is_var()) {
        return fail("variant", "non-variable in avoidance list");
    }
    Ok(variant_names(avoid, v))
}

/// Check the term-instantiation invariants.
pub fn check_term_instn(origin: &str, theta: &[(Term, Term)]) -> Result<()> {
    for (i, (old, new)) in theta.iter().enumerate() {
        if !old.is_var() {
            return fail(origin, "non-variable in instantiation domain");
        }
        if old.ty() != new.ty() {
            return fail(origin, "instantiation changes the type of a variable");
        }
        if theta[..i].iter().any(|(o, _)| o == old) {
            return fail(origin, "repeated variable in instantiation domain");
        }
    }
    Ok(())
}

pub(crate) fn vsubst(theta: &[(Term, Term)], t: &Term) -> Term {
    if theta.is_empty() || t.is_closed_hint() {
        return t.clone();
    }
    match t.kind() {
        TermKind::Var(_) => match theta.iter().find(|(old, _)| old == t) {
            Some((_, new)) => new.clone(),
            None => t.clone(),
        },
        TermKind::Const(_) => t.clone(),
        TermKind::Comb(f, x) => {
            let f2 = vsubst(theta, f);
            let x2 = vsubst(theta, x);
            if f2.ptr_eq(f) && x2.ptr_eq(x) {
                t.clone()
            } else {
                Term::comb_unchecked(f2, x2)
            }
        }
        TermKind::Abs(v, b) => {
            let live: Vec<(Term, Term)> = theta
                .iter()
                .filter(|(old, _)| old != v && var_free_in(old, b))
                .cloned()
                .collect();
            if live.is_empty() {
                return t.clone();
            }
            let b2 = vsubst(&live, b);
            if live.iter().any(|(_, new)| var_free_in(v, new)) {
                let v2 = variant_names(&free_vars(&b2), v);
                let mut renamed = live.clone();
                renamed.push((v.clone(), v2.clone()));
                Term::abs_unchecked(v2, vsubst(&renamed, b))
            } else {
                Term::abs_unchecked(v.clone(), b2)
            }
        }
    }
}

/// Capture-avoiding simultaneous substitution of terms for variables.
pub fn var_inst(theta: &[(Term, Term)], t: &Term) -> Result<Term> {
    check_term_instn("var_inst", theta)?;
    Ok(vsubst(theta, t))
}

pub(crate) fn inst_types(theta: &[(Type, Type)], t: &Term) -> Term {
    if theta.is_empty() {
        return t.clone();
    }
    match t.kind() {
        TermKind::Var(n) => {
            let ty = type_inst(theta, t.ty());
            if ty.ptr_eq(t.ty()) {
                t.clone()
            } else {
                mk_var_named(n.clone(), ty)
            }
        }
        TermKind::Const(n) => {
            let ty = type_inst(theta, t.ty());
            if ty.ptr_eq(t.ty()) {
                t.clone()
            } else {
                Term::const_named(n.clone(), ty)
            }
        }
        TermKind::Comb(f, x) => {
            let f2 = inst_types(theta, f);
            let x2 = inst_types(theta, x);
            if f2.ptr_eq(f) && x2.ptr_eq(x) {
                t.clone()
            } else {
                Term::comb_unchecked(f2, x2)
            }
        }
        TermKind::Abs(v, b) => {
            let v2 = inst_types(theta, v);
            let frees = free_vars(b);
            let clash = frees
                .iter()
                .any(|y| y != v && inst_types(theta, y) == v2);
            if clash {
                // Rename the binder apart from every variable of the body
                // before instantiating, so it cannot capture.
                let mut avoid = all_vars(b);
                avoid.push(v2.clone());
                let fresh = variant_names(&avoid, v);
                let b_renamed = vsubst(&[(v.clone(), fresh.clone())], b);
                let v3 = inst_types(theta, &fresh);
                Term::abs_unchecked(v3, inst_types(theta, &b_renamed))
            } else {
                let b2 = inst_types(theta, b);
                if v2.ptr_eq(v) && b2.ptr_eq(b) {
                    t.clone()
                } else {
                    Term::abs_unchecked(v2, b2)
                }
            }
        }
    }
}

/// Instantiate type variables throughout a term, renaming bound variables
/// that would otherwise capture.
pub fn tyvar_inst(theta: &[(Type, Type)], t: &Term) -> Result<Term> {
    types::check_type_instn("tyvar_inst", theta)?;
    Ok(inst_types(theta, t))
}

fn subst_in(theta: &[(Term, Term)], t: &Term) -> Term {
    if let Some((_, new)) = theta.iter().find(|(old, _)| alpha_eq(old, t)) {
        return new.clone();
    }
    match t.kind() {
        TermKind::Comb(f, x) => {
            let f2 = subst_in(theta, f);
            let x2 = subst_in(theta, x);
            if f2.ptr_eq(f) && x2.ptr_eq(x) {
                t.clone()
            } else {
                Term::comb_unchecked(f2, x2)
            }
        }
        TermKind::Abs(v, b) => {
            let live: Vec<(Term, Term)> = theta
                .iter()
                .filter(|(old, _)| !var_free_in(v, old) && term_free_in(old, b))
                .cloned()
                .collect();
            if live.is_empty() {
                return t.clone();
            }
            if live.iter().any(|(_, new)| var_free_in(v, new)) {
                let mut avoid = free_vars(b);
                for (old, new) in &live {
                    avoid.extend(free_vars(old));
                    avoid.extend(free_vars(new));
                }
                let v2 = variant_names(&avoid, v);
                let b2 = vsubst(&[(v.clone(), v2.clone())], b);
                Term::abs_unchecked(v2, subst_in(&live, &b2))
            } else {
                Term::abs_unchecked(v.clone(), subst_in(&live, b))
            }
        }
        _ => t.clone(),
    }
}

/// Replace free occurrences (modulo alpha) of each old subterm by the
/// corresponding new term, renaming binders to avoid capture.
pub fn subst(theta: &[(Term, Term)], t: &Term) -> Result<Term> {
    for (old, new) in theta {
        if old.ty() != new.ty() {
            return fail("subst", "replacement changes the type of a subterm");
        }
    }
    Ok(subst_in(theta, t))
}

/// Rename the bound variable of an abstraction.
pub fn rename_bvar(name: &str, t: &Term) -> Result<Term> {
    let (v, b) = match t.kind() {
        TermKind::Abs(v, b) => (v, b),
        _ => return fail("rename_bvar", "not an abstraction"),
    };
    let v2 = mk_var(name, v.ty().clone());
    if v2 == *v {
        return Ok(t.clone());
    }
    if var_free_in(&v2, b) {
        return fail("rename_bvar", "new name would capture a free variable");
    }
    Ok(Term::abs_unchecked(v2.clone(), vsubst(&[(v.clone(), v2)], b)))
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            TermKind::Var(n) => write!(f, "{}", n),
            TermKind::Const(n) => write!(f, "`{}`", n),
            TermKind::Comb(a, b) => write!(f, "({:?} {:?})", a, b),
            TermKind::Abs(v, b) => write!(f, "(\\{}:{:?}. {:?})", v.name().unwrap_or("?"), v.ty(), b),
        }
    }
}
