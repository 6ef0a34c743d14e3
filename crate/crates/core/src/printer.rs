//! Pretty-printer for types, terms and theorems.
//!
//! Output is accepted by the parser and reparses to the same term. The
//! printer first tries the plain form, then adds type annotations to
//! binders and first free occurrences, then annotates every variable and
//! every polymorphic constant outside operator position.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::fixity::{Assoc, Fixity, FixityTable, IFF};
use crate::kernel::{Theorem, Theory};
use crate::num::dest_nat;
use crate::parser::{is_symbolic, parse_term};
use crate::syntax::EQ;
use crate::term::{Term, TermKind};
use crate::types::{type_tyvars, Type, TypeKind};

// ---------------------------------------------------------------------------
// Types

#[derive(Clone, Copy, PartialEq)]
enum TyKind {
    Atom,
    Infix(u32, Assoc),
}

fn type_str(fix: &FixityTable, ty: &Type) -> (String, TyKind) {
    match ty.kind() {
        TypeKind::Var(n) => (format!("'{}", n), TyKind::Atom),
        TypeKind::Comp(n, args) => {
            if args.is_empty() {
                return (n.to_string(), TyKind::Atom);
            }
            if let (Some((sym, p, a)), 2) = (fix.get_type(n), args.len()) {
                let (l, lk) = type_str(fix, &args[0]);
                let (r, rk) = type_str(fix, &args[1]);
                let l_ok = match lk {
                    TyKind::Atom => true,
                    TyKind::Infix(q, a2) => q > p || (q == p && a2 == Assoc::Left),
                };
                let r_ok = match rk {
                    TyKind::Atom => true,
                    TyKind::Infix(q, _) => q > p || (q == p && a == Assoc::Right),
                };
                let l = if l_ok { l } else { format!("({})", l) };
                let r = if r_ok { r } else { format!("({})", r) };
                return (format!("{}{}{}", l, sym, r), TyKind::Infix(p, a));
            }
            if args.len() == 1 {
                let (s, k) = type_str(fix, &args[0]);
                let s = if k == TyKind::Atom { s } else { format!("({})", s) };
                return (format!("{} {}", s, n), TyKind::Atom);
            }
            let parts: Vec<String> = args.iter().map(|a| type_str(fix, a).0).collect();
            (format!("({}){}", parts.join(", "), n), TyKind::Atom)
        }
    }
}

/// Type in annotation syntax, without the leading colon.
pub fn type_to_string(fix: &FixityTable, ty: &Type) -> String {
    type_str(fix, ty).0
}

/// Type in standalone syntax: `:` followed by the type.
pub fn print_type(fix: &FixityTable, ty: &Type) -> String {
    format!(":{}", type_to_string(fix, ty))
}

// ---------------------------------------------------------------------------
// Terms

#[derive(Clone, Copy, PartialEq, Debug)]
enum Kind {
    Atom,
    App,
    Prefix,
    Postfix,
    Infix(u32, Assoc),
    Binder,
}

fn is_plain_word(s: &str) -> bool {
    let mut cs = s.chars();
    match cs.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    cs.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

fn is_symbolic_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(is_symbolic)
}

fn paren(s: String) -> String {
    format!("({})", s)
}

struct Printer<'a> {
    thy: &'a Theory,
    fix: &'a FixityTable,
    level: u8,
    bound: Vec<String>,
    seen_free: Vec<(String, Type)>,
}

impl<'a> Printer<'a> {
    fn shadowed(&self, name: &str) -> bool {
        self.bound.iter().any(|b| b == name)
    }

    fn ty(&self, ty: &Type) -> String {
        type_to_string(self.fix, ty)
    }

    fn var_name(&self, name: &str) -> String {
        if !is_plain_word(name) || self.thy.is_constant(name) || !self.fix.get(name).is_nonfix() {
            format!("%{}", name)
        } else {
            name.to_string()
        }
    }

    fn var(&mut self, name: &str, ty: &Type) -> String {
        let s = self.var_name(name);
        let annotate = if self.shadowed(name) {
            self.level >= 2
        } else {
            let key = (name.to_string(), ty.clone());
            let first = !self.seen_free.contains(&key);
            if first {
                self.seen_free.push(key);
            }
            self.level >= 2 || (self.level == 1 && first)
        };
        if annotate {
            format!("({}:{})", s, self.ty(ty))
        } else {
            s
        }
    }

    fn bvar(&self, v: &Term) -> String {
        let name = v.name().unwrap_or("");
        let s = self.var_name(name);
        if self.level >= 1 {
            format!("({}:{})", s, self.ty(v.ty()))
        } else {
            s
        }
    }

    /// A constant written by name in ordinary application position.
    fn constant(&self, name: &str, ty: &Type) -> String {
        let plain = is_plain_word(name) && self.fix.get(name).is_nonfix() && !self.shadowed(name);
        let s = if plain {
            name.to_string()
        } else {
            format!("${}", name)
        };
        let poly = self
            .thy
            .get_const_gtype(name)
            .map(|g| !type_tyvars(&g).is_empty())
            .unwrap_or(false);
        if self.level >= 2 && poly {
            format!("({}:{})", s, self.ty(ty))
        } else {
            s
        }
    }

    /// The operator fixity a constant head may be printed with.
    fn op_fixity(&self, head: &Term) -> Option<(String, Fixity)> {
        let name = match head.kind() {
            TermKind::Const(n) => n,
            _ => return None,
        };
        if name.as_ref() == EQ {
            if let Some((d, _)) = head.ty().dest_fun() {
                if d.is_bool() && self.fix.get(IFF).infix().is_some() && !self.shadowed(IFF) {
                    return Some((IFF.to_string(), self.fix.get(IFF)));
                }
            }
        }
        let f = self.fix.get(name);
        if f.is_nonfix() || self.shadowed(name) {
            return None;
        }
        Some((name.to_string(), f))
    }

    fn term(&mut self, t: &Term, tail: bool) -> (String, Kind) {
        if let Ok(n) = dest_nat(t) {
            return (n.to_string(), Kind::Atom);
        }
        match t.kind() {
            TermKind::Var(n) => (self.var(n, t.ty()), Kind::Atom),
            TermKind::Const(n) => (self.constant(n, t.ty()), Kind::Atom),
            TermKind::Abs(..) => self.binder(None, t),
            TermKind::Comb(f, x) => {
                let (head, args) = t.strip_comb();
                if let Some((op, fx)) = self.op_fixity(&head) {
                    match (fx, args.len()) {
                        (Fixity::Infix(p, a), 2) => return self.infix(&op, p, a, &args[0], &args[1], tail),
                        (Fixity::Prefix, 1) => {
                            let (s, k) = self.term(&args[0], tail);
                            let ok = matches!(k, Kind::Atom | Kind::App | Kind::Prefix | Kind::Postfix)
                                || (k == Kind::Binder && tail);
                            let s = if ok { s } else { paren(s) };
                            let tight = is_symbolic_name(&op)
                                && !s.chars().next().map(is_symbolic).unwrap_or(false);
                            let sep = if tight { "" } else { " " };
                            return (format!("{}{}{}", op, sep, s), Kind::Prefix);
                        }
                        (Fixity::Postfix, 1) => {
                            let (s, k) = self.term(&args[0], false);
                            let ok = matches!(k, Kind::Atom | Kind::App | Kind::Postfix);
                            let s = if ok { s } else { paren(s) };
                            return (format!("{} {}", s, op), Kind::Postfix);
                        }
                        (Fixity::Binder, 1) if args[0].is_abs() => {
                            return self.binder(Some(&op), &args[0]);
                        }
                        _ => {}
                    }
                }
                let (fs, fk) = self.term(f, false);
                let fs = if matches!(fk, Kind::Atom | Kind::App) { fs } else { paren(fs) };
                let (xs, xk) = self.term(x, false);
                let xs = if xk == Kind::Atom { xs } else { paren(xs) };
                (format!("{} {}", fs, xs), Kind::App)
            }
        }
    }

    fn infix(&mut self, op: &str, p: u32, a: Assoc, l: &Term, r: &Term, tail: bool) -> (String, Kind) {
        let (ls, lk) = self.term(l, false);
        let l_ok = match lk {
            Kind::Infix(q, a2) => q > p || (q == p && a2 == Assoc::Left),
            Kind::Binder => false,
            _ => true,
        };
        let (rs, rk) = self.term(r, tail);
        let r_ok = match rk {
            Kind::Infix(q, _) => q > p || (q == p && a == Assoc::Right),
            Kind::Binder => tail,
            _ => true,
        };
        let ls = if l_ok { ls } else { paren(ls) };
        let rs = if r_ok { rs } else { paren(rs) };
        let s = if op == "," {
            format!("{}, {}", ls, rs)
        } else {
            format!("{} {} {}", ls, op, rs)
        };
        (s, Kind::Infix(p, a))
    }

    /// Binder `op` (or lambda when `None`) applied to the abstraction `abs`,
    /// collapsing nested uses of the same binder.
    fn binder(&mut self, op: Option<&str>, abs: &Term) -> (String, Kind) {
        let mut vars = Vec::new();
        let mut body = abs.clone();
        loop {
            let (v, b) = match body.as_abs() {
                Some((v, b)) => (v.clone(), b.clone()),
                None => break,
            };
            vars.push(v);
            body = b;
            if op.is_none() {
                continue;
            }
            let (head, args) = body.strip_comb();
            let same = args.len() == 1
                && args[0].is_abs()
                && match (head.kind(), op) {
                    (TermKind::Const(n), Some(o)) => n.as_ref() == o && !self.shadowed(o),
                    _ => false,
                };
            // The binder constant must not be shadowed by the variables
            // collected so far.
            let shadow = vars.iter().any(|v| Some(v.name().unwrap_or("")) == op);
            if same && !shadow {
                body = args[0].clone();
            } else {
                break;
            }
        }
        let names: Vec<String> = vars.iter().map(|v| self.bvar(v)).collect();
        let depth = self.bound.len();
        for v in &vars {
            self.bound.push(v.name().unwrap_or("").to_string());
        }
        let (bs, _) = self.term(&body, true);
        self.bound.truncate(depth);
        let head = match op {
            None => "\\".to_string(),
            Some(o) if is_plain_word(o) => format!("{} ", o),
            Some(o) => o.to_string(),
        };
        let s = format!("{}{}. {}", head, names.join(" "), bs);
        (s, Kind::Binder)
    }
}

fn render(thy: &Theory, fix: &FixityTable, t: &Term, level: u8) -> String {
    let mut p = Printer {
        thy,
        fix,
        level,
        bound: Vec::new(),
        seen_free: Vec::new(),
    };
    p.term(t, true).0
}

/// Print a term so that it parses back to the same term.
pub fn print_term(thy: &Theory, fix: &FixityTable, t: &Term) -> String {
    let mut last = String::new();
    for level in 0..=2 {
        last = render(thy, fix, t, level);
        if let Ok(back) = parse_term(thy, fix, &last) {
            if &back == t {
                return last;
            }
        }
    }
    last
}

/// `a1, a2 |- c`.
pub fn print_thm(thy: &Theory, fix: &FixityTable, th: &Theorem) -> String {
    let asms: Vec<String> = th.asms().iter().map(|a| print_term(thy, fix, a)).collect();
    let c = print_term(thy, fix, th.concl());
    if asms.is_empty() {
        format!("|- {}", c)
    } else {
        format!("{} |- {}", asms.join(", "), c)
    }
}
