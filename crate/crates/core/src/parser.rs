//! Lexer, parser and type inference for the concrete syntax.
//!
//! Name resolution for an unescaped identifier: the innermost binder of
//! that name, else a declared constant, else a free variable. `$name`
//! always denotes a constant and `%name` always a variable; both strip the
//! name's fixity. An annotated name `(c:ty)` denotes the constant only if
//! `ty` is an instance of its generic type.
//!
//! Unannotated free occurrences of one name share a type; an annotated
//! free occurrence takes exactly its annotation.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Failure, Result};
use crate::fixity::{Assoc, Fixity, FixityTable, IFF};
use crate::kernel::Theory;
use crate::num::NumeralConsts;
use crate::term::{mk_abs, mk_comb, mk_var, Term};
use crate::types::{bool_ty, is_type_instance, mk_var_type, Name, Type, TypeKind, FUN, NAT};

fn perr<T>(origin: &str, pos: usize, msg: impl core::fmt::Display) -> Result<T> {
    Err(Failure::normal(origin, format!("at position {}: {}", pos, msg)))
}

/// Byte position carried by a parse failure, if any.
pub fn error_position(f: &Failure) -> Option<usize> {
    let m = f.message().strip_prefix("at position ")?;
    let end = m.find(':')?;
    m[..end].parse().ok()
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Dollar(String),
    Percent(String),
    TyVar(String),
    Num(BigUint),
    LParen,
    RParen,
    Colon,
    Dot,
    Lambda,
    End,
}

fn is_word_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn is_reserved(c: char) -> bool {
    matches!(c, '(' | ')' | ',' | '.' | ':' | '$' | '%' | '\'' | '"')
}

/// Characters that may form symbolic names.
pub(crate) fn is_symbolic(c: char) -> bool {
    !c.is_whitespace() && !c.is_alphanumeric() && c != '_' && !is_reserved(c)
}

struct Lexed {
    toks: Vec<(Tok, usize)>,
}

fn lex(origin: &str, src: &str, symbols: &[&str]) -> Result<Lexed> {
    let mut toks = Vec::new();
    let bytes: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    let at = |i: usize| bytes.get(i).map(|&(p, _)| p).unwrap_or(src.len());
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let word = |mut j: usize| {
            while j < bytes.len() && is_word_char(bytes[j].1) {
                j += 1;
            }
            j
        };
        let symrun = |mut j: usize| {
            while j < bytes.len() && is_symbolic(bytes[j].1) {
                j += 1;
            }
            j
        };
        match c {
            '(' => {
                toks.push((Tok::LParen, pos));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, pos));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Name(",".to_string()), pos));
                i += 1;
            }
            '.' => {
                toks.push((Tok::Dot, pos));
                i += 1;
            }
            ':' => {
                toks.push((Tok::Colon, pos));
                i += 1;
            }
            '\'' => {
                let j = word(i + 1);
                if j == i + 1 {
                    return perr(origin, pos, "expected a type variable name after '");
                }
                toks.push((Tok::TyVar(src[at(i + 1)..at(j)].to_string()), pos));
                i = j;
            }
            '$' | '%' => {
                let start = i + 1;
                let j = match bytes.get(start) {
                    Some(&(_, d)) if is_word_char(d) => word(start),
                    Some(&(_, ',')) => start + 1,
                    Some(&(_, d)) if is_symbolic(d) => symrun(start),
                    _ => return perr(origin, pos, "expected a name after escape"),
                };
                let name = src[at(start)..at(j)].to_string();
                toks.push((if c == '$' { Tok::Dollar(name) } else { Tok::Percent(name) }, pos));
                i = j;
            }
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < bytes.len() && bytes[j].1.is_ascii_digit() {
                    j += 1;
                }
                if j < bytes.len() && is_word_char(bytes[j].1) {
                    return perr(origin, pos, "malformed numeral");
                }
                let n: BigUint = src[at(i)..at(j)].parse().map_err(|_| {
                    Failure::normal(origin, format!("at position {}: malformed numeral", pos))
                })?;
                toks.push((Tok::Num(n), pos));
                i = j;
            }
            c if is_word_start(c) => {
                let j = word(i);
                toks.push((Tok::Name(src[at(i)..at(j)].to_string()), pos));
                i = j;
            }
            c if is_symbolic(c) => {
                let rest = &src[pos..];
                let best = symbols
                    .iter()
                    .filter(|s| !s.is_empty() && rest.starts_with(**s))
                    .filter(|s| s.chars().all(is_symbolic))
                    .map(|s| s.len())
                    .max();
                let len = match best {
                    Some(l) => l,
                    None => at(symrun(i)) - pos,
                };
                let s = &src[pos..pos + len];
                if s == "\\" {
                    toks.push((Tok::Lambda, pos));
                } else {
                    toks.push((Tok::Name(s.to_string()), pos));
                }
                while i < bytes.len() && bytes[i].0 < pos + len {
                    i += 1;
                }
            }
            _ => return perr(origin, pos, format!("unexpected character {:?}", c)),
        }
    }
    toks.push((Tok::End, src.len()));
    Ok(Lexed { toks })
}

fn lexer_symbols<'a>(thy: &'a Theory, fix: &'a FixityTable) -> Vec<&'a str> {
    let _ = thy;
    let mut v = fix.symbols();
    v.push("\\");
    v
}

// ---------------------------------------------------------------------------
// Abstract syntax

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Esc {
    Plain,
    Dollar,
    Percent,
}

#[derive(Debug)]
struct BVar {
    name: String,
    ty: Option<Type>,
}

#[derive(Debug)]
enum Ast {
    Name { name: String, esc: Esc, pos: usize },
    Num { n: BigUint, pos: usize },
    App { f: Box<Ast>, x: Box<Ast>, pos: usize },
    Iff { l: Box<Ast>, r: Box<Ast>, pos: usize },
    Bind { binder: Option<(String, usize)>, var: BVar, body: Box<Ast>, pos: usize },
    Typed { t: Box<Ast>, ty: Type, pos: usize },
}

struct Parser<'a> {
    origin: &'static str,
    toks: Vec<(Tok, usize)>,
    i: usize,
    thy: &'a Theory,
    fix: &'a FixityTable,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> usize {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            perr(self.origin, self.pos(), format!("expected {}", what))
        }
    }

    fn fixity_of(&self, name: &str) -> Fixity {
        self.fix.get(name)
    }

    // -- types ------------------------------------------------------------

    fn parse_type(&mut self) -> Result<Type> {
        self.parse_type_expr(0)
    }

    fn type_infix(&self) -> Option<(String, u32, Assoc)> {
        match self.peek() {
            Tok::Name(s) => self
                .fix
                .type_by_symbol(s)
                .map(|(n, p, a)| (n.to_string(), p, a)),
            _ => None,
        }
    }

    fn parse_type_expr(&mut self, min: u32) -> Result<Type> {
        let mut lhs = self.parse_type_app()?;
        while let Some((name, p, a)) = self.type_infix() {
            if p < min {
                break;
            }
            let pos = self.pos();
            self.bump();
            let next = if a == Assoc::Left { p + 1 } else { p };
            let rhs = self.parse_type_expr(next)?;
            lhs = self.comp_type(&name, alloc::vec![lhs, rhs], pos)?;
        }
        Ok(lhs)
    }

    fn comp_type(&self, name: &str, args: Vec<Type>, pos: usize) -> Result<Type> {
        match self.thy.mk_comp_type(name, &args) {
            Ok(t) => Ok(t),
            Err(e) => perr(self.origin, pos, e.message()),
        }
    }

    fn postfix_type_name(&self) -> Option<String> {
        match self.peek() {
            Tok::Name(s)
                if self.thy.is_type_constant(s) && self.fix.type_by_symbol(s).is_none() =>
            {
                Some(s.clone())
            }
            _ => None,
        }
    }

    fn parse_type_app(&mut self) -> Result<Type> {
        let start = self.pos();
        let mut args = match self.bump() {
            Tok::TyVar(a) => alloc::vec![mk_var_type(&a)],
            Tok::Name(s) if self.fix.type_by_symbol(&s).is_none() => {
                alloc::vec![self.comp_type(&s, Vec::new(), start)?]
            }
            Tok::LParen => {
                let mut v = alloc::vec![self.parse_type()?];
                while *self.peek() == Tok::Name(",".to_string()) {
                    self.bump();
                    v.push(self.parse_type()?);
                }
                self.expect(Tok::RParen, "')' in type")?;
                v
            }
            _ => return perr(self.origin, start, "expected a type"),
        };
        loop {
            let name = match self.postfix_type_name() {
                Some(n) => n,
                None => break,
            };
            let pos = self.pos();
            self.bump();
            args = alloc::vec![self.comp_type(&name, args, pos)?];
        }
        if args.len() != 1 {
            return perr(self.origin, start, "type argument list without a type constant");
        }
        Ok(args.pop().unwrap())
    }

    // -- terms ------------------------------------------------------------

    fn infix_here(&self) -> Option<(String, u32, Assoc)> {
        match self.peek() {
            Tok::Name(s) => match self.fixity_of(s) {
                Fixity::Infix(p, a) => Some((s.clone(), p, a)),
                _ => None,
            },
            _ => None,
        }
    }

    fn parse_expr(&mut self, min: u32) -> Result<Ast> {
        let mut lhs = self.parse_prefix()?;
        while let Some((op, p, a)) = self.infix_here() {
            if p < min {
                break;
            }
            let pos = self.pos();
            self.bump();
            let next = if a == Assoc::Left { p + 1 } else { p };
            let rhs = self.parse_expr(next)?;
            lhs = if op == IFF {
                Ast::Iff {
                    l: Box::new(lhs),
                    r: Box::new(rhs),
                    pos,
                }
            } else {
                let f = Ast::Name {
                    name: op,
                    esc: Esc::Plain,
                    pos,
                };
                let f = Ast::App {
                    f: Box::new(f),
                    x: Box::new(lhs),
                    pos,
                };
                Ast::App {
                    f: Box::new(f),
                    x: Box::new(rhs),
                    pos,
                }
            };
        }
        Ok(lhs)
    }

    fn parse_prefix(&mut self) -> Result<Ast> {
        if let Tok::Name(s) = self.peek() {
            if self.fixity_of(s) == Fixity::Prefix {
                let name = s.clone();
                let pos = self.pos();
                self.bump();
                let x = self.parse_prefix()?;
                let f = Ast::Name {
                    name,
                    esc: Esc::Plain,
                    pos,
                };
                return Ok(Ast::App {
                    f: Box::new(f),
                    x: Box::new(x),
                    pos,
                });
            }
        }
        let mut t = self.parse_app()?;
        while let Tok::Name(s) = self.peek() {
            if self.fixity_of(s) != Fixity::Postfix {
                break;
            }
            let name = s.clone();
            let pos = self.pos();
            self.bump();
            let f = Ast::Name {
                name,
                esc: Esc::Plain,
                pos,
            };
            t = Ast::App {
                f: Box::new(f),
                x: Box::new(t),
                pos,
            };
        }
        Ok(t)
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Tok::Name(s) => matches!(self.fixity_of(s), Fixity::Nonfix | Fixity::Binder),
            Tok::Dollar(_) | Tok::Percent(_) | Tok::Num(_) | Tok::LParen | Tok::Lambda => true,
            _ => false,
        }
    }

    fn parse_app(&mut self) -> Result<Ast> {
        let mut f = self.parse_atom()?;
        while self.starts_atom() {
            let pos = self.pos();
            let x = self.parse_atom()?;
            f = Ast::App {
                f: Box::new(f),
                x: Box::new(x),
                pos,
            };
        }
        Ok(f)
    }

    fn parse_atom(&mut self) -> Result<Ast> {
        let pos = self.pos();
        match self.bump() {
            Tok::Name(s) => match self.fixity_of(&s) {
                Fixity::Nonfix => Ok(Ast::Name {
                    name: s,
                    esc: Esc::Plain,
                    pos,
                }),
                Fixity::Binder => self.parse_binder(Some((s, pos)), pos),
                _ => perr(self.origin, pos, format!("unexpected operator {}", s)),
            },
            Tok::Lambda => self.parse_binder(None, pos),
            Tok::Dollar(s) => Ok(Ast::Name {
                name: s,
                esc: Esc::Dollar,
                pos,
            }),
            Tok::Percent(s) => Ok(Ast::Name {
                name: s,
                esc: Esc::Percent,
                pos,
            }),
            Tok::Num(n) => Ok(Ast::Num { n, pos }),
            Tok::LParen => {
                let t = self.parse_expr(0)?;
                if *self.peek() == Tok::Colon {
                    let cpos = self.pos();
                    self.bump();
                    let ty = self.parse_type()?;
                    self.expect(Tok::RParen, "')' after type annotation")?;
                    return Ok(Ast::Typed {
                        t: Box::new(t),
                        ty,
                        pos: cpos,
                    });
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(t)
            }
            Tok::End => perr(self.origin, pos, "unexpected end of input"),
            t => perr(self.origin, pos, format!("unexpected token {:?}", t)),
        }
    }

    fn parse_bvar_name(&mut self) -> Result<Option<String>> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Name(s) => {
                if self.fixity_of(&s) != Fixity::Nonfix {
                    return perr(self.origin, pos, format!("operator {} cannot be bound without %", s));
                }
                self.bump();
                Ok(Some(s))
            }
            Tok::Percent(s) => {
                self.bump();
                Ok(Some(s))
            }
            _ => Ok(None),
        }
    }

    fn parse_binder(&mut self, binder: Option<(String, usize)>, pos: usize) -> Result<Ast> {
        let mut vars = Vec::new();
        loop {
            if let Some(name) = self.parse_bvar_name()? {
                let ty = if *self.peek() == Tok::Colon {
                    self.bump();
                    Some(self.parse_type()?)
                } else {
                    None
                };
                vars.push(BVar { name, ty });
                continue;
            }
            match self.peek() {
                Tok::LParen => {
                    self.bump();
                    let p = self.pos();
                    let name = match self.parse_bvar_name()? {
                        Some(v) => v,
                        None => return perr(self.origin, p, "expected a bound variable"),
                    };
                    self.expect(Tok::Colon, "':' in bound variable")?;
                    let ty = self.parse_type()?;
                    self.expect(Tok::RParen, "')' after bound variable")?;
                    vars.push(BVar {
                        name,
                        ty: Some(ty),
                    });
                }
                Tok::Dot => {
                    self.bump();
                    break;
                }
                _ => return perr(self.origin, self.pos(), "expected a bound variable or '.'"),
            }
        }
        if vars.is_empty() {
            return perr(self.origin, pos, "binder without variables");
        }
        let mut body = self.parse_expr(0)?;
        for var in vars.into_iter().rev() {
            body = Ast::Bind {
                binder: binder.clone(),
                var,
                body: Box::new(body),
                pos,
            };
        }
        Ok(body)
    }
}

// ---------------------------------------------------------------------------
// Type inference

#[derive(Clone, Debug)]
enum PTy {
    Meta(usize),
    Rigid(Name),
    Comp(Name, Vec<PTy>),
}

enum ETerm {
    Var(String, PTy),
    Const(String, PTy),
    Lit(Term),
    Comb(Box<ETerm>, Box<ETerm>),
    Abs(String, PTy, Box<ETerm>),
}

struct Infer<'a> {
    origin: &'static str,
    thy: &'a Theory,
    metas: Vec<Option<PTy>>,
    frees: BTreeMap<String, PTy>,
    numerals: Option<NumeralConsts>,
}

fn fun_pty(a: PTy, b: PTy) -> PTy {
    PTy::Comp(Name::from(FUN), alloc::vec![a, b])
}

fn rigid(ty: &Type) -> PTy {
    match ty.kind() {
        TypeKind::Var(n) => PTy::Rigid(n.clone()),
        TypeKind::Comp(n, args) => PTy::Comp(n.clone(), args.iter().map(rigid).collect()),
    }
}

impl<'a> Infer<'a> {
    fn fresh(&mut self) -> PTy {
        self.metas.push(None);
        PTy::Meta(self.metas.len() - 1)
    }

    fn instance(&mut self, ty: &Type, map: &mut Vec<(Name, PTy)>) -> PTy {
        match ty.kind() {
            TypeKind::Var(n) => {
                if let Some((_, p)) = map.iter().find(|(m, _)| m == n) {
                    return p.clone();
                }
                let p = self.fresh();
                map.push((n.clone(), p.clone()));
                p
            }
            TypeKind::Comp(n, args) => {
                PTy::Comp(n.clone(), args.iter().map(|a| self.instance(a, map)).collect())
            }
        }
    }

    fn shallow(&self, t: &PTy) -> PTy {
        let mut cur = t.clone();
        while let PTy::Meta(i) = cur {
            match &self.metas[i] {
                Some(b) => cur = b.clone(),
                None => break,
            }
        }
        cur
    }

    fn occurs(&self, i: usize, t: &PTy) -> bool {
        match self.shallow(t) {
            PTy::Meta(j) => i == j,
            PTy::Rigid(_) => false,
            PTy::Comp(_, args) => args.iter().any(|a| self.occurs(i, a)),
        }
    }

    fn unify(&mut self, a: &PTy, b: &PTy) -> bool {
        let a = self.shallow(a);
        let b = self.shallow(b);
        match (&a, &b) {
            (PTy::Meta(i), PTy::Meta(j)) if i == j => true,
            (PTy::Meta(i), _) => {
                if self.occurs(*i, &b) {
                    return false;
                }
                self.metas[*i] = Some(b.clone());
                true
            }
            (_, PTy::Meta(_)) => self.unify(&b, &a),
            (PTy::Rigid(x), PTy::Rigid(y)) => x == y,
            (PTy::Comp(n1, a1), PTy::Comp(n2, a2)) => {
                n1 == n2
                    && a1.len() == a2.len()
                    && a1.iter().zip(a2.iter()).all(|(x, y)| self.unify(x, y))
            }
            _ => false,
        }
    }

    /// Unify, leaving the substitution untouched on failure.
    fn try_unify(&mut self, a: &PTy, b: &PTy) -> bool {
        let saved = self.metas.clone();
        let ok = self.unify(a, b);
        if !ok {
            self.metas = saved;
        }
        ok
    }

    fn const_term(&mut self, name: &str) -> (ETerm, PTy) {
        let g = self.thy.get_const_gtype(name).expect("declared constant");
        let ty = self.instance(&g, &mut Vec::new());
        (ETerm::Const(name.to_string(), ty.clone()), ty)
    }

    fn free_var(&mut self, name: &str) -> (ETerm, PTy) {
        let ty = match self.frees.get(name) {
            Some(t) => t.clone(),
            None => {
                let t = self.fresh();
                self.frees.insert(name.to_string(), t.clone());
                t
            }
        };
        (ETerm::Var(name.to_string(), ty.clone()), ty)
    }

    fn lookup_bound(env: &[(String, PTy)], name: &str) -> Option<PTy> {
        env.iter().rev().find(|(n, _)| n == name).map(|(_, t)| t.clone())
    }

    fn name_term(&mut self, env: &[(String, PTy)], name: &str, esc: Esc, pos: usize) -> Result<(ETerm, PTy)> {
        match esc {
            Esc::Dollar => {
                if self.thy.is_constant(name) {
                    Ok(self.const_term(name))
                } else {
                    perr(self.origin, pos, format!("{} is not a constant", name))
                }
            }
            _ => {
                if let Some(t) = Self::lookup_bound(env, name) {
                    return Ok((ETerm::Var(name.to_string(), t.clone()), t));
                }
                if esc == Esc::Plain && self.thy.is_constant(name) {
                    return Ok(self.const_term(name));
                }
                Ok(self.free_var(name))
            }
        }
    }

    fn mismatch<T>(&self, pos: usize, what: &str) -> Result<T> {
        perr(self.origin, pos, format!("type mismatch in {}", what))
    }

    fn elab(&mut self, ast: &Ast, env: &mut Vec<(String, PTy)>) -> Result<(ETerm, PTy)> {
        match ast {
            Ast::Name { name, esc, pos } => self.name_term(env, name, *esc, *pos),
            Ast::Num { n, pos } => {
                if self.numerals.is_none() {
                    match NumeralConsts::new(self.thy) {
                        Ok(c) => self.numerals = Some(c),
                        Err(_) => return perr(self.origin, *pos, "numerals are not available"),
                    }
                }
                let t = self.numerals.as_ref().unwrap().mk(n);
                Ok((ETerm::Lit(t), PTy::Comp(Name::from(NAT), Vec::new())))
            }
            Ast::App { f, x, pos } => {
                let (ef, tf) = self.elab(f, env)?;
                let (ex, tx) = self.elab(x, env)?;
                let r = self.fresh();
                if !self.unify(&tf, &fun_pty(tx, r.clone())) {
                    return self.mismatch(*pos, "application");
                }
                Ok((ETerm::Comb(Box::new(ef), Box::new(ex)), r))
            }
            Ast::Iff { l, r, pos } => {
                let b = rigid(&bool_ty());
                let (el, tl) = self.elab(l, env)?;
                let (er, tr) = self.elab(r, env)?;
                if !self.unify(&tl, &b) || !self.unify(&tr, &b) {
                    return self.mismatch(*pos, "<=>");
                }
                let eq_ty = fun_pty(b.clone(), fun_pty(b.clone(), b.clone()));
                let eq = ETerm::Const(crate::syntax::EQ.to_string(), eq_ty);
                let app = ETerm::Comb(Box::new(eq), Box::new(el));
                Ok((ETerm::Comb(Box::new(app), Box::new(er)), b))
            }
            Ast::Bind {
                binder,
                var,
                body,
                pos,
            } => {
                let vty = match &var.ty {
                    Some(t) => rigid(t),
                    None => self.fresh(),
                };
                env.push((var.name.clone(), vty.clone()));
                let res = self.elab(body, env);
                env.pop();
                let (eb, tb) = res?;
                let abs = ETerm::Abs(var.name.clone(), vty.clone(), Box::new(eb));
                let abs_ty = fun_pty(vty, tb);
                match binder {
                    None => Ok((abs, abs_ty)),
                    Some((b, bpos)) => {
                        let (eb, tb) = self.name_term(env, b, Esc::Plain, *bpos)?;
                        let r = self.fresh();
                        if !self.unify(&tb, &fun_pty(abs_ty, r.clone())) {
                            return self.mismatch(*pos, "binder");
                        }
                        Ok((ETerm::Comb(Box::new(eb), Box::new(abs)), r))
                    }
                }
            }
            Ast::Typed { t, ty, pos } => {
                let want = rigid(ty);
                if let Ast::Name { name, esc, pos: npos } = &**t {
                    if *esc != Esc::Dollar {
                        // A binder of the same name but another type does
                        // not capture the occurrence.
                        let same_name = env.iter().rev().filter(|(n, _)| n == name);
                        for (_, bt) in same_name {
                            if self.try_unify(bt, &want) {
                                return Ok((ETerm::Var(name.clone(), bt.clone()), want));
                            }
                        }
                        if *esc == Esc::Plain {
                            if let Ok(g) = self.thy.get_const_gtype(name) {
                                if is_type_instance(&g, ty) {
                                    return Ok((ETerm::Const(name.clone(), want.clone()), want));
                                }
                            }
                        }
                        return Ok((ETerm::Var(name.clone(), want.clone()), want));
                    }
                    let (e, et) = self.name_term(env, name, *esc, *npos)?;
                    if !self.unify(&et, &want) {
                        return self.mismatch(*pos, "annotation");
                    }
                    return Ok((e, want));
                }
                let (e, et) = self.elab(t, env)?;
                if !self.unify(&et, &want) {
                    return self.mismatch(*pos, "annotation");
                }
                Ok((e, want))
            }
        }
    }
}

fn collect_rigid(ast: &Ast, acc: &mut Vec<String>) {
    fn ty_names(ty: &Type, acc: &mut Vec<String>) {
        for v in crate::types::type_tyvars(ty) {
            let n = v.var_name().unwrap().to_string();
            if !acc.contains(&n) {
                acc.push(n);
            }
        }
    }
    match ast {
        Ast::Name { .. } | Ast::Num { .. } => {}
        Ast::App { f, x, .. } => {
            collect_rigid(f, acc);
            collect_rigid(x, acc);
        }
        Ast::Iff { l, r, .. } => {
            collect_rigid(l, acc);
            collect_rigid(r, acc);
        }
        Ast::Bind { var, body, .. } => {
            if let Some(t) = &var.ty {
                ty_names(t, acc);
            }
            collect_rigid(body, acc);
        }
        Ast::Typed { t, ty, .. } => {
            ty_names(ty, acc);
            collect_rigid(t, acc);
        }
    }
}

/// Name for the `k`th generated type variable: a..z, a1..z1, ...
fn generated_name(k: usize) -> String {
    let letter = (b'a' + (k % 26) as u8) as char;
    if k < 26 {
        letter.to_string()
    } else {
        format!("{}{}", letter, k / 26)
    }
}

struct Resolver<'a, 'b> {
    inf: &'b Infer<'a>,
    names: BTreeMap<usize, Type>,
    taken: Vec<String>,
    counter: usize,
}

impl<'a, 'b> Resolver<'a, 'b> {
    fn ty(&mut self, t: &PTy) -> Type {
        match self.inf.shallow(t) {
            PTy::Meta(i) => {
                if let Some(ty) = self.names.get(&i) {
                    return ty.clone();
                }
                let name = loop {
                    let n = generated_name(self.counter);
                    self.counter += 1;
                    if !self.taken.contains(&n) {
                        break n;
                    }
                };
                let ty = mk_var_type(&name);
                self.names.insert(i, ty.clone());
                ty
            }
            PTy::Rigid(n) => mk_var_type(&n),
            PTy::Comp(n, args) => {
                let args = args.iter().map(|a| self.ty(a)).collect();
                crate::types::Type::comp_named(n, args)
            }
        }
    }

    fn term(&mut self, e: &ETerm) -> Result<Term> {
        let origin = self.inf.origin;
        match e {
            ETerm::Var(n, t) => Ok(mk_var(n, self.ty(t))),
            ETerm::Const(n, t) => {
                let ty = self.ty(t);
                self.inf.thy.mk_const(n, &ty).map_err(|e| e.reraise(origin))
            }
            ETerm::Lit(t) => Ok(t.clone()),
            ETerm::Comb(f, x) => {
                let f = self.term(f)?;
                let x = self.term(x)?;
                mk_comb(&f, &x).map_err(|e| e.reraise(origin))
            }
            ETerm::Abs(n, t, b) => {
                let v = mk_var(n, self.ty(t));
                let b = self.term(b)?;
                mk_abs(&v, &b).map_err(|e| e.reraise(origin))
            }
        }
    }
}

/// Parse a type. A leading `:` is optional.
pub fn parse_type(thy: &Theory, fix: &FixityTable, src: &str) -> Result<Type> {
    let symbols = lexer_symbols(thy, fix);
    let lexed = lex("parse_type", src, &symbols)?;
    let mut p = Parser {
        origin: "parse_type",
        toks: lexed.toks,
        i: 0,
        thy,
        fix,
    };
    if *p.peek() == Tok::Colon {
        p.bump();
    }
    let ty = p.parse_type()?;
    if *p.peek() != Tok::End {
        return perr("parse_type", p.pos(), "unexpected trailing input");
    }
    Ok(ty)
}

/// Parse a term, inferring the types of unannotated variables.
pub fn parse_term(thy: &Theory, fix: &FixityTable, src: &str) -> Result<Term> {
    const ORIGIN: &str = "parse_term";
    let symbols = lexer_symbols(thy, fix);
    let lexed = lex(ORIGIN, src, &symbols)?;
    let mut p = Parser {
        origin: ORIGIN,
        toks: lexed.toks,
        i: 0,
        thy,
        fix,
    };
    let ast = p.parse_expr(0)?;
    if *p.peek() != Tok::End {
        return perr(ORIGIN, p.pos(), "unexpected trailing input");
    }
    let mut inf = Infer {
        origin: ORIGIN,
        thy,
        metas: Vec::new(),
        frees: BTreeMap::new(),
        numerals: None,
    };
    let (e, _) = inf.elab(&ast, &mut Vec::new())?;
    let mut taken = Vec::new();
    collect_rigid(&ast, &mut taken);
    let mut r = Resolver {
        inf: &inf,
        names: BTreeMap::new(),
        taken,
        counter: 0,
    };
    r.term(&e)
}
