//! Seeded random types and well-typed terms over the standard theory.
#![allow(dead_code)]

use commonhol_core::num::mk_nat;
use commonhol_core::session::Session;
use commonhol_core::term::{dest_abs, mk_abs, mk_comb, mk_var, rename_bvar, Term, TermKind};
use commonhol_core::types::{bool_ty, mk_fun_type, mk_var_type, Type};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const FREE_NAMES: &[&str] = &["x", "y", "z", "f", "g", "p", "q", "n"];
pub const BOUND_NAMES: &[&str] = &["x", "y", "u", "v", "p", "a", "snd"];

pub struct Gen<'s> {
    pub s: &'s Session,
    pub rng: ChaCha8Rng,
    fresh: usize,
    bound: Vec<Term>,
}

impl<'s> Gen<'s> {
    pub fn new(s: &'s Session, seed: u64) -> Self {
        Gen {
            s,
            rng: ChaCha8Rng::seed_from_u64(seed),
            fresh: 0,
            bound: Vec::new(),
        }
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn nat_ty(&self) -> Type {
        self.s.theory().mk_comp_type("nat", &[]).unwrap()
    }

    pub fn prod_ty(&self, a: Type, b: Type) -> Type {
        self.s.theory().mk_comp_type("prod", &[a, b]).unwrap()
    }

    pub fn ty(&mut self, depth: u32) -> Type {
        if depth == 0 || self.chance(0.45) {
            return match self.rng.gen_range(0..4) {
                0 => bool_ty(),
                1 => self.nat_ty(),
                2 => mk_var_type("a"),
                _ => mk_var_type("b"),
            };
        }
        let a = self.ty(depth - 1);
        let b = self.ty(depth - 1);
        if self.chance(0.6) {
            mk_fun_type(a, b)
        } else {
            self.prod_ty(a, b)
        }
    }

    pub fn small_ty(&mut self) -> Type {
        self.ty(1)
    }

    /// A variable whose name is used nowhere else in this generator.
    pub fn fresh_var(&mut self, prefix: &str, ty: Type) -> Term {
        self.fresh += 1;
        mk_var(&format!("{}_{}", prefix, self.fresh), ty)
    }

    pub fn free_var(&mut self, ty: Type) -> Term {
        let name = *FREE_NAMES.choose(&mut self.rng).unwrap();
        mk_var(name, ty)
    }

    pub fn bool_term(&mut self) -> Term {
        self.term(&bool_ty(), 3)
    }

    fn constant(&self, name: &str, ty: Type) -> Term {
        self.s.theory().mk_const(name, &ty).unwrap()
    }

    fn app(&self, f: &Term, args: &[&Term]) -> Term {
        let mut t = f.clone();
        for a in args {
            t = mk_comb(&t, a).unwrap();
        }
        t
    }

    fn leaf(&mut self, ty: &Type) -> Term {
        let bound: Vec<Term> = self.bound.iter().filter(|v| v.ty() == ty).cloned().collect();
        if !bound.is_empty() && self.chance(0.6) {
            return bound.choose(&mut self.rng).unwrap().clone();
        }
        if self.chance(0.3) {
            if ty.is_bool() {
                let name = if self.chance(0.5) { "true" } else { "false" };
                return self.constant(name, bool_ty());
            }
            if *ty == self.nat_ty() {
                let n = if self.chance(0.7) {
                    self.rng.gen_range(0u64..20)
                } else {
                    self.rng.gen()
                };
                return mk_nat(&self.s.theory(), &BigUint::from(n)).unwrap();
            }
        }
        self.free_var(ty.clone())
    }

    fn bind(&mut self, ty: Type) -> Term {
        let name = *BOUND_NAMES.choose(&mut self.rng).unwrap();
        mk_var(name, ty)
    }

    /// `\v. body` with `v` drawn from the bound-name pool.
    pub fn abs(&mut self, dom: Type, ran: &Type, depth: u32) -> Term {
        let v = self.bind(dom);
        self.bound.push(v.clone());
        let body = self.term(ran, depth);
        self.bound.pop();
        mk_abs(&v, &body).unwrap()
    }

    fn binder(&mut self, name: &str, dom: Type, ran: &Type, depth: u32) -> Term {
        let abs = self.abs(dom.clone(), ran, depth);
        let c = self.constant(name, mk_fun_type(mk_fun_type(dom, ran.clone()), ran.clone()));
        self.app(&c, &[&abs])
    }

    fn binop(&mut self, name: &str, arg: Type, res: Type, depth: u32) -> Term {
        let l = self.term(&arg, depth);
        let r = self.term(&arg, depth);
        let c = self.constant(name, mk_fun_type(arg.clone(), mk_fun_type(arg, res)));
        self.app(&c, &[&l, &r])
    }

    /// A well-typed term of type `ty`.
    pub fn term(&mut self, ty: &Type, depth: u32) -> Term {
        if depth == 0 || self.chance(0.2) {
            return self.leaf(ty);
        }
        let d = depth - 1;
        let nat = self.nat_ty();
        if ty.is_bool() && self.chance(0.8) {
            return match self.rng.gen_range(0..11) {
                0 => self.binop("/\\", bool_ty(), bool_ty(), d),
                1 => self.binop("\\/", bool_ty(), bool_ty(), d),
                2 => self.binop("==>", bool_ty(), bool_ty(), d),
                3 => {
                    let p = self.term(&bool_ty(), d);
                    let c = self.constant("~", mk_fun_type(bool_ty(), bool_ty()));
                    self.app(&c, &[&p])
                }
                4 => {
                    let a = self.small_ty();
                    self.binop("=", a, bool_ty(), d)
                }
                5 => {
                    let a = self.small_ty();
                    self.binder("!", a, &bool_ty(), d)
                }
                6 => {
                    let a = self.small_ty();
                    self.binder("?", a, &bool_ty(), d)
                }
                7 => {
                    let a = self.small_ty();
                    self.binder("?!", a, &bool_ty(), d)
                }
                8 => {
                    let op = *["<", "<=", ">", ">="].choose(&mut self.rng).unwrap();
                    self.binop(op, nat, bool_ty(), d)
                }
                9 => {
                    let n = self.term(&nat, d);
                    let c = self.constant("even", mk_fun_type(nat, bool_ty()));
                    self.app(&c, &[&n])
                }
                _ => self.generic(ty, d),
            };
        }
        if *ty == nat && self.chance(0.7) {
            return match self.rng.gen_range(0..4) {
                0 => {
                    let n = self.term(&nat, d);
                    let c = self.constant("suc", mk_fun_type(nat.clone(), nat));
                    self.app(&c, &[&n])
                }
                1 => self.binop("+", nat.clone(), nat, d),
                2 => self.binop("*", nat.clone(), nat, d),
                _ => self.binop("-", nat.clone(), nat, d),
            };
        }
        if let Some((a, b)) = ty.dest_fun() {
            if self.chance(0.6) {
                return self.abs(a.clone(), &b.clone(), d);
            }
        }
        if let Some((a, b)) = dest_prod(ty) {
            if self.chance(0.6) {
                let x = self.term(&a, d);
                let y = self.term(&b, d);
                let c = self.constant(",", mk_fun_type(a.clone(), mk_fun_type(b.clone(), ty.clone())));
                return self.app(&c, &[&x, &y]);
            }
        }
        self.generic(ty, d)
    }

    /// Choice, projections or an application with a random argument type.
    fn generic(&mut self, ty: &Type, d: u32) -> Term {
        match self.rng.gen_range(0..4) {
            0 => {
                let abs = self.abs(ty.clone(), &bool_ty(), d);
                let c = self.constant("@", mk_fun_type(mk_fun_type(ty.clone(), bool_ty()), ty.clone()));
                self.app(&c, &[&abs])
            }
            1 => {
                let other = self.small_ty();
                let pty = self.prod_ty(ty.clone(), other);
                let p = self.term(&pty, d);
                let c = self.constant("fst", mk_fun_type(pty, ty.clone()));
                self.app(&c, &[&p])
            }
            2 => {
                let other = self.small_ty();
                let pty = self.prod_ty(other, ty.clone());
                let p = self.term(&pty, d);
                let c = self.constant("snd", mk_fun_type(pty, ty.clone()));
                self.app(&c, &[&p])
            }
            _ => {
                let a = self.small_ty();
                let f = self.term(&mk_fun_type(a.clone(), ty.clone()), d);
                let x = self.term(&a, d);
                self.app(&f, &[&x])
            }
        }
    }

    /// A bool term mentioning `v` free, most of the time.
    pub fn body_with(&mut self, v: &Term) -> Term {
        self.bound.push(v.clone());
        let b = self.term(&bool_ty(), 3);
        self.bound.pop();
        b
    }

    /// Rename every bound variable of `t`. New names are taken from the
    /// usual pool when that causes no capture, otherwise made fresh.
    pub fn alpha_variant(&mut self, t: &Term) -> Term {
        match t.kind() {
            TermKind::Var(_) | TermKind::Const(_) => t.clone(),
            TermKind::Comb(f, x) => {
                let f2 = self.alpha_variant(f);
                let x2 = self.alpha_variant(x);
                mk_comb(&f2, &x2).unwrap()
            }
            TermKind::Abs(..) => {
                let (v, b) = dest_abs(t).unwrap();
                let t2 = mk_abs(&v, &self.alpha_variant(&b)).unwrap();
                let pick = *BOUND_NAMES.choose(&mut self.rng).unwrap();
                if let Ok(r) = rename_bvar(pick, &t2) {
                    if r != t2 {
                        return r;
                    }
                }
                self.fresh += 1;
                rename_bvar(&format!("w_{}", self.fresh), &t2).unwrap()
            }
        }
    }
}

pub fn dest_prod(ty: &Type) -> Option<(Type, Type)> {
    match commonhol_core::types::dest_comp_type(ty) {
        Ok(("prod", args)) => Some((args[0].clone(), args[1].clone())),
        _ => None,
    }
}
