mod common;

use commonhol_core::platform::platform_session;
use commonhol_core::session::Session;
use commonhol_core::term::{
    alpha_eq, free_vars, mk_var, subst, type_of, tyvar_inst, var_inst, variant, Term, TermKind,
};
use commonhol_core::types::{is_type_instance, mk_var_type, Type};
use proptest::prelude::*;
use rand::seq::SliceRandom;

use common::Gen;

/// Nameless form: bound variables become the distance to their binder.
#[derive(Debug, PartialEq)]
enum Db {
    Free(String, Type),
    Bound(usize),
    Const(String, Type),
    Comb(Box<Db>, Box<Db>),
    Abs(Type, Box<Db>),
}

fn db(t: &Term, env: &mut Vec<(String, Type)>) -> Db {
    match t.kind() {
        TermKind::Var(n) => {
            let hit = env.iter().rev().position(|(m, ty)| **m == **n && ty == t.ty());
            match hit {
                Some(i) => Db::Bound(i),
                None => Db::Free(n.to_string(), t.ty().clone()),
            }
        }
        TermKind::Const(n) => Db::Const(n.to_string(), t.ty().clone()),
        TermKind::Comb(f, x) => Db::Comb(Box::new(db(f, env)), Box::new(db(x, env))),
        TermKind::Abs(v, b) => {
            env.push((v.name().unwrap().to_string(), v.ty().clone()));
            let body = db(b, env);
            env.pop();
            Db::Abs(v.ty().clone(), Box::new(body))
        }
    }
}

fn oracle_alpha(t1: &Term, t2: &Term) -> bool {
    db(t1, &mut Vec::new()) == db(t2, &mut Vec::new())
}

thread_local! {
    static SESSION: Session = platform_session().unwrap().0;
}

fn with_gen<R>(seed: u64, f: impl FnOnce(&mut Gen) -> R) -> R {
    SESSION.with(|s| f(&mut Gen::new(s, seed)))
}

fn random_term(g: &mut Gen) -> Term {
    let ty = g.ty(2);
    g.term(&ty, 4)
}

/// `t` with one free variable renamed, or `t` itself when it has none.
fn rename_free(g: &mut Gen, t: &Term) -> Term {
    match free_vars(t).choose(&mut g.rng) {
        Some(x) => {
            let y = g.fresh_var("r", x.ty().clone());
            var_inst(&[(x.clone(), y)], t).unwrap()
        }
        None => t.clone(),
    }
}

fn check_well_formed(s: &Session, t: &Term) {
    assert_eq!(&type_of(t), t.ty());
    match t.kind() {
        TermKind::Var(_) => {}
        TermKind::Const(n) => {
            let g = s.theory().get_const_gtype(n).unwrap();
            assert!(is_type_instance(&g, t.ty()), "{} at {:?}", n, t.ty());
        }
        TermKind::Comb(f, x) => {
            let (d, _) = f.ty().dest_fun().expect("operator of function type");
            assert_eq!(d, x.ty());
            check_well_formed(s, f);
            check_well_formed(s, x);
        }
        TermKind::Abs(v, b) => {
            assert!(v.is_var());
            check_well_formed(s, b);
        }
    }
}

const NAMES: [&str; 5] = ["x", "x'", "x''", "y", "z"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn alpha_eq_agrees_with_nameless_oracle(seed in any::<u64>()) {
        with_gen(seed, |g| {
            let t = random_term(g);
            let renamed = rename_free(g, &t);
            let others = [g.alpha_variant(&t), renamed.clone(), random_term(g), g.alpha_variant(&renamed)];
            for u in &others {
                assert_eq!(alpha_eq(&t, u), oracle_alpha(&t, u), "{:?} vs {:?}", t, u);
            }
            assert!(alpha_eq(&t, &others[0]));
        });
    }

    #[test]
    fn alpha_eq_is_an_equivalence(seed in any::<u64>()) {
        with_gen(seed, |g| {
            let t = random_term(g);
            let u = g.alpha_variant(&t);
            let v = g.alpha_variant(&u);
            let w = rename_free(g, &u);
            assert!(alpha_eq(&t, &t));
            assert_eq!(alpha_eq(&t, &w), alpha_eq(&w, &t));
            assert!(alpha_eq(&u, &t) && alpha_eq(&t, &v));
            if alpha_eq(&t, &w) {
                assert!(alpha_eq(&v, &w));
            }
        });
    }

    #[test]
    fn alpha_equal_terms_share_type_and_free_variables(seed in any::<u64>()) {
        with_gen(seed, |g| {
            let t = random_term(g);
            let u = g.alpha_variant(&t);
            assert_eq!(t.ty(), u.ty());
            assert_eq!(free_vars(&t), free_vars(&u));
        });
    }

    #[test]
    fn instantiation_respects_alpha(seed in any::<u64>()) {
        with_gen(seed, |g| {
            let t = g.bool_term();
            let u = g.alpha_variant(&t);
            let fv = free_vars(&t);
            if let Some(x) = fv.choose(&mut g.rng).cloned() {
                let r = g.term(x.ty(), 3);
                let theta = [(x, r)];
                let a = var_inst(&theta, &t).unwrap();
                let b = var_inst(&theta, &u).unwrap();
                assert!(alpha_eq(&a, &b), "{:?} vs {:?}", a, b);
                let a = subst(&theta, &t).unwrap();
                let b = subst(&theta, &u).unwrap();
                assert!(alpha_eq(&a, &b), "{:?} vs {:?}", a, b);
            }
            let ty = g.ty(2);
            let theta = [(mk_var_type("a"), ty)];
            let a = tyvar_inst(&theta, &t).unwrap();
            let b = tyvar_inst(&theta, &u).unwrap();
            assert!(alpha_eq(&a, &b), "{:?} vs {:?}", a, b);
        });
    }

    #[test]
    fn empty_instantiation_is_identity(seed in any::<u64>()) {
        with_gen(seed, |g| {
            let t = random_term(g);
            assert!(alpha_eq(&var_inst(&[], &t).unwrap(), &t));
            assert!(alpha_eq(&tyvar_inst(&[], &t).unwrap(), &t));
        });
    }

    #[test]
    fn constructed_terms_are_well_formed(seed in any::<u64>()) {
        with_gen(seed, |g| {
            let t = random_term(g);
            check_well_formed(g.s, &t);
            check_well_formed(g.s, &g.alpha_variant(&t));
        });
    }

    #[test]
    fn variant_avoids_its_list(picks in proptest::collection::vec(0usize..5, 0..6), which in 0usize..5) {
        let ty = mk_var_type("a");
        let avoid: Vec<Term> = picks.iter().map(|i| mk_var(NAMES[*i], ty.clone())).collect();
        let v = mk_var(NAMES[which], ty);
        let out = variant(&avoid, &v).unwrap();
        let avoided: Vec<&str> = avoid.iter().map(|a| a.name().unwrap()).collect();
        prop_assert!(!avoided.contains(&out.name().unwrap()));
        if !avoided.contains(&v.name().unwrap()) {
            prop_assert_eq!(out, v);
        }
    }
}
