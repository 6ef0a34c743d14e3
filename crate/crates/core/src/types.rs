//! HOL types: type variables and type-constant applications.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{fail, Result};

/// Interned-ish name shared between terms and types.
pub type Name = Arc<str>;

pub const BOOL: &str = "bool";
pub const FUN: &str = "fun";
pub const IND: &str = "ind";
pub const PROD: &str = "prod";
pub const NAT: &str = "nat";

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Type(Arc<TypeKind>);

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeKind {
    Var(Name),
    Comp(Name, Vec<Type>),
}

/// Type instantiation: old type variable to new type, old-to-new order.
pub type TypeInstn = Vec<(Type, Type)>;

impl Type {
    pub fn kind(&self) -> &TypeKind {
        &self.0
    }

    pub fn ptr_eq(&self, other: &Type) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Type-constant application without registry checks. Callers inside
    /// the crate are responsible for the arity invariant.
    pub(crate) fn comp(name: &str, args: Vec<Type>) -> Type {
        Type(Arc::new(TypeKind::Comp(Name::from(name), args)))
    }

    pub(crate) fn comp_named(name: Name, args: Vec<Type>) -> Type {
        Type(Arc::new(TypeKind::Comp(name, args)))
    }

    pub fn is_var(&self) -> bool {
        matches!(*self.0, TypeKind::Var(_))
    }

    pub fn is_comp(&self) -> bool {
        matches!(*self.0, TypeKind::Comp(..))
    }

    pub fn is_fun(&self) -> bool {
        matches!(&*self.0, TypeKind::Comp(n, _) if &**n == FUN)
    }

    pub fn is_bool(&self) -> bool {
        matches!(&*self.0, TypeKind::Comp(n, a) if &**n == BOOL && a.is_empty())
    }

    /// Domain and range of a function type.
    pub fn dest_fun(&self) -> Option<(&Type, &Type)> {
        match &*self.0 {
            TypeKind::Comp(n, args) if &**n == FUN && args.len() == 2 => Some((&args[0], &args[1])),
            _ => None,
        }
    }

    pub fn var_name(&self) -> Option<&str> {
        match &*self.0 {
            TypeKind::Var(n) => Some(n),
            _ => None,
        }
    }
}

pub fn mk_var_type(name: &str) -> Type {
    Type(Arc::new(TypeKind::Var(Name::from(name))))
}

pub fn dest_var_type(ty: &Type) -> Result<&str> {
    match ty.kind() {
        TypeKind::Var(n) => Ok(n),
        _ => fail("dest_var_type", "not a type variable"),
    }
}

pub fn dest_comp_type(ty: &Type) -> Result<(&str, &[Type])> {
    match ty.kind() {
        TypeKind::Comp(n, args) => Ok((n, args)),
        _ => fail("dest_comp_type", "not a compound type"),
    }
}

pub fn is_var_type(ty: &Type) -> bool {
    ty.is_var()
}

pub fn is_comp_type(ty: &Type) -> bool {
    ty.is_comp()
}

pub fn bool_ty() -> Type {
    Type::comp(BOOL, Vec::new())
}

/// `bool` and `fun` are always declared, so the function-type
/// constructor needs no registry.
pub fn mk_fun_type(dom: Type, ran: Type) -> Type {
    Type::comp(FUN, alloc::vec![dom, ran])
}

pub fn dest_fun_type(ty: &Type) -> Result<(Type, Type)> {
    match ty.dest_fun() {
        Some((d, r)) => Ok((d.clone(), r.clone())),
        None => fail("dest_fun_type", "not a function type"),
    }
}

pub fn a_ty() -> Type {
    mk_var_type("a")
}

pub fn b_ty() -> Type {
    mk_var_type("b")
}

/// Type variables of a type, first-occurrence order.
pub fn type_tyvars(ty: &Type) -> Vec<Type> {
    let mut acc = Vec::new();
    collect_tyvars(ty, &mut acc);
    acc
}

pub(crate) fn collect_tyvars(ty: &Type, acc: &mut Vec<Type>) {
    match ty.kind() {
        TypeKind::Var(_) => {
            if !acc.contains(ty) {
                acc.push(ty.clone());
            }
        }
        TypeKind::Comp(_, args) => {
            for a in args {
                collect_tyvars(a, acc);
            }
        }
    }
}

pub fn type_occurs_in(tyvar: &Type, ty: &Type) -> bool {
    match ty.kind() {
        TypeKind::Var(_) => tyvar == ty,
        TypeKind::Comp(_, args) => args.iter().any(|a| type_occurs_in(tyvar, a)),
    }
}

/// Check the instantiation-list invariants: type-variable domain, no
/// repeated domain entries.
pub fn check_type_instn(origin: &str, theta: &[(Type, Type)]) -> Result<()> {
    for (i, (old, _)) in theta.iter().enumerate() {
        if !old.is_var() {
            return fail(origin, "non-type-variable in instantiation domain");
        }
        if theta[..i].iter().any(|(o, _)| o == old) {
            return fail(origin, "repeated type variable in instantiation domain");
        }
    }
    Ok(())
}

/// Substitute type variables. Returns a pointer-identical result when
/// nothing changes.
pub fn type_inst(theta: &[(Type, Type)], ty: &Type) -> Type {
    if theta.is_empty() {
        return ty.clone();
    }
    match ty.kind() {
        TypeKind::Var(_) => match theta.iter().find(|(old, _)| old == ty) {
            Some((_, new)) => new.clone(),
            None => ty.clone(),
        },
        TypeKind::Comp(n, args) => {
            let mut changed = false;
            let new_args: Vec<Type> = args
                .iter()
                .map(|a| {
                    let b = type_inst(theta, a);
                    if !b.ptr_eq(a) {
                        changed = true;
                    }
                    b
                })
                .collect();
            if changed {
                Type::comp_named(n.clone(), new_args)
            } else {
                ty.clone()
            }
        }
    }
}

/// Find `theta` with `type_inst(theta, pattern) == ty`, extending `theta`.
pub fn type_match(pattern: &Type, ty: &Type, theta: &mut Vec<(Type, Type)>) -> bool {
    match (pattern.kind(), ty.kind()) {
        (TypeKind::Var(_), _) => match theta.iter().find(|(old, _)| old == pattern) {
            Some((_, bound)) => bound == ty,
            None => {
                theta.push((pattern.clone(), ty.clone()));
                true
            }
        },
        (TypeKind::Comp(n1, a1), TypeKind::Comp(n2, a2)) => {
            n1 == n2 && a1.len() == a2.len() && a1.iter().zip(a2).all(|(p, t)| type_match(p, t, theta))
        }
        _ => false,
    }
}

pub fn is_type_instance(generic: &Type, ty: &Type) -> bool {
    type_match(generic, ty, &mut Vec::new())
}

/// Debug rendering; the real printer lives in `printer`.
impl fmt::Debug for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            TypeKind::Var(n) => write!(f, "'{}", n),
            TypeKind::Comp(n, args) if args.is_empty() => write!(f, "{}", n),
            TypeKind::Comp(n, args) => {
                write!(f, "(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{:?}", a)?;
                }
                write!(f, "){}", n)
            }
        }
    }
}
