//! Theory state: declaration registries, definitional extension and the
//! query commands.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::Theorem;
use crate::error::{fail, Result};
use crate::syntax;
use crate::term::{
    alpha_eq, free_vars, mk_comb, mk_var, term_tyvars, var_inst, Term, TermKind,
};
use crate::types::{
    bool_ty, is_type_instance, mk_fun_type, mk_var_type, type_tyvars, Name, Type, TypeKind, BOOL,
    FUN, IND,
};

/// Insertion-ordered name registry.
#[derive(Clone)]
struct Registry<V> {
    entries: Vec<(Name, V)>,
    index: BTreeMap<Name, usize>,
}

impl<V> Registry<V> {
    fn new() -> Self {
        Registry {
            entries: Vec::new(),
            index: BTreeMap::new(),
        }
    }

    fn get(&self, name: &str) -> Option<&V> {
        self.index.get(name).map(|&i| &self.entries[i].1)
    }

    fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    fn insert(&mut self, name: &str, v: V) {
        let n = Name::from(name);
        self.index.insert(n.clone(), self.entries.len());
        self.entries.push((n, v));
    }

    fn iter(&self) -> impl Iterator<Item = (&str, &V)> {
        self.entries.iter().map(|(n, v)| (&**n, v))
    }
}

/// A recorded constant specification.
#[derive(Clone, Debug)]
pub struct ConstSpec {
    pub names: Vec<String>,
    pub existence: Theorem,
    pub theorem: Theorem,
}

/// A recorded type constant definition.
#[derive(Clone, Debug)]
pub struct TyconstDef {
    pub name: String,
    pub predicate: Term,
    pub inhabitation: Theorem,
    pub theorem: Theorem,
}

/// The registries of one session. Extension is append-only.
#[derive(Clone)]
pub struct Theory {
    tyconsts: Registry<usize>,
    consts: Registry<Type>,
    axioms: Registry<Theorem>,
    const_defs: Registry<Theorem>,
    const_specs: Vec<ConstSpec>,
    spec_index: BTreeMap<Name, usize>,
    tyconst_defs: Registry<TyconstDef>,
    theorems: Registry<Theorem>,
}

impl Default for Theory {
    fn default() -> Self {
        Theory::bootstrap()
    }
}

impl Theory {
    /// The primitive starting point: `bool`, `fun`, `ind` and equality.
    pub fn bootstrap() -> Theory {
        let mut thy = Theory {
            tyconsts: Registry::new(),
            consts: Registry::new(),
            axioms: Registry::new(),
            const_defs: Registry::new(),
            const_specs: Vec::new(),
            spec_index: BTreeMap::new(),
            tyconst_defs: Registry::new(),
            theorems: Registry::new(),
        };
        thy.tyconsts.insert(BOOL, 0);
        thy.tyconsts.insert(FUN, 2);
        thy.tyconsts.insert(IND, 0);
        let a = mk_var_type("a");
        thy.consts.insert(
            syntax::EQ,
            mk_fun_type(a.clone(), mk_fun_type(a, bool_ty())),
        );
        thy
    }

    // -----------------------------------------------------------------------
    // Checked constructors

    /// Fails unless every type constant in `ty` is declared at its arity.
    pub fn check_type(&self, ty: &Type) -> Result<()> {
        match ty.kind() {
            TypeKind::Var(_) => Ok(()),
            TypeKind::Comp(n, args) => {
                match self.tyconsts.get(n) {
                    None => return fail("check_type", format!("undeclared type constant {}", n)),
                    Some(&k) if k != args.len() => {
                        return fail("check_type", format!("wrong arity for {}", n))
                    }
                    _ => {}
                }
                args.iter().try_for_each(|a| self.check_type(a))
            }
        }
    }

    pub fn mk_comp_type(&self, name: &str, args: &[Type]) -> Result<Type> {
        match self.tyconsts.get(name) {
            None => fail("mk_comp_type", format!("undeclared type constant {}", name)),
            Some(&k) if k != args.len() => fail(
                "mk_comp_type",
                format!("{} expects {} arguments, got {}", name, k, args.len()),
            ),
            _ => Ok(Type::comp(name, args.to_vec())),
        }
    }

    pub fn mk_const(&self, name: &str, ty: &Type) -> Result<Term> {
        let generic = match self.consts.get(name) {
            Some(g) => g,
            None => return fail("mk_const", format!("undeclared constant {}", name)),
        };
        if !is_type_instance(generic, ty) {
            return fail("mk_const", format!("type is not an instance of the generic type of {}", name));
        }
        if let Err(e) = self.check_type(ty) {
            return Err(e.reraise("mk_const"));
        }
        Ok(Term::const_unchecked(name, ty.clone()))
    }

    /// Constant at its generic type.
    pub fn mk_gconst(&self, name: &str) -> Result<Term> {
        match self.consts.get(name) {
            Some(g) => Ok(Term::const_unchecked(name, g.clone())),
            None => fail("mk_gconst", format!("undeclared constant {}", name)),
        }
    }

    pub fn is_type_constant(&self, name: &str) -> bool {
        self.tyconsts.contains(name)
    }

    pub fn is_constant(&self, name: &str) -> bool {
        self.consts.contains(name)
    }

    // -----------------------------------------------------------------------
    // Declarations

    pub fn declare_type_constant(&mut self, name: &str, arity: usize) -> Result<()> {
        if name.is_empty() {
            return fail("declare_type_constant", "empty name");
        }
        if self.tyconsts.contains(name) {
            return fail("declare_type_constant", format!("{} already declared", name));
        }
        self.tyconsts.insert(name, arity);
        Ok(())
    }

    pub fn declare_constant(&mut self, name: &str, ty: &Type) -> Result<()> {
        if name.is_empty() {
            return fail("declare_constant", "empty name");
        }
        if self.consts.contains(name) {
            return fail("declare_constant", format!("{} already declared", name));
        }
        if let Err(e) = self.check_type(ty) {
            return Err(e.reraise("declare_constant"));
        }
        self.consts.insert(name, ty.clone());
        Ok(())
    }

    // -----------------------------------------------------------------------
    // Definitional extension

    /// Define a fresh constant from `c = t` where `c` is a variable named
    /// after the new constant and `t` is closed.
    pub fn const_definition(&mut self, eq: &Term) -> Result<Theorem> {
        const ORIGIN: &str = "const_definition";
        let (v, rhs) = match syntax::dest_eq(eq) {
            Ok(x) => x,
            Err(_) => return fail(ORIGIN, "not an equation"),
        };
        let name = match v.kind() {
            TermKind::Var(n) => n.clone(),
            TermKind::Const(n) => {
                // A rerun after the constant exists: accept it if it matches
                // the recorded definition.
                if let Some(th) = self.const_defs.get(n) {
                    if alpha_eq(th.concl(), eq) {
                        return Ok(th.clone());
                    }
                }
                return fail(ORIGIN, format!("{} is already declared", n));
            }
            _ => return fail(ORIGIN, "left-hand side is not a variable"),
        };
        if !free_vars(&rhs).is_empty() {
            return fail(ORIGIN, "definition body has free variables");
        }
        let cty = v.ty().clone();
        let ctyvars = type_tyvars(&cty);
        if term_tyvars(&rhs).iter().any(|a| !ctyvars.contains(a)) {
            return fail(ORIGIN, "type variable of the body not in the constant's type");
        }
        if let Some(th) = self.const_defs.get(&name) {
            let c = Term::const_named(name.clone(), cty);
            let want = syntax::mk_eq(&c, &rhs)?;
            if alpha_eq(th.concl(), &want) {
                return Ok(th.clone());
            }
            return fail(ORIGIN, format!("conflicting redefinition of {}", name));
        }
        if self.consts.contains(&name) {
            return fail(ORIGIN, format!("{} is already declared", name));
        }
        if let Err(e) = self.check_type(&cty) {
            return Err(e.reraise(ORIGIN));
        }
        self.consts.insert(&name, cty.clone());
        let c = Term::const_named(name.clone(), cty);
        let th = Theorem::make(Vec::new(), syntax::mk_eq(&c, &rhs)?);
        self.const_defs.insert(&name, th.clone());
        Ok(th)
    }

    /// Introduce constants `names` satisfying the body of an existence
    /// theorem `|- ?x1 .. xn. P`.
    pub fn const_specification(&mut self, names: &[&str], th: &Theorem) -> Result<Theorem> {
        const ORIGIN: &str = "const_specification";
        if names.is_empty() {
            return fail(ORIGIN, "no constant names");
        }
        if !th.asms().is_empty() {
            return fail(ORIGIN, "existence theorem has assumptions");
        }
        if !free_vars(th.concl()).is_empty() {
            return fail(ORIGIN, "existence theorem has free variables");
        }
        // Rerun of a recorded specification.
        if let Some(&i) = self.spec_index.get(names[0]) {
            let spec = &self.const_specs[i];
            let same_names = spec.names.len() == names.len()
                && spec.names.iter().zip(names).all(|(a, b)| a == b);
            if same_names && alpha_eq(spec.existence.concl(), th.concl()) {
                return Ok(spec.theorem.clone());
            }
            return fail(ORIGIN, format!("conflicting respecification of {}", names[0]));
        }
        let mut vars = Vec::new();
        let mut body = th.concl().clone();
        for _ in names {
            match syntax::dest_exists(&body) {
                Ok((v, b)) => {
                    vars.push(v);
                    body = b;
                }
                Err(_) => return fail(ORIGIN, "not enough existential quantifiers"),
            }
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return fail(ORIGIN, "constant names must be nonempty and distinct");
            }
            if self.consts.contains(n) {
                return fail(ORIGIN, format!("{} is already declared", n));
            }
        }
        let ptyvars = term_tyvars(th.concl());
        for v in &vars {
            let vtv = type_tyvars(v.ty());
            if ptyvars.iter().any(|a| !vtv.contains(a)) {
                return fail(ORIGIN, "type variables of the predicate not covered by a constant type");
            }
        }
        let mut theta = Vec::new();
        for (n, v) in names.iter().zip(&vars) {
            self.consts.insert(n, v.ty().clone());
            theta.push((v.clone(), Term::const_unchecked(n, v.ty().clone())));
        }
        let concl = var_inst(&theta, &body)?;
        let out = Theorem::make(Vec::new(), concl);
        let idx = self.const_specs.len();
        self.const_specs.push(ConstSpec {
            names: names.iter().map(|s| String::from(*s)).collect(),
            existence: th.clone(),
            theorem: out.clone(),
        });
        for n in names {
            self.spec_index.insert(Name::from(*n), idx);
        }
        Ok(out)
    }

    /// Introduce a type constant in bijection with the nonempty subset of
    /// a representing type carved out by the closed predicate `pred`.
    ///
    /// Returns `|- ?rep. (!a1 a2. rep a1 = rep a2 ==> a1 = a2) /\
    /// (!r. P r <=> ?a. r = rep a)`. The type arguments are the type
    /// variables of `pred` sorted by name.
    pub fn tyconst_definition(&mut self, name: &str, pred: &Term, th: &Theorem) -> Result<Theorem> {
        const ORIGIN: &str = "tyconst_definition";
        if let Some(d) = self.tyconst_defs.get(name) {
            if alpha_eq(&d.predicate, pred) && alpha_eq(d.inhabitation.concl(), th.concl()) {
                return Ok(d.theorem.clone());
            }
            return fail(ORIGIN, format!("conflicting redefinition of {}", name));
        }
        if name.is_empty() || self.tyconsts.contains(name) {
            return fail(ORIGIN, format!("{} is already declared", name));
        }
        if !free_vars(pred).is_empty() {
            return fail(ORIGIN, "predicate has free variables");
        }
        let rep_ty = match pred.ty().dest_fun() {
            Some((d, r)) if r.is_bool() => d.clone(),
            _ => return fail(ORIGIN, "predicate is not of type ty -> bool"),
        };
        if !th.asms().is_empty() {
            return fail(ORIGIN, "inhabitation theorem has assumptions");
        }
        let (x, body) = match syntax::dest_exists(th.concl()) {
            Ok(p) => p,
            Err(_) => return fail(ORIGIN, "inhabitation theorem is not an existential"),
        };
        let px = mk_comb(pred, &x)?;
        if !alpha_eq(&body, &px) {
            return fail(ORIGIN, "inhabitation theorem does not match the predicate");
        }
        let mut tyvars = term_tyvars(pred);
        tyvars.sort_by(|a, b| a.var_name().cmp(&b.var_name()));
        // Build the result before touching the registries so a failure
        // leaves the theory unchanged.
        let new_ty = Type::comp(name, tyvars.clone());
        let rep = mk_var("rep", mk_fun_type(new_ty.clone(), rep_ty.clone()));
        let a1 = mk_var("a1", new_ty.clone());
        let a2 = mk_var("a2", new_ty.clone());
        let a = mk_var("a", new_ty.clone());
        let r = mk_var("r", rep_ty);
        let mut probe = self.clone();
        probe.tyconsts.insert(name, tyvars.len());
        let thy = &probe;
        let rep_a1 = mk_comb(&rep, &a1)?;
        let rep_a2 = mk_comb(&rep, &a2)?;
        let inj = syntax::mk_imp(thy, &syntax::mk_eq(&rep_a1, &rep_a2)?, &syntax::mk_eq(&a1, &a2)?)?;
        let inj = syntax::list_mk_forall(thy, &[a1, a2], &inj)?;
        let rep_a = mk_comb(&rep, &a)?;
        let onto = syntax::mk_exists(thy, &a, &syntax::mk_eq(&r, &rep_a)?)?;
        let onto = syntax::mk_iff(&mk_comb(pred, &r)?, &onto)?;
        let onto = syntax::mk_forall(thy, &r, &onto)?;
        let concl = syntax::mk_exists(thy, &rep, &syntax::mk_conj(thy, &inj, &onto)?)
            .map_err(|e| e.reraise(ORIGIN))?;
        self.tyconsts.insert(name, tyvars.len());
        let out = Theorem::make(Vec::new(), concl);
        self.tyconst_defs.insert(
            name,
            TyconstDef {
                name: String::from(name),
                predicate: pred.clone(),
                inhabitation: th.clone(),
                theorem: out.clone(),
            },
        );
        Ok(out)
    }

    /// Assert an axiom. Reasserting the same statement under the same
    /// label returns the recorded theorem.
    pub fn new_axiom(&mut self, label: &str, t: &Term) -> Result<Theorem> {
        const ORIGIN: &str = "new_axiom";
        if !t.ty().is_bool() {
            return fail(ORIGIN, "axiom is not boolean");
        }
        if let Some(th) = self.axioms.get(label) {
            if alpha_eq(th.concl(), t) {
                return Ok(th.clone());
            }
            return fail(ORIGIN, format!("conflicting axiom {}", label));
        }
        let th = Theorem::make(Vec::new(), t.clone());
        self.axioms.insert(label, th.clone());
        Ok(th)
    }

    /// Record a derived theorem under a label.
    pub fn save_thm(&mut self, label: &str, th: &Theorem) -> Result<Theorem> {
        if let Some(old) = self.theorems.get(label) {
            if super::thm_alpha_eq(old, th) {
                return Ok(old.clone());
            }
            return fail("save_thm", format!("label {} already used", label));
        }
        self.theorems.insert(label, th.clone());
        Ok(th.clone())
    }

    // -----------------------------------------------------------------------
    // Queries

    pub fn get_type_arity(&self, name: &str) -> Result<usize> {
        match self.tyconsts.get(name) {
            Some(&k) => Ok(k),
            None => fail("get_type_arity", format!("no type constant {}", name)),
        }
    }

    pub fn get_all_type_constants(&self) -> Vec<(String, usize)> {
        self.tyconsts.iter().map(|(n, &k)| (String::from(n), k)).collect()
    }

    pub fn get_const_gtype(&self, name: &str) -> Result<Type> {
        match self.consts.get(name) {
            Some(t) => Ok(t.clone()),
            None => fail("get_const_gtype", format!("no constant {}", name)),
        }
    }

    pub fn get_all_constants(&self) -> Vec<(String, Type)> {
        self.consts.iter().map(|(n, t)| (String::from(n), t.clone())).collect()
    }

    pub fn get_axiom(&self, label: &str) -> Result<Theorem> {
        match self.axioms.get(label) {
            Some(th) => Ok(th.clone()),
            None => fail("get_axiom", format!("no axiom {}", label)),
        }
    }

    pub fn get_all_axioms(&self) -> Vec<(String, Theorem)> {
        self.axioms.iter().map(|(n, t)| (String::from(n), t.clone())).collect()
    }

    pub fn get_const_definition(&self, name: &str) -> Result<Theorem> {
        match self.const_defs.get(name) {
            Some(th) => Ok(th.clone()),
            None => fail("get_const_definition", format!("no definition of {}", name)),
        }
    }

    pub fn get_all_const_definitions(&self) -> Vec<(String, Theorem)> {
        self.const_defs.iter().map(|(n, t)| (String::from(n), t.clone())).collect()
    }

    pub fn get_const_specification(&self, name: &str) -> Result<ConstSpec> {
        match self.spec_index.get(name) {
            Some(&i) => Ok(self.const_specs[i].clone()),
            None => fail("get_const_specification", format!("no specification of {}", name)),
        }
    }

    pub fn get_all_const_specifications(&self) -> Vec<ConstSpec> {
        self.const_specs.clone()
    }

    pub fn get_tyconst_definition(&self, name: &str) -> Result<TyconstDef> {
        match self.tyconst_defs.get(name) {
            Some(d) => Ok(d.clone()),
            None => fail("get_tyconst_definition", format!("no definition of type {}", name)),
        }
    }

    pub fn get_all_tyconst_definitions(&self) -> Vec<TyconstDef> {
        self.tyconst_defs.iter().map(|(_, d)| d.clone()).collect()
    }

    pub fn get_theorem(&self, label: &str) -> Result<Theorem> {
        match self.theorems.get(label) {
            Some(th) => Ok(th.clone()),
            None => fail("get_theorem", format!("no theorem {}", label)),
        }
    }

    pub fn get_all_theorems(&self) -> Vec<(String, Theorem)> {
        self.theorems.iter().map(|(n, t)| (String::from(n), t.clone())).collect()
    }

    /// Find the registry label of a theorem value, if it is registered.
    /// Used by the proof recorder to reference theorems it did not derive.
    pub fn lookup_registered(&self, th: &Theorem) -> Option<(&'static str, String)> {
        let hit = |r: &Registry<Theorem>| {
            r.iter()
                .find(|(_, t)| t.ptr_eq(th))
                .map(|(n, _)| String::from(n))
        };
        if let Some(n) = hit(&self.axioms) {
            return Some(("get_axiom", n));
        }
        if let Some(n) = hit(&self.const_defs) {
            return Some(("get_const_definition", n));
        }
        if let Some(n) = hit(&self.theorems) {
            return Some(("get_theorem", n));
        }
        None
    }
}
