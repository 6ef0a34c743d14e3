//! The standard theory: logical constants and their definitions, the four
//! logical axioms, the bundled derived theorems, pairs and naturals.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Failure, Result};
use crate::kernel::{Theorem, Theory};
use crate::num::{NAT_AXIOMS, NAT_CONSTS};
use crate::session::Session;
use crate::term::{dest_var, free_vars, mk_var, tyvar_inst, Term};
use crate::types::{bool_ty, Type, NAT};

/// Version of the platform this build implements.
pub const PLATFORM_VERSION: &str = "0.5";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    Declare,
    Define,
    Axiom,
    Derive,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::Declare => "declare",
            StepKind::Define => "define",
            StepKind::Axiom => "axiom",
            StepKind::Derive => "derive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ManifestStep {
    pub kind: StepKind,
    /// Constant, type constant or theorem label.
    pub name: String,
    /// Registry label of the resulting theorem, if the step yields one.
    pub label: Option<String>,
}

/// The ordered record of a platform build.
#[derive(Clone, Debug, Default)]
pub struct Manifest {
    pub steps: Vec<ManifestStep>,
}

impl Manifest {
    pub fn labels(&self, kind: StepKind) -> Vec<&str> {
        self.steps
            .iter()
            .filter(|s| s.kind == kind)
            .filter_map(|s| s.label.as_deref())
            .collect()
    }

    /// One line per step: kind, name and the printed theorem.
    pub fn report(&self, s: &Session) -> Vec<String> {
        let thy = s.theory();
        self.steps
            .iter()
            .map(|st| {
                let th = st.label.as_deref().and_then(|l| registered(&thy, st.kind, l));
                match th {
                    Some(th) => format!("{} {} {}", st.kind.as_str(), st.name, s.print_thm(&th)),
                    None => format!("{} {}", st.kind.as_str(), st.name),
                }
            })
            .collect()
    }
}

fn registered(thy: &Theory, kind: StepKind, label: &str) -> Option<Theorem> {
    match kind {
        StepKind::Axiom => thy.get_axiom(label).ok(),
        StepKind::Define => thy
            .get_const_definition(label)
            .ok()
            .or_else(|| thy.get_theorem(label).ok()),
        _ => thy.get_theorem(label).ok(),
    }
}

/// Names of the four logical axioms.
pub const LOGICAL_AXIOMS: &[&str] = &["eta_ax", "imp_antisym_ax", "select_ax", "infinity_ax"];

const DEFINITIONS: &[(&str, &str)] = &[
    ("true", "true = ((\\p:bool. p) = (\\p. p))"),
    ("/\\", "%/\\ = (\\p q. (\\f:bool->bool->bool. f p q) = (\\f. f true true))"),
    ("==>", "%==> = (\\p q. p /\\ q <=> p)"),
    ("!", "%! = (\\P:'a->bool. P = (\\x. true))"),
    ("?", "%? = (\\P:'a->bool. P ($@ P))"),
    ("\\/", "%\\/ = (\\p q. !r. (p ==> r) ==> (q ==> r) ==> r)"),
    ("false", "false = (!p. p)"),
    ("~", "%~ = (\\p. p ==> false)"),
    ("?!", "%?! = (\\P:'a->bool. $? P /\\ (!x y. P x /\\ P y ==> x = y))"),
];

const AXIOMS: &[(&str, &str)] = &[
    ("eta_ax", "!f:'a->'b. (\\x. f x) = f"),
    ("imp_antisym_ax", "!p q. (p ==> q) ==> (q ==> p) ==> (p <=> q)"),
    ("select_ax", "!(P:'a->bool) x. P x ==> P ($@ P)"),
    (
        "infinity_ax",
        "?f:ind->ind. (!x y. f x = f y ==> x = y) /\\ ~(!y. ?x. y = f x)",
    ),
];

/// Labels of the bundled derived theorems every build provides.
pub const TRUTH_THM: &str = "truth_thm";
pub const EXCLUDED_MIDDLE_THM: &str = "excluded_middle_thm";
pub const BOOL_CASES_THM: &str = "bool_cases_thm";

pub(crate) struct Builder<'a> {
    pub(crate) s: &'a Session,
    pub(crate) manifest: Manifest,
}

impl<'a> Builder<'a> {
    /// Parse a term; free `p`, `q` and `r` of unconstrained type are
    /// taken as propositions.
    pub(crate) fn tm(&self, src: &str) -> Result<Term> {
        let t = self.s.parse_term(&format!("({})", src))?;
        let mut theta: Vec<(Type, Type)> = Vec::new();
        for v in free_vars(&t) {
            let (name, ty) = dest_var(&v)?;
            if matches!(name, "p" | "q" | "r") && ty.is_var() && !theta.iter().any(|(a, _)| a == ty) {
                theta.push((ty.clone(), bool_ty()));
            }
        }
        if theta.is_empty() {
            Ok(t)
        } else {
            tyvar_inst(&theta, &t)
        }
    }

    pub(crate) fn ty(&self, src: &str) -> Result<Type> {
        self.s.parse_type(src)
    }

    pub(crate) fn var(&self, name: &str, ty: &str) -> Result<Term> {
        Ok(mk_var(name, self.ty(ty)?))
    }

    fn step(&mut self, kind: StepKind, name: &str, label: Option<&str>) {
        self.manifest.steps.push(ManifestStep {
            kind,
            name: name.to_string(),
            label: label.map(|l| l.to_string()),
        });
    }

    pub(crate) fn declare_const(&mut self, name: &str, ty: &str) -> Result<()> {
        let ty = self.ty(ty)?;
        self.s.declare_constant(name, &ty)?;
        self.step(StepKind::Declare, name, None);
        Ok(())
    }

    pub(crate) fn declare_type(&mut self, name: &str, arity: usize) -> Result<()> {
        self.s.declare_type_constant(name, arity)?;
        self.step(StepKind::Declare, name, None);
        Ok(())
    }

    pub(crate) fn define(&mut self, name: &str, src: &str) -> Result<Theorem> {
        let th = self.s.const_definition(&self.tm(src)?)?;
        self.step(StepKind::Define, name, Some(name));
        Ok(th)
    }

    pub(crate) fn axiom(&mut self, label: &str, src: &str) -> Result<Theorem> {
        let th = self.s.new_axiom(label, &self.tm(src)?)?;
        self.step(StepKind::Axiom, label, Some(label));
        Ok(th)
    }

    pub(crate) fn derive(&mut self, label: &str, th: &Theorem) -> Result<Theorem> {
        let th = self.s.save_thm(label, th)?;
        self.step(StepKind::Derive, label, Some(label));
        Ok(th)
    }

    /// A theorem produced by a definitional command other than
    /// `const_definition`, saved under a label.
    pub(crate) fn defined(&mut self, name: &str, label: &str, th: &Theorem) -> Result<Theorem> {
        let th = self.s.save_thm(label, th)?;
        self.step(StepKind::Define, name, Some(label));
        Ok(th)
    }

    // Short forms of the rules used by the proofs below.

    pub(crate) fn a(&self, src: &str) -> Result<Theorem> {
        self.s.assume_rule(&self.tm(src)?)
    }

    pub(crate) fn mp(&self, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
        self.s.mp_rule(th1, th2)
    }

    pub(crate) fn disch(&self, src: &str, th: &Theorem) -> Result<Theorem> {
        self.s.disch_rule(&self.tm(src)?, th)
    }

    pub(crate) fn da(&self, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
        self.s.deduct_antisym_rule(th1, th2)
    }

    pub(crate) fn ne(&self, th: &Theorem) -> Result<Theorem> {
        self.s.not_elim_rule(th)
    }

    pub(crate) fn ni(&self, th: &Theorem) -> Result<Theorem> {
        self.s.not_intro_rule(th)
    }

    pub(crate) fn c1(&self, th: &Theorem) -> Result<Theorem> {
        self.s.conjunct1_rule(th)
    }

    pub(crate) fn c2(&self, th: &Theorem) -> Result<Theorem> {
        self.s.conjunct2_rule(th)
    }

    pub(crate) fn conj(&self, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
        self.s.conj_rule(th1, th2)
    }

    pub(crate) fn d1(&self, th: &Theorem, q: &str) -> Result<Theorem> {
        self.s.disj1_rule(th, &self.tm(q)?)
    }

    pub(crate) fn d2(&self, p: &str, th: &Theorem) -> Result<Theorem> {
        self.s.disj2_rule(&self.tm(p)?, th)
    }

    pub(crate) fn cases(&self, th: &Theorem, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
        self.s.disj_cases_rule(th, th1, th2)
    }

    pub(crate) fn gen(&self, vs: &[(&str, &str)], th: &Theorem) -> Result<Theorem> {
        let vs: Vec<Term> = vs
            .iter()
            .map(|(n, t)| self.var(n, t))
            .collect::<Result<_>>()?;
        self.s.list_gen_rule(&vs, th)
    }

    pub(crate) fn spec(&self, src: &str, th: &Theorem) -> Result<Theorem> {
        self.s.spec_rule(&self.tm(src)?, th)
    }

    pub(crate) fn exists(&self, ex: &str, w: &str, th: &Theorem) -> Result<Theorem> {
        self.s.exists_rule(&self.tm(ex)?, &self.tm(w)?, th)
    }

    pub(crate) fn choose(&self, v: (&str, &str), th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
        self.s.choose_rule(&self.var(v.0, v.1)?, th1, th2)
    }

    pub(crate) fn contr(&self, p: &str, th: &Theorem) -> Result<Theorem> {
        self.s.contr_rule(&self.tm(p)?, th)
    }

    pub(crate) fn em(&self, p: &str) -> Result<Theorem> {
        let em = self.s.get_theorem(EXCLUDED_MIDDLE_THM)?;
        self.spec(p, &em)
    }
}

/// Build the standard theory into a session holding the bootstrap theory.
///
/// Any failure is catastrophic: the build is trusted setup.
pub fn build_platform_theory(s: &Session) -> Result<Manifest> {
    if s.theory().is_constant(crate::syntax::TRUE) {
        return Err(Failure::catastrophic("platform theory is already built"));
    }
    let mut b = Builder {
        s,
        manifest: Manifest::default(),
    };
    if let Err(e) = build(&mut b) {
        let after = b.manifest.steps.last().map(|st| st.name.as_str()).unwrap_or("start");
        return Err(Failure::catastrophic(format!(
            "platform build failed after {}: {}",
            after,
            e.message()
        )));
    }
    Ok(b.manifest)
}

fn build(b: &mut Builder) -> Result<()> {
    b.declare_const("@", "('a -> bool) -> 'a")?;
    for (name, src) in DEFINITIONS {
        b.define(name, src)?;
    }
    for (label, src) in AXIOMS {
        b.axiom(label, src)?;
    }
    core_theorems(b)?;
    crate::platform_lemmas::logic_lemmas(b)?;
    crate::platform_lemmas::pair_theory(b)?;
    nat_theory(b)?;
    Ok(())
}

fn core_theorems(b: &mut Builder) -> Result<()> {
    let t = b.s.truth()?;
    b.derive(TRUTH_THM, &t)?;

    // p \/ ~p by contradiction from ~(p \/ ~p).
    let not_em = b.a("~(p \\/ ~p)")?;
    let to_false = b.ne(&not_em)?;
    let from_p = b.mp(&to_false, &b.d1(&b.a("p")?, "~p")?)?;
    let not_p = b.ni(&b.disch("p", &from_p)?)?;
    let from_not_p = b.mp(&to_false, &b.d2("p", &not_p)?)?;
    let em = b.s.ccontr_rule(&b.tm("p \\/ ~p")?, &from_not_p)?;
    let em = b.gen(&[("p", "bool")], &em)?;
    b.derive(EXCLUDED_MIDDLE_THM, &em)?;

    let c1 = b.d1(&b.s.eqt_intro_rule(&b.a("p")?)?, "p <=> false")?;
    let c2 = b.d2("p <=> true", &b.s.eqf_intro_rule(&b.a("~p")?)?)?;
    let bc = b.cases(&b.em("p")?, &c1, &c2)?;
    let bc = b.gen(&[("p", "bool")], &bc)?;
    b.derive(BOOL_CASES_THM, &bc)?;
    Ok(())
}

fn nat_theory(b: &mut Builder) -> Result<()> {
    b.declare_type(NAT, 0)?;
    for (name, ty) in NAT_CONSTS {
        b.declare_const(name, ty)?;
    }
    for (label, src) in NAT_AXIOMS {
        b.axiom(label, src)?;
    }
    crate::platform_lemmas::nat_lemmas(b)?;
    Ok(())
}

/// Labels of every axiom a build asserts, in order.
pub fn manifest_axioms() -> Vec<&'static str> {
    let mut v: Vec<&str> = LOGICAL_AXIOMS.to_vec();
    v.extend(NAT_AXIOMS.iter().map(|(l, _)| *l));
    v
}

/// Build a fresh session holding the standard theory.
pub fn platform_session() -> Result<(Session, Manifest)> {
    let s = Session::new();
    let m = build_platform_theory(&s)?;
    Ok((s, m))
}
