//! A working session: theory, fixities and the proof recorder.
//!
//! Every inference rule, conversion and theory command is available as a
//! method. When recording is on, each outermost call is logged as a step
//! whose theorem arguments refer to earlier steps, so the log can be
//! exported and replayed elsewhere.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cell::{Cell, Ref, RefCell};

use num_bigint::BigUint;

use crate::derived;
use crate::error::{fail, Result};
use crate::fixity::{parse_fixity, Fixity, FixityTable};
use crate::kernel::rules;
use crate::kernel::{Theorem, Theory};
use crate::num::{NatArith, NatClauses};
use crate::parser;
use crate::printer;
use crate::term::Term;
use crate::types::Type;

/// An argument of a recorded step.
#[derive(Clone, Debug)]
pub enum Arg {
    Term(Term),
    Type(Type),
    /// Reference to the theorem produced by an earlier step.
    Thm(u64),
    Str(String),
    Num(BigUint),
    List(Vec<Arg>),
    Pair(alloc::boxed::Box<Arg>, alloc::boxed::Box<Arg>),
}

#[derive(Clone, Debug)]
pub struct Step {
    pub id: u64,
    pub op: String,
    pub args: Vec<Arg>,
    pub result: Option<Theorem>,
}

/// Op name of a step standing for a theorem the recorder cannot account
/// for. Replay rejects it.
pub const EXTERNAL: &str = "external";

#[derive(Default)]
pub struct Recorder {
    on: bool,
    steps: Vec<Step>,
    by_thm: BTreeMap<usize, u64>,
}

impl Recorder {
    fn push(&mut self, op: &str, args: Vec<Arg>, result: Option<Theorem>) -> u64 {
        let id = self.steps.len() as u64 + 1;
        if let Some(th) = &result {
            self.by_thm.insert(th.identity(), id);
        }
        self.steps.push(Step {
            id,
            op: op.to_string(),
            args,
            result,
        });
        id
    }

    /// Step id of a theorem value, adding a registry lookup step for
    /// theorems the log has not seen.
    pub fn thm_id(&mut self, thy: &Theory, th: &Theorem) -> u64 {
        if let Some(&id) = self.by_thm.get(&th.identity()) {
            return id;
        }
        match thy.lookup_registered(th) {
            Some((getter, label)) => self.push(getter, alloc::vec![Arg::Str(label)], Some(th.clone())),
            None => self.push(EXTERNAL, Vec::new(), Some(th.clone())),
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }
}

/// Conversion of method arguments into step arguments.
pub trait Encode {
    fn encode(&self, rec: &mut Recorder, thy: &Theory) -> Arg;
}

impl Encode for Term {
    fn encode(&self, _: &mut Recorder, _: &Theory) -> Arg {
        Arg::Term(self.clone())
    }
}

impl Encode for Type {
    fn encode(&self, _: &mut Recorder, _: &Theory) -> Arg {
        Arg::Type(self.clone())
    }
}

impl Encode for Theorem {
    fn encode(&self, rec: &mut Recorder, thy: &Theory) -> Arg {
        Arg::Thm(rec.thm_id(thy, self))
    }
}

impl Encode for str {
    fn encode(&self, _: &mut Recorder, _: &Theory) -> Arg {
        Arg::Str(self.to_string())
    }
}

impl Encode for usize {
    fn encode(&self, _: &mut Recorder, _: &Theory) -> Arg {
        Arg::Num(BigUint::from(*self))
    }
}

impl Encode for Fixity {
    fn encode(&self, _: &mut Recorder, _: &Theory) -> Arg {
        Arg::Str(self.to_string())
    }
}

impl<T: Encode> Encode for [T] {
    fn encode(&self, rec: &mut Recorder, thy: &Theory) -> Arg {
        Arg::List(self.iter().map(|x| x.encode(rec, thy)).collect())
    }
}

impl<A: Encode, B: Encode> Encode for (A, B) {
    fn encode(&self, rec: &mut Recorder, thy: &Theory) -> Arg {
        Arg::Pair(
            alloc::boxed::Box::new(self.0.encode(rec, thy)),
            alloc::boxed::Box::new(self.1.encode(rec, thy)),
        )
    }
}

impl<T: Encode + ?Sized> Encode for &T {
    fn encode(&self, rec: &mut Recorder, thy: &Theory) -> Arg {
        (**self).encode(rec, thy)
    }
}

/// Theorems already replayed, by the step id they were recorded under.
pub type ReplayEnv = BTreeMap<u64, Theorem>;

/// Conversion of step arguments back into method arguments.
pub trait Decode: Sized {
    fn decode(arg: &Arg, env: &ReplayEnv) -> Result<Self>;
}

fn bad_arg<T>(what: &str) -> Result<T> {
    fail("replay", alloc::format!("expected {} argument", what))
}

impl Decode for Term {
    fn decode(arg: &Arg, _: &ReplayEnv) -> Result<Self> {
        match arg {
            Arg::Term(t) => Ok(t.clone()),
            _ => bad_arg("term"),
        }
    }
}

impl Decode for Type {
    fn decode(arg: &Arg, _: &ReplayEnv) -> Result<Self> {
        match arg {
            Arg::Type(t) => Ok(t.clone()),
            _ => bad_arg("type"),
        }
    }
}

impl Decode for Theorem {
    fn decode(arg: &Arg, env: &ReplayEnv) -> Result<Self> {
        match arg {
            Arg::Thm(id) => match env.get(id) {
                Some(th) => Ok(th.clone()),
                None => fail("replay", alloc::format!("reference to unknown step {}", id)),
            },
            _ => bad_arg("theorem"),
        }
    }
}

impl Decode for String {
    fn decode(arg: &Arg, _: &ReplayEnv) -> Result<Self> {
        match arg {
            Arg::Str(s) => Ok(s.clone()),
            _ => bad_arg("string"),
        }
    }
}

impl Decode for usize {
    fn decode(arg: &Arg, _: &ReplayEnv) -> Result<Self> {
        match arg {
            Arg::Num(n) => match usize::try_from(n) {
                Ok(k) => Ok(k),
                Err(_) => bad_arg("small numeral"),
            },
            _ => bad_arg("numeral"),
        }
    }
}

impl Decode for Fixity {
    fn decode(arg: &Arg, _: &ReplayEnv) -> Result<Self> {
        match arg {
            Arg::Str(s) => match parse_fixity(s) {
                Some(f) => Ok(f),
                None => bad_arg("fixity"),
            },
            _ => bad_arg("fixity"),
        }
    }
}

impl<T: Decode> Decode for Vec<T> {
    fn decode(arg: &Arg, env: &ReplayEnv) -> Result<Self> {
        match arg {
            Arg::List(xs) => xs.iter().map(|x| T::decode(x, env)).collect(),
            _ => bad_arg("list"),
        }
    }
}

impl<A: Decode, B: Decode> Decode for (A, B) {
    fn decode(arg: &Arg, env: &ReplayEnv) -> Result<Self> {
        match arg {
            Arg::Pair(a, b) => Ok((A::decode(a, env)?, B::decode(b, env)?)),
            _ => bad_arg("pair"),
        }
    }
}

/// Results a recorded step may produce.
pub trait Outcome {
    fn thm(&self) -> Option<Theorem>;
}

impl Outcome for Theorem {
    fn thm(&self) -> Option<Theorem> {
        Some(self.clone())
    }
}

impl Outcome for () {
    fn thm(&self) -> Option<Theorem> {
        None
    }
}

pub struct Session {
    thy: RefCell<Theory>,
    fix: RefCell<FixityTable>,
    rec: RefCell<Recorder>,
    depth: Cell<u32>,
    nat: RefCell<Option<Rc<NatClauses>>>,
}

impl Default for Session {
    fn default() -> Self {
        Session::new()
    }
}

impl Session {
    /// A session over the bootstrap theory with the standard fixities.
    pub fn new() -> Session {
        Session::with_theory(Theory::bootstrap())
    }

    pub fn with_theory(thy: Theory) -> Session {
        Session {
            thy: RefCell::new(thy),
            fix: RefCell::new(FixityTable::standard()),
            rec: RefCell::new(Recorder::default()),
            depth: Cell::new(0),
            nat: RefCell::new(None),
        }
    }

    pub fn theory(&self) -> Ref<'_, Theory> {
        self.thy.borrow()
    }

    pub fn fixities(&self) -> Ref<'_, FixityTable> {
        self.fix.borrow()
    }

    pub fn record_mode(&self, on: bool) {
        self.rec.borrow_mut().on = on;
    }

    pub fn is_recording(&self) -> bool {
        self.rec.borrow().on
    }

    pub fn recorder(&self) -> Ref<'_, Recorder> {
        self.rec.borrow()
    }

    /// Step id of a theorem, recording a lookup step if needed.
    pub fn thm_id(&self, th: &Theorem) -> u64 {
        let thy = self.thy.borrow();
        self.rec.borrow_mut().thm_id(&thy, th)
    }

    fn run<R: Outcome>(
        &self,
        op: &str,
        enc: impl FnOnce(&mut Recorder, &Theory) -> Vec<Arg>,
        f: impl FnOnce(&Theory, &Session) -> Result<R>,
    ) -> Result<R> {
        let args = self.args_if_recording(enc);
        self.depth.set(self.depth.get() + 1);
        let res = {
            let thy = self.thy.borrow();
            f(&thy, self)
        };
        self.depth.set(self.depth.get() - 1);
        self.finish(op, args, res)
    }

    fn run_mut<R: Outcome>(
        &self,
        op: &str,
        enc: impl FnOnce(&mut Recorder, &Theory) -> Vec<Arg>,
        f: impl FnOnce(&mut Theory, &Session) -> Result<R>,
    ) -> Result<R> {
        let args = self.args_if_recording(enc);
        self.depth.set(self.depth.get() + 1);
        let res = {
            let mut thy = self.thy.borrow_mut();
            f(&mut thy, self)
        };
        self.depth.set(self.depth.get() - 1);
        self.finish(op, args, res)
    }

    fn args_if_recording(&self, enc: impl FnOnce(&mut Recorder, &Theory) -> Vec<Arg>) -> Option<Vec<Arg>> {
        if self.depth.get() != 0 || !self.rec.borrow().on {
            return None;
        }
        let thy = self.thy.borrow();
        let mut rec = self.rec.borrow_mut();
        Some(enc(&mut rec, &thy))
    }

    fn finish<R: Outcome>(&self, op: &str, args: Option<Vec<Arg>>, res: Result<R>) -> Result<R> {
        if let (Some(args), Ok(r)) = (args, &res) {
            self.rec.borrow_mut().push(op, args, r.thm());
        }
        res
    }

    fn with_nat<R>(&self, thy: &Theory, f: impl FnOnce(&NatArith) -> Result<R>) -> Result<R> {
        let cached = self.nat.borrow().clone();
        let c = match cached {
            Some(c) => c,
            None => {
                let c = Rc::new(NatClauses::new(thy)?);
                *self.nat.borrow_mut() = Some(c.clone());
                c
            }
        };
        f(&NatArith::with_clauses(thy, &c))
    }

    // -- concrete syntax, using the session's fixities --------------------

    pub fn parse_term(&self, src: &str) -> Result<Term> {
        parser::parse_term(&self.thy.borrow(), &self.fix.borrow(), src)
    }

    pub fn parse_type(&self, src: &str) -> Result<Type> {
        parser::parse_type(&self.thy.borrow(), &self.fix.borrow(), src)
    }

    pub fn print_term(&self, t: &Term) -> String {
        printer::print_term(&self.thy.borrow(), &self.fix.borrow(), t)
    }

    pub fn print_type(&self, ty: &Type) -> String {
        printer::print_type(&self.fix.borrow(), ty)
    }

    pub fn print_thm(&self, th: &Theorem) -> String {
        printer::print_thm(&self.thy.borrow(), &self.fix.borrow(), th)
    }

    pub fn get_fixity(&self, name: &str) -> Fixity {
        self.fix.borrow().get(name)
    }

    /// Set a term fixity. Infix precedences are limited to
    /// [`crate::fixity::MAX_PREC`].
    pub fn set_fixity(&self, name: &str, f: Fixity) -> Result<()> {
        if let Fixity::Infix(p, _) = f {
            if p > crate::fixity::MAX_PREC {
                return fail("set_fixity", "precedence out of range");
            }
        }
        if name.is_empty() {
            return fail("set_fixity", "empty name");
        }
        self.run(
            "set_fixity",
            |rec, thy| alloc::vec![name.encode(rec, thy), f.encode(rec, thy)],
            |_, s| {
                s.fix.borrow_mut().set(name, f);
                Ok(())
            },
        )
    }

    /// Set or clear the infix form of a binary type constant. Not recorded:
    /// recorded terms never depend on fixities.
    pub fn set_type_fixity(&self, name: &str, infix: Option<(&str, u32, crate::fixity::Assoc)>) -> Result<()> {
        match self.thy.borrow().get_type_arity(name) {
            Ok(2) => {}
            Ok(_) => return fail("set_type_fixity", "only binary type constants can be infix"),
            Err(e) => return Err(e.reraise("set_type_fixity")),
        }
        self.fix.borrow_mut().set_type(name, infix);
        Ok(())
    }
}

macro_rules! kind_ref {
    (term) => { &Term };
    (ty) => { &Type };
    (thm) => { &Theorem };
    (str) => { &str };
    (strs) => { &[&str] };
    (terms) => { &[Term] };
    (thms) => { &[Theorem] };
    (term_inst) => { &[(Term, Term)] };
    (type_inst) => { &[(Type, Type)] };
    (nat) => { usize };
}

macro_rules! kind_owned {
    (term) => { Term };
    (ty) => { Type };
    (thm) => { Theorem };
    (str) => { String };
    (strs) => { Vec<String> };
    (terms) => { Vec<Term> };
    (thms) => { Vec<Theorem> };
    (term_inst) => { Vec<(Term, Term)> };
    (type_inst) => { Vec<(Type, Type)> };
    (nat) => { usize };
}

macro_rules! kind_pass {
    (strs, $x:ident) => { &$x.iter().map(|s| s.as_str()).collect::<Vec<&str>>() };
    (nat, $x:ident) => { $x };
    ($k:ident, $x:ident) => { &$x };
}

macro_rules! ret_ty {
    () => { Theorem };
    ($t:ty) => { $t };
}

macro_rules! session_ops {
    ($(
        $(#[$meta:meta])*
        $name:ident ( $($p:ident : $k:ident),* ) $(-> $ret:ty)? = $mode:ident |$thy:ident, $s:ident| $body:expr;
    )*) => {
        impl Session {
            $(
                $(#[$meta])*
                pub fn $name(&self, $($p: kind_ref!($k)),*) -> Result<ret_ty!($($ret)?)> {
                    self.$mode(
                        stringify!($name),
                        |_rec, _thy| alloc::vec![$( $p.encode(_rec, _thy) ),*],
                        |$thy, $s| { let _ = &$s; let _ = &$thy; $body },
                    )
                }
            )*

            /// Re-execute a recorded step. Returns the theorem it produces,
            /// if any.
            pub fn replay_step(&self, op: &str, args: &[Arg], env: &ReplayEnv) -> Result<Option<Theorem>> {
                match op {
                    $(
                        stringify!($name) => {
                            let mut _it = args.iter();
                            $(
                                let $p: kind_owned!($k) = match _it.next() {
                                    Some(a) => Decode::decode(a, env)?,
                                    None => return fail("replay", "too few arguments"),
                                };
                            )*
                            if _it.next().is_some() {
                                return fail("replay", "too many arguments");
                            }
                            let r = self.$name($( kind_pass!($k, $p) ),*)?;
                            Ok(r.thm())
                        }
                    )*
                    "set_fixity" => {
                        if args.len() != 2 {
                            return fail("replay", "set_fixity takes two arguments");
                        }
                        let name = String::decode(&args[0], env)?;
                        let f = Fixity::decode(&args[1], env)?;
                        self.set_fixity(&name, f)?;
                        Ok(None)
                    }
                    _ => fail("replay", alloc::format!("unknown operation {}", op)),
                }
            }
        }

        /// Names of all recordable operations.
        pub const OPERATIONS: &[&str] = &[$( stringify!($name), )* "set_fixity"];
    };
}

session_ops! {
    // -- primitive rules ---------------------------------------------------
    assume_rule(p: term) = run |thy, s| rules::assume_rule(p);
    refl_conv(t: term) = run |thy, s| rules::refl_conv(t);
    beta_conv(t: term) = run |thy, s| rules::beta_conv(t);
    eta_conv(t: term) = run |thy, s| rules::eta_conv(t);
    mk_comb_rule(th1: thm, th2: thm) = run |thy, s| rules::mk_comb_rule(th1, th2);
    mk_abs_rule(v: term, th: thm) = run |thy, s| rules::mk_abs_rule(v, th);
    eq_trans_rule(th1: thm, th2: thm) = run |thy, s| rules::eq_trans_rule(th1, th2);
    eq_mp_rule(th1: thm, th2: thm) = run |thy, s| rules::eq_mp_rule(th1, th2);
    deduct_antisym_rule(th1: thm, th2: thm) = run |thy, s| rules::deduct_antisym_rule(th1, th2);
    inst_type_rule(theta: type_inst, th: thm) = run |thy, s| rules::inst_type_rule(theta, th);
    var_inst_rule(theta: term_inst, th: thm) = run |thy, s| rules::var_inst_rule(theta, th);
    subst_rule(eqs: thms, th: thm) = run |thy, s| rules::subst_rule(eqs, th);
    disch_rule(p: term, th: thm) = run |thy, s| rules::disch_rule(thy, p, th);
    mp_rule(th1: thm, th2: thm) = run |thy, s| rules::mp_rule(th1, th2);
    gen_rule(v: term, th: thm) = run |thy, s| rules::gen_rule(thy, v, th);
    spec_rule(t: term, th: thm) = run |thy, s| rules::spec_rule(t, th);
    conj_rule(th1: thm, th2: thm) = run |thy, s| rules::conj_rule(thy, th1, th2);
    conjunct1_rule(th: thm) = run |thy, s| rules::conjunct1_rule(th);
    conjunct2_rule(th: thm) = run |thy, s| rules::conjunct2_rule(th);
    disj1_rule(th: thm, q: term) = run |thy, s| rules::disj1_rule(thy, th, q);
    disj2_rule(p: term, th: thm) = run |thy, s| rules::disj2_rule(thy, p, th);
    disj_cases_rule(th: thm, th1: thm, th2: thm) = run |thy, s| rules::disj_cases_rule(th, th1, th2);
    exists_rule(ex: term, t: term, th: thm) = run |thy, s| rules::exists_rule(ex, t, th);
    choose_rule(v: term, th1: thm, th2: thm) = run |thy, s| rules::choose_rule(v, th1, th2);
    select_rule(th: thm) = run |thy, s| rules::select_rule(thy, th);
    contr_rule(p: term, th: thm) = run |thy, s| rules::contr_rule(p, th);
    ccontr_rule(p: term, th: thm) = run |thy, s| rules::ccontr_rule(thy, p, th);
    not_intro_rule(th: thm) = run |thy, s| rules::not_intro_rule(thy, th);
    not_elim_rule(th: thm) = run |thy, s| rules::not_elim_rule(thy, th);
    eq_imp_rule1(th: thm) = run |thy, s| rules::eq_imp_rule1(thy, th);
    eq_imp_rule2(th: thm) = run |thy, s| rules::eq_imp_rule2(thy, th);
    imp_antisym_rule(th1: thm, th2: thm) = run |thy, s| rules::imp_antisym_rule(th1, th2);

    // -- derived rules -----------------------------------------------------
    truth() = run |thy, s| derived::truth(thy);
    sym_rule(th: thm) = run |thy, s| derived::sym_rule(th);
    sym_conv(t: term) = run |thy, s| derived::sym_conv(t);
    prove_asm_rule(th1: thm, th2: thm) = run |thy, s| derived::prove_asm_rule(thy, th1, th2);
    eqt_intro_rule(th: thm) = run |thy, s| derived::eqt_intro_rule(thy, th);
    eqt_elim_rule(th: thm) = run |thy, s| derived::eqt_elim_rule(thy, th);
    eqf_intro_rule(th: thm) = run |thy, s| derived::eqf_intro_rule(thy, th);
    eqf_elim_rule(th: thm) = run |thy, s| derived::eqf_elim_rule(thy, th);
    undisch_rule(th: thm) = run |thy, s| derived::undisch_rule(th);
    add_asm_rule(p: term, th: thm) = run |thy, s| derived::add_asm_rule(thy, p, th);
    spec_all_rule(th: thm) = run |thy, s| derived::spec_all_rule(th);
    list_gen_rule(vs: terms, th: thm) = run |thy, s| derived::list_gen_rule(thy, vs, th);
    list_spec_rule(ts: terms, th: thm) = run |thy, s| derived::list_spec_rule(ts, th);
    gen_all_rule(th: thm) = run |thy, s| derived::gen_all_rule(thy, th);
    mk_bin_rule(op: term, th1: thm, th2: thm) = run |thy, s| derived::mk_bin_rule(op, th1, th2);
    mk_bin1_rule(op: term, th: thm, b: term) = run |thy, s| derived::mk_bin1_rule(op, th, b);
    mk_bin2_rule(op: term, a: term, th: thm) = run |thy, s| derived::mk_bin2_rule(op, a, th);
    mk_comb1_rule(th: thm, x: term) = run |thy, s| derived::mk_comb1_rule(th, x);
    mk_comb2_rule(f: term, th: thm) = run |thy, s| derived::mk_comb2_rule(f, th);
    mk_eq_rule(th1: thm, th2: thm) = run |thy, s| derived::mk_eq_rule(th1, th2);
    mk_eq1_rule(th: thm, b: term) = run |thy, s| derived::mk_eq1_rule(th, b);
    mk_eq2_rule(a: term, th: thm) = run |thy, s| derived::mk_eq2_rule(a, th);
    mk_conj_rule(th1: thm, th2: thm) = run |thy, s| derived::mk_conj_rule(thy, th1, th2);
    mk_conj1_rule(th: thm, q: term) = run |thy, s| derived::mk_conj1_rule(thy, th, q);
    mk_conj2_rule(p: term, th: thm) = run |thy, s| derived::mk_conj2_rule(thy, p, th);
    mk_disj_rule(th1: thm, th2: thm) = run |thy, s| derived::mk_disj_rule(thy, th1, th2);
    mk_disj1_rule(th: thm, q: term) = run |thy, s| derived::mk_disj1_rule(thy, th, q);
    mk_disj2_rule(p: term, th: thm) = run |thy, s| derived::mk_disj2_rule(thy, p, th);
    mk_imp_rule(th1: thm, th2: thm) = run |thy, s| derived::mk_imp_rule(thy, th1, th2);
    mk_imp1_rule(th: thm, q: term) = run |thy, s| derived::mk_imp1_rule(thy, th, q);
    mk_imp2_rule(p: term, th: thm) = run |thy, s| derived::mk_imp2_rule(thy, p, th);
    mk_not_rule(th: thm) = run |thy, s| derived::mk_not_rule(thy, th);
    mk_forall_rule(v: term, th: thm) = run |thy, s| derived::mk_forall_rule(thy, v, th);
    mk_exists_rule(v: term, th: thm) = run |thy, s| derived::mk_exists_rule(thy, v, th);
    mk_uexists_rule(v: term, th: thm) = run |thy, s| derived::mk_uexists_rule(thy, v, th);
    mk_select_rule(v: term, th: thm) = run |thy, s| derived::mk_select_rule(thy, v, th);
    mk_pair_rule(th1: thm, th2: thm) = run |thy, s| derived::mk_pair_rule(thy, th1, th2);
    mk_pair1_rule(th: thm, b: term) = run |thy, s| derived::mk_pair1_rule(thy, th, b);
    mk_pair2_rule(a: term, th: thm) = run |thy, s| derived::mk_pair2_rule(thy, a, th);
    id_conv(t: term) = run |thy, s| derived::id_conv(t);
    beta_norm_conv(t: term) = run |thy, s| derived::beta_norm_conv(t);
    beta_rule(th: thm) = run |thy, s| derived::beta_rule(th);
    alpha_rule(p: term, th: thm) = run |thy, s| derived::alpha_rule(p, th);
    imp_trans_rule(th1: thm, th2: thm) = run |thy, s| derived::imp_trans_rule(thy, th1, th2);

    // -- numeral evaluation ------------------------------------------------
    suc_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.suc_conv(t));
    pre_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.pre_conv(t));
    add_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.add_conv(t));
    sub_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.sub_conv(t));
    mult_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.mult_conv(t));
    exp_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.exp_conv(t));
    div_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.div_conv(t));
    mod_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.mod_conv(t));
    lt_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.lt_conv(t));
    le_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.le_conv(t));
    gt_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.gt_conv(t));
    ge_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.ge_conv(t));
    even_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.even_conv(t));
    eval_conv(t: term) = run |thy, s| s.with_nat(thy, |n| n.eval_conv(t));

    // -- theory commands ---------------------------------------------------
    declare_type_constant(name: str, arity: nat) -> () = run_mut |thy, s| thy.declare_type_constant(name, arity);
    declare_constant(name: str, ty: ty) -> () = run_mut |thy, s| thy.declare_constant(name, ty);
    const_definition(eq: term) = run_mut |thy, s| thy.const_definition(eq);
    const_specification(names: strs, th: thm) = run_mut |thy, s| thy.const_specification(names, th);
    tyconst_definition(name: str, pred: term, th: thm) = run_mut |thy, s| thy.tyconst_definition(name, pred, th);
    new_axiom(label: str, t: term) = run_mut |thy, s| thy.new_axiom(label, t);
    save_thm(label: str, th: thm) = run_mut |thy, s| thy.save_thm(label, th);
    get_axiom(label: str) = run |thy, s| thy.get_axiom(label);
    get_const_definition(name: str) = run |thy, s| thy.get_const_definition(name);
    get_theorem(label: str) = run |thy, s| thy.get_theorem(label);
}
