//! Natural-number numerals.
//!
//! A numeral is the zero constant under a chain of the unary constructors
//! `bit0` (doubling) and `bit1` (doubling plus one), with `bit0` never
//! applied directly to zero. Outside this module only [`mk_nat`],
//! [`dest_nat`] and [`is_nat`] expose the representation.

use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::derived::{
    eqf_intro_rule, eqt_elim_rule, eqt_intro_rule, mk_bin1_rule, mk_bin2_rule, mk_bin_rule,
    mk_comb2_rule, spec_all_rule, sym_rule,
};
use crate::error::{fail, Result, ResultExt};
use crate::kernel::rules::{
    assume_rule, conj_rule, conjunct1_rule, conjunct2_rule, disch_rule, eq_trans_rule, mk_comb_rule, mp_rule,
    refl_conv, var_inst_rule,
};
use crate::kernel::{Theorem, Theory};
use crate::syntax::{self, dest_binop_named};
use crate::term::{mk_var, Term, TermKind};
use crate::types::{mk_fun_type, Type, NAT};

pub const ZERO: &str = "0";
pub const BIT0: &str = "bit0";
pub const BIT1: &str = "bit1";
pub const SUC: &str = "suc";
pub const PRE: &str = "pre";
pub const ADD: &str = "+";
pub const SUB: &str = "-";
pub const MULT: &str = "*";
pub const EXP: &str = "exp";
pub const DIV: &str = "div";
pub const MOD: &str = "mod";
pub const LT: &str = "<";
pub const LE: &str = "<=";
pub const GT: &str = ">";
pub const GE: &str = ">=";
pub const EVEN: &str = "even";

/// The constants a numeral is built from.
#[derive(Clone)]
pub struct NumeralConsts {
    pub nat_ty: Type,
    pub zero: Term,
    pub bit0: Term,
    pub bit1: Term,
}

impl NumeralConsts {
    pub fn new(thy: &Theory) -> Result<NumeralConsts> {
        let nat_ty = thy.mk_comp_type(NAT, &[]).origin("mk_nat")?;
        let un = mk_fun_type(nat_ty.clone(), nat_ty.clone());
        Ok(NumeralConsts {
            zero: thy.mk_const(ZERO, &nat_ty).origin("mk_nat")?,
            bit0: thy.mk_const(BIT0, &un).origin("mk_nat")?,
            bit1: thy.mk_const(BIT1, &un).origin("mk_nat")?,
            nat_ty,
        })
    }

    pub fn mk(&self, n: &BigUint) -> Term {
        let bits = n.bits();
        let mut t = self.zero.clone();
        for i in (0..bits).rev() {
            let c = if n.bit(i) { &self.bit1 } else { &self.bit0 };
            t = Term::comb_unchecked(c.clone(), t);
        }
        t
    }
}

pub fn mk_nat(thy: &Theory, n: &BigUint) -> Result<Term> {
    Ok(NumeralConsts::new(thy)?.mk(n))
}

fn is_nat_ty(ty: &Type) -> bool {
    matches!(ty.kind(), crate::types::TypeKind::Comp(n, a) if &**n == NAT && a.is_empty())
}

fn is_digit_const(t: &Term, name: &str) -> bool {
    match t.kind() {
        TermKind::Const(n) if &**n == name => match t.ty().dest_fun() {
            Some((d, r)) => is_nat_ty(d) && is_nat_ty(r),
            None => false,
        },
        _ => false,
    }
}

/// Low-order-first bits of a canonical numeral.
fn numeral_bits(t: &Term) -> Option<Vec<bool>> {
    let mut bits = Vec::new();
    let mut cur = t;
    loop {
        match cur.kind() {
            TermKind::Const(n) if &**n == ZERO && is_nat_ty(cur.ty()) => break,
            TermKind::Comb(f, x) => {
                if is_digit_const(f, BIT1) {
                    bits.push(true);
                } else if is_digit_const(f, BIT0) {
                    // bit0 applied to zero is not canonical.
                    if x.is_const() {
                        return None;
                    }
                    bits.push(false);
                } else {
                    return None;
                }
                cur = x;
            }
            _ => return None,
        }
    }
    Some(bits)
}

pub fn dest_nat(t: &Term) -> Result<BigUint> {
    match numeral_bits(t) {
        Some(bits) => {
            let mut n = BigUint::zero();
            for b in bits.iter().rev() {
                n <<= 1u32;
                if *b {
                    n += 1u32;
                }
            }
            Ok(n)
        }
        None => fail("dest_nat", "not a numeral"),
    }
}

pub fn is_nat(t: &Term) -> bool {
    numeral_bits(t).is_some()
}

// ---------------------------------------------------------------------------
// Arithmetic axioms and evaluation conversions

pub const SUC_INJ_AX: &str = "suc_inj_ax";
pub const SUC_NOT_ZERO_AX: &str = "suc_not_zero_ax";
pub const NAT_INDUCT_AX: &str = "nat_induct_ax";
pub const BIT0_AX: &str = "bit0_ax";
pub const BIT1_AX: &str = "bit1_ax";
pub const SUC_AX: &str = "suc_ax";
pub const PRE_AX: &str = "pre_ax";
pub const ADD_AX: &str = "add_ax";
pub const SUB_AX: &str = "sub_ax";
pub const MULT_AX: &str = "mult_ax";
pub const EXP_AX: &str = "exp_ax";
pub const DIV_AX: &str = "div_ax";
pub const MOD_AX: &str = "mod_ax";
pub const LT_AX: &str = "lt_ax";
pub const LE_AX: &str = "le_ax";
pub const GT_AX: &str = "gt_ax";
pub const GE_AX: &str = "ge_ax";
pub const EVEN_AX: &str = "even_ax";

/// Statements of the natural-number axioms, in build order. Each
/// operator axiom is a conjunction of clauses the conversions below
/// instantiate; the conversions depend on the clause order.
pub const NAT_AXIOMS: &[(&str, &str)] = &[
    (SUC_INJ_AX, "!m n. suc m = suc n ==> m = n"),
    (SUC_NOT_ZERO_AX, "!n. ~(suc n = 0)"),
    (NAT_INDUCT_AX, "!P. P 0 /\\ (!n. P n ==> P (suc n)) ==> (!n. P n)"),
    (BIT0_AX, "bit0 0 = 0 /\\ (!n. bit0 (suc n) = suc (suc (bit0 n)))"),
    (BIT1_AX, "!n. bit1 n = suc (bit0 n)"),
    (
        SUC_AX,
        "suc 0 = bit1 0 /\\ (!n. suc (bit0 n) = bit1 n) /\\ (!n. suc (bit1 n) = bit0 (suc n))",
    ),
    (PRE_AX, "pre 0 = 0 /\\ (!n. pre (suc n) = n)"),
    (
        ADD_AX,
        "(!n. 0 + n = n) /\\ (!m. m + 0 = m) /\\ \
         (!m n. bit0 m + bit0 n = bit0 (m + n)) /\\ \
         (!m n. bit0 m + bit1 n = bit1 (m + n)) /\\ \
         (!m n. bit1 m + bit0 n = bit1 (m + n)) /\\ \
         (!m n. bit1 m + bit1 n = bit0 (suc (m + n)))",
    ),
    (SUB_AX, "(!m n. (m + n) - n = m) /\\ (!m n. m <= n ==> m - n = 0)"),
    (
        MULT_AX,
        "(!n. 0 * n = 0) /\\ (!m. m * 0 = 0) /\\ \
         (!m n. bit0 m * n = bit0 (m * n)) /\\ \
         (!m n. bit1 m * n = bit0 (m * n) + n) /\\ \
         (!m n p. (m + n) * p = m * p + n * p)",
    ),
    (
        EXP_AX,
        "(!m. m exp 0 = 1) /\\ \
         (!m n. m exp bit0 n = m exp n * m exp n) /\\ \
         (!m n. m exp bit1 n = m * (m exp n * m exp n)) /\\ \
         (!m n. m exp suc n = m * m exp n)",
    ),
    (DIV_AX, "!m n q r. m = q * n + r /\\ r < n ==> m div n = q"),
    (MOD_AX, "!m n q r. m = q * n + r /\\ r < n ==> m mod n = r"),
    (
        LT_AX,
        "(!m. m < 0 <=> false) /\\ (!n. 0 < bit0 n <=> 0 < n) /\\ (!n. 0 < bit1 n <=> true) /\\ \
         (!m n. bit0 m < bit0 n <=> m < n) /\\ (!m n. bit0 m < bit1 n <=> m <= n) /\\ \
         (!m n. bit1 m < bit0 n <=> m < n) /\\ (!m n. bit1 m < bit1 n <=> m < n)",
    ),
    (
        LE_AX,
        "(!n. 0 <= n <=> true) /\\ (!m. bit0 m <= 0 <=> m <= 0) /\\ (!m. bit1 m <= 0 <=> false) /\\ \
         (!m n. bit0 m <= bit0 n <=> m <= n) /\\ (!m n. bit0 m <= bit1 n <=> m <= n) /\\ \
         (!m n. bit1 m <= bit0 n <=> m < n) /\\ (!m n. bit1 m <= bit1 n <=> m <= n)",
    ),
    (GT_AX, "!m n. m > n <=> n < m"),
    (GE_AX, "!m n. m >= n <=> n <= m"),
    (EVEN_AX, "even 0 /\\ (!n. even (bit0 n)) /\\ (!n. ~even (bit1 n))"),
];

/// The names and generic types of the natural-number constants.
pub const NAT_CONSTS: &[(&str, &str)] = &[
    (ZERO, "nat"),
    (BIT0, "nat -> nat"),
    (BIT1, "nat -> nat"),
    (SUC, "nat -> nat"),
    (PRE, "nat -> nat"),
    (ADD, "nat -> nat -> nat"),
    (SUB, "nat -> nat -> nat"),
    (MULT, "nat -> nat -> nat"),
    (EXP, "nat -> nat -> nat"),
    (DIV, "nat -> nat -> nat"),
    (MOD, "nat -> nat -> nat"),
    (LT, "nat -> nat -> bool"),
    (LE, "nat -> nat -> bool"),
    (GT, "nat -> nat -> bool"),
    (GE, "nat -> nat -> bool"),
    (EVEN, "nat -> bool"),
];

enum Digit<'a> {
    Zero,
    Bit0(&'a Term),
    Bit1(&'a Term),
}

// Callers guarantee `t` is canonical.
fn digit(t: &Term) -> Digit<'_> {
    match t.as_comb() {
        None => Digit::Zero,
        Some((f, x)) => {
            if f.is_const_named(BIT1) {
                Digit::Bit1(x)
            } else {
                Digit::Bit0(x)
            }
        }
    }
}

fn is_zero(t: &Term) -> bool {
    t.is_const()
}

/// Entries kept in each result cache before it is emptied.
const CACHE_LIMIT: usize = 4096;

/// Digits consumed per step of chunked addition.
const CHUNK: usize = 6;
/// Digits of the left factor consumed per step of chunked multiplication.
const MCHUNK: usize = 4;

// The outer `CHUNK` digits of `t` as a number, low digit outermost, and the
// term beneath them.
fn chunk(t: &Term) -> Option<(u32, &Term)> {
    chunk_of(CHUNK, t)
}

fn chunk_of(k: usize, t: &Term) -> Option<(u32, &Term)> {
    let mut d = 0u32;
    let mut cur = t;
    for i in 0..k {
        let (f, x) = cur.as_comb()?;
        if f.is_const_named(BIT1) {
            d |= 1 << i;
        }
        cur = x;
    }
    Some((d, cur))
}

// Like `digit`, but anything other than zero or a digit constructor is
// opaque. Used on numerals with a variable at the bottom.
enum SymDigit<'a> {
    Zero,
    Bit0(&'a Term),
    Bit1(&'a Term),
    Other,
}

fn sym_digit(t: &Term) -> SymDigit<'_> {
    match t.as_comb() {
        Some((f, x)) if f.is_const_named(BIT1) => SymDigit::Bit1(x),
        Some((f, x)) if f.is_const_named(BIT0) => SymDigit::Bit0(x),
        None if t.is_const_named(ZERO) => SymDigit::Zero,
        _ => SymDigit::Other,
    }
}

fn clauses(thy: &Theory, label: &str) -> Result<Vec<Theorem>> {
    let mut out = Vec::new();
    let mut th = thy.get_axiom(label)?;
    loop {
        if syntax::is_conj(th.concl()) {
            out.push(spec_all_rule(&conjunct1_rule(&th)?)?);
            th = conjunct2_rule(&th)?;
        } else {
            out.push(spec_all_rule(&th)?);
            return Ok(out);
        }
    }
}

fn rhs_of(th: &Theorem) -> &Term {
    th.concl().as_comb().map(|(_, r)| r).expect("equation")
}

fn trans(th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
    eq_trans_rule(th1, th2)
}

/// The natural-number axioms split into instantiable clauses.
#[derive(Clone)]
pub struct NatClauses {
    nc: NumeralConsts,
    m: Term,
    n: Term,
    q: Term,
    r: Term,
    p: Term,
    suc_c: Term,
    pre_c: Term,
    add_c: Term,
    sub_c: Term,
    mult_c: Term,
    exp_c: Term,
    // Reflexivity of the constructors and operators the conversions
    // rewrite under most often.
    refl_bit0: Theorem,
    refl_bit1: Theorem,
    refl_suc: Theorem,
    refl_add: Theorem,
    bit0: Vec<Theorem>,
    suc: Vec<Theorem>,
    pre: Vec<Theorem>,
    add: Vec<Theorem>,
    sub: Vec<Theorem>,
    mult: Vec<Theorem>,
    exp: Vec<Theorem>,
    div: Vec<Theorem>,
    modulo: Vec<Theorem>,
    lt: Vec<Theorem>,
    le: Vec<Theorem>,
    gt: Vec<Theorem>,
    ge: Vec<Theorem>,
    even: Vec<Theorem>,
    // Chunk addition lemmas keyed by digits and carry in, with carry out.
    add_lemmas: RefCell<BTreeMap<(u32, u32, bool), (Theorem, bool)>>,
    mult_lemmas: RefCell<BTreeMap<u32, Theorem>>,
    squares: RefCell<BTreeMap<Term, Theorem>>,
    // The most recent power computed for each base.
    powers: RefCell<BTreeMap<BigUint, (BigUint, Theorem)>>,
}

/// Evaluation of the arithmetic operators on numerals, by inference from
/// the natural-number axioms.
pub struct NatArith<'a> {
    thy: &'a Theory,
    c: Cow<'a, NatClauses>,
}

impl<'a> core::ops::Deref for NatArith<'a> {
    type Target = NatClauses;

    fn deref(&self) -> &NatClauses {
        &self.c
    }
}

impl NatClauses {
    pub fn new(thy: &Theory) -> Result<NatClauses> {
        let nc = NumeralConsts::new(thy)?;
        let nat = nc.nat_ty.clone();
        let un = mk_fun_type(nat.clone(), nat.clone());
        let bin = mk_fun_type(nat.clone(), un.clone());
        let c = |name: &str, ty: &Type| thy.mk_const(name, ty);
        let suc_c = c(SUC, &un)?;
        let add_c = c(ADD, &bin)?;
        Ok(NatClauses {
            refl_bit0: refl_conv(&nc.bit0)?,
            refl_bit1: refl_conv(&nc.bit1)?,
            refl_suc: refl_conv(&suc_c)?,
            refl_add: refl_conv(&add_c)?,
            m: mk_var("m", nat.clone()),
            n: mk_var("n", nat.clone()),
            q: mk_var("q", nat.clone()),
            r: mk_var("r", nat.clone()),
            p: mk_var("p", nat.clone()),
            suc_c,
            pre_c: c(PRE, &un)?,
            add_c,
            sub_c: c(SUB, &bin)?,
            mult_c: c(MULT, &bin)?,
            exp_c: c(EXP, &bin)?,
            bit0: clauses(thy, BIT0_AX)?,
            suc: clauses(thy, SUC_AX)?,
            pre: clauses(thy, PRE_AX)?,
            add: clauses(thy, ADD_AX)?,
            sub: clauses(thy, SUB_AX)?,
            mult: clauses(thy, MULT_AX)?,
            exp: clauses(thy, EXP_AX)?,
            div: clauses(thy, DIV_AX)?,
            modulo: clauses(thy, MOD_AX)?,
            lt: clauses(thy, LT_AX)?,
            le: clauses(thy, LE_AX)?,
            gt: clauses(thy, GT_AX)?,
            ge: clauses(thy, GE_AX)?,
            even: clauses(thy, EVEN_AX)?,
            add_lemmas: RefCell::new(BTreeMap::new()),
            mult_lemmas: RefCell::new(BTreeMap::new()),
            squares: RefCell::new(BTreeMap::new()),
            powers: RefCell::new(BTreeMap::new()),
            nc,
        })
    }
}

impl<'a> NatArith<'a> {
    pub fn new(thy: &'a Theory) -> Result<NatArith<'a>> {
        Ok(NatArith {
            thy,
            c: Cow::Owned(NatClauses::new(thy)?),
        })
    }

    /// Reuse clauses prepared earlier against the same theory.
    pub fn with_clauses(thy: &'a Theory, c: &'a NatClauses) -> NatArith<'a> {
        NatArith {
            thy,
            c: Cow::Borrowed(c),
        }
    }

    pub fn mk(&self, n: &BigUint) -> Term {
        self.nc.mk(n)
    }

    fn inst_m(&self, th: &Theorem, m: &Term) -> Result<Theorem> {
        var_inst_rule(&[(self.m.clone(), m.clone())], th)
    }

    fn inst_n(&self, th: &Theorem, n: &Term) -> Result<Theorem> {
        var_inst_rule(&[(self.n.clone(), n.clone())], th)
    }

    fn inst_mn(&self, th: &Theorem, m: &Term, n: &Term) -> Result<Theorem> {
        var_inst_rule(&[(self.m.clone(), m.clone()), (self.n.clone(), n.clone())], th)
    }

    /// From `|- a = a'` derive `|- a + b = a' + b`.
    fn add1(&self, th: &Theorem, b: &Term) -> Result<Theorem> {
        mk_comb_rule(&mk_comb_rule(&self.refl_add, th)?, &refl_conv(b)?)
    }

    /// From `|- a = k` derive `|- bit0 a = k'` with `k'` canonical.
    fn bit0_of(&self, th: &Theorem) -> Result<Theorem> {
        let th = mk_comb_rule(&self.refl_bit0, th)?;
        if is_zero(rhs_of(&th).as_comb().unwrap().1) {
            trans(&th, &self.bit0[0])
        } else {
            Ok(th)
        }
    }

    fn bit1_of(&self, th: &Theorem) -> Result<Theorem> {
        mk_comb_rule(&self.refl_bit1, th)
    }

    fn suc_num(&self, n: &Term) -> Result<Theorem> {
        match sym_digit(n) {
            SymDigit::Zero => Ok(self.suc[0].clone()),
            SymDigit::Bit0(x) => self.inst_n(&self.suc[1], x),
            SymDigit::Bit1(x) => {
                let th1 = self.inst_n(&self.suc[2], x)?;
                let th2 = self.bit0_of(&self.suc_num(x)?)?;
                trans(&th1, &th2)
            }
            SymDigit::Other => refl_conv(&Term::comb_unchecked(self.suc_c.clone(), n.clone())),
        }
    }

    fn mk_add(&self, a: &Term, b: &Term) -> Term {
        Term::comb_unchecked(Term::comb_unchecked(self.add_c.clone(), a.clone()), b.clone())
    }

    fn add_num(&self, a: &Term, b: &Term) -> Result<Theorem> {
        self.add_carry(a, b, false)
    }

    /// `|- a + b = s`, or `|- suc (a + b) = s` when `carry` is set.
    fn add_carry(&self, a: &Term, b: &Term, carry: bool) -> Result<Theorem> {
        if let (Some((d, x)), Some((e, y))) = (chunk(a), chunk(b)) {
            if !(is_zero(x) && is_zero(y)) {
                let (lemma, cout) = self.add_lemma(d, e, carry)?;
                let rec = self.add_carry(x, y, cout)?;
                let theta = [
                    (self.m.clone(), x.clone()),
                    (self.n.clone(), y.clone()),
                    (self.p.clone(), rhs_of(&rec).clone()),
                ];
                return mp_rule(&var_inst_rule(&theta, &lemma)?, &rec);
            }
        }
        let th = self.add_bits(a, b)?;
        if carry {
            trans(&mk_comb_rule(&self.refl_suc, &th)?, &self.suc_num(rhs_of(&th))?)
        } else {
            Ok(th)
        }
    }

    // `m + n = p ==> B_d m + B_e n = B_f p`, with `suc` around the sum when
    // a carry goes in and around `m + n` when one comes out.
    fn add_lemma(&self, d: u32, e: u32, cin: bool) -> Result<(Theorem, bool)> {
        if let Some(l) = self.add_lemmas.borrow().get(&(d, e, cin)) {
            return Ok(l.clone());
        }
        let mut th = self.add_bits(&self.layers(CHUNK, d, &self.m), &self.layers(CHUNK, e, &self.n))?;
        if cin {
            th = trans(&mk_comb_rule(&self.refl_suc, &th)?, &self.suc_num(rhs_of(&th))?)?;
        }
        let mut outer = Vec::with_capacity(CHUNK);
        let mut cur = rhs_of(&th);
        for _ in 0..CHUNK {
            let (f, x) = cur.as_comb().expect("digit layer");
            outer.push(f.clone());
            cur = x;
        }
        let cout = matches!(cur.as_comb(), Some((f, _)) if f.is_const_named(SUC));
        let hyp = syntax::mk_eq(cur, &self.p)?;
        let mut w = assume_rule(&hyp)?;
        for f in outer.iter().rev() {
            w = mk_comb2_rule(f, &w)?;
        }
        let lemma = disch_rule(self.thy, &hyp, &trans(&th, &w)?)?;
        self.add_lemmas.borrow_mut().insert((d, e, cin), (lemma.clone(), cout));
        Ok((lemma, cout))
    }

    // `k` digit constructors spelling `d` around `base`, low digit outermost.
    fn layers(&self, k: usize, d: u32, base: &Term) -> Term {
        let mut t = base.clone();
        for i in (0..k).rev() {
            let c = if d >> i & 1 == 1 { &self.nc.bit1 } else { &self.nc.bit0 };
            t = Term::comb_unchecked(c.clone(), t);
        }
        t
    }

    // One digit at a time; operands may have variables at the bottom.
    fn add_bits(&self, a: &Term, b: &Term) -> Result<Theorem> {
        let (x, y, i) = match (sym_digit(a), sym_digit(b)) {
            (SymDigit::Zero, _) => return self.inst_n(&self.add[0], b),
            (_, SymDigit::Zero) => return self.inst_m(&self.add[1], a),
            (SymDigit::Bit0(x), SymDigit::Bit0(y)) => (x, y, 2),
            (SymDigit::Bit0(x), SymDigit::Bit1(y)) => (x, y, 3),
            (SymDigit::Bit1(x), SymDigit::Bit0(y)) => (x, y, 4),
            (SymDigit::Bit1(x), SymDigit::Bit1(y)) => (x, y, 5),
            _ => return refl_conv(&self.mk_add(a, b)),
        };
        let th1 = self.inst_mn(&self.add[i], x, y)?;
        let sum = self.add_bits(x, y)?;
        let th2 = match i {
            2 => self.bit0_of(&sum)?,
            3 | 4 => self.bit1_of(&sum)?,
            _ => {
                let s = mk_comb_rule(&self.refl_suc, &sum)?;
                let s = trans(&s, &self.suc_num(rhs_of(&sum))?)?;
                self.bit0_of(&s)?
            }
        };
        trans(&th1, &th2)
    }

    fn mult_num(&self, a: &Term, b: &Term) -> Result<Theorem> {
        if is_zero(a) {
            return self.inst_n(&self.mult[0], b);
        }
        if is_zero(b) {
            return self.inst_m(&self.mult[1], a);
        }
        let mut multiples = BTreeMap::new();
        self.mult_chunks(a, b, &mut multiples)
    }

    // `b` is nonzero; `multiples` caches `d * b` by digit value.
    fn mult_chunks(&self, a: &Term, b: &Term, multiples: &mut BTreeMap<u32, Theorem>) -> Result<Theorem> {
        match chunk_of(MCHUNK, a) {
            Some((d, x)) if !is_zero(x) => {
                let lemma = self.mult_lemma(d)?;
                let rec = self.mult_chunks(x, b, multiples)?;
                let qd = self.multiple(d, b, multiples)?;
                let p = rhs_of(&rec);
                let q = rhs_of(&qd);
                let sum = self.add_num(&self.layers(MCHUNK, 0, p), q)?;
                let theta = [
                    (self.m.clone(), x.clone()),
                    (self.n.clone(), b.clone()),
                    (self.p.clone(), p.clone()),
                    (self.q.clone(), q.clone()),
                    (self.r.clone(), rhs_of(&sum).clone()),
                ];
                let th = var_inst_rule(&theta, &lemma)?;
                mp_rule(&mp_rule(&mp_rule(&th, &rec)?, &qd)?, &sum)
            }
            _ => self.mult_bits(a, b),
        }
    }

    // `d * b` for a digit value `d`, built from `(d div 2) * b`.
    fn multiple(&self, d: u32, b: &Term, multiples: &mut BTreeMap<u32, Theorem>) -> Result<Theorem> {
        if let Some(th) = multiples.get(&d) {
            return Ok(th.clone());
        }
        let th = if d == 0 {
            self.inst_n(&self.mult[0], b)?
        } else {
            let x = self.mk(&BigUint::from(d >> 1));
            let half = self.multiple(d >> 1, b, multiples)?;
            if d & 1 == 0 {
                let th1 = self.inst_mn(&self.mult[2], &x, b)?;
                trans(&th1, &self.bit0_of(&half)?)?
            } else {
                let th1 = self.inst_mn(&self.mult[3], &x, b)?;
                let dbl = self.bit0_of(&half)?;
                let th2 = self.add1(&dbl, b)?;
                trans(&th1, &trans(&th2, &self.add_num(rhs_of(&dbl), b)?)?)?
            }
        };
        multiples.insert(d, th.clone());
        Ok(th)
    }

    // `m * n = p ==> d * n = q ==> B p + q = r ==> B_d m * n = r`, where
    // `B_d` spells the digits of `d` and `B` is all zero digits.
    fn mult_lemma(&self, d: u32) -> Result<Theorem> {
        if let Some(l) = self.mult_lemmas.borrow().get(&d) {
            return Ok(l.clone());
        }
        let (m, n, p, q, r) = (&self.m, &self.n, &self.p, &self.q, &self.r);
        let dn = self.mk(&BigUint::from(d));
        let shifted = self.layers(MCHUNK, 0, m);
        // B_d m = B m + d
        let split = sym_rule(&self.add_bits(&shifted, &dn)?)?;
        let th1 = mk_bin1_rule(&self.mult_c, &split, n)?;
        let theta = [(m.clone(), shifted.clone()), (n.clone(), dn.clone()), (p.clone(), n.clone())];
        let th2 = var_inst_rule(&theta, &self.mult[4])?;
        // B m * n = B (m * n)
        let mut sh = refl_conv(&Term::comb_unchecked(Term::comb_unchecked(self.mult_c.clone(), m.clone()), n.clone()))?;
        for i in 1..=MCHUNK {
            let th = self.inst_mn(&self.mult[2], &self.layers(i - 1, 0, m), n)?;
            sh = trans(&th, &mk_comb2_rule(&self.nc.bit0, &sh)?)?;
        }
        let mn = Term::comb_unchecked(Term::comb_unchecked(self.mult_c.clone(), m.clone()), n.clone());
        let h1 = syntax::mk_eq(&mn, p)?;
        let dnn = Term::comb_unchecked(Term::comb_unchecked(self.mult_c.clone(), dn.clone()), n.clone());
        let h2 = syntax::mk_eq(&dnn, q)?;
        let h3 = syntax::mk_eq(&self.mk_add(&self.layers(MCHUNK, 0, p), q), r)?;
        let mut w = assume_rule(&h1)?;
        for _ in 0..MCHUNK {
            w = mk_comb2_rule(&self.nc.bit0, &w)?;
        }
        let th3 = mk_bin_rule(&self.add_c, &trans(&sh, &w)?, &assume_rule(&h2)?)?;
        let all = trans(&trans(&trans(&th1, &th2)?, &th3)?, &assume_rule(&h3)?)?;
        let mut lemma = all;
        for h in [&h3, &h2, &h1] {
            lemma = disch_rule(self.thy, h, &lemma)?;
        }
        self.mult_lemmas.borrow_mut().insert(d, lemma.clone());
        Ok(lemma)
    }

    fn mult_bits(&self, a: &Term, b: &Term) -> Result<Theorem> {
        if is_zero(a) {
            return self.inst_n(&self.mult[0], b);
        }
        match digit(a) {
            Digit::Bit0(x) => {
                let th1 = self.inst_mn(&self.mult[2], x, b)?;
                trans(&th1, &self.bit0_of(&self.mult_bits(x, b)?)?)
            }
            Digit::Bit1(x) => {
                let th1 = self.inst_mn(&self.mult[3], x, b)?;
                let d = self.bit0_of(&self.mult_bits(x, b)?)?;
                let th2 = self.add1(&d, b)?;
                let th3 = self.add_num(rhs_of(&d), b)?;
                trans(&th1, &trans(&th2, &th3)?)
            }
            Digit::Zero => unreachable!(),
        }
    }

    fn square(&self, th: &Theorem) -> Result<Theorem> {
        let k = rhs_of(th);
        let th1 = mk_bin_rule(&self.mult_c, th, th)?;
        let cached = self.squares.borrow().get(k).cloned();
        let sq = match cached {
            Some(sq) => sq,
            None => {
                let sq = self.mult_num(k, k)?;
                let mut squares = self.squares.borrow_mut();
                if squares.len() >= CACHE_LIMIT {
                    squares.clear();
                }
                squares.insert(k.clone(), sq.clone());
                sq
            }
        };
        trans(&th1, &sq)
    }

    /// `a exp b` by stepping up from the last power of `a` computed, or by
    /// repeated squaring, whichever is estimated to need fewer inferences.
    fn power(&self, a: &Term, b: &Term) -> Result<Theorem> {
        let (av, bv) = (dest_nat(a)?, dest_nat(b)?);
        let last = self.powers.borrow().get(&av).cloned();
        let th = match last {
            Some((k, th)) if k == bv => th,
            Some((k, th)) if k < bv && chain_is_cheaper(&av, &k, &bv) => {
                let mut th = th;
                let mut k = k;
                while k < bv {
                    th = self.exp_step(a, &self.mk(&k), &th)?;
                    k += 1u32;
                }
                th
            }
            _ => self.exp_num(a, b)?,
        };
        let mut powers = self.powers.borrow_mut();
        if powers.len() >= CACHE_LIMIT {
            powers.clear();
        }
        powers.insert(av, (bv, th.clone()));
        Ok(th)
    }

    // From `|- a exp k = r` derive `|- a exp k' = r'` with `k'` the successor.
    fn exp_step(&self, a: &Term, k: &Term, th: &Theorem) -> Result<Theorem> {
        let th_s = self.suc_num(k)?;
        let th1 = mk_bin2_rule(&self.exp_c, a, &sym_rule(&th_s)?)?;
        let th2 = self.inst_mn(&self.exp[3], a, k)?;
        let th3 = mk_bin2_rule(&self.mult_c, a, th)?;
        let th4 = self.mult_num(a, rhs_of(th))?;
        trans(&th1, &trans(&th2, &trans(&th3, &th4)?)?)
    }

    fn exp_num(&self, a: &Term, b: &Term) -> Result<Theorem> {
        match digit(b) {
            Digit::Zero => self.inst_m(&self.exp[0], a),
            Digit::Bit0(y) => {
                let th1 = self.inst_mn(&self.exp[1], a, y)?;
                trans(&th1, &self.square(&self.exp_num(a, y)?)?)
            }
            Digit::Bit1(y) => {
                let th1 = self.inst_mn(&self.exp[2], a, y)?;
                let sq = self.square(&self.exp_num(a, y)?)?;
                let th2 = mk_bin2_rule(&self.mult_c, a, &sq)?;
                let th3 = self.mult_num(a, rhs_of(&sq))?;
                trans(&th1, &trans(&th2, &th3)?)
            }
        }
    }

    fn lt_num(&self, a: &Term, b: &Term) -> Result<Theorem> {
        let (th, rec) = match (digit(a), digit(b)) {
            (_, Digit::Zero) => return self.inst_m(&self.lt[0], a),
            (Digit::Zero, Digit::Bit0(y)) => (self.inst_n(&self.lt[1], y)?, Some((a, y, true))),
            (Digit::Zero, Digit::Bit1(y)) => return self.inst_n(&self.lt[2], y),
            (Digit::Bit0(x), Digit::Bit0(y)) => (self.inst_mn(&self.lt[3], x, y)?, Some((x, y, true))),
            (Digit::Bit0(x), Digit::Bit1(y)) => (self.inst_mn(&self.lt[4], x, y)?, Some((x, y, false))),
            (Digit::Bit1(x), Digit::Bit0(y)) => (self.inst_mn(&self.lt[5], x, y)?, Some((x, y, true))),
            (Digit::Bit1(x), Digit::Bit1(y)) => (self.inst_mn(&self.lt[6], x, y)?, Some((x, y, true))),
        };
        self.finish_rel(th, rec)
    }

    fn le_num(&self, a: &Term, b: &Term) -> Result<Theorem> {
        let (th, rec) = match (digit(a), digit(b)) {
            (Digit::Zero, _) => return self.inst_n(&self.le[0], b),
            (Digit::Bit0(x), Digit::Zero) => (self.inst_m(&self.le[1], x)?, Some((x, b, false))),
            (Digit::Bit1(x), Digit::Zero) => return self.inst_m(&self.le[2], x),
            (Digit::Bit0(x), Digit::Bit0(y)) => (self.inst_mn(&self.le[3], x, y)?, Some((x, y, false))),
            (Digit::Bit0(x), Digit::Bit1(y)) => (self.inst_mn(&self.le[4], x, y)?, Some((x, y, false))),
            (Digit::Bit1(x), Digit::Bit0(y)) => (self.inst_mn(&self.le[5], x, y)?, Some((x, y, true))),
            (Digit::Bit1(x), Digit::Bit1(y)) => (self.inst_mn(&self.le[6], x, y)?, Some((x, y, false))),
        };
        self.finish_rel(th, rec)
    }

    // `rec` names the smaller comparison the clause reduces to; `true`
    // selects `<`, `false` selects `<=`.
    fn finish_rel(&self, th: Theorem, rec: Option<(&Term, &Term, bool)>) -> Result<Theorem> {
        match rec {
            None => Ok(th),
            Some((x, y, strict)) => {
                let r = if strict { self.lt_num(x, y)? } else { self.le_num(x, y)? };
                trans(&th, &r)
            }
        }
    }

    fn even_num(&self, a: &Term) -> Result<Theorem> {
        match digit(a) {
            Digit::Zero => eqt_intro_rule(self.thy, &self.even[0]),
            Digit::Bit0(x) => eqt_intro_rule(self.thy, &self.inst_n(&self.even[1], x)?),
            Digit::Bit1(x) => eqf_intro_rule(self.thy, &self.inst_n(&self.even[2], x)?),
        }
    }

    fn pre_num(&self, a: &Term) -> Result<Theorem> {
        if is_zero(a) {
            return Ok(self.pre[0].clone());
        }
        let k = self.mk(&(dest_nat(a)? - 1u32));
        let th_s = self.suc_num(&k)?;
        let th1 = mk_comb2_rule(&self.pre_c, &sym_rule(&th_s)?)?;
        trans(&th1, &self.inst_n(&self.pre[1], &k)?)
    }

    fn sub_num(&self, a: &Term, b: &Term) -> Result<Theorem> {
        let (x, y) = (dest_nat(a)?, dest_nat(b)?);
        if x >= y {
            let k = self.mk(&(x - y));
            let th_a = self.add_num(&k, b)?;
            let th1 = mk_bin1_rule(&self.sub_c, &sym_rule(&th_a)?, b)?;
            trans(&th1, &self.inst_mn(&self.sub[0], &k, b)?)
        } else {
            let le = eqt_elim_rule(self.thy, &self.le_num(a, b)?)?;
            mp_rule(&self.inst_mn(&self.sub[1], a, b)?, &le)
        }
    }

    fn divmod_num(&self, origin: &str, a: &Term, b: &Term, clause: &Theorem) -> Result<Theorem> {
        let (x, y) = (dest_nat(a)?, dest_nat(b)?);
        if y.is_zero() {
            return fail(origin, "division by zero");
        }
        let (qv, rv) = x.div_rem(&y);
        let (q, r) = (self.mk(&qv), self.mk(&rv));
        let th_m = self.mult_num(&q, b)?;
        let th1 = mk_bin1_rule(&self.add_c, &th_m, &r)?;
        let th2 = self.add_num(rhs_of(&th_m), &r)?;
        let eq = sym_rule(&trans(&th1, &th2)?)?;
        let lt = eqt_elim_rule(self.thy, &self.lt_num(&r, b)?)?;
        let both = conj_rule(self.thy, &eq, &lt)?;
        let theta = [
            (self.m.clone(), a.clone()),
            (self.n.clone(), b.clone()),
            (self.q.clone(), q),
            (self.r.clone(), r),
        ];
        mp_rule(&var_inst_rule(&theta, clause)?, &both)
    }

    fn unary<'t>(&self, origin: &str, name: &str, t: &'t Term) -> Result<&'t Term> {
        match t.as_comb() {
            Some((f, x)) if f.is_const_named(name) && is_nat(x) => Ok(x),
            _ => fail(origin, format!("expected {} applied to a numeral", name)),
        }
    }

    fn binary<'t>(&self, origin: &str, name: &str, t: &'t Term) -> Result<(&'t Term, &'t Term)> {
        match dest_binop_named(name, t) {
            Some((a, b)) if is_nat(a) && is_nat(b) => Ok((a, b)),
            _ => fail(origin, format!("expected {} applied to two numerals", name)),
        }
    }

    pub fn suc_conv(&self, t: &Term) -> Result<Theorem> {
        let x = self.unary("suc_conv", SUC, t)?;
        self.suc_num(x).origin("suc_conv")
    }

    pub fn pre_conv(&self, t: &Term) -> Result<Theorem> {
        let x = self.unary("pre_conv", PRE, t)?;
        self.pre_num(x).origin("pre_conv")
    }

    pub fn add_conv(&self, t: &Term) -> Result<Theorem> {
        let (a, b) = self.binary("add_conv", ADD, t)?;
        self.add_num(a, b).origin("add_conv")
    }

    pub fn sub_conv(&self, t: &Term) -> Result<Theorem> {
        let (a, b) = self.binary("sub_conv", SUB, t)?;
        self.sub_num(a, b).origin("sub_conv")
    }

    pub fn mult_conv(&self, t: &Term) -> Result<Theorem> {
        let (a, b) = self.binary("mult_conv", MULT, t)?;
        self.mult_num(a, b).origin("mult_conv")
    }

    pub fn exp_conv(&self, t: &Term) -> Result<Theorem> {
        let (a, b) = self.binary("exp_conv", EXP, t)?;
        self.power(a, b).origin("exp_conv")
    }

    pub fn div_conv(&self, t: &Term) -> Result<Theorem> {
        let (a, b) = self.binary("div_conv", DIV, t)?;
        self.divmod_num("div_conv", a, b, &self.div[0]).origin("div_conv")
    }

    pub fn mod_conv(&self, t: &Term) -> Result<Theorem> {
        let (a, b) = self.binary("mod_conv", MOD, t)?;
        self.divmod_num("mod_conv", a, b, &self.modulo[0]).origin("mod_conv")
    }

    pub fn lt_conv(&self, t: &Term) -> Result<Theorem> {
        let (a, b) = self.binary("lt_conv", LT, t)?;
        self.lt_num(a, b).origin("lt_conv")
    }

    pub fn le_conv(&self, t: &Term) -> Result<Theorem> {
        let (a, b) = self.binary("le_conv", LE, t)?;
        self.le_num(a, b).origin("le_conv")
    }

    pub fn gt_conv(&self, t: &Term) -> Result<Theorem> {
        let (a, b) = self.binary("gt_conv", GT, t)?;
        let th = self.inst_mn(&self.gt[0], a, b)?;
        trans(&th, &self.lt_num(b, a)?).origin("gt_conv")
    }

    pub fn ge_conv(&self, t: &Term) -> Result<Theorem> {
        let (a, b) = self.binary("ge_conv", GE, t)?;
        let th = self.inst_mn(&self.ge[0], a, b)?;
        trans(&th, &self.le_num(b, a)?).origin("ge_conv")
    }

    pub fn even_conv(&self, t: &Term) -> Result<Theorem> {
        let x = self.unary("even_conv", EVEN, t)?;
        self.even_num(x).origin("even_conv")
    }

    /// The conversion for the operator at the head of `t`, by name.
    pub fn conv_for(&self, op: &str, t: &Term) -> Result<Theorem> {
        match op {
            SUC => self.suc_conv(t),
            PRE => self.pre_conv(t),
            ADD => self.add_conv(t),
            SUB => self.sub_conv(t),
            MULT => self.mult_conv(t),
            EXP => self.exp_conv(t),
            DIV => self.div_conv(t),
            MOD => self.mod_conv(t),
            LT => self.lt_conv(t),
            LE => self.le_conv(t),
            GT => self.gt_conv(t),
            GE => self.ge_conv(t),
            EVEN => self.even_conv(t),
            _ => fail("eval_conv", format!("no conversion for {}", op)),
        }
    }

    /// Evaluate a closed expression built from numerals and the arithmetic
    /// operators, innermost first.
    pub fn eval_conv(&self, t: &Term) -> Result<Theorem> {
        if is_nat(t) {
            return refl_conv(t);
        }
        let (head, args) = t.strip_comb();
        let op = match head.kind() {
            TermKind::Const(n) if OPERATORS.contains(&&**n) => n.clone(),
            _ => return fail("eval_conv", "not an arithmetic expression"),
        };
        let mut th = refl_conv(&head)?;
        for a in &args {
            th = mk_comb_rule(&th, &self.eval_conv(a)?)?;
        }
        let done = self.conv_for(&op, rhs_of(&th))?;
        trans(&th, &done).origin("eval_conv")
    }
}

// Rough inference counts: stepping from `a exp k` multiplies by `a` once per
// step, while squaring costs grow with the square of the result length.
fn chain_is_cheaper(a: &BigUint, k: &BigUint, b: &BigUint) -> bool {
    let (Some(k), Some(b)) = (u64::try_from(k).ok(), u64::try_from(b).ok()) else {
        return false;
    };
    if b - k > 1 << 16 {
        return false;
    }
    let la = a.bits() as u128;
    let ones = a.count_ones() as u128;
    let (k, b) = (k as u128, b as u128);
    6 * ones * (b * b - k * k) < la * b * b
}

/// The thirteen arithmetic operators with evaluation conversions.
pub const OPERATORS: &[&str] = &[SUC, PRE, ADD, SUB, MULT, EXP, DIV, MOD, LT, LE, GT, GE, EVEN];

/// Big-integer meaning of an operator on numerals, or `None` for division
/// by zero. Relations and `even` yield 0 or 1.
pub fn eval_big(op: &str, a: &BigUint, b: &BigUint) -> Option<BigUint> {
    let bit = |p: bool| if p { BigUint::one() } else { BigUint::zero() };
    Some(match op {
        SUC => a + 1u32,
        PRE => {
            if a.is_zero() {
                BigUint::zero()
            } else {
                a - 1u32
            }
        }
        ADD => a + b,
        SUB => {
            if a >= b {
                a - b
            } else {
                BigUint::zero()
            }
        }
        MULT => a * b,
        EXP => a.pow(u32::try_from(b).ok()?),
        DIV => {
            if b.is_zero() {
                return None;
            }
            a / b
        }
        MOD => {
            if b.is_zero() {
                return None;
            }
            a % b
        }
        LT => bit(a < b),
        LE => bit(a <= b),
        GT => bit(a > b),
        GE => bit(a >= b),
        EVEN => bit(a.is_even()),
        _ => return None,
    })
}
