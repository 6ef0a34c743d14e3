//! Derivations run during the platform build.

use alloc::format;

use crate::error::Result;
use crate::kernel::Theorem;
use crate::platform::Builder;
use crate::syntax;

const B: (&str, &str) = ("p", "bool");
const BQ: (&str, &str) = ("q", "bool");
const BR: (&str, &str) = ("r", "bool");

pub(crate) fn logic_lemmas(b: &mut Builder) -> Result<()> {
    let th = b.gen(&[B], &b.disch("p", &b.a("p")?)?)?;
    b.derive("imp_refl_thm", &th)?;

    let th = b.s.refl_conv(&b.tm("x:'a")?)?;
    let th = b.gen(&[("x", "'a")], &th)?;
    b.derive("eq_refl_thm", &th)?;

    let th = b.s.sym_conv(&b.tm("(x:'a) = y")?)?;
    let th = b.gen(&[("x", "'a"), ("y", "'a")], &th)?;
    b.derive("eq_sym_thm", &th)?;

    let h = b.a("(x:'a) = y /\\ y = z")?;
    let th = b.s.eq_trans_rule(&b.c1(&h)?, &b.c2(&h)?)?;
    let th = b.disch("(x:'a) = y /\\ y = z", &th)?;
    let th = b.gen(&[("x", "'a"), ("y", "'a"), ("z", "'a")], &th)?;
    b.derive("eq_trans_thm", &th)?;

    negation(b)?;
    connectives(b)?;
    simplifications(b)?;
    quantifiers(b)?;
    Ok(())
}

fn negation(b: &mut Builder) -> Result<()> {
    // ~true <=> false
    let t = b.s.truth()?;
    let l = b.mp(&b.ne(&b.a("~true")?)?, &t)?;
    let r = b.contr("~true", &b.a("false")?)?;
    b.derive("not_true_thm", &b.da(&r, &l)?)?;

    // ~false <=> true
    let th = b.ni(&b.disch("false", &b.a("false")?)?)?;
    b.derive("not_false_thm", &b.s.eqt_intro_rule(&th)?)?;

    // ~~p <=> p
    let f = b.mp(&b.ne(&b.a("~~p")?)?, &b.a("~p")?)?;
    let l = b.s.ccontr_rule(&b.tm("p")?, &f)?;
    let f = b.mp(&b.ne(&b.a("~p")?)?, &b.a("p")?)?;
    let r = b.ni(&b.disch("~p", &f)?)?;
    let th = b.gen(&[B], &b.da(&r, &l)?)?;
    b.derive("not_not_thm", &th)?;

    // ~(p /\ ~p)
    let h = b.a("p /\\ ~p")?;
    let f = b.mp(&b.ne(&b.c2(&h)?)?, &b.c1(&h)?)?;
    let th = b.ni(&b.disch("p /\\ ~p", &f)?)?;
    b.derive("not_contr_thm", &b.gen(&[B], &th)?)?;

    // (p ==> q) ==> ~q ==> ~p
    let f = b.mp(&b.ne(&b.a("~q")?)?, &b.mp(&b.a("p ==> q")?, &b.a("p")?)?)?;
    let th = b.ni(&b.disch("p", &f)?)?;
    let th = b.disch("p ==> q", &b.disch("~q", &th)?)?;
    b.derive("contrapos_thm", &b.gen(&[B, BQ], &th)?)?;

    // ~(p /\ q) <=> ~p \/ ~q
    let nq = b.ni(&b.disch(
        "q",
        &b.mp(&b.ne(&b.a("~(p /\\ q)")?)?, &b.conj(&b.a("p")?, &b.a("q")?)?)?,
    )?)?;
    let l = b.cases(&b.em("p")?, &b.d2("~p", &nq)?, &b.d1(&b.a("~p")?, "~q")?)?;
    let c = b.a("p /\\ q")?;
    let f1 = b.mp(&b.ne(&b.a("~p")?)?, &b.c1(&c)?)?;
    let f2 = b.mp(&b.ne(&b.a("~q")?)?, &b.c2(&c)?)?;
    let f = b.cases(&b.a("~p \\/ ~q")?, &f1, &f2)?;
    let r = b.ni(&b.disch("p /\\ q", &f)?)?;
    let th = b.gen(&[B, BQ], &b.da(&r, &l)?)?;
    b.derive("de_morgan_conj_thm", &th)?;

    // ~(p \/ q) <=> ~p /\ ~q
    let n = b.ne(&b.a("~(p \\/ q)")?)?;
    let np = b.ni(&b.disch("p", &b.mp(&n, &b.d1(&b.a("p")?, "q")?)?)?)?;
    let nq = b.ni(&b.disch("q", &b.mp(&n, &b.d2("p", &b.a("q")?)?)?)?)?;
    let l = b.conj(&np, &nq)?;
    let c = b.a("~p /\\ ~q")?;
    let f1 = b.mp(&b.ne(&b.c1(&c)?)?, &b.a("p")?)?;
    let f2 = b.mp(&b.ne(&b.c2(&c)?)?, &b.a("q")?)?;
    let f = b.cases(&b.a("p \\/ q")?, &f1, &f2)?;
    let r = b.ni(&b.disch("p \\/ q", &f)?)?;
    let th = b.gen(&[B, BQ], &b.da(&r, &l)?)?;
    b.derive("de_morgan_disj_thm", &th)?;

    // (p ==> q) <=> ~p \/ q
    let l = b.cases(
        &b.em("p")?,
        &b.d2("~p", &b.mp(&b.a("p ==> q")?, &b.a("p")?)?)?,
        &b.d1(&b.a("~p")?, "q")?,
    )?;
    let absurd = b.contr("q", &b.mp(&b.ne(&b.a("~p")?)?, &b.a("p")?)?)?;
    let r = b.disch("p", &b.cases(&b.a("~p \\/ q")?, &absurd, &b.a("q")?)?)?;
    let th = b.gen(&[B, BQ], &b.da(&r, &l)?)?;
    b.derive("imp_disj_thm", &th)?;
    Ok(())
}

fn connectives(b: &mut Builder) -> Result<()> {
    // p /\ q <=> q /\ p
    let h = b.a("p /\\ q")?;
    let l = b.conj(&b.c2(&h)?, &b.c1(&h)?)?;
    let h = b.a("q /\\ p")?;
    let r = b.conj(&b.c2(&h)?, &b.c1(&h)?)?;
    let th = b.gen(&[B, BQ], &b.da(&r, &l)?)?;
    b.derive("conj_comm_thm", &th)?;

    // p \/ q <=> q \/ p
    let l = b.cases(&b.a("p \\/ q")?, &b.d2("q", &b.a("p")?)?, &b.d1(&b.a("q")?, "p")?)?;
    let r = b.cases(&b.a("q \\/ p")?, &b.d2("p", &b.a("q")?)?, &b.d1(&b.a("p")?, "q")?)?;
    let th = b.gen(&[B, BQ], &b.da(&r, &l)?)?;
    b.derive("disj_comm_thm", &th)?;

    // p /\ q /\ r <=> (p /\ q) /\ r
    let h = b.a("p /\\ q /\\ r")?;
    let qr = b.c2(&h)?;
    let l = b.conj(&b.conj(&b.c1(&h)?, &b.c1(&qr)?)?, &b.c2(&qr)?)?;
    let h = b.a("(p /\\ q) /\\ r")?;
    let pq = b.c1(&h)?;
    let r = b.conj(&b.c1(&pq)?, &b.conj(&b.c2(&pq)?, &b.c2(&h)?)?)?;
    let th = b.gen(&[B, BQ, BR], &b.da(&r, &l)?)?;
    b.derive("conj_assoc_thm", &th)?;

    // p \/ q \/ r <=> (p \/ q) \/ r
    let c1 = b.d1(&b.d1(&b.a("p")?, "q")?, "r")?;
    let cq = b.d1(&b.d2("p", &b.a("q")?)?, "r")?;
    let cr = b.d2("p \\/ q", &b.a("r")?)?;
    let c2 = b.cases(&b.a("q \\/ r")?, &cq, &cr)?;
    let l = b.cases(&b.a("p \\/ q \\/ r")?, &c1, &c2)?;
    let cp = b.d1(&b.a("p")?, "q \\/ r")?;
    let cq = b.d2("p", &b.d1(&b.a("q")?, "r")?)?;
    let c1 = b.cases(&b.a("p \\/ q")?, &cp, &cq)?;
    let c2 = b.d2("p", &b.d2("q", &b.a("r")?)?)?;
    let r = b.cases(&b.a("(p \\/ q) \\/ r")?, &c1, &c2)?;
    let th = b.gen(&[B, BQ, BR], &b.da(&r, &l)?)?;
    b.derive("disj_assoc_thm", &th)?;

    // (p ==> q) ==> (q ==> r) ==> p ==> r
    let th = b.mp(&b.a("q ==> r")?, &b.mp(&b.a("p ==> q")?, &b.a("p")?)?)?;
    let th = b.disch("p ==> q", &b.disch("q ==> r", &b.disch("p", &th)?)?)?;
    b.derive("imp_trans_thm", &b.gen(&[B, BQ, BR], &th)?)?;

    // (p /\ q ==> r) <=> p ==> q ==> r
    let th = b.mp(&b.a("p /\\ q ==> r")?, &b.conj(&b.a("p")?, &b.a("q")?)?)?;
    let l = b.disch("p", &b.disch("q", &th)?)?;
    let c = b.a("p /\\ q")?;
    let th = b.mp(&b.mp(&b.a("p ==> q ==> r")?, &b.c1(&c)?)?, &b.c2(&c)?)?;
    let r = b.disch("p /\\ q", &th)?;
    let th = b.gen(&[B, BQ, BR], &b.da(&r, &l)?)?;
    b.derive("conj_imp_thm", &th)?;

    // (p \/ q ==> r) <=> (p ==> r) /\ (q ==> r)
    let h = b.a("p \\/ q ==> r")?;
    let l = b.conj(
        &b.disch("p", &b.mp(&h, &b.d1(&b.a("p")?, "q")?)?)?,
        &b.disch("q", &b.mp(&h, &b.d2("p", &b.a("q")?)?)?)?,
    )?;
    let c = b.a("(p ==> r) /\\ (q ==> r)")?;
    let th = b.cases(
        &b.a("p \\/ q")?,
        &b.mp(&b.c1(&c)?, &b.a("p")?)?,
        &b.mp(&b.c2(&c)?, &b.a("q")?)?,
    )?;
    let r = b.disch("p \\/ q", &th)?;
    let th = b.gen(&[B, BQ, BR], &b.da(&r, &l)?)?;
    b.derive("disj_imp_thm", &th)?;

    // (p <=> q) ==> p ==> q
    let th = b.s.eq_mp_rule(&b.a("p <=> q")?, &b.a("p")?)?;
    let th = b.disch("p <=> q", &b.disch("p", &th)?)?;
    b.derive("iff_imp_thm", &b.gen(&[B, BQ], &th)?)?;
    Ok(())
}

fn simplifications(b: &mut Builder) -> Result<()> {
    let t = b.s.truth()?;
    let ap = b.a("p")?;

    let th = b.da(&b.conj(&t, &ap)?, &b.c2(&b.a("true /\\ p")?)?)?;
    b.derive("true_conj_thm", &b.gen(&[B], &th)?)?;
    let th = b.da(&b.conj(&ap, &t)?, &b.c1(&b.a("p /\\ true")?)?)?;
    b.derive("conj_true_thm", &b.gen(&[B], &th)?)?;

    let af = b.a("false")?;
    let th = b.da(&b.contr("false /\\ p", &af)?, &b.c1(&b.a("false /\\ p")?)?)?;
    b.derive("false_conj_thm", &b.gen(&[B], &th)?)?;
    let th = b.da(&b.contr("p /\\ false", &af)?, &b.c2(&b.a("p /\\ false")?)?)?;
    b.derive("conj_false_thm", &b.gen(&[B], &th)?)?;

    let th = b.s.eqt_intro_rule(&b.d1(&t, "p")?)?;
    b.derive("true_disj_thm", &b.gen(&[B], &th)?)?;
    let th = b.s.eqt_intro_rule(&b.d2("p", &t)?)?;
    b.derive("disj_true_thm", &b.gen(&[B], &th)?)?;

    let l = b.cases(&b.a("false \\/ p")?, &b.contr("p", &af)?, &ap)?;
    let th = b.da(&b.d2("false", &ap)?, &l)?;
    b.derive("false_disj_thm", &b.gen(&[B], &th)?)?;
    let l = b.cases(&b.a("p \\/ false")?, &ap, &b.contr("p", &af)?)?;
    let th = b.da(&b.d1(&ap, "false")?, &l)?;
    b.derive("disj_false_thm", &b.gen(&[B], &th)?)?;

    let l = b.mp(&b.a("true ==> p")?, &t)?;
    let th = b.da(&b.disch("true", &ap)?, &l)?;
    b.derive("true_imp_thm", &b.gen(&[B], &th)?)?;
    let th = b.s.eqt_intro_rule(&b.disch("p", &t)?)?;
    b.derive("imp_true_thm", &b.gen(&[B], &th)?)?;
    let th = b.s.eqt_intro_rule(&b.disch("false", &b.contr("p", &af)?)?)?;
    b.derive("false_imp_thm", &b.gen(&[B], &th)?)?;
    let th = b.da(&b.ne(&b.a("~p")?)?, &b.ni(&b.a("p ==> false")?)?)?;
    b.derive("imp_false_thm", &b.gen(&[B], &th)?)?;

    let th = b.da(&b.conj(&ap, &ap)?, &b.c1(&b.a("p /\\ p")?)?)?;
    b.derive("conj_idem_thm", &b.gen(&[B], &th)?)?;
    let th = b.da(&b.d1(&ap, "p")?, &b.cases(&b.a("p \\/ p")?, &ap, &ap)?)?;
    b.derive("disj_idem_thm", &b.gen(&[B], &th)?)?;

    let th = b.da(
        &b.s.eqt_intro_rule(&ap)?,
        &b.s.eqt_elim_rule(&b.a("p <=> true")?)?,
    )?;
    b.derive("eq_true_thm", &b.gen(&[B], &th)?)?;
    let th = b.da(
        &b.s.eqf_intro_rule(&b.a("~p")?)?,
        &b.s.eqf_elim_rule(&b.a("p <=> false")?)?,
    )?;
    b.derive("eq_false_thm", &b.gen(&[B], &th)?)?;
    Ok(())
}

fn quantifiers(b: &mut Builder) -> Result<()> {
    let x = ("x", "'a");
    let pq = [("P", "'a -> bool"), ("Q", "'a -> bool")];

    // (!x. p) <=> p
    let l = b.spec("x:'a", &b.a("!x:'a. p")?)?;
    let r = b.gen(&[x], &b.a("p")?)?;
    b.derive("forall_simp_thm", &b.gen(&[B], &b.da(&r, &l)?)?)?;

    // (?x. p) <=> p
    let l = b.choose(x, &b.a("?x:'a. p")?, &b.a("p")?)?;
    let r = b.exists("?x:'a. p", "x:'a", &b.a("p")?)?;
    b.derive("exists_simp_thm", &b.gen(&[B], &b.da(&r, &l)?)?)?;

    // !a. ?x. x = a
    let th = b.exists("?x. x = (a:'a)", "a:'a", &b.s.refl_conv(&b.tm("a:'a")?)?)?;
    b.derive("exists_refl_thm", &b.gen(&[("a", "'a")], &th)?)?;

    // !a. (@x. x = a) = a
    let pa = b.s.beta_conv(&b.tm("(\\x. x = (a:'a)) a")?)?;
    let th = b.s.eq_mp_rule(&b.s.sym_rule(&pa)?, &b.s.refl_conv(&b.tm("a:'a")?)?)?;
    let th = b.s.beta_rule(&b.s.select_rule(&th)?)?;
    b.derive("select_refl_thm", &b.gen(&[("a", "'a")], &th)?)?;

    // (!x. P x /\ Q x) <=> (!x. P x) /\ (!x. Q x)
    let sx = b.spec("x:'a", &b.a("!x:'a. P x /\\ Q x")?)?;
    let l = b.conj(&b.gen(&[x], &b.c1(&sx)?)?, &b.gen(&[x], &b.c2(&sx)?)?)?;
    let c = b.a("(!x:'a. P x) /\\ (!x:'a. Q x)")?;
    let r = b.gen(
        &[x],
        &b.conj(&b.spec("x:'a", &b.c1(&c)?)?, &b.spec("x:'a", &b.c2(&c)?)?)?,
    )?;
    b.derive("forall_and_thm", &b.gen(&pq, &b.da(&r, &l)?)?)?;

    // (?x. P x \/ Q x) <=> (?x. P x) \/ (?x. Q x)
    let ep = "?x:'a. P x";
    let eq = "?x:'a. Q x";
    let epq = "?x:'a. P x \\/ Q x";
    let cp = b.d1(&b.exists(ep, "x:'a", &b.a("(P:'a->bool) x")?)?, eq)?;
    let cq = b.d2(ep, &b.exists(eq, "x:'a", &b.a("(Q:'a->bool) x")?)?)?;
    let l = b.choose(x, &b.a(epq)?, &b.cases(&b.a("(P:'a->bool) x \\/ Q x")?, &cp, &cq)?)?;
    let rp = b.choose(x, &b.a(ep)?, &b.exists(epq, "x:'a", &b.d1(&b.a("(P:'a->bool) x")?, "(Q:'a->bool) x")?)?)?;
    let rq = b.choose(x, &b.a(eq)?, &b.exists(epq, "x:'a", &b.d2("(P:'a->bool) x", &b.a("(Q:'a->bool) x")?)?)?)?;
    let r = b.cases(&b.a("(?x:'a. P x) \\/ (?x:'a. Q x)")?, &rp, &rq)?;
    b.derive("exists_or_thm", &b.gen(&pq, &b.da(&r, &l)?)?)?;

    let p = [("P", "'a -> bool")];

    // ~(!x. P x) <=> ?x. ~P x
    let nex = b.a("~(?x:'a. ~P x)")?;
    let px = b.s.ccontr_rule(
        &b.tm("(P:'a->bool) x")?,
        &b.mp(&b.ne(&nex)?, &b.exists("?x:'a. ~P x", "x:'a", &b.a("~(P:'a->bool) x")?)?)?,
    )?;
    let f = b.mp(&b.ne(&b.a("~(!x:'a. P x)")?)?, &b.gen(&[x], &px)?)?;
    let l = b.s.ccontr_rule(&b.tm("?x:'a. ~P x")?, &f)?;
    let f = b.mp(&b.ne(&b.a("~(P:'a->bool) x")?)?, &b.spec("x:'a", &b.a("!x:'a. P x")?)?)?;
    let f = b.choose(x, &b.a("?x:'a. ~P x")?, &f)?;
    let r = b.ni(&b.disch("!x:'a. P x", &f)?)?;
    b.derive("not_forall_thm", &b.gen(&p, &b.da(&r, &l)?)?)?;

    // ~(?x. P x) <=> !x. ~P x
    let f = b.mp(
        &b.ne(&b.a("~(?x:'a. P x)")?)?,
        &b.exists("?x:'a. P x", "x:'a", &b.a("(P:'a->bool) x")?)?,
    )?;
    let l = b.gen(&[x], &b.ni(&b.disch("(P:'a->bool) x", &f)?)?)?;
    let f = b.mp(&b.ne(&b.spec("x:'a", &b.a("!x:'a. ~P x")?)?)?, &b.a("(P:'a->bool) x")?)?;
    let f = b.choose(x, &b.a("?x:'a. P x")?, &f)?;
    let r = b.ni(&b.disch("?x:'a. P x", &f)?)?;
    b.derive("not_exists_thm", &b.gen(&p, &b.da(&r, &l)?)?)?;

    // !x. P x ==> ?x. P x
    let th = b.exists("?x:'a. P x", "x:'a", &b.a("(P:'a->bool) x")?)?;
    let th = b.gen(&[p[0], x], &b.disch("(P:'a->bool) x", &th)?)?;
    b.derive("exists_intro_thm", &th)?;

    // (!x. P x) ==> P a
    let th = b.spec("a:'a", &b.a("!x:'a. P x")?)?;
    let th = b.gen(&[p[0], ("a", "'a")], &b.disch("!x:'a. P x", &th)?)?;
    b.derive("forall_elim_thm", &th)?;
    Ok(())
}

const PAIR_PRED: &str = "\\r:'a->'b->bool. ?x y. r = (\\a b. a = x /\\ b = y)";
const REP: &str = "rep_prod:'a # 'b -> 'a -> 'b -> bool";

/// `|- pred W` for `W = \a b. a = x0 /\ b = y0`.
fn pair_pred_at(b: &Builder) -> Result<Theorem> {
    let w = "\\(a:'a) (b:'b). a = x0 /\\ b = y0";
    let rw = b.s.refl_conv(&b.tm(w)?)?;
    let e1 = b.exists(&format!("?y:'b. ({}) = (\\a b. a = x0 /\\ b = y)", w), "y0:'b", &rw)?;
    let e2 = b.exists(&format!("?(x:'a) (y:'b). ({}) = (\\a b. a = x /\\ b = y)", w), "x0:'a", &e1)?;
    let bc = b.s.beta_conv(&b.tm(&format!("({}) ({})", PAIR_PRED, w))?)?;
    b.s.eq_mp_rule(&b.s.sym_rule(&bc)?, &e2)
}

pub(crate) fn pair_theory(b: &mut Builder) -> Result<()> {
    let pw = pair_pred_at(b)?;
    let w0 = syntax::rhs(&b.tm("x = (\\(a:'a) (b:'b). a = x0 /\\ b = y0)")?)?;
    let inh = b
        .s
        .exists_rule(&b.tm(&format!("?r. ({}) r", PAIR_PRED))?, &w0, &pw)?;
    b.derive("prod_inhabited_thm", &inh)?;
    let td = b.s.tyconst_definition("prod", &b.tm(PAIR_PRED)?, &inh)?;
    b.defined("prod", "prod_tydef_thm", &td)?;
    let rep_def = b.s.const_specification(&["rep_prod"], &td)?;
    let rep_def = b.defined("rep_prod", "rep_prod_def", &rep_def)?;
    b.define(
        ",",
        "%, = (\\(x:'a) (y:'b). @p:'a # 'b. (\\a b. a = x /\\ b = y) = rep_prod p)",
    )?;

    // rep_prod (x,y) = (\a b. a = x /\ b = y)
    let w = "(\\(a:'a) (b:'b). a = x /\\ b = y)";
    let onto = b.c2(&rep_def)?;
    let s = b.spec(w, &onto)?;
    let theta = [(b.tm("x0:'a")?, b.tm("x:'a")?), (b.tm("y0:'b")?, b.tm("y:'b")?)];
    let ea = b.s.eq_mp_rule(&s, &b.s.var_inst_rule(&theta, &pw)?)?;
    let h = format!("{} = ({}) a", w, REP);
    let q = format!("(\\p. {} = ({}) p)", w, REP);
    let qa = b.s.beta_conv(&b.tm(&format!("{} a", q))?)?;
    let qa = b.s.eq_mp_rule(&b.s.sym_rule(&qa)?, &b.a(&h)?)?;
    let sel = b.s.beta_rule(&b.s.select_rule(&qa)?)?;
    let sel = b.choose(("a", "'a # 'b"), &ea, &sel)?;
    let def = b.s.get_const_definition(",")?;
    let ap = b.s.mk_comb1_rule(&b.s.mk_comb1_rule(&def, &b.tm("x:'a")?)?, &b.tm("y:'b")?)?;
    let ap = b.s.eq_trans_rule(&ap, &b.s.beta_norm_conv(&syntax::rhs(ap.concl())?)?)?;
    let r = b.s.mk_comb2_rule(&b.tm(REP)?, &ap)?;
    let th = b.s.eq_trans_rule(&r, &b.s.sym_rule(&sel)?)?;
    let rep_pair = b.gen(&[("x", "'a"), ("y", "'b")], &th)?;
    let rep_pair = b.derive("rep_pair_thm", &rep_pair)?;

    // (x,y) = (a,b) <=> x = a /\ y = b
    let xy = [b.tm("x:'a")?, b.tm("y:'b")?];
    let ab = [b.tm("a:'a")?, b.tm("b:'b")?];
    let h = b.a("((x:'a), (y:'b)) = (a, b)")?;
    let r = b.s.mk_comb2_rule(&b.tm(REP)?, &h)?;
    let rxy = b.s.list_spec_rule(&xy, &rep_pair)?;
    let rab = b.s.list_spec_rule(&ab, &rep_pair)?;
    let rr = b.s.eq_trans_rule(&b.s.sym_rule(&rxy)?, &b.s.eq_trans_rule(&r, &rab)?)?;
    let app = b.s.mk_comb1_rule(&b.s.mk_comb1_rule(&rr, &xy[0])?, &xy[1])?;
    let app = b.s.beta_rule(&app)?;
    let refls = b.conj(&b.s.refl_conv(&xy[0])?, &b.s.refl_conv(&xy[1])?)?;
    let l = b.s.eq_mp_rule(&app, &refls)?;
    let c = b.a("(x:'a) = a /\\ (y:'b) = b")?;
    let rgt = b.s.mk_pair_rule(&b.c1(&c)?, &b.c2(&c)?)?;
    let th = b.da(&rgt, &l)?;
    let vs = [("x", "'a"), ("y", "'b"), ("a", "'a"), ("b", "'b")];
    let pair_inj = b.derive("pair_inj_thm", &b.gen(&vs, &th)?)?;

    // existence of the projections
    let inj_at = |b: &Builder, l: &str, r: &str| -> Result<Theorem> {
        let ts = [b.tm("x:'a")?, b.tm("y:'b")?, b.tm(l)?, b.tm(r)?];
        b.s.list_spec_rule(&ts, &pair_inj)
    };
    let e1 = "(@u. ?v. ((x:'a), (y:'b)) = (u, v))";
    let qx = b.exists("?v. ((x:'a), (y:'b)) = (x, v)", "y:'b", &b.s.refl_conv(&b.tm("((x:'a), (y:'b))")?)?)?;
    let bq = b.s.beta_conv(&b.tm("(\\u. ?v. ((x:'a), (y:'b)) = (u, v)) x")?)?;
    let qx = b.s.eq_mp_rule(&b.s.sym_rule(&bq)?, &qx)?;
    let sb = b.s.beta_rule(&b.s.select_rule(&qx)?)?;
    let h = b.a(&format!("((x:'a), (y:'b)) = ({}, v)", e1))?;
    let fx = b.c1(&b.s.eq_mp_rule(&inj_at(b, e1, "v:'b")?, &h)?)?;
    let fx = b.choose(("v", "'b"), &sb, &b.s.sym_rule(&fx)?)?;

    let e2 = "(@v. ?u. ((x:'a), (y:'b)) = (u, v))";
    let qy = b.exists("?u. ((x:'a), (y:'b)) = (u, y)", "x:'a", &b.s.refl_conv(&b.tm("((x:'a), (y:'b))")?)?)?;
    let bq = b.s.beta_conv(&b.tm("(\\v. ?u. ((x:'a), (y:'b)) = (u, v)) y")?)?;
    let qy = b.s.eq_mp_rule(&b.s.sym_rule(&bq)?, &qy)?;
    let sb = b.s.beta_rule(&b.s.select_rule(&qy)?)?;
    let h = b.a(&format!("((x:'a), (y:'b)) = (u, {})", e2))?;
    let sy = b.c2(&b.s.eq_mp_rule(&inj_at(b, "u:'a", e2)?, &h)?)?;
    let sy = b.choose(("u", "'a"), &sb, &b.s.sym_rule(&sy)?)?;

    let th = b.gen(&[("x", "'a"), ("y", "'b")], &b.conj(&fx, &sy)?)?;
    let f = "(\\p:'a # 'b. @u. ?v. p = (u, v))";
    let g = "(\\p:'a # 'b. @v. ?u. p = (u, v))";
    let target = format!("!(x:'a) (y:'b). {} (x, y) = x /\\ {} (x, y) = y", f, g);
    let red = b.s.beta_norm_conv(&b.tm(&target)?)?;
    let th = b.s.eq_mp_rule(&b.s.sym_rule(&red)?, &th)?;
    let ex = "!(x:'a) (y:'b). fst (x, y) = x /\\ snd (x, y) = y";
    let ex1 = b.exists(&format!("?snd. !(x:'a) (y:'b). {} (x, y) = x /\\ snd (x, y) = y", f), g, &th)?;
    let ex2 = b.exists(&format!("?fst snd. {}", ex), f, &ex1)?;
    b.derive("fst_snd_exists_thm", &ex2)?;
    let proj = b.s.const_specification(&["fst", "snd"], &ex2)?;
    let proj = b.defined("fst", "fst_snd_def", &proj)?;
    let sp = b.s.spec_all_rule(&proj)?;
    b.derive("fst_thm", &b.gen(&[("x", "'a"), ("y", "'b")], &b.c1(&sp)?)?)?;
    b.derive("snd_thm", &b.gen(&[("x", "'a"), ("y", "'b")], &b.c2(&sp)?)?)?;

    // !p. ?x y. p = (x,y)
    let rp = b.tm(&format!("({}) p", REP))?;
    let s = b.s.spec_rule(&rp, &onto)?;
    let wit = b.exists(
        &format!("?a. ({}) p = ({}) a", REP, REP),
        "p:'a # 'b",
        &b.s.refl_conv(&rp)?,
    )?;
    let rb = b.s.beta_rule(&b.s.eq_mp_rule(&b.s.sym_rule(&s)?, &wit)?)?;
    let h = b.a(&format!("({}) p = {}", REP, w))?;
    let eq = b.s.eq_trans_rule(&h, &b.s.sym_rule(&rxy)?)?;
    let inj = b.c1(&rep_def)?;
    let inj = b.s.list_spec_rule(&[b.tm("p:'a # 'b")?, b.tm("((x:'a), (y:'b))")?], &inj)?;
    let pe = b.mp(&inj, &eq)?;
    let ex = b.exists("?y:'b. (p:'a # 'b) = ((x:'a), y)", "y:'b", &pe)?;
    let ex = b.exists("?(x:'a) (y:'b). (p:'a # 'b) = (x, y)", "x:'a", &ex)?;
    let inner = b.a(&format!("?y:'b. ({}) p = {}", REP, w))?;
    let cy = b.choose(("y", "'b"), &inner, &ex)?;
    let cx = b.choose(("x", "'a"), &rb, &cy)?;
    b.derive("pair_cases_thm", &b.gen(&[("p", "'a # 'b")], &cx)?)?;
    Ok(())
}

pub(crate) fn nat_lemmas(b: &mut Builder) -> Result<()> {
    for (label, src) in [
        ("one_suc_thm", "suc 0"),
        ("two_suc_thm", "suc 1"),
        ("one_add_one_thm", "1 + 1"),
        ("zero_lt_one_thm", "0 < 1"),
        ("even_zero_thm", "even 0"),
    ] {
        let th = b.s.eval_conv(&b.tm(src)?)?;
        b.derive(label, &th)?;
    }
    Ok(())
}
