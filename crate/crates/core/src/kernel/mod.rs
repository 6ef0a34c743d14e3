//! The trusted core.
//!
//! [`Theorem`] values can only be created by the functions in this module
//! tree: the primitive inference rules in [`rules`] and the theory commands
//! on [`Theory`]. Everything else in the crate derives theorems from them.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::sync::atomic::{AtomicBool, AtomicUsize, Ordering as AtomicOrdering};

use crate::term::{alpha_cmp, Term, TermKind};

pub mod rules;
pub mod theory;

pub use theory::Theory;

static FALSE_PRODUCED: AtomicBool = AtomicBool::new(false);
static THEOREMS_MADE: AtomicUsize = AtomicUsize::new(0);

/// True if any assumption-free `|- false` has ever been constructed in
/// this process.
pub fn soundness_alarm() -> bool {
    FALSE_PRODUCED.load(AtomicOrdering::SeqCst)
}

/// Number of theorems constructed so far in this process.
pub fn theorem_count() -> usize {
    THEOREMS_MADE.load(AtomicOrdering::Relaxed)
}

/// A sequent `asms |- concl`.
///
/// Assumptions are kept sorted by [`alpha_cmp`] with alpha-duplicates
/// removed, so printing and replay are deterministic.
#[derive(Clone)]
pub struct Theorem(Arc<ThmData>);

struct ThmData {
    asms: Vec<Term>,
    concl: Term,
}

impl Theorem {
    /// The single construction point for theorems.
    fn make(asms: Vec<Term>, concl: Term) -> Theorem {
        debug_assert!(concl.ty().is_bool());
        debug_assert!(asms.iter().all(|a| a.ty().is_bool()));
        if asms.is_empty() && matches!(concl.kind(), TermKind::Const(n) if &**n == "false") {
            FALSE_PRODUCED.store(true, AtomicOrdering::SeqCst);
        }
        THEOREMS_MADE.fetch_add(1, AtomicOrdering::Relaxed);
        Theorem(Arc::new(ThmData { asms, concl }))
    }

    pub fn asms(&self) -> &[Term] {
        &self.0.asms
    }

    pub fn concl(&self) -> &Term {
        &self.0.concl
    }

    pub fn ptr_eq(&self, other: &Theorem) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Address used by the proof recorder to recognise theorem values.
    pub fn identity(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }
}

pub fn asms(th: &Theorem) -> Vec<Term> {
    th.asms().to_vec()
}

pub fn concl(th: &Theorem) -> Term {
    th.concl().clone()
}

/// Structural equality of theorems.
pub fn thm_eq(th1: &Theorem, th2: &Theorem) -> bool {
    th1.ptr_eq(th2) || (th1.concl() == th2.concl() && th1.asms() == th2.asms())
}

/// Alpha-equivalence of conclusions and of assumption sets.
pub fn thm_alpha_eq(th1: &Theorem, th2: &Theorem) -> bool {
    if th1.ptr_eq(th2) {
        return true;
    }
    // Assumption lists are canonical up to alpha, so pointwise comparison
    // is order-insensitive set comparison.
    th1.asms().len() == th2.asms().len()
        && crate::term::alpha_eq(th1.concl(), th2.concl())
        && th1
            .asms()
            .iter()
            .zip(th2.asms())
            .all(|(a, b)| alpha_cmp(a, b) == Ordering::Equal)
}

impl fmt::Debug for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.asms().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", a)?;
        }
        write!(f, " |- {:?}", self.concl())
    }
}

// ---------------------------------------------------------------------------
// Assumption sets

pub(crate) fn asm_single(t: &Term) -> Vec<Term> {
    alloc::vec![t.clone()]
}

pub(crate) fn asm_union(a: &[Term], b: &[Term]) -> Vec<Term> {
    if b.is_empty() {
        return a.to_vec();
    }
    if a.is_empty() {
        return b.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match alpha_cmp(&a[i], &b[j]) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Remove the assumption alpha-equivalent to `t`, if any.
pub(crate) fn asm_remove(a: &[Term], t: &Term) -> Vec<Term> {
    match a.binary_search_by(|x| alpha_cmp(x, t)) {
        Ok(i) => {
            let mut out = a.to_vec();
            out.remove(i);
            out
        }
        Err(_) => a.to_vec(),
    }
}

/// Sort and alpha-deduplicate an arbitrary assumption list.
pub(crate) fn asm_normalise(mut a: Vec<Term>) -> Vec<Term> {
    a.sort_by(alpha_cmp);
    a.dedup_by(|x, y| alpha_cmp(x, y) == Ordering::Equal);
    a
}
