//! Proof traces: a recorded session in textual form.
//!
//! Terms and types are stored as concrete syntax printed with the standard
//! fixities, so a trace does not depend on the fixities of the session that
//! produced it. Import replays every step through a [`Session`], which
//! re-runs the kernel on each one.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{fail, Result};
use crate::fixity::FixityTable;
use crate::kernel::{Theorem, Theory};
use crate::parser;
use crate::printer;
use crate::session::{Arg, ReplayEnv, Session, EXTERNAL};

/// Format version written into trace headers.
pub const TRACE_VERSION: &str = crate::platform::PLATFORM_VERSION;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TArg {
    Term(String),
    Type(String),
    Ref(u64),
    Str(String),
    Num(BigUint),
    List(Vec<TArg>),
    Pair(Box<TArg>, Box<TArg>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TStep {
    pub id: u64,
    pub op: String,
    pub args: Vec<TArg>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub version: String,
    pub system: String,
    pub system_version: String,
    pub steps: Vec<TStep>,
    /// Exported theorems: label and the step producing them.
    pub exports: Vec<(String, u64)>,
}

impl Trace {
    pub fn new(system: &str, system_version: &str) -> Trace {
        Trace {
            version: TRACE_VERSION.to_string(),
            system: system.to_string(),
            system_version: system_version.to_string(),
            steps: Vec::new(),
            exports: Vec::new(),
        }
    }
}

fn text_arg(thy: &Theory, fix: &FixityTable, a: &Arg) -> TArg {
    match a {
        Arg::Term(t) => TArg::Term(printer::print_term(thy, fix, t)),
        Arg::Type(t) => TArg::Type(printer::type_to_string(fix, t)),
        Arg::Thm(id) => TArg::Ref(*id),
        Arg::Str(s) => TArg::Str(s.clone()),
        Arg::Num(n) => TArg::Num(n.clone()),
        Arg::List(xs) => TArg::List(xs.iter().map(|x| text_arg(thy, fix, x)).collect()),
        Arg::Pair(x, y) => TArg::Pair(Box::new(text_arg(thy, fix, x)), Box::new(text_arg(thy, fix, y))),
    }
}

/// Convert the session's recording into a trace exporting `exports`.
///
/// Fails if the recording contains a theorem the recorder cannot account
/// for, since such a trace could not be replayed.
pub fn export(s: &Session, system: &str, system_version: &str, exports: &[(&str, &Theorem)]) -> Result<Trace> {
    let ids: Vec<(String, u64)> = exports
        .iter()
        .map(|(l, th)| (l.to_string(), s.thm_id(th)))
        .collect();
    let thy = s.theory();
    let fix = FixityTable::standard();
    let rec = s.recorder();
    let mut tr = Trace::new(system, system_version);
    for st in rec.steps() {
        if st.op == EXTERNAL {
            return fail(
                "export",
                format!("step {} uses a theorem that was not derived while recording", st.id),
            );
        }
        tr.steps.push(TStep {
            id: st.id,
            op: st.op.clone(),
            args: st.args.iter().map(|a| text_arg(&thy, &fix, a)).collect(),
        });
    }
    tr.exports = ids;
    Ok(tr)
}

/// Export every theorem saved in the theory registry, by label.
pub fn export_saved(s: &Session, system: &str, system_version: &str) -> Result<Trace> {
    let saved = s.theory().get_all_theorems();
    let refs: Vec<(&str, &Theorem)> = saved.iter().map(|(l, th)| (l.as_str(), th)).collect();
    export(s, system, system_version, &refs)
}

fn parse_arg(s: &Session, fix: &FixityTable, a: &TArg) -> Result<Arg> {
    Ok(match a {
        TArg::Term(src) => Arg::Term(parser::parse_term(&s.theory(), fix, src)?),
        TArg::Type(src) => Arg::Type(parser::parse_type(&s.theory(), fix, src)?),
        TArg::Ref(id) => Arg::Thm(*id),
        TArg::Str(x) => Arg::Str(x.clone()),
        TArg::Num(n) => Arg::Num(n.clone()),
        TArg::List(xs) => Arg::List(xs.iter().map(|x| parse_arg(s, fix, x)).collect::<Result<_>>()?),
        TArg::Pair(x, y) => Arg::Pair(Box::new(parse_arg(s, fix, x)?), Box::new(parse_arg(s, fix, y)?)),
    })
}

fn refs_ok(a: &TArg, id: u64) -> bool {
    match a {
        TArg::Ref(r) => *r < id,
        TArg::List(xs) => xs.iter().all(|x| refs_ok(x, id)),
        TArg::Pair(x, y) => refs_ok(x, id) && refs_ok(y, id),
        _ => true,
    }
}

/// Replay a trace into `s` and return the exported theorems by label.
pub fn import(s: &Session, tr: &Trace) -> Result<BTreeMap<String, Theorem>> {
    if tr.version != TRACE_VERSION {
        return fail("import", format!("unsupported trace version {}", tr.version));
    }
    let fix = FixityTable::standard();
    let mut env = ReplayEnv::new();
    let mut last = 0u64;
    for st in &tr.steps {
        if st.id <= last {
            return fail("import", format!("step ids not increasing at {}", st.id));
        }
        last = st.id;
        if !st.args.iter().all(|a| refs_ok(a, st.id)) {
            return fail("import", format!("step {} refers forward", st.id));
        }
        let run = || -> Result<Option<Theorem>> {
            let args: Vec<Arg> = st.args.iter().map(|a| parse_arg(s, &fix, a)).collect::<Result<_>>()?;
            s.replay_step(&st.op, &args, &env)
        };
        match run() {
            Ok(Some(th)) => {
                env.insert(st.id, th);
            }
            Ok(None) => {}
            Err(e) => return fail("import", format!("step {} ({}): {}", st.id, st.op, e.message())),
        }
    }
    let mut out = BTreeMap::new();
    for (label, id) in &tr.exports {
        match env.get(id) {
            Some(th) => {
                out.insert(label.clone(), th.clone());
            }
            None => return fail("import", format!("export {} names step {} which yields no theorem", label, id)),
        }
    }
    Ok(out)
}
