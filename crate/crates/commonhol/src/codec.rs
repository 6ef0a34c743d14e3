//! Text encoding of proof traces.
//!
//! One record per line:
//!
//! ```text
//! (commonhol "0.5" (system "commonhol" "0.1.0"))
//! (step 1 (assume_rule (term "(p:bool)")))
//! (export "lemma" (ref 1))
//! ```

use std::fmt::Write as _;

use commonhol_core::trace::{TArg, TStep, Trace};
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}

fn quote(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
}

fn write_arg(out: &mut String, a: &TArg) {
    match a {
        TArg::Term(s) => {
            out.push_str("(term ");
            quote(out, s);
            out.push(')');
        }
        TArg::Type(s) => {
            out.push_str("(type ");
            quote(out, s);
            out.push(')');
        }
        TArg::Ref(id) => {
            let _ = write!(out, "(ref {})", id);
        }
        TArg::Str(s) => quote(out, s),
        TArg::Num(n) => {
            let _ = write!(out, "{}", n);
        }
        TArg::List(xs) => {
            out.push_str("(list");
            for x in xs {
                out.push(' ');
                write_arg(out, x);
            }
            out.push(')');
        }
        TArg::Pair(x, y) => {
            out.push_str("(pair ");
            write_arg(out, x);
            out.push(' ');
            write_arg(out, y);
            out.push(')');
        }
    }
}

pub fn encode(tr: &Trace) -> String {
    let mut out = String::new();
    out.push_str("(commonhol ");
    quote(&mut out, &tr.version);
    out.push_str(" (system ");
    quote(&mut out, &tr.system);
    out.push(' ');
    quote(&mut out, &tr.system_version);
    out.push_str("))\n");
    for st in &tr.steps {
        let _ = write!(out, "(step {} ({}", st.id, st.op);
        for a in &st.args {
            out.push(' ');
            write_arg(&mut out, a);
        }
        out.push_str("))\n");
    }
    for (label, id) in &tr.exports {
        out.push_str("(export ");
        quote(&mut out, label);
        let _ = writeln!(out, " (ref {}))", id);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Sexp {
    Atom(String),
    Str(String),
    List(Vec<Sexp>),
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl Reader<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| *c == ' ' || *c == '\t') {
            self.chars.next();
        }
    }

    fn read(&mut self) -> Result<Sexp, String> {
        self.skip_ws();
        match self.chars.next() {
            None => Err("unexpected end of line".into()),
            Some('(') => {
                let mut xs = Vec::new();
                loop {
                    self.skip_ws();
                    if self.chars.peek() == Some(&')') {
                        self.chars.next();
                        return Ok(Sexp::List(xs));
                    }
                    xs.push(self.read()?);
                }
            }
            Some(')') => Err("unbalanced ')'".into()),
            Some('"') => {
                let mut s = String::new();
                loop {
                    match self.chars.next() {
                        None => return Err("unterminated string".into()),
                        Some('"') => return Ok(Sexp::Str(s)),
                        Some('\\') => match self.chars.next() {
                            Some('"') => s.push('"'),
                            Some('\\') => s.push('\\'),
                            Some('n') => s.push('\n'),
                            _ => return Err("bad escape in string".into()),
                        },
                        Some(c) => s.push(c),
                    }
                }
            }
            Some(c) => {
                let mut s = String::from(c);
                while let Some(&c) = self.chars.peek() {
                    if c == '(' || c == ')' || c == '"' || c == ' ' || c == '\t' {
                        break;
                    }
                    s.push(c);
                    self.chars.next();
                }
                Ok(Sexp::Atom(s))
            }
        }
    }
}

fn read_line(line: &str) -> Result<Sexp, String> {
    let mut r = Reader {
        chars: line.chars().peekable(),
    };
    let x = r.read()?;
    r.skip_ws();
    if r.chars.next().is_some() {
        return Err("trailing input".into());
    }
    Ok(x)
}

fn number(x: &Sexp) -> Result<u64, String> {
    match x {
        Sexp::Atom(a) if canonical_digits(a) => a.parse().map_err(|_| format!("number out of range: {}", a)),
        _ => Err("expected a number".into()),
    }
}

fn canonical_digits(a: &str) -> bool {
    !a.is_empty() && a.bytes().all(|b| b.is_ascii_digit()) && (a == "0" || !a.starts_with('0'))
}

fn string(x: &Sexp) -> Result<String, String> {
    match x {
        Sexp::Str(s) => Ok(s.clone()),
        _ => Err("expected a string".into()),
    }
}

fn reference(x: &Sexp) -> Result<u64, String> {
    match x {
        Sexp::List(xs) if xs.len() == 2 && xs[0] == Sexp::Atom("ref".into()) => number(&xs[1]),
        _ => Err("expected (ref <id>)".into()),
    }
}

fn arg(x: &Sexp) -> Result<TArg, String> {
    match x {
        Sexp::Str(s) => Ok(TArg::Str(s.clone())),
        Sexp::Atom(a) if canonical_digits(a) => Ok(TArg::Num(a.parse::<BigUint>().map_err(|e| e.to_string())?)),
        Sexp::Atom(a) => Err(format!("unexpected atom {}", a)),
        Sexp::List(xs) => {
            let head = match xs.first() {
                Some(Sexp::Atom(h)) => h.as_str(),
                _ => return Err("argument list without a tag".into()),
            };
            let rest = &xs[1..];
            match (head, rest.len()) {
                ("term", 1) => Ok(TArg::Term(string(&rest[0])?)),
                ("type", 1) => Ok(TArg::Type(string(&rest[0])?)),
                ("ref", 1) => Ok(TArg::Ref(number(&rest[0])?)),
                ("list", _) => Ok(TArg::List(rest.iter().map(arg).collect::<Result<_, _>>()?)),
                ("pair", 2) => Ok(TArg::Pair(Box::new(arg(&rest[0])?), Box::new(arg(&rest[1])?))),
                _ => Err(format!("malformed ({} ...) argument", head)),
            }
        }
    }
}

fn is_op_name(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Parse a trace file. Records must appear as header, steps, then exports.
pub fn decode(text: &str) -> Result<Trace, CodecError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let err = |line: usize, msg: String| CodecError::Syntax { line: line + 1, msg };
    let (n, first) = lines.next().ok_or_else(|| err(0, "empty trace".into()))?;
    let mut tr = match read_line(first).map_err(|m| err(n, m))? {
        Sexp::List(xs) if xs.len() == 3 && xs[0] == Sexp::Atom("commonhol".into()) => {
            let version = string(&xs[1]).map_err(|m| err(n, m))?;
            match &xs[2] {
                Sexp::List(sys) if sys.len() == 3 && sys[0] == Sexp::Atom("system".into()) => {
                    let name = string(&sys[1]).map_err(|m| err(n, m))?;
                    let ver = string(&sys[2]).map_err(|m| err(n, m))?;
                    let mut tr = Trace::new(&name, &ver);
                    tr.version = version;
                    tr
                }
                _ => return Err(err(n, "malformed system record".into())),
            }
        }
        _ => return Err(err(n, "missing (commonhol ...) header".into())),
    };
    for (n, line) in lines {
        let rec = read_line(line).map_err(|m| err(n, m))?;
        let xs = match rec {
            Sexp::List(xs) if !xs.is_empty() => xs,
            _ => return Err(err(n, "expected a record".into())),
        };
        match &xs[0] {
            Sexp::Atom(h) if h == "step" && xs.len() == 3 => {
                if !tr.exports.is_empty() {
                    return Err(err(n, "step after exports".into()));
                }
                let id = number(&xs[1]).map_err(|m| err(n, m))?;
                let call = match &xs[2] {
                    Sexp::List(c) if !c.is_empty() => c,
                    _ => return Err(err(n, "malformed step".into())),
                };
                let op = match &call[0] {
                    Sexp::Atom(op) if is_op_name(op) => op.clone(),
                    _ => return Err(err(n, "malformed operation name".into())),
                };
                let args = call[1..].iter().map(arg).collect::<Result<_, _>>().map_err(|m| err(n, m))?;
                tr.steps.push(TStep { id, op, args });
            }
            Sexp::Atom(h) if h == "export" && xs.len() == 3 => {
                let label = string(&xs[1]).map_err(|m| err(n, m))?;
                let id = reference(&xs[2]).map_err(|m| err(n, m))?;
                tr.exports.push((label, id));
            }
            _ => return Err(err(n, "unknown record".into())),
        }
    }
    Ok(tr)
}
