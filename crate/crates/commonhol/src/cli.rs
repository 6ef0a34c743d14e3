//! Command-line front end. The same verbs serve as REPL commands.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use commonhol_core::platform::{build_platform_theory, Manifest};
use commonhol_core::session::Session;
use commonhol_core::trace::{self, Trace};
use commonhol_core::Failure;
use thiserror::Error;

use crate::codec::{self, CodecError};
use crate::config::Config;
use crate::conformance;

#[derive(Parser, Debug)]
#[command(name = "commonhol", version, about = "HOL kernel workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print system and platform identification.
    Info,
    /// Parse a term or type and print its canonical form.
    Parse(ParseArgs),
    /// Inspect the theory.
    Theory {
        #[command(subcommand)]
        cmd: TheoryCmd,
    },
    /// Evaluate a numeral expression to a theorem.
    Eval { expr: String },
    /// Export or import proof traces.
    Trace {
        #[command(subcommand)]
        cmd: TraceCmd,
    },
    /// Run the conformance checks.
    Conformance,
    /// Read commands from standard input, one per line.
    Repl,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct ParseArgs {
    #[arg(long)]
    pub term: Option<String>,
    #[arg(long = "type")]
    pub ty: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum TheoryCmd {
    /// List theory contents; all sections when no flag is given.
    List(ListArgs),
}

#[derive(Args, Debug)]
#[group(multiple = false)]
pub struct ListArgs {
    #[arg(long)]
    pub axioms: bool,
    #[arg(long)]
    pub consts: bool,
    #[arg(long)]
    pub types: bool,
    #[arg(long)]
    pub defs: bool,
}

#[derive(Subcommand, Debug)]
pub enum TraceCmd {
    /// Write a trace. With --script, replay the script while recording and
    /// export its exports; otherwise record the standard theory build.
    Export {
        out: PathBuf,
        #[arg(long)]
        script: Option<PathBuf>,
    },
    /// Replay a trace and print its exported theorems.
    Import {
        input: PathBuf,
        /// Replay into the bootstrap theory instead of the standard one.
        #[arg(long)]
        bare: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}", describe(.0))]
    Hol(Failure),
    #[error("{0}")]
    Codec(#[from] CodecError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Check(String),
}

impl From<Failure> for CliError {
    fn from(f: Failure) -> Self {
        CliError::Hol(f)
    }
}

fn describe(f: &Failure) -> String {
    match f.origin_name() {
        Some(o) => format!("{}: {}", o, f.message()),
        None if f.is_catastrophic() => format!("catastrophic: {}", f.message()),
        None => f.message().to_string(),
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Hol(f) if f.is_catastrophic() => 2,
            _ => 1,
        }
    }
}

/// A session with the standard theory plus the configuration.
pub struct App {
    pub config: Config,
    pub session: Session,
    pub manifest: Manifest,
}

impl App {
    pub fn new() -> Result<App, CliError> {
        let session = Session::new();
        let manifest = build_platform_theory(&session)?;
        Ok(App {
            config: Config::default(),
            session,
            manifest,
        })
    }

    pub fn exec(&self, cmd: &Command, out: &mut dyn Write) -> Result<(), CliError> {
        let s = &self.session;
        match cmd {
            Command::Info => writeln!(out, "{}", self.config)?,
            Command::Parse(a) => match (&a.term, &a.ty) {
                (Some(src), _) => writeln!(out, "{}", s.print_term(&s.parse_term(src)?))?,
                (_, Some(src)) => writeln!(out, "{}", s.print_type(&s.parse_type(src)?))?,
                _ => return Err(CliError::Usage("parse needs --term or --type".into())),
            },
            Command::Theory { cmd: TheoryCmd::List(a) } => self.list(a, out)?,
            Command::Eval { expr } => {
                let th = s.eval_conv(&s.parse_term(expr)?)?;
                writeln!(out, "{}", s.print_thm(&th))?;
            }
            Command::Trace { cmd } => self.trace(cmd, out)?,
            Command::Conformance => {
                let mut failed = 0;
                for c in conformance::run(s) {
                    match &c.outcome {
                        Ok(()) => writeln!(out, "pass {}", c.name)?,
                        Err(m) => {
                            failed += 1;
                            writeln!(out, "FAIL {}: {}", c.name, m)?;
                        }
                    }
                }
                if failed > 0 {
                    return Err(CliError::Check(format!("{} conformance checks failed", failed)));
                }
            }
            Command::Repl => return Err(CliError::Usage("already in the repl".into())),
        }
        Ok(())
    }

    fn list(&self, a: &ListArgs, out: &mut dyn Write) -> Result<(), CliError> {
        let s = &self.session;
        let thy = s.theory();
        let all = !(a.axioms || a.consts || a.types || a.defs);
        if all || a.types {
            for (name, arity) in thy.get_all_type_constants() {
                writeln!(out, "type {} {}", name, arity)?;
            }
        }
        if all || a.consts {
            for (name, ty) in thy.get_all_constants() {
                writeln!(out, "const {} {}", name, s.print_type(&ty))?;
            }
        }
        if all || a.axioms {
            for (label, th) in thy.get_all_axioms() {
                writeln!(out, "axiom {} {}", label, s.print_thm(&th))?;
            }
        }
        if all || a.defs {
            for (name, th) in thy.get_all_const_definitions() {
                writeln!(out, "def {} {}", name, s.print_thm(&th))?;
            }
            for spec in thy.get_all_const_specifications() {
                writeln!(out, "spec {} {}", spec.names.join(","), s.print_thm(&spec.theorem))?;
            }
            for d in thy.get_all_tyconst_definitions() {
                writeln!(out, "typedef {} {}", d.name, s.print_thm(&d.theorem))?;
            }
        }
        Ok(())
    }

    fn trace(&self, cmd: &TraceCmd, out: &mut dyn Write) -> Result<(), CliError> {
        let cfg = &self.config;
        match cmd {
            TraceCmd::Export { out: path, script } => {
                let tr = match script {
                    Some(p) => {
                        let script = codec::decode(&std::fs::read_to_string(p)?)?;
                        record_script(&script, cfg)?
                    }
                    None => {
                        let s = Session::new();
                        s.record_mode(true);
                        build_platform_theory(&s)?;
                        trace::export_saved(&s, &cfg.system_name, &cfg.system_version)?
                    }
                };
                std::fs::write(path, codec::encode(&tr))?;
                writeln!(out, "wrote {} steps, {} exports", tr.steps.len(), tr.exports.len())?;
            }
            TraceCmd::Import { input, bare } => {
                let tr = codec::decode(&std::fs::read_to_string(input)?)?;
                let s = Session::new();
                if !bare {
                    build_platform_theory(&s)?;
                }
                for line in import_report(&s, &tr)? {
                    writeln!(out, "{}", line)?;
                }
            }
        }
        Ok(())
    }

    /// Run one REPL session over `input`. Errors are reported and the loop
    /// continues; returns the number of failed commands.
    pub fn repl(&self, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<usize> {
        let mut failures = 0;
        let mut line = String::new();
        loop {
            line.clear();
            if input.read_line(&mut line)? == 0 {
                break;
            }
            let text = line.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            if text == "quit" || text == "exit" {
                break;
            }
            let words = match shlex::split(text) {
                Some(w) => w,
                None => {
                    failures += 1;
                    writeln!(err, "error: unbalanced quotes")?;
                    continue;
                }
            };
            let parsed = Cli::try_parse_from(std::iter::once("commonhol".to_string()).chain(words));
            let res = match parsed {
                Ok(cli) => self.exec(&cli.command, out),
                Err(e) => Err(CliError::Usage(e.to_string().trim_end().to_string())),
            };
            if let Err(e) = res {
                failures += 1;
                writeln!(err, "error: {}", e)?;
            }
        }
        Ok(failures)
    }
}

/// Replay `script` in a recording session over the standard theory and
/// export the script's exports from the recording.
pub fn record_script(script: &Trace, cfg: &Config) -> Result<Trace, CliError> {
    let s = Session::new();
    build_platform_theory(&s)?;
    s.record_mode(true);
    let got = trace::import(&s, script)?;
    let exports: Vec<(&str, &commonhol_core::Theorem)> = script
        .exports
        .iter()
        .map(|(l, _)| (l.as_str(), &got[l]))
        .collect();
    Ok(trace::export(&s, &cfg.system_name, &cfg.system_version, &exports)?)
}

/// Import `tr` into `s` and print each export as `label: theorem`, in
/// trace order.
pub fn import_report(s: &Session, tr: &Trace) -> Result<Vec<String>, CliError> {
    let got = trace::import(s, tr)?;
    Ok(tr
        .exports
        .iter()
        .map(|(l, _)| format!("{}: {}", l, s.print_thm(&got[l])))
        .collect())
}

/// Entry point shared by the binary and tests.
pub fn main_with(args: &[String], input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{}", e)
            } else {
                write!(err, "{}", e)
            };
            return code;
        }
    };
    let app = match App::new() {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            return e.exit_code();
        }
    };
    if let Command::Repl = cli.command {
        return match app.repl(input, out, err) {
            Ok(0) => 0,
            Ok(_) => 1,
            Err(e) => {
                let _ = writeln!(err, "error: {}", e);
                1
            }
        };
    }
    match app.exec(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            e.exit_code()
        }
    }
}
