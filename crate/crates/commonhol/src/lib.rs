//! Trace files, conformance checks and the command-line front end for
//! `commonhol-core`.

pub mod cli;
pub mod codec;
pub mod config;
pub mod conformance;

pub use config::Config;
