//! A Common HOL Platform kernel: types, terms, the trusted theorem
//! kernel, the standard theory, derived rules, numeral arithmetic,
//! concrete syntax and proof recording.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod derived;
pub mod error;
pub mod fixity;
pub mod kernel;
pub mod num;
pub mod parser;
pub mod platform;
mod platform_lemmas;
pub mod trace;
pub mod printer;
pub mod session;
pub mod support;
pub mod syntax;
pub mod term;
pub mod types;

pub use error::{Failure, Result};
pub use kernel::{Theorem, Theory};
pub use term::Term;
pub use types::Type;
