//! The three-way failure taxonomy shared by every operation in the crate.

use alloc::string::{String, ToString};
use core::fmt;

/// Failure raised by a library operation.
///
/// `Normal` failures always carry the name of the operation that raised
/// them so callers can trap by origin. `Local` is a control-flow signal
/// used inside a single module; public entry points convert it with
/// [`ResultExt::origin`] before returning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    Normal { origin: String, message: String },
    Catastrophic { message: String },
    Local { tag: String },
}

pub type Result<T> = core::result::Result<T, Failure>;

impl Failure {
    pub fn normal(origin: &str, message: impl ToString) -> Failure {
        Failure::Normal {
            origin: origin.to_string(),
            message: message.to_string(),
        }
    }

    pub fn catastrophic(message: impl ToString) -> Failure {
        Failure::Catastrophic {
            message: message.to_string(),
        }
    }

    pub fn local(tag: impl ToString) -> Failure {
        Failure::Local {
            tag: tag.to_string(),
        }
    }

    /// Name of the raising operation, if this is a normal failure.
    pub fn origin_name(&self) -> Option<&str> {
        match self {
            Failure::Normal { origin, .. } => Some(origin),
            _ => None,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Normal { message, .. } | Failure::Catastrophic { message } => message,
            Failure::Local { tag } => tag,
        }
    }

    pub fn is_normal(&self) -> bool {
        matches!(self, Failure::Normal { .. })
    }

    pub fn is_catastrophic(&self) -> bool {
        matches!(self, Failure::Catastrophic { .. })
    }

    /// Re-attribute a normal or local failure to `origin`, keeping the
    /// message. Catastrophic failures pass through untouched.
    pub fn reraise(self, origin: &str) -> Failure {
        match self {
            Failure::Normal { message, .. } => Failure::Normal {
                origin: origin.to_string(),
                message,
            },
            Failure::Local { tag } => Failure::Normal {
                origin: origin.to_string(),
                message: tag,
            },
            c @ Failure::Catastrophic { .. } => c,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Normal { origin, message } => write!(f, "{}: {}", origin, message),
            Failure::Catastrophic { message } => write!(f, "catastrophic failure: {}", message),
            Failure::Local { tag } => write!(f, "local failure ({})", tag),
        }
    }
}

pub trait ResultExt<T> {
    /// Attribute any normal/local failure to the named operation.
    fn origin(self, name: &str) -> Result<T>;
}

impl<T> ResultExt<T> for Result<T> {
    fn origin(self, name: &str) -> Result<T> {
        self.map_err(|e| e.reraise(name))
    }
}

/// Shorthand for returning a normal failure.
pub fn fail<T>(origin: &str, message: impl ToString) -> Result<T> {
    Err(Failure::normal(origin, message))
}
