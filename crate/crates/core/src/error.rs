use alloc::string::String;
use core::fmt;

/// Everything that can go wrong inside the engine.
///
/// Resource limits ([`Error::CapExceeded`], [`Error::BudgetExceeded`]) are
/// kept apart from malformed input so front ends can report them differently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An instance is larger than the hard cap of the operation.
    CapExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    /// A search ran out of its node budget before it could answer.
    BudgetExceeded { nodes: u64 },
    /// An argument index outside `0..n`.
    IndexOutOfRange { index: usize, n: usize },
    /// A set or vector whose width does not match the host system.
    WidthMismatch { expected: usize, got: usize },
    /// A structural rule of an argument system was broken.
    InvalidSystem(String),
    /// A structural rule of a formula was broken.
    InvalidFormula(String),
    /// A structural rule of an extension family was broken.
    InvalidFamily(String),
    /// An encoding was handed to a procedure for another scheme.
    SchemeMismatch {
        expected: &'static str,
        got: &'static str,
    },
    /// An acceptance vector that does not describe credulous acceptance.
    InvalidAlpha,
    /// A probability outside `[0, 1]`.
    ProbabilityOutOfRange,
}

impl Error {
    pub(crate) fn cap(what: &'static str, limit: usize, got: usize) -> Self {
        Error::CapExceeded { what, limit, got }
    }

    /// True for the resource-limit variants.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::BudgetExceeded { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CapExceeded { what, limit, got } => {
                write!(f, "{what} is {got}, above the cap of {limit}")
            }
            Error::BudgetExceeded { nodes } => {
                write!(f, "search budget of {nodes} nodes exhausted")
            }
            Error::IndexOutOfRange { index, n } => {
                write!(f, "argument index {index} out of range for {n} arguments")
            }
            Error::WidthMismatch { expected, got } => {
                write!(f, "width mismatch: expected {expected}, got {got}")
            }
            Error::InvalidSystem(msg) => write!(f, "invalid argument system: {msg}"),
            Error::InvalidFormula(msg) => write!(f, "invalid formula: {msg}"),
            Error::InvalidFamily(msg) => write!(f, "invalid extension family: {msg}"),
            Error::SchemeMismatch { expected, got } => {
                write!(f, "expected a {expected} encoding, got {got}")
            }
            Error::InvalidAlpha => {
                f.write_str("acceptance vector does not match credulous acceptance")
            }
            Error::ProbabilityOutOfRange => f.write_str("probability must lie in [0, 1]"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
