//! Error type shared by all kernel layers.

use alloc::string::String;
use core::fmt;

/// Failure modes of the kernel.
///
/// Arithmetic errors (`Dimension`, `NonUnit`, ...) signal misuse or genuine
/// mathematical obstructions; `TheoremViolation` is reserved for a
/// certification that a statement expected to hold actually failed on
/// concrete data, and always carries the witness in its message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different ambient rings (variable count, cap, or
    /// parameter set mismatch).
    Dimension(String),
    /// Inversion of a series whose constant term is zero or not a unit.
    NonUnit(String),
    /// Substitution of a series with nonzero constant term into a power
    /// series slot.
    Composition(String),
    /// Exact division left a nonzero remainder at the given total degree.
    Divisibility { degree: u32, detail: String },
    /// Compositional inverse requested for a series with non-invertible
    /// linear coefficient.
    NoCompInverse(String),
    /// A formal group law axiom failed; names the axiom and the total degree
    /// of the first offending coefficient.
    InvalidFgl { axiom: &'static str, degree: u32, detail: String },
    /// Unknown formal group law name or malformed parameters.
    UnknownFgl(String),
    /// The requested truncation degree exceeds the data available for this
    /// formal group law (the degree-4 elliptic expansion).
    InsufficientExpansion { requested: u32, available: u32 },
    /// Normalization requires kappa != 0 and an invertible xy-coefficient.
    NormalizationUnavailable(String),
    /// The coefficient ring does not satisfy a hypothesis (for instance the
    /// xy-coefficient must be invertible when kappa != 0).
    UnsupportedRing(String),
    /// Root datum outside the supported table.
    UnsupportedDatum(String),
    /// A certified statement failed on concrete data; carries the witness.
    TheoremViolation { statement: String, detail: String },
    /// An operation ran out of guaranteed coefficients.
    PrecisionUnderflow { needed: u32, available: u32, detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(d) => write!(f, "dimension mismatch: {d}"),
            Error::NonUnit(d) => write!(f, "not a unit: {d}"),
            Error::Composition(d) => write!(f, "illegal composition: {d}"),
            Error::Divisibility { degree, detail } => {
                write!(f, "inexact division at degree {degree}: {detail}")
            }
            Error::NoCompInverse(d) => write!(f, "no compositional inverse: {d}"),
            Error::InvalidFgl { axiom, degree, detail } => {
                write!(f, "invalid formal group law ({axiom} fails at degree {degree}): {detail}")
            }
            Error::UnknownFgl(d) => write!(f, "unknown formal group law: {d}"),
            Error::InsufficientExpansion { requested, available } => write!(
                f,
                "insufficient expansion: cap {requested} requested, only degree {available} known"
            ),
            Error::NormalizationUnavailable(d) => write!(f, "normalization unavailable: {d}"),
            Error::UnsupportedRing(d) => write!(f, "unsupported coefficient ring: {d}"),
            Error::UnsupportedDatum(d) => write!(f, "unsupported root datum: {d}"),
            Error::TheoremViolation { statement, detail } => {
                write!(f, "statement {statement} violated: {detail}")
            }
            Error::PrecisionUnderflow { needed, available, detail } => write!(
                f,
                "precision underflow: need valid degree {needed}, have {available} ({detail})"
            ),
        }
    }
}

/// Kernel-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
