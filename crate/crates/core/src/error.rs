use thiserror::Error;

/// Errors shared across the library.
///
/// Total combinatorial functions (Littlewood-Richardson coefficients, ψ, φ,
/// dominance tests, ...) do not return errors; fallible operations are the
/// ones with preconditions or resource caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input, with a byte offset into the input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A case the underlying theory does not cover; distinct from `Domain`
    /// so callers can report it instead of guessing a value.
    #[error("not covered: {0}")]
    NotCovered(String),

    /// A configured resource cap was exceeded.
    #[error("resource limit exceeded: {what} (limit {limit})")]
    Resource { what: String, limit: u64 },

    /// Exact integer arithmetic left the representable range.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn checked_add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn checked_mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}
