//! Shared error and result types for the crate.

/// Errors reported by every fallible operation in this crate.
///
/// The variants classify *why* a call failed so that callers (notably the
/// command-line front end) can map them onto distinct exit codes:
///
/// * [`Error::InvalidInput`] — a precondition on the arguments was violated
///   (out-of-range `n`, malformed complex, mismatched matrix shapes, ...).
/// * [`Error::ResourceLimit`] — the requested computation would exceed an
///   explicit safety cap (cell count, permutation search size, ...). Raising
///   the cap and retrying is always sound.
/// * [`Error::Unsupported`] — the input is valid but falls outside the cases
///   this crate certifies (e.g. torsion where a free module is required, or a
///   group action with a non-free cell orbit).
/// * [`Error::Verification`] — an internal cross-check between two
///   independently computed quantities disagreed. This is the only variant
///   that signals a *mathematical* inconsistency rather than a usage problem.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An explicit resource cap would be exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    /// The input is valid but outside the certified cases.
    #[error("unsupported case: {0}")]
    Unsupported(String),
    /// Two independent computations of the same quantity disagreed.
    #[error("verification failed: {0}")]
    Verification(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// `true` when the error marks a failed mathematical cross-check rather
    /// than a usage problem.
    pub fn is_verification_failure(&self) -> bool {
        matches!(self, Error::Verification(_))
    }
}
