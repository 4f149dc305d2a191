use core::fmt;

/// Errors reported by the combinatorial kernels.
///
/// The variants split into three families that front ends map to
/// distinct exit codes: invalid inputs, exceeded resource guards, and
/// internal inconsistencies (failed cross-checks that signal a bug
/// rather than a bad argument).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The state-machine enumeration is only defined for odd `j`.
    JMustBeOdd { j: u32 },
    /// `j` exceeds the enumeration bound.
    JOutOfRange { j: u32, max: u32 },
    /// `(d, j)` is not a `Delta = 2d - 3j ∈ {0, 1}` pair.
    CaseMismatch { d: u32, j: u32 },
    /// A solution state violated its balance invariant.
    InvalidState(&'static str),
    /// A word failed the preconditions of the cut-point construction
    /// (must be balanced, start with `A`, carry `(+,+)` signs).
    WordNotCanonical(&'static str),
    /// Token or literal could not be parsed.
    Parse(&'static str),
    /// A polynomial operation would exceed the monomial-product budget.
    MonomialBudgetExceeded { budget: u64 },
    /// A cross-check failed; this signals a construction bug, never bad
    /// input (e.g. a singular sign matrix or a missing canonical state).
    Inconsistency(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::JMustBeOdd { j } => write!(f, "j must be odd, got {j}"),
            Error::JOutOfRange { j, max } => {
                write!(f, "j = {j} exceeds the enumeration bound {max}")
            }
            Error::CaseMismatch { d, j } => write!(
                f,
                "(d, j) = ({d}, {j}) has 2d - 3j = {}, expected 0 or 1",
                2 * i64::from(*d) - 3 * i64::from(*j)
            ),
            Error::InvalidState(reason) => write!(f, "malformed solution state: {reason}"),
            Error::WordNotCanonical(reason) => write!(f, "word not canonical: {reason}"),
            Error::Parse(what) => write!(f, "parse error: {what}"),
            Error::MonomialBudgetExceeded { budget } => {
                write!(f, "monomial-product budget of {budget} exceeded")
            }
            Error::Inconsistency(what) => write!(f, "internal inconsistency: {what}"),
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    /// True for the variants caused by bad input (front ends report
    /// these as usage errors).
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::JMustBeOdd { .. }
                | Error::JOutOfRange { .. }
                | Error::CaseMismatch { .. }
                | Error::InvalidState(_)
                | Error::WordNotCanonical(_)
                | Error::Parse(_)
        )
    }

    /// True when a resource guard tripped.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::MonomialBudgetExceeded { .. })
    }
}
