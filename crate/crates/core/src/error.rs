use thiserror::Error;

/// Errors raised by the field, curve and census routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} is outside 1..=20")]
    DegreeOutOfRange(u32),
    #[error("element must be nonzero")]
    ZeroElement,
    #[error("isomorphism witness has lambda = 0")]
    ZeroLambda,
    #[error("coefficient b must be 0 or equal to a (normalize the curve first)")]
    NotNormalized,
    #[error("field element {value:#x} does not fit in {m} bits")]
    ElementOutOfRange { value: u32, m: u32 },
    #[error("unsupported power-class exponent {0}")]
    UnsupportedExponent(u32),
    #[error("radical element {0:#x} is neither a root of P nor a pair sum")]
    Unclassifiable(u32),
    #[error("induced symplectic form is degenerate on k/W")]
    DegenerateForm,
    #[error("inconsistent point counts: N1={n1}, N2={n2}, q={q}")]
    InvalidCounts { n1: i64, n2: i64, q: i64 },
    #[error("size guard exceeded: {what} requires {limit}")]
    SizeGuard {
        what: &'static str,
        limit: &'static str,
    },
    #[error("cannot parse curve {input:?}: {reason}")]
    ParseCurve { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
