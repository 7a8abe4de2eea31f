use thiserror::Error;

/// Errors produced by the algebraic operations of this crate.
///
/// The expression parser has its own error type ([`crate::expr::ParseError`])
/// because it carries source offsets.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Grade projection was asked for a grade outside `0..=5`.
    #[error("grade {0} is out of range 0..=5")]
    GradeOutOfRange(usize),

    /// An operation required a multivector whose square is a scalar, but the
    /// square has non-scalar components above tolerance.
    #[error("square is not a scalar (largest non-scalar coefficient {0:e})")]
    NonScalarSquare(f64),

    /// `B * reverse(B)` came out negative, so the bivector has no real norm.
    #[error("norm square is negative ({0:e})")]
    NegativeNorm(f64),

    /// A frame's five vectors do not span the algebra: their exterior product
    /// is (numerically) zero, so no reciprocal frame exists.
    #[error("degenerate frame: 5-volume coefficient {0:e} is below tolerance")]
    DegenerateFrame(f64),

    /// A frame vector had components outside grade 1.
    #[error("invalid frame: {0}")]
    InvalidFrame(&'static str),

    /// The precomputed blade-image table could not be inverted. This cannot
    /// happen for the fixed generator matrices; it is guarded at startup.
    #[error("blade image table is singular")]
    SingularBasis,

    /// A commuting-pair precondition failed; the message says which one.
    #[error("invalid commuting pair: {0}")]
    InvalidPair(&'static str),

    /// Closed-form enumeration of unitary elements disagreed with the
    /// brute-force grid search.
    #[error("unitary census mismatch: {0}")]
    CensusMismatch(String),

    /// A commutator of two generators does not lie in the span of the set.
    #[error("closure violation: projection residual {0:e} exceeds tolerance")]
    ClosureViolation(f64),

    /// The matrix image of a unitary element was expected to be diagonal.
    #[error("representation is not diagonal (off-diagonal magnitude {0:e})")]
    NonDiagonalRep(f64),

    /// An element that must square to +1 does not.
    #[error("element is not unitary: h*h differs from 1 by {0:e}")]
    NotUnitary(f64),

    /// The gauge derivative divides by the rest mass, which was zero.
    #[error("rest mass is zero; the gauge derivative is undefined")]
    ZeroMass,
}
