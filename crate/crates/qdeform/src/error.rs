use thiserror::Error;

/// Errors shared across the crate.
///
/// Every fallible operation reports through this enum so callers (including
/// the CLI) can match on failure classes rather than strings.
#[derive(Debug, Error)]
pub enum Error {
    /// A computation needed coefficients at or beyond an exponent that the
    /// operand's truncation order does not cover.
    #[error("series order {have} is insufficient: coefficients below q^{needed} are required")]
    InsufficientOrder { needed: i64, have: i64 },

    /// Inversion (or division) was attempted on a series that is zero to its
    /// known order, so no leading term exists to invert.
    #[error("cannot invert or divide by a series that is zero to its known order")]
    InvertZeroSeries,

    /// The quadratic functional equation A f^2 + B f = C violates a
    /// precondition that guarantees a unique power-series solution.
    #[error("quadratic functional equation is ill-posed: {reason}")]
    IllPosedQuadratic { reason: String },

    /// A continued-fraction layer has numerator exponent 0, so evaluating
    /// deeper layers never gains order and the value is not determined.
    #[error("continued-fraction layer {index} has numerator exponent 0; evaluation cannot converge")]
    NonContractingLayer { index: usize },

    /// The two independent continued-fraction constructions of a q-rational
    /// disagreed. This indicates a bug and is always worth a report.
    #[error("continued-fraction routes disagree for {value}: {detail}")]
    RouteMismatch { value: String, detail: String },

    /// A continued-fraction term list violates its validity constraints.
    #[error("invalid continued fraction: {reason}")]
    InvalidContinuedFraction { reason: String },

    /// An exact division hit a zero denominator (for example a rational
    /// function evaluated where its denominator vanishes).
    #[error("division by zero while {context}")]
    DivisionByZero { context: String },

    /// Integer output was requested (Hankel wall entries) but the input
    /// series has non-integer coefficients in the relevant range.
    #[error("non-integer coefficient encountered while {context}")]
    NotIntegral { context: String },

    /// Series reconstruction from wall rows stalled: both determinant
    /// constraints that mention the next unknown coefficient have a vanishing
    /// cofactor, so neither determines it.
    #[error("reconstruction cannot determine coefficient {index}: both pivot minors vanish")]
    UnsolvableStep { index: usize },

    /// Reconstruction produced a coefficient that contradicts one of the
    /// supplied wall entries.
    #[error("wall entry at shift {shift}, size {n} is inconsistent with the reconstructed series")]
    InconsistentWalls { shift: u32, n: u32 },

    /// The determinant ladder of a super-delta-fraction ended (or the layer
    /// budget ran out) before reaching the requested matrix size.
    #[error("determinant ladder reaches only size {reached}, but size {needed} was requested")]
    LadderTooShort { reached: u32, needed: u32 },

    /// A recurrence or periodicity check needs more entries than the row has.
    #[error("row of length {have} is too short: the check needs at least {needed} entries")]
    RowTooShort { needed: usize, have: usize },

    /// An interconnection law references a wall row outside the block that
    /// was computed.
    #[error("wall rows {min}..={max} do not include shift {shift} needed by the check")]
    WallCoverage { shift: u32, min: u32, max: u32 },

    /// The initial-segment solver reached a fixpoint with unknowns left.
    #[error("constraint propagation left indices {unresolved:?} undetermined")]
    UnderDetermined { unresolved: Vec<usize> },

    /// The initial-segment solver derived two different values for the same
    /// entry, or a fully-known equation failed.
    #[error("recurrence constraint {index} is inconsistent with the known entries")]
    InconsistentConstraint { index: usize },

    /// A verification run exceeded its wall-clock budget.
    #[error("computation exceeded its budget of {seconds} seconds")]
    BudgetExceeded { seconds: f64 },

    /// A textual input (number spec, sequence file) could not be parsed.
    #[error("parse error: {message}")]
    Parse { message: String },
}
