//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Two operands have incompatible lengths or dimensions.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A square matrix was expected.
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// A circulant row failed the Hermitian (conjugate-symmetry) check.
    #[error("matrix is not Hermitian: residual {residual:.3e} exceeds tol {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    /// An eigenvalue fell below the positive-semidefiniteness tolerance.
    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e} < -{tol:.3e}")]
    NotPsd { min_eigenvalue: f64, tol: f64 },

    /// A matrix does not satisfy the Gram-of-states conditions.
    #[error("not a Gram matrix of states: {detail}")]
    NotGram { detail: String },

    /// An eigenvalue vector is not a valid Gram spectrum.
    #[error("invalid spectrum: {detail}")]
    InvalidSpectrum { detail: String },

    /// An empty input where at least one element is required.
    #[error("empty input")]
    Empty,

    /// A probability argument outside [0, 1].
    #[error("probability {p} outside [0, 1]")]
    InvalidProbability { p: f64 },

    /// Amplitude outside the range supported by the operation.
    #[error("amplitude {alpha} outside supported range (0, {max}]")]
    AmplitudeOutOfRange { alpha: f64, max: f64 },

    /// An operation defined only for an even number of states.
    #[error("odd number of states {n}; operation requires even N")]
    OddN { n: usize },

    /// Failure probability too close to 1 for the leak to be defined.
    #[error("degenerate failure: p0 = {p0} leaves no success branch")]
    DegenerateFailure { p0: f64 },

    /// Problem size above the supported bound.
    #[error("dimension {n} exceeds supported maximum {max}")]
    DimensionTooLarge { n: usize, max: usize },

    /// Fewer states than the operation is defined for.
    #[error("{n} states given, at least {min} required")]
    TooFewStates { n: usize, min: usize },

    /// Grid search instance too large to enumerate.
    #[error("grid search size {n} exceeds maximum {max}")]
    TooLarge { n: usize, max: usize },

    /// Grid step does not evenly divide the simplex mass.
    #[error("grid step {step} does not divide N = {n}")]
    InvalidStep { step: f64, n: usize },

    /// Beam count too small for the per-beam amplitude to stay within range.
    #[error("split into {splits} beams leaves per-beam amplitude {alpha}/sqrt({splits}) > 1")]
    SplitTooCoarse { alpha: f64, splits: u64 },

    /// Fock-space truncation does not meet the requested tail bound.
    #[error("cutoff {cutoff} too small: tail bound {tail:.3e} >= {required:.3e}")]
    CutoffTooSmall { cutoff: usize, tail: f64, required: f64 },

    /// The simplex did not converge within its pivot budget.
    #[error("simplex iteration limit {limit} reached")]
    IterationLimit { limit: usize },
}

impl Error {
    /// Short variant name, used by the CLI to report numeric failures.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotSquare { .. } => "NotSquare",
            Error::NotHermitian { .. } => "NotHermitian",
            Error::NotPsd { .. } => "NotPSD",
            Error::NotGram { .. } => "NotGram",
            Error::InvalidSpectrum { .. } => "InvalidSpectrum",
            Error::Empty => "Empty",
            Error::InvalidProbability { .. } => "InvalidProbability",
            Error::AmplitudeOutOfRange { .. } => "AmplitudeOutOfRange",
            Error::OddN { .. } => "OddN",
            Error::DegenerateFailure { .. } => "DegenerateFailure",
            Error::DimensionTooLarge { .. } => "DimensionTooLarge",
            Error::TooFewStates { .. } => "TooFewStates",
            Error::TooLarge { .. } => "TooLarge",
            Error::InvalidStep { .. } => "InvalidStep",
            Error::SplitTooCoarse { .. } => "SplitTooCoarse",
            Error::CutoffTooSmall { .. } => "CutoffTooSmall",
            Error::IterationLimit { .. } => "IterationLimit",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
