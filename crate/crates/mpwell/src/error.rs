//! Crate-wide error type.

/// Failure modes shared by every module.
///
/// `Domain` and `DegreeLimit` are contract violations on the caller's side;
/// the remaining variants report that a numerical guarantee could not be met
/// for an otherwise valid request.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("degree n = {n} exceeds the certified series limit {max}")]
    DegreeLimit { n: usize, max: usize },

    #[error("cancellation: imaginary residue {residue:e} exceeds tolerance {tol:e}")]
    Cancellation { residue: f64, tol: f64 },

    #[error("overflow: value outside the representable f64 range")]
    Overflow,

    #[error(
        "quadrature did not reach abs_tol = {abs_tol:e} within {panels} panels \
         (estimated error {est_error:e})"
    )]
    QuadratureNonConvergence {
        abs_tol: f64,
        est_error: f64,
        panels: usize,
    },

    #[error("series tail bound did not fall below tolerance within m <= {limit}")]
    TailNonConvergence { limit: usize },

    #[error(
        "truncation insufficient: tail ratio {tail_ratio:e} exceeds {limit:e}; \
         increase the expansion length to about N = {suggested}"
    )]
    TruncationInsufficient {
        tail_ratio: f64,
        limit: f64,
        suggested: usize,
    },

    #[error("mismatched box widths: {a1} vs {a2}")]
    MismatchedBox { a1: f64, a2: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
