//! Error type shared across the crate.

/// Errors raised by the linear-algebra kernel and the inequality catalog.
///
/// Hypothesis failures inside catalog evaluations are normally *recorded* in
/// the report rather than raised; `HypothesisUnmet` appears as an error only
/// for operations whose contract demands certified inputs up front.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("matrix is not Hermitian (symmetry residual {residual:.3e}, tolerance {tol:.3e})")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("matrix is singular or not positive definite (min eigenvalue {min_eig:.3e})")]
    SingularMatrix { min_eig: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eig:.3e})")]
    NotPsd { min_eig: f64 },

    #[error("hypothesis not satisfied: {0}")]
    HypothesisUnmet(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("degenerate denominator in {0}")]
    DegenerateDenominator(&'static str),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
