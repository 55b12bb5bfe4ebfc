//! Tolerance policy and order-comparison verdicts.

use crate::error::{Error, Result};

/// Tolerances used by every spectral routine and order comparison.
///
/// Order comparisons accept a margin down to `-(abs_tol + rel_tol * scale)`
/// where `scale` is the larger operator norm of the compared sides; the
/// inequalities under test span several magnitudes, so a pure absolute
/// tolerance would misclassify.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Absolute floor for order comparisons.
    pub abs_tol: f64,
    /// Relative component, multiplied by the scale of the compared sides.
    pub rel_tol: f64,
    /// Maximal allowed entrywise symmetry residual for Hermitian inputs.
    pub hermitian_tol: f64,
    /// Relative bound on `||V diag(l) V* - H||_F` after eigendecomposition,
    /// and on reconstruction residuals of square roots and inverses.
    pub recon_tol: f64,
    /// Bound on `||V*V - I||_F` for computed eigenvector matrices.
    pub ortho_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-9,
            hermitian_tol: 1e-8,
            recon_tol: 1e-9,
            ortho_tol: 1e-9,
        }
    }
}

impl ToleranceConfig {
    /// Acceptance band for order comparisons at the given scale.
    pub fn order_band(&self, scale: f64) -> f64 {
        self.abs_tol + self.rel_tol * scale
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            self.abs_tol,
            self.rel_tol,
            self.hermitian_tol,
            self.recon_tol,
            self.ortho_tol,
        ];
        if fields.iter().any(|t| !t.is_finite() || *t < 0.0) {
            return Err(Error::InvalidInput(
                "tolerances must be finite and nonnegative".into(),
            ));
        }
        Ok(())
    }
}

/// Outcome of a Loewner-order or positivity check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderVerdict {
    /// True iff `margin >= -(abs_tol + rel_tol * scale)`.
    pub holds: bool,
    /// Smallest eigenvalue of the compared difference.
    pub margin: f64,
    /// Larger operator norm of the compared sides.
    pub scale: f64,
}

impl OrderVerdict {
    pub(crate) fn from_margin(margin: f64, scale: f64, cfg: &ToleranceConfig) -> Self {
        Self {
            holds: margin >= -cfg.order_band(scale),
            margin,
            scale,
        }
    }
}
