//! The geometric operator mean `A # B` and its comparison laws.

use crate::catalog::hypothesis::BoundsHypothesis;
use crate::error::{Error, Result};
use crate::linalg::eigen::hermitian_eigen;
use crate::linalg::matrix::MatrixC;
use crate::linalg::spectral::{inv_pd, loewner_leq, real_scalar_matrix, sqrt_psd};
use crate::tol::{OrderVerdict, ToleranceConfig};

/// Condition-number ratio beyond which the mean is evaluated on the
/// better-conditioned leg (the mean is symmetric, so either leg is exact).
const LEG_SWAP_COND_RATIO: f64 = 1e3;

/// Geometric operator mean `A # B = A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2}`.
///
/// `A` must be positive definite; `B` positive semidefinite. The triple
/// product is Hermitized afterwards so downstream PSD checks stay honest.
pub fn geometric_mean(a: &MatrixC, b: &MatrixC, cfg: &ToleranceConfig) -> Result<MatrixC> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let ea = hermitian_eigen(a, cfg)?;
    if ea.min_eigenvalue() <= cfg.abs_tol {
        return Err(Error::SingularMatrix {
            min_eig: ea.min_eigenvalue(),
        });
    }
    let eb = hermitian_eigen(b, cfg)?;
    // When both legs are invertible, prefer the better-conditioned one.
    if eb.min_eigenvalue() > cfg.abs_tol {
        let cond_a = ea.max_eigenvalue() / ea.min_eigenvalue();
        let cond_b = eb.max_eigenvalue() / eb.min_eigenvalue();
        if cond_a > LEG_SWAP_COND_RATIO * cond_b {
            return mean_via_first_leg(b, a, cfg);
        }
    }
    mean_via_first_leg(a, b, cfg)
}

fn mean_via_first_leg(a: &MatrixC, b: &MatrixC, cfg: &ToleranceConfig) -> Result<MatrixC> {
    let a_sqrt = sqrt_psd(a, cfg)?;
    let a_sqrt_inv = inv_pd(&a_sqrt, cfg)?;
    let inner = a_sqrt_inv
        .matmul(b)?
        .matmul(&a_sqrt_inv)?
        .hermitize();
    let inner_sqrt = sqrt_psd(&inner, cfg)?;
    Ok(a_sqrt.matmul(&inner_sqrt)?.matmul(&a_sqrt)?.hermitize())
}

/// Verdict of the arithmetic-geometric comparison `A # B <= (A + B)/2`.
pub fn am_gm_gap(a: &MatrixC, b: &MatrixC, cfg: &ToleranceConfig) -> Result<OrderVerdict> {
    let mean = geometric_mean(a, b, cfg)?;
    let arithmetic = a.add(b)?.scale(0.5);
    loewner_leq(&mean, &arithmetic, cfg)
}

/// Sandwich bounds for the mean under a box hypothesis
/// `a_lo^2 <= A <= a_hi^2`, `b_lo^2 <= B <= b_hi^2`:
///
/// `(a_lo^2 b_lo / a_hi) I  <=  A # B  <=  (a_hi^2 b_hi / a_lo) I`.
///
/// Returns the (lower, upper) verdicts; fails with `HypothesisUnmet` when
/// the box does not certify the pair.
pub fn mean_sandwich(
    a: &MatrixC,
    b: &MatrixC,
    bounds: &BoundsHypothesis,
    cfg: &ToleranceConfig,
) -> Result<(OrderVerdict, OrderVerdict)> {
    bounds.validate()?;
    if !bounds.certify_box_squared(a, b, cfg)? {
        return Err(Error::HypothesisUnmet(format!(
            "box constants {bounds:?} do not bound the pair"
        )));
    }
    let (a_lo, a_hi, b_lo, b_hi) = bounds.as_box()?;
    let mean = geometric_mean(a, b, cfg)?;
    let lower_coeff = a_lo * a_lo * b_lo / a_hi;
    let upper_coeff = a_hi * a_hi * b_hi / a_lo;
    let lower = loewner_leq(&real_scalar_matrix(a.dim(), lower_coeff), &mean, cfg)?;
    let upper = loewner_leq(&mean, &real_scalar_matrix(a.dim(), upper_coeff), cfg)?;
    Ok((lower, upper))
}
