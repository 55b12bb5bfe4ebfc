//! Spectral toolbox: positivity tests, Loewner order, functional calculus.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::eigen::hermitian_eigen;
use crate::linalg::matrix::MatrixC;
use crate::tol::{OrderVerdict, ToleranceConfig};

/// Operator norm: `max |lambda_i|` for Hermitian input, otherwise
/// `sqrt(lambda_max(T*T))`.
pub fn op_norm(t: &MatrixC, cfg: &ToleranceConfig) -> Result<f64> {
    if t.hermitian_residual() <= cfg.hermitian_tol {
        let es = hermitian_eigen(t, cfg)?;
        Ok(es
            .eigenvalues
            .iter()
            .fold(0.0f64, |acc, &l| acc.max(l.abs())))
    } else {
        let gram = t.adjoint().matmul(t)?.hermitize();
        let es = hermitian_eigen(&gram, cfg)?;
        Ok(es.max_eigenvalue().max(0.0).sqrt())
    }
}

/// Positive-semidefiniteness check; `margin` is the smallest eigenvalue.
pub fn is_psd(h: &MatrixC, cfg: &ToleranceConfig) -> Result<OrderVerdict> {
    let es = hermitian_eigen(h, cfg)?;
    let scale = es
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, &l| acc.max(l.abs()));
    Ok(OrderVerdict::from_margin(es.min_eigenvalue(), scale, cfg))
}

/// Loewner order `X <= Y`, decided by positivity of `Y - X`.
///
/// The verdict's `scale` is the larger operator norm of the two sides, so
/// the acceptance band tracks the magnitude of the comparison.
pub fn loewner_leq(x: &MatrixC, y: &MatrixC, cfg: &ToleranceConfig) -> Result<OrderVerdict> {
    if x.dim() != y.dim() {
        return Err(Error::DimMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    for (name, m) in [("lhs", x), ("rhs", y)] {
        let residual = m.hermitian_residual();
        if residual > cfg.hermitian_tol {
            let _ = name;
            return Err(Error::NotHermitian {
                residual,
                tol: cfg.hermitian_tol,
            });
        }
    }
    let diff = y.sub(x)?.hermitize();
    let margin = hermitian_eigen(&diff, cfg)?.min_eigenvalue();
    let scale = op_norm(x, cfg)?.max(op_norm(y, cfg)?);
    Ok(OrderVerdict::from_margin(margin, scale, cfg))
}

/// PSD square root with clamping of tolerance-band negative eigenvalues.
///
/// Eigenvalues in `[-(abs_tol + rel_tol * ||H||), 0)` are treated as roundoff
/// and clamped to zero; anything more negative is a genuine hypothesis
/// violation and fails with `NotPsd`.
pub fn sqrt_psd(h: &MatrixC, cfg: &ToleranceConfig) -> Result<MatrixC> {
    let es = hermitian_eigen(h, cfg)?;
    let scale = es
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, &l| acc.max(l.abs()));
    let band = cfg.order_band(scale);
    let min_eig = es.min_eigenvalue();
    if min_eig < -band {
        return Err(Error::NotPsd { min_eig });
    }
    Ok(es.apply_fn(|l| l.max(0.0).sqrt()).hermitize())
}

/// Inverse of a positive definite matrix via spectral inversion.
pub fn inv_pd(h: &MatrixC, cfg: &ToleranceConfig) -> Result<MatrixC> {
    let es = hermitian_eigen(h, cfg)?;
    let min_eig = es.min_eigenvalue();
    if min_eig <= cfg.abs_tol {
        return Err(Error::SingularMatrix { min_eig });
    }
    Ok(es.apply_fn(|l| 1.0 / l).hermitize())
}

/// `|T| = (T*T)^{1/2}`, the operator absolute value.
pub fn abs_op(t: &MatrixC, cfg: &ToleranceConfig) -> Result<MatrixC> {
    let gram = t.adjoint().matmul(t)?.hermitize();
    sqrt_psd(&gram, cfg)
}

/// `Re(T) = (T + T*)/2`.
pub fn re_part(t: &MatrixC) -> MatrixC {
    t.hermitize()
}

/// `lambda_min` of a Hermitian matrix.
pub fn lambda_min(h: &MatrixC, cfg: &ToleranceConfig) -> Result<f64> {
    Ok(hermitian_eigen(h, cfg)?.min_eigenvalue())
}

/// `lambda_max` of a Hermitian matrix.
pub fn lambda_max(h: &MatrixC, cfg: &ToleranceConfig) -> Result<f64> {
    Ok(hermitian_eigen(h, cfg)?.max_eigenvalue())
}

/// `c * I` with a real coefficient, sized to match `dim`.
pub fn real_scalar_matrix(dim: usize, c: f64) -> MatrixC {
    MatrixC::scalar(dim, Complex64::new(c, 0.0))
}
