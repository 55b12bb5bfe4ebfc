//! Hilbert-space corollaries: sums of squared vector norms against the
//! square root of the mean of squares.

use num_complex::Complex64;

use crate::catalog::hypothesis::BoundsHypothesis;
use crate::catalog::report::{build_scalar_report, Family, InequalityReport};
use crate::error::{Error, Result};
use crate::linalg::matrix::{vec_norm, MatrixC};
use crate::linalg::spectral::sqrt_psd;
use crate::means::geometric_mean;
use crate::tol::ToleranceConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HilbertFamily {
    DiazMetcalf,
    PolyaSzego,
}

impl From<HilbertFamily> for Family {
    fn from(f: HilbertFamily) -> Self {
        match f {
            HilbertFamily::DiazMetcalf => Family::HilbertDiazMetcalf,
            HilbertFamily::PolyaSzego => Family::HilbertPolyaSzego,
        }
    }
}

/// Two positive operators with direct bounds and a family of vectors.
#[derive(Debug, Clone)]
pub struct HilbertInstance {
    pub t: MatrixC,
    pub s: MatrixC,
    pub xis: Vec<Vec<Complex64>>,
    /// Direct bounds `a_lo <= T <= a_hi`, `b_lo <= S <= b_hi`.
    pub bounds: BoundsHypothesis,
}

impl HilbertInstance {
    pub fn validate(&self) -> Result<()> {
        if self.t.dim() != self.s.dim() {
            return Err(Error::DimMismatch {
                left: self.t.dim(),
                right: self.s.dim(),
            });
        }
        if self.xis.is_empty() || self.xis.iter().any(|x| x.len() != self.t.dim()) {
            return Err(Error::InvalidInput(
                "vector family must be nonempty and match the operator dimension".into(),
            ));
        }
        self.bounds.validate()?;
        self.bounds.as_box().map(|_| ())
    }
}

/// Evaluates both displayed inequalities:
///
/// 1. `(b_hi b_lo / (a_hi a_lo)) sum ||T xi||^2 + sum ||S xi||^2
///     <= (b_hi/a_lo + b_lo/a_hi) sum ||(T^2 # S^2)^{1/2} xi||^2`
/// 2. `(sum ||T xi||^2)^{1/2} (sum ||S xi||^2)^{1/2}
///     <= 1/2 (sqrt(hi-ratio) + sqrt(lo-ratio)) sum ||(T^2 # S^2)^{1/2} xi||^2`
pub fn eval_hilbert_corollary(
    inst: &HilbertInstance,
    cfg: &ToleranceConfig,
) -> Result<(InequalityReport, InequalityReport)> {
    Ok((
        eval_hilbert_family(HilbertFamily::DiazMetcalf, inst, cfg)?,
        eval_hilbert_family(HilbertFamily::PolyaSzego, inst, cfg)?,
    ))
}

pub fn eval_hilbert_family(
    family: HilbertFamily,
    inst: &HilbertInstance,
    cfg: &ToleranceConfig,
) -> Result<InequalityReport> {
    inst.validate()?;
    let (a_lo, a_hi, b_lo, b_hi) = inst.bounds.as_box()?;
    let hyp = inst.bounds.certify_box_direct(&inst.t, &inst.s, cfg)?;

    let t_sq = inst.t.matmul(&inst.t)?.hermitize();
    let s_sq = inst.s.matmul(&inst.s)?.hermitize();
    let k = sqrt_psd(&geometric_mean(&t_sq, &s_sq, cfg)?, cfg)?;

    let sum_norm_sq = |op: &MatrixC| -> Result<f64> {
        let mut total = 0.0;
        for xi in &inst.xis {
            total += vec_norm(&op.matvec(xi)?).powi(2);
        }
        Ok(total)
    };
    let st = sum_norm_sq(&inst.t)?;
    let ss = sum_norm_sq(&inst.s)?;
    let sk = sum_norm_sq(&k)?;

    let (lhs, rhs) = match family {
        HilbertFamily::DiazMetcalf => (
            b_hi * b_lo / (a_hi * a_lo) * st + ss,
            (b_hi / a_lo + b_lo / a_hi) * sk,
        ),
        HilbertFamily::PolyaSzego => {
            let ratio = a_hi * b_hi / (a_lo * b_lo);
            (
                st.sqrt() * ss.sqrt(),
                0.5 * (ratio.sqrt() + ratio.sqrt().recip()) * sk,
            )
        }
    };

    build_scalar_report(family.into(), hyp, lhs, rhs, cfg)
}
