//! Integral corollaries realized over finite quadrature data.
//!
//! Integrals over a probability space are replaced by weighted sums; the
//! displays are evaluated exactly as printed (the Klamkin integral display
//! carries the `f`-side integral on the right, with the same scale caveat
//! as its discrete counterpart).

use crate::catalog::hypothesis::BoundsHypothesis;
use crate::catalog::report::{build_scalar_report, Family, InequalityReport};
use crate::error::{Error, Result};
use crate::tol::ToleranceConfig;

const WEIGHT_SUM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegralFamily {
    Cassels,
    Klamkin,
}

impl From<IntegralFamily> for Family {
    fn from(f: IntegralFamily) -> Self {
        match f {
            IntegralFamily::Cassels => Family::CasselsIntegral,
            IntegralFamily::Klamkin => Family::KlamkinIntegral,
        }
    }
}

/// Pointwise samples of `f` and `g` with probability weights `mu`.
#[derive(Debug, Clone)]
pub struct QuadratureData {
    pub f: Vec<f64>,
    pub g: Vec<f64>,
    pub mu: Vec<f64>,
    /// Ratio bounds `0 <= lo * g <= f <= hi * g` pointwise.
    pub bounds: BoundsHypothesis,
}

impl QuadratureData {
    pub fn new(f: Vec<f64>, g: Vec<f64>, mu: Vec<f64>, bounds: BoundsHypothesis) -> Result<Self> {
        let data = Self { f, g, mu, bounds };
        data.validate()?;
        Ok(data)
    }

    pub fn validate(&self) -> Result<()> {
        if self.f.is_empty() || self.f.len() != self.g.len() || self.f.len() != self.mu.len() {
            return Err(Error::InvalidInput(
                "quadrature data needs equal-length nonempty samples".into(),
            ));
        }
        let finite = |xs: &[f64]| xs.iter().all(|x| x.is_finite());
        if !finite(&self.f) || !finite(&self.g) || !finite(&self.mu) {
            return Err(Error::InvalidInput("quadrature samples must be finite".into()));
        }
        if self.f.iter().any(|&x| x < 0.0) || self.g.iter().any(|&x| x < 0.0) {
            return Err(Error::InvalidInput(
                "quadrature samples must be nonnegative".into(),
            ));
        }
        if self.mu.iter().any(|&w| w < 0.0) {
            return Err(Error::InvalidInput(
                "quadrature weights must be nonnegative".into(),
            ));
        }
        let total: f64 = self.mu.iter().sum();
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidInput(format!(
                "quadrature weights must sum to 1 (got {total})"
            )));
        }
        self.bounds.validate()
    }

    /// Pointwise sandwich `lo * g_i <= f_i <= hi * g_i` within tolerance.
    fn certify(&self, cfg: &ToleranceConfig) -> Result<bool> {
        let (lo, hi) = self.bounds.as_ratio()?;
        Ok(self.f.iter().zip(&self.g).all(|(&fi, &gi)| {
            let band = cfg.order_band(fi.abs().max(hi * gi));
            fi >= lo * gi - band && fi <= hi * gi + band
        }))
    }
}

/// Evaluates the displayed integral inequality with integrals replaced by
/// the finite weighted sums.
pub fn eval_integral_family(
    family: IntegralFamily,
    data: &QuadratureData,
    cfg: &ToleranceConfig,
) -> Result<InequalityReport> {
    data.validate()?;
    let hyp = data.certify(cfg)?;
    let (lo, hi) = data.bounds.as_ratio()?;

    let mut if2 = 0.0;
    let mut ig2 = 0.0;
    let mut ifg = 0.0;
    for i in 0..data.f.len() {
        if2 += data.mu[i] * data.f[i] * data.f[i];
        ig2 += data.mu[i] * data.g[i] * data.g[i];
        ifg += data.mu[i] * data.f[i] * data.g[i];
    }

    let (lhs, rhs) = match family {
        IntegralFamily::Cassels => (
            if2 * ig2,
            (hi + lo).powi(2) / (4.0 * hi * lo) * ifg * ifg,
        ),
        IntegralFamily::Klamkin => (
            if2 * ig2 - ifg * ifg,
            (hi.sqrt() - lo.sqrt()).powi(2) * ifg * if2,
        ),
    };

    build_scalar_report(family.into(), hyp, lhs, rhs, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::report::Verdict;

    fn cfg() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    #[test]
    fn constant_functions_hit_equality() {
        let data = QuadratureData::new(
            vec![1.0, 1.0],
            vec![1.0, 1.0],
            vec![0.5, 0.5],
            BoundsHypothesis::ratio(1.0, 1.0),
        )
        .unwrap();
        let r = eval_integral_family(IntegralFamily::Cassels, &data, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsAtEquality);
    }

    #[test]
    fn two_point_space_matches_weighted_discrete_numbers() {
        let data = QuadratureData::new(
            vec![1.0, 2.0],
            vec![2.0, 1.0],
            vec![0.5, 0.5],
            BoundsHypothesis::ratio(0.5, 2.0),
        )
        .unwrap();
        let r = eval_integral_family(IntegralFamily::Cassels, &data, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsAtEquality);
        // Integral form: (2.5/2)^2 on both sides after cross-multiplying.
        assert!((r.lhs.as_scalar().unwrap().re - 6.25).abs() < 1e-14);
        assert!((r.rhs.as_scalar().unwrap().re - 6.25).abs() < 1e-14);
    }

    #[test]
    fn midpoint_quadrature_of_affine_ratio() {
        // f(t) = 1 + t, g = 1 on [0,1]; 16-point midpoint rule.
        let n = 16;
        let mut f = Vec::new();
        let mut g = Vec::new();
        let mut mu = Vec::new();
        for k in 0..n {
            let t = (k as f64 + 0.5) / n as f64;
            f.push(1.0 + t);
            g.push(1.0);
            mu.push(1.0 / n as f64);
        }
        let data = QuadratureData::new(f, g, mu, BoundsHypothesis::ratio(1.0, 2.0)).unwrap();
        for family in [IntegralFamily::Cassels, IntegralFamily::Klamkin] {
            let r = eval_integral_family(family, &data, &cfg()).unwrap();
            assert!(r.holds(), "{family:?}");
        }
    }

    #[test]
    fn rejects_unnormalized_weights() {
        let err = QuadratureData::new(
            vec![1.0],
            vec![1.0],
            vec![0.5],
            BoundsHypothesis::ratio(1.0, 1.0),
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn pointwise_violation_is_recorded() {
        let data = QuadratureData::new(
            vec![3.0, 1.0],
            vec![1.0, 1.0],
            vec![0.5, 0.5],
            BoundsHypothesis::ratio(1.0, 2.0),
        )
        .unwrap();
        let r = eval_integral_family(IntegralFamily::Cassels, &data, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisUnmet);
    }
}
