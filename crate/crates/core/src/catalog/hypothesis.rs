//! Bound constants certifying an instance against its hypothesis class.

use crate::error::{Error, Result};
use crate::linalg::eigen::hermitian_eigen;
use crate::linalg::matrix::MatrixC;
use crate::tol::ToleranceConfig;

/// The constants `(m, M)` or `(m1, M1, m2, M2)` attached to an instance,
/// together with the regime they certify.
///
/// `m = M` is accepted even though the source inequalities assume `m < M`:
/// equality witnesses live on the closed parameter set, and every bound
/// remains valid at `m = M` by continuity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundsHypothesis {
    /// Certifies `lo^2 A <= B <= hi^2 A`.
    Ratio { lo: f64, hi: f64 },
    /// The two-sided box. Theorem-style families read it in the squared
    /// convention `a_lo^2 <= A <= a_hi^2`, `b_lo^2 <= B <= b_hi^2`; the
    /// OIMS and Hilbert-space families read the same four numbers as direct
    /// bounds `a_lo <= A <= a_hi`, `b_lo <= B <= b_hi`.
    Box {
        a_lo: f64,
        a_hi: f64,
        b_lo: f64,
        b_hi: f64,
    },
}

impl BoundsHypothesis {
    pub fn ratio(lo: f64, hi: f64) -> Self {
        BoundsHypothesis::Ratio { lo, hi }
    }

    pub fn boxed(a_lo: f64, a_hi: f64, b_lo: f64, b_hi: f64) -> Self {
        BoundsHypothesis::Box {
            a_lo,
            a_hi,
            b_lo,
            b_hi,
        }
    }

    /// Structural validity: positive, ordered, finite.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            BoundsHypothesis::Ratio { lo, hi } => {
                lo > 0.0 && lo <= hi && lo.is_finite() && hi.is_finite()
            }
            BoundsHypothesis::Box {
                a_lo,
                a_hi,
                b_lo,
                b_hi,
            } => {
                a_lo > 0.0
                    && b_lo > 0.0
                    && a_lo <= a_hi
                    && b_lo <= b_hi
                    && [a_lo, a_hi, b_lo, b_hi].iter().all(|x| x.is_finite())
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "bound constants must satisfy 0 < lower <= upper: {self:?}"
            )))
        }
    }

    pub fn as_ratio(&self) -> Result<(f64, f64)> {
        match *self {
            BoundsHypothesis::Ratio { lo, hi } => Ok((lo, hi)),
            _ => Err(Error::InvalidInput(
                "expected a Ratio hypothesis for this family".into(),
            )),
        }
    }

    pub fn as_box(&self) -> Result<(f64, f64, f64, f64)> {
        match *self {
            BoundsHypothesis::Box {
                a_lo,
                a_hi,
                b_lo,
                b_hi,
            } => Ok((a_lo, a_hi, b_lo, b_hi)),
            _ => Err(Error::InvalidInput(
                "expected a Box hypothesis for this family".into(),
            )),
        }
    }

    /// Box-to-Ratio conversion: `m = b_lo/a_hi`, `M = b_hi/a_lo`, so that a
    /// box-certified pair is also ratio-certified with the converted
    /// constants.
    pub fn to_ratio(&self) -> Self {
        match *self {
            BoundsHypothesis::Ratio { .. } => *self,
            BoundsHypothesis::Box {
                a_lo,
                a_hi,
                b_lo,
                b_hi,
            } => BoundsHypothesis::Ratio {
                lo: b_lo / a_hi,
                hi: b_hi / a_lo,
            },
        }
    }

    /// Checks `lo^2 A <= B <= hi^2 A` within tolerance.
    pub fn certify_ratio(&self, a: &MatrixC, b: &MatrixC, cfg: &ToleranceConfig) -> Result<bool> {
        let (lo, hi) = self.as_ratio()?;
        let lower = crate::linalg::spectral::loewner_leq(&a.scale(lo * lo), b, cfg)?;
        let upper = crate::linalg::spectral::loewner_leq(b, &a.scale(hi * hi), cfg)?;
        Ok(lower.holds && upper.holds)
    }

    /// Checks `a_lo^2 <= A <= a_hi^2` and `b_lo^2 <= B <= b_hi^2`.
    pub fn certify_box_squared(
        &self,
        a: &MatrixC,
        b: &MatrixC,
        cfg: &ToleranceConfig,
    ) -> Result<bool> {
        let (a_lo, a_hi, b_lo, b_hi) = self.as_box()?;
        Ok(spectrum_in(a, a_lo * a_lo, a_hi * a_hi, cfg)?
            && spectrum_in(b, b_lo * b_lo, b_hi * b_hi, cfg)?)
    }

    /// Checks the direct bounds `a_lo <= A <= a_hi` and `b_lo <= B <= b_hi`.
    pub fn certify_box_direct(
        &self,
        a: &MatrixC,
        b: &MatrixC,
        cfg: &ToleranceConfig,
    ) -> Result<bool> {
        let (a_lo, a_hi, b_lo, b_hi) = self.as_box()?;
        Ok(spectrum_in(a, a_lo, a_hi, cfg)? && spectrum_in(b, b_lo, b_hi, cfg)?)
    }
}

/// True iff the spectrum of Hermitian `h` lies in `[lo, hi]` within the
/// tolerance band.
pub fn spectrum_in(h: &MatrixC, lo: f64, hi: f64, cfg: &ToleranceConfig) -> Result<bool> {
    let es = hermitian_eigen(h, cfg)?;
    let scale = es
        .eigenvalues
        .iter()
        .fold(hi.abs(), |acc, &l| acc.max(l.abs()));
    let band = cfg.order_band(scale);
    Ok(es.min_eigenvalue() >= lo - band && es.max_eigenvalue() <= hi + band)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_rejects_bad_constants() {
        assert!(BoundsHypothesis::ratio(2.0, 1.0).validate().is_err());
        assert!(BoundsHypothesis::ratio(0.0, 1.0).validate().is_err());
        assert!(BoundsHypothesis::ratio(1.0, 1.0).validate().is_ok());
        assert!(BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0).validate().is_ok());
        assert!(BoundsHypothesis::boxed(1.0, 2.0, 3.0, 2.0).validate().is_err());
    }

    #[test]
    fn box_to_ratio_conversion() {
        let b = BoundsHypothesis::boxed(1.0, 2.0, 3.0, 4.0);
        let (lo, hi) = b.to_ratio().as_ratio().unwrap();
        assert!((lo - 1.5).abs() < 1e-15);
        assert!((hi - 4.0).abs() < 1e-15);
    }

    #[test]
    fn ratio_certification() {
        let cfg = ToleranceConfig::default();
        let a = MatrixC::from_real_diag(&[1.0, 4.0]);
        let b = MatrixC::from_real_diag(&[4.0, 1.0]);
        // B/A spectrum is {4, 1/4}: certified by (1/2, 2), not by (1, 2).
        assert!(BoundsHypothesis::ratio(0.5, 2.0)
            .certify_ratio(&a, &b, &cfg)
            .unwrap());
        assert!(!BoundsHypothesis::ratio(1.0, 2.0)
            .certify_ratio(&a, &b, &cfg)
            .unwrap());
    }

    #[test]
    fn box_certification_conventions() {
        let cfg = ToleranceConfig::default();
        let a = MatrixC::from_real_diag(&[1.0, 4.0]);
        let b = MatrixC::from_real_diag(&[1.0, 2.0]);
        let bounds = BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0);
        // Squared convention: spectra must lie in [1, 4].
        assert!(bounds.certify_box_squared(&a, &b, &cfg).unwrap());
        // Direct convention: spectra must lie in [1, 2]; A fails.
        assert!(!bounds.certify_box_direct(&a, &b, &cfg).unwrap());
        assert!(bounds.certify_box_direct(&b, &b, &cfg).unwrap());
    }
}
