//! Variance bound and the operator OIMS-type extensions.

use crate::catalog::hypothesis::{spectrum_in, BoundsHypothesis};
use crate::catalog::report::{build_report, Family, InequalityReport};
use crate::error::{Error, Result};
use crate::linalg::matrix::MatrixC;
use crate::linalg::spectral::{inv_pd, real_scalar_matrix, sqrt_psd};
use crate::maps::MapSpec;
use crate::means::geometric_mean;
use crate::tol::ToleranceConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OimsVariant {
    Phi1,
    Phi2,
    Vector,
}

impl From<OimsVariant> for Family {
    fn from(v: OimsVariant) -> Self {
        match v {
            OimsVariant::Phi1 => Family::OimsPhi1,
            OimsVariant::Phi2 => Family::OimsPhi2,
            OimsVariant::Vector => Family::OimsVector,
        }
    }
}

/// Positive definite pair with *direct* bounds `a_lo <= A <= a_hi`,
/// `b_lo <= B <= b_hi` and a map with `Phi(I)` invertible and `Phi(I) <= I`.
#[derive(Debug, Clone)]
pub struct OimsInstance {
    pub a: MatrixC,
    pub b: MatrixC,
    pub map: MapSpec,
    pub bounds: BoundsHypothesis,
}

impl OimsInstance {
    /// `gamma = max(a_lo/a_hi, b_lo/b_hi)`, in `(0, 1]` for a valid box.
    pub fn gamma(&self) -> Result<f64> {
        let (a_lo, a_hi, b_lo, b_hi) = self.bounds.as_box()?;
        Ok((a_lo / a_hi).max(b_lo / b_hi))
    }

    /// Direct box certification plus the map-side condition
    /// `0 < Phi(I) <= I`.
    pub fn certify(&self, cfg: &ToleranceConfig) -> Result<bool> {
        let bounds_ok = self.bounds.certify_box_direct(&self.a, &self.b, cfg)?;
        let phi_id = self
            .map
            .apply(&MatrixC::identity(self.map.input_dim()))?
            .hermitize();
        let es = crate::linalg::eigen::hermitian_eigen(&phi_id, cfg)?;
        let invertible = es.min_eigenvalue() > cfg.abs_tol;
        let below_identity = es.max_eigenvalue() <= 1.0 + cfg.order_band(1.0);
        Ok(bounds_ok && invertible && below_identity)
    }
}

/// The variance comparison `Psi(X^2) - Psi(X)^2 <= (hi - lo)^2 / 4` for the
/// normalized map
/// `Psi(X) = Phi(A)^{-1/2} Phi(A^{1/2} X A^{1/2}) Phi(A)^{-1/2}`
/// built from the instance's map and `A` leg.
pub fn eval_variance_bound(
    base: &OimsInstance,
    x: &MatrixC,
    lo: f64,
    hi: f64,
    cfg: &ToleranceConfig,
) -> Result<InequalityReport> {
    if !(lo.is_finite() && hi.is_finite() && 0.0 < lo && lo <= hi) {
        return Err(Error::InvalidInput(format!(
            "variance bounds must satisfy 0 < lo <= hi (got {lo}, {hi})"
        )));
    }
    base.map.validate()?;
    let hyp = spectrum_in(x, lo, hi, cfg)?;

    let a_sqrt = sqrt_psd(&base.a, cfg)?;
    let phi_a = base.map.apply(&base.a)?.hermitize();
    let phi_a_sqrt = sqrt_psd(&phi_a, cfg)?;
    let phi_a_isqrt = inv_pd(&phi_a_sqrt, cfg)?;
    let psi = |y: &MatrixC| -> Result<MatrixC> {
        let pushed = base.map.apply(&a_sqrt.matmul(y)?.matmul(&a_sqrt)?.hermitize())?;
        Ok(phi_a_isqrt
            .matmul(&pushed)?
            .matmul(&phi_a_isqrt)?
            .hermitize())
    };

    let psi_x = psi(x)?;
    let psi_x_sq = psi(&x.matmul(x)?.hermitize())?;
    let lhs = psi_x_sq.sub(&psi_x.matmul(&psi_x)?)?.hermitize();
    let rhs = real_scalar_matrix(base.map.output_dim(), (hi - lo).powi(2) / 4.0);
    build_report(Family::VarianceBound, hyp, lhs, rhs, cfg)
}

/// Evaluates one OIMS-type variant on an instance.
///
/// `Phi1`/`Phi2` are the two matrix-valued displays applied to `A^2`, `B^2`;
/// `Vector` is the unit-vector form with the sharper `1/(4 gamma^2)`
/// constant, and requires a vector-state map.
pub fn eval_oims(
    variant: OimsVariant,
    inst: &OimsInstance,
    cfg: &ToleranceConfig,
) -> Result<InequalityReport> {
    inst.map.validate()?;
    inst.bounds.validate()?;
    let (a_lo, a_hi, b_lo, b_hi) = inst.bounds.as_box()?;
    let hyp = inst.certify(cfg)?;

    let a_sq = inst.a.matmul(&inst.a)?.hermitize();
    let b_sq = inst.b.matmul(&inst.b)?.hermitize();
    let mean_sq = geometric_mean(&a_sq, &b_sq, cfg)?;
    let spread = (a_hi * b_hi - a_lo * b_lo).powi(2);

    match variant {
        OimsVariant::Phi1 | OimsVariant::Phi2 => {
            // Phi1 conjugates by Phi(B^2); Phi2 swaps the roles.
            let (outer_src, inner_src, factor) = match variant {
                OimsVariant::Phi1 => (&b_sq, &a_sq, (b_hi / b_lo).powi(2)),
                _ => (&a_sq, &b_sq, (a_hi / a_lo).powi(2)),
            };
            let q = inst.map.apply(outer_src)?.hermitize();
            let s = inst.map.apply(inner_src)?.hermitize();
            let g = inst.map.apply(&mean_sq)?.hermitize();
            let q_sqrt = sqrt_psd(&q, cfg)?;
            let q_inv = inv_pd(&q, cfg)?;
            let first = q_sqrt.matmul(&s)?.matmul(&q_sqrt)?;
            let second = q_sqrt
                .matmul(&g)?
                .matmul(&q_inv)?
                .matmul(&g)?
                .matmul(&q_sqrt)?;
            let lhs = first.sub(&second)?.hermitize();
            let rhs = real_scalar_matrix(inst.map.output_dim(), spread / 4.0 * factor);
            build_report(variant.into(), hyp, lhs, rhs, cfg)
        }
        OimsVariant::Vector => {
            if !matches!(inst.map, MapSpec::VectorState { .. }) {
                return Err(Error::NotApplicable(
                    "the vector-form OIMS bound requires a vector-state map".into(),
                ));
            }
            let gamma = inst.gamma()?;
            let pa = inst.map.apply(&a_sq)?.as_scalar()?.re;
            let pb = inst.map.apply(&b_sq)?.as_scalar()?.re;
            let pm = inst.map.apply(&mean_sq)?.as_scalar()?.re;
            let lhs = pa * pb - pm * pm;
            let rhs = spread / (4.0 * gamma * gamma);
            build_report(
                variant.into(),
                hyp,
                MatrixC::from_real_scalar(lhs),
                MatrixC::from_real_scalar(rhs),
                cfg,
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::report::Verdict;
    use num_complex::Complex64;

    fn cfg() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn uniform_state(dim: usize) -> MapSpec {
        let amp = 1.0 / (dim as f64).sqrt();
        MapSpec::VectorState {
            x: vec![Complex64::new(amp, 0.0); dim],
        }
    }

    fn witness_instance() -> OimsInstance {
        OimsInstance {
            a: MatrixC::from_real_diag(&[1.0, 2.0]),
            b: MatrixC::from_real_diag(&[2.0, 1.0]),
            map: uniform_state(2),
            bounds: BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0),
        }
    }

    #[test]
    fn variance_scalar_multiple_has_zero_lhs() {
        let base = OimsInstance {
            a: MatrixC::identity(2),
            b: MatrixC::identity(2),
            map: uniform_state(2),
            bounds: BoundsHypothesis::boxed(0.5, 2.0, 0.5, 2.0),
        };
        let x = MatrixC::scalar(2, Complex64::new(1.3, 0.0));
        let r = eval_variance_bound(&base, &x, 1.0, 2.0, &cfg()).unwrap();
        assert!(r.holds());
        assert!(r.lhs.frob_norm() < 1e-12);
    }

    #[test]
    fn variance_two_point_equality() {
        // X = diag(lo, hi) with the uniform state and A = I: the variance of
        // the balanced two-point distribution, (hi-lo)^2/4 exactly.
        let base = OimsInstance {
            a: MatrixC::identity(2),
            b: MatrixC::identity(2),
            map: uniform_state(2),
            bounds: BoundsHypothesis::boxed(0.5, 2.0, 0.5, 2.0),
        };
        let x = MatrixC::from_real_diag(&[1.0, 3.0]);
        let r = eval_variance_bound(&base, &x, 1.0, 3.0, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsAtEquality);
        assert!((r.lhs.as_scalar().unwrap().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn vector_form_witness_numbers() {
        let inst = witness_instance();
        let r = eval_oims(OimsVariant::Vector, &inst, &cfg()).unwrap();
        assert!(r.holds());
        assert!((r.lhs.as_scalar().unwrap().re - 2.25).abs() < 1e-12);
        assert!((r.rhs.as_scalar().unwrap().re - 9.0).abs() < 1e-12);
    }

    #[test]
    fn phi1_reduces_to_vector_form_on_states() {
        let inst = witness_instance();
        let phi1 = eval_oims(OimsVariant::Phi1, &inst, &cfg()).unwrap();
        let vector = eval_oims(OimsVariant::Vector, &inst, &cfg()).unwrap();
        assert!(
            (phi1.lhs.as_scalar().unwrap().re - vector.lhs.as_scalar().unwrap().re).abs() < 1e-10
        );
        assert!((phi1.rhs.as_scalar().unwrap().re - 9.0).abs() < 1e-12);
        assert!(phi1.holds());
    }

    #[test]
    fn identity_pair_has_zero_lhs() {
        let eps = 0.1;
        let inst = OimsInstance {
            a: MatrixC::identity(2),
            b: MatrixC::identity(2),
            map: uniform_state(2),
            bounds: BoundsHypothesis::boxed(1.0 - eps, 1.0 + eps, 1.0 - eps, 1.0 + eps),
        };
        for variant in [OimsVariant::Phi1, OimsVariant::Phi2, OimsVariant::Vector] {
            let r = eval_oims(variant, &inst, &cfg()).unwrap();
            assert!(r.holds(), "{variant:?}");
            assert!(r.lhs.frob_norm() < 1e-10, "{variant:?}");
        }
    }

    #[test]
    fn vector_form_demands_vector_state() {
        let mut inst = witness_instance();
        inst.map = MapSpec::NormalizedTrace { dim: 2 };
        assert!(matches!(
            eval_oims(OimsVariant::Vector, &inst, &cfg()),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn oversized_map_image_fails_certification() {
        let mut inst = witness_instance();
        // Phi(I) = 2 > I: not admissible.
        inst.map = MapSpec::StateMixture {
            vectors: vec![
                vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
                vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            ],
        };
        let r = eval_oims(OimsVariant::Phi1, &inst, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisUnmet);
    }
}
