//! The eight operator inequality families under ratio and box hypotheses.

use crate::catalog::hypothesis::{spectrum_in, BoundsHypothesis};
use crate::catalog::report::{build_report, Family, InequalityReport};
use crate::error::Result;
use crate::linalg::matrix::MatrixC;
use crate::linalg::spectral::{inv_pd, real_scalar_matrix, sqrt_psd};
use crate::maps::{check_unital, MapSpec};
use crate::means::geometric_mean;
use crate::tol::ToleranceConfig;

/// Operator families of the two-regime reverse Cauchy-Schwarz theorem.
///
/// `Dm1`, `Cassels` and `Klamkin` require a ratio hypothesis
/// `m^2 A <= B <= M^2 A`; `Dm2`, `PolyaSzego`, `ShishaMond` and `Gruss`
/// require the squared box `m1^2 <= A <= M1^2`, `m2^2 <= B <= M2^2`;
/// `Kantorovich` is box-derived with `B = A^{-1}` and a unital map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorFamily {
    Dm1,
    Cassels,
    Klamkin,
    Kantorovich,
    Dm2,
    PolyaSzego,
    ShishaMond,
    Gruss,
}

impl OperatorFamily {
    pub const ALL: [OperatorFamily; 8] = [
        OperatorFamily::Dm1,
        OperatorFamily::Cassels,
        OperatorFamily::Klamkin,
        OperatorFamily::Kantorovich,
        OperatorFamily::Dm2,
        OperatorFamily::PolyaSzego,
        OperatorFamily::ShishaMond,
        OperatorFamily::Gruss,
    ];

    pub fn uses_ratio_bounds(&self) -> bool {
        matches!(
            self,
            OperatorFamily::Dm1 | OperatorFamily::Cassels | OperatorFamily::Klamkin
        )
    }
}

impl From<OperatorFamily> for Family {
    fn from(f: OperatorFamily) -> Self {
        match f {
            OperatorFamily::Dm1 => Family::Dm1,
            OperatorFamily::Cassels => Family::CasselsOp,
            OperatorFamily::Klamkin => Family::KlamkinOp,
            OperatorFamily::Kantorovich => Family::KantorovichOp,
            OperatorFamily::Dm2 => Family::Dm2,
            OperatorFamily::PolyaSzego => Family::PolyaSzegoOp,
            OperatorFamily::ShishaMond => Family::ShishaMondOp,
            OperatorFamily::Gruss => Family::GrussOp,
        }
    }
}

/// A pair of positive definite operators, a positive linear map and the
/// bound constants claimed for them.
#[derive(Debug, Clone)]
pub struct OperatorInstance {
    pub a: MatrixC,
    pub b: MatrixC,
    pub map: MapSpec,
    pub bounds: BoundsHypothesis,
}

/// Evaluates one operator family on an instance.
///
/// The hypothesis is re-validated here no matter how the instance was
/// produced; a failed hypothesis is recorded in the report, never thrown.
/// Hard errors are reserved for structural problems (dimension mismatches,
/// sides that require an inverse of a singular block).
pub fn eval_operator_family(
    family: OperatorFamily,
    inst: &OperatorInstance,
    cfg: &ToleranceConfig,
) -> Result<InequalityReport> {
    inst.bounds.validate()?;
    inst.map.validate()?;
    let out_dim = inst.map.output_dim();

    match family {
        OperatorFamily::Dm1 => {
            let (m, big_m) = inst.bounds.as_ratio()?;
            let hyp = inst.bounds.certify_ratio(&inst.a, &inst.b, cfg)?;
            let phi_a = inst.map.apply(&inst.a)?;
            let phi_b = inst.map.apply(&inst.b)?;
            let phi_mean = inst.map.apply(&geometric_mean(&inst.a, &inst.b, cfg)?)?;
            let lhs = phi_a.scale(big_m * m).add(&phi_b)?;
            let rhs = phi_mean.scale(big_m + m);
            build_report(family.into(), hyp, lhs, rhs, cfg)
        }
        OperatorFamily::Cassels => {
            let (m, big_m) = inst.bounds.as_ratio()?;
            let hyp = inst.bounds.certify_ratio(&inst.a, &inst.b, cfg)?;
            let phi_a = inst.map.apply(&inst.a)?;
            let phi_b = inst.map.apply(&inst.b)?;
            let phi_mean = inst.map.apply(&geometric_mean(&inst.a, &inst.b, cfg)?)?;
            let lhs = geometric_mean(&phi_a, &phi_b, cfg)?;
            let rhs = phi_mean.scale((big_m + m) / (2.0 * (big_m * m).sqrt()));
            build_report(family.into(), hyp, lhs, rhs, cfg)
        }
        OperatorFamily::Klamkin => {
            let (m, big_m) = inst.bounds.as_ratio()?;
            let hyp = inst.bounds.certify_ratio(&inst.a, &inst.b, cfg)?;
            let lhs = klamkin_shape(inst, cfg)?;
            let rhs = real_scalar_matrix(out_dim, (big_m.sqrt() - m.sqrt()).powi(2));
            build_report(family.into(), hyp, lhs, rhs, cfg)
        }
        OperatorFamily::Kantorovich => {
            // B is ignored: the family pins B = A^{-1} with the derived
            // bounds 1/M <= b-constants <= 1/m.
            let (m, big_m, _, _) = inst.bounds.as_box()?;
            let unital = check_unital(&inst.map, cfg)?;
            let spectrum_ok = spectrum_in(&inst.a, m * m, big_m * big_m, cfg)?;
            let hyp = unital && spectrum_ok;
            let a_inv = inv_pd(&inst.a, cfg)?;
            let phi_a = inst.map.apply(&inst.a)?;
            let phi_a_inv = inst.map.apply(&a_inv)?;
            let lhs = geometric_mean(&phi_a, &phi_a_inv, cfg)?;
            let rhs = real_scalar_matrix(
                out_dim,
                (big_m * big_m + m * m) / (2.0 * big_m * m),
            );
            build_report(family.into(), hyp, lhs, rhs, cfg)
        }
        OperatorFamily::Dm2 => {
            let (m1, big_m1, m2, big_m2) = inst.bounds.as_box()?;
            let hyp = inst.bounds.certify_box_squared(&inst.a, &inst.b, cfg)?;
            let phi_a = inst.map.apply(&inst.a)?;
            let phi_b = inst.map.apply(&inst.b)?;
            let phi_mean = inst.map.apply(&geometric_mean(&inst.a, &inst.b, cfg)?)?;
            let lhs = phi_a
                .scale(big_m2 * m2 / (big_m1 * m1))
                .add(&phi_b)?;
            let rhs = phi_mean.scale(big_m2 / m1 + m2 / big_m1);
            build_report(family.into(), hyp, lhs, rhs, cfg)
        }
        OperatorFamily::PolyaSzego => {
            let (m1, big_m1, m2, big_m2) = inst.bounds.as_box()?;
            let hyp = inst.bounds.certify_box_squared(&inst.a, &inst.b, cfg)?;
            let phi_a = inst.map.apply(&inst.a)?;
            let phi_b = inst.map.apply(&inst.b)?;
            let phi_mean = inst.map.apply(&geometric_mean(&inst.a, &inst.b, cfg)?)?;
            let ratio = big_m1 * big_m2 / (m1 * m2);
            let lhs = geometric_mean(&phi_a, &phi_b, cfg)?;
            let rhs = phi_mean.scale(0.5 * (ratio.sqrt() + ratio.sqrt().recip()));
            build_report(family.into(), hyp, lhs, rhs, cfg)
        }
        OperatorFamily::ShishaMond => {
            let (m1, big_m1, m2, big_m2) = inst.bounds.as_box()?;
            let hyp = inst.bounds.certify_box_squared(&inst.a, &inst.b, cfg)?;
            let lhs = klamkin_shape(inst, cfg)?;
            let rhs = real_scalar_matrix(
                out_dim,
                ((big_m2 / m1).sqrt() - (m2 / big_m1).sqrt()).powi(2),
            );
            build_report(family.into(), hyp, lhs, rhs, cfg)
        }
        OperatorFamily::Gruss => {
            let (m1, big_m1, m2, big_m2) = inst.bounds.as_box()?;
            let hyp = inst.bounds.certify_box_squared(&inst.a, &inst.b, cfg)?;
            let phi_a = inst.map.apply(&inst.a)?;
            let phi_b = inst.map.apply(&inst.b)?;
            let phi_mean = inst.map.apply(&geometric_mean(&inst.a, &inst.b, cfg)?)?;
            let lhs = geometric_mean(&phi_a, &phi_b, cfg)?.sub(&phi_mean)?;
            let rhs = real_scalar_matrix(
                out_dim,
                gruss_constant(m1, big_m1, m2, big_m2),
            );
            build_report(family.into(), hyp, lhs, rhs, cfg)
        }
    }
}

/// `sqrt(M1 M2) (sqrt(M1 M2) - sqrt(m1 m2))^2 / (2 sqrt(m1 m2))
///  * min(M1/m1, M2/m2)`, taken from the certified box constants as given.
pub(crate) fn gruss_constant(m1: f64, big_m1: f64, m2: f64, big_m2: f64) -> f64 {
    let hi = (big_m1 * big_m2).sqrt();
    let lo = (m1 * m2).sqrt();
    hi * (hi - lo).powi(2) / (2.0 * lo) * (big_m1 / m1).min(big_m2 / m2)
}

/// The difference-shape left side shared by the Klamkin and Shisha-Mond
/// families:
///
/// `G^{-1/2} Phi(B) G^{-1/2} - G^{1/2} Phi(A)^{-1} G^{1/2}`
///
/// with `G = Phi(A # B)`. The conjugation products are formed from the PSD
/// square root of `G` and Hermitized after assembly to control roundoff on
/// the triple products.
fn klamkin_shape(inst: &OperatorInstance, cfg: &ToleranceConfig) -> Result<MatrixC> {
    let phi_a = inst.map.apply(&inst.a)?;
    let phi_b = inst.map.apply(&inst.b)?;
    let g = inst
        .map
        .apply(&geometric_mean(&inst.a, &inst.b, cfg)?)?
        .hermitize();
    let g_sqrt = sqrt_psd(&g, cfg)?;
    let g_sqrt_inv = inv_pd(&g_sqrt, cfg)?;
    let phi_a_inv = inv_pd(&phi_a.hermitize(), cfg)?;
    let first = g_sqrt_inv.matmul(&phi_b)?.matmul(&g_sqrt_inv)?.hermitize();
    let second = g_sqrt.matmul(&phi_a_inv)?.matmul(&g_sqrt)?.hermitize();
    Ok(first.sub(&second)?.hermitize())
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

    #[test]
    fn dm1_identity_pair() {
        let inst = OperatorInstance {
            a: MatrixC::identity(2),
            b: MatrixC::identity(2),
            map: MapSpec::Identity { dim: 2 },
            bounds: BoundsHypothesis::ratio(0.5, 2.0),
        };
        let r = eval_operator_family(OperatorFamily::Dm1, &inst, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!((r.gap_min - 0.5).abs() < 1e-12);
        assert!((r.lhs.get(0, 0).re - 2.0).abs() < 1e-12);
        assert!((r.rhs.get(0, 0).re - 2.5).abs() < 1e-12);
    }

    #[test]
    fn kantorovich_equality_witness() {
        // A = diag(m^2, M^2) with the uniform state hits (M^2+m^2)/(2Mm).
        let inst = OperatorInstance {
            a: MatrixC::from_real_diag(&[1.0, 4.0]),
            b: MatrixC::identity(2),
            map: uniform_state(2),
            bounds: BoundsHypothesis::boxed(1.0, 2.0, 0.5, 1.0),
        };
        let r = eval_operator_family(OperatorFamily::Kantorovich, &inst, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsAtEquality);
        assert!((r.lhs.as_scalar().unwrap().re - 1.25).abs() < 1e-12);
        assert!((r.rhs.as_scalar().unwrap().re - 1.25).abs() < 1e-12);
    }

    #[test]
    fn cassels_equality_witness() {
        let inst = OperatorInstance {
            a: MatrixC::from_real_diag(&[1.0, 4.0]),
            b: MatrixC::from_real_diag(&[4.0, 1.0]),
            map: uniform_state(2),
            bounds: BoundsHypothesis::ratio(0.5, 2.0),
        };
        let r = eval_operator_family(OperatorFamily::Cassels, &inst, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsAtEquality);
        assert!((r.lhs.as_scalar().unwrap().re - 2.5).abs() < 1e-12);
        assert!((r.rhs.as_scalar().unwrap().re - 2.5).abs() < 1e-12);
    }

    #[test]
    fn polya_szego_equality_witness() {
        let inst = OperatorInstance {
            a: MatrixC::from_real_diag(&[1.0, 4.0]),
            b: MatrixC::from_real_diag(&[4.0, 1.0]),
            map: uniform_state(2),
            bounds: BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0),
        };
        let r = eval_operator_family(OperatorFamily::PolyaSzego, &inst, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsAtEquality);
        // Coefficient (sqrt(4) + sqrt(1/4))/2 = 1.25 applied to Phi(A#B) = 2.
        assert!((r.rhs.as_scalar().unwrap().re - 2.5).abs() < 1e-12);
    }

    #[test]
    fn falsified_bounds_are_recorded_not_thrown() {
        let inst = OperatorInstance {
            a: MatrixC::from_real_diag(&[1.0, 4.0]),
            b: MatrixC::from_real_diag(&[4.0, 1.0]),
            // Claims B/A ratio inside [1, 1.1]: false.
            map: uniform_state(2),
            bounds: BoundsHypothesis::ratio(1.0, 1.1),
        };
        let r = eval_operator_family(OperatorFamily::Dm1, &inst, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisUnmet);
        assert!(!r.hypothesis_ok);
    }

    #[test]
    fn klamkin_holds_on_diagonal_data() {
        let inst = OperatorInstance {
            a: MatrixC::from_real_diag(&[1.0, 4.0]),
            b: MatrixC::from_real_diag(&[4.0, 1.0]),
            map: uniform_state(2),
            bounds: BoundsHypothesis::ratio(0.5, 2.0),
        };
        let r = eval_operator_family(OperatorFamily::Klamkin, &inst, &cfg()).unwrap();
        assert!(r.holds());
        // Scalar reduction: Phi(B)/G - G/Phi(A) with G = 2, Phi = 2.5 each.
        let lhs = r.lhs.as_scalar().unwrap().re;
        assert!((lhs - (2.5 / 2.0 - 2.0 / 2.5)).abs() < 1e-12);
        let expected_rhs = (2.0f64.sqrt() - 0.5f64.sqrt()).powi(2);
        assert!((r.rhs.as_scalar().unwrap().re - expected_rhs).abs() < 1e-12);
    }

    #[test]
    fn wrong_bounds_kind_is_an_error() {
        let inst = OperatorInstance {
            a: MatrixC::identity(2),
            b: MatrixC::identity(2),
            map: MapSpec::Identity { dim: 2 },
            bounds: BoundsHypothesis::ratio(0.5, 2.0),
        };
        assert!(eval_operator_family(OperatorFamily::Dm2, &inst, &cfg()).is_err());
    }
}
