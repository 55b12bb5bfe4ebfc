//! Discrete scalar corollaries and their re-derivation through the
//! operator pipeline.
//!
//! Each family is evaluated twice in the test suites: once by direct tuple
//! arithmetic here, and once by [`scalar_via_operator`], which builds the
//! diagonal matrices `A = diag(a_i^2)`, `B = diag(b_i^2)` and the weighted
//! state, runs the corresponding operator family, and reassembles the same
//! printed display from the operator-pipeline quantities. The two routes
//! must agree to high precision.
//!
//! Displays are implemented exactly as classically printed. Note that the
//! printed Klamkin-McLenaghan right side carries the `a`-side sum and is
//! therefore scale-sensitive: certified data with `m M < 1` can violate it
//! even though the operator-derived form (with the `b`-side sum) always
//! holds. The tests pin one such instance as a documented negative case.

use num_complex::Complex64;

use crate::catalog::hypothesis::BoundsHypothesis;
use crate::catalog::operator::{eval_operator_family, OperatorFamily, OperatorInstance};
use crate::catalog::report::{build_scalar_report, Family, InequalityReport};
use crate::error::{Error, Result};
use crate::linalg::matrix::MatrixC;
use crate::maps::MapSpec;
use crate::means::geometric_mean;
use crate::tol::ToleranceConfig;

/// Discrete scalar families over weighted positive tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiscreteFamily {
    DiazMetcalf,
    PolyaSzego,
    ShishaMond,
    Gruss,
    Schweitzer,
    Cassels,
    Klamkin,
    GruebRheinboldt,
    OimsClassical,
}

impl DiscreteFamily {
    pub const ALL: [DiscreteFamily; 9] = [
        DiscreteFamily::DiazMetcalf,
        DiscreteFamily::PolyaSzego,
        DiscreteFamily::ShishaMond,
        DiscreteFamily::Gruss,
        DiscreteFamily::Schweitzer,
        DiscreteFamily::Cassels,
        DiscreteFamily::Klamkin,
        DiscreteFamily::GruebRheinboldt,
        DiscreteFamily::OimsClassical,
    ];

    /// The eight families with an operator-pipeline re-derivation (all but
    /// the classical OIMS bound, whose constant has no operator
    /// counterpart in the catalog).
    pub const OPERATOR_ROUTED: [DiscreteFamily; 8] = [
        DiscreteFamily::DiazMetcalf,
        DiscreteFamily::PolyaSzego,
        DiscreteFamily::ShishaMond,
        DiscreteFamily::Gruss,
        DiscreteFamily::Schweitzer,
        DiscreteFamily::Cassels,
        DiscreteFamily::Klamkin,
        DiscreteFamily::GruebRheinboldt,
    ];
}

impl From<DiscreteFamily> for Family {
    fn from(f: DiscreteFamily) -> Self {
        match f {
            DiscreteFamily::DiazMetcalf => Family::DiazMetcalf,
            DiscreteFamily::PolyaSzego => Family::PolyaSzego,
            DiscreteFamily::ShishaMond => Family::ShishaMond,
            DiscreteFamily::Gruss => Family::GrussDiscrete,
            DiscreteFamily::Schweitzer => Family::Schweitzer,
            DiscreteFamily::Cassels => Family::CasselsWeighted,
            DiscreteFamily::Klamkin => Family::KlamkinWeighted,
            DiscreteFamily::GruebRheinboldt => Family::GruebRheinboldt,
            DiscreteFamily::OimsClassical => Family::OimsClassical,
        }
    }
}

/// Weighted positive tuples with their claimed bound constants.
///
/// Box families read the bounds as `a_lo <= a_i <= a_hi`,
/// `b_lo <= b_i <= b_hi`; ratio families as `lo <= a_i/b_i <= hi`; the
/// Schweitzer family reads a ratio hypothesis as direct bounds
/// `lo <= a_i <= hi` and always uses uniform weights `1/n`.
#[derive(Debug, Clone)]
pub struct DiscreteData {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub w: Vec<f64>,
    pub bounds: BoundsHypothesis,
}

impl DiscreteData {
    pub fn new(a: Vec<f64>, b: Vec<f64>, w: Option<Vec<f64>>, bounds: BoundsHypothesis) -> Result<Self> {
        let n = a.len();
        let w = w.unwrap_or_else(|| vec![1.0; n]);
        let data = Self { a, b, w, bounds };
        data.validate()?;
        Ok(data)
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        if self.a.is_empty() || self.a.len() != self.b.len() || self.a.len() != self.w.len() {
            return Err(Error::InvalidInput(
                "discrete data needs equal-length nonempty tuples".into(),
            ));
        }
        let positive = |xs: &[f64]| xs.iter().all(|x| x.is_finite() && *x > 0.0);
        if !positive(&self.a) || !positive(&self.b) || !positive(&self.w) {
            return Err(Error::InvalidInput(
                "discrete tuples and weights must be positive and finite".into(),
            ));
        }
        self.bounds.validate()
    }

    fn weighted_sums(&self) -> (f64, f64, f64) {
        let mut sa2 = 0.0;
        let mut sb2 = 0.0;
        let mut sab = 0.0;
        for i in 0..self.len() {
            sa2 += self.w[i] * self.a[i] * self.a[i];
            sb2 += self.w[i] * self.b[i] * self.b[i];
            sab += self.w[i] * self.a[i] * self.b[i];
        }
        (sa2, sb2, sab)
    }

    /// Tolerance-banded hypothesis check in the convention the family uses.
    fn certify(&self, family: DiscreteFamily, cfg: &ToleranceConfig) -> Result<bool> {
        let within = |x: f64, lo: f64, hi: f64| {
            let band = cfg.order_band(x.abs().max(hi.abs()));
            x >= lo - band && x <= hi + band
        };
        match family {
            DiscreteFamily::Schweitzer => {
                let (lo, hi) = self.bounds.as_ratio()?;
                Ok(self.a.iter().all(|&x| within(x, lo, hi)))
            }
            DiscreteFamily::Cassels | DiscreteFamily::Klamkin => {
                let (lo, hi) = self.bounds.as_ratio()?;
                Ok(self
                    .a
                    .iter()
                    .zip(&self.b)
                    .all(|(&ai, &bi)| within(ai / bi, lo, hi)))
            }
            _ => {
                let (a_lo, a_hi, b_lo, b_hi) = self.bounds.as_box()?;
                Ok(self.a.iter().all(|&x| within(x, a_lo, a_hi))
                    && self.b.iter().all(|&x| within(x, b_lo, b_hi)))
            }
        }
    }
}

/// Direct tuple-arithmetic evaluation of a discrete family.
pub fn eval_discrete_family(
    family: DiscreteFamily,
    data: &DiscreteData,
    cfg: &ToleranceConfig,
) -> Result<InequalityReport> {
    data.validate()?;
    let hyp = data.certify(family, cfg)?;
    let (sa2, sb2, sab) = data.weighted_sums();
    let n = data.len() as f64;

    let (lhs, rhs) = match family {
        DiscreteFamily::DiazMetcalf => {
            let (m1, big_m1, m2, big_m2) = data.bounds.as_box()?;
            (
                sb2 + m2 * big_m2 / (m1 * big_m1) * sa2,
                (big_m2 / m1 + m2 / big_m1) * sab,
            )
        }
        DiscreteFamily::PolyaSzego => {
            let (m1, big_m1, m2, big_m2) = data.bounds.as_box()?;
            guard_denominator(sab)?;
            let ratio = big_m1 * big_m2 / (m1 * m2);
            (
                sa2 * sb2 / (sab * sab),
                0.25 * (ratio.sqrt() + ratio.sqrt().recip()).powi(2),
            )
        }
        DiscreteFamily::ShishaMond => {
            let (m1, big_m1, m2, big_m2) = data.bounds.as_box()?;
            guard_denominator(sab)?;
            guard_denominator(sb2)?;
            (
                sa2 / sab - sab / sb2,
                ((big_m1 / m2).sqrt() - (m1 / big_m2).sqrt()).powi(2),
            )
        }
        DiscreteFamily::Gruss => {
            let (m1, big_m1, m2, big_m2) = data.bounds.as_box()?;
            (
                sa2.sqrt() * sb2.sqrt() - sab,
                crate::catalog::operator::gruss_constant(m1, big_m1, m2, big_m2),
            )
        }
        DiscreteFamily::Schweitzer => {
            // Uniform weights 1/n regardless of the stored weights.
            let (m, big_m) = data.bounds.as_ratio()?;
            let mean_sq = data.a.iter().map(|x| x * x).sum::<f64>() / n;
            let mean_inv_sq = data.a.iter().map(|x| 1.0 / (x * x)).sum::<f64>() / n;
            (
                mean_sq * mean_inv_sq,
                (big_m * big_m + m * m).powi(2) / (4.0 * big_m * big_m * m * m),
            )
        }
        DiscreteFamily::Cassels => {
            let (m, big_m) = data.bounds.as_ratio()?;
            guard_denominator(sab)?;
            (
                sa2 * sb2 / (sab * sab),
                (big_m + m).powi(2) / (4.0 * m * big_m),
            )
        }
        DiscreteFamily::Klamkin => {
            // Printed display: the right side carries the a-side sum.
            let (m, big_m) = data.bounds.as_ratio()?;
            (
                sa2 * sb2 - sab * sab,
                (big_m.sqrt() - m.sqrt()).powi(2) * sab * sa2,
            )
        }
        DiscreteFamily::GruebRheinboldt => {
            let (m1, big_m1, m2, big_m2) = data.bounds.as_box()?;
            guard_denominator(sab)?;
            (
                sa2 * sb2 / (sab * sab),
                (big_m1 * big_m2 + m1 * m2).powi(2) / (4.0 * m1 * m2 * big_m1 * big_m2),
            )
        }
        DiscreteFamily::OimsClassical => {
            // Unweighted by construction: the n^2/3 constant is tied to the
            // counting measure.
            let (m1, big_m1, m2, big_m2) = data.bounds.as_box()?;
            let ua2: f64 = data.a.iter().map(|x| x * x).sum();
            let ub2: f64 = data.b.iter().map(|x| x * x).sum();
            let uab: f64 = data.a.iter().zip(&data.b).map(|(x, y)| x * y).sum();
            (
                ua2 * ub2 - uab * uab,
                n * n / 3.0 * (big_m1 * big_m2 - m1 * m2).powi(2),
            )
        }
    };

    build_scalar_report(family.into(), hyp, lhs, rhs, cfg)
}

fn guard_denominator(x: f64) -> Result<()> {
    // Impossible under the positivity invariants, guarded anyway.
    if x == 0.0 {
        return Err(Error::DegenerateDenominator("discrete display"));
    }
    Ok(())
}

/// How the operator-family report is reshaped into the printed scalar
/// display.
enum DisplayMassage {
    /// The operator sides already are the display.
    Identity,
    /// Square both sides (ratio displays of the Kantorovich shape).
    SquareBoth,
    /// `(side / Phi(A # B))^2`: product-over-square displays.
    SquareOverMean,
    /// Klamkin: `lhs * G * Phi(A')`, `rhs * G * Phi(B')`.
    Klamkin,
}

/// Re-derives a discrete family through the operator pipeline.
///
/// Builds the diagonal operator instance with the weighted state
/// `x = (sqrt(w_1), ..., sqrt(w_n))`, evaluates the corresponding operator
/// family, and reassembles the printed display from the pipeline
/// quantities. Returns `NotApplicable` for the classical OIMS family.
pub fn scalar_via_operator(
    family: DiscreteFamily,
    data: &DiscreteData,
    cfg: &ToleranceConfig,
) -> Result<InequalityReport> {
    data.validate()?;
    let diag_sq = |xs: &[f64]| MatrixC::from_real_diag(&xs.iter().map(|x| x * x).collect::<Vec<_>>());
    let state = MapSpec::StateMixture {
        vectors: vec![data
            .w
            .iter()
            .map(|&w| Complex64::new(w.sqrt(), 0.0))
            .collect()],
    };

    let (op_family, inst, massage) = match family {
        DiscreteFamily::DiazMetcalf => (
            OperatorFamily::Dm2,
            OperatorInstance {
                a: diag_sq(&data.a),
                b: diag_sq(&data.b),
                map: state,
                bounds: data.bounds,
            },
            DisplayMassage::Identity,
        ),
        DiscreteFamily::PolyaSzego => (
            OperatorFamily::PolyaSzego,
            OperatorInstance {
                a: diag_sq(&data.a),
                b: diag_sq(&data.b),
                map: state,
                bounds: data.bounds,
            },
            DisplayMassage::SquareOverMean,
        ),
        DiscreteFamily::ShishaMond => {
            // The printed display is the operator shape with the roles of
            // the tuples swapped, so swap the box accordingly.
            let (m1, big_m1, m2, big_m2) = data.bounds.as_box()?;
            (
                OperatorFamily::ShishaMond,
                OperatorInstance {
                    a: diag_sq(&data.b),
                    b: diag_sq(&data.a),
                    map: state,
                    bounds: BoundsHypothesis::boxed(m2, big_m2, m1, big_m1),
                },
                DisplayMassage::Identity,
            )
        }
        DiscreteFamily::Gruss => (
            OperatorFamily::Gruss,
            OperatorInstance {
                a: diag_sq(&data.a),
                b: diag_sq(&data.b),
                map: state,
                bounds: data.bounds,
            },
            DisplayMassage::Identity,
        ),
        DiscreteFamily::Schweitzer => {
            let (m, big_m) = data.bounds.as_ratio()?;
            let n = data.len();
            let amp = 1.0 / (n as f64).sqrt();
            (
                OperatorFamily::Kantorovich,
                OperatorInstance {
                    a: diag_sq(&data.a),
                    b: MatrixC::identity(n),
                    map: MapSpec::VectorState {
                        x: vec![Complex64::new(amp, 0.0); n],
                    },
                    bounds: BoundsHypothesis::boxed(m, big_m, 1.0 / big_m, 1.0 / m),
                },
                DisplayMassage::SquareBoth,
            )
        }
        DiscreteFamily::Cassels => (
            OperatorFamily::Cassels,
            OperatorInstance {
                // Ratio regime m^2 A <= B <= M^2 A with A built from b.
                a: diag_sq(&data.b),
                b: diag_sq(&data.a),
                map: state,
                bounds: data.bounds,
            },
            DisplayMassage::SquareOverMean,
        ),
        DiscreteFamily::Klamkin => (
            OperatorFamily::Klamkin,
            OperatorInstance {
                a: diag_sq(&data.b),
                b: diag_sq(&data.a),
                map: state,
                bounds: data.bounds,
            },
            DisplayMassage::Klamkin,
        ),
        DiscreteFamily::GruebRheinboldt => (
            OperatorFamily::PolyaSzego,
            OperatorInstance {
                a: diag_sq(&data.a),
                b: diag_sq(&data.b),
                map: state,
                bounds: data.bounds,
            },
            DisplayMassage::SquareOverMean,
        ),
        DiscreteFamily::OimsClassical => {
            return Err(Error::NotApplicable(
                "the classical OIMS constant has no operator-family counterpart".into(),
            ))
        }
    };

    let op_report = eval_operator_family(op_family, &inst, cfg)?;
    let lhs_op = op_report.lhs.as_scalar()?.re;
    let rhs_op = op_report.rhs.as_scalar()?.re;

    let (lhs, rhs) = match massage {
        DisplayMassage::Identity => (lhs_op, rhs_op),
        DisplayMassage::SquareBoth => (lhs_op * lhs_op, rhs_op * rhs_op),
        DisplayMassage::SquareOverMean => {
            let g = phi_of_mean(&inst, cfg)?;
            guard_denominator(g)?;
            ((lhs_op / g).powi(2), (rhs_op / g).powi(2))
        }
        DisplayMassage::Klamkin => {
            let g = phi_of_mean(&inst, cfg)?;
            let phi_a = inst.map.apply(&inst.a)?.as_scalar()?.re;
            let phi_b = inst.map.apply(&inst.b)?.as_scalar()?.re;
            (lhs_op * g * phi_a, rhs_op * g * phi_b)
        }
    };

    build_scalar_report(family.into(), op_report.hypothesis_ok, lhs, rhs, cfg)
}

fn phi_of_mean(inst: &OperatorInstance, cfg: &ToleranceConfig) -> Result<f64> {
    Ok(inst
        .map
        .apply(&geometric_mean(&inst.a, &inst.b, cfg)?)?
        .as_scalar()?
        .re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::report::Verdict;

    fn cfg() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn sample(bounds: BoundsHypothesis) -> DiscreteData {
        DiscreteData::new(vec![1.0, 2.0], vec![2.0, 1.0], None, bounds).unwrap()
    }

    #[test]
    fn cassels_equality_witness() {
        let data = sample(BoundsHypothesis::ratio(0.5, 2.0));
        let r = eval_discrete_family(DiscreteFamily::Cassels, &data, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsAtEquality);
        assert!((r.lhs.as_scalar().unwrap().re - 25.0 / 16.0).abs() < 1e-14);
        assert!((r.rhs.as_scalar().unwrap().re - 25.0 / 16.0).abs() < 1e-14);
    }

    #[test]
    fn diaz_metcalf_equality_witness() {
        let data = sample(BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0));
        let r = eval_discrete_family(DiscreteFamily::DiazMetcalf, &data, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsAtEquality);
        assert!((r.lhs.as_scalar().unwrap().re - 10.0).abs() < 1e-12);
        assert!((r.rhs.as_scalar().unwrap().re - 10.0).abs() < 1e-12);
    }

    #[test]
    fn klamkin_strict_hold() {
        let data = sample(BoundsHypothesis::ratio(0.5, 2.0));
        let r = eval_discrete_family(DiscreteFamily::Klamkin, &data, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!((r.lhs.as_scalar().unwrap().re - 9.0).abs() < 1e-12);
        assert!((r.rhs.as_scalar().unwrap().re - 10.0).abs() < 1e-12);
    }

    #[test]
    fn schweitzer_equality_witness() {
        let data = DiscreteData::new(
            vec![1.0, 2.0],
            vec![1.0, 0.5],
            None,
            BoundsHypothesis::ratio(1.0, 2.0),
        )
        .unwrap();
        let r = eval_discrete_family(DiscreteFamily::Schweitzer, &data, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsAtEquality);
        assert!((r.lhs.as_scalar().unwrap().re - 25.0 / 16.0).abs() < 1e-14);
    }

    #[test]
    fn oims_classical_single_term() {
        let data = DiscreteData::new(
            vec![1.5],
            vec![1.5],
            None,
            BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0),
        )
        .unwrap();
        let r = eval_discrete_family(DiscreteFamily::OimsClassical, &data, &cfg()).unwrap();
        assert!(r.holds());
        assert!(r.lhs.as_scalar().unwrap().re.abs() < 1e-14);
    }

    #[test]
    fn operator_route_matches_direct_route_on_witness_data() {
        let cfg = cfg();
        for (family, bounds) in [
            (DiscreteFamily::Cassels, BoundsHypothesis::ratio(0.5, 2.0)),
            (DiscreteFamily::Klamkin, BoundsHypothesis::ratio(0.5, 2.0)),
            (
                DiscreteFamily::DiazMetcalf,
                BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0),
            ),
            (
                DiscreteFamily::PolyaSzego,
                BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0),
            ),
            (
                DiscreteFamily::ShishaMond,
                BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0),
            ),
            (
                DiscreteFamily::Gruss,
                BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0),
            ),
            (
                DiscreteFamily::GruebRheinboldt,
                BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0),
            ),
        ] {
            let data = sample(bounds);
            let direct = eval_discrete_family(family, &data, &cfg).unwrap();
            let routed = scalar_via_operator(family, &data, &cfg).unwrap();
            let dl = direct.lhs.as_scalar().unwrap().re;
            let rl = routed.lhs.as_scalar().unwrap().re;
            let dr = direct.rhs.as_scalar().unwrap().re;
            let rr = routed.rhs.as_scalar().unwrap().re;
            assert!(
                (dl - rl).abs() <= 1e-12 * dl.abs().max(1.0),
                "{family:?} lhs: {dl} vs {rl}"
            );
            assert!(
                (dr - rr).abs() <= 1e-12 * dr.abs().max(1.0),
                "{family:?} rhs: {dr} vs {rr}"
            );
            assert_eq!(direct.verdict, routed.verdict, "{family:?}");
        }
    }

    #[test]
    fn schweitzer_via_kantorovich_route() {
        let data = DiscreteData::new(
            vec![1.0, 2.0],
            vec![1.0, 0.5],
            None,
            BoundsHypothesis::ratio(1.0, 2.0),
        )
        .unwrap();
        let direct = eval_discrete_family(DiscreteFamily::Schweitzer, &data, &cfg()).unwrap();
        let routed = scalar_via_operator(DiscreteFamily::Schweitzer, &data, &cfg()).unwrap();
        let dl = direct.lhs.as_scalar().unwrap().re;
        let rl = routed.lhs.as_scalar().unwrap().re;
        assert!((dl - rl).abs() < 1e-12);
        assert_eq!(direct.verdict, routed.verdict);
    }

    #[test]
    fn printed_klamkin_is_scale_sensitive() {
        // Certified data with m M = 0.01: the printed display (a-side sum on
        // the right) is genuinely violated while the operator family holds.
        let data = DiscreteData::new(
            vec![0.1, 0.2],
            vec![2.0, 1.0],
            None,
            BoundsHypothesis::ratio(0.05, 0.2),
        )
        .unwrap();
        let direct = eval_discrete_family(DiscreteFamily::Klamkin, &data, &cfg()).unwrap();
        assert!(direct.hypothesis_ok);
        assert_eq!(direct.verdict, Verdict::Violated);

        // The operator-level Klamkin family on the same data still holds.
        let inst = OperatorInstance {
            a: MatrixC::from_real_diag(&[4.0, 1.0]),
            b: MatrixC::from_real_diag(&[0.01, 0.04]),
            map: MapSpec::StateMixture {
                vectors: vec![vec![Complex64::new(1.0, 0.0); 2]],
            },
            bounds: BoundsHypothesis::ratio(0.05, 0.2),
        };
        let op = eval_operator_family(OperatorFamily::Klamkin, &inst, &cfg()).unwrap();
        assert!(op.holds());
    }

    #[test]
    fn oims_classical_has_no_operator_route() {
        let data = DiscreteData::new(
            vec![1.5],
            vec![1.5],
            None,
            BoundsHypothesis::boxed(1.0, 2.0, 1.0, 2.0),
        )
        .unwrap();
        assert!(matches!(
            scalar_via_operator(DiscreteFamily::OimsClassical, &data, &cfg()),
            Err(Error::NotApplicable(_))
        ));
    }
}
