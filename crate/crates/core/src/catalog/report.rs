//! Inequality reports: verdicts, slack metrics, family identifiers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::matrix::MatrixC;
use crate::linalg::spectral::{lambda_min, op_norm};
use crate::tol::ToleranceConfig;

/// Relative width of the equality band: a gap within
/// `1e-9 * max(1, scale)` of zero counts as an equality witness.
const EQUALITY_TOL: f64 = 1e-9;

/// Every evaluable inequality family, across the operator, discrete,
/// integral, Hilbert-space, product and variance-type cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    // Operator families under a ratio or box hypothesis.
    Dm1,
    CasselsOp,
    KlamkinOp,
    KantorovichOp,
    Dm2,
    PolyaSzegoOp,
    ShishaMondOp,
    GrussOp,
    // Discrete scalar corollaries.
    DiazMetcalf,
    PolyaSzego,
    ShishaMond,
    GrussDiscrete,
    Schweitzer,
    CasselsWeighted,
    KlamkinWeighted,
    GruebRheinboldt,
    OimsClassical,
    // Integral corollaries over finite quadrature data.
    CasselsIntegral,
    KlamkinIntegral,
    // Hilbert-space corollaries.
    HilbertDiazMetcalf,
    HilbertPolyaSzego,
    // Covariance- and product-type families.
    GrussLemma,
    CsLeftMultiplier,
    GrussProduct,
    // Variance bound and the three OIMS extensions.
    VarianceBound,
    OimsPhi1,
    OimsPhi2,
    OimsVector,
}

impl Family {
    pub const ALL: [Family; 28] = [
        Family::Dm1,
        Family::CasselsOp,
        Family::KlamkinOp,
        Family::KantorovichOp,
        Family::Dm2,
        Family::PolyaSzegoOp,
        Family::ShishaMondOp,
        Family::GrussOp,
        Family::DiazMetcalf,
        Family::PolyaSzego,
        Family::ShishaMond,
        Family::GrussDiscrete,
        Family::Schweitzer,
        Family::CasselsWeighted,
        Family::KlamkinWeighted,
        Family::GruebRheinboldt,
        Family::OimsClassical,
        Family::CasselsIntegral,
        Family::KlamkinIntegral,
        Family::HilbertDiazMetcalf,
        Family::HilbertPolyaSzego,
        Family::GrussLemma,
        Family::CsLeftMultiplier,
        Family::GrussProduct,
        Family::VarianceBound,
        Family::OimsPhi1,
        Family::OimsPhi2,
        Family::OimsVector,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Family::Dm1 => "DM1",
            Family::CasselsOp => "CasselsOp",
            Family::KlamkinOp => "KlamkinOp",
            Family::KantorovichOp => "KantorovichOp",
            Family::Dm2 => "DM2",
            Family::PolyaSzegoOp => "PolyaSzegoOp",
            Family::ShishaMondOp => "ShishaMondOp",
            Family::GrussOp => "GrussOp",
            Family::DiazMetcalf => "DiazMetcalf",
            Family::PolyaSzego => "PolyaSzego",
            Family::ShishaMond => "ShishaMond",
            Family::GrussDiscrete => "GrussDiscrete",
            Family::Schweitzer => "Schweitzer",
            Family::CasselsWeighted => "CasselsWeighted",
            Family::KlamkinWeighted => "KlamkinWeighted",
            Family::GruebRheinboldt => "GruebRheinboldt",
            Family::OimsClassical => "OimsClassical",
            Family::CasselsIntegral => "CasselsIntegral",
            Family::KlamkinIntegral => "KlamkinIntegral",
            Family::HilbertDiazMetcalf => "HilbertDiazMetcalf",
            Family::HilbertPolyaSzego => "HilbertPolyaSzego",
            Family::GrussLemma => "GrussLemma",
            Family::CsLeftMultiplier => "CsLeftMultiplier",
            Family::GrussProduct => "GrussProduct",
            Family::VarianceBound => "VarianceBound",
            Family::OimsPhi1 => "OimsPhi1",
            Family::OimsPhi2 => "OimsPhi2",
            Family::OimsVector => "OimsVector",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown family `{s}`")))
    }
}

/// Final classification of an evaluated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    HoldsAtEquality,
    Violated,
    HypothesisUnmet,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "Holds",
            Verdict::HoldsAtEquality => "HoldsAtEquality",
            Verdict::Violated => "Violated",
            Verdict::HypothesisUnmet => "HypothesisUnmet",
        };
        f.write_str(s)
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Holds" => Ok(Verdict::Holds),
            "HoldsAtEquality" => Ok(Verdict::HoldsAtEquality),
            "Violated" => Ok(Verdict::Violated),
            "HypothesisUnmet" => Ok(Verdict::HypothesisUnmet),
            _ => Err(Error::InvalidInput(format!("unknown verdict `{s}`"))),
        }
    }
}

/// One evaluated inequality instance.
///
/// `gap_min` is the smallest eigenvalue of `rhs - lhs`; zero at equality
/// witnesses, negative only for violations or uncertified instances.
#[derive(Debug, Clone)]
pub struct InequalityReport {
    pub family: Family,
    pub hypothesis_ok: bool,
    pub lhs: MatrixC,
    pub rhs: MatrixC,
    pub gap_min: f64,
    /// `gap_min / max(1, ||rhs||)`.
    pub rel_slack: f64,
    pub verdict: Verdict,
}

impl InequalityReport {
    pub fn holds(&self) -> bool {
        matches!(self.verdict, Verdict::Holds | Verdict::HoldsAtEquality)
    }
}

/// Assembles a report from the two sides of an inequality.
///
/// The verdict order matters: a hypothesis failure dominates; gaps inside
/// the equality band count as equality witnesses; a gap below the negative
/// tolerance band is a violation.
pub(crate) fn build_report(
    family: Family,
    hypothesis_ok: bool,
    lhs: MatrixC,
    rhs: MatrixC,
    cfg: &ToleranceConfig,
) -> Result<InequalityReport> {
    let lhs = lhs.hermitize();
    let rhs = rhs.hermitize();
    let diff = rhs.sub(&lhs)?;
    let gap_min = lambda_min(&diff, cfg)?;
    let lhs_norm = op_norm(&lhs, cfg)?;
    let rhs_norm = op_norm(&rhs, cfg)?;
    let scale = lhs_norm.max(rhs_norm);
    let rel_slack = gap_min / rhs_norm.max(1.0);
    let equality_band = EQUALITY_TOL * scale.max(1.0);

    let verdict = if !hypothesis_ok {
        Verdict::HypothesisUnmet
    } else if gap_min.abs() <= equality_band {
        Verdict::HoldsAtEquality
    } else if gap_min < -cfg.order_band(scale) {
        Verdict::Violated
    } else {
        Verdict::Holds
    };

    Ok(InequalityReport {
        family,
        hypothesis_ok,
        lhs,
        rhs,
        gap_min,
        rel_slack,
        verdict,
    })
}

/// Scalar-sided report helper for the discrete and integral families.
pub(crate) fn build_scalar_report(
    family: Family,
    hypothesis_ok: bool,
    lhs: f64,
    rhs: f64,
    cfg: &ToleranceConfig,
) -> Result<InequalityReport> {
    build_report(
        family,
        hypothesis_ok,
        MatrixC::from_real_scalar(lhs),
        MatrixC::from_real_scalar(rhs),
        cfg,
    )
}
