//! Covariance- and product-type inequalities for unital maps and left
//! multipliers.

use num_complex::Complex64;

use crate::catalog::report::{build_report, Family, InequalityReport};
use crate::error::{Error, Result};
use crate::linalg::matrix::MatrixC;
use crate::linalg::spectral::{abs_op, is_psd, op_norm, re_part, real_scalar_matrix};
use crate::maps::{check_left_multiplier, check_unital, MapSpec};
use crate::tol::ToleranceConfig;

// Sampling budget for the left-multiplier precondition inside evaluations;
// fixed so evaluation stays deterministic.
const LM_TRIALS: usize = 32;
const LM_SEED: u64 = 0x4c4d;

/// A general operator with complex disk corners `lower`, `upper` claimed to
/// satisfy `Re((upper - A)*(A - lower)) >= 0`.
#[derive(Debug, Clone)]
pub struct GrussLemmaInstance {
    pub map: MapSpec,
    pub a: MatrixC,
    pub upper: Complex64,
    pub lower: Complex64,
}

/// Inputs for the Cauchy-Schwarz-type comparison of a left multiplier.
#[derive(Debug, Clone)]
pub struct CsPairInstance {
    pub map: MapSpec,
    pub a: MatrixC,
    pub b: MatrixC,
}

/// Two operators with disk conditions, driving the product bound on
/// `|Phi(A*B) - Phi(A)* Phi(B)|`.
#[derive(Debug, Clone)]
pub struct GrussInstance {
    pub map: MapSpec,
    pub a: MatrixC,
    pub b: MatrixC,
    pub a_lower: Complex64,
    pub a_upper: Complex64,
    pub b_lower: Complex64,
    pub b_upper: Complex64,
}

/// The disk condition `Re((upper - A)*(A - lower)) >= 0`, equivalently
/// `|A - (upper+lower)/2|^2 <= |upper-lower|^2/4`.
pub fn disk_condition_holds(
    a: &MatrixC,
    lower: Complex64,
    upper: Complex64,
    cfg: &ToleranceConfig,
) -> Result<bool> {
    let n = a.dim();
    let left = MatrixC::scalar(n, upper).sub(a)?.adjoint();
    let right = a.sub(&MatrixC::scalar(n, lower))?;
    let witness = re_part(&left.matmul(&right)?);
    Ok(is_psd(&witness, cfg)?.holds)
}

/// `Phi(|A|^2) - |Phi(A)|^2 <= |upper - lower|^2 / 4` for a unital map and
/// an operator satisfying the disk condition.
pub fn eval_gruss_lemma(
    map: &MapSpec,
    a: &MatrixC,
    upper: Complex64,
    lower: Complex64,
    cfg: &ToleranceConfig,
) -> Result<InequalityReport> {
    map.validate()?;
    let hyp = check_unital(map, cfg)? && disk_condition_holds(a, lower, upper, cfg)?;
    let lhs = variance_term(map, a)?;
    let rhs = real_scalar_matrix(map.output_dim(), (upper - lower).norm_sqr() / 4.0);
    build_report(Family::GrussLemma, hyp, lhs, rhs, cfg)
}

/// `Phi(|A|^2) - |Phi(A)|^2`, Hermitized.
fn variance_term(map: &MapSpec, a: &MatrixC) -> Result<MatrixC> {
    let phi_a = map.apply(a)?;
    let phi_abs_sq = map.apply(&a.adjoint().matmul(a)?.hermitize())?;
    Ok(phi_abs_sq
        .sub(&phi_a.adjoint().matmul(&phi_a)?)?
        .hermitize())
}

/// `Phi(A*B) - Phi(A)* Phi(B)`, the module "inner product" defect.
fn covariance_term(map: &MapSpec, a: &MatrixC, b: &MatrixC) -> Result<MatrixC> {
    let phi_ab = map.apply(&a.adjoint().matmul(b)?)?;
    let phi_a = map.apply(a)?;
    let phi_b = map.apply(b)?;
    phi_ab.sub(&phi_a.adjoint().matmul(&phi_b)?)
}

fn require_left_multiplier(map: &MapSpec, cfg: &ToleranceConfig) -> Result<()> {
    if !check_left_multiplier(map, LM_TRIALS, LM_SEED, cfg)? {
        return Err(Error::NotApplicable(
            "map is not a left multiplier over its declared subalgebra".into(),
        ));
    }
    Ok(())
}

/// Cauchy-Schwarz comparison for a unital left multiplier:
///
/// `|Phi(A*B) - Phi(A)* Phi(B)|^2
///   <= ||Phi(|A|^2) - |Phi(A)|^2|| (Phi(|B|^2) - |Phi(B)|^2)`.
pub fn eval_cs_left_multiplier(
    map: &MapSpec,
    a: &MatrixC,
    b: &MatrixC,
    cfg: &ToleranceConfig,
) -> Result<InequalityReport> {
    map.validate()?;
    require_left_multiplier(map, cfg)?;
    let hyp = check_unital(map, cfg)?;

    let d = covariance_term(map, a, b)?;
    let lhs = d.adjoint().matmul(&d)?.hermitize();
    let var_a_norm = op_norm(&variance_term(map, a)?, cfg)?;
    let rhs = variance_term(map, b)?.scale(var_a_norm);
    build_report(Family::CsLeftMultiplier, hyp, lhs, rhs, cfg)
}

/// Product bound for a unital left multiplier under two disk conditions:
///
/// `|Phi(A*B) - Phi(A)* Phi(B)| <= |M1 - m1| |M2 - m2| / 4`.
pub fn eval_gruss_product(inst: &GrussInstance, cfg: &ToleranceConfig) -> Result<InequalityReport> {
    inst.map.validate()?;
    require_left_multiplier(&inst.map, cfg)?;
    let hyp = check_unital(&inst.map, cfg)?
        && disk_condition_holds(&inst.a, inst.a_lower, inst.a_upper, cfg)?
        && disk_condition_holds(&inst.b, inst.b_lower, inst.b_upper, cfg)?;

    let lhs = abs_op(&covariance_term(&inst.map, &inst.a, &inst.b)?, cfg)?;
    let rhs = real_scalar_matrix(
        inst.map.output_dim(),
        (inst.a_upper - inst.a_lower).norm() * (inst.b_upper - inst.b_lower).norm() / 4.0,
    );
    build_report(Family::GrussProduct, hyp, lhs, rhs, cfg)
}
