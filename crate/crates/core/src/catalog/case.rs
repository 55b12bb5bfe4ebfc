//! Uniform dispatch over every evaluable case, used by sweep drivers.

use crate::catalog::discrete::{eval_discrete_family, DiscreteData, DiscreteFamily};
use crate::catalog::gruss::{
    eval_cs_left_multiplier, eval_gruss_lemma, eval_gruss_product, CsPairInstance,
    GrussInstance, GrussLemmaInstance,
};
use crate::catalog::hilbert::{eval_hilbert_family, HilbertFamily, HilbertInstance};
use crate::catalog::integral::{eval_integral_family, IntegralFamily, QuadratureData};
use crate::catalog::oims::{eval_oims, eval_variance_bound, OimsInstance, OimsVariant};
use crate::catalog::operator::{eval_operator_family, OperatorFamily, OperatorInstance};
use crate::catalog::report::{Family, InequalityReport};
use crate::error::Result;
use crate::linalg::matrix::MatrixC;
use crate::tol::ToleranceConfig;

/// The variance-bound inputs: a base instance providing the normalized map
/// plus the bounded operator under test.
#[derive(Debug, Clone)]
pub struct VarianceInstance {
    pub base: OimsInstance,
    pub x: MatrixC,
    pub lo: f64,
    pub hi: f64,
}

/// One evaluable case: a family together with its payload.
#[derive(Debug, Clone)]
pub enum Case {
    Operator(OperatorFamily, OperatorInstance),
    Discrete(DiscreteFamily, DiscreteData),
    Integral(IntegralFamily, QuadratureData),
    Hilbert(HilbertFamily, HilbertInstance),
    GrussLemma(GrussLemmaInstance),
    CsLeftMultiplier(CsPairInstance),
    GrussProduct(GrussInstance),
    Variance(VarianceInstance),
    Oims(OimsVariant, OimsInstance),
}

impl Case {
    pub fn family(&self) -> Family {
        match self {
            Case::Operator(f, _) => (*f).into(),
            Case::Discrete(f, _) => (*f).into(),
            Case::Integral(f, _) => (*f).into(),
            Case::Hilbert(f, _) => (*f).into(),
            Case::GrussLemma(_) => Family::GrussLemma,
            Case::CsLeftMultiplier(_) => Family::CsLeftMultiplier,
            Case::GrussProduct(_) => Family::GrussProduct,
            Case::Variance(_) => Family::VarianceBound,
            Case::Oims(v, _) => (*v).into(),
        }
    }
}

/// Evaluates a case into a report; hypothesis failures are recorded in the
/// report, hard errors only signal structurally unusable payloads.
pub fn evaluate(case: &Case, cfg: &ToleranceConfig) -> Result<InequalityReport> {
    match case {
        Case::Operator(family, inst) => eval_operator_family(*family, inst, cfg),
        Case::Discrete(family, data) => eval_discrete_family(*family, data, cfg),
        Case::Integral(family, data) => eval_integral_family(*family, data, cfg),
        Case::Hilbert(family, inst) => eval_hilbert_family(*family, inst, cfg),
        Case::GrussLemma(inst) => eval_gruss_lemma(&inst.map, &inst.a, inst.upper, inst.lower, cfg),
        Case::CsLeftMultiplier(inst) => eval_cs_left_multiplier(&inst.map, &inst.a, &inst.b, cfg),
        Case::GrussProduct(inst) => eval_gruss_product(inst, cfg),
        Case::Variance(inst) => eval_variance_bound(&inst.base, &inst.x, inst.lo, inst.hi, cfg),
        Case::Oims(variant, inst) => eval_oims(*variant, inst, cfg),
    }
}
