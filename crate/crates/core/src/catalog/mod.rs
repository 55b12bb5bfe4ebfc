//! Every inequality in the collection as an executable case: hypothesis
//! validation, side construction, Loewner or scalar comparison, slack
//! metrics.

pub mod case;
pub mod discrete;
pub mod gruss;
pub mod hilbert;
pub mod hypothesis;
pub mod integral;
pub mod oims;
pub mod operator;
pub mod report;

pub use case::{evaluate, Case, VarianceInstance};
pub use discrete::{eval_discrete_family, scalar_via_operator, DiscreteData, DiscreteFamily};
pub use gruss::{
    disk_condition_holds, eval_cs_left_multiplier, eval_gruss_lemma, eval_gruss_product,
    CsPairInstance, GrussInstance, GrussLemmaInstance,
};
pub use hilbert::{eval_hilbert_corollary, eval_hilbert_family, HilbertFamily, HilbertInstance};
pub use hypothesis::BoundsHypothesis;
pub use integral::{eval_integral_family, IntegralFamily, QuadratureData};
pub use oims::{eval_oims, eval_variance_bound, OimsInstance, OimsVariant};
pub use operator::{eval_operator_family, tighten_bounds, OperatorFamily, OperatorInstance};
pub use report::{Family, InequalityReport, Verdict};
