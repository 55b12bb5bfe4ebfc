//! Numerical workbench for operator and scalar reverse Cauchy-Schwarz
//! inequalities over finite-dimensional complex matrix algebras.
//!
//! The crate is organized around a small pipeline:
//!
//! - [`linalg`]: dense complex matrices, a Hermitian Jacobi eigensolver and
//!   the spectral toolbox (square roots, inverses, Loewner-order checks).
//! - [`means`]: the geometric operator mean `A # B` and its algebraic laws.
//! - [`maps`]: a closed taxonomy of positive linear maps (vector states,
//!   compressions, pinchings, partial traces, ...) with structural checkers.
//! - [`catalog`]: every inequality family as an executable case producing an
//!   [`catalog::InequalityReport`] with hypothesis verdict and slack metrics.
//! - [`generators`]: constrained random instances for each hypothesis class
//!   and a hill-climbing search for near-equality witnesses.

pub mod catalog;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod maps;
pub mod means;
pub mod tol;

pub use error::{Error, Result};
pub use linalg::eigen::{hermitian_eigen, EigenSystem};
pub use linalg::matrix::MatrixC;
pub use linalg::spectral::{abs_op, inv_pd, is_psd, loewner_leq, op_norm, re_part, sqrt_psd};
pub use tol::{OrderVerdict, ToleranceConfig};
