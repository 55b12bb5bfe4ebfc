//! A closed taxonomy of positive linear maps with structural checkers.
//!
//! Every map the catalog instantiates is one of these variants; all of them
//! are completely positive by construction. Scalar-valued maps return 1x1
//! matrices so the whole pipeline flows through the same Loewner-order
//! comparisons.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::matrix::{vec_inner, vec_norm, MatrixC};
use crate::linalg::spectral::{is_psd, loewner_leq};
use crate::rngutil;
use crate::tol::{OrderVerdict, ToleranceConfig};

const UNIT_NORM_TOL: f64 = 1e-12;
const ISOMETRY_TOL: f64 = 1e-10;

/// A positive linear map between matrix algebras.
#[derive(Debug, Clone, PartialEq)]
pub enum MapSpec {
    /// `T -> <T x, x>` for a unit vector `x`; output is 1x1.
    VectorState { x: Vec<Complex64> },
    /// `T -> sum_i <T xi_i, xi_i>`; the vectors need not be normalized,
    /// so the map may be non-unital (the classical weighted-sum states).
    StateMixture { vectors: Vec<Vec<Complex64>> },
    /// `T -> sum_i w_i T_ii` with positive weights; unital iff the weights
    /// sum to one.
    WeightedDiagState { weights: Vec<f64> },
    /// `T -> tr(T)/n`.
    NormalizedTrace { dim: usize },
    /// `T -> V* T V` for an isometry `V` (stored as its columns).
    Compression { columns: Vec<Vec<Complex64>> },
    /// Zeroes all off-diagonal blocks of the given partition.
    Pinching { blocks: Vec<usize> },
    /// Normalized partial trace over the left tensor factor of
    /// `M_n (x) M_k`; the canonical left multiplier.
    PartialTraceLeft { left_dim: usize, right_dim: usize },
    Identity { dim: usize },
}

/// How the output algebra embeds back into the input algebra, for the
/// left-multiplier check `Phi(X iota(Y)) = Phi(X) Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubalgebraEmbedding {
    /// Scalars: `iota(y) = y I`.
    Scalar,
    /// Output equals input: `iota = id`.
    Full,
    /// Range of the isometry: `iota(Y) = V Y V*`.
    CompressionRange,
    /// Block-diagonal matrices of the pinching partition.
    BlockDiagonal,
    /// Right tensor factor: `iota(Y) = I (x) Y`.
    RightFactor,
}

impl MapSpec {
    pub fn input_dim(&self) -> usize {
        match self {
            MapSpec::VectorState { x } => x.len(),
            MapSpec::StateMixture { vectors } => vectors.first().map_or(0, |v| v.len()),
            MapSpec::WeightedDiagState { weights } => weights.len(),
            MapSpec::NormalizedTrace { dim } | MapSpec::Identity { dim } => *dim,
            MapSpec::Compression { columns } => columns.first().map_or(0, |c| c.len()),
            MapSpec::Pinching { blocks } => blocks.iter().sum(),
            MapSpec::PartialTraceLeft {
                left_dim,
                right_dim,
            } => left_dim * right_dim,
        }
    }

    pub fn output_dim(&self) -> usize {
        match self {
            MapSpec::VectorState { .. }
            | MapSpec::StateMixture { .. }
            | MapSpec::WeightedDiagState { .. }
            | MapSpec::NormalizedTrace { .. } => 1,
            MapSpec::Compression { columns } => columns.len(),
            MapSpec::Pinching { blocks } => blocks.iter().sum(),
            MapSpec::PartialTraceLeft { right_dim, .. } => *right_dim,
            MapSpec::Identity { dim } => *dim,
        }
    }

    /// Structural validation: unit state vectors, isometry columns,
    /// positive weights, nonempty partitions.
    pub fn validate(&self) -> Result<()> {
        match self {
            MapSpec::VectorState { x } => {
                if x.is_empty() {
                    return Err(Error::InvalidInput("vector state needs dim >= 1".into()));
                }
                let norm = vec_norm(x);
                if (norm - 1.0).abs() > UNIT_NORM_TOL {
                    return Err(Error::InvalidInput(format!(
                        "vector state must have unit norm (got {norm})"
                    )));
                }
            }
            MapSpec::StateMixture { vectors } => {
                if vectors.is_empty() || vectors[0].is_empty() {
                    return Err(Error::InvalidInput("state mixture needs vectors".into()));
                }
                let dim = vectors[0].len();
                if vectors.iter().any(|v| v.len() != dim) {
                    return Err(Error::InvalidInput(
                        "state mixture vectors must share a dimension".into(),
                    ));
                }
            }
            MapSpec::WeightedDiagState { weights } => {
                if weights.is_empty() || weights.iter().any(|w| !w.is_finite() || *w <= 0.0) {
                    return Err(Error::InvalidInput(
                        "diagonal state weights must be positive".into(),
                    ));
                }
            }
            MapSpec::NormalizedTrace { dim } | MapSpec::Identity { dim } => {
                if *dim == 0 {
                    return Err(Error::InvalidInput("map dimension must be >= 1".into()));
                }
            }
            MapSpec::Compression { columns } => {
                if columns.is_empty() || columns[0].is_empty() {
                    return Err(Error::InvalidInput("compression needs columns".into()));
                }
                let n = columns[0].len();
                let k = columns.len();
                if k > n || columns.iter().any(|c| c.len() != n) {
                    return Err(Error::InvalidInput(
                        "compression columns must be k <= n vectors of equal length".into(),
                    ));
                }
                // V*V = I_k within tolerance.
                for p in 0..k {
                    for q in 0..k {
                        let g = vec_inner(&columns[q], &columns[p]);
                        let target = if p == q { 1.0 } else { 0.0 };
                        if (g - Complex64::new(target, 0.0)).norm() > ISOMETRY_TOL {
                            return Err(Error::InvalidInput(
                                "compression columns are not an isometry".into(),
                            ));
                        }
                    }
                }
            }
            MapSpec::Pinching { blocks } => {
                if blocks.is_empty() || blocks.iter().any(|b| *b == 0) {
                    return Err(Error::InvalidInput(
                        "pinching blocks must be nonempty".into(),
                    ));
                }
            }
            MapSpec::PartialTraceLeft {
                left_dim,
                right_dim,
            } => {
                if *left_dim == 0 || *right_dim == 0 {
                    return Err(Error::InvalidInput(
                        "partial trace factors must be >= 1".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Applies the map to a square matrix of the input dimension.
    pub fn apply(&self, t: &MatrixC) -> Result<MatrixC> {
        if t.dim() != self.input_dim() {
            return Err(Error::DimMismatch {
                left: self.input_dim(),
                right: t.dim(),
            });
        }
        match self {
            MapSpec::VectorState { x } => {
                let tx = t.matvec(x)?;
                Ok(MatrixC::from_scalar(vec_inner(&tx, x)))
            }
            MapSpec::StateMixture { vectors } => {
                let mut sum = Complex64::new(0.0, 0.0);
                for xi in vectors {
                    let txi = t.matvec(xi)?;
                    sum += vec_inner(&txi, xi);
                }
                Ok(MatrixC::from_scalar(sum))
            }
            MapSpec::WeightedDiagState { weights } => {
                let sum = weights
                    .iter()
                    .enumerate()
                    .map(|(i, &w)| t.get(i, i) * w)
                    .sum();
                Ok(MatrixC::from_scalar(sum))
            }
            MapSpec::NormalizedTrace { dim } => {
                Ok(MatrixC::from_scalar(t.trace() / *dim as f64))
            }
            MapSpec::Compression { columns } => {
                let k = columns.len();
                let tv: Vec<Vec<Complex64>> = columns
                    .iter()
                    .map(|c| t.matvec(c))
                    .collect::<Result<_>>()?;
                Ok(MatrixC::from_fn(k, |p, q| vec_inner(&tv[q], &columns[p])))
            }
            MapSpec::Pinching { blocks } => {
                let n = t.dim();
                let block_of = block_index(blocks);
                Ok(MatrixC::from_fn(n, |i, j| {
                    if block_of[i] == block_of[j] {
                        t.get(i, j)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                }))
            }
            MapSpec::PartialTraceLeft {
                left_dim,
                right_dim,
            } => {
                let (n, k) = (*left_dim, *right_dim);
                Ok(MatrixC::from_fn(k, |j, jp| {
                    (0..n)
                        .map(|i| t.get(i * k + j, i * k + jp))
                        .sum::<Complex64>()
                        / n as f64
                }))
            }
            MapSpec::Identity { .. } => Ok(t.clone()),
        }
    }

    /// The declared embedding of the output algebra into the input algebra.
    pub fn embedding(&self) -> SubalgebraEmbedding {
        match self {
            MapSpec::VectorState { .. }
            | MapSpec::StateMixture { .. }
            | MapSpec::WeightedDiagState { .. }
            | MapSpec::NormalizedTrace { .. } => SubalgebraEmbedding::Scalar,
            MapSpec::Compression { .. } => SubalgebraEmbedding::CompressionRange,
            MapSpec::Pinching { .. } => SubalgebraEmbedding::BlockDiagonal,
            MapSpec::PartialTraceLeft { .. } => SubalgebraEmbedding::RightFactor,
            MapSpec::Identity { .. } => SubalgebraEmbedding::Full,
        }
    }

    /// Embeds an output-algebra element into the input algebra.
    pub fn embed(&self, y: &MatrixC) -> Result<MatrixC> {
        if y.dim() != self.output_dim() {
            return Err(Error::DimMismatch {
                left: self.output_dim(),
                right: y.dim(),
            });
        }
        match self.embedding() {
            SubalgebraEmbedding::Scalar => {
                Ok(MatrixC::scalar(self.input_dim(), y.as_scalar()?))
            }
            SubalgebraEmbedding::Full | SubalgebraEmbedding::BlockDiagonal => Ok(y.clone()),
            SubalgebraEmbedding::CompressionRange => {
                let columns = match self {
                    MapSpec::Compression { columns } => columns,
                    _ => unreachable!(),
                };
                let n = self.input_dim();
                let k = columns.len();
                Ok(MatrixC::from_fn(n, |i, j| {
                    let mut sum = Complex64::new(0.0, 0.0);
                    for p in 0..k {
                        for q in 0..k {
                            sum += columns[p][i] * y.get(p, q) * columns[q][j].conj();
                        }
                    }
                    sum
                }))
            }
            SubalgebraEmbedding::RightFactor => {
                let left_dim = match self {
                    MapSpec::PartialTraceLeft { left_dim, .. } => *left_dim,
                    _ => unreachable!(),
                };
                Ok(MatrixC::identity(left_dim).kron(y))
            }
        }
    }

    /// Random element of the target subalgebra (output-dimension form),
    /// used by the left-multiplier sampler.
    pub fn sample_target(&self, rng: &mut impl Rng) -> MatrixC {
        match self.embedding() {
            SubalgebraEmbedding::BlockDiagonal => {
                let blocks = match self {
                    MapSpec::Pinching { blocks } => blocks.clone(),
                    _ => unreachable!(),
                };
                let n = self.output_dim();
                let g = rngutil::ginibre(n, rng);
                let block_of = block_index(&blocks);
                MatrixC::from_fn(n, |i, j| {
                    if block_of[i] == block_of[j] {
                        g.get(i, j)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                })
            }
            _ => rngutil::ginibre(self.output_dim(), rng),
        }
    }
}

fn block_index(blocks: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(blocks.iter().sum());
    for (b, len) in blocks.iter().enumerate() {
        out.extend(std::iter::repeat(b).take(*len));
    }
    out
}

/// True iff `Phi(I) = I` within tolerance.
pub fn check_unital(phi: &MapSpec, cfg: &ToleranceConfig) -> Result<bool> {
    let image = phi.apply(&MatrixC::identity(phi.input_dim()))?;
    let residual = image
        .sub(&MatrixC::identity(phi.output_dim()))?
        .frob_norm();
    Ok(residual <= cfg.order_band(1.0))
}

/// Outcome of the sampled positivity check.
#[derive(Debug, Clone)]
pub struct PositivityCheck {
    pub passed: bool,
    /// A sampled PSD input whose image failed the PSD test, with the
    /// violating margin.
    pub counterexample: Option<(MatrixC, f64)>,
}

/// Sampled positivity of an arbitrary linear map given as a closure.
///
/// Draws random PSD inputs from per-trial `(seed, trial)` substreams and
/// checks each image for positivity. Returns the first counterexample
/// found, if any.
pub fn positivity_sampled_fn(
    apply: impl Fn(&MatrixC) -> Result<MatrixC>,
    input_dim: usize,
    trials: usize,
    seed: u64,
    cfg: &ToleranceConfig,
) -> Result<PositivityCheck> {
    for trial in 0..trials {
        let mut rng = rngutil::substream(seed, trial as u64);
        let p = rngutil::random_psd(input_dim, &mut rng);
        let image = apply(&p)?.hermitize();
        let verdict = is_psd(&image, cfg)?;
        if !verdict.holds {
            return Ok(PositivityCheck {
                passed: false,
                counterexample: Some((p, verdict.margin)),
            });
        }
    }
    Ok(PositivityCheck {
        passed: true,
        counterexample: None,
    })
}

/// Sampled positivity of a taxonomy map.
pub fn check_positive_sampled(
    phi: &MapSpec,
    trials: usize,
    seed: u64,
    cfg: &ToleranceConfig,
) -> Result<PositivityCheck> {
    positivity_sampled_fn(|p| phi.apply(p), phi.input_dim(), trials, seed, cfg)
}

/// Sampled left-multiplier identity `Phi(X iota(Y)) = Phi(X) Y` over the
/// map's declared subalgebra embedding.
pub fn check_left_multiplier(
    phi: &MapSpec,
    trials: usize,
    seed: u64,
    cfg: &ToleranceConfig,
) -> Result<bool> {
    Ok(left_multiplier_max_residual(phi, trials, seed)? <= cfg.order_band(1.0))
}

/// Largest relative residual of the left-multiplier identity over the
/// sampled pairs; exposed so acceptance checks can pin exact budgets.
pub fn left_multiplier_max_residual(phi: &MapSpec, trials: usize, seed: u64) -> Result<f64> {
    let mut worst = 0.0f64;
    for trial in 0..trials {
        let mut rng = rngutil::substream(seed, trial as u64);
        let x = rngutil::ginibre(phi.input_dim(), &mut rng);
        let y = phi.sample_target(&mut rng);
        let lhs = phi.apply(&x.matmul(&phi.embed(&y)?)?)?;
        let rhs = phi.apply(&x)?.matmul(&y)?;
        let scale = (x.frob_norm() * y.frob_norm()).max(1.0);
        worst = worst.max(lhs.sub(&rhs)?.frob_norm() / scale);
    }
    Ok(worst)
}

/// Verdict of the Schwarz-type comparison `|Phi(A)|^2 <= Phi(|A|^2)` for a
/// unital map.
pub fn check_schwarz(phi: &MapSpec, a: &MatrixC, cfg: &ToleranceConfig) -> Result<OrderVerdict> {
    if !check_unital(phi, cfg)? {
        return Err(Error::HypothesisUnmet(
            "Schwarz check requires a unital map".into(),
        ));
    }
    let phi_a = phi.apply(a)?;
    let lhs = phi_a.adjoint().matmul(&phi_a)?.hermitize();
    let rhs = phi.apply(&a.adjoint().matmul(a)?.hermitize())?.hermitize();
    loewner_leq(&lhs, &rhs, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn uniform_state(dim: usize) -> MapSpec {
        let amp = 1.0 / (dim as f64).sqrt();
        MapSpec::VectorState {
            x: vec![c(amp, 0.0); dim],
        }
    }

    #[test]
    fn apply_examples() {
        let t = MatrixC::from_real_diag(&[1.0, 4.0]);
        let id = MapSpec::Identity { dim: 2 };
        assert_eq!(id.apply(&t).unwrap(), t);

        let phi = uniform_state(2);
        let out = phi.apply(&t).unwrap().as_scalar().unwrap();
        assert!((out - c(2.5, 0.0)).norm() < 1e-14);

        // Partial trace of X (x) Y is (tr X / n) Y.
        let x = MatrixC::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        let y = MatrixC::from_real_rows(&[&[0.0, 1.0], &[1.0, 2.0]]).unwrap();
        let ptl = MapSpec::PartialTraceLeft {
            left_dim: 2,
            right_dim: 2,
        };
        let out = ptl.apply(&x.kron(&y)).unwrap();
        let expected = y.scale(x.trace().re / 2.0);
        assert!(out.sub(&expected).unwrap().frob_norm() < 1e-14);
    }

    #[test]
    fn apply_rejects_dim_mismatch() {
        let phi = uniform_state(2);
        assert!(matches!(
            phi.apply(&MatrixC::identity(3)),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn unital_examples() {
        assert!(check_unital(&uniform_state(3), &cfg()).unwrap());
        assert!(check_unital(
            &MapSpec::WeightedDiagState {
                weights: vec![0.3, 0.7]
            },
            &cfg()
        )
        .unwrap());
        assert!(!check_unital(
            &MapSpec::WeightedDiagState {
                weights: vec![1.0, 1.0]
            },
            &cfg()
        )
        .unwrap());

        let compression = MapSpec::Compression {
            columns: vec![vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]],
        };
        compression.validate().unwrap();
        assert!(check_unital(&compression, &cfg()).unwrap());
    }

    #[test]
    fn positivity_of_taxonomy_and_adversarial_map() {
        let trace = MapSpec::NormalizedTrace { dim: 3 };
        assert!(check_positive_sampled(&trace, 32, 7, &cfg()).unwrap().passed);

        let pinch = MapSpec::Pinching {
            blocks: vec![2, 1],
        };
        assert!(check_positive_sampled(&pinch, 32, 7, &cfg()).unwrap().passed);

        // Transpose-minus-trace is linear but not positive: it sends I to
        // (1 - n) I.
        let adversarial = |t: &MatrixC| -> Result<MatrixC> {
            let transpose = MatrixC::from_fn(t.dim(), |i, j| t.get(j, i));
            transpose.sub(&MatrixC::scalar(t.dim(), t.trace()))
        };
        let check = positivity_sampled_fn(adversarial, 2, 32, 7, &cfg()).unwrap();
        assert!(!check.passed);
        assert!(check.counterexample.is_some());
    }

    #[test]
    fn left_multiplier_examples() {
        let ptl = MapSpec::PartialTraceLeft {
            left_dim: 2,
            right_dim: 2,
        };
        assert!(check_left_multiplier(&ptl, 50, 11, &cfg()).unwrap());

        let id = MapSpec::Identity { dim: 3 };
        assert!(check_left_multiplier(&id, 20, 11, &cfg()).unwrap());

        let state = uniform_state(2);
        assert!(check_left_multiplier(&state, 20, 11, &cfg()).unwrap());

        let pinch = MapSpec::Pinching {
            blocks: vec![1, 2],
        };
        assert!(check_left_multiplier(&pinch, 50, 11, &cfg()).unwrap());

        let mut rng = rngutil::substream(3, 0);
        let compression = MapSpec::Compression {
            columns: {
                let u = rngutil::random_unitary(3, &mut rng);
                (0..2)
                    .map(|j| (0..3).map(|i| u.get(i, j)).collect())
                    .collect()
            },
        };
        compression.validate().unwrap();
        assert!(check_left_multiplier(&compression, 50, 11, &cfg()).unwrap());
    }

    #[test]
    fn schwarz_examples() {
        let id = MapSpec::Identity { dim: 2 };
        let a = rngutil::ginibre(2, &mut rngutil::substream(5, 0));
        let v = check_schwarz(&id, &a, &cfg()).unwrap();
        assert!(v.holds);
        assert!(v.margin.abs() < 1e-10);

        // Vector state on diag(0,1): Phi(|A|^2) = 1/2, |Phi(A)|^2 = 1/4.
        let phi = uniform_state(2);
        let a = MatrixC::from_real_diag(&[0.0, 1.0]);
        let v = check_schwarz(&phi, &a, &cfg()).unwrap();
        assert!(v.holds);
        assert!((v.margin - 0.25).abs() < 1e-12);

        // Normalized trace on a random normal input.
        let trace = MapSpec::NormalizedTrace { dim: 3 };
        let mut rng = rngutil::substream(5, 1);
        let u = rngutil::random_unitary(3, &mut rng);
        let d = MatrixC::from_fn(3, |i, j| {
            if i == j {
                rngutil::complex_gaussian(&mut rng)
            } else {
                c(0.0, 0.0)
            }
        });
        let normal = u.matmul(&d).unwrap().matmul(&u.adjoint()).unwrap();
        assert!(check_schwarz(&trace, &normal, &cfg()).unwrap().holds);
    }

    #[test]
    fn schwarz_requires_unital() {
        let phi = MapSpec::WeightedDiagState {
            weights: vec![1.0, 1.0],
        };
        assert!(matches!(
            check_schwarz(&phi, &MatrixC::identity(2), &cfg()),
            Err(Error::HypothesisUnmet(_))
        ));
    }

    #[test]
    fn validate_rejects_bad_specs() {
        let unnormalized = MapSpec::VectorState {
            x: vec![c(1.0, 0.0), c(1.0, 0.0)],
        };
        assert!(unnormalized.validate().is_err());

        let not_isometry = MapSpec::Compression {
            columns: vec![vec![c(1.0, 0.0), c(1.0, 0.0)]],
        };
        assert!(not_isometry.validate().is_err());

        let bad_weights = MapSpec::WeightedDiagState {
            weights: vec![0.5, -0.1],
        };
        assert!(bad_weights.validate().is_err());
    }
}
