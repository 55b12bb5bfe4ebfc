//! Crate-internal random sampling helpers.
//!
//! Every consumer derives a dedicated ChaCha substream keyed by
//! `(seed, index)`, so sweeps are reproducible independently of evaluation
//! order or thread count.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::matrix::MatrixC;

/// Deterministic substream for draw `index` of a run keyed by `seed`.
pub(crate) fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Standard normal via Box-Muller.
pub(crate) fn standard_normal(rng: &mut impl Rng) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Standard complex normal (unit total variance).
pub(crate) fn complex_gaussian(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(standard_normal(rng), standard_normal(rng)) * std::f64::consts::FRAC_1_SQRT_2
}

/// Square matrix of independent complex Gaussians.
pub(crate) fn ginibre(dim: usize, rng: &mut impl Rng) -> MatrixC {
    MatrixC::from_fn(dim, |_, _| complex_gaussian(rng))
}

/// Random unitary from orthonormalized complex Gaussian columns.
///
/// Modified Gram-Schmidt applied twice; Haar-adequate at desk scale.
pub(crate) fn random_unitary(dim: usize, rng: &mut impl Rng) -> MatrixC {
    let g = ginibre(dim, rng);
    let mut cols: Vec<Vec<Complex64>> = (0..dim)
        .map(|j| (0..dim).map(|i| g.get(i, j)).collect())
        .collect();
    for _pass in 0..2 {
        for j in 0..dim {
            for k in 0..j {
                let proj = crate::linalg::matrix::vec_inner(&cols[j], &cols[k]);
                for i in 0..dim {
                    let correction = proj * cols[k][i];
                    cols[j][i] -= correction;
                }
            }
            let norm = crate::linalg::matrix::vec_norm(&cols[j]);
            if norm < 1e-12 {
                // Degenerate draw: fall back to a basis vector.
                for i in 0..dim {
                    cols[j][i] = Complex64::new(0.0, 0.0);
                }
                cols[j][j % dim] = Complex64::new(1.0, 0.0);
            } else {
                for i in 0..dim {
                    cols[j][i] /= norm;
                }
            }
        }
    }
    MatrixC::from_fn(dim, |i, j| cols[j][i])
}

/// Random PSD matrix `G* G`, lightly normalized.
pub(crate) fn random_psd(dim: usize, rng: &mut impl Rng) -> MatrixC {
    let g = ginibre(dim, rng);
    g.adjoint()
        .matmul(&g)
        .expect("square product")
        .scale(1.0 / dim as f64)
        .hermitize()
}

/// Random Hermitian matrix with entries of unit scale.
pub(crate) fn random_hermitian(dim: usize, rng: &mut impl Rng) -> MatrixC {
    ginibre(dim, rng).hermitize()
}

/// Complex Gaussian vector.
pub(crate) fn gaussian_vector(dim: usize, rng: &mut impl Rng) -> Vec<Complex64> {
    (0..dim).map(|_| complex_gaussian(rng)).collect()
}
