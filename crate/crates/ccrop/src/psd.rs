//! Positive semidefiniteness of Hermitian Gram matrices.

use nalgebra::DMatrix;
use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spectrum {
    pub min: f64,
    pub max: f64,
}

pub fn hermitian_spectrum(g: &[Vec<Complex64>]) -> Spectrum {
    let n = g.len();
    if n == 0 {
        return Spectrum { min: 0.0, max: 0.0 };
    }
    let m = DMatrix::from_fn(n, n, |i, j| g[i][j]);
    let eig = m.symmetric_eigenvalues();
    Spectrum {
        min: eig.min(),
        max: eig.max(),
    }
}

/// Smallest eigenvalue at least `-tol · max(1, λ_max)`.
pub fn is_psd(s: Spectrum, tol: f64) -> bool {
    s.min >= -tol * s.max.max(1.0)
}

pub fn max_hermitian_defect(g: &[Vec<Complex64>]) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in g.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            worst = worst.max((v - g[j][i].conj()).norm());
        }
    }
    worst
}
