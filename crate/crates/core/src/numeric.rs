//! Dense floating-point oracles for the eigenvalue and determinant laws.

use nalgebra::DMatrix;
use num::Complex;

use crate::linalg::Matrix;

fn to_dense(m: &Matrix<f64>) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |r, c| *m.get(r, c))
}

pub fn eigenvalues(m: &Matrix<f64>) -> Vec<Complex<f64>> {
    to_dense(m).complex_eigenvalues().iter().copied().collect()
}

pub fn determinant(m: &Matrix<f64>) -> f64 {
    to_dense(m).determinant()
}

/// Squared eigenvalue magnitudes, ascending.
pub fn sorted_magnitudes_sq(values: &[Complex<f64>]) -> Vec<f64> {
    let mut out: Vec<f64> = values.iter().map(|z| z.norm_sqr()).collect();
    out.sort_by(f64::total_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_has_unit_eigenvalues() {
        let m = Matrix::from_fn(2, 2, |r, c| [[0.0, -1.0], [1.0, 0.0]][r][c]);
        let ev = eigenvalues(&m);
        assert_eq!(sorted_magnitudes_sq(&ev), vec![1.0, 1.0]);
        assert!(ev.iter().all(|z| z.re.abs() < 1e-12));
        assert!((determinant(&m) - 1.0).abs() < 1e-12);
    }
}
