//! Dense complex linear algebra for density matrices.

mod eig;
mod gellmann;
mod matrix;
mod subsystem;

pub use eig::{
    hermitian_eig, hermitian_eigenvalues, matrix_fn_psd, xlogx, Spectrum, HERMITIAN_TOL,
    JACOBI_TOL, PSD_TOL,
};
pub use gellmann::{off_diagonal_pairs, BlochVector, GeneratorBasis};
pub use matrix::{kron, kron_vec, ComplexMatrix};
pub use subsystem::{partial_trace, reduce_pure};

use crate::error::{QcohError, Result};

/// Uhlmann fidelity `(Tr sqrt(sqrt(σ) ρ sqrt(σ)))²`.
pub fn fidelity(rho: &ComplexMatrix, sigma: &ComplexMatrix) -> Result<f64> {
    if rho.rows() != sigma.rows() || rho.cols() != sigma.cols() {
        return Err(QcohError::DimensionMismatch {
            left: rho.rows(),
            right: sigma.rows(),
        });
    }
    let sqrt_sigma = matrix_fn_psd(sigma, f64::sqrt)?;
    let inner = &(&sqrt_sigma * rho) * &sqrt_sigma;
    let root = sqrt_trace(&inner.hermitian_part())?;
    Ok(root * root)
}

/// `Tr sqrt(A)` for PSD `A`, with slightly negative eigenvalues clipped.
pub fn sqrt_trace(a: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(a)?
        .into_iter()
        .map(|l| l.max(0.0).sqrt())
        .sum())
}
