//! Cyclic Jacobi eigensolver for Hermitian matrices and spectral functions
//! built on top of it.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{QcohError, Result};

/// Inputs further than this from Hermitian are rejected.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Eigenvalues down to `-PSD_TOL` are clipped to zero; below that the input is not PSD.
pub const PSD_TOL: f64 = 1e-10;
/// Sweeps stop once the off-diagonal Frobenius mass drops below this.
pub const JACOBI_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 64;

/// Eigenvalues sorted in descending order and the matching unitary of eigenvectors (as columns).
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl Spectrum {
    /// `V diag(f(λ)) V†`.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let fl: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let v = &self.eigenvectors;
        ComplexMatrix::from_fn(n, n, |i, j| {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..n {
                if fl[k] != 0.0 {
                    s += v[(i, k)] * v[(j, k)].conj() * fl[k];
                }
            }
            s
        })
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply(|l| l)
    }
}

fn check_input(a: &ComplexMatrix) -> Result<()> {
    if !a.is_square() {
        return Err(QcohError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let dev = a.hermitian_deviation();
    if dev > HERMITIAN_TOL {
        return Err(QcohError::NonHermitian { deviation: dev });
    }
    Ok(())
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn hermitian_eig(a: &ComplexMatrix) -> Result<Spectrum> {
    check_input(a)?;
    let mut work = a.hermitian_part();
    let mut v = ComplexMatrix::identity(a.rows());
    jacobi(&mut work, Some(&mut v))?;
    let mut order: Vec<usize> = (0..a.rows()).collect();
    let diag = work.real_diagonal();
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));
    let eigenvalues = order.iter().map(|&k| diag[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(a.rows(), a.rows(), |i, j| v[(i, order[j])]);
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigenvalues only, descending. Skips eigenvector accumulation.
pub fn hermitian_eigenvalues(a: &ComplexMatrix) -> Result<Vec<f64>> {
    check_input(a)?;
    let mut work = a.hermitian_part();
    jacobi(&mut work, None)?;
    let mut diag = work.real_diagonal();
    diag.sort_by(|x, y| y.total_cmp(x));
    Ok(diag)
}

/// Applies `f` to a PSD Hermitian matrix through its spectrum. Eigenvalues in
/// `[-PSD_TOL, 0)` are clipped to zero before `f` is applied.
pub fn matrix_fn_psd(a: &ComplexMatrix, f: impl Fn(f64) -> f64) -> Result<ComplexMatrix> {
    let spec = hermitian_eig(a)?;
    let min = spec.eigenvalues.last().copied().unwrap_or(0.0);
    if min < -PSD_TOL {
        return Err(QcohError::NotPsd { min_eigenvalue: min });
    }
    Ok(spec.apply(|l| f(l.max(0.0))))
}

/// `x ln x` with the `0 ln 0 = 0` convention.
pub fn xlogx(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

fn jacobi(a: &mut ComplexMatrix, mut v: Option<&mut ComplexMatrix>) -> Result<()> {
    let n = a.rows();
    if n < 2 {
        return Ok(());
    }
    let mut off = a.off_diagonal_norm_sqr().sqrt();
    for _sweep in 0..MAX_SWEEPS {
        if off <= JACOBI_TOL {
            return Ok(());
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(a, v.as_deref_mut(), p, q);
            }
        }
        off = a.off_diagonal_norm_sqr().sqrt();
    }
    if off <= JACOBI_TOL {
        Ok(())
    } else {
        Err(QcohError::EigenNotConverged {
            sweeps: MAX_SWEEPS,
            residual: off,
        })
    }
}

/// Annihilates `a[p][q]` with `A <- U† A U`, `U = diag(1, e^{-iφ}) · R(θ)` on the (p, q) plane.
fn rotate(a: &mut ComplexMatrix, v: Option<&mut ComplexMatrix>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b < 1e-300 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Skip entries that are already negligible relative to the diagonal.
    if b < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    let phase = apq / b;
    let theta = (aqq - app) / (2.0 * b);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let ph = phase.conj();
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = ph * (-s);
    let u_qq = ph * c;

    let n = a.rows();
    // A <- A U (columns p, q)
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u_pp + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * u_qq;
    }
    // A <- U† A (rows p, q)
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
        a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * u_pp + vkq * u_qp;
            v[(k, q)] = vkp * u_pq + vkq * u_qq;
        }
    }
}
