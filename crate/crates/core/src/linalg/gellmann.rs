//! Generalized Gell-Mann generators of SU(d) and the Bloch-vector
//! parametrization `ρ = I/d + ½ Σ x_i G_i` with `x_i = Tr(ρ G_i)`.
//!
//! Generator order: the `(d²-d)/2` symmetric off-diagonal generators, then the
//! `(d²-d)/2` antisymmetric ones, then the `d-1` diagonal ones. Off-diagonal
//! pairs `(j, k)`, `j < k`, run lexicographically. For `d = 2` this gives
//! `(σx, σy, σz)`.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{QcohError, Result};

#[derive(Debug, Clone)]
pub struct GeneratorBasis {
    dim: usize,
    generators: Vec<ComplexMatrix>,
}

/// Real coordinates `x_i = Tr(ρ G_i)`, `d² - 1` of them.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochVector {
    pub dim: usize,
    pub coords: Vec<f64>,
}

/// Lexicographic `(j, k)` pairs with `j < k`.
pub fn off_diagonal_pairs(d: usize) -> Vec<(usize, usize)> {
    (0..d)
        .flat_map(|j| (j + 1..d).map(move |k| (j, k)))
        .collect()
}

impl GeneratorBasis {
    pub fn new(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(QcohError::DimensionMismatch { left: d, right: 2 });
        }
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let pairs = off_diagonal_pairs(d);
        let mut generators = Vec::with_capacity(d * d - 1);
        for &(j, k) in &pairs {
            let mut g = ComplexMatrix::zeros(d, d);
            g[(j, k)] = one;
            g[(k, j)] = one;
            generators.push(g);
        }
        for &(j, k) in &pairs {
            let mut g = ComplexMatrix::zeros(d, d);
            g[(j, k)] = -i;
            g[(k, j)] = i;
            generators.push(g);
        }
        for l in 1..d {
            let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
            let mut diag = vec![0.0; d];
            diag[..l].iter_mut().for_each(|x| *x = norm);
            diag[l] = -(l as f64) * norm;
            generators.push(ComplexMatrix::from_real_diagonal(&diag));
        }
        Ok(Self { dim: d, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ComplexMatrix] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Coordinates of `rho`. Computed entrywise from the generator structure
    /// rather than by dense trace products.
    pub fn coords(&self, rho: &ComplexMatrix) -> Result<BlochVector> {
        let d = self.dim;
        if rho.rows() != d || rho.cols() != d {
            return Err(QcohError::DimensionMismatch {
                left: d,
                right: rho.rows(),
            });
        }
        let pairs = off_diagonal_pairs(d);
        let mut coords = Vec::with_capacity(d * d - 1);
        // Tr(ρ S_jk) = ρ_kj + ρ_jk = 2 Re ρ_jk
        coords.extend(pairs.iter().map(|&(j, k)| 2.0 * rho[(j, k)].re));
        // Tr(ρ A_jk) = -i ρ_kj + i ρ_jk = -2 Im ρ_jk
        coords.extend(pairs.iter().map(|&(j, k)| -2.0 * rho[(j, k)].im));
        for g in &self.generators[2 * pairs.len()..] {
            coords.push((0..d).map(|m| rho[(m, m)].re * g[(m, m)].re).sum());
        }
        Ok(BlochVector { dim: d, coords })
    }

    /// `I/d + ½ Σ x_i G_i`.
    pub fn reconstruct(&self, x: &BlochVector) -> Result<ComplexMatrix> {
        if x.dim != self.dim || x.coords.len() != self.generators.len() {
            return Err(QcohError::DimensionMismatch {
                left: self.generators.len(),
                right: x.coords.len(),
            });
        }
        let mut rho = ComplexMatrix::identity(self.dim).scale_real(1.0 / self.dim as f64);
        for (g, &xi) in self.generators.iter().zip(&x.coords) {
            if xi != 0.0 {
                rho = &rho + &g.scale_real(0.5 * xi);
            }
        }
        Ok(rho)
    }
}

impl BlochVector {
    pub fn norm_sqr(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum()
    }

    /// l1 coherence from the coordinates: `Σ_i sqrt(x_i² + x_{i+m}²)`, `m = (d²-d)/2`.
    pub fn l1_coherence(&self) -> f64 {
        let m = self.dim * (self.dim - 1) / 2;
        (0..m)
            .map(|i| self.coords[i].hypot(self.coords[i + m]))
            .sum()
    }

    /// Normalized linear-entropy mixedness: `1 - d/(2(d-1)) Σ x_i²`.
    pub fn linear_mixedness(&self) -> f64 {
        let d = self.dim as f64;
        1.0 - d / (2.0 * (d - 1.0)) * self.norm_sqr()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_generators_are_paulis() {
        let b = GeneratorBasis::new(2).unwrap();
        let g = b.generators();
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let sx = ComplexMatrix::from_rows(&[vec![c(0., 0.), c(1., 0.)], vec![c(1., 0.), c(0., 0.)]]).unwrap();
        let sy = ComplexMatrix::from_rows(&[vec![c(0., 0.), c(0., -1.)], vec![c(0., 1.), c(0., 0.)]]).unwrap();
        let sz = ComplexMatrix::from_real_diagonal(&[1.0, -1.0]);
        assert_eq!(g[0], sx);
        assert_eq!(g[1], sy);
        assert!(g[2].max_abs_diff(&sz) < 1e-15);
    }

    #[test]
    fn generator_algebra_d4() {
        let b = GeneratorBasis::new(4).unwrap();
        assert_eq!(b.len(), 15);
        for (i, gi) in b.generators().iter().enumerate() {
            assert_eq!(gi.hermitian_deviation(), 0.0);
            assert!(gi.trace().norm() < 1e-12);
            for (j, gj) in b.generators().iter().enumerate() {
                let t = gi.trace_product(gj).unwrap();
                let want = if i == j { 2.0 } else { 0.0 };
                assert!((t - Complex64::new(want, 0.0)).norm() < 1e-12, "({i},{j})");
            }
        }
    }

    #[test]
    fn qutrit_layout() {
        // x1..x3 real off-diagonal parts, x4..x6 imaginary, x7/x8 diagonal
        let b = GeneratorBasis::new(3).unwrap();
        let x: Vec<f64> = vec![0.11, -0.07, 0.05, 0.03, 0.09, -0.02, 0.04, -0.06];
        let rho = b.reconstruct(&BlochVector { dim: 3, coords: x.clone() }).unwrap();
        let h = |a: f64, bb: f64| Complex64::new(a / 2.0, -bb / 2.0);
        assert!((rho[(0, 1)] - h(x[0], x[3])).norm() < 1e-15);
        assert!((rho[(0, 2)] - h(x[1], x[4])).norm() < 1e-15);
        assert!((rho[(1, 2)] - h(x[2], x[5])).norm() < 1e-15);
        assert!((rho[(1, 0)] - h(x[0], x[3]).conj()).norm() < 1e-15);
        let s3 = 3f64.sqrt();
        let d0 = 1.0 / 3.0 + (x[6] + x[7] / s3) / 2.0;
        let d1 = 1.0 / 3.0 + (-x[6] + x[7] / s3) / 2.0;
        let d2 = 1.0 / 3.0 - x[7] / s3;
        assert!((rho[(0, 0)].re - d0).abs() < 1e-15);
        assert!((rho[(1, 1)].re - d1).abs() < 1e-15);
        assert!((rho[(2, 2)].re - d2).abs() < 1e-15);
        let back = b.coords(&rho).unwrap();
        for (u, v) in back.coords.iter().zip(&x) {
            assert!((u - v).abs() < 1e-14);
        }
    }

    #[test]
    fn coords_agree_with_trace_products() {
        let b = GeneratorBasis::new(3).unwrap();
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let rho = ComplexMatrix::from_rows(&[
            vec![c(0.5, 0.), c(0.1, 0.2), c(0.0, -0.1)],
            vec![c(0.1, -0.2), c(0.3, 0.), c(0.05, 0.0)],
            vec![c(0.0, 0.1), c(0.05, 0.0), c(0.2, 0.)],
        ])
        .unwrap();
        let x = b.coords(&rho).unwrap();
        for (g, xi) in b.generators().iter().zip(&x.coords) {
            assert!((rho.trace_product(g).unwrap().re - xi).abs() < 1e-15);
        }
    }

    #[test]
    fn maximally_mixed_has_zero_vector() {
        let b = GeneratorBasis::new(5).unwrap();
        let rho = ComplexMatrix::identity(5).scale_real(0.2);
        assert!(b.coords(&rho).unwrap().coords.iter().all(|x| x.abs() < 1e-15));
    }

    #[test]
    fn rejects_dimension_one() {
        assert!(GeneratorBasis::new(1).is_err());
    }
}
