//! Geometric coherence `C_g(ρ) = 1 - max_{σ incoherent} F(ρ, σ)`.
//!
//! For `σ = diag(q)` the root fidelity is `f(q) = Tr sqrt(D ρ D)`,
//! `D = diag(sqrt(q))`. Writing `ρ = G G†` with `G` the `d × k` factor from
//! the nonzero spectrum, the nonzero eigenvalues of `D ρ D` are those of the
//! `k × k` matrix `G† diag(q) G`. That matrix is linear in `q`, so `f` stays
//! defined for the slightly negative `q` that finite differences touch at the
//! simplex boundary. `f` is concave on the simplex and is maximized by
//! projected gradient ascent with a backtracking step.

use num_complex::Complex64;

use crate::error::{QcohError, Result};
use crate::linalg::{hermitian_eig, hermitian_eigenvalues, ComplexMatrix};
use crate::states::DensityMatrix;

/// Purity above `1 - PURE_TOL` selects the closed form `1 - max_i ρ_ii`.
const PURE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexOptions {
    /// Central finite-difference step.
    pub fd_step: f64,
    /// Stop once one accepted step improves the root fidelity by less than this.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            fd_step: 1e-6,
            tolerance: 1e-10,
            max_iterations: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeometricSolution {
    /// `max_q F(ρ, diag(q))`, never below the diagonal, uniform or vertex candidates.
    pub max_fidelity: f64,
    /// Maximizing weights.
    pub weights: Vec<f64>,
    pub iterations: usize,
}

impl GeometricSolution {
    pub fn coherence(&self) -> f64 {
        1.0 - self.max_fidelity
    }
}

/// Geometric coherence. Pure inputs use `1 - max_i |c_i|²`; mixed inputs run
/// [`max_incoherent_fidelity`] with default options.
pub fn c_g(rho: &DensityMatrix) -> Result<f64> {
    if rho.purity() >= 1.0 - PURE_TOL {
        let best = rho.populations().into_iter().fold(0.0, f64::max);
        return Ok(1.0 - best);
    }
    Ok(max_incoherent_fidelity(rho, &SimplexOptions::default())?.coherence())
}

/// Geometric coherence through the optimizer even for pure inputs.
pub fn c_g_optimized(rho: &DensityMatrix) -> Result<f64> {
    Ok(max_incoherent_fidelity(rho, &SimplexOptions::default())?.coherence())
}

/// `Tr sqrt(D ρ D)` with `D = diag(sqrt(q))`, from a dense eigensolve.
pub fn root_fidelity_to_diagonal(rho: &DensityMatrix, q: &[f64]) -> Result<f64> {
    let d = rho.dim();
    if q.len() != d {
        return Err(QcohError::DimensionMismatch { left: d, right: q.len() });
    }
    let s: Vec<f64> = q.iter().map(|x| x.max(0.0).sqrt()).collect();
    let m = rho.matrix();
    let dd = ComplexMatrix::from_fn(d, d, |i, j| m[(i, j)] * (s[i] * s[j]));
    Ok(hermitian_eigenvalues(&dd)?
        .into_iter()
        .map(|l| l.max(0.0).sqrt())
        .sum())
}

/// Low-rank evaluator of `f(q) = Tr sqrt(G† diag(q) G)`.
struct Factor {
    /// Rows of `G`: `rows[i]` is the i-th row (length k).
    rows: Vec<Vec<Complex64>>,
    k: usize,
}

impl Factor {
    fn new(rho: &DensityMatrix) -> Result<Self> {
        let spec = hermitian_eig(rho.matrix())?;
        let top = spec.eigenvalues.first().copied().unwrap_or(0.0).max(0.0);
        let cols: Vec<usize> = spec
            .eigenvalues
            .iter()
            .enumerate()
            .filter(|(_, &l)| l > top * 1e-15)
            .map(|(c, _)| c)
            .collect();
        let d = rho.dim();
        let rows = (0..d)
            .map(|i| {
                cols.iter()
                    .map(|&c| spec.eigenvectors[(i, c)] * spec.eigenvalues[c].sqrt())
                    .collect()
            })
            .collect();
        Ok(Self { rows, k: cols.len() })
    }

    /// `G† diag(q) G`.
    fn gram(&self, q: &[f64]) -> ComplexMatrix {
        let k = self.k;
        let mut m = ComplexMatrix::zeros(k, k);
        for (row, &w) in self.rows.iter().zip(q) {
            if w == 0.0 {
                continue;
            }
            self.add_outer(&mut m, row, w);
        }
        m
    }

    fn add_outer(&self, m: &mut ComplexMatrix, row: &[Complex64], w: f64) {
        for a in 0..self.k {
            let ca = row[a].conj() * w;
            for b in 0..self.k {
                m[(a, b)] += ca * row[b];
            }
        }
    }

    fn root_trace(m: &ComplexMatrix) -> Result<f64> {
        Ok(hermitian_eigenvalues(m)?
            .into_iter()
            .map(|l| l.max(0.0).sqrt())
            .sum())
    }

    fn value(&self, q: &[f64]) -> Result<f64> {
        Self::root_trace(&self.gram(q))
    }

    fn gradient(&self, q: &[f64], h: f64) -> Result<Vec<f64>> {
        let base = self.gram(q);
        self.rows
            .iter()
            .map(|row| {
                let mut plus = base.clone();
                self.add_outer(&mut plus, row, h);
                let mut minus = base.clone();
                self.add_outer(&mut minus, row, -h);
                Ok((Self::root_trace(&plus)? - Self::root_trace(&minus)?) / (2.0 * h))
            })
            .collect()
    }
}

/// Euclidean projection onto the probability simplex (sort-and-threshold).
pub(crate) fn project_to_simplex(v: &[f64]) -> Vec<f64> {
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut cumsum = 0.0;
    let mut theta = 0.0;
    for (i, &ui) in u.iter().enumerate() {
        cumsum += ui;
        let t = (cumsum - 1.0) / (i + 1) as f64;
        if ui - t > 0.0 {
            theta = t;
        }
    }
    v.iter().map(|&x| (x - theta).max(0.0)).collect()
}

/// Maximizes `F(ρ, diag(q))` over the probability simplex.
///
/// Starts from `q = diag(ρ)` (or from the uniform point or a vertex when one
/// of those is already better). The returned fidelity is re-evaluated with a
/// dense eigensolve and is never below the fidelity at `diag(ρ)`, at the
/// uniform point or at any vertex.
pub fn max_incoherent_fidelity(rho: &DensityMatrix, opts: &SimplexOptions) -> Result<GeometricSolution> {
    let d = rho.dim();
    let pops: Vec<f64> = project_to_simplex(&rho.populations());
    let uniform = vec![1.0 / d as f64; d];
    let (best_vertex, vertex_fid) = rho
        .populations()
        .into_iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (i, p)| if p > acc.1 { (i, p) } else { acc });
    let mut vertex = vec![0.0; d];
    vertex[best_vertex] = 1.0;

    // exact reference values for the fixed candidates
    let candidates = [
        (root_fidelity_to_diagonal(rho, &pops)?.powi(2), pops.clone()),
        (root_fidelity_to_diagonal(rho, &uniform)?.powi(2), uniform.clone()),
        (vertex_fid, vertex.clone()),
    ];

    let factor = Factor::new(rho)?;
    let mut q = candidates
        .iter()
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .map(|c| c.1.clone())
        .unwrap_or(pops);
    let mut fq = factor.value(&q)?;
    let mut step: f64 = 1.0;
    let mut iterations = 0;
    let mut converged = false;
    let mut last_improvement = f64::INFINITY;

    while iterations < opts.max_iterations {
        iterations += 1;
        let g = factor.gradient(&q, opts.fd_step)?;
        step = (step * 2.0).min(1e6);
        let mut accepted = None;
        while step > 1e-16 {
            let trial: Vec<f64> = q.iter().zip(&g).map(|(x, gi)| x + step * gi).collect();
            let trial = project_to_simplex(&trial);
            let ft = factor.value(&trial)?;
            if ft > fq {
                accepted = Some((trial, ft));
                break;
            }
            step *= 0.5;
        }
        match accepted {
            None => {
                converged = true;
                break;
            }
            Some((trial, ft)) => {
                last_improvement = ft - fq;
                q = trial;
                fq = ft;
                if last_improvement < opts.tolerance {
                    converged = true;
                    break;
                }
            }
        }
    }
    if !converged {
        return Err(QcohError::OptimizerNotConverged {
            iterations,
            last_improvement,
        });
    }

    let exact = root_fidelity_to_diagonal(rho, &q)?.powi(2);
    let mut best = GeometricSolution {
        max_fidelity: exact,
        weights: q,
        iterations,
    };
    for (f, w) in candidates {
        if f > best.max_fidelity {
            best.max_fidelity = f;
            best.weights = w;
        }
    }
    Ok(best)
}
