//! Density matrices, pure states and the named state families used by the
//! experiments.

use std::fmt;
use std::fmt::Write as _;

use num_complex::Complex64;
use rand::RngCore;

use crate::error::{QcohError, Result};
use crate::linalg::{hermitian_eigenvalues, partial_trace, ComplexMatrix};
use crate::rng::{complex_gaussian, stream_rng};

/// Default tolerance for Hermiticity, unit trace, PSD and purity checks.
pub const STATE_TOL: f64 = 1e-10;
/// Tolerance for the rounded literal in [`two_qubit_violation_state`].
pub const ROUNDED_LITERAL_TOL: f64 = 5e-4;
/// Pure-state normalization tolerance.
pub const PURE_NORM_TOL: f64 = 1e-12;

/// Outcome of checking a candidate density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub tolerance: f64,
    pub dim: usize,
    pub square: bool,
    pub hermitian_deviation: f64,
    pub trace: f64,
    pub trace_error: f64,
    pub min_eigenvalue: f64,
    pub purity: f64,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }

    /// Human-readable list of failed checks, worst first. Written as negated
    /// comparisons so NaN entries fail every check.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn violations(&self) -> Vec<String> {
        if !self.square {
            return vec!["matrix is not square".into()];
        }
        let tol = self.tolerance;
        let mut v: Vec<(f64, String)> = Vec::new();
        if !(self.hermitian_deviation <= tol) {
            v.push((
                self.hermitian_deviation,
                format!("not Hermitian: max |A - A^dagger| = {:e}", self.hermitian_deviation),
            ));
        }
        if !(self.trace_error <= tol) {
            v.push((
                self.trace_error,
                format!("trace {} differs from 1 by {:e}", self.trace, self.trace_error),
            ));
        }
        if !(self.min_eigenvalue >= -tol) {
            v.push((
                -self.min_eigenvalue,
                format!("negative eigenvalue {:e}", self.min_eigenvalue),
            ));
        }
        if !(self.purity <= 1.0 + tol) {
            v.push((self.purity - 1.0, format!("purity {} exceeds 1", self.purity)));
        }
        v.sort_by(|a, b| b.0.total_cmp(&a.0));
        v.into_iter().map(|(_, s)| s).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.violations();
        if v.is_empty() {
            write!(f, "valid (tolerance {:e})", self.tolerance)
        } else {
            write!(f, "invalid: {}", v.join("; "))
        }
    }
}

/// Checks Hermiticity, unit trace, positivity and purity of `m` at tolerance `tol`.
pub fn validate(m: &ComplexMatrix, tol: f64) -> ValidationReport {
    if !m.is_square() {
        return ValidationReport {
            tolerance: tol,
            dim: m.rows(),
            square: false,
            hermitian_deviation: f64::INFINITY,
            trace: f64::NAN,
            trace_error: f64::INFINITY,
            min_eigenvalue: f64::NEG_INFINITY,
            purity: f64::INFINITY,
        };
    }
    let hermitian_deviation = m.hermitian_deviation();
    let h = m.hermitian_part();
    let trace = m.trace();
    let trace_error = (trace - Complex64::new(1.0, 0.0)).norm();
    let min_eigenvalue = hermitian_eigenvalues(&h)
        .ok()
        .and_then(|ev| ev.last().copied())
        .unwrap_or(f64::NEG_INFINITY);
    let purity = h.trace_product(&h).map(|z| z.re).unwrap_or(f64::INFINITY);
    ValidationReport {
        tolerance: tol,
        dim: m.rows(),
        square: true,
        hermitian_deviation,
        trace: trace.re,
        trace_error,
        min_eigenvalue,
        purity,
    }
}

/// Hermitian, unit-trace, positive semidefinite operator.
#[derive(Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl fmt::Debug for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensityMatrix({:?})", self.matrix)
    }
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(matrix, STATE_TOL)
    }

    /// Validates at `tol` and stores the Hermitian part.
    pub fn with_tolerance(matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        let report = validate(&matrix, tol);
        if !report.passed() {
            return Err(QcohError::InvalidState(report.violations().join("; ")));
        }
        Ok(Self {
            matrix: matrix.hermitian_part(),
        })
    }

    /// Skips validation. Callers guarantee the invariants (e.g. partial traces of valid states).
    pub(crate) fn from_trusted(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    pub fn maximally_mixed(d: usize) -> Self {
        Self::from_trusted(ComplexMatrix::identity(d).scale_real(1.0 / d as f64))
    }

    pub fn diagonal(probabilities: &[f64]) -> Result<Self> {
        Self::new(ComplexMatrix::from_real_diagonal(probabilities))
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of qubits when the dimension is a power of two.
    pub fn n_qubits(&self) -> Option<usize> {
        let d = self.dim();
        d.is_power_of_two().then(|| d.trailing_zeros() as usize)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.matrix[(i, j)]
    }

    /// Eigenvalues, descending, not clipped.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.matrix)
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.matrix.frobenius_norm().powi(2)
    }

    pub fn populations(&self) -> Vec<f64> {
        self.matrix.real_diagonal()
    }

    /// Diagonal part in the reference basis.
    pub fn dephased(&self) -> Self {
        Self::from_trusted(self.matrix.diagonal_part())
    }

    /// Largest off-diagonal magnitude.
    pub fn max_off_diagonal(&self) -> f64 {
        let d = self.dim();
        let mut m = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    m = m.max(self.matrix[(i, j)].norm());
                }
            }
        }
        m
    }

    /// Reduced state on the listed qubits (in the listed order).
    pub fn reduce(&self, keep: &[usize]) -> Result<Self> {
        Ok(Self::from_trusted(partial_trace(&self.matrix, keep)?))
    }

    /// `λ ρ + (1 - λ) σ`.
    pub fn mix(&self, other: &Self, lambda: f64) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(QcohError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self::from_trusted(
            &self.matrix.scale_real(lambda) + &other.matrix.scale_real(1.0 - lambda),
        ))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::from_trusted(crate::linalg::kron(&self.matrix, &other.matrix))
    }
}

impl From<&PureState> for DensityMatrix {
    fn from(psi: &PureState) -> Self {
        psi.to_density()
    }
}

/// Normalized state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if amplitudes.is_empty() || (norm - 1.0).abs() > PURE_NORM_TOL {
            return Err(QcohError::InvalidState(format!(
                "amplitudes have squared norm {norm}"
            )));
        }
        Ok(Self { amplitudes })
    }

    /// Rescales a nonzero vector to unit norm.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm.is_nan() || norm <= 0.0 || !norm.is_finite() {
            return Err(QcohError::InvalidState("zero or non-finite vector".into()));
        }
        Self::new(amplitudes.into_iter().map(|z| z / norm).collect())
    }

    pub fn basis(d: usize, index: usize) -> Result<Self> {
        if index >= d {
            return Err(QcohError::InvalidState(format!(
                "basis index {index} out of range for dimension {d}"
            )));
        }
        let mut a = vec![Complex64::new(0.0, 0.0); d];
        a[index] = Complex64::new(1.0, 0.0);
        Self::new(a)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn n_qubits(&self) -> Option<usize> {
        let d = self.dim();
        d.is_power_of_two().then(|| d.trailing_zeros() as usize)
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|z| z.norm_sqr()).collect()
    }

    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix::from_trusted(ComplexMatrix::outer(&self.amplitudes, &self.amplitudes))
    }

    /// Amplitudes with qubits `a` and `b` exchanged.
    pub fn swap_qubits(&self, a: usize, b: usize) -> Result<Self> {
        let n = self
            .n_qubits()
            .ok_or_else(|| QcohError::BadSubsystem("not a qubit register".into()))?;
        if a >= n || b >= n {
            return Err(QcohError::BadSubsystem(format!("qubit out of range for {n} qubits")));
        }
        let (ba, bb) = (n - 1 - a, n - 1 - b);
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim()];
        for (i, &z) in self.amplitudes.iter().enumerate() {
            let xa = (i >> ba) & 1;
            let xb = (i >> bb) & 1;
            let j = (i & !(1 << ba) & !(1 << bb)) | (xa << bb) | (xb << ba);
            out[j] = z;
        }
        Ok(Self { amplitudes: out })
    }
}

/// `(1/√d) Σ_i |i⟩`.
pub fn maximally_coherent(d: usize) -> Result<PureState> {
    if d == 0 {
        return Err(QcohError::InvalidState("dimension must be positive".into()));
    }
    let a = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
    PureState::normalized(vec![a; d])
}

/// Density matrix of [`maximally_coherent`] with every entry exactly `1/d`.
pub fn maximally_coherent_density(d: usize) -> Result<DensityMatrix> {
    if d == 0 {
        return Err(QcohError::InvalidState("dimension must be positive".into()));
    }
    let v = Complex64::new(1.0 / d as f64, 0.0);
    Ok(DensityMatrix::from_trusted(ComplexMatrix::from_fn(d, d, |_, _| v)))
}

/// Binomial coefficient as f64 (exact for the sizes used here).
pub fn binomial(n: usize, r: usize) -> f64 {
    if r > n {
        return 0.0;
    }
    let r = r.min(n - r);
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Dicke state: equal superposition of all `n`-bit strings with `r` ones.
pub fn dicke(n: usize, r: usize) -> Result<PureState> {
    if n == 0 || r > n {
        return Err(QcohError::BadExcitation { n, r });
    }
    if n > 20 {
        return Err(QcohError::InvalidState(format!("{n} qubits is too many for a dense vector")));
    }
    let amp = Complex64::new(1.0 / binomial(n, r).sqrt(), 0.0);
    let amplitudes = (0..1usize << n)
        .map(|i| {
            if i.count_ones() as usize == r {
                amp
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    PureState::normalized(amplitudes)
}

/// `α|0…0⟩ + β|1…1⟩` on `n` qubits.
pub fn gghz(n: usize, alpha: Complex64, beta: Complex64) -> Result<PureState> {
    if n == 0 || n > 20 {
        return Err(QcohError::InvalidState(format!("unsupported qubit count {n}")));
    }
    let norm = alpha.norm_sqr() + beta.norm_sqr();
    if (norm - 1.0).abs() > PURE_NORM_TOL {
        return Err(QcohError::BadAmplitudes { norm });
    }
    let mut a = vec![Complex64::new(0.0, 0.0); 1 << n];
    a[0] += alpha;
    a[(1 << n) - 1] += beta;
    PureState::new(a)
}

/// X state `p |gGHZ⟩⟨gGHZ| + (1 - p) I/d` with `d = 2^n`.
pub fn gghz_x_state(n: usize, alpha: Complex64, beta: Complex64, p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(QcohError::BadMixingWeight(p));
    }
    let psi = gghz(n, alpha, beta)?;
    let d = 1usize << n;
    let white = ComplexMatrix::identity(d).scale_real((1.0 - p) / d as f64);
    let m = &ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()).scale_real(p) + &white;
    DensityMatrix::new(m)
}

/// Two-qubit rank-2 state given to four decimals; it violates
/// `C_r/ln d + M_l <= 1`. Validated at [`ROUNDED_LITERAL_TOL`] because the
/// rounding leaves eigenvalues of order -1e-4.
pub fn two_qubit_violation_state() -> DensityMatrix {
    let c = Complex64::new;
    let rows = vec![
        vec![c(0.2501, 0.0), c(0.0490, -0.0090), c(-0.1392, -0.1148), c(-0.2141, -0.0515)],
        vec![c(0.0490, 0.0090), c(0.2064, 0.0), c(0.1588, -0.0438), c(0.0137, 0.0650)],
        vec![c(-0.1392, 0.1148), c(0.1588, 0.0438), c(0.3001, 0.0), c(0.1858, 0.0115)],
        vec![c(-0.2141, 0.0515), c(0.0137, -0.0650), c(0.1858, -0.0115), c(0.2434, 0.0)],
    ];
    let m = ComplexMatrix::from_rows(&rows).expect("4x4 literal");
    DensityMatrix::with_tolerance(m, ROUNDED_LITERAL_TOL).expect("literal state is valid at the rounding tolerance")
}

/// Parameters for a seeded rank-`rank` sample on `n_qubits` qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomStateSpec {
    pub n_qubits: usize,
    pub rank: usize,
    pub seed: u64,
}

impl RandomStateSpec {
    pub fn new(n_qubits: usize, rank: usize, seed: u64) -> Result<Self> {
        let spec = Self { n_qubits, rank, seed };
        spec.check()?;
        Ok(spec)
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    fn check(&self) -> Result<()> {
        if self.n_qubits == 0 || self.n_qubits > 10 {
            return Err(QcohError::BadSpec(format!("n_qubits {} outside 1..=10", self.n_qubits)));
        }
        if self.rank == 0 || self.rank > self.dim() {
            return Err(QcohError::BadSpec(format!(
                "rank {} outside 1..={}",
                self.rank,
                self.dim()
            )));
        }
        Ok(())
    }
}

/// Induced-measure sample of rank `spec.rank`: `G G† / Tr(G G†)` with `G` a
/// `d × rank` matrix of i.i.d. standard complex Gaussians (equivalently the
/// marginal of a Haar-random pure state on `C^d ⊗ C^rank`). Uses stream 0 of `spec.seed`.
pub fn random_rank_r(spec: &RandomStateSpec) -> Result<DensityMatrix> {
    spec.check()?;
    let mut rng = stream_rng(spec.seed, 0);
    random_induced(spec.dim(), spec.rank, &mut rng)
}

/// Induced-measure sample in arbitrary dimension `d` from a caller-supplied generator.
pub fn random_induced<R: RngCore + ?Sized>(d: usize, rank: usize, rng: &mut R) -> Result<DensityMatrix> {
    if d == 0 || rank == 0 || rank > d {
        return Err(QcohError::BadSpec(format!("rank {rank} invalid for dimension {d}")));
    }
    let g = ginibre(d, rank, rng);
    let mut m = ComplexMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let z: Complex64 = g.row(i).iter().zip(g.row(j)).map(|(a, b)| a * b.conj()).sum();
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    let tr = m.trace().re;
    Ok(DensityMatrix::from_trusted(m.scale_real(1.0 / tr)))
}

/// Haar-random pure state in dimension `d`.
pub fn random_pure<R: RngCore + ?Sized>(d: usize, rng: &mut R) -> Result<PureState> {
    let v: Vec<Complex64> = (0..d).map(|_| complex_gaussian(rng)).collect();
    PureState::normalized(v)
}

/// `rows × cols` matrix of standard complex Gaussians, filled row by row.
pub fn ginibre<R: RngCore + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Reads the plain-text state format: dimension `d` on the first line, then
/// `d²` lines `re im` in row-major order. Blank lines and `#` comments are skipped.
pub fn parse_state_text(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let d: usize = lines
        .next()
        .ok_or_else(|| QcohError::Parse("empty state file".into()))?
        .parse()
        .map_err(|e| QcohError::Parse(format!("bad dimension line: {e}")))?;
    if d == 0 {
        return Err(QcohError::Parse("dimension must be positive".into()));
    }
    let mut data = Vec::with_capacity(d * d);
    for (k, line) in lines.enumerate() {
        let mut parts = line.split_whitespace();
        let mut next = |what: &str| -> Result<f64> {
            parts
                .next()
                .ok_or_else(|| QcohError::Parse(format!("entry {k}: missing {what} part")))?
                .parse::<f64>()
                .map_err(|e| QcohError::Parse(format!("entry {k}: bad {what} part: {e}")))
        };
        let re = next("real")?;
        let im = next("imaginary")?;
        if parts.next().is_some() {
            return Err(QcohError::Parse(format!("entry {k}: trailing fields")));
        }
        data.push(Complex64::new(re, im));
    }
    if data.len() != d * d {
        return Err(QcohError::Parse(format!(
            "expected {} entries for d = {d}, found {}",
            d * d,
            data.len()
        )));
    }
    ComplexMatrix::from_vec(d, d, data)
}

/// Writes the plain-text state format read by [`parse_state_text`].
pub fn to_state_text(m: &ComplexMatrix) -> String {
    let mut s = format!("{}\n", m.rows());
    for z in m.as_slice() {
        let _ = writeln!(s, "{:e} {:e}", z.re, z.im);
    }
    s
}
