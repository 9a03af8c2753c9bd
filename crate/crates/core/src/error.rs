use thiserror::Error;

pub type Result<T> = std::result::Result<T, QcohError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QcohError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max |A - A^dagger| = {deviation:e})")]
    NonHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {residual:e})")]
    EigenNotConverged { sweeps: usize, residual: f64 },

    #[error("bad subsystem selection: {0}")]
    BadSubsystem(String),

    #[error("excitation number {r} outside [0, {n}]")]
    BadExcitation { n: usize, r: usize },

    #[error("amplitudes not normalized: |alpha|^2 + |beta|^2 = {norm}")]
    BadAmplitudes { norm: f64 },

    #[error("mixing weight {0} outside [0, 1]")]
    BadMixingWeight(f64),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("invalid random-state spec: {0}")]
    BadSpec(String),

    #[error("mixedness M_l is undefined for a one-dimensional system")]
    DimensionOne,

    #[error("simplex maximization did not converge within {iterations} iterations (last improvement {last_improvement:e})")]
    OptimizerNotConverged { iterations: usize, last_improvement: f64 },

    #[error("unsupported coherence/mixedness combination: {0}")]
    UnknownCombination(String),

    #[error("additivity relation needs at least 3 qubits, got {0}")]
    TooFewParties(usize),

    #[error("closed form outside its regime: {0}")]
    OutOfRegime(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid experiment configuration: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for QcohError {
    fn from(e: std::io::Error) -> Self {
        QcohError::Io(e.to_string())
    }
}
