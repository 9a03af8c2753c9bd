//! Coherence and mixedness of finite-dimensional quantum states.
//!
//! The crate is layered bottom-up:
//!
//! * [`linalg`]: dense complex matrices, a Jacobi Hermitian eigensolver,
//!   partial traces, fidelity and the Gell-Mann basis.
//! * [`states`]: validated density matrices, named state families and
//!   seeded induced-measure sampling.
//! * [`measures`]: l1, l2, relative-entropy and geometric coherence, the
//!   three mixedness measures and coherence/mixedness trade-off values.
//! * [`distribution`]: additivity (monogamy-type) scores over pivot
//!   reductions, the entropy decomposition of the relative-entropy score and
//!   the Dicke closed forms.
//! * [`experiments`]: the seeded Monte Carlo harness behind the `qcoh` CLI.

pub mod distribution;
pub mod error;
pub mod experiments;
pub mod linalg;
pub mod measures;
pub mod rng;
pub mod states;

pub use error::{QcohError, Result};
pub use linalg::ComplexMatrix;
pub use measures::{Base, CoherenceKind, CoherenceMeasure, MixednessKind, Normalization};
pub use states::{DensityMatrix, PureState};
