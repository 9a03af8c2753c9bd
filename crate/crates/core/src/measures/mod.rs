//! Coherence and mixedness functionals and the coherence/mixedness trade-off values.
//!
//! Coherence is always taken in the computational (reference) basis.

mod geometric;

use std::fmt;
use std::str::FromStr;

use crate::error::{QcohError, Result};
use crate::linalg::xlogx;
use crate::states::{DensityMatrix, PureState};

pub use geometric::{
    c_g, c_g_optimized, max_incoherent_fidelity, root_fidelity_to_diagonal, GeometricSolution,
    SimplexOptions,
};

/// A state counts as incoherent when every off-diagonal magnitude is at most this.
pub const INCOHERENT_TOL: f64 = 1e-12;

/// Logarithm base for entropic quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Base {
    #[default]
    Nats,
    Bits,
}

impl Base {
    /// Converts a value in nats to this base.
    pub fn from_nats(self, nats: f64) -> f64 {
        match self {
            Base::Nats => nats,
            Base::Bits => nats / std::f64::consts::LN_2,
        }
    }

    /// `log_base(x)`.
    pub fn log(self, x: f64) -> f64 {
        self.from_nats(x.ln())
    }
}

/// Shannon entropy of a (clipped) probability vector.
pub fn shannon(probs: &[f64], base: Base) -> f64 {
    base.from_nats(-probs.iter().map(|&p| xlogx(p)).sum::<f64>())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoherenceMeasure {
    L1,
    /// Root-sum-square of off-diagonals. Not known to be monotone under
    /// incoherent operations; see [`CoherenceMeasure::is_proven_monotone`].
    L2,
    RelativeEntropy,
    Geometric,
}

impl CoherenceMeasure {
    /// False for `L2`, whose square fails strong monotonicity in general.
    pub fn is_proven_monotone(self) -> bool {
        !matches!(self, CoherenceMeasure::L2)
    }

    pub fn name(self) -> &'static str {
        match self {
            CoherenceMeasure::L1 => "l1",
            CoherenceMeasure::L2 => "l2",
            CoherenceMeasure::RelativeEntropy => "relative_entropy",
            CoherenceMeasure::Geometric => "geometric",
        }
    }

    /// Value on the maximally coherent state of dimension `d`, used as the normalizer.
    pub fn max_value(self, d: usize, base: Base) -> f64 {
        let df = d as f64;
        match self {
            CoherenceMeasure::L1 => df - 1.0,
            CoherenceMeasure::L2 => (1.0 - 1.0 / df).sqrt(),
            CoherenceMeasure::RelativeEntropy => base.log(df),
            CoherenceMeasure::Geometric => 1.0 - 1.0 / df,
        }
    }
}

impl fmt::Display for CoherenceMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoherenceMeasure {
    type Err = QcohError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l1" | "c_l1" => Ok(Self::L1),
            "l2" | "c_l2" => Ok(Self::L2),
            "relative_entropy" | "re" | "cr" | "c_r" => Ok(Self::RelativeEntropy),
            "geometric" | "cg" | "c_g" => Ok(Self::Geometric),
            other => Err(QcohError::Parse(format!("unknown coherence measure '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Normalization {
    #[default]
    Raw,
    /// Divide by the value on the maximally coherent state of the same dimension.
    Normalized,
}

/// A coherence functional together with normalization, power and log base.
///
/// The base only changes raw relative-entropy values; normalized values are
/// base-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoherenceKind {
    pub measure: CoherenceMeasure,
    pub normalization: Normalization,
    pub power: u32,
    pub base: Base,
}

impl CoherenceKind {
    pub fn new(measure: CoherenceMeasure) -> Self {
        Self {
            measure,
            normalization: Normalization::Raw,
            power: 1,
            base: Base::Nats,
        }
    }

    pub fn normalized(mut self) -> Self {
        self.normalization = Normalization::Normalized;
        self
    }

    pub fn raw(mut self) -> Self {
        self.normalization = Normalization::Raw;
        self
    }

    pub fn with_power(mut self, k: u32) -> Self {
        self.power = k;
        self
    }

    pub fn in_base(mut self, base: Base) -> Self {
        self.base = base;
        self
    }

    pub fn is_normalized(&self) -> bool {
        self.normalization == Normalization::Normalized
    }

    fn check(&self) -> Result<()> {
        if self.power == 0 {
            return Err(QcohError::Config("coherence power must be at least 1".into()));
        }
        Ok(())
    }

    /// Raw measure value on `rho`.
    pub fn measure_value(&self, rho: &DensityMatrix) -> Result<f64> {
        match self.measure {
            CoherenceMeasure::L1 => Ok(c_l1(rho)),
            CoherenceMeasure::L2 => Ok(c_l2(rho)),
            CoherenceMeasure::RelativeEntropy => c_r(rho, self.base),
            CoherenceMeasure::Geometric => c_g(rho),
        }
    }

    /// Raw measure value on a pure state, from the amplitudes.
    pub fn measure_value_pure(&self, psi: &PureState) -> f64 {
        let p = psi.probabilities();
        match self.measure {
            CoherenceMeasure::L1 => {
                let s: f64 = psi.amplitudes().iter().map(|z| z.norm()).sum();
                (s * s - p.iter().sum::<f64>()).max(0.0)
            }
            CoherenceMeasure::L2 => {
                let total: f64 = p.iter().sum();
                (total * total - p.iter().map(|x| x * x).sum::<f64>()).max(0.0).sqrt()
            }
            CoherenceMeasure::RelativeEntropy => shannon(&p, self.base),
            CoherenceMeasure::Geometric => 1.0 - p.iter().copied().fold(0.0, f64::max),
        }
    }

    /// Applies normalization for dimension `d` and then the power.
    pub fn finish(&self, raw: f64, d: usize) -> Result<f64> {
        self.check()?;
        let v = match self.normalization {
            Normalization::Raw => raw,
            Normalization::Normalized => {
                if d < 2 {
                    return Err(QcohError::DimensionOne);
                }
                raw / self.measure.max_value(d, self.base)
            }
        };
        Ok(v.powi(self.power as i32))
    }

    /// `(normalized?) C(ρ)^k`.
    pub fn evaluate(&self, rho: &DensityMatrix) -> Result<f64> {
        self.finish(self.measure_value(rho)?, rho.dim())
    }

    pub fn evaluate_pure(&self, psi: &PureState) -> Result<f64> {
        self.finish(self.measure_value_pure(psi), psi.dim())
    }

    pub fn label(&self) -> String {
        let norm = if self.is_normalized() { "norm" } else { "raw" };
        format!("{}^{} ({norm})", self.measure, self.power)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MixednessKind {
    /// `d/(d-1) (1 - Tr ρ²)`.
    LinearEntropy,
    VonNeumann,
    /// `F(ρ, I/d)`.
    Geometric,
}

/// `Σ_{i≠j} |ρ_ij|`, with Neumaier-compensated summation.
pub fn c_l1(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    let d = rho.dim();
    let (mut s, mut comp) = (0.0f64, 0.0f64);
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            let x = m[(i, j)].norm();
            let t = s + x;
            comp += if s.abs() >= x { (s - t) + x } else { (x - t) + s };
            s = t;
        }
    }
    s + comp
}

/// `(Σ_{i≠j} |ρ_ij|²)^½`.
pub fn c_l2(rho: &DensityMatrix) -> f64 {
    rho.matrix().off_diagonal_norm_sqr().sqrt()
}

/// `S(diag ρ) - S(ρ)`.
pub fn c_r(rho: &DensityMatrix, base: Base) -> Result<f64> {
    let eig = rho.eigenvalues()?;
    Ok(c_r_from_parts(&rho.populations(), &eig, base))
}

fn c_r_from_parts(populations: &[f64], eigenvalues: &[f64], base: Base) -> f64 {
    shannon(populations, base) - shannon(eigenvalues, base)
}

/// True when every off-diagonal entry is below [`INCOHERENT_TOL`].
pub fn is_incoherent(rho: &DensityMatrix) -> bool {
    rho.max_off_diagonal() <= INCOHERENT_TOL
}

/// Normalized linear entropy.
pub fn m_l(rho: &DensityMatrix) -> Result<f64> {
    let d = rho.dim();
    if d < 2 {
        return Err(QcohError::DimensionOne);
    }
    let df = d as f64;
    Ok(df / (df - 1.0) * (1.0 - rho.purity()))
}

/// von Neumann entropy over clipped eigenvalues.
pub fn entropy_vn(rho: &DensityMatrix, base: Base) -> Result<f64> {
    Ok(shannon(&rho.eigenvalues()?, base))
}

/// `(Tr √ρ)² / d`.
pub fn m_g(rho: &DensityMatrix) -> Result<f64> {
    Ok(m_g_from_eigenvalues(&rho.eigenvalues()?))
}

fn m_g_from_eigenvalues(ev: &[f64]) -> f64 {
    let s: f64 = ev.iter().map(|l| l.max(0.0).sqrt()).sum();
    s * s / ev.len() as f64
}

/// The studied coherence/mixedness pairings. Each value is
/// `normalized coherence term + mixedness term`; the reciprocity relation
/// claims it is at most 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TradeoffRelation {
    /// `C_l1²/(d-1)² + M_l`
    L1Linear,
    /// `C_l2²/(1 - 1/d) + M_l`
    L2Linear,
    /// `C_r/ln d + S/ln d`
    RelativeEntropyVonNeumann,
    /// `C_g + M_g`
    GeometricGeometric,
    /// `C_l1²/(d-1)² + S/ln d`
    L1VonNeumann,
    /// `C_l1²/(d-1)² + M_g`
    L1Geometric,
    /// `C_r/ln d + M_l`
    RelativeEntropyLinear,
    /// `C_r/ln d + M_g`
    RelativeEntropyGeometric,
}

impl TradeoffRelation {
    pub const ALL: [TradeoffRelation; 8] = [
        Self::L1Linear,
        Self::L2Linear,
        Self::RelativeEntropyVonNeumann,
        Self::GeometricGeometric,
        Self::L1VonNeumann,
        Self::L1Geometric,
        Self::RelativeEntropyLinear,
        Self::RelativeEntropyGeometric,
    ];

    /// Maps a (coherence, mixedness) pair onto a studied relation. L1 and L2
    /// enter squared (power 2), relative entropy and geometric coherence linearly.
    pub fn from_kinds(coherence: CoherenceKind, mixedness: MixednessKind) -> Result<Self> {
        use CoherenceMeasure as C;
        use MixednessKind as M;
        let rel = match (coherence.measure, coherence.power, mixedness) {
            (C::L1, 2, M::LinearEntropy) => Self::L1Linear,
            (C::L1, 2, M::VonNeumann) => Self::L1VonNeumann,
            (C::L1, 2, M::Geometric) => Self::L1Geometric,
            (C::L2, 2, M::LinearEntropy) => Self::L2Linear,
            (C::RelativeEntropy, 1, M::VonNeumann) => Self::RelativeEntropyVonNeumann,
            (C::RelativeEntropy, 1, M::LinearEntropy) => Self::RelativeEntropyLinear,
            (C::RelativeEntropy, 1, M::Geometric) => Self::RelativeEntropyGeometric,
            (C::Geometric, 1, M::Geometric) => Self::GeometricGeometric,
            (m, k, mix) => {
                return Err(QcohError::UnknownCombination(format!(
                    "{m}^{k} with {mix:?}"
                )))
            }
        };
        Ok(rel)
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::L1Linear => "C_l1^2/(d-1)^2 + M_l",
            Self::L2Linear => "C_l2^2/(1-1/d) + M_l",
            Self::RelativeEntropyVonNeumann => "C_r/ln d + S/ln d",
            Self::GeometricGeometric => "C_g + M_g",
            Self::L1VonNeumann => "C_l1^2/(d-1)^2 + S/ln d",
            Self::L1Geometric => "C_l1^2/(d-1)^2 + M_g",
            Self::RelativeEntropyLinear => "C_r/ln d + M_l",
            Self::RelativeEntropyGeometric => "C_r/ln d + M_g",
        }
    }

    pub fn value(self, rho: &DensityMatrix) -> Result<f64> {
        StateProfile::new(rho)?.tradeoff(self)
    }
}

/// Trade-off value for a (coherence, mixedness) pair.
pub fn tradeoff(rho: &DensityMatrix, coherence: CoherenceKind, mixedness: MixednessKind) -> Result<f64> {
    TradeoffRelation::from_kinds(coherence, mixedness)?.value(rho)
}

/// Spectrum-derived quantities of one state, computed once and shared
/// between measures. Geometric coherence is evaluated on demand.
#[derive(Debug, Clone)]
pub struct StateProfile<'a> {
    rho: &'a DensityMatrix,
    eigenvalues: Vec<f64>,
    populations: Vec<f64>,
}

impl<'a> StateProfile<'a> {
    pub fn new(rho: &'a DensityMatrix) -> Result<Self> {
        Ok(Self {
            rho,
            eigenvalues: rho.eigenvalues()?,
            populations: rho.populations(),
        })
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn c_l1(&self) -> f64 {
        c_l1(self.rho)
    }

    pub fn c_l2(&self) -> f64 {
        c_l2(self.rho)
    }

    pub fn c_r(&self, base: Base) -> f64 {
        c_r_from_parts(&self.populations, &self.eigenvalues, base)
    }

    pub fn entropy(&self, base: Base) -> f64 {
        shannon(&self.eigenvalues, base)
    }

    pub fn purity(&self) -> f64 {
        self.rho.purity()
    }

    pub fn m_l(&self) -> Result<f64> {
        m_l(self.rho)
    }

    pub fn m_g(&self) -> f64 {
        m_g_from_eigenvalues(&self.eigenvalues)
    }

    pub fn c_g(&self) -> Result<f64> {
        c_g(self.rho)
    }

    pub fn tradeoff(&self, relation: TradeoffRelation) -> Result<f64> {
        let d = self.dim();
        if d < 2 {
            return Err(QcohError::DimensionOne);
        }
        let df = d as f64;
        let l1_sq = || (self.c_l1() / (df - 1.0)).powi(2);
        let cr = || self.c_r(Base::Nats) / df.ln();
        let s = || self.entropy(Base::Nats) / df.ln();
        use TradeoffRelation as T;
        Ok(match relation {
            T::L1Linear => l1_sq() + self.m_l()?,
            T::L2Linear => self.c_l2().powi(2) / (1.0 - 1.0 / df) + self.m_l()?,
            T::RelativeEntropyVonNeumann => cr() + s(),
            T::GeometricGeometric => self.c_g()? + self.m_g(),
            T::L1VonNeumann => l1_sq() + s(),
            T::L1Geometric => l1_sq() + self.m_g(),
            T::RelativeEntropyLinear => cr() + self.m_l()?,
            T::RelativeEntropyGeometric => cr() + self.m_g(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::GeneratorBasis;
    use crate::rng::stream_rng;
    use crate::states::{gghz_x_state, maximally_coherent, two_qubit_violation_state, random_induced};
    use num_complex::Complex64;
    use std::f64::consts::LN_2;

    #[test]
    fn l1_of_exact_mcs_density_is_exact() {
        for d in 1..=16 {
            let rho = crate::states::maximally_coherent_density(d).unwrap();
            assert_eq!(c_l1(&rho), (d - 1) as f64, "d={d}");
        }
    }

    fn mcs(d: usize) -> DensityMatrix {
        maximally_coherent(d).unwrap().to_density()
    }

    #[test]
    fn l1_anchors() {
        assert_eq!(c_l1(&DensityMatrix::diagonal(&[0.2, 0.8]).unwrap()), 0.0);
        for d in 1..=8 {
            assert!((c_l1(&mcs(d)) - (d as f64 - 1.0)).abs() < 1e-12);
        }
        let (a, b) = (Complex64::new(0.6, 0.0), Complex64::from_polar(0.8, 0.3));
        let rho = gghz_x_state(3, a, b, 0.4).unwrap();
        assert!((c_l1(&rho) - 2.0 * 0.4 * (a * b.conj()).norm()).abs() < 1e-12);
    }

    #[test]
    fn l2_anchors() {
        assert_eq!(c_l2(&DensityMatrix::diagonal(&[0.5, 0.5]).unwrap()), 0.0);
        for d in 2..=8 {
            let want = (1.0 - 1.0 / d as f64).sqrt();
            assert!((c_l2(&mcs(d)) - want).abs() < 1e-12);
        }
        let mut rng = stream_rng(4, 0);
        for _ in 0..50 {
            let rho = random_induced(6, 3, &mut rng).unwrap();
            assert!(c_l2(&rho) <= c_l1(&rho) + 1e-15);
        }
    }

    #[test]
    fn relative_entropy_anchors() {
        assert!(c_r(&DensityMatrix::diagonal(&[0.3, 0.7]).unwrap(), Base::Nats).unwrap().abs() < 1e-15);
        for d in 2..=8 {
            assert!((c_r(&mcs(d), Base::Nats).unwrap() - (d as f64).ln()).abs() < 1e-10);
        }
        let v = c_r(&two_qubit_violation_state(), Base::Bits).unwrap();
        assert!((v - 1.0668).abs() < 6e-3, "{v}");
    }

    #[test]
    fn mixedness_anchors() {
        let pure = mcs(4);
        assert!(m_l(&pure).unwrap().abs() < 1e-12);
        assert!(entropy_vn(&pure, Base::Nats).unwrap().abs() < 1e-12);
        assert!((m_g(&pure).unwrap() - 0.25).abs() < 1e-12);
        let mixed = DensityMatrix::maximally_mixed(4);
        assert!((m_l(&mixed).unwrap() - 1.0).abs() < 1e-15);
        assert!((entropy_vn(&mixed, Base::Nats).unwrap() - 4f64.ln()).abs() < 1e-14);
        assert!((m_g(&mixed).unwrap() - 1.0).abs() < 1e-14);
        let half = DensityMatrix::diagonal(&[0.5, 0.5, 0.0, 0.0]).unwrap();
        assert!((m_g(&half).unwrap() - 0.5).abs() < 1e-14);
        assert!((m_l(&two_qubit_violation_state()).unwrap() - 0.5948).abs() < 1e-3);
        assert!(matches!(m_l(&DensityMatrix::maximally_mixed(1)), Err(QcohError::DimensionOne)));
        let violation_spectrum = DensityMatrix::diagonal(&[0.664, 0.336, 0.0, 0.0]).unwrap();
        let s = entropy_vn(&violation_spectrum, Base::Bits).unwrap();
        // two-term binary entropy computed by hand
        let h = -(0.664 * 0.664f64.log2() + 0.336 * 0.336f64.log2());
        assert!((s - h).abs() < 1e-12);
        assert!((s - 0.9209).abs() < 1e-3);
    }

    #[test]
    fn base_invariance_of_normalized_relative_entropy() {
        let mut rng = stream_rng(8, 0);
        for d in [2, 3, 4, 8] {
            let rho = random_induced(d, 2, &mut rng).unwrap();
            let nats = c_r(&rho, Base::Nats).unwrap() / (d as f64).ln();
            let bits = c_r(&rho, Base::Bits).unwrap() / (d as f64).log2();
            assert!((nats - bits).abs() < 1e-10);
            assert!((Base::Bits.from_nats(LN_2) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn tradeoff_examples() {
        let l1sq = CoherenceKind::new(CoherenceMeasure::L1).with_power(2);
        let cr = CoherenceKind::new(CoherenceMeasure::RelativeEntropy);
        for d in 2..=6 {
            let v = tradeoff(&mcs(d), l1sq, MixednessKind::LinearEntropy).unwrap();
            assert!((v - 1.0).abs() < 1e-12);
            let w = tradeoff(&DensityMatrix::maximally_mixed(d), cr, MixednessKind::LinearEntropy).unwrap();
            assert!((w - 1.0).abs() < 1e-12);
        }
        let v = tradeoff(&two_qubit_violation_state(), cr, MixednessKind::LinearEntropy).unwrap();
        assert!((v - 1.1282).abs() < 3e-3 && v > 1.0 && v < 2.0, "{v}");
        let bad = tradeoff(&mcs(2), CoherenceKind::new(CoherenceMeasure::L2), MixednessKind::VonNeumann);
        assert!(matches!(bad, Err(QcohError::UnknownCombination(_))));
        let bad = tradeoff(&mcs(2), CoherenceKind::new(CoherenceMeasure::L1), MixednessKind::LinearEntropy);
        assert!(matches!(bad, Err(QcohError::UnknownCombination(_))));
    }

    #[test]
    fn reciprocity_relations_hold_on_samples() {
        let mut rng = stream_rng(21, 0);
        for d in [2usize, 4, 8] {
            for k in 0..3000 {
                let rank = 1 + k % d;
                let rho = random_induced(d, rank, &mut rng).unwrap();
                let p = StateProfile::new(&rho).unwrap();
                for rel in [
                    TradeoffRelation::L1Linear,
                    TradeoffRelation::L2Linear,
                    TradeoffRelation::RelativeEntropyVonNeumann,
                ] {
                    let v = p.tradeoff(rel).unwrap();
                    assert!(v <= 1.0 + 1e-9, "{rel:?} d={d} rank={rank}: {v}");
                }
            }
        }
    }

    #[test]
    fn bloch_formulas_match_direct() {
        let mut rng = stream_rng(13, 0);
        for d in [2usize, 3, 4, 8] {
            let basis = GeneratorBasis::new(d).unwrap();
            for k in 0..100 {
                let rho = random_induced(d, 1 + k % d, &mut rng).unwrap();
                let x = basis.coords(rho.matrix()).unwrap();
                assert!(basis.reconstruct(&x).unwrap().max_abs_diff(rho.matrix()) <= 1e-10);
                assert!((x.l1_coherence() - c_l1(&rho)).abs() <= 1e-10);
                assert!((x.linear_mixedness() - m_l(&rho).unwrap()).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn convexity_spot_check() {
        let mut rng = stream_rng(17, 0);
        for _ in 0..100 {
            let a = random_induced(4, 2, &mut rng).unwrap();
            let b = random_induced(4, 3, &mut rng).unwrap();
            for lambda in [0.25, 0.5, 0.75] {
                let m = a.mix(&b, lambda).unwrap();
                let lhs_l1 = c_l1(&m);
                assert!(lhs_l1 <= lambda * c_l1(&a) + (1.0 - lambda) * c_l1(&b) + 1e-9);
                let cr = |r: &DensityMatrix| c_r(r, Base::Nats).unwrap();
                assert!(cr(&m) <= lambda * cr(&a) + (1.0 - lambda) * cr(&b) + 1e-9);
            }
        }
    }

    #[test]
    fn pure_and_density_routes_agree() {
        let mut rng = stream_rng(2, 0);
        for d in [2usize, 5, 8] {
            let psi = crate::states::random_pure(d, &mut rng).unwrap();
            let rho = psi.to_density();
            for m in [CoherenceMeasure::L1, CoherenceMeasure::L2, CoherenceMeasure::RelativeEntropy, CoherenceMeasure::Geometric] {
                for base in [Base::Nats, Base::Bits] {
                    let k = CoherenceKind::new(m).normalized().with_power(2).in_base(base);
                    let a = k.evaluate_pure(&psi).unwrap();
                    let b = k.evaluate(&rho).unwrap();
                    assert!((a - b).abs() < 1e-9, "{m:?} d={d}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn incoherence_threshold() {
        assert!(is_incoherent(&DensityMatrix::diagonal(&[0.1, 0.9]).unwrap()));
        assert!(!is_incoherent(&mcs(2)));
    }
}
