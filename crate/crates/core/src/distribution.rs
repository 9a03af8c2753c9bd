//! Distribution of coherence over a qubit register: additivity scores
//! `δ = C(whole) - Σ_k C(pivot, B_k)`, the entropy decomposition of the
//! relative-entropy score, and Dicke-state closed forms.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::{QcohError, Result};
use crate::linalg::reduce_pure;
use crate::measures::{shannon, Base, CoherenceKind, CoherenceMeasure, Normalization};
use crate::states::{binomial, gghz_x_state, DensityMatrix, PureState};

/// `δ >= -SATISFACTION_TOL` counts as satisfying the additivity relation.
pub const SATISFACTION_TOL: f64 = 1e-10;

/// Per-state additivity record.
#[derive(Debug, Clone, PartialEq)]
pub struct AdditivityReport {
    /// Total number of qubits (pivot included).
    pub n_parties: usize,
    pub pivot: usize,
    pub kind: CoherenceKind,
    /// Whole-register value after normalization and power.
    pub whole_value: f64,
    /// Pair values `{pivot, B_k}` after normalization and power, partners in ascending order.
    pub pair_values: Vec<f64>,
    pub delta: f64,
    pub satisfied: bool,
}

impl AdditivityReport {
    fn build(n_parties: usize, pivot: usize, kind: CoherenceKind, whole_value: f64, pair_values: Vec<f64>) -> Self {
        let delta = whole_value - pair_values.iter().sum::<f64>();
        Self {
            n_parties,
            pivot,
            kind,
            whole_value,
            pair_values,
            delta,
            satisfied: delta >= -SATISFACTION_TOL,
        }
    }
}

fn check_register(n_qubits: Option<usize>, pivot: usize) -> Result<usize> {
    let n = n_qubits.ok_or_else(|| QcohError::BadSubsystem("dimension is not a power of two".into()))?;
    if n < 3 {
        return Err(QcohError::TooFewParties(n));
    }
    if pivot >= n {
        return Err(QcohError::BadSubsystem(format!("pivot {pivot} out of range for {n} qubits")));
    }
    Ok(n)
}

fn partners(n: usize, pivot: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&q| q != pivot)
}

/// Additivity score of `rho` with respect to `pivot`.
pub fn additivity_score(rho: &DensityMatrix, pivot: usize, kind: CoherenceKind) -> Result<AdditivityReport> {
    Ok(additivity_scores(rho, pivot, &[kind])?.remove(0))
}

/// Scores for several kinds at once; each raw measure is evaluated once per reduction.
pub fn additivity_scores(rho: &DensityMatrix, pivot: usize, kinds: &[CoherenceKind]) -> Result<Vec<AdditivityReport>> {
    let n = check_register(rho.n_qubits(), pivot)?;
    let pairs: Vec<DensityMatrix> = partners(n, pivot)
        .map(|b| rho.reduce(&[pivot, b]))
        .collect::<Result<_>>()?;
    let mut raw: HashMap<(CoherenceMeasure, Base), (f64, Vec<f64>)> = HashMap::new();
    let mut out = Vec::with_capacity(kinds.len());
    for kind in kinds {
        let key = (kind.measure, raw_base(kind));
        let (whole, pv) = match raw.entry(key) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => {
                let probe = CoherenceKind::new(kind.measure).in_base(key.1);
                let whole = probe.measure_value(rho)?;
                let pv = pairs
                    .iter()
                    .map(|p| probe.measure_value(p))
                    .collect::<Result<Vec<_>>>()?;
                e.insert((whole, pv))
            }
        };
        out.push(AdditivityReport::build(
            n,
            pivot,
            *kind,
            kind.finish(*whole, rho.dim())?,
            pv.iter().map(|&v| kind.finish(v, 4)).collect::<Result<_>>()?,
        ));
    }
    Ok(out)
}

// Normalized relative entropy is base-free; evaluate it in nats so the cache is shared.
fn raw_base(kind: &CoherenceKind) -> Base {
    match kind.normalization {
        Normalization::Normalized => Base::Nats,
        Normalization::Raw => kind.base,
    }
}

/// Additivity score of a pure register, computed from the amplitudes. Scales
/// to ~10 qubits where dense density matrices become expensive.
pub fn additivity_score_pure(psi: &PureState, pivot: usize, kind: CoherenceKind) -> Result<AdditivityReport> {
    let n = check_register(psi.n_qubits(), pivot)?;
    let whole = kind.evaluate_pure(psi)?;
    let pairs = partners(n, pivot)
        .map(|b| {
            let m = reduce_pure(psi.amplitudes(), &[pivot, b])?;
            kind.evaluate(&DensityMatrix::from_trusted(m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AdditivityReport::build(n, pivot, kind, whole, pairs))
}

/// Entropic bookkeeping behind the relative-entropy additivity score. All entropies in nats.
///
/// With `N = n + 1` qubits, pivot `A` and partners `B_1..B_n`:
///
/// * `Δ1 = Σ_k S(ρ_{AB_k}) - S(ρ) - S(ρ_A)`, `Δ2` the same on dephased states;
/// * `Δ3 = Σ_k S(Tr_{B_k} ρ) - (n-1) S(ρ)`, `Δ4` the same on dephased states.
///
/// Then `C_r(ρ) - Σ_k C_r(ρ_{AB_k}) = Δ1 - Δ2 - C_r(ρ_A)` and
/// `C_r(ρ) - Σ_k C_r(Tr_{B_k} ρ) = Δ3 - Δ4 - (n-2) C_r(ρ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremOneQuantities {
    /// Number of partner qubits.
    pub n_partners: usize,
    pub delta1: f64,
    pub delta2: f64,
    pub delta3: f64,
    pub delta4: f64,
    pub c_r_pivot: f64,
    pub c_r_whole: f64,
    /// `Σ_k C_r(ρ_{AB_k})`.
    pub c_r_pairs_sum: f64,
    /// `Σ_k C_r(Tr_{B_k} ρ)`.
    pub c_r_complements_sum: f64,
    pub entropy_whole: f64,
    pub entropy_pivot: f64,
    /// `Σ_k S(ρ_{AB_k})`.
    pub entropy_pairs_sum: f64,
}

impl TheoremOneQuantities {
    /// `δ_{C_r}` over pivot pairs, raw, in nats.
    pub fn pair_delta(&self) -> f64 {
        self.c_r_whole - self.c_r_pairs_sum
    }

    /// `δ_{C_r}` over the complements `Tr_{B_k} ρ`, raw, in nats.
    pub fn complement_delta(&self) -> f64 {
        self.c_r_whole - self.c_r_complements_sum
    }

    /// `pair_delta - (Δ1 - Δ2 - C_r(ρ_A))`; zero up to rounding.
    pub fn pair_identity_residual(&self) -> f64 {
        self.pair_delta() - (self.delta1 - self.delta2 - self.c_r_pivot)
    }

    /// `complement_delta - (Δ3 - Δ4 - (n-2) C_r(ρ))`; zero up to rounding.
    pub fn complement_identity_residual(&self) -> f64 {
        let n = self.n_partners as f64;
        self.complement_delta() - (self.delta3 - self.delta4 - (n - 2.0) * self.c_r_whole)
    }

    /// `Σ_k S(ρ_{AB_k}) - S(ρ) - (n-1) S(ρ_A)`, non-negative by strong subadditivity.
    pub fn ssa_margin(&self) -> f64 {
        let n = self.n_partners as f64;
        self.entropy_pairs_sum - self.entropy_whole - (n - 1.0) * self.entropy_pivot
    }

    /// Normalized pair score `C_r(ρ)/ln 2^{n+1} - Σ_k C_r(ρ_{AB_k})/ln 4`.
    pub fn normalized_pair_delta(&self) -> f64 {
        let n = self.n_partners as f64;
        let ln2 = std::f64::consts::LN_2;
        self.c_r_whole / ((n + 1.0) * ln2) - self.c_r_pairs_sum / (2.0 * ln2)
    }

    /// Right-hand side of the normalized pair decomposition, including the
    /// `-2 C_r(ρ_A)` term: `[2(Δ1-Δ2) - (n-1) Σ_k C_r(ρ_{AB_k}) - 2 C_r(ρ_A)] / (2(n+1) ln 2)`.
    pub fn normalized_pair_decomposition(&self) -> f64 {
        let n = self.n_partners as f64;
        let ln2 = std::f64::consts::LN_2;
        (2.0 * (self.delta1 - self.delta2) - (n - 1.0) * self.c_r_pairs_sum - 2.0 * self.c_r_pivot)
            / (2.0 * (n + 1.0) * ln2)
    }

    /// The same decomposition without the `C_r(ρ_A)` term. It equals
    /// [`Self::normalized_pair_delta`] only when the pivot marginal is incoherent.
    pub fn normalized_pair_decomposition_without_pivot_term(&self) -> f64 {
        let n = self.n_partners as f64;
        let ln2 = std::f64::consts::LN_2;
        (2.0 * (self.delta1 - self.delta2) - (n - 1.0) * self.c_r_pairs_sum) / (2.0 * (n + 1.0) * ln2)
    }

    /// Normalized complement score `C_r(ρ)/ln 2^{n+1} - Σ_k C_r(Tr_{B_k} ρ)/ln 2^n`.
    pub fn normalized_complement_delta(&self) -> f64 {
        let n = self.n_partners as f64;
        let ln2 = std::f64::consts::LN_2;
        self.c_r_whole / ((n + 1.0) * ln2) - self.c_r_complements_sum / (n * ln2)
    }

    /// `[n(Δ3-Δ4) - Σ_k C_r(Tr_{B_k} ρ) - n(n-2) C_r(ρ)] / (n(n+1) ln 2)`.
    pub fn normalized_complement_decomposition(&self) -> f64 {
        let n = self.n_partners as f64;
        let ln2 = std::f64::consts::LN_2;
        (n * (self.delta3 - self.delta4) - self.c_r_complements_sum - n * (n - 2.0) * self.c_r_whole)
            / (n * (n + 1.0) * ln2)
    }
}

/// Computes the Δ quantities of `rho` with respect to `pivot`.
pub fn theorem1_quantities(rho: &DensityMatrix, pivot: usize) -> Result<TheoremOneQuantities> {
    let n_total = check_register(rho.n_qubits(), pivot)?;
    let n = n_total - 1;
    let entropies = |r: &DensityMatrix| -> Result<(f64, f64)> {
        let s = shannon(&r.eigenvalues()?, Base::Nats);
        let s_dephased = shannon(&r.populations(), Base::Nats);
        Ok((s, s_dephased))
    };
    let (s_whole, si_whole) = entropies(rho)?;
    let (s_a, si_a) = entropies(&rho.reduce(&[pivot])?)?;
    let (mut s_pairs, mut si_pairs) = (0.0, 0.0);
    let (mut s_comp, mut si_comp) = (0.0, 0.0);
    for b in partners(n_total, pivot) {
        let (s, si) = entropies(&rho.reduce(&[pivot, b])?)?;
        s_pairs += s;
        si_pairs += si;
        let keep: Vec<usize> = (0..n_total).filter(|&q| q != b).collect();
        let (s, si) = entropies(&rho.reduce(&keep)?)?;
        s_comp += s;
        si_comp += si;
    }
    let nf = n as f64;
    Ok(TheoremOneQuantities {
        n_partners: n,
        delta1: s_pairs - s_whole - s_a,
        delta2: si_pairs - si_whole - si_a,
        delta3: s_comp - (nf - 1.0) * s_whole,
        delta4: si_comp - (nf - 1.0) * si_whole,
        c_r_pivot: si_a - s_a,
        c_r_whole: si_whole - s_whole,
        c_r_pairs_sum: si_pairs - s_pairs,
        c_r_complements_sum: si_comp - s_comp,
        entropy_whole: s_whole,
        entropy_pivot: s_a,
        entropy_pairs_sum: s_pairs,
    })
}

/// Closed-form additivity score of the Dicke state `|D_{n,r}⟩` for L1 or
/// relative-entropy coherence, raw or normalized, power 1. `n` is the total
/// qubit count, so there are `n - 1` pivot pairs.
///
/// * normalized L1: `(C(n,r) - 1)/(2^n - 1) - 2r(n-r)/(3n)`
/// * normalized C_r: `log2 C(n,r) / n - r(n-r)/n`
/// * raw L1: `C(n,r) - 1 - 2r(n-r)/n`
/// * raw C_r (bits): `log2 C(n,r) - 2r(n-r)/n`, converted to `kind.base`
pub fn dicke_delta_closed_form(n: usize, r: usize, kind: CoherenceKind) -> Result<f64> {
    if n < 3 || r < 1 || r + 1 > n {
        return Err(QcohError::OutOfRegime(format!(
            "Dicke closed forms need n >= 3 and 1 <= r <= n-1, got n={n}, r={r}"
        )));
    }
    if kind.power != 1 {
        return Err(QcohError::OutOfRegime(format!("power {} (closed forms are for power 1)", kind.power)));
    }
    let nf = n as f64;
    let rf = r as f64;
    let binom = binomial(n, r);
    let spread = rf * (nf - rf) / nf;
    match (kind.measure, kind.normalization) {
        (CoherenceMeasure::L1, Normalization::Normalized) => {
            Ok((binom - 1.0) / (2f64.powi(n as i32) - 1.0) - 2.0 * spread / 3.0)
        }
        (CoherenceMeasure::RelativeEntropy, Normalization::Normalized) => Ok(binom.log2() / nf - spread),
        (CoherenceMeasure::L1, Normalization::Raw) => Ok(binom - 1.0 - 2.0 * spread),
        (CoherenceMeasure::RelativeEntropy, Normalization::Raw) => {
            let bits = binom.log2() - 2.0 * spread;
            Ok(kind.base.from_nats(bits * std::f64::consts::LN_2))
        }
        (m, _) => Err(QcohError::UnknownCombination(format!("no Dicke closed form for {m}"))),
    }
}

/// Builds the `n`-qubit X state and scores it with pivot 0 against the other `n - 1` qubits.
pub fn xstate_additivity_check(
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    p: f64,
    kind: CoherenceKind,
) -> Result<AdditivityReport> {
    let rho = gghz_x_state(n, alpha, beta, p)?;
    additivity_score(&rho, 0, kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;
    use crate::states::{dicke, random_induced};

    fn l1() -> CoherenceKind {
        CoherenceKind::new(CoherenceMeasure::L1)
    }

    fn cr() -> CoherenceKind {
        CoherenceKind::new(CoherenceMeasure::RelativeEntropy)
    }

    #[test]
    fn ghz_pairs_are_diagonal() {
        let h = Complex64::new(0.5f64.sqrt(), 0.0);
        let r = xstate_additivity_check(3, h, h, 1.0, l1()).unwrap();
        assert!(r.pair_values.iter().all(|&v| v <= 1e-12));
        assert!((r.delta - 1.0).abs() < 1e-12);
        assert!(r.satisfied);
        let zero = xstate_additivity_check(3, h, h, 0.0, l1()).unwrap();
        assert!(zero.delta.abs() < 1e-15 && zero.satisfied);
    }

    #[test]
    fn dicke_three_one_scores() {
        let rho = dicke(3, 1).unwrap().to_density();
        let norm = additivity_score(&rho, 0, l1().normalized()).unwrap();
        assert!((norm.delta + 10.0 / 63.0).abs() < 1e-12, "{}", norm.delta);
        assert!(!norm.satisfied);
        let raw = additivity_score(&rho, 0, l1()).unwrap();
        assert!((raw.delta - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(raw.pair_values.len(), 2);
    }

    #[test]
    fn closed_form_arithmetic() {
        let v = dicke_delta_closed_form(3, 1, l1().normalized()).unwrap();
        assert!((v + 10.0 / 63.0).abs() < 1e-15);
        let v = dicke_delta_closed_form(3, 1, cr().in_base(Base::Bits)).unwrap();
        assert!((v - (3f64.log2() - 4.0 / 3.0)).abs() < 1e-15);
        assert!((v - 0.2516).abs() < 1e-4);
        let v = dicke_delta_closed_form(4, 2, cr().normalized()).unwrap();
        assert!((v - (6f64.log2() / 4.0 - 1.0)).abs() < 1e-15);
        assert!(v < 0.0);
        assert!(matches!(dicke_delta_closed_form(2, 1, l1()), Err(QcohError::OutOfRegime(_))));
        assert!(matches!(dicke_delta_closed_form(4, 4, l1()), Err(QcohError::OutOfRegime(_))));
        assert!(matches!(dicke_delta_closed_form(4, 0, l1()), Err(QcohError::OutOfRegime(_))));
        assert!(dicke_delta_closed_form(4, 1, CoherenceKind::new(CoherenceMeasure::L2)).is_err());
    }

    #[test]
    fn dicke_direct_matches_closed_form() {
        for n in 3..=6 {
            let psi = dicke(n, 1).unwrap();
            for r in 1..n {
                let psi = if r == 1 { psi.clone() } else { dicke(n, r).unwrap() };
                let rho = psi.to_density();
                for kind in [l1(), l1().normalized(), cr().in_base(Base::Bits), cr().normalized(), cr()] {
                    let want = dicke_delta_closed_form(n, r, kind).unwrap();
                    let dense = additivity_score(&rho, 0, kind).unwrap().delta;
                    let pure = additivity_score_pure(&psi, 0, kind).unwrap().delta;
                    assert!((dense - want).abs() < 1e-9, "n={n} r={r} {kind:?}: {dense} vs {want}");
                    assert!((pure - want).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn full_excitation_edge_is_incoherent() {
        let rho = dicke(4, 4).unwrap().to_density();
        assert_eq!(additivity_score(&rho, 0, l1().normalized()).unwrap().delta, 0.0);
    }

    #[test]
    fn too_few_parties_and_bad_pivot() {
        let rho = DensityMatrix::maximally_mixed(4);
        assert!(matches!(additivity_score(&rho, 0, l1()), Err(QcohError::TooFewParties(2))));
        assert!(matches!(theorem1_quantities(&rho, 0), Err(QcohError::TooFewParties(2))));
        let rho = DensityMatrix::maximally_mixed(8);
        assert!(matches!(additivity_score(&rho, 3, l1()), Err(QcohError::BadSubsystem(_))));
    }

    #[test]
    fn powers_apply_before_differencing() {
        let rho = dicke(3, 1).unwrap().to_density();
        let k1 = additivity_score(&rho, 0, l1().normalized()).unwrap();
        let k3 = additivity_score(&rho, 0, l1().normalized().with_power(3)).unwrap();
        let want = k1.whole_value.powi(3) - k1.pair_values.iter().map(|v| v.powi(3)).sum::<f64>();
        assert!((k3.delta - want).abs() < 1e-15);
    }

    #[test]
    fn multi_kind_scores_match_single_kind() {
        let mut rng = stream_rng(5, 0);
        let rho = random_induced(16, 2, &mut rng).unwrap();
        let kinds = [l1().normalized(), l1().normalized().with_power(2), cr().normalized(), cr().in_base(Base::Bits)];
        let all = additivity_scores(&rho, 1, &kinds).unwrap();
        for (k, r) in kinds.iter().zip(&all) {
            assert_eq!(&additivity_score(&rho, 1, *k).unwrap(), r);
        }
    }

    #[test]
    fn product_state_quantities() {
        let mut rng = stream_rng(6, 0);
        let a = random_induced(2, 2, &mut rng).unwrap();
        let b1 = random_induced(2, 2, &mut rng).unwrap();
        let b2 = random_induced(2, 2, &mut rng).unwrap();
        let b3 = random_induced(2, 2, &mut rng).unwrap();
        let s_a = crate::measures::entropy_vn(&a, Base::Nats).unwrap();
        // Δ1 = (n - 2) S(ρ_A) for a product state with n partners
        let t = theorem1_quantities(&a.tensor(&b1).tensor(&b2), 0).unwrap();
        assert!(t.delta1.abs() < 1e-10);
        let rho = a.tensor(&b1).tensor(&b2).tensor(&b3);
        let t = theorem1_quantities(&rho, 0).unwrap();
        assert!((t.delta1 - s_a).abs() < 1e-10);
        assert!(t.pair_identity_residual().abs() < 1e-10);
    }

    #[test]
    fn ghz_delta1() {
        let h = Complex64::new(0.5f64.sqrt(), 0.0);
        let ln2 = std::f64::consts::LN_2;
        // 3 qubits: two pairs of 1 bit each, pure whole, 1-bit marginal
        let t3 = theorem1_quantities(&gghz_x_state(3, h, h, 1.0).unwrap(), 0).unwrap();
        assert!((t3.delta1 - ln2).abs() < 1e-10);
        // 4 qubits: three pairs
        let t4 = theorem1_quantities(&gghz_x_state(4, h, h, 1.0).unwrap(), 0).unwrap();
        assert!((t4.delta1 - 2.0 * ln2).abs() < 1e-10);
    }

    #[test]
    fn decomposition_identities_on_random_states() {
        let mut rng = stream_rng(7, 0);
        for k in 0..60 {
            let n = 3 + k % 2;
            let rank = 1 + k % 4;
            let rho = random_induced(1 << n, rank, &mut rng).unwrap();
            let pivot = k % n;
            let t = theorem1_quantities(&rho, pivot).unwrap();
            assert!(t.pair_identity_residual().abs() < 1e-8);
            assert!(t.complement_identity_residual().abs() < 1e-8);
            for d in [t.delta1, t.delta2, t.delta3, t.delta4, t.ssa_margin()] {
                assert!(d >= -1e-8);
            }
            assert!((t.normalized_pair_delta() - t.normalized_pair_decomposition()).abs() < 1e-8);
            assert!((t.normalized_complement_delta() - t.normalized_complement_decomposition()).abs() < 1e-8);
            let direct = additivity_score(&rho, pivot, cr().normalized()).unwrap().delta;
            assert!((direct - t.normalized_pair_delta()).abs() < 1e-10);
        }
    }

    #[test]
    fn pivot_term_matters_only_for_coherent_pivot() {
        let mut rng = stream_rng(8, 0);
        let rho = random_induced(8, 2, &mut rng).unwrap();
        let t = theorem1_quantities(&rho, 0).unwrap();
        assert!(t.c_r_pivot > 1e-6);
        assert!((t.normalized_pair_delta() - t.normalized_pair_decomposition_without_pivot_term()).abs() > 1e-7);
        // incoherent pivot marginal: the two forms coincide
        let a = DensityMatrix::diagonal(&[0.3, 0.7]).unwrap();
        let rest = random_induced(4, 2, &mut rng).unwrap();
        let t = theorem1_quantities(&a.tensor(&rest), 0).unwrap();
        assert!((t.normalized_pair_delta() - t.normalized_pair_decomposition_without_pivot_term()).abs() < 1e-10);
    }

    #[test]
    fn vanishing_delta1_forces_violation() {
        let mut rng = stream_rng(9, 0);
        for _ in 0..20 {
            let a = crate::states::random_pure(2, &mut rng).unwrap().to_density();
            let b1 = random_induced(2, 2, &mut rng).unwrap();
            let b2 = random_induced(2, 1, &mut rng).unwrap();
            let b3 = random_induced(2, 2, &mut rng).unwrap();
            let rho = a.tensor(&b1).tensor(&b2).tensor(&b3);
            let t = theorem1_quantities(&rho, 0).unwrap();
            assert!(t.delta1.abs() < 1e-8);
            assert!(t.pair_delta() <= 1e-8);
        }
    }
}
