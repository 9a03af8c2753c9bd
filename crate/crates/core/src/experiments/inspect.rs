//! Full measure report for one state, named or read from a file.

use std::fmt;
use std::path::Path;

use num_complex::Complex64;

use crate::distribution::{additivity_scores, theorem1_quantities, AdditivityReport, TheoremOneQuantities};
use crate::error::{QcohError, Result};
use crate::measures::{Base, CoherenceKind, CoherenceMeasure, StateProfile, TradeoffRelation};
use crate::states::{
    dicke, gghz_x_state, maximally_coherent, two_qubit_violation_state, parse_state_text, DensityMatrix,
};

/// Resolves `eq11`, `mcs:<d>`, `dicke:<n>,<r>`, `ghzx:<n>,<p>` or `mixed:<d>`.
/// `ghzx` uses `α = β = 1/√2`.
pub fn named_state(name: &str) -> Result<DensityMatrix> {
    let name = name.trim();
    let (head, args) = name.split_once(':').unwrap_or((name, ""));
    let nums = |want: usize| -> Result<Vec<f64>> {
        let v: Vec<f64> = args
            .split(',')
            .map(|a| a.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| QcohError::Parse(format!("bad arguments in '{name}'")))?;
        if v.len() != want {
            return Err(QcohError::Parse(format!("'{head}' takes {want} argument(s)")));
        }
        Ok(v)
    };
    let int = |x: f64| -> Result<usize> {
        if x >= 0.0 && x.fract() == 0.0 {
            Ok(x as usize)
        } else {
            Err(QcohError::Parse(format!("expected a whole number in '{name}'")))
        }
    };
    match head.to_ascii_lowercase().as_str() {
        "eq11" => Ok(two_qubit_violation_state()),
        "mcs" => Ok(maximally_coherent(int(nums(1)?[0])?)?.to_density()),
        "mixed" => {
            let d = int(nums(1)?[0])?;
            if d == 0 {
                return Err(QcohError::Parse("dimension must be positive".into()));
            }
            Ok(DensityMatrix::maximally_mixed(d))
        }
        "dicke" => {
            let v = nums(2)?;
            Ok(dicke(int(v[0])?, int(v[1])?)?.to_density())
        }
        "ghzx" => {
            let v = nums(2)?;
            let h = Complex64::new(0.5f64.sqrt(), 0.0);
            gghz_x_state(int(v[0])?, h, h, v[1])
        }
        _ => Err(QcohError::Parse(format!("unknown state '{name}'"))),
    }
}

/// Reads a state file (dimension line, then `d²` rows of `re im`) and validates it at `tol`.
pub fn state_from_file(path: &Path, tol: f64) -> Result<DensityMatrix> {
    let text = std::fs::read_to_string(path)?;
    DensityMatrix::with_tolerance(parse_state_text(&text)?, tol)
}

#[derive(Debug, Clone)]
pub struct StateReport {
    pub label: String,
    pub dim: usize,
    pub purity: f64,
    pub eigenvalues: Vec<f64>,
    pub c_l1: f64,
    pub c_l2: f64,
    pub c_r_nats: f64,
    pub c_r_bits: f64,
    pub c_g: f64,
    pub m_l: f64,
    pub entropy_nats: f64,
    pub m_g: f64,
    pub tradeoffs: Vec<(TradeoffRelation, f64)>,
    pub additivity: Vec<AdditivityReport>,
    pub theorem: Option<TheoremOneQuantities>,
}

impl StateReport {
    /// `(C_r/log d, M_l, sum)`: the pairing that can exceed 1.
    pub fn relative_entropy_linear(&self) -> (f64, f64, f64) {
        let cr = self.c_r_bits / (self.dim as f64).log2();
        (cr, self.m_l, cr + self.m_l)
    }
}

/// Evaluates every measure on `rho`; additivity and Δ quantities are added for ≥ 3 qubits.
pub fn inspect(label: &str, rho: &DensityMatrix, pivot: usize) -> Result<StateReport> {
    if rho.dim() < 2 {
        return Err(QcohError::DimensionOne);
    }
    let prof = StateProfile::new(rho)?;
    let tradeoffs = TradeoffRelation::ALL
        .into_iter()
        .map(|t| Ok((t, prof.tradeoff(t)?)))
        .collect::<Result<Vec<_>>>()?;
    let (additivity, theorem) = match rho.n_qubits() {
        Some(n) if n >= 3 => {
            let l1 = CoherenceKind::new(CoherenceMeasure::L1);
            let cr = CoherenceKind::new(CoherenceMeasure::RelativeEntropy);
            let kinds = [l1.normalized(), cr.normalized(), l1, cr.in_base(Base::Bits)];
            (additivity_scores(rho, pivot, &kinds)?, Some(theorem1_quantities(rho, pivot)?))
        }
        _ => (Vec::new(), None),
    };
    Ok(StateReport {
        label: label.to_string(),
        dim: rho.dim(),
        purity: prof.purity(),
        eigenvalues: prof.eigenvalues().to_vec(),
        c_l1: prof.c_l1(),
        c_l2: prof.c_l2(),
        c_r_nats: prof.c_r(Base::Nats),
        c_r_bits: prof.c_r(Base::Bits),
        c_g: prof.c_g()?,
        m_l: prof.m_l()?,
        entropy_nats: prof.entropy(Base::Nats),
        m_g: prof.m_g(),
        tradeoffs,
        additivity,
        theorem,
    })
}

impl fmt::Display for StateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "state: {} (dim {})", self.label, self.dim)?;
        writeln!(f, "purity Tr rho^2: {:.6}", self.purity)?;
        let ev: Vec<String> = self.eigenvalues.iter().map(|l| format!("{l:.6}")).collect();
        writeln!(f, "eigenvalues: {}", ev.join(" "))?;
        writeln!(f, "coherence:")?;
        writeln!(f, "  C_l1          {:.6}", self.c_l1)?;
        writeln!(f, "  C_l2          {:.6}", self.c_l2)?;
        writeln!(f, "  C_r (nats)    {:.6}", self.c_r_nats)?;
        writeln!(f, "  C_r (bits)    {:.6}", self.c_r_bits)?;
        writeln!(f, "  C_g           {:.6}", self.c_g)?;
        writeln!(f, "mixedness:")?;
        writeln!(f, "  M_l           {:.6}", self.m_l)?;
        writeln!(f, "  S (nats)      {:.6}", self.entropy_nats)?;
        writeln!(f, "  M_g           {:.6}", self.m_g)?;
        writeln!(f, "trade-off values (bound 1):")?;
        for (t, v) in &self.tradeoffs {
            writeln!(f, "  {:<26} {:.6}{}", t.label(), v, if *v > 1.0 + 1e-9 { "  > 1" } else { "" })?;
        }
        let (a, b, s) = self.relative_entropy_linear();
        writeln!(f, "C_r/log d + M_l: {a:.4} + {b:.4} = {s:.4}")?;
        if !self.additivity.is_empty() {
            writeln!(f, "additivity (pivot {}):", self.additivity[0].pivot)?;
            for r in &self.additivity {
                let pairs: Vec<String> = r.pair_values.iter().map(|v| format!("{v:.6}")).collect();
                writeln!(
                    f,
                    "  {:<24} whole {:.6} pairs [{}] delta {:+.6} {}",
                    r.kind.label(),
                    r.whole_value,
                    pairs.join(", "),
                    r.delta,
                    if r.satisfied { "satisfied" } else { "violated" }
                )?;
            }
        }
        if let Some(t) = &self.theorem {
            writeln!(f, "entropy decomposition (nats):")?;
            writeln!(f, "  Delta1 {:.6}  Delta2 {:.6}  Delta3 {:.6}  Delta4 {:.6}", t.delta1, t.delta2, t.delta3, t.delta4)?;
            writeln!(f, "  C_r(pivot) {:.6}  SSA margin {:.6}", t.c_r_pivot, t.ssa_margin())?;
            writeln!(
                f,
                "  identity residuals {:.2e} {:.2e}",
                t.pair_identity_residual(),
                t.complement_identity_residual()
            )?;
        }
        Ok(())
    }
}
