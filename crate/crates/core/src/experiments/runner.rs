use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::config::{ExperimentConfig, ExperimentKind};
use crate::distribution::{additivity_score_pure, additivity_scores, dicke_delta_closed_form};
use crate::error::{QcohError, Result};
use crate::measures::{CoherenceKind, StateProfile, TradeoffRelation};
use crate::rng::{mix_seed, stream_rng};
use crate::states::{dicke, random_induced, DensityMatrix};

/// The four histogrammed coherence/mixedness pairings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Panel {
    /// `C_l1²/(d-1)² + S/ln d`
    A,
    /// `C_l1²/(d-1)² + M_g`
    B,
    /// `C_r/ln d + M_l`, the pairing that exceeds 1
    C,
    /// `C_r/ln d + M_g`
    D,
}

impl Panel {
    pub const ALL: [Panel; 4] = [Panel::A, Panel::B, Panel::C, Panel::D];

    pub fn relation(self) -> TradeoffRelation {
        match self {
            Panel::A => TradeoffRelation::L1VonNeumann,
            Panel::B => TradeoffRelation::L1Geometric,
            Panel::C => TradeoffRelation::RelativeEntropyLinear,
            Panel::D => TradeoffRelation::RelativeEntropyGeometric,
        }
    }

    /// Histogram range; panel (c) gets the wider window since its values pass 1.
    pub fn range(self) -> (f64, f64) {
        match self {
            Panel::C => (0.0, 2.0),
            _ => (0.0, 1.2),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Panel::A => 'a',
            Panel::B => 'b',
            Panel::C => 'c',
            Panel::D => 'd',
        }
    }
}

/// One (rank, n, measure) cell of the additivity table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableCell {
    pub rank: usize,
    pub n_qubits: usize,
    pub kind: CoherenceKind,
    pub satisfied: usize,
    pub samples: usize,
    pub seed: u64,
}

impl TableCell {
    pub fn percent(&self) -> f64 {
        100.0 * self.satisfied as f64 / self.samples as f64
    }
}

/// Fixed-width histogram of one panel at one (rank, n).
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub panel: Panel,
    pub rank: usize,
    pub n_qubits: usize,
    pub lo: f64,
    pub hi: f64,
    pub counts: Vec<u64>,
    pub samples: usize,
    /// Samples with value strictly above 1.
    pub exceed_one: usize,
    /// Samples outside `[lo, hi]`, counted in the edge bins.
    pub clamped: usize,
    pub min_value: f64,
    pub max_value: f64,
}

impl Histogram {
    fn new(panel: Panel, rank: usize, n_qubits: usize, bins: usize) -> Self {
        let (lo, hi) = panel.range();
        Self {
            panel,
            rank,
            n_qubits,
            lo,
            hi,
            counts: vec![0; bins],
            samples: 0,
            exceed_one: 0,
            clamped: 0,
            min_value: f64::INFINITY,
            max_value: f64::NEG_INFINITY,
        }
    }

    fn add(&mut self, v: f64) {
        let bins = self.counts.len();
        let t = (v - self.lo) / (self.hi - self.lo);
        if !(0.0..=1.0).contains(&t) {
            self.clamped += 1;
        }
        let idx = ((t * bins as f64).floor().max(0.0) as usize).min(bins - 1);
        self.counts[idx] += 1;
        self.samples += 1;
        if v > 1.0 {
            self.exceed_one += 1;
        }
        self.min_value = self.min_value.min(v);
        self.max_value = self.max_value.max(v);
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn edges(&self, i: usize) -> (f64, f64) {
        let w = (self.hi - self.lo) / self.bins() as f64;
        (self.lo + w * i as f64, self.lo + w * (i + 1) as f64)
    }

    pub fn rel_freq(&self) -> Vec<f64> {
        let n = self.samples.max(1) as f64;
        self.counts.iter().map(|&c| c as f64 / n).collect()
    }

    pub fn exceed_fraction(&self) -> f64 {
        self.exceed_one as f64 / self.samples.max(1) as f64
    }
}

/// Dicke additivity score by closed form and by evaluation on the state.
#[derive(Debug, Clone, PartialEq)]
pub struct DickeRow {
    pub n: usize,
    pub r: usize,
    pub kind: CoherenceKind,
    pub closed: f64,
    pub direct: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExperimentResult {
    Table(Vec<TableCell>),
    Histograms(Vec<Histogram>),
    Dicke(Vec<DickeRow>),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunMetadata {
    pub experiment: String,
    pub seed: u64,
    pub samples: usize,
    pub version: String,
    pub wall_time_s: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOutput {
    pub metadata: RunMetadata,
    pub result: ExperimentResult,
}

impl ExperimentOutput {
    /// CSV body. Wall time lives only in the sidecar, so equal seeds give equal bytes.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        match &self.result {
            ExperimentResult::Table(cells) => {
                s.push_str("rank,n_qubits,measure,power,percent_satisfied,samples,seed\n");
                for c in cells {
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{},{},{}",
                        c.rank,
                        c.n_qubits,
                        c.kind.measure,
                        c.kind.power,
                        c.percent(),
                        c.samples,
                        c.seed
                    );
                }
            }
            ExperimentResult::Histograms(hs) => {
                s.push_str("panel,rank,n_qubits,bin_lo,bin_hi,rel_freq\n");
                for h in hs {
                    for (i, f) in h.rel_freq().into_iter().enumerate() {
                        let (lo, hi) = h.edges(i);
                        let _ = writeln!(
                            s,
                            "{},{},{},{:.6},{:.6},{}",
                            h.panel.letter(),
                            h.rank,
                            h.n_qubits,
                            lo,
                            hi,
                            f
                        );
                    }
                }
            }
            ExperimentResult::Dicke(rows) => {
                s.push_str("n,r,measure,normalized,delta_closed,delta_direct\n");
                for r in rows {
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{},{}",
                        r.n,
                        r.r,
                        r.kind.measure,
                        r.kind.is_normalized(),
                        r.closed,
                        r.direct
                    );
                }
            }
        }
        s
    }

    pub fn metadata_json(&self) -> String {
        serde_json::to_string_pretty(&self.metadata).expect("metadata serializes")
    }

    /// Writes the CSV to `path` and the metadata to the sidecar path; returns the sidecar path.
    pub fn write(&self, path: &Path) -> Result<PathBuf> {
        std::fs::write(path, self.to_csv())?;
        let side = sidecar_path(path);
        std::fs::write(&side, self.metadata_json())?;
        Ok(side)
    }
}

/// `results.csv` -> `results.meta.json`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    path.with_extension("meta.json")
}

/// Seed of the (n, rank) cell; sample `i` of the cell draws from stream `i`.
pub fn cell_seed(seed: u64, n_qubits: usize, rank: usize) -> u64 {
    mix_seed(seed, ((n_qubits as u64) << 32) | rank as u64)
}

/// Induced-measure sample `index` of the (n, rank) cell.
pub fn cell_sample(seed: u64, n_qubits: usize, rank: usize, index: usize) -> Result<DensityMatrix> {
    let mut rng = stream_rng(cell_seed(seed, n_qubits, rank), index as u64);
    random_induced(1 << n_qubits, rank, &mut rng)
}

/// Maps `f` over `0..n` on `workers` threads (0 = rayon default), preserving index order.
pub fn par_map_indexed<T, F>(workers: usize, n: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| QcohError::Config(format!("thread pool: {e}")))?;
    pool.install(|| (0..n).into_par_iter().map(&f).collect())
}

fn metadata(cfg: &ExperimentConfig, samples: usize, started: Instant) -> RunMetadata {
    RunMetadata {
        experiment: cfg.experiment.name().to_string(),
        seed: cfg.seed,
        samples,
        version: env!("CARGO_PKG_VERSION").to_string(),
        wall_time_s: started.elapsed().as_secs_f64(),
    }
}

fn expect_kind(cfg: &ExperimentConfig, kind: ExperimentKind) -> Result<()> {
    cfg.validate()?;
    if cfg.experiment != kind {
        return Err(QcohError::Config(format!("config is for {}, not {kind}", cfg.experiment)));
    }
    Ok(())
}

/// Histograms of the four panel quantities over `samples` states per (rank, n).
pub fn run_tradeoff_histograms(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    expect_kind(cfg, ExperimentKind::TradeoffHistograms)?;
    let started = Instant::now();
    let mut hists = Vec::new();
    for &rank in &cfg.ranks {
        for &n in &cfg.n_qubits {
            let values = par_map_indexed(cfg.workers, cfg.samples, |i| {
                let rho = cell_sample(cfg.seed, n, rank, i)?;
                let prof = StateProfile::new(&rho)?;
                let mut v = [0.0; 4];
                for (slot, p) in v.iter_mut().zip(Panel::ALL) {
                    *slot = prof.tradeoff(p.relation())?;
                }
                Ok(v)
            })?;
            for (k, panel) in Panel::ALL.into_iter().enumerate() {
                let mut h = Histogram::new(panel, rank, n, cfg.bins);
                for v in &values {
                    h.add(v[k]);
                }
                hists.push(h);
            }
        }
    }
    hists.sort_by_key(|h| (h.panel.letter(), h.rank, h.n_qubits));
    Ok(ExperimentOutput {
        metadata: metadata(cfg, cfg.samples, started),
        result: ExperimentResult::Histograms(hists),
    })
}

/// Percentage of states satisfying `δ >= 0` per (rank, n, measure).
pub fn run_additivity_table(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    expect_kind(cfg, ExperimentKind::AdditivityTable)?;
    let started = Instant::now();
    let mut cells = Vec::new();
    for &rank in &cfg.ranks {
        for &n in &cfg.n_qubits {
            let flags = par_map_indexed(cfg.workers, cfg.samples, |i| {
                let rho = cell_sample(cfg.seed, n, rank, i)?;
                let reports = additivity_scores(&rho, cfg.pivot, &cfg.measures)?;
                Ok(reports.iter().map(|r| r.satisfied).collect::<Vec<_>>())
            })?;
            for (k, kind) in cfg.measures.iter().enumerate() {
                cells.push(TableCell {
                    rank,
                    n_qubits: n,
                    kind: *kind,
                    satisfied: flags.iter().filter(|f| f[k]).count(),
                    samples: cfg.samples,
                    seed: cfg.seed,
                });
            }
        }
    }
    Ok(ExperimentOutput {
        metadata: metadata(cfg, cfg.samples, started),
        result: ExperimentResult::Table(cells),
    })
}

/// Dicke scores for `r <= n/2`, closed form next to direct evaluation.
pub fn run_dicke_curves(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    expect_kind(cfg, ExperimentKind::DickeCurves)?;
    let started = Instant::now();
    let mut rows = Vec::new();
    let mut states = 0;
    for &n in &cfg.n_qubits {
        for r in 1..=n / 2 {
            let psi = dicke(n, r)?;
            states += 1;
            for kind in &cfg.measures {
                rows.push(DickeRow {
                    n,
                    r,
                    kind: *kind,
                    closed: dicke_delta_closed_form(n, r, *kind)?,
                    direct: additivity_score_pure(&psi, cfg.pivot.min(n - 1), *kind)?.delta,
                });
            }
        }
    }
    Ok(ExperimentOutput {
        metadata: metadata(cfg, states, started),
        result: ExperimentResult::Dicke(rows),
    })
}

/// Dispatches on `cfg.experiment`. Single-state runs go through [`super::inspect`].
pub fn run(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    match cfg.experiment {
        ExperimentKind::TradeoffHistograms => run_tradeoff_histograms(cfg),
        ExperimentKind::AdditivityTable => run_additivity_table(cfg),
        ExperimentKind::DickeCurves => run_dicke_curves(cfg),
        ExperimentKind::SingleState => Err(QcohError::Config(
            "single_state runs through inspect, not run".into(),
        )),
    }
}
