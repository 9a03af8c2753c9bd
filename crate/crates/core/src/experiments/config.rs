use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{QcohError, Result};
use crate::measures::{CoherenceKind, CoherenceMeasure};

/// Sample count of the paper preset.
pub const PAPER_SAMPLES: usize = 20_000;
/// Sample count of the CI preset.
pub const CI_SAMPLES: usize = 2_000;
pub const DEFAULT_BINS: usize = 50;
pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExperimentKind {
    TradeoffHistograms,
    AdditivityTable,
    DickeCurves,
    SingleState,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::TradeoffHistograms => "tradeoff_histograms",
            Self::AdditivityTable => "additivity_table",
            Self::DickeCurves => "dicke_curves",
            Self::SingleState => "single_state",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = QcohError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "tradeoff_histograms" | "histograms" => Ok(Self::TradeoffHistograms),
            "additivity_table" | "table" => Ok(Self::AdditivityTable),
            "dicke_curves" | "dicke" => Ok(Self::DickeCurves),
            "single_state" | "inspect" => Ok(Self::SingleState),
            other => Err(QcohError::Config(format!("unknown experiment '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Paper,
    Ci,
}

impl Preset {
    pub fn samples(self) -> usize {
        match self {
            Preset::Paper => PAPER_SAMPLES,
            Preset::Ci => CI_SAMPLES,
        }
    }
}

impl FromStr for Preset {
    type Err = QcohError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "paper" => Ok(Preset::Paper),
            "ci" => Ok(Preset::Ci),
            other => Err(QcohError::Config(format!("unknown preset '{other}'"))),
        }
    }
}

/// Everything a run needs. Built from defaults, a key=value file and CLI overrides.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub n_qubits: Vec<usize>,
    pub ranks: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    pub measures: Vec<CoherenceKind>,
    pub bins: usize,
    pub out: Option<PathBuf>,
    pub pivot: usize,
    /// Worker threads; 0 lets rayon decide.
    pub workers: usize,
}

/// The five normalized table columns: `C_l1`, `C_l1²`, `C_l1³`, `C_r`, `C_r²`.
pub fn table_measures() -> Vec<CoherenceKind> {
    let l1 = CoherenceKind::new(CoherenceMeasure::L1).normalized();
    let cr = CoherenceKind::new(CoherenceMeasure::RelativeEntropy).normalized();
    vec![l1, l1.with_power(2), l1.with_power(3), cr, cr.with_power(2)]
}

impl ExperimentConfig {
    /// Paper-scale defaults for `experiment`.
    pub fn defaults(experiment: ExperimentKind) -> Self {
        let (n_qubits, ranks, measures) = match experiment {
            ExperimentKind::TradeoffHistograms => (vec![3, 4], vec![2, 3], Vec::new()),
            ExperimentKind::AdditivityTable => (vec![3, 4, 5], vec![1, 2, 3, 4], table_measures()),
            ExperimentKind::DickeCurves => (
                (3..=10).collect(),
                Vec::new(),
                vec![
                    CoherenceKind::new(CoherenceMeasure::L1).normalized(),
                    CoherenceKind::new(CoherenceMeasure::RelativeEntropy).normalized(),
                ],
            ),
            ExperimentKind::SingleState => (Vec::new(), Vec::new(), Vec::new()),
        };
        Self {
            experiment,
            n_qubits,
            ranks,
            samples: PAPER_SAMPLES,
            seed: DEFAULT_SEED,
            measures,
            bins: DEFAULT_BINS,
            out: None,
            pivot: 0,
            workers: 0,
        }
    }

    pub fn with_preset(mut self, preset: Preset) -> Self {
        self.samples = preset.samples();
        self
    }

    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| QcohError::Config(format!("bad value '{value}' for {what}"));
        match key.trim() {
            "experiment" => self.experiment = value.parse()?,
            "qubits" | "n_qubits" => self.n_qubits = parse_list(value)?,
            "ranks" => self.ranks = parse_list(value)?,
            "samples" => self.samples = value.trim().parse().map_err(|_| bad("samples"))?,
            "seed" => self.seed = value.trim().parse().map_err(|_| bad("seed"))?,
            "bins" => self.bins = value.trim().parse().map_err(|_| bad("bins"))?,
            "pivot" => self.pivot = value.trim().parse().map_err(|_| bad("pivot"))?,
            "workers" => self.workers = value.trim().parse().map_err(|_| bad("workers"))?,
            "out" | "output" => self.out = Some(PathBuf::from(value.trim())),
            "preset" => self.samples = value.parse::<Preset>()?.samples(),
            "measures" => self.measures = parse_measures(value)?,
            other => return Err(QcohError::Config(format!("unknown key '{other}'"))),
        }
        Ok(())
    }

    /// Loads a flat `key = value` file over the defaults of the experiment it names.
    /// `fallback` is used when the file has no `experiment` key.
    pub fn from_file(path: &Path, fallback: ExperimentKind) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_kv_text(&text, fallback)
    }

    pub fn from_kv_text(text: &str, fallback: ExperimentKind) -> Result<Self> {
        let pairs = parse_kv(text)?;
        let experiment = match pairs.iter().find(|(k, _)| k == "experiment") {
            Some((_, v)) => v.parse()?,
            None => fallback,
        };
        let mut cfg = Self::defaults(experiment);
        // preset first so an explicit `samples` wins regardless of line order
        for (k, v) in pairs.iter().filter(|(k, _)| k == "preset") {
            cfg.set(k, v)?;
        }
        for (k, v) in pairs.iter().filter(|(k, _)| k != "preset" && k != "experiment") {
            cfg.set(k, v)?;
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(QcohError::Config(msg));
        if self.samples == 0 {
            return fail("samples must be at least 1".into());
        }
        match self.experiment {
            ExperimentKind::TradeoffHistograms | ExperimentKind::AdditivityTable => {
                if self.n_qubits.is_empty() || self.ranks.is_empty() {
                    return fail("qubits and ranks must be non-empty".into());
                }
                let min_n = if self.experiment == ExperimentKind::AdditivityTable { 3 } else { 1 };
                for &n in &self.n_qubits {
                    if n < min_n || n > 10 {
                        return fail(format!("qubit count {n} outside {min_n}..=10"));
                    }
                    for &r in &self.ranks {
                        if r == 0 || r > 1 << n {
                            return fail(format!("rank {r} invalid for {n} qubits"));
                        }
                    }
                    if self.experiment == ExperimentKind::AdditivityTable && self.pivot >= n {
                        return fail(format!("pivot {} out of range for {n} qubits", self.pivot));
                    }
                }
                if self.experiment == ExperimentKind::TradeoffHistograms && self.bins < 2 {
                    return fail("bins must be at least 2".into());
                }
                if self.experiment == ExperimentKind::AdditivityTable && self.measures.is_empty() {
                    return fail("no measures selected".into());
                }
            }
            ExperimentKind::DickeCurves => {
                if self.n_qubits.iter().any(|&n| !(3..=12).contains(&n)) {
                    return fail("Dicke curves need 3 <= n <= 12".into());
                }
            }
            ExperimentKind::SingleState => {}
        }
        Ok(())
    }

    /// Settings outside the ranges the published figures and table cover.
    /// They run normally; callers may print these as notes.
    pub fn extensions(&self) -> Vec<String> {
        let (qs, rs): (&[usize], &[usize]) = match self.experiment {
            ExperimentKind::TradeoffHistograms => (&[3, 4], &[2, 3]),
            ExperimentKind::AdditivityTable => (&[3, 4, 5], &[1, 2, 3, 4]),
            _ => return Vec::new(),
        };
        let mut notes = Vec::new();
        for n in self.n_qubits.iter().filter(|n| !qs.contains(n)) {
            notes.push(format!("{n} qubits is an extension for {}", self.experiment));
        }
        for r in self.ranks.iter().filter(|r| !rs.contains(r)) {
            notes.push(format!("rank {r} is an extension for {}", self.experiment));
        }
        notes
    }
}

/// Parses `3,4,5`, `1-4` or mixtures such as `1-3,6`.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    let bad = || QcohError::Config(format!("bad list '{s}'"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once('-') {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

/// Parses `l1,l1^2,cr^2`: normalized kinds with an optional power.
pub fn parse_measures(s: &str) -> Result<Vec<CoherenceKind>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (name, power) = match p.split_once('^') {
                Some((n, k)) => (
                    n,
                    k.trim()
                        .parse::<u32>()
                        .ok()
                        .filter(|&k| k >= 1)
                        .ok_or_else(|| QcohError::Config(format!("bad power in '{p}'")))?,
                ),
                None => (p, 1),
            };
            Ok(CoherenceKind::new(name.trim().parse()?).normalized().with_power(power))
        })
        .collect()
}

fn parse_kv(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| QcohError::Config(format!("line {}: expected key = value", lineno + 1)))?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}
