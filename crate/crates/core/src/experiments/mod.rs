//! Seeded Monte Carlo harness: configuration, runners, CSV/JSON output,
//! single-state inspection and the published table values.

pub mod config;
pub mod inspect;
pub mod reference;
pub mod runner;

pub use config::{parse_list, parse_measures, table_measures, ExperimentConfig, ExperimentKind, Preset};
pub use inspect::{inspect, named_state, state_from_file, StateReport};
pub use runner::{
    cell_sample, cell_seed, run, run_additivity_table, run_dicke_curves, run_tradeoff_histograms, sidecar_path,
    DickeRow, ExperimentOutput, ExperimentResult, Histogram, Panel, RunMetadata, TableCell,
};
