//! Laplacian spectra, eigenratio bounds and their evaluation.
//!
//! A network's synchronizability is summarized by the eigenratio
//! `r = lambda2 / lambda_max` of its Laplacian. This crate computes exact
//! spectra, searches for the subgraph structures that drive a family of
//! bounds on `lambda2`, `lambda_max` and `r`, and reports each bound next to
//! the exact value it constrains.

pub mod bounds;
pub mod graph;
pub mod io;
pub mod spectra;
pub mod subgraph;

pub use bounds::{evaluate_all, AnalysisConfig, AnalysisReport, BoundKind, BoundResult, RuleRegistry};
pub use graph::{Graph, GraphError};
pub use spectra::{eigenratio, laplacian_spectrum, Spectrum, SyncIndex};
