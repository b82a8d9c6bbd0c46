//! File formats: edge lists, certificates, named graph families and JSON
//! reports.

mod cert;
mod edgelist;
mod family;
mod report;

pub use cert::{parse_certificate, write_certificate};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use family::{build_family, parse_family_spec};
pub use report::{
    render_spectrum_text, render_text, report_document, round_sig, spectrum_document, to_json, BoundEntry,
    GraphEntry, ReportDocument, FORMAT_VERSION,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing 'nodes <N>' header")]
    MissingHeader,
    #[error("schema error: {0}")]
    Schema(String),
    #[error("invalid family spec: {0}")]
    Family(String),
}
