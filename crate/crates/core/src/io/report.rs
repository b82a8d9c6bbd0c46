use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds::{AnalysisReport, Premise};
use crate::graph::Graph;
use crate::spectra::{self, SpectraError};
use crate::subgraph::SubgraphCertificate;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphEntry {
    pub n: usize,
    pub edges: usize,
    pub d_min: usize,
    pub d_max: usize,
    pub connected: bool,
    pub complement_connected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub rule_id: String,
    pub kind: String,
    pub value: f64,
    pub strict: bool,
    pub attained: bool,
    pub gap: Option<f64>,
    pub citation: String,
    pub premises: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// The JSON report. Spectrum-only documents leave `bounds` out.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format_version: String,
    pub graph: GraphEntry,
    pub spectrum: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda2: Option<f64>,
    pub lambda_max: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenratio: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<BoundEntry>>,
    pub notices: Vec<String>,
}

/// Rounds to 9 significant digits; magnitudes below `1e-12` become 0.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x.abs() < 1e-12 {
        return 0.0;
    }
    format!("{x:.8e}").parse().expect("formatted float parses")
}

fn premise_json(p: &Premise) -> Value {
    match p {
        Premise::Certificate { side, certificate } => {
            let mut v = json!({
                "type": "certificate",
                "side": side.as_str(),
                "kind": certificate.kind().as_str(),
                "nodes": certificate.nodes(),
            });
            match certificate {
                SubgraphCertificate::Join { parts, .. } => v["parts"] = json!(parts),
                SubgraphCertificate::Chain { induced, .. } => v["induced"] = json!(induced),
                SubgraphCertificate::Product { factor_a, factor_b, .. } => {
                    v["factor_sizes"] = json!([factor_a.node_count(), factor_b.node_count()])
                }
                _ => {}
            }
            v
        }
        Premise::DegreeClass { side, degree, nodes } => json!({
            "type": "degree_class",
            "side": side.as_str(),
            "degree": degree,
            "nodes": nodes,
        }),
        Premise::NodeSet { side, nodes } => json!({ "type": "node_set", "side": side.as_str(), "nodes": nodes }),
        Premise::Value { name, value } => json!({ "type": "value", "name": name, "value": round_sig(*value) }),
    }
}

pub fn report_document(report: &AnalysisReport) -> ReportDocument {
    let s = &report.summary;
    ReportDocument {
        format_version: FORMAT_VERSION.into(),
        graph: GraphEntry {
            n: s.n,
            edges: s.edges,
            d_min: s.d_min,
            d_max: s.d_max,
            connected: s.connected,
            complement_connected: s.complement_connected,
        },
        spectrum: report.spectrum.values().iter().copied().map(round_sig).collect(),
        lambda2: Some(round_sig(report.sync.lambda2)),
        lambda_max: round_sig(report.sync.lambda_max),
        eigenratio: Some(round_sig(report.sync.r)),
        bounds: Some(
            report
                .bounds
                .iter()
                .map(|e| BoundEntry {
                    rule_id: e.bound.rule_id.clone(),
                    kind: e.bound.kind.as_str().into(),
                    value: round_sig(e.bound.value),
                    strict: e.bound.strict,
                    attained: e.attained,
                    gap: e.gap.map(round_sig),
                    citation: e.bound.citation.clone(),
                    premises: e.bound.premises.iter().map(premise_json).collect(),
                    label: e.bound.label.clone(),
                })
                .collect(),
        ),
        notices: report.notices.clone(),
    }
}

/// Spectrum fields only. The eigenratio is omitted, with a notice, when the
/// graph is disconnected or has one node.
pub fn spectrum_document(g: &Graph) -> Result<ReportDocument, SpectraError> {
    let spectrum = spectra::laplacian_spectrum(g)?;
    let degrees = g.degrees();
    let mut notices = Vec::new();
    let eigenratio = match spectra::eigenratio_from(g, &spectrum) {
        Ok(s) => Some(round_sig(s.r)),
        Err(SpectraError::Disconnected) => {
            let components = g.components().len();
            notices.push(format!("graph is disconnected ({components} components); eigenratio omitted"));
            None
        }
        Err(SpectraError::SingleNode) => {
            notices.push("graph has a single node; eigenratio omitted".to_string());
            None
        }
        Err(e) => return Err(e),
    };
    Ok(ReportDocument {
        format_version: FORMAT_VERSION.into(),
        graph: GraphEntry {
            n: g.node_count(),
            edges: g.edge_count(),
            d_min: degrees.d_min,
            d_max: degrees.d_max,
            connected: g.is_connected(),
            complement_connected: g.complement().is_connected(),
        },
        spectrum: spectrum.values().iter().copied().map(round_sig).collect(),
        lambda2: spectrum.lambda2().map(round_sig),
        lambda_max: round_sig(spectrum.lambda_max()),
        eigenratio,
        bounds: None,
        notices,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}

fn num(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| format!("{v:.9}"))
}

fn header(doc: &ReportDocument, s: &mut String) {
    let g = &doc.graph;
    writeln!(
        s,
        "n = {}, edges = {}, d_min = {}, d_max = {}, connected = {}, complement connected = {}",
        g.n, g.edges, g.d_min, g.d_max, g.connected, g.complement_connected
    )
    .unwrap();
    let spec: Vec<String> = doc.spectrum.iter().map(|v| format!("{v:.9}")).collect();
    writeln!(s, "spectrum: {}", spec.join(" ")).unwrap();
    writeln!(
        s,
        "lambda2 = {}, lambda_max = {}, r = {}",
        num(doc.lambda2),
        num(Some(doc.lambda_max)),
        num(doc.eigenratio)
    )
    .unwrap();
}

fn notices(doc: &ReportDocument, s: &mut String) {
    if !doc.notices.is_empty() {
        s.push_str("notices:\n");
        for n in &doc.notices {
            writeln!(s, "  {n}").unwrap();
        }
    }
}

pub fn render_spectrum_text(doc: &ReportDocument) -> String {
    let mut s = String::new();
    header(doc, &mut s);
    notices(doc, &mut s);
    s
}

/// Plain table: rule, kind, bound, exact, gap, attained.
pub fn render_text(doc: &ReportDocument) -> String {
    let mut s = String::new();
    header(doc, &mut s);
    writeln!(s, "{:<22} {:<17} {:>13} {:>13} {:>13}  attained", "rule", "kind", "bound", "exact", "gap").unwrap();
    for b in doc.bounds.iter().flatten() {
        let exact = match b.kind.as_str() {
            "upper_r" => doc.eigenratio,
            "lower_lambda_max" => Some(doc.lambda_max),
            "upper_lambda2" | "exact_lambda2" => doc.lambda2,
            _ => None,
        };
        let bound = match &b.label {
            Some(l) => l.clone(),
            None => format!("{:.9}", b.value),
        };
        writeln!(
            s,
            "{:<22} {:<17} {:>13} {:>13} {:>13}  {}",
            b.rule_id,
            b.kind,
            bound,
            num(exact),
            num(b.gap),
            if b.attained { "yes" } else { "no" }
        )
        .unwrap();
    }
    notices(doc, &mut s);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{evaluate_all, AnalysisConfig};

    #[test]
    fn rounding() {
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333);
        assert_eq!(round_sig(3.618033988749895), 3.61803399);
        assert_eq!(round_sig(-4e-13), 0.0);
        assert_eq!(round_sig(123456789012.0), 123456789000.0);
    }

    #[test]
    fn spectrum_document_c5_and_disconnected() {
        let doc = spectrum_document(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(doc.spectrum, vec![0.0, 1.38196601, 1.38196601, 3.61803399, 3.61803399]);
        assert_eq!(doc.eigenratio, Some(0.381966011));
        let doc = spectrum_document(&Graph::edgeless(3).unwrap()).unwrap();
        assert_eq!(doc.eigenratio, None);
        assert_eq!(doc.notices.len(), 1);
        assert!(!to_json(&doc).contains("\"eigenratio\":"));
    }

    #[test]
    fn report_json_is_stable_and_ordered() {
        let g = Graph::cycle(5).unwrap();
        let a = to_json(&report_document(&evaluate_all(&g, vec![], AnalysisConfig::default()).unwrap()));
        let b = to_json(&report_document(&evaluate_all(&g, vec![], AnalysisConfig::default()).unwrap()));
        assert_eq!(a, b);
        let keys = ["\"format_version\"", "\"graph\"", "\"spectrum\"", "\"lambda2\"", "\"eigenratio\"", "\"bounds\"", "\"notices\""];
        let pos: Vec<usize> = keys.iter().map(|k| a.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        let doc: ReportDocument = serde_json::from_str(&a).unwrap();
        let ids: Vec<&str> = doc.bounds.as_ref().unwrap().iter().map(|b| b.rule_id.as_str()).collect();
        assert!(ids.windows(2).all(|w| w[0] <= w[1]));
        let text = render_text(&doc);
        assert!(text.lines().any(|l| l.starts_with("thm1.ii") && l.ends_with("yes")));
    }
}
