use serde::{Deserialize, Serialize};

use super::{build_family, InputError};
use crate::graph::Graph;
use crate::subgraph::{CertificateClaim, CertificateKind};

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct CertificateFile {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nodes: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parts: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    factor_a: Option<FactorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    factor_b: Option<FactorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    embedding: Option<Vec<usize>>,
}

/// A product factor, either explicit or a named family.
#[derive(Debug, Deserialize, Serialize)]
#[serde(untagged, deny_unknown_fields)]
enum FactorSpec {
    Explicit { n: usize, edges: Vec<[usize; 2]> },
    Family { family: String, params: Vec<usize> },
}

fn schema(msg: impl Into<String>) -> InputError {
    InputError::Schema(msg.into())
}

impl FactorSpec {
    fn build(&self, name: &str) -> Result<Graph, InputError> {
        match self {
            FactorSpec::Explicit { n, edges } => {
                let pairs: Vec<_> = edges.iter().map(|e| (e[0], e[1])).collect();
                Graph::from_edge_list(*n, &pairs).map_err(|e| schema(format!("{name}: {e}")))
            }
            FactorSpec::Family { family, params } => {
                build_family(family, params).map_err(|e| schema(format!("{name}: {e}")))
            }
        }
    }
}

fn check_range(field: &str, nodes: &[usize], host_n: usize) -> Result<(), InputError> {
    match nodes.iter().find(|&&v| v >= host_n) {
        Some(v) => Err(schema(format!("{field}: node {v} out of range for host with {host_n} nodes"))),
        None => Ok(()),
    }
}

/// Parses a certificate file against a host with `host_n` nodes. The result
/// is schema-valid but not yet verified against the host's edges.
pub fn parse_certificate(text: &str, host_n: usize) -> Result<CertificateClaim, InputError> {
    let file: CertificateFile = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
    let kind = CertificateKind::parse(&file.kind).ok_or_else(|| schema(format!("unknown kind '{}'", file.kind)))?;
    let allowed: &[&str] = match kind {
        CertificateKind::Join => &["parts"],
        CertificateKind::Product => &["factor_a", "factor_b", "embedding"],
        _ => &["nodes"],
    };
    let present = [
        ("nodes", file.nodes.is_some()),
        ("parts", file.parts.is_some()),
        ("factor_a", file.factor_a.is_some()),
        ("factor_b", file.factor_b.is_some()),
        ("embedding", file.embedding.is_some()),
    ];
    if let Some((field, _)) = present.iter().find(|(f, p)| *p && !allowed.contains(f)) {
        return Err(schema(format!("field '{field}' does not apply to kind {}", kind.as_str())));
    }
    let missing = |field: &str| schema(format!("kind {} requires '{field}'", kind.as_str()));
    Ok(match kind {
        CertificateKind::EvenCycle | CertificateKind::OddCycle | CertificateKind::Chain | CertificateKind::DisconnectedSet => {
            let nodes = file.nodes.ok_or_else(|| missing("nodes"))?;
            check_range("nodes", &nodes, host_n)?;
            match kind {
                CertificateKind::EvenCycle => CertificateClaim::Cycle { nodes, even: Some(true) },
                CertificateKind::OddCycle => CertificateClaim::Cycle { nodes, even: Some(false) },
                CertificateKind::Chain => CertificateClaim::Chain { nodes },
                _ => CertificateClaim::DisconnectedSet { nodes },
            }
        }
        CertificateKind::Join => {
            let parts = file.parts.ok_or_else(|| missing("parts"))?;
            let [a, b]: [Vec<usize>; 2] =
                parts.try_into().map_err(|p: Vec<_>| schema(format!("parts must have 2 entries, got {}", p.len())))?;
            check_range("parts", &a, host_n)?;
            check_range("parts", &b, host_n)?;
            CertificateClaim::Join { parts: [a, b] }
        }
        CertificateKind::Product => {
            let factor_a = file.factor_a.ok_or_else(|| missing("factor_a"))?.build("factor_a")?;
            let factor_b = file.factor_b.ok_or_else(|| missing("factor_b"))?.build("factor_b")?;
            let size = factor_a.node_count() * factor_b.node_count();
            let embedding = file.embedding.unwrap_or_else(|| (0..size).collect());
            check_range("embedding", &embedding, host_n)?;
            CertificateClaim::Product { factor_a, factor_b, embedding }
        }
    })
}

/// Serializes a claim; product factors are written explicitly.
pub fn write_certificate(claim: &CertificateClaim) -> String {
    let explicit = |g: &Graph| FactorSpec::Explicit {
        n: g.node_count(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
    };
    let mut file = CertificateFile {
        kind: claim.kind().as_str().to_string(),
        nodes: None,
        parts: None,
        factor_a: None,
        factor_b: None,
        embedding: None,
    };
    match claim {
        CertificateClaim::Cycle { nodes, .. }
        | CertificateClaim::Chain { nodes }
        | CertificateClaim::DisconnectedSet { nodes } => file.nodes = Some(nodes.clone()),
        CertificateClaim::Join { parts } => file.parts = Some(parts.to_vec()),
        CertificateClaim::Product { factor_a, factor_b, embedding } => {
            file.factor_a = Some(explicit(factor_a));
            file.factor_b = Some(explicit(factor_b));
            file.embedding = Some(embedding.clone());
        }
    }
    serde_json::to_string(&file).expect("certificate serializes")
}
