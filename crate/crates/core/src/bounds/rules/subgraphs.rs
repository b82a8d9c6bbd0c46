use std::f64::consts::PI;

use super::{cert_notice, user_certs};
use crate::bounds::{AnalysisContext, BoundKind, BoundResult, BoundRule, BoundsError, Premise, RuleOutput, Side};
use crate::spectra;
use crate::subgraph::{
    degree_classes, find_join_in_class, longest_induced_chain, max_degree_class, CertificateClaim, CertificateKind,
    DegreeClass, Search, SubgraphCertificate,
};

/// `d + k-chain term`: `d + 2cos(pi/k)`.
pub fn chain_bound(d: usize, k: usize) -> f64 {
    d as f64 + 2.0 * (PI / k as f64).cos()
}

/// `d + n1 + n2 - d_max(join)`.
pub fn join_bound(d: usize, n1: usize, n2: usize, join_d_max: usize) -> f64 {
    (d + n1 + n2) as f64 - join_d_max as f64
}

/// `d + lambda_max(H1) + lambda_max(H2) - d_max(H1 x H2)`.
pub fn product_bound(d: usize, lambda_max_sum: f64, product_d_max: usize) -> f64 {
    d as f64 + lambda_max_sum - product_d_max as f64
}

/// Turns a lower bound on `lambda_max` of `side` into a result: as is for the
/// graph, as an upper bound on `lambda2` for the complement.
fn sided(ctx: &AnalysisContext, side: Side, id: &str, lower: f64, cite: &str) -> BoundResult {
    match side {
        Side::Graph => BoundResult::new(id, BoundKind::LowerLambdaMax, lower, cite),
        Side::Complement => BoundResult::new(
            id,
            BoundKind::UpperLambda2,
            ctx.lambda2_from_complement(lower),
            format!("complement form, lambda2 = n - lambda_max(complement): {cite}"),
        ),
    }
}

fn side_id(base: &str, side: Side) -> String {
    match side {
        Side::Graph => base.to_string(),
        Side::Complement => format!("{base}.complement"),
    }
}

/// Common degree of all `nodes` in `g`, if any.
fn common_degree(ctx: &AnalysisContext, side: Side, nodes: &[usize]) -> Result<usize, BoundsError> {
    let (g, _) = ctx.side(side);
    let d = g.degree(nodes[0]);
    match nodes.iter().find(|&&v| g.degree(v) != d) {
        Some(&v) => Err(BoundsError::Premise(format!(
            "node {v} has degree {} but node {} has degree {d}; all nodes must share one degree",
            g.degree(v),
            nodes[0]
        ))),
        None => Ok(d),
    }
}

fn check_range(ctx: &AnalysisContext, nodes: &[usize]) -> Result<(), BoundsError> {
    if nodes.is_empty() {
        return Err(BoundsError::Premise("empty node set".into()));
    }
    match nodes.iter().find(|&&v| v >= ctx.n()) {
        Some(v) => Err(BoundsError::Premise(format!("node {v} out of range for {} nodes", ctx.n()))),
        None => Ok(()),
    }
}

const CITE_2: &str = "induced subgraph H1 on nodes of common degree d: lambda_max >= d + lambda_max(H1) - d_max(H1)";

pub struct Theorem2;

/// The subgraph bound for the induced subgraph on `h1`, all of whose nodes
/// have degree `class.degree` in the `side` graph.
pub fn rule_theorem2(
    ctx: &AnalysisContext,
    side: Side,
    class: &DegreeClass,
    h1: &[usize],
) -> Result<BoundResult, BoundsError> {
    check_range(ctx, h1)?;
    let (g, _) = ctx.side(side);
    let d = common_degree(ctx, side, h1)?;
    if d != class.degree {
        return Err(BoundsError::Premise(format!("nodes have degree {d}, class has degree {}", class.degree)));
    }
    let sub = g.induced_subgraph(h1).map_err(|e| BoundsError::Premise(e.to_string()))?.graph;
    let top = spectra::laplacian_spectrum(&sub)?.lambda_max();
    let lower = d as f64 + top - sub.degrees().d_max as f64;
    Ok(sided(ctx, side, &side_id("thm2", side), lower, CITE_2)
        .premise(Premise::class(side, class))
        .premise(Premise::NodeSet { side, nodes: h1.to_vec() })
        .premise(Premise::Value { name: "lambda_max_h1", value: top }))
}

impl BoundRule for Theorem2 {
    fn name(&self) -> &'static str {
        "thm2"
    }

    fn description(&self) -> &'static str {
        "bound from the subgraph induced on a degree class, best class per side"
    }

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError> {
        for side in [Side::Graph, Side::Complement] {
            let (g, _) = ctx.side(side);
            let mut best: Option<(f64, BoundResult)> = None;
            for class in degree_classes(g) {
                let b = rule_theorem2(ctx, side, &class, &class.nodes)?;
                let score = match side {
                    Side::Graph => b.value,
                    Side::Complement => -b.value,
                };
                if best.as_ref().is_none_or(|(s, _)| score > *s) {
                    best = Some((score, b));
                }
            }
            if let Some((_, b)) = best {
                out.push(b);
            }
        }
        Ok(())
    }
}

const CITE_3: &str = "induced chain of k nodes in the max-degree class: lambda_max >= d_max + 2cos(pi/k)";

pub struct Theorem3;

/// The chain bound for an induced chain inside the max-degree class of
/// `side`. Non-induced chains are rejected: with chords the bound fails.
pub fn rule_theorem3(ctx: &AnalysisContext, side: Side, chain: &SubgraphCertificate) -> Result<BoundResult, BoundsError> {
    let SubgraphCertificate::Chain { nodes, .. } = chain else {
        return Err(BoundsError::Premise(format!("expected a chain, got {}", chain.kind().as_str())));
    };
    let (g, profile) = ctx.side(side);
    let claim = CertificateClaim::Chain { nodes: nodes.clone() };
    let verified = claim.verify(g).map_err(|e| BoundsError::Premise(e.to_string()))?;
    let SubgraphCertificate::Chain { induced, .. } = verified else { unreachable!() };
    if !induced {
        return Err(BoundsError::Premise("chain has a chord; the chain bound needs an induced chain".into()));
    }
    let class = max_degree_class(g);
    class.contains_all(g, &verified).map_err(|e| BoundsError::Premise(e.to_string()))?;
    Ok(sided(ctx, side, &side_id("thm3", side), chain_bound(profile.d_max, nodes.len()), CITE_3)
        .premise(Premise::class(side, &class))
        .premise(Premise::Certificate { side, certificate: verified }))
}

impl BoundRule for Theorem3 {
    fn name(&self) -> &'static str {
        "thm3"
    }

    fn description(&self) -> &'static str {
        "bound from the longest induced chain in the max-degree class"
    }

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError> {
        for side in [Side::Graph, Side::Complement] {
            let class = max_degree_class(ctx.side(side).0);
            match longest_induced_chain(&class.subgraph, &ctx.config.limits) {
                Search::Found(c) => out.push(rule_theorem3(ctx, side, &class.lift(&c))?),
                Search::Undecided { nodes, cutoff } => out.notice(format!(
                    "thm3: {} max-degree class has {nodes} nodes, above the search cutoff {cutoff}; chain search skipped",
                    side.as_str()
                )),
                Search::Absent => {}
            }
        }
        for uc in user_certs(ctx, &[CertificateKind::Chain]) {
            let CertificateClaim::Chain { nodes } = &uc.claim else { continue };
            let chain = SubgraphCertificate::Chain { nodes: nodes.clone(), induced: true, exhaustive: true };
            match rule_theorem3(ctx, Side::Graph, &chain) {
                Ok(mut b) => {
                    b.rule_id = "thm3.cert".into();
                    out.push(b);
                }
                Err(e) => out.notice(cert_notice(uc, e)),
            }
        }
        Ok(())
    }
}

const CITE_4: &str = "induced join H1 + H2 on nodes of common degree d: lambda_max >= d + n1 + n2 - d_max(join)";

pub struct Theorem4;

/// The join bound for a join on nodes of one degree in the `side` graph.
pub fn rule_theorem4(ctx: &AnalysisContext, side: Side, join: &SubgraphCertificate) -> Result<BoundResult, BoundsError> {
    let SubgraphCertificate::Join { parts, .. } = join else {
        return Err(BoundsError::Premise(format!("expected a join, got {}", join.kind().as_str())));
    };
    let (g, _) = ctx.side(side);
    let claim = CertificateClaim::Join { parts: parts.clone() };
    let verified = claim.verify(g).map_err(|e| BoundsError::Premise(e.to_string()))?;
    let SubgraphCertificate::Join { join_d_max, .. } = verified else { unreachable!() };
    let d = common_degree(ctx, side, &verified.nodes())?;
    let value = join_bound(d, parts[0].len(), parts[1].len(), join_d_max);
    Ok(sided(ctx, side, &side_id("thm4", side), value, CITE_4)
        .premise(Premise::Certificate { side, certificate: verified }))
}

impl BoundRule for Theorem4 {
    fn name(&self) -> &'static str {
        "thm4"
    }

    fn description(&self) -> &'static str {
        "bound from the largest join inside a degree class, best class per side"
    }

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError> {
        for side in [Side::Graph, Side::Complement] {
            let mut best: Option<(f64, BoundResult)> = None;
            let mut skipped = Vec::new();
            for class in degree_classes(ctx.side(side).0) {
                match find_join_in_class(&class, &ctx.config.limits) {
                    Search::Found(c) => {
                        let b = rule_theorem4(ctx, side, &c)?;
                        let score = match side {
                            Side::Graph => b.value,
                            Side::Complement => -b.value,
                        };
                        if best.as_ref().is_none_or(|(s, _)| score > *s) {
                            best = Some((score, b));
                        }
                    }
                    Search::Undecided { .. } => skipped.push(class.degree),
                    Search::Absent => {}
                }
            }
            if !skipped.is_empty() {
                out.notice(format!(
                    "thm4: {} classes of degree {:?} exceed the search cutoff {}; join search skipped there",
                    side.as_str(),
                    skipped,
                    ctx.config.limits.max_search_nodes
                ));
            }
            if let Some((_, b)) = best {
                out.push(b);
            }
        }
        for uc in user_certs(ctx, &[CertificateKind::Join]) {
            let CertificateClaim::Join { parts } = &uc.claim else { continue };
            let join = SubgraphCertificate::Join { parts: parts.clone(), join_d_max: 0 };
            match rule_theorem4(ctx, Side::Graph, &join) {
                Ok(mut b) => {
                    b.rule_id = "thm4.cert".into();
                    out.push(b);
                }
                Err(e) => out.notice(cert_notice(uc, e)),
            }
        }
        Ok(())
    }
}

const CITE_5: &str = "induced product H1 x H2 on nodes of common degree d: \
                      lambda_max >= d + lambda_max(H1) + lambda_max(H2) - d_max(H1 x H2)";

pub struct Theorem5;

/// The product bound for a claimed embedding of `H1 x H2` into the graph.
/// The image must be induced and lie in one degree class.
pub fn rule_theorem5_product(ctx: &AnalysisContext, claim: &CertificateClaim) -> Result<BoundResult, BoundsError> {
    if !matches!(claim, CertificateClaim::Product { .. }) {
        return Err(BoundsError::Premise(format!("expected a product, got {}", claim.kind().as_str())));
    }
    let verified = claim.verify(&ctx.graph).map_err(|e| BoundsError::Premise(e.to_string()))?;
    let SubgraphCertificate::Product { lambda_max_sum, product_d_max, induced, ref embedding, .. } = verified else {
        unreachable!()
    };
    if !induced {
        return Err(BoundsError::Premise(
            "product image is not induced: the host has extra edges among the image nodes".into(),
        ));
    }
    check_range(ctx, embedding)?;
    let d = common_degree(ctx, Side::Graph, embedding)?;
    Ok(BoundResult::new("thm5.product", BoundKind::LowerLambdaMax, product_bound(d, lambda_max_sum, product_d_max), CITE_5)
        .premise(Premise::Value { name: "lambda_max_sum", value: lambda_max_sum })
        .premise(Premise::Certificate { side: Side::Graph, certificate: verified }))
}

impl BoundRule for Theorem5 {
    fn name(&self) -> &'static str {
        "thm5"
    }

    fn description(&self) -> &'static str {
        "bound from a certified induced Cartesian product on one degree class"
    }

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError> {
        for uc in user_certs(ctx, &[CertificateKind::Product]) {
            match rule_theorem5_product(ctx, &uc.claim) {
                Ok(b) => out.push(b),
                Err(e) => out.notice(cert_notice(uc, e)),
            }
        }
        Ok(())
    }
}
