use super::{cert_notice, user_certs};
use crate::bounds::{AnalysisContext, BoundKind, BoundResult, BoundRule, BoundsError, Premise, RuleOutput, Side};
use crate::subgraph::{max_disconnected_subgraph, CertificateKind, Search, SubgraphCertificate, SubgraphError};

pub struct Theorem6;

const CITE: &str = "largest disconnected induced subgraph on n1 nodes: lambda2 <= n - n1, \
                    and r <= (n - n1) / (d_max + 1)";

fn from_set(ctx: &AnalysisContext, id: &str, cert: SubgraphCertificate) -> Vec<BoundResult> {
    let n1 = cert.size();
    let up = (ctx.n() - n1) as f64;
    let premise = Premise::Certificate { side: Side::Graph, certificate: cert };
    vec![
        BoundResult::new(id, BoundKind::UpperLambda2, up, CITE).premise(premise.clone()),
        BoundResult::new(id, BoundKind::UpperR, up / (ctx.degrees.d_max as f64 + 1.0), CITE).premise(premise),
    ]
}

/// Bounds from a maximum disconnected induced subgraph, found by exhaustive
/// search. Nothing for complete graphs; `Undecided` above the cutoff.
pub fn rule_theorem6_disconnected(ctx: &AnalysisContext) -> Result<Search<Vec<BoundResult>>, BoundsError> {
    match max_disconnected_subgraph(&ctx.graph, &ctx.config.limits) {
        Ok(s) => Ok(s.map(|cert| from_set(ctx, "thm6.disconnected", cert))),
        Err(SubgraphError::Undecided { nodes, cutoff }) => Ok(Search::Undecided { nodes, cutoff }),
        Err(e) => Err(e.into()),
    }
}

impl BoundRule for Theorem6 {
    fn name(&self) -> &'static str {
        "thm6"
    }

    fn description(&self) -> &'static str {
        "bounds from a maximum disconnected induced subgraph"
    }

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError> {
        match rule_theorem6_disconnected(ctx)? {
            Search::Found(bs) => out.bounds.extend(bs),
            Search::Undecided { nodes, cutoff } => out.notice(format!(
                "thm6: {nodes} nodes exceed the connectivity cutoff {cutoff}; disconnected-set search skipped"
            )),
            Search::Absent => {}
        }
        // Any disconnected induced subgraph gives a valid, possibly weaker,
        // bound.
        for uc in user_certs(ctx, &[CertificateKind::DisconnectedSet]) {
            match uc.claim.verify(&ctx.graph) {
                Ok(cert @ SubgraphCertificate::DisconnectedSet { .. }) => out.bounds.extend(from_set(ctx, "thm6.cert", cert)),
                Ok(_) => unreachable!("claim kind checked"),
                Err(e) => out.notice(cert_notice(uc, e)),
            }
        }
        Ok(())
    }
}
