use crate::bounds::{AnalysisContext, BoundKind, BoundResult, BoundRule, BoundsError, Premise, RuleOutput, Side};
use crate::spectra;
use crate::subgraph::max_degree_class;

pub struct Corollary1;

/// Classifies `lambda2` against `d_min` and checks the implied connectivity
/// facts against graph traversal.
pub fn rule_corollary1(ctx: &AnalysisContext) -> Result<BoundResult, BoundsError> {
    let l2 = ctx.sync.lambda2;
    let d_min = ctx.degrees.d_min as f64;
    let tol = ctx.config.eq_tol;
    let both_connected = ctx.complement_connected;
    let label = if (l2 - d_min).abs() < tol {
        // lambda2 = d_min forces G or its complement to be disconnected.
        if both_connected {
            return Err(BoundsError::NumericalHealth(format!(
                "lambda2 = d_min = {d_min} but the graph and its complement are both connected"
            )));
        }
        "lambda2_equals_dmin"
    } else if l2 > d_min {
        if !ctx.graph.is_complete() {
            return Err(BoundsError::NumericalHealth(format!(
                "lambda2 = {l2} exceeds d_min = {d_min} on a non-complete graph"
            )));
        }
        "lambda2_gt_dmin"
    } else if both_connected {
        "both_connected"
    } else {
        "lambda2_lt_dmin"
    };
    let mut b = BoundResult::new(
        "cor1",
        BoundKind::Classification,
        l2 - d_min,
        "lambda2 = d_min implies the graph or its complement is disconnected; \
         lambda2 > d_min implies a complete graph; if both are connected then lambda2 < d_min",
    )
    .premise(Premise::Value { name: "lambda2_minus_dmin", value: l2 - d_min });
    b.label = Some(label.to_string());
    Ok(b)
}

impl BoundRule for Corollary1 {
    fn name(&self) -> &'static str {
        "cor1"
    }

    fn description(&self) -> &'static str {
        "classification of lambda2 against the minimum degree"
    }

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError> {
        out.push(rule_corollary1(ctx)?);
        Ok(())
    }
}

pub struct Corollary2;

/// `r <= d_min / lambda_max(G1)` for the induced subgraph on `sub` (host
/// indices), and `r < d_min / (d_max + 1)` when the graph and its complement
/// are both connected.
///
/// The subgraph form needs `lambda2 <= d_min`, which fails only for complete
/// graphs, so it is skipped there. It is strict only when both graphs are
/// connected; a star attains it with `G1 = G`.
pub fn rule_corollary2(ctx: &AnalysisContext, sub: Option<&[usize]>) -> Result<Vec<BoundResult>, BoundsError> {
    let mut out = Vec::new();
    let d_min = ctx.degrees.d_min as f64;
    let both = ctx.complement_connected;
    if let Some(nodes) = sub {
        if ctx.graph.is_complete() {
            return Err(BoundsError::Premise("complete graph: lambda2 exceeds d_min".into()));
        }
        let g1 = ctx
            .graph
            .induced_subgraph(nodes)
            .map_err(|e| BoundsError::Premise(e.to_string()))?;
        let top = spectra::laplacian_spectrum(&g1.graph)?.lambda_max();
        if top > ctx.config.eq_tol {
            let mut sorted = nodes.to_vec();
            sorted.sort_unstable();
            out.push(
                BoundResult::new(
                    "cor2.subgraph",
                    BoundKind::UpperR,
                    d_min / top,
                    "induced subgraph G1: lambda_max(G) >= lambda_max(G1), so r <= d_min / lambda_max(G1)",
                )
                .strict(both)
                .premise(Premise::Value { name: "lambda_max_g1", value: top })
                .premise(Premise::NodeSet { side: Side::Graph, nodes: sorted }),
            );
        }
    }
    if both {
        out.push(
            BoundResult::new(
                "cor2.both_connected",
                BoundKind::UpperR,
                d_min / (ctx.degrees.d_max as f64 + 1.0),
                "graph and complement both connected: r < d_min / (d_max + 1)",
            )
            .strict(true),
        );
    }
    Ok(out)
}

impl BoundRule for Corollary2 {
    fn name(&self) -> &'static str {
        "cor2"
    }

    fn description(&self) -> &'static str {
        "eigenratio bounds from an induced subgraph and from double connectivity"
    }

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError> {
        let sub = (!ctx.graph.is_complete()).then(|| max_degree_class(&ctx.graph).nodes);
        for b in rule_corollary2(ctx, sub.as_deref())? {
            out.push(b);
        }
        Ok(())
    }
}

pub struct Corollary3;

/// With `alpha = lambda_max(G^c) - d_max(G^c)`: `lambda2 = d_min + 1 - alpha`
/// exactly, and `r <= (d_min + 1 - alpha) / (d_max + 1)`.
pub fn rule_corollary3(ctx: &AnalysisContext) -> Result<Vec<BoundResult>, BoundsError> {
    let alpha = ctx.complement_spectrum.lambda_max() - ctx.complement_degrees.d_max as f64;
    let predicted = ctx.degrees.d_min as f64 + 1.0 - alpha;
    if (predicted - ctx.sync.lambda2).abs() > ctx.config.eq_tol {
        return Err(BoundsError::NumericalHealth(format!(
            "complement predicts lambda2 = {predicted}, eigensolver gives {}",
            ctx.sync.lambda2
        )));
    }
    let premise = Premise::Value { name: "alpha", value: alpha };
    Ok(vec![
        BoundResult::new(
            "cor3",
            BoundKind::ExactLambda2,
            predicted,
            "lambda_max(complement) = d_max(complement) + alpha gives lambda2 = d_min + 1 - alpha",
        )
        .premise(premise.clone()),
        BoundResult::new(
            "cor3",
            BoundKind::UpperR,
            predicted / (ctx.degrees.d_max as f64 + 1.0),
            "r <= (d_min + 1 - alpha) / (d_max + 1)",
        )
        .premise(premise),
    ])
}

impl BoundRule for Corollary3 {
    fn name(&self) -> &'static str {
        "cor3"
    }

    fn description(&self) -> &'static str {
        "exact lambda2 from the complement's largest eigenvalue"
    }

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError> {
        for b in rule_corollary3(ctx)? {
            out.push(b);
        }
        Ok(())
    }
}
