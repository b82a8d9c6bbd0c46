use crate::bounds::{AnalysisContext, BoundKind, BoundResult, BoundRule, BoundsError, RuleOutput};

pub struct DegreeRatio;

/// `r <= d_min / d_max`.
pub fn rule_degree_ratio(ctx: &AnalysisContext) -> BoundResult {
    let d = &ctx.degrees;
    BoundResult::new(
        "degree_ratio",
        BoundKind::UpperR,
        d.d_min as f64 / d.d_max as f64,
        "r <= d_min / d_max",
    )
}

impl BoundRule for DegreeRatio {
    fn name(&self) -> &'static str {
        "degree_ratio"
    }

    fn description(&self) -> &'static str {
        "coarse eigenratio bound from the degree extremes"
    }

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError> {
        out.push(rule_degree_ratio(ctx));
        Ok(())
    }
}

pub struct Lemma2;

/// `lambda_max >= d_max + 1` for a connected graph.
pub fn rule_lemma2(ctx: &AnalysisContext) -> BoundResult {
    BoundResult::new(
        "lem2",
        BoundKind::LowerLambdaMax,
        ctx.degrees.d_max as f64 + 1.0,
        "connected graph: lambda_max >= d_max + 1, with equality iff d_max = n - 1; \
         this is also the bound available when the only cycles are triangles",
    )
}

impl BoundRule for Lemma2 {
    fn name(&self) -> &'static str {
        "lem2"
    }

    fn description(&self) -> &'static str {
        "largest eigenvalue at least the maximum degree plus one"
    }

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError> {
        out.push(rule_lemma2(ctx));
        Ok(())
    }
}
