use super::{cert_notice, user_certs};
use crate::bounds::{
    AnalysisContext, BoundKind, BoundResult, BoundRule, BoundsError, OddCycleTerm, Premise, RuleOutput, Side,
};
use crate::subgraph::{
    find_induced_even_cycle, longest_induced_odd_cycle, max_degree_class, CertificateKind, DegreeClass, Search,
    SubgraphCertificate,
};

pub struct Theorem1;

/// What the max-degree class of one side contains.
enum CycleWitness {
    Even(SubgraphCertificate),
    Odd(SubgraphCertificate, OddCycleTerm),
}

impl CycleWitness {
    fn is_even(&self) -> bool {
        matches!(self, CycleWitness::Even(_))
    }

    fn cert(&self) -> &SubgraphCertificate {
        match self {
            CycleWitness::Even(c) | CycleWitness::Odd(c, _) => c,
        }
    }

    fn from_cert(cert: SubgraphCertificate) -> Self {
        let n = cert.size();
        match OddCycleTerm::new(n) {
            Some(t) => CycleWitness::Odd(cert, t),
            None => CycleWitness::Even(cert),
        }
    }

    /// Lower bound on `lambda_max` of the side the cycle lives in, minus
    /// that side's `d_max`.
    fn excess(&self) -> f64 {
        match self {
            CycleWitness::Even(_) => 2.0,
            CycleWitness::Odd(_, t) => 1.0 - t.delta,
        }
    }
}

fn search_side(ctx: &AnalysisContext, side: Side, out: &mut RuleOutput) -> Option<(CycleWitness, DegreeClass)> {
    let (g, _) = ctx.side(side);
    let class = max_degree_class(g);
    let limits = &ctx.config.limits;
    let undecided = |out: &mut RuleOutput, nodes, cutoff| {
        out.notice(format!(
            "thm1: {} max-degree class has {nodes} nodes, above the search cutoff {cutoff}; cycle search skipped",
            side.as_str()
        ));
    };
    match find_induced_even_cycle(&class.subgraph, limits) {
        Search::Found(c) => return Some((CycleWitness::Even(class.lift(&c)), class)),
        Search::Undecided { nodes, cutoff } => {
            undecided(out, nodes, cutoff);
            return None;
        }
        Search::Absent => {}
    }
    match longest_induced_odd_cycle(&class.subgraph, limits) {
        Search::Found(c) => Some((CycleWitness::from_cert(class.lift(&c)), class)),
        Search::Undecided { nodes, cutoff } => {
            undecided(out, nodes, cutoff);
            None
        }
        Search::Absent => None,
    }
}

fn premises(side: Side, w: &CycleWitness, class: &DegreeClass) -> Vec<Premise> {
    vec![Premise::class(side, class), Premise::Certificate { side, certificate: w.cert().clone() }]
}

fn lower_lambda_max(ctx: &AnalysisContext, w: &CycleWitness) -> f64 {
    ctx.degrees.d_max as f64 + w.excess()
}

/// An induced cycle in the complement's max-degree class bounds
/// `lambda_max(G^c)` from below and hence `lambda2 = n - lambda_max(G^c)`
/// from above: `d_min - 1` for even cycles, `d_min + delta(n2)` for odd.
fn upper_lambda2(ctx: &AnalysisContext, w: &CycleWitness) -> f64 {
    ctx.lambda2_from_complement(ctx.complement_degrees.d_max as f64 + w.excess())
}

const CITE_G: &str = "induced cycle in the max-degree class: lambda_max >= d_max + 2 if even, \
                      d_max + 1 - delta(n1) if odd of length n1, delta(n) = 1 - 2cos(pi/n)";
const CITE_GC: &str = "induced cycle in the complement's max-degree class: lambda2 <= d_min - 1 if even, \
                       d_min + delta(n2) if odd of length n2";

/// Cycle-based bounds from the max-degree classes of the graph and of its
/// complement, plus bounds from user cycle certificates.
pub fn rule_theorem1(ctx: &AnalysisContext) -> Result<RuleOutput, BoundsError> {
    let mut out = RuleOutput::default();
    let graph_side = search_side(ctx, Side::Graph, &mut out);
    let comp_side = if ctx.graph.is_complete() { None } else { search_side(ctx, Side::Complement, &mut out) };

    match (&graph_side, &comp_side) {
        (Some((wg, cg)), Some((wc, cc))) => {
            let id = match (wg.is_even(), wc.is_even()) {
                (true, true) => "thm1.i",
                (false, false) => "thm1.ii",
                (true, false) => "thm1.iii",
                (false, true) => "thm1.iv",
            };
            let low = lower_lambda_max(ctx, wg);
            let up = upper_lambda2(ctx, wc);
            let mut ps = premises(Side::Graph, wg, cg);
            ps.extend(premises(Side::Complement, wc, cc));
            let mk = |kind, value, cite: String| {
                let mut b = BoundResult::new(id, kind, value, cite);
                b.premises = ps.clone();
                b
            };
            out.push(mk(BoundKind::LowerLambdaMax, low, CITE_G.to_string()));
            out.push(mk(BoundKind::UpperLambda2, up, CITE_GC.to_string()));
            out.push(mk(BoundKind::UpperR, up / low, "r <= (lambda2 upper bound) / (lambda_max lower bound)".into()));
        }
        (Some((wg, cg)), None) => {
            let mut b = BoundResult::new("thm1.graph_side", BoundKind::LowerLambdaMax, lower_lambda_max(ctx, wg), CITE_G);
            b.premises = premises(Side::Graph, wg, cg);
            out.push(b);
        }
        (None, Some((wc, cc))) => {
            let mut b =
                BoundResult::new("thm1.complement_side", BoundKind::UpperLambda2, upper_lambda2(ctx, wc), CITE_GC);
            b.premises = premises(Side::Complement, wc, cc);
            out.push(b);
        }
        (None, None) => {}
    }

    let class = max_degree_class(&ctx.graph);
    for uc in user_certs(ctx, &[CertificateKind::EvenCycle, CertificateKind::OddCycle]) {
        let cert = match uc.claim.verify(&ctx.graph) {
            Ok(c) => c,
            Err(e) => {
                out.notice(cert_notice(uc, e));
                continue;
            }
        };
        if let Err(e) = class.contains_all(&ctx.graph, &cert) {
            out.notice(cert_notice(uc, e));
            continue;
        }
        let w = CycleWitness::from_cert(cert);
        let mut b = BoundResult::new("thm1.cert", BoundKind::LowerLambdaMax, lower_lambda_max(ctx, &w), CITE_G);
        b.premises = premises(Side::Graph, &w, &class);
        out.push(b);
    }
    Ok(out)
}

impl BoundRule for Theorem1 {
    fn name(&self) -> &'static str {
        "thm1"
    }

    fn description(&self) -> &'static str {
        "bounds from induced cycles in the max-degree classes of the graph and its complement"
    }

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError> {
        let found = rule_theorem1(ctx)?;
        out.bounds.extend(found.bounds);
        out.notices.extend(found.notices);
        Ok(())
    }
}
