//! The bound engine.
//!
//! Each family of bounds is a [`BoundRule`] registered by name in a
//! [`RuleRegistry`]. [`evaluate_all`] builds one [`AnalysisContext`] for a
//! graph (exact spectra of the graph and its complement, degree profiles,
//! user certificates), runs every selected rule against it, and assembles an
//! [`AnalysisReport`] that compares each bound with the exact value.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

use thiserror::Error;

use crate::graph::{DegreeProfile, Graph};
use crate::spectra::{self, SpectraError, Spectrum, SyncIndex};
use crate::subgraph::{CertificateClaim, DegreeClass, SearchLimits, SubgraphCertificate, SubgraphError};

pub mod rules;

pub use rules::{
    chain_bound, join_bound, product_bound, rule_corollary1, rule_corollary2, rule_corollary3, rule_degree_ratio, rule_lemma2, rule_theorem1,
    rule_theorem2, rule_theorem3, rule_theorem4, rule_theorem5_product, rule_theorem6_disconnected,
};

/// A bound is "attained" when it is this close to the exact value.
pub const ATTAINED_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("graph is disconnected; bounds need a connected network")]
    Disconnected,
    #[error("graph has a single node")]
    SingleNode,
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Subgraph(#[from] SubgraphError),
    #[error("numerical health: {0}")]
    NumericalHealth(String),
    #[error("unknown rule '{0}'")]
    UnknownRule(String),
    #[error("rule '{0}' is already registered")]
    DuplicateRule(String),
    #[error("premise rejected: {0}")]
    Premise(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundKind {
    UpperR,
    LowerLambdaMax,
    UpperLambda2,
    ExactLambda2,
    Classification,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::UpperR => "upper_r",
            BoundKind::LowerLambdaMax => "lower_lambda_max",
            BoundKind::UpperLambda2 => "upper_lambda2",
            BoundKind::ExactLambda2 => "exact_lambda2",
            BoundKind::Classification => "classification",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which graph a premise lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Graph,
    Complement,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Graph => "graph",
            Side::Complement => "complement",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Premise {
    Certificate { side: Side, certificate: SubgraphCertificate },
    DegreeClass { side: Side, degree: usize, nodes: Vec<usize> },
    /// An induced subgraph given by its host nodes.
    NodeSet { side: Side, nodes: Vec<usize> },
    Value { name: &'static str, value: f64 },
}

impl Premise {
    pub fn class(side: Side, class: &DegreeClass) -> Self {
        Premise::DegreeClass { side, degree: class.degree, nodes: class.nodes.clone() }
    }
}

/// One evaluated bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    pub rule_id: String,
    pub kind: BoundKind,
    pub value: f64,
    pub strict: bool,
    pub premises: Vec<Premise>,
    pub citation: String,
    /// Outcome label for classification results.
    pub label: Option<String>,
}

impl BoundResult {
    pub fn new(rule_id: impl Into<String>, kind: BoundKind, value: f64, citation: impl Into<String>) -> Self {
        BoundResult {
            rule_id: rule_id.into(),
            kind,
            value,
            strict: false,
            premises: Vec::new(),
            citation: citation.into(),
            label: None,
        }
    }

    pub fn strict(mut self, strict: bool) -> Self {
        self.strict = strict;
        self
    }

    pub fn premise(mut self, p: Premise) -> Self {
        self.premises.push(p);
        self
    }
}

/// The recurring odd-cycle term `sin(3(n-1)pi/2n) / sin((n-1)pi/2n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OddCycleTerm {
    pub n: usize,
    pub delta: f64,
}

impl OddCycleTerm {
    /// `None` unless `n` is odd and at least 3.
    pub fn new(n: usize) -> Option<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return None;
        }
        let nf = n as f64;
        let x = (nf - 1.0) * PI / (2.0 * nf);
        Some(OddCycleTerm { n, delta: (3.0 * x).sin() / x.sin() })
    }

    /// The same quantity as `1 - 2cos(pi/n)`.
    pub fn cosine_form(&self) -> f64 {
        1.0 - 2.0 * (PI / self.n as f64).cos()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisConfig {
    /// Absolute tolerance for eigenvalue equalities and soundness checks.
    pub eq_tol: f64,
    pub limits: SearchLimits,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig { eq_tol: spectra::EQ_TOL, limits: SearchLimits::default() }
    }
}

/// A user-supplied certificate with a label for notices.
#[derive(Debug, Clone, PartialEq)]
pub struct UserCertificate {
    pub label: String,
    pub claim: CertificateClaim,
}

/// Everything rules may read. Built once per graph.
#[derive(Debug, Clone)]
pub struct AnalysisContext {
    pub graph: Graph,
    pub complement: Graph,
    pub degrees: DegreeProfile,
    pub complement_degrees: DegreeProfile,
    pub spectrum: Spectrum,
    /// Eigensolved directly, not through the complement identity.
    pub complement_spectrum: Spectrum,
    pub sync: SyncIndex,
    pub complement_connected: bool,
    pub config: AnalysisConfig,
    pub certificates: Vec<UserCertificate>,
}

impl AnalysisContext {
    pub fn new(g: &Graph, config: AnalysisConfig) -> Result<Self, BoundsError> {
        if g.node_count() < 2 {
            return Err(BoundsError::SingleNode);
        }
        if !g.is_connected() {
            return Err(BoundsError::Disconnected);
        }
        let complement = g.complement();
        let spectrum = spectra::laplacian_spectrum(g)?;
        let complement_spectrum = spectra::laplacian_spectrum(&complement)?;
        let sync = spectra::eigenratio_from(g, &spectrum)?;
        Ok(AnalysisContext {
            degrees: g.degrees(),
            complement_degrees: complement.degrees(),
            complement_connected: complement.is_connected(),
            graph: g.clone(),
            complement,
            spectrum,
            complement_spectrum,
            sync,
            config,
            certificates: Vec::new(),
        })
    }

    pub fn with_certificates(mut self, certs: Vec<UserCertificate>) -> Self {
        self.certificates = certs;
        self
    }

    pub fn n(&self) -> usize {
        self.graph.node_count()
    }

    pub fn side(&self, side: Side) -> (&Graph, &DegreeProfile) {
        match side {
            Side::Graph => (&self.graph, &self.degrees),
            Side::Complement => (&self.complement, &self.complement_degrees),
        }
    }

    /// Turns a lower bound on `lambda_max` of the complement into an upper
    /// bound on `lambda2` of the graph.
    pub fn lambda2_from_complement(&self, complement_lambda_max_lower: f64) -> f64 {
        self.n() as f64 - complement_lambda_max_lower
    }
}

/// Where rules put their findings.
#[derive(Debug, Default)]
pub struct RuleOutput {
    pub bounds: Vec<BoundResult>,
    pub notices: Vec<String>,
}

impl RuleOutput {
    pub fn push(&mut self, b: BoundResult) {
        self.bounds.push(b);
    }

    pub fn notice(&mut self, msg: impl Into<String>) {
        self.notices.push(msg.into());
    }
}

/// A family of bounds selectable by name.
pub trait BoundRule: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn evaluate(&self, ctx: &AnalysisContext, out: &mut RuleOutput) -> Result<(), BoundsError>;
}

/// Named bound rules, evaluated in registration order.
pub struct RuleRegistry {
    rules: Vec<Box<dyn BoundRule>>,
}

impl fmt::Debug for RuleRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

impl Default for RuleRegistry {
    fn default() -> Self {
        let mut reg = RuleRegistry::empty();
        for rule in rules::builtin() {
            reg.register(rule).expect("builtin rule names are unique");
        }
        reg
    }
}

impl RuleRegistry {
    pub fn empty() -> Self {
        RuleRegistry { rules: Vec::new() }
    }

    pub fn register(&mut self, rule: Box<dyn BoundRule>) -> Result<(), BoundsError> {
        if self.get(rule.name()).is_some() {
            return Err(BoundsError::DuplicateRule(rule.name().to_string()));
        }
        self.rules.push(rule);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&dyn BoundRule> {
        self.rules.iter().find(|r| r.name() == name).map(|r| r.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.rules.iter().map(|r| r.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn BoundRule> {
        self.rules.iter().map(|r| r.as_ref())
    }

    /// Keeps only the named rules, preserving registration order.
    pub fn retain_named(mut self, names: &[String]) -> Result<Self, BoundsError> {
        for name in names {
            if self.get(name).is_none() {
                return Err(BoundsError::UnknownRule(name.clone()));
            }
        }
        self.rules.retain(|r| names.iter().any(|n| n == r.name()));
        Ok(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub d_min: usize,
    pub d_max: usize,
    pub connected: bool,
    pub complement_connected: bool,
}

/// A bound next to the exact quantity it constrains.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluatedBound {
    pub bound: BoundResult,
    pub exact: Option<f64>,
    /// Oriented so that a sound bound has `gap >= 0` (for exact predictions
    /// the sign carries no meaning).
    pub gap: Option<f64>,
    pub attained: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub summary: GraphSummary,
    pub spectrum: Spectrum,
    pub sync: SyncIndex,
    pub bounds: Vec<EvaluatedBound>,
    pub notices: Vec<String>,
    pub eq_tol: f64,
}

impl AnalysisReport {
    pub fn find(&self, rule_id: &str, kind: BoundKind) -> Option<&EvaluatedBound> {
        self.bounds.iter().find(|b| b.bound.rule_id == rule_id && b.bound.kind == kind)
    }

    pub fn by_rule<'a>(&'a self, rule_id: &'a str) -> impl Iterator<Item = &'a EvaluatedBound> + 'a {
        self.bounds.iter().filter(move |b| b.bound.rule_id == rule_id)
    }

    /// Bounds that contradict the exact spectrum beyond `eq_tol`.
    pub fn violations(&self) -> Vec<&EvaluatedBound> {
        self.bounds
            .iter()
            .filter(|b| match (b.bound.kind, b.gap) {
                (BoundKind::ExactLambda2, Some(g)) => g.abs() > self.eq_tol,
                (_, Some(g)) => g < -self.eq_tol,
                (_, None) => false,
            })
            .collect()
    }
}

fn evaluate_bound(bound: BoundResult, sync: &SyncIndex) -> EvaluatedBound {
    let exact = match bound.kind {
        BoundKind::UpperR => Some(sync.r),
        BoundKind::LowerLambdaMax => Some(sync.lambda_max),
        BoundKind::UpperLambda2 | BoundKind::ExactLambda2 => Some(sync.lambda2),
        BoundKind::Classification => None,
    };
    let gap = exact.map(|x| match bound.kind {
        BoundKind::LowerLambdaMax => x - bound.value,
        _ => bound.value - x,
    });
    let attained = gap.is_some_and(|g| g.abs() < ATTAINED_TOL);
    EvaluatedBound { bound, exact, gap, attained }
}

/// Runs every builtin rule on `g`.
pub fn evaluate_all(
    g: &Graph,
    certs: Vec<UserCertificate>,
    config: AnalysisConfig,
) -> Result<AnalysisReport, BoundsError> {
    evaluate_with(&RuleRegistry::default(), g, certs, config)
}

/// Runs the rules of `registry` on `g`. Bounds come out sorted by rule id,
/// then kind; rules keep their emission order within that.
pub fn evaluate_with(
    registry: &RuleRegistry,
    g: &Graph,
    certs: Vec<UserCertificate>,
    config: AnalysisConfig,
) -> Result<AnalysisReport, BoundsError> {
    let ctx = AnalysisContext::new(g, config)?.with_certificates(certs);
    let mut out = RuleOutput::default();
    for rule in registry.iter() {
        rule.evaluate(&ctx, &mut out)?;
    }
    for b in &out.bounds {
        if !b.value.is_finite() {
            return Err(BoundsError::NumericalHealth(format!("{} produced a non-finite value", b.rule_id)));
        }
    }
    let mut bounds = out.bounds;
    bounds.sort_by(|a, b| match a.rule_id.cmp(&b.rule_id) {
        Ordering::Equal => a.kind.cmp(&b.kind),
        o => o,
    });
    Ok(AnalysisReport {
        summary: GraphSummary {
            n: g.node_count(),
            edges: g.edge_count(),
            d_min: ctx.degrees.d_min,
            d_max: ctx.degrees.d_max,
            connected: true,
            complement_connected: ctx.complement_connected,
        },
        spectrum: ctx.spectrum.clone(),
        sync: ctx.sync,
        bounds: bounds.into_iter().map(|b| evaluate_bound(b, &ctx.sync)).collect(),
        notices: out.notices,
        eq_tol: config.eq_tol,
    })
}
