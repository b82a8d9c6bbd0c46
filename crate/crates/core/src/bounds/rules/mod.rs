//! Builtin bound rules.

mod corollaries;
mod cycles;
mod degree;
mod disconnected;
mod subgraphs;

pub use corollaries::{rule_corollary1, rule_corollary2, rule_corollary3, Corollary1, Corollary2, Corollary3};
pub use cycles::{rule_theorem1, Theorem1};
pub use degree::{rule_degree_ratio, rule_lemma2, DegreeRatio, Lemma2};
pub use disconnected::{rule_theorem6_disconnected, Theorem6};
pub use subgraphs::{
    chain_bound, join_bound, product_bound, rule_theorem2, rule_theorem3, rule_theorem4, rule_theorem5_product,
    Theorem2, Theorem3, Theorem4, Theorem5,
};

use super::{AnalysisContext, BoundRule, UserCertificate};
use crate::subgraph::CertificateKind;

pub(crate) fn builtin() -> Vec<Box<dyn BoundRule>> {
    vec![
        Box::new(DegreeRatio),
        Box::new(Lemma2),
        Box::new(Corollary1),
        Box::new(Corollary2),
        Box::new(Corollary3),
        Box::new(Theorem1),
        Box::new(Theorem2),
        Box::new(Theorem3),
        Box::new(Theorem4),
        Box::new(Theorem5),
        Box::new(Theorem6),
    ]
}

pub(crate) fn user_certs<'a>(
    ctx: &'a AnalysisContext,
    kinds: &'a [CertificateKind],
) -> impl Iterator<Item = &'a UserCertificate> + 'a {
    ctx.certificates.iter().filter(move |c| kinds.contains(&c.claim.kind()))
}

pub(crate) fn cert_notice(cert: &UserCertificate, why: impl std::fmt::Display) -> String {
    format!("certificate {} ({}): {}", cert.label, cert.claim.kind().as_str(), why)
}
