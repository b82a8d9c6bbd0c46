//! Certificate search and verification: induced cycles and chains inside
//! degree classes, joins, Cartesian-product embeddings, and maximum
//! disconnected induced subgraphs.
//!
//! Every search here is exhaustive. Hosts above the configured node cutoff
//! yield [`Search::Undecided`] instead of a possibly wrong answer. When several
//! maximum witnesses exist, the lexicographically smallest sorted node set
//! wins.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::Graph;
use crate::spectra::{self, SpectraError};

/// Default node cutoff for cycle, chain, and join searches.
pub const DEFAULT_MAX_SEARCH_NODES: usize = 16;
/// Default node cutoff for the connectivity brute force.
pub const DEFAULT_MAX_CONNECTIVITY_NODES: usize = 20;
/// The subset DP for longest paths allocates `2^n` words.
const CHAIN_DP_MAX_NODES: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_search_nodes: usize,
    pub max_connectivity_nodes: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_search_nodes: DEFAULT_MAX_SEARCH_NODES,
            max_connectivity_nodes: DEFAULT_MAX_CONNECTIVITY_NODES,
        }
    }
}

/// Outcome of an exhaustive search.
#[derive(Debug, Clone, PartialEq)]
pub enum Search<T> {
    Found(T),
    Absent,
    /// The host was larger than the cutoff; nothing is known.
    Undecided { nodes: usize, cutoff: usize },
}

impl<T> Search<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Search::Undecided { .. })
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Absent => Search::Absent,
            Search::Undecided { nodes, cutoff } => Search::Undecided { nodes, cutoff },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SubgraphError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {nodes} nodes, above the search cutoff of {cutoff}")]
    Undecided { nodes: usize, cutoff: usize },
    #[error("maximum disconnected subgraph has {size} nodes but n - connectivity = {expected}")]
    ConnectivityIdentity { size: usize, expected: usize },
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("node {node} out of range for host with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("node {0} appears more than once")]
    RepeatedNode(usize),
    #[error("{kind} needs at least {min} nodes, got {got}")]
    TooShort { kind: &'static str, min: usize, got: usize },
    #[error("cycle of length {0} has the wrong parity for {1}")]
    WrongParity(usize, &'static str),
    #[error("required edge ({0}, {1}) absent")]
    MissingEdge(usize, usize),
    #[error("chord ({0}, {1}) present; subgraph is not induced")]
    Chord(usize, usize),
    #[error("join part {0} is empty")]
    EmptyPart(usize),
    #[error("embedding has {got} entries, expected {expected}")]
    EmbeddingSize { expected: usize, got: usize },
    #[error("embedding is not injective: host node {0} used twice")]
    NotInjective(usize),
    #[error("required edge ({a1},{a2})x({b1},{b2}) -> host ({u}, {v}) absent")]
    MissingProductEdge { a1: usize, a2: usize, b1: usize, b2: usize, u: usize, v: usize },
    #[error("node set induces a connected subgraph")]
    SetConnected,
    #[error("certificate nodes are not all in the required degree class (node {node} has degree {degree}, expected {expected})")]
    OutsideClass { node: usize, degree: usize, expected: usize },
    #[error("{0}")]
    Schema(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CertificateKind {
    EvenCycle,
    OddCycle,
    Chain,
    Join,
    Product,
    DisconnectedSet,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::EvenCycle => "even_cycle",
            CertificateKind::OddCycle => "odd_cycle",
            CertificateKind::Chain => "chain",
            CertificateKind::Join => "join",
            CertificateKind::Product => "product",
            CertificateKind::DisconnectedSet => "disconnected_set",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "even_cycle" => CertificateKind::EvenCycle,
            "odd_cycle" => CertificateKind::OddCycle,
            "chain" => CertificateKind::Chain,
            "join" => CertificateKind::Join,
            "product" => CertificateKind::Product,
            "disconnected_set" => CertificateKind::DisconnectedSet,
            _ => return None,
        })
    }
}

/// A witness for a theorem premise, expressed in host node indices.
#[derive(Debug, Clone, PartialEq)]
pub enum SubgraphCertificate {
    /// Induced cycle; `nodes` in cyclic order.
    Cycle { nodes: Vec<usize> },
    /// Path in order. `induced` says whether the host has no chords on it;
    /// `exhaustive` is false when the search gave up and this is only the
    /// best path found.
    Chain { nodes: Vec<usize>, induced: bool, exhaustive: bool },
    /// Two disjoint parts with every cross pair adjacent. `join_d_max` is the
    /// maximum degree of the subgraph induced on both parts.
    Join { parts: [Vec<usize>; 2], join_d_max: usize },
    /// `embedding[i * n_b + j]` is the host node carrying product node `(i, j)`.
    Product {
        factor_a: Graph,
        factor_b: Graph,
        embedding: Vec<usize>,
        lambda_max_sum: f64,
        product_d_max: usize,
        induced: bool,
    },
    /// Node set whose induced subgraph is disconnected, sorted.
    DisconnectedSet { nodes: Vec<usize> },
}

impl SubgraphCertificate {
    pub fn kind(&self) -> CertificateKind {
        match self {
            SubgraphCertificate::Cycle { nodes } if nodes.len() % 2 == 0 => CertificateKind::EvenCycle,
            SubgraphCertificate::Cycle { .. } => CertificateKind::OddCycle,
            SubgraphCertificate::Chain { .. } => CertificateKind::Chain,
            SubgraphCertificate::Join { .. } => CertificateKind::Join,
            SubgraphCertificate::Product { .. } => CertificateKind::Product,
            SubgraphCertificate::DisconnectedSet { .. } => CertificateKind::DisconnectedSet,
        }
    }

    /// Every host node the certificate touches.
    pub fn nodes(&self) -> Vec<usize> {
        match self {
            SubgraphCertificate::Cycle { nodes }
            | SubgraphCertificate::Chain { nodes, .. }
            | SubgraphCertificate::DisconnectedSet { nodes } => nodes.clone(),
            SubgraphCertificate::Join { parts, .. } => parts.concat(),
            SubgraphCertificate::Product { embedding, .. } => embedding.clone(),
        }
    }

    /// Cycle length, chain length, or `n1 + n2`, depending on kind.
    pub fn size(&self) -> usize {
        self.nodes().len()
    }

    /// Relabels nodes through `map` (e.g. from a class subgraph to its host).
    pub fn relabel(&self, map: &[usize]) -> SubgraphCertificate {
        let m = |v: &Vec<usize>| v.iter().map(|&x| map[x]).collect::<Vec<_>>();
        match self {
            SubgraphCertificate::Cycle { nodes } => SubgraphCertificate::Cycle { nodes: m(nodes) },
            SubgraphCertificate::Chain { nodes, induced, exhaustive } => SubgraphCertificate::Chain {
                nodes: m(nodes),
                induced: *induced,
                exhaustive: *exhaustive,
            },
            SubgraphCertificate::Join { parts, join_d_max } => SubgraphCertificate::Join {
                parts: [m(&parts[0]), m(&parts[1])],
                join_d_max: *join_d_max,
            },
            SubgraphCertificate::Product { factor_a, factor_b, embedding, lambda_max_sum, product_d_max, induced } => {
                SubgraphCertificate::Product {
                    factor_a: factor_a.clone(),
                    factor_b: factor_b.clone(),
                    embedding: m(embedding),
                    lambda_max_sum: *lambda_max_sum,
                    product_d_max: *product_d_max,
                    induced: *induced,
                }
            }
            SubgraphCertificate::DisconnectedSet { nodes } => {
                let mut v = m(nodes);
                v.sort_unstable();
                SubgraphCertificate::DisconnectedSet { nodes: v }
            }
        }
    }

    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        match self {
            SubgraphCertificate::Cycle { nodes } => verify_induced_cycle(g, nodes).map(|_| ()),
            SubgraphCertificate::Chain { nodes, induced, .. } => {
                verify_path(g, nodes)?;
                match first_chord(g, nodes, false) {
                    Some((u, v)) if *induced => Err(CertificateError::Chord(u, v)),
                    _ => Ok(()),
                }
            }
            SubgraphCertificate::Join { parts, .. } => verify_join(g, &parts[0], &parts[1]).map(|_| ()),
            SubgraphCertificate::Product { factor_a, factor_b, embedding, .. } => {
                verify_product_certificate(g, factor_a, factor_b, embedding).map(|_| ())
            }
            SubgraphCertificate::DisconnectedSet { nodes } => verify_disconnected_set(g, nodes).map(|_| ()),
        }
    }
}

/// An unverified certificate, as read from a file or built by hand.
#[derive(Debug, Clone, PartialEq)]
pub enum CertificateClaim {
    /// `even` is `Some(true)` for a claimed even cycle, `Some(false)` for odd,
    /// `None` when the parity is left to the cycle length.
    Cycle { nodes: Vec<usize>, even: Option<bool> },
    Chain { nodes: Vec<usize> },
    Join { parts: [Vec<usize>; 2] },
    Product { factor_a: Graph, factor_b: Graph, embedding: Vec<usize> },
    DisconnectedSet { nodes: Vec<usize> },
}

impl CertificateClaim {
    pub fn kind(&self) -> CertificateKind {
        match self {
            CertificateClaim::Cycle { even: Some(false), .. } => CertificateKind::OddCycle,
            CertificateClaim::Cycle { even: Some(true), .. } => CertificateKind::EvenCycle,
            CertificateClaim::Cycle { nodes, .. } if nodes.len() % 2 == 0 => CertificateKind::EvenCycle,
            CertificateClaim::Cycle { .. } => CertificateKind::OddCycle,
            CertificateClaim::Chain { .. } => CertificateKind::Chain,
            CertificateClaim::Join { .. } => CertificateKind::Join,
            CertificateClaim::Product { .. } => CertificateKind::Product,
            CertificateClaim::DisconnectedSet { .. } => CertificateKind::DisconnectedSet,
        }
    }

    /// Checks the claim against `g` and returns the verified certificate.
    pub fn verify(&self, g: &Graph) -> Result<SubgraphCertificate, CertificateError> {
        match self {
            CertificateClaim::Cycle { nodes, even } => {
                let len = verify_induced_cycle(g, nodes)?;
                match even {
                    Some(true) if len % 2 == 1 => Err(CertificateError::WrongParity(len, "even_cycle")),
                    Some(false) if len % 2 == 0 => Err(CertificateError::WrongParity(len, "odd_cycle")),
                    _ => Ok(SubgraphCertificate::Cycle { nodes: nodes.clone() }),
                }
            }
            CertificateClaim::Chain { nodes } => {
                let induced = verify_path(g, nodes)?;
                Ok(SubgraphCertificate::Chain { nodes: nodes.clone(), induced, exhaustive: true })
            }
            CertificateClaim::Join { parts } => verify_join(g, &parts[0], &parts[1]),
            CertificateClaim::Product { factor_a, factor_b, embedding } => {
                verify_product_certificate(g, factor_a, factor_b, embedding)
            }
            CertificateClaim::DisconnectedSet { nodes } => verify_disconnected_set(g, nodes),
        }
    }
}

/// All host nodes sharing one degree, with the subgraph they induce.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeClass {
    pub degree: usize,
    pub nodes: Vec<usize>,
    pub subgraph: Graph,
}

impl DegreeClass {
    fn new(g: &Graph, degree: usize) -> Self {
        let nodes: Vec<usize> = (0..g.node_count()).filter(|&v| g.degree(v) == degree).collect();
        let subgraph = g.induced_subgraph(&nodes).expect("degree class is nonempty").graph;
        DegreeClass { degree, nodes, subgraph }
    }

    /// Maps a certificate found inside `subgraph` back to host indices.
    pub fn lift(&self, cert: &SubgraphCertificate) -> SubgraphCertificate {
        cert.relabel(&self.nodes)
    }

    /// Checks that every node of `cert` lies in this class of `g`.
    pub fn contains_all(&self, g: &Graph, cert: &SubgraphCertificate) -> Result<(), CertificateError> {
        for v in cert.nodes() {
            if v >= g.node_count() {
                return Err(CertificateError::NodeOutOfRange { node: v, n: g.node_count() });
            }
            let degree = g.degree(v);
            if degree != self.degree {
                return Err(CertificateError::OutsideClass { node: v, degree, expected: self.degree });
            }
        }
        Ok(())
    }
}

pub fn max_degree_class(g: &Graph) -> DegreeClass {
    DegreeClass::new(g, g.degrees().d_max)
}

/// One class per distinct degree, highest degree first.
pub fn degree_classes(g: &Graph) -> Vec<DegreeClass> {
    let degrees = g.degrees().degrees;
    degrees
        .iter()
        .copied()
        .sorted_unstable_by(|a, b| b.cmp(a))
        .dedup()
        .map(|d| DegreeClass::new(g, d))
        .collect()
}

fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.node_count() <= 64, "bitmask searches need at most 64 nodes");
    (0..g.node_count())
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | (1 << u)))
        .collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

fn set_mask(nodes: &[usize]) -> u64 {
    nodes.iter().fold(0, |m, &v| m | (1 << v))
}

/// Lexicographic comparison of two equal-size sorted node sets given as masks.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) != 0
}

fn sorted(nodes: &[usize]) -> Vec<usize> {
    let mut v = nodes.to_vec();
    v.sort_unstable();
    v
}

/// Calls `visit` once per induced cycle (length >= 3) of `h`. Cycles start
/// at their smallest node and run towards the smaller of its two neighbours.
pub fn for_each_induced_cycle(h: &Graph, mut visit: impl FnMut(&[usize])) {
    let nbr = masks(h);
    let mut path = Vec::with_capacity(h.node_count());
    fn extend(nbr: &[u64], path: &mut Vec<usize>, inner: u64, on_path: u64, visit: &mut dyn FnMut(&[usize])) {
        let v0 = path[0];
        let last = *path.last().unwrap();
        let above = u64::MAX.checked_shl(v0 as u32 + 1).unwrap_or(0);
        let candidates = nbr[last] & !inner & !on_path & above;
        let next_inner = if path.len() >= 2 { inner | nbr[last] | (1 << last) } else { inner };
        for w in bits(candidates) {
            if path.len() >= 2 && nbr[w] & (1 << v0) != 0 {
                if path[1] < w {
                    path.push(w);
                    visit(path);
                    path.pop();
                }
            } else {
                path.push(w);
                extend(nbr, path, next_inner, on_path | (1 << w), visit);
                path.pop();
            }
        }
    }
    for v0 in 0..h.node_count() {
        path.push(v0);
        extend(&nbr, &mut path, 0, 1 << v0, &mut visit);
        path.pop();
    }
}

/// Calls `visit` once per induced path with at least one node, in both
/// orientations for paths of two or more nodes.
pub fn for_each_induced_path(h: &Graph, mut visit: impl FnMut(&[usize])) {
    let nbr = masks(h);
    fn extend(nbr: &[u64], path: &mut Vec<usize>, blocked: u64, visit: &mut dyn FnMut(&[usize])) {
        visit(path);
        let last = *path.last().unwrap();
        let next_blocked = blocked | nbr[last] | (1 << last);
        for w in bits(nbr[last] & !blocked) {
            path.push(w);
            extend(nbr, path, next_blocked, visit);
            path.pop();
        }
    }
    let mut path = Vec::with_capacity(h.node_count());
    for v0 in 0..h.node_count() {
        path.push(v0);
        extend(&nbr, &mut path, 1 << v0, &mut visit);
        path.pop();
    }
}

/// Bitmask searches cannot go past 64 nodes whatever the configured cutoff.
fn check_cutoff(h: &Graph, cutoff: usize) -> Option<(usize, usize)> {
    let cutoff = cutoff.min(64);
    (h.node_count() > cutoff).then_some((h.node_count(), cutoff))
}

/// Keeps the better of two candidate node sequences: longer wins, then the
/// lexicographically smaller sorted node set.
fn prefer(best: &mut Option<Vec<usize>>, cand: &[usize], longer_is_better: bool) {
    let replace = match best {
        None => true,
        Some(b) if b.len() != cand.len() => (cand.len() > b.len()) == longer_is_better,
        Some(b) => lex_less(set_mask(cand), set_mask(b)),
    };
    if replace {
        *best = Some(cand.to_vec());
    }
}

/// Some induced even cycle of `h`: the shortest, then lexicographically
/// smallest.
pub fn find_induced_even_cycle(h: &Graph, limits: &SearchLimits) -> Search<SubgraphCertificate> {
    if let Some((nodes, cutoff)) = check_cutoff(h, limits.max_search_nodes) {
        return Search::Undecided { nodes, cutoff };
    }
    let mut best = None;
    for_each_induced_cycle(h, |c| {
        if c.len() % 2 == 0 {
            prefer(&mut best, c, false);
        }
    });
    best.map_or(Search::Absent, |nodes| Search::Found(SubgraphCertificate::Cycle { nodes }))
}

/// A longest induced odd cycle of `h`.
pub fn longest_induced_odd_cycle(h: &Graph, limits: &SearchLimits) -> Search<SubgraphCertificate> {
    if let Some((nodes, cutoff)) = check_cutoff(h, limits.max_search_nodes) {
        return Search::Undecided { nodes, cutoff };
    }
    let mut best = None;
    for_each_induced_cycle(h, |c| {
        if c.len() % 2 == 1 {
            prefer(&mut best, c, true);
        }
    });
    best.map_or(Search::Absent, |nodes| Search::Found(SubgraphCertificate::Cycle { nodes }))
}

/// A longest induced path of `h` (at least one node).
pub fn longest_induced_chain(h: &Graph, limits: &SearchLimits) -> Search<SubgraphCertificate> {
    if let Some((nodes, cutoff)) = check_cutoff(h, limits.max_search_nodes) {
        return Search::Undecided { nodes, cutoff };
    }
    let mut best = None;
    for_each_induced_path(h, |p| prefer(&mut best, p, true));
    let nodes = best.expect("every graph has a one-node path");
    Search::Found(SubgraphCertificate::Chain { nodes, induced: true, exhaustive: true })
}

/// A longest path of `h` as a (not necessarily induced) subgraph. Above the
/// cutoff this returns the best greedy walk with `exhaustive: false`.
pub fn longest_chain(h: &Graph, limits: &SearchLimits) -> SubgraphCertificate {
    let exhaustive = h.node_count() <= limits.max_search_nodes.min(CHAIN_DP_MAX_NODES);
    let nodes = if exhaustive { exhaustive_chain(h) } else { greedy_chain(h) };
    let induced = first_chord(h, &nodes, false).is_none();
    SubgraphCertificate::Chain { nodes, induced, exhaustive }
}

fn exhaustive_chain(h: &Graph) -> Vec<usize> {
    let n = h.node_count();
    let nbr = masks(h);
    // ends[mask]: bitset of nodes v such that some path covers exactly `mask`
    // and ends at v.
    let mut ends = vec![0u64; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best_mask = 1u64;
    for mask in 1u64..(1 << n) {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        let (c, bc) = (mask.count_ones(), best_mask.count_ones());
        if c > bc || (c == bc && lex_less(mask, best_mask)) {
            best_mask = mask;
        }
        for v in bits(e) {
            for w in bits(nbr[v] & !mask) {
                ends[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }
    let mut mask = best_mask;
    let mut v = bits(ends[mask as usize]).next().unwrap();
    let mut path = vec![v];
    while mask.count_ones() > 1 {
        mask &= !(1 << v);
        v = bits(ends[mask as usize] & nbr[v]).next().unwrap();
        path.push(v);
    }
    path
}

fn greedy_chain(h: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for start in 0..h.node_count() {
        let mut seen = vec![false; h.node_count()];
        seen[start] = true;
        let mut path = vec![start];
        while let Some(w) = h.neighbors(*path.last().unwrap()).find(|&w| !seen[w]) {
            seen[w] = true;
            path.push(w);
        }
        if path.len() > best.len() {
            best = path;
        }
    }
    best
}

/// A join inside `h` with the most nodes: a node subset split into two
/// nonempty parts with every cross pair adjacent. The first part is the
/// complement component containing the smallest node.
pub fn find_join(h: &Graph, limits: &SearchLimits) -> Search<SubgraphCertificate> {
    if let Some((nodes, cutoff)) = check_cutoff(h, limits.max_search_nodes) {
        return Search::Undecided { nodes, cutoff };
    }
    let n = h.node_count();
    let nbr = masks(h);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let non_nbr: Vec<u64> = (0..n).map(|v| all & !nbr[v] & !(1 << v)).collect();
    for size in (2..=n).rev() {
        for subset in (0..n).combinations(size) {
            let s = set_mask(&subset);
            let first = component_within(&non_nbr, s, subset[0]);
            if first != s {
                let part_a: Vec<usize> = bits(first).collect();
                let part_b: Vec<usize> = bits(s & !first).collect();
                let join_d_max = subset.iter().map(|&v| (nbr[v] & s).count_ones() as usize).max().unwrap();
                return Search::Found(SubgraphCertificate::Join { parts: [part_a, part_b], join_d_max });
            }
        }
    }
    Search::Absent
}

pub fn find_join_in_class(class: &DegreeClass, limits: &SearchLimits) -> Search<SubgraphCertificate> {
    find_join(&class.subgraph, limits).map(|c| class.lift(&c))
}

/// Nodes of `within` reachable from `start` using only nodes of `within`.
fn component_within(nbr: &[u64], within: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= nbr[v] & within;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

/// Smallest number of nodes whose removal disconnects `g`; `n - 1` for a
/// complete graph. Exhaustive over removal sets of increasing size.
pub fn vertex_connectivity(g: &Graph, limits: &SearchLimits) -> Result<usize, SubgraphError> {
    let n = g.node_count();
    let cutoff = limits.max_connectivity_nodes.min(64);
    if n > cutoff {
        return Err(SubgraphError::Undecided { nodes: n, cutoff });
    }
    if !g.is_connected() {
        return Err(SubgraphError::Disconnected);
    }
    let nbr = masks(g);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for size in 1..n.saturating_sub(1) {
        for removed in (0..n).combinations(size) {
            let rest = all & !set_mask(&removed);
            let start = rest.trailing_zeros() as usize;
            if component_within(&nbr, rest, start) != rest {
                return Ok(size);
            }
        }
    }
    Ok(n - 1)
}

/// Largest node set inducing a disconnected subgraph. `Absent` for complete
/// graphs. Checks `|S| = n - vertex_connectivity(g)` before returning.
pub fn max_disconnected_subgraph(g: &Graph, limits: &SearchLimits) -> Result<Search<SubgraphCertificate>, SubgraphError> {
    let n = g.node_count();
    let cutoff = limits.max_connectivity_nodes.min(64);
    if n > cutoff {
        return Err(SubgraphError::Undecided { nodes: n, cutoff });
    }
    if !g.is_connected() {
        return Err(SubgraphError::Disconnected);
    }
    let nbr = masks(g);
    let mut found = None;
    'outer: for size in (2..n).rev() {
        for subset in (0..n).combinations(size) {
            let s = set_mask(&subset);
            if component_within(&nbr, s, subset[0]) != s {
                found = Some(subset);
                break 'outer;
            }
        }
    }
    let kappa = vertex_connectivity(g, limits)?;
    match found {
        None if g.is_complete() => Ok(Search::Absent),
        None => Err(SubgraphError::ConnectivityIdentity { size: 0, expected: n - kappa }),
        Some(nodes) if nodes.len() != n - kappa => {
            Err(SubgraphError::ConnectivityIdentity { size: nodes.len(), expected: n - kappa })
        }
        Some(nodes) => Ok(Search::Found(SubgraphCertificate::DisconnectedSet { nodes })),
    }
}

fn check_nodes(g: &Graph, nodes: &[usize]) -> Result<(), CertificateError> {
    let mut seen = vec![false; g.node_count()];
    for &v in nodes {
        if v >= g.node_count() {
            return Err(CertificateError::NodeOutOfRange { node: v, n: g.node_count() });
        }
        if seen[v] {
            return Err(CertificateError::RepeatedNode(v));
        }
        seen[v] = true;
    }
    Ok(())
}

/// First host edge between non-consecutive sequence members. With `closed`,
/// the first and last members count as consecutive.
fn first_chord(g: &Graph, nodes: &[usize], closed: bool) -> Option<(usize, usize)> {
    let k = nodes.len();
    for i in 0..k {
        for j in (i + 2)..k {
            if closed && i == 0 && j == k - 1 {
                continue;
            }
            if g.has_edge(nodes[i], nodes[j]) {
                return Some((nodes[i], nodes[j]));
            }
        }
    }
    None
}

/// Checks that `nodes` is an induced cycle of `g`; returns its length.
pub fn verify_induced_cycle(g: &Graph, nodes: &[usize]) -> Result<usize, CertificateError> {
    check_nodes(g, nodes)?;
    let k = nodes.len();
    if k < 3 {
        return Err(CertificateError::TooShort { kind: "cycle", min: 3, got: k });
    }
    for i in 0..k {
        let (u, v) = (nodes[i], nodes[(i + 1) % k]);
        if !g.has_edge(u, v) {
            return Err(CertificateError::MissingEdge(u, v));
        }
    }
    if let Some((u, v)) = first_chord(g, nodes, true) {
        return Err(CertificateError::Chord(u, v));
    }
    Ok(k)
}

/// Checks that consecutive `nodes` are adjacent; returns whether the path is
/// also induced.
pub fn verify_path(g: &Graph, nodes: &[usize]) -> Result<bool, CertificateError> {
    check_nodes(g, nodes)?;
    if nodes.is_empty() {
        return Err(CertificateError::TooShort { kind: "chain", min: 1, got: 0 });
    }
    for w in nodes.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(CertificateError::MissingEdge(w[0], w[1]));
        }
    }
    Ok(first_chord(g, nodes, false).is_none())
}

/// Checks the join structure and returns the certificate with its maximum
/// induced degree filled in.
pub fn verify_join(g: &Graph, part_a: &[usize], part_b: &[usize]) -> Result<SubgraphCertificate, CertificateError> {
    if part_a.is_empty() {
        return Err(CertificateError::EmptyPart(0));
    }
    if part_b.is_empty() {
        return Err(CertificateError::EmptyPart(1));
    }
    let all = [part_a, part_b].concat();
    check_nodes(g, &all)?;
    for &u in part_a {
        for &v in part_b {
            if !g.has_edge(u, v) {
                return Err(CertificateError::MissingEdge(u, v));
            }
        }
    }
    let join = g.induced_subgraph(&all).expect("nodes checked").graph;
    Ok(SubgraphCertificate::Join {
        parts: [part_a.to_vec(), part_b.to_vec()],
        join_d_max: join.degrees().d_max,
    })
}

/// Checks that `embedding` places `factor_a x factor_b` inside `g`, i.e. that
/// every product edge lands on a host edge. The result records whether the
/// image is also induced (no extra host edges among the image nodes).
pub fn verify_product_certificate(
    g: &Graph,
    factor_a: &Graph,
    factor_b: &Graph,
    embedding: &[usize],
) -> Result<SubgraphCertificate, CertificateError> {
    let (na, nb) = (factor_a.node_count(), factor_b.node_count());
    if embedding.len() != na * nb {
        return Err(CertificateError::EmbeddingSize { expected: na * nb, got: embedding.len() });
    }
    let mut used = vec![false; g.node_count()];
    for &v in embedding {
        if v >= g.node_count() {
            return Err(CertificateError::NodeOutOfRange { node: v, n: g.node_count() });
        }
        if used[v] {
            return Err(CertificateError::NotInjective(v));
        }
        used[v] = true;
    }
    let product = factor_a.cartesian_product(factor_b);
    for &(x, y) in product.edges() {
        let (u, v) = (embedding[x], embedding[y]);
        if !g.has_edge(u, v) {
            return Err(CertificateError::MissingProductEdge {
                a1: x / nb,
                a2: x % nb,
                b1: y / nb,
                b2: y % nb,
                u,
                v,
            });
        }
    }
    let image = g.induced_subgraph(embedding).expect("embedding checked").graph;
    let induced = image.edge_count() == product.edge_count();
    let lambda_max_sum = top_eigenvalue(factor_a) + top_eigenvalue(factor_b);
    Ok(SubgraphCertificate::Product {
        factor_a: factor_a.clone(),
        factor_b: factor_b.clone(),
        embedding: embedding.to_vec(),
        lambda_max_sum,
        product_d_max: product.degrees().d_max,
        induced,
    })
}

fn top_eigenvalue(g: &Graph) -> f64 {
    spectra::laplacian_spectrum(g)
        .expect("Laplacians of small graphs converge")
        .lambda_max()
}

pub fn verify_disconnected_set(g: &Graph, nodes: &[usize]) -> Result<SubgraphCertificate, CertificateError> {
    check_nodes(g, nodes)?;
    if nodes.len() < 2 {
        return Err(CertificateError::TooShort { kind: "disconnected_set", min: 2, got: nodes.len() });
    }
    let sub = g.induced_subgraph(nodes).expect("nodes checked").graph;
    if sub.is_connected() {
        return Err(CertificateError::SetConnected);
    }
    Ok(SubgraphCertificate::DisconnectedSet { nodes: sorted(nodes) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    fn two_k4_bridge() -> Graph {
        let mut pairs = Vec::new();
        for base in [0, 4] {
            for (u, v) in (0..4).tuple_combinations() {
                pairs.push((base + u, base + v));
            }
        }
        pairs.push((3, 4));
        Graph::from_edge_list(8, &pairs).unwrap()
    }

    fn star() -> Graph {
        Graph::edgeless(1).unwrap().join(&Graph::edgeless(3).unwrap())
    }

    #[test]
    fn max_degree_classes() {
        let c5 = Graph::cycle(5).unwrap();
        let class = max_degree_class(&c5);
        assert_eq!(class.nodes, vec![0, 1, 2, 3, 4]);
        assert_eq!(class.subgraph, c5);

        let class = max_degree_class(&star());
        assert_eq!((class.degree, class.nodes.clone()), (3, vec![0]));
        assert_eq!(class.subgraph.edge_count(), 0);

        let prism = Graph::cycle(6).unwrap().complement();
        assert_eq!(max_degree_class(&prism).nodes.len(), 6);
        assert_eq!(degree_classes(&star()).iter().map(|c| c.degree).collect_vec(), vec![3, 1]);
    }

    #[test]
    fn even_cycle_search() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            find_induced_even_cycle(&c4, &lim()),
            Search::Found(SubgraphCertificate::Cycle { nodes: vec![0, 1, 2, 3] })
        );
        assert_eq!(find_induced_even_cycle(&Graph::cycle(5).unwrap(), &lim()), Search::Absent);
        assert_eq!(find_induced_even_cycle(&Graph::complete(4).unwrap(), &lim()), Search::Absent);
        let big = Graph::cycle(20).unwrap();
        assert_eq!(
            find_induced_even_cycle(&big, &lim()),
            Search::Undecided { nodes: 20, cutoff: 16 }
        );
    }

    #[test]
    fn odd_cycle_search() {
        let found = longest_induced_odd_cycle(&Graph::cycle(5).unwrap(), &lim());
        assert_eq!(found.found().unwrap().size(), 5);
        assert_eq!(longest_induced_odd_cycle(&Graph::cycle(4).unwrap(), &lim()), Search::Absent);
        let k4 = longest_induced_odd_cycle(&Graph::complete(4).unwrap(), &lim());
        assert_eq!(k4, Search::Found(SubgraphCertificate::Cycle { nodes: vec![0, 1, 2] }));
    }

    #[test]
    fn chain_search() {
        let len = |g: &Graph| longest_chain(g, &lim()).size();
        assert_eq!(len(&Graph::path(4).unwrap()), 4);
        assert_eq!(len(&Graph::cycle(5).unwrap()), 5);
        assert_eq!(len(&Graph::complete(3).unwrap()), 3);
        assert_eq!(len(&Graph::edgeless(3).unwrap()), 1);

        let k4 = longest_chain(&Graph::complete(4).unwrap(), &lim());
        assert!(matches!(k4, SubgraphCertificate::Chain { induced: false, exhaustive: true, .. }));

        let big = longest_chain(&Graph::cycle(30).unwrap(), &lim());
        assert!(matches!(big, SubgraphCertificate::Chain { exhaustive: false, .. }));
        assert_eq!(big.size(), 30);
        big.verify(&Graph::cycle(30).unwrap()).unwrap();

        let c5 = longest_induced_chain(&Graph::cycle(5).unwrap(), &lim());
        assert_eq!(c5.found().unwrap().size(), 4);
        let k4 = longest_induced_chain(&Graph::complete(4).unwrap(), &lim());
        assert_eq!(k4.found().unwrap().size(), 2);
    }

    #[test]
    fn join_search() {
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(
            find_join(&k33, &lim()),
            Search::Found(SubgraphCertificate::Join { parts: [vec![0, 1, 2], vec![3, 4, 5]], join_d_max: 3 })
        );
        assert_eq!(find_join(&Graph::edgeless(4).unwrap(), &lim()), Search::Absent);
        assert_eq!(find_join(&Graph::edgeless(1).unwrap(), &lim()), Search::Absent);
        assert_eq!(
            find_join(&star(), &lim()),
            Search::Found(SubgraphCertificate::Join { parts: [vec![0], vec![1, 2, 3]], join_d_max: 3 })
        );
    }

    #[test]
    fn join_in_class_maps_to_host() {
        // hub 0 plus leaves 1..3, and a pendant 4 hanging off leaf 1: the
        // degree-1 class is {2, 3, 4}, edgeless, so no join there.
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (1, 4)]).unwrap();
        let classes = degree_classes(&g);
        let leaf_class = classes.iter().find(|c| c.degree == 1).unwrap();
        assert_eq!(find_join_in_class(leaf_class, &lim()), Search::Absent);
        let wheel = Graph::complete(1).unwrap().join(&Graph::cycle(4).unwrap());
        let rim = degree_classes(&wheel).into_iter().find(|c| c.degree == 3).unwrap();
        let join = find_join_in_class(&rim, &lim());
        // C4 on the rim is K2,2: parts {1,3} and {2,4} in host indices.
        assert_eq!(
            join,
            Search::Found(SubgraphCertificate::Join { parts: [vec![1, 3], vec![2, 4]], join_d_max: 2 })
        );
        join.found().unwrap().verify(&wheel).unwrap();
    }

    #[test]
    fn product_certificates() {
        let (c4, p3, k2) = (Graph::cycle(4).unwrap(), Graph::path(3).unwrap(), Graph::complete(2).unwrap());
        let host = c4.cartesian_product(&p3);
        let id: Vec<usize> = (0..12).collect();
        let cert = verify_product_certificate(&host, &c4, &p3, &id).unwrap();
        let SubgraphCertificate::Product { lambda_max_sum, induced, .. } = cert else { panic!() };
        assert!((lambda_max_sum - 7.0).abs() < 1e-9);
        assert!(induced);

        assert!(verify_product_certificate(&c4, &k2, &k2, &[0, 1, 3, 2]).is_ok());
        // Identity map puts (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3 onto the cycle
        // 0-1-2-3: the product edge (0,0)-(1,0) needs host edge (0,2).
        assert_eq!(
            verify_product_certificate(&c4, &k2, &k2, &[0, 1, 2, 3]),
            Err(CertificateError::MissingProductEdge { a1: 0, a2: 0, b1: 1, b2: 0, u: 0, v: 2 })
        );
        assert_eq!(
            verify_product_certificate(&c4, &k2, &k2, &[0, 1, 1, 2]),
            Err(CertificateError::NotInjective(1))
        );
        assert!(matches!(
            verify_product_certificate(&c4, &k2, &k2, &[0, 1]),
            Err(CertificateError::EmbeddingSize { .. })
        ));

        let k4 = Graph::complete(4).unwrap();
        let SubgraphCertificate::Product { induced, .. } = verify_product_certificate(&k4, &k2, &k2, &[0, 1, 2, 3]).unwrap()
        else {
            panic!()
        };
        assert!(!induced);
    }

    #[test]
    fn c4_never_embeds_in_c5() {
        let (c5, k2) = (Graph::cycle(5).unwrap(), Graph::complete(2).unwrap());
        for emb in (0..5).permutations(4) {
            assert!(verify_product_certificate(&c5, &k2, &k2, &emb).is_err());
        }
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&Graph::path(3).unwrap(), &lim()), Ok(1));
        assert_eq!(vertex_connectivity(&Graph::cycle(5).unwrap(), &lim()), Ok(2));
        assert_eq!(vertex_connectivity(&two_k4_bridge(), &lim()), Ok(1));
        assert_eq!(vertex_connectivity(&Graph::complete(5).unwrap(), &lim()), Ok(4));
        assert_eq!(vertex_connectivity(&Graph::complete(1).unwrap(), &lim()), Ok(0));
        assert_eq!(
            vertex_connectivity(&Graph::edgeless(3).unwrap(), &lim()),
            Err(SubgraphError::Disconnected)
        );
    }

    #[test]
    fn max_disconnected_examples() {
        let s = max_disconnected_subgraph(&two_k4_bridge(), &lim()).unwrap();
        // Dropping either bridge end works; dropping node 4 is lexicographically first.
        assert_eq!(
            s,
            Search::Found(SubgraphCertificate::DisconnectedSet { nodes: vec![0, 1, 2, 3, 5, 6, 7] })
        );
        let s = max_disconnected_subgraph(&Graph::cycle(4).unwrap(), &lim()).unwrap();
        assert_eq!(s, Search::Found(SubgraphCertificate::DisconnectedSet { nodes: vec![0, 2] }));
        assert_eq!(max_disconnected_subgraph(&Graph::complete(4).unwrap(), &lim()), Ok(Search::Absent));
    }

    #[test]
    fn cycle_verification_errors() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(verify_induced_cycle(&c5, &[0, 1, 2, 3, 4]), Ok(5));
        assert_eq!(verify_induced_cycle(&c5, &[0, 1, 2]), Err(CertificateError::MissingEdge(2, 0)));
        let w = Graph::complete(1).unwrap().join(&Graph::cycle(4).unwrap());
        assert_eq!(verify_induced_cycle(&w, &[0, 1, 2, 3]), Err(CertificateError::Chord(0, 2)));
        assert_eq!(verify_induced_cycle(&c5, &[0, 1, 0]), Err(CertificateError::RepeatedNode(0)));
        assert!(matches!(verify_induced_cycle(&c5, &[0, 9, 1]), Err(CertificateError::NodeOutOfRange { .. })));
    }

    #[test]
    fn join_and_disconnected_verification() {
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert!(verify_join(&k33, &[0, 1], &[3, 4, 5]).is_ok());
        assert_eq!(verify_join(&k33, &[0, 1], &[2]), Err(CertificateError::MissingEdge(0, 2)));
        assert_eq!(verify_join(&k33, &[], &[2]), Err(CertificateError::EmptyPart(0)));
        assert!(verify_disconnected_set(&k33, &[0, 1]).is_ok());
        assert_eq!(verify_disconnected_set(&k33, &[0, 3]), Err(CertificateError::SetConnected));
    }

    /// Every induced cycle by brute force over node subsets: a subset
    /// induces a cycle iff it is connected and 2-regular.
    fn induced_cycle_sets(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.node_count();
        let mut out = Vec::new();
        for k in 3..=n {
            for s in (0..n).combinations(k) {
                let sub = g.induced_subgraph(&s).unwrap().graph;
                if sub.is_connected() && sub.degrees().degrees.iter().all(|&d| d == 2) {
                    out.push(s);
                }
            }
        }
        out
    }

    fn induced_path_sets(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.node_count();
        let mut out = Vec::new();
        for k in 1..=n {
            for s in (0..n).combinations(k) {
                let sub = g.induced_subgraph(&s).unwrap().graph;
                let d = sub.degrees();
                if sub.is_connected() && d.d_max <= 2 && sub.edge_count() == k - 1 {
                    out.push(s);
                }
            }
        }
        out
    }

    fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
        (min_n..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut pairs = Vec::new();
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in (u + 1)..n {
                        if it.next().unwrap() {
                            pairs.push((u, v));
                        }
                    }
                }
                Graph::from_edge_list(n, &pairs).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn cycle_enumeration_matches_subsets(g in arb_graph(1, 8)) {
            let mut found = Vec::new();
            for_each_induced_cycle(&g, |c| {
                verify_induced_cycle(&g, c).unwrap();
                found.push(sorted(c));
            });
            found.sort();
            let mut want = induced_cycle_sets(&g);
            want.sort();
            prop_assert_eq!(found, want);
        }

        #[test]
        fn path_search_matches_subsets(g in arb_graph(1, 8)) {
            let best = induced_path_sets(&g).iter().map(Vec::len).max().unwrap();
            let cert = longest_induced_chain(&g, &lim());
            let cert = cert.found().unwrap();
            prop_assert_eq!(cert.size(), best);
            cert.verify(&g).unwrap();
        }

        #[test]
        fn searches_return_sound_witnesses(g in arb_graph(2, 10)) {
            let limits = lim();
            for s in [find_induced_even_cycle(&g, &limits), longest_induced_odd_cycle(&g, &limits), find_join(&g, &limits)] {
                if let Search::Found(c) = s {
                    prop_assert!(c.verify(&g).is_ok(), "{c:?}");
                }
            }
            let chain = longest_chain(&g, &limits);
            prop_assert!(chain.verify(&g).is_ok());
            if g.is_connected() {
                if let Search::Found(c) = max_disconnected_subgraph(&g, &limits).unwrap() {
                    prop_assert!(c.verify(&g).is_ok());
                }
            }
        }

        #[test]
        fn c4_duality(g in arb_graph(4, 9)) {
            // Induced C4 in g iff induced 2K2 in the complement.
            let has_c4 = induced_cycle_sets(&g).iter().any(|s| s.len() == 4);
            let gc = g.complement();
            let n = g.node_count();
            let has_2k2 = (0..n).combinations(4).any(|s| {
                let sub = gc.induced_subgraph(&s).unwrap().graph;
                sub.edge_count() == 2 && sub.degrees().degrees.iter().all(|&d| d == 1)
            });
            prop_assert_eq!(has_c4, has_2k2);
        }

        #[test]
        fn fiedler_below_connectivity(g in arb_graph(2, 10)) {
            prop_assume!(g.is_connected() && !g.is_complete());
            let l2 = spectra::laplacian_spectrum(&g).unwrap().values()[1];
            let kappa = vertex_connectivity(&g, &lim()).unwrap();
            prop_assert!(l2 <= kappa as f64 + 1e-8);
        }
    }

    #[test]
    fn chain_and_cycle_consistency() {
        for k in 3..=12 {
            let c = Graph::cycle(k).unwrap();
            assert_eq!(longest_chain(&c, &lim()).size(), k);
            if k % 2 == 1 {
                assert_eq!(longest_induced_odd_cycle(&c, &lim()).found().unwrap().size(), k);
            }
        }
    }
}
