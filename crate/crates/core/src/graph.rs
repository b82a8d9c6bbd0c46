//! Simple undirected graphs on contiguous 0-based node indices.
//!
//! A [`Graph`] is immutable once built. Every constructor validates its input,
//! so downstream code can rely on: no self-loops, no duplicate edges, every
//! endpoint in range, and at least one node.

use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one node")]
    Empty,
    #[error("node {node} out of range for graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("duplicate node {0} in subset")]
    DuplicateNode(usize),
    #[error("{family} requires size >= {min}, got {got}")]
    TooSmall { family: &'static str, min: usize, got: usize },
    #[error("edge ({0}, {1}) already present")]
    EdgePresent(usize, usize),
}

/// Simple undirected graph. Edges are stored as `(u, v)` with `u < v`, sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<bool>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Per-node degrees plus the extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub d_min: usize,
    pub d_max: usize,
}

/// An induced subgraph together with the host index of each of its nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the host node that became node `i`.
    pub original: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicates (in either orientation)
    /// are rejected rather than merged.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![vec![false; n]; n];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for node in [u, v] {
                if node >= n {
                    return Err(GraphError::NodeOutOfRange { node, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u][v] {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u][v] = true;
            adj[v][u] = true;
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        Ok(Graph { n, edges, adj })
    }

    fn from_matrix(adj: Vec<Vec<bool>>) -> Self {
        let n = adj.len();
        let edges = (0..n).tuple_combinations().filter(|&(u, v)| adj[u][v]).collect();
        Graph { n, edges, adj }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Panics if either node is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().enumerate().filter(|(_, &a)| a).map(|(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&a| a).count()
    }

    pub fn degrees(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let d_min = degrees.iter().copied().min().unwrap_or(0);
        let d_max = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, d_min, d_max }
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff a traversal from node 0 reaches every node.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == self.n
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|u| (0..self.n).map(|v| u != v && !self.adj[u][v]).collect())
            .collect();
        Graph::from_matrix(adj)
    }

    /// Induced subgraph on `nodes`; node `i` of the result is `nodes[i]`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Result<InducedSubgraph, GraphError> {
        if nodes.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut used = vec![false; self.n];
        for &v in nodes {
            if v >= self.n {
                return Err(GraphError::NodeOutOfRange { node: v, n: self.n });
            }
            if used[v] {
                return Err(GraphError::DuplicateNode(v));
            }
            used[v] = true;
        }
        let adj = nodes
            .iter()
            .map(|&u| nodes.iter().map(|&v| self.adj[u][v]).collect())
            .collect();
        Ok(InducedSubgraph {
            graph: Graph::from_matrix(adj),
            original: nodes.to_vec(),
        })
    }

    /// Copy of this graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        for node in [u, v] {
            if node >= self.n {
                return Err(GraphError::NodeOutOfRange { node, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u][v] {
            return Err(GraphError::EdgePresent(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u][v] = true;
        adj[v][u] = true;
        Ok(Graph::from_matrix(adj))
    }

    /// Cycle `C_k` with edges `{i, i+1 mod k}`.
    pub fn cycle(k: usize) -> Result<Graph, GraphError> {
        if k < 3 {
            return Err(GraphError::TooSmall { family: "cycle", min: 3, got: k });
        }
        let pairs: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::from_edge_list(k, &pairs)
    }

    /// Path (chain) `P_k` with edges `{i, i+1}`.
    pub fn path(k: usize) -> Result<Graph, GraphError> {
        if k < 1 {
            return Err(GraphError::TooSmall { family: "path", min: 1, got: k });
        }
        let pairs: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(k, &pairs)
    }

    pub fn complete(k: usize) -> Result<Graph, GraphError> {
        if k < 1 {
            return Err(GraphError::TooSmall { family: "complete", min: 1, got: k });
        }
        Ok(Graph::from_matrix(
            (0..k).map(|u| (0..k).map(|v| u != v).collect()).collect(),
        ))
    }

    pub fn edgeless(k: usize) -> Result<Graph, GraphError> {
        if k < 1 {
            return Err(GraphError::TooSmall { family: "edgeless", min: 1, got: k });
        }
        Ok(Graph::from_matrix(vec![vec![false; k]; k]))
    }

    /// `K_{a,b}`; the first `a` nodes form one side.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
        let small = a.min(b);
        if small < 1 {
            return Err(GraphError::TooSmall { family: "complete_bipartite", min: 1, got: small });
        }
        Ok(Graph::edgeless(a)?.join(&Graph::edgeless(b)?))
    }

    /// Disjoint union plus every edge between the two parts. Nodes of `self`
    /// keep their indices; nodes of `other` are shifted by `self.node_count()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n, other.n);
        let n = n1 + n2;
        let adj = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| match (u < n1, v < n1) {
                        (true, true) => self.adj[u][v],
                        (false, false) => other.adj[u - n1][v - n1],
                        _ => true,
                    })
                    .collect()
            })
            .collect();
        Graph::from_matrix(adj)
    }

    /// Cartesian product; node `(i, j)` is index `i * other.node_count() + j`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let adj = (0..n)
            .map(|x| {
                let (x1, x2) = (x / n2, x % n2);
                (0..n)
                    .map(|y| {
                        let (y1, y2) = (y / n2, y % n2);
                        (x2 == y2 && self.adj[x1][y1]) || (x1 == y1 && other.adj[x2][y2])
                    })
                    .collect()
            })
            .collect();
        Graph::from_matrix(adj)
    }
}
