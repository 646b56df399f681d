//! Signed graph model and the signed edge domination check.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Edge weight, always `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    #[inline]
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_value(w: i64) -> Option<Sign> {
        match w {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Pos => f.write_str("+1"),
            Sign::Neg => f.write_str("-1"),
        }
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "+1" | "1" | "+" => Ok(Sign::Pos),
            "-1" | "-" => Ok(Sign::Neg),
            other => Err(format!("weight must be +1 or -1, got `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: Sign,
}

impl Edge {
    pub fn new(u: usize, v: usize, w: Sign) -> Self {
        Edge { u, v, w }
    }

    /// Endpoints as an ordered pair `(min, max)`.
    #[inline]
    pub fn key(&self) -> (usize, usize) {
        if self.u < self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }

    #[inline]
    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// A simple undirected graph on vertices `0..n` with a `±1` weight per edge.
///
/// Construction validates the invariants (no loops, no repeated pairs,
/// endpoints in range), so every value of this type is a valid pair `(G, f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} ({}, {}) has an endpoint outside 0..{n}",
                    e.u, e.v
                )));
            }
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} is a self-loop at {}",
                    e.u
                )));
            }
        }
        let mut keys: Vec<(usize, usize)> = edges.iter().map(Edge::key).collect();
        keys.sort_unstable();
        if let Some(w) = keys.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "pair ({}, {}) appears more than once",
                w[0].0, w[0].1
            )));
        }
        Ok(SignedGraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        SignedGraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Builds a graph from `(u, v, w)` triples with `w` in `{+1, -1}`.
    pub fn from_triples(n: usize, triples: &[(usize, usize, i64)]) -> Result<Self> {
        let edges = triples
            .iter()
            .map(|&(u, v, w)| {
                Sign::from_value(w)
                    .map(|w| Edge::new(u, v, w))
                    .ok_or_else(|| Error::InvalidGraph(format!("weight {w} is not +1 or -1")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedGraph::new(n, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> i64 {
        self.edges.iter().map(|e| e.w.value()).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// Unweighted complement; every edge of the result carries `w`.
    pub fn complement(&self, w: Sign) -> SignedGraph {
        let mut adj = vec![false; self.n * self.n];
        for e in &self.edges {
            adj[e.u * self.n + e.v] = true;
            adj[e.v * self.n + e.u] = true;
        }
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !adj[u * self.n + v] {
                    edges.push(Edge::new(u, v, w));
                }
            }
        }
        SignedGraph { n: self.n, edges }
    }

    /// Edges with endpoints normalized to `u < v`, sorted by `(u, v)`.
    pub fn canonical_edges(&self) -> Vec<(usize, usize, Sign)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                let (u, v) = e.key();
                (u, v, e.w)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Equality of the underlying weighted graphs, ignoring edge order and
    /// endpoint orientation.
    pub fn same_graph(&self, other: &SignedGraph) -> bool {
        self.n == other.n && self.canonical_edges() == other.canonical_edges()
    }
}

/// Result of checking the signed edge domination condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SedReport {
    /// `s_v`, the weight sum over edges incident to `v`.
    pub vertex_sums: Vec<i64>,
    /// Closed-neighborhood weight sum of each edge, in edge order.
    pub edge_neighborhood_sums: Vec<i64>,
    pub total_weight: i64,
    pub is_sed: bool,
}

impl SedReport {
    /// Index of the first edge whose neighborhood sum is below one.
    pub fn first_violation(&self) -> Option<usize> {
        self.edge_neighborhood_sums.iter().position(|&s| s < 1)
    }
}

pub fn vertex_sums(g: &SignedGraph) -> Vec<i64> {
    let mut s = vec![0i64; g.n()];
    for e in g.edges() {
        s[e.u] += e.w.value();
        s[e.v] += e.w.value();
    }
    s
}

/// Weight of the closed edge-neighborhood `N[e]`.
///
/// Uses `s_u + s_v - w(e)`: the edge itself is counted once in each endpoint
/// sum.
pub fn edge_neighborhood_sum(g: &SignedGraph, edge: usize) -> Result<i64> {
    let e = g.edges().get(edge).ok_or(Error::EdgeIndex {
        index: edge,
        len: g.edge_count(),
    })?;
    let s = vertex_sums(g);
    Ok(s[e.u] + s[e.v] - e.w.value())
}

pub fn verify_sed(g: &SignedGraph) -> SedReport {
    let vertex_sums = vertex_sums(g);
    let edge_neighborhood_sums: Vec<i64> = g
        .edges()
        .iter()
        .map(|e| vertex_sums[e.u] + vertex_sums[e.v] - e.w.value())
        .collect();
    let is_sed = edge_neighborhood_sums.iter().all(|&s| s >= 1);
    SedReport {
        total_weight: g.total_weight(),
        vertex_sums,
        edge_neighborhood_sums,
        is_sed,
    }
}

/// Checks `s_u + s_v >= 0` on every edge of a SED-pair.
///
/// This holds for every SED-pair, so a `false` here means the input or the
/// SED check is broken. Calling it on a graph that is not SED is a contract
/// error.
pub fn check_adjacent_vertex_sum_lemma(g: &SignedGraph) -> Result<bool> {
    let report = verify_sed(g);
    if !report.is_sed {
        return Err(Error::Contract(format!(
            "adjacent vertex sum lemma needs a SED-pair; edge {} has neighborhood sum {}",
            report.first_violation().unwrap_or(0),
            report
                .first_violation()
                .map(|i| report.edge_neighborhood_sums[i])
                .unwrap_or(0)
        )));
    }
    let s = &report.vertex_sums;
    Ok(g.edges().iter().all(|e| s[e.u] + s[e.v] >= 0))
}
