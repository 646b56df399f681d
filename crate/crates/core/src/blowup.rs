//! k-blow-up and apex augmentation of signed graphs.

use crate::error::{Error, Result};
use crate::graph::{vertex_sums, Edge, Sign, SignedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlowupSpec {
    k: usize,
}

impl BlowupSpec {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSpec(
                "blow-up multiplicity must be >= 1".into(),
            ));
        }
        Ok(BlowupSpec { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Replaces every vertex by `k` pairwise non-adjacent copies; copy `c` of
/// vertex `v` is `v * k + c`. Copies of `u` and `v` are joined iff `uv` is an
/// edge, with the same weight.
pub fn blow_up(g: &SignedGraph, spec: BlowupSpec) -> SignedGraph {
    let k = spec.k;
    let mut edges = Vec::with_capacity(g.edge_count() * k * k);
    for e in g.edges() {
        for cu in 0..k {
            for cv in 0..k {
                edges.push(Edge::new(e.u * k + cu, e.v * k + cv, e.w));
            }
        }
    }
    SignedGraph::new(g.n() * k, edges).expect("blow-up of a simple graph is simple")
}

/// Adds vertex `n` joined to every existing vertex by a `+1` edge.
pub fn apex_augment(g: &SignedGraph) -> SignedGraph {
    let apex = g.n();
    let mut edges = g.edges().to_vec();
    edges.extend((0..apex).map(|v| Edge::new(v, apex, Sign::Pos)));
    SignedGraph::new(apex + 1, edges).expect("apex edges are new")
}

/// Membership test for the class where every `-1` edge joins a vertex with
/// `s_v >= 0` to one with `s_v < 0`, and every `+1` edge lies inside the
/// nonnegative class.
pub fn restricted_class_check(g: &SignedGraph) -> bool {
    let s = vertex_sums(g);
    let nonneg = |v: usize| s[v] >= 0;
    g.edges().iter().all(|e| match e.w {
        Sign::Neg => nonneg(e.u) != nonneg(e.v),
        Sign::Pos => nonneg(e.u) && nonneg(e.v),
    })
}
