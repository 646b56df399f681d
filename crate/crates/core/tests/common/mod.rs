#![allow(dead_code)]

use sedgraph::graph::{verify_sed, Edge, Sign, SignedGraph};

/// Every assignment of {absent, +1, -1} to the vertex pairs of `K_n`.
pub fn all_signed_graphs(n: usize) -> impl Iterator<Item = SignedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total).map(move |mut code| {
        let mut edges = Vec::new();
        for &(u, v) in &pairs {
            match code % 3 {
                1 => edges.push(Edge::new(u, v, Sign::Pos)),
                2 => edges.push(Edge::new(u, v, Sign::Neg)),
                _ => {}
            }
            code /= 3;
        }
        SignedGraph::new(n, edges).unwrap()
    })
}

pub fn all_sed_pairs(n: usize) -> impl Iterator<Item = SignedGraph> {
    all_signed_graphs(n).filter(|g| verify_sed(g).is_sed)
}

/// Straight enumeration of `g(n)` with no pruning at all.
pub fn naive_min(n: usize, restricted: bool) -> i64 {
    all_sed_pairs(n)
        .filter(|g| !restricted || sedgraph::blowup::restricted_class_check(g))
        .map(|g| g.total_weight())
        .min()
        .unwrap_or(0)
}

/// Closed-neighborhood sum by scanning every edge that shares an endpoint.
pub fn literal_neighborhood_sum(g: &SignedGraph, idx: usize) -> i64 {
    let e = g.edges()[idx];
    g.edges()
        .iter()
        .filter(|f| f.touches(e.u) || f.touches(e.v))
        .map(|f| f.w.value())
        .sum()
}
