//! Graphs maximizing the sum of squared degrees for a given edge count, and
//! the limiting profiles `G` and `H` of that maximum.

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};

/// Largest `n` accepted by [`brute_force_max_sum_deg_sq`].
pub const BRUTE_FORCE_MAX_N: usize = 7;

pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `(n, e)` with both unique decompositions:
/// `e = C(a,2) + b` with `0 <= b < a`, and `C(n,2) - e = C(c,2) + d` with
/// `0 <= d < c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalSpec {
    pub n: usize,
    pub e: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl ExtremalSpec {
    pub fn new(n: usize, e: usize) -> Result<Self> {
        if e > binom2(n) {
            return Err(Error::Domain(format!(
                "e={e} exceeds C({n},2)={}",
                binom2(n)
            )));
        }
        let (a, b) = decompose(e);
        let (c, d) = decompose(binom2(n) - e);
        Ok(ExtremalSpec { n, e, a, b, c, d })
    }
}

fn decompose(e: usize) -> (usize, usize) {
    let mut a = 1;
    while binom2(a + 1) <= e {
        a += 1;
    }
    (a, e - binom2(a))
}

fn quasi_complete_edges(spec: &ExtremalSpec) -> Vec<Edge> {
    let mut edges = Vec::with_capacity(spec.e);
    for u in 0..spec.a {
        for v in u + 1..spec.a {
            edges.push(Edge::new(u, v, Sign::Pos));
        }
    }
    for u in 0..spec.b {
        edges.push(Edge::new(u, spec.a, Sign::Pos));
    }
    edges
}

/// Clique on the first `a` vertices plus vertex `a` joined to the first `b`.
pub fn quasi_complete(n: usize, e: usize) -> Result<SignedGraph> {
    let spec = ExtremalSpec::new(n, e)?;
    Ok(SignedGraph::new(n, quasi_complete_edges(&spec)).expect("quasi-complete graph is simple"))
}

/// Complement of `quasi_complete(n, C(n,2) - e)`.
pub fn quasi_star(n: usize, e: usize) -> Result<SignedGraph> {
    ExtremalSpec::new(n, e)?;
    Ok(quasi_complete(n, binom2(n) - e)?.complement(Sign::Pos))
}

pub fn sum_deg_sq(g: &SignedGraph) -> u64 {
    g.degrees().iter().map(|&d| (d * d) as u64).sum()
}

/// `F(n, e)`: the larger of the quasi-complete and quasi-star values.
pub fn max_sum_deg_sq(n: usize, e: usize) -> Result<u64> {
    Ok(sum_deg_sq(&quasi_complete(n, e)?).max(sum_deg_sq(&quasi_star(n, e)?)))
}

/// Maximum of `sum deg^2` over every labeled graph with `n` vertices and `e`
/// edges, by enumerating all `e`-subsets of vertex pairs.
pub fn brute_force_max_sum_deg_sq(n: usize, e: usize) -> Result<u64> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::BoundRefusal {
            n,
            bound: BRUTE_FORCE_MAX_N,
        });
    }
    let m = binom2(n);
    if e > m {
        return Err(Error::Domain(format!("e={e} exceeds C({n},2)={m}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    if e == 0 {
        return Ok(0);
    }
    // Gosper's hack over all m-bit masks with exactly e bits set.
    let mut mask: u64 = (1u64 << e) - 1;
    let limit = 1u64 << m;
    let mut best = 0;
    while mask < limit {
        let mut deg = [0u64; BRUTE_FORCE_MAX_N];
        let mut bits = mask;
        while bits != 0 {
            let (u, v) = pairs[bits.trailing_zeros() as usize];
            deg[u] += 1;
            deg[v] += 1;
            bits &= bits - 1;
        }
        best = best.max(deg.iter().map(|d| d * d).sum());
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    Ok(best)
}

fn check_unit(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain(format!("alpha={alpha} outside [0, 1]")));
    }
    Ok(())
}

/// `G(alpha) = alpha^(3/2)`, the quasi-complete profile.
pub fn g_alpha(alpha: f64) -> Result<f64> {
    check_unit(alpha)?;
    Ok(alpha.powf(1.5))
}

/// `H(alpha) = (1 - sqrt(1-alpha)) (sqrt(1-alpha) + alpha)`, the quasi-star
/// profile. Equal to `t^3 - 2t^2 + 1` with `t = sqrt(1-alpha)`.
pub fn h_alpha(alpha: f64) -> Result<f64> {
    check_unit(alpha)?;
    let t = (1.0 - alpha).sqrt();
    Ok((1.0 - t) * (t + alpha))
}

pub const CROSSOVER_TOL: f64 = 1e-12;

/// Returns `H^2 - G^2` at `alpha`, after checking it against
/// `t^2 (1-t)^2 (2t^2 - 1)` and its sign: positive below one half, negative
/// above.
pub fn crossover_identity_check(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) || alpha == 0.5 {
        return Err(Error::Domain(format!(
            "crossover check needs alpha in (0,1) minus {{1/2}}, got {alpha}"
        )));
    }
    let (g, h) = (g_alpha(alpha)?, h_alpha(alpha)?);
    let diff = h * h - g * g;
    let t = (1.0 - alpha).sqrt();
    let closed = t * t * (1.0 - t) * (1.0 - t) * (2.0 * t * t - 1.0);
    if (diff - closed).abs() > CROSSOVER_TOL {
        return Err(Error::Contract(format!(
            "H^2 - G^2 = {diff} but t^2(1-t)^2(2t^2-1) = {closed} at alpha={alpha}"
        )));
    }
    let expect_positive = alpha < 0.5;
    if (diff > 0.0) != expect_positive {
        return Err(Error::Contract(format!(
            "H^2 - G^2 has the wrong sign at alpha={alpha}"
        )));
    }
    Ok(diff)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_edges() {
        let s = ExtremalSpec::new(5, 0).unwrap();
        assert_eq!((s.a, s.b), (1, 0));
        assert_eq!((s.c, s.d), (5, 0));
        let s = ExtremalSpec::new(5, 10).unwrap();
        assert_eq!((s.a, s.b), (5, 0));
        assert_eq!((s.c, s.d), (1, 0));
        let s = ExtremalSpec::new(4, 4).unwrap();
        assert_eq!((s.a, s.b), (3, 1));
        assert!(ExtremalSpec::new(4, 7).is_err());
    }

    #[test]
    fn quasi_complete_examples() {
        let g = quasi_complete(4, 3).unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 2, 0]);
        assert_eq!(sum_deg_sq(&g), 12);
        let g = quasi_complete(4, 4).unwrap();
        let mut d = g.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d, vec![3, 2, 2, 1]);
        assert_eq!(sum_deg_sq(&g), 18);
        assert_eq!(quasi_complete(5, 0).unwrap().edge_count(), 0);
        assert!(quasi_complete(3, 4).is_err());
    }

    #[test]
    fn quasi_star_examples() {
        let g = quasi_star(4, 3).unwrap();
        assert_eq!(g.degrees(), vec![1, 1, 1, 3]);
        assert_eq!(sum_deg_sq(&g), 12);
        assert_eq!(quasi_star(4, 6).unwrap().edge_count(), 6);
        let g = quasi_star(5, 4).unwrap();
        assert_eq!(sum_deg_sq(&g), 20);
    }

    #[test]
    fn quasi_star_edge_counts() {
        for n in 1..=9 {
            for e in 0..=binom2(n) {
                assert_eq!(quasi_star(n, e).unwrap().edge_count(), e);
                assert_eq!(quasi_complete(n, e).unwrap().edge_count(), e);
            }
        }
    }

    #[test]
    fn sum_deg_sq_small_graphs() {
        let k3 = SignedGraph::from_triples(3, &[(0, 1, 1), (1, 2, 1), (0, 2, -1)]).unwrap();
        assert_eq!(sum_deg_sq(&k3), 12);
        let k13 = SignedGraph::from_triples(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1)]).unwrap();
        assert_eq!(sum_deg_sq(&k13), 12);
        let p4 = SignedGraph::from_triples(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(sum_deg_sq(&p4), 10);
    }

    #[test]
    fn f_examples() {
        assert_eq!(max_sum_deg_sq(4, 3).unwrap(), 12);
        assert_eq!(max_sum_deg_sq(4, 4).unwrap(), 18);
        for n in 1..=10usize {
            assert_eq!(
                max_sum_deg_sq(n, binom2(n)).unwrap(),
                (n * (n - 1) * (n - 1)) as u64
            );
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_max_sum_deg_sq(4, 3).unwrap(), 12);
        assert_eq!(brute_force_max_sum_deg_sq(4, 4).unwrap(), 18);
        assert_eq!(
            brute_force_max_sum_deg_sq(5, 5).unwrap(),
            max_sum_deg_sq(5, 5).unwrap()
        );
        assert!(matches!(
            brute_force_max_sum_deg_sq(8, 3),
            Err(Error::BoundRefusal { n: 8, .. })
        ));
    }

    #[test]
    fn profile_values() {
        assert_eq!(g_alpha(1.0).unwrap(), 1.0);
        assert_eq!(h_alpha(1.0).unwrap(), 1.0);
        assert_eq!(g_alpha(0.0).unwrap(), 0.0);
        assert_eq!(h_alpha(0.0).unwrap(), 0.0);
        let half = 0.5f64.powf(1.5);
        assert!((g_alpha(0.5).unwrap() - half).abs() < 1e-12);
        assert!((h_alpha(0.5).unwrap() - half).abs() < 1e-12);
        assert!((half - 0.353553).abs() < 1e-6);
        assert!(g_alpha(1.5).is_err());
        assert!(h_alpha(-0.1).is_err());
    }

    #[test]
    fn h_matches_cubic_in_t() {
        for i in 0..=1000 {
            let alpha = i as f64 / 1000.0;
            let t = (1.0 - alpha).sqrt();
            assert!((h_alpha(alpha).unwrap() - (t * t * t - 2.0 * t * t + 1.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn crossover_examples() {
        assert!(crossover_identity_check(0.25).unwrap() > 0.0);
        assert!(crossover_identity_check(0.75).unwrap() < 0.0);
        assert!(crossover_identity_check(0.5).is_err());
        assert!(crossover_identity_check(0.0).is_err());
        let (g, h) = (g_alpha(0.5).unwrap(), h_alpha(0.5).unwrap());
        assert!((h * h - g * g).abs() < 1e-12);
    }

    #[test]
    fn normalized_f_approaches_profile() {
        for alpha in [0.2, 0.5, 0.8] {
            let mut prev = f64::INFINITY;
            for n in [20usize, 40, 80] {
                let e = (alpha * (n * n) as f64 / 2.0).round() as usize;
                let a = 2.0 * e as f64 / (n * n) as f64;
                let lim = g_alpha(a).unwrap().max(h_alpha(a).unwrap());
                let f = max_sum_deg_sq(n, e).unwrap() as f64 / (n * n * n) as f64;
                let dev = (f - lim).abs() / lim;
                assert!(dev < prev, "alpha={alpha} n={n}: {dev} !< {prev}");
                prev = dev;
            }
        }
    }
}
