//! Generators for the circulant band graphs, complete graphs, and the
//! Pell-parameterized extremal SED-pair.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{verify_sed, vertex_sums, Edge, Sign, SignedGraph};

/// Positive solution of `p^2 = 2 q^2 + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PellPair {
    p: u64,
    q: u64,
}

impl PellPair {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidInput(
                "Pell pair needs positive p and q".into(),
            ));
        }
        let lhs = (p as u128).checked_mul(p as u128);
        let rhs = (q as u128)
            .checked_mul(q as u128)
            .and_then(|x| x.checked_mul(2))
            .and_then(|x| x.checked_add(1));
        match (lhs, rhs) {
            (Some(l), Some(r)) if l == r => Ok(PellPair { p, q }),
            (Some(_), Some(_)) => Err(Error::InvalidInput(format!(
                "({p}, {q}) does not satisfy p^2 = 2q^2 + 1"
            ))),
            _ => Err(Error::Overflow("Pell invariant")),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    fn next(&self) -> Result<Self> {
        let step = |a: u64, b: u64, c: u64, d: u64| {
            a.checked_mul(b)
                .and_then(|x| c.checked_mul(d).and_then(|y| x.checked_add(y)))
        };
        let p = step(3, self.p, 4, self.q).ok_or(Error::Overflow("Pell recurrence"))?;
        let q = step(2, self.p, 3, self.q).ok_or(Error::Overflow("Pell recurrence"))?;
        PellPair::new(p, q)
    }
}

/// First `count` positive Pell pairs via `(p, q) <- (3p + 4q, 2p + 3q)`.
pub fn pell_solutions(count: usize) -> Result<Vec<PellPair>> {
    if count == 0 {
        return Err(Error::InvalidInput(
            "need at least one Pell solution".into(),
        ));
    }
    let mut out = Vec::with_capacity(count);
    let mut cur = PellPair { p: 3, q: 2 };
    out.push(cur);
    while out.len() < count {
        cur = cur.next()?;
        out.push(cur);
    }
    Ok(out)
}

/// `count`-th Pell pair, 1-based.
pub fn pell_solution(index: usize) -> Result<PellPair> {
    Ok(*pell_solutions(index)?.last().unwrap())
}

/// Parameters of the bipartite band graph between `a` blocks on the X side
/// and `b` blocks on the Y side, all of size `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CirculantBipartiteSpec {
    pub a: usize,
    pub b: usize,
    pub k: usize,
    pub l: usize,
}

impl CirculantBipartiteSpec {
    pub fn validate(&self) -> Result<()> {
        if self.a == 0 || self.b == 0 || self.k == 0 || self.l == 0 {
            return Err(Error::InvalidSpec(format!(
                "all of a, b, k, l must be >= 1: {self:?}"
            )));
        }
        if self.k > self.l {
            return Err(Error::InvalidSpec(format!(
                "band width k={} exceeds l={}",
                self.k, self.l
            )));
        }
        Ok(())
    }

    pub fn x_len(&self) -> usize {
        self.a * self.l
    }

    pub fn y_len(&self) -> usize {
        self.b * self.l
    }
}

/// Parameters of the band graph on `2l` blocks of size `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CirculantSpec {
    pub a: usize,
    pub k: usize,
    pub l: usize,
}

impl CirculantSpec {
    pub fn validate(&self) -> Result<()> {
        if self.a == 0 || self.k == 0 || self.l == 0 {
            return Err(Error::InvalidSpec(format!(
                "all of a, k, l must be >= 1: {self:?}"
            )));
        }
        if self.k >= self.l {
            return Err(Error::InvalidSpec(format!(
                "band width k={} must be below l={}",
                self.k, self.l
            )));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.a * self.l
    }
}

// X vertex g of block i sits at x_off + i*l + g; likewise for Y. The pair is
// an edge iff (g - h) mod l is one of 1..=k read mod l, so k == l covers
// every residue.
fn bipartite_band_pairs(
    spec: CirculantBipartiteSpec,
    x_off: usize,
    y_off: usize,
) -> impl Iterator<Item = (usize, usize)> {
    let l = spec.l;
    (0..spec.a).flat_map(move |i| {
        (0..spec.b).flat_map(move |j| {
            (0..l).flat_map(move |g| {
                (0..l)
                    .filter(move |&h| (g + l - h + l - 1) % l < spec.k)
                    .map(move |h| (x_off + i * l + g, y_off + j * l + h))
            })
        })
    })
}

fn band_pairs(spec: CirculantSpec, off: usize) -> impl Iterator<Item = (usize, usize)> {
    let blocks = 2 * spec.l;
    let a = spec.a;
    (0..blocks).flat_map(move |i| {
        (i + 1..blocks)
            .filter(move |&j| {
                let d = j - i;
                d <= spec.k || d >= blocks - spec.k
            })
            .flat_map(move |j| {
                (0..a).flat_map(move |x| (0..a).map(move |y| (off + i * a + x, off + j * a + y)))
            })
    })
}

fn clique_pairs(range: Range<usize>) -> impl Iterator<Item = (usize, usize)> {
    let end = range.end;
    range.flat_map(move |u| (u + 1..end).map(move |v| (u, v)))
}

fn weighted(pairs: impl Iterator<Item = (usize, usize)>, w: Sign) -> impl Iterator<Item = Edge> {
    pairs.map(move |(u, v)| Edge::new(u, v, w))
}

/// Bipartite band graph; X vertices come first, then Y.
pub fn circulant_bipartite(spec: CirculantBipartiteSpec, weight: Sign) -> Result<SignedGraph> {
    spec.validate()?;
    let n = spec.x_len() + spec.y_len();
    SignedGraph::new(
        n,
        weighted(bipartite_band_pairs(spec, 0, spec.x_len()), weight).collect(),
    )
}

/// Band graph on `2al` vertices in `2l` consecutive blocks of size `a`;
/// blocks at cyclic distance `1..=k` are joined completely.
pub fn circulant_unipartite(spec: CirculantSpec, weight: Sign) -> Result<SignedGraph> {
    spec.validate()?;
    SignedGraph::new(
        spec.vertex_count(),
        weighted(band_pairs(spec, 0), weight).collect(),
    )
}

pub fn complete_graph(n: usize, weight: Sign) -> Result<SignedGraph> {
    if n == 0 {
        return Err(Error::InvalidSpec("complete graph needs n >= 1".into()));
    }
    SignedGraph::new(n, weighted(clique_pairs(0..n), weight).collect())
}

/// The Pell-parameterized SED-pair together with its vertex classes.
#[derive(Debug, Clone)]
pub struct Theorem2Construction {
    pub pell: PellPair,
    pub graph: SignedGraph,
    pub a: Range<usize>,
    pub b: Range<usize>,
    pub c: Range<usize>,
    pub apex: usize,
}

/// Expected vertex sums `(s_a, s_b, s_c, s_x)` of the construction.
pub fn theorem2_vertex_sums(pq: PellPair) -> (i64, i64, i64, i64) {
    let (p, q) = (pq.p as i64, pq.q as i64);
    (1, 2 * p * p - 2 * q * q, 1 - 2 * q * q, 4 * p * (p + q))
}

/// Builds the SED-pair on `4(p+q)p + 1` vertices.
///
/// Layout: A (`2p^2`), then B (`2pq`), then C (`2(p+q)p`), then the apex `x`.
/// Positive edges: complete A-B, clique on B, apex to everything. Negative
/// edges: band graph on A with `(a, k, l) = (p, q, p)` and bipartite band
/// B-C with `(a, b, k, l) = (2q, 2(p+q), q, p)`.
pub fn theorem2_construction(pq: PellPair) -> Result<Theorem2Construction> {
    let pq = PellPair::new(pq.p, pq.q)?;
    let p = usize::try_from(pq.p).map_err(|_| Error::Overflow("vertex count"))?;
    let q = usize::try_from(pq.q).map_err(|_| Error::Overflow("vertex count"))?;
    let size = |f: &dyn Fn() -> Option<usize>| f().ok_or(Error::Overflow("vertex count"));
    let na = size(&|| p.checked_mul(p)?.checked_mul(2))?;
    let nb = size(&|| p.checked_mul(q)?.checked_mul(2))?;
    let nc = size(&|| p.checked_add(q)?.checked_mul(p)?.checked_mul(2))?;
    let apex = na + nb + nc;
    let n = apex + 1;
    let (ra, rb, rc) = (0..na, na..na + nb, na + nb..apex);

    let a_band = CirculantSpec { a: p, k: q, l: p };
    let bc_band = CirculantBipartiteSpec {
        a: 2 * q,
        b: 2 * (p + q),
        k: q,
        l: p,
    };
    a_band.validate()?;
    bc_band.validate()?;

    let ab = ra.clone().flat_map(|u| rb.clone().map(move |v| (u, v)));
    let star = (0..apex).map(|u| (u, apex));

    let mut edges: Vec<Edge> = Vec::new();
    edges.extend(weighted(ab, Sign::Pos));
    edges.extend(weighted(clique_pairs(rb.clone()), Sign::Pos));
    edges.extend(weighted(star, Sign::Pos));
    edges.extend(weighted(band_pairs(a_band, ra.start), Sign::Neg));
    edges.extend(weighted(
        bipartite_band_pairs(bc_band, rb.start, rc.start),
        Sign::Neg,
    ));

    // Rejects any pair shared between the five edge sets.
    let graph = SignedGraph::new(n, edges)
        .map_err(|e| Error::Contract(format!("edge sets are not disjoint: {e}")))?;

    let built = Theorem2Construction {
        pell: pq,
        graph,
        a: ra,
        b: rb,
        c: rc,
        apex,
    };
    built.check_postconditions()?;
    Ok(built)
}

impl Theorem2Construction {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    fn check_postconditions(&self) -> Result<()> {
        let in_a = |v: usize| self.a.contains(&v);
        let in_c = |v: usize| self.c.contains(&v);
        if self
            .graph
            .edges()
            .iter()
            .any(|e| (in_a(e.u) && in_c(e.v)) || (in_c(e.u) && in_a(e.v)))
        {
            return Err(Error::Contract("construction has an A-C edge".into()));
        }

        let s = vertex_sums(&self.graph);
        let (sa, sb, sc, sx) = theorem2_vertex_sums(self.pell);
        let classes = [(&self.a, sa, "A"), (&self.b, sb, "B"), (&self.c, sc, "C")];
        for (range, want, name) in classes {
            if let Some(v) = range.clone().find(|&v| s[v] != want) {
                return Err(Error::Contract(format!(
                    "vertex {v} in {name} has sum {} instead of {want}",
                    s[v]
                )));
            }
        }
        if s[self.apex] != sx {
            return Err(Error::Contract(format!(
                "apex sum {} != {sx}",
                s[self.apex]
            )));
        }

        let report = verify_sed(&self.graph);
        if !report.is_sed {
            return Err(Error::Contract("construction is not a SED-pair".into()));
        }
        let expected = theorem2_bound_check(self.pell)?.total;
        if report.total_weight as i128 != expected {
            return Err(Error::Contract(format!(
                "total weight {} != closed form {expected}",
                report.total_weight
            )));
        }
        Ok(())
    }
}

/// Exact order and total weight of the construction, with `s / n^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    pub n: i128,
    pub total: i128,
    /// Denominator of the exact ratio `total / n_squared`.
    pub n_squared: i128,
    pub ratio: f64,
}

/// `-1 / (8 (1 + sqrt 2)^2)`, the limit of `s / n^2` along the Pell sequence.
pub fn theorem2_limit_ratio() -> f64 {
    let r = 1.0 + std::f64::consts::SQRT_2;
    -1.0 / (8.0 * r * r)
}

/// Order `n = 4(p+q)p + 1` and total weight `-2p^2q^2 + 4p^2 + 5pq` in exact
/// checked integer arithmetic.
pub fn theorem2_bound_check(pq: PellPair) -> Result<BoundCheck> {
    let ovf = || Error::Overflow("construction bound");
    let p = pq.p as i128;
    let q = pq.q as i128;
    let n = p
        .checked_add(q)
        .and_then(|x| x.checked_mul(p))
        .and_then(|x| x.checked_mul(4))
        .and_then(|x| x.checked_add(1))
        .ok_or_else(ovf)?;
    let pp = p.checked_mul(p).ok_or_else(ovf)?;
    let pq_ = p.checked_mul(q).ok_or_else(ovf)?;
    let neg = pq_
        .checked_mul(pq_)
        .and_then(|x| x.checked_mul(2))
        .ok_or_else(ovf)?;
    let total = pp
        .checked_mul(4)
        .and_then(|x| pq_.checked_mul(5).and_then(|y| x.checked_add(y)))
        .and_then(|x| x.checked_sub(neg))
        .ok_or_else(ovf)?;
    let n_squared = n.checked_mul(n).ok_or_else(ovf)?;
    Ok(BoundCheck {
        n,
        total,
        n_squared,
        ratio: total as f64 / n_squared as f64,
    })
}
