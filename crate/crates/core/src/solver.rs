//! Exact `g(n)`: the minimum total weight over all SED-pairs of order `n`.
//!
//! Every unordered vertex pair is assigned one of `-1`, `+1` or absent, in
//! lexicographic pair order, so a single search tree covers all graphs and
//! all signings. Pruning never changes the optimum:
//!
//! * weight bound: each unassigned pair contributes at least `-1`;
//! * SED feasibility: an edge whose neighborhood sum cannot reach `1` even
//!   if every open pair at its endpoints became `+1` kills the branch;
//! * optional symmetry break: vertex 0's incidence pattern is sorted
//!   (`+1`, then `-1`, then absent), which any graph satisfies after
//!   relabeling vertices `1..n`.
//!
//! Work is split by fixed-depth prefixes of the tree; workers pull prefixes
//! from a shared counter and share a monotonically improving incumbent.

use std::sync::atomic::{AtomicI64, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::blowup::restricted_class_check;
use crate::error::{Error, Result};
use crate::graph::{check_adjacent_vertex_sum_lemma, verify_sed, Edge, Sign, SignedGraph};

pub const DEFAULT_MAX_N_GUARD: usize = 7;
const PREFIX_DEPTH: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchMode {
    All,
    RestrictedClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub mode: SearchMode,
    pub max_n_guard: usize,
    pub workers: usize,
    pub report_witness: bool,
    pub pruning: bool,
    pub symmetry_break: bool,
}

impl SearchConfig {
    pub fn new(n: usize) -> Self {
        SearchConfig {
            n,
            mode: SearchMode::All,
            max_n_guard: DEFAULT_MAX_N_GUARD,
            workers: 1,
            report_witness: true,
            pruning: true,
            symmetry_break: false,
        }
    }

    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn pruning(mut self, on: bool) -> Self {
        self.pruning = on;
        self
    }

    pub fn symmetry_break(mut self, on: bool) -> Self {
        self.symmetry_break = on;
        self
    }

    pub fn max_n_guard(mut self, guard: usize) -> Self {
        self.max_n_guard = guard;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidInput("order n must be >= 1".into()));
        }
        if self.n > self.max_n_guard {
            return Err(Error::BoundRefusal {
                n: self.n,
                bound: self.max_n_guard,
            });
        }
        if self.workers == 0 {
            return Err(Error::InvalidInput("need at least one worker".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub g_value: i64,
    pub witness: Option<SignedGraph>,
    pub nodes_explored: u64,
    pub mode: SearchMode,
}

// Branch order: negative first so low incumbents appear early.
const VALUES: [i8; 3] = [-1, 1, 0];

fn rank(v: i8) -> u8 {
    match v {
        1 => 2,
        -1 => 1,
        _ => 0,
    }
}

struct Shared {
    incumbent: AtomicI64,
    nodes: AtomicU64,
    next_task: AtomicUsize,
    best: Mutex<Option<(i64, Vec<i8>)>>,
}

struct Worker<'a> {
    n: usize,
    pairs: &'a [(usize, usize)],
    cfg: &'a SearchConfig,
    shared: &'a Shared,
    weight: Vec<i8>,
    assigned: Vec<i8>,
    sums: Vec<i64>,
    open: Vec<usize>,
    total: i64,
    nodes: u64,
    local_best: i64,
    local_witness: Option<Vec<i8>>,
}

impl<'a> Worker<'a> {
    fn new(cfg: &'a SearchConfig, pairs: &'a [(usize, usize)], shared: &'a Shared) -> Self {
        let n = cfg.n;
        Worker {
            n,
            pairs,
            cfg,
            shared,
            weight: vec![0; n * n],
            assigned: vec![0; pairs.len()],
            sums: vec![0; n],
            open: vec![n - 1; n],
            total: 0,
            nodes: 0,
            local_best: i64::MAX,
            local_witness: None,
        }
    }

    fn bound(&self) -> i64 {
        self.local_best
            .min(self.shared.incumbent.load(Ordering::Relaxed))
    }

    /// Assigns `val` to pair `idx`; returns false if the branch is dead.
    fn push(&mut self, idx: usize, val: i8) -> bool {
        let (i, j) = self.pairs[idx];
        self.assigned[idx] = val;
        self.weight[i * self.n + j] = val;
        self.weight[j * self.n + i] = val;
        self.sums[i] += val as i64;
        self.sums[j] += val as i64;
        self.open[i] -= 1;
        self.open[j] -= 1;
        self.total += val as i64;
        self.nodes += 1;

        if self.cfg.symmetry_break && i == 0 && j >= 2 && rank(val) > rank(self.assigned[idx - 1]) {
            return false;
        }
        if !self.cfg.pruning {
            return true;
        }
        let remaining = (self.pairs.len() - idx - 1) as i64;
        if self.total - remaining >= self.bound() {
            return false;
        }
        self.endpoints_feasible(i) && self.endpoints_feasible(j)
    }

    fn endpoints_feasible(&self, x: usize) -> bool {
        let n = self.n;
        (0..n).all(|y| {
            let w = self.weight[x * n + y] as i64;
            w == 0 || self.sums[x] + self.sums[y] - w + (self.open[x] + self.open[y]) as i64 >= 1
        })
    }

    fn pop(&mut self, idx: usize) {
        let (i, j) = self.pairs[idx];
        let val = self.assigned[idx];
        self.assigned[idx] = 0;
        self.weight[i * self.n + j] = 0;
        self.weight[j * self.n + i] = 0;
        self.sums[i] -= val as i64;
        self.sums[j] -= val as i64;
        self.open[i] += 1;
        self.open[j] += 1;
        self.total -= val as i64;
    }

    fn leaf(&mut self) {
        if self.total >= self.bound() {
            return;
        }
        let n = self.n;
        let sed = self.pairs.iter().all(|&(u, v)| {
            let w = self.weight[u * n + v] as i64;
            w == 0 || self.sums[u] + self.sums[v] - w >= 1
        });
        if !sed {
            return;
        }
        if self.cfg.mode == SearchMode::RestrictedClass {
            let nonneg = |v: usize| self.sums[v] >= 0;
            let ok = self
                .pairs
                .iter()
                .all(|&(u, v)| match self.weight[u * n + v] {
                    -1 => nonneg(u) != nonneg(v),
                    1 => nonneg(u) && nonneg(v),
                    _ => true,
                });
            if !ok {
                return;
            }
        }
        self.local_best = self.total;
        self.local_witness = Some(self.assigned.clone());
        self.shared
            .incumbent
            .fetch_min(self.total, Ordering::Relaxed);
    }

    fn dfs(&mut self, idx: usize) {
        if idx == self.pairs.len() {
            self.leaf();
            return;
        }
        for val in VALUES {
            if self.push(idx, val) {
                self.dfs(idx + 1);
            }
            self.pop(idx);
        }
    }

    /// Replays prefix `task` (base-3 digits over the first `depth` pairs)
    /// and searches below it.
    fn run_task(&mut self, mut task: usize, depth: usize) {
        let mut pushed = 0;
        let mut alive = true;
        for idx in 0..depth {
            let val = VALUES[task % 3];
            task /= 3;
            pushed += 1;
            if !self.push(idx, val) {
                alive = false;
                break;
            }
        }
        if alive {
            self.dfs(depth);
        }
        for idx in (0..pushed).rev() {
            self.pop(idx);
        }
    }

    fn run(mut self, depth: usize, tasks: usize) {
        loop {
            let t = self.shared.next_task.fetch_add(1, Ordering::Relaxed);
            if t >= tasks {
                break;
            }
            self.run_task(t, depth);
        }
        self.shared.nodes.fetch_add(self.nodes, Ordering::Relaxed);
        if let Some(w) = self.local_witness.take() {
            let mut best = self.shared.best.lock().unwrap();
            if best.as_ref().is_none_or(|(v, _)| self.local_best < *v) {
                *best = Some((self.local_best, w));
            }
        }
    }
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn assignment_graph(n: usize, pairs: &[(usize, usize)], vals: &[i8]) -> SignedGraph {
    let edges = pairs
        .iter()
        .zip(vals)
        .filter_map(|(&(u, v), &w)| Sign::from_value(w as i64).map(|s| Edge::new(u, v, s)))
        .collect();
    SignedGraph::new(n, edges).expect("assignment graph is simple")
}

/// Exact `g(n)` (or its restricted-class analogue) with a witness.
///
/// The empty graph seeds the incumbent, so results are at most zero.
pub fn solve_g(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let n = config.n;
    let pairs = vertex_pairs(n);
    let depth = pairs.len().min(PREFIX_DEPTH);
    let tasks = 3usize.pow(depth as u32);
    let shared = Shared {
        incumbent: AtomicI64::new(0),
        nodes: AtomicU64::new(0),
        next_task: AtomicUsize::new(0),
        best: Mutex::new(None),
    };

    let workers = config.workers.min(tasks).max(1);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            let worker = Worker::new(config, &pairs, &shared);
            scope.spawn(move || worker.run(depth, tasks));
        }
    });

    let (g_value, witness) = match shared.best.into_inner().unwrap() {
        Some((v, vals)) if v < 0 => (v, assignment_graph(n, &pairs, &vals)),
        _ => (0, SignedGraph::empty(n)),
    };
    Ok(SearchResult {
        n,
        g_value,
        witness: config.report_witness.then_some(witness),
        nodes_explored: shared.nodes.into_inner(),
        mode: config.mode,
    })
}

/// Checks every result against `g(n) >= -n^2/25` (all SED-pairs) or
/// `>= -n^2/54` (restricted class), and every witness against its claims.
pub fn verify_lower_bounds(results: &[SearchResult]) -> Result<()> {
    for r in results {
        let n2 = (r.n * r.n) as i64;
        let (denom, label) = match r.mode {
            SearchMode::All => (25, "-n^2/25"),
            SearchMode::RestrictedClass => (54, "-n^2/54"),
        };
        let witness_str = || {
            r.witness
                .as_ref()
                .map(|w| {
                    w.edges()
                        .iter()
                        .map(|e| format!("{}-{}:{}", e.u, e.v, e.w))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default()
        };
        if denom * r.g_value < -n2 {
            return Err(Error::BoundViolation {
                n: r.n,
                g: r.g_value,
                bound: label.into(),
                witness: witness_str(),
            });
        }
        if let Some(w) = &r.witness {
            let report = verify_sed(w);
            if !report.is_sed || report.total_weight != r.g_value {
                return Err(Error::Contract(format!(
                    "witness for n={} is not a SED-pair of weight {}",
                    r.n, r.g_value
                )));
            }
            if !check_adjacent_vertex_sum_lemma(w)? {
                return Err(Error::Contract(format!(
                    "witness for n={} breaks s_u + s_v >= 0: {}",
                    r.n,
                    witness_str()
                )));
            }
            if r.mode == SearchMode::RestrictedClass && !restricted_class_check(w) {
                return Err(Error::Contract(format!(
                    "witness for n={} is outside the restricted class",
                    r.n
                )));
            }
        }
    }
    Ok(())
}
