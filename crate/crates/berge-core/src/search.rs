//! Branch-and-bound oracles that compute exact extremal values at desk scale,
//! independently of the closed-form evaluators they are used to verify.
//!
//! Shared search contract: candidates are processed in lexicographic order
//! with include/exclude branching. Pruning is (a) monotone — a partial
//! structure already containing the forbidden path kills its branch, since
//! adding edges never removes one; (b) cardinality — the current value plus
//! the most the remaining slots could add cannot beat the incumbent; and
//! (c) a depth-1 symmetry cut — the first included candidate is pinned to
//! slot 0, the lexicographic representative of the single orbit of
//! candidates under vertex relabeling. Formula values are never consulted
//! as bounds; incumbents come only from explicitly constructed structures.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::binom::{binom, subsets_lex};
use crate::budget::{Budget, BudgetTracker};
use crate::detect::{find_berge_path, path_exists_using_edge, PathTables};
use crate::error::{Error, Result};
use crate::extremal::{
    construct_extremal, construct_redblue_extremal, construct_small_k, g_upper_bound, g_value,
    kr_count_bound, turan_formula, TuranParams,
};
use crate::graph::{count_cliques_in, has_path_len_over, is_pk_free, Graph};
use crate::hypergraph::Hypergraph;
use crate::redblue::RedBlueGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleStatus {
    /// Search space exhausted (up to symmetry); the value is the true maximum.
    Proved,
    /// A budget tripped; the value is the best incumbent found so far.
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum OracleWitness {
    Hypergraph(Hypergraph),
    Graph(Graph),
    RedBlue(RedBlueGraph),
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleResult {
    pub n: u64,
    pub r: u64,
    pub k: u64,
    pub best_value: u64,
    pub witness: OracleWitness,
    pub status: OracleStatus,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
}

impl OracleResult {
    pub fn proved(&self) -> bool {
        self.status == OracleStatus::Proved
    }
}

#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    pub budget: Budget,
    /// Worker count for splitting the branch tree; 1 is fully deterministic.
    pub workers: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            budget: Budget::UNLIMITED,
            workers: 1,
        }
    }
}

/// A decision trail: (candidate slot, choice) for every included candidate.
/// Choice is 0 except for the red-blue oracle (0 = red, 1 = blue).
type Trail = Vec<(u16, u8)>;

/// Cross-thread branch-and-bound bookkeeping.
struct Shared {
    best: AtomicU64,
    best_trail: Mutex<(u64, Option<Trail>)>,
    nodes: AtomicU64,
    stop: AtomicBool,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Shared {
    fn new(incumbent: u64, budget: Budget, start: Instant) -> Self {
        Shared {
            best: AtomicU64::new(incumbent),
            best_trail: Mutex::new((incumbent, None)),
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            max_nodes: budget.max_nodes,
            deadline: budget
                .max_millis
                .map(|ms| start + std::time::Duration::from_millis(ms)),
        }
    }

    #[inline]
    fn best(&self) -> u64 {
        self.best.load(Ordering::Relaxed)
    }

    fn offer(&self, value: u64, trail: &Trail) {
        let prev = self.best.fetch_max(value, Ordering::Relaxed);
        if value > prev {
            let mut guard = self.best_trail.lock().unwrap();
            if value > guard.0 {
                *guard = (value, Some(trail.clone()));
            }
        }
    }

    fn flush(&self, batch: u64) -> bool {
        let total = self.nodes.fetch_add(batch, Ordering::Relaxed) + batch;
        if let Some(max) = self.max_nodes {
            if total > max {
                self.stop.store(true, Ordering::Relaxed);
            }
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                self.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.stop.load(Ordering::Relaxed)
    }

    #[inline]
    fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }
}

const FLUSH_EVERY: u64 = 1024;

struct NodeCounter {
    pending: u64,
}

impl NodeCounter {
    fn new() -> Self {
        NodeCounter { pending: 0 }
    }

    #[inline]
    fn tick(&mut self, shared: &Shared) -> bool {
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            let batch = self.pending;
            self.pending = 0;
            return shared.flush(batch);
        }
        !shared.stopped()
    }

    fn finish(&mut self, shared: &Shared) {
        if self.pending > 0 {
            shared.flush(self.pending);
            self.pending = 0;
        }
    }
}

/// Splits subtree prefixes across a worker pool. Tasks are the surviving
/// decision trails at a fixed depth, produced by a budgeted expansion pass.
fn run_workers<T: Send + Sync>(workers: usize, tasks: &[T], run: impl Fn(&T) + Send + Sync) {
    if tasks.is_empty() {
        return;
    }
    let cursor = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers.min(tasks.len()) {
            scope.spawn(|| loop {
                let i = cursor.fetch_add(1, Ordering::Relaxed);
                if i >= tasks.len() {
                    break;
                }
                run(&tasks[i]);
            });
        }
    });
}

fn split_depth(workers: usize, slots: usize) -> usize {
    if workers <= 1 {
        return slots; // never reached: sequential path skips task collection
    }
    let want = (workers * 8).next_power_of_two().trailing_zeros() as usize + 1;
    want.min(slots)
}

// ---------------------------------------------------------------------------
// Berge-path Turán oracle over r-graphs
// ---------------------------------------------------------------------------

struct HyperCtx<'a> {
    cand: &'a [u64],
    k: usize,
    tables: PathTables,
    trail: Trail,
    counter: NodeCounter,
    collect_at: usize,
    tasks: Vec<Trail>,
}

impl HyperCtx<'_> {
    fn include_feasible(&mut self, slot: usize) -> bool {
        self.tables.push_edge(self.cand[slot]);
        let free = if self.tables.edge_count() < self.k {
            true
        } else {
            let new_id = self.tables.edge_count() - 1;
            let mut inner = BudgetTracker::new(Budget::UNLIMITED);
            !path_exists_using_edge(&self.tables, self.k, new_id, &mut inner)
                .expect("unlimited inner budget")
        };
        if !free {
            self.tables.pop_edge();
        }
        free
    }

    fn dfs(&mut self, slot: usize, shared: &Shared) {
        if !self.counter.tick(shared) {
            return;
        }
        let m = self.cand.len();
        let value = self.trail.len() as u64;
        if value + (m - slot) as u64 <= shared.best() {
            return;
        }
        if slot == self.collect_at {
            self.tasks.push(self.trail.clone());
            return;
        }
        if slot == m {
            return;
        }
        // include: first edge is pinned to slot 0 (orbit representative)
        if !(self.trail.is_empty() && slot > 0) && self.include_feasible(slot) {
            self.trail.push((slot as u16, 0));
            let v = self.trail.len() as u64;
            if v > shared.best() {
                shared.offer(v, &self.trail);
            }
            self.dfs(slot + 1, shared);
            self.trail.pop();
            self.tables.pop_edge();
        }
        self.dfs(slot + 1, shared);
    }
}

/// Exact maximum hyperedge count over Berge-P_k-free r-graphs on n vertices.
pub fn turan_oracle(params: &TuranParams, opts: &OracleOptions) -> Result<OracleResult> {
    let (n, r, k) = (
        params.n() as usize,
        params.r() as usize,
        params.k() as usize,
    );
    if n > crate::hypergraph::MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "oracle regime is n <= {}, got {n}",
            crate::hypergraph::MAX_VERTICES
        )));
    }
    let cand_subsets = subsets_lex(n, r);
    if cand_subsets.len() > u16::MAX as usize {
        return Err(Error::InvalidParameter(format!(
            "{} candidate hyperedges exceed the searchable regime",
            cand_subsets.len()
        )));
    }
    let start = Instant::now();
    let cand: Vec<u64> = cand_subsets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &v| m | (1u64 << v)))
        .collect();

    // incumbent from the applicable construction, never from the formula
    let incumbent_graph = if k > r {
        construct_extremal(params)?
    } else if params.n().is_multiple_of(params.r() + 1) {
        construct_small_k(params)?
    } else {
        Hypergraph::empty(n, r)?
    };
    debug_assert!(
        incumbent_graph.edge_count() < k || find_berge_path(&incumbent_graph, k).is_none(),
        "incumbent construction must be Berge-P_k-free"
    );
    let incumbent = incumbent_graph.edge_count() as u64;

    let shared = Shared::new(incumbent, opts.budget, start);
    let make_ctx = |collect_at: usize| HyperCtx {
        cand: &cand,
        k,
        tables: PathTables::new(n),
        trail: Vec::new(),
        counter: NodeCounter::new(),
        collect_at,
        tasks: Vec::new(),
    };

    if opts.workers <= 1 {
        let mut ctx = make_ctx(usize::MAX);
        ctx.dfs(0, &shared);
        ctx.counter.finish(&shared);
    } else {
        let depth = split_depth(opts.workers, cand.len());
        let mut ctx = make_ctx(depth);
        ctx.dfs(0, &shared);
        ctx.counter.finish(&shared);
        let tasks = std::mem::take(&mut ctx.tasks);
        run_workers(opts.workers, &tasks, |prefix| {
            let mut ctx = make_ctx(usize::MAX);
            for &(slot, _) in prefix {
                ctx.tables.push_edge(cand[slot as usize]);
            }
            ctx.trail = prefix.clone();
            ctx.dfs(depth, &shared);
            ctx.counter.finish(&shared);
        });
    }

    let (best_value, trail) = {
        let guard = shared.best_trail.lock().unwrap();
        guard.clone()
    };
    let witness = match trail {
        Some(trail) => Hypergraph::from_edges(
            n,
            r,
            trail.iter().map(|&(s, _)| cand_subsets[s as usize].clone()),
        )?,
        None => incumbent_graph,
    };
    let status = if shared.stopped() {
        OracleStatus::BudgetExhausted
    } else {
        OracleStatus::Proved
    };
    assert_eq!(witness.edge_count() as u64, best_value);
    assert!(
        witness.edge_count() < k || find_berge_path(&witness, k).is_none(),
        "oracle witness must pass the freeness check"
    );
    Ok(OracleResult {
        n: params.n(),
        r: params.r(),
        k: params.k(),
        best_value,
        witness: OracleWitness::Hypergraph(witness),
        status,
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

// ---------------------------------------------------------------------------
// K_r-count oracle over P_k-free graphs
// ---------------------------------------------------------------------------

struct CliqueCtx<'a> {
    pairs: &'a [(usize, usize)],
    k: usize,
    r: usize,
    adj: Vec<u64>,
    edge_count: usize,
    value: u64,
    max_gain: u64,
    trail: Trail,
    counter: NodeCounter,
    collect_at: usize,
    tasks: Vec<Trail>,
}

impl CliqueCtx<'_> {
    fn add_edge(&mut self, slot: usize) -> Option<u64> {
        let (u, v) = self.pairs[slot];
        let common = self.adj[u] & self.adj[v];
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        self.edge_count += 1;
        if self.edge_count >= self.k && has_path_len_over(&self.adj, self.k) {
            self.remove_edge(slot);
            return None;
        }
        Some(count_cliques_in(&self.adj, common, self.r - 2))
    }

    fn remove_edge(&mut self, slot: usize) {
        let (u, v) = self.pairs[slot];
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
        self.edge_count -= 1;
    }

    fn dfs(&mut self, slot: usize, shared: &Shared) {
        if !self.counter.tick(shared) {
            return;
        }
        let m = self.pairs.len();
        if self.value + ((m - slot) as u64) * self.max_gain <= shared.best() {
            return;
        }
        if slot == self.collect_at {
            self.tasks.push(self.trail.clone());
            return;
        }
        if slot == m {
            return;
        }
        if !(self.trail.is_empty() && slot > 0) {
            if let Some(gain) = self.add_edge(slot) {
                self.trail.push((slot as u16, 0));
                self.value += gain;
                if self.value > shared.best() {
                    shared.offer(self.value, &self.trail);
                }
                self.dfs(slot + 1, shared);
                self.value -= gain;
                self.trail.pop();
                self.remove_edge(slot);
            }
        }
        self.dfs(slot + 1, shared);
    }
}

/// Exact maximum number of r-cliques over P_k-free graphs on n vertices.
pub fn graph_kr_oracle(n: u64, k: u64, r: u64, opts: &OracleOptions) -> Result<OracleResult> {
    if r < 3 || r > k {
        return Err(Error::OutOfTheoremRange(format!(
            "clique-count oracle needs 3 <= r <= k, got r = {r}, k = {k}"
        )));
    }
    let params = TuranParams::new(n, r, k)?;
    let n_us = n as usize;
    if n_us > crate::hypergraph::MAX_VERTICES {
        return Err(Error::InvalidParameter(format!("n = {n} too large")));
    }
    let start = Instant::now();
    let pairs: Vec<(usize, usize)> = subsets_lex(n_us, 2)
        .into_iter()
        .map(|s| (s[0], s[1]))
        .collect();

    // incumbent: disjoint cliques K_k x p plus K_q
    let mut inc_edges = Vec::new();
    let mut base = 0usize;
    for _ in 0..params.p() {
        for u in base..base + k as usize {
            for v in u + 1..base + k as usize {
                inc_edges.push((u, v));
            }
        }
        base += k as usize;
    }
    for u in base..n_us {
        for v in u + 1..n_us {
            inc_edges.push((u, v));
        }
    }
    let incumbent_graph = Graph::new(n_us, inc_edges)?;
    assert!(is_pk_free(&incumbent_graph, k as usize));
    let incumbent = crate::graph::count_cliques(&incumbent_graph, r as usize)?;

    let max_gain = binom(n.saturating_sub(2), r - 2)?.max(1);
    let shared = Shared::new(incumbent, opts.budget, start);
    let make_ctx = |collect_at: usize| CliqueCtx {
        pairs: &pairs,
        k: k as usize,
        r: r as usize,
        adj: vec![0u64; n_us],
        edge_count: 0,
        value: 0,
        max_gain,
        trail: Vec::new(),
        counter: NodeCounter::new(),
        collect_at,
        tasks: Vec::new(),
    };

    if opts.workers <= 1 {
        let mut ctx = make_ctx(usize::MAX);
        ctx.dfs(0, &shared);
        ctx.counter.finish(&shared);
    } else {
        let depth = split_depth(opts.workers, pairs.len());
        let mut ctx = make_ctx(depth);
        ctx.dfs(0, &shared);
        ctx.counter.finish(&shared);
        let tasks = std::mem::take(&mut ctx.tasks);
        run_workers(opts.workers, &tasks, |prefix| {
            let mut ctx = make_ctx(usize::MAX);
            for &(slot, _) in prefix {
                let gain = ctx.add_edge(slot as usize).expect("prefix was feasible");
                ctx.trail.push((slot, 0));
                ctx.value += gain;
            }
            ctx.dfs(depth, &shared);
            ctx.counter.finish(&shared);
        });
    }

    let (best_value, trail) = {
        let guard = shared.best_trail.lock().unwrap();
        guard.clone()
    };
    let witness = match trail {
        Some(trail) => Graph::new(
            n_us,
            trail.iter().map(|&(s, _)| pairs[s as usize]).collect(),
        )?,
        None => incumbent_graph,
    };
    let status = if shared.stopped() {
        OracleStatus::BudgetExhausted
    } else {
        OracleStatus::Proved
    };
    assert!(is_pk_free(&witness, k as usize));
    assert_eq!(
        crate::graph::count_cliques(&witness, r as usize)?,
        best_value
    );
    Ok(OracleResult {
        n,
        r,
        k,
        best_value,
        witness: OracleWitness::Graph(witness),
        status,
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

// ---------------------------------------------------------------------------
// Red-blue g-value oracle over P_k-free red-blue graphs
// ---------------------------------------------------------------------------

const RED: u8 = 0;
const BLUE: u8 = 1;

struct RedBlueCtx<'a> {
    pairs: &'a [(usize, usize)],
    k: usize,
    r: usize,
    under: Vec<u64>,
    blue: Vec<u64>,
    edge_count: usize,
    value: u64,
    max_gain: u64,
    trail: Trail,
    counter: NodeCounter,
    collect_at: usize,
    tasks: Vec<Trail>,
}

impl RedBlueCtx<'_> {
    fn add_edge(&mut self, slot: usize, color: u8) -> Option<u64> {
        let (u, v) = self.pairs[slot];
        let blue_common = self.blue[u] & self.blue[v];
        self.under[u] |= 1u64 << v;
        self.under[v] |= 1u64 << u;
        self.edge_count += 1;
        if self.edge_count >= self.k && has_path_len_over(&self.under, self.k) {
            self.under[u] &= !(1u64 << v);
            self.under[v] &= !(1u64 << u);
            self.edge_count -= 1;
            return None;
        }
        if color == BLUE {
            self.blue[u] |= 1u64 << v;
            self.blue[v] |= 1u64 << u;
            Some(count_cliques_in(&self.blue, blue_common, self.r - 2))
        } else {
            Some(1)
        }
    }

    fn remove_edge(&mut self, slot: usize, color: u8) {
        let (u, v) = self.pairs[slot];
        self.under[u] &= !(1u64 << v);
        self.under[v] &= !(1u64 << u);
        self.edge_count -= 1;
        if color == BLUE {
            self.blue[u] &= !(1u64 << v);
            self.blue[v] &= !(1u64 << u);
        }
    }

    fn dfs(&mut self, slot: usize, shared: &Shared) {
        if !self.counter.tick(shared) {
            return;
        }
        let m = self.pairs.len();
        if self.value + ((m - slot) as u64) * self.max_gain <= shared.best() {
            return;
        }
        if slot == self.collect_at {
            self.tasks.push(self.trail.clone());
            return;
        }
        if slot == m {
            return;
        }
        if !(self.trail.is_empty() && slot > 0) {
            for color in [RED, BLUE] {
                if shared.stopped() {
                    return;
                }
                if let Some(gain) = self.add_edge(slot, color) {
                    self.trail.push((slot as u16, color));
                    self.value += gain;
                    if self.value > shared.best() {
                        shared.offer(self.value, &self.trail);
                    }
                    self.dfs(slot + 1, shared);
                    self.value -= gain;
                    self.trail.pop();
                    self.remove_edge(slot, color);
                }
            }
        }
        self.dfs(slot + 1, shared);
    }
}

/// Exact maximum of g over red-blue graphs with P_k-free underlying graph.
pub fn redblue_g_oracle(n: u64, k: u64, r: u64, opts: &OracleOptions) -> Result<OracleResult> {
    let params = TuranParams::new(n, r, k)?;
    let n_us = n as usize;
    if n_us > crate::hypergraph::MAX_VERTICES {
        return Err(Error::InvalidParameter(format!("n = {n} too large")));
    }
    let start = Instant::now();
    let pairs: Vec<(usize, usize)> = subsets_lex(n_us, 2)
        .into_iter()
        .map(|s| (s[0], s[1]))
        .collect();

    let (incumbent_graph, incumbent) = if k > r {
        let g = construct_redblue_extremal(&params)?;
        assert!(is_pk_free(&g.underlying(), k as usize));
        let v = g_value(&g, r)?;
        (g, v)
    } else {
        (RedBlueGraph::new(n_us, vec![], vec![])?, 0)
    };

    let max_gain = binom(n.saturating_sub(2), r.saturating_sub(2))?.max(1);
    let shared = Shared::new(incumbent, opts.budget, start);
    let make_ctx = |collect_at: usize| RedBlueCtx {
        pairs: &pairs,
        k: k as usize,
        r: r as usize,
        under: vec![0u64; n_us],
        blue: vec![0u64; n_us],
        edge_count: 0,
        value: 0,
        max_gain,
        trail: Vec::new(),
        counter: NodeCounter::new(),
        collect_at,
        tasks: Vec::new(),
    };

    if opts.workers <= 1 {
        let mut ctx = make_ctx(usize::MAX);
        ctx.dfs(0, &shared);
        ctx.counter.finish(&shared);
    } else {
        let depth = split_depth(opts.workers, pairs.len());
        let mut ctx = make_ctx(depth);
        ctx.dfs(0, &shared);
        ctx.counter.finish(&shared);
        let tasks = std::mem::take(&mut ctx.tasks);
        run_workers(opts.workers, &tasks, |prefix| {
            let mut ctx = make_ctx(usize::MAX);
            for &(slot, color) in prefix {
                let gain = ctx
                    .add_edge(slot as usize, color)
                    .expect("prefix was feasible");
                ctx.trail.push((slot, color));
                ctx.value += gain;
            }
            ctx.dfs(depth, &shared);
            ctx.counter.finish(&shared);
        });
    }

    let (best_value, trail) = {
        let guard = shared.best_trail.lock().unwrap();
        guard.clone()
    };
    let witness = match trail {
        Some(trail) => {
            let red: Vec<(usize, usize)> = trail
                .iter()
                .filter(|&&(_, c)| c == RED)
                .map(|&(s, _)| pairs[s as usize])
                .collect();
            let blue: Vec<(usize, usize)> = trail
                .iter()
                .filter(|&&(_, c)| c == BLUE)
                .map(|&(s, _)| pairs[s as usize])
                .collect();
            RedBlueGraph::new(n_us, red, blue)?
        }
        None => incumbent_graph,
    };
    let status = if shared.stopped() {
        OracleStatus::BudgetExhausted
    } else {
        OracleStatus::Proved
    };
    assert!(is_pk_free(&witness.underlying(), k as usize));
    assert_eq!(g_value(&witness, r)?, best_value);
    Ok(OracleResult {
        n,
        r,
        k,
        best_value,
        witness: OracleWitness::RedBlue(witness),
        status,
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

// ---------------------------------------------------------------------------
// Batch verification
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyRegime {
    /// Berge-path Turán formula vs. the hypergraph oracle.
    Formula,
    /// Clique-count bound vs. the P_k-free graph oracle.
    Cliques,
    /// g upper bound vs. the red-blue oracle.
    #[serde(rename = "redblue")]
    RedBlue,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyCell {
    pub n: u64,
    pub r: u64,
    pub k: u64,
    pub expected: u64,
    pub oracle_value: u64,
    pub status: OracleStatus,
    /// `None` when the oracle was inconclusive (budget exhausted).
    pub matched: Option<bool>,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub regime: VerifyRegime,
    pub cells: Vec<VerifyCell>,
    pub mismatches: usize,
    pub inconclusive: usize,
}

impl VerifyReport {
    /// Overall pass: every proved cell matched (inconclusive cells allowed
    /// only to be absent).
    pub fn all_match(&self) -> bool {
        self.mismatches == 0 && self.inconclusive == 0
    }

    pub fn no_mismatch(&self) -> bool {
        self.mismatches == 0
    }
}

/// Runs one oracle per n in the grid against the matching closed form.
pub fn verify_range(
    regime: VerifyRegime,
    r: u64,
    k: u64,
    n_range: std::ops::RangeInclusive<u64>,
    opts: &OracleOptions,
) -> Result<VerifyReport> {
    let mut cells = Vec::new();
    for n in n_range {
        let params = TuranParams::new(n, r, k)?;
        let (expected, oracle) = match regime {
            VerifyRegime::Formula => (turan_formula(&params)?, turan_oracle(&params, opts)?),
            VerifyRegime::Cliques => (kr_count_bound(&params)?, graph_kr_oracle(n, k, r, opts)?),
            VerifyRegime::RedBlue => (g_upper_bound(&params)?, redblue_g_oracle(n, k, r, opts)?),
        };
        let matched = match oracle.status {
            OracleStatus::Proved => Some(oracle.best_value == expected),
            OracleStatus::BudgetExhausted => None,
        };
        cells.push(VerifyCell {
            n,
            r,
            k,
            expected,
            oracle_value: oracle.best_value,
            status: oracle.status,
            matched,
            nodes_explored: oracle.nodes_explored,
            elapsed_ms: oracle.elapsed_ms,
        });
    }
    let mismatches = cells.iter().filter(|c| c.matched == Some(false)).count();
    let inconclusive = cells.iter().filter(|c| c.matched.is_none()).count();
    Ok(VerifyReport {
        regime,
        cells,
        mismatches,
        inconclusive,
    })
}
