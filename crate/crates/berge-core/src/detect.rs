//! Berge-path and Berge-cycle detection with verifiable witnesses.
//!
//! A Berge path of length k is k distinct hyperedges h_1..h_k together with
//! k+1 distinct vertices v_1..v_{k+1} such that {v_i, v_{i+1}} ⊆ h_i. The
//! search enumerates vertex sequences depth-first; feasibility of assigning
//! distinct hyperedges to the consecutive pairs is maintained by incremental
//! bipartite matching (one augmenting search per appended vertex), and a
//! sequence prefix whose pairs admit no system of distinct representatives is
//! pruned. Start vertices are restricted to automorphism-orbit
//! representatives when the orbit computation is affordable; this only drops
//! isomorphic duplicates, never witnesses.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::budget::{Budget, BudgetTracker};
use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph, VertexId};

/// Exact orbit computation is brute force over vertex permutations; above
/// this vertex count the start loop simply tries every vertex.
const ORBIT_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Path,
    Cycle,
}

/// A certificate for a Berge path or cycle: the defining vertices in order
/// plus the injective assignment of defining hyperedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeWitness {
    pub kind: WitnessKind,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Hyperedge>,
}

impl BergeWitness {
    /// Length of the path/cycle (number of defining hyperedges).
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl Serialize for BergeWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BergeWitness", 3)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

/// Why a witness failed verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessError {
    BadLength(String),
    DuplicateVertex(VertexId),
    DuplicateEdge(usize),
    EdgeNotInHypergraph(usize),
    VertexOutOfRange(VertexId),
    PairNotCovered { position: usize },
}

/// Checks a witness against its hypergraph, reporting the first defect.
pub fn check_witness(h: &Hypergraph, w: &BergeWitness) -> std::result::Result<(), WitnessError> {
    let k = w.edges.len();
    let expected_vertices = match w.kind {
        WitnessKind::Path => k + 1,
        WitnessKind::Cycle => k,
    };
    let min_k = match w.kind {
        WitnessKind::Path => 1,
        WitnessKind::Cycle => 2,
    };
    if k < min_k || w.vertices.len() != expected_vertices {
        return Err(WitnessError::BadLength(format!(
            "{} hyperedges with {} vertices",
            k,
            w.vertices.len()
        )));
    }
    let mut seen = 0u64;
    for &v in &w.vertices {
        if v.0 >= h.n() {
            return Err(WitnessError::VertexOutOfRange(v));
        }
        if seen & (1u64 << v.0) != 0 {
            return Err(WitnessError::DuplicateVertex(v));
        }
        seen |= 1u64 << v.0;
    }
    for (i, e) in w.edges.iter().enumerate() {
        if h.edges().binary_search(e).is_err() {
            return Err(WitnessError::EdgeNotInHypergraph(i));
        }
        if w.edges[..i].contains(e) {
            return Err(WitnessError::DuplicateEdge(i));
        }
    }
    for i in 0..k {
        let a = w.vertices[i];
        let b = w.vertices[(i + 1) % w.vertices.len()];
        if !w.edges[i].contains_pair(a, b) {
            return Err(WitnessError::PairNotCovered { position: i });
        }
    }
    Ok(())
}

/// True iff the witness is a valid Berge path/cycle of `h`.
pub fn verify_witness(h: &Hypergraph, w: &BergeWitness) -> bool {
    check_witness(h, w).is_ok()
}

/// Outcome of a budgeted search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(BergeWitness),
    /// Exhaustive proof that no witness exists.
    Absent,
    /// Budget ran out before the search space was exhausted.
    BudgetExhausted,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&BergeWitness> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<BergeWitness> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, SearchOutcome::Absent)
    }
}

/// Result of the maximum-length search.
#[derive(Clone, Debug)]
pub struct LongestBergePath {
    pub length: usize,
    pub witness: Option<BergeWitness>,
    /// False when a budget expired before maximality was established.
    pub proved: bool,
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Pair-to-hyperedge incidence tables. The branch-and-bound oracle mutates
/// these with push/pop; detection over a fixed hypergraph builds them once.
pub(crate) struct PathTables {
    n: usize,
    edge_masks: Vec<u64>,
    pair: Vec<Vec<u16>>,
}

impl PathTables {
    pub(crate) fn new(n: usize) -> Self {
        PathTables {
            n,
            edge_masks: Vec::new(),
            pair: vec![Vec::new(); n * n],
        }
    }

    pub(crate) fn from_hypergraph(h: &Hypergraph) -> Self {
        let mut t = PathTables::new(h.n());
        for e in h.edges() {
            t.push_edge(e.mask());
        }
        t
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn edge_count(&self) -> usize {
        self.edge_masks.len()
    }

    pub(crate) fn edge_mask(&self, id: usize) -> u64 {
        self.edge_masks[id]
    }

    fn pair_key(&self, a: usize, b: usize) -> usize {
        let (lo, hi) = (a.min(b), a.max(b));
        lo * self.n + hi
    }

    pub(crate) fn pair_list(&self, a: usize, b: usize) -> &[u16] {
        &self.pair[self.pair_key(a, b)]
    }

    pub(crate) fn push_edge(&mut self, mask: u64) {
        assert!(self.edge_masks.len() < u16::MAX as usize, "edge id space exhausted");
        let id = self.edge_masks.len() as u16;
        let mut rest = mask;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut rest2 = rest;
            while rest2 != 0 {
                let b = rest2.trailing_zeros() as usize;
                rest2 &= rest2 - 1;
                self.pair[a * self.n + b].push(id);
            }
        }
        self.edge_masks.push(mask);
    }

    pub(crate) fn pop_edge(&mut self) {
        let mask = self.edge_masks.pop().expect("pop on empty tables");
        let mut rest = mask;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut rest2 = rest;
            while rest2 != 0 {
                let b = rest2.trailing_zeros() as usize;
                rest2 &= rest2 - 1;
                self.pair[a * self.n + b].pop();
            }
        }
    }
}

/// Incremental pair-to-edge matching (Kuhn augmenting paths).
struct Matcher<'t> {
    tables: &'t PathTables,
    slot_pairs: Vec<(usize, usize)>,
    assign: Vec<i32>,
    owner: Vec<i32>,
    visited: Vec<u32>,
    epoch: u32,
    snapshots: Vec<Vec<i32>>,
}

impl<'t> Matcher<'t> {
    fn new(tables: &'t PathTables) -> Self {
        let m = tables.edge_count();
        Matcher {
            tables,
            slot_pairs: Vec::new(),
            assign: Vec::new(),
            owner: vec![-1; m],
            visited: vec![0; m],
            epoch: 0,
            snapshots: Vec::new(),
        }
    }

    fn augment(&mut self, slot: usize) -> bool {
        let tables = self.tables;
        let (a, b) = self.slot_pairs[slot];
        for &e in tables.pair_list(a, b) {
            let e = e as usize;
            if self.visited[e] == self.epoch {
                continue;
            }
            self.visited[e] = self.epoch;
            let owner = self.owner[e];
            if owner < 0 || self.augment(owner as usize) {
                self.owner[e] = slot as i32;
                self.assign[slot] = e as i32;
                return true;
            }
        }
        false
    }

    /// Adds the pair {a, b} as a new slot and restores a perfect matching.
    /// Returns false (leaving the state unchanged) when no system of distinct
    /// representatives exists; the caller prunes that branch.
    fn push_slot(&mut self, a: usize, b: usize) -> bool {
        let slot = self.slot_pairs.len();
        self.snapshots.push(self.assign.clone());
        self.slot_pairs.push((a, b));
        self.assign.push(-1);
        self.epoch += 1;
        if self.augment(slot) {
            true
        } else {
            self.snapshots.pop();
            self.slot_pairs.pop();
            self.assign.pop();
            false
        }
    }

    fn pop_slot(&mut self) {
        for &e in &self.assign {
            if e >= 0 {
                self.owner[e as usize] = -1;
            }
        }
        let snap = self.snapshots.pop().expect("pop on empty matcher");
        self.slot_pairs.pop();
        self.assign = snap;
        for (s, &e) in self.assign.iter().enumerate() {
            if e >= 0 {
                self.owner[e as usize] = s as i32;
            }
        }
    }

    fn assignment(&self) -> Vec<u16> {
        self.assign.iter().map(|&e| e as u16).collect()
    }

    /// A perfect assignment that uses `required`, if one exists. Tried only
    /// at completed sequences; works on scratch state.
    fn pinned_assignment(&self, required: usize) -> Option<Vec<u16>> {
        if self.assign.contains(&(required as i32)) {
            return Some(self.assignment());
        }
        let req_mask = self.tables.edge_mask(required);
        let total = self.slot_pairs.len();
        for pin in 0..total {
            let (a, b) = self.slot_pairs[pin];
            if req_mask & (1u64 << a) == 0 || req_mask & (1u64 << b) == 0 {
                continue;
            }
            let m = self.tables.edge_count();
            let mut owner = vec![-1i32; m];
            let mut assign = vec![-1i32; total];
            owner[required] = pin as i32;
            assign[pin] = required as i32;
            let mut ok = true;
            for slot in (0..total).filter(|&s| s != pin) {
                let mut visited = vec![false; m];
                visited[required] = true;
                if !kuhn(
                    self.tables,
                    &self.slot_pairs,
                    slot,
                    &mut owner,
                    &mut assign,
                    &mut visited,
                ) {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Some(assign.iter().map(|&e| e as u16).collect());
            }
        }
        None
    }
}

fn kuhn(
    tables: &PathTables,
    slot_pairs: &[(usize, usize)],
    slot: usize,
    owner: &mut [i32],
    assign: &mut [i32],
    visited: &mut [bool],
) -> bool {
    let (a, b) = slot_pairs[slot];
    for &e in tables.pair_list(a, b) {
        let e = e as usize;
        if visited[e] {
            continue;
        }
        visited[e] = true;
        let cur = owner[e];
        if cur < 0 || kuhn(tables, slot_pairs, cur as usize, owner, assign, visited) {
            owner[e] = slot as i32;
            assign[slot] = e as i32;
            return true;
        }
    }
    false
}

pub(crate) struct SearchSpec {
    pub kind: WitnessKind,
    pub length: usize,
    pub start: Option<usize>,
    pub end: Option<usize>,
    pub allowed: u64,
    pub required_edge: Option<usize>,
    /// Start vertices to try when `start` is unset; `None` means all allowed.
    pub start_candidates: Option<Vec<usize>>,
}

impl SearchSpec {
    pub(crate) fn path(k: usize, allowed: u64) -> Self {
        SearchSpec {
            kind: WitnessKind::Path,
            length: k,
            start: None,
            end: None,
            allowed,
            required_edge: None,
            start_candidates: None,
        }
    }

    pub(crate) fn cycle(k: usize, allowed: u64) -> Self {
        SearchSpec {
            kind: WitnessKind::Cycle,
            length: k,
            start: None,
            end: None,
            allowed,
            required_edge: None,
            start_candidates: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SearchEnd {
    /// Search space exhausted without the visitor stopping it.
    Exhausted,
    StoppedByVisitor,
    BudgetExhausted,
}

struct Searcher<'a> {
    tables: &'a PathTables,
    spec: &'a SearchSpec,
    matcher: Matcher<'a>,
    seq: Vec<usize>,
    used: u64,
    req_mask: u64,
    canonical_cycle_start: bool,
}

impl<'a> Searcher<'a> {
    fn needed_vertices(&self) -> usize {
        match self.spec.kind {
            WitnessKind::Path => self.spec.length + 1,
            WitnessKind::Cycle => self.spec.length,
        }
    }

    fn complete(
        &mut self,
        budget: &mut BudgetTracker,
        on_found: &mut dyn FnMut(&[usize], &[u16]) -> bool,
    ) -> Option<SearchEnd> {
        match self.spec.kind {
            WitnessKind::Path => {
                let ids = match self.spec.required_edge {
                    Some(req) => self.matcher.pinned_assignment(req)?,
                    None => self.matcher.assignment(),
                };
                if on_found(&self.seq, &ids) {
                    Some(SearchEnd::StoppedByVisitor)
                } else {
                    None
                }
            }
            WitnessKind::Cycle => {
                if !budget.tick() {
                    return Some(SearchEnd::BudgetExhausted);
                }
                let last = *self.seq.last().unwrap();
                let first = self.seq[0];
                if self.tables.pair_list(last, first).is_empty() {
                    return None;
                }
                if !self.matcher.push_slot(last, first) {
                    return None;
                }
                let ids = self.matcher.assignment();
                let stop = on_found(&self.seq, &ids);
                self.matcher.pop_slot();
                if stop {
                    Some(SearchEnd::StoppedByVisitor)
                } else {
                    None
                }
            }
        }
    }

    /// Required-edge reachability: prune once no future consecutive pair can
    /// land inside the required edge (paths only).
    fn seed_still_possible(&self) -> bool {
        let placed = self.seq.len();
        let future = self.needed_vertices() - placed;
        let avail = (self.req_mask & self.spec.allowed & !self.used).count_ones() as usize;
        let last_in_req = self.req_mask & (1u64 << self.seq[placed - 1]) != 0;
        (last_in_req && future >= 1 && avail >= 1) || (future >= 2 && avail >= 2)
    }

    fn extend(
        &mut self,
        has_seed: bool,
        budget: &mut BudgetTracker,
        on_found: &mut dyn FnMut(&[usize], &[u16]) -> bool,
    ) -> Option<SearchEnd> {
        if !budget.tick() {
            return Some(SearchEnd::BudgetExhausted);
        }
        let placed = self.seq.len();
        if placed == self.needed_vertices() {
            return self.complete(budget, on_found);
        }
        if self.spec.required_edge.is_some() && !has_seed && !self.seed_still_possible() {
            return None;
        }
        let last = self.seq[placed - 1];
        let final_position = placed == self.needed_vertices() - 1;
        let min_exclusive = if self.canonical_cycle_start {
            self.seq[0]
        } else {
            0
        };
        for v in 0..self.tables.n() {
            let bit = 1u64 << v;
            if self.used & bit != 0 || self.spec.allowed & bit == 0 {
                continue;
            }
            if self.canonical_cycle_start && v <= min_exclusive {
                continue;
            }
            if let Some(end) = self.spec.end {
                if final_position != (v == end) {
                    continue;
                }
            }
            if self.tables.pair_list(last, v).is_empty() {
                continue;
            }
            if !self.matcher.push_slot(last, v) {
                continue;
            }
            self.seq.push(v);
            self.used |= bit;
            let seed =
                has_seed || (self.req_mask & (1u64 << last) != 0 && self.req_mask & bit != 0);
            let res = self.extend(seed, budget, on_found);
            self.used &= !bit;
            self.seq.pop();
            self.matcher.pop_slot();
            if res.is_some() {
                return res;
            }
        }
        None
    }
}

/// Core driver: enumerates witness sequences matching `spec`, invoking
/// `on_found(vertices, edge_ids)`; a `true` return stops the search.
pub(crate) fn run_search(
    tables: &PathTables,
    spec: &SearchSpec,
    budget: &mut BudgetTracker,
    on_found: &mut dyn FnMut(&[usize], &[u16]) -> bool,
) -> SearchEnd {
    let needed = match spec.kind {
        WitnessKind::Path => spec.length + 1,
        WitnessKind::Cycle => spec.length,
    };
    debug_assert!(match spec.kind {
        WitnessKind::Path => spec.length >= 1,
        WitnessKind::Cycle => spec.length >= 2,
    });
    if needed > spec.allowed.count_ones() as usize || spec.length > tables.edge_count() {
        return SearchEnd::Exhausted;
    }
    if let Some(req) = spec.required_edge {
        if (tables.edge_mask(req) & spec.allowed).count_ones() < 2 {
            return SearchEnd::Exhausted;
        }
    }
    let starts: Vec<usize> = match (spec.start, &spec.start_candidates) {
        (Some(s), _) => vec![s],
        (None, Some(c)) => c.clone(),
        (None, None) => (0..tables.n()).collect(),
    };
    for s in starts {
        let bit = 1u64 << s;
        if spec.allowed & bit == 0 {
            continue;
        }
        if spec.end == Some(s) {
            continue;
        }
        let mut searcher = Searcher {
            tables,
            spec,
            matcher: Matcher::new(tables),
            seq: vec![s],
            used: bit,
            req_mask: spec.required_edge.map(|e| tables.edge_mask(e)).unwrap_or(0),
            canonical_cycle_start: matches!(spec.kind, WitnessKind::Cycle) && spec.start.is_none(),
        };
        if let Some(end) = searcher.extend(false, budget, on_found) {
            return end;
        }
    }
    SearchEnd::Exhausted
}

/// True iff a Berge path of length `k` using the given edge exists.
/// `None` when the budget tripped first.
pub(crate) fn path_exists_using_edge(
    tables: &PathTables,
    k: usize,
    required: usize,
    budget: &mut BudgetTracker,
) -> Option<bool> {
    let spec = SearchSpec {
        required_edge: Some(required),
        ..SearchSpec::path(k, full_mask(tables.n()))
    };
    let mut hit = false;
    match run_search(tables, &spec, budget, &mut |_, _| {
        hit = true;
        true
    }) {
        SearchEnd::BudgetExhausted => None,
        _ => Some(hit),
    }
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn remap_mask(mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1u64 << perm[v];
    }
    out
}

/// Minimum vertex of each automorphism orbit, or `None` for hypergraphs too
/// large for the brute-force orbit computation.
fn orbit_representatives(h: &Hypergraph) -> Option<Vec<usize>> {
    let n = h.n();
    if n == 0 || n > ORBIT_MAX_N {
        return None;
    }
    let mut base = h.edge_masks();
    base.sort_unstable();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut scratch: Vec<u64> = Vec::with_capacity(base.len());
    for_each_permutation(n, |perm| {
        scratch.clear();
        scratch.extend(base.iter().map(|&m| remap_mask(m, perm)));
        scratch.sort_unstable();
        if scratch == base {
            for (v, &image) in perm.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    });
    let mut reps = Vec::new();
    let mut seen_roots = Vec::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        if !seen_roots.contains(&root) {
            seen_roots.push(root);
            reps.push(v);
        }
    }
    Some(reps)
}

/// Reusable detection context over one immutable hypergraph.
pub(crate) struct DetectCtx<'h> {
    h: &'h Hypergraph,
    tables: PathTables,
    orbit_reps: Option<Vec<usize>>,
    full: u64,
}

impl<'h> DetectCtx<'h> {
    pub(crate) fn new(h: &'h Hypergraph) -> Self {
        DetectCtx {
            h,
            tables: PathTables::from_hypergraph(h),
            orbit_reps: orbit_representatives(h),
            full: full_mask(h.n()),
        }
    }

    fn witness(&self, kind: WitnessKind, seq: &[usize], ids: &[u16]) -> BergeWitness {
        let w = BergeWitness {
            kind,
            vertices: seq.iter().map(|&v| VertexId(v)).collect(),
            edges: ids
                .iter()
                .map(|&id| self.h.edges()[id as usize].clone())
                .collect(),
        };
        debug_assert!(verify_witness(self.h, &w), "searcher produced bad witness");
        w
    }

    fn find(&self, spec: SearchSpec, budget: Budget) -> SearchOutcome {
        let mut tracker = BudgetTracker::new(budget);
        self.find_tracked(spec, &mut tracker)
    }

    fn find_tracked(&self, spec: SearchSpec, tracker: &mut BudgetTracker) -> SearchOutcome {
        let mut found: Option<BergeWitness> = None;
        let kind = spec.kind;
        let end = run_search(&self.tables, &spec, tracker, &mut |seq, ids| {
            found = Some(self.witness(kind, seq, ids));
            true
        });
        match (found, end) {
            (Some(w), _) => SearchOutcome::Found(w),
            (None, SearchEnd::BudgetExhausted) => SearchOutcome::BudgetExhausted,
            (None, _) => SearchOutcome::Absent,
        }
    }

    pub(crate) fn find_path(&self, k: usize, budget: Budget) -> SearchOutcome {
        let mut spec = SearchSpec::path(k, self.full);
        spec.start_candidates = self.orbit_reps.clone();
        self.find(spec, budget)
    }

    pub(crate) fn find_cycle(&self, k: usize, budget: Budget) -> SearchOutcome {
        let mut spec = SearchSpec::cycle(k, self.full);
        spec.start_candidates = self.orbit_reps.clone();
        self.find(spec, budget)
    }

    /// Find-first cycle search restricted to a vertex subset (no orbit
    /// shortcuts; used by the structural lemma checkers).
    pub(crate) fn find_cycle_in(&self, k: usize, allowed: u64) -> Option<BergeWitness> {
        self.find(SearchSpec::cycle(k, allowed), Budget::UNLIMITED)
            .into_found()
    }

    /// Enumerates every path sequence of length `k` (all starts, both
    /// orientations); the visitor returns true to stop early.
    pub(crate) fn enumerate_paths(
        &self,
        k: usize,
        on_found: &mut dyn FnMut(&[usize], &[u16]) -> bool,
    ) {
        let spec = SearchSpec::path(k, self.full);
        let mut tracker = BudgetTracker::new(Budget::UNLIMITED);
        run_search(&self.tables, &spec, &mut tracker, on_found);
    }

    pub(crate) fn longest_tracked(&self, tracker: &mut BudgetTracker) -> LongestBergePath {
        let ub = self.h.n().saturating_sub(1).min(self.tables.edge_count());
        let mut best = LongestBergePath {
            length: 0,
            witness: None,
            proved: true,
        };
        for k in 1..=ub {
            let mut spec = SearchSpec::path(k, self.full);
            spec.start_candidates = self.orbit_reps.clone();
            match self.find_tracked(spec, tracker) {
                SearchOutcome::Found(w) => {
                    best.length = k;
                    best.witness = Some(w);
                }
                SearchOutcome::Absent => return best,
                SearchOutcome::BudgetExhausted => {
                    best.proved = false;
                    return best;
                }
            }
        }
        best
    }

    pub(crate) fn hamiltonian_path_between(&self, u: usize, v: usize) -> bool {
        let n = self.h.n();
        let spec = SearchSpec {
            start: Some(u),
            end: Some(v),
            ..SearchSpec::path(n - 1, self.full)
        };
        !matches!(self.find(spec, Budget::UNLIMITED), SearchOutcome::Absent)
    }
}

/// Finds a Berge path of length `k`, if any (unlimited budget).
pub fn find_berge_path(h: &Hypergraph, k: usize) -> Option<BergeWitness> {
    find_berge_path_with(h, k, Budget::UNLIMITED).into_found()
}

/// Budgeted Berge-path search; `k >= 1`.
pub fn find_berge_path_with(h: &Hypergraph, k: usize, budget: Budget) -> SearchOutcome {
    assert!(k >= 1, "a Berge path has length at least 1");
    DetectCtx::new(h).find_path(k, budget)
}

/// Finds a Berge cycle of length `k`, if any (unlimited budget).
///
/// Cycles of length 2 are searched like any other length: two distinct
/// hyperedges sharing two vertices form a Berge cycle of length 2, which can
/// exist in a simple hypergraph whenever r >= 3.
pub fn find_berge_cycle(h: &Hypergraph, k: usize) -> Option<BergeWitness> {
    find_berge_cycle_with(h, k, Budget::UNLIMITED).into_found()
}

/// Budgeted Berge-cycle search; `k >= 2`.
pub fn find_berge_cycle_with(h: &Hypergraph, k: usize, budget: Budget) -> SearchOutcome {
    assert!(k >= 2, "a Berge cycle has length at least 2");
    DetectCtx::new(h).find_cycle(k, budget)
}

/// Maximum k admitting a Berge path, with witness; 0 for an edgeless
/// hypergraph. Always proved (unlimited budget).
pub fn longest_berge_path(h: &Hypergraph) -> LongestBergePath {
    longest_berge_path_with(h, Budget::UNLIMITED)
}

pub fn longest_berge_path_with(h: &Hypergraph, budget: Budget) -> LongestBergePath {
    let ctx = DetectCtx::new(h);
    let mut tracker = BudgetTracker::new(budget);
    ctx.longest_tracked(&mut tracker)
}

/// True iff every vertex pair is joined by a hamiltonian Berge path
/// (a path of length n-1 whose vertex set is all of V).
pub fn is_hamiltonian_connected(h: &Hypergraph) -> Result<bool> {
    let n = h.n();
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "hamiltonian connectedness needs at least 2 vertices, got {n}"
        )));
    }
    if h.edge_count() < n - 1 {
        return Ok(false);
    }
    let ctx = DetectCtx::new(h);
    for u in 0..n {
        for v in u + 1..n {
            if !ctx.hamiltonian_path_between(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The minimum-degree hypotheses under which an r-graph is guaranteed
/// hamiltonian-connected, evaluated on explicit parameters:
/// (i)  2r <= n and δ >= C(⌊n/2⌋, r-1) + 1,
/// (ii) n-1 >= r, 2r > n, n >= 6, and δ >= r-1,
/// (iii) r = 3, n = 5, and δ >= 3.
pub fn hamiltonian_degree_condition_values(n: u64, r: u64, min_degree: u64) -> Result<bool> {
    if r < 3 || n < r {
        return Err(Error::OutOfTheoremRange(format!(
            "requires n >= r >= 3, got n = {n}, r = {r}"
        )));
    }
    let case_i = 2 * r <= n && min_degree > crate::binom::binom(n / 2, r - 1)?;
    let case_ii = n > r && 2 * r > n && n >= 6 && min_degree >= r - 1;
    let case_iii = r == 3 && n == 5 && min_degree >= 3;
    Ok(case_i || case_ii || case_iii)
}

/// [`hamiltonian_degree_condition_values`] applied to a hypergraph's own
/// parameters and minimum degree.
pub fn hamiltonian_degree_condition(h: &Hypergraph) -> Result<bool> {
    hamiltonian_degree_condition_values(h.n() as u64, h.r() as u64, h.min_degree() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_3() -> Hypergraph {
        Hypergraph::complete(4, 3).unwrap()
    }

    #[test]
    fn verify_witness_examples() {
        let h = Hypergraph::from_edges(3, 3, [[0, 1, 2]]).unwrap();
        let w = BergeWitness {
            kind: WitnessKind::Path,
            vertices: vec![VertexId(0), VertexId(1)],
            edges: vec![Hyperedge::from_indices(&[0, 1, 2]).unwrap()],
        };
        assert!(verify_witness(&h, &w));

        // duplicate hyperedge
        let e = Hyperedge::from_indices(&[0, 1, 2]).unwrap();
        let w = BergeWitness {
            kind: WitnessKind::Path,
            vertices: vec![VertexId(0), VertexId(1), VertexId(2)],
            edges: vec![e.clone(), e],
        };
        assert_eq!(check_witness(&h, &w), Err(WitnessError::DuplicateEdge(1)));

        let w = BergeWitness {
            kind: WitnessKind::Cycle,
            vertices: vec![VertexId(0), VertexId(1), VertexId(2)],
            edges: vec![
                Hyperedge::from_indices(&[0, 1, 3]).unwrap(),
                Hyperedge::from_indices(&[1, 2, 3]).unwrap(),
                Hyperedge::from_indices(&[0, 2, 3]).unwrap(),
            ],
        };
        assert!(verify_witness(&k4_3(), &w));
    }

    #[test]
    fn verify_witness_rejects_foreign_edges() {
        let h = Hypergraph::from_edges(4, 3, [[0, 1, 2]]).unwrap();
        let w = BergeWitness {
            kind: WitnessKind::Path,
            vertices: vec![VertexId(0), VertexId(1)],
            edges: vec![Hyperedge::from_indices(&[0, 1, 3]).unwrap()],
        };
        assert_eq!(
            check_witness(&h, &w),
            Err(WitnessError::EdgeNotInHypergraph(0))
        );
    }

    #[test]
    fn find_berge_path_examples() {
        let w = find_berge_path(&k4_3(), 3).expect("hamiltonian Berge path in K_4^(3)");
        assert!(verify_witness(&k4_3(), &w));
        assert_eq!(w.len(), 3);

        // needs 5 distinct vertices
        assert!(find_berge_path(&k4_3(), 4).is_none());

        let disjoint = Hypergraph::from_edges(6, 3, [[0, 1, 2], [3, 4, 5]]).unwrap();
        assert!(find_berge_path(&disjoint, 2).is_none());
        assert!(find_berge_path(&disjoint, 1).is_some());
    }

    #[test]
    fn find_berge_cycle_examples() {
        let h = k4_3();
        let w = find_berge_cycle(&h, 3).expect("Berge triangle in K_4^(3)");
        assert!(verify_witness(&h, &w));
        let w = find_berge_cycle(&h, 4).expect("Berge 4-cycle in K_4^(3)");
        assert!(verify_witness(&h, &w));

        let chain = Hypergraph::from_edges(7, 3, [[0, 1, 2], [2, 3, 4], [4, 5, 6]]).unwrap();
        assert!(find_berge_cycle(&chain, 3).is_none());
    }

    #[test]
    fn berge_cycle_of_length_two() {
        // two distinct edges sharing a pair: a Berge-C_2 on a simple 3-graph
        let h = Hypergraph::from_edges(4, 3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let w = find_berge_cycle(&h, 2).expect("C_2 through the shared pair");
        assert!(verify_witness(&h, &w));
        // for graphs (r = 2) this is vacuous on simple structures
        let g = Hypergraph::from_edges(3, 2, [[0, 1], [1, 2], [0, 2]]).unwrap();
        assert!(find_berge_cycle(&g, 2).is_none());
    }

    #[test]
    fn longest_berge_path_examples() {
        assert_eq!(longest_berge_path(&k4_3()).length, 3);
        assert_eq!(
            longest_berge_path(&Hypergraph::empty(5, 3).unwrap()).length,
            0
        );
        let chain = Hypergraph::from_edges(7, 3, [[0, 1, 2], [2, 3, 4], [4, 5, 6]]).unwrap();
        let got = longest_berge_path(&chain);
        assert_eq!(got.length, 3);
        assert!(verify_witness(&chain, &got.witness.unwrap()));
    }

    #[test]
    fn longest_is_bounded() {
        for h in [
            k4_3(),
            Hypergraph::complete(5, 3).unwrap(),
            Hypergraph::from_edges(6, 3, [[0, 1, 2], [1, 2, 3], [2, 3, 4]]).unwrap(),
        ] {
            let got = longest_berge_path(&h);
            assert!(got.length <= (h.n() - 1).min(h.edge_count()));
        }
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let h = Hypergraph::complete(6, 3).unwrap();
        match find_berge_path_with(&h, 5, Budget::nodes(2)) {
            SearchOutcome::BudgetExhausted => {}
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
        let res = longest_berge_path_with(&h, Budget::nodes(3));
        assert!(!res.proved);
    }

    #[test]
    fn hamiltonian_connected_examples() {
        let k5 = Hypergraph::complete(5, 3).unwrap();
        assert!(is_hamiltonian_connected(&k5).unwrap());

        let two = Hypergraph::from_edges(5, 3, [[0, 1, 2], [2, 3, 4]]).unwrap();
        assert!(!is_hamiltonian_connected(&two).unwrap());

        let single = Hypergraph::from_edges(3, 3, [[0, 1, 2]]).unwrap();
        assert!(!is_hamiltonian_connected(&single).unwrap());

        assert!(is_hamiltonian_connected(&Hypergraph::empty(1, 3).unwrap()).is_err());
    }

    #[test]
    fn degree_condition_examples() {
        // r = 3, n = 5, δ >= 3
        assert!(hamiltonian_degree_condition(&Hypergraph::complete(5, 3).unwrap()).unwrap());
        // n = 7, r = 4, δ = 3 satisfies the dense-uniformity case
        assert!(hamiltonian_degree_condition_values(7, 4, 3).unwrap());
        // n = 8, r = 3, δ = 5: needs δ >= C(4,2)+1 = 7
        assert!(!hamiltonian_degree_condition_values(8, 3, 5).unwrap());
        assert!(hamiltonian_degree_condition_values(8, 3, 7).unwrap());
        assert!(hamiltonian_degree_condition_values(8, 2, 7).is_err());
    }

    #[test]
    fn required_edge_search_is_exact() {
        // every Berge-P_3 witness in the chain uses all three edges
        let chain = Hypergraph::from_edges(7, 3, [[0, 1, 2], [2, 3, 4], [4, 5, 6]]).unwrap();
        let tables = PathTables::from_hypergraph(&chain);
        let mut tracker = BudgetTracker::new(Budget::UNLIMITED);
        for e in 0..3 {
            assert_eq!(
                path_exists_using_edge(&tables, 3, e, &mut tracker),
                Some(true),
                "edge {e} must be usable in a P_3"
            );
        }

        // a Berge-P_2 exists through the shared-pair edges but the isolated
        // edge can never be a defining hyperedge of one
        let h = Hypergraph::from_edges(7, 3, [[0, 1, 2], [0, 1, 3], [4, 5, 6]]).unwrap();
        let tables = PathTables::from_hypergraph(&h);
        assert_eq!(path_exists_using_edge(&tables, 2, 0, &mut tracker), Some(true));
        assert_eq!(path_exists_using_edge(&tables, 2, 1, &mut tracker), Some(true));
        assert_eq!(path_exists_using_edge(&tables, 2, 2, &mut tracker), Some(false));

        // budget trips are reported as None, not as a verdict
        let mut tiny = BudgetTracker::new(Budget::nodes(1));
        assert_eq!(path_exists_using_edge(&tables, 2, 0, &mut tiny), None);
    }

    #[test]
    fn orbit_pruning_preserves_absence_proofs() {
        // asymmetric hypergraph: orbit reps must still prove absence correctly
        let h = Hypergraph::from_edges(6, 3, [[0, 1, 2], [1, 2, 3], [3, 4, 5]]).unwrap();
        let ctx = DetectCtx::new(&h);
        assert!(ctx.orbit_reps.is_some());
        assert_eq!(longest_berge_path(&h).length, 3);
        assert!(find_berge_path(&h, 4).is_none());
    }
}
