//! Shared test support: a deliberately naive Berge detector used as the
//! independent ground truth (plain sequence enumeration plus injective
//! assignment backtracking — no bitsets, no matching), and a tiny
//! deterministic RNG for randomized suites.

// compiled once per test target; each target uses a subset
#![allow(dead_code)]

use berge_core::Hypergraph;

/// xorshift64*; deterministic across platforms and runs.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

fn sequences(
    n: usize,
    len: usize,
    seq: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if seq.len() == len {
        return out(seq);
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        used[v] = true;
        seq.push(v);
        if sequences(n, len, seq, used, out) {
            return true;
        }
        seq.pop();
        used[v] = false;
    }
    false
}

fn assignment_exists(
    edges: &[Vec<usize>],
    pairs: &[(usize, usize)],
    pos: usize,
    used: &mut [bool],
) -> bool {
    if pos == pairs.len() {
        return true;
    }
    let (a, b) = pairs[pos];
    for (i, e) in edges.iter().enumerate() {
        if used[i] || !e.contains(&a) || !e.contains(&b) {
            continue;
        }
        used[i] = true;
        if assignment_exists(edges, pairs, pos + 1, used) {
            used[i] = false;
            return true;
        }
        used[i] = false;
    }
    false
}

/// Ground truth: does `h` contain a Berge path of length `k`?
pub fn brute_force_berge_path(h: &Hypergraph, k: usize) -> bool {
    if k + 1 > h.n() || k > h.edge_count() {
        return false;
    }
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.indices()).collect();
    let mut seq = Vec::new();
    let mut used_v = vec![false; h.n()];
    sequences(h.n(), k + 1, &mut seq, &mut used_v, &mut |seq| {
        let pairs: Vec<(usize, usize)> = (0..k).map(|i| (seq[i], seq[i + 1])).collect();
        let mut used_e = vec![false; edges.len()];
        assignment_exists(&edges, &pairs, 0, &mut used_e)
    })
}

/// Ground truth: does `h` contain a Berge cycle of length `k`?
pub fn brute_force_berge_cycle(h: &Hypergraph, k: usize) -> bool {
    if k > h.n() || k > h.edge_count() {
        return false;
    }
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.indices()).collect();
    let mut seq = Vec::new();
    let mut used_v = vec![false; h.n()];
    sequences(h.n(), k, &mut seq, &mut used_v, &mut |seq| {
        let pairs: Vec<(usize, usize)> = (0..k).map(|i| (seq[i], seq[(i + 1) % k])).collect();
        let mut used_e = vec![false; edges.len()];
        assignment_exists(&edges, &pairs, 0, &mut used_e)
    })
}

/// A random 3-graph on `n` vertices with i.i.d. edge presence.
pub fn random_three_graph(rng: &mut Rng, n: usize, num: u64, den: u64) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if rng.chance(num, den) {
                    edges.push(vec![a, b, c]);
                }
            }
        }
    }
    Hypergraph::from_edges(n, 3, edges).expect("valid random hypergraph")
}

/// Ground truth for hamiltonian connectedness of one vertex pair: all
/// full-length sequences, endpoints filtered at completion.
pub fn brute_force_spanning_path_between(h: &Hypergraph, u: usize, v: usize) -> bool {
    let n = h.n();
    if n < 2 || h.edge_count() < n - 1 {
        return false;
    }
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.indices()).collect();
    let mut seq = Vec::new();
    let mut used_v = vec![false; n];
    sequences(n, n, &mut seq, &mut used_v, &mut |seq| {
        if seq[0] != u || seq[n - 1] != v {
            return false;
        }
        let pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| (seq[i], seq[i + 1])).collect();
        let mut used_e = vec![false; edges.len()];
        assignment_exists(&edges, &pairs, 0, &mut used_e)
    })
}
