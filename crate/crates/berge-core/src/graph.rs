//! Simple graphs with bitset adjacency, exact clique counting, and exact
//! longest-path computation.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hypergraph::MAX_VERTICES;

/// A simple undirected graph on vertices {0, .., n-1}; no loops, no duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "n = {n} exceeds the supported maximum of {MAX_VERTICES} vertices"
            )));
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidVertex {
                    vertex: u.max(v),
                    n,
                });
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidInput(format!(
                    "duplicate edge {{{}, {}}}",
                    w[0].0, w[0].1
                )));
            }
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in &norm {
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph {
            n,
            adj,
            edges: norm,
        })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, Vec::new())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    /// Component vertex masks, sorted by least vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        component_masks_over(&self.adj)
    }
}

fn component_mask_from(adj: &[u64], start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        let mut fresh = adj[v] & !seen;
        while fresh != 0 {
            let w = fresh.trailing_zeros() as usize;
            fresh &= fresh - 1;
            seen |= 1u64 << w;
            stack.push(w);
        }
    }
    seen
}

fn component_masks_over(adj: &[u64]) -> Vec<u64> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for v in 0..adj.len() {
        if seen & (1u64 << v) == 0 {
            let c = component_mask_from(adj, v);
            seen |= c;
            out.push(c);
        }
    }
    out
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

fn count_cliques_rec(adj: &[u64], cand: u64, need: usize) -> u64 {
    if need == 0 {
        return 1;
    }
    if (cand.count_ones() as usize) < need {
        return 0;
    }
    let mut total = 0u64;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // only extend upward to count each clique once
        total += count_cliques_rec(adj, rest & adj[v], need - 1);
    }
    total
}

/// Number of r-vertex cliques in `g`, exact.
pub fn count_cliques(g: &Graph, r: usize) -> Result<u64> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "clique order must be at least 2, got {r}"
        )));
    }
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    Ok(count_cliques_rec(&g.adj, all, r))
}

/// Number of r-cliques of the graph given by `adj` inside the vertex set
/// `within`. Used by the red-blue oracle for incremental counting.
pub(crate) fn count_cliques_in(adj: &[u64], within: u64, r: usize) -> u64 {
    count_cliques_rec(adj, within, r)
}

struct LongestPathState<'a> {
    adj: &'a [u64],
    comp: u64,
    best: usize,
    target: Option<usize>,
    hit_target: bool,
}

impl LongestPathState<'_> {
    fn dfs(&mut self, v: usize, visited: u64, len: usize) {
        if len > self.best {
            self.best = len;
            if let Some(t) = self.target {
                if self.best >= t {
                    self.hit_target = true;
                }
            }
        }
        if self.hit_target {
            return;
        }
        // coarse bound: even visiting every remaining component vertex cannot win
        let remaining = (self.comp & !visited).count_ones() as usize;
        if len + remaining <= self.best {
            return;
        }
        let mut cand = self.adj[v] & !visited;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.dfs(w, visited | (1u64 << w), len + 1);
            if self.hit_target {
                return;
            }
        }
    }
}

fn longest_path_over(adj: &[u64], target: Option<usize>) -> (usize, bool) {
    let mut best = 0usize;
    let mut comps = component_masks_over(adj);
    comps.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));
    for comp in comps {
        let size = comp.count_ones() as usize;
        if size == 0 || size - 1 <= best {
            continue;
        }
        let mut st = LongestPathState {
            adj,
            comp,
            best,
            target,
            hit_target: false,
        };
        let mut verts = comp;
        while verts != 0 {
            let v = verts.trailing_zeros() as usize;
            verts &= verts - 1;
            st.dfs(v, 1u64 << v, 0);
            if st.hit_target {
                return (st.best, true);
            }
        }
        best = st.best;
        if let Some(t) = target {
            if best >= t {
                return (best, true);
            }
        }
    }
    (best, target.map(|t| best >= t).unwrap_or(false))
}

/// Exact number of edges in a longest path of `g` (0 for an edgeless graph).
pub fn longest_path(g: &Graph) -> usize {
    longest_path_over(&g.adj, None).0
}

/// True iff `g` contains a path with exactly `k` edges (early-exit search).
pub fn has_path_of_length(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return g.n() > 0;
    }
    longest_path_over(&g.adj, Some(k)).1
}

/// Path check over a raw adjacency table; used by the branch-and-bound
/// oracles on their incrementally maintained graphs.
pub(crate) fn has_path_len_over(adj: &[u64], k: usize) -> bool {
    if k == 0 {
        return !adj.is_empty();
    }
    longest_path_over(adj, Some(k)).1
}

/// P_k-freeness: no path with k edges.
pub fn is_pk_free(g: &Graph, k: usize) -> bool {
    !has_path_of_length(g, k)
}
