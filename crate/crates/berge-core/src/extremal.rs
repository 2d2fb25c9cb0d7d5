//! Closed-form extremal values, the constructions attaining them, and the
//! exact inequality utilities backing the red-blue reduction.

use serde::Serialize;

use crate::binom::{binom, subsets_of};
use crate::error::{Error, Result};
use crate::graph::count_cliques;
use crate::hypergraph::Hypergraph;
use crate::redblue::RedBlueGraph;

/// Parameters (n, r, k) with the derived division n = p·k + q, 0 <= q < k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TuranParams {
    n: u64,
    r: u64,
    k: u64,
    p: u64,
    q: u64,
}

impl TuranParams {
    pub fn new(n: u64, r: u64, k: u64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if r < 2 {
            return Err(Error::InvalidParameter(format!(
                "uniformity r must be at least 2, got {r}"
            )));
        }
        if k < 2 {
            return Err(Error::InvalidParameter(format!(
                "forbidden path length k must be at least 2, got {k}"
            )));
        }
        Ok(TuranParams {
            n,
            r,
            k,
            p: n / k,
            q: n % k,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn r(&self) -> u64 {
        self.r
    }
    pub fn k(&self) -> u64 {
        self.k
    }
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn q(&self) -> u64 {
        self.q
    }
}

/// Which branch of the piecewise formula applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaRegime {
    /// k >= r+1: disjoint complete blocks, p·C(k,r) + C(q,r).
    Partition,
    /// 3 <= k <= r: (r+1)-vertex blocks, ⌊n/(r+1)⌋·(k-1) + [r+1 | n+1].
    Block,
    /// k = 2: pairwise-disjoint hyperedges, ⌊n/r⌋.
    Matching,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub value: u64,
    pub regime: FormulaRegime,
    /// r = 2 is served by the same formulas but lies outside the range the
    /// hypergraph results are proved for; kept as a graph sanity cross-check.
    pub outside_proven_range: bool,
}

/// The exact maximum edge count of a Berge-P_k-free r-graph on n vertices,
/// with the regime that produced it.
pub fn turan_formula_detailed(p: &TuranParams) -> Result<FormulaValue> {
    let (n, r, k) = (p.n, p.r, p.k);
    let (value, regime) = if k == 2 {
        (n / r, FormulaRegime::Matching)
    } else if k <= r {
        let blocks = n / (r + 1);
        let indicator = u64::from((n + 1) % (r + 1) == 0);
        (blocks * (k - 1) + indicator, FormulaRegime::Block)
    } else {
        let val =
            p.p.checked_mul(binom(k, r)?)
                .and_then(|v| v.checked_add(binom(p.q, r).ok()?))
                .ok_or(Error::Overflow("extremal value"))?;
        (val, FormulaRegime::Partition)
    };
    Ok(FormulaValue {
        value,
        regime,
        outside_proven_range: r == 2,
    })
}

pub fn turan_formula(p: &TuranParams) -> Result<u64> {
    Ok(turan_formula_detailed(p)?.value)
}

/// The extremal construction for k >= r+1: p disjoint complete r-graphs on k
/// vertices plus one on the remaining q vertices.
pub fn construct_extremal(p: &TuranParams) -> Result<Hypergraph> {
    if p.k < p.r + 1 {
        return Err(Error::WrongRegime(format!(
            "partition construction needs k >= r+1 (got k = {}, r = {}); use the block construction",
            p.k, p.r
        )));
    }
    let (n, r, k) = (p.n as usize, p.r as usize, p.k as usize);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut base = 0usize;
    for _ in 0..p.p {
        let block: Vec<usize> = (base..base + k).collect();
        edges.extend(subsets_of(&block, r));
        base += k;
    }
    let tail: Vec<usize> = (base..n).collect();
    if tail.len() >= r {
        edges.extend(subsets_of(&tail, r));
    }
    Hypergraph::from_edges(n, r, edges)
}

/// The extremal construction for 2 <= k <= r with (r+1) | n: blocks of r+1
/// vertices, each carrying the lexicographically first k-1 of its r-subsets.
pub fn construct_small_k(p: &TuranParams) -> Result<Hypergraph> {
    if p.k > p.r {
        return Err(Error::WrongRegime(format!(
            "block construction needs k <= r (got k = {}, r = {}); use the partition construction",
            p.k, p.r
        )));
    }
    if !p.n.is_multiple_of(p.r + 1) {
        return Err(Error::DivisibilityViolation {
            n: p.n,
            modulus: p.r + 1,
        });
    }
    let (n, r, k) = (p.n as usize, p.r as usize, p.k as usize);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut base = 0usize;
    while base < n {
        let block: Vec<usize> = (base..base + r + 1).collect();
        let mut subs = subsets_of(&block, r);
        subs.sort();
        subs.truncate(k - 1);
        edges.extend(subs);
        base += r + 1;
    }
    Hypergraph::from_edges(n, r, edges)
}

/// The red-blue weight g(G) = (number of r-cliques of the blue subgraph)
/// plus the number of red edges.
pub fn g_value(g: &RedBlueGraph, r: u64) -> Result<u64> {
    let blue_cliques = count_cliques(&g.blue_subgraph(), r as usize)?;
    Ok(blue_cliques + g.red_edge_count() as u64)
}

/// The maximum of g over P_k-free red-blue graphs on n vertices:
/// p·C(k,r) plus C(q,r) when q >= r+2, else C(q,2). The branches agree at
/// q = r+2; at k = r+1 the value is stated but the proof regime is k > r+1.
pub fn g_upper_bound(p: &TuranParams) -> Result<u64> {
    if p.k < p.r + 1 {
        return Err(Error::WrongRegime(format!(
            "g upper bound needs k >= r+1, got k = {}, r = {}",
            p.k, p.r
        )));
    }
    let tail = if p.q >= p.r + 2 {
        binom(p.q, p.r)?
    } else {
        binom(p.q, 2)?
    };
    p.p.checked_mul(binom(p.k, p.r)?)
        .and_then(|v| v.checked_add(tail))
        .ok_or(Error::Overflow("g upper bound"))
}

/// The red-blue graph attaining [`g_upper_bound`]: p mono-blue copies of K_k
/// plus a K_q that is mono-blue when q >= r+2 and mono-red otherwise.
pub fn construct_redblue_extremal(p: &TuranParams) -> Result<RedBlueGraph> {
    if p.k < p.r + 1 {
        return Err(Error::WrongRegime(format!(
            "red-blue construction needs k >= r+1, got k = {}, r = {}",
            p.k, p.r
        )));
    }
    let (n, k, q) = (p.n as usize, p.k as usize, p.q as usize);
    let mut red = Vec::new();
    let mut blue = Vec::new();
    let mut base = 0usize;
    for _ in 0..p.p {
        for u in base..base + k {
            for v in u + 1..base + k {
                blue.push((u, v));
            }
        }
        base += k;
    }
    let tail_blue = p.q >= p.r + 2;
    for u in base..base + q {
        for v in u + 1..base + q {
            if tail_blue {
                blue.push((u, v));
            } else {
                red.push((u, v));
            }
        }
    }
    RedBlueGraph::new(n, red, blue)
}

/// Maximum number of K_r copies over P_k-free graphs on n vertices:
/// p·C(k,r) + C(q,r), for 3 <= r <= k.
pub fn kr_count_bound(p: &TuranParams) -> Result<u64> {
    if p.r < 3 || p.r > p.k {
        return Err(Error::OutOfTheoremRange(format!(
            "clique-count bound needs 3 <= r <= k, got r = {}, k = {}",
            p.r, p.k
        )));
    }
    p.p.checked_mul(binom(p.k, p.r)?)
        .and_then(|v| v.checked_add(binom(p.q, p.r).ok()?))
        .ok_or(Error::Overflow("clique-count bound"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KaramataReport {
    pub majorizes: bool,
    pub inequality_holds: bool,
}

/// Checks majorization of `x` over `y` (sorted internally) and the convex-sum
/// inequality Σf(x_i) >= Σf(y_i) for `f` given as a value table on 0..len.
///
/// The table must be convex (second differences nonnegative); when it is,
/// majorization implies the inequality, and the exhaustive suites assert
/// exactly that.
pub fn karamata_check(f_table: &[i64], x: &[u64], y: &[u64]) -> Result<KaramataReport> {
    if x.len() != y.len() {
        return Err(Error::InvalidInput(format!(
            "sequence lengths differ: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    for i in 1..f_table.len().saturating_sub(1) {
        let second = f_table[i + 1] as i128 - 2 * f_table[i] as i128 + f_table[i - 1] as i128;
        if second < 0 {
            return Err(Error::ConvexityViolation { index: i });
        }
    }
    let max_index = f_table.len() as u64;
    for &v in x.iter().chain(y.iter()) {
        if v >= max_index {
            return Err(Error::InvalidInput(format!(
                "value {v} outside the function table (length {max_index})"
            )));
        }
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_unstable_by(|a, b| b.cmp(a));
    ys.sort_unstable_by(|a, b| b.cmp(a));

    let mut majorizes = true;
    let mut px: u128 = 0;
    let mut py: u128 = 0;
    for i in 0..xs.len() {
        px += xs[i] as u128;
        py += ys[i] as u128;
        if px < py {
            majorizes = false;
        }
    }
    if px != py {
        majorizes = false;
    }
    let sum = |s: &[u64]| -> i128 { s.iter().map(|&v| f_table[v as usize] as i128).sum() };
    Ok(KaramataReport {
        majorizes,
        inequality_holds: sum(&xs) >= sum(&ys),
    })
}

/// Per-part status of the two auxiliary binomial inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityStatus {
    NotApplicable,
    Holds { equality: bool },
    Fails,
}

impl InequalityStatus {
    pub fn holds(&self) -> bool {
        matches!(self, InequalityStatus::Holds { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub part_i: InequalityStatus,
    pub part_ii: InequalityStatus,
}

/// Exact (cross-multiplied) evaluation of the two inequalities
/// (i)  (k-1)/2 <= C(k-1, r-1)/r                     for k >= r+2,
/// (ii) (k-ℓ-1)/2 <= (C(k-1, r-1) - C(ℓ, r-1))/r     for 3 <= r <= ℓ <= k-2.
/// Equality in (i) is detected (it occurs exactly at k = r+2).
pub fn lemi_check(r: u64, k: u64, ell: u64) -> Result<InequalityReport> {
    let part_i = if r >= 2 && k >= r + 2 {
        let lhs = (r as u128) * ((k - 1) as u128);
        let rhs = 2 * binom(k - 1, r - 1)? as u128;
        if lhs < rhs {
            InequalityStatus::Holds { equality: false }
        } else if lhs == rhs {
            InequalityStatus::Holds { equality: true }
        } else {
            InequalityStatus::Fails
        }
    } else {
        InequalityStatus::NotApplicable
    };
    let part_ii = if r >= 3 && r <= ell && ell + 2 <= k {
        let lhs = (r as u128) * ((k - ell - 1) as u128);
        let big = binom(k - 1, r - 1)? as u128;
        let small = binom(ell, r - 1)? as u128;
        debug_assert!(small <= big);
        let rhs = 2 * (big - small);
        if lhs < rhs {
            InequalityStatus::Holds { equality: false }
        } else if lhs == rhs {
            InequalityStatus::Holds { equality: true }
        } else {
            InequalityStatus::Fails
        }
    } else {
        InequalityStatus::NotApplicable
    };
    Ok(InequalityReport { part_i, part_ii })
}

/// Edge bound for r-graphs with no Berge cycle of length >= r:
/// max{⌊(n-1)/r⌋·(r-1), n-r+1}, for n >= r >= 3.
pub fn berge_cycle_free_bound(n: u64, r: u64) -> u64 {
    assert!(r >= 3 && n >= r, "requires n >= r >= 3");
    (((n - 1) / r) * (r - 1)).max(n - r + 1)
}
