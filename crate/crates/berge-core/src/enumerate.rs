//! Exhaustive generation of small r-graphs up to isomorphism.
//!
//! Level-by-level augmentation with canonical-form deduplication: the
//! canonical key of an edge set is the minimum, over all vertex relabelings,
//! of its bitmask over the lexicographic list of candidate hyperedges. Every
//! isomorphism class is reached because removing any edge from a canonical
//! representative lands in a class generated one level earlier.

use std::collections::{HashMap, HashSet};

use crate::binom::subsets_lex;
use crate::hypergraph::Hypergraph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    out.push(a.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Precomputed action of every vertex permutation on the candidate-edge
/// index space.
struct CanonTables {
    subsets: Vec<Vec<usize>>,
    perm_maps: Vec<Vec<u8>>,
}

impl CanonTables {
    fn new(n: usize, r: usize) -> Self {
        let subsets = subsets_lex(n, r);
        assert!(
            subsets.len() <= 64,
            "enumeration regime limited to 64 candidate hyperedges"
        );
        let index: HashMap<Vec<usize>, usize> = subsets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let perm_maps = permutations(n)
            .into_iter()
            .map(|perm| {
                subsets
                    .iter()
                    .map(|s| {
                        let mut mapped: Vec<usize> = s.iter().map(|&v| perm[v]).collect();
                        mapped.sort_unstable();
                        index[&mapped] as u8
                    })
                    .collect()
            })
            .collect();
        CanonTables { subsets, perm_maps }
    }

    fn canonical(&self, mask: u64) -> u64 {
        let mut best = u64::MAX;
        for map in &self.perm_maps {
            let mut out = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out |= 1u64 << map[i];
            }
            if out < best {
                best = out;
            }
        }
        best
    }
}

/// One representative per isomorphism class of r-graphs on exactly `n`
/// labeled vertices (isolated vertices included), ordered by edge count.
pub fn isomorphism_classes(n: usize, r: usize) -> Vec<Hypergraph> {
    let tables = CanonTables::new(n, r);
    let t = tables.subsets.len();
    let mut classes: Vec<u64> = Vec::new();
    let mut frontier: Vec<u64> = vec![0];
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(0);
    classes.push(0);
    for _level in 0..t {
        let mut next: Vec<u64> = Vec::new();
        let mut raw_seen: HashSet<u64> = HashSet::new();
        for &mask in &frontier {
            for i in 0..t {
                let bit = 1u64 << i;
                if mask & bit != 0 {
                    continue;
                }
                let child = mask | bit;
                if !raw_seen.insert(child) {
                    continue;
                }
                let canon = tables.canonical(child);
                if seen.insert(canon) {
                    next.push(canon);
                }
            }
        }
        next.sort_unstable();
        classes.extend(&next);
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    classes
        .into_iter()
        .map(|mask| {
            let edges: Vec<Vec<usize>> = (0..t)
                .filter(|&i| mask & (1u64 << i) != 0)
                .map(|i| tables.subsets[i].clone())
                .collect();
            Hypergraph::from_edges(n, r, edges).expect("generated edges are valid")
        })
        .collect()
}

/// Class counts per edge count, mostly for cross-checks.
pub fn class_histogram(n: usize, r: usize) -> Vec<usize> {
    let t = subsets_lex(n, r).len();
    let mut hist = vec![0usize; t + 1];
    for h in isomorphism_classes(n, r) {
        hist[h.edge_count()] += 1;
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_vertices_three_uniform() {
        // Burnside over S_4 acting on the 4 triples gives 120/24 = 5 classes.
        let classes = isomorphism_classes(4, 3);
        assert_eq!(classes.len(), 5);
        let hist = class_histogram(4, 3);
        assert_eq!(hist, vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn five_vertices_three_uniform() {
        // Burnside over S_5 acting on the 10 triples: 4080/120 = 34 classes.
        let classes = isomorphism_classes(5, 3);
        assert_eq!(classes.len(), 34);
    }

    #[test]
    fn histogram_is_palindromic() {
        // complementation is an isomorphism-respecting involution
        for (n, r) in [(4, 3), (5, 3), (5, 2)] {
            let hist = class_histogram(n, r);
            let mut rev = hist.clone();
            rev.reverse();
            assert_eq!(hist, rev, "n={n} r={r}");
        }
    }

    #[test]
    fn class_counts_match_burnside() {
        // Independent count: (1/|S_n|) * sum over permutations of
        // 2^(cycles on candidate edges). Any missed or duplicated class in
        // the canonical-form enumeration would break this equality.
        for (n, r) in [(4, 3), (5, 3), (6, 3), (5, 2), (6, 2)] {
            let tables = CanonTables::new(n, r);
            let t = tables.subsets.len();
            let mut total: u128 = 0;
            for map in &tables.perm_maps {
                let mut seen = vec![false; t];
                let mut cycles = 0u32;
                for start in 0..t {
                    if seen[start] {
                        continue;
                    }
                    cycles += 1;
                    let mut cur = start;
                    while !seen[cur] {
                        seen[cur] = true;
                        cur = map[cur] as usize;
                    }
                }
                total += 1u128 << cycles;
            }
            let order = tables.perm_maps.len() as u128;
            assert_eq!(total % order, 0, "Burnside sum not divisible at n={n} r={r}");
            assert_eq!(
                isomorphism_classes(n, r).len() as u128,
                total / order,
                "n={n} r={r}"
            );
        }
    }

    #[test]
    fn six_vertex_histogram_is_palindromic() {
        let hist = class_histogram(6, 3);
        let mut rev = hist.clone();
        rev.reverse();
        assert_eq!(hist, rev);
        assert_eq!(hist[0], 1);
        assert_eq!(hist[1], 1);
        // two triples on six vertices meet in 0, 1, or 2 vertices
        assert_eq!(hist[2], 3);
    }

    #[test]
    fn graphs_on_four_vertices() {
        // the 11 simple graphs on 4 vertices
        assert_eq!(isomorphism_classes(4, 2).len(), 11);
    }
}
