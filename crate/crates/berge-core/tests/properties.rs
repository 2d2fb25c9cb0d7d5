//! Property suites: invariants that tie the independent routes together.

mod common;

use berge_core::{
    binom, construct_redblue_extremal, find_berge_cycle, find_berge_path, g_upper_bound, g_value,
    is_good_set, karamata_check, longest_berge_path, longest_path, turan_formula, turan_oracle,
    verify_witness, Budget, GoodVerdict, Hypergraph, OracleOptions, OracleWitness, TuranParams,
    VertexId,
};
use common::{
    brute_force_berge_cycle, brute_force_berge_path, brute_force_spanning_path_between,
    random_three_graph, Rng,
};
use proptest::prelude::*;

fn opts() -> OracleOptions {
    OracleOptions {
        budget: Budget::UNLIMITED,
        workers: 1,
    }
}

/// Exhaustive maximum by the dumbest possible route: every edge subset,
/// freeness decided by the naive detector. Ground truth for the oracle.
fn brute_force_turan(n: usize, r: usize, k: usize) -> u64 {
    let candidates = berge_core::binom::subsets_lex(n, r);
    assert!(candidates.len() <= 20);
    let mut best = 0u64;
    for mask in 0u32..(1 << candidates.len()) {
        let count = mask.count_ones() as u64;
        if count <= best {
            continue;
        }
        let edges: Vec<Vec<usize>> = (0..candidates.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| candidates[i].clone())
            .collect();
        let h = Hypergraph::from_edges(n, r, edges).unwrap();
        if !brute_force_berge_path(&h, k) {
            best = count;
        }
    }
    best
}

#[test]
fn oracle_agrees_with_exhaustive_subset_maximum() {
    for n in 3..=5usize {
        for k in 2..=4usize {
            let expected = brute_force_turan(n, 3, k);
            let res =
                turan_oracle(&TuranParams::new(n as u64, 3, k as u64).unwrap(), &opts()).unwrap();
            assert!(res.proved());
            assert_eq!(res.best_value, expected, "n={n} k={k}");
        }
    }
}

#[test]
fn oracle_witnesses_attain_and_are_free() {
    for (n, r, k) in [(5u64, 3u64, 3u64), (6, 3, 4), (6, 4, 5), (5, 3, 2)] {
        let res = turan_oracle(&TuranParams::new(n, r, k).unwrap(), &opts()).unwrap();
        let OracleWitness::Hypergraph(h) = &res.witness else {
            panic!("hypergraph oracle must return a hypergraph witness");
        };
        assert_eq!(h.edge_count() as u64, res.best_value);
        if h.edge_count() >= k as usize {
            assert!(find_berge_path(h, k as usize).is_none());
        }
    }
}

/// Agreement beyond the headline grid, at cells measured to stay cheap.
#[test]
fn oracle_matches_formula_extended_grid() {
    for (n, r, k) in [
        (8u64, 3u64, 4u64),
        (9, 3, 4),
        (8, 3, 5),
        (8, 3, 3),
        (9, 3, 2),
        (7, 4, 5),
    ] {
        let params = TuranParams::new(n, r, k).unwrap();
        let res = turan_oracle(&params, &opts()).unwrap();
        assert!(res.proved(), "({n},{r},{k}) must prove");
        assert_eq!(
            res.best_value,
            turan_formula(&params).unwrap(),
            "({n},{r},{k})"
        );
    }
    let res = berge_core::graph_kr_oracle(9, 4, 3, &opts()).unwrap();
    assert!(res.proved());
    assert_eq!(
        res.best_value,
        berge_core::kr_count_bound(&TuranParams::new(9, 3, 4).unwrap()).unwrap()
    );
}

#[test]
fn oracle_value_monotone_in_n() {
    let mut prev = 0u64;
    for n in 3..=6u64 {
        let res = turan_oracle(&TuranParams::new(n, 3, 4).unwrap(), &opts()).unwrap();
        assert!(res.proved());
        assert!(res.best_value >= prev, "value dropped at n = {n}");
        prev = res.best_value;
    }
}

/// Full desk-scale sweep: every 3-graph on 5 vertices, every k <= 5, paths
/// and cycles, detector vs. the naive enumerator.
#[test]
fn detector_complete_on_all_five_vertex_graphs() {
    let triples = berge_core::binom::subsets_lex(5, 3);
    for mask in 0u32..(1 << triples.len()) {
        let edges: Vec<Vec<usize>> = (0..triples.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| triples[i].clone())
            .collect();
        let h = Hypergraph::from_edges(5, 3, edges).unwrap();
        for k in 1..=5usize {
            assert_eq!(
                find_berge_path(&h, k).is_some(),
                brute_force_berge_path(&h, k),
                "path k={k} on mask {mask}"
            );
        }
        for k in 2..=5usize {
            assert_eq!(
                find_berge_cycle(&h, k).is_some(),
                brute_force_berge_cycle(&h, k),
                "cycle k={k} on mask {mask}"
            );
        }
    }
}

/// Detector completeness on all 6-vertex isomorphism classes for the two
/// hardest lengths (the full product is covered at n = 5 above and by the
/// randomized acceptance sweep).
#[test]
fn detector_complete_on_six_vertex_classes() {
    for h in berge_core::enumerate::isomorphism_classes(6, 3) {
        for k in [4usize, 5] {
            assert_eq!(
                find_berge_path(&h, k).is_some(),
                brute_force_berge_path(&h, k),
                "path k={k} on {:?}",
                h.edges()
            );
            assert_eq!(
                find_berge_cycle(&h, k).is_some(),
                brute_force_berge_cycle(&h, k),
                "cycle k={k} on {:?}",
                h.edges()
            );
        }
    }
}

#[test]
fn detector_monotone_under_edge_addition() {
    let mut rng = Rng::new(0xfeed_beef);
    for _ in 0..300 {
        let n = 4 + rng.below(3) as usize;
        let full = random_three_graph(&mut rng, n, 6, 10);
        if full.edge_count() == 0 {
            continue;
        }
        // random sub-hypergraph
        let sub_edges: Vec<Vec<usize>> = full
            .edges()
            .iter()
            .filter(|_| rng.chance(1, 2))
            .map(|e| e.indices())
            .collect();
        let sub = Hypergraph::from_edges(n, 3, sub_edges).unwrap();
        for k in 1..=4usize {
            if let Some(w) = find_berge_path(&sub, k) {
                assert!(verify_witness(&sub, &w));
                assert!(
                    find_berge_path(&full, k).is_some(),
                    "monotonicity violated at k={k}"
                );
            }
        }
    }
}

#[test]
fn longest_path_bounded_and_witnessed() {
    let mut rng = Rng::new(0x0dd_ba11);
    for _ in 0..200 {
        let n = 3 + rng.below(4) as usize;
        let h = random_three_graph(&mut rng, n, 4, 10);
        let res = longest_berge_path(&h);
        assert!(res.proved);
        assert!(res.length <= (h.n() - 1).min(h.edge_count()));
        match res.witness {
            Some(w) => {
                assert_eq!(w.len(), res.length);
                assert!(verify_witness(&h, &w));
            }
            None => assert_eq!(res.length, 0),
        }
    }
}

#[test]
fn formula_equals_whole_block_bound_at_zero_remainder() {
    // n/k * C(k,r) is exact exactly when k | n
    for r in 2..=4u64 {
        for k in (r + 1)..=8 {
            for p in 1..=4u64 {
                let n = p * k;
                let params = TuranParams::new(n, r, k).unwrap();
                assert_eq!(
                    turan_formula(&params).unwrap(),
                    (n / k) * binom(k, r).unwrap()
                );
            }
        }
    }
}

#[test]
fn redblue_construction_attains_bound_and_is_pk_free() {
    for r in 2..=7u64 {
        for k in (r + 1)..=8 {
            for n in 1..=24u64 {
                let params = TuranParams::new(n, r, k).unwrap();
                let g = construct_redblue_extremal(&params).unwrap();
                assert_eq!(
                    g_value(&g, r).unwrap(),
                    g_upper_bound(&params).unwrap(),
                    "g mismatch at n={n} r={r} k={k}"
                );
                assert!(
                    longest_path(&g.underlying()) < k as usize,
                    "underlying graph not P_k-free at n={n} r={r} k={k}"
                );
            }
        }
    }
}

#[test]
fn karamata_holds_on_randomized_pairs_with_clique_weights() {
    let mut rng = Rng::new(0x1234_5678);
    for r in 3..=5u64 {
        for _ in 0..350 {
            let len = 3 + rng.below(6) as usize;
            let mut y: Vec<u64> = (0..len).map(|_| rng.below(10)).collect();
            y.sort_unstable_by(|a, b| b.cmp(a));
            let mut x = y.clone();
            for _ in 0..(1 + rng.below(8)) {
                let i = rng.below(len as u64) as usize;
                let j = rng.below(len as u64) as usize;
                let (hi, lo) = (i.min(j), i.max(j));
                if hi != lo && x[lo] > 0 {
                    x[hi] += 1;
                    x[lo] -= 1;
                }
                x.sort_unstable_by(|a, b| b.cmp(a));
            }
            let total: u64 = y.iter().sum();
            let table: Vec<i64> = (0..=total + 1)
                .map(|t| binom(t, r - 1).unwrap() as i64)
                .collect();
            let rep = karamata_check(&table, &x, &y).unwrap();
            assert!(rep.majorizes);
            assert!(
                rep.inequality_holds,
                "f=C(t,{}) fails on {x:?} vs {y:?}",
                r - 1
            );
        }
    }
}

#[test]
fn good_set_reports_are_reproducible() {
    let mut rng = Rng::new(0x900d_5e75);
    let mut checked = 0;
    while checked < 60 {
        let n = 5 + rng.below(2) as usize;
        let h = random_three_graph(&mut rng, n, 7, 10);
        let ell = longest_berge_path(&h).length;
        if ell <= 3 {
            continue;
        }
        checked += 1;
        for size in 1..=3usize {
            for ix in berge_core::binom::subsets_lex(n, size) {
                let s: Vec<VertexId> = ix.into_iter().map(VertexId).collect();
                let rep = is_good_set(&h, &s, ell).unwrap();
                assert_eq!(
                    rep.inequality_holds(),
                    rep.verdict != GoodVerdict::Neither,
                    "verdict not reproducible from report fields"
                );
                // recompute from scratch
                let incident = h.incident_edge_count(&s).unwrap() as u64;
                assert_eq!(rep.incident_count, incident);
            }
        }
    }
}


fn naive_longest_path(g: &berge_core::Graph) -> usize {
    fn dfs(g: &berge_core::Graph, v: usize, visited: u64, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        let mut cand = g.neighbors(v) & !visited;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            dfs(g, w, visited | (1u64 << w), len + 1, best);
        }
    }
    let mut best = 0;
    for v in 0..g.n() {
        dfs(g, v, 1u64 << v, 0, &mut best);
    }
    best
}

fn random_graph(rng: &mut Rng, n: usize, num: u64, den: u64) -> berge_core::Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(num, den) {
                edges.push((u, v));
            }
        }
    }
    berge_core::Graph::new(n, edges).unwrap()
}

#[test]
fn longest_path_matches_unpruned_search() {
    let mut rng = Rng::new(0x70a7_6001);
    for _ in 0..250 {
        let n = 2 + rng.below(6) as usize;
        let density = 1 + rng.below(9);
        let g = random_graph(&mut rng, n, density, 10);
        let expected = naive_longest_path(&g);
        assert_eq!(longest_path(&g), expected, "{:?}", g.edges());
        for k in 1..=n {
            assert_eq!(
                berge_core::has_path_of_length(&g, k),
                expected >= k,
                "k={k} on {:?}",
                g.edges()
            );
        }
    }
}

#[test]
fn count_cliques_matches_subset_scan() {
    let mut rng = Rng::new(0xc11c_0e5);
    for _ in 0..200 {
        let n = 3 + rng.below(5) as usize;
        let density = 1 + rng.below(9);
        let g = random_graph(&mut rng, n, density, 10);
        for r in 2..=4usize {
            let naive = berge_core::binom::subsets_lex(n, r)
                .into_iter()
                .filter(|s| {
                    s.iter()
                        .enumerate()
                        .all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v)))
                })
                .count() as u64;
            assert_eq!(berge_core::count_cliques(&g, r).unwrap(), naive);
        }
    }
}

#[test]
fn hamiltonian_connectedness_matches_brute_force() {
    // every 3-graph on 4 vertices, and a random sample on 5
    let quads = berge_core::binom::subsets_lex(4, 3);
    for mask in 0u32..(1 << quads.len()) {
        let edges: Vec<Vec<usize>> = (0..quads.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| quads[i].clone())
            .collect();
        let h = Hypergraph::from_edges(4, 3, edges).unwrap();
        let brute = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .all(|(u, v)| brute_force_spanning_path_between(&h, u, v));
        assert_eq!(
            berge_core::is_hamiltonian_connected(&h).unwrap(),
            brute,
            "mask {mask}"
        );
    }
    let mut rng = Rng::new(0x4a3_1170);
    for _ in 0..120 {
        let density = 1 + rng.below(9);
        let h = random_three_graph(&mut rng, 5, density, 10);
        let brute = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .all(|(u, v)| brute_force_spanning_path_between(&h, u, v));
        assert_eq!(
            berge_core::is_hamiltonian_connected(&h).unwrap(),
            brute,
            "{:?}",
            h.edges()
        );
    }
}

#[test]
fn endpoint_confinement_holds_exhaustively_small() {
    let mut qualifying = 0u64;
    for n in 3..=5 {
        for h in berge_core::enumerate::isomorphism_classes(n, 3) {
            let rep = berge_core::check_endpoint_confinement(&h);
            if rep.precondition_ok {
                qualifying += 1;
                assert!(rep.holds, "endpoint confinement fails on {:?}", h.edges());
            }
        }
    }
    assert!(qualifying > 10, "suite should not be vacuous");
}

proptest! {
    #[test]
    fn hypergraph_format_round_trips(
        n in 3usize..10,
        r in 2usize..4,
        picks in prop::collection::vec(any::<bool>(), 130),
    ) {
        let candidates = berge_core::binom::subsets_lex(n, r);
        let edges: Vec<Vec<usize>> = candidates
            .into_iter()
            .zip(picks)
            .filter(|(_, keep)| *keep)
            .map(|(e, _)| e)
            .collect();
        let h = Hypergraph::from_edges(n, r, edges).unwrap();
        let text = berge_core::format::serialize_hypergraph(&h);
        prop_assert_eq!(berge_core::format::parse_hypergraph(&text).unwrap(), h);
    }

    #[test]
    fn redblue_format_round_trips(
        n in 2usize..10,
        colors in prop::collection::vec(0u8..3, 45),
    ) {
        let mut red = Vec::new();
        let mut blue = Vec::new();
        let mut idx = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                match colors.get(idx).copied().unwrap_or(0) {
                    1 => red.push((u, v)),
                    2 => blue.push((u, v)),
                    _ => {}
                }
                idx += 1;
            }
        }
        let g = berge_core::RedBlueGraph::new(n, red, blue).unwrap();
        let text = berge_core::format::serialize_redblue(&g);
        prop_assert_eq!(&berge_core::format::parse_redblue(&text).unwrap(), &g);

        let plain = berge_core::Graph::new(n, g.blue_edges().to_vec()).unwrap();
        let text = berge_core::format::serialize_graph(&plain);
        prop_assert_eq!(berge_core::format::parse_graph(&text).unwrap(), plain);
    }

    #[test]
    fn parsers_never_panic_on_arbitrary_input(s in "\\PC*") {
        let _ = berge_core::format::parse_hypergraph(&s);
        let _ = berge_core::format::parse_graph(&s);
        let _ = berge_core::format::parse_redblue(&s);
        let prefixed = format!("berge-hgraph v1\nr=3 n=5\n{s}");
        let _ = berge_core::format::parse_hypergraph(&prefixed);
    }

    #[test]
    fn count_cliques_matches_pair_count(
        n in 2usize..9,
        picks in prop::collection::vec(any::<bool>(), 36),
    ) {
        let mut edges = Vec::new();
        let mut idx = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if picks.get(idx).copied().unwrap_or(false) {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        let g = berge_core::Graph::new(n, edges).unwrap();
        prop_assert_eq!(
            berge_core::count_cliques(&g, 2).unwrap() as usize,
            g.edge_count()
        );
    }
}
