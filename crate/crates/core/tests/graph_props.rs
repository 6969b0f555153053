mod common;

use common::{arb_graph, naive_isomorphic};
use cwclass::canon::{canonical_key, is_isomorphic};
use cwclass::enumerate::graphs_up_to;
use cwclass::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use cwclass::{Edit, Graph};
use proptest::prelude::*;

fn vertex_subset(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(any::<bool>(), n).prop_map(|bits| {
        bits.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect()
    })
}

/// A graph with two disjoint vertex sets.
fn graph_with_sides() -> impl Strategy<Value = (Graph, Vec<usize>, Vec<usize>)> {
    arb_graph(1, 9).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), proptest::collection::vec(0..3u8, n)).prop_map(|(g, side)| {
            let pick = |s| side.iter().enumerate().filter(|(_, &x)| x == s).map(|(v, _)| v).collect();
            (g, pick(1), pick(2))
        })
    })
}

#[test]
fn complement_is_an_involution_on_all_small_graphs() {
    for g in graphs_up_to(8).unwrap() {
        let back = g.complement().complement();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(g.edge_count() + g.complement().edge_count(), g.vertex_count() * (g.vertex_count().saturating_sub(1)) / 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn subdivide_then_dissolve_restores(g in arb_graph(2, 9), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let s = g.transform(&Edit::SubdivideEdge(u, v)).unwrap();
        prop_assert_eq!(s.vertex_count(), g.vertex_count() + 1);
        prop_assert_eq!(s.edge_count(), g.edge_count() + 1);
        let back = s.transform(&Edit::DissolveVertex(g.vertex_count())).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn subgraph_complementation_is_an_involution(
        (g, set) in arb_graph(1, 9).prop_flat_map(|g| { let n = g.vertex_count(); (Just(g), vertex_subset(n)) })
    ) {
        let once = g.transform(&Edit::ComplementSubgraph(set.clone())).unwrap();
        let twice = once.transform(&Edit::ComplementSubgraph(set.clone())).unwrap();
        prop_assert_eq!(twice.edges(), g.edges());
        let k = set.len();
        let inside = common::vertex_pairs(k).filter(|&(a, b)| g.has_edge(set[a], set[b])).count();
        prop_assert_eq!(once.edge_count(), g.edge_count() - inside + (k * k.saturating_sub(1) / 2 - inside));
    }

    #[test]
    fn bipartite_complementation_counts_and_involution((g, xs, ys) in graph_with_sides()) {
        let edit = Edit::ComplementBipartite(xs.clone(), ys.clone());
        let once = g.transform(&edit).unwrap();
        let cross = xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).filter(|&(x, y)| g.has_edge(x, y)).count();
        prop_assert_eq!(once.edge_count(), g.edge_count() - cross + (xs.len() * ys.len() - cross));
        prop_assert_eq!(once.transform(&edit).unwrap().edges(), g.edges());
    }

    #[test]
    fn contraction_is_simple(g in arb_graph(2, 9), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let c = g.transform(&Edit::ContractEdge(u, v)).unwrap();
        prop_assert_eq!(c.vertex_count(), g.vertex_count() - 1);
        for w in 0..c.vertex_count() {
            prop_assert!(!c.has_edge(w, w));
            let listed: Vec<usize> = c.neighbors(w).collect();
            let mut dedup = listed.clone();
            dedup.dedup();
            prop_assert_eq!(&listed, &dedup);
            prop_assert_eq!(listed.len(), c.degree(w));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let expected = (g.neighbors(keep).chain(g.neighbors(gone)))
            .filter(|&w| w != keep && w != gone)
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        prop_assert_eq!(c.degree(keep), expected);
    }

    #[test]
    fn graph6_and_edge_list_round_trip(g in arb_graph(0, 70)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap().edges(), g.edges());
        let back = from_edge_list(&to_edge_list(&g)).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn canonical_key_agrees_with_brute_force_isomorphism(a in arb_graph(1, 6), b in arb_graph(1, 6)) {
        let brute = naive_isomorphic(&a, &b);
        prop_assert_eq!(canonical_key(&a) == canonical_key(&b), brute);
        prop_assert_eq!(is_isomorphic(&a, &b), brute);
    }

    #[test]
    fn canonical_key_is_invariant_under_relabelling(g in arb_graph(1, 10), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
    }
}
