mod common;

use common::arb_graph;
use cwclass::canon::is_isomorphic;
use cwclass::classifier::GraphTable;
use cwclass::enumerate::graphs_up_to;
use cwclass::names::graph;
use cwclass::{classify_pair, classify_single, Graph, Status};
use proptest::prelude::*;

fn swap_k3_paw(g: &Graph) -> Graph {
    let (k3, paw) = (graph("K3"), graph("paw"));
    if is_isomorphic(g, &k3) {
        paw
    } else if is_isomorphic(g, &paw) {
        k3
    } else {
        g.clone()
    }
}

/// Small graphs with K3 and the paw over-represented so the substitution fires.
fn arb_pattern() -> impl Strategy<Value = Graph> {
    prop_oneof![
        4 => arb_graph(1, 7),
        1 => Just(graph("K3")),
        1 => Just(graph("paw")),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn status_is_invariant_under_the_equivalence(a in arb_pattern(), b in arb_pattern()) {
        let status = classify_pair(&a, &b).unwrap().status;
        prop_assert!(matches!(status, Status::Bounded | Status::Unbounded | Status::Open));
        prop_assert_eq!(classify_pair(&b, &a).unwrap().status, status);
        prop_assert_eq!(classify_pair(&a.complement(), &b.complement()).unwrap().status, status);
        prop_assert_eq!(classify_pair(&swap_k3_paw(&a), &b).unwrap().status, status);
        prop_assert_eq!(classify_pair(&a, &swap_k3_paw(&b)).unwrap().status, status);
    }
}

#[test]
fn known_rows() {
    let status = |a: &str, b: &str| classify_pair(&graph(a), &graph(b)).unwrap().status;
    assert_eq!(status("paw", "K1_3+3P1"), Status::Bounded);
    assert_eq!(status("paw", "P1+S_1_1_2"), Status::Bounded);
    assert_eq!(status("P6", "co(2P1+P2)"), Status::Unbounded);
    assert_eq!(status("P1+P4", "co(P2+P4)"), Status::Unbounded);
    assert_eq!(status("co(P1+P4)", "P2+P4"), Status::Unbounded);
    // K3 behaves like the paw.
    assert_eq!(status("K3", "K1_3+3P1"), Status::Bounded);
}

#[test]
fn bounded_pairs_on_five_vertices_always_name_a_bounded_rule() {
    let all = graphs_up_to(5).unwrap();
    let mut table = GraphTable::new();
    let ids: Vec<usize> = all.iter().map(|g| table.intern(g)).collect();
    for (x, &a) in ids.iter().enumerate() {
        for &b in &ids[x..] {
            let v = table.classify_ids(a, b).unwrap();
            if v.status != Status::Bounded {
                continue;
            }
            assert!(v.rule.starts_with('B'), "{v}");
            assert_eq!(v.matched.len(), 2);
            let single = classify_single(table.graph(a)).status == Status::Bounded
                || classify_single(table.graph(b)).status == Status::Bounded;
            assert!(single || v.rule != "B1", "{v}");
        }
    }
}
