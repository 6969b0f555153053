#![allow(dead_code)]

use cwclass::Graph;
use proptest::prelude::*;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Uniform random graphs on `lo..=hi` vertices.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Visits every injective map from `0..k` into `0..n`.
pub fn injections(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                let stop = rec(n, k, cur, used, visit);
                cur.pop();
                used[x] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    rec(n, k, &mut Vec::new(), &mut vec![false; n], visit)
}

fn preserves(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    (0..map.len()).all(|a| (a + 1..map.len()).all(|b| pattern.has_edge(a, b) == host.has_edge(map[a], map[b])))
}

/// Induced containment by trying every injective map.
pub fn naive_induced(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.vertex_count();
    k <= host.vertex_count() && injections(host.vertex_count(), k, &mut |map| preserves(host, pattern, map))
}

/// Isomorphism by trying every bijection.
pub fn naive_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && injections(a.vertex_count(), a.vertex_count(), &mut |map| preserves(b, a, map))
}

/// Every pair `(u, v)` with `u < v`.
pub fn vertex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// A random valid k-expression on vertices `v0..v{n-1}` with labels `1..=k`.
pub fn random_cwexpr(rng: &mut impl rand::Rng, n: usize, k: u32) -> cwclass::CwExpr {
    fn build(rng: &mut impl rand::Rng, lo: usize, hi: usize, k: u32) -> cwclass::CwExpr {
        use cwclass::CwExpr;
        let mut e = if hi - lo == 1 {
            CwExpr::create(rng.gen_range(1..=k), format!("v{lo}"))
        } else {
            let mid = rng.gen_range(lo + 1..hi);
            CwExpr::union(build(rng, lo, mid, k), build(rng, mid, hi, k))
        };
        for _ in 0..rng.gen_range(0..=3) {
            let a = rng.gen_range(1..=k);
            let b = rng.gen_range(1..=k);
            if rng.gen_bool(0.6) {
                if a != b {
                    e = CwExpr::join(a, b, e);
                }
            } else {
                e = CwExpr::rename(a, b, e);
            }
        }
        e
    }
    build(rng, 0, n, k)
}
