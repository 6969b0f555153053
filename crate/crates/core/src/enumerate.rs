//! Enumeration of all graphs on a given number of vertices up to isomorphism.
//!
//! Level `n` is built from level `n - 1` by adding one vertex with every
//! possible neighbourhood and keeping one graph per canonical key. The
//! resulting graphs are in canonical form, sorted by edge count and then by
//! canonical key.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, canonical_key};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the enumerator accepts.
pub const ENUMERATION_LIMIT: usize = 8;

fn next_level(prev: &[Graph]) -> Vec<Graph> {
    let mut seen = BTreeMap::new();
    for g in prev {
        let n = g.vertex_count();
        for mask in 0u32..(1 << n) {
            let mut h = g.disjoint_union(&Graph::new(1));
            for v in 0..n {
                if mask >> v & 1 == 1 {
                    h.insert_edge(v, n);
                }
            }
            let key = canonical_key(&h);
            seen.entry((h.edge_count(), key)).or_insert(h);
        }
    }
    seen.into_values().map(|h| canonical_form(&h)).collect()
}

/// All graphs with exactly `n` vertices, one per isomorphism class.
pub fn graphs_with_vertices(n: usize) -> Result<Vec<Graph>> {
    Ok(graphs_by_size(n)?.pop().unwrap_or_default())
}

/// All graphs with `1..=max_n` vertices, smaller graphs first.
pub fn graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    Ok(graphs_by_size(max_n)?.into_iter().skip(1).flatten().collect())
}

/// `levels[n]` lists the graphs with `n` vertices, for `n` in `0..=max_n`.
pub fn graphs_by_size(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    if max_n > ENUMERATION_LIMIT {
        return Err(Error::Capacity {
            what: "graph enumeration",
            size: max_n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut levels = vec![vec![Graph::new(0)]];
    for _ in 0..max_n {
        let next = next_level(levels.last().unwrap());
        levels.push(next);
    }
    Ok(levels)
}
