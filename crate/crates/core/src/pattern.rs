//! Induced-subgraph containment and the structural predicates the
//! classification rules are phrased in.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An induced embedding: `mapping[p]` is the host vertex that pattern vertex `p` maps to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub mapping: Vec<usize>,
}

impl Embedding {
    /// Checks the induced-embedding invariant against a host and pattern.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.vertex_count();
        if self.mapping.len() != k || self.mapping.iter().any(|&x| x >= host.vertex_count()) {
            return false;
        }
        for a in 0..k {
            for b in (a + 1)..k {
                if self.mapping[a] == self.mapping[b] {
                    return false;
                }
                if pattern.has_edge(a, b) != host.has_edge(self.mapping[a], self.mapping[b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds an induced copy of `pattern` in `host`.
///
/// Pattern vertices are assigned in index order and host candidates are tried
/// in increasing order, so the returned mapping is the lexicographically
/// least one. Candidates are filtered by degree and by adjacency to every
/// vertex already placed.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    if k > n || pattern.edge_count() > host.edge_count() {
        return None;
    }
    if k == 0 {
        return Some(Embedding { mapping: Vec::new() });
    }
    let pattern_degrees: Vec<usize> = (0..k).map(|p| pattern.degree(p)).collect();
    let host_degrees: Vec<usize> = (0..n).map(|v| host.degree(v)).collect();
    let mut mapping = Vec::with_capacity(k);
    let mut used = FixedBitSet::with_capacity(n);
    if assign(host, pattern, &pattern_degrees, &host_degrees, &mut mapping, &mut used) {
        Some(Embedding { mapping })
    } else {
        None
    }
}

fn assign(
    host: &Graph,
    pattern: &Graph,
    pattern_degrees: &[usize],
    host_degrees: &[usize],
    mapping: &mut Vec<usize>,
    used: &mut FixedBitSet,
) -> bool {
    let p = mapping.len();
    if p == pattern.vertex_count() {
        return true;
    }
    let n = host.vertex_count();
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    candidates.difference_with(used);
    for (q, &x) in mapping.iter().enumerate() {
        if pattern.has_edge(p, q) {
            candidates.intersect_with(host.neighbor_set(x));
        } else {
            candidates.difference_with(host.neighbor_set(x));
        }
    }
    for x in candidates.ones() {
        if host_degrees[x] < pattern_degrees[p] {
            continue;
        }
        mapping.push(x);
        used.insert(x);
        if assign(host, pattern, pattern_degrees, host_degrees, mapping, used) {
            return true;
        }
        used.set(x, false);
        mapping.pop();
    }
    false
}

pub fn is_induced_subgraph(pattern: &Graph, host: &Graph) -> bool {
    contains_induced(host, pattern).is_some()
}

/// The first pattern found in a freeness check, with where it sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub pattern_index: usize,
    pub embedding: Embedding,
}

/// `Ok(())` iff `g` contains none of `patterns` as an induced subgraph.
pub fn is_free(g: &Graph, patterns: &[Graph]) -> std::result::Result<(), Violation> {
    for (pattern_index, pattern) in patterns.iter().enumerate() {
        if let Some(embedding) = contains_induced(g, pattern) {
            return Err(Violation {
                pattern_index,
                embedding,
            });
        }
    }
    Ok(())
}

/// Membership in the class of graphs whose components are paths or subdivided claws.
pub fn in_class_s(g: &Graph) -> bool {
    g.components().iter().all(|comp| {
        let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        if edges + 1 != comp.len() {
            return false;
        }
        let mut branch = 0;
        for &v in comp {
            match g.degree(v) {
                0..=2 => {}
                3 => branch += 1,
                _ => return false,
            }
        }
        branch <= 1
    })
}

/// Simple shape recognizers used by the rule tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeTests {
    pub is_edgeless: bool,
    /// `Some(s)` iff the graph is `sP1`.
    pub edgeless_size: Option<usize>,
    pub is_complete: bool,
    /// `Some(t)` iff the graph is `K_t`.
    pub complete_size: Option<usize>,
    pub is_linear_forest: bool,
    pub is_forest: bool,
    pub is_complete_multipartite: bool,
}

pub fn shape_tests(g: &Graph) -> ShapeTests {
    let n = g.vertex_count();
    let is_edgeless = g.edge_count() == 0;
    let is_complete = g.edge_count() == n * n.saturating_sub(1) / 2;
    let is_forest = g.is_forest();
    ShapeTests {
        is_edgeless,
        edgeless_size: is_edgeless.then_some(n),
        is_complete,
        complete_size: is_complete.then_some(n),
        is_linear_forest: is_forest && g.max_degree() <= 2,
        is_forest,
        is_complete_multipartite: is_complete_multipartite(g),
    }
}

/// Non-adjacency must be an equivalence relation: the complement is a disjoint union of cliques.
fn is_complete_multipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    for u in 0..n {
        for v in 0..n {
            if u == v || g.has_edge(u, v) {
                continue;
            }
            for w in 0..n {
                if w != u && w != v && !g.has_edge(v, w) && g.has_edge(u, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Default vertex cap for the exponential cycle and path probes.
pub const DEFAULT_PROBE_CAP: usize = 16;

/// Results of the cycle and path probes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleAndPathProbes {
    pub has_triangle: bool,
    /// Length of the longest induced cycle, `None` for forests.
    pub longest_induced_cycle: Option<usize>,
    /// Number of vertices of the longest induced path.
    pub longest_induced_path: usize,
}

impl CycleAndPathProbes {
    /// Whether some induced cycle has at least `len` vertices (`len >= 3`).
    pub fn has_induced_cycle_length_at_least(&self, len: usize) -> bool {
        self.longest_induced_cycle.is_some_and(|c| c >= len)
    }
}

pub fn has_triangle(g: &Graph) -> bool {
    g.edges().iter().any(|&(u, v)| {
        let mut common = g.neighbor_set(u).clone();
        common.intersect_with(g.neighbor_set(v));
        !common.is_clear()
    })
}

/// Runs the probes with the given vertex cap.
///
/// Forests are answered directly (every path in a forest is induced), so the
/// cap applies only to graphs with a cycle.
pub fn cycle_and_path_probes(g: &Graph, cap: usize) -> Result<CycleAndPathProbes> {
    let has_triangle = has_triangle(g);
    if g.is_forest() {
        return Ok(CycleAndPathProbes {
            has_triangle,
            longest_induced_cycle: None,
            longest_induced_path: forest_longest_path(g),
        });
    }
    if g.vertex_count() > cap {
        return Err(Error::Capacity {
            what: "induced cycle/path probe",
            size: g.vertex_count(),
            limit: cap,
        });
    }
    let mut longest_cycle = 0;
    let mut longest_path = 0;
    let mut path = Vec::new();
    let mut on_path = FixedBitSet::with_capacity(g.vertex_count());
    for start in 0..g.vertex_count() {
        path.push(start);
        on_path.insert(start);
        grow_induced_path(g, &mut path, &mut on_path, &mut longest_cycle, &mut longest_path);
        on_path.set(start, false);
        path.pop();
    }
    Ok(CycleAndPathProbes {
        has_triangle,
        longest_induced_cycle: (longest_cycle >= 3).then_some(longest_cycle),
        longest_induced_path: longest_path,
    })
}

/// Extends an induced path from its last vertex. An induced cycle closes when
/// a new vertex touches both ends of the path and nothing in between.
fn grow_induced_path(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: &mut FixedBitSet,
    longest_cycle: &mut usize,
    longest_path: &mut usize,
) {
    *longest_path = (*longest_path).max(path.len());
    let last = *path.last().unwrap();
    let first = path[0];
    for w in g.neighbors(last).collect::<Vec<_>>() {
        if on_path.contains(w) {
            continue;
        }
        let touches_inner = path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w));
        if touches_inner {
            let touches_only_first = path.len() >= 2
                && path[1..path.len() - 1].iter().all(|&p| !g.has_edge(p, w))
                && g.has_edge(first, w);
            if touches_only_first {
                *longest_cycle = (*longest_cycle).max(path.len() + 1);
            }
            continue;
        }
        path.push(w);
        on_path.insert(w);
        grow_induced_path(g, path, on_path, longest_cycle, longest_path);
        on_path.set(w, false);
        path.pop();
    }
}

fn forest_longest_path(g: &Graph) -> usize {
    let farthest = |s: usize| -> (usize, usize) {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        let mut best = (s, 0);
        while let Some(u) = queue.pop_front() {
            if dist[u] > best.1 {
                best = (u, dist[u]);
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        best
    };
    g.components()
        .iter()
        .map(|comp| {
            let (far, _) = farthest(comp[0]);
            farthest(far).1 + 1
        })
        .max()
        .unwrap_or(0)
}
