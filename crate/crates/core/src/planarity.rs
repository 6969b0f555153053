//! Planarity testing.
//!
//! Two independent routes: an exhaustive search for a subdivision of `K5` or
//! `K3,3` (small graphs only), and the face-splitting path-embedding
//! algorithm of Demoucron, Malgrange and Pertuiset, run per biconnected
//! block. [`is_planar`] uses the exhaustive search up to
//! [`KURATOWSKI_SEARCH_LIMIT`] vertices and the embedding algorithm beyond.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count handled by the exhaustive Kuratowski search.
pub const KURATOWSKI_SEARCH_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlanarityMethod {
    /// Exhaustive `K5`/`K3,3` subdivision search; refuses large inputs.
    Kuratowski,
    /// Path embedding over biconnected blocks.
    PathEmbedding,
}

pub fn is_planar(g: &Graph) -> bool {
    let method = if g.vertex_count() <= KURATOWSKI_SEARCH_LIMIT {
        PlanarityMethod::Kuratowski
    } else {
        PlanarityMethod::PathEmbedding
    };
    is_planar_with(g, method).expect("method chosen within its limits")
}

pub fn is_planar_with(g: &Graph, method: PlanarityMethod) -> Result<bool> {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Ok(false);
    }
    match method {
        PlanarityMethod::Kuratowski => {
            if n > KURATOWSKI_SEARCH_LIMIT {
                return Err(Error::Capacity {
                    what: "Kuratowski subdivision search",
                    size: n,
                    limit: KURATOWSKI_SEARCH_LIMIT,
                });
            }
            Ok(!has_kuratowski_subdivision(g))
        }
        PlanarityMethod::PathEmbedding => Ok(biconnected_blocks(g)
            .into_iter()
            .all(|block| block_is_planar(g, &block))),
    }
}

// ---------------------------------------------------------------------------
// Exhaustive subdivision search

fn has_kuratowski_subdivision(g: &Graph) -> bool {
    let n = g.vertex_count();
    let heavy4: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 4).collect();
    let heavy3: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();

    for branch in combinations(&heavy4, 5) {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
            .map(|(a, b)| (branch[a], branch[b]))
            .collect();
        if route_all(g, &branch, &pairs) {
            return true;
        }
    }
    for six in combinations(&heavy3, 6) {
        // Split into two sides; fixing six[0] on the left avoids mirrored duplicates.
        for rest in combinations(&six[1..], 2) {
            let left = [six[0], rest[0], rest[1]];
            let right: Vec<usize> = six.iter().copied().filter(|v| !left.contains(v)).collect();
            let pairs: Vec<(usize, usize)> = left
                .iter()
                .flat_map(|&a| right.iter().map(move |&b| (a, b)))
                .collect();
            if route_all(g, &six, &pairs) {
                return true;
            }
        }
    }
    false
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// Finds internally disjoint paths joining every pair, avoiding branch vertices internally.
fn route_all(g: &Graph, branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let n = g.vertex_count();
    let mut used = vec![false; n];
    for &b in branch {
        used[b] = true;
    }
    let mut used_edges = vec![vec![false; n]; n];
    route_from(g, pairs, 0, &mut used, &mut used_edges)
}

fn route_from(
    g: &Graph,
    pairs: &[(usize, usize)],
    idx: usize,
    used: &mut [bool],
    used_edges: &mut [Vec<bool>],
) -> bool {
    if idx == pairs.len() {
        return true;
    }
    let (s, t) = pairs[idx];
    let mut path = vec![s];
    walk(g, pairs, idx, t, &mut path, used, used_edges)
}

fn walk(
    g: &Graph,
    pairs: &[(usize, usize)],
    idx: usize,
    target: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    used_edges: &mut [Vec<bool>],
) -> bool {
    let last = *path.last().unwrap();
    for w in g.neighbors(last).collect::<Vec<_>>() {
        if w == target {
            // A direct edge between branch vertices may serve only one pair.
            if path.len() == 1 && used_edges[last][w] {
                continue;
            }
            let direct = path.len() == 1;
            if direct {
                used_edges[last][w] = true;
                used_edges[w][last] = true;
            }
            if route_from(g, pairs, idx + 1, used, used_edges) {
                return true;
            }
            if direct {
                used_edges[last][w] = false;
                used_edges[w][last] = false;
            }
            continue;
        }
        if used[w] {
            continue;
        }
        used[w] = true;
        path.push(w);
        if walk(g, pairs, idx, target, path, used, used_edges) {
            return true;
        }
        path.pop();
        used[w] = false;
    }
    false
}

// ---------------------------------------------------------------------------
// Path embedding

/// Vertex sets of the biconnected blocks that contain a cycle-capable edge set
/// (bridges and isolated vertices are dropped, they never affect planarity).
fn biconnected_blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // Iterative DFS: (vertex, parent, neighbour list, next index).
        let mut stack: Vec<(usize, usize, Vec<usize>, usize)> =
            vec![(root, usize::MAX, g.neighbors(root).collect(), 0)];
        while let Some(frame) = stack.last_mut() {
            let (u, parent) = (frame.0, frame.1);
            if frame.3 < frame.2.len() {
                let w = frame.2[frame.3];
                frame.3 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, g.neighbors(w).collect(), 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(top) = stack.last() {
                    let p = top.0;
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut verts = Vec::new();
                        let mut edges = 0;
                        while let Some((a, b)) = edge_stack.pop() {
                            verts.push(a);
                            verts.push(b);
                            edges += 1;
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        verts.sort_unstable();
                        verts.dedup();
                        if edges > 1 {
                            blocks.push(verts);
                        }
                    }
                }
            }
        }
    }
    blocks
}

fn block_is_planar(g: &Graph, block: &[usize]) -> bool {
    let h = g.induced_sorted(block);
    let n = h.vertex_count();
    let m = h.edge_count();
    if n < 5 || m < 9 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let cycle = find_cycle(&h);
    let mut in_h = vec![false; n];
    let mut embedded = vec![vec![false; n]; n];
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        embedded[v][w] = true;
        embedded[w][v] = true;
    }
    let mut embedded_edges = cycle.len();
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    while embedded_edges < m {
        let fragments = fragments(&h, &in_h, &embedded);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| frag.attachments.iter().all(|a| face.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("some fragment remains while edges are missing");
        let path = fragment_path(&h, &fragments[fi], &in_h);
        for w in path.windows(2) {
            embedded[w[0]][w[1]] = true;
            embedded[w[1]][w[0]] = true;
            embedded_edges += 1;
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (a, b) = split_face(&face, &path);
        faces.push(a);
        faces.push(b);
    }
    true
}

fn find_cycle(h: &Graph) -> Vec<usize> {
    let n = h.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, usize::MAX)];
    while let Some((u, p)) = stack.pop() {
        if depth[u] != usize::MAX {
            continue;
        }
        parent[u] = p;
        depth[u] = if p == usize::MAX { 0 } else { depth[p] + 1 };
        for w in h.neighbors(u) {
            if w == p {
                continue;
            }
            if depth[w] != usize::MAX && depth[w] < depth[u] {
                // Back edge u -> w closes a cycle along the tree path.
                let mut cycle = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
            if depth[w] == usize::MAX {
                stack.push((w, u));
            }
        }
    }
    unreachable!("a biconnected block with at least three vertices has a cycle")
}

struct Fragment {
    /// Non-embedded vertices of the fragment (empty for a single chord edge).
    inner: Vec<usize>,
    attachments: Vec<usize>,
    /// For a chord fragment, its two ends.
    chord: Option<(usize, usize)>,
}

fn fragments(h: &Graph, in_h: &[bool], embedded: &[Vec<bool>]) -> Vec<Fragment> {
    let n = h.vertex_count();
    let mut out = Vec::new();
    for (u, v) in h.edges() {
        if in_h[u] && in_h[v] && !embedded[u][v] {
            out.push(Fragment {
                inner: Vec::new(),
                attachments: vec![u, v],
                chord: Some((u, v)),
            });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut inner = vec![s];
        let mut attachments = Vec::new();
        let mut i = 0;
        while i < inner.len() {
            let u = inner[i];
            i += 1;
            for w in h.neighbors(u) {
                if in_h[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    inner.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            inner,
            attachments,
            chord: None,
        });
    }
    out
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(h: &Graph, frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let n = h.vertex_count();
    let start = frag.attachments[0];
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for w in h.neighbors(start) {
        if !in_h[w] && frag.inner.contains(&w) && prev[w] == usize::MAX {
            prev[w] = start;
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        for w in h.neighbors(u) {
            if in_h[w] {
                if w != start {
                    let mut path = vec![w, u];
                    let mut x = u;
                    while prev[x] != start {
                        x = prev[x];
                        path.push(x);
                    }
                    path.push(start);
                    path.reverse();
                    return path;
                }
            } else if prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a biconnected block have two attachments")
}

/// Splits a face (cyclic vertex list) along a path whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let ia = face.iter().position(|&v| v == a).unwrap();
    let ib = face.iter().position(|&v| v == b).unwrap();
    let inner = &path[1..path.len() - 1];

    let mut first = Vec::new();
    let mut i = ia;
    loop {
        first.push(face[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % len;
    }
    first.extend(inner.iter().rev());

    let mut second = Vec::new();
    let mut i = ib;
    loop {
        second.push(face[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % len;
    }
    second.extend(inner.iter());
    (first, second)
}
