//! Isomorphism testing and canonical forms for small graphs.
//!
//! Both rest on colour refinement: vertices are repeatedly split by how many
//! neighbours they have in each colour class until the partition is stable.
//! The canonical form individualizes vertices of the first smallest
//! non-trivial cell and keeps the lexicographically least adjacency string
//! over all leaves of the search tree. Twin vertices (same neighbourhood up to
//! each other) are interchangeable by an automorphism, so only one of each
//! twin class is branched on.

use crate::graph::Graph;

/// An isomorphism-invariant key: two graphs share a key iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    n: usize,
    bits: Vec<u64>,
}

impl CanonKey {
    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

/// Ordered partition of the vertices; cells are listed in canonical order.
type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let n = g.vertex_count();
    let mut colour = vec![0usize; n];
    loop {
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                colour[v] = c;
            }
        }
        let k = cells.len();
        let mut next: Partition = Vec::with_capacity(k);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0u32; k];
                    for w in g.neighbors(v) {
                        counts[colour[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn initial_partition(g: &Graph) -> Partition {
    if g.vertex_count() == 0 {
        return Vec::new();
    }
    refine(g, vec![(0..g.vertex_count()).collect()])
}

fn individualize(cells: &Partition, target: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, cell) in cells.iter().enumerate() {
        if i == target {
            out.push(vec![v]);
            out.push(cell.iter().copied().filter(|&w| w != v).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu = g.neighbor_set(u).clone();
    let mut nv = g.neighbor_set(v).clone();
    nu.set(v, false);
    nv.set(u, false);
    nu == nv
}

fn leaf_bits(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                bits[idx / 64] |= 1u64 << (63 - idx % 64);
            }
            idx += 1;
        }
    }
    bits
}

fn search(g: &Graph, cells: Partition, best: &mut Option<Vec<u64>>) {
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(target) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let bits = leaf_bits(g, &order);
        if best.as_ref().is_none_or(|b| bits < *b) {
            *best = Some(bits);
        }
        return;
    };
    let cell = cells[target].clone();
    let mut reps: Vec<usize> = Vec::new();
    for &v in &cell {
        if reps.iter().any(|&r| are_twins(g, r, v)) {
            continue;
        }
        reps.push(v);
    }
    for v in reps {
        search(g, refine(g, individualize(&cells, target, v)), best);
    }
}

/// Canonical key of `g`. Intended for graphs of a few dozen vertices at most.
pub fn canonical_key(g: &Graph) -> CanonKey {
    let mut best = None;
    search(g, initial_partition(g), &mut best);
    CanonKey {
        n: g.vertex_count(),
        bits: best.unwrap_or_default(),
    }
}

/// A relabelled copy of `g` in canonical vertex order.
pub fn canonical_form(g: &Graph) -> Graph {
    let key = canonical_key(g);
    let n = key.n;
    let mut out = Graph::new(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if key.bits[idx / 64] >> (63 - idx % 64) & 1 == 1 {
                out.insert_edge(i, j);
            }
            idx += 1;
        }
    }
    out
}

/// Exact isomorphism test by refinement-pruned backtracking.
///
/// Both graphs are refined jointly (as one disjoint union) so that colours
/// are comparable; a vertex may only be mapped to a vertex of its own colour.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let joint = g.disjoint_union(h);
    let cells = refine(&joint, vec![(0..2 * n).collect()]);
    let mut colour = vec![0usize; 2 * n];
    for (c, cell) in cells.iter().enumerate() {
        let left = cell.iter().filter(|&&v| v < n).count();
        if 2 * left != cell.len() {
            return false;
        }
        for &v in cell {
            colour[v] = c;
        }
    }
    // Map g's vertices in BFS order so each new vertex is constrained by earlier ones.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for comp in g.components() {
        let start = *comp
            .iter()
            .min_by_key(|&&v| (cells[colour[v]].len(), v))
            .unwrap();
        let mut queue = std::collections::VecDeque::from([start]);
        placed[start] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in g.neighbors(u) {
                if !placed[w] {
                    placed[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &order, &colour, 0, &mut image, &mut used)
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    colour: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let n = g.vertex_count();
    let u = order[depth];
    for x in 0..n {
        if used[x] || colour[x + n] != colour[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g.has_edge(u, w) == h.has_edge(x, image[w]));
        if !consistent {
            continue;
        }
        image[u] = x;
        used[x] = true;
        if extend(g, h, order, colour, depth + 1, image, used) {
            return true;
        }
        used[x] = false;
    }
    image[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let mut out = Graph::new(g.vertex_count());
        for (u, v) in g.edges() {
            out.insert_edge(perm[u], perm[v]);
        }
        out
    }

    #[test]
    fn isomorphism_examples() {
        let p4 = Graph::path(4);
        assert!(is_isomorphic(&p4, &p4.complement()));
        assert!(!is_isomorphic(&Graph::complete(3), &Graph::path(3)));
        let c6 = Graph::cycle(6);
        let two_k3 = Graph::complete(3).repeat(2);
        assert!(!is_isomorphic(&c6, &two_k3));
        assert_ne!(canonical_key(&c6), canonical_key(&two_k3));
    }

    #[test]
    fn canonical_key_is_label_invariant() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let perm = [4, 2, 5, 0, 1, 3];
        let h = relabel(&g, &perm);
        assert_eq!(canonical_key(&g), canonical_key(&h));
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert!(is_isomorphic(&canonical_form(&g), &g));
    }

    #[test]
    fn symmetric_graphs_are_fast_and_distinct() {
        let empty = Graph::new(10);
        let complete = Graph::complete(10);
        assert_ne!(canonical_key(&empty), canonical_key(&complete));
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        let shuffled = relabel(&petersen, &[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]);
        assert_eq!(canonical_key(&petersen), canonical_key(&shuffled));
        assert!(is_isomorphic(&petersen, &shuffled));
    }
}
