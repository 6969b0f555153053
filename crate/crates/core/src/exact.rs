//! Exact clique-width for small graphs.
//!
//! The search works on vertex subsets `S` and partitions of `S` into label
//! classes. Every k-expression can be rearranged so that each subterm builds
//! exactly the induced subgraph on its vertices: a join applied above a
//! union distributes into both sides, and edges between the two sides can be
//! added right after the union while the label classes are as fine as they
//! will ever be. A partition of `S` is only useful when vertices sharing a
//! class have the same neighbours outside `S`, since no later operation can
//! tell them apart.
//!
//! Reachable partitions are computed bottom-up: singletons for one-vertex
//! sets; for larger `S`, every split into `S1` (holding the lowest vertex)
//! and `S2`, every pair of reachable partitions, and every way of letting
//! classes of the two sides share labels. The cross edges must then be
//! coverable by joins between whole classes, and the result may be coarsened
//! by renames. The graph has clique-width at most `k` iff some partition of
//! all vertices is reachable with at most `k` classes.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::expr::{CwExpr, Label};
use crate::graph::Graph;

/// Default vertex limit for the exact search.
pub const DEFAULT_VERTEX_CAP: usize = 8;
/// Absolute limit; subsets are stored as 32-bit masks.
pub const HARD_VERTEX_LIMIT: usize = 16;

type Mask = u32;
/// Sorted class masks.
type Partition = Vec<Mask>;

#[derive(Debug, Clone)]
enum Origin {
    Single(usize),
    /// Built from partitions of the two halves; the resulting partition
    /// records which classes ended up sharing a label.
    Union {
        left: (Mask, usize),
        right: (Mask, usize),
    },
    /// Obtained from another partition of the same set by merging two classes.
    Merge { from: usize, a: usize, b: usize },
}

#[derive(Default)]
struct Reachable {
    partitions: Vec<Partition>,
    origins: Vec<Origin>,
    index: HashMap<Partition, usize>,
}

impl Reachable {
    fn insert(&mut self, p: Partition, origin: Origin) -> bool {
        if self.index.contains_key(&p) {
            return false;
        }
        self.index.insert(p.clone(), self.partitions.len());
        self.partitions.push(p);
        self.origins.push(origin);
        true
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    k: usize,
    nbr: Vec<Mask>,
    full: Mask,
    table: HashMap<Mask, Reachable>,
}

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.vertex_count();
        let nbr = (0..n)
            .map(|v| g.neighbors(v).fold(0, |acc, w| acc | 1 << w))
            .collect();
        Search {
            g,
            n,
            k,
            nbr,
            full: if n == 32 { Mask::MAX } else { (1 << n) - 1 },
            table: HashMap::new(),
        }
    }

    /// All members of `class` see the same vertices outside `set`.
    fn class_valid(&self, set: Mask, class: Mask) -> bool {
        let outside = self.full & !set;
        let mut it = bits(class);
        let Some(first) = it.next() else { return true };
        let reference = self.nbr[first] & outside;
        it.all(|v| self.nbr[v] & outside == reference)
    }

    /// Every pair between the two classes is an edge.
    fn fully_joined(&self, a: Mask, b: Mask) -> bool {
        bits(a).all(|v| self.nbr[v] & b == b)
    }

    fn run(&mut self) -> bool {
        let mut subsets: Vec<Mask> = (1..=self.full).collect();
        subsets.sort_by_key(|s| (s.count_ones(), *s));
        for s in subsets {
            let mut reach = Reachable::default();
            if s.count_ones() == 1 {
                let v = s.trailing_zeros() as usize;
                reach.insert(vec![s], Origin::Single(v));
            } else {
                self.unions(s, &mut reach);
                self.close_under_merges(s, &mut reach);
            }
            self.table.insert(s, reach);
        }
        !self.table[&self.full].partitions.is_empty()
    }

    fn unions(&self, s: Mask, reach: &mut Reachable) {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        // Enumerate S1 = low | sub for proper subsets `sub` of `rest`.
        let mut sub: Mask = 0;
        loop {
            let s1 = low | sub;
            let s2 = s & !s1;
            if s2 != 0 {
                self.combine(s, s1, s2, reach);
            }
            if sub == rest {
                break;
            }
            sub = (sub.wrapping_sub(rest)) & rest;
        }
    }

    fn combine(&self, s: Mask, s1: Mask, s2: Mask, reach: &mut Reachable) {
        let (r1, r2) = (&self.table[&s1], &self.table[&s2]);
        if r1.partitions.is_empty() || r2.partitions.is_empty() {
            return;
        }
        let cross: Vec<(usize, usize)> = bits(s1)
            .flat_map(|u| bits(self.nbr[u] & s2).map(move |v| (u, v)))
            .collect();
        for (i1, p1) in r1.partitions.iter().enumerate() {
            for (i2, p2) in r2.partitions.iter().enumerate() {
                let min_shared = (p1.len() + p2.len()).saturating_sub(self.k);
                let mut pairs = Vec::new();
                let mut used = vec![false; p2.len()];
                self.matchings(s, p1, p2, 0, min_shared, &mut pairs, &mut used, &cross, &mut |q| {
                    reach.insert(
                        q,
                        Origin::Union {
                            left: (s1, i1),
                            right: (s2, i2),
                        },
                    );
                });
            }
        }
    }

    /// Enumerates partial matchings between the classes of `p1` and `p2`
    /// with at least `min_shared` pairs and reports each resulting partition
    /// that passes the cross-edge and validity checks.
    #[allow(clippy::too_many_arguments)]
    fn matchings(
        &self,
        s: Mask,
        p1: &Partition,
        p2: &Partition,
        idx: usize,
        min_shared: usize,
        pairs: &mut Vec<(usize, usize)>,
        used: &mut Vec<bool>,
        cross: &[(usize, usize)],
        emit: &mut dyn FnMut(Partition),
    ) {
        if pairs.len() + (p1.len() - idx) < min_shared {
            return;
        }
        if idx == p1.len() {
            if let Some(q) = self.merged_partition(s, p1, p2, pairs, cross) {
                emit(q);
            }
            return;
        }
        self.matchings(s, p1, p2, idx + 1, min_shared, pairs, used, cross, emit);
        for j in 0..p2.len() {
            if used[j] {
                continue;
            }
            let merged = p1[idx] | p2[j];
            if !self.class_valid(s, merged) {
                continue;
            }
            used[j] = true;
            pairs.push((idx, j));
            self.matchings(s, p1, p2, idx + 1, min_shared, pairs, used, cross, emit);
            pairs.pop();
            used[j] = false;
        }
    }

    fn merged_partition(
        &self,
        s: Mask,
        p1: &Partition,
        p2: &Partition,
        pairs: &[(usize, usize)],
        cross: &[(usize, usize)],
    ) -> Option<Partition> {
        let mut q: Partition = Vec::with_capacity(p1.len() + p2.len());
        let mut taken = vec![false; p2.len()];
        for (i, &c) in p1.iter().enumerate() {
            match pairs.iter().find(|&&(a, _)| a == i) {
                Some(&(_, j)) => {
                    taken[j] = true;
                    q.push(c | p2[j]);
                }
                None => q.push(c),
            }
        }
        q.extend(p2.iter().zip(&taken).filter(|(_, &t)| !t).map(|(&c, _)| c));
        if q.len() > self.k || !q.iter().all(|&c| self.class_valid(s, c)) {
            return None;
        }
        let class_of = |v: usize| q.iter().position(|&c| c >> v & 1 == 1).unwrap();
        for &(u, v) in cross {
            let (a, b) = (class_of(u), class_of(v));
            if a == b || !self.fully_joined(q[a], q[b]) {
                return None;
            }
        }
        q.sort_unstable();
        Some(q)
    }

    fn close_under_merges(&self, s: Mask, reach: &mut Reachable) {
        let mut next = 0;
        while next < reach.partitions.len() {
            let p = reach.partitions[next].clone();
            for a in 0..p.len() {
                for b in (a + 1)..p.len() {
                    let merged = p[a] | p[b];
                    if !self.class_valid(s, merged) {
                        continue;
                    }
                    let mut q: Partition = p
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != a && i != b)
                        .map(|(_, &c)| c)
                        .collect();
                    q.push(merged);
                    q.sort_unstable();
                    reach.insert(q, Origin::Merge { from: next, a, b });
                }
            }
            next += 1;
        }
    }

    fn vertex_names(&self) -> Vec<String> {
        let names: Vec<String> = (0..self.n).map(|v| self.g.display_vertex(v)).collect();
        let usable = names
            .iter()
            .all(|s| !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || "()+;".contains(c)));
        let distinct = names.iter().collect::<std::collections::HashSet<_>>().len() == names.len();
        if usable && distinct {
            names
        } else {
            (0..self.n).map(|v| format!("v{v}")).collect()
        }
    }

    fn witness(&self) -> CwExpr {
        let names = self.vertex_names();
        let top = &self.table[&self.full];
        let labels: Vec<Label> = (1..=top.partitions[0].len() as Label).collect();
        self.build(self.full, 0, &labels, &names)
    }

    /// Expression for partition `idx` of `set` whose class `c` ends with label `labels[c]`.
    fn build(&self, set: Mask, idx: usize, labels: &[Label], names: &[String]) -> CwExpr {
        let reach = &self.table[&set];
        let part = &reach.partitions[idx];
        match &reach.origins[idx] {
            Origin::Single(v) => CwExpr::create(labels[0], names[*v].clone()),
            Origin::Merge { from, a, b } => {
                let src = &reach.partitions[*from];
                let merged = src[*a] | src[*b];
                let target = labels[part.iter().position(|&c| c == merged).unwrap()];
                let spare = (1..=self.k as Label).find(|l| !labels.contains(l)).unwrap();
                let src_labels: Vec<Label> = src
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| {
                        if i == *a {
                            target
                        } else if i == *b {
                            spare
                        } else {
                            labels[part.iter().position(|&d| d == c).unwrap()]
                        }
                    })
                    .collect();
                CwExpr::rename(spare, target, self.build(set, *from, &src_labels, names))
            }
            Origin::Union { left, right } => {
                let label_of = |class: Mask| labels[part.iter().position(|&c| c & class == class).unwrap()];
                let side = |(mask, i): (Mask, usize)| {
                    let p = &self.table[&mask].partitions[i];
                    let side_labels: Vec<Label> = p.iter().map(|&c| label_of(c)).collect();
                    self.build(mask, i, &side_labels, names)
                };
                let mut e = CwExpr::union(side(*left), side(*right));
                let mut joins: Vec<(usize, usize)> = Vec::new();
                for u in bits(left.0) {
                    for v in bits(self.nbr[u] & right.0) {
                        let a = part.iter().position(|&c| c >> u & 1 == 1).unwrap();
                        let b = part.iter().position(|&c| c >> v & 1 == 1).unwrap();
                        let pair = (a.min(b), a.max(b));
                        if !joins.contains(&pair) {
                            joins.push(pair);
                        }
                    }
                }
                joins.sort_unstable();
                for (a, b) in joins {
                    e = CwExpr::join(labels[a], labels[b], e);
                }
                e
            }
        }
    }
}

fn check_size(g: &Graph, cap: usize) -> Result<()> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::input("clique-width is not defined for the graph with no vertices"));
    }
    let limit = cap.min(HARD_VERTEX_LIMIT);
    if n > limit {
        return Err(Error::Capacity {
            what: "exact clique-width search",
            size: n,
            limit,
        });
    }
    Ok(())
}

/// Decides whether `g` has clique-width at most `k`, returning a witness
/// expression when it does.
pub fn cliquewidth_at_most(g: &Graph, k: usize) -> Result<Option<CwExpr>> {
    cliquewidth_at_most_with_cap(g, k, DEFAULT_VERTEX_CAP)
}

pub fn cliquewidth_at_most_with_cap(g: &Graph, k: usize, cap: usize) -> Result<Option<CwExpr>> {
    check_size(g, cap)?;
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let mut search = Search::new(g, k.min(g.vertex_count()));
    Ok(search.run().then(|| search.witness()))
}

/// The clique-width of `g` with a witness expression of exactly that width.
pub fn cliquewidth(g: &Graph) -> Result<(usize, CwExpr)> {
    cliquewidth_with_cap(g, DEFAULT_VERTEX_CAP)
}

pub fn cliquewidth_with_cap(g: &Graph, cap: usize) -> Result<(usize, CwExpr)> {
    check_size(g, cap)?;
    for k in 1..=g.vertex_count() {
        let mut search = Search::new(g, k);
        if search.run() {
            return Ok((k, search.witness()));
        }
    }
    Err(Error::Invariant(
        "no expression found with one label per vertex".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::graph;

    fn check(g: &Graph, expected: usize) {
        let (k, w) = cliquewidth(g).unwrap();
        assert_eq!(k, expected, "clique-width of {:?}", g);
        assert_eq!(w.width(), k, "witness {w}");
        assert!(w.eval().graph.is_isomorphic(g), "witness {w}");
    }

    #[test]
    fn small_values() {
        check(&Graph::new(1), 1);
        check(&Graph::new(3), 1);
        check(&Graph::complete(2), 2);
        check(&Graph::complete(5), 2);
        check(&Graph::path(4), 3);
        check(&Graph::cycle(4), 2);
        check(&graph("2P2"), 2);
        check(&graph("co(P1+P3)"), 2);
    }

    #[test]
    fn p4_at_most() {
        let p4 = Graph::path(4);
        assert!(cliquewidth_at_most(&p4, 2).unwrap().is_none());
        let w = cliquewidth_at_most(&p4, 3).unwrap().unwrap();
        assert!(w.width() <= 3);
        assert!(w.eval().graph.is_isomorphic(&p4));
        assert!(cliquewidth_at_most(&Graph::new(1), 1).unwrap().is_some());
        assert!(cliquewidth_at_most(&Graph::complete(5), 2).unwrap().is_some());
    }

    #[test]
    fn c5_regression() {
        check(&Graph::cycle(5), 3);
    }

    #[test]
    fn limits() {
        assert!(matches!(cliquewidth(&Graph::path(9)), Err(Error::Capacity { .. })));
        assert!(cliquewidth_with_cap(&Graph::path(9), 9).is_ok());
        assert!(matches!(cliquewidth(&Graph::new(0)), Err(Error::Input(_))));
        assert!(matches!(cliquewidth_at_most(&Graph::path(3), 0), Err(Error::Input(_))));
    }
}
