//! Finite simple undirected graphs and the elementary operations on them.

use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A finite simple undirected graph on the vertices `0..vertex_count()`.
///
/// Vertices are dense indices. An optional name per vertex records where a
/// vertex came from (for example `b_{2,3}` in a witness construction); names
/// never take part in equality or hashing.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    edge_count: usize,
    names: Option<Vec<String>>,
}

/// A structural edit. Each variant checks its own preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Edit {
    DeleteVertex(usize),
    /// Replace the edge `uv` by a path `u w v` through a new vertex `w`,
    /// which is appended as the last vertex.
    SubdivideEdge(usize, usize),
    /// Merge the ends of an edge. The merged vertex takes the smaller index.
    ContractEdge(usize, usize),
    /// Remove a vertex with exactly two non-adjacent neighbours and join them.
    DissolveVertex(usize),
    /// Flip every adjacency inside the given vertex set.
    ComplementSubgraph(Vec<usize>),
    /// Flip every adjacency between the two given disjoint vertex sets.
    ComplementBipartite(Vec<usize>, Vec<usize>),
}

/// The answers of [`Graph::basic_queries`] gathered in one place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicQueries {
    pub max_degree: usize,
    pub degrees: Vec<usize>,
    pub is_connected: bool,
    pub components: Vec<Vec<usize>>,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
            edge_count: 0,
            names: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n).complement()
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.insert_edge(n - 1, 0);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::input(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.vertex_count()
            )));
        }
        Ok(())
    }

    /// Adds the edge `uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        self.insert_edge(u, v);
        Ok(())
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.edge_count += 1;
        }
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        if self.adj[u].contains(v) {
            self.adj[u].set(v, false);
            self.adj[v].set(u, false);
            self.edge_count -= 1;
        }
    }

    fn toggle_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove_edge(u, v);
        } else {
            self.insert_edge(u, v);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.vertex_count() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertex_name(&self, v: usize) -> Option<&str> {
        self.names.as_ref().map(|n| n[v].as_str())
    }

    pub fn vertex_names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Attaches provenance names; `names` must have one entry per vertex.
    pub fn set_vertex_names(&mut self, names: Vec<String>) -> Result<()> {
        if names.len() != self.vertex_count() {
            return Err(Error::input(format!(
                "{} names given for {} vertices",
                names.len(),
                self.vertex_count()
            )));
        }
        self.names = Some(names);
        Ok(())
    }

    pub fn clear_vertex_names(&mut self) {
        self.names = None;
    }

    /// Name of `v` for messages: the provenance name if present, else the index.
    pub fn display_vertex(&self, v: usize) -> String {
        match self.vertex_name(v) {
            Some(name) => name.to_string(),
            None => v.to_string(),
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g.names = self.names.clone();
        g
    }

    /// `self + other`; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.vertex_count();
        let mut g = Graph::new(offset + other.vertex_count());
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + offset, v + offset);
        }
        if self.names.is_some() || other.names.is_some() {
            let mut names: Vec<String> = (0..offset).map(|v| self.display_vertex(v)).collect();
            names.extend((0..other.vertex_count()).map(|v| match other.vertex_name(v) {
                Some(name) => name.to_string(),
                None => (v + offset).to_string(),
            }));
            g.names = Some(names);
        }
        g
    }

    /// `r` disjoint copies of `self`.
    pub fn repeat(&self, r: usize) -> Graph {
        (0..r).fold(Graph::new(0), |acc, _| acc.disjoint_union(self))
    }

    /// The subgraph induced by `vertices`, renumbered in increasing vertex order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        Ok(self.induced_sorted(&keep))
    }

    pub(crate) fn induced_sorted(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::new(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(a, b);
                }
            }
        }
        if let Some(names) = &self.names {
            g.names = Some(keep.iter().map(|&v| names[v].clone()).collect());
        }
        g
    }

    fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&u| u != v).collect();
        self.induced_sorted(&keep)
    }

    pub fn transform(&self, edit: &Edit) -> Result<Graph> {
        match edit {
            Edit::DeleteVertex(v) => {
                self.check_vertex(*v)?;
                Ok(self.without_vertex(*v))
            }
            Edit::SubdivideEdge(u, v) => {
                self.require_edge(*u, *v, "subdivision")?;
                let n = self.vertex_count();
                let mut g = self.disjoint_union(&Graph::new(1));
                g.remove_edge(*u, *v);
                g.insert_edge(*u, n);
                g.insert_edge(n, *v);
                if let Some(names) = &mut g.names {
                    names[n] = format!("s({},{})", self.display_vertex(*u), self.display_vertex(*v));
                }
                Ok(g)
            }
            Edit::ContractEdge(u, v) => {
                self.require_edge(*u, *v, "contraction")?;
                let (keep, gone) = if u < v { (*u, *v) } else { (*v, *u) };
                let mut merged = self.clone();
                let others: Vec<usize> = self.neighbors(gone).filter(|&w| w != keep).collect();
                for w in others {
                    merged.insert_edge(keep, w);
                }
                Ok(merged.without_vertex(gone))
            }
            Edit::DissolveVertex(v) => {
                self.check_vertex(*v)?;
                let nbrs: Vec<usize> = self.neighbors(*v).collect();
                if nbrs.len() != 2 {
                    return Err(Error::input(format!(
                        "dissolution needs a vertex with exactly two neighbours; vertex {v} has {}",
                        nbrs.len()
                    )));
                }
                if self.has_edge(nbrs[0], nbrs[1]) {
                    return Err(Error::input(format!(
                        "dissolution needs non-adjacent neighbours; {} and {} are adjacent",
                        nbrs[0], nbrs[1]
                    )));
                }
                let mut g = self.clone();
                g.insert_edge(nbrs[0], nbrs[1]);
                Ok(g.without_vertex(*v))
            }
            Edit::ComplementSubgraph(set) => {
                let set = self.vertex_set(set)?;
                let mut g = self.clone();
                for (a, &u) in set.iter().enumerate() {
                    for &w in &set[a + 1..] {
                        g.toggle_edge(u, w);
                    }
                }
                Ok(g)
            }
            Edit::ComplementBipartite(xs, ys) => {
                let xs = self.vertex_set(xs)?;
                let ys = self.vertex_set(ys)?;
                if let Some(v) = xs.iter().find(|v| ys.contains(v)) {
                    return Err(Error::input(format!(
                        "bipartite complementation needs disjoint sets; vertex {v} is in both"
                    )));
                }
                let mut g = self.clone();
                for &x in &xs {
                    for &y in &ys {
                        g.toggle_edge(x, y);
                    }
                }
                Ok(g)
            }
        }
    }

    fn require_edge(&self, u: usize, v: usize, what: &str) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::input(format!("{what} needs an edge, but {u}{v} is not one")));
        }
        Ok(())
    }

    fn vertex_set(&self, vs: &[usize]) -> Result<Vec<usize>> {
        for &v in vs {
            self.check_vertex(v)?;
        }
        let mut out = vs.to_vec();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A 2-colouring `(B, W)` if one exists; each component's smallest vertex goes to `B`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let black = (0..n).filter(|&v| side[v] == Some(false)).collect();
        let white = (0..n).filter(|&v| side[v] == Some(true)).collect();
        Some((black, white))
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count + self.components().len() == self.vertex_count()
    }

    pub fn basic_queries(&self) -> BasicQueries {
        let components = self.components();
        BasicQueries {
            max_degree: self.max_degree(),
            degrees: (0..self.vertex_count()).map(|v| self.degree(v)).collect(),
            is_connected: components.len() <= 1,
            components,
            bipartition: self.bipartition(),
        }
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        crate::canon::is_isomorphic(self, other)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.edge_count == other.edge_count && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vertex_count().hash(state);
        self.edges().hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges())
    }
}
