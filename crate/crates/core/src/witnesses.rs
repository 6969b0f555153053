//! Graph families of unbounded clique-width, with their layered partitions
//! where one is known.
//!
//! Wall of height `h`: rows `y = 0..=h` of `2h + 2` points `(y, x)`,
//! consecutive points of a row adjacent, and `(y, x)` adjacent to
//! `(y + 1, x)` whenever `x` and `y` have different parity. The two corner
//! points left with degree one, `(0, 0)` and `(h, 0)` or `(h, 2h + 1)`
//! depending on the parity of `h`, are removed. This gives rows of
//! `2h + 1, 2h + 2, ..., 2h + 2, 2h + 1` vertices.

use serde::Serialize;

use crate::certificate::LayeredPartition;
use crate::error::{Error, Result};
use crate::graph::{Edit, Graph};
use crate::names::graph;

/// The witness families, for reporting and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyId {
    Wall,
    SubdividedWall,
    Grid,
    /// Layered graph whose classes avoid `P6` and the diamond after a bipartite complementation.
    LayeredBipartite,
    /// `LayeredBipartite` with the edges between its inner black and white vertices complemented.
    LayeredBipartiteComplemented,
    /// Layered graph with two cliques, avoiding `3P2`, `P2+P4`, `P6` and the gem.
    LayeredCliques,
}

/// A generated instance with everything known about it.
#[derive(Debug, Clone)]
pub struct WitnessFamily {
    pub family: FamilyId,
    pub params: Vec<usize>,
    pub graph: Graph,
    pub partition: Option<LayeredPartition>,
    /// Name literals of the induced subgraphs the family avoids.
    pub free_of: &'static [&'static str],
}

impl WitnessFamily {
    pub fn forbidden_patterns(&self) -> Vec<Graph> {
        self.free_of.iter().map(|s| graph(s)).collect()
    }
}

pub const WALL_FREE_OF: &[&str] = &["K3", "K1_4"];
pub const GRID_FREE_OF: &[&str] = &["K3", "K1_5"];
pub const THM4_H_FREE_OF: &[&str] = &["P6", "co(2P1+P2)"];
pub const THM5_G_FREE_OF: &[&str] = &["3P2", "P2+P4", "P6", "co(P1+P4)"];

fn wall_points(h: usize) -> Vec<(usize, usize)> {
    let width = 2 * h + 2;
    let mut points = Vec::new();
    for y in 0..=h {
        for x in 0..width {
            let top_corner = y == 0 && x == 0;
            // The bottom corner without a vertical edge.
            let bottom_corner = y == h && ((h.is_multiple_of(2) && x == width - 1) || (!h.is_multiple_of(2) && x == 0));
            if !(top_corner || bottom_corner) {
                points.push((y, x));
            }
        }
    }
    points
}

pub fn wall(h: usize) -> Result<Graph> {
    if h < 2 {
        return Err(Error::input(format!("wall height must be at least 2, got {h}")));
    }
    let points = wall_points(h);
    let index = |p: (usize, usize)| points.binary_search(&p).ok();
    let mut g = Graph::new(points.len());
    for (a, &(y, x)) in points.iter().enumerate() {
        if let Some(b) = index((y, x + 1)) {
            g.insert_edge(a, b);
        }
        if (x + y) % 2 == 1 {
            if let Some(b) = index((y + 1, x)) {
                g.insert_edge(a, b);
            }
        }
    }
    debug_assert!((0..g.vertex_count()).all(|v| g.degree(v) >= 2));
    g.set_vertex_names(points.iter().map(|(y, x)| format!("r{y}c{x}")).collect())?;
    Ok(g)
}

pub fn subdivided_wall(h: usize, k: usize) -> Result<Graph> {
    let mut g = wall(h)?;
    for (u, v) in g.edges() {
        // Each subdivision appends a vertex; walk from u towards v.
        let mut last = u;
        for _ in 0..k {
            g = g.transform(&Edit::SubdivideEdge(last, v))?;
            last = g.vertex_count() - 1;
        }
    }
    Ok(g)
}

/// The `n x n` grid with its singleton-cell partition (`m = 1`).
pub fn grid(n: usize) -> Result<(Graph, LayeredPartition)> {
    if n < 3 {
        return Err(Error::input(format!("grid side must be at least 3, got {n}")));
    }
    let id = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let mut g = Graph::new(n * n);
    let mut p = LayeredPartition::new(n, 1);
    let mut names = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            if i < n {
                g.insert_edge(id(i, j), id(i + 1, j));
            }
            if j < n {
                g.insert_edge(id(i, j), id(i, j + 1));
            }
            p.add(i, j, id(i, j))?;
            names.push(format!("g_{{{i},{j}}}"));
        }
    }
    g.set_vertex_names(names)?;
    Ok((g, p))
}

struct Layout {
    names: Vec<String>,
}

impl Layout {
    fn add(&mut self, name: String) -> usize {
        self.names.push(name);
        self.names.len() - 1
    }
}

/// Indices of the vertex groups of the layered bipartite construction.
struct LayeredBipartite {
    graph: Graph,
    partition: LayeredPartition,
    inner_black: Vec<usize>,
    inner_white: Vec<usize>,
}

// Cells are indexed 1..=n as in the construction.
#[allow(clippy::needless_range_loop)]
fn layered_bipartite(n: usize) -> Result<LayeredBipartite> {
    if n < 2 {
        return Err(Error::input(format!("parameter must be at least 2, got {n}")));
    }
    let mut layout = Layout { names: Vec::new() };
    let mut partition = LayeredPartition::new(n, 0);
    let b: Vec<usize> = (1..=n).map(|i| layout.add(format!("b_{i}"))).collect();
    let w: Vec<usize> = (1..=n).map(|j| layout.add(format!("w_{j}"))).collect();
    for i in 1..=n {
        partition.add(i, 0, b[i - 1])?;
        partition.add(0, i, w[i - 1])?;
    }
    // cell[i][j] = (b_ij, r_ij, w_ij)
    let mut cell = vec![vec![(0, 0, 0); n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            let bij = layout.add(format!("b_{{{i},{j}}}"));
            let rij = layout.add(format!("r_{{{i},{j}}}"));
            let wij = layout.add(format!("w_{{{i},{j}}}"));
            for v in [bij, rij, wij] {
                partition.add(i, j, v)?;
            }
            cell[i][j] = (bij, rij, wij);
        }
    }
    let mut g = Graph::new(layout.names.len());
    for i in 1..=n {
        for j in 1..=n {
            let (bij, rij, wij) = cell[i][j];
            g.insert_edge(bij, rij);
            g.insert_edge(rij, wij);
            for k in 1..=n {
                if i <= k {
                    g.insert_edge(b[k - 1], wij);
                }
                if j <= k {
                    g.insert_edge(w[k - 1], bij);
                }
            }
        }
    }
    g.set_vertex_names(layout.names)?;
    let inner_black = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| cell[i][j].0).collect();
    let inner_white = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| cell[i][j].2).collect();
    Ok(LayeredBipartite {
        graph: g,
        partition,
        inner_black,
        inner_white,
    })
}

/// Bipartite layered graph on `2n + 3n^2` vertices: outer vertices `b_k`,
/// `w_k`, and per cell a path `b_{i,j} r_{i,j} w_{i,j}`; `b_k` sees
/// `w_{i,j}` for `i <= k` and `w_k` sees `b_{i,j}` for `j <= k`.
pub fn thm4_g(n: usize) -> Result<(Graph, LayeredPartition)> {
    let lb = layered_bipartite(n)?;
    Ok((lb.graph, lb.partition))
}

/// `thm4_g(n)` with adjacency flipped between every `b_{i,j}` and every `w_{k,l}`.
pub fn thm4_h(n: usize) -> Result<Graph> {
    let lb = layered_bipartite(n)?;
    lb.graph
        .transform(&Edit::ComplementBipartite(lb.inner_black, lb.inner_white))
}

/// Layered graph on `n^2 + 2n` vertices: cliques `b_1..b_n` and
/// `w_1..w_n`, independent `x_{i,j}`, with `b_k x_{i,j}` for `i <= k` and
/// `w_k x_{i,j}` for `j <= k`.
#[allow(clippy::needless_range_loop)]
pub fn thm5_g(n: usize) -> Result<(Graph, LayeredPartition)> {
    if n < 2 {
        return Err(Error::input(format!("parameter must be at least 2, got {n}")));
    }
    let mut layout = Layout { names: Vec::new() };
    let mut partition = LayeredPartition::new(n, 0);
    let b: Vec<usize> = (1..=n).map(|i| layout.add(format!("b_{i}"))).collect();
    let w: Vec<usize> = (1..=n).map(|j| layout.add(format!("w_{j}"))).collect();
    for i in 1..=n {
        partition.add(i, 0, b[i - 1])?;
        partition.add(0, i, w[i - 1])?;
    }
    let mut x = vec![vec![0; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            x[i][j] = layout.add(format!("x_{{{i},{j}}}"));
            partition.add(i, j, x[i][j])?;
        }
    }
    let mut g = Graph::new(layout.names.len());
    for a in 0..n {
        for c in (a + 1)..n {
            g.insert_edge(b[a], b[c]);
            g.insert_edge(w[a], w[c]);
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i <= k {
                    g.insert_edge(b[k - 1], x[i][j]);
                }
                if j <= k {
                    g.insert_edge(w[k - 1], x[i][j]);
                }
            }
        }
    }
    g.set_vertex_names(layout.names)?;
    Ok((g, partition))
}

/// Generates a family instance from its id and parameters.
pub fn generate(family: FamilyId, params: &[usize]) -> Result<WitnessFamily> {
    let arity = match family {
        FamilyId::SubdividedWall => 2,
        _ => 1,
    };
    if params.len() != arity {
        return Err(Error::input(format!(
            "{family:?} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    let p = params[0];
    let (graph, partition, free_of) = match family {
        FamilyId::Wall => (wall(p)?, None, WALL_FREE_OF),
        FamilyId::SubdividedWall => (subdivided_wall(p, params[1])?, None, WALL_FREE_OF),
        FamilyId::Grid => {
            let (g, part) = grid(p)?;
            (g, Some(part), GRID_FREE_OF)
        }
        FamilyId::LayeredBipartite => {
            let (g, part) = thm4_g(p)?;
            (g, Some(part), &[][..])
        }
        FamilyId::LayeredBipartiteComplemented => (thm4_h(p)?, None, THM4_H_FREE_OF),
        FamilyId::LayeredCliques => {
            let (g, part) = thm5_g(p)?;
            (g, Some(part), THM5_G_FREE_OF)
        }
    };
    Ok(WitnessFamily {
        family,
        params: params.to_vec(),
        graph,
        partition,
        free_of,
    })
}
