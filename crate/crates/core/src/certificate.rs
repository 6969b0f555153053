//! Lower-bound certificates for clique-width from layered partitions.
//!
//! A graph whose vertices split into cells `V[i][j]`, `0 <= i, j <= n`, with
//! the eight properties checked below has clique-width at least
//! `(n - 1) / (m + 1) + 1` (integer division), provided `n > m + 1`.
//!
//! Row `i` is the union of `V[i][0..=n]` and column `j` the union of
//! `V[0..=n][j]`. The properties are:
//!
//! 1. `|V[i][0]| <= 1` for `i >= 1`;
//! 2. `|V[0][j]| <= 1` for `j >= 1`;
//! 3. `|V[i][j]| >= 1` for `i, j >= 1`;
//! 4. every row `i >= 1` induces a connected subgraph;
//! 5. every column `j >= 1` induces a connected subgraph;
//! 6. a vertex of `V[k][0]` adjacent to a vertex of `V[i][j]` (`i, j, k >= 1`) forces `i <= k`;
//! 7. a vertex of `V[0][k]` adjacent to a vertex of `V[i][j]` (`i, j, k >= 1`) forces `j <= k`;
//! 8. adjacent vertices of `V[i][j]` and `V[k][l]` (`i, j, k, l >= 1`) satisfy
//!    `|k - i| <= m` and `|l - j| <= m`.
//!
//! The properties say nothing about `V[0][0]`. The checker requires it to be
//! empty unless explicitly allowed, in which case the report says the bound
//! has not been established for that situation.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredPartition {
    pub n: usize,
    pub m: usize,
    /// `cells[i][j]` holds the vertices of `V[i][j]`, sorted.
    cells: Vec<Vec<Vec<usize>>>,
}

impl LayeredPartition {
    /// An all-empty partition skeleton.
    pub fn new(n: usize, m: usize) -> Self {
        LayeredPartition {
            n,
            m,
            cells: vec![vec![Vec::new(); n + 1]; n + 1],
        }
    }

    pub fn cell(&self, i: usize, j: usize) -> &[usize] {
        &self.cells[i][j]
    }

    pub fn add(&mut self, i: usize, j: usize, v: usize) -> Result<()> {
        if i > self.n || j > self.n {
            return Err(Error::input(format!("cell ({i},{j}) is outside 0..={}", self.n)));
        }
        let cell = &mut self.cells[i][j];
        if let Err(pos) = cell.binary_search(&v) {
            cell.insert(pos, v);
        }
        Ok(())
    }

    /// Cell coordinates of every vertex; errors unless the cells partition `0..vertex_count`.
    pub fn locate(&self, vertex_count: usize) -> Result<Vec<(usize, usize)>> {
        let mut at: Vec<Option<(usize, usize)>> = vec![None; vertex_count];
        for i in 0..=self.n {
            for j in 0..=self.n {
                for &v in &self.cells[i][j] {
                    if v >= vertex_count {
                        return Err(Error::input(format!(
                            "vertex {v} in cell ({i},{j}) is outside the graph"
                        )));
                    }
                    if let Some((a, b)) = at[v] {
                        return Err(Error::input(format!(
                            "vertex {v} lies in both cell ({a},{b}) and cell ({i},{j})"
                        )));
                    }
                    at[v] = Some((i, j));
                }
            }
        }
        at.into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| Error::input(format!("vertex {v} is in no cell"))))
            .collect()
    }

    /// Text form: header `n m`, then `i j : v1 v2 ...` for every nonempty cell.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for i in 0..=self.n {
            for j in 0..=self.n {
                let cell = &self.cells[i][j];
                if cell.is_empty() {
                    continue;
                }
                let vs: Vec<String> = cell.iter().map(usize::to_string).collect();
                out.push_str(&format!("{i} {j} : {}\n", vs.join(" ")));
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "partition file is empty"))?;
        let nums = parse_numbers(header, line_no)?;
        let [n, m] = nums[..] else {
            return Err(Error::parse(line_no, "header must be \"n m\""));
        };
        let mut p = LayeredPartition::new(n, m);
        for (line_no, line) in lines {
            let (coords, vertices) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, "expected \"i j : vertices\""))?;
            let [i, j] = parse_numbers(coords, line_no)?[..] else {
                return Err(Error::parse(line_no, "expected two cell coordinates"));
            };
            for v in parse_numbers(vertices, line_no)? {
                p.add(i, j, v).map_err(|e| Error::parse(line_no, e.to_string()))?;
            }
        }
        Ok(p)
    }
}

fn parse_numbers(text: &str, line_no: usize) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::parse(line_no, format!("{t:?} is not a non-negative integer")))
        })
        .collect()
}

/// `(n - 1) / (m + 1) + 1`, defined for `n > m + 1`.
pub fn lower_bound(n: usize, m: usize) -> Result<usize> {
    if n <= m + 1 {
        return Err(Error::Hypothesis(format!("need n > m + 1, got n = {n}, m = {m}")));
    }
    Ok((n - 1) / (m + 1) + 1)
}

/// Evidence that a property fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Failure {
    /// A cell that is too large or empty.
    Cell { cell: (usize, usize), size: usize },
    /// A row or column whose subgraph is disconnected; `component` is one of its pieces.
    Disconnected { index: usize, component: Vec<usize> },
    /// An edge between two cells that the property forbids.
    Edge {
        u: usize,
        u_cell: (usize, usize),
        v: usize,
        v_cell: (usize, usize),
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyStatus {
    pub property: usize,
    pub holds: bool,
    pub witness: Option<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub n: usize,
    pub m: usize,
    pub properties: Vec<PropertyStatus>,
    pub bound: Option<usize>,
    /// Set when a nonempty `V[0][0]` was accepted by override.
    pub corner_override: bool,
    pub notes: Vec<String>,
}

impl CertificateReport {
    pub fn all_hold(&self) -> bool {
        self.properties.iter().all(|p| p.holds)
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            match &p.witness {
                None => writeln!(f, "property {}: holds", p.property)?,
                Some(w) => writeln!(f, "property {}: fails ({})", p.property, describe_failure(w))?,
            }
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        match self.bound {
            Some(b) => write!(f, "bound={b}"),
            None => write!(f, "bound=none"),
        }
    }
}

fn describe_failure(w: &Failure) -> String {
    match w {
        Failure::Cell { cell, size } => format!("cell {cell:?} has {size} vertices"),
        Failure::Disconnected { index, component } => {
            format!("index {index} splits off component {component:?}")
        }
        Failure::Edge { u, u_cell, v, v_cell } => {
            format!("edge {u}-{v} between cells {u_cell:?} and {v_cell:?}")
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    /// Accept a nonempty `V[0][0]`.
    pub allow_corner: bool,
}

pub fn check_certificate(g: &Graph, p: &LayeredPartition) -> Result<CertificateReport> {
    check_certificate_with(g, p, CheckOptions::default())
}

pub fn check_certificate_with(
    g: &Graph,
    p: &LayeredPartition,
    options: CheckOptions,
) -> Result<CertificateReport> {
    let at = p.locate(g.vertex_count())?;
    let bound = lower_bound(p.n, p.m)?;
    let corner = p.cell(0, 0);
    let mut notes = Vec::new();
    if !corner.is_empty() {
        if !options.allow_corner {
            return Err(Error::input(format!(
                "cell (0,0) must be empty, it holds {:?}",
                corner
            )));
        }
        notes.push("cell (0,0) is nonempty; the bound is not established for this case".to_string());
    }
    let n = p.n;
    let mut properties = Vec::with_capacity(8);

    let cell_check = |cells: Vec<(usize, usize)>, ok: fn(usize) -> bool| {
        cells.into_iter().find_map(|(i, j)| {
            let size = p.cell(i, j).len();
            (!ok(size)).then_some(Failure::Cell { cell: (i, j), size })
        })
    };
    properties.push(cell_check((1..=n).map(|i| (i, 0)).collect(), |s| s <= 1));
    properties.push(cell_check((1..=n).map(|j| (0, j)).collect(), |s| s <= 1));
    properties.push(cell_check(
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect(),
        |s| s >= 1,
    ));

    let line_check = |row: bool| {
        (1..=n).find_map(|idx| {
            let members: Vec<usize> = (0..g.vertex_count())
                .filter(|&v| if row { at[v].0 == idx } else { at[v].1 == idx })
                .collect();
            let sub = g.induced_sorted(&members);
            let comps = sub.components();
            (comps.len() > 1).then(|| Failure::Disconnected {
                index: idx,
                component: comps[comps.len() - 1].iter().map(|&x| members[x]).collect(),
            })
        })
    };
    properties.push(line_check(true));
    properties.push(line_check(false));

    let edge_check = |forbidden: &dyn Fn((usize, usize), (usize, usize)) -> bool| {
        g.edges().into_iter().find_map(|(a, b)| {
            [(a, b), (b, a)].into_iter().find_map(|(u, v)| {
                forbidden(at[u], at[v]).then_some(Failure::Edge {
                    u,
                    u_cell: at[u],
                    v,
                    v_cell: at[v],
                })
            })
        })
    };
    properties.push(edge_check(&|(k, z), (i, j)| z == 0 && k >= 1 && i >= 1 && j >= 1 && i > k));
    properties.push(edge_check(&|(z, k), (i, j)| z == 0 && k >= 1 && i >= 1 && j >= 1 && j > k));
    properties.push(edge_check(&|(i, j), (k, l)| {
        i >= 1 && j >= 1 && k >= 1 && l >= 1 && (i.abs_diff(k) > p.m || j.abs_diff(l) > p.m)
    }));

    let properties: Vec<PropertyStatus> = properties
        .into_iter()
        .enumerate()
        .map(|(idx, witness)| PropertyStatus {
            property: idx + 1,
            holds: witness.is_none(),
            witness,
        })
        .collect();
    let all = properties.iter().all(|s| s.holds);
    Ok(CertificateReport {
        n: p.n,
        m: p.m,
        properties,
        bound: all.then_some(bound),
        corner_override: !corner.is_empty(),
        notes,
    })
}
