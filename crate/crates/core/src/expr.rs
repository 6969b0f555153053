//! k-expressions: parsing, validation, evaluation and width.
//!
//! Concrete syntax: `i(v)` creates vertex `v` with label `i`, `e1 + e2` is
//! the disjoint union (left associative), `eta(i,j; e)` joins every
//! `i`-vertex to every `j`-vertex and `rho(i->j; e)` renames label `i` to `j`.
//! Parentheses group. Vertex names may use any characters except
//! whitespace, `(`, `)`, `+` and `;`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Label = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CwExpr {
    Create { label: Label, vertex: String },
    Union(Box<CwExpr>, Box<CwExpr>),
    Join { i: Label, j: Label, sub: Box<CwExpr> },
    Rename { from: Label, to: Label, sub: Box<CwExpr> },
}

/// A graph together with the label of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub labels: Vec<Label>,
}

impl CwExpr {
    pub fn create(label: Label, vertex: impl Into<String>) -> CwExpr {
        CwExpr::Create {
            label,
            vertex: vertex.into(),
        }
    }

    pub fn union(left: CwExpr, right: CwExpr) -> CwExpr {
        CwExpr::Union(Box::new(left), Box::new(right))
    }

    pub fn join(i: Label, j: Label, sub: CwExpr) -> CwExpr {
        CwExpr::Join {
            i,
            j,
            sub: Box::new(sub),
        }
    }

    pub fn rename(from: Label, to: Label, sub: CwExpr) -> CwExpr {
        CwExpr::Rename {
            from,
            to,
            sub: Box::new(sub),
        }
    }

    fn children(&self) -> Vec<&CwExpr> {
        match self {
            CwExpr::Create { .. } => Vec::new(),
            CwExpr::Union(l, r) => vec![l, r],
            CwExpr::Join { sub, .. } | CwExpr::Rename { sub, .. } => vec![sub],
        }
    }

    /// Checks that labels are positive, joins use two different labels and
    /// vertex names are unique.
    pub fn validate(&self) -> Result<()> {
        let mut names = HashSet::new();
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            match e {
                CwExpr::Create { label, vertex } => {
                    if *label == 0 {
                        return Err(Error::input(format!("label of vertex {vertex:?} must be positive")));
                    }
                    if vertex.is_empty() {
                        return Err(Error::input("empty vertex name"));
                    }
                    if !names.insert(vertex.as_str()) {
                        return Err(Error::input(format!("vertex name {vertex:?} is used twice")));
                    }
                }
                CwExpr::Join { i, j, .. } => {
                    if i == j {
                        return Err(Error::input(format!("eta({i},{j}) joins a label with itself")));
                    }
                    if *i == 0 || *j == 0 {
                        return Err(Error::input("labels must be positive"));
                    }
                }
                CwExpr::Rename { from, to, .. } => {
                    if *from == 0 || *to == 0 {
                        return Err(Error::input("labels must be positive"));
                    }
                }
                CwExpr::Union(..) => {}
            }
            stack.extend(e.children());
        }
        Ok(())
    }

    /// Number of distinct labels occurring anywhere in the expression.
    pub fn width(&self) -> usize {
        let mut labels = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            match e {
                CwExpr::Create { label, .. } => {
                    labels.insert(*label);
                }
                CwExpr::Join { i, j, .. } => {
                    labels.insert(*i);
                    labels.insert(*j);
                }
                CwExpr::Rename { from, to, .. } => {
                    labels.insert(*from);
                    labels.insert(*to);
                }
                CwExpr::Union(..) => {}
            }
            stack.extend(e.children());
        }
        labels.len()
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            CwExpr::Create { .. } => 1,
            CwExpr::Union(l, r) => l.vertex_count() + r.vertex_count(),
            CwExpr::Join { sub, .. } | CwExpr::Rename { sub, .. } => sub.vertex_count(),
        }
    }

    /// Evaluates the expression. Vertices are numbered in the order their
    /// `Create` nodes appear and carry their names.
    pub fn eval(&self) -> LabelledGraph {
        let n = self.vertex_count();
        let mut state = EvalState {
            graph: Graph::new(n),
            labels: Vec::with_capacity(n),
            names: Vec::with_capacity(n),
        };
        state.run(self);
        let EvalState {
            mut graph,
            labels,
            names,
        } = state;
        if graph.set_vertex_names(names).is_err() {
            graph.clear_vertex_names();
        }
        LabelledGraph { graph, labels }
    }
}

struct EvalState {
    graph: Graph,
    labels: Vec<Label>,
    names: Vec<String>,
}

impl EvalState {
    /// Evaluates `e` and returns the range of vertices it created.
    fn run(&mut self, e: &CwExpr) -> std::ops::Range<usize> {
        match e {
            CwExpr::Create { label, vertex } => {
                let v = self.labels.len();
                self.labels.push(*label);
                self.names.push(vertex.clone());
                v..v + 1
            }
            CwExpr::Union(l, r) => {
                let a = self.run(l);
                let b = self.run(r);
                a.start..b.end
            }
            CwExpr::Join { i, j, sub } => {
                let range = self.run(sub);
                let with_i: Vec<usize> = range.clone().filter(|&v| self.labels[v] == *i).collect();
                let with_j: Vec<usize> = range.clone().filter(|&v| self.labels[v] == *j).collect();
                for &u in &with_i {
                    for &v in &with_j {
                        self.graph.insert_edge(u, v);
                    }
                }
                range
            }
            CwExpr::Rename { from, to, sub } => {
                let range = self.run(sub);
                for v in range.clone() {
                    if self.labels[v] == *from {
                        self.labels[v] = *to;
                    }
                }
                range
            }
        }
    }
}

impl fmt::Display for CwExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CwExpr::Create { label, vertex } => write!(f, "{label}({vertex})"),
            CwExpr::Union(l, r) => {
                if matches!(**r, CwExpr::Union(..)) {
                    write!(f, "{l} + ({r})")
                } else {
                    write!(f, "{l} + {r}")
                }
            }
            CwExpr::Join { i, j, sub } => write!(f, "eta({i},{j}; {sub})"),
            CwExpr::Rename { from, to, sub } => write!(f, "rho({from}->{to}; {sub})"),
        }
    }
}

impl std::str::FromStr for CwExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_cwexpr(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected {token:?}")))
        }
    }

    fn label(&mut self) -> Result<Label> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(Error::parse(self.pos, "expected a label"));
        }
        let start = self.pos;
        self.pos += digits;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "label out of range"))
    }

    fn vertex_name(&mut self) -> Result<String> {
        self.skip_ws();
        let len: usize = self
            .rest()
            .chars()
            .take_while(|c| !c.is_whitespace() && !"()+;".contains(*c))
            .map(char::len_utf8)
            .sum();
        if len == 0 {
            return Err(Error::parse(self.pos, "expected a vertex name"));
        }
        let name = self.rest()[..len].to_string();
        self.pos += len;
        Ok(name)
    }

    fn expr(&mut self) -> Result<CwExpr> {
        let mut acc = self.primary()?;
        while self.eat("+") {
            let rhs = self.primary()?;
            acc = CwExpr::union(acc, rhs);
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<CwExpr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let label = self.label()?;
                self.expect("(")?;
                let vertex = self.vertex_name()?;
                self.expect(")")?;
                Ok(CwExpr::Create { label, vertex })
            }
            Some(_) if self.eat("eta") => {
                self.expect("(")?;
                let i = self.label()?;
                self.expect(",")?;
                let j = self.label()?;
                self.expect(";")?;
                let sub = self.expr()?;
                self.expect(")")?;
                Ok(CwExpr::join(i, j, sub))
            }
            Some(_) if self.eat("rho") => {
                self.expect("(")?;
                let from = self.label()?;
                self.expect("->")?;
                let to = self.label()?;
                self.expect(";")?;
                let sub = self.expr()?;
                self.expect(")")?;
                Ok(CwExpr::rename(from, to, sub))
            }
            Some(c) => Err(Error::parse(self.pos, format!("unexpected character {c:?}"))),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}

/// Parses and validates a k-expression.
pub fn parse_cwexpr(text: &str) -> Result<CwExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(Error::parse(p.pos, "trailing input"));
    }
    e.validate()?;
    Ok(e)
}

/// Parses an expression file: lines starting with `#` are comments, the
/// remaining text is one expression.
pub fn parse_cwexpr_file(text: &str) -> Result<CwExpr> {
    let body: String = text
        .lines()
        .map(|l| if l.trim_start().starts_with('#') { "" } else { l })
        .collect::<Vec<_>>()
        .join("\n");
    parse_cwexpr(&body)
}
