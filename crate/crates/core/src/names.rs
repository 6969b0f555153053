//! Named graphs and a small expression language for writing them.
//!
//! ```text
//! expr := term ('+' term)*
//! term := [integer] atom
//! atom := 'P'n | 'C'n | 'K'n | 'K1_'r | 'S_'i'_'j'_'k | 'co(' expr ')'
//!       | identifier | 'wall(' h ')' | 'swall(' h ',' k ')' | 'grid(' n ')'
//! ```
//!
//! Whitespace is ignored. `3P1` is three disjoint copies of `P1`, `co(...)`
//! is the complement, `K1_r` the star with `r` leaves and `S_i_j_k` the
//! subdivided claw with arms of length `i <= j <= k`.

use std::fmt;

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::witnesses;

/// Graphs known by a word rather than by parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Special {
    /// Triangle with a pendant vertex, the complement of `P1+P3`.
    Paw,
    /// `K4` minus an edge, the complement of `2P1+P2`.
    Diamond,
    /// `K1_3`.
    Claw,
    /// Edges ab, ac, ad, bc, be.
    Bull,
    /// Edges ab, ac, ad, bc, de.
    Hammer,
    /// `P4` plus a dominating vertex, the complement of `P1+P4`.
    Gem,
}

impl Special {
    pub const ALL: [Special; 6] = [
        Special::Paw,
        Special::Diamond,
        Special::Claw,
        Special::Bull,
        Special::Hammer,
        Special::Gem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Special::Paw => "paw",
            Special::Diamond => "diamond",
            Special::Claw => "claw",
            Special::Bull => "bull",
            Special::Hammer => "hammer",
            Special::Gem => "gem",
        }
    }

    fn from_name(word: &str) -> Option<Special> {
        Special::ALL.into_iter().find(|s| s.name() == word)
    }

    fn realize(self) -> Graph {
        let edges: &[(usize, usize)] = match self {
            Special::Paw => &[(0, 1), (0, 2), (1, 2), (0, 3)],
            Special::Diamond => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
            Special::Claw => &[(0, 1), (0, 2), (0, 3)],
            Special::Bull => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 4)],
            Special::Hammer => &[(0, 1), (0, 2), (0, 3), (1, 2), (3, 4)],
            Special::Gem => &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)],
        };
        let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
        Graph::from_edges(n, edges).expect("static edge list")
    }
}

/// Parsed graph name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphNameExpr {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,r}`.
    Star(usize),
    SubdividedClaw(usize, usize, usize),
    Named(Special),
    /// Disjoint union; each entry is `(multiplier, graph)`.
    Sum(Vec<(usize, GraphNameExpr)>),
    Complement(Box<GraphNameExpr>),
    Wall(usize),
    SubdividedWall(usize, usize),
    Grid(usize),
}

impl GraphNameExpr {
    /// Checks the parameter bounds of every node.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::input(msg));
        match self {
            GraphNameExpr::Path(r) if *r < 1 => bad(format!("P{r}: paths need at least one vertex")),
            GraphNameExpr::Complete(r) if *r < 1 => bad(format!("K{r}: cliques need at least one vertex")),
            GraphNameExpr::Cycle(r) if *r < 3 => bad(format!("C{r}: cycles need at least three vertices")),
            GraphNameExpr::Star(r) if *r < 1 => bad(format!("K1_{r}: stars need at least one leaf")),
            GraphNameExpr::SubdividedClaw(i, j, k) if !(1 <= *i && i <= j && j <= k) => {
                bad(format!("S_{i}_{j}_{k}: arm lengths must satisfy 1 <= i <= j <= k"))
            }
            GraphNameExpr::Sum(terms) => {
                if terms.is_empty() {
                    return bad("empty sum".into());
                }
                for (mult, e) in terms {
                    if *mult < 1 {
                        return bad(format!("multiplier {mult} must be at least 1"));
                    }
                    e.validate()?;
                }
                Ok(())
            }
            GraphNameExpr::Complement(e) => e.validate(),
            GraphNameExpr::Wall(h) if *h < 2 => bad(format!("wall({h}): height must be at least 2")),
            GraphNameExpr::SubdividedWall(h, _) if *h < 2 => {
                bad(format!("swall({h},..): height must be at least 2"))
            }
            GraphNameExpr::Grid(n) if *n < 3 => bad(format!("grid({n}): side must be at least 3")),
            _ => Ok(()),
        }
    }

    /// Builds the named graph with a fixed vertex numbering.
    pub fn realize(&self) -> Graph {
        match self {
            GraphNameExpr::Path(r) => Graph::path(*r),
            GraphNameExpr::Cycle(r) => Graph::cycle(*r),
            GraphNameExpr::Complete(r) => Graph::complete(*r),
            GraphNameExpr::Star(r) => {
                let edges: Vec<(usize, usize)> = (1..=*r).map(|v| (0, v)).collect();
                Graph::from_edges(r + 1, &edges).expect("star edges")
            }
            GraphNameExpr::SubdividedClaw(i, j, k) => subdivided_claw(*i, *j, *k),
            GraphNameExpr::Named(s) => s.realize(),
            GraphNameExpr::Sum(terms) => terms.iter().fold(Graph::new(0), |acc, (mult, e)| {
                acc.disjoint_union(&e.realize().repeat(*mult))
            }),
            GraphNameExpr::Complement(e) => e.realize().complement(),
            GraphNameExpr::Wall(h) => witnesses::wall(*h).expect("validated height"),
            GraphNameExpr::SubdividedWall(h, k) => {
                witnesses::subdivided_wall(*h, *k).expect("validated height")
            }
            GraphNameExpr::Grid(n) => witnesses::grid(*n).expect("validated side").0,
        }
    }
}

fn subdivided_claw(i: usize, j: usize, k: usize) -> Graph {
    let mut g = Graph::new(i + j + k + 1);
    let mut next = 1;
    for arm in [i, j, k] {
        let mut prev = 0;
        for _ in 0..arm {
            g.insert_edge(prev, next);
            prev = next;
            next += 1;
        }
    }
    g
}

fn flatten_sum<'a>(terms: &'a [(usize, GraphNameExpr)], outer: usize, out: &mut Vec<(usize, &'a GraphNameExpr)>) {
    for (mult, e) in terms {
        match e {
            GraphNameExpr::Sum(inner) => flatten_sum(inner, outer * mult, out),
            _ => out.push((outer * mult, e)),
        }
    }
}

impl fmt::Display for GraphNameExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphNameExpr::Path(r) => write!(f, "P{r}"),
            GraphNameExpr::Cycle(r) => write!(f, "C{r}"),
            GraphNameExpr::Complete(r) => write!(f, "K{r}"),
            GraphNameExpr::Star(r) => write!(f, "K1_{r}"),
            GraphNameExpr::SubdividedClaw(i, j, k) => write!(f, "S_{i}_{j}_{k}"),
            GraphNameExpr::Named(s) => f.write_str(s.name()),
            GraphNameExpr::Sum(terms) => {
                // The grammar has no grouping, so nested sums are printed flat
                // with their multipliers distributed.
                let mut flat = Vec::new();
                flatten_sum(terms, 1, &mut flat);
                for (idx, (mult, e)) in flat.into_iter().enumerate() {
                    if idx > 0 {
                        f.write_str("+")?;
                    }
                    if mult != 1 {
                        write!(f, "{mult}")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
            GraphNameExpr::Complement(e) => write!(f, "co({e})"),
            GraphNameExpr::Wall(h) => write!(f, "wall({h})"),
            GraphNameExpr::SubdividedWall(h, k) => write!(f, "swall({h},{k})"),
            GraphNameExpr::Grid(n) => write!(f, "grid({n})"),
        }
    }
}

impl std::str::FromStr for GraphNameExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_name(s)
    }
}

// ---------------------------------------------------------------------------
// Parser

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_lowercase() {
            self.pos += 1;
        }
        String::from_utf8(self.src[start..self.pos].to_vec()).unwrap()
    }

    fn expr(&mut self) -> Result<GraphNameExpr> {
        let mut terms = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }
        if terms.len() == 1 && terms[0].0 == 1 {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(GraphNameExpr::Sum(terms))
    }

    fn term(&mut self) -> Result<(usize, GraphNameExpr)> {
        let mult = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let m = self.integer()?;
                if m == 0 {
                    return Err(Error::parse(start, "multiplier must be at least 1"));
                }
                m
            }
            _ => 1,
        };
        Ok((mult, self.atom()?))
    }

    fn atom(&mut self) -> Result<GraphNameExpr> {
        let start = self.pos;
        match self.peek() {
            Some(b'P') => {
                self.pos += 1;
                Ok(GraphNameExpr::Path(self.integer()?))
            }
            Some(b'C') => {
                self.pos += 1;
                Ok(GraphNameExpr::Cycle(self.integer()?))
            }
            Some(b'K') => {
                self.pos += 1;
                let r = self.integer()?;
                if self.eat(b'_') {
                    if r != 1 {
                        return Err(Error::parse(start, "stars are written K1_r"));
                    }
                    Ok(GraphNameExpr::Star(self.integer()?))
                } else {
                    Ok(GraphNameExpr::Complete(r))
                }
            }
            Some(b'S') => {
                self.pos += 1;
                self.expect(b'_')?;
                let i = self.integer()?;
                self.expect(b'_')?;
                let j = self.integer()?;
                self.expect(b'_')?;
                let k = self.integer()?;
                Ok(GraphNameExpr::SubdividedClaw(i, j, k))
            }
            Some(c) if c.is_ascii_lowercase() => {
                let word = self.word();
                match word.as_str() {
                    "co" => {
                        self.expect(b'(')?;
                        let inner = self.expr()?;
                        self.expect(b')')?;
                        Ok(GraphNameExpr::Complement(Box::new(inner)))
                    }
                    "wall" | "grid" => {
                        self.expect(b'(')?;
                        let h = self.integer()?;
                        self.expect(b')')?;
                        Ok(if word == "wall" {
                            GraphNameExpr::Wall(h)
                        } else {
                            GraphNameExpr::Grid(h)
                        })
                    }
                    "swall" => {
                        self.expect(b'(')?;
                        let h = self.integer()?;
                        self.expect(b',')?;
                        let k = self.integer()?;
                        self.expect(b')')?;
                        Ok(GraphNameExpr::SubdividedWall(h, k))
                    }
                    "claw" => Ok(GraphNameExpr::Star(3)),
                    "diamond" => Ok(GraphNameExpr::Complement(Box::new(GraphNameExpr::Sum(vec![
                        (2, GraphNameExpr::Path(1)),
                        (1, GraphNameExpr::Path(2)),
                    ])))),
                    other => Special::from_name(other)
                        .map(GraphNameExpr::Named)
                        .ok_or_else(|| Error::parse(start, format!("unknown graph name {other:?}"))),
                }
            }
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses and validates a graph name.
pub fn parse_name(text: &str) -> Result<GraphNameExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let expr = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    expr.validate()?;
    Ok(expr)
}

/// Realizes a name literal, panicking on invalid input. Meant for fixed
/// pattern tables and tests.
pub fn graph(text: &str) -> Graph {
    parse_name(text)
        .unwrap_or_else(|e| panic!("bad graph name {text:?}: {e}"))
        .realize()
}

// ---------------------------------------------------------------------------
// Recognition

/// Finds a catalog name for `g`: paths, cliques, cycles, stars, subdivided
/// claws, the named specials and disjoint sums of those, or the complement of
/// such a graph. Returns `None` for anything else.
pub fn recognize(g: &Graph) -> Option<GraphNameExpr> {
    if g.vertex_count() == 0 {
        return None;
    }
    recognize_sum(g).or_else(|| {
        recognize_sum(&g.complement()).map(|e| GraphNameExpr::Complement(Box::new(e)))
    })
}

/// Name text for `g`, falling back to graph6 (prefixed `g6:`) outside the catalog.
pub fn describe(g: &Graph) -> String {
    match recognize(g) {
        Some(e) => e.to_string(),
        None => format!("g6:{}", crate::io::to_graph6(g)),
    }
}

fn recognize_sum(g: &Graph) -> Option<GraphNameExpr> {
    let comps = g.components();
    let mut named: Vec<(usize, usize, GraphNameExpr)> = Vec::new();
    for comp in &comps {
        let c = g.induced_sorted(comp);
        let (rank, e) = recognize_connected(&c)?;
        named.push((comp.len(), rank, e));
    }
    named.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then_with(|| a.2.to_string().cmp(&b.2.to_string())));
    let mut terms: Vec<(usize, GraphNameExpr)> = Vec::new();
    for (_, _, e) in named {
        match terms.last_mut() {
            Some((mult, last)) if *last == e => *mult += 1,
            _ => terms.push((1, e)),
        }
    }
    if terms.len() == 1 && terms[0].0 == 1 {
        return terms.pop().map(|t| t.1);
    }
    Some(GraphNameExpr::Sum(terms))
}

/// Catalog rank and name of a connected graph.
fn recognize_connected(c: &Graph) -> Option<(usize, GraphNameExpr)> {
    let n = c.vertex_count();
    let m = c.edge_count();
    let max_deg = c.max_degree();
    let is_tree = m + 1 == n;
    if is_tree && max_deg <= 2 {
        return Some((0, GraphNameExpr::Path(n)));
    }
    if m == n * (n - 1) / 2 {
        return Some((1, GraphNameExpr::Complete(n)));
    }
    if m == n && max_deg == 2 {
        return Some((2, GraphNameExpr::Cycle(n)));
    }
    if is_tree && max_deg == n - 1 {
        return Some((3, GraphNameExpr::Star(n - 1)));
    }
    if is_tree && max_deg == 3 && (0..n).filter(|&v| c.degree(v) == 3).count() == 1 {
        let centre = (0..n).find(|&v| c.degree(v) == 3).unwrap();
        let mut arms: Vec<usize> = c
            .neighbors(centre)
            .map(|first| {
                let (mut prev, mut cur, mut len) = (centre, first, 1);
                while c.degree(cur) == 2 {
                    let next = c.neighbors(cur).find(|&w| w != prev).unwrap();
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            })
            .collect();
        arms.sort_unstable();
        return Some((4, GraphNameExpr::SubdividedClaw(arms[0], arms[1], arms[2])));
    }
    for (i, s) in Special::ALL.into_iter().enumerate() {
        if is_isomorphic(c, &s.realize()) {
            return Some((5 + i, GraphNameExpr::Named(s)));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: usize) -> GraphNameExpr {
        GraphNameExpr::Path(r)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_name("2P1+P3").unwrap(), GraphNameExpr::Sum(vec![(2, p(1)), (1, p(3))]));
        assert_eq!(
            parse_name("co(2P1+P2)").unwrap(),
            GraphNameExpr::Complement(Box::new(GraphNameExpr::Sum(vec![(2, p(1)), (1, p(2))])))
        );
        assert_eq!(parse_name("S_1_2_3").unwrap(), GraphNameExpr::SubdividedClaw(1, 2, 3));
        assert_eq!(parse_name(" 2 P1 + K1_3 ").unwrap().to_string(), "2P1+K1_3");
        assert_eq!(parse_name("3P1").unwrap(), GraphNameExpr::Sum(vec![(3, p(1))]));
        assert_eq!(parse_name("swall(3, 2)").unwrap(), GraphNameExpr::SubdividedWall(3, 2));
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "P", "P0", "C2", "K0", "S_2_1_1", "S_1_2", "co(P3", "0P1", "P3 P4", "petersen", "K2_3", "grid(2)"] {
            assert!(parse_name(bad).is_err(), "{bad:?} should be rejected");
        }
        match parse_name("P3+Q") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn realize_examples() {
        assert!(is_isomorphic(&graph("paw"), &graph("P1+P3").complement()));
        assert!(is_isomorphic(&graph("S_1_1_1"), &graph("K1_3")));
        let g = graph("3P2");
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 3));
        assert!(is_isomorphic(&graph("diamond"), &graph("co(2P1+P2)")));
        assert!(is_isomorphic(&graph("gem"), &graph("co(P1+P4)")));
        assert!(is_isomorphic(&graph("claw"), &graph("K1_3")));
        let bull = graph("bull");
        assert_eq!(bull.degree_sequence(), vec![3, 3, 2, 1, 1]);
        let hammer = graph("hammer");
        assert_eq!(hammer.degree_sequence(), vec![3, 2, 2, 2, 1]);
    }

    #[test]
    fn subdivided_claw_shape() {
        for (i, j, k) in [(1, 1, 1), (1, 2, 2), (1, 2, 3), (2, 3, 4)] {
            let g = GraphNameExpr::SubdividedClaw(i, j, k).realize();
            assert_eq!(g.vertex_count(), i + j + k + 1);
            assert_eq!((0..g.vertex_count()).filter(|&v| g.degree(v) == 3).count(), 1);
            assert_eq!((0..g.vertex_count()).filter(|&v| g.degree(v) == 1).count(), 3);
            let expected = if (i, j, k) == (1, 1, 1) { GraphNameExpr::Star(3) } else { GraphNameExpr::SubdividedClaw(i, j, k) };
            assert_eq!(recognize(&g), Some(expected));
        }
    }

    #[test]
    fn recognize_examples() {
        assert_eq!(recognize(&graph("K3")).unwrap().to_string(), "K3");
        assert_eq!(recognize(&graph("co(P1+P3)")).unwrap().to_string(), "paw");
        assert_eq!(recognize(&graph("co(2P1+P3)")).unwrap().to_string(), "co(2P1+P3)");
        assert_eq!(recognize(&graph("P3+2P1")).unwrap().to_string(), "2P1+P3");
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(recognize(&petersen), None);
        assert!(describe(&petersen).starts_with("g6:"));
    }

    #[test]
    fn complement_realization_commutes() {
        for text in ["P5", "2P1+P3", "S_1_2_2", "K1_4+P2", "bull", "C6"] {
            let e = parse_name(text).unwrap();
            let co = GraphNameExpr::Complement(Box::new(e.clone()));
            assert!(is_isomorphic(&co.realize(), &e.realize().complement()));
        }
    }

    fn catalog_exprs() -> Vec<GraphNameExpr> {
        let mut out = Vec::new();
        for r in 1..=8 {
            out.push(GraphNameExpr::Path(r));
            out.push(GraphNameExpr::Complete(r));
            out.push(GraphNameExpr::Star(r));
            if r >= 3 {
                out.push(GraphNameExpr::Cycle(r));
            }
        }
        for i in 1..=3 {
            for j in i..=3 {
                for k in j..=4 {
                    out.push(GraphNameExpr::SubdividedClaw(i, j, k));
                }
            }
        }
        out.extend(Special::ALL.map(GraphNameExpr::Named));
        out
    }

    #[test]
    fn format_parse_round_trip() {
        let atoms = catalog_exprs();
        let mut exprs = atoms.clone();
        for (a, b) in atoms.iter().zip(atoms.iter().skip(3)).take(20) {
            exprs.push(GraphNameExpr::Sum(vec![(2, a.clone()), (1, b.clone())]));
            exprs.push(GraphNameExpr::Complement(Box::new(a.clone())));
        }
        for e in exprs {
            let text = e.to_string();
            let back = parse_name(&text).unwrap();
            assert!(is_isomorphic(&back.realize(), &e.realize()), "{text}");
            if let Some(name) = recognize(&e.realize()) {
                assert!(is_isomorphic(&name.realize(), &e.realize()), "{text} -> {name}");
            }
        }
    }
}
