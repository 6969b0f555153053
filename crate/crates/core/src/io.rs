//! Text formats for graphs: graph6 and a plain edge list.
//!
//! The edge list is a header line `n m` followed by `m` lines `u v` with
//! 0-based vertices. graph6 follows the usual 6-bit encoding of the upper
//! triangle, column by column; the `>>graph6<<` header is accepted on input
//! and never emitted.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let body = text.trim();
    let body = body.strip_prefix(GRAPH6_HEADER).unwrap_or(body);
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(i, format!("byte {b:#04x} is not a graph6 character")));
        }
    }
    let (n, mut pos) = match bytes {
        [] => return Err(Error::parse(0, "empty graph6 string")),
        [126, 126, rest @ ..] => (decode_digits(rest, 6, 2)?, 8),
        [126, rest @ ..] => (decode_digits(rest, 3, 1)?, 4),
        [b, ..] => ((*b - 63) as usize, 1),
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(Error::parse(
            pos,
            format!("expected {needed} data bytes for {n} vertices, found {}", bytes.len() - pos),
        ));
    }
    let mut g = Graph::new(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            bit += 1;
        }
    }
    pos += needed;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

fn decode_digits(rest: &[u8], count: usize, offset: usize) -> Result<usize> {
    if rest.len() < count {
        return Err(Error::parse(offset, "truncated graph6 size field"));
    }
    Ok(rest[..count]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "edge list is empty"))?;
    let (n, m) = parse_pair(header, line_no)?;
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line, line_no)?;
        g.add_edge(u, v)
            .map_err(|e| Error::parse(line_no, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(line_no, format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let mut next = || -> Result<usize> {
        parts
            .next()
            .ok_or_else(|| Error::parse(line_no, format!("expected two integers in {line:?}")))?
            .parse()
            .map_err(|_| Error::parse(line_no, format!("expected two integers in {line:?}")))
    };
    let pair = (next()?, next()?);
    if parts.next().is_some() {
        return Err(Error::parse(line_no, format!("trailing tokens in {line:?}")));
    }
    Ok(pair)
}

/// Reads either format, deciding by the first non-comment line.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.split_whitespace().count() == 2 && first.split_whitespace().all(|t| t.parse::<usize>().is_ok()) {
        from_edge_list(text)
    } else {
        from_graph6(first)
    }
}
