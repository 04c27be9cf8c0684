//! Line-oriented text formats.
//!
//! Graph block:
//!
//! ```text
//! c optional comments
//! p graph <n> <m> [multi]
//! e <u> <v>            (m lines, 1-indexed endpoints, in EdgeId order)
//! ```
//!
//! Rotation block: one line `r <v>: <e1> <e2> ...` per vertex, listing the
//! 1-indexed ids of its incident edges in clockwise order.

use crate::embedding::RotationSystem;
use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;
use std::fmt::Write;

/// Non-comment, non-blank lines with their 1-based line numbers.
pub(crate) struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !(l.starts_with('c') && (l.len() == 1 || l[1..].starts_with(' '))))
            .collect();
        Lines { items, pos: 0 }
    }

    pub(crate) fn peek(&self) -> Option<(usize, &'a str)> {
        self.items.get(self.pos).copied()
    }

    pub(crate) fn next(&mut self) -> Option<(usize, &'a str)> {
        let r = self.peek();
        if r.is_some() {
            self.pos += 1;
        }
        r
    }

    pub(crate) fn last_line(&self) -> usize {
        self.items.last().map(|x| x.0).unwrap_or(0)
    }
}

pub(crate) fn parse_index(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let t = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    let t = t.trim_end_matches(':');
    t.parse::<usize>().map_err(|_| parse_err(line, format!("bad {what} '{t}'")))
}

/// 1-indexed token to 0-indexed value bounded by `limit`.
pub(crate) fn parse_one_based(tok: Option<&str>, line: usize, what: &str, limit: usize) -> Result<usize> {
    let v = parse_index(tok, line, what)?;
    if v == 0 || v > limit {
        return Err(parse_err(line, format!("{what} {v} out of range 1..={limit}")));
    }
    Ok(v - 1)
}

pub(crate) fn read_graph_block(lines: &mut Lines) -> Result<Graph> {
    let (ln, header) = lines.next().ok_or_else(|| parse_err(0, "missing 'p graph' header"))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("p") || tok.next() != Some("graph") {
        return Err(parse_err(ln, "expected header 'p graph <n> <m> [multi]'"));
    }
    let n = parse_index(tok.next(), ln, "vertex count")?;
    let m = parse_index(tok.next(), ln, "edge count")?;
    let multi = match tok.next() {
        None => false,
        Some("multi") => true,
        Some(t) => return Err(parse_err(ln, format!("unexpected header token '{t}'"))),
    };
    if tok.next().is_some() {
        return Err(parse_err(ln, "trailing tokens in header"));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| parse_err(lines.last_line(), format!("expected {m} edge lines, found {}", edges.len())))?;
        let mut t = l.split_whitespace();
        if t.next() != Some("e") {
            return Err(parse_err(ln, "expected edge line 'e <u> <v>'"));
        }
        let u = parse_one_based(t.next(), ln, "endpoint", n)?;
        let v = parse_one_based(t.next(), ln, "endpoint", n)?;
        if t.next().is_some() {
            return Err(parse_err(ln, "trailing tokens in edge line"));
        }
        edges.push((u, v));
    }
    Graph::build(n, edges, multi).map_err(|e| match e {
        Error::DuplicateEdge(u, v) => parse_err(ln, format!("unexpected duplicate edge {} {}", u + 1, v + 1)),
        Error::SelfLoop(v) => parse_err(ln, format!("self-loop at {}", v + 1)),
        other => other,
    })
}

/// Parses a graph file.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let g = read_graph_block(&mut lines)?;
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "unexpected content after the edge list"));
    }
    Ok(g)
}

pub(crate) fn write_graph_block(out: &mut String, g: &Graph) {
    let multi = if g.is_multigraph() { " multi" } else { "" };
    let _ = writeln!(out, "p graph {} {}{}", g.n(), g.m(), multi);
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
}

/// Serializes a graph; `parse_graph(&serialize_graph(g)) == g`.
pub fn serialize_graph(g: &Graph) -> String {
    let mut s = String::new();
    write_graph_block(&mut s, g);
    s
}

pub(crate) fn write_rotation_block(out: &mut String, rot: &RotationSystem) {
    for (v, r) in rot.rot.iter().enumerate() {
        let _ = write!(out, "r {}:", v + 1);
        for e in r {
            let _ = write!(out, " {}", e + 1);
        }
        out.push('\n');
    }
}

/// Reads `n` rotation lines with edge ids bounded by `m`.
pub(crate) fn read_rotation_block(lines: &mut Lines, n: usize, m: usize) -> Result<RotationSystem> {
    let mut rot = vec![None; n];
    while let Some((ln, l)) = lines.peek() {
        if !l.starts_with("r ") {
            break;
        }
        lines.next();
        let mut t = l[2..].split_whitespace();
        let head = t.next().ok_or_else(|| parse_err(ln, "missing vertex"))?;
        if !head.ends_with(':') {
            return Err(parse_err(ln, "expected 'r <v>: <e1> <e2> ...'"));
        }
        let v = parse_one_based(Some(head), ln, "vertex", n)?;
        let mut list = Vec::new();
        for tok in t {
            list.push(parse_one_based(Some(tok), ln, "edge id", m)?);
        }
        if rot[v].replace(list).is_some() {
            return Err(parse_err(ln, format!("second rotation line for vertex {}", v + 1)));
        }
    }
    let mut out = Vec::with_capacity(n);
    for (v, r) in rot.into_iter().enumerate() {
        match r {
            Some(r) => out.push(r),
            None => return Err(parse_err(lines.last_line(), format!("no rotation line for vertex {}", v + 1))),
        }
    }
    Ok(RotationSystem { rot: out })
}

/// Serializes a rotation system.
pub fn serialize_rotation(rot: &RotationSystem) -> String {
    let mut s = String::new();
    write_rotation_block(&mut s, rot);
    s
}

/// Parses a rotation file for `g` and checks it covers exactly g's edge-ends.
pub fn parse_rotation(text: &str, g: &Graph) -> Result<RotationSystem> {
    let mut lines = Lines::new(text);
    let rot = read_rotation_block(&mut lines, g.n(), g.m())?;
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "unexpected content after the rotation block"));
    }
    rot.validate(g)?;
    Ok(rot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn parse_triangle() {
        let g = parse_graph("c triangle\np graph 3 3\ne 1 2\ne 2 3\ne 3 1\n").unwrap();
        assert_eq!(g, Graph::simple(3, &[(0, 1), (1, 2), (2, 0)]));
    }

    #[test]
    fn round_trip_is_bit_exact() {
        for g in [named::complete(6), named::cube(), named::complete(4).multiply_edges(2).unwrap()] {
            let s = serialize_graph(&g);
            let h = parse_graph(&s).unwrap();
            assert_eq!(h, g);
            assert_eq!(serialize_graph(&h), s);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(parse_graph("p graph 3 1\ne 1 4\n").is_err());
        assert!(parse_graph("p graf 3 1\ne 1 2\n").is_err());
        assert!(parse_graph("p graph 3 2\ne 1 2\ne 2 1\n").is_err());
        assert!(parse_graph("p graph 3 2 multi\ne 1 2\ne 2 1\n").is_ok());
        assert!(parse_graph("p graph 3 2\ne 1 2\n").is_err());
        assert!(parse_graph("p graph 3 1\ne 1 2\ne 2 3\n").is_err());
        assert!(parse_graph("p graph 3 1\ne 0 2\n").is_err());
    }
}
