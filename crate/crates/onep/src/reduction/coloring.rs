//! Colours `a`, `b`, `c`, colourings and their text format.

use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    A,
    B,
    C,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::A, Color::B, Color::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Color {
        Color::ALL[i]
    }

    /// `a -> b -> c -> a`.
    pub fn next(self) -> Color {
        Color::from_index((self.index() + 1) % 3)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["a", "b", "c"][self.index()])
    }
}

impl std::str::FromStr for Color {
    type Err = Error;
    fn from_str(s: &str) -> Result<Color> {
        match s {
            "a" => Ok(Color::A),
            "b" => Ok(Color::B),
            "c" => Ok(Color::C),
            _ => Err(Error::Param(format!("unknown colour {s:?}"))),
        }
    }
}

/// Colour of every source vertex.
pub type Coloring = Vec<Color>;

/// First pair of adjacent vertices sharing a colour.
pub fn improper_edge(g: &Graph, col: &[Color]) -> Option<usize> {
    (0..g.m()).find(|&e| {
        let (u, v) = g.endpoints(e);
        col[u] == col[v]
    })
}

/// A proper 3-colouring by backtracking in vertex order, if one exists.
pub fn three_coloring(g: &Graph) -> Option<Coloring> {
    let nb = g.neighbors();
    let mut col: Vec<Option<Color>> = vec![None; g.n()];
    fn go(v: usize, nb: &[Vec<usize>], col: &mut Vec<Option<Color>>) -> bool {
        if v == nb.len() {
            return true;
        }
        for c in Color::ALL {
            if nb[v].iter().all(|&w| col[w] != Some(c)) {
                col[v] = Some(c);
                if go(v + 1, nb, col) {
                    return true;
                }
            }
        }
        col[v] = None;
        false
    }
    go(0, &nb, &mut col).then(|| col.into_iter().map(|c| c.expect("complete")).collect())
}

/// Lines `v <vertex> <a|b|c>` with 1-based vertices; `#` starts a comment.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let mut col = vec![None; n];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.len() != 3 || t[0] != "v" {
            return Err(parse_err(i + 1, "expected `v <vertex> <a|b|c>`"));
        }
        let v: usize = t[1].parse().map_err(|_| parse_err(i + 1, "bad vertex"))?;
        if v == 0 || v > n {
            return Err(parse_err(i + 1, format!("vertex {v} out of range")));
        }
        if col[v - 1].is_some() {
            return Err(parse_err(i + 1, format!("vertex {v} coloured twice")));
        }
        col[v - 1] = Some(t[2].parse().map_err(|e: Error| parse_err(i + 1, e.to_string()))?);
    }
    col.iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| Error::Param(format!("vertex {} has no colour", v + 1))))
        .collect()
}

pub fn serialize_coloring(col: &[Color]) -> String {
    col.iter().enumerate().map(|(v, c)| format!("v {} {c}\n", v + 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn backtracking_colours_prism_not_k4() {
        let p = named::prism();
        let c = three_coloring(&p).unwrap();
        assert!(improper_edge(&p, &c).is_none());
        assert!(three_coloring(&named::complete(4)).is_none());
    }

    #[test]
    fn text_round_trip() {
        let c = vec![Color::A, Color::C, Color::B];
        assert_eq!(parse_coloring(&serialize_coloring(&c), 3).unwrap(), c);
        assert!(parse_coloring("v 1 a\n", 2).is_err());
        assert!(parse_coloring("v 1 d\nv 2 a\n", 2).is_err());
    }
}
