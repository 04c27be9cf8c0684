//! Forbidden configurations for the no-proper-1-immersion conditions.
//!
//! Each pattern is one of the local configurations that a proper
//! 1-immersion of an otherwise admissible graph is forced into: two disjoint
//! triangles `xyz` and `vuw` with the 4-valent 4-cycle `x v u z` between
//! them, and its two extensions along `u`. Vertices with a degree entry
//! must have exactly that degree in the host; the starred pair may be
//! mapped to a single host vertex. Matching ignores the embedding, so the
//! mirrored configurations (`u` and `w` exchanged) are the same patterns.

use crate::graph::Graph;

/// Version of the pattern table.
pub const PATTERN_VERSION: u32 = 1;

#[derive(Debug)]
pub struct PatternTable {
    pub name: &'static str,
    pub vertices: &'static [&'static str],
    pub edges: &'static [(&'static str, &'static str)],
    /// Exact host degrees.
    pub degrees: &'static [(&'static str, usize)],
    /// Two vertices that may coincide in the host.
    pub starred: Option<(&'static str, &'static str)>,
}

/// Two triangles joined through a 4-cycle of 4-valent vertices; the
/// triangles on `xv` and `zu` close through `a*` and `a`.
pub const QUAD: PatternTable = PatternTable {
    name: "quad",
    vertices: &["x", "y", "z", "v", "u", "w", "a", "a*"],
    edges: &[
        ("x", "y"), ("y", "z"), ("z", "x"),
        ("v", "u"), ("u", "w"), ("w", "v"),
        ("x", "v"), ("z", "u"),
        ("z", "a"), ("u", "a"),
        ("x", "a*"), ("v", "a*"),
    ],
    degrees: &[("x", 4), ("z", 4), ("v", 4), ("u", 4)],
    starred: Some(("a", "a*")),
};

/// `u` is 5-valent with `uw` in a second triangle `uwb`; the 4-valent `a`
/// closes a triangle `acd` and the 4-cycle `d b u a`.
pub const QUAD_UW: PatternTable = PatternTable {
    name: "quad-uw",
    vertices: &["x", "y", "z", "v", "u", "w", "a", "a*", "b", "c", "d"],
    edges: &[
        ("x", "y"), ("y", "z"), ("z", "x"),
        ("v", "u"), ("u", "w"), ("w", "v"),
        ("x", "v"), ("z", "u"),
        ("z", "a"), ("u", "a"),
        ("x", "a*"), ("v", "a*"),
        ("u", "b"), ("w", "b"),
        ("a", "c"), ("c", "d"), ("a", "d"),
        ("b", "d"),
    ],
    degrees: &[("z", 4), ("v", 4), ("u", 5), ("a", 4), ("b", 4)],
    starred: Some(("a", "a*")),
};

/// `u` is 5-valent with `au` in a second triangle `aub`; `a` is 5-valent,
/// `b` and `d` are 4-valent, closing the 4-cycle `d t' b a`.
pub const QUAD_AU: PatternTable = PatternTable {
    name: "quad-au",
    vertices: &["x", "y", "z", "v", "u", "w", "a", "a*", "b", "h", "d", "t", "t'"],
    edges: &[
        ("x", "y"), ("y", "z"), ("z", "x"),
        ("v", "u"), ("u", "w"), ("w", "v"),
        ("x", "v"), ("z", "u"),
        ("z", "a"), ("u", "a"),
        ("x", "a*"), ("v", "a*"),
        ("a", "b"), ("u", "b"),
        ("a", "h"), ("h", "d"), ("a", "d"),
        ("b", "t"), ("b", "t'"), ("t", "t'"),
        ("d", "t'"),
    ],
    degrees: &[("z", 4), ("v", 4), ("u", 5), ("a", 5), ("b", 4), ("d", 4)],
    starred: Some(("a", "a*")),
};

pub const LIBRARY: [&PatternTable; 3] = [&QUAD, &QUAD_UW, &QUAD_AU];

/// A pattern compiled to vertex indices.
#[derive(Clone, Debug)]
pub struct ForbiddenPattern {
    pub name: &'static str,
    pub graph: Graph,
    pub names: Vec<&'static str>,
    /// Exact host degree per pattern vertex, if constrained.
    pub degree: Vec<Option<usize>>,
    pub starred: Option<(usize, usize)>,
}

impl PatternTable {
    fn index(&self, v: &str) -> usize {
        self.vertices.iter().position(|&x| x == v).unwrap_or_else(|| panic!("pattern vertex {v}"))
    }

    pub fn compile(&self) -> ForbiddenPattern {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(a, b)| (self.index(a), self.index(b))).collect();
        let mut degree = vec![None; self.vertices.len()];
        for &(v, d) in self.degrees {
            degree[self.index(v)] = Some(d);
        }
        ForbiddenPattern {
            name: self.name,
            graph: Graph::simple(self.vertices.len(), &edges),
            names: self.vertices.to_vec(),
            degree,
            starred: self.starred.map(|(a, b)| (self.index(a), self.index(b))),
        }
    }
}

pub fn library() -> Vec<ForbiddenPattern> {
    LIBRARY.iter().map(|t| t.compile()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::is_planar;

    #[test]
    fn patterns_are_planar_and_respect_their_degrees() {
        for p in library() {
            assert!(is_planar(&p.graph), "{}", p.name);
            let d = p.graph.degrees();
            for (v, want) in p.degree.iter().enumerate() {
                if let Some(w) = want {
                    assert!(d[v] <= *w, "{} vertex {}", p.name, p.names[v]);
                }
            }
        }
    }

    /// Every pattern contains a 4-cycle of degree-constrained vertices whose
    /// degrees are 4 or 5, so a graph whose 4-cycles all meet a 6-valent
    /// vertex avoids it.
    #[test]
    fn every_pattern_has_a_constrained_four_cycle_or_a_five() {
        for p in library() {
            let has5 = p.degree.iter().any(|d| *d == Some(5));
            let quad = ["x", "v", "u", "z"].iter().all(|n| {
                let i = p.names.iter().position(|x| x == n).unwrap();
                p.degree[i] == Some(4)
            });
            assert!(has5 || quad, "{}", p.name);
        }
    }
}
