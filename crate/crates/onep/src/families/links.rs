//! Link tables: the three small gadgets that chains are built from.
//!
//! Each link `L(z, zbar)` joins two core vertices. Vertex names follow the
//! usual drawing: `z` and `zbar` are the core vertices, `v`, `w`, `vbar` and
//! `u` are noncore. The tables are data, not code, so a reviewer can compare
//! them with the drawing line by line.
//!
//! | kind  | vertices            | edges                                            | free cycles          |
//! |-------|---------------------|--------------------------------------------------|----------------------|
//! | A     | z zbar v vbar       | z-v z-vbar v-vbar zbar-v zbar-vbar               | z v vbar; zbar v vbar|
//! | B     | z zbar v w u        | z-v z-w v-u w-u v-zbar w-zbar u-zbar             | z v u w              |
//! | base  | z zbar v w u        | z-v z-w v-w v-u w-u u-zbar v-zbar w-zbar         | z v w                |
//!
//! The tables are pinned by the facts the construction relies on: every free
//! cycle contains exactly one core vertex; the 3-valent vertex `u` of a
//! B-link or base link sees exactly `zbar`, `v`, `w`; in a B-link `v` is
//! adjacent to `z`, `zbar` and `u`; every set of at least two noncore
//! vertices sends at least four edges out; and two edges separate `z` from
//! `zbar` exactly when they are the core-adjacent edges of a free cycle.
//! `zbar` has three link edges in B-links and base links, `z` has two.

use crate::graph::Graph;

/// Version of the link and chain transcription tables.
pub const TRANSCRIPTION_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinkKind {
    A,
    B,
    Base,
}

/// Static description of one link kind.
#[derive(Debug)]
pub struct LinkTable {
    pub kind: LinkKind,
    /// Vertex names; indices 0 and 1 are always `z` and `zbar`.
    pub vertices: &'static [&'static str],
    pub edges: &'static [(&'static str, &'static str)],
    pub free_cycles: &'static [&'static [&'static str]],
    /// The edge drawn through the middle of the link, if it has one.
    pub middle_edge: Option<(&'static str, &'static str)>,
}

pub const A_LINK: LinkTable = LinkTable {
    kind: LinkKind::A,
    vertices: &["z", "zbar", "v", "vbar"],
    edges: &[("z", "v"), ("z", "vbar"), ("v", "vbar"), ("zbar", "v"), ("zbar", "vbar")],
    free_cycles: &[&["z", "v", "vbar"], &["zbar", "v", "vbar"]],
    middle_edge: None,
};

pub const B_LINK: LinkTable = LinkTable {
    kind: LinkKind::B,
    vertices: &["z", "zbar", "v", "w", "u"],
    edges: &[("z", "v"), ("z", "w"), ("v", "u"), ("w", "u"), ("v", "zbar"), ("w", "zbar"), ("u", "zbar")],
    free_cycles: &[&["z", "v", "u", "w"]],
    middle_edge: Some(("u", "zbar")),
};

pub const BASE_LINK: LinkTable = LinkTable {
    kind: LinkKind::Base,
    vertices: &["z", "zbar", "v", "w", "u"],
    edges: &[("z", "v"), ("z", "w"), ("v", "w"), ("v", "u"), ("w", "u"), ("u", "zbar"), ("v", "zbar"), ("w", "zbar")],
    free_cycles: &[&["z", "v", "w"]],
    middle_edge: None,
};

impl LinkKind {
    pub fn table(self) -> &'static LinkTable {
        match self {
            LinkKind::A => &A_LINK,
            LinkKind::B => &B_LINK,
            LinkKind::Base => &BASE_LINK,
        }
    }
}

impl LinkTable {
    pub fn index(&self, name: &str) -> usize {
        self.vertices.iter().position(|&v| v == name).unwrap_or_else(|| panic!("unknown link vertex {name}"))
    }

    /// Number of noncore vertices.
    pub fn noncore(&self) -> usize {
        self.vertices.len() - 2
    }
}

/// A stand-alone link with its role metadata; vertex `i` is
/// `table.vertices[i]`, edge `i` is `table.edges[i]`.
#[derive(Clone, Debug)]
pub struct Link {
    pub kind: LinkKind,
    pub graph: Graph,
    pub z: usize,
    pub zbar: usize,
    /// Free cycles as vertex sequences.
    pub free_cycles: Vec<Vec<usize>>,
    /// For each free cycle, the ids of its two edges at the core vertex.
    pub core_adjacent: Vec<(usize, usize)>,
    pub middle_edge: Option<usize>,
}

/// Builds the link of the given kind.
pub fn gen_link(kind: LinkKind) -> Link {
    let t = kind.table();
    let edges: Vec<(usize, usize)> = t.edges.iter().map(|&(a, b)| (t.index(a), t.index(b))).collect();
    let graph = Graph::simple(t.vertices.len(), &edges);
    let free_cycles: Vec<Vec<usize>> = t.free_cycles.iter().map(|c| c.iter().map(|v| t.index(v)).collect()).collect();
    let core_adjacent = free_cycles.iter().map(|c| core_adjacent_edges(&graph, c)).collect();
    let middle_edge = t.middle_edge.map(|(a, b)| graph.find_edge(t.index(a), t.index(b)).expect("middle edge"));
    Link { kind, graph, z: 0, zbar: 1, free_cycles, core_adjacent, middle_edge }
}

/// The two edges of a free cycle at its core vertex, which is the cycle's
/// first entry.
pub(crate) fn core_adjacent_edges(g: &Graph, cycle: &[usize]) -> (usize, usize) {
    let k = cycle.len();
    let a = g.find_edge(cycle[0], cycle[1]).expect("cycle edge");
    let b = g.find_edge(cycle[0], cycle[k - 1]).expect("cycle edge");
    (a.min(b), a.max(b))
}
