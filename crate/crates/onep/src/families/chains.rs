//! A- and B-chains.
//!
//! A chain of length `t` has core vertices `v(0), ..., v(t)` and links
//! `1..=t`, link `i` joining `v(i-1)` and `v(i)`. Links `1..t-1` are A-links
//! (A-chain) or B-links (B-chain); link `t` is a base link with `zbar = v(t)`,
//! the end vertex the chain's arrow points to. An unmodified B-link `i` has
//! `z = v(i-1)`: its free cycle faces `v(0)` and its three-edge side faces
//! the base link. The variant modification turns B-link `i` around
//! (`z = v(i)`).

use super::links::{core_adjacent_edges, LinkKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainKind {
    A,
    B,
}

/// A link placed in a larger graph: global vertex ids per table vertex and
/// global edge ids per table edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedLink {
    pub kind: LinkKind,
    /// Position in the chain, 1-based.
    pub position: usize,
    pub flipped: bool,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub free_cycles: Vec<Vec<usize>>,
    pub core_adjacent: Vec<(usize, usize)>,
    pub middle_edge: Option<usize>,
}

impl PlacedLink {
    pub fn z(&self) -> usize {
        self.vertices[0]
    }

    pub fn zbar(&self) -> usize {
        self.vertices[1]
    }
}

/// Chain metadata in the coordinates of the graph that contains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainInfo {
    pub kind: ChainKind,
    pub length: usize,
    pub variants: Vec<usize>,
    /// `core[i]` is `v(i)`.
    pub core: Vec<usize>,
    pub links: Vec<PlacedLink>,
}

impl ChainInfo {
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.links.iter().flat_map(|l| l.edges.iter().copied())
    }
}

/// A stand-alone chain.
#[derive(Clone, Debug)]
pub struct Chain {
    pub graph: Graph,
    pub info: ChainInfo,
}

/// Checks a variant position list: strictly increasing, within
/// `1..=length-1`, and only on B-chains.
pub fn validate_variants(kind: ChainKind, length: usize, variants: &[usize]) -> Result<()> {
    if length < 2 {
        return Err(Error::Param(format!("chain length {length} is below 2")));
    }
    if variants.is_empty() {
        return Ok(());
    }
    if kind == ChainKind::A {
        return Err(Error::Param("A-chains have no variants".into()));
    }
    if variants.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Param("variant positions must be strictly increasing".into()));
    }
    if variants[0] < 1 || *variants.last().unwrap() > length - 1 {
        return Err(Error::Param(format!("variant positions must lie in 1..={}", length - 1)));
    }
    Ok(())
}

/// Vertex count of a chain of the given kind and length.
pub fn chain_order(kind: ChainKind, length: usize) -> usize {
    match kind {
        ChainKind::A => 3 * length + 2,
        ChainKind::B => 4 * length + 1,
    }
}

/// Edge count of a chain of the given kind and length.
pub fn chain_size(kind: ChainKind, length: usize) -> usize {
    let per = match kind {
        ChainKind::A => LinkKind::A.table().edges.len(),
        ChainKind::B => LinkKind::B.table().edges.len(),
    };
    per * (length - 1) + LinkKind::Base.table().edges.len()
}

/// Incremental graph builder shared by the chain-based generators.
#[derive(Default)]
pub(crate) struct Builder {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Builder {
    pub fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn edge(&mut self, a: usize, b: usize) -> usize {
        self.edges.push((a, b));
        self.edges.len() - 1
    }

    pub fn finish(self) -> Graph {
        Graph::simple(self.n, &self.edges)
    }

    /// Places a link between existing vertices `z` and `zbar`.
    pub fn link(&mut self, kind: LinkKind, position: usize, flipped: bool, z: usize, zbar: usize) -> PlacedLink {
        let t = kind.table();
        let mut vertices = vec![z, zbar];
        for _ in 2..t.vertices.len() {
            vertices.push(self.vertex());
        }
        let first = self.edges.len();
        let edges: Vec<usize> = t.edges.iter().map(|&(a, b)| self.edge(vertices[t.index(a)], vertices[t.index(b)])).collect();
        let local = Graph::simple(t.vertices.len(), &t.edges.iter().map(|&(a, b)| (t.index(a), t.index(b))).collect::<Vec<_>>());
        let free_local: Vec<Vec<usize>> = t.free_cycles.iter().map(|c| c.iter().map(|v| t.index(v)).collect()).collect();
        let core_adjacent = free_local
            .iter()
            .map(|c| {
                let (a, b) = core_adjacent_edges(&local, c);
                (first + a, first + b)
            })
            .collect();
        let middle_edge = t.middle_edge.map(|(a, b)| first + local.find_edge(t.index(a), t.index(b)).expect("middle edge"));
        PlacedLink {
            kind,
            position,
            flipped,
            free_cycles: free_local.iter().map(|c| c.iter().map(|&i| vertices[i]).collect()).collect(),
            vertices,
            edges,
            core_adjacent,
            middle_edge,
        }
    }

    /// Places a chain from existing `start = v(0)` to existing `end = v(t)`.
    pub fn chain(&mut self, kind: ChainKind, length: usize, variants: &[usize], start: usize, end: usize) -> Result<ChainInfo> {
        validate_variants(kind, length, variants)?;
        let mut core = vec![start];
        for _ in 1..length {
            core.push(self.vertex());
        }
        core.push(end);
        let mut links = Vec::with_capacity(length);
        for i in 1..=length {
            let (a, b) = (core[i - 1], core[i]);
            let l = if i == length {
                self.link(LinkKind::Base, i, false, a, b)
            } else if kind == ChainKind::A {
                self.link(LinkKind::A, i, false, a, b)
            } else if variants.contains(&i) {
                self.link(LinkKind::B, i, true, b, a)
            } else {
                self.link(LinkKind::B, i, false, a, b)
            };
            links.push(l);
        }
        Ok(ChainInfo { kind, length, variants: variants.to_vec(), core, links })
    }
}

/// Builds a stand-alone chain; `v(0)` is vertex 0 and `v(t)` is vertex 1.
pub fn gen_chain(kind: ChainKind, length: usize, variants: &[usize]) -> Result<Chain> {
    let mut b = Builder::default();
    let s = b.vertex();
    let t = b.vertex();
    let info = b.chain(kind, length, variants, s, t)?;
    Ok(Chain { graph: b.finish(), info })
}

/// All variant subsets of `1..=length-1`, in binary-counter order.
pub fn variant_subsets(length: usize) -> Vec<Vec<usize>> {
    let k = length - 1;
    (0u64..(1 << k)).map(|mask| (1..=k).filter(|&i| mask & (1 << (i - 1)) != 0).collect()).collect()
}
