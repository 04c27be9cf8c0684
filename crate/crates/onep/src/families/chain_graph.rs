//! Chain graphs: `K_{3,3}` with the three edges at one vertex replaced by
//! A-chains and the three edges at a vertex of the same colour class
//! replaced by B-chains, plus certificates that every single-edge deletion
//! is 1-planar.
//!
//! Vertex layout: `Ω = 0`, `A = 1`, `B = 2`, base vertices `Ω(1..=3) = 3..=5`,
//! then chain vertices in chain order. Edges `0..3` are the Ω-edges
//! `Ω Ω(i)`; chain edges follow, A-chains first.

use super::chains::{Builder, ChainInfo, ChainKind, PlacedLink};
use super::links::LinkKind;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::immersion::Immersion;
use crate::solver::search_with_candidates;

/// Chain lengths and per-B-chain variant positions; chain `i` ends at
/// `Ω(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainSpec {
    pub a_lengths: [usize; 3],
    pub b_lengths: [usize; 3],
    pub b_variants: [Vec<usize>; 3],
}

impl ChainSpec {
    pub fn plain(a_lengths: [usize; 3], b_lengths: [usize; 3]) -> Self {
        ChainSpec { a_lengths, b_lengths, b_variants: Default::default() }
    }

    /// Vertex count: six branch vertices plus the interior of each chain.
    pub fn order(&self) -> usize {
        6 + self.a_lengths.iter().map(|&t| 3 * t).sum::<usize>() + self.b_lengths.iter().map(|&t| 4 * t - 1).sum::<usize>()
    }

    /// Edge count: three Ω-edges plus the links.
    pub fn size(&self) -> usize {
        use super::chains::chain_size;
        3 + self.a_lengths.iter().map(|&t| chain_size(ChainKind::A, t)).sum::<usize>()
            + self.b_lengths.iter().map(|&t| chain_size(ChainKind::B, t)).sum::<usize>()
    }
}

#[derive(Clone, Debug)]
pub struct ChainGraph {
    pub spec: ChainSpec,
    pub graph: Graph,
    pub omega: usize,
    pub a: usize,
    pub b: usize,
    pub base: [usize; 3],
    pub omega_edges: [EdgeId; 3],
    pub a_chains: Vec<ChainInfo>,
    pub b_chains: Vec<ChainInfo>,
}

impl ChainGraph {
    pub fn chains(&self) -> impl Iterator<Item = &ChainInfo> {
        self.a_chains.iter().chain(self.b_chains.iter())
    }

    /// The link containing edge `e`, with its chain; `None` for Ω-edges.
    pub fn link_of(&self, e: EdgeId) -> Option<(&ChainInfo, &PlacedLink)> {
        self.chains().find_map(|c| c.links.iter().find(|l| l.edges.contains(&e)).map(|l| (c, l)))
    }

    /// Contracts every chain to a single edge between its end vertices; the
    /// result on the six branch vertices must be `K_{3,3}`.
    pub fn contracted_skeleton(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.omega_edges.iter().map(|&e| self.graph.endpoints(e)).collect();
        out.extend(self.chains().map(|c| (c.core[0], *c.core.last().unwrap())));
        out
    }
}

pub fn gen_chain_graph(spec: &ChainSpec) -> Result<ChainGraph> {
    let mut b = Builder::default();
    let omega = b.vertex();
    let av = b.vertex();
    let bv = b.vertex();
    let base = [b.vertex(), b.vertex(), b.vertex()];
    let omega_edges = [b.edge(omega, base[0]), b.edge(omega, base[1]), b.edge(omega, base[2])];
    let mut a_chains = Vec::new();
    for i in 0..3 {
        a_chains.push(b.chain(ChainKind::A, spec.a_lengths[i], &[], av, base[i])?);
    }
    let mut b_chains = Vec::new();
    for i in 0..3 {
        b_chains.push(b.chain(ChainKind::B, spec.b_lengths[i], &spec.b_variants[i], bv, base[i])?);
    }
    Ok(ChainGraph { spec: spec.clone(), graph: b.finish(), omega, a: av, b: bv, base, omega_edges, a_chains, b_chains })
}

/// Chain lengths `(ℓ, t)` with `2 ≤ ℓ ≤ 5`, `t ≥ 4` and `n = 35 + 3ℓ + 4t`,
/// for the configuration with A-lengths `(2, 2, ℓ)` and B-lengths
/// `(2, 3, t)`. `ℓ` is fixed by `n mod 4`.
pub fn order_parameters(n: usize) -> Option<(usize, usize)> {
    let l = [3, 2, 5, 4][n % 4];
    let rest = n.checked_sub(35 + 3 * l)?;
    (rest % 4 == 0 && rest / 4 >= 4).then_some((l, rest / 4))
}

/// Edge ids of `g - e` in terms of ids of `g`.
fn shift(e: EdgeId, f: EdgeId) -> EdgeId {
    if f > e {
        f - 1
    } else {
        f
    }
}

const SEARCH_NODES: u64 = 2_000_000;

/// A 1-immersion of the chain graph minus edge `e`.
///
/// Deleting an Ω-edge leaves a planar graph. Otherwise the drawing is found
/// by a bounded search around the link `L` that lost `e`: the three Ω-edges
/// may cross edges of `L`, or, for the middle edge of a B-link, the edges of
/// an A-link may cross `L`. Every returned certificate has
/// passed verification at `k = 1`.
pub fn immersions_of_deleted_edge(cg: &ChainGraph, e: EdgeId) -> Result<Immersion> {
    let g = cg.graph.delete_edge(e)?;
    if cg.omega_edges.contains(&e) {
        return search_with_candidates(&g, &[], 0, 1).ok_or_else(|| Error::Immersion("Ω-edge deletion is not planar".into()));
    }
    let (_, link) = cg.link_of(e).expect("every other edge lies in a link");
    let rest: Vec<EdgeId> = link.edges.iter().filter(|&&f| f != e).map(|&f| shift(e, f)).collect();
    let omega: Vec<EdgeId> = cg.omega_edges.iter().map(|&f| shift(e, f)).collect();
    let mut strategies: Vec<(Vec<(EdgeId, EdgeId)>, usize)> = Vec::new();
    strategies.push((cross(&omega, &rest), 3));
    if link.middle_edge == Some(e) {
        // An A-link threads through the opened link: its two noncore
        // vertices sit in the two faces of the link, each A-link edge
        // crossing one link edge.
        for c in &cg.a_chains {
            for l in c.links.iter().filter(|l| l.kind == LinkKind::A) {
                let ids: Vec<EdgeId> = l.edges.iter().map(|&f| shift(e, f)).collect();
                strategies.push((cross(&ids, &rest), 5));
            }
        }
    }
    for (cand, k) in strategies {
        if let Some(w) = search_with_candidates(&g, &cand, k, SEARCH_NODES) {
            return Ok(w);
        }
    }
    Err(Error::Immersion(format!("no certificate found for edge {e}")))
}

fn cross(a: &[EdgeId], b: &[EdgeId]) -> Vec<(EdgeId, EdgeId)> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect()
}
