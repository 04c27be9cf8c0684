//! Reduction from 3-colourability of plane graphs with degrees 3 and 4 to
//! 1-planarity, and its lift to k-planarity of multigraphs.
//!
//! The skeleton `G1` replaces every face `F` of the source by a U-graph
//! `U(F)` and every vertex `v` by a vertex-block `B(v)` built around a
//! U-graph `U(v)`; `U(v)` and `U(F)` are joined by a `(1)`-grid at every
//! corner. Pending paths complete the instance:
//!
//! * each source edge `vw` gets three `(h)`-paths of length 3 joining the
//!   boundary vertices labelled `h` of `B(v)` and `B(w)`. Labels run
//!   `a, b, c` in rotation order around both blocks, so facing each other
//!   they are mirrored and the three paths cross pairwise, leaving each
//!   with one uncrossed edge;
//! * each block has an `h`-family per colour: one wrap path around every
//!   boundary vertex labelled `h`, crossing either the `(h)`-path leaving it
//!   (activated) or the edge tying it to `U(v)` (not activated), and one
//!   path of length 33 leaving a pocket closed by the `(0)`-blocking path
//!   (two edges) and the `(1)`-blocking path (one edge). Only one of the
//!   three long paths can cross the single `(1)`-edge, so at most one family
//!   per block is activated; the long paths always cross each other
//!   pairwise.
//!
//! Layout of the boundary of `U(v)` for a `k`-valent `v`, in rotation order
//! (see [`HUB`], [`SLOT`]): the hub, then per incident edge `e_j` its slot
//! followed by the grid window of the corner between `e_j` and `e_{j+1}`.
//! Ids: `G1` occupies the vertex and edge id prefixes
//! `0..g1_vertices` and `0..g1_edges`; pending paths follow.

pub mod coloring;
pub mod corpus;
mod witness;

pub use coloring::{improper_edge, parse_coloring, serialize_coloring, three_coloring, Color, Coloring};
pub use witness::{
    activation_report, build_witness, build_witness_k, extract_coloring, find_clash, lift_immersion, BlockActivation, Clash,
};

use crate::embedding::{face_traversal, planarity_test, Planarity, RotationSystem};
use crate::error::{Error, Result};
use crate::families::chains::Builder;
use crate::families::u_graph::{certify, join_windows, place_u_graph, GridType, PlacedU, GRID_WIDTH};
use crate::graph::{EdgeId, Graph};
use crate::immersion::Immersion;
use std::fmt::Write;

/// Version of the gadget layout tables.
pub const GADGET_VERSION: u32 = 1;

/// Hub positions at the start of the boundary of `U(v)`: the pocket
/// `beta0 .. beta1` holds the start vertices of the long paths and is closed
/// by `beta0 - m - gamma` (the `(0)`-blocking path), the connector
/// `gamma - delta` and `delta - beta1` (the `(1)`-blocking path); the long
/// paths end at the `omega` vertices, in the same colour order, so that
/// they cross pairwise.
pub const HUB: [&str; 8] = ["beta0", "tau_a", "tau_b", "tau_c", "beta1", "omega_a", "omega_b", "omega_c"];

/// Slot positions for one incident edge: `r_h` carries the boundary vertex
/// labelled `h`, and the wrap path of the `h`-family runs `x_h - p - y_h`.
pub const SLOT: [&str; 9] = ["x_a", "r_a", "y_a", "x_b", "r_b", "y_b", "x_c", "r_c", "y_c"];

/// Length of the `(h)`-paths between adjacent blocks.
pub const EDGE_PATH_LENGTH: usize = 3;
/// Length of the wrap paths.
pub const WRAP_PATH_LENGTH: usize = 2;
/// Length of the family path that meets the blocking paths.
pub const LONG_PATH_LENGTH: usize = 33;

const SLOT_SPAN: usize = SLOT.len() + GRID_WIDTH;

/// Boundary length of `U(v)` for a `k`-valent vertex.
pub fn block_u_order(k: usize) -> usize {
    HUB.len() + k * SLOT_SPAN
}

/// Boundary length of `U(F)` for a face with `s` corners.
pub fn face_u_order(s: usize) -> usize {
    (GRID_WIDTH * s).max(6)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendingPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeId>,
}

impl PendingPath {
    fn build(b: &mut Builder, from: usize, to: usize, length: usize) -> PendingPath {
        let mut vertices = vec![from];
        vertices.extend((1..length).map(|_| b.vertex()));
        vertices.push(to);
        let edges = vertices.windows(2).map(|w| b.edge(w[0], w[1])).collect();
        PendingPath { vertices, edges }
    }
}

/// A wrap path of an `h`-family around the boundary vertex of one slot.
#[derive(Clone, Debug)]
pub struct WrapPath {
    pub path: PendingPath,
    /// Source edge of the slot.
    pub source_edge: usize,
    /// The `(h)`-path edge at this block, crossed when activated.
    pub active_target: EdgeId,
    /// The edge tying the boundary vertex to `U(v)`, crossed otherwise.
    pub inactive_target: EdgeId,
}

#[derive(Clone, Debug)]
pub struct Family {
    pub color: Color,
    pub wraps: Vec<WrapPath>,
    pub long: PendingPath,
}

impl Family {
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.wraps.iter().flat_map(|w| w.path.edges.iter().copied()).chain(self.long.edges.iter().copied())
    }
}

#[derive(Clone, Debug)]
pub struct VertexBlock {
    pub vertex: usize,
    pub u: PlacedU,
    /// The `3k` boundary vertices in rotation order with their labels.
    pub boundary: Vec<(usize, Color)>,
    /// Edges `r_h - boundary vertex`, per slot and colour.
    pub ties: Vec<[EdgeId; 3]>,
    /// `beta0 - m - gamma`.
    pub zero_path: PendingPath,
    /// `delta - beta1`.
    pub one_path: PendingPath,
    pub connector: EdgeId,
    pub families: [Family; 3],
    /// Vertices of `B(v)` in `G1`.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FaceGadget {
    /// Source vertices at the corners, in walk order.
    pub corners: Vec<usize>,
    pub u: PlacedU,
}

#[derive(Clone, Debug)]
pub struct EdgeGadget {
    pub source_edge: usize,
    /// Source endpoints; every path runs from `B(ends.0)` to `B(ends.1)`.
    pub ends: (usize, usize),
    /// The `(a)`-, `(b)`- and `(c)`-paths.
    pub paths: [PendingPath; 3],
}

#[derive(Clone, Debug)]
pub struct GridGadget {
    pub vertex: usize,
    pub face: usize,
    pub basic_paths: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct ReductionArtifact {
    pub source: Graph,
    pub rotation: RotationSystem,
    pub gbar: Graph,
    pub g1_vertices: usize,
    pub g1_edges: usize,
    pub blocks: Vec<VertexBlock>,
    pub faces: Vec<FaceGadget>,
    pub edges: Vec<EdgeGadget>,
    pub grids: Vec<GridGadget>,
    /// Crossings of the skeleton's immersion (the U-graph diagonals).
    pub base_crossings: Vec<(EdgeId, EdgeId)>,
    pub base_immersion: Immersion,
}

impl ReductionArtifact {
    /// The skeleton `G1` as a graph on the id prefixes.
    pub fn g1(&self) -> Graph {
        Graph::simple(self.g1_vertices, &self.gbar.edges()[..self.g1_edges])
    }

    /// Structured text mapping gadget ids (1-based) to source elements.
    pub fn meta_text(&self) -> String {
        let mut s = String::new();
        let list = |v: &[usize]| v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(s, "gadget-version {GADGET_VERSION}");
        let _ = writeln!(s, "gbar {} {}", self.gbar.n(), self.gbar.m());
        let _ = writeln!(s, "g1 {} {}", self.g1_vertices, self.g1_edges);
        for b in &self.blocks {
            let _ = writeln!(s, "block {} u-boundary {}", b.vertex + 1, list(b.u.boundary()));
            let labels: Vec<String> = b.boundary.iter().map(|(v, c)| format!("{}:{c}", v + 1)).collect();
            let _ = writeln!(s, "block {} labels {}", b.vertex + 1, labels.join(" "));
            let _ = writeln!(s, "block {} zero-path {}", b.vertex + 1, list(&b.zero_path.vertices));
            let _ = writeln!(s, "block {} one-path {}", b.vertex + 1, list(&b.one_path.vertices));
            for f in &b.families {
                let _ = writeln!(s, "block {} family {} long {}", b.vertex + 1, f.color, list(&f.long.vertices));
                for w in &f.wraps {
                    let _ = writeln!(s, "block {} family {} wrap {}", b.vertex + 1, f.color, list(&w.path.vertices));
                }
            }
        }
        for (i, f) in self.faces.iter().enumerate() {
            let _ = writeln!(s, "face {} corners {} u-boundary {}", i + 1, list(&f.corners), list(f.u.boundary()));
        }
        for e in &self.edges {
            for (c, p) in Color::ALL.iter().zip(&e.paths) {
                let _ = writeln!(s, "edge {} {} {} path {c} {}", e.source_edge + 1, e.ends.0 + 1, e.ends.1 + 1, list(&p.vertices));
            }
        }
        s
    }
}

/// Checks the source contract and returns its rotation (computed when not
/// supplied).
pub fn validate_source(g: &Graph, rotation: Option<&RotationSystem>) -> Result<RotationSystem> {
    if g.is_multigraph() {
        return Err(Error::Reduction("source must be a simple graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Reduction("source must be connected".into()));
    }
    if let Some(v) = g.degrees().iter().position(|&d| !(3..=4).contains(&d)) {
        return Err(Error::Reduction(format!("vertex {} has degree {}; degrees must be 3 or 4", v + 1, g.degrees()[v])));
    }
    let rot = match rotation {
        Some(r) => r.clone(),
        None => match planarity_test(g) {
            Planarity::Planar(r) => r,
            Planarity::NonPlanar => return Err(Error::NonPlanar),
        },
    };
    if !face_traversal(g, &rot)?.is_plane() {
        return Err(Error::Reduction("rotation is not a plane embedding".into()));
    }
    Ok(rot)
}

pub fn build_reduction(g: &Graph, rotation: Option<&RotationSystem>) -> Result<ReductionArtifact> {
    let rot = validate_source(g, rotation)?;
    let faces = face_traversal(g, &rot)?.faces;
    let slot_of = |v: usize, e: EdgeId| rot.rot[v].iter().position(|&x| x == e).expect("edge at vertex");
    let mut b = Builder::default();

    // Skeleton: blocks.
    struct Raw {
        u: PlacedU,
        boundary: Vec<(usize, Color)>,
        ties: Vec<[EdgeId; 3]>,
        zero: PendingPath,
        one: PendingPath,
        connector: EdgeId,
        extra: Vec<usize>,
    }
    let mut raw = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let k = rot.rot[v].len();
        let u = place_u_graph(&mut b, block_u_order(k))?;
        let bd = u.boundary().to_vec();
        let mut boundary = Vec::with_capacity(3 * k);
        let mut ties = Vec::with_capacity(k);
        for j in 0..k {
            let base = HUB.len() + j * SLOT_SPAN;
            let mut t = [0; 3];
            for c in Color::ALL {
                let h = b.vertex();
                t[c.index()] = b.edge(bd[base + 3 * c.index() + 1], h);
                boundary.push((h, c));
            }
            ties.push(t);
        }
        let (m, gamma, delta) = (b.vertex(), b.vertex(), b.vertex());
        let zero = PendingPath { vertices: vec![bd[0], m, gamma], edges: vec![b.edge(bd[0], m), b.edge(m, gamma)] };
        let connector = b.edge(gamma, delta);
        let one = PendingPath { vertices: vec![delta, bd[4]], edges: vec![b.edge(delta, bd[4])] };
        let mut extra: Vec<usize> = boundary.iter().map(|&(h, _)| h).collect();
        extra.extend([m, gamma, delta]);
        raw.push(Raw { u, boundary, ties, zero, one, connector, extra });
    }

    // Skeleton: faces and grids.
    let mut face_gadgets = Vec::with_capacity(faces.len());
    let mut grids = Vec::new();
    for (fi, walk) in faces.iter().enumerate() {
        let s = walk.len();
        let u = place_u_graph(&mut b, face_u_order(s))?;
        let mut corners = Vec::with_capacity(s);
        for i in 0..s {
            let (_, e_in) = walk[i];
            let (h, e_out) = walk[(i + 1) % s];
            let k = rot.rot[h].len();
            let j = slot_of(h, e_in);
            if rot.rot[h][(j + 1) % k] != e_out {
                return Err(Error::Reduction("face walk does not follow the rotation".into()));
            }
            let vb = raw[h].u.boundary();
            let start = HUB.len() + j * SLOT_SPAN + SLOT.len();
            let w1: Vec<usize> = (0..GRID_WIDTH).map(|t| vb[start + t]).collect();
            let w2: Vec<usize> = (0..GRID_WIDTH).map(|t| u.boundary()[GRID_WIDTH * i + t]).collect();
            grids.push(GridGadget { vertex: h, face: fi, basic_paths: join_windows(&mut b, &w1, &w2, GridType::One) });
            corners.push(h);
        }
        face_gadgets.push(FaceGadget { corners, u });
    }
    let g1_vertices = b.n;
    let g1_edges = b.edges.len();
    let base_crossings: Vec<(EdgeId, EdgeId)> =
        raw.iter().map(|r| &r.u).chain(face_gadgets.iter().map(|f| &f.u)).flat_map(|u| u.crossings.iter().copied()).collect();

    // Pending paths between blocks.
    let mut edge_gadgets = Vec::with_capacity(g.m());
    for e in 0..g.m() {
        let (v, w) = g.endpoints(e);
        let (jv, jw) = (slot_of(v, e), slot_of(w, e));
        let paths = Color::ALL.map(|c| {
            let from = raw[v].boundary[3 * jv + c.index()].0;
            let to = raw[w].boundary[3 * jw + c.index()].0;
            PendingPath::build(&mut b, from, to, EDGE_PATH_LENGTH)
        });
        edge_gadgets.push(EdgeGadget { source_edge: e, ends: (v, w), paths });
    }

    // Families.
    let mut blocks = Vec::with_capacity(g.n());
    for (v, r) in raw.into_iter().enumerate() {
        let bd = r.u.boundary().to_vec();
        let families = Color::ALL.map(|c| {
            let wraps = rot.rot[v]
                .iter()
                .enumerate()
                .map(|(j, &e)| {
                    let base = HUB.len() + j * SLOT_SPAN + 3 * c.index();
                    let path = PendingPath::build(&mut b, bd[base], bd[base + 2], WRAP_PATH_LENGTH);
                    let gadget = &edge_gadgets[e];
                    let p = &gadget.paths[c.index()];
                    let active_target = if gadget.ends.0 == v { p.edges[0] } else { p.edges[EDGE_PATH_LENGTH - 1] };
                    WrapPath { path, source_edge: e, active_target, inactive_target: r.ties[j][c.index()] }
                })
                .collect();
            let long = PendingPath::build(&mut b, bd[1 + c.index()], bd[5 + c.index()], LONG_PATH_LENGTH);
            Family { color: c, wraps, long }
        });
        let mut vertices: Vec<usize> = r.u.vertices().collect();
        vertices.extend(&r.extra);
        blocks.push(VertexBlock {
            vertex: v,
            u: r.u,
            boundary: r.boundary,
            ties: r.ties,
            zero_path: r.zero,
            one_path: r.one,
            connector: r.connector,
            families,
            vertices,
        });
    }

    let gbar = b.finish();
    let g1 = Graph::simple(g1_vertices, &gbar.edges()[..g1_edges]);
    let base_immersion = certify(&g1, &base_crossings)?;
    Ok(ReductionArtifact {
        source: g.clone(),
        rotation: rot,
        gbar,
        g1_vertices,
        g1_edges,
        blocks,
        faces: face_gadgets,
        edges: edge_gadgets,
        grids,
        base_crossings,
        base_immersion,
    })
}

/// `G(k)`: the instance with every edge replaced by `k` parallel edges.
#[derive(Clone, Debug)]
pub struct ReductionArtifactK {
    pub base: ReductionArtifact,
    pub k: usize,
    pub gbar: Graph,
}

pub fn build_reduction_k(g: &Graph, rotation: Option<&RotationSystem>, k: usize) -> Result<ReductionArtifactK> {
    if k == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let base = build_reduction(g, rotation)?;
    let gbar = base.gbar.multiply_edges(k)?;
    Ok(ReductionArtifactK { base, k, gbar })
}

/// Repeatedly deletes vertices of degree at most 2 (this preserves
/// 3-colourability); returns the remaining graph and the kept vertices.
pub fn strip_low_degree(g: &Graph) -> (Graph, Vec<usize>) {
    let mut removed = vec![false; g.n()];
    loop {
        let mut deg = vec![0usize; g.n()];
        for &(u, v) in g.edges() {
            if !removed[u] && !removed[v] {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        let low: Vec<usize> = (0..g.n()).filter(|&v| !removed[v] && deg[v] <= 2).collect();
        if low.is_empty() {
            break;
        }
        for v in low {
            removed[v] = true;
        }
    }
    g.remove_vertices(&removed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::immersion::verify;

    #[test]
    fn prism_structure() {
        let art = build_reduction(&named::prism(), None).unwrap();
        assert!(verify(&art.base_immersion, 1).is_empty());
        for b in &art.blocks {
            assert_eq!(b.boundary.len(), 9);
            let labels: Vec<Color> = b.boundary.iter().map(|&(_, c)| c).collect();
            assert!(labels.chunks(3).all(|c| c == Color::ALL));
            assert!(b.vertices.iter().all(|&v| v < art.g1_vertices));
            for f in &b.families {
                assert_eq!(f.long.edges.len(), LONG_PATH_LENGTH);
                assert_eq!(f.wraps.len(), 3);
            }
            assert_eq!(b.u.n() * 4, 4 * block_u_order(3));
            assert!(4 * b.u.n() >= 28 * 3);
        }
        assert_eq!(art.edges.len(), 9);
        assert!(art.edges.iter().all(|e| e.paths.iter().all(|p| p.edges.len() == EDGE_PATH_LENGTH)));
        assert_eq!(art.faces.len(), 5);
        assert_eq!(art.grids.len(), 18);
    }

    #[test]
    fn k4_has_eighteen_edge_paths() {
        let art = build_reduction(&named::complete(4), None).unwrap();
        assert_eq!(art.edges.iter().map(|e| e.paths.len()).sum::<usize>(), 18);
    }

    #[test]
    fn face_u_graphs_use_every_boundary_vertex() {
        let art = build_reduction(&named::cube(), None).unwrap();
        let mut touched = vec![false; art.gbar.n()];
        for gr in &art.grids {
            for p in &gr.basic_paths {
                touched[*p.last().unwrap()] = true;
            }
        }
        for f in &art.faces {
            assert!(f.u.boundary().iter().all(|&v| touched[v]));
        }
    }

    #[test]
    fn bad_sources_are_rejected() {
        let w5 = {
            let mut e: Vec<(usize, usize)> = (1..6).map(|i| (0, i)).collect();
            e.extend((1..6).map(|i| (i, i % 5 + 1)));
            Graph::simple(6, &e)
        };
        assert!(build_reduction(&w5, None).unwrap_err().to_string().contains("degree"));
        assert!(build_reduction(&named::cycle(5), None).is_err());
        assert!(build_reduction(&named::complete_bipartite(3, 3), None).is_err());
    }

    #[test]
    fn stripping_low_degree_vertices() {
        let mut edges = named::prism().edges().to_vec();
        edges.push((0, 6));
        edges.push((6, 7));
        let (g, kept) = strip_low_degree(&Graph::simple(8, &edges));
        assert_eq!(kept, (0..6).collect::<Vec<_>>());
        assert_eq!(g.m(), 9);
    }
}
