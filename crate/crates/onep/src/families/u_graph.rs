//! U-graphs and grids joining them.
//!
//! The U-graph of order `4n` has four concentric `n`-cycles `R_0` (outer,
//! the boundary) to `R_3`. Consecutive rings are joined by spokes
//! `R_i[j] R_{i+1}[j]` and by both diagonals of every quadrilateral
//! `R_i[j] R_i[j+1] R_{i+1}[j+1] R_{i+1}[j]`: `4n` ring edges, `3n` spokes
//! and `6n` diagonals, `13n` edges in all. Its companion immersion crosses
//! the two diagonals of every quadrilateral and leaves the boundary cycle
//! uncrossed.
//!
//! A `(1)`-grid joins seven consecutive boundary vertices of one U-graph to
//! seven of another by single edges (the basic paths); a `(2)`-grid uses
//! paths of length 2 and joins the middle vertices of neighbouring basic
//! paths. Grids add no crossings.

use super::chains::Builder;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::immersion::{embed_crossings, trivial_order, Immersion};

/// Window width of a grid.
pub const GRID_WIDTH: usize = 7;

/// A U-graph placed into a larger graph.
#[derive(Clone, Debug)]
pub struct PlacedU {
    /// `rings[0]` is the boundary cycle, vertices `1..=n` in order.
    pub rings: [Vec<usize>; 4],
    pub edges: Vec<EdgeId>,
    /// Crossing diagonal pairs of the companion immersion.
    pub crossings: Vec<(EdgeId, EdgeId)>,
}

impl PlacedU {
    pub fn n(&self) -> usize {
        self.rings[0].len()
    }

    pub fn boundary(&self) -> &[usize] {
        &self.rings[0]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.rings.iter().flatten().copied()
    }
}

pub(crate) fn place_u_graph(b: &mut Builder, n: usize) -> Result<PlacedU> {
    if n < 6 {
        return Err(Error::Param(format!("U-graph needs n >= 6, got {n}")));
    }
    let rings: [Vec<usize>; 4] = std::array::from_fn(|_| (0..n).map(|_| b.vertex()).collect());
    let mut edges = Vec::with_capacity(13 * n);
    let mut crossings = Vec::with_capacity(3 * n);
    for r in &rings {
        for j in 0..n {
            edges.push(b.edge(r[j], r[(j + 1) % n]));
        }
    }
    for i in 0..3 {
        let (outer, inner) = (&rings[i], &rings[i + 1]);
        for j in 0..n {
            let k = (j + 1) % n;
            edges.push(b.edge(outer[j], inner[j]));
            let d1 = b.edge(outer[j], inner[k]);
            let d2 = b.edge(outer[k], inner[j]);
            edges.extend([d1, d2]);
            crossings.push((d1, d2));
        }
    }
    Ok(PlacedU { rings, edges, crossings })
}

/// A stand-alone U-graph with its companion immersion.
#[derive(Clone, Debug)]
pub struct UGraph {
    pub graph: Graph,
    pub placed: PlacedU,
    pub immersion: Immersion,
}

impl UGraph {
    pub fn boundary(&self) -> &[usize] {
        self.placed.boundary()
    }
}

pub fn gen_u_graph(n: usize) -> Result<UGraph> {
    let mut b = Builder::default();
    let placed = place_u_graph(&mut b, n)?;
    let graph = b.finish();
    let immersion = certify(&graph, &placed.crossings)?;
    Ok(UGraph { graph, placed, immersion })
}

pub(crate) fn certify(g: &Graph, crossings: &[(EdgeId, EdgeId)]) -> Result<Immersion> {
    let order = trivial_order(g.m(), crossings)?;
    embed_crossings(g, crossings, &order)?.ok_or_else(|| Error::Immersion("companion drawing is not plane".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GridType {
    One,
    Two,
}

impl GridType {
    pub fn path_length(self) -> usize {
        match self {
            GridType::One => 1,
            GridType::Two => 2,
        }
    }
}

/// Tracks which boundary positions of a U-graph are taken by grid windows.
#[derive(Clone, Debug)]
pub struct WindowSet {
    taken: Vec<bool>,
}

impl WindowSet {
    pub fn new(boundary_len: usize) -> Self {
        WindowSet { taken: vec![false; boundary_len] }
    }

    /// Claims `GRID_WIDTH` consecutive positions from `start`, cyclically.
    pub fn claim(&mut self, start: usize) -> Result<Vec<usize>> {
        let n = self.taken.len();
        if n < GRID_WIDTH {
            return Err(Error::Param(format!("boundary of length {n} is shorter than a grid window")));
        }
        let pos: Vec<usize> = (0..GRID_WIDTH).map(|i| (start + i) % n).collect();
        if let Some(&p) = pos.iter().find(|&&p| self.taken[p]) {
            return Err(Error::Param(format!("grid windows overlap at boundary vertex {}", p + 1)));
        }
        for &p in &pos {
            self.taken[p] = true;
        }
        Ok(pos)
    }
}

/// Adds the basic paths between two windows (listed so that position `i`
/// of one faces position `i` of the other); returns them as vertex lists.
pub(crate) fn join_windows(b: &mut Builder, w1: &[usize], w2: &[usize], grid: GridType) -> Vec<Vec<usize>> {
    let paths: Vec<Vec<usize>> = w1
        .iter()
        .zip(w2)
        .map(|(&x, &y)| match grid {
            GridType::One => vec![x, y],
            GridType::Two => vec![x, b.vertex(), y],
        })
        .collect();
    for p in &paths {
        for w in p.windows(2) {
            b.edge(w[0], w[1]);
        }
    }
    if grid == GridType::Two {
        for w in paths.windows(2) {
            b.edge(w[0][1], w[1][1]);
        }
    }
    paths
}

/// Grid between U-graphs `a` and `b` of a [`gen_grid_joins`] call, with
/// window start positions (0-based boundary indices).
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    pub a: usize,
    pub b: usize,
    pub start_a: usize,
    pub start_b: usize,
    pub grid: GridType,
}

#[derive(Clone, Debug)]
pub struct GridJoin {
    pub graph: Graph,
    pub u_graphs: Vec<PlacedU>,
    /// Basic paths `P_1..P_7` of every grid, as vertex lists.
    pub basic_paths: Vec<Vec<Vec<usize>>>,
    pub immersion: Immersion,
}

/// U-graphs of the given orders joined by grids whose windows must be
/// pairwise disjoint on every U-graph.
pub fn gen_grid_joins(orders: &[usize], grids: &[GridSpec]) -> Result<GridJoin> {
    let mut b = Builder::default();
    let u_graphs = orders.iter().map(|&n| place_u_graph(&mut b, n)).collect::<Result<Vec<_>>>()?;
    let mut windows: Vec<WindowSet> = u_graphs.iter().map(|u| WindowSet::new(u.n())).collect();
    let mut basic_paths = Vec::new();
    for g in grids {
        if g.a >= u_graphs.len() || g.b >= u_graphs.len() || g.a == g.b {
            return Err(Error::Param(format!("grid joins U-graphs {} and {}", g.a + 1, g.b + 1)));
        }
        let wa: Vec<usize> = windows[g.a].claim(g.start_a)?.iter().map(|&p| u_graphs[g.a].boundary()[p]).collect();
        // The second window runs the other way round its boundary so that
        // the two windows face each other.
        let mut wb: Vec<usize> = windows[g.b].claim(g.start_b)?.iter().map(|&p| u_graphs[g.b].boundary()[p]).collect();
        wb.reverse();
        basic_paths.push(join_windows(&mut b, &wa, &wb, g.grid));
    }
    let crossings: Vec<(EdgeId, EdgeId)> = u_graphs.iter().flat_map(|u| u.crossings.iter().copied()).collect();
    let graph = b.finish();
    let immersion = certify(&graph, &crossings)?;
    Ok(GridJoin { graph, u_graphs, basic_paths, immersion })
}

/// Two U-graphs of orders `4 n1` and `4 n2` joined by one grid.
pub fn gen_grid_join(n1: usize, n2: usize, grid: GridType, start1: usize, start2: usize) -> Result<GridJoin> {
    gen_grid_joins(&[n1, n2], &[GridSpec { a: 0, b: 1, start_a: start1, start_b: start2, grid }])
}
