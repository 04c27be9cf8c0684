//! Finite labeled graphs and multigraphs.
//!
//! Vertices are `0..n`; edges are kept in insertion order and addressed by
//! their position (`EdgeId`). Deleting an edge shifts every later id down by
//! one, so persisted reports refer to edges by endpoint pair.

use crate::error::{Error, Result};
use std::collections::HashSet;

/// Position of an edge in a graph's edge list.
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    multigraph: bool,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and (for
    /// simple graphs) parallel edges.
    pub fn build(n: usize, edges: Vec<(usize, usize)>, multigraph: bool) -> Result<Graph> {
        let mut seen = HashSet::new();
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !multigraph && !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(Graph { n, edges, multigraph })
    }

    /// Simple graph from an edge list; panics on invalid input. Meant for
    /// generators and tests whose input is known to be well formed.
    pub fn simple(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::build(n, edges.to_vec(), false).expect("well-formed simple graph")
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), multigraph: false }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_multigraph(&self) -> bool {
        self.multigraph
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    /// True if the graph has no parallel edges (regardless of the flag).
    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = HashSet::new();
        !self.edges.iter().all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    /// Removes edge `e`; edges after `e` shift down by one.
    pub fn delete_edge(&self, e: EdgeId) -> Result<Graph> {
        if e >= self.edges.len() {
            return Err(Error::EdgeOutOfRange(e));
        }
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Graph { n: self.n, edges, multigraph: self.multigraph })
    }

    /// Replaces every edge by `k` parallel copies; copies of edge `i` get ids
    /// `k*i .. k*i+k-1`.
    pub fn multiply_edges(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let edges = self.edges.iter().flat_map(|&e| std::iter::repeat(e).take(k)).collect();
        Ok(Graph { n: self.n, edges, multigraph: true })
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Incidence lists: for each vertex, `(neighbor, edge id)` in edge order.
    pub fn incidence(&self) -> Vec<Vec<(usize, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        adj
    }

    /// Sorted, deduplicated neighbor lists.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        adj
    }

    /// Dense adjacency matrix (edge counts).
    pub fn adjacency_matrix(&self) -> Vec<Vec<u32>> {
        let mut a = vec![vec![0u32; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] += 1;
            a[v][u] += 1;
        }
        a
    }

    /// First edge id joining `u` and `v`, if any.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.edges.iter().position(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    pub fn adjacent_edges(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    /// Connected components as a label per vertex plus the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        components_of(self.n, &self.edges)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().1 == 1
    }

    /// True iff the graph has at least four vertices and stays connected
    /// after deleting any one or two vertices.
    pub fn is_3_connected(&self) -> bool {
        if self.n < 4 || !self.is_connected() {
            return false;
        }
        let mut removed = vec![false; self.n];
        for a in 0..self.n {
            removed[a] = true;
            for b in a..self.n {
                removed[b] = true;
                if !self.remove_vertices(&removed).0.is_connected() {
                    return false;
                }
                removed[b] = b == a;
            }
            removed[a] = false;
        }
        true
    }

    /// Subgraph induced by deleting the vertices in `removed`; returns the
    /// graph and the map from new to old vertex ids.
    pub fn remove_vertices(&self, removed: &[bool]) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.n];
        let mut old = Vec::new();
        for v in 0..self.n {
            if !removed[v] {
                new_id[v] = old.len();
                old.push(v);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| !removed[u] && !removed[v])
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        (Graph { n: old.len(), edges, multigraph: self.multigraph }, old)
    }

    /// Appends `other` as a disjoint copy, returning the vertex offset.
    pub fn append_disjoint(&mut self, other: &Graph) -> usize {
        let off = self.n;
        self.n += other.n;
        self.edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        self.multigraph |= other.multigraph;
        off
    }

    pub(crate) fn raw(n: usize, edges: Vec<(usize, usize)>, multigraph: bool) -> Graph {
        Graph { n, edges, multigraph }
    }
}

pub(crate) fn components_of(n: usize, edges: &[(usize, usize)]) -> (Vec<usize>, usize) {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut comp = vec![0; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        comp[v] = label[r];
    }
    (comp, count)
}

/// Small named graphs used across tests, examples and the CLI.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::simple(n, &e)
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::simple(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    pub fn path(n: usize) -> Graph {
        Graph::simple(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..a {
            for j in 0..b {
                e.push((i, a + j));
            }
        }
        Graph::simple(a + b, &e)
    }

    /// K_7 with the edges of a triangle on vertices 0, 1, 2 removed.
    pub fn k7_minus_triangle() -> Graph {
        let k = complete(7);
        let e: Vec<_> = k.edges().iter().copied().filter(|&(u, v)| !(u < 3 && v < 3)).collect();
        Graph::simple(7, &e)
    }

    pub fn cube() -> Graph {
        let mut e = Vec::new();
        for v in 0..8usize {
            for b in 0..3 {
                let w = v ^ (1 << b);
                if v < w {
                    e.push((v, w));
                }
            }
        }
        Graph::simple(8, &e)
    }

    pub fn octahedron() -> Graph {
        let mut e = Vec::new();
        for i in 0..6usize {
            for j in i + 1..6 {
                if j != i + 3 {
                    e.push((i, j));
                }
            }
        }
        Graph::simple(6, &e)
    }

    /// Triangular prism: triangles 0-1-2 and 3-4-5 joined by 0-3, 1-4, 2-5.
    pub fn prism() -> Graph {
        Graph::simple(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    }

    /// Prism over an `n`-gon (`n >= 3`).
    pub fn prism_n(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            e.push((i, (i + 1) % n));
            e.push((n + i, n + (i + 1) % n));
            e.push((i, n + i));
        }
        Graph::simple(2 * n, &e)
    }

    /// Antiprism over an `n`-gon (`n >= 3`): two `n`-cycles joined by a
    /// zig-zag band of triangles.
    pub fn antiprism(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            let j = (i + 1) % n;
            e.extend([(i, j), (n + i, n + j), (i, n + i), (i, n + j)]);
        }
        Graph::simple(2 * n, &e)
    }

    pub fn dodecahedron() -> Graph {
        // Outer 5-cycle, middle 10-cycle, inner 5-cycle.
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, 5 + 2 * i));
            e.push((15 + i, 15 + (i + 1) % 5));
            e.push((15 + i, 5 + (2 * i + 1) % 10));
        }
        for i in 0..10 {
            e.push((5 + i, 5 + (i + 1) % 10));
        }
        Graph::simple(20, &e)
    }

    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::simple(10, &e)
    }

    /// Cartesian product of two graphs.
    pub fn cartesian(a: &Graph, b: &Graph) -> Graph {
        let mut e = Vec::new();
        let nb = b.n();
        for &(u, v) in a.edges() {
            for j in 0..nb {
                e.push((u * nb + j, v * nb + j));
            }
        }
        for i in 0..a.n() {
            for &(u, v) in b.edges() {
                e.push((i * nb + u, i * nb + v));
            }
        }
        Graph::simple(a.n() * nb, &e)
    }
}
