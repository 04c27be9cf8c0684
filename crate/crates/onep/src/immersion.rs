//! k-immersions: crossing sets, planarization and certificate verification.
//!
//! Planarization numbering (used by the certificate format): vertices `0..n`
//! are the base vertices and `n + i` is the dummy of crossing `i`. Segments
//! are numbered edge by edge in EdgeId order; the segments of edge `e = (u, v)`
//! with crossing order `x_1, ..., x_k` (listed from `u`) are, consecutively,
//! `u - d(x_1)`, `d(x_1) - d(x_2)`, ..., `d(x_k) - v`.

use crate::embedding::{face_traversal, planarity_test, Planarity, RotationSystem};
use crate::error::{parse_err, Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::io::{self, Lines};
use std::collections::HashSet;
use std::fmt::{self, Write};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Immersion {
    pub base: Graph,
    /// Crossing `i` is the unordered pair `crossings[i]`.
    pub crossings: Vec<(EdgeId, EdgeId)>,
    /// For every edge, its crossing ids in order from its first endpoint.
    pub order: Vec<Vec<usize>>,
    /// Rotation system of the planarization.
    pub rotation: RotationSystem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarizedGraph {
    pub graph: Graph,
    /// Segment ids of every base edge, from its first endpoint.
    pub segment_map: Vec<Vec<EdgeId>>,
    /// Crossing pair of dummy `n + i`.
    pub dummy_map: Vec<(EdgeId, EdgeId)>,
}

impl PlanarizedGraph {
    /// Base edge owning each segment.
    pub fn segment_owner(&self) -> Vec<EdgeId> {
        let mut owner = vec![0; self.graph.m()];
        for (e, segs) in self.segment_map.iter().enumerate() {
            for &s in segs {
                owner[s] = e;
            }
        }
        owner
    }

    /// Contracts every dummy path back into one edge (segments run from the
    /// edge's first endpoint to its second).
    pub fn contract(&self) -> Vec<(usize, usize)> {
        self.segment_map
            .iter()
            .map(|segs| (self.graph.endpoints(segs[0]).0, self.graph.endpoints(*segs.last().unwrap()).1))
            .collect()
    }
}

/// Why a certificate fails verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Malformed crossing list or order (bad ids, self pairs, adjacent
    /// edges, repeated pairs, order not matching the crossings).
    Structure(String),
    /// An edge takes part in more than `k` crossings.
    TooManyCrossings { edge: EdgeId, count: usize, k: usize },
    /// The rotation at a dummy does not alternate the two edges: a touching,
    /// not a crossing.
    NotAlternating { crossing: usize },
    /// Rotation does not cover the planarization's edge-ends exactly once.
    Rotation(String),
    /// Euler check failed: V - E + F per component.
    NotPlane { euler: Vec<i64> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Structure(s) => write!(f, "structure: {s}"),
            Violation::TooManyCrossings { edge, count, k } => {
                write!(f, "edge {} is crossed {count} times (k = {k})", edge + 1)
            }
            Violation::NotAlternating { crossing } => {
                write!(f, "crossing {} is a touching: rotation does not alternate", crossing + 1)
            }
            Violation::Rotation(s) => write!(f, "rotation: {s}"),
            Violation::NotPlane { euler } => write!(f, "not a plane embedding: V-E+F per component = {euler:?}"),
        }
    }
}

/// Order lists implied by a crossing set in which no edge is crossed twice.
pub fn trivial_order(m: usize, crossings: &[(EdgeId, EdgeId)]) -> Result<Vec<Vec<usize>>> {
    let mut order = vec![Vec::new(); m];
    for (i, &(e, f)) in crossings.iter().enumerate() {
        for x in [e, f] {
            if x >= m {
                return Err(Error::EdgeOutOfRange(x));
            }
            order[x].push(i);
            if order[x].len() > 1 {
                return Err(Error::Immersion(format!("edge {x} needs an explicit crossing order")));
            }
        }
    }
    Ok(order)
}

fn check_structure(g: &Graph, crossings: &[(EdgeId, EdgeId)], order: &[Vec<usize>]) -> std::result::Result<(), String> {
    let m = g.m();
    let mut seen = HashSet::new();
    let mut count = vec![0usize; m];
    for (i, &(e, f)) in crossings.iter().enumerate() {
        if e >= m || f >= m {
            return Err(format!("crossing {} uses an edge id out of range", i + 1));
        }
        if e == f {
            return Err(format!("crossing {} pairs edge {} with itself", i + 1, e + 1));
        }
        if g.adjacent_edges(e, f) {
            return Err(format!("crossing {}: edges {} and {} share an endpoint", i + 1, e + 1, f + 1));
        }
        if !seen.insert((e.min(f), e.max(f))) {
            return Err(format!("crossing {}: edges {} and {} cross twice", i + 1, e + 1, f + 1));
        }
        count[e] += 1;
        count[f] += 1;
    }
    if order.len() != m {
        return Err(format!("order has {} entries for {} edges", order.len(), m));
    }
    let mut want = vec![Vec::new(); m];
    for (i, &(e, f)) in crossings.iter().enumerate() {
        want[e].push(i);
        want[f].push(i);
    }
    for e in 0..m {
        let mut listed = order[e].clone();
        listed.sort_unstable();
        if listed != want[e] || count[e] != order[e].len() {
            return Err(format!("order of edge {} does not list exactly its crossings", e + 1));
        }
    }
    Ok(())
}

/// Replaces every crossing by a degree-4 dummy vertex.
pub fn planarize(g: &Graph, crossings: &[(EdgeId, EdgeId)], order: &[Vec<usize>]) -> Result<PlanarizedGraph> {
    check_structure(g, crossings, order).map_err(Error::Immersion)?;
    let n = g.n();
    let mut edges = Vec::with_capacity(g.m() + 2 * crossings.len());
    let mut segment_map = Vec::with_capacity(g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut segs = Vec::with_capacity(order[e].len() + 1);
        let mut prev = u;
        for &x in &order[e] {
            segs.push(edges.len());
            edges.push((prev, n + x));
            prev = n + x;
        }
        segs.push(edges.len());
        edges.push((prev, v));
        segment_map.push(segs);
    }
    let graph = Graph::raw(n + crossings.len(), edges, g.is_multigraph());
    Ok(PlanarizedGraph { graph, segment_map, dummy_map: crossings.to_vec() })
}

/// Checks a certificate; an empty list means it is a valid k-immersion.
pub fn verify(imm: &Immersion, k: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    if let Err(s) = check_structure(&imm.base, &imm.crossings, &imm.order) {
        out.push(Violation::Structure(s));
        return out;
    }
    for (e, o) in imm.order.iter().enumerate() {
        if o.len() > k {
            out.push(Violation::TooManyCrossings { edge: e, count: o.len(), k });
        }
    }
    let p = planarize(&imm.base, &imm.crossings, &imm.order).expect("structure already checked");
    if let Err(e) = imm.rotation.validate(&p.graph) {
        out.push(Violation::Rotation(e.to_string()));
        return out;
    }
    let owner = p.segment_owner();
    let n = imm.base.n();
    for (i, &(e, _)) in imm.crossings.iter().enumerate() {
        let r = &imm.rotation.rot[n + i];
        let is_e: Vec<bool> = r.iter().map(|&s| owner[s] == e).collect();
        if r.len() != 4 || is_e[0] == is_e[1] || is_e[1] == is_e[2] || is_e[2] == is_e[3] {
            out.push(Violation::NotAlternating { crossing: i });
        }
    }
    match face_traversal(&p.graph, &imm.rotation) {
        Ok(f) if f.is_plane() => {}
        Ok(f) => out.push(Violation::NotPlane { euler: f.euler }),
        Err(e) => out.push(Violation::Rotation(e.to_string())),
    }
    out
}

pub fn is_valid(imm: &Immersion, k: usize) -> bool {
    verify(imm, k).is_empty()
}

/// max(0, m - 3n + 6): the Euler lower bound on the number of crossings of
/// any 1-immersion (each crossing adds one vertex and two edges).
pub fn crossing_lower_bound(g: &Graph) -> usize {
    (g.m() + 6).saturating_sub(3 * g.n())
}

/// True iff `m > 4n - 8`, which rules out 1-planarity without search.
pub fn edge_bound_reject(g: &Graph) -> bool {
    g.n() >= 3 && g.m() + 8 > 4 * g.n()
}

/// Builds the planarization with every dummy wrapped in a 4-wheel whose rim
/// forces the two edges to alternate, tests it for planarity and, when
/// planar, reads off the rotation of the planarization.
pub fn embed_crossings(g: &Graph, crossings: &[(EdgeId, EdgeId)], order: &[Vec<usize>]) -> Result<Option<Immersion>> {
    let p = planarize(g, crossings, order)?;
    let rot = alternating_embedding(&p, g.n());
    Ok(rot.map(|rotation| Immersion { base: g.clone(), crossings: crossings.to_vec(), order: order.to_vec(), rotation }))
}

pub(crate) fn alternating_embedding(p: &PlanarizedGraph, n: usize) -> Option<RotationSystem> {
    let pg = &p.graph;
    let c = p.dummy_map.len();
    if c == 0 {
        return match planarity_test(pg) {
            Planarity::Planar(r) => Some(r),
            Planarity::NonPlanar => None,
        };
    }
    // Augmented graph: segments touching a dummy are subdivided next to it by
    // a port vertex; the four ports of a dummy form its rim cycle.
    let mut nv = pg.n();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut tag: Vec<usize> = Vec::new(); // segment id, or usize::MAX for rim/inner pieces
    let mut port: Vec<[usize; 2]> = vec![[usize::MAX; 2]; pg.m()]; // port near first/second endpoint
    for (s, &(a, b)) in pg.edges().iter().enumerate() {
        let mut chain = vec![a];
        if a >= n {
            port[s][0] = nv;
            chain.push(nv);
            nv += 1;
        }
        if b >= n {
            port[s][1] = nv;
            chain.push(nv);
            nv += 1;
        }
        chain.push(b);
        for w in chain.windows(2) {
            edges.push((w[0], w[1]));
            // pieces touching a planarization vertex keep the segment tag
            let touches = w[0] < pg.n() || w[1] < pg.n();
            tag.push(if touches { s } else { usize::MAX });
        }
    }
    let inc = pg.incidence();
    for (i, &(e, _)) in p.dummy_map.iter().enumerate() {
        let d = n + i;
        let mut es = Vec::new();
        let mut fs = Vec::new();
        let owner = |s: usize| p.segment_map[e].contains(&s);
        for &(_, s) in &inc[d] {
            let side = usize::from(pg.endpoints(s).0 != d);
            let pv = port[s][side];
            if owner(s) {
                es.push(pv);
            } else {
                fs.push(pv);
            }
        }
        debug_assert!(es.len() == 2 && fs.len() == 2);
        let rim = [es[0], fs[0], es[1], fs[1]];
        for j in 0..4 {
            edges.push((rim[j], rim[(j + 1) % 4]));
            tag.push(usize::MAX);
        }
    }
    let aug = Graph::raw(nv, edges, pg.is_multigraph());
    let Planarity::Planar(r) = planarity_test(&aug) else {
        return None;
    };
    let rot = (0..pg.n()).map(|v| r.rot[v].iter().map(|&a| tag[a]).filter(|&s| s != usize::MAX).collect()).collect();
    Some(RotationSystem { rot })
}

/// Serializes a certificate: graph block, `x` crossing lines, `o` order lines
/// for edges crossed at least twice, then the planarization's rotation block.
pub fn serialize_immersion(imm: &Immersion) -> String {
    let mut s = String::new();
    io::write_graph_block(&mut s, &imm.base);
    for &(e, f) in &imm.crossings {
        let _ = writeln!(s, "x {} {}", e + 1, f + 1);
    }
    for (e, o) in imm.order.iter().enumerate() {
        if o.len() >= 2 {
            let _ = write!(s, "o {}:", e + 1);
            for x in o {
                let _ = write!(s, " {}", x + 1);
            }
            s.push('\n');
        }
    }
    io::write_rotation_block(&mut s, &imm.rotation);
    s
}

/// Parses a certificate. Structural problems are left for [`verify`]; only
/// syntax and id ranges are checked here.
pub fn parse_immersion(text: &str) -> Result<Immersion> {
    let mut lines = Lines::new(text);
    let base = io::read_graph_block(&mut lines)?;
    let m = base.m();
    let mut crossings = Vec::new();
    while let Some((ln, l)) = lines.peek() {
        if !l.starts_with("x ") {
            break;
        }
        lines.next();
        let mut t = l[2..].split_whitespace();
        let e = io::parse_one_based(t.next(), ln, "edge id", m)?;
        let f = io::parse_one_based(t.next(), ln, "edge id", m)?;
        if t.next().is_some() {
            return Err(parse_err(ln, "trailing tokens in crossing line"));
        }
        crossings.push((e, f));
    }
    let c = crossings.len();
    let mut order: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, &(e, f)) in crossings.iter().enumerate() {
        order[e].push(i);
        order[f].push(i);
    }
    let mut explicit = vec![false; m];
    while let Some((ln, l)) = lines.peek() {
        if !l.starts_with("o ") {
            break;
        }
        lines.next();
        let mut t = l[2..].split_whitespace();
        let head = t.next().ok_or_else(|| parse_err(ln, "missing edge id"))?;
        if !head.ends_with(':') {
            return Err(parse_err(ln, "expected 'o <e>: <x1> <x2> ...'"));
        }
        let e = io::parse_one_based(Some(head), ln, "edge id", m)?;
        let mut list = Vec::new();
        for tok in t {
            list.push(io::parse_one_based(Some(tok), ln, "crossing id", c)?);
        }
        if std::mem::replace(&mut explicit[e], true) {
            return Err(parse_err(ln, format!("second order line for edge {}", e + 1)));
        }
        order[e] = list;
    }
    for e in 0..m {
        if order[e].len() >= 2 && !explicit[e] {
            return Err(parse_err(lines.last_line(), format!("edge {} is crossed more than once but has no order line", e + 1)));
        }
    }
    let rotation = io::read_rotation_block(&mut lines, base.n() + c, m + 2 * c)?;
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "unexpected content after the rotation block"));
    }
    Ok(Immersion { base, crossings, order, rotation })
}

/// Number of crossings on every edge.
pub fn crossing_counts(imm: &Immersion) -> Vec<usize> {
    imm.order.iter().map(|o| o.len()).collect()
}
