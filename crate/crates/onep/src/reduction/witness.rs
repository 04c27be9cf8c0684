//! Witness immersions from colourings, colour extraction from immersions,
//! and the k-parallel lift.

use super::{Color, EdgeGadget, PendingPath, ReductionArtifact, ReductionArtifactK, VertexBlock};
use crate::error::{Error, Result};
use crate::graph::EdgeId;
use crate::immersion::{embed_crossings, trivial_order, verify, Immersion};
use std::fmt;

/// Two adjacent source vertices with the same colour: both activated
/// families would need the single free edge of their shared `(h)`-path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clash {
    pub source_edge: usize,
    pub ends: (usize, usize),
    pub color: Color,
    pub path: PendingPath,
}

impl fmt::Display for Clash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts: Vec<String> = self.path.vertices.iter().map(|v| (v + 1).to_string()).collect();
        write!(
            f,
            "vertices {} and {} are both coloured {}: the ({})-path {} of source edge {} would be crossed by both activated families",
            self.ends.0 + 1,
            self.ends.1 + 1,
            self.color,
            self.color,
            verts.join("-"),
            self.source_edge + 1
        )
    }
}

pub fn find_clash(art: &ReductionArtifact, col: &[Color]) -> Option<Clash> {
    art.edges.iter().find_map(|e| {
        let c = col[e.ends.0];
        (c == col[e.ends.1]).then(|| Clash { source_edge: e.source_edge, ends: e.ends, color: c, path: e.paths[c.index()].clone() })
    })
}

fn check_coloring(art: &ReductionArtifact, col: &[Color]) -> Result<()> {
    if col.len() != art.source.n() {
        return Err(Error::Reduction(format!("colouring has {} entries for {} vertices", col.len(), art.source.n())));
    }
    match find_clash(art, col) {
        Some(c) => Err(Error::Reduction(format!("improper colouring: {c}"))),
        None => Ok(()),
    }
}

/// Crossings of the `(h)`-paths of one source edge and of the activated
/// wrap paths at its ends. Seen from the first end the labels appear as
/// `a, b, c` and from the second mirrored, so the paths pairwise cross:
/// `(a) x (b)`, then `(a) x (c)`, then `(b) x (c)`. The colour of each end
/// frees the edge of its path at that end.
fn edge_crossings(art: &ReductionArtifact, gadget: &EdgeGadget, col: &[Color], out: &mut Vec<(EdgeId, EdgeId)>) {
    let (u, w) = gadget.ends;
    let mut sibling = [[0usize; 3]; 3];
    for h in Color::ALL {
        let p = &gadget.paths[h.index()];
        let first = usize::from(col[u] == h);
        for (i, o) in Color::ALL.into_iter().filter(|&o| o != h).enumerate() {
            sibling[h.index()][o.index()] = p.edges[first + i];
        }
    }
    for (x, y) in [(0, 1), (0, 2), (1, 2)] {
        out.push((sibling[x][y], sibling[y][x]));
    }
    for end in [u, w] {
        let wrap = active_wrap(&art.blocks[end], col[end], gadget.source_edge);
        out.push((wrap.path.edges[0], wrap.active_target));
    }
}

fn active_wrap(block: &VertexBlock, c: Color, source_edge: usize) -> &super::WrapPath {
    block.families[c.index()].wraps.iter().find(|w| w.source_edge == source_edge).expect("wrap per incident edge")
}

/// Crossings inside a block for activated colour `act`: inactive wraps
/// cross their tie edges; the long paths leave the pocket through the
/// `(1)`-edge (activated) or the two `(0)`-edges (others, in colour order)
/// and cross each other once per pair, inside the pocket when their exit
/// order inverts their start order and outside otherwise.
fn block_crossings(block: &VertexBlock, act: Color, out: &mut Vec<(EdgeId, EdgeId)>) {
    for f in block.families.iter().filter(|f| f.color != act) {
        for w in &f.wraps {
            out.push((w.path.edges[0], w.inactive_target));
        }
    }
    let mut exit = [0usize; 3];
    let mut next = 0;
    for c in Color::ALL {
        if c == act {
            exit[c.index()] = 2;
        } else {
            exit[c.index()] = next;
            next += 1;
        }
    }
    let exit_edge = |slot: usize| if slot == 2 { block.one_path.edges[0] } else { block.zero_path.edges[slot] };
    // Per long path, the sequence of things it crosses.
    enum Ev {
        Long(usize),
        Edge(EdgeId),
    }
    let mut events: [Vec<Ev>; 3] = Default::default();
    let sweep = |order: &mut Vec<usize>, rank: &dyn Fn(usize) -> usize, events: &mut [Vec<Ev>; 3]| loop {
        let Some(i) = (0..order.len() - 1).find(|&i| rank(order[i]) > rank(order[i + 1])) else {
            break;
        };
        let (x, y) = (order[i], order[i + 1]);
        events[x].push(Ev::Long(y));
        events[y].push(Ev::Long(x));
        order.swap(i, i + 1);
    };
    let mut order: Vec<usize> = (0..3).collect();
    sweep(&mut order, &|c| exit[c], &mut events);
    for c in 0..3 {
        events[c].push(Ev::Edge(exit_edge(exit[c])));
    }
    sweep(&mut order, &|c| 2 - c, &mut events);
    let long = |c: usize| &block.families[c].long.edges;
    let mut long_pairs = Vec::new();
    for (c, evs) in events.iter().enumerate() {
        for (i, ev) in evs.iter().enumerate() {
            match *ev {
                Ev::Edge(e) => out.push((long(c)[i], e)),
                Ev::Long(o) => long_pairs.push(((c, o), long(c)[i])),
            }
        }
    }
    for &((c, o), e) in &long_pairs {
        if c < o {
            let f = long_pairs.iter().find(|&&(k, _)| k == (o, c)).expect("symmetric event").1;
            out.push((e, f));
        }
    }
}

/// Crossing set of the witness for a proper colouring.
pub fn witness_crossings(art: &ReductionArtifact, col: &[Color]) -> Result<Vec<(EdgeId, EdgeId)>> {
    check_coloring(art, col)?;
    let mut out = art.base_crossings.clone();
    for gadget in &art.edges {
        edge_crossings(art, gadget, col, &mut out);
    }
    for block in &art.blocks {
        block_crossings(block, col[block.vertex], &mut out);
    }
    Ok(out)
}

/// A 1-immersion of the instance in which the family of every block's
/// colour is activated.
pub fn build_witness(art: &ReductionArtifact, col: &[Color]) -> Result<Immersion> {
    let crossings = witness_crossings(art, col)?;
    let order = trivial_order(art.gbar.m(), &crossings)?;
    embed_crossings(&art.gbar, &crossings, &order)?.ok_or_else(|| Error::Reduction("witness drawing is not plane".into()))
}

/// Which families of a block are activated in an immersion, read three
/// ways: by their wrap paths crossing `(h)`-paths, by the long path that
/// crosses the `(1)`-blocking edge, and by the long paths crossing the
/// `(0)`-blocking edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockActivation {
    pub vertex: usize,
    pub by_edge_paths: Vec<Color>,
    pub one_crossers: Vec<Color>,
    pub zero_crossers: Vec<Color>,
}

impl BlockActivation {
    /// Exactly one family activated, and the blocking paths agree.
    pub fn is_exclusive(&self) -> bool {
        self.by_edge_paths.len() == 1 && self.one_crossers == self.by_edge_paths && self.zero_crossers.len() == 2
    }
}

pub fn activation_report(art: &ReductionArtifact, imm: &Immersion) -> Vec<BlockActivation> {
    let m = art.gbar.m();
    let mut partners: Vec<Vec<EdgeId>> = vec![Vec::new(); m];
    for &(e, f) in &imm.crossings {
        partners[e].push(f);
        partners[f].push(e);
    }
    // (gadget, colour) of every (h)-path edge.
    let mut owner: Vec<Option<(usize, Color)>> = vec![None; m];
    for (i, g) in art.edges.iter().enumerate() {
        for c in Color::ALL {
            for &e in &g.paths[c.index()].edges {
                owner[e] = Some((i, c));
            }
        }
    }
    let crosses = |e: EdgeId, target: EdgeId| partners[e].contains(&target);
    art.blocks
        .iter()
        .map(|b| {
            let v = b.vertex;
            let by_edge_paths = b
                .families
                .iter()
                .filter(|f| {
                    f.edges().any(|e| {
                        partners[e].iter().any(|&x| {
                            owner[x].is_some_and(|(gi, c)| c == f.color && (art.edges[gi].ends.0 == v || art.edges[gi].ends.1 == v))
                        })
                    })
                })
                .map(|f| f.color)
                .collect();
            let one = b.one_path.edges[0];
            let one_crossers = b.families.iter().filter(|f| f.long.edges.iter().any(|&e| crosses(e, one))).map(|f| f.color).collect();
            let zero_crossers = b
                .families
                .iter()
                .filter(|f| f.long.edges.iter().any(|&e| b.zero_path.edges.iter().any(|&z| crosses(e, z))))
                .map(|f| f.color)
                .collect();
            BlockActivation { vertex: v, by_edge_paths, one_crossers, zero_crossers }
        })
        .collect()
}

/// Reads the colouring off a verified 1-immersion of the instance: each
/// vertex gets the colour of its unique activated family.
pub fn extract_coloring(art: &ReductionArtifact, imm: &Immersion) -> Result<Vec<Color>> {
    if imm.base != art.gbar {
        return Err(Error::Reduction("immersion is not of this instance".into()));
    }
    if let Some(v) = verify(imm, 1).first() {
        return Err(Error::Reduction(format!("immersion does not verify at k = 1: {v}")));
    }
    let mut col = Vec::with_capacity(art.blocks.len());
    for a in activation_report(art, imm) {
        if !a.is_exclusive() {
            let names = |cs: &[Color]| cs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
            return Err(Error::Reduction(format!(
                "block of vertex {} does not have exactly one activated family (edge paths: [{}], (1)-edge: [{}])",
                a.vertex + 1,
                names(&a.by_edge_paths),
                names(&a.one_crossers)
            )));
        }
        col.push(a.by_edge_paths[0]);
    }
    if let Some(c) = find_clash(art, &col) {
        return Err(Error::Reduction(format!("extracted colouring is improper: {c}")));
    }
    Ok(col)
}

/// Lifts a 1-immersion to the instance with every edge replaced by `k`
/// parallel edges (copies of edge `e` are `k e .. k e + k - 1`): every
/// crossing becomes the `k x k` grid of crossings between the two bundles.
pub fn lift_immersion(imm: &Immersion, k: usize) -> Result<Immersion> {
    if k == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    if k == 1 {
        return Ok(imm.clone());
    }
    if let Some(e) = imm.order.iter().position(|o| o.len() > 1) {
        return Err(Error::Immersion(format!("lift needs a 1-immersion; edge {} is crossed twice", e + 1)));
    }
    let base = imm.base.multiply_edges(k)?;
    let mut crossings = Vec::with_capacity(imm.crossings.len() * k * k);
    let mut order = vec![Vec::new(); base.m()];
    for &(e, f) in &imm.crossings {
        let first = crossings.len();
        for i in 0..k {
            for j in 0..k {
                crossings.push((k * e + i, k * f + j));
            }
        }
        for i in 0..k {
            order[k * e + i] = (0..k).map(|j| first + i * k + j).collect();
            order[k * f + i] = (0..k).map(|j| first + j * k + i).collect();
        }
    }
    embed_crossings(&base, &crossings, &order)?.ok_or_else(|| Error::Immersion("lifted drawing is not plane".into()))
}

pub fn build_witness_k(art: &ReductionArtifactK, col: &[Color]) -> Result<Immersion> {
    lift_immersion(&build_witness(&art.base, col)?, art.k)
}

#[cfg(test)]
mod tests {
    use super::super::{build_reduction, build_reduction_k, three_coloring};
    use super::*;
    use crate::graph::named;
    use crate::immersion::crossing_counts;

    #[test]
    fn prism_witness_round_trip() {
        let g = named::prism();
        let art = build_reduction(&g, None).unwrap();
        let col = three_coloring(&g).unwrap();
        let w = build_witness(&art, &col).unwrap();
        assert!(verify(&w, 1).is_empty());
        assert_eq!(extract_coloring(&art, &w).unwrap(), col);
        assert!(activation_report(&art, &w).iter().all(|a| a.is_exclusive()));
        let rotated: Vec<Color> = col.iter().map(|c| c.next()).collect();
        let w2 = build_witness(&art, &rotated).unwrap();
        assert_eq!(extract_coloring(&art, &w2).unwrap(), rotated);
    }

    #[test]
    fn clash_is_reported_on_the_shared_path() {
        let g = named::prism();
        let art = build_reduction(&g, None).unwrap();
        let mut col = three_coloring(&g).unwrap();
        let (u, v) = g.endpoints(0);
        col[v] = col[u];
        let c = find_clash(&art, &col).unwrap();
        assert_eq!(c.color, col[u]);
        assert_eq!(c.path, art.edges[c.source_edge].paths[col[u].index()]);
        let err = build_witness(&art, &col).unwrap_err().to_string();
        assert!(err.contains("improper"), "{err}");
    }

    #[test]
    fn k4_rejects_every_coloring() {
        let art = build_reduction(&named::complete(4), None).unwrap();
        for code in 0..81usize {
            let col: Vec<Color> = (0..4).map(|i| Color::from_index(code / 3usize.pow(i) % 3)).collect();
            assert!(build_witness(&art, &col).is_err());
        }
    }

    #[test]
    fn corrupted_witness_fails() {
        let g = named::prism();
        let art = build_reduction(&g, None).unwrap();
        let col = three_coloring(&g).unwrap();
        let mut w = build_witness(&art, &col).unwrap();
        // Move one long path from its exit edge to the (1)-edge of its block.
        let b = &art.blocks[0];
        let other = Color::ALL.into_iter().find(|&c| c != col[0]).unwrap();
        let one = b.one_path.edges[0];
        let i = w.crossings.iter().position(|&(e, f)| b.families[other.index()].long.edges.contains(&e) && b.zero_path.edges.contains(&f)).unwrap();
        w.crossings[i].1 = one;
        assert!(!verify(&w, 1).is_empty());
        assert!(extract_coloring(&art, &w).is_err());
    }

    /// The pocket layout is rigid: exchanging the exit edges of the two
    /// non-activated long paths, without moving their mutual crossings,
    /// leaves no plane drawing.
    #[test]
    fn swapped_exit_edges_are_not_plane() {
        let g = named::prism();
        let art = build_reduction(&g, None).unwrap();
        let col = three_coloring(&g).unwrap();
        let mut x = witness_crossings(&art, &col).unwrap();
        let z = &art.blocks[0].zero_path.edges;
        for c in x.iter_mut() {
            if c.1 == z[0] {
                c.1 = z[1];
            } else if c.1 == z[1] {
                c.1 = z[0];
            }
        }
        let o = trivial_order(art.gbar.m(), &x).unwrap();
        assert!(embed_crossings(&art.gbar, &x, &o).unwrap().is_none());
    }

    #[test]
    fn lift_to_k_two() {
        let g = named::prism();
        let art = build_reduction_k(&g, None, 2).unwrap();
        let col = three_coloring(&g).unwrap();
        let w1 = build_witness(&art.base, &col).unwrap();
        let w2 = build_witness_k(&art, &col).unwrap();
        assert_eq!(w2.base.m(), 2 * art.base.gbar.m());
        assert!(verify(&w2, 2).is_empty());
        let (c1, c2) = (crossing_counts(&w1), crossing_counts(&w2));
        assert!((0..w2.base.m()).all(|e| c2[e] == 2 * c1[e / 2]));
    }
}
