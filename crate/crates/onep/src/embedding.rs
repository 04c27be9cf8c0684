//! Combinatorial embeddings: rotation systems, face traversal, planarity,
//! peripheral cycles and short-cycle enumeration.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::planarity::planar_rotation;
use std::collections::HashMap;

/// Cyclic (clockwise) order of incident edge ids at every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    pub rot: Vec<Vec<EdgeId>>,
}

impl RotationSystem {
    /// Checks that every edge-end of `g` appears exactly once, at its vertex.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.rot.len() != g.n() {
            return Err(Error::Rotation(format!("{} rotation lists for {} vertices", self.rot.len(), g.n())));
        }
        let mut seen = vec![0u8; g.m()];
        for (v, list) in self.rot.iter().enumerate() {
            for &e in list {
                if e >= g.m() {
                    return Err(Error::Rotation(format!("edge id {e} out of range at vertex {v}")));
                }
                let (a, b) = g.endpoints(e);
                let bit = if a == v {
                    1
                } else if b == v {
                    2
                } else {
                    return Err(Error::Rotation(format!("edge {e} is not incident with vertex {v}")));
                };
                if seen[e] & bit != 0 {
                    return Err(Error::Rotation(format!("edge {e} listed twice at vertex {v}")));
                }
                seen[e] |= bit;
            }
        }
        if let Some(e) = seen.iter().position(|&s| s != 3) {
            return Err(Error::Rotation(format!("edge {e} missing from the rotation")));
        }
        Ok(())
    }

    /// Mirror image (every cyclic order reversed).
    pub fn reversed(&self) -> RotationSystem {
        RotationSystem { rot: self.rot.iter().map(|r| r.iter().rev().copied().collect()).collect() }
    }
}

/// A closed walk bounding a face: the sequence of (tail vertex, edge) darts.
pub type FaceWalk = Vec<(usize, EdgeId)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<FaceWalk>,
    pub outer_face: Option<usize>,
    /// V - E + F for every connected component (isolated vertices count one face).
    pub euler: Vec<i64>,
}

impl FaceSet {
    /// True iff every component satisfies V - E + F = 2.
    pub fn is_plane(&self) -> bool {
        self.euler.iter().all(|&x| x == 2)
    }
}

/// Traces the faces of a rotation system. Leaving `v` along `e` to `w`, the
/// walk continues along the successor of `e` in the rotation at `w`.
pub fn face_traversal(g: &Graph, rot: &RotationSystem) -> Result<FaceSet> {
    rot.validate(g)?;
    let m = g.m();
    // position of edge e in the rotation of each endpoint: [at first, at second]
    let mut pos = vec![[0usize; 2]; m];
    for (v, list) in rot.rot.iter().enumerate() {
        for (i, &e) in list.iter().enumerate() {
            let side = usize::from(g.endpoints(e).0 != v);
            pos[e][side] = i;
        }
    }
    let mut used = vec![[false; 2]; m];
    let mut faces = Vec::new();
    for e0 in 0..m {
        for s0 in 0..2 {
            if used[e0][s0] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut e, mut s) = (e0, s0);
            while !used[e][s] {
                used[e][s] = true;
                let (a, b) = g.endpoints(e);
                let (tail, head) = if s == 0 { (a, b) } else { (b, a) };
                walk.push((tail, e));
                let hs = 1 - s; // side of e at head
                let list = &rot.rot[head];
                let nxt = list[(pos[e][hs] + 1) % list.len()];
                e = nxt;
                s = usize::from(g.endpoints(nxt).0 != head);
            }
            faces.push(walk);
        }
    }
    let (comp, k) = g.components();
    let mut euler = vec![0i64; k];
    for v in 0..g.n() {
        euler[comp[v]] += 1;
    }
    let mut has_edge = vec![false; k];
    for &(u, _) in g.edges() {
        euler[comp[u]] -= 1;
        has_edge[comp[u]] = true;
    }
    for f in &faces {
        euler[comp[f[0].0]] += 1;
    }
    for c in 0..k {
        if !has_edge[c] {
            euler[c] += 1;
        }
    }
    Ok(FaceSet { faces, outer_face: None, euler })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planarity {
    Planar(RotationSystem),
    NonPlanar,
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Planarity test with embedding; parallel edges are bundled next to each
/// other and disconnected inputs are handled component-wise.
pub fn planarity_test(g: &Graph) -> Planarity {
    let mut simple: Vec<(usize, usize)> = Vec::new();
    let mut bundle: Vec<Vec<EdgeId>> = Vec::new();
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let key = (u.min(v), u.max(v));
        let i = *index.entry(key).or_insert_with(|| {
            simple.push(key);
            bundle.push(Vec::new());
            simple.len() - 1
        });
        bundle[i].push(e);
    }
    let Some(srot) = planar_rotation(g.n(), &simple) else {
        return Planarity::NonPlanar;
    };
    let rot = srot
        .iter()
        .enumerate()
        .map(|(v, list)| {
            let mut out = Vec::new();
            for &i in list {
                if simple[i].0 == v {
                    out.extend(bundle[i].iter().copied());
                } else {
                    out.extend(bundle[i].iter().rev().copied());
                }
            }
            out
        })
        .collect();
    Planarity::Planar(RotationSystem { rot })
}

pub fn is_planar(g: &Graph) -> bool {
    planarity_test(g).is_planar()
}

/// Checks that `cycle` lists a cycle of `g` (length >= 3, distinct vertices,
/// consecutive vertices adjacent).
pub fn check_cycle(g: &Graph, cycle: &[usize]) -> Result<()> {
    if cycle.len() < 3 {
        return Err(Error::NotACycle(format!("{cycle:?} has fewer than 3 vertices")));
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotACycle(format!("{cycle:?} repeats or leaves the vertex range")));
        }
    }
    let nb = g.neighbors();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if nb[a].binary_search(&b).is_err() {
            return Err(Error::NotACycle(format!("{} and {} are not adjacent", a, b)));
        }
    }
    Ok(())
}

/// True iff the cycle is induced and `G - V(C)` is connected and nonempty.
/// An empty remainder counts as non-peripheral.
pub fn is_peripheral(g: &Graph, cycle: &[usize]) -> Result<bool> {
    check_cycle(g, cycle)?;
    let mut on = vec![false; g.n()];
    for &v in cycle {
        on[v] = true;
    }
    let inside = g.neighbors().iter().enumerate().filter(|(v, _)| on[*v]).map(|(_, nb)| nb.iter().filter(|&&w| on[w]).count()).sum::<usize>() / 2;
    if inside != cycle.len() {
        return Ok(false);
    }
    let (rest, _) = g.remove_vertices(&on);
    Ok(rest.n() > 0 && rest.is_connected())
}

/// Canonical form of a cycle: start at the minimum vertex, and go towards the
/// smaller of its two cycle neighbors.
pub fn normalize_cycle(c: &[usize]) -> Vec<usize> {
    let k = c.len();
    let i = (0..k).min_by_key(|&i| c[i]).unwrap();
    let fwd: Vec<usize> = (0..k).map(|j| c[(i + j) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|j| c[(i + k - j) % k]).collect();
    if fwd[1] <= bwd[1] {
        fwd
    } else {
        bwd
    }
}

/// All cycles of length 3..=maxlen, each once, in normalized form and sorted.
pub fn enumerate_short_cycles(g: &Graph, maxlen: usize) -> Vec<Vec<usize>> {
    let nb = g.neighbors();
    let mut out = Vec::new();
    let mut path = Vec::new();
    fn extend(nb: &[Vec<usize>], path: &mut Vec<usize>, maxlen: usize, out: &mut Vec<Vec<usize>>) {
        let s = path[0];
        let last = *path.last().unwrap();
        for &w in &nb[last] {
            if w == s && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if w > s && path.len() < maxlen && !path.contains(&w) {
                path.push(w);
                extend(nb, path, maxlen, out);
                path.pop();
            }
        }
    }
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        extend(&nb, &mut path, maxlen, &mut out);
    }
    out.sort();
    out
}
