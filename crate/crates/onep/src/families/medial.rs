//! The host graphs `H_n = P_3 □ C_n` and their medial extensions `G_n`.
//!
//! A medial extension of a plane graph `H` has one vertex per edge of `H`.
//! Each 3-valent vertex of `H` contributes the triangle on its three edges;
//! each 4-valent vertex with edges `e1 e2 e3 e4` in rotation order
//! contributes the 4-cycle `e1 e2 e3 e4` plus one diagonal, `e1 e3` or
//! `e2 e4`.
//!
//! `G_n` uses, at every 4-valent vertex of `H_n` (the middle ring), the
//! diagonal joining the two middle-ring edges. This is the only choice that
//! leaves no 5-valent vertex: a spoke-to-spoke diagonal would raise both
//! spokes to degree 5, while the ring diagonal raises every middle-ring
//! edge vertex to 6 and leaves all others at 4.

use crate::error::{Error, Result};
use crate::graph::{named, EdgeId, Graph};
use crate::pn::{check_h_class, rotation_of};
use std::collections::BTreeMap;

/// `P_3 □ C_n`; vertex `i * n + j` is path vertex `i`, cycle vertex `j`, so
/// the middle ring is `n..2n`.
pub fn gen_h_n(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Param(format!("H_n needs n >= 3, got {n}")));
    }
    Ok(named::cartesian(&named::path(3), &named::cycle(n)))
}

/// A medial extension together with its correspondence: vertex `i` of the
/// extension is edge `i` of the host.
#[derive(Clone, Debug)]
pub struct MedialExtension {
    pub graph: Graph,
    /// For each host vertex, the extension edges associated with it.
    pub associated: Vec<Vec<EdgeId>>,
}

/// Diagonal per 4-valent host vertex, as the pair of host edges it joins;
/// the two edges must be opposite in the rotation.
pub type DiagonalChoice = BTreeMap<usize, (EdgeId, EdgeId)>;

pub fn gen_medial_extension(h: &Graph, diagonals: &DiagonalChoice) -> Result<MedialExtension> {
    let report = check_h_class(h)?;
    if !report.all_pass() {
        return Err(Error::Param(format!("host graph is not in class H: {:?}", report.failures())));
    }
    let rot = rotation_of(h)?;
    let mut edges = Vec::new();
    let mut associated = Vec::with_capacity(h.n());
    for (v, r) in rot.rot.iter().enumerate() {
        let first = edges.len();
        match r.len() {
            3 => edges.extend([(r[0], r[1]), (r[1], r[2]), (r[0], r[2])]),
            4 => {
                let &(a, b) = diagonals
                    .get(&v)
                    .ok_or_else(|| Error::Param(format!("no diagonal chosen at 4-valent vertex {}", v + 1)))?;
                let ia = r.iter().position(|&e| e == a);
                let ib = r.iter().position(|&e| e == b);
                match (ia, ib) {
                    (Some(i), Some(j)) if (i + 2) % 4 == j => {}
                    _ => return Err(Error::Param(format!("diagonal at vertex {} must join opposite edges", v + 1))),
                }
                edges.extend((0..4).map(|i| (r[i], r[(i + 1) % 4])));
                edges.push((a, b));
            }
            d => unreachable!("class H has degrees 3 and 4, found {d}"),
        }
        associated.push((first..edges.len()).collect());
    }
    Ok(MedialExtension { graph: Graph::simple(h.m(), &edges), associated })
}

/// The diagonal choice of `G_n`: both middle-ring edges at every middle
/// vertex.
pub fn g_n_diagonals(h: &Graph, n: usize) -> DiagonalChoice {
    let ring = |v: usize| v >= n && v < 2 * n;
    let mut out = DiagonalChoice::new();
    for v in n..2 * n {
        let ring_edges: Vec<EdgeId> =
            (0..h.m()).filter(|&e| h.endpoints(e).0 == v || h.endpoints(e).1 == v).filter(|&e| {
                let (a, b) = h.endpoints(e);
                ring(a) && ring(b)
            }).collect();
        out.insert(v, (ring_edges[0], ring_edges[1]));
    }
    out
}

pub fn gen_g_n(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(Error::Param(format!("G_n needs n >= 6, got {n}")));
    }
    let h = gen_h_n(n)?;
    Ok(gen_medial_extension(&h, &g_n_diagonals(&h, n))?.graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pn::check_a_class;

    #[test]
    fn h6_counts_and_class() {
        let h = gen_h_n(6).unwrap();
        assert_eq!((h.n(), h.m()), (18, 30));
        let d = h.degrees();
        assert_eq!(d.iter().filter(|&&x| x == 3).count(), 12);
        assert_eq!(d.iter().filter(|&&x| x == 4).count(), 6);
        assert!(check_h_class(&h).unwrap().all_pass());
    }

    #[test]
    fn g6_counts_and_degrees() {
        let g = gen_g_n(6).unwrap();
        assert_eq!((g.n(), g.m()), (30, 66));
        let mut d = g.degrees();
        d.sort();
        d.dedup();
        assert_eq!(d, vec![4, 6]);
    }

    #[test]
    fn missing_diagonal_is_an_error() {
        let h = gen_h_n(6).unwrap();
        assert!(gen_medial_extension(&h, &DiagonalChoice::new()).is_err());
        // Adjacent (not opposite) edges are rejected too.
        let mut bad = g_n_diagonals(&h, 6);
        let v = 6;
        let inc: Vec<EdgeId> = (0..h.m()).filter(|&e| h.endpoints(e).0 == v || h.endpoints(e).1 == v).collect();
        let r = rotation_of(&h).unwrap();
        let pos = |e| r.rot[v].iter().position(|&x| x == e).unwrap();
        let (a, b) = inc.iter().flat_map(|&a| inc.iter().map(move |&b| (a, b))).find(|&(a, b)| (pos(a) + 1) % 4 == pos(b)).unwrap();
        bad.insert(v, (a, b));
        assert!(gen_medial_extension(&h, &bad).is_err());
    }

    #[test]
    fn medial_extension_of_cube_is_the_cuboctahedron_like_graph() {
        let m = gen_medial_extension(&named::cube(), &DiagonalChoice::new()).unwrap();
        assert_eq!((m.graph.n(), m.graph.m()), (12, 24));
        assert!(m.graph.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn g_n_is_in_class_a() {
        for n in 6..=8 {
            let g = gen_g_n(n).unwrap();
            let r = check_a_class(&g).unwrap();
            assert!(r.all_pass(), "G_{n}:\n{r}");
        }
    }
}
