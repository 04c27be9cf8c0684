//! Canonical labeling by color refinement with individualization.
//!
//! The search tree branches on every vertex of the first non-singleton color
//! class and keeps the lexicographically smallest relabeled edge list over
//! all leaves. No automorphism pruning is done, so the cost grows with the
//! size of the automorphism group; that is fine for the desk-scale graphs
//! this crate handles.

use crate::graph::Graph;

/// Byte string that is equal for two graphs iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub certificate: Vec<u8>,
}

struct Refiner {
    adj: Vec<Vec<(u32, u32)>>, // (neighbor, multiplicity)
}

impl Refiner {
    fn new(g: &Graph) -> Self {
        let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); g.n()];
        let mut nb = g.incidence();
        for (v, list) in nb.iter_mut().enumerate() {
            list.sort_unstable();
            let mut i = 0;
            while i < list.len() {
                let w = list[i].0;
                let mut j = i;
                while j < list.len() && list[j].0 == w {
                    j += 1;
                }
                adj[v].push((w as u32, (j - i) as u32));
                i = j;
            }
        }
        Refiner { adj }
    }

    /// Refines `colors` (dense ranks) to the coarsest stable coloring.
    fn refine(&self, colors: &mut Vec<u32>) {
        let n = colors.len();
        let mut classes = count_classes(colors);
        let mut sig: Vec<(Vec<(u32, u32)>, usize)> = Vec::with_capacity(n);
        loop {
            sig.clear();
            for v in 0..n {
                let mut s: Vec<(u32, u32)> = Vec::with_capacity(self.adj[v].len() + 1);
                s.push((colors[v], 0));
                let start = 1;
                s.extend(self.adj[v].iter().map(|&(w, k)| (colors[w as usize], k)));
                s[start..].sort_unstable();
                sig.push((s, v));
            }
            sig.sort_unstable();
            let mut next = vec![0u32; n];
            let mut rank = 0u32;
            for i in 0..n {
                if i > 0 && sig[i].0 != sig[i - 1].0 {
                    rank += 1;
                }
                next[sig[i].1] = rank;
            }
            let new_classes = rank as usize + 1;
            *colors = next;
            if new_classes == classes {
                return;
            }
            classes = new_classes;
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn relabeled_edges(g: &Graph, lab: &[u32]) -> Vec<(u32, u32)> {
    let mut e: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (lab[u], lab[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    e.sort_unstable();
    e
}

fn search(g: &Graph, r: &Refiner, colors: Vec<u32>, best: &mut Option<(Vec<(u32, u32)>, Vec<u32>)>) {
    let n = colors.len();
    // First non-singleton class (smallest color value).
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c as usize] += 1;
    }
    let target = (0..n).find(|&c| size[c] > 1);
    let Some(target) = target else {
        let cert = relabeled_edges(g, &colors);
        if best.as_ref().map_or(true, |(b, _)| cert < *b) {
            *best = Some((cert, colors));
        }
        return;
    };
    for v in 0..n {
        if colors[v] as usize != target {
            continue;
        }
        let mut c: Vec<u32> = colors.iter().map(|&x| 2 * x + u32::from(x as usize == target)).collect();
        c[v] = 2 * target as u32;
        compress(&mut c);
        r.refine(&mut c);
        search(g, r, c, best);
    }
}

fn compress(c: &mut [u32]) {
    let mut vals: Vec<u32> = c.to_vec();
    vals.sort_unstable();
    vals.dedup();
    for x in c.iter_mut() {
        *x = vals.binary_search(x).unwrap() as u32;
    }
}

/// Canonical labeling: `lab[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let r = Refiner::new(g);
    let mut colors = vec![0u32; g.n()];
    r.refine(&mut colors);
    let mut best = None;
    search(g, &r, colors, &mut best);
    best.map(|(_, lab)| lab.into_iter().map(|x| x as usize).collect()).unwrap_or_default()
}

/// Relabel-invariant certificate; parallel edges are encoded by repetition.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab: Vec<u32> = canonical_labeling(g).into_iter().map(|x| x as u32).collect();
    let edges = relabeled_edges(g, &lab);
    let mut certificate = Vec::with_capacity(8 + 8 * edges.len());
    certificate.extend_from_slice(&(g.n() as u32).to_le_bytes());
    certificate.extend_from_slice(&(edges.len() as u32).to_le_bytes());
    for (a, b) in edges {
        certificate.extend_from_slice(&a.to_le_bytes());
        certificate.extend_from_slice(&b.to_le_bytes());
    }
    CanonicalForm { certificate }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && a.degrees().iter().sum::<usize>() == b.degrees().iter().sum::<usize>() && {
        let (mut da, mut db) = (a.degrees(), b.degrees());
        da.sort_unstable();
        db.sort_unstable();
        da == db
    } && canonical_form(a) == canonical_form(b)
}

/// Applies a vertex permutation (`perm[v]` = new id of `v`).
pub fn permute(g: &Graph, perm: &[usize]) -> Graph {
    let edges = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::build(g.n(), edges, g.is_multigraph()).expect("permutation preserves validity")
}
