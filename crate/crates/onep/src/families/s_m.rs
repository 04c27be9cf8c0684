//! The graphs `S_m` and `S_m(λ)`, and counting of the λ-family.
//!
//! `S_m` (`m ≥ 4`, `N = 12m - 2`) is the medial extension of the cylinder
//! `P_{m+1} □ C_N` in which every 4-valent host vertex gets the diagonal
//! along its ring, plus `6m - 1` central paths. The ring edges of host
//! ring `k` form the cycle `B_k` (`B_0` innermost); the host spokes between
//! rings `k` and `k + 1` become 4-valent "spoke" vertices. The vertices of
//! `B_0` are the central vertices `0..N`, and central vertex `x` is joined
//! to `x + (6m - 1)` by a path with `6m - 4` inner vertices.
//!
//! `S_m(λ)` inserts, after each central position `x`, `λ_x` extra columns
//! into the three outer rings `B_{m-2}, B_{m-1}, B_m`. A column adds one
//! vertex to each of these rings and one spoke vertex in each of the two
//! gaps between them: five vertices, three ring edges and eight spoke
//! edges. The spokes between `B_{m-3}` and `B_{m-2}` stay attached to the
//! original ring vertices, so the part inside `B_{m-2}` sees it subdivided.
//!
//! Spoke edges between `B_{i-1}` and `B_i` carry type `2i - 1` (the end on
//! `B_{i-1}`) or `2i` (the end on `B_i`).

use super::chains::Builder;
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use num_bigint::BigUint;
use std::collections::HashSet;

/// Parameters of `S_m(λ)`: `lambda` has `12m - 2` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmLambda {
    pub m: usize,
    pub lambda: Vec<usize>,
}

impl SmLambda {
    pub fn zero(m: usize) -> Self {
        SmLambda { m, lambda: vec![0; ring_length(m)] }
    }

    pub fn n(&self) -> usize {
        self.lambda.iter().sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 4 {
            return Err(Error::Param(format!("S_m needs m >= 4, got {}", self.m)));
        }
        if self.lambda.len() != ring_length(self.m) {
            return Err(Error::Param(format!("λ must have {} entries, got {}", ring_length(self.m), self.lambda.len())));
        }
        Ok(())
    }
}

/// `12m - 2`, the length of the inner rings and the number of central
/// vertices.
pub fn ring_length(m: usize) -> usize {
    12 * m - 2
}

/// `(5m - 1)(12m - 2) + 5n`.
pub fn sm_order(m: usize, n: usize) -> usize {
    (5 * m - 1) * ring_length(m) + 5 * n
}

/// `(5m + 1)(12m - 2) + 11n + (6m - 1)(6m - 3)`: host-vertex contributions
/// of the medial extension, eleven edges per inserted column, and the
/// central paths.
pub fn sm_size(m: usize, n: usize) -> usize {
    (5 * m + 1) * ring_length(m) + 11 * n + (6 * m - 1) * (6 * m - 3)
}

#[derive(Clone, Debug)]
pub struct SmGraph {
    pub spec: SmLambda,
    pub graph: Graph,
    /// `rings[k]` is the cycle `B_k` in cyclic order.
    pub rings: Vec<Vec<usize>>,
    /// Central paths from `x` to `x + 6m - 1`, endpoints included.
    pub central_paths: Vec<Vec<usize>>,
    /// Type `1..=2m` of every spoke edge; `None` for ring and path edges.
    pub edge_type: Vec<Option<usize>>,
    /// Spoke vertices between `B_k` and `B_{k+1}`, per gap `k`.
    pub spokes: Vec<Vec<usize>>,
}

impl SmGraph {
    pub fn central_vertices(&self) -> &[usize] {
        &self.rings[0]
    }

    /// The edges of type `t`.
    pub fn edges_of_type(&self, t: usize) -> Vec<EdgeId> {
        (0..self.graph.m()).filter(|&e| self.edge_type[e] == Some(t)).collect()
    }
}

pub fn gen_s_m(m: usize) -> Result<SmGraph> {
    gen_s_m_lambda(&SmLambda::zero(m))
}

pub fn gen_s_m_lambda(spec: &SmLambda) -> Result<SmGraph> {
    spec.validate()?;
    let m = spec.m;
    let big_n = ring_length(m);
    let mut b = Builder::default();
    let mut edge_type: Vec<Option<usize>> = Vec::new();
    // Rings: inner rings have N vertices, the outer three have N + n with
    // `orig[x]` locating original position x.
    let mut orig = Vec::with_capacity(big_n);
    let mut outer_len = 0;
    for x in 0..big_n {
        orig.push(outer_len);
        outer_len += 1 + spec.lambda[x];
    }
    let rings: Vec<Vec<usize>> =
        (0..=m).map(|k| (0..if k + 2 >= m { outer_len } else { big_n }).map(|_| b.vertex()).collect()).collect();
    // Ring k vertex standing at original position x.
    let at = |k: usize, x: usize| if k + 2 >= m { rings[k][orig[x % big_n]] } else { rings[k][x % big_n] };
    for ring in &rings {
        for i in 0..ring.len() {
            b.edge(ring[i], ring[(i + 1) % ring.len()]);
            edge_type.push(None);
        }
    }
    let mut spokes = Vec::with_capacity(m);
    for k in 0..m {
        let mut gap = Vec::new();
        let (lo, hi) = (2 * k + 1, 2 * k + 2);
        if k + 2 >= m {
            // Both rings are outer rings: one spoke per consecutive pair.
            let len = outer_len;
            for p in 0..len {
                let s = b.vertex();
                gap.push(s);
                let (l, r) = ((p + len - 1) % len, p);
                for (v, t) in [(rings[k][l], lo), (rings[k][r], lo), (rings[k + 1][l], hi), (rings[k + 1][r], hi)] {
                    b.edge(s, v);
                    edge_type.push(Some(t));
                }
            }
        } else {
            for x in 0..big_n {
                let s = b.vertex();
                gap.push(s);
                let l = x + big_n - 1;
                for (v, t) in [(at(k, l), lo), (at(k, x), lo), (at(k + 1, l), hi), (at(k + 1, x), hi)] {
                    b.edge(s, v);
                    edge_type.push(Some(t));
                }
            }
        }
        spokes.push(gap);
    }
    let half = 6 * m - 1;
    let mut central_paths = Vec::with_capacity(half);
    for x in 0..half {
        let mut path = vec![rings[0][x]];
        for _ in 0..6 * m - 4 {
            path.push(b.vertex());
        }
        path.push(rings[0][x + half]);
        for w in path.windows(2) {
            b.edge(w[0], w[1]);
            edge_type.push(None);
        }
        central_paths.push(path);
    }
    Ok(SmGraph { spec: spec.clone(), graph: b.finish(), rings, central_paths, edge_type, spokes })
}

/// `|Φ_m(n)| = C(n + 12m - 3, 12m - 3)`, the number of λ-tuples.
pub fn count_phi(m: usize, n: usize) -> BigUint {
    let k = ring_length(m) - 1;
    binomial(n + k, k)
}

fn binomial(n: usize, k: usize) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Lexicographically smallest image of `lambda` under the dihedral group
/// acting on insertion gaps: rotation `g -> g + 1` and reflection
/// `g -> -g - 1` (the gap after position `x` mirrors to the gap after
/// `-x - 1`).
pub fn dihedral_canonical(lambda: &[usize]) -> Vec<usize> {
    let len = lambda.len();
    let mut best = lambda.to_vec();
    for r in 0..len {
        let rot: Vec<usize> = (0..len).map(|g| lambda[(g + r) % len]).collect();
        let refl: Vec<usize> = (0..len).map(|g| lambda[(2 * len - 1 - g + r) % len]).collect();
        best = best.min(rot).min(refl);
    }
    best
}

/// All compositions of `n` into `len` nonnegative parts, in lexicographic
/// order.
pub fn compositions(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == len {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in (0..=rest).rev() {
            cur.push(v);
            go(rest - v, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        go(n, len, &mut Vec::new(), &mut out);
    }
    out
}

/// Result of enumerating `S_m(λ)` over dihedral λ-orbits.
#[derive(Clone, Debug)]
pub struct Enumeration {
    /// λ-orbits generated (capped).
    pub orbits: usize,
    /// Distinct canonical forms among the generated graphs.
    pub distinct: usize,
    /// `count_phi / (24m - 4)`, rounded up.
    pub bound: BigUint,
    pub capped: bool,
}

/// Generates `S_m(λ)` for one λ per dihedral orbit (up to `cap` orbits) and
/// counts distinct canonical forms.
pub fn enumerate_nonisomorphic_s(m: usize, n: usize, cap: usize) -> Result<Enumeration> {
    let len = ring_length(m);
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    let mut capped = false;
    for l in compositions(n, len) {
        let c = dihedral_canonical(&l);
        if seen.insert(c.clone()) {
            if reps.len() == cap {
                capped = true;
                break;
            }
            reps.push(c);
        }
    }
    let forms: HashSet<_> = reps
        .iter()
        .map(|l| gen_s_m_lambda(&SmLambda { m, lambda: l.clone() }).map(|g| canonical_form(&g.graph)))
        .collect::<Result<_>>()?;
    let order = BigUint::from(24 * m - 4);
    let phi = count_phi(m, n);
    let bound = (&phi + &order - BigUint::from(1u32)) / &order;
    Ok(Enumeration { orbits: reps.len(), distinct: forms.len(), bound, capped })
}
