//! Structural conditions that rule out proper 1-immersions of a planar
//! graph (class 𝓐, conditions C1–C9), the host class 𝓗 for medial
//! extensions (H1–H4), paired edges and forbidden-pattern search.

pub mod patterns;

use crate::embedding::{enumerate_short_cycles, face_traversal, is_peripheral, planarity_test, Planarity, RotationSystem};
use crate::error::{Error, Result};
use crate::flow::edge_disjoint_connectivity;
use crate::graph::Graph;
pub use patterns::{library, ForbiddenPattern};
use std::collections::{BTreeSet, HashSet};
use std::fmt;

/// Evidence for a failed condition; re-checkable with [`recheck`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vertex(usize),
    Edge(usize, usize),
    Cycle(Vec<usize>),
    /// A triangle adjacent to the listed other triangles.
    AdjacentTriangles(Vec<usize>, Vec<Vec<usize>>),
    /// A vertex on three mutually edge-disjoint triangles.
    DisjointTriangles(usize, [Vec<usize>; 3]),
    /// Fewer than four edge-disjoint paths avoiding the triangle.
    Connectivity { triangle: Vec<usize>, x: usize, y: usize, paths: usize },
    /// Paired edges on the two cycles, plus the offending vertex pair.
    Paired { e: (usize, usize), f: (usize, usize), c: Vec<usize>, c2: Vec<usize>, a: usize, a2: usize },
    /// Host vertex per pattern vertex.
    Occurrence { pattern: &'static str, map: Vec<usize> },
    /// A 4-valent vertex and a host edge joining its two opposite faces.
    Opposite { vertex: usize, c: Vec<usize>, c2: Vec<usize>, edge: (usize, usize) },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vertex(v) => write!(f, "vertex {}", v + 1),
            Witness::Edge(a, b) => write!(f, "edge {} {}", a + 1, b + 1),
            Witness::Cycle(c) => write!(f, "cycle {}", one_based(c)),
            Witness::AdjacentTriangles(t, o) => {
                write!(f, "triangle {} adjacent to", one_based(t))?;
                for x in o {
                    write!(f, " [{}]", one_based(x))?;
                }
                Ok(())
            }
            Witness::DisjointTriangles(v, ts) => {
                write!(f, "vertex {} on [{}] [{}] [{}]", v + 1, one_based(&ts[0]), one_based(&ts[1]), one_based(&ts[2]))
            }
            Witness::Connectivity { triangle, x, y, paths } => {
                write!(f, "triangle {}: vertices {} {} have {} edge-disjoint paths", one_based(triangle), x + 1, y + 1, paths)
            }
            Witness::Paired { e, f: g, c, c2, a, a2 } => write!(
                f,
                "paired {}-{} / {}-{} on [{}] and [{}], vertices {} {}",
                e.0 + 1,
                e.1 + 1,
                g.0 + 1,
                g.1 + 1,
                one_based(c),
                one_based(c2),
                a + 1,
                a2 + 1
            ),
            Witness::Occurrence { pattern, map } => write!(f, "pattern {pattern} at {}", one_based(map)),
            Witness::Opposite { vertex, c, c2, edge } => write!(
                f,
                "vertex {}: faces [{}] and [{}] joined by edge {} {}",
                vertex + 1,
                one_based(c),
                one_based(c2),
                edge.0 + 1,
                edge.1 + 1
            ),
        }
    }
}

fn one_based(v: &[usize]) -> String {
    v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionResult {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl ConditionResult {
    fn from(name: &'static str, w: Option<Witness>) -> Self {
        ConditionResult { name, pass: w.is_none(), witness: w }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub three_connected: bool,
    pub conditions: Vec<ConditionResult>,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.three_connected && self.conditions.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.name == name)
    }

    /// Names of the failing conditions, in order.
    pub fn failures(&self) -> Vec<&'static str> {
        self.conditions.iter().filter(|c| !c.pass).map(|c| c.name).collect()
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "3-connected: {}", if self.three_connected { "PASS" } else { "FAIL" })?;
        for c in &self.conditions {
            match &c.witness {
                None => writeln!(f, "{}: PASS", c.name)?,
                Some(w) => writeln!(f, "{}: FAIL {}", c.name, w)?,
            }
        }
        Ok(())
    }
}

/// Shared, precomputed structure of a simple planar graph.
struct Ctx<'a> {
    g: &'a Graph,
    nb: Vec<Vec<usize>>,
    adj: Vec<HashSet<usize>>,
    deg: Vec<usize>,
    triangles: Vec<Vec<usize>>,
    rot: RotationSystem,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph) -> Result<Self> {
        if g.has_parallel_edges() {
            return Err(Error::Param("the condition checkers expect a simple graph".into()));
        }
        let Planarity::Planar(rot) = planarity_test(g) else {
            return Err(Error::NonPlanar);
        };
        let nb = g.neighbors();
        let adj = nb.iter().map(|l| l.iter().copied().collect()).collect();
        Ok(Ctx { g, deg: g.degrees(), triangles: triangles(g), nb, adj, rot })
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    /// Face boundaries (vertex sequences) of the embedding.
    fn faces(&self) -> Vec<Vec<usize>> {
        let fs = face_traversal(self.g, &self.rot).expect("valid rotation");
        fs.faces.iter().map(|w| w.iter().map(|&(v, _)| v).collect()).collect()
    }
}

/// All triangles as sorted vertex triples, sorted.
pub fn triangles(g: &Graph) -> Vec<Vec<usize>> {
    let nb = g.neighbors();
    let mut out = Vec::new();
    for a in 0..g.n() {
        for &b in nb[a].iter().filter(|&&b| b > a) {
            for &c in nb[b].iter().filter(|&&c| c > b) {
                if nb[a].binary_search(&c).is_ok() {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    out
}

fn shares_edge(s: &[usize], t: &[usize]) -> bool {
    s != t && s.iter().filter(|v| t.contains(v)).count() == 2
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// All unordered pairs of disjoint edges whose four endpoints are the vertex
/// set of two triangles sharing an edge. Each pair is reported once, as
/// sorted endpoint pairs with the smaller pair first.
pub fn paired_edges(g: &Graph) -> Vec<((usize, usize), (usize, usize))> {
    let nb = g.neighbors();
    let has = |a: usize, b: usize| nb[a].binary_search(&b).is_ok();
    let tri = triangles(g);
    let mut out = BTreeSet::new();
    for (i, s) in tri.iter().enumerate() {
        for t in &tri[i + 1..] {
            if !shares_edge(s, t) {
                continue;
            }
            let mut q: Vec<usize> = s.iter().chain(t.iter()).copied().collect();
            q.sort_unstable();
            q.dedup();
            let [a, b, c, d] = [q[0], q[1], q[2], q[3]];
            for (e, f) in [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))] {
                if has(e.0, e.1) && has(f.0, f.1) {
                    out.insert((e, f));
                }
            }
        }
    }
    out.into_iter().collect()
}

fn c1(x: &Ctx) -> Option<Witness> {
    (0..x.g.n()).find(|&v| !(4..=6).contains(&x.deg[v])).map(Witness::Vertex)
}

fn c2(x: &Ctx) -> Option<Witness> {
    let mut covered = HashSet::new();
    for t in &x.triangles {
        covered.extend([key(t[0], t[1]), key(t[0], t[2]), key(t[1], t[2])]);
    }
    x.g.edges().iter().find(|&&(a, b)| !covered.contains(&key(a, b))).map(|&(a, b)| Witness::Edge(a, b))
}

fn c3(x: &Ctx) -> Option<Witness> {
    x.triangles.iter().find(|t| !is_peripheral(x.g, t).expect("triangle")).map(|t| Witness::Cycle(t.clone()))
}

fn c4(x: &Ctx) -> Option<Witness> {
    for t in &x.triangles {
        let adj: Vec<Vec<usize>> = x.triangles.iter().filter(|s| shares_edge(t, s)).cloned().collect();
        if adj.len() > 1 {
            return Some(Witness::AdjacentTriangles(t.clone(), adj));
        }
    }
    None
}

fn c5(x: &Ctx) -> Option<Witness> {
    let edges_of = |t: &[usize]| [key(t[0], t[1]), key(t[0], t[2]), key(t[1], t[2])];
    let disjoint = |s: &[usize], t: &[usize]| edges_of(s).iter().all(|e| !edges_of(t).contains(e));
    for v in 0..x.g.n() {
        let ts: Vec<&Vec<usize>> = x.triangles.iter().filter(|t| t.contains(&v)).collect();
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                if !disjoint(ts[i], ts[j]) {
                    continue;
                }
                for k in j + 1..ts.len() {
                    if disjoint(ts[i], ts[k]) && disjoint(ts[j], ts[k]) {
                        return Some(Witness::DisjointTriangles(v, [ts[i].clone(), ts[j].clone(), ts[k].clone()]));
                    }
                }
            }
        }
    }
    None
}

/// True iff the 4-cycle has a chord splitting it into two peripheral
/// triangles.
fn two_triangular_faces(x: &Ctx, c: &[usize]) -> bool {
    [(0, 2), (1, 3)].iter().any(|&(i, j)| {
        let (p, q) = (c[i], c[j]);
        x.adjacent(p, q) && {
            let (r, s) = (c[(i + 1) % 4], c[(i + 3) % 4]);
            is_peripheral(x.g, &[p, r, q]).unwrap_or(false) && is_peripheral(x.g, &[p, s, q]).unwrap_or(false)
        }
    })
}

fn c6(x: &Ctx) -> Option<Witness> {
    enumerate_short_cycles(x.g, 4)
        .into_iter()
        .filter(|c| c.len() == 4)
        .find(|c| !is_peripheral(x.g, c).expect("cycle") && !two_triangular_faces(x, c))
        .map(Witness::Cycle)
}

/// Vertices outside the triangle and its neighbourhood.
fn far_vertices(x: &Ctx, t: &[usize]) -> Vec<usize> {
    let mut near = vec![false; x.g.n()];
    for &v in t {
        near[v] = true;
        for &w in &x.nb[v] {
            near[w] = true;
        }
    }
    (0..x.g.n()).filter(|&v| !near[v]).collect()
}

fn c7(x: &Ctx) -> Option<Witness> {
    for t in &x.triangles {
        let far = far_vertices(x, t);
        for (i, &a) in far.iter().enumerate() {
            for &b in &far[i + 1..] {
                let k = edge_disjoint_connectivity(x.g, a, b, t).expect("distinct allowed vertices");
                if k < 4 {
                    return Some(Witness::Connectivity { triangle: t.clone(), x: a, y: b, paths: k });
                }
            }
        }
    }
    None
}

fn cycle_has_edge(c: &[usize], e: (usize, usize)) -> bool {
    let k = c.len();
    (0..k).any(|i| key(c[i], c[(i + 1) % k]) == key(e.0, e.1))
}

/// Nontriangular peripheral cycles: the faces of the embedding of length at
/// least four that are peripheral.
fn nontriangular_peripheral(x: &Ctx) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = x
        .faces()
        .into_iter()
        .filter(|f| f.len() >= 4)
        .filter(|f| {
            let distinct: HashSet<_> = f.iter().collect();
            distinct.len() == f.len() && is_peripheral(x.g, f).unwrap_or(false)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn c8_pair(x: &Ctx, e: (usize, usize), f: (usize, usize), c: &[usize], c2: &[usize]) -> Option<Witness> {
    let w = |a, a2| Witness::Paired { e, f, c: c.to_vec(), c2: c2.to_vec(), a, a2 };
    if let Some(&a) = c.iter().find(|v| c2.contains(v)) {
        return Some(w(a, a));
    }
    let quad = [e.0, e.1, f.0, f.1];
    for &a in c {
        for &a2 in c2 {
            if quad.contains(&a) && quad.contains(&a2) {
                continue;
            }
            if x.adjacent(a, a2) {
                return Some(w(a, a2));
            }
            let via = x.nb[a].iter().any(|&b| !c.contains(&b) && !c2.contains(&b) && x.adjacent(b, a2));
            if via {
                return Some(w(a, a2));
            }
        }
    }
    None
}

fn c8(x: &Ctx) -> Option<Witness> {
    let cycles = nontriangular_peripheral(x);
    for (e, f) in paired_edges(x.g) {
        for (e, f) in [(e, f), (f, e)] {
            for c in cycles.iter().filter(|c| cycle_has_edge(c, e)) {
                for c2 in cycles.iter().filter(|c| cycle_has_edge(c, f)) {
                    if let Some(w) = c8_pair(x, e, f, c, c2) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

fn c9(x: &Ctx) -> Option<Witness> {
    for p in library() {
        if let Some(map) = find_occurrences(x.g, &p, 1).into_iter().next() {
            return Some(Witness::Occurrence { pattern: p.name, map });
        }
    }
    None
}

/// Evaluates (C1)–(C9). The graph must be simple and planar; 3-connectivity
/// is reported alongside the conditions.
pub fn check_a_class(g: &Graph) -> Result<ConditionReport> {
    let x = Ctx::new(g)?;
    let checks: [(&'static str, fn(&Ctx) -> Option<Witness>); 9] =
        [("C1", c1), ("C2", c2), ("C3", c3), ("C4", c4), ("C5", c5), ("C6", c6), ("C7", c7), ("C8", c8), ("C9", c9)];
    let conditions = checks.iter().map(|&(n, f)| ConditionResult::from(n, f(&x))).collect();
    Ok(ConditionReport { three_connected: g.is_3_connected(), conditions })
}

/// Re-evaluates a single failing witness: true iff it still shows a
/// violation of the named condition.
pub fn recheck(g: &Graph, name: &str, w: &Witness) -> Result<bool> {
    let x = Ctx::new(g)?;
    Ok(match (name, w) {
        ("C1", Witness::Vertex(v)) | ("H1", Witness::Vertex(v)) => {
            let ok = if name == "C1" { 4..=6 } else { 3..=4 };
            !ok.contains(&x.deg[*v])
        }
        ("C2", Witness::Edge(a, b)) => x.adjacent(*a, *b) && !x.nb[*a].iter().any(|&c| x.adjacent(c, *b)),
        ("C3", Witness::Cycle(t)) => t.len() == 3 && !is_peripheral(g, t)?,
        ("H2", Witness::Cycle(t)) => t.len() == 3 && crate::embedding::check_cycle(g, t).is_ok(),
        ("C4", Witness::AdjacentTriangles(t, o)) => {
            o.len() > 1 && o.iter().all(|s| shares_edge(t, s) && triangles(g).contains(s))
        }
        ("C5", Witness::DisjointTriangles(v, ts)) => {
            let mut used = HashSet::new();
            ts.iter().all(|t| {
                t.contains(v)
                    && crate::embedding::check_cycle(g, t).is_ok()
                    && [key(t[0], t[1]), key(t[0], t[2]), key(t[1], t[2])].iter().all(|e| used.insert(*e))
            })
        }
        ("C6", Witness::Cycle(c)) => c.len() == 4 && !is_peripheral(g, c)? && !two_triangular_faces(&x, c),
        ("H3", Witness::Cycle(c)) => c.len() == 4 && !is_peripheral(g, c)?,
        ("C7", Witness::Connectivity { triangle, x: a, y: b, .. }) => {
            far_vertices(&x, triangle).contains(a)
                && far_vertices(&x, triangle).contains(b)
                && edge_disjoint_connectivity(g, *a, *b, triangle)? < 4
        }
        ("C8", Witness::Paired { e, f, c, c2, .. }) => {
            let paired = paired_edges(g);
            let p = (key(e.0, e.1).min(key(f.0, f.1)), key(e.0, e.1).max(key(f.0, f.1)));
            paired.contains(&p)
                && is_peripheral(g, c)?
                && is_peripheral(g, c2)?
                && c.len() >= 4
                && c2.len() >= 4
                && c8_pair(&x, *e, *f, c, c2).is_some()
        }
        ("C9", Witness::Occurrence { pattern, map }) => {
            library().iter().any(|p| p.name == *pattern && is_occurrence(g, &x.deg, p, map))
        }
        ("H4", Witness::Opposite { vertex, c, c2, edge }) => {
            x.deg[*vertex] == 4
                && x.adjacent(edge.0, edge.1)
                && c.contains(vertex)
                && c2.contains(vertex)
                && c.contains(&edge.0)
                && c2.contains(&edge.1)
                && edge.0 != *vertex
                && edge.1 != *vertex
        }
        _ => false,
    })
}

fn is_occurrence(g: &Graph, deg: &[usize], p: &ForbiddenPattern, map: &[usize]) -> bool {
    if map.len() != p.graph.n() || map.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if map[i] == map[j] && p.starred != Some((i, j)) && p.starred != Some((j, i)) {
                return false;
            }
        }
        if p.degree[i].is_some_and(|d| deg[map[i]] != d) {
            return false;
        }
    }
    p.graph.edges().iter().all(|&(a, b)| g.find_edge(map[a], map[b]).is_some())
}

/// Host occurrences of a pattern (at most `cap`), deduplicated by image:
/// two maps with the same vertex set and edge set count once.
pub fn find_occurrences(g: &Graph, p: &ForbiddenPattern, cap: usize) -> Vec<Vec<usize>> {
    let k = p.graph.n();
    let pnb = p.graph.neighbors();
    let hnb = g.neighbors();
    let hdeg = g.degrees();
    let pdeg = p.graph.degrees();
    // Match order: BFS from the most constrained vertex.
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    let start = (0..k).max_by_key(|&v| (p.degree[v].is_some(), pdeg[v])).unwrap_or(0);
    let mut queue = std::collections::VecDeque::from([start]);
    placed[start] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &pnb[v] {
            if !placed[w] {
                placed[w] = true;
                queue.push_back(w);
            }
        }
    }
    for v in 0..k {
        if !placed[v] {
            order.push(v);
        }
    }
    struct S<'a> {
        g: &'a Graph,
        p: &'a ForbiddenPattern,
        pnb: &'a [Vec<usize>],
        hnb: &'a [Vec<usize>],
        hdeg: &'a [usize],
        pdeg: &'a [usize],
        order: &'a [usize],
        map: Vec<usize>,
        used: Vec<usize>,
        out: Vec<Vec<usize>>,
        images: HashSet<(Vec<usize>, Vec<(usize, usize)>)>,
        cap: usize,
    }
    impl S<'_> {
        fn fits(&self, pv: usize, hv: usize) -> bool {
            if let Some(d) = self.p.degree[pv] {
                if self.hdeg[hv] != d {
                    return false;
                }
            } else if self.hdeg[hv] < self.pdeg[pv] {
                return false;
            }
            if self.used[hv] > 0 {
                let Some((a, b)) = self.p.starred else { return false };
                let twin = if pv == a { b } else if pv == b { a } else { return false };
                if self.map[twin] != hv {
                    return false;
                }
            }
            self.pnb[pv].iter().all(|&w| self.map[w] == usize::MAX || self.hnb[hv].binary_search(&self.map[w]).is_ok())
        }

        fn go(&mut self, i: usize) {
            if self.out.len() >= self.cap {
                return;
            }
            if i == self.order.len() {
                let mut vs = self.map.clone();
                vs.sort_unstable();
                vs.dedup();
                let mut es: Vec<(usize, usize)> =
                    self.p.graph.edges().iter().map(|&(a, b)| key(self.map[a], self.map[b])).collect();
                es.sort_unstable();
                es.dedup();
                if self.images.insert((vs, es)) {
                    self.out.push(self.map.clone());
                }
                return;
            }
            let pv = self.order[i];
            let cands: Vec<usize> = match self.pnb[pv].iter().find(|&&w| self.map[w] != usize::MAX) {
                Some(&w) => self.hnb[self.map[w]].clone(),
                None => (0..self.g.n()).collect(),
            };
            for hv in cands {
                if self.fits(pv, hv) {
                    self.map[pv] = hv;
                    self.used[hv] += 1;
                    self.go(i + 1);
                    self.used[hv] -= 1;
                    self.map[pv] = usize::MAX;
                }
            }
        }
    }
    let mut s = S {
        g,
        p,
        pnb: &pnb,
        hnb: &hnb,
        hdeg: &hdeg,
        pdeg: &pdeg,
        order: &order,
        map: vec![usize::MAX; k],
        used: vec![0; g.n()],
        out: Vec::new(),
        images: HashSet::new(),
        cap,
    };
    s.go(0);
    s.out
}

/// All occurrences of every library pattern, up to `cap` per pattern.
pub fn find_forbidden(g: &Graph, lib: &[ForbiddenPattern], cap: usize) -> Vec<(&'static str, Vec<usize>)> {
    lib.iter().flat_map(|p| find_occurrences(g, p, cap).into_iter().map(move |m| (p.name, m))).collect()
}

/// Faces around `v` in rotation order: face `i` lies between the `i`-th and
/// the next edge of the rotation at `v`.
fn faces_at(x: &Ctx, v: usize) -> Vec<Vec<usize>> {
    let fs = face_traversal(x.g, &x.rot).expect("valid rotation");
    let rot = &x.rot.rot[v];
    let mut out = Vec::new();
    for i in 0..rot.len() {
        // The walk that leaves v along the next edge after rot[i] enters v
        // along rot[i]; find the face containing the dart (v, rot[i+1]).
        let e = rot[(i + 1) % rot.len()];
        let f = fs.faces.iter().find(|w| w.iter().any(|&(t, f)| t == v && f == e)).expect("dart on a face");
        out.push(f.iter().map(|&(t, _)| t).collect());
    }
    out
}

fn h1(x: &Ctx) -> Option<Witness> {
    (0..x.g.n()).find(|&v| !(3..=4).contains(&x.deg[v])).map(Witness::Vertex)
}

fn h2(x: &Ctx) -> Option<Witness> {
    x.triangles.first().map(|t| Witness::Cycle(t.clone()))
}

fn h3(x: &Ctx) -> Option<Witness> {
    enumerate_short_cycles(x.g, 4)
        .into_iter()
        .filter(|c| c.len() == 4)
        .find(|c| !is_peripheral(x.g, c).expect("cycle"))
        .map(Witness::Cycle)
}

fn h4(x: &Ctx) -> Option<Witness> {
    for v in (0..x.g.n()).filter(|&v| x.deg[v] == 4) {
        let fs = faces_at(x, v);
        for (i, j) in [(0, 2), (1, 3)] {
            let (c, c2) = (&fs[i], &fs[j]);
            for &a in c.iter().filter(|&&a| a != v) {
                for &b in c2.iter().filter(|&&b| b != v) {
                    if x.adjacent(a, b) {
                        return Some(Witness::Opposite { vertex: v, c: c.clone(), c2: c2.clone(), edge: (a, b) });
                    }
                }
            }
        }
    }
    None
}

/// Evaluates (H1)–(H4) on the embedding found by the planarity test, which
/// is unique up to mirroring for 3-connected graphs.
pub fn check_h_class(h: &Graph) -> Result<ConditionReport> {
    let x = Ctx::new(h)?;
    let checks: [(&'static str, fn(&Ctx) -> Option<Witness>); 4] = [("H1", h1), ("H2", h2), ("H3", h3), ("H4", h4)];
    let conditions = checks.iter().map(|&(n, f)| ConditionResult::from(n, f(&x))).collect();
    Ok(ConditionReport { three_connected: h.is_3_connected(), conditions })
}

/// The cyclic order of edges at each vertex of a planar graph's embedding.
pub(crate) fn rotation_of(g: &Graph) -> Result<RotationSystem> {
    match planarity_test(g) {
        Planarity::Planar(r) => Ok(r),
        Planarity::NonPlanar => Err(Error::NonPlanar),
    }
}
