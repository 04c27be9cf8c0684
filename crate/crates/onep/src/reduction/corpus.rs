//! Planar 3-colourable sources with degrees 3 and 4 for exercising the
//! reduction: small named solids plus seeded random cubic graphs (duals of
//! stacked triangulations), some with extra chords that raise degrees to 4.

use super::coloring::{improper_edge, three_coloring, Coloring};
use crate::embedding::{face_traversal, planarity_test, Planarity};
use crate::graph::{named, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// A source graph with a proper 3-colouring.
#[derive(Clone, Debug)]
pub struct Source {
    pub name: String,
    pub graph: Graph,
    pub coloring: Coloring,
}

/// Largest source order the corpus produces.
pub const MAX_ORDER: usize = 50;

/// Medial graph of a plane graph: one vertex per edge, consecutive edges
/// around every vertex joined.
pub fn medial_graph(g: &Graph) -> Option<Graph> {
    let Planarity::Planar(rot) = planarity_test(g) else {
        return None;
    };
    let mut edges = Vec::new();
    for list in &rot.rot {
        for (i, &e) in list.iter().enumerate() {
            edges.push((e, list[(i + 1) % list.len()]));
        }
    }
    Graph::build(g.m(), edges, false).ok()
}

/// Dual of a stacked triangulation on `n >= 4` vertices: a 3-connected
/// cubic planar graph on `2n - 4` vertices.
pub fn stacked_dual(n: usize, rng: &mut impl Rng) -> Graph {
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for v in 4..n.max(4) {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        faces[i] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([a, c, v]);
    }
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (f, t) in faces.iter().enumerate() {
        for (x, y) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            by_edge.entry((x.min(y), x.max(y))).or_default().push(f);
        }
    }
    let mut edges: Vec<(usize, usize)> = by_edge.values().map(|fs| (fs[0], fs[1])).collect();
    edges.sort_unstable();
    Graph::simple(faces.len(), &edges)
}

/// Adds chords inside faces between degree-3 vertices of different colours
/// (so planarity and the colouring survive), each face at most once.
fn add_chords(g: &Graph, col: &Coloring, rng: &mut impl Rng) -> Graph {
    let Planarity::Planar(rot) = planarity_test(g) else {
        unreachable!("cubic dual is planar");
    };
    let faces = face_traversal(g, &rot).expect("valid rotation").faces;
    let mut edges = g.edges().to_vec();
    let mut deg = g.degrees();
    let nb = g.neighbors();
    for f in &faces {
        if !rng.gen_bool(0.5) {
            continue;
        }
        let vs: Vec<usize> = f.iter().map(|&(v, _)| v).collect();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if a != b && deg[a] == 3 && deg[b] == 3 && col[a] != col[b] && !nb[a].contains(&b) {
                    pairs.push((a.min(b), a.max(b)));
                }
            }
        }
        pairs.retain(|p| !edges.contains(p));
        if let Some(&(a, b)) = pairs.choose(rng) {
            edges.push((a, b));
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    Graph::simple(g.n(), &edges)
}

/// Relabels vertices in breadth-first order from vertex 0.
fn bfs_relabel(g: &Graph) -> Graph {
    let nb = g.neighbors();
    let mut label = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::from([0]);
    label[0] = 0;
    let mut next = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &nb[v] {
            if label[w] == usize::MAX {
                label[w] = next;
                next += 1;
                queue.push_back(w);
            }
        }
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (label[u], label[v])).collect();
    Graph::simple(g.n(), &edges)
}

fn colored(name: String, graph: Graph) -> Option<Source> {
    let coloring = three_coloring(&graph)?;
    Some(Source { name, graph, coloring })
}

/// Named solids with degrees in {3, 4} that are 3-colourable.
pub fn named_sources() -> Vec<Source> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.extend(colored(format!("prism-{n}"), named::prism_n(n)));
    }
    out.extend(colored("octahedron".into(), named::octahedron()));
    for n in [6, 9] {
        out.extend(colored(format!("antiprism-{n}"), named::antiprism(n)));
    }
    out.extend(colored("cuboctahedron".into(), medial_graph(&named::cube()).expect("cube is planar")));
    out.extend(colored("dodecahedron".into(), named::dodecahedron()));
    out
}

/// `count` seeded random sources of order at most [`MAX_ORDER`]; every other
/// one gets chords.
pub fn random_sources(count: usize, seed: u64) -> Vec<Source> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for i in 0..count {
        let n = rng.gen_range(5..=MAX_ORDER / 2 + 2);
        let g = bfs_relabel(&stacked_dual(n, &mut rng));
        let col = three_coloring(&g).expect("connected cubic graphs other than K4 are 3-colourable");
        let (name, g) = if i % 2 == 1 { (format!("cubic-chords-{i}"), add_chords(&g, &col, &mut rng)) } else { (format!("cubic-{i}"), g) };
        debug_assert!(improper_edge(&g, &col).is_none());
        out.push(Source { name, graph: g, coloring: col });
    }
    out
}

/// Named sources followed by `random` seeded random ones.
pub fn source_corpus(random: usize, seed: u64) -> Vec<Source> {
    let mut out = named_sources();
    out.extend(random_sources(random, seed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::is_planar;

    #[test]
    fn corpus_respects_the_source_contract() {
        let corpus = source_corpus(12, 7);
        assert!(corpus.len() >= 20);
        for s in &corpus {
            let deg = s.graph.degrees();
            assert!(deg.iter().all(|&d| d == 3 || d == 4), "{}", s.name);
            assert!(s.graph.n() <= MAX_ORDER && is_planar(&s.graph) && s.graph.is_connected(), "{}", s.name);
            assert!(improper_edge(&s.graph, &s.coloring).is_none(), "{}", s.name);
        }
        assert!(corpus.iter().any(|s| s.graph.degrees().contains(&4) && s.graph.degrees().contains(&3)));
    }

    #[test]
    fn medial_of_cube_is_cuboctahedron() {
        let c = medial_graph(&named::cube()).unwrap();
        assert_eq!((c.n(), c.m()), (12, 24));
        assert!(c.degrees().iter().all(|&d| d == 4));
        assert_eq!(crate::pn::triangles(&c).len(), 8);
    }

    #[test]
    fn stacked_duals_are_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 4..20 {
            let g = stacked_dual(n, &mut rng);
            assert_eq!(g.n(), 2 * n - 4);
            assert!(g.degrees().iter().all(|&d| d == 3));
            assert!(g.is_3_connected());
        }
    }
}
