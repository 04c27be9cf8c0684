//! Acceptance suite: one PASS/FAIL line per criterion, tolerances and time
//! budgets pinned below. Exits non-zero if any criterion fails.

use num_bigint::BigUint;
use onep::canon::canonical_form;
use onep::families::chain_graph::order_parameters;
use onep::families::chains::variant_subsets;
use onep::families::medial::g_n_diagonals;
use onep::families::s_m::{count_phi, ring_length};
use onep::families::*;
use onep::graph::{named, Graph};
use onep::immersion::{crossing_counts, edge_bound_reject, serialize_immersion, verify};
use onep::pn::patterns::QUAD;
use onep::pn::{check_a_class, find_occurrences, paired_edges, recheck, triangles, Witness};
use onep::reduction::corpus::source_corpus;
use onep::reduction::*;
use onep::solver::{decide_1planar, mn_check, MnStatus, SolverBudget, Status};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::{Duration, Instant};

/// Wall-clock targets per criterion.
const SOLVER_SUITE_BUDGET: Duration = Duration::from_secs(600);
const MN_BUDGET: Duration = Duration::from_secs(1800);
const COUNTING_BUDGET: Duration = Duration::from_secs(300);
const REDUCTION_PER_INSTANCE_BUDGET: Duration = Duration::from_secs(120);
/// Graph counts on 0..=6 vertices up to isomorphism: all, and connected.
const GRAPH_COUNTS: [usize; 7] = [1, 1, 2, 4, 11, 34, 156];
const CONNECTED_COUNTS: [usize; 7] = [1, 1, 1, 2, 6, 21, 112];
const GRAPH_COUNT_7: usize = 1044;
/// Minimum number of cases per family in the count grid.
const FAMILY_CASES: usize = 25;
/// Reduction corpus: named sources plus this many seeded random ones.
const RANDOM_SOURCES: usize = 12;
const CORPUS_SEED: u64 = 7;
const MIN_CORPUS: usize = 10;
/// Frozen bound on |V(instance)| / |V(source)|.
const LINEARITY_BOUND: usize = 535;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    check(t <= budget, || format!("{what} took {:.1} s, budget {} s", t.as_secs_f64(), budget.as_secs()))
}

fn unlimited(jobs: usize) -> SolverBudget {
    SolverBudget { time_limit: None, jobs, ..SolverBudget::default() }
}

/// All graphs on `n` vertices up to isomorphism, by adding a vertex with
/// every neighbourhood to each graph on `n - 1` vertices.
fn graphs_up_to_iso(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(0)]];
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        for g in &levels[n - 1] {
            for mask in 0u32..(1 << (n - 1)) {
                let mut e = g.edges().to_vec();
                e.extend((0..n - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, n - 1)));
                let h = Graph::simple(n, &e);
                if seen.insert(canonical_form(&h)) {
                    level.push(h);
                }
            }
        }
        levels.push(level);
    }
    levels
}

fn c1_solver_oracle() -> Outcome {
    let start = Instant::now();
    let levels = graphs_up_to_iso(6);
    for (n, level) in levels.iter().enumerate() {
        check(level.len() == GRAPH_COUNTS[n], || format!("{} graphs on {n} vertices, expected {}", level.len(), GRAPH_COUNTS[n]))?;
        let conn = level.iter().filter(|g| g.is_connected()).count();
        check(conn == CONNECTED_COUNTS[n], || format!("{conn} connected graphs on {n} vertices, expected {}", CONNECTED_COUNTS[n]))?;
    }
    let mut connected = 0;
    let mut total = 0;
    for g in levels.iter().flatten() {
        let v = decide_1planar(g, &unlimited(1));
        check(v.status == Status::Yes, || format!("verdict {} on {:?}", v.status, g.edges()))?;
        let w = v.witness.as_ref().ok_or("YES without witness")?;
        check(verify(w, 1).is_empty() && w.base == *g, || format!("witness fails on {:?}", g.edges()))?;
        total += 1;
        connected += usize::from(g.is_connected());
    }
    within(start, SOLVER_SUITE_BUDGET, "solver suite")?;
    Ok(format!("all {total} graphs on <= 6 vertices ({connected} connected) are 1-planar with verified witnesses"))
}

fn k7_minus_triangle() -> Graph {
    let e: Vec<_> = named::complete(7).edges().iter().copied().filter(|&(u, v)| !(u < 3 && v < 3)).collect();
    Graph::simple(7, &e)
}

fn c2_mn_smallest() -> Outcome {
    let start = Instant::now();
    let g = k7_minus_triangle();
    let r = mn_check(&g, &unlimited(1));
    check(r.status == MnStatus::Confirmed, || format!("status {:?}", r.status))?;
    check(r.graph.status == Status::No, || "graph itself not rejected".into())?;
    check(r.deletions.len() == 18, || format!("{} deletions", r.deletions.len()))?;
    for ((u, v), d) in &r.deletions {
        let d = d.as_ref().ok_or("deletion skipped")?;
        let w = d.witness.as_ref().ok_or("deletion without witness")?;
        let e = g.find_edge(*u, *v).ok_or("unknown edge")?;
        check(d.status == Status::Yes && verify(w, 1).is_empty() && w.base == g.delete_edge(e).unwrap(), || {
            format!("deletion {}-{} not certified", u + 1, v + 1)
        })?;
    }
    within(start, MN_BUDGET, "mn-check")?;
    Ok("K7 - E(K3): NO for the graph, 18/18 deletions YES with verified witnesses".into())
}

fn c3_edge_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut above, mut below) = (0, 0);
    for n in 3..=9usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let limit = 4 * n - 8;
        for m in 0..=pairs.len() {
            for _ in 0..40 {
                let mut p = pairs.clone();
                p.shuffle(&mut rng);
                let g = Graph::simple(n, &p[..m]);
                let rejected = edge_bound_reject(&g);
                if m > limit {
                    check(rejected, || format!("n {n} m {m} not rejected"))?;
                    above += 1;
                    let v = decide_1planar(&g, &unlimited(1));
                    check(v.status == Status::No, || format!("n {n} m {m}: verdict {}", v.status))?;
                } else {
                    check(!rejected, || format!("n {n} m {m} <= {limit} rejected"))?;
                    below += 1;
                }
            }
        }
    }
    Ok(format!("{above} graphs above 4n-8 rejected and solved NO, {below} at or below the bound accepted"))
}

fn c4_deletion_certificates() -> Outcome {
    let cg = gen_chain_graph(&ChainSpec::plain([2, 2, 2], [2, 3, 4])).map_err(|e| e.to_string())?;
    let g = &cg.graph;
    check(g.n() == 57, || format!("order {}", g.n()))?;
    for e in 0..g.m() {
        let imm = immersions_of_deleted_edge(&cg, e).map_err(|x| format!("edge {}: {x}", e + 1))?;
        check(imm.base == g.delete_edge(e).unwrap(), || format!("edge {}: certificate for another graph", e + 1))?;
        let v = verify(&imm, 1);
        check(v.is_empty(), || format!("edge {}: {}", e + 1, v[0]))?;
    }
    Ok(format!("{} of {} single-edge deletions certified at k = 1 (full non-1-planarity out of scope)", g.m(), g.m()))
}

fn c5_counting() -> Outcome {
    let start = Instant::now();
    let mut detail = Vec::new();
    for t in 2..=6 {
        let forms: HashSet<_> = variant_subsets(t)
            .iter()
            .map(|s| gen_chain(ChainKind::B, t, s).map(|c| canonical_form(&c.graph)))
            .collect::<onep::Result<_>>()
            .map_err(|e| e.to_string())?;
        check(forms.len() == 1 << (t - 1), || format!("t = {t}: {} forms, expected {}", forms.len(), 1 << (t - 1)))?;
        detail.push(forms.len().to_string());
    }
    let (l, t) = order_parameters(63).ok_or("no parameters for order 63")?;
    let mut forms = HashSet::new();
    let (v3, vt) = (variant_subsets(3), variant_subsets(t));
    for a in [vec![]] {
        for b in &v3 {
            for c in &vt {
                let spec = ChainSpec { a_lengths: [2, 2, l], b_lengths: [2, 3, t], b_variants: [a.clone(), b.clone(), c.clone()] };
                let cg = gen_chain_graph(&spec).map_err(|e| e.to_string())?;
                check(cg.graph.n() == 63, || format!("order {}", cg.graph.n()))?;
                forms.insert(canonical_form(&cg.graph));
            }
        }
    }
    let bound = 2f64.powf((63.0 - 54.0) / 4.0).ceil() as usize;
    check(forms.len() >= bound, || format!("{} distinct chain graphs of order 63, need {bound}", forms.len()))?;
    within(start, COUNTING_BUDGET, "counting")?;
    Ok(format!("B-chain variant forms for t = 2..6: {}; {} distinct chain graphs of order 63 (>= {bound})", detail.join(","), forms.len()))
}

/// `C(a, b)` by Pascal's rule.
fn pascal(a: usize, b: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..a {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[b]
}

/// Number of non-negative integer tuples of length `len` summing to `n`, by
/// walking every tuple.
fn tuples(len: usize, n: usize) -> u64 {
    fn go(pos: usize, left: usize, len: usize) -> u64 {
        if pos == len {
            return u64::from(left == 0);
        }
        (0..=left).map(|x| go(pos + 1, left - x, len)).sum()
    }
    go(0, n, len)
}

fn c6_phi() -> Outcome {
    let mut cases = 0;
    for m in [4, 5] {
        for n in 0..=4 {
            let got = count_phi(m, n);
            let expected = BigUint::from(pascal(n + 12 * m - 3, 12 * m - 3));
            check(got == expected, || format!("m {m} n {n}: {got} vs {expected}"))?;
            if n <= 2 {
                let direct = BigUint::from(tuples(ring_length(m), n));
                check(got == direct, || format!("m {m} n {n}: {got} vs {direct} tuples"))?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cases equal the binomial; n <= 2 equal direct tuple enumeration"))
}

fn c7_family_counts() -> Outcome {
    let link_m = |k| gen_link(k).graph.m();
    let (a_link, b_link, base_link) = (link_m(LinkKind::A), link_m(LinkKind::B), link_m(LinkKind::Base));
    let chain_edges = |kind, t: usize| match kind {
        ChainKind::A => (t - 1) * a_link + base_link,
        ChainKind::B => (t - 1) * b_link + base_link,
    };
    let mut counts = Vec::new();
    let err = |e: onep::Error| e.to_string();
    for (kind, order) in [(ChainKind::A, 3usize), (ChainKind::B, 4)] {
        let mut cases = 0;
        for t in 2..2 + FAMILY_CASES {
            let c = gen_chain(kind, t, &[]).map_err(err)?;
            let n = order * t + if order == 3 { 2 } else { 1 };
            check((c.graph.n(), c.graph.m()) == (n, chain_edges(kind, t)), || format!("{kind:?}-chain t {t}: {} {}", c.graph.n(), c.graph.m()))?;
            cases += 1;
        }
        counts.push(cases);
    }
    let mut cases = 0;
    for l in 2..7 {
        for t in 4..9 {
            let cg = gen_chain_graph(&ChainSpec::plain([2, 2, l], [2, 3, t])).map_err(err)?;
            let m = 3 + 2 * chain_edges(ChainKind::A, 2) + chain_edges(ChainKind::A, l) + chain_edges(ChainKind::B, 2) + chain_edges(ChainKind::B, 3) + chain_edges(ChainKind::B, t);
            check((cg.graph.n(), cg.graph.m()) == (35 + 3 * l + 4 * t, m), || format!("chain graph l {l} t {t}"))?;
            cases += 1;
        }
    }
    counts.push(cases);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut cases = 0;
    for (m, ns) in [(4usize, 0..13usize), (5, 0..13)] {
        for n in ns {
            let len = 12 * m - 2;
            let mut lambda = vec![0; len];
            for _ in 0..n {
                lambda[rng.gen_range(0..len)] += 1;
            }
            let s = gen_s_m_lambda(&SmLambda { m, lambda }).map_err(err)?;
            let order = (5 * m - 1) * (12 * m - 2) + 5 * n;
            let size = (5 * m + 1) * (12 * m - 2) + 11 * n + (6 * m - 1) * (6 * m - 3);
            check((s.graph.n(), s.graph.m()) == (order, size), || format!("S_{m} n {n}: {} {}", s.graph.n(), s.graph.m()))?;
            cases += 1;
        }
    }
    counts.push(cases);
    let mut cases = 0;
    for n in 6..6 + FAMILY_CASES {
        let u = gen_u_graph(n).map_err(err)?;
        check((u.graph.n(), u.graph.m()) == (4 * n, 13 * n), || format!("U n {n}"))?;
        cases += 1;
    }
    counts.push(cases);
    let mut cases = 0;
    for n in 6..6 + FAMILY_CASES {
        let h = gen_h_n(n).map_err(err)?;
        let me = gen_medial_extension(&h, &g_n_diagonals(&h, n)).map_err(err)?;
        let deg = h.degrees();
        let size = 3 * deg.iter().filter(|&&d| d == 3).count() + 5 * deg.iter().filter(|&&d| d == 4).count();
        check((me.graph.n(), me.graph.m()) == (h.m(), size), || format!("medial extension of H_{n}"))?;
        cases += 1;
    }
    counts.push(cases);
    check(counts.iter().all(|&c| c >= FAMILY_CASES), || format!("case counts {counts:?}"))?;
    Ok(format!("A-chain/B-chain/chain-graph/S_m(lambda)/U-graph/medial cases {counts:?} all match"))
}

/// Independent check of a pattern occurrence: injective (up to the starred
/// pair), edges preserved, constrained degrees exact.
fn occurrence_holds(g: &Graph, map: &[usize]) -> bool {
    let p = QUAD.compile();
    let deg = g.degrees();
    let distinct: BTreeSet<usize> = map.iter().copied().collect();
    let injective = distinct.len() == map.len() || p.starred.is_some_and(|(a, b)| map[a] == map[b] && distinct.len() + 1 == map.len());
    injective
        && p.graph.edges().iter().all(|&(u, v)| map[u] == map[v] || g.find_edge(map[u], map[v]).is_some())
        && p.degree.iter().enumerate().all(|(i, d)| d.map_or(true, |d| deg[map[i]] == d))
}

/// Paired edges by brute force: disjoint edge pairs whose four endpoints
/// span at least five edges (two triangles sharing an edge).
fn paired_oracle(g: &Graph) -> Vec<((usize, usize), (usize, usize))> {
    let e: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut out = BTreeSet::new();
    for (i, &a) in e.iter().enumerate() {
        for &b in &e[i + 1..] {
            let vs = [a.0, a.1, b.0, b.1];
            if vs.iter().collect::<BTreeSet<_>>().len() < 4 {
                continue;
            }
            let spanned = e.iter().filter(|&&(x, y)| vs.contains(&x) && vs.contains(&y)).count();
            if spanned >= 5 {
                out.insert((a.min(b), a.max(b)));
            }
        }
    }
    out.into_iter().collect()
}

/// (C7) by brute force: for every triangle and every two vertices off its
/// closed neighbourhood, no set of at most three edges of `G - V(C)`
/// separates them.
fn c7_oracle(g: &Graph) -> bool {
    let nb = g.neighbors();
    for t in triangles(g) {
        let near: BTreeSet<usize> = t.iter().flat_map(|&v| nb[v].iter().copied().chain([v])).collect();
        let far: Vec<usize> = (0..g.n()).filter(|v| !near.contains(v)).collect();
        let rest: Vec<(usize, usize)> = g.edges().iter().copied().filter(|(u, v)| !t.contains(u) && !t.contains(v)).collect();
        let connected_without = |cut: &[usize], x: usize, y: usize| {
            let mut seen = vec![false; g.n()];
            let mut stack = vec![x];
            seen[x] = true;
            while let Some(v) = stack.pop() {
                for (i, &(a, b)) in rest.iter().enumerate() {
                    if cut.contains(&i) {
                        continue;
                    }
                    let w = if a == v { b } else if b == v { a } else { continue };
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen[y]
        };
        let k = rest.len();
        let mut cuts: Vec<Vec<usize>> = vec![vec![]];
        for i in 0..k {
            cuts.push(vec![i]);
            for j in i + 1..k {
                cuts.push(vec![i, j]);
                for l in j + 1..k {
                    cuts.push(vec![i, j, l]);
                }
            }
        }
        for (i, &x) in far.iter().enumerate() {
            for &y in &far[i + 1..] {
                if cuts.iter().any(|c| !connected_without(c, x, y)) {
                    return false;
                }
            }
        }
    }
    true
}

fn c8_pn_checker() -> Outcome {
    let err = |e: onep::Error| e.to_string();
    for n in 6..=8 {
        let g = gen_g_n(n).map_err(err)?;
        let r = check_a_class(&g).map_err(err)?;
        check(r.all_pass(), || format!("G_{n} fails {:?}", r.failures()))?;
    }
    let k4 = named::complete(4);
    let r = check_a_class(&k4).map_err(err)?;
    let c1 = r.get("C1").ok_or("no C1")?;
    check(matches!(c1.witness, Some(Witness::Vertex(v)) if k4.degrees()[v] < 4), || "K4 C1 witness".into())?;
    let oct = named::octahedron();
    let r = check_a_class(&oct).map_err(err)?;
    let c4 = r.get("C4").ok_or("no C4")?;
    match &c4.witness {
        Some(Witness::AdjacentTriangles(t, others)) => {
            let tris = triangles(&oct);
            let share = |a: &Vec<usize>, b: &Vec<usize>| a != b && a.iter().filter(|v| b.contains(v)).count() == 2;
            check(others.len() >= 2 && tris.contains(t) && others.iter().all(|o| tris.contains(o) && share(t, o)), || "octahedron C4 witness".into())?;
        }
        w => return Err(format!("octahedron C4 witness {w:?}")),
    }
    let host = QUAD.compile().graph;
    let r = check_a_class(&host).map_err(err)?;
    match &r.get("C9").ok_or("no C9")?.witness {
        Some(Witness::Occurrence { map, .. }) => check(occurrence_holds(&host, map), || "C9 witness is not an occurrence".into())?,
        w => return Err(format!("planted host C9 witness {w:?}")),
    }
    check(find_occurrences(&host, &QUAD.compile(), 10).len() == 1, || "planted pattern not found exactly once".into())?;
    let levels = graphs_up_to_iso(7);
    check(levels[7].len() == GRAPH_COUNT_7, || format!("{} graphs on 7 vertices", levels[7].len()))?;
    let (mut graphs, mut planar) = (0, 0);
    for g in levels.iter().flatten() {
        check(paired_edges(g) == paired_oracle(g), || format!("paired edges differ on {:?}", g.edges()))?;
        graphs += 1;
        if let Ok(r) = check_a_class(g) {
            let c7 = r.get("C7").ok_or("no C7")?;
            check(c7.pass == c7_oracle(g), || format!("C7 differs on {:?}", g.edges()))?;
            if let Some(w) = &c7.witness {
                check(recheck(g, "C7", w).map_err(err)?, || "C7 witness does not recheck".into())?;
            }
            planar += 1;
        }
    }
    Ok(format!("G_6..G_8 pass; K4 C1, octahedron C4, planted C9 witnesses hold; paired edges on {graphs} graphs and C7 on {planar} planar graphs (n <= 7) agree with brute force"))
}

fn c9_reduction() -> Outcome {
    let corpus = source_corpus(RANDOM_SOURCES, CORPUS_SEED);
    check(corpus.len() >= MIN_CORPUS, || format!("corpus of {}", corpus.len()))?;
    let mut worst = 0.0f64;
    let mut ratio = 0usize;
    for s in &corpus {
        let start = Instant::now();
        let art = build_reduction(&s.graph, None).map_err(|e| format!("{}: {e}", s.name))?;
        let w = build_witness(&art, &s.coloring).map_err(|e| format!("{}: {e}", s.name))?;
        let v = verify(&w, 1);
        check(v.is_empty(), || format!("{}: {}", s.name, v[0]))?;
        let back = extract_coloring(&art, &w).map_err(|e| format!("{}: {e}", s.name))?;
        check(back == s.coloring, || format!("{}: extracted colouring differs", s.name))?;
        check(activation_report(&art, &w).iter().all(|b| b.is_exclusive()), || format!("{}: activation not exclusive", s.name))?;
        within(start, REDUCTION_PER_INSTANCE_BUDGET, &s.name)?;
        worst = worst.max(start.elapsed().as_secs_f64());
        check(art.gbar.n() <= LINEARITY_BOUND * s.graph.n(), || format!("{}: {} vertices", s.name, art.gbar.n()))?;
        ratio = ratio.max(art.gbar.n().div_ceil(s.graph.n()));
    }
    Ok(format!("{} sources: witnesses verify at k = 1, round-trip, activation exclusive; max |V|/n = {ratio} <= {LINEARITY_BOUND}; slowest {worst:.2} s", corpus.len()))
}

fn c10_k_lift() -> Outcome {
    let g = named::prism();
    let col = three_coloring(&g).ok_or("prism not 3-colourable")?;
    let base = build_reduction(&g, None).map_err(|e| e.to_string())?;
    let pre = crossing_counts(&build_witness(&base, &col).map_err(|e| e.to_string())?);
    for k in [2, 3] {
        let art = build_reduction_k(&g, None, k).map_err(|e| e.to_string())?;
        check(art.gbar.m() == k * base.gbar.m(), || format!("k {k}: {} edges", art.gbar.m()))?;
        let w = build_witness_k(&art, &col).map_err(|e| e.to_string())?;
        let v = verify(&w, k);
        check(v.is_empty(), || format!("k {k}: {}", v[0]))?;
        let counts = crossing_counts(&w);
        check(counts.iter().enumerate().all(|(e, &c)| c == k * pre[e / k]), || format!("k {k}: crossing counts not k times the preimage"))?;
    }
    Ok("prism witnesses verify at k = 2, 3 with per-edge crossings exactly k times the preimage".into())
}

/// Runs the CLI in-process; returns exit code and stdout.
fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = onep_cli::run(std::iter::once("onep").chain(args.iter().copied()), &mut out, &mut err);
    (code, out)
}

/// Every file in `dir`, sorted by name, with contents.
fn snapshot(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.is_file())
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&p).unwrap()))
        .collect();
    files.sort();
    files
}

fn c11_determinism() -> Outcome {
    let inputs = tempfile::tempdir().map_err(|e| e.to_string())?;
    let put = |name: &str, g: &Graph| {
        let p = inputs.path().join(name);
        std::fs::write(&p, onep::io::serialize_graph(g)).unwrap();
        p.to_string_lossy().into_owned()
    };
    let k6 = put("k6.g", &named::complete(6));
    let k7t = put("k7t.g", &k7_minus_triangle());
    let prism = put("prism.g", &named::prism());
    let g6 = put("g6.g", &gen_g_n(6).map_err(|e| e.to_string())?);
    let col_path = inputs.path().join("prism.col");
    std::fs::write(&col_path, serialize_coloring(&three_coloring(&named::prism()).unwrap())).unwrap();
    let col = col_path.to_string_lossy().into_owned();
    let mut runs = Vec::new();
    for jobs in ["1", "8"] {
        let out = tempfile::tempdir().map_err(|e| e.to_string())?;
        let o = |name: &str| out.path().join(name).to_string_lossy().into_owned();
        let commands: Vec<Vec<String>> = vec![
            vec!["solve".into(), "--input".into(), k6.clone(), "--time-limit".into(), "0".into(), "--emit-witness".into(), o("k6.imm")],
            vec!["solve".into(), "--input".into(), k7t.clone(), "--time-limit".into(), "0".into()],
            vec!["solve".into(), "--input".into(), prism.clone(), "--proper".into(), "--time-limit".into(), "0".into()],
            vec!["mn-check".into(), "--input".into(), k7t.clone(), "--time-limit".into(), "0".into(), "--emit-witnesses".into(), out.path().to_string_lossy().into_owned()],
            vec!["pn-check".into(), "--input".into(), g6.clone()],
            vec!["stats".into(), "--input".into(), k7t.clone()],
            vec!["iso".into(), "--a".into(), k6.clone(), "--b".into(), k7t.clone()],
            vec!["gen".into(), "--family".into(), "chain-graph".into(), "--a-lengths".into(), "2,2,2".into(), "--b-lengths".into(), "2,3,4".into(), "--delete-edge".into(), "40".into(), "--output".into(), o("cg.g"), "--certificate".into(), o("cg.imm"), "--meta".into(), o("cg.meta")],
            vec!["gen".into(), "--family".into(), "grid-join".into(), "--n".into(), "7".into(), "--n2".into(), "8".into(), "--grid".into(), "2".into(), "--output".into(), o("gj.g"), "--certificate".into(), o("gj.imm")],
            vec!["gen".into(), "--family".into(), "sm".into(), "--m".into(), "4".into(), "--output".into(), o("s4.g"), "--meta".into(), o("s4.meta")],
            vec!["reduce".into(), "--input".into(), prism.clone(), "--coloring".into(), col.clone(), "--output".into(), o("gbar.g"), "--emit-witness".into(), o("w1.imm"), "--emit-meta".into(), o("meta.txt")],
            vec!["reduce".into(), "--input".into(), prism.clone(), "--k".into(), "2".into(), "--coloring".into(), col.clone(), "--emit-witness".into(), o("w2.imm")],
            vec!["verify".into(), "--graph".into(), o("gbar.g"), "--immersion".into(), o("w1.imm"), "--k".into(), "1".into()],
        ];
        let mut outputs = Vec::new();
        for c in &commands {
            let mut args: Vec<&str> = vec!["--jobs", jobs];
            args.extend(c.iter().map(String::as_str));
            outputs.push(cli(&args));
        }
        let codes: Vec<i32> = outputs.iter().map(|o| o.0).collect();
        check(codes == [0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0], || format!("--jobs {jobs}: exit codes {codes:?}"))?;
        let witnesses: Vec<String> = graphs_up_to_iso(6)
            .iter()
            .flatten()
            .map(|g| serialize_immersion(decide_1planar(g, &unlimited(jobs.parse().unwrap())).witness.as_ref().unwrap()))
            .collect();
        runs.push((outputs, snapshot(out.path()), witnesses));
    }
    let files = runs[0].1.len();
    check(runs[0].0 == runs[1].0, || "stdout differs between --jobs 1 and --jobs 8".into())?;
    check(runs[0].1 == runs[1].1, || "emitted files differ between --jobs 1 and --jobs 8".into())?;
    check(runs[0].2 == runs[1].2, || "solver witnesses differ between 1 and 8 workers".into())?;
    Ok(format!("13 CLI runs ({files} emitted files) and {} solver witnesses identical for --jobs 1 and 8", runs[0].2.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("solver oracle suite", c1_solver_oracle),
        ("smallest MN-graph", c2_mn_smallest),
        ("edge bound", c3_edge_bound),
        ("deletion certificates", c4_deletion_certificates),
        ("chain-level counting", c5_counting),
        ("lambda counting", c6_phi),
        ("family counts", c7_family_counts),
        ("structural checker", c8_pn_checker),
        ("reduction forward soundness", c9_reduction),
        ("k-lift", c10_k_lift),
        ("determinism", c11_determinism),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = (i + 1).to_string();
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS {name}: {detail} [{secs:.1} s]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL {name}: {detail} [{secs:.1} s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
