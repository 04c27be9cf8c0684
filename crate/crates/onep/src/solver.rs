//! Exact 1-planarity decision at desk scale.
//!
//! Iterative deepening on the number of crossings `c`, starting at the Euler
//! lower bound. For a fixed `c` the search walks the edges in EdgeId order and
//! decides for each undecided edge either to cross it with a later,
//! non-adjacent undecided edge (partners in increasing order) or to leave it
//! uncrossed. Every decision is followed by a planarity test of the partial
//! planarization, which is a subgraph of any completion. Leaves are checked
//! with the alternation-forcing wheel gadget, so every YES comes with a
//! genuine crossing drawing. The first witness found is the lexicographically
//! smallest `(c, sorted pair list)`, independently of the worker count.

use crate::embedding::is_planar;
use crate::graph::{EdgeId, Graph};
use crate::immersion::{crossing_lower_bound, edge_bound_reject, embed_crossings, trivial_order, verify, Immersion};
use crate::planarity::is_planar_simple;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

#[derive(Clone, Debug)]
pub struct SolverBudget {
    pub max_crossings: Option<usize>,
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
    /// Worker threads; results do not depend on this value.
    pub jobs: usize,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget { max_crossings: None, time_limit: Some(Duration::from_secs(60)), node_limit: None, jobs: 1 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Yes,
    No,
    Timeout,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Yes => "YES",
            Status::No => "NO",
            Status::Timeout => "TIMEOUT",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverStats {
    /// Planarity tests performed (deterministic for YES and NO verdicts).
    pub nodes: u64,
    /// Crossings in the witness.
    pub crossings: Option<usize>,
    /// Largest crossing count whose search space was exhausted.
    pub exhausted_up_to: Option<usize>,
    /// How the verdict was reached: "planar", "edge-bound", "search", or the
    /// budget that ran out.
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Immersion>,
    pub stats: SolverStats,
}

/// Decides whether `g` has a 1-immersion.
pub fn decide_1planar(g: &Graph, budget: &SolverBudget) -> Verdict {
    solve(g, budget, false)
}

/// Decides whether `g` has a 1-immersion with at least one crossing.
pub fn decide_proper_1immersion(g: &Graph, budget: &SolverBudget) -> Verdict {
    solve(g, budget, true)
}

fn verdict(status: Status, witness: Option<Immersion>, nodes: u64, exhausted: Option<usize>, reason: &str) -> Verdict {
    let crossings = witness.as_ref().map(|w| w.crossings.len());
    Verdict { status, witness, stats: SolverStats { nodes, crossings, exhausted_up_to: exhausted, reason: reason.into() } }
}

fn solve(g: &Graph, budget: &SolverBudget, proper: bool) -> Verdict {
    assert!(!g.has_parallel_edges(), "the solver expects a simple graph");
    let start = Instant::now();
    if !proper {
        if edge_bound_reject(g) {
            return verdict(Status::No, None, 0, None, "edge-bound");
        }
        let c0 = Immersion0::plane(g);
        if let Some(w) = c0 {
            return verdict(Status::Yes, Some(w), 1, None, "planar");
        }
    }
    // c = 0 is either excluded (proper) or already refuted by the planarity test.
    let lb = crossing_lower_bound(g).max(1);
    let cap = g.m() / 2;
    let hi = budget.max_crossings.map_or(cap, |x| x.min(cap));
    let mut nodes = u64::from(!proper);
    // "No 1-immersion with at most this many crossings exists."
    let mut exhausted = if proper && lb == 1 { None } else { Some(lb - 1) };
    let shared = Shared::new(budget, start);
    for c in lb..=hi {
        let s = Search::new(g, c);
        match s.run(&shared, budget.jobs) {
            Outcome::Found(pairs, k) => {
                nodes += k;
                let order = trivial_order(g.m(), &pairs).expect("matching");
                let w = embed_crossings(g, &pairs, &order).expect("valid pairs").expect("leaf was planar");
                assert!(verify(&w, 1).is_empty(), "solver produced an invalid witness");
                return verdict(Status::Yes, Some(w), nodes, exhausted, "search");
            }
            Outcome::Exhausted(k) => {
                nodes += k;
                exhausted = Some(c);
            }
            Outcome::Aborted(k, why) => {
                nodes += k;
                return verdict(Status::Timeout, None, nodes, exhausted, why);
            }
        }
    }
    if hi < cap {
        return verdict(Status::Timeout, None, nodes, exhausted, "crossing cap");
    }
    verdict(Status::No, None, nodes, exhausted, "search")
}

struct Immersion0;

impl Immersion0 {
    fn plane(g: &Graph) -> Option<Immersion> {
        if !is_planar(g) {
            return None;
        }
        let order = vec![Vec::new(); g.m()];
        embed_crossings(g, &[], &order).ok().flatten()
    }
}

struct Shared {
    start: Instant,
    time_limit: Option<Duration>,
    node_limit: Option<u64>,
    nodes: AtomicU64,
    stop: AtomicBool,
    why: AtomicUsize, // 0 none, 1 time, 2 nodes
}

impl Shared {
    fn new(b: &SolverBudget, start: Instant) -> Self {
        Shared {
            start,
            time_limit: b.time_limit,
            node_limit: b.node_limit,
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            why: AtomicUsize::new(0),
        }
    }

    /// Records one node; returns false once the budget is spent.
    fn tick(&self) -> bool {
        let k = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        if let Some(l) = self.node_limit {
            if k > l {
                self.why.store(2, Ordering::Relaxed);
                self.stop.store(true, Ordering::Relaxed);
                return false;
            }
        }
        if k % 128 == 0 {
            if let Some(t) = self.time_limit {
                if self.start.elapsed() > t {
                    self.why.store(1, Ordering::Relaxed);
                    self.stop.store(true, Ordering::Relaxed);
                    return false;
                }
            }
        }
        true
    }

    fn reason(&self) -> &'static str {
        match self.why.load(Ordering::Relaxed) {
            2 => "node limit",
            _ => "time limit",
        }
    }
}

enum Outcome {
    Found(Vec<(EdgeId, EdgeId)>, u64),
    Exhausted(u64),
    Aborted(u64, &'static str),
}

#[derive(Clone)]
struct State {
    status: Vec<u8>, // 0 undecided, 1 uncrossed, 2 crossed
    pairs: Vec<(EdgeId, EdgeId)>,
    undecided: usize,
}

struct Search<'a> {
    g: &'a Graph,
    c: usize,
    partners: Vec<Vec<EdgeId>>,
}

enum Step {
    Found(Vec<(EdgeId, EdgeId)>),
    None,
    Abort,
}

/// Depth of the decision prefix expanded sequentially into parallel tasks.
const SPLIT_DEPTH: usize = 3;

impl<'a> Search<'a> {
    fn new(g: &'a Graph, c: usize) -> Self {
        let m = g.m();
        let partners = (0..m).map(|e| (e + 1..m).filter(|&f| !g.adjacent_edges(e, f)).collect()).collect();
        Search { g, c, partners }
    }

    fn partial_planar(&self, st: &State) -> bool {
        let n = self.g.n();
        let mut ends = Vec::with_capacity(self.g.m() + 2 * st.pairs.len());
        for (e, &(u, v)) in self.g.edges().iter().enumerate() {
            if st.status[e] == 1 {
                ends.push((u, v));
            }
        }
        for (i, &(e, f)) in st.pairs.iter().enumerate() {
            let d = n + i;
            let (a, b) = self.g.endpoints(e);
            let (x, y) = self.g.endpoints(f);
            ends.extend([(a, d), (b, d), (x, d), (y, d)]);
        }
        is_planar_simple(n + st.pairs.len(), &ends)
    }

    /// Children of a node in search order, each already tested. Returns
    /// `Err(())` on budget exhaustion.
    fn children(&self, st: &State, sh: &Shared, nodes: &mut u64) -> Result<Vec<State>, ()> {
        let mut out = Vec::new();
        let Some(e) = st.status.iter().position(|&s| s == 0) else {
            return Ok(out);
        };
        let need = self.c - st.pairs.len();
        if need == 0 {
            let mut ch = st.clone();
            for s in ch.status.iter_mut() {
                if *s == 0 {
                    *s = 1;
                }
            }
            ch.undecided = 0;
            *nodes += 1;
            if !sh.tick() {
                return Err(());
            }
            if self.partial_planar(&ch) {
                out.push(ch);
            }
            return Ok(out);
        }
        if 2 * need > st.undecided {
            return Ok(out);
        }
        for &f in &self.partners[e] {
            if st.status[f] != 0 {
                continue;
            }
            let mut ch = st.clone();
            ch.status[e] = 2;
            ch.status[f] = 2;
            ch.pairs.push((e, f));
            ch.undecided -= 2;
            *nodes += 1;
            if !sh.tick() {
                return Err(());
            }
            if self.partial_planar(&ch) {
                out.push(ch);
            }
        }
        if st.undecided - 1 >= 2 * need {
            let mut ch = st.clone();
            ch.status[e] = 1;
            ch.undecided -= 1;
            *nodes += 1;
            if !sh.tick() {
                return Err(());
            }
            if self.partial_planar(&ch) {
                out.push(ch);
            }
        }
        Ok(out)
    }

    fn leaf(&self, st: &State, nodes: &mut u64) -> Option<Vec<(EdgeId, EdgeId)>> {
        if st.undecided != 0 || st.pairs.len() != self.c {
            return None;
        }
        *nodes += 1;
        let order = trivial_order(self.g.m(), &st.pairs).ok()?;
        match embed_crossings(self.g, &st.pairs, &order) {
            Ok(Some(_)) => Some(st.pairs.clone()),
            _ => None,
        }
    }

    fn dfs(&self, st: &State, sh: &Shared, nodes: &mut u64, cancel: &dyn Fn() -> bool) -> Step {
        if st.undecided == 0 {
            return match self.leaf(st, nodes) {
                Some(p) => Step::Found(p),
                None => Step::None,
            };
        }
        if cancel() {
            return Step::Abort;
        }
        let Ok(kids) = self.children(st, sh, nodes) else {
            return Step::Abort;
        };
        for ch in kids {
            match self.dfs(&ch, sh, nodes, cancel) {
                Step::None => {}
                other => return other,
            }
        }
        Step::None
    }

    fn run(&self, sh: &Shared, jobs: usize) -> Outcome {
        let root = State { status: vec![0; self.g.m()], pairs: Vec::new(), undecided: self.g.m() };
        let mut nodes = 0u64;
        // Expand a fixed-depth prefix sequentially; its frontier, in search
        // order, becomes the task list.
        let mut frontier = vec![root];
        for _ in 0..SPLIT_DEPTH {
            let mut next = Vec::new();
            for st in &frontier {
                if st.undecided == 0 {
                    next.push(st.clone());
                    continue;
                }
                match self.children(st, sh, &mut nodes) {
                    Ok(k) => next.extend(k),
                    Err(()) => return Outcome::Aborted(nodes, sh.reason()),
                }
            }
            frontier = next;
        }
        let best = AtomicUsize::new(usize::MAX);
        let run_task = |i: usize, st: &State| -> (Step, u64) {
            let mut k = 0u64;
            let cancel = || best.load(Ordering::Relaxed) < i;
            let r = self.dfs(st, sh, &mut k, &cancel);
            if let Step::Found(_) = r {
                best.fetch_min(i, Ordering::Relaxed);
            }
            (r, k)
        };
        let results: Vec<(Step, u64)> = if jobs <= 1 {
            let mut out = Vec::new();
            for (i, st) in frontier.iter().enumerate() {
                let r = run_task(i, st);
                let done = !matches!(r.0, Step::None);
                out.push(r);
                if done {
                    break;
                }
            }
            out
        } else {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
            pool.install(|| frontier.par_iter().enumerate().map(|(i, st)| run_task(i, st)).collect())
        };
        // Deterministic merge: the first task (in search order) that found a
        // witness wins; tasks after it do not count.
        let mut total = nodes;
        for (step, k) in results {
            match step {
                Step::Found(p) => return Outcome::Found(p, total + k),
                Step::None => total += k,
                Step::Abort => {
                    if sh.stop.load(Ordering::Relaxed) {
                        return Outcome::Aborted(total + k, sh.reason());
                    }
                    // cancelled because an earlier task won: cannot happen
                    // before that task's result in this ordered scan
                    unreachable!("task cancelled without an earlier witness");
                }
            }
        }
        Outcome::Exhausted(total)
    }
}

/// Searches for a 1-immersion of `g` whose crossings are drawn from
/// `candidates`, trying at most `max_crossings` crossings and visiting at
/// most `node_limit` search nodes. Every edge outside the candidate pairs
/// stays uncrossed. Crossing counts are tried in increasing order and
/// candidate subsets in lexicographic order, so the result is deterministic.
///
/// This is the tool for large graphs whose drawing is known up to a local
/// modification; it proves nothing when it fails.
pub fn search_with_candidates(
    g: &Graph,
    candidates: &[(EdgeId, EdgeId)],
    max_crossings: usize,
    node_limit: u64,
) -> Option<Immersion> {
    let mut cand: Vec<(EdgeId, EdgeId)> = candidates
        .iter()
        .map(|&(e, f)| (e.min(f), e.max(f)))
        .filter(|&(e, f)| e != f && f < g.m() && !g.adjacent_edges(e, f))
        .collect();
    cand.sort_unstable();
    cand.dedup();
    let mut involved = vec![false; g.m()];
    for &(e, f) in &cand {
        involved[e] = true;
        involved[f] = true;
    }
    let fixed: Vec<(usize, usize)> = (0..g.m()).filter(|&e| !involved[e]).map(|e| g.endpoints(e)).collect();
    if !is_planar_simple(g.n(), &fixed) {
        return None;
    }
    if max_crossings == 0 || cand.is_empty() {
        return Immersion0::plane(g);
    }
    struct Ctx<'a> {
        g: &'a Graph,
        cand: &'a [(EdgeId, EdgeId)],
        fixed: &'a [(usize, usize)],
        nodes: u64,
        limit: u64,
    }
    impl Ctx<'_> {
        fn ok(&mut self, chosen: &[(EdgeId, EdgeId)]) -> bool {
            self.nodes += 1;
            let n = self.g.n();
            let mut ends = self.fixed.to_vec();
            for (i, &(e, f)) in chosen.iter().enumerate() {
                let (a, b) = self.g.endpoints(e);
                let (x, y) = self.g.endpoints(f);
                ends.extend([(a, n + i), (b, n + i), (x, n + i), (y, n + i)]);
            }
            is_planar_simple(n + chosen.len(), &ends)
        }

        fn dfs(&mut self, start: usize, c: usize, used: &mut Vec<bool>, chosen: &mut Vec<(EdgeId, EdgeId)>) -> Option<Immersion> {
            if chosen.len() == c {
                self.nodes += 1;
                let order = trivial_order(self.g.m(), chosen).ok()?;
                return embed_crossings(self.g, chosen, &order).ok().flatten();
            }
            for i in start..self.cand.len() {
                if self.nodes >= self.limit {
                    return None;
                }
                let (e, f) = self.cand[i];
                if used[e] || used[f] {
                    continue;
                }
                chosen.push((e, f));
                if self.ok(chosen) {
                    used[e] = true;
                    used[f] = true;
                    let r = self.dfs(i + 1, c, used, chosen);
                    used[e] = false;
                    used[f] = false;
                    if r.is_some() {
                        return r;
                    }
                }
                chosen.pop();
            }
            None
        }
    }
    let mut ctx = Ctx { g, cand: &cand, fixed: &fixed, nodes: 0, limit: node_limit };
    if let Some(w) = Immersion0::plane(g) {
        return Some(w);
    }
    for c in 1..=max_crossings {
        let mut used = vec![false; g.m()];
        if let Some(w) = ctx.dfs(0, c, &mut used, &mut Vec::new()) {
            debug_assert!(verify(&w, 1).is_empty());
            return Some(w);
        }
        if ctx.nodes >= ctx.limit {
            break;
        }
    }
    None
}

/// Outcome of a minimal-non-1-planarity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MnStatus {
    Confirmed,
    /// The graph itself is 1-planar.
    GraphIsOnePlanar,
    /// Deleting this edge (endpoint pair) still leaves a non-1-planar graph.
    DeletionNotOnePlanar(usize, usize),
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct MnReport {
    pub status: MnStatus,
    pub graph: Verdict,
    /// Per edge, by endpoint pair; `None` when skipped after a decisive
    /// negative result.
    pub deletions: Vec<((usize, usize), Option<Verdict>)>,
}

/// Checks that `g` is not 1-planar while every `g - e` is.
pub fn mn_check(g: &Graph, budget: &SolverBudget) -> MnReport {
    let gv = decide_1planar(g, budget);
    let mut deletions: Vec<((usize, usize), Option<Verdict>)> = g.edges().iter().map(|&e| (e, None)).collect();
    match gv.status {
        Status::Yes => return MnReport { status: MnStatus::GraphIsOnePlanar, graph: gv, deletions },
        Status::Timeout => return MnReport { status: MnStatus::Inconclusive, graph: gv, deletions },
        Status::No => {}
    }
    let mut status = MnStatus::Confirmed;
    for e in 0..g.m() {
        let h = g.delete_edge(e).expect("edge in range");
        let v = decide_1planar(&h, budget);
        let st = v.status;
        deletions[e].1 = Some(v);
        match st {
            Status::Yes => {}
            Status::No => {
                let (a, b) = g.endpoints(e);
                status = MnStatus::DeletionNotOnePlanar(a, b);
                break;
            }
            Status::Timeout => status = MnStatus::Inconclusive,
        }
    }
    MnReport { status, graph: gv, deletions }
}
