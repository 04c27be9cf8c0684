//! Edge-disjoint path counting by unit-capacity max-flow.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::VecDeque;

/// Maximum number of pairwise edge-disjoint `s`-`t` paths in `G - forbidden`.
pub fn edge_disjoint_connectivity(g: &Graph, s: usize, t: usize, forbidden: &[usize]) -> Result<usize> {
    if s == t {
        return Err(Error::Param("source equals sink".into()));
    }
    let mut blocked = vec![false; g.n()];
    for &f in forbidden {
        blocked[f] = true;
    }
    if blocked[s] || blocked[t] {
        return Err(Error::Param("source or sink is forbidden".into()));
    }
    // arc 2i: u->v, arc 2i+1: v->u; residual capacity 1 - f and 1 + f.
    let mut head = Vec::with_capacity(2 * g.m());
    let mut adj = vec![Vec::new(); g.n()];
    for &(u, v) in g.edges() {
        if blocked[u] || blocked[v] {
            head.push(usize::MAX);
            head.push(usize::MAX);
            continue;
        }
        let a = head.len();
        head.push(v);
        head.push(u);
        adj[u].push(a);
        adj[v].push(a + 1);
    }
    let mut cap = vec![1i32; head.len()];
    let mut flow = 0;
    let mut pred = vec![usize::MAX; g.n()];
    loop {
        pred.iter_mut().for_each(|p| *p = usize::MAX);
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            if u == t {
                break;
            }
            for &a in &adj[u] {
                let w = head[a];
                if cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    pred[w] = a;
                    q.push_back(w);
                }
            }
        }
        if !seen[t] {
            return Ok(flow);
        }
        let mut v = t;
        while v != s {
            let a = pred[v];
            cap[a] -= 1;
            cap[a ^ 1] += 1;
            v = head[a ^ 1];
        }
        flow += 1;
    }
}
