use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};

/// Membership mask of the `d`-core: repeatedly delete vertices of degree
/// below `d`.
pub(crate) fn core_mask(g: &Graph, d: usize) -> Vec<bool> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| w != v).count())
        .collect();
    let mut alive = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] < d).collect();
    for &v in &queue {
        alive[v] = false;
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if w == v || !alive[w] {
                continue;
            }
            deg[w] -= 1;
            if deg[w] < d {
                alive[w] = false;
                queue.push_back(w);
            }
        }
    }
    alive
}

/// The `d`-core of `g` as an induced subgraph; empty when no subgraph has
/// minimum degree `d`.
pub fn peel_min_degree(g: &Graph, d: usize) -> Result<Subgraph> {
    if d == 0 {
        return Err(Error::validation("peel_min_degree needs d >= 1"));
    }
    let alive = core_mask(g, d);
    let keep: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    g.induced(&keep)
}
