use rand::Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::seed;

/// Graph families available to [`generate`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum Model {
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    /// Center 0 joined to `leaves` further vertices.
    Star { leaves: usize },
    RandomRegular { n: usize, degree: usize },
    Gnp { n: usize, p: f64 },
    /// Sides `0..left` and `left..left+right`, each cross pair present with
    /// probability `p`. The bipartition is recorded.
    RandomBipartite { left: usize, right: usize, p: f64 },
}

const REGULAR_RESTARTS: usize = 1000;

/// Deterministic for a fixed `(model, seed)`.
pub fn generate(model: Model, seed: u64) -> Result<Graph> {
    let mut rng = seed::rng_for(seed, "generate");
    match model {
        Model::Cycle { n } => {
            if n < 3 {
                return Err(Error::validation("a cycle needs at least 3 vertices"));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Model::Path { n } => Graph::new(n, (1..n).map(|i| (i - 1, i))),
        Model::Complete { n } => Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))),
        Model::Star { leaves } => Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))),
        Model::RandomRegular { n, degree } => random_regular(n, degree, &mut rng),
        Model::Gnp { n, p } => {
            check_probability(p)?;
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.random_bool(p) {
                        edges.push((a, b));
                    }
                }
            }
            Graph::new(n, edges)
        }
        Model::RandomBipartite { left, right, p } => {
            check_probability(p)?;
            let mut edges = Vec::new();
            for a in 0..left {
                for b in left..left + right {
                    if rng.random_bool(p) {
                        edges.push((a, b));
                    }
                }
            }
            let a_side: Vec<usize> = (0..left).collect();
            Graph::new(left + right, edges)?.with_bipartition(&a_side)
        }
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::validation(format!("edge probability {p} outside [0,1]")))
    }
}

/// Configuration model: pair up `degree` stubs per vertex, rejecting loops
/// and repeated pairs as they are drawn; restart from scratch when no
/// admissible pair remains.
fn random_regular<R: Rng>(n: usize, degree: usize, rng: &mut R) -> Result<Graph> {
    if (n * degree) % 2 != 0 {
        return Err(Error::validation(format!(
            "n·degree must be even (n={n}, degree={degree})"
        )));
    }
    if degree > 0 && degree >= n {
        return Err(Error::validation(format!(
            "no simple {degree}-regular graph on {n} vertices"
        )));
    }
    for _ in 0..REGULAR_RESTARTS {
        if let Some(edges) = try_pairing(n, degree, rng) {
            return Graph::new(n, edges);
        }
    }
    Err(Error::RetryLimit {
        stage: "random_regular",
        attempts: REGULAR_RESTARTS,
        detail: format!("could not pair stubs for n={n}, degree={degree}"),
        witness: None,
    })
}

fn try_pairing<R: Rng>(n: usize, degree: usize, rng: &mut R) -> Option<Vec<(usize, usize)>> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, degree)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(degree); n];
    let mut edges = Vec::with_capacity(n * degree / 2);
    let admissible = |adj: &[Vec<usize>], u: usize, v: usize| u != v && !adj[u].contains(&v);

    while !stubs.is_empty() {
        let len = stubs.len();
        let mut chosen = None;
        for _ in 0..64 {
            let i = rng.random_range(0..len);
            let j = rng.random_range(0..len);
            if i != j && admissible(&adj, stubs[i], stubs[j]) {
                chosen = Some((i, j));
                break;
            }
        }
        if chosen.is_none() {
            let candidates: Vec<(usize, usize)> = (0..len)
                .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
                .filter(|&(i, j)| admissible(&adj, stubs[i], stubs[j]))
                .collect();
            if candidates.is_empty() {
                return None;
            }
            chosen = Some(candidates[rng.random_range(0..candidates.len())]);
        }
        let (i, j) = chosen?;
        let (u, v) = (stubs[i], stubs[j]);
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u, v));
        let (hi, lo) = if i > j { (i, j) } else { (j, i) };
        stubs.swap_remove(hi);
        stubs.swap_remove(lo);
    }
    Some(edges)
}
