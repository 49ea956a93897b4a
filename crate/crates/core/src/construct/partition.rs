//! Vertex partitions with few neighbours per part, via Moser–Tardos
//! resampling of the bad events "v has at least d neighbours coloured c".

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{subgraph_bipartite, Graph, Subgraph};
use crate::seed;

/// `Δ/k + sqrt(3Δ ln(4kΔ²)/k)`. An edgeless graph is treated as `Δ = 1`
/// (it has maximum degree at most 1), which keeps the bound positive.
pub fn degree_bound(max_degree: usize, k: usize) -> f64 {
    let delta = max_degree.max(1) as f64;
    let k = k as f64;
    delta / k + (3.0 * delta * (4.0 * k * delta * delta).ln() / k).sqrt()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartitionPlan {
    parts: Vec<Vec<usize>>,
    degree_bound: f64,
    resamplings: usize,
}

impl PartitionPlan {
    /// Wraps an explicit partition, checking that it covers `V(g)` and
    /// meets the degree bound for `k = parts.len()`.
    pub fn from_parts(g: &Graph, mut parts: Vec<Vec<usize>>) -> Result<PartitionPlan> {
        if parts.len() < 2 {
            return Err(Error::validation("a partition plan needs k >= 2 parts"));
        }
        let mut seen = vec![false; g.n()];
        for part in &mut parts {
            part.sort_unstable();
            for &v in part.iter() {
                if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::validation(format!(
                        "vertex {v} is out of range or in two parts"
                    )));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::validation(format!("vertex {v} is in no part")));
        }
        let plan = PartitionPlan {
            degree_bound: degree_bound(g.max_degree(), parts.len()),
            parts,
            resamplings: 0,
        };
        plan.verify(g)?;
        Ok(plan)
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn degree_bound(&self) -> f64 {
        self.degree_bound
    }

    pub fn resamplings(&self) -> usize {
        self.resamplings
    }

    /// `assignment[v]` = index of the part containing `v`.
    pub fn assignment(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                out[v] = i;
            }
        }
        out
    }

    /// Recounts `|N(v) ∩ V_i|` for every vertex and part.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let counts = neighbour_counts(g, &self.assignment(g.n()), self.k());
        match first_violation(&counts, self.k(), self.degree_bound) {
            None => Ok(()),
            Some((v, c)) => Err(Error::validation(format!(
                "vertex {v} has {} neighbours in part {c}, bound is {:.3}",
                counts[v * self.k() + c],
                self.degree_bound
            ))),
        }
    }

    /// `G[V_i]`, relabeled in ascending original id.
    pub fn intra_subgraph(&self, g: &Graph, i: usize) -> Subgraph {
        g.induced(&self.parts[i]).expect("parts lie inside V(g)")
    }

    /// `G[V_a, V_b]`, relabeled in ascending original id.
    pub fn inter_subgraph(&self, g: &Graph, a: usize, b: usize) -> Subgraph {
        subgraph_bipartite(g, &self.parts[a], &self.parts[b]).expect("parts are disjoint")
    }
}

fn neighbour_counts(g: &Graph, colour: &[usize], k: usize) -> Vec<usize> {
    let mut counts = vec![0usize; g.n() * k];
    for v in 0..g.n() {
        for &w in g.neighbors(v) {
            counts[v * k + colour[w]] += 1;
        }
    }
    counts
}

fn first_violation(counts: &[usize], k: usize, bound: f64) -> Option<(usize, usize)> {
    counts
        .iter()
        .position(|&c| c as f64 >= bound)
        .map(|i| (i / k, i % k))
}

fn resample<R: Rng>(
    g: &Graph,
    k: usize,
    bound: f64,
    rng: &mut R,
    max_rounds: usize,
) -> Result<(Vec<usize>, usize)> {
    let mut colour: Vec<usize> = (0..g.n()).map(|_| rng.random_range(0..k)).collect();
    let mut counts = neighbour_counts(g, &colour, k);
    let mut rounds = 0;
    while let Some((v, c)) = first_violation(&counts, k, bound) {
        if rounds == max_rounds {
            return Err(Error::RetryLimit {
                stage: "lll_partition",
                attempts: rounds,
                detail: format!(
                    "vertex {v} still has {} neighbours of colour {c} (bound {bound:.3})",
                    counts[v * k + c]
                ),
                witness: None,
            });
        }
        rounds += 1;
        for &u in g.neighbors(v) {
            let old = colour[u];
            let new = rng.random_range(0..k);
            if old == new {
                continue;
            }
            colour[u] = new;
            for &x in g.neighbors(u) {
                counts[x * k + old] -= 1;
                counts[x * k + new] += 1;
            }
        }
    }
    Ok((colour, rounds))
}

/// Colours every vertex uniformly from `0..k`, then, while some vertex `v`
/// has at least `d` neighbours of one colour, recolours all of `N(v)`.
/// `max_rounds` bounds the number of resamplings.
pub fn lll_partition(g: &Graph, k: usize, seed: u64, max_rounds: usize) -> Result<PartitionPlan> {
    if k < 2 {
        return Err(Error::validation("lll_partition needs k >= 2"));
    }
    if g.loops_allowed() && g.edges().iter().any(|e| e.is_loop()) {
        return Err(Error::validation("lll_partition needs a loop-free graph"));
    }
    let bound = degree_bound(g.max_degree(), k);
    let mut rng = seed::rng_for(seed, "lll");
    let (colour, rounds) = resample(g, k, bound, &mut rng, max_rounds)?;

    let mut parts = vec![Vec::new(); k];
    for (v, &c) in colour.iter().enumerate() {
        parts[c].push(v);
    }
    let plan = PartitionPlan {
        parts,
        degree_bound: bound,
        resamplings: rounds,
    };
    plan.verify(g)?;
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Model};

    #[test]
    fn bound_values() {
        // 8-regular, k = 4: 2 + sqrt(6 ln 1024)
        let d = degree_bound(8, 4);
        assert!((d - (2.0 + (6.0 * 1024f64.ln()).sqrt())).abs() < 1e-12);
        assert!((d - 8.4494).abs() < 1e-3);
        // perfect matching, k = 2: above 1
        assert!(degree_bound(1, 2) > 1.0);
    }

    #[test]
    fn empty_graph() {
        let plan = lll_partition(&Graph::empty(6), 2, 0, 0).unwrap();
        assert_eq!(plan.k(), 2);
        assert_eq!(plan.parts().iter().map(Vec::len).sum::<usize>(), 6);
    }

    #[test]
    fn perfect_matching_never_resamples() {
        let g = Graph::new(8, [(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let plan = lll_partition(&g, 2, 3, 0).unwrap();
        assert_eq!(plan.resamplings(), 0);
    }

    #[test]
    fn eight_regular_recount() {
        let g = generate(Model::RandomRegular { n: 100, degree: 8 }, 1).unwrap();
        let plan = lll_partition(&g, 4, 9, 1000).unwrap();
        let assign = plan.assignment(100);
        for v in 0..100 {
            for i in 0..4 {
                let c = g.neighbors(v).iter().filter(|&&w| assign[w] == i).count();
                assert!((c as f64) < plan.degree_bound());
            }
        }
    }

    #[test]
    fn dense_regular_graph_terminates() {
        // bound ≈ 13.99, so a vertex with 14 of its 16 neighbours in one part
        // triggers a resampling
        let g = generate(Model::RandomRegular { n: 400, degree: 16 }, 2).unwrap();
        for seed in 0..5 {
            let plan = lll_partition(&g, 4, seed, 4000).unwrap();
            plan.verify(&g).unwrap();
        }
    }

    #[test]
    fn resampling_reaches_a_tight_target() {
        // bound 2 on C8 with two colours: every vertex needs one neighbour of
        // each colour (e.g. AABBAABB)
        let g = generate(Model::Cycle { n: 8 }, 0).unwrap();
        let mut rng = seed::rng(4);
        let (colour, _) = resample(&g, 2, 2.0, &mut rng, 100_000).unwrap();
        for v in 0..8 {
            let [a, b] = [g.neighbors(v)[0], g.neighbors(v)[1]];
            assert_ne!(colour[a], colour[b]);
        }
        let mut rng = seed::rng(4);
        assert!(matches!(
            resample(&g, 2, 1.0, &mut rng, 50),
            Err(Error::RetryLimit { .. })
        ));
    }

    #[test]
    fn from_parts_validation() {
        let g = generate(Model::Cycle { n: 4 }, 0).unwrap();
        assert!(PartitionPlan::from_parts(&g, vec![vec![0, 1], vec![2, 3]]).is_ok());
        assert!(PartitionPlan::from_parts(&g, vec![vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(PartitionPlan::from_parts(&g, vec![vec![0, 1], vec![2]]).is_err());
        assert!(PartitionPlan::from_parts(&g, vec![vec![0, 1, 2, 3]]).is_err());
    }
}
