use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{base_construct, compose_partition, lll_partition, strongify};
use crate::error::{Error, Result};
use crate::graph::{Graph, Representation};
use crate::seed;
use crate::separation::is_strongly_separating;

/// How many parts to split into at a recursion step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KRule {
    /// Largest even integer at most `Δ^{1/4}`, and at least 2.
    FourthRoot,
    /// A fixed even `k >= 2`.
    Fixed(usize),
}

impl KRule {
    pub fn parts_for(self, max_degree: usize) -> Result<usize> {
        match self {
            KRule::FourthRoot => {
                let root = integer_fourth_root(max_degree);
                Ok((root - root % 2).max(2))
            }
            KRule::Fixed(k) if k >= 2 && k % 2 == 0 => Ok(k),
            KRule::Fixed(k) => Err(Error::validation(format!("k must be even and >= 2, got {k}"))),
        }
    }
}

/// Largest `r` with `r^4 <= x`.
pub fn integer_fourth_root(x: usize) -> usize {
    let fits = |r: usize| {
        r.checked_mul(r)
            .and_then(|r2| r2.checked_mul(r2))
            .is_some_and(|r4| r4 <= x)
    };
    let mut r = (x as f64).powf(0.25) as usize;
    while r > 0 && !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildConfig {
    /// Graphs with `Δ` at most this are handled by the base case.
    pub recursion_threshold: usize,
    pub k_rule: KRule,
    pub seed: u64,
    /// Attempt budget for each Las Vegas stage.
    pub max_attempts: usize,
    /// Hard cap on nesting; deeper pieces fall back to the base case.
    pub max_depth: usize,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            recursion_threshold: 1 << 17,
            k_rule: KRule::FourthRoot,
            seed: seed::DEFAULT_SEED,
            max_attempts: 10_000,
            max_depth: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub ordering_count: usize,
    pub delta: usize,
    /// Partition levels on the deepest path (0 when only the base case ran).
    pub recursion_depth: usize,
    /// Retries per stage, summed over all sub-builds: rejected base draws,
    /// LLL resamplings, failed loopy attempts.
    pub retries: BTreeMap<String, usize>,
    pub bound_20delta: usize,
}

impl BuildReport {
    pub fn below_20delta(&self) -> bool {
        self.ordering_count < self.bound_20delta
    }
}

struct Built {
    rep: Representation,
    depth: usize,
    retries: BTreeMap<String, usize>,
}

fn merge(into: &mut BTreeMap<String, usize>, from: &BTreeMap<String, usize>) {
    for (k, v) in from {
        *into.entry(k.clone()).or_default() += v;
    }
}

/// Builds a strongly separating representation of `g`.
///
/// At `Δ <= recursion_threshold` this is the base case followed by
/// [`strongify`]. Otherwise the vertices are split into `k` parts by
/// [`lll_partition`], every `G[V_i]` and `G[V_a, V_b]` is built recursively,
/// and the pieces are combined with [`compose_partition`]. A piece whose
/// maximum degree did not drop below its parent's goes to the base case.
pub fn build_representation(g: &Graph, config: &BuildConfig) -> Result<(Representation, BuildReport)> {
    if g.edges().iter().any(|e| e.is_loop()) {
        return Err(Error::validation("build_representation needs a loop-free graph"));
    }
    let built = build_rec(g, config, config.seed, 0, None)?;
    is_strongly_separating(g, &built.rep).map_err(Error::Verification)?;
    let delta = g.max_degree();
    let report = BuildReport {
        ordering_count: built.rep.len(),
        delta,
        recursion_depth: built.depth,
        retries: built.retries,
        bound_20delta: 20 * delta,
    };
    Ok((built.rep, report))
}

fn build_rec(
    g: &Graph,
    config: &BuildConfig,
    seed: u64,
    depth: usize,
    parent_delta: Option<usize>,
) -> Result<Built> {
    let delta = g.max_degree();
    let stalled = parent_delta.is_some_and(|p| delta >= p);
    if delta <= config.recursion_threshold || depth >= config.max_depth || stalled {
        let base = base_construct(g, seed::derive(seed, "base"), config.max_attempts)?;
        let rep = strongify(g, &base.representation)?;
        let retries = BTreeMap::from([("base".to_string(), base.rejected)]);
        return Ok(Built {
            rep,
            depth: 0,
            retries,
        });
    }

    let k = config.k_rule.parts_for(delta)?;
    let rounds = (10 * g.n()).max(1000);
    let plan = lll_partition(g, k, seed::derive(seed, "lll"), rounds)?;

    let intra_jobs: Vec<(String, Graph)> = (0..k)
        .map(|i| (format!("intra/{i}"), plan.intra_subgraph(g, i).graph))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();
    let inter_jobs: Vec<(String, Graph)> = pairs
        .iter()
        .map(|&(a, b)| (format!("inter/{a}-{b}"), plan.inter_subgraph(g, a, b).graph))
        .collect();

    let run = |(label, sub): &(String, Graph)| {
        build_rec(sub, config, seed::derive(seed, label), depth + 1, Some(delta))
    };
    let intra: Vec<Built> = intra_jobs.par_iter().map(run).collect::<Result<_>>()?;
    let inter: Vec<Built> = inter_jobs.par_iter().map(run).collect::<Result<_>>()?;

    let mut retries = BTreeMap::from([("lll".to_string(), plan.resamplings())]);
    for b in intra.iter().chain(&inter) {
        merge(&mut retries, &b.retries);
    }
    let child_depth = intra.iter().chain(&inter).map(|b| b.depth).max().unwrap_or(0);

    let intra_reps: Vec<Representation> = intra.into_iter().map(|b| b.rep).collect();
    let inter_reps: BTreeMap<(usize, usize), Representation> =
        pairs.into_iter().zip(inter.into_iter().map(|b| b.rep)).collect();
    let assembly = compose_partition(
        g,
        &plan,
        &intra_reps,
        &inter_reps,
        seed::derive(seed, "compose"),
        config.max_attempts,
    )?;
    *retries.entry("loopy".to_string()).or_default() += assembly.loopy_retries;

    Ok(Built {
        rep: assembly.representation,
        depth: child_depth + 1,
        retries,
    })
}
