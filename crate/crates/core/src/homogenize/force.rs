use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bipartize::{bipartize, side_of};
use super::certificate::HomogeneityCertificate;
use super::monotone::{monotone_floor, monotone_subset, Direction};
use super::peel::core_mask;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LinearOrder, Positions, Representation, Side};
use crate::seed;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ForceHomoConfig {
    /// Minimum degree of the final graph.
    pub t: usize,
    /// Reject inputs below `min_average_degree(d, t)`.
    pub enforce_average_degree: bool,
    /// Replaces the `(2^(d+1) t)^(2^(d-1))` core degree of the first peel.
    pub core_degree: Option<usize>,
    pub seed: u64,
}

impl Default for ForceHomoConfig {
    fn default() -> Self {
        ForceHomoConfig {
            t: 1,
            enforce_average_degree: true,
            core_degree: None,
            seed: seed::DEFAULT_SEED,
        }
    }
}

impl ForceHomoConfig {
    pub fn relaxed(t: usize, core_degree: usize, seed: u64) -> Self {
        ForceHomoConfig {
            t,
            enforce_average_degree: false,
            core_degree: Some(core_degree),
            seed,
        }
    }
}

fn saturating_pow(base: u128, exp: u32) -> u128 {
    base.checked_pow(exp).unwrap_or(u128::MAX)
}

/// `(2^(d+1) t)^(2^(d-1))`, saturating.
pub fn core_threshold(d: usize, t: usize) -> u128 {
    let base = saturating_pow(2, d as u32 + 1).saturating_mul(t as u128);
    saturating_pow(base, 1u32 << (d.max(1) - 1))
}

/// `2^(d+2) (2^(d+1) t)^(2^(d-1))`, saturating.
pub fn min_average_degree(d: usize, t: usize) -> u128 {
    saturating_pow(2, d as u32 + 2).saturating_mul(core_threshold(d, t))
}

/// What the extraction step recorded for one vertex, in input labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneRecord {
    pub vertex: usize,
    pub core_degree: usize,
    /// Listed in the order of the first ordering.
    pub monotone_set: Vec<usize>,
    /// Direction of `monotone_set` in orderings `2..=d`.
    pub directions: Vec<Direction>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageSummary {
    pub stage: String,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ForceHomoOutcome {
    /// Final bipartite graph on dense labels.
    pub graph: Graph,
    /// `vertices[local]` is the input label.
    pub vertices: Vec<usize>,
    pub representation: Representation,
    pub certificate: HomogeneityCertificate,
    /// Orderings reversed to make the representation consistent.
    pub flipped: Vec<bool>,
    pub monotone: Vec<MonotoneRecord>,
    pub stages: Vec<StageSummary>,
}

fn summary(stage: &str, g: &Graph) -> StageSummary {
    StageSummary {
        stage: stage.to_string(),
        vertices: (0..g.n()).filter(|&v| g.degree(v) > 0).count(),
        edges: g.edge_count(),
    }
}

fn sign_tuple(bits: impl Iterator<Item = bool>) -> Vec<i8> {
    bits.map(|forward| if forward { 1 } else { -1 }).collect()
}

/// Largest bucket; ties go to the lexicographically smallest key.
fn largest_bucket<K: Ord + Clone, V>(buckets: &BTreeMap<K, Vec<V>>) -> Option<K> {
    let mut best: Option<(&K, usize)> = None;
    for (k, v) in buckets {
        if best.is_none_or(|(_, n)| v.len() > n) {
            best = Some((k, v.len()));
        }
    }
    best.map(|(k, _)| k.clone())
}

fn empty_stage(stage: &'static str) -> Error {
    Error::Pipeline {
        stage,
        detail: "no vertices left".into(),
    }
}

/// Reduces `(g, r)` to a bipartite subgraph of minimum degree `t` with a
/// consistent representation homogeneous on one side.
///
/// Stages: bipartize; keep the largest class of edges by orientation
/// vector and reverse the orderings where that vector is negative; peel to
/// the core degree; on the larger side extract per-vertex monotone subsets
/// of the neighbourhood; keep the largest class of vertices by direction
/// vector; peel to `t`.
pub fn force_homogeneous(g: &Graph, r: &Representation, config: &ForceHomoConfig) -> Result<ForceHomoOutcome> {
    let d = r.len();
    if r.n() != g.n() {
        return Err(Error::validation(format!(
            "representation on {} vertices for a graph on {}",
            r.n(),
            g.n()
        )));
    }
    if config.t == 0 {
        return Err(Error::validation("t must be at least 1"));
    }
    if config.enforce_average_degree {
        let need = min_average_degree(d, config.t);
        if (g.average_degree() as u128) < need {
            return Err(Error::validation(format!(
                "average degree {:.1} is below {need}",
                g.average_degree()
            )));
        }
    }
    let mut stages = vec![summary("input", g)];

    let g1 = bipartize(g, seed::derive(config.seed, "force"))?;
    stages.push(summary("bipartize", &g1));

    let a_end = |e: &Edge| if side_of(&g1, e.u) == Side::A { (e.u, e.w) } else { (e.w, e.u) };
    let mut by_f: BTreeMap<Vec<i8>, Vec<Edge>> = BTreeMap::new();
    for e in g1.edges() {
        let (a, b) = a_end(e);
        let f = sign_tuple(r.orderings().iter().map(|o| o.position(a) < o.position(b)));
        by_f.entry(f).or_default().push(*e);
    }
    let f = largest_bucket(&by_f).ok_or_else(|| empty_stage("orientation_bucket"))?;
    let kept = &by_f[&f];
    let g2 = g1.spanning_subgraph(|e| kept.binary_search(e).is_ok());
    let flipped: Vec<bool> = f.iter().map(|&s| s == -1).collect();
    let orders: Vec<LinearOrder> = r
        .orderings()
        .iter()
        .zip(&flipped)
        .map(|(o, &flip)| if flip { o.to_reversed() } else { o.clone() })
        .collect();
    stages.push(summary("orientation_bucket", &g2));

    let core = match config.core_degree {
        Some(c) => c,
        None => usize::try_from(core_threshold(d, config.t)).unwrap_or(usize::MAX),
    };
    let alive3 = core_mask(&g2, core.max(1));
    let g3 = g2.spanning_subgraph(|e| alive3[e.u] && alive3[e.w]);
    if !alive3.iter().any(|&x| x) {
        return Err(empty_stage("core_peel"));
    }
    stages.push(summary("core_peel", &g3));

    let count = |s: Side| (0..g.n()).filter(|&v| alive3[v] && side_of(&g3, v) == s).count();
    let side = if count(Side::A) >= count(Side::B) { Side::A } else { Side::B };
    let others: Vec<&LinearOrder> = orders.iter().skip(1).collect();
    let first = &orders[0];
    let records: Vec<MonotoneRecord> = (0..g.n())
        .into_par_iter()
        .filter(|&v| alive3[v] && side_of(&g3, v) == side)
        .map(|v| {
            let mut nb = g3.neighbors(v).to_vec();
            first.sort_by_rank(&mut nb);
            let (monotone_set, directions) = monotone_subset(&nb, &others);
            MonotoneRecord {
                vertex: v,
                core_degree: nb.len(),
                monotone_set,
                directions,
            }
        })
        .collect();

    let mut by_g: BTreeMap<Vec<Direction>, Vec<usize>> = BTreeMap::new();
    for (i, rec) in records.iter().enumerate() {
        by_g.entry(rec.directions.clone()).or_default().push(i);
    }
    let gvec = largest_bucket(&by_g).ok_or_else(|| empty_stage("direction_bucket"))?;
    let mut allowed: Vec<Option<&[usize]>> = vec![None; g.n()];
    let mut monotone_sorted: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for &i in &by_g[&gvec] {
        let rec = &records[i];
        let mut m = rec.monotone_set.clone();
        m.sort_unstable();
        monotone_sorted[rec.vertex] = m;
    }
    for &i in &by_g[&gvec] {
        let v = records[i].vertex;
        allowed[v] = Some(&monotone_sorted[v]);
    }
    let g4 = g3.spanning_subgraph(|e| {
        let (h, o) = if side_of(&g3, e.u) == side { (e.u, e.w) } else { (e.w, e.u) };
        allowed[h].is_some_and(|m| m.binary_search(&o).is_ok())
    });
    stages.push(summary("direction_bucket", &g4));

    let alive5 = core_mask(&g4, config.t);
    let vertices: Vec<usize> = (0..g.n()).filter(|&v| alive5[v]).collect();
    if vertices.is_empty() {
        return Err(empty_stage("final_peel"));
    }
    let sub = g4.induced(&vertices)?;
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in vertices.iter().enumerate() {
        local[v] = i;
    }
    let final_orders: Vec<LinearOrder> = orders
        .iter()
        .map(|o| o.restrict(|v| alive5[v]).relabel(|v| local[v]))
        .collect();
    let tags = (0..d)
        .map(|i| if flipped[i] { format!("reversed/{i}") } else { format!("kept/{i}") })
        .collect();
    let representation = Representation::with_provenance(vertices.len(), final_orders, tags)?;
    let graph = sub.graph;
    stages.push(summary("final_peel", &graph));

    let signs: Vec<i8> = std::iter::once(1).chain(gvec.iter().map(|d| d.sign())).collect();
    let bp = graph.bipartition().expect("inherited bipartition").clone();
    let per_vertex_orders = bp
        .part(side)
        .into_iter()
        .filter(|&v| graph.degree(v) > 0)
        .map(|v| {
            let mut nb = graph.neighbors(v).to_vec();
            representation.orderings()[0].sort_by_rank(&mut nb);
            (v, nb)
        })
        .collect();
    let certificate = HomogeneityCertificate {
        side,
        signs,
        per_vertex_orders,
    };

    let outcome = ForceHomoOutcome {
        graph,
        vertices,
        representation,
        certificate,
        flipped,
        monotone: records,
        stages,
    };
    outcome.verify(g, r, config.t)?;
    Ok(outcome)
}

impl ForceHomoOutcome {
    /// Re-checks every guarantee against the original input: consistency and
    /// homogeneity of the output, minimum degree `t`, and for every recorded
    /// vertex a monotone subset of its neighbourhood of the promised size.
    pub fn verify(&self, g: &Graph, r: &Representation, t: usize) -> Result<()> {
        self.certificate.verify(&self.graph, &self.representation)?;
        if self.graph.min_degree() < t {
            return Err(Error::validation(format!(
                "final minimum degree {} is below {t}",
                self.graph.min_degree()
            )));
        }
        let d = r.len();
        let orders: Vec<LinearOrder> = r
            .orderings()
            .iter()
            .zip(&self.flipped)
            .map(|(o, &flip)| if flip { o.to_reversed() } else { o.clone() })
            .collect();
        for (i, o) in self.representation.orderings().iter().enumerate() {
            let lifted: Vec<usize> = o.as_slice().iter().map(|&v| self.vertices[v]).collect();
            let expected = orders[i].restrict(|v| self.vertices.binary_search(&v).is_ok());
            if lifted != expected.as_slice() {
                return Err(Error::validation(format!(
                    "output ordering {i} is not a restriction of the input"
                )));
            }
        }
        for rec in &self.monotone {
            let need = monotone_floor(rec.core_degree, d);
            if rec.monotone_set.len() < need {
                return Err(Error::validation(format!(
                    "monotone subset of {} has {} < {need} vertices",
                    rec.vertex,
                    rec.monotone_set.len()
                )));
            }
            if rec.monotone_set.iter().any(|&w| !g.has_edge(rec.vertex, w)) {
                return Err(Error::validation(format!(
                    "monotone subset of {} leaves its neighbourhood",
                    rec.vertex
                )));
            }
            let in_first: Vec<usize> = rec
                .monotone_set
                .iter()
                .map(|&w| orders[0].position(w).unwrap())
                .collect();
            let mut ok = in_first.windows(2).all(|w| w[0] < w[1]);
            for (o, dir) in orders.iter().skip(1).zip(&rec.directions) {
                let ranks: Vec<usize> = rec.monotone_set.iter().map(|&w| o.position(w).unwrap()).collect();
                ok &= match dir {
                    Direction::Forward => ranks.windows(2).all(|w| w[0] < w[1]),
                    Direction::Backward => ranks.windows(2).all(|w| w[0] > w[1]),
                };
            }
            if !ok {
                return Err(Error::validation(format!(
                    "subset recorded for {} is not monotone",
                    rec.vertex
                )));
            }
        }
        Ok(())
    }
}
