//! Gluing strongly separating representations of pieces into one for the
//! whole graph: disjoint unions, and partitions into `k` parts.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::loopy::loopy_orderings;
use crate::error::{Error, Result};
use crate::graph::{Graph, LinearOrder, RepKind, Representation, Subgraph};
use crate::seed;
use crate::separation::is_strongly_separating;

use super::partition::PartitionPlan;

/// Block order of the pieces within one composed ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockDirection {
    /// First piece first.
    Forward,
    /// Last piece first.
    Backward,
}

impl BlockDirection {
    pub fn flipped(self) -> Self {
        match self {
            BlockDirection::Forward => BlockDirection::Backward,
            BlockDirection::Backward => BlockDirection::Forward,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Composition {
    /// The disjoint union, on the pieces' original vertex ids.
    pub graph: Graph,
    pub representation: Representation,
    pub directions: Vec<BlockDirection>,
}

/// Concatenates pieces in block order, each internally ordered by its
/// `j`-th ordering (mapped to original ids).
fn concat(pieces: &[(&Subgraph, &Representation)], j: usize, dir: BlockDirection) -> Vec<usize> {
    let mut seq = Vec::new();
    let mut push = |(sub, rep): &(&Subgraph, &Representation)| {
        seq.extend(rep.orderings()[j].as_slice().iter().map(|&v| sub.original(v)));
    };
    match dir {
        BlockDirection::Forward => pieces.iter().for_each(&mut push),
        BlockDirection::Backward => pieces.iter().rev().for_each(&mut push),
    }
    seq
}

/// Checks the pieces, pads each to `p = max(sizes, 2)` and returns their
/// padded representations. `total` is the size of the vertex set the pieces
/// must partition.
fn prepare(pieces: &[(Subgraph, Representation)], total: usize) -> Result<(usize, Vec<Representation>)> {
    let mut owner = vec![usize::MAX; total];
    for (i, (sub, rep)) in pieces.iter().enumerate() {
        if rep.n() != sub.graph.n() {
            return Err(Error::validation(format!(
                "piece {i}: representation orders {} vertices, graph has {}",
                rep.n(),
                sub.graph.n()
            )));
        }
        for &v in &sub.vertices {
            if v >= total || owner[v] != usize::MAX {
                return Err(Error::validation(format!(
                    "piece {i}: vertex {v} out of range or shared with another piece"
                )));
            }
            owner[v] = i;
        }
        is_strongly_separating(&sub.graph, rep).map_err(Error::Verification)?;
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::validation(format!("vertex {v} belongs to no piece")));
    }
    let p = pieces.iter().map(|(_, r)| r.len()).max().unwrap_or(1).max(2);
    Ok((p, pieces.iter().map(|(_, r)| r.padded(p)).collect()))
}

fn union_graph(pieces: &[(Subgraph, Representation)], total: usize) -> Result<Graph> {
    let edges = pieces.iter().flat_map(|(sub, _)| {
        sub.graph
            .edges()
            .iter()
            .map(|e| (sub.original(e.u), sub.original(e.w)))
    });
    Graph::new(total, edges)
}

/// Orderings `0..p-1` list the pieces first to last, ordering `p-1` lists
/// them last to first; inside each block the piece's own ordering of the
/// same index is used.
fn compose_orders(
    pieces: &[(Subgraph, Representation)],
    padded: &[Representation],
    p: usize,
) -> Vec<(LinearOrder, BlockDirection)> {
    let refs: Vec<(&Subgraph, &Representation)> = pieces
        .iter()
        .zip(padded)
        .map(|((sub, _), rep)| (sub, rep))
        .collect();
    (0..p)
        .map(|j| {
            let dir = if j + 1 < p {
                BlockDirection::Forward
            } else {
                BlockDirection::Backward
            };
            let order = LinearOrder::new(concat(&refs, j, dir)).expect("pieces are disjoint");
            (order, dir)
        })
        .collect()
}

/// Disjoint union of strongly separating pieces. The pieces' vertex sets
/// must partition `0..N` for some `N`; the output orders all of it.
pub fn compose_components(pieces: &[(Subgraph, Representation)]) -> Result<Composition> {
    let total: usize = pieces.iter().map(|(s, _)| s.vertices.len()).sum();
    compose_components_on(pieces, total)
}

fn compose_components_on(pieces: &[(Subgraph, Representation)], total: usize) -> Result<Composition> {
    let (p, padded) = prepare(pieces, total)?;
    let graph = union_graph(pieces, total)?;
    let composed = compose_orders(pieces, &padded, p);
    let tags = composed
        .iter()
        .enumerate()
        .map(|(j, (_, d))| format!("components/{j}/{}", direction_tag(*d)))
        .collect();
    let (orders, directions): (Vec<_>, Vec<_>) = composed.into_iter().unzip();
    let representation = Representation::with_provenance(total, orders, tags)?;
    is_strongly_separating(&graph, &representation).map_err(Error::Verification)?;
    Ok(Composition {
        graph,
        representation: representation.mark(RepKind::Strong),
        directions,
    })
}

fn direction_tag(d: BlockDirection) -> &'static str {
    match d {
        BlockDirection::Forward => "forward",
        BlockDirection::Backward => "backward",
    }
}

/// A 1-factorization of `K_k` for even `k` (circle method): `k-1` rounds of
/// `k/2` disjoint pairs `(a, b)` with `a < b`.
pub fn round_robin(k: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::validation(format!("round robin needs even k >= 2, got {k}")));
    }
    let m = k - 1;
    let rounds = (0..m)
        .map(|r| {
            let mut pairs = vec![(r, m)];
            for i in 1..k / 2 {
                let a = (r + i) % m;
                let b = (r + m - i) % m;
                pairs.push((a.min(b), a.max(b)));
            }
            pairs.sort_unstable();
            pairs
        })
        .collect();
    Ok(rounds)
}

/// Output of [`compose_partition`] with the sizes that enter its bound.
#[derive(Clone, Debug)]
pub struct PartitionAssembly {
    pub representation: Representation,
    /// Common (padded) size of the intra-part representations.
    pub s: usize,
    /// Common (padded) size of the inter-part representations.
    pub t: usize,
    /// Number of orderings of the part graph, each lifted twice.
    pub loopy: usize,
    pub loopy_retries: usize,
}

impl PartitionAssembly {
    /// `2s + (k-1)t + 2p`.
    pub fn bound(&self, k: usize) -> usize {
        2 * self.s + (k - 1) * self.t + 2 * super::loopy_size(k)
    }
}

/// Assembles a strongly separating representation of `g` from
///
/// * strongly separating representations of each `G[V_i]` (in the local ids
///   of [`PartitionPlan::intra_subgraph`]), and
/// * strongly separating representations of each `G[V_a, V_b]`, `a < b`
///   (in the local ids of [`PartitionPlan::inter_subgraph`]).
///
/// The result has `2s + (k-1)t + 2p` orderings: the composed intra
/// orderings plus copies with flipped block order, `t` composed orderings per
/// round of a 1-factorization of `K_k`, and two lifts of each of `p` random
/// orderings of the parts (with every part ascending, then descending).
pub fn compose_partition(
    g: &Graph,
    plan: &PartitionPlan,
    intra_reps: &[Representation],
    inter_reps: &BTreeMap<(usize, usize), Representation>,
    seed: u64,
    max_attempts: usize,
) -> Result<PartitionAssembly> {
    let k = plan.k();
    let rounds = round_robin(k)?;
    if intra_reps.len() != k {
        return Err(Error::validation(format!(
            "expected {k} intra-part representations, got {}",
            intra_reps.len()
        )));
    }
    let n = g.n();
    let mut orders: Vec<LinearOrder> = Vec::new();
    let mut tags: Vec<String> = Vec::new();

    // G_0 and its extra orderings
    let intra: Vec<(Subgraph, Representation)> = (0..k)
        .map(|i| (plan.intra_subgraph(g, i), intra_reps[i].clone()))
        .collect();
    let (s, padded) = prepare(&intra, n)?;
    let composed = compose_orders(&intra, &padded, s);
    let refs: Vec<(&Subgraph, &Representation)> = intra
        .iter()
        .zip(&padded)
        .map(|((sub, _), rep)| (sub, rep))
        .collect();
    for (j, (order, dir)) in composed.iter().enumerate() {
        orders.push(order.clone());
        tags.push(format!("intra/{j}/{}", direction_tag(*dir)));
    }
    for (j, (_, dir)) in composed.iter().enumerate() {
        let flipped = dir.flipped();
        orders.push(LinearOrder::new(concat(&refs, j, flipped))?);
        tags.push(format!("intra-extra/{j}/{}", direction_tag(flipped)));
    }

    // G_1 .. G_{k-1}, one per perfect matching of K_k
    let mut inter_pieces = Vec::with_capacity(rounds.len());
    for round in &rounds {
        let mut pieces = Vec::with_capacity(round.len());
        for &(a, b) in round {
            let rep = inter_reps.get(&(a, b)).ok_or_else(|| {
                Error::validation(format!("missing representation for parts ({a},{b})"))
            })?;
            pieces.push((plan.inter_subgraph(g, a, b), rep.clone()));
        }
        inter_pieces.push(pieces);
    }
    let t = inter_pieces
        .iter()
        .flatten()
        .map(|(_, r)| r.len())
        .max()
        .unwrap_or(1)
        .max(2);
    for (l, pieces) in inter_pieces.iter().enumerate() {
        let (_, padded) = prepare(pieces, n)?;
        let padded: Vec<Representation> = padded.iter().map(|r| r.padded(t)).collect();
        for (j, (order, dir)) in compose_orders(pieces, &padded, t).into_iter().enumerate() {
            orders.push(order);
            tags.push(format!("inter/{l}/{j}/{}", direction_tag(dir)));
        }
    }

    // lifts of orderings of the complete graph with loops on the parts
    let loopy = loopy_orderings(k, seed::derive(seed, "compose/loopy"), max_attempts)?;
    for (h, part_order) in loopy.orderings.iter().enumerate() {
        let mut up = Vec::with_capacity(n);
        let mut down = Vec::with_capacity(n);
        for &i in part_order.as_slice() {
            up.extend(plan.parts()[i].iter().copied());
            down.extend(plan.parts()[i].iter().rev().copied());
        }
        orders.push(LinearOrder::new(up)?);
        tags.push(format!("loopy-lift-forward/{h}"));
        orders.push(LinearOrder::new(down)?);
        tags.push(format!("loopy-lift-reverse/{h}"));
    }

    let rep = Representation::with_provenance(n, orders, tags)?;
    is_strongly_separating(g, &rep).map_err(Error::Verification)?;
    Ok(PartitionAssembly {
        representation: rep.mark(RepKind::Strong),
        s,
        t,
        loopy: loopy.orderings.len(),
        loopy_retries: loopy.retries,
    })
}

/// Which blocks of the pieces appear in which order in `order`.
/// `None` if the pieces are interleaved.
pub fn block_direction(order: &LinearOrder, blocks: &[Vec<usize>]) -> Option<BlockDirection> {
    let mut owner = BTreeMap::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            owner.insert(v, i);
        }
    }
    let seen: Vec<usize> = order
        .as_slice()
        .iter()
        .filter_map(|v| owner.get(v).copied())
        .collect();
    let mut runs: Vec<usize> = seen.clone();
    runs.dedup();
    let nonempty = blocks.iter().filter(|b| !b.is_empty()).count();
    if runs.len() != nonempty {
        return None;
    }
    if runs.windows(2).all(|w| w[0] < w[1]) {
        Some(BlockDirection::Forward)
    } else if runs.windows(2).all(|w| w[0] > w[1]) {
        Some(BlockDirection::Backward)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{base_construct, strongify};
    use crate::graph::{generate, subgraph_bipartite, Model};
    use std::collections::BTreeSet;

    fn strong_rep(g: &Graph, seed: u64) -> Representation {
        let base = base_construct(g, seed, 10_000).unwrap().representation;
        strongify(g, &base).unwrap()
    }

    fn piece(g: &Graph, vertices: &[usize], seed: u64) -> (Subgraph, Representation) {
        let sub = g.induced(vertices).unwrap();
        let rep = strong_rep(&sub.graph, seed);
        (sub, rep)
    }

    #[test]
    fn round_robin_is_a_one_factorization() {
        for k in (2..=12).step_by(2) {
            let rounds = round_robin(k).unwrap();
            assert_eq!(rounds.len(), k - 1);
            let mut all = BTreeSet::new();
            for round in &rounds {
                let mut seen = BTreeSet::new();
                for &(a, b) in round {
                    assert!(a < b && b < k);
                    assert!(seen.insert(a) && seen.insert(b));
                    assert!(all.insert((a, b)));
                }
                assert_eq!(seen.len(), k);
            }
            assert_eq!(all.len(), k * (k - 1) / 2);
        }
        assert!(round_robin(5).is_err());
    }

    #[test]
    fn two_single_edges() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let pieces = vec![piece(&g, &[0, 1], 1), piece(&g, &[2, 3], 2)];
        let c = compose_components(&pieces).unwrap();
        // each single-edge rep has 1 + 2 orderings
        assert_eq!(c.representation.len(), 3);
        assert!(is_strongly_separating(&g, &c.representation).is_ok());
        let blocks = vec![vec![0, 1], vec![2, 3]];
        for (o, d) in c.representation.orderings().iter().zip(&c.directions) {
            assert_eq!(block_direction(o, &blocks), Some(*d));
        }
        assert_eq!(*c.directions.last().unwrap(), BlockDirection::Backward);
    }

    #[test]
    fn one_component_is_padded_input() {
        let g = generate(Model::Cycle { n: 5 }, 0).unwrap();
        let pieces = vec![piece(&g, &[0, 1, 2, 3, 4], 3)];
        let c = compose_components(&pieces).unwrap();
        assert_eq!(c.representation.orderings(), pieces[0].1.orderings());
    }

    #[test]
    fn three_four_cycles() {
        let edges = (0..3).flat_map(|c| {
            let b = 4 * c;
            [(b, b + 1), (b + 1, b + 2), (b + 2, b + 3), (b + 3, b)]
        });
        let g = Graph::new(12, edges).unwrap();
        let pieces: Vec<_> = (0..3)
            .map(|c| piece(&g, &[4 * c, 4 * c + 1, 4 * c + 2, 4 * c + 3], c as u64))
            .collect();
        let p = pieces.iter().map(|(_, r)| r.len()).max().unwrap();
        let c = compose_components(&pieces).unwrap();
        assert_eq!(c.representation.len(), p);
        assert!(is_strongly_separating(&g, &c.representation).is_ok());
    }

    #[test]
    fn overlapping_pieces_rejected() {
        let g = generate(Model::Path { n: 3 }, 0).unwrap();
        let pieces = vec![piece(&g, &[0, 1], 0), piece(&g, &[1, 2], 0)];
        assert!(matches!(compose_components(&pieces), Err(Error::Validation(_))));
    }

    fn assemble(g: &Graph, plan: &PartitionPlan, seed: u64) -> PartitionAssembly {
        let k = plan.k();
        let intra: Vec<_> = (0..k)
            .map(|i| strong_rep(&plan.intra_subgraph(g, i).graph, seed + i as u64))
            .collect();
        let mut inter = BTreeMap::new();
        for a in 0..k {
            for b in a + 1..k {
                let sub = plan.inter_subgraph(g, a, b);
                inter.insert((a, b), strong_rep(&sub.graph, seed + 100 + (a * k + b) as u64));
            }
        }
        compose_partition(g, plan, &intra, &inter, seed, 100).unwrap()
    }

    #[test]
    fn two_parts_with_one_cross_edge() {
        let g = Graph::new(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        let plan = PartitionPlan::from_parts(&g, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let out = assemble(&g, &plan, 5);
        assert!(out.representation.len() <= out.bound(2));
        assert!(is_strongly_separating(&g, &out.representation).is_ok());
    }

    #[test]
    fn two_parts_no_cross_edges() {
        let g = Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let plan = PartitionPlan::from_parts(&g, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let sub = subgraph_bipartite(&g, &[0, 1, 2], &[3, 4, 5]).unwrap();
        assert_eq!(sub.graph.edge_count(), 0);
        let out = assemble(&g, &plan, 1);
        assert!(is_strongly_separating(&g, &out.representation).is_ok());
    }

    #[test]
    fn four_parts_random_graph() {
        let g = generate(Model::Gnp { n: 24, p: 0.2 }, 8).unwrap();
        let parts: Vec<Vec<usize>> = (0..4).map(|i| (0..24).filter(|v| v % 4 == i).collect()).collect();
        let plan = PartitionPlan::from_parts(&g, parts).unwrap();
        let out = assemble(&g, &plan, 2);
        assert!(out.representation.len() <= out.bound(4));
        assert_eq!(out.representation.len(), 2 * out.s + 3 * out.t + 2 * out.loopy);
    }

    #[test]
    fn missing_inter_rep() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let plan = PartitionPlan::from_parts(&g, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let intra: Vec<_> = (0..2)
            .map(|i| strong_rep(&plan.intra_subgraph(&g, i).graph, 0))
            .collect();
        assert!(compose_partition(&g, &plan, &intra, &BTreeMap::new(), 0, 10).is_err());
    }
}
