//! Exact (strong) separation dimension of small graphs.
//!
//! Each ordering of the vertex set becomes a bitset over a universe of
//! requirements: the disjoint edge pairs and, in the strong variant, one
//! element per (edge, outside vertex, side). The minimum number of
//! orderings whose bitsets cover the universe is found by branch and bound.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LinearOrder, Positions, RepKind, Representation};
use crate::separation::{
    disjoint_pairs, is_separating, is_strongly_separating, separated_in, Placement,
};

pub const DEFAULT_VERTEX_LIMIT: usize = 9;
pub const DEFAULT_BUDGET: usize = 6;

/// A side requirement of the strong variant: `vertex` must appear strictly
/// before (or after) both ends of `edge` in some ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SideConstraint {
    pub edge: Edge,
    pub vertex: usize,
    pub side: Placement,
}

#[derive(Clone, Debug)]
pub struct CoverSet {
    pub ordering: LinearOrder,
    pub bits: FixedBitSet,
}

#[derive(Clone, Debug)]
pub struct CoverInstance {
    pub n: usize,
    pub strong: bool,
    pub pairs: Vec<(Edge, Edge)>,
    /// Empty unless `strong`.
    pub strong_constraints: Vec<SideConstraint>,
    /// One representative ordering per distinct bitset, in lexicographic
    /// order of first occurrence.
    pub sets: Vec<CoverSet>,
}

impl CoverInstance {
    pub fn universe(&self) -> usize {
        self.pairs.len() + self.strong_constraints.len()
    }
}

fn side_constraints(g: &Graph) -> Vec<SideConstraint> {
    let mut out = Vec::new();
    for &edge in g.edges() {
        for vertex in (0..g.n()).filter(|&x| !edge.contains(x)) {
            for side in [Placement::Before, Placement::After] {
                out.push(SideConstraint { edge, vertex, side });
            }
        }
    }
    out
}

fn satisfies(c: &SideConstraint, o: &LinearOrder) -> bool {
    let pu = o.position(c.edge.u).expect("edge end missing");
    let pw = o.position(c.edge.w).expect("edge end missing");
    let px = o.position(c.vertex).expect("vertex missing");
    match c.side {
        Placement::Before => px < pu.min(pw),
        Placement::After => px > pu.max(pw),
    }
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn bitset_for(
    o: &LinearOrder,
    pairs: &[(Edge, Edge)],
    constraints: &[SideConstraint],
) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(pairs.len() + constraints.len());
    for (i, (e, f)) in pairs.iter().enumerate() {
        if separated_in(e, f, o) {
            bits.insert(i);
        }
    }
    for (i, c) in constraints.iter().enumerate() {
        if satisfies(c, o) {
            bits.insert(pairs.len() + i);
        }
    }
    bits
}

/// Builds the set-cover instance for `g`. In the non-strong case only one
/// ordering of each reversal pair is enumerated, since reversal preserves
/// pair separation.
pub fn build_cover_instance(g: &Graph, strong: bool, limit: usize) -> Result<CoverInstance> {
    build_instance(g, strong, limit, !strong)
}

fn build_instance(g: &Graph, strong: bool, limit: usize, fold_reversals: bool) -> Result<CoverInstance> {
    if g.n() > limit {
        return Err(Error::SizeLimit { n: g.n(), limit });
    }
    let pairs = disjoint_pairs(g);
    let strong_constraints = if strong { side_constraints(g) } else { Vec::new() };
    let n = g.n();
    let orders: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| !fold_reversals || n < 2 || p[0] < p[n - 1])
        .collect();
    let computed: Vec<CoverSet> = orders
        .into_par_iter()
        .map(|seq| {
            let ordering = LinearOrder::new(seq).expect("permutation");
            let bits = bitset_for(&ordering, &pairs, &strong_constraints);
            CoverSet { ordering, bits }
        })
        .collect();

    let mut seen: HashMap<FixedBitSet, ()> = HashMap::new();
    let mut sets = Vec::new();
    for s in computed {
        if seen.insert(s.bits.clone(), ()).is_none() {
            sets.push(s);
        }
    }
    Ok(CoverInstance {
        n,
        strong,
        pairs,
        strong_constraints,
        sets,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CoverResult {
    Exact {
        size: usize,
        witness: Representation,
    },
    /// No cover of size at most `budget` exists; `upper` is the size of the
    /// greedy cover returned as `witness`.
    ExceedsBudget {
        budget: usize,
        lower: usize,
        upper: usize,
        witness: Representation,
    },
}

impl CoverResult {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            CoverResult::Exact { size, .. } => Some(*size),
            CoverResult::ExceedsBudget { .. } => None,
        }
    }

    pub fn witness(&self) -> &Representation {
        match self {
            CoverResult::Exact { witness, .. } | CoverResult::ExceedsBudget { witness, .. } => witness,
        }
    }
}

struct Search<'a> {
    sets: Vec<&'a FixedBitSet>,
    /// For each universe element, the sets containing it.
    covering: Vec<Vec<usize>>,
    universe: usize,
    best: Option<Vec<usize>>,
    limit: usize,
}

impl Search<'_> {
    /// Looks for covers of size at most `self.limit`; each success lowers
    /// the limit to one below the cover just found.
    fn run(&mut self, covered: &FixedBitSet, chosen: &mut Vec<usize>) {
        let uncovered = self.universe - covered.count_ones(..);
        if uncovered == 0 {
            self.best = Some(chosen.clone());
            self.limit = chosen.len().saturating_sub(1);
            return;
        }
        let max_gain = self
            .sets
            .iter()
            .map(|s| s.difference_count(covered))
            .max()
            .unwrap_or(0);
        if max_gain == 0 || chosen.len() + uncovered.div_ceil(max_gain) > self.limit {
            return;
        }
        let pivot = (0..self.universe)
            .filter(|&e| !covered.contains(e))
            .min_by_key(|&e| (self.covering[e].len(), e))
            .unwrap();
        let mut options: Vec<(usize, usize)> = self.covering[pivot]
            .iter()
            .map(|&s| (self.sets[s].difference_count(covered), s))
            .collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, s) in options {
            if chosen.len() + 1 > self.limit {
                return;
            }
            let mut next = covered.clone();
            next.union_with(self.sets[s]);
            chosen.push(s);
            self.run(&next, chosen);
            chosen.pop();
        }
    }
}

fn greedy(sets: &[&FixedBitSet], universe: usize) -> Vec<usize> {
    let mut covered = FixedBitSet::with_capacity(universe);
    let mut picked = Vec::new();
    while covered.count_ones(..) < universe {
        let (gain, s) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.difference_count(&covered), i))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .expect("non-empty family");
        assert!(gain > 0, "universe not coverable");
        covered.union_with(sets[s]);
        picked.push(s);
    }
    picked
}

/// Drops every set whose bitset is a strict subset of another's.
fn undominated(ci: &CoverInstance) -> Vec<usize> {
    let mut order: Vec<usize> = (0..ci.sets.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(ci.sets[i].bits.count_ones(..)), i));
    let mut kept: Vec<usize> = Vec::new();
    for i in order {
        if !kept.iter().any(|&j| ci.sets[i].bits.is_subset(&ci.sets[j].bits)) {
            kept.push(i);
        }
    }
    kept.sort_unstable();
    kept
}

fn to_rep(ci: &CoverInstance, idx: &[usize]) -> Representation {
    let orders = idx.iter().map(|&i| ci.sets[i].ordering.clone()).collect();
    let tags = idx.iter().map(|&i| format!("cover/{i}")).collect();
    Representation::with_provenance(ci.n, orders, tags).expect("enumerated orderings")
}

/// Minimum cover by branch and bound, searching only up to `budget` sets.
pub fn min_cover(ci: &CoverInstance, budget: usize) -> Result<CoverResult> {
    if budget == 0 {
        return Err(Error::validation("budget must be at least 1"));
    }
    let universe = ci.universe();
    if universe == 0 {
        let witness = Representation::new(ci.n, vec![LinearOrder::identity(ci.n)])?;
        return Ok(CoverResult::Exact { size: 1, witness });
    }
    let kept = undominated(ci);
    let sets: Vec<&FixedBitSet> = kept.iter().map(|&i| &ci.sets[i].bits).collect();
    let mut covering = vec![Vec::new(); universe];
    for (s, bits) in sets.iter().enumerate() {
        for e in bits.ones() {
            covering[e].push(s);
        }
    }
    if let Some(e) = covering.iter().position(|c| c.is_empty()) {
        return Err(Error::Contradiction(format!(
            "universe element {e} is covered by no ordering"
        )));
    }
    let greedy_pick = greedy(&sets, universe);
    let to_global = |local: &[usize]| local.iter().map(|&s| kept[s]).collect::<Vec<_>>();

    let mut search = Search {
        sets,
        covering,
        universe,
        best: None,
        limit: budget,
    };
    if greedy_pick.len() <= budget {
        search.best = Some(greedy_pick.clone());
        search.limit = greedy_pick.len() - 1;
    }
    let root_gain = search.sets.iter().map(|s| s.count_ones(..)).max().unwrap_or(1);
    let root_lower = universe.div_ceil(root_gain);
    search.run(&FixedBitSet::with_capacity(universe), &mut Vec::new());

    Ok(match search.best {
        Some(best) => CoverResult::Exact {
            size: best.len(),
            witness: to_rep(ci, &to_global(&best)),
        },
        None => CoverResult::ExceedsBudget {
            budget,
            lower: root_lower.max(budget + 1),
            upper: greedy_pick.len(),
            witness: to_rep(ci, &to_global(&greedy_pick)),
        },
    })
}

/// Exact (strong) separation dimension of `g`, with the witness verified.
pub fn exact_dimension(g: &Graph, strong: bool, budget: usize) -> Result<CoverResult> {
    exact_dimension_with_limit(g, strong, budget, DEFAULT_VERTEX_LIMIT)
}

pub fn exact_dimension_with_limit(
    g: &Graph,
    strong: bool,
    budget: usize,
    limit: usize,
) -> Result<CoverResult> {
    let ci = build_cover_instance(g, strong, limit)?;
    let result = min_cover(&ci, budget)?;
    let witness = result.witness();
    if strong {
        is_strongly_separating(g, witness).map_err(Error::Verification)?;
    } else {
        is_separating(g, witness).map_err(Error::Verification)?;
    }
    let kind = if strong { RepKind::Strong } else { RepKind::Separating };
    Ok(match result {
        CoverResult::Exact { size, witness } => CoverResult::Exact {
            size,
            witness: witness.mark(kind),
        },
        CoverResult::ExceedsBudget {
            budget,
            lower,
            upper,
            witness,
        } => CoverResult::ExceedsBudget {
            budget,
            lower,
            upper,
            witness: witness.mark(kind),
        },
    })
}

/// Same minimum as [`min_cover`] on the instance that keeps both members of
/// every reversal pair. Used to check that folding reversals loses nothing.
pub fn min_cover_unfolded(g: &Graph, strong: bool, budget: usize, limit: usize) -> Result<CoverResult> {
    let ci = build_instance(g, strong, limit, false)?;
    min_cover(&ci, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Model};
    use proptest::prelude::*;

    fn dim(g: &Graph, strong: bool) -> usize {
        exact_dimension(g, strong, DEFAULT_BUDGET).unwrap().dimension().unwrap()
    }

    /// Smallest `k <= 2` such that some `k` orderings separate everything,
    /// by direct enumeration of singles and pairs of permutations.
    fn brute_at_most_two(g: &Graph) -> Option<usize> {
        let perms: Vec<LinearOrder> = permutations(g.n())
            .into_iter()
            .map(|p| LinearOrder::new(p).unwrap())
            .collect();
        let ok = |orders: Vec<LinearOrder>| is_separating(g, &Representation::new(g.n(), orders).unwrap()).is_ok();
        if perms.iter().any(|p| ok(vec![p.clone()])) {
            return Some(1);
        }
        for i in 0..perms.len() {
            for j in i + 1..perms.len() {
                if ok(vec![perms[i].clone(), perms[j].clone()]) {
                    return Some(2);
                }
            }
        }
        None
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(5)[1], vec![0, 1, 2, 4, 3]);
    }

    #[test]
    fn instance_shapes() {
        let c4 = generate(Model::Cycle { n: 4 }, 0).unwrap();
        let ci = build_cover_instance(&c4, false, 9).unwrap();
        assert_eq!(ci.pairs.len(), 2);
        assert!(ci.sets.len() <= 4);
        let star = generate(Model::Star { leaves: 3 }, 0).unwrap();
        assert_eq!(build_cover_instance(&star, false, 9).unwrap().universe(), 0);
        let k4 = generate(Model::Complete { n: 4 }, 0).unwrap();
        let ci = build_cover_instance(&k4, false, 9).unwrap();
        assert_eq!(ci.pairs.len(), 3);
        assert!(ci.sets.iter().all(|s| s.bits.count_ones(..) == 1));
        assert!(matches!(
            build_cover_instance(&Graph::empty(10), false, 9),
            Err(Error::SizeLimit { n: 10, limit: 9 })
        ));
    }

    #[test]
    fn small_values() {
        let p4 = generate(Model::Path { n: 4 }, 0).unwrap();
        let k13 = generate(Model::Star { leaves: 3 }, 0).unwrap();
        let c4 = generate(Model::Cycle { n: 4 }, 0).unwrap();
        let k4 = generate(Model::Complete { n: 4 }, 0).unwrap();
        assert_eq!(dim(&p4, false), 1);
        assert_eq!(dim(&k13, false), 1);
        assert_eq!(dim(&c4, false), 2);
        assert_eq!(dim(&k4, false), 3);
        assert_eq!(brute_at_most_two(&c4), Some(2));
        assert_eq!(brute_at_most_two(&k4), None);
    }

    #[test]
    fn strong_single_edge_plus_isolated() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(dim(&g, true), 2);
    }

    #[test]
    fn strong_connected_at_least_two() {
        for model in [
            Model::Path { n: 3 },
            Model::Star { leaves: 4 },
            Model::Cycle { n: 5 },
            Model::Complete { n: 4 },
        ] {
            let g = generate(model, 0).unwrap();
            assert!(dim(&g, true) >= 2);
        }
    }

    #[test]
    fn budget_bracket() {
        let k4 = generate(Model::Complete { n: 4 }, 0).unwrap();
        match exact_dimension(&k4, false, 2).unwrap() {
            CoverResult::ExceedsBudget { lower, upper, witness, .. } => {
                assert_eq!(lower, 3);
                assert_eq!(upper, 3);
                assert!(is_separating(&k4, &witness).is_ok());
            }
            other => panic!("expected bracket, got {other:?}"),
        }
        let c4 = generate(Model::Cycle { n: 4 }, 0).unwrap();
        assert!(exact_dimension(&c4, false, 0).is_err());
    }

    #[test]
    fn fold_is_lossless() {
        for seed in 0..15 {
            let g = generate(Model::Gnp { n: 5, p: 0.6 }, seed).unwrap();
            let folded = exact_dimension(&g, false, DEFAULT_BUDGET).unwrap().dimension();
            let full = min_cover_unfolded(&g, false, DEFAULT_BUDGET, 9).unwrap().dimension();
            assert_eq!(folded, full);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn monotone_under_edge_deletion(seed in 0u64..10_000, p in 0.2f64..0.9) {
            let g = generate(Model::Gnp { n: 6, p }, seed).unwrap();
            let d = dim(&g, false);
            for &gone in g.edges() {
                let h = g.spanning_subgraph(|e| *e != gone);
                prop_assert!(dim(&h, false) <= d);
            }
        }

        #[test]
        fn matches_brute_force_when_at_most_two(seed in 0u64..10_000, p in 0.2f64..0.7) {
            let g = generate(Model::Gnp { n: 5, p }, seed).unwrap();
            let d = dim(&g, false);
            match brute_at_most_two(&g) {
                Some(b) => prop_assert_eq!(d, b),
                None => prop_assert!(d >= 3),
            }
        }
    }
}
