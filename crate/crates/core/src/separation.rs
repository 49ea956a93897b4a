//! Ground-truth checks for (strongly) separating representations.
//!
//! Every check returns `Err(witness)` on failure; the witness names the
//! first violated condition in canonical order (edges lexicographic, pairs
//! lexicographic by their sorted edges).

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LinearOrder, Positions, Representation};

/// Which side of an edge a vertex failed to reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Placement {
    Before,
    After,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two disjoint edges interleaved or nested in every ordering.
    UnseparatedPair { pair: [Edge; 2] },
    /// `vertex` is never strictly `side` both ends of `edge`.
    MissingSide {
        edge: Edge,
        vertex: usize,
        side: Placement,
    },
    /// `vertex` never lies strictly between `ends[0]` and `ends[1]`.
    NeverBetween { vertex: usize, ends: [usize; 2] },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::UnseparatedPair { pair: [e, g] } => {
                write!(f, "edges {e} and {g} are separated in no ordering")
            }
            Witness::MissingSide { edge, vertex, side } => {
                let side = match side {
                    Placement::Before => "before",
                    Placement::After => "after",
                };
                write!(f, "vertex {vertex} is never {side} both ends of {edge}")
            }
            Witness::NeverBetween { vertex, ends: [u, w] } => {
                write!(f, "vertex {vertex} is never between {u} and {w}")
            }
        }
    }
}

impl std::error::Error for Witness {}

#[inline]
fn span<P: Positions + ?Sized>(e: &Edge, o: &P) -> Option<(usize, usize)> {
    let a = o.position(e.u)?;
    let b = o.position(e.w)?;
    Some((a.min(b), a.max(b)))
}

/// Both ends of one edge precede both ends of the other. A loop occupies a
/// single position.
pub fn separated<P: Positions + ?Sized>(e: &Edge, f: &Edge, o: &P) -> Result<bool> {
    if e.shares_vertex(f) {
        return Err(Error::validation(format!("edges {e} and {f} share a vertex")));
    }
    let (e_lo, e_hi) = span(e, o)
        .ok_or_else(|| Error::validation(format!("ordering misses an end of {e}")))?;
    let (f_lo, f_hi) = span(f, o)
        .ok_or_else(|| Error::validation(format!("ordering misses an end of {f}")))?;
    Ok(e_hi < f_lo || f_hi < e_lo)
}

/// Caller guarantees disjointness and that all ends are ordered.
#[inline]
pub(crate) fn separated_in(e: &Edge, f: &Edge, o: &LinearOrder) -> bool {
    let (e_lo, e_hi) = span(e, o).expect("edge end missing from ordering");
    let (f_lo, f_hi) = span(f, o).expect("edge end missing from ordering");
    e_hi < f_lo || f_hi < e_lo
}

/// All pairs of vertex-disjoint edges, in canonical order.
pub fn disjoint_pairs(g: &Graph) -> Vec<(Edge, Edge)> {
    disjoint_pairs_of(g.edges())
}

pub(crate) fn disjoint_pairs_of(edges: &[Edge]) -> Vec<(Edge, Edge)> {
    let mut out = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            if !e.shares_vertex(f) {
                out.push((*e, *f));
            }
        }
    }
    out
}

fn check_cover(g: &Graph, r: &Representation) {
    assert_eq!(
        r.n(),
        g.n(),
        "representation orders {} vertices, graph has {}",
        r.n(),
        g.n()
    );
}

fn first_unseparated<'a, I>(pairs: I, orderings: &[LinearOrder]) -> Option<Witness>
where
    I: IntoIterator<Item = (&'a Edge, &'a Edge)>,
{
    pairs
        .into_iter()
        .find(|(e, f)| !orderings.iter().any(|o| separated_in(e, f, o)))
        .map(|(e, f)| Witness::UnseparatedPair { pair: [*e, *f] })
}

fn first_unseparated_in_graph(g: &Graph, orderings: &[LinearOrder]) -> Option<Witness> {
    let edges = g.edges();
    for (i, e) in edges.iter().enumerate() {
        let rest = edges[i + 1..].iter().filter(|f| !e.shares_vertex(f));
        if let Some(w) = first_unseparated(rest.map(|f| (e, f)), orderings) {
            return Some(w);
        }
    }
    None
}

/// Every pair of disjoint edges is separated in some ordering.
///
/// Panics if `r` does not order exactly the vertices of `g`.
pub fn is_separating(g: &Graph, r: &Representation) -> std::result::Result<(), Witness> {
    check_cover(g, r);
    match first_unseparated_in_graph(g, r.orderings()) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

/// Separating, and every vertex outside an edge is strictly before both its
/// ends in some ordering and strictly after both in some ordering.
pub fn is_strongly_separating(g: &Graph, r: &Representation) -> std::result::Result<(), Witness> {
    is_separating(g, r)?;
    match first_missing_side(g, r.orderings()) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

fn first_missing_side(g: &Graph, orderings: &[LinearOrder]) -> Option<Witness> {
    let n = g.n();
    let mut before = vec![false; n];
    let mut after = vec![false; n];
    for e in g.edges() {
        before.iter_mut().for_each(|b| *b = false);
        after.iter_mut().for_each(|b| *b = false);
        for o in orderings {
            let (lo, hi) = span(e, o).expect("edge end missing from ordering");
            let seq = o.as_slice();
            for &x in &seq[..lo] {
                before[x] = true;
            }
            for &x in &seq[hi + 1..] {
                after[x] = true;
            }
        }
        for x in (0..n).filter(|&x| !e.contains(x)) {
            let side = if !before[x] {
                Placement::Before
            } else if !after[x] {
                Placement::After
            } else {
                continue;
            };
            return Some(Witness::MissingSide {
                edge: *e,
                vertex: x,
                side,
            });
        }
    }
    None
}

/// Checks the two properties required of orderings of the complete graph
/// with loops on `0..n`: (1) every two disjoint edges (loops included) are
/// separated somewhere, and (2) every vertex lies strictly between every two
/// other vertices somewhere.
pub fn loopy_properties_check(n: usize, orderings: &[LinearOrder]) -> std::result::Result<(), Witness> {
    assert!(
        orderings.iter().all(|o| o.is_permutation_of(n)),
        "every ordering must be a permutation of 0..{n}"
    );
    let h = Graph::complete_with_loops(n);
    if let Some(w) = first_unseparated_in_graph(&h, orderings) {
        return Err(w);
    }
    for v in 0..n {
        for u in 0..n {
            for w in u + 1..n {
                if u == v || w == v {
                    continue;
                }
                let between = orderings.iter().any(|o| {
                    let (pu, pv, pw) = (
                        o.position(u).unwrap(),
                        o.position(v).unwrap(),
                        o.position(w).unwrap(),
                    );
                    (pu < pv && pv < pw) || (pw < pv && pv < pu)
                });
                if !between {
                    return Err(Witness::NeverBetween { vertex: v, ends: [u, w] });
                }
            }
        }
    }
    Ok(())
}

/// One bitset per ordering over the canonical list of disjoint pairs; bit
/// `i` is set when the ordering separates pair `i`.
pub fn separation_bitsets(pairs: &[(Edge, Edge)], orderings: &[LinearOrder]) -> Vec<FixedBitSet> {
    orderings
        .iter()
        .map(|o| {
            let mut bits = FixedBitSet::with_capacity(pairs.len());
            for (i, (e, f)) in pairs.iter().enumerate() {
                if separated_in(e, f, o) {
                    bits.insert(i);
                }
            }
            bits
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Model};
    use proptest::prelude::*;

    fn ord(v: &[usize]) -> LinearOrder {
        LinearOrder::new(v.to_vec()).unwrap()
    }

    fn rep(n: usize, v: &[&[usize]]) -> Representation {
        Representation::from_vecs(n, v.iter().map(|o| o.to_vec()).collect()).unwrap()
    }

    // a=0, b=1, c=2, d=3
    #[test]
    fn separated_basic_cases() {
        let o = ord(&[0, 1, 2, 3]);
        assert!(separated(&Edge::new(0, 1), &Edge::new(2, 3), &o).unwrap());
        assert!(!separated(&Edge::new(0, 2), &Edge::new(1, 3), &o).unwrap());
        assert!(separated(&Edge::new(0, 1), &Edge::new(1, 2), &o).is_err());
    }

    #[test]
    fn separated_with_loop() {
        // v=0, x=1, y=2
        let v = Edge::new(0, 0);
        let xy = Edge::new(1, 2);
        assert!(!separated(&v, &xy, &ord(&[1, 0, 2])).unwrap());
        assert!(separated(&v, &xy, &ord(&[0, 1, 2])).unwrap());
    }

    #[test]
    fn c4_single_ordering_fails_with_witness() {
        // a-b-c-d cycle, ids 0..3
        let c4 = generate(Model::Cycle { n: 4 }, 0).unwrap();
        let err = is_separating(&c4, &rep(4, &[&[0, 1, 2, 3]])).unwrap_err();
        assert_eq!(
            err,
            Witness::UnseparatedPair {
                pair: [Edge::new(0, 3), Edge::new(1, 2)]
            }
        );
        assert!(is_separating(&c4, &rep(4, &[&[0, 1, 2, 3], &[1, 2, 3, 0]])).is_ok());
    }

    #[test]
    fn star_is_vacuously_separated() {
        let star = generate(Model::Star { leaves: 3 }, 0).unwrap();
        assert!(is_separating(&star, &rep(4, &[&[2, 0, 3, 1]])).is_ok());
    }

    #[test]
    fn strong_single_edge_with_isolated_vertex() {
        // a=0, b=1, x=2
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(is_strongly_separating(&g, &rep(3, &[&[2, 0, 1], &[0, 1, 2]])).is_ok());
        assert_eq!(
            is_strongly_separating(&g, &rep(3, &[&[2, 0, 1]])).unwrap_err(),
            Witness::MissingSide {
                edge: Edge::new(0, 1),
                vertex: 2,
                side: Placement::After
            }
        );
    }

    #[test]
    fn strong_path_three() {
        // P3 a-b-c with a=0,b=1,c=2: orderings (a,b,c) and (c,b,a).
        // Edge ab, x=c: after in (a,b,c), before in (c,b,a).
        // Edge bc, x=a: before in (a,b,c), after in (c,b,a).
        let p3 = generate(Model::Path { n: 3 }, 0).unwrap();
        assert!(is_strongly_separating(&p3, &rep(3, &[&[0, 1, 2], &[2, 1, 0]])).is_ok());
    }

    #[test]
    fn loopy_small_cases() {
        assert!(loopy_properties_check(2, &[ord(&[0, 1])]).is_ok());
        assert_eq!(
            loopy_properties_check(3, &[ord(&[0, 1, 2])]),
            Err(Witness::UnseparatedPair {
                pair: [Edge::new(0, 2), Edge::new(1, 1)]
            })
        );
        // Every disjoint pair is separated, yet 0 is never between 1 and 2.
        assert_eq!(
            loopy_properties_check(3, &[ord(&[0, 1, 2]), ord(&[0, 2, 1])]),
            Err(Witness::NeverBetween { vertex: 0, ends: [1, 2] })
        );
    }

    /// Exhaustive (1)/(2) scan written without reusing the graph helpers.
    fn loopy_oracle(n: usize, orders: &[Vec<usize>]) -> bool {
        let pos: Vec<Vec<usize>> = orders
            .iter()
            .map(|o| {
                let mut p = vec![0; n];
                for (i, &v) in o.iter().enumerate() {
                    p[v] = i;
                }
                p
            })
            .collect();
        let mut edges = vec![];
        for a in 0..n {
            for b in a..n {
                edges.push((a, b));
            }
        }
        for &(a, b) in &edges {
            for &(c, d) in &edges {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let ok = pos.iter().any(|p| {
                    let (e_hi, e_lo) = (p[a].max(p[b]), p[a].min(p[b]));
                    let (f_hi, f_lo) = (p[c].max(p[d]), p[c].min(p[d]));
                    e_hi < f_lo || f_hi < e_lo
                });
                if !ok {
                    return false;
                }
            }
        }
        for v in 0..n {
            for u in 0..n {
                for w in 0..n {
                    if u == v || w == v || u == w {
                        continue;
                    }
                    if !pos.iter().any(|p| p[u] < p[v] && p[v] < p[w] || p[w] < p[v] && p[v] < p[u]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn loopy_three_orderings_of_three() {
        let orders = vec![vec![0, 1, 2], vec![1, 0, 2], vec![0, 2, 1]];
        let lin: Vec<_> = orders.iter().map(|o| ord(o)).collect();
        // 0 is between in (1,0,2); 1 in (0,1,2); 2 in (0,2,1); loop pairs are
        // separated whenever the non-loop edge's ends are adjacent.
        assert!(loopy_oracle(3, &orders));
        assert!(loopy_properties_check(3, &lin).is_ok());
    }

    fn naive_separating(edges: &[(usize, usize)], orders: &[Vec<usize>]) -> bool {
        for i in 0..edges.len() {
            for j in 0..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if i == j || a == c || a == d || b == c || b == d {
                    continue;
                }
                let mut found = false;
                for o in orders {
                    let idx = |x: usize| o.iter().position(|&y| y == x).unwrap();
                    if (idx(a) < idx(c) && idx(a) < idx(d) && idx(b) < idx(c) && idx(b) < idx(d))
                        || (idx(c) < idx(a) && idx(c) < idx(b) && idx(d) < idx(a) && idx(d) < idx(b))
                    {
                        found = true;
                    }
                }
                if !found {
                    return false;
                }
            }
        }
        true
    }

    proptest! {
        #[test]
        fn separated_symmetric_and_reverse_invariant(perm in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle()) {
            let o = ord(&perm);
            let pairs = disjoint_pairs(&generate(Model::Complete { n: 6 }, 0).unwrap());
            for (e, f) in pairs {
                let s = separated(&e, &f, &o).unwrap();
                prop_assert_eq!(s, separated(&f, &e, &o).unwrap());
                prop_assert_eq!(s, separated(&e, &f, &o.reversed()).unwrap());
            }
        }

        #[test]
        fn agrees_with_naive_on_small_graphs(n in 2usize..=6, p in 0.1f64..0.9, seed in 0u64..1000, reps in 1usize..=2) {
            let g = generate(Model::Gnp { n, p }, seed).unwrap();
            let mut rng = crate::seed::rng(seed ^ 0xabc);
            let orders: Vec<Vec<usize>> = (0..reps).map(|_| LinearOrder::random(n, &mut rng).into_vec()).collect();
            let r = Representation::from_vecs(n, orders.clone()).unwrap();
            let edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.w)).collect();
            prop_assert_eq!(is_separating(&g, &r).is_ok(), naive_separating(&edges, &orders));
        }

        #[test]
        fn adding_orderings_is_monotone(seed in 0u64..500) {
            let g = generate(Model::Gnp { n: 6, p: 0.5 }, seed).unwrap();
            let mut rng = crate::seed::rng(seed);
            let mut orders = vec![LinearOrder::random(6, &mut rng).into_vec()];
            let mut was_ok = false;
            for _ in 0..6 {
                let ok = is_separating(&g, &Representation::from_vecs(6, orders.clone()).unwrap()).is_ok();
                prop_assert!(!was_ok || ok);
                was_ok = ok;
                orders.push(LinearOrder::random(6, &mut rng).into_vec());
            }
        }

        #[test]
        fn strong_implies_separating(seed in 0u64..500, count in 1usize..6) {
            let g = generate(Model::Gnp { n: 5, p: 0.5 }, seed).unwrap();
            let mut rng = crate::seed::rng(seed);
            let orders = (0..count).map(|_| LinearOrder::random(5, &mut rng)).collect();
            let r = Representation::new(5, orders).unwrap();
            if is_strongly_separating(&g, &r).is_ok() {
                prop_assert!(is_separating(&g, &r).is_ok());
            }
        }

        #[test]
        fn bitsets_match_pairwise_checks(seed in 0u64..200) {
            let g = generate(Model::Gnp { n: 7, p: 0.4 }, seed).unwrap();
            let pairs = disjoint_pairs(&g);
            let mut rng = crate::seed::rng(seed);
            let o = LinearOrder::random(7, &mut rng);
            let bits = &separation_bitsets(&pairs, std::slice::from_ref(&o))[0];
            for (i, (e, f)) in pairs.iter().enumerate() {
                prop_assert_eq!(bits.contains(i), separated(e, f, &o).unwrap());
            }
        }
    }
}
