use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::certificate::HomogeneityCertificate;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LinearOrder, Positions, Representation, Side};
use crate::separation::{separated_in, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RefutationCase {
    /// All three signs agree after normalization.
    AllForward,
    /// One sign disagrees; pair found on a cycle of unmarked edges.
    UnmarkedCycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    pub case: RefutationCase,
    pub witness: Witness,
}

/// The representation after normalization: homogeneous side called `A`
/// and placed first, at least two positive signs, negative sign last.
struct Normal<'a> {
    g: &'a Graph,
    home: Side,
    orders: Vec<LinearOrder>,
    negative_last: bool,
    /// Per-vertex neighbourhood order, possibly reversed.
    nb_order: BTreeMap<usize, Vec<usize>>,
    nb_rank: BTreeMap<usize, BTreeMap<usize, usize>>,
}

impl Normal<'_> {
    fn rank(&self, v: usize, w: usize) -> usize {
        self.nb_rank[&v][&w]
    }

    fn rightmost(&self, v: usize) -> usize {
        *self.nb_order[&v].last().expect("non-empty neighbourhood")
    }
}

fn normalize<'a>(g: &'a Graph, r: &Representation, cert: &HomogeneityCertificate) -> Normal<'a> {
    let mut orders: Vec<LinearOrder> = r.orderings().to_vec();
    let mut signs = cert.signs.clone();
    if cert.side == Side::B {
        orders = orders.iter().map(LinearOrder::to_reversed).collect();
        signs.iter_mut().for_each(|s| *s = -*s);
    }
    let mut reverse_nb = false;
    if signs.iter().filter(|&&s| s == 1).count() < 2 {
        signs.iter_mut().for_each(|s| *s = -*s);
        reverse_nb = true;
    }
    let negative_last = if let Some(i) = signs.iter().position(|&s| s == -1) {
        orders.swap(i, 2);
        signs.swap(i, 2);
        true
    } else {
        false
    };
    let nb_order: BTreeMap<usize, Vec<usize>> = cert
        .per_vertex_orders
        .iter()
        .map(|(&v, o)| {
            let mut o = o.clone();
            if reverse_nb {
                o.reverse();
            }
            (v, o)
        })
        .collect();
    let nb_rank = nb_order
        .iter()
        .map(|(&v, o)| (v, o.iter().enumerate().map(|(i, &w)| (w, i)).collect()))
        .collect();
    Normal {
        g,
        home: cert.side,
        orders,
        negative_last,
        nb_order,
        nb_rank,
    }
}

fn unseparated(orders: &[LinearOrder], e: Edge, f: Edge) -> bool {
    !e.shares_vertex(&f) && orders.iter().all(|o| !separated_in(&e, &f, o))
}

/// Finds a cycle in the graph with edge list `edges` on `n` vertices.
fn find_cycle(n: usize, edges: &[Edge]) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e.u].push(e.w);
        adj[e.w].push(e.u);
    }
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next == adj[v].len() {
                state[v] = 2;
                stack.pop();
                continue;
            }
            let w = adj[v][*next];
            *next += 1;
            if w == parent[v] {
                continue;
            }
            if state[w] == 1 {
                let mut cycle = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return Some(cycle);
            }
            if state[w] == 0 {
                parent[w] = v;
                state[w] = 1;
                stack.push((w, 0));
            }
        }
    }
    None
}

/// Finds two disjoint edges of `g` separated in none of the three orderings
/// of `r`, following the two-case argument that rules out consistent
/// homogeneous 3-dimensional representations of graphs with minimum degree
/// at least 4.
pub fn refute_homogeneous_rep(
    g: &Graph,
    r: &Representation,
    cert: &HomogeneityCertificate,
) -> Result<Refutation> {
    if r.len() != 3 {
        return Err(Error::validation(format!("need exactly 3 orderings, got {}", r.len())));
    }
    if r.n() != g.n() {
        return Err(Error::validation("representation and graph differ in size"));
    }
    if g.n() == 0 || g.min_degree() < 4 {
        return Err(Error::validation(format!(
            "minimum degree {} is below 4",
            g.min_degree()
        )));
    }
    cert.verify(g, r)?;
    let norm = normalize(g, r, cert);
    let home: Vec<usize> = g.bipartition().expect("verified").part(norm.home);

    let found = if norm.negative_last {
        unmarked_cycle_case(&norm, &home)?
    } else {
        all_forward_case(&norm, &home)
    };
    let (case, [e, f]) = found.ok_or_else(|| {
        Error::Contradiction("both candidate pairs are separated somewhere".into())
    })?;
    if !unseparated(r.orderings(), e, f) {
        return Err(Error::Contradiction(format!("{e} and {f} are separated")));
    }
    Ok(Refutation {
        case,
        witness: Witness::UnseparatedPair { pair: [e, f] },
    })
}

type Found = Option<(RefutationCase, [Edge; 2])>;

fn all_forward_case(norm: &Normal, home: &[usize]) -> Found {
    for &v in home {
        let nb = &norm.nb_order[&v];
        let (b, c) = (nb[0], nb[1]);
        if let Some(&x) = norm.g.neighbors(b).iter().find(|&&x| x != v) {
            let pair = [Edge::new(v, c), Edge::new(b, x)];
            if unseparated(&norm.orders, pair[0], pair[1]) {
                return Some((RefutationCase::AllForward, pair));
            }
        }
    }
    None
}

fn unmarked_cycle_case(norm: &Normal, home: &[usize]) -> Result<Found> {
    let g = norm.g;
    let mut marked: Vec<Edge> = home.iter().map(|&v| Edge::new(v, norm.rightmost(v))).collect();
    marked.sort_unstable();
    let unmarked: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| marked.binary_search(e).is_err())
        .collect();
    let cycle = find_cycle(g.n(), &unmarked)
        .ok_or_else(|| Error::Contradiction("no cycle among unmarked edges".into()))?;
    let len = cycle.len();
    let first = &norm.orders[0];
    let at = (0..len)
        .min_by_key(|&i| first.position(cycle[i]).unwrap())
        .unwrap();
    let v = cycle[at];
    if !home.contains(&v) {
        return Err(Error::Contradiction(format!(
            "leftmost cycle vertex {v} is not on the homogeneous side"
        )));
    }
    let (mut b, mut c) = (cycle[(at + 1) % len], cycle[(at + len - 1) % len]);
    let mut b_at = (at + 1) % len;
    if norm.rank(v, b) > norm.rank(v, c) {
        std::mem::swap(&mut b, &mut c);
        b_at = (at + len - 1) % len;
    }
    let w = if cycle[(b_at + 1) % len] == v {
        cycle[(b_at + len - 1) % len]
    } else {
        cycle[(b_at + 1) % len]
    };
    let b_prime = norm.rightmost(w);
    for pair in [
        [Edge::new(v, c), Edge::new(w, b)],
        [Edge::new(v, b), Edge::new(w, b_prime)],
    ] {
        if unseparated(&norm.orders, pair[0], pair[1]) {
            return Ok(Some((RefutationCase::UnmarkedCycle, pair)));
        }
    }
    Ok(None)
}
