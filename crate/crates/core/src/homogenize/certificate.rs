use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, LinearOrder, Positions, Representation, Side};

/// Evidence that a representation of a bipartite graph is homogeneous on
/// `side`: for every vertex `v` there, ordering `i` lists `N(v)` as
/// `per_vertex_orders[v]` when `signs[i] = +1` and reversed when `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneityCertificate {
    pub side: Side,
    pub signs: Vec<i8>,
    pub per_vertex_orders: BTreeMap<usize, Vec<usize>>,
}

/// Every edge goes from side A to side B in every ordering.
pub fn check_consistent(g: &Graph, r: &Representation) -> Result<()> {
    let bp = g
        .bipartition()
        .ok_or_else(|| Error::validation("graph has no recorded bipartition"))?;
    for e in g.edges() {
        let (a, b) = match (bp.side(e.u), bp.side(e.w)) {
            (Side::A, Side::B) => (e.u, e.w),
            (Side::B, Side::A) => (e.w, e.u),
            _ => return Err(Error::validation(format!("edge {e} lies inside one side"))),
        };
        for (i, o) in r.orderings().iter().enumerate() {
            if o.position(a) > o.position(b) {
                return Err(Error::validation(format!(
                    "ordering {i} places {b} (side B) before {a} (side A)"
                )));
            }
        }
    }
    Ok(())
}

fn neighbourhood_in(o: &LinearOrder, g: &Graph, v: usize) -> Vec<usize> {
    let mut nb = g.neighbors(v).to_vec();
    o.sort_by_rank(&mut nb);
    nb
}

impl HomogeneityCertificate {
    /// Checks consistency and homogeneity of `r` on `g` against this
    /// certificate, for every non-isolated vertex on the certified side.
    pub fn verify(&self, g: &Graph, r: &Representation) -> Result<()> {
        check_consistent(g, r)?;
        if self.signs.len() != r.len() {
            return Err(Error::validation(format!(
                "{} signs for {} orderings",
                self.signs.len(),
                r.len()
            )));
        }
        if self.signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::validation("signs must be +1 or -1"));
        }
        let bp = g.bipartition().expect("checked above");
        for v in bp.part(self.side) {
            if g.degree(v) == 0 {
                continue;
            }
            let order = self
                .per_vertex_orders
                .get(&v)
                .ok_or_else(|| Error::validation(format!("no neighbourhood order for {v}")))?;
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(Error::validation(format!(
                    "order recorded for {v} is not a permutation of its neighbourhood"
                )));
            }
            let mut reversed = order.clone();
            reversed.reverse();
            for (i, (o, &s)) in r.orderings().iter().zip(&self.signs).enumerate() {
                let seen = neighbourhood_in(o, g, v);
                let expected = if s == 1 { order } else { &reversed };
                if &seen != expected {
                    return Err(Error::validation(format!(
                        "ordering {i} lists N({v}) as {seen:?}, expected {expected:?}"
                    )));
                }
            }
        }
        Ok(())
    }
}
