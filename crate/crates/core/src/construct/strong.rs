use super::coloring::vizing_edge_coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, LinearOrder, RepKind, Representation};
use crate::separation::{is_separating, is_strongly_separating};

/// Extends a separating representation to a strongly separating one by
/// appending, for each colour class `{v1w1, ..., vqwq}` of a proper edge
/// colouring, the ordering `v1, w1, ..., vq, wq, rest ascending` and its
/// reverse.
pub fn strongify(g: &Graph, r: &Representation) -> Result<Representation> {
    is_separating(g, r).map_err(Error::Verification)?;
    let mut out = r.clone();
    for (i, class) in vizing_edge_coloring(g)?.iter().enumerate() {
        let mut used = vec![false; g.n()];
        let mut seq = Vec::with_capacity(g.n());
        for e in class.edges() {
            seq.extend([e.u, e.w]);
            used[e.u] = true;
            used[e.w] = true;
        }
        seq.extend((0..g.n()).filter(|&v| !used[v]));
        let forward = LinearOrder::new(seq)?;
        let backward = forward.to_reversed();
        out.push(forward, format!("strongify-forward/{i}"));
        out.push(backward, format!("strongify-reverse/{i}"));
    }
    is_strongly_separating(g, &out).map_err(Error::Verification)?;
    Ok(out.mark(RepKind::Strong))
}
