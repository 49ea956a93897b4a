//! Assembling a representation from pieces on the parts of a partition.

use std::collections::BTreeMap;

use sepdim::construct::{build_representation, compose_partition, lll_partition, BuildConfig};
use sepdim::graph::{generate, Model, Representation};
use sepdim::separation::is_strongly_separating;

fn main() -> sepdim::Result<()> {
    let g = generate(Model::RandomRegular { n: 60, degree: 6 }, 4)?;
    let k = 4;
    let plan = lll_partition(&g, k, 4, 10 * g.n())?;
    let cfg = BuildConfig::default();
    let build = |sub: &sepdim::graph::Graph| build_representation(sub, &cfg).map(|(r, _)| r);

    let intra: Vec<Representation> = (0..k)
        .map(|i| build(&plan.intra_subgraph(&g, i).graph))
        .collect::<sepdim::Result<_>>()?;
    let mut inter = BTreeMap::new();
    for a in 0..k {
        for b in a + 1..k {
            inter.insert((a, b), build(&plan.inter_subgraph(&g, a, b).graph)?);
        }
    }
    let asm = compose_partition(&g, &plan, &intra, &inter, 4, 10_000)?;
    println!(
        "s {} t {} loopy {}: {} orderings, bound {}, strong {}",
        asm.s,
        asm.t,
        asm.loopy,
        asm.representation.len(),
        asm.bound(k),
        is_strongly_separating(&g, &asm.representation).is_ok()
    );
    Ok(())
}
