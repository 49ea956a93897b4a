//! Vertex partitions with few neighbours in any one part.

use sepdim::construct::lll_partition;
use sepdim::graph::{generate, Model};

fn main() -> sepdim::Result<()> {
    let g = generate(Model::RandomRegular { n: 400, degree: 16 }, 3)?;
    for k in [2, 4, 8] {
        let plan = lll_partition(&g, k, 7, 10 * g.n())?;
        let assign = plan.assignment(g.n());
        let worst = (0..g.n())
            .map(|v| {
                let mut counts = vec![0; k];
                g.neighbors(v).iter().for_each(|&w| counts[assign[w]] += 1);
                counts.into_iter().max().unwrap()
            })
            .max()
            .unwrap();
        let sizes: Vec<usize> = plan.parts().iter().map(Vec::len).collect();
        println!(
            "k {k}: part sizes {sizes:?}, worst count {worst} < {:.2}, {} resamplings",
            plan.degree_bound(),
            plan.resamplings()
        );
    }
    Ok(())
}
