//! Reducing a dense graph with two orderings to a consistent homogeneous one.

use sepdim::graph::{generate, LinearOrder, Model, Representation};
use sepdim::homogenize::{force_homogeneous, ForceHomoConfig};
use sepdim::seed;

fn main() -> sepdim::Result<()> {
    let g = generate(Model::Gnp { n: 400, p: 0.5 }, 2)?;
    let mut rng = seed::rng(2);
    let r = Representation::new(g.n(), (0..2).map(|_| LinearOrder::random(g.n(), &mut rng)).collect())?;
    let config = ForceHomoConfig::relaxed(2, 12, 2);
    let out = force_homogeneous(&g, &r, &config)?;
    for s in &out.stages {
        println!("{:<20} {:>5} vertices {:>6} edges", s.stage, s.vertices, s.edges);
    }
    out.verify(&g, &r, 2)?;
    println!(
        "homogeneous on side {:?} with signs {:?}, flipped {:?}",
        out.certificate.side, out.certificate.signs, out.flipped
    );
    Ok(())
}
