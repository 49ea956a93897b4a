//! Proper edge colouring, then upgrading a separating family to a strong one.

use sepdim::construct::{base_construct, strongify, vizing_edge_coloring};
use sepdim::graph::{generate, Model};
use sepdim::separation::{is_separating, is_strongly_separating};

fn main() -> sepdim::Result<()> {
    let g = generate(Model::Gnp { n: 40, p: 0.12 }, 9)?;
    let colours = vizing_edge_coloring(&g)?;
    println!("max degree {}, {} colours", g.max_degree(), colours.len());

    let base = base_construct(&g, 9, 100_000)?.representation;
    println!(
        "base: {} orderings, separating {}, strong {}",
        base.len(),
        is_separating(&g, &base).is_ok(),
        is_strongly_separating(&g, &base).is_ok()
    );
    let strong = strongify(&g, &base)?;
    println!(
        "strongified: {} orderings (at most {}), strong {}",
        strong.len(),
        base.len() + 2 * g.max_degree() + 2,
        is_strongly_separating(&g, &strong).is_ok()
    );
    Ok(())
}
