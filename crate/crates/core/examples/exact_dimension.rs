//! Exact (strong) separation dimension of small graphs by set cover.

use sepdim::exact::{exact_dimension, DEFAULT_BUDGET};
use sepdim::graph::{generate, Model};

fn main() -> sepdim::Result<()> {
    let graphs = [
        ("P4", Model::Path { n: 4 }),
        ("K1,3", Model::Star { leaves: 3 }),
        ("C4", Model::Cycle { n: 4 }),
        ("C6", Model::Cycle { n: 6 }),
        ("K4", Model::Complete { n: 4 }),
        ("K6", Model::Complete { n: 6 }),
    ];
    for (name, model) in graphs {
        let g = generate(model, 0)?;
        let plain = exact_dimension(&g, false, DEFAULT_BUDGET)?;
        let strong = exact_dimension(&g, true, DEFAULT_BUDGET)?;
        println!("{name}: dimension {:?}, strong {:?}", plain.dimension(), strong.dimension());
    }
    Ok(())
}
