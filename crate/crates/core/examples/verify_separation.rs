//! Checks a few hand-made representations of the 4-cycle.

use sepdim::graph::{generate, Model, Representation};
use sepdim::separation::{is_separating, is_strongly_separating};

fn main() -> sepdim::Result<()> {
    let c4 = generate(Model::Cycle { n: 4 }, 0)?;
    let candidates = [
        vec![vec![0, 1, 2, 3]],
        vec![vec![0, 1, 2, 3], vec![1, 2, 3, 0]],
        vec![vec![0, 1, 2, 3], vec![1, 2, 3, 0], vec![3, 2, 1, 0], vec![0, 3, 2, 1]],
    ];
    for orders in candidates {
        let rep = Representation::from_vecs(4, orders.clone())?;
        let plain = match is_separating(&c4, &rep) {
            Ok(()) => "separating".to_string(),
            Err(w) => format!("not separating ({w})"),
        };
        let strong = match is_strongly_separating(&c4, &rep) {
            Ok(()) => "strong".to_string(),
            Err(w) => format!("not strong ({w})"),
        };
        println!("{orders:?}: {plain}; {strong}");
    }
    Ok(())
}
