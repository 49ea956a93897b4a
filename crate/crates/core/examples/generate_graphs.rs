//! Graph generators and the edge-list round trip.

use sepdim::graph::{generate, parse_edge_list, to_edge_list, Model};

fn main() -> sepdim::Result<()> {
    let models = [
        Model::Cycle { n: 8 },
        Model::Complete { n: 6 },
        Model::RandomRegular { n: 50, degree: 5 },
        Model::Gnp { n: 50, p: 0.1 },
        Model::RandomBipartite { left: 20, right: 30, p: 0.2 },
    ];
    for model in models {
        let g = generate(model, 7)?;
        let back = parse_edge_list(&to_edge_list(&g))?;
        println!(
            "{model:?}: {} vertices, {} edges, degrees {}..{}, round trip {}",
            g.n(),
            g.edge_count(),
            g.min_degree(),
            g.max_degree(),
            back.edges() == g.edges()
        );
    }
    Ok(())
}
