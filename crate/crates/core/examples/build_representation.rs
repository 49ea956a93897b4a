//! End-to-end construction, with and without recursion.

use sepdim::construct::{build_representation, BuildConfig, KRule};
use sepdim::graph::{generate, Model};

fn main() -> sepdim::Result<()> {
    let g = generate(Model::RandomRegular { n: 200, degree: 8 }, 1)?;
    let configs = [
        ("base case", BuildConfig::default()),
        (
            "recursive, k = 4",
            BuildConfig {
                recursion_threshold: 0,
                k_rule: KRule::Fixed(4),
                ..BuildConfig::default()
            },
        ),
    ];
    for (name, config) in configs {
        let (rep, report) = build_representation(&g, &config)?;
        println!(
            "{name}: {} orderings, depth {}, retries {:?}, below 20 max degree: {}",
            rep.len(),
            report.recursion_depth,
            report.retries,
            report.below_20delta()
        );
    }
    Ok(())
}
