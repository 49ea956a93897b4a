//! Random orderings that separate the complete graph with loops.

use sepdim::construct::{loopy_orderings, loopy_size};
use sepdim::separation::loopy_properties_check;

fn main() -> sepdim::Result<()> {
    for n in [3, 8, 21, 55, 144] {
        let lo = loopy_orderings(n, 1, 1000)?;
        let ok = loopy_properties_check(n, &lo.orderings).is_ok();
        println!(
            "n {n:>3}: {} orderings (target {}), {} retries, verified {ok}",
            lo.orderings.len(),
            loopy_size(n),
            lo.retries
        );
    }
    Ok(())
}
