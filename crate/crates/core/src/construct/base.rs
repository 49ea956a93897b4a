use crate::error::{Error, Result};
use crate::graph::{Graph, LinearOrder, RepKind, Representation};
use crate::seed;
use crate::separation::{disjoint_pairs, is_separating, separated_in};

#[derive(Clone, Debug)]
pub struct BaseOutcome {
    pub representation: Representation,
    /// Random orderings drawn and discarded because they separated nothing new.
    pub rejected: usize,
}

/// Greedy randomized cover of the disjoint edge pairs: draw uniform
/// orderings, keeping each one that separates a pair not yet separated.
/// `max_attempts` bounds the total number of draws.
pub fn base_construct(g: &Graph, seed: u64, max_attempts: usize) -> Result<BaseOutcome> {
    let mut rng = seed::rng_for(seed, "base");
    let mut open = disjoint_pairs(g);
    let mut kept: Vec<LinearOrder> = Vec::new();
    let mut draws = 0;

    if open.is_empty() {
        kept.push(LinearOrder::random(g.n(), &mut rng));
        draws = 1;
    }
    while !open.is_empty() {
        if draws == max_attempts {
            let (e, f) = open[0];
            return Err(Error::RetryLimit {
                stage: "base_construct",
                attempts: draws,
                detail: format!("{} pairs still unseparated", open.len()),
                witness: Some(crate::separation::Witness::UnseparatedPair { pair: [e, f] }),
            });
        }
        draws += 1;
        let o = LinearOrder::random(g.n(), &mut rng);
        let before = open.len();
        open.retain(|(e, f)| !separated_in(e, f, &o));
        if open.len() < before {
            kept.push(o);
        }
    }

    let tags = (0..kept.len()).map(|i| format!("base/{i}")).collect();
    let rejected = draws - kept.len();
    let rep = Representation::with_provenance(g.n(), kept, tags)?;
    is_separating(g, &rep).map_err(Error::Verification)?;
    Ok(BaseOutcome {
        representation: rep.mark(RepKind::Separating),
        rejected,
    })
}
