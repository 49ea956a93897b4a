use crate::error::{Error, Result};
use crate::graph::LinearOrder;
use crate::seed;
use crate::separation::loopy_properties_check;

/// `max(1, floor(10 ln n))`, the number of orderings drawn per attempt.
/// Natural log: the union bound needs `(2/3)^p < n^-4`.
pub fn loopy_size(n: usize) -> usize {
    if n < 2 {
        return 1;
    }
    ((10.0 * (n as f64).ln()).floor() as usize).max(1)
}

#[derive(Clone, Debug)]
pub struct LoopyOrderings {
    pub orderings: Vec<LinearOrder>,
    /// Failed attempts before the accepted one.
    pub retries: usize,
}

/// Random orderings of `0..n` separating every two disjoint edges of the
/// complete graph with loops and placing every vertex strictly between every
/// two others. Each attempt draws `loopy_size(n)` uniform orderings and
/// keeps them only if the check passes.
pub fn loopy_orderings(n: usize, seed: u64, max_attempts: usize) -> Result<LoopyOrderings> {
    if n < 2 {
        return Err(Error::validation("loopy orderings need n >= 2"));
    }
    let p = loopy_size(n);
    let mut rng = seed::rng_for(seed, "loopy");
    let mut last = None;
    for attempt in 0..max_attempts {
        let orderings: Vec<LinearOrder> = (0..p).map(|_| LinearOrder::random(n, &mut rng)).collect();
        match loopy_properties_check(n, &orderings) {
            Ok(()) => {
                return Ok(LoopyOrderings {
                    orderings,
                    retries: attempt,
                })
            }
            Err(w) => last = Some(w),
        }
    }
    Err(Error::RetryLimit {
        stage: "loopy_orderings",
        attempts: max_attempts,
        detail: format!("{p} orderings of {n} vertices kept failing"),
        witness: last,
    })
}
