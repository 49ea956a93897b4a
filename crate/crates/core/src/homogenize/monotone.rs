use serde::{Deserialize, Serialize};

use crate::graph::{LinearOrder, Positions};

/// Whether a subsequence is increasing or decreasing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Backward,
    Forward,
}

impl Direction {
    pub fn sign(self) -> i8 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }
}

/// Indices of a longest strictly increasing subsequence, by patience sorting.
pub fn longest_increasing(values: &[usize]) -> Vec<usize> {
    // tails[k]: index of the smallest tail of an increasing run of length k + 1.
    let mut tails: Vec<usize> = Vec::new();
    let mut prev = vec![usize::MAX; values.len()];
    for (i, &x) in values.iter().enumerate() {
        let k = tails.partition_point(|&t| values[t] < x);
        if k > 0 {
            prev[i] = tails[k - 1];
        }
        if k == tails.len() {
            tails.push(i);
        } else {
            tails[k] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(i) = cur {
        out.push(i);
        cur = (prev[i] != usize::MAX).then_some(prev[i]);
    }
    out.reverse();
    out
}

/// Longer of the longest increasing and longest decreasing subsequences,
/// preferring increasing on ties. Values must be distinct.
pub fn longest_monotone(values: &[usize]) -> (Direction, Vec<usize>) {
    let inc = longest_increasing(values);
    let flipped: Vec<usize> = values.iter().map(|&x| usize::MAX - x).collect();
    let dec = longest_increasing(&flipped);
    if dec.len() > inc.len() {
        (Direction::Backward, dec)
    } else {
        (Direction::Forward, inc)
    }
}

/// `items` are listed in the order of a reference ordering. Returns a
/// subset, still in that order, that is monotone in every one of `others`,
/// together with its direction in each. Each pass keeps at least the ceiling
/// of the square root of what it receives.
pub fn monotone_subset(items: &[usize], others: &[&LinearOrder]) -> (Vec<usize>, Vec<Direction>) {
    let mut current = items.to_vec();
    let mut directions = Vec::with_capacity(others.len());
    for o in others {
        let ranks: Vec<usize> = current
            .iter()
            .map(|&v| o.position(v).expect("item missing from ordering"))
            .collect();
        let (dir, idx) = longest_monotone(&ranks);
        current = idx.into_iter().map(|i| current[i]).collect();
        directions.push(dir);
    }
    (current, directions)
}

/// Smallest `m` with `m^(2^(d-1)) >= degree`, the guaranteed size of the
/// subset after `d - 1` passes.
pub fn monotone_floor(degree: usize, d: usize) -> usize {
    let exponent = 1u32 << (d.max(1) - 1);
    let fits = |m: usize| {
        (m as u128)
            .checked_pow(exponent)
            .is_none_or(|p| p >= degree as u128)
    };
    let mut m = 0;
    while !fits(m) {
        m += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn four_element_example() {
        let (_, idx) = longest_monotone(&[3, 1, 4, 2]);
        assert!(idx.len() >= 2);
    }

    #[test]
    fn lis_known_cases() {
        assert_eq!(longest_increasing(&[]), Vec::<usize>::new());
        assert_eq!(longest_increasing(&[5, 1, 2, 9, 3, 4]), vec![1, 2, 4, 5]);
        assert_eq!(longest_monotone(&[4, 3, 2, 1]).0, Direction::Backward);
        assert_eq!(longest_monotone(&[7]).0, Direction::Forward);
        assert_eq!(longest_monotone(&[1, 3, 2]).0, Direction::Forward);
    }

    #[test]
    fn floor_values() {
        assert_eq!(monotone_floor(0, 3), 0);
        assert_eq!(monotone_floor(1, 3), 1);
        assert_eq!(monotone_floor(16, 3), 2);
        assert_eq!(monotone_floor(17, 3), 3);
        assert_eq!(monotone_floor(10, 1), 10);
        assert_eq!(monotone_floor(10, 2), 4);
    }

    fn lis_len_quadratic(v: &[usize]) -> usize {
        let mut best = vec![1; v.len()];
        for i in 0..v.len() {
            for j in 0..i {
                if v[j] < v[i] {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    proptest! {
        #[test]
        fn lis_is_longest_and_increasing(v in Just((0..30usize).collect::<Vec<_>>()).prop_shuffle(), len in 0usize..30) {
            let v = &v[..len];
            let idx = longest_increasing(v);
            prop_assert_eq!(idx.len(), lis_len_quadratic(v));
            prop_assert!(idx.windows(2).all(|w| w[0] < w[1] && v[w[0]] < v[w[1]]));
        }

        #[test]
        fn passes_meet_floor(perms in proptest::collection::vec(Just((0..40usize).collect::<Vec<_>>()).prop_shuffle(), 1..4), len in 1usize..40) {
            let orders: Vec<LinearOrder> = perms.into_iter().map(|p| LinearOrder::new(p).unwrap()).collect();
            let items: Vec<usize> = (0..len).collect();
            let refs: Vec<&LinearOrder> = orders.iter().collect();
            let (m, dirs) = monotone_subset(&items, &refs);
            prop_assert!(m.len() >= monotone_floor(len, orders.len() + 1));
            prop_assert!(m.windows(2).all(|w| w[0] < w[1]));
            for (o, dir) in orders.iter().zip(dirs) {
                let r: Vec<usize> = m.iter().map(|&v| o.position(v).unwrap()).collect();
                let ok = match dir {
                    Direction::Forward => r.windows(2).all(|w| w[0] < w[1]),
                    Direction::Backward => r.windows(2).all(|w| w[0] > w[1]),
                };
                prop_assert!(ok);
            }
        }
    }
}
