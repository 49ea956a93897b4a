use rand::Rng;

use crate::error::Result;
use crate::graph::{Graph, Side};
use crate::seed;

/// Bipartite spanning subgraph from a locally maximal cut.
///
/// Vertices start on random sides; a fixed scan then moves any vertex with
/// more neighbours on its own side than across, until no such vertex
/// remains. Each vertex keeps at least half its neighbours. A graph that
/// already records a bipartition is returned unchanged.
pub fn bipartize(g: &Graph, seed: u64) -> Result<Graph> {
    if g.bipartition().is_some() {
        return Ok(g.clone());
    }
    let n = g.n();
    let mut rng = seed::rng_for(seed, "bipartize");
    let mut in_a: Vec<bool> = (0..n).map(|_| rng.random::<bool>()).collect();
    let mut moved = true;
    while moved {
        moved = false;
        for v in 0..n {
            let (same, cross) = g
                .neighbors(v)
                .iter()
                .filter(|&&w| w != v)
                .fold((0, 0), |(s, c), &w| {
                    if in_a[w] == in_a[v] {
                        (s + 1, c)
                    } else {
                        (s, c + 1)
                    }
                });
            if same > cross {
                in_a[v] = !in_a[v];
                moved = true;
            }
        }
    }
    let a: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
    g.spanning_subgraph(|e| in_a[e.u] != in_a[e.w])
        .with_bipartition(&a)
}

/// Number of edges of `g` whose ends lie on different sides.
pub fn cut_size(g: &Graph) -> usize {
    match g.bipartition() {
        Some(bp) => g
            .edges()
            .iter()
            .filter(|e| bp.side(e.u) != bp.side(e.w))
            .count(),
        None => 0,
    }
}

pub(crate) fn side_of(g: &Graph, v: usize) -> Side {
    g.bipartition().expect("bipartition recorded").side(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Model};
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        let c4 = generate(Model::Cycle { n: 4 }, 0).unwrap();
        let b = bipartize(&c4, 3).unwrap();
        assert!((0..4).all(|v| b.degree(v) >= 1));

        let k4 = generate(Model::Complete { n: 4 }, 0).unwrap();
        for seed in 0..20 {
            let b = bipartize(&k4, seed).unwrap();
            assert_eq!(b.bipartition().unwrap().a().len(), 2);
            assert!((0..4).all(|v| b.degree(v) == 2));
        }

        let e = Graph::new(2, [(0, 1)]).unwrap();
        let b = bipartize(&e, 0).unwrap();
        assert_eq!(b.edge_count(), 1);
        assert_ne!(side_of(&b, 0), side_of(&b, 1));
    }

    #[test]
    fn keeps_recorded_bipartition() {
        let g = generate(Model::RandomBipartite { left: 5, right: 6, p: 0.5 }, 2).unwrap();
        assert_eq!(bipartize(&g, 9).unwrap(), g);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn half_of_each_degree_survives(n in 2usize..40, p in 0.05f64..0.9, seed in 0u64..10_000) {
            let g = generate(Model::Gnp { n, p }, seed).unwrap();
            let b = bipartize(&g, seed).unwrap();
            prop_assert_eq!(cut_size(&b), b.edge_count());
            prop_assert!(2 * b.edge_count() >= g.edge_count());
            for v in 0..n {
                prop_assert!(b.degree(v) >= g.degree(v).div_ceil(2));
            }
        }
    }
}
