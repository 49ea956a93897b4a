use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::certificate::HomogeneityCertificate;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LinearOrder, Representation, Side};
use crate::seed;
use crate::separation::{disjoint_pairs, separated_in};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdversarialConfig {
    /// Vertices per side.
    pub side_size: usize,
    /// Degree of every vertex.
    pub degree: usize,
    /// Local-search moves per instance.
    pub iterations: usize,
}

impl Default for AdversarialConfig {
    fn default() -> Self {
        AdversarialConfig {
            side_size: 10,
            degree: 4,
            iterations: 600,
        }
    }
}

/// A consistent homogeneous 3-ordering representation of a regular
/// bipartite graph, pushed by local search towards separating as many
/// disjoint pairs as possible.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdversarialInstance {
    pub graph: Graph,
    pub representation: Representation,
    pub certificate: HomogeneityCertificate,
    /// Disjoint pairs still separated in no ordering.
    pub unseparated: usize,
}

fn regular_bipartite(m: usize, d: usize, rng: &mut seed::Rng) -> Result<Vec<Edge>> {
    for _ in 0..10_000 {
        let mut edges = Vec::with_capacity(m * d);
        for _ in 0..d {
            let mut p: Vec<usize> = (0..m).collect();
            p.shuffle(rng);
            edges.extend((0..m).map(|a| Edge::new(a, m + p[a])));
        }
        let total = edges.len();
        edges.sort_unstable();
        edges.dedup();
        if edges.len() == total {
            return Ok(edges);
        }
    }
    Err(Error::RetryLimit {
        stage: "regular_bipartite",
        attempts: 10_000,
        detail: format!("no simple {d}-regular bipartite graph on {m}+{m} found"),
        witness: None,
    })
}

/// Placement of the A side inside each ordering: vertex `a` sits in gap
/// `slot[i][a]` of the B sequence (never after its first neighbour), with
/// `key[i][a]` breaking ties inside a gap.
struct Layout<'a> {
    m: usize,
    b_seq: &'a [Vec<usize>],
    limit: Vec<Vec<usize>>,
    slot: Vec<Vec<usize>>,
    key: Vec<Vec<u32>>,
}

impl Layout<'_> {
    fn materialize(&self, i: usize) -> Vec<usize> {
        let mut items: Vec<(usize, u8, u32, usize)> = Vec::with_capacity(2 * self.m);
        for (j, &b) in self.b_seq[i].iter().enumerate() {
            items.push((j, 1, 0, b));
        }
        for a in 0..self.m {
            items.push((self.slot[i][a], 0, self.key[i][a], a));
        }
        items.sort_unstable();
        items.into_iter().map(|x| x.3).collect()
    }

    fn orders(&self) -> Vec<LinearOrder> {
        (0..3)
            .map(|i| LinearOrder::new(self.materialize(i)).expect("permutation"))
            .collect()
    }
}

fn count_unseparated(pairs: &[(Edge, Edge)], orders: &[LinearOrder]) -> usize {
    pairs
        .iter()
        .filter(|(e, f)| orders.iter().all(|o| !separated_in(e, f, o)))
        .count()
}

/// Generates one instance from `seed`. Signs and the homogeneous side are
/// drawn at random so that every normalization path gets exercised.
pub fn adversarial_instance(seed: u64, config: &AdversarialConfig) -> Result<AdversarialInstance> {
    let (m, d) = (config.side_size, config.degree);
    if d == 0 || d > m {
        return Err(Error::validation(format!("degree {d} impossible with {m} vertices per side")));
    }
    let mut rng = seed::rng_for(seed, "adversarial");
    let edges = regular_bipartite(m, d, &mut rng)?;
    let g = Graph::new(2 * m, edges.iter().map(|e| (e.u, e.w)))?.with_bipartition(&(0..m).collect::<Vec<_>>())?;

    let mut pi: Vec<usize> = (m..2 * m).collect();
    pi.shuffle(&mut rng);
    let signs: Vec<i8> = (0..3).map(|_| if rng.random::<bool>() { 1 } else { -1 }).collect();
    let b_seq: Vec<Vec<usize>> = signs
        .iter()
        .map(|&s| {
            let mut seq = pi.clone();
            if s == -1 {
                seq.reverse();
            }
            seq
        })
        .collect();
    let limit: Vec<Vec<usize>> = b_seq
        .iter()
        .map(|seq| {
            let mut at = vec![0; 2 * m];
            for (j, &b) in seq.iter().enumerate() {
                at[b] = j;
            }
            (0..m)
                .map(|a| g.neighbors(a).iter().map(|&b| at[b]).min().unwrap())
                .collect()
        })
        .collect();
    let slot = limit
        .iter()
        .map(|lim| lim.iter().map(|&l| rng.random_range(0..=l)).collect())
        .collect();
    let key = (0..3).map(|_| (0..m).map(|_| rng.random()).collect()).collect();
    let mut layout = Layout {
        m,
        b_seq: &b_seq,
        limit,
        slot,
        key,
    };

    let pairs = disjoint_pairs(&g);
    let mut best = count_unseparated(&pairs, &layout.orders());
    for _ in 0..config.iterations {
        if best == 0 {
            break;
        }
        let i = rng.random_range(0..3);
        let a = rng.random_range(0..m);
        let (old_slot, old_key) = (layout.slot[i][a], layout.key[i][a]);
        layout.slot[i][a] = rng.random_range(0..=layout.limit[i][a]);
        layout.key[i][a] = rng.random();
        let score = count_unseparated(&pairs, &layout.orders());
        if score <= best {
            best = score;
        } else {
            layout.slot[i][a] = old_slot;
            layout.key[i][a] = old_key;
        }
    }

    let rank: Vec<usize> = {
        let mut r = vec![0; 2 * m];
        for (j, &b) in pi.iter().enumerate() {
            r[b] = j;
        }
        r
    };
    let per_vertex_orders = (0..m)
        .map(|a| {
            let mut nb = g.neighbors(a).to_vec();
            nb.sort_by_key(|&b| rank[b]);
            (a, nb)
        })
        .collect();
    let mut representation = Representation::new(2 * m, layout.orders())?;
    let mut certificate = HomogeneityCertificate {
        side: Side::A,
        signs,
        per_vertex_orders,
    };
    let mut graph = g;

    if rng.random::<bool>() {
        // Same instance with the roles of the sides exchanged.
        graph = graph.with_bipartition(&(m..2 * m).collect::<Vec<_>>())?;
        representation = representation.reversed();
        certificate.side = Side::B;
        certificate.signs.iter_mut().for_each(|s| *s = -*s);
    }
    certificate.verify(&graph, &representation)?;
    Ok(AdversarialInstance {
        graph,
        representation,
        certificate,
        unseparated: best,
    })
}
