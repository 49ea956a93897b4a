#![allow(dead_code)]

use rand::seq::SliceRandom;
use sepdim::seed;

/// `pos[v]` for each ordering.
pub fn positions(orders: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    orders
        .iter()
        .map(|o| {
            let mut p = vec![usize::MAX; n];
            for (i, &v) in o.iter().enumerate() {
                p[v] = i;
            }
            p
        })
        .collect()
}

fn apart(p: &[usize], e: (usize, usize), f: (usize, usize)) -> bool {
    let (e_lo, e_hi) = (p[e.0].min(p[e.1]), p[e.0].max(p[e.1]));
    let (f_lo, f_hi) = (p[f.0].min(p[f.1]), p[f.0].max(p[f.1]));
    e_hi < f_lo || f_hi < e_lo
}

fn disjoint(e: (usize, usize), f: (usize, usize)) -> bool {
    e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1
}

/// Every two disjoint edges are apart in some ordering.
pub fn brute_separating(n: usize, edges: &[(usize, usize)], orders: &[Vec<usize>]) -> bool {
    let pos = positions(orders, n);
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if disjoint(e, f) && !pos.iter().any(|p| apart(p, e, f)) {
                return false;
            }
        }
    }
    true
}

/// Separating, and every vertex off an edge is somewhere before both ends
/// and somewhere after both ends.
pub fn brute_strong(n: usize, edges: &[(usize, usize)], orders: &[Vec<usize>]) -> bool {
    if !brute_separating(n, edges, orders) {
        return false;
    }
    let pos = positions(orders, n);
    edges.iter().all(|&(a, b)| {
        (0..n).filter(|&x| x != a && x != b).all(|x| {
            pos.iter().any(|p| p[x] < p[a] && p[x] < p[b]) && pos.iter().any(|p| p[x] > p[a] && p[x] > p[b])
        })
    })
}

/// Two edges separated in none of `orders`.
pub fn brute_unseparated(n: usize, e: (usize, usize), f: (usize, usize), orders: &[Vec<usize>]) -> bool {
    disjoint(e, f) && positions(orders, n).iter().all(|p| !apart(p, e, f))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let all: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| all.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    let perms = permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << all.len()) {
        let canon = perms
            .iter()
            .map(|p| {
                (0..all.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| 1u32 << index(p[all[i].0], p[all[i].1]))
                    .sum::<u32>()
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push((0..all.len()).filter(|&i| canon >> i & 1 == 1).map(|i| all[i]).collect());
        }
    }
    out
}

pub fn random_orders(n: usize, count: usize, s: u64) -> Vec<Vec<usize>> {
    let mut rng = seed::rng(s);
    (0..count)
        .map(|_| {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(&mut rng);
            v
        })
        .collect()
}

pub fn orders_of(r: &sepdim::graph::Representation) -> Vec<Vec<usize>> {
    r.orderings().iter().map(|o| o.as_slice().to_vec()).collect()
}
