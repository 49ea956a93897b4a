//! Proper edge colouring with at most Δ+1 colours (Misra–Gries).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Matching};

struct Palette {
    /// `at[v][c]` = the neighbour joined to `v` by the edge coloured `c`.
    at: Vec<Vec<Option<usize>>>,
    colour: HashMap<Edge, usize>,
}

impl Palette {
    fn new(n: usize, colours: usize) -> Self {
        Palette {
            at: vec![vec![None; colours]; n],
            colour: HashMap::new(),
        }
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn free_colour(&self, v: usize) -> usize {
        self.at[v]
            .iter()
            .position(Option::is_none)
            .expect("Δ+1 colours leave one free at every vertex")
    }

    fn colour_of(&self, a: usize, b: usize) -> Option<usize> {
        self.colour.get(&Edge::new(a, b)).copied()
    }

    fn set(&mut self, a: usize, b: usize, c: usize) {
        debug_assert!(self.is_free(a, c) && self.is_free(b, c));
        self.at[a][c] = Some(b);
        self.at[b][c] = Some(a);
        self.colour.insert(Edge::new(a, b), c);
    }

    fn unset(&mut self, a: usize, b: usize) -> usize {
        let c = self
            .colour
            .remove(&Edge::new(a, b))
            .expect("edge is coloured");
        self.at[a][c] = None;
        self.at[b][c] = None;
        c
    }

    /// `fan[0..]` with `u` at the centre: `colour(u, fan[i+1])` is free on
    /// `fan[i]`, and `(u, fan[0])` is the uncoloured edge.
    fn is_fan(&self, u: usize, fan: &[usize]) -> bool {
        fan.windows(2).all(|w| {
            self.colour_of(u, w[1])
                .is_some_and(|c| self.is_free(w[0], c))
        })
    }

    fn maximal_fan(&self, g: &Graph, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        let mut in_fan = vec![false; g.n()];
        in_fan[v] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = g.neighbors(u).iter().copied().find(|&x| {
                !in_fan[x]
                    && self
                        .colour_of(u, x)
                        .is_some_and(|c| self.is_free(last, c))
            });
            match next {
                Some(x) => {
                    in_fan[x] = true;
                    fan.push(x);
                }
                None => return fan,
            }
        }
    }

    /// Swaps colours `c` and `d` along the maximal path from `u` whose edges
    /// alternate `d, c, d, ...`. `c` is free at `u`, so this is a path.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut cur, mut col) = (u, d);
        while let Some(next) = self.at[cur][col] {
            path.push((cur, next, col));
            cur = next;
            col = if col == c { d } else { c };
        }
        for &(a, b, _) in &path {
            self.unset(a, b);
        }
        for &(a, b, col) in &path {
            self.set(a, b, if col == c { d } else { c });
        }
    }

    fn colour_edge(&mut self, g: &Graph, u: usize, v: usize) {
        let fan = self.maximal_fan(g, u, v);
        let c = self.free_colour(u);
        let d = self.free_colour(*fan.last().unwrap());
        self.invert_path(u, c, d);
        let w = (0..fan.len())
            .find(|&i| self.is_free(fan[i], d) && self.is_fan(u, &fan[..=i]))
            .expect("some fan prefix ends at a vertex with d free");
        // rotate: (u, fan[i]) takes the colour of (u, fan[i+1])
        let shifted: Vec<usize> = (0..w).map(|i| self.unset(u, fan[i + 1])).collect();
        for (i, col) in shifted.into_iter().enumerate() {
            self.set(u, fan[i], col);
        }
        self.set(u, fan[w], d);
    }
}

/// Partitions `E(g)` into at most `Δ+1` matchings. Classes are listed by
/// colour index; empty classes are dropped.
pub fn vizing_edge_coloring(g: &Graph) -> Result<Vec<Matching>> {
    if g.edges().iter().any(Edge::is_loop) {
        return Err(Error::validation("edge colouring needs a loop-free graph"));
    }
    let colours = g.max_degree() + 1;
    let mut palette = Palette::new(g.n(), colours);
    for e in g.edges() {
        palette.colour_edge(g, e.u, e.w);
    }

    let mut classes = vec![Vec::new(); colours];
    for e in g.edges() {
        let c = palette.colour_of(e.u, e.w).expect("every edge coloured");
        classes[c].push(*e);
    }
    let matchings = classes
        .into_iter()
        .filter(|c| !c.is_empty())
        .map(Matching::new)
        .collect::<Result<Vec<_>>>()?;
    let covered: usize = matchings.iter().map(Matching::len).sum();
    if covered != g.edge_count() {
        return Err(Error::validation("edge colouring lost an edge"));
    }
    Ok(matchings)
}
