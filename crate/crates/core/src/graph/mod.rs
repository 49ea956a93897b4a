//! Graph and ordering data model.
//!
//! Vertices are dense ids `0..n`. Edges are stored normalized (`u <= w`)
//! and sorted, which makes the canonical edge order and the canonical
//! disjoint-pair order used elsewhere in the crate a plain lexicographic
//! order.

mod generate;
mod io;
mod order;

pub use generate::{generate, Model};
pub use io::{load_edge_list, parse_edge_list, to_edge_list};
pub use order::{LinearOrder, Positions, RepKind, Representation, Reversed};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with `u <= w`. `u == w` is a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Edge {
    pub u: usize,
    pub w: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, w: b }
        } else {
            Edge { u: b, w: a }
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.w
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.w == x
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.contains(other.u) || self.contains(other.w)
    }

    /// The endpoint that is not `x`. Only meaningful when `x` is an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.w
        } else {
            self.u
        }
    }
}

impl From<[usize; 2]> for Edge {
    fn from([a, b]: [usize; 2]) -> Self {
        Edge::new(a, b)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.w]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.w)
    }
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Edge>", into = "Vec<Edge>")]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(mut edges: Vec<Edge>) -> Result<Matching> {
        edges.sort_unstable();
        let mut seen = std::collections::HashSet::new();
        for e in &edges {
            if !seen.insert(e.u) || (!e.is_loop() && !seen.insert(e.w)) {
                return Err(Error::validation(format!("edge {e} shares a vertex")));
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl TryFrom<Vec<Edge>> for Matching {
    type Error = Error;

    fn try_from(edges: Vec<Edge>) -> Result<Matching> {
        Matching::new(edges)
    }
}

impl From<Matching> for Vec<Edge> {
    fn from(m: Matching) -> Self {
        m.edges
    }
}

/// The two sides of a bipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A recorded bipartition `(A, B)` covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    in_a: Vec<bool>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> Side {
        if self.in_a[v] {
            Side::A
        } else {
            Side::B
        }
    }

    pub fn part(&self, side: Side) -> Vec<usize> {
        (0..self.in_a.len())
            .filter(|&v| self.side(v) == side)
            .collect()
    }

    pub fn a(&self) -> Vec<usize> {
        self.part(Side::A)
    }

    pub fn b(&self) -> Vec<usize> {
        self.part(Side::B)
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            in_a: self.in_a.iter().map(|x| !x).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    loops_allowed: bool,
    bipartition: Option<Bipartition>,
}

impl Graph {
    /// Builds a simple loop-free graph. Duplicate edges are collapsed.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(n, edges, false)
    }

    /// Builds a graph in which loops `{v,v}` are permitted (the complete
    /// graph with loops on the part indices is the only intended user).
    pub fn with_loops<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(n, edges, true)
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            loops_allowed: false,
            bipartition: None,
        }
    }

    pub fn complete_with_loops(n: usize) -> Graph {
        let edges = (0..n).flat_map(|a| (a..n).map(move |b| (a, b)));
        Self::build(n, edges, true).expect("complete graph is valid")
    }

    fn build<I>(n: usize, edges: I, loops_allowed: bool) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::validation(format!(
                    "edge {{{a},{b}}} out of range for {n} vertices"
                )));
            }
            if a == b && !loops_allowed {
                return Err(Error::validation(format!("self-loop at vertex {a}")));
            }
            list.push(Edge::new(a, b));
        }
        Ok(Self::from_sorted_edges(n, list, loops_allowed))
    }

    fn from_sorted_edges(n: usize, mut edges: Vec<Edge>, loops_allowed: bool) -> Graph {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.w);
            if !e.is_loop() {
                adj[e.w].push(e.u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            loops_allowed,
            bipartition: None,
        }
    }

    /// Records a bipartition with the given `A` side; every other vertex is
    /// on side `B`. Fails if some edge has both ends on one side.
    pub fn with_bipartition(mut self, a_side: &[usize]) -> Result<Graph> {
        let mut in_a = vec![false; self.n];
        for &v in a_side {
            if v >= self.n {
                return Err(Error::validation(format!("vertex {v} out of range")));
            }
            in_a[v] = true;
        }
        if let Some(e) = self.edges.iter().find(|e| in_a[e.u] == in_a[e.w]) {
            return Err(Error::validation(format!(
                "edge {e} does not cross the bipartition"
            )));
        }
        self.bipartition = Some(Bipartition { in_a });
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.edges.len() as f64 / self.n as f64
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn loops_allowed(&self) -> bool {
        self.loops_allowed
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    /// Same vertex set, only the edges accepted by `keep`. The bipartition
    /// (if any) is inherited.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(&Edge) -> bool) -> Graph {
        let edges = self.edges.iter().copied().filter(|e| keep(e)).collect();
        let mut g = Self::from_sorted_edges(self.n, edges, self.loops_allowed);
        g.bipartition = self.bipartition.clone();
        g
    }

    /// The subgraph induced by `vertices`, relabeled densely in ascending
    /// order of the original ids. The bipartition is inherited.
    pub fn induced(&self, vertices: &[usize]) -> Result<Subgraph> {
        let mut verts = vertices.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if let Some(&v) = verts.iter().find(|&&v| v >= self.n) {
            return Err(Error::validation(format!("vertex {v} out of range")));
        }
        let local = self.local_index(&verts);
        let edges = verts
            .iter()
            .flat_map(|&v| self.adj[v].iter().map(move |&w| (v, w)))
            .filter(|&(v, w)| v <= w && local[w] != usize::MAX)
            .map(|(v, w)| Edge::new(local[v], local[w]))
            .collect();
        let mut graph = Self::from_sorted_edges(verts.len(), edges, self.loops_allowed);
        if let Some(bp) = &self.bipartition {
            graph.bipartition = Some(Bipartition {
                in_a: verts.iter().map(|&v| bp.in_a[v]).collect(),
            });
        }
        Ok(Subgraph {
            graph,
            vertices: verts,
        })
    }

    fn local_index(&self, verts: &[usize]) -> Vec<usize> {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        local
    }
}

/// A graph together with the original id of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertices[local] = original`, strictly increasing.
    pub vertices: Vec<usize>,
}

impl Subgraph {
    pub fn original(&self, local: usize) -> usize {
        self.vertices[local]
    }
}

/// `G[A,B]`: vertex set `A ∪ B`, edges of `g` with one end in each set.
/// Vertices are relabeled in ascending original id; the bipartition is
/// recorded with `A` as side A.
pub fn subgraph_bipartite(g: &Graph, a: &[usize], b: &[usize]) -> Result<Subgraph> {
    let mut in_a = vec![false; g.n()];
    let mut in_b = vec![false; g.n()];
    for &v in a {
        if v >= g.n() {
            return Err(Error::validation(format!("vertex {v} out of range")));
        }
        in_a[v] = true;
    }
    for &v in b {
        if v >= g.n() {
            return Err(Error::validation(format!("vertex {v} out of range")));
        }
        if in_a[v] {
            return Err(Error::validation(format!(
                "vertex {v} is in both sides of the bipartition"
            )));
        }
        in_b[v] = true;
    }
    let verts: Vec<usize> = (0..g.n()).filter(|&v| in_a[v] || in_b[v]).collect();
    let local = g.local_index(&verts);
    let edges = g
        .edges()
        .iter()
        .filter(|e| (in_a[e.u] && in_b[e.w]) || (in_b[e.u] && in_a[e.w]))
        .map(|e| Edge::new(local[e.u], local[e.w]))
        .collect();
    let mut graph = Graph::from_sorted_edges(verts.len(), edges, false);
    graph.bipartition = Some(Bipartition {
        in_a: verts.iter().map(|&v| in_a[v]).collect(),
    });
    Ok(Subgraph {
        graph,
        vertices: verts,
    })
}

/// Connected components, each sorted, listed by their minimum vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[derive(Serialize, Deserialize)]
struct BipartitionData {
    a: Vec<usize>,
    b: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphData {
    n: usize,
    edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bipartition: Option<BipartitionData>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphData {
            n: self.n,
            edges: self.edges.clone(),
            bipartition: self.bipartition.as_ref().map(|bp| BipartitionData {
                a: bp.a(),
                b: bp.b(),
            }),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let data = GraphData::deserialize(d)?;
        let g = Graph::new(data.n, data.edges.iter().map(|e| (e.u, e.w)))
            .map_err(D::Error::custom)?;
        match data.bipartition {
            None => Ok(g),
            Some(bp) => {
                if bp.a.len() + bp.b.len() != data.n {
                    return Err(D::Error::custom("bipartition does not cover every vertex"));
                }
                let sub = subgraph_bipartite(&g, &bp.a, &bp.b).map_err(D::Error::custom)?;
                if sub.graph.edge_count() != g.edge_count() {
                    return Err(D::Error::custom("some edge does not cross the bipartition"));
                }
                g.with_bipartition(&bp.a).map_err(D::Error::custom)
            }
        }
    }
}
