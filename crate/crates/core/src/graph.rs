//! Graphs, vertex orderings and the per-ordering neighbour tables shared by
//! the certifiers.
//!
//! Vertices and positions are 1-based throughout: vertex `v` lives in
//! `1..=n`, and `σ(1)` is the first vertex of an ordering. This matches the
//! visiting dates used in labels, so a vertex's position in a search ordering
//! is exactly its visiting date.

use std::fmt;
use std::ops::RangeInclusive;

use thiserror::Error;

/// A vertex identifier in `1..=n`.
pub type Vertex = usize;

/// A 1-based position inside a [`VertexOrdering`].
pub type Position = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
}

/// A simple graph on the vertex set `1..=n`, stored as sorted adjacency lists.
///
/// Undirected graphs keep symmetric adjacency. Directed graphs store
/// out-neighbours only; `y` is a neighbour of `x` iff the arc `x -> y` exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    // slot 0 is unused so that `adj[v]` works for 1-based `v`
    adj: Vec<Vec<Vertex>>,
    directed: bool,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n + 1],
            directed: false,
            edges: 0,
        }
    }

    /// Builds an undirected graph. Duplicate edges are collapsed.
    pub fn undirected<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::build(n, edges, false)
    }

    /// Builds a directed graph from arcs `u -> v`. Duplicate arcs are collapsed.
    pub fn directed<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::build(n, arcs, true)
    }

    fn build<I>(n: usize, edges: I, directed: bool) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n + 1];
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            if !directed {
                adj[v].push(u);
            }
        }
        let mut total = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            total += list.len();
        }
        let edges = if directed { total } else { total / 2 };
        Ok(Graph {
            n,
            adj,
            directed,
            edges,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges (arcs, when directed).
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertices(&self) -> RangeInclusive<Vertex> {
        1..=self.n
    }

    /// Neighbours of `v` in increasing vertex order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v` for undirected graphs.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let directed = self.directed;
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| directed || u < v)
                .map(move |v| (u, v))
        })
    }

    /// The graph with every arc reversed. Undirected graphs are returned as is.
    pub fn reversed(&self) -> Graph {
        if !self.directed {
            return self.clone();
        }
        let mut adj = vec![Vec::new(); self.n + 1];
        for (u, v) in self.edges() {
            adj[v].push(u);
        }
        // edges() yields sources in increasing order, so lists stay sorted
        Graph {
            n: self.n,
            adj,
            directed: true,
            edges: self.edges,
        }
    }

    /// The subgraph induced by `keep`, relabelled `1..=keep.len()` in the
    /// given order.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![0; self.n + 1];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i + 1;
        }
        let edges = keep.iter().flat_map(|&u| {
            let index = &index;
            self.adj[u]
                .iter()
                .filter(move |&&v| index[v] != 0)
                .map(move |&v| (index[u], index[v]))
        });
        Self::build(keep.len(), edges.collect::<Vec<_>>(), self.directed)
            .expect("induced subgraph of a valid graph is valid")
    }
}

/// Renders the edge-list text format understood by [`crate::io::parse_graph`].
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.n, self.edges)?;
        if self.directed {
            write!(f, " directed")?;
        }
        writeln!(f)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a permutation of 1..={n}: missing {missing:?}, duplicate {duplicate:?}, out of range {out_of_range:?}")]
pub struct OrderingError {
    pub n: usize,
    pub missing: Vec<Vertex>,
    pub duplicate: Vec<Vertex>,
    pub out_of_range: Vec<usize>,
}

/// A total ordering σ of `1..=n` with constant-time position lookup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    order: Vec<Vertex>,
    // slot 0 unused
    position: Vec<Position>,
}

impl VertexOrdering {
    pub fn new(order: Vec<Vertex>) -> Result<Self, OrderingError> {
        let n = order.len();
        let mut position = vec![0; n + 1];
        let mut duplicate = Vec::new();
        let mut out_of_range = Vec::new();
        for (i, &v) in order.iter().enumerate() {
            if v == 0 || v > n {
                out_of_range.push(v);
            } else if position[v] != 0 {
                duplicate.push(v);
            } else {
                position[v] = i + 1;
            }
        }
        let missing: Vec<_> = (1..=n).filter(|&v| position[v] == 0).collect();
        if missing.is_empty() && duplicate.is_empty() && out_of_range.is_empty() {
            Ok(VertexOrdering { order, position })
        } else {
            duplicate.sort_unstable();
            duplicate.dedup();
            Err(OrderingError {
                n,
                missing,
                duplicate,
                out_of_range,
            })
        }
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (1..=n).collect(),
            position: (0..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// σ(i), for a 1-based position `i`.
    pub fn vertex_at(&self, i: Position) -> Vertex {
        self.order[i - 1]
    }

    /// σ⁻¹(v).
    pub fn position_of(&self, v: Vertex) -> Position {
        self.position[v]
    }

    /// `true` iff `u` comes strictly before `v`.
    pub fn precedes(&self, u: Vertex, v: Vertex) -> bool {
        self.position[u] < self.position[v]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.order
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.order.iter().copied()
    }

    /// σʳ, with σʳ(i) = σ(n + 1 − i).
    pub fn reversed(&self) -> Self {
        let order: Vec<_> = self.order.iter().rev().copied().collect();
        let n = order.len();
        let mut position = vec![0; n + 1];
        for (p, &q) in position.iter_mut().zip(&self.position).skip(1) {
            *p = n + 1 - q;
        }
        VertexOrdering { order, position }
    }

    /// Exchanges the vertices at positions `i` and `j`.
    pub fn swap_positions(&mut self, i: Position, j: Position) {
        self.order.swap(i - 1, j - 1);
        self.position[self.order[i - 1]] = i;
        self.position[self.order[j - 1]] = j;
    }
}

impl fmt::Display for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.order {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Leftmost left neighbour, rightmost left neighbour and rightmost right
/// neighbour of every vertex, as positions in σ (`None` when absent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixNeighborTables {
    ln: Vec<Option<Position>>,
    lmax: Vec<Option<Position>>,
    rn: Vec<Option<Position>>,
}

impl PrefixNeighborTables {
    /// One pass over the adjacency lists: O(n + m).
    pub fn build(graph: &Graph, sigma: &VertexOrdering) -> Self {
        let n = graph.n();
        let mut ln = vec![None; n + 1];
        let mut lmax = vec![None; n + 1];
        let mut rn = vec![None; n + 1];
        for x in graph.vertices() {
            let px = sigma.position_of(x);
            let mut lo: Option<Position> = None;
            let mut hi_left: Option<Position> = None;
            let mut hi_right: Option<Position> = None;
            for &y in graph.neighbors(x) {
                let py = sigma.position_of(y);
                if py < px {
                    lo = Some(lo.map_or(py, |l| l.min(py)));
                    hi_left = Some(hi_left.map_or(py, |h| h.max(py)));
                } else {
                    hi_right = Some(hi_right.map_or(py, |h| h.max(py)));
                }
            }
            ln[x] = lo;
            lmax[x] = hi_left;
            rn[x] = hi_right;
        }
        PrefixNeighborTables { ln, lmax, rn }
    }

    /// Position of the leftmost neighbour of `x` placed before it.
    pub fn ln(&self, x: Vertex) -> Option<Position> {
        self.ln[x]
    }

    /// Position of the rightmost neighbour of `x` placed before it.
    pub fn lmax(&self, x: Vertex) -> Option<Position> {
        self.lmax[x]
    }

    /// Position of the rightmost neighbour of `x` placed after it.
    pub fn rn(&self, x: Vertex) -> Option<Position> {
        self.rn[x]
    }

    /// `Left(x) = [ln(x), x]`, or `[x, x]` when `x` has no left neighbour.
    pub fn left(&self, x: Vertex, sigma: &VertexOrdering) -> (Position, Position) {
        let p = sigma.position_of(x);
        (self.ln[x].unwrap_or(p), p)
    }

    /// `Right(x) = [x, rn(x)]`, or `[x, x]`.
    pub fn right(&self, x: Vertex, sigma: &VertexOrdering) -> (Position, Position) {
        let p = sigma.position_of(x);
        (p, self.rn[x].unwrap_or(p))
    }

    /// `RLeft(x) = [lmax(x), x]`, or `[x, x]`.
    pub fn rleft(&self, x: Vertex, sigma: &VertexOrdering) -> (Position, Position) {
        let p = sigma.position_of(x);
        (self.lmax[x].unwrap_or(p), p)
    }
}
