//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitset per vertex.

use std::fmt;

use crate::error::GraphError;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A subset of `0..64`, one bit per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        vs.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[must_use]
    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An ordered pair of disjoint vertex sets `(U, W)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub u: VertexSet,
    pub w: VertexSet,
}

impl Bipartition {
    pub fn new(u: VertexSet, w: VertexSet) -> Result<Self, GraphError> {
        if !u.intersection(w).is_empty() {
            return Err(GraphError::InvalidBipartition(
                "parts are not disjoint".into(),
            ));
        }
        Ok(Bipartition { u, w })
    }

    pub fn vertices(&self) -> VertexSet {
        self.u.union(self.w)
    }
}

/// Named graph families accepted by [`Graph::construct`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `K_n`
    Complete(usize),
    /// `K_{a,b}`, vertices `0..a` on one side.
    CompleteBipartite(usize, usize),
    /// `K_{1,k}` with center 0.
    Star(usize),
    /// `P_n`, path `0-1-...-(n-1)`.
    Path(usize),
    /// `C_n`, n >= 3.
    Cycle(usize),
    /// Complement of `k K_2` on `2k` vertices; the pairs are `(2i, 2i+1)`.
    CocktailParty(usize),
    /// `n` isolated vertices.
    Empty(usize),
}

/// Undirected simple graph on `1..=64` vertices.
///
/// `adj[v]` is the open neighborhood of `v`. The representation is kept
/// symmetric and loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        check_order(n)?;
        let mask = VertexSet::full(n).0;
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 63 - (row & !mask).leading_zeros() as usize,
                    n,
                });
            }
            if row & (1u64 << v) != 0 {
                return Err(GraphError::Loop(v));
            }
            for u in VertexSet(row) {
                if adj[u] & (1u64 << v) == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    pub fn construct(family: Family) -> Result<Self, GraphError> {
        let bad = |msg: &str| Err(GraphError::InvalidParameters(format!("{family:?}: {msg}")));
        match family {
            Family::Complete(n) => {
                let mut g = Graph::empty(n)?;
                let full = VertexSet::full(n).0;
                for v in 0..n {
                    g.adj[v] = full & !(1u64 << v);
                }
                Ok(g)
            }
            Family::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return bad("both sides need at least one vertex");
                }
                let n = a
                    .checked_add(b)
                    .ok_or(GraphError::TooManyVertices(usize::MAX))?;
                let mut g = Graph::empty(n)?;
                let left = VertexSet::full(a).0;
                let right = VertexSet::full(n).0 & !left;
                for v in 0..n {
                    g.adj[v] = if v < a { right } else { left };
                }
                Ok(g)
            }
            Family::Star(k) => {
                if k == 0 {
                    return bad("a star needs at least one leaf");
                }
                Graph::construct(Family::CompleteBipartite(1, k))
            }
            Family::Path(n) => {
                let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                Graph::from_edges(n, &edges)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return bad("a cycle needs at least three vertices");
                }
                let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
            Family::CocktailParty(k) => {
                if k == 0 {
                    return bad("k must be at least 1");
                }
                let n = k
                    .checked_mul(2)
                    .ok_or(GraphError::TooManyVertices(usize::MAX))?;
                let edges: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
                Ok(Graph::from_edges(n, &edges)?.complement())
            }
            Family::Empty(n) => Graph::empty(n),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | (1u64 << v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// `2|E| / n`.
    pub fn average_degree(&self) -> f64 {
        2.0 * self.edge_count() as f64 / self.n as f64
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u` (graph6 order).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| {
            VertexSet(self.adj[v] & ((1u64 << v) - 1))
                .iter()
                .map(move |u| (u, v))
        })
    }

    /// Vertex pairs `(u, v)`, `u < v`, that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| {
            VertexSet(!self.adj[v] & ((1u64 << v) - 1))
                .iter()
                .map(move |u| (u, v))
        })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    /// `G + uv`. Adding an existing edge returns an identical graph.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.try_add_edge(u, v)?;
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// `G ∪ H`; vertices of `h` are shifted by `g.order()`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Self, GraphError> {
        let n = self.n + h.n;
        check_order(n)?;
        let mut adj = self.adj.clone();
        adj.extend(h.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// `G ∪ k K_1`.
    pub fn with_isolated(&self, k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Ok(self.clone());
        }
        self.disjoint_union(&Graph::empty(k)?)
    }

    /// Subgraph induced by `s`, vertices renumbered in increasing order.
    pub fn induced(&self, s: VertexSet) -> Result<Self, GraphError> {
        if !s.is_subset(self.vertices()) {
            return Err(GraphError::VertexOutOfRange {
                vertex: 63 - s.difference(self.vertices()).0.leading_zeros() as usize,
                n: self.n,
            });
        }
        let members: Vec<usize> = s.iter().collect();
        let adj = members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.has_edge(u, v))
                    .fold(0u64, |row, (i, _)| row | (1u64 << i))
            })
            .collect();
        check_order(members.len())?;
        Ok(Graph {
            n: members.len(),
            adj,
        })
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidParameters(format!(
                "permutation of length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1u64 << p;
        }
        if seen != VertexSet::full(self.n).0 {
            return Err(GraphError::InvalidParameters("not a permutation".into()));
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1u64 << perm[v];
            adj[perm[v]] |= 1u64 << perm[u];
        }
        Ok(Graph { n: self.n, adj })
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let comp = self.reach(start);
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    fn reach(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)));
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0) == self.vertices()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// `N(u) ∪ N(v)`.
    pub fn neighborhood_union(&self, u: usize, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.neighbors(u).union(self.neighbors(v)))
    }

    /// `D_uv = (V ∖ (N(u) ∪ N(v))) ∪ {u, v}` for an edge `uv`.
    pub fn duv_set(&self, u: usize, v: usize) -> Result<VertexSet, GraphError> {
        let nu = self.neighborhood_union(u, v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        Ok(self.vertices().difference(nu).with(u).with(v))
    }

    /// `D_u = V ∖ N(u)`.
    pub fn du_set(&self, u: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(u)?;
        Ok(self.vertices().difference(self.neighbors(u)))
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::NoVertices)
    } else if n > MAX_VERTICES {
        Err(GraphError::TooManyVertices(n))
    } else {
        Ok(())
    }
}
