//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so every vertex set
//! fits in a machine word. Graphs are values: every "modification" returns a
//! fresh graph and leaves the original untouched.

mod io;
mod named;
mod structure;

pub use io::{parse_edge_list, parse_edge_lists, parse_graph6, to_dot, to_edge_list, to_graph6};
pub use named::{
    complete, complete_minus_edge, cycle, edgeless, make_named, p3_substitution, path, star, Fixture,
};
pub use structure::{C4Mode, Girth};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard upper bound on the number of vertices.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex ids below 64.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(bit(v))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & bit(v) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | bit(v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !bit(v))
    }

    #[must_use]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
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

/// An unordered vertex pair, stored with `u < v`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Loops are rejected by the graph
    /// operations that consume the pair, not here.
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> VertexSet {
        VertexSet::singleton(self.u).with(self.v)
    }

    /// True if the two pairs have at least one endpoint in common.
    pub fn touches(self, other: Edge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }

    pub fn is_loop(self) -> bool {
        self.u == self.v
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = String;

    fn try_from([a, b]: [usize; 2]) -> std::result::Result<Self, String> {
        if a == b {
            return Err(format!("loop at {a}"));
        }
        Ok(Edge::new(a, b))
    }
}

/// Two distinct unordered pairs, each with distinct endpoints.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgePair {
    pub e1: Edge,
    pub e2: Edge,
}

impl EdgePair {
    pub fn new(e1: Edge, e2: Edge) -> Result<Self> {
        for e in [e1, e2] {
            if e.is_loop() {
                return Err(Error::Loop(e.u));
            }
        }
        if e1 == e2 {
            return Err(Error::DuplicateEdge(e1.u, e1.v));
        }
        Ok(EdgePair { e1, e2 })
    }

    pub fn share_endpoint(&self) -> bool {
        self.e1.touches(self.e2)
    }
}

/// A simple undirected graph with `n <= 64` vertices labelled `0..n`.
///
/// The public constructors and parsers insist on `n >= 2`; smaller graphs
/// only arise internally as induced subgraphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices, `n <= 64`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n, "0..=64"));
        }
        Ok(Graph { n, adj: [0; MAX_VERTICES] })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            g.insert_checked(a, b)?;
        }
        Ok(g)
    }

    fn insert_checked(&mut self, a: usize, b: usize) -> Result<()> {
        for x in [a, b] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if a == b {
            return Err(Error::Loop(a));
        }
        if self.adj[a] & bit(b) != 0 {
            let e = Edge::new(a, b);
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
        Ok(())
    }

    /// The edge `{u,v}` must be absent; used by parsers that already know it is.
    pub(crate) fn set_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | bit(v))
    }

    /// Union of the neighborhoods of the members of `set`.
    pub fn neighborhood_of(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Every pair `{u,v}`, `u != v`, that is not an edge, in lexicographic order.
    pub fn complement_edges(&self) -> Vec<Edge> {
        let full = low_mask(self.n);
        let mut out = Vec::new();
        for u in 0..self.n {
            let missing = full & !self.adj[u] & !low_mask(u + 1);
            for v in VertexSet(missing) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let full = low_mask(self.n);
        (0..self.n).all(|v| self.adj[v] | bit(v) == full)
    }

    /// True if `set` carries no edge.
    pub fn is_stable(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.0 == 0)
    }

    /// A copy of `self` with the non-edge `e` added.
    pub fn with_edge(&self, e: Edge) -> Result<Graph> {
        let mut g = self.clone();
        g.add_nonedge(e)?;
        Ok(g)
    }

    /// A copy of `self` with both non-edges of `pair` added.
    pub fn add_edges(&self, pair: &EdgePair) -> Result<Graph> {
        let mut g = self.clone();
        g.add_nonedge(pair.e1)?;
        g.add_nonedge(pair.e2)?;
        Ok(g)
    }

    fn add_nonedge(&mut self, e: Edge) -> Result<()> {
        if e.v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: e.v, n: self.n });
        }
        if e.is_loop() {
            return Err(Error::Loop(e.u));
        }
        if self.adj[e.u] & bit(e.v) != 0 {
            return Err(Error::EdgeExists(e.u, e.v));
        }
        self.set_edge_unchecked(e.u, e.v);
        Ok(())
    }

    /// `G[X]`, relabelled so that the i-th smallest member of `X` becomes
    /// vertex `i`. The returned map sends new ids to old ids.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        if !set.is_subset(self.vertices()) {
            let bad = set.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let map: Vec<usize> = set.iter().collect();
        let mut g = Graph::empty(map.len())?;
        for (i, &old) in map.iter().enumerate() {
            for (j, &other) in map.iter().enumerate().skip(i + 1) {
                if self.adj[old] & bit(other) != 0 {
                    g.set_edge_unchecked(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// `G - W`.
    pub fn remove_vertices(&self, removed: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.induced_subgraph(self.vertices().difference(removed))
    }

    /// Relabel vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for e in self.edges() {
            g.set_edge_unchecked(perm[e.u], perm[e.v]);
        }
        g
    }

    /// Disjoint union, with `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for e in self.edges() {
            g.set_edge_unchecked(e.u, e.v);
        }
        for e in other.edges() {
            g.set_edge_unchecked(e.u + self.n, e.v + self.n);
        }
        Ok(g)
    }

    /// Raw adjacency rows, one per vertex.
    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges())
    }
}
