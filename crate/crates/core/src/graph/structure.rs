//! Structural queries: cycles, pendants, paths, components.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{bit, Edge, Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by [`Graph::has_hamiltonian_path`].
pub const HAMILTONIAN_PATH_LIMIT: usize = 12;

/// Length of a shortest cycle. `Infinite` sorts above every finite value.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        self >= Girth::Finite(k)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Which notion of "four vertices spanning a cycle" to test.
///
/// `Subgraph` asks for a 4-cycle as a (not necessarily induced) subgraph, so
/// chords are allowed and `K4` qualifies. `Induced` asks for a chordless one.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum C4Mode {
    #[default]
    Subgraph,
    Induced,
}

impl Graph {
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        for root in 0..n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // no shorter cycle can close beyond this depth
                if 2 * dist[u] >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// A 4-cycle `[a, b, c, d]` with edges `ab, bc, cd, da`, if one exists.
    pub fn find_c4(&self, mode: C4Mode) -> Option<[usize; 4]> {
        let n = self.n();
        for a in 0..n {
            for c in a + 1..n {
                if mode == C4Mode::Induced && self.has_edge(a, c) {
                    continue;
                }
                let common = self.neighbors(a).intersection(self.neighbors(c));
                let mut it = common.iter();
                while let Some(b) = it.next() {
                    let rest = it.clone();
                    for d in rest {
                        if mode == C4Mode::Subgraph || !self.has_edge(b, d) {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }

    /// Subgraph reading: chords are allowed.
    pub fn has_c4(&self) -> bool {
        self.find_c4(C4Mode::Subgraph).is_some()
    }

    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Degree-one vertices and their incident edges (deduplicated: a `K2`
    /// component contributes one edge for its two pendant vertices).
    pub fn pendant_data(&self) -> (VertexSet, Vec<Edge>) {
        let pendants = self.pendant_vertices();
        let mut edges: Vec<Edge> =
            pendants.iter().map(|v| Edge::new(v, self.neighbors(v).first().expect("degree one"))).collect();
        edges.sort_unstable();
        edges.dedup();
        (pendants, edges)
    }

    /// Exhaustive subset dynamic program; orders above
    /// [`HAMILTONIAN_PATH_LIMIT`] are refused.
    pub fn has_hamiltonian_path(&self) -> Result<bool> {
        let n = self.n();
        if n > HAMILTONIAN_PATH_LIMIT {
            return Err(Error::Budget(format!(
                "Hamiltonian path search limited to {HAMILTONIAN_PATH_LIMIT} vertices, got {n}"
            )));
        }
        if n <= 1 {
            return Ok(true);
        }
        let full = (1usize << n) - 1;
        // ends[mask]: vertices at which some path covering exactly `mask` ends
        let mut ends = vec![0u64; full + 1];
        for v in 0..n {
            ends[1 << v] = bit(v);
        }
        for mask in 1..=full {
            let here = ends[mask];
            if here == 0 {
                continue;
            }
            for v in VertexSet::from_bits(here) {
                let ext = self.neighbors(v).bits() & !(mask as u64);
                for w in VertexSet::from_bits(ext) {
                    ends[mask | (1 << w)] |= bit(w);
                }
            }
        }
        Ok(ends[full] != 0)
    }

    /// Components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for root in 0..self.n() {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::singleton(root);
            let mut frontier = comp;
            while !frontier.is_empty() {
                frontier = self.neighborhood_of(frontier).difference(comp);
                comp = comp.union(frontier);
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// True if the graph has no odd cycle.
    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// One side of a proper 2-colouring, if any exists.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = VertexSet::EMPTY;
        for comp in self.connected_components() {
            let root = comp.first().expect("nonempty component");
            let mut colored = VertexSet::singleton(root);
            let mut layer = colored;
            let mut even = true;
            while !layer.is_empty() {
                if even {
                    side = side.union(layer);
                }
                let next = self.neighborhood_of(layer);
                if !next.intersection(layer).is_empty() {
                    return None;
                }
                layer = next.difference(colored);
                colored = colored.union(layer);
                even = !even;
            }
        }
        self.edges().iter().all(|e| side.contains(e.u()) != side.contains(e.v())).then_some(side)
    }
}
