//! Exact classification of small graphs by how their stability number
//! reacts to added edges.
//!
//! Graphs have at most 64 vertices and are stored as one `u64` adjacency
//! row per vertex. Every stability class has a definitional oracle (add
//! the edges, recompute `α`) and, where one is known, a characterization
//! in terms of `Ω(G)`, matchings or local structure. The [`harness`]
//! module checks those characterizations against the oracles over
//! enumerated populations.

pub mod classifier;
mod error;
pub mod graph;
pub mod harness;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Edge, EdgePair, Graph, VertexSet};
