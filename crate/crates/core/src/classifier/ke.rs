//! König-Egerváry graphs: recognition and the stable-set/matching split.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::solvers::{alpha, matching_number, max_stable_sets_with, maximum_matching, Budget};

/// `G = H₁ * H₂` with `V(H₁) = S ∈ Ω(G)`, `V(H₂) = T = V − S`, and a maximum
/// matching `M` running between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KEDecomposition {
    pub s: VertexSet,
    pub t: VertexSet,
    pub m: Vec<Edge>,
}

impl KEDecomposition {
    /// Checks the decomposition against `g`: `S` stable, `|S| >= |T|`,
    /// every edge of `M` crosses `(S, T)` and `M` saturates `T`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: &str| Err(Error::Invariant(format!("K-E decomposition: {msg}")));
        if self.s.union(self.t) != g.vertices() || !self.s.intersection(self.t).is_empty() {
            return fail("S and T do not partition V");
        }
        if !g.is_stable(self.s) {
            return fail("S is not stable");
        }
        if self.s.len() < self.t.len() || self.m.len() != self.t.len() {
            return fail("size mismatch");
        }
        let mut hit = VertexSet::EMPTY;
        for e in &self.m {
            let (u, v) = (e.u(), e.v());
            if !g.has_edge(u, v) || self.s.contains(u) == self.s.contains(v) {
                return fail("matching edge outside (S,T)");
            }
            if !hit.intersection(e.endpoints()).is_empty() {
                return fail("matching edges overlap");
            }
            hit = hit.union(e.endpoints());
        }
        Ok(())
    }
}

/// `α(G) + μ(G) = |V(G)|`.
pub fn is_koenig_egervary(g: &Graph) -> bool {
    alpha(g) + matching_number(g) == g.n()
}

/// The split for a K-E graph, `None` otherwise. `S` is the first member of
/// `Ω(G)`; a maximum matching that leaves `(S, V − S)` is reported as an
/// invariant violation.
pub fn ke_decompose(g: &Graph) -> Result<Option<KEDecomposition>> {
    ke_decompose_with(g, Budget::default())
}

pub fn ke_decompose_with(g: &Graph, budget: Budget) -> Result<Option<KEDecomposition>> {
    let mm = maximum_matching(g);
    let a = alpha(g);
    if a + mm.mu != g.n() {
        return Ok(None);
    }
    let family = max_stable_sets_with(g, budget)?;
    let s = family.sets[0];
    let d = KEDecomposition { s, t: g.vertices().difference(s), m: mm.matching };
    d.validate(g)?;
    Ok(Some(d))
}
