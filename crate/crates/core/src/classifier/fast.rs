//! Polynomial characterizations. Each returns `None` outside its
//! hypothesis class instead of guessing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{
    core_avoidable_pairs, is_very_well_covered_with, is_well_covered_with, max_stable_sets_with,
    pendant_perfect_matching, Budget, StableSetFamily,
};

use super::ke::is_koenig_egervary;
use super::oracle::{oracle_alpha_plus, oracle_plus_plus};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PlusClass {
    Alpha0Plus,
    Alpha1Plus,
    NotPlus,
}

impl PlusClass {
    pub fn is_plus(self) -> bool {
        self != PlusClass::NotPlus
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PlusClass::Alpha0Plus => "ALPHA0_PLUS",
            PlusClass::Alpha1Plus => "ALPHA1_PLUS",
            PlusClass::NotPlus => "NOT_PLUS",
        }
    }
}

/// Classification by the size of the core: α⁺-stable exactly when
/// `ξ(G) <= 1`.
pub fn fast_alpha_plus(family: &StableSetFamily) -> PlusClass {
    match family.xi {
        0 => PlusClass::Alpha0Plus,
        1 => PlusClass::Alpha1Plus,
        _ => PlusClass::NotPlus,
    }
}

/// For K-E graphs: α⁺⁺-stable iff a pendant perfect matching exists and
/// no four vertices span a cycle.
pub fn fast_plus_plus_ke(g: &Graph) -> Option<bool> {
    is_koenig_egervary(g).then(|| pendant_perfect_matching(g).is_some() && !g.has_c4())
}

/// For graphs with a pendant perfect matching: α⁺⁺-stable iff C₄-free.
pub fn fast_plus_plus_pendant(g: &Graph) -> Option<bool> {
    pendant_perfect_matching(g).map(|_| !g.has_c4())
}

/// For bipartite graphs without isolated vertices: α⁺⁺-stable iff C₄-free
/// and well-covered. An isolated vertex lies in every maximal stable set,
/// so edgeless components keep a graph well-covered while breaking
/// stability; those graphs are left to the oracle.
pub fn fast_plus_plus_bipartite(g: &Graph, budget: Budget) -> Result<Option<bool>> {
    if !g.is_bipartite() || g.vertices().iter().any(|v| g.degree(v) == 0) {
        return Ok(None);
    }
    Ok(Some(!g.has_c4() && is_well_covered_with(g, budget)?))
}

/// A pendant perfect matching forces α⁺_{P₃}-stability.
pub fn fast_p3_pendant(g: &Graph) -> Option<bool> {
    pendant_perfect_matching(g).map(|_| true)
}

/// An empty core forces α⁺_{P₃}-stability.
pub fn fast_p3_zero_core(family: &StableSetFamily) -> Option<bool> {
    (family.xi == 0).then_some(true)
}

/// If every vertex pair is avoided by some maximum stable set the graph is
/// α⁺⁺-stable.
pub fn fast_plus_plus_avoidable(g: &Graph, family: &StableSetFamily) -> Option<bool> {
    core_avoidable_pairs(g, family).is_none().then_some(true)
}

/// Result of the `G₀ = G − N[v]` test for a graph with core `{v}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G0Verdict {
    pub v: usize,
    /// α⁺_{P₃}-stable according to the criterion.
    pub p3_plus: bool,
    /// `N[v] = V`, so the criterion holds vacuously.
    pub empty_g0: bool,
}

/// For α₁⁺-stable graphs with core `{v}`: α⁺_{P₃}-stable iff every pair of
/// vertices of `G₀ = G − N[v]` is avoided by some member of `Ω(G₀)`.
pub fn alpha1_g0_characterization(
    g: &Graph,
    family: &StableSetFamily,
    budget: Budget,
) -> Result<Option<G0Verdict>> {
    if family.xi != 1 {
        return Ok(None);
    }
    let v = family.core.first().expect("core of size one");
    let (g0, _) = g.remove_vertices(g.closed_neighborhood(v))?;
    if g0.n() == 0 {
        return Ok(Some(G0Verdict { v, p3_plus: true, empty_g0: true }));
    }
    let f0 = max_stable_sets_with(&g0, budget)?;
    Ok(Some(G0Verdict { v, p3_plus: core_avoidable_pairs(&g0, &f0).is_none(), empty_g0: false }))
}

/// The five assertions evaluated on a graph of girth at least six.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Girth6Panel {
    pub well_covered: bool,
    pub pendant_perfect: bool,
    pub very_well_covered: bool,
    /// K-E, α₀⁺-stable and exactly `α(G)` pendant vertices.
    pub ke_alpha0_pendants: bool,
    /// K-E and α⁺⁺-stable (by the oracle).
    pub ke_plus_plus: bool,
}

impl Girth6Panel {
    pub fn values(&self) -> [bool; 5] {
        [
            self.well_covered,
            self.pendant_perfect,
            self.very_well_covered,
            self.ke_alpha0_pendants,
            self.ke_plus_plus,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let v = self.values();
        v.iter().all(|&b| b == v[0])
    }
}

/// Exactly the cycle on seven vertices.
pub fn is_c7(g: &Graph) -> bool {
    g.n() == 7 && g.edge_count() == 7 && g.is_connected() && g.vertices().iter().all(|v| g.degree(v) == 2)
}

pub fn girth6_panel(g: &Graph, budget: Budget) -> Result<Girth6Panel> {
    if g.n() < 2 {
        return Err(Error::Precondition("panel needs at least two vertices".into()));
    }
    if !g.girth().at_least(6) {
        return Err(Error::Precondition(format!("girth {} is below 6", g.girth())));
    }
    if is_c7(g) {
        return Err(Error::Precondition("graph is C7".into()));
    }
    let family = max_stable_sets_with(g, budget)?;
    let ke = is_koenig_egervary(g);
    let alpha0 = family.xi == 0 && oracle_alpha_plus(g).stable;
    let pendants = g.pendant_vertices().len();
    Ok(Girth6Panel {
        well_covered: is_well_covered_with(g, budget)?,
        pendant_perfect: pendant_perfect_matching(g).is_some(),
        very_well_covered: is_very_well_covered_with(g, budget)?,
        ke_alpha0_pendants: ke && alpha0 && pendants == family.alpha,
        ke_plus_plus: ke && oracle_plus_plus(g).stable,
    })
}

/// Girth at least six with every component of order at least three and
/// none equal to `C₇`. A `K₁` component is well-covered without a
/// pendant matching, and a `K₂` component contributes two pendant vertices
/// but only one to `α`.
pub fn girth6_population_member(g: &Graph) -> bool {
    g.n() >= 2
        && g.girth().at_least(6)
        && g.connected_components().into_iter().all(|c: VertexSet| {
            c.len() > 2 && !(c.len() == 7 && is_c7(&g.induced_subgraph(c).expect("nonempty").0))
        })
}
