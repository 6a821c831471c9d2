//! Cover criteria: decide the two-edge stability notions from `Ω(G)` alone.
//!
//! Adding `xy` and `uv` lowers `α` exactly when every maximum stable set
//! contains `{x,y}` or `{u,v}`. The sub-families `Ω₁ = {S ⊇ {x,y}}` and
//! `Ω₂ = {S ⊇ {u,v}}` then form a cover of `Ω(G)` whose parts each keep at
//! least two common vertices, so it suffices to search anchor pairs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::solvers::StableSetFamily;

/// Largest family the exhaustive cover search accepts.
pub const EXHAUSTIVE_COVER_LIMIT: usize = 20;

/// A cover `{Ω₁, Ω₂}` of `Ω(G)` generated by two anchor pairs.
///
/// `Ω_i` is the set of members containing anchor `i`. When no member
/// contains an anchor, that part is taken to be all of `Ω(G)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverWitness {
    pub omega1_anchor: Edge,
    pub omega2_anchor: Edge,
    pub xi1: usize,
    pub xi2: usize,
}

fn part_core(family: &StableSetFamily, anchor: VertexSet) -> VertexSet {
    let mut part = family.sets.iter().filter(|s| anchor.is_subset(**s)).peekable();
    let members: Box<dyn Iterator<Item = &VertexSet>> =
        if part.peek().is_some() { Box::new(part) } else { Box::new(family.sets.iter()) };
    members.fold(VertexSet::from_bits(u64::MAX), |acc, s| acc.intersection(*s))
}

fn covers(family: &StableSetFamily, a: VertexSet, b: VertexSet) -> bool {
    family.sets.iter().all(|s| a.is_subset(*s) || b.is_subset(*s))
}

fn witness(family: &StableSetFamily, a: Edge, b: Edge) -> CoverWitness {
    CoverWitness {
        omega1_anchor: a,
        omega2_anchor: b,
        xi1: part_core(family, a.endpoints()).len(),
        xi2: part_core(family, b.endpoints()).len(),
    }
}

/// A pair-generated cover witnessing that `G` is not α⁺⁺-stable.
///
/// Anchors range over non-edges, equal anchors included: a single non-edge
/// contained in every member already lowers `α` on its own.
pub fn cover_criterion_plus_plus(g: &Graph, family: &StableSetFamily) -> Option<CoverWitness> {
    let missing = g.complement_edges();
    for (i, &a) in missing.iter().enumerate() {
        for &b in &missing[i..] {
            if covers(family, a.endpoints(), b.endpoints()) {
                return Some(witness(family, a, b));
            }
        }
    }
    None
}

/// A cover with anchors `{x,y}`, `{y,v}`, `x != v`, around a core vertex
/// `y`, witnessing that `G` is not α⁺_{P₃}-stable. Requires `ξ(G) >= 1`.
pub fn cover_criterion_p3(g: &Graph, family: &StableSetFamily) -> Option<CoverWitness> {
    if family.xi == 0 {
        return None;
    }
    for y in family.core {
        let far: Vec<usize> = (0..g.n()).filter(|&x| x != y && !g.has_edge(x, y)).collect();
        for (i, &x) in far.iter().enumerate() {
            for &v in &far[i + 1..] {
                let either = VertexSet::singleton(x).with(v);
                // y is in every member already
                if family.sets.iter().all(|s| !s.intersection(either).is_empty()) {
                    return Some(witness(family, Edge::new(x, y), Edge::new(y, v)));
                }
            }
        }
    }
    None
}

/// Literal search over every two-part cover `{Ω₁, Ω₂}` (both parts
/// nonempty, union `Ω`, overlap allowed) for one with `ξ(Ω₁), ξ(Ω₂) >= 2`.
/// Returns the membership masks of the two parts. Exponential in `|Ω|`.
pub fn exhaustive_two_cover(family: &StableSetFamily) -> Result<Option<(u32, u32)>> {
    let k = family.len();
    if k > EXHAUSTIVE_COVER_LIMIT {
        return Err(Error::Budget(format!(
            "exhaustive cover search limited to {EXHAUSTIVE_COVER_LIMIT} sets, got {k}"
        )));
    }
    fn go(sets: &[VertexSet], i: usize, parts: [(u32, u64); 2]) -> Option<(u32, u32)> {
        for (mask, core) in parts {
            if mask != 0 && core.count_ones() < 2 {
                return None;
            }
        }
        if i == sets.len() {
            return (parts[0].0 != 0 && parts[1].0 != 0).then_some((parts[0].0, parts[1].0));
        }
        let s = sets[i].bits();
        let put = |p: (u32, u64)| (p.0 | 1 << i, p.1 & s);
        let [p1, p2] = parts;
        go(sets, i + 1, [put(p1), p2])
            .or_else(|| go(sets, i + 1, [p1, put(p2)]))
            .or_else(|| go(sets, i + 1, [put(p1), put(p2)]))
    }
    Ok(go(&family.sets, 0, [(0, u64::MAX); 2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, Fixture};
    use crate::solvers::max_stable_sets;

    fn fam(g: &Graph) -> StableSetFamily {
        max_stable_sets(g).unwrap()
    }

    #[test]
    fn c4_plus_plus_cover() {
        let g = cycle(4).unwrap();
        let w = cover_criterion_plus_plus(&g, &fam(&g)).unwrap();
        assert_eq!((w.omega1_anchor, w.omega2_anchor), (Edge::new(0, 2), Edge::new(1, 3)));
        assert_eq!((w.xi1, w.xi2), (2, 2));
        assert!(exhaustive_two_cover(&fam(&g)).unwrap().is_some());
    }

    #[test]
    fn no_cover_for_stable_graphs() {
        for g in [cycle(5).unwrap(), Fixture::K4PlusE.graph()] {
            assert_eq!(cover_criterion_plus_plus(&g, &fam(&g)), None);
            assert_eq!(exhaustive_two_cover(&fam(&g)).unwrap(), None);
        }
    }

    #[test]
    fn p3_cover_examples() {
        let g = Fixture::K3PlusE.graph();
        let w = cover_criterion_p3(&g, &fam(&g)).unwrap();
        // anchored at p = 3 with the far vertices y = 1 and z = 2
        assert_eq!((w.omega1_anchor, w.omega2_anchor), (Edge::new(1, 3), Edge::new(2, 3)));
        assert!(w.xi1 >= 2 && w.xi2 >= 2);
        let c4 = cycle(4).unwrap();
        assert_eq!(cover_criterion_p3(&c4, &fam(&c4)), None);
        let g = Fixture::K4PlusE.graph();
        assert_eq!(cover_criterion_p3(&g, &fam(&g)), None);
    }

    #[test]
    fn single_set_family_covers_itself() {
        // K4 - e: one maximum stable set, its own cover
        let g = Fixture::K4MinusE.graph();
        let w = cover_criterion_plus_plus(&g, &fam(&g)).unwrap();
        assert_eq!(w.omega1_anchor, w.omega2_anchor);
        assert_eq!(exhaustive_two_cover(&fam(&g)).unwrap(), Some((1, 1)));
    }
}
