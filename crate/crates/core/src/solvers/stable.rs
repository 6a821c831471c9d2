//! Maximum stable sets: the stability number, the complete family of
//! maximum stable sets, and well-coveredness.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default cap on the number of sets a single enumeration may produce.
pub const DEFAULT_BUDGET: usize = 1 << 20;

/// Per-call enumeration cap.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_sets: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_sets: DEFAULT_BUDGET }
    }
}

impl Budget {
    pub fn new(max_sets: usize) -> Self {
        Budget { max_sets }
    }
}

/// `α(G)` together with every maximum stable set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableSetFamily {
    pub alpha: usize,
    /// Sorted ascending by bitmask.
    pub sets: Vec<VertexSet>,
    /// Intersection of all members.
    pub core: VertexSet,
    /// `|core|`.
    pub xi: usize,
}

impl StableSetFamily {
    fn from_sets(alpha: usize, mut sets: Vec<VertexSet>) -> Self {
        sets.sort_unstable();
        let core = sets.iter().fold(VertexSet::from_bits(u64::MAX), |acc, s| acc.intersection(*s));
        let core = if sets.is_empty() { VertexSet::EMPTY } else { core };
        StableSetFamily { alpha, xi: core.len(), core, sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Some member avoids every vertex of `avoid`.
    pub fn some_set_avoids(&self, avoid: VertexSet) -> bool {
        self.sets.iter().any(|s| s.intersection(avoid).is_empty())
    }

    /// Every member contains all of `required`.
    pub fn all_contain(&self, required: VertexSet) -> bool {
        self.sets.iter().all(|s| required.is_subset(*s))
    }
}

#[inline]
fn rec_alpha(rows: &[u64], mask: u64) -> usize {
    if mask == 0 {
        return 0;
    }
    let (mut min_v, mut min_d, mut max_v, mut max_d) = (0, usize::MAX, 0, 0);
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let d = (rows[v] & mask).count_ones() as usize;
        if d < min_d {
            min_v = v;
            min_d = d;
        }
        if d > max_d {
            max_v = v;
            max_d = d;
        }
    }
    // a vertex of degree <= 1 lies in some maximum stable set
    if min_d <= 1 {
        return 1 + rec_alpha(rows, mask & !(rows[min_v] | 1 << min_v));
    }
    let take = 1 + rec_alpha(rows, mask & !(rows[max_v] | 1 << max_v));
    let skip = rec_alpha(rows, mask & !(1 << max_v));
    take.max(skip)
}

/// Stability number by branch-and-reduce over bitsets.
pub fn alpha(g: &Graph) -> usize {
    rec_alpha(g.rows(), g.vertices().bits())
}

struct Enumerator<'a> {
    rows: &'a [u64],
    target: usize,
    cap: usize,
    out: Vec<VertexSet>,
}

impl Enumerator<'_> {
    fn run(&mut self, cand: u64, chosen: u64, size: usize) -> Result<()> {
        if size == self.target {
            if self.out.len() == self.cap {
                return Err(Error::Budget(format!("more than {} maximum stable sets", self.cap)));
            }
            self.out.push(VertexSet::from_bits(chosen));
            return Ok(());
        }
        let room = cand.count_ones() as usize;
        if size + room < self.target {
            return Ok(());
        }
        if room > 10 && size + rec_alpha(self.rows, cand) < self.target {
            return Ok(());
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        self.run(cand & !(self.rows[v] | bit), chosen | bit, size + 1)?;
        self.run(cand & !bit, chosen, size)
    }
}

/// The complete family `Ω(G)` with the default budget.
pub fn max_stable_sets(g: &Graph) -> Result<StableSetFamily> {
    max_stable_sets_with(g, Budget::default())
}

pub fn max_stable_sets_with(g: &Graph, budget: Budget) -> Result<StableSetFamily> {
    let a = alpha(g);
    let mut e = Enumerator { rows: g.rows(), target: a, cap: budget.max_sets, out: Vec::new() };
    e.run(g.vertices().bits(), 0, 0)?;
    Ok(StableSetFamily::from_sets(a, e.out))
}

/// Bron–Kerbosch with pivoting over the complement: reports every maximal
/// stable set to `visit`, which returns `false` to stop early.
pub fn for_each_maximal_stable_set(
    g: &Graph,
    budget: Budget,
    mut visit: impl FnMut(VertexSet) -> bool,
) -> Result<()> {
    let full = g.vertices().bits();
    let non_adj: Vec<u64> = (0..g.n()).map(|v| full & !g.rows()[v] & !(1 << v)).collect();
    let mut count = 0usize;
    struct Stop;
    fn bk(
        non_adj: &[u64],
        r: u64,
        mut p: u64,
        mut x: u64,
        count: &mut usize,
        cap: usize,
        visit: &mut dyn FnMut(VertexSet) -> bool,
    ) -> std::result::Result<(), Option<Stop>> {
        if p == 0 {
            if x == 0 {
                if *count == cap {
                    return Err(None);
                }
                *count += 1;
                if !visit(VertexSet::from_bits(r)) {
                    return Err(Some(Stop));
                }
            }
            return Ok(());
        }
        let mut pivot = 0;
        let mut best = -1i64;
        let mut px = p | x;
        while px != 0 {
            let u = px.trailing_zeros() as usize;
            px &= px - 1;
            let k = (p & non_adj[u]).count_ones() as i64;
            if k > best {
                best = k;
                pivot = u;
            }
        }
        let mut todo = p & !non_adj[pivot];
        while todo != 0 {
            let v = todo.trailing_zeros() as usize;
            todo &= todo - 1;
            let bit = 1u64 << v;
            bk(non_adj, r | bit, p & non_adj[v], x & non_adj[v], count, cap, visit)?;
            p &= !bit;
            x |= bit;
        }
        Ok(())
    }
    match bk(&non_adj, 0, full, 0, &mut count, budget.max_sets, &mut visit) {
        Ok(()) | Err(Some(Stop)) => Ok(()),
        Err(None) => Err(Error::Budget(format!("more than {} maximal stable sets", budget.max_sets))),
    }
}

/// Every maximal stable set is maximum.
pub fn is_well_covered(g: &Graph) -> Result<bool> {
    is_well_covered_with(g, Budget::default())
}

pub fn is_well_covered_with(g: &Graph, budget: Budget) -> Result<bool> {
    let a = alpha(g);
    let mut ok = true;
    for_each_maximal_stable_set(g, budget, |s| {
        ok = s.len() == a;
        ok
    })?;
    Ok(ok)
}

/// Well-covered with `|V| = 2α`.
pub fn is_very_well_covered(g: &Graph) -> Result<bool> {
    is_very_well_covered_with(g, Budget::default())
}

pub fn is_very_well_covered_with(g: &Graph, budget: Budget) -> Result<bool> {
    Ok(g.n() == 2 * alpha(g) && is_well_covered_with(g, budget)?)
}

/// A vertex pair `(x, y)`, `x <= y`, that meets every maximum stable set,
/// or `None` when every pair (including `x = y`) is avoided by some member.
pub fn core_avoidable_pairs(g: &Graph, family: &StableSetFamily) -> Option<(usize, usize)> {
    let n = g.n();
    for x in 0..n {
        for y in x..n {
            let pair = VertexSet::singleton(x).with(y);
            if !family.some_set_avoids(pair) {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_minus_edge, cycle, p3_substitution, path, Fixture};

    fn sets(f: &StableSetFamily) -> Vec<Vec<usize>> {
        f.sets.iter().map(|s| s.iter().collect()).collect()
    }

    #[test]
    fn c4_family() {
        let f = max_stable_sets(&cycle(4).unwrap()).unwrap();
        assert_eq!(f.alpha, 2);
        assert_eq!(sets(&f), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(f.xi, 0);
    }

    #[test]
    fn k4_family() {
        let f = max_stable_sets(&complete(4).unwrap()).unwrap();
        assert_eq!(f.alpha, 1);
        assert_eq!(f.len(), 4);
        assert_eq!(f.xi, 0);
    }

    #[test]
    fn k4_plus_e_family() {
        let f = max_stable_sets(&Fixture::K4PlusE.graph()).unwrap();
        assert_eq!(f.alpha, 2);
        assert_eq!(sets(&f), vec![vec![1, 4], vec![2, 4], vec![3, 4]]);
        assert_eq!(f.xi, 1);
        assert_eq!(f.core, VertexSet::singleton(4));
    }

    #[test]
    fn k_minus_e_has_single_set() {
        let f = max_stable_sets(&complete_minus_edge(5).unwrap()).unwrap();
        assert_eq!(sets(&f), vec![vec![0, 1]]);
        assert_eq!(f.xi, 2);
    }

    #[test]
    fn p3_substitution_one() {
        let f = max_stable_sets(&p3_substitution(1).unwrap()).unwrap();
        assert_eq!(f.alpha, 2);
        // a = 0, c1 = 2, c2 = 3
        assert_eq!(sets(&f), vec![vec![0, 2], vec![0, 3]]);
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::empty(0).unwrap().disjoint_union(&cycle(4).unwrap()).unwrap();
        let g = g.disjoint_union(&cycle(4).unwrap()).unwrap();
        assert!(max_stable_sets_with(&g, Budget::new(3)).unwrap_err().is_budget());
        assert_eq!(max_stable_sets_with(&g, Budget::new(4)).unwrap().len(), 4);
    }

    #[test]
    fn well_covered_examples() {
        let c4 = cycle(4).unwrap();
        assert!(is_well_covered(&c4).unwrap());
        assert!(is_very_well_covered(&c4).unwrap());
        assert!(!is_well_covered(&path(3).unwrap()).unwrap());
        let g2 = Fixture::G2.graph();
        assert!(is_well_covered(&g2).unwrap());
        assert!(is_very_well_covered(&g2).unwrap());
        assert!(!is_well_covered(&cycle(6).unwrap()).unwrap());
        assert!(is_well_covered(&cycle(5).unwrap()).unwrap());
        assert!(!is_very_well_covered(&cycle(5).unwrap()).unwrap());
    }

    #[test]
    fn maximal_sets_of_c6() {
        let mut sizes = Vec::new();
        for_each_maximal_stable_set(&cycle(6).unwrap(), Budget::default(), |s| {
            sizes.push(s.len());
            true
        })
        .unwrap();
        sizes.sort_unstable();
        // three antipodal pairs, two perfect triples
        assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn avoidable_pairs() {
        let c5 = cycle(5).unwrap();
        assert_eq!(core_avoidable_pairs(&c5, &max_stable_sets(&c5).unwrap()), None);
        let k3 = complete(3).unwrap();
        assert_eq!(core_avoidable_pairs(&k3, &max_stable_sets(&k3).unwrap()), None);
        let c4 = cycle(4).unwrap();
        assert_eq!(core_avoidable_pairs(&c4, &max_stable_sets(&c4).unwrap()), Some((0, 1)));
    }
}
