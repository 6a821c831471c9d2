//! One suite per statement. Each suite sweeps a population and reports
//! every graph on which the statement fails.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classifier::{
    alpha1_g0_characterization, classify_full, cover_criterion_p3, cover_criterion_plus_plus,
    exhaustive_two_cover, girth6_panel, girth6_population_member, is_c7, is_complete_minus_edge,
    is_koenig_egervary, ke_decompose_with, oracle_alpha_plus, oracle_p3_plus, oracle_plus_plus, Flag,
    PlusClass, EXHAUSTIVE_COVER_LIMIT,
};
use crate::error::Result;
use crate::graph::{cycle, p3_substitution, Edge, EdgePair, Graph, VertexSet};
use crate::solvers::{
    all_maximum_matchings, alpha, core_avoidable_pairs, is_very_well_covered_with, is_well_covered_with,
    matching_number, max_stable_sets_with, maximum_matching, pendant_perfect_matching, StableSetFamily,
};

use super::sources::{girth_at_least_masks, isomorphic, pendant_perfect_graphs, random_graph};
use super::sweep::{sweep, GraphList, LabeledGraphs, MaskList, Status, Tally, Trees};
use super::{SuiteConfig, VerificationOutcome};

pub struct SuiteInfo {
    pub id: &'static str,
    pub statement: &'static str,
    pub(super) run: fn(&SuiteConfig) -> Result<VerificationOutcome>,
}

pub static SUITES: &[SuiteInfo] = &[
    SuiteInfo { id: "core_size", statement: "alpha+ stable iff xi <= 1", run: core_size },
    SuiteInfo { id: "zero_core_p3", statement: "xi = 0 implies alpha+_P3 stable", run: zero_core_p3 },
    SuiteInfo {
        id: "p3_implies_plus",
        statement: "alpha+_P3 stable and not K_n - e implies alpha+ stable",
        run: p3_implies_plus,
    },
    SuiteInfo {
        id: "plus_plus_implies_p3",
        statement: "alpha++ stable implies alpha+_P3 stable",
        run: plus_plus_implies_p3,
    },
    SuiteInfo {
        id: "avoidable_pairs",
        statement: "every vertex pair avoided by some maximum stable set implies xi = 0 and alpha++ stable",
        run: avoidable_pairs,
    },
    SuiteInfo {
        id: "cover_p3",
        statement: "not alpha+_P3 stable iff xi >= 1 and Omega has a cover whose parts keep two common vertices",
        run: cover_p3,
    },
    SuiteInfo {
        id: "cover_plus_plus",
        statement: "not alpha++ stable iff Omega has a cover whose parts keep two common vertices",
        run: cover_plus_plus,
    },
    SuiteInfo { id: "six_assertions", statement: "six equivalent forms of alpha++ stability", run: six_assertions },
    SuiteInfo {
        id: "ke_matching_position",
        statement: "in a K-E graph every maximum matching lies in (S, V - S) for every S in Omega",
        run: ke_matching_position,
    },
    SuiteInfo {
        id: "matching_additivity",
        statement: "a maximum matching split by a vertex partition makes mu additive",
        run: matching_additivity,
    },
    SuiteInfo {
        id: "ke_split",
        statement: "a maximum matching split in a K-E graph gives K-E parts with additive alpha",
        run: ke_split,
    },
    SuiteInfo {
        id: "plus_plus_inheritance",
        statement: "alpha additive over G[X], G - X and G alpha++ stable implies G[X] alpha++ stable",
        run: plus_plus_inheritance,
    },
    SuiteInfo {
        id: "hamiltonian_order6",
        statement: "order 6 with a Hamiltonian path and alpha = 3 is not alpha++ stable",
        run: hamiltonian_order6,
    },
    SuiteInfo {
        id: "ke_pendant_necessity",
        statement: "alpha++ stable K-E graphs other than K_2 - e, K_3 - e have a pendant perfect matching",
        run: ke_pendant_necessity,
    },
    SuiteInfo {
        id: "pendant_matching_p3",
        statement: "a pendant perfect matching implies alpha+_P3 stable",
        run: pendant_matching_p3,
    },
    SuiteInfo {
        id: "pendant_c4",
        statement: "with a pendant perfect matching, alpha++ stable iff C4-free",
        run: pendant_c4,
    },
    SuiteInfo {
        id: "ke_pendant_c4",
        statement: "a K-E graph is alpha++ stable iff it has a pendant perfect matching and is C4-free",
        run: ke_pendant_c4,
    },
    SuiteInfo {
        id: "bipartite",
        statement: "bipartite: alpha++ stable iff C4-free with a pendant perfect matching iff C4-free and well-covered",
        run: bipartite,
    },
    SuiteInfo { id: "cycle_parity", statement: "C_n is alpha++ stable iff n is odd", run: cycle_parity },
    SuiteInfo {
        id: "trees",
        statement: "trees: well-covered iff pendant perfect matching iff very well-covered iff alpha++ stable",
        run: trees,
    },
    SuiteInfo {
        id: "girth6_panel",
        statement: "girth >= 6, not C7: the five panel assertions agree",
        run: girth6,
    },
    SuiteInfo { id: "matching", statement: "blossom matching is maximum", run: matching },
    SuiteInfo { id: "alpha_two", statement: "alpha = 2, not K_n - e: the four Omega-size criteria", run: alpha_two },
    SuiteInfo {
        id: "triple_criterion",
        statement: "alpha >= 3: alpha+ stable iff alpha+_P3 stable or a unique vertex has the pair-hitting property",
        run: triple_criterion,
    },
    SuiteInfo {
        id: "g0_pairs",
        statement: "core {v}: alpha+_P3 stable iff every pair of G - N[v] is avoided by a maximum stable set of it",
        run: g0_pairs,
    },
    SuiteInfo {
        id: "g0_component",
        statement: "core {v}, not alpha+_P3 stable: a dropping pair lies in one component of G - N[v]",
        run: g0_component,
    },
    SuiteInfo {
        id: "ke_decomposition",
        statement: "K-E iff G = H1 * H2 with a stable side saturated by a matching",
        run: ke_decomposition,
    },
    SuiteInfo {
        id: "report",
        statement: "full reports: fast paths agree with the oracles and witnesses replay",
        run: report,
    },
];

const KN_MINUS_E: &str = "K_n - e: its single maximum stable set is the non-edge, so Omega covers itself \
                          with two common vertices while no two distinct non-edges exist";

fn outcome(id: &str, population: String, mut tally: Tally, exclusion: Option<&str>) -> VerificationOutcome {
    tally.violations.sort();
    VerificationOutcome {
        theorem_id: id.to_string(),
        population,
        checked: tally.checked,
        excluded: tally.excluded,
        exclusion: exclusion.map(str::to_string),
        violations: tally.violations,
    }
}

fn agree(a: bool, b: bool, detail: impl FnOnce() -> String) -> Status {
    if a == b {
        Status::Pass
    } else {
        Status::Fail(detail())
    }
}

fn require(ok: bool, detail: impl FnOnce() -> String) -> Status {
    agree(ok, true, detail)
}

fn labeled_population(cfg: &SuiteConfig, lo: usize, hi: usize) -> String {
    let kind = if cfg.canonical { "non-isomorphic" } else { "labeled" };
    format!("all {kind} graphs, {lo} <= n <= {hi}")
}

fn over_orders<F>(cfg: &SuiteConfig, lo: usize, hi: usize, check: &F) -> Result<Tally>
where
    F: Fn(&Graph) -> Result<Status> + Sync + Send,
{
    let mut tally = Tally::default();
    for n in lo..=hi {
        tally = tally.merge(sweep(&LabeledGraphs { n, canonical: cfg.canonical }, check)?);
    }
    Ok(tally)
}

fn exhaustive<F>(
    cfg: &SuiteConfig,
    id: &str,
    default: usize,
    cap: usize,
    exclusion: Option<&str>,
    check: F,
) -> Result<VerificationOutcome>
where
    F: Fn(&Graph) -> Result<Status> + Sync + Send,
{
    let hi = cfg.order(default, cap);
    let tally = over_orders(cfg, 2, hi, &check)?;
    Ok(outcome(id, labeled_population(cfg, 2, hi), tally, exclusion))
}

fn family(g: &Graph, cfg: &SuiteConfig) -> Result<StableSetFamily> {
    max_stable_sets_with(g, cfg.budget)
}

fn core_size(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "core_size", 6, 8, None, |g| {
        let f = family(g, cfg)?;
        let plus = oracle_alpha_plus(g).stable;
        Ok(agree(plus, f.xi <= 1, || format!("oracle says {plus}, xi = {}", f.xi)))
    })
}

fn zero_core_p3(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "zero_core_p3", 7, 8, None, |g| {
        if family(g, cfg)?.xi != 0 {
            return Ok(Status::Skip);
        }
        let v = oracle_p3_plus(g);
        Ok(require(v.stable, || format!("xi = 0 but {:?} lowers alpha", v.witness)))
    })
}

fn p3_implies_plus(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "p3_implies_plus", 7, 8, None, |g| {
        if is_complete_minus_edge(g) || !oracle_p3_plus(g).stable {
            return Ok(Status::Skip);
        }
        let v = oracle_alpha_plus(g);
        Ok(require(v.stable, || format!("alpha+_P3 stable but {:?} lowers alpha", v.witness)))
    })
}

fn plus_plus_implies_p3(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "plus_plus_implies_p3", 7, 8, None, |g| {
        if !oracle_plus_plus(g).stable {
            return Ok(Status::Skip);
        }
        let v = oracle_p3_plus(g);
        Ok(require(v.stable, || format!("alpha++ stable but {:?} lowers alpha", v.witness)))
    })
}

fn avoidable_pairs(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "avoidable_pairs", 7, 8, None, |g| {
        let f = family(g, cfg)?;
        if core_avoidable_pairs(g, &f).is_some() {
            return Ok(Status::Skip);
        }
        let pp = oracle_plus_plus(g).stable;
        Ok(require(f.xi == 0 && pp, || format!("xi = {}, alpha++ = {pp}", f.xi)))
    })
}

/// Literal cover search is only run up to this order.
const EXHAUSTIVE_COVER_ORDER: usize = 5;

fn cover_p3(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "cover_p3", 6, 8, Some(KN_MINUS_E), |g| {
        let f = family(g, cfg)?;
        let p3 = oracle_p3_plus(g).stable;
        let anchored = cover_criterion_p3(g, &f);
        if p3 != anchored.is_none() {
            return Ok(Status::Fail(format!("oracle says {p3}, anchor cover {anchored:?}")));
        }
        if g.n() > EXHAUSTIVE_COVER_ORDER {
            return Ok(Status::Pass);
        }
        let literal = f.xi >= 1 && exhaustive_two_cover(&f)?.is_some();
        Ok(match (literal == !p3, is_complete_minus_edge(g)) {
            (true, _) => Status::Pass,
            (false, true) => Status::Excluded,
            (false, false) => {
                Status::Fail(format!("oracle says {p3}, literal cover search says {}", !literal))
            }
        })
    })
}

fn cover_plus_plus(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "cover_plus_plus", 6, 8, None, |g| {
        let f = family(g, cfg)?;
        let pp = oracle_plus_plus(g).stable;
        let anchored = cover_criterion_plus_plus(g, &f);
        if pp != anchored.is_none() {
            return Ok(Status::Fail(format!("oracle says {pp}, anchor cover {anchored:?}")));
        }
        if g.n() > EXHAUSTIVE_COVER_ORDER {
            return Ok(Status::Pass);
        }
        let literal = exhaustive_two_cover(&f)?;
        Ok(agree(pp, literal.is_none(), || format!("oracle says {pp}, literal cover {literal:?}")))
    })
}

fn intersects(a: &[VertexSet], b: &[VertexSet]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

fn six_assertions(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    let exclusion =
        "K_n - e for assertion (v): no two disjoint non-edges exist, so (v) holds while (i) fails";
    exhaustive(cfg, "six_assertions", 6, 8, Some(exclusion), |g| {
        let f = family(g, cfg)?;
        let missing = g.complement_edges();
        let plus = oracle_alpha_plus(g).stable;
        let added: Vec<StableSetFamily> = missing
            .iter()
            .map(|&e| max_stable_sets_with(&g.with_edge(e).expect("non-edge"), cfg.budget))
            .collect::<Result<_>>()?;
        let pairs = || (0..missing.len()).flat_map(|i| (i..missing.len()).map(move |j| (i, j)));
        let common = |i: usize, j: usize| -> Vec<VertexSet> {
            added[i].sets.iter().copied().filter(|s| added[j].sets.binary_search(s).is_ok()).collect()
        };

        let a1 = oracle_plus_plus(g).stable;
        let a2 = plus && pairs().all(|(i, j)| intersects(&added[i].sets, &added[j].sets));
        let a3 = pairs().all(|(i, j)| intersects(&f.sets, &common(i, j)));
        let a4 = plus && added.iter().all(|h| h.xi <= 1);
        let a5 = oracle_p3_plus(g).stable
            && !pairs().any(|(i, j)| {
                let (e1, e2) = (missing[i].endpoints(), missing[j].endpoints());
                e1.intersection(e2).is_empty() && f.sets.iter().all(|s| e1.is_subset(*s) || e2.is_subset(*s))
            });
        let a6 = if f.len() <= EXHAUSTIVE_COVER_LIMIT {
            exhaustive_two_cover(&f)?.is_none()
        } else {
            cover_criterion_plus_plus(g, &f).is_none()
        };
        let v = [a1, a2, a3, a4, a5, a6];
        if v.iter().all(|&b| b == a1) {
            return Ok(Status::Pass);
        }
        let others = [a2, a3, a4, a6].iter().all(|&b| b == a1);
        if others && is_complete_minus_edge(g) {
            return Ok(Status::Excluded);
        }
        Ok(Status::Fail(format!("(i)..(vi) = {v:?}")))
    })
}

fn crosses(m: &[Edge], s: VertexSet) -> bool {
    m.iter().all(|e| s.contains(e.u()) != s.contains(e.v()))
}

fn ke_matching_position(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "ke_matching_position", 6, 7, None, |g| {
        if !is_koenig_egervary(g) {
            return Ok(Status::Skip);
        }
        let f = family(g, cfg)?;
        for m in all_maximum_matchings(g) {
            if let Some(s) = f.sets.iter().find(|s| !crosses(&m, **s)) {
                return Ok(Status::Fail(format!("matching {m:?} leaves (S, V - S) for S = {s:?}")));
            }
        }
        Ok(Status::Pass)
    })
}

/// Vertex sets `X` containing vertex 0, `X != V`, split by some maximum
/// matching (no matching edge crosses between `X` and `V - X`).
fn matching_splits(g: &Graph) -> Vec<VertexSet> {
    let matchings = all_maximum_matchings(g);
    let full = g.vertices();
    (1..full.bits())
        .step_by(2)
        .map(VertexSet::from_bits)
        .filter(|&x| matchings.iter().any(|m| m.iter().all(|e| x.contains(e.u()) == x.contains(e.v()))))
        .collect()
}

fn parts(g: &Graph, x: VertexSet) -> (Graph, Graph) {
    let h = g.induced_subgraph(x).expect("nonempty").0;
    let rest = g.remove_vertices(x).expect("proper subset").0;
    (h, rest)
}

fn matching_additivity(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "matching_additivity", 6, 7, None, |g| {
        let mu = matching_number(g);
        for x in matching_splits(g) {
            let (h, rest) = parts(g, x);
            let (a, b) = (matching_number(&h), matching_number(&rest));
            if mu != a + b {
                return Ok(Status::Fail(format!("X = {x:?}: mu = {mu}, parts {a} + {b}")));
            }
        }
        Ok(Status::Pass)
    })
}

fn ke_split(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "ke_split", 6, 7, None, |g| {
        if !is_koenig_egervary(g) {
            return Ok(Status::Skip);
        }
        let a = alpha(g);
        for x in matching_splits(g) {
            let (h, rest) = parts(g, x);
            if !is_koenig_egervary(&h) || !is_koenig_egervary(&rest) {
                return Ok(Status::Fail(format!("X = {x:?}: a part is not K-E")));
            }
            if a != alpha(&h) + alpha(&rest) {
                return Ok(Status::Fail(format!("X = {x:?}: alpha not additive")));
            }
        }
        Ok(Status::Pass)
    })
}

fn plus_plus_inheritance(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "plus_plus_inheritance", 6, 7, None, |g| {
        if !oracle_plus_plus(g).stable {
            return Ok(Status::Skip);
        }
        let a = alpha(g);
        for bits in 1..g.vertices().bits() {
            let x = VertexSet::from_bits(bits);
            let (h, rest) = parts(g, x);
            if a == alpha(&h) + alpha(&rest) {
                let v = oracle_plus_plus(&h);
                if !v.stable {
                    return Ok(Status::Fail(format!("G[{x:?}] broken by {:?}", v.witness)));
                }
            }
        }
        Ok(Status::Pass)
    })
}

fn hamiltonian_order6(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    let check = |g: &Graph| -> Result<Status> {
        if alpha(g) != 3 || !g.has_hamiltonian_path()? {
            return Ok(Status::Skip);
        }
        Ok(require(!oracle_plus_plus(g).stable, || "alpha++ stable".into()))
    };
    let tally = over_orders(cfg, 6, 6, &check)?;
    Ok(outcome("hamiltonian_order6", labeled_population(cfg, 6, 6), tally, None))
}

fn ke_pendant_necessity(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "ke_pendant_necessity", 7, 8, None, |g| {
        if (g.n() <= 3 && is_complete_minus_edge(g)) || !is_koenig_egervary(g) || !oracle_plus_plus(g).stable
        {
            return Ok(Status::Skip);
        }
        Ok(require(pendant_perfect_matching(g).is_some(), || "no pendant perfect matching".into()))
    })
}

/// Largest base graph for the pendant-attached family (2k vertices).
const PENDANT_FAMILY_BASE: usize = 5;

fn with_pendant_family<F>(cfg: &SuiteConfig, id: &str, check: F) -> Result<VerificationOutcome>
where
    F: Fn(&Graph) -> Result<Status> + Sync + Send,
{
    let hi = cfg.order(7, 8);
    let kmax = PENDANT_FAMILY_BASE;
    let mut tally = over_orders(cfg, 2, hi, &check)?;
    for k in 1..=kmax {
        let pop = GraphList { graphs: pendant_perfect_graphs(k)?.collect(), label: String::new() };
        tally = tally.merge(sweep(&pop, &check)?);
    }
    let population = format!(
        "{}, plus every graph with a pendant attached to each vertex of a graph on k <= {kmax} vertices",
        labeled_population(cfg, 2, hi)
    );
    Ok(outcome(id, population, tally, None))
}

fn pendant_matching_p3(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    with_pendant_family(cfg, "pendant_matching_p3", |g| {
        if pendant_perfect_matching(g).is_none() {
            return Ok(Status::Skip);
        }
        let v = oracle_p3_plus(g);
        Ok(require(v.stable, || format!("{:?} lowers alpha", v.witness)))
    })
}

fn pendant_c4(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    with_pendant_family(cfg, "pendant_c4", |g| {
        if pendant_perfect_matching(g).is_none() {
            return Ok(Status::Skip);
        }
        let pp = oracle_plus_plus(g).stable;
        Ok(agree(pp, !g.has_c4(), || format!("alpha++ = {pp}, C4 = {:?}", g.find_c4(Default::default()))))
    })
}

fn ke_pendant_c4(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "ke_pendant_c4", 6, 8, None, |g| {
        if !is_koenig_egervary(g) {
            return Ok(Status::Skip);
        }
        let pp = oracle_plus_plus(g).stable;
        let ppm = pendant_perfect_matching(g).is_some();
        let c4 = g.has_c4();
        Ok(agree(pp, ppm && !c4, || format!("alpha++ = {pp}, pendant matching = {ppm}, C4 = {c4}")))
    })
}

fn bipartite(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    let exclusion =
        "isolated vertices: an edgeless component is well-covered and C4-free but never alpha++ stable";
    exhaustive(cfg, "bipartite", 7, 8, Some(exclusion), |g| {
        if !g.is_bipartite() {
            return Ok(Status::Skip);
        }
        let c4_free = !g.has_c4();
        let v = [
            oracle_plus_plus(g).stable,
            c4_free && pendant_perfect_matching(g).is_some(),
            c4_free && is_well_covered_with(g, cfg.budget)?,
        ];
        Ok(if v[0] == v[1] && v[1] == v[2] {
            Status::Pass
        } else if v[0] == v[1] && g.vertices().iter().any(|u| g.degree(u) == 0) {
            Status::Excluded
        } else {
            Status::Fail(format!("(i), (ii), (iii) = {v:?}"))
        })
    })
}

fn cycle_parity(_cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    let pop = GraphList {
        graphs: (4..=13).map(|n| cycle(n).expect("valid order")).collect(),
        label: String::new(),
    };
    let tally = sweep(&pop, |g| {
        let pp = oracle_plus_plus(g).stable;
        Ok(agree(pp, g.n() % 2 == 1, || format!("C_{} alpha++ = {pp}", g.n())))
    })?;
    Ok(outcome("cycle_parity", "cycles C_n, 4 <= n <= 13".into(), tally, None))
}

fn trees(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    let hi = cfg.order(9, 10);
    let check = |g: &Graph| -> Result<Status> {
        let v = [
            is_well_covered_with(g, cfg.budget)?,
            pendant_perfect_matching(g).is_some(),
            is_very_well_covered_with(g, cfg.budget)?,
            oracle_plus_plus(g).stable,
        ];
        Ok(require(v.iter().all(|&b| b == v[0]), || format!("(i)..(iv) = {v:?}")))
    };
    let mut tally = Tally::default();
    for n in 2..=hi {
        tally = tally.merge(sweep(&Trees { n }, check)?);
    }
    Ok(outcome("trees", format!("all labeled trees, 2 <= n <= {hi}"), tally, None))
}

fn girth6(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    let hi = cfg.order(8, 8);
    let exclusion = "components K1, K2 or C7: K1 is well-covered without a pendant matching, \
                     K2 has two pendant vertices against alpha = 1, C7 is well-covered without one";
    let check = |g: &Graph| -> Result<Status> {
        if is_c7(g) {
            return Ok(Status::Skip);
        }
        let panel = girth6_panel(g, cfg.budget)?;
        Ok(if panel.all_agree() {
            Status::Pass
        } else if !girth6_population_member(g) {
            Status::Excluded
        } else {
            Status::Fail(format!("panel = {:?}", panel.values()))
        })
    };
    let mut tally = Tally::default();
    for n in 2..=hi {
        let pop = MaskList { n, masks: girth_at_least_masks(n, 6)?, label: String::new() };
        tally = tally.merge(sweep(&pop, check)?);
    }
    let population = format!("all labeled graphs of girth >= 6 other than C7, 2 <= n <= {hi}");
    Ok(outcome("girth6_panel", population, tally, Some(exclusion)))
}

/// Maximum matching size by memoized search over vertex subsets, for `n <= 20`.
pub fn brute_force_mu(g: &Graph) -> usize {
    assert!(g.n() <= 20, "exponential memo table");
    fn go(g: &Graph, left: u64, memo: &mut [u8]) -> u8 {
        if left == 0 {
            return 0;
        }
        if memo[left as usize] != u8::MAX {
            return memo[left as usize];
        }
        let v = left.trailing_zeros() as usize;
        let rest = left & !(1 << v);
        let mut best = go(g, rest, memo);
        for w in g.neighbors(v).intersection(VertexSet::from_bits(rest)) {
            best = best.max(1 + go(g, rest & !(1 << w), memo));
        }
        memo[left as usize] = best;
        best
    }
    let mut memo = vec![u8::MAX; 1 << g.n()];
    go(g, g.vertices().bits(), &mut memo) as usize
}

fn check_matching(g: &Graph) -> Status {
    let r = maximum_matching(g);
    let mut used = VertexSet::EMPTY;
    for e in &r.matching {
        if !g.has_edge(e.u(), e.v()) || !used.intersection(e.endpoints()).is_empty() {
            return Status::Fail(format!("invalid matching {:?}", r.matching));
        }
        used = used.union(e.endpoints());
    }
    let brute = brute_force_mu(g);
    if r.mu != r.matching.len() || r.mu != brute {
        return Status::Fail(format!("blossom {} against brute force {brute}", r.mu));
    }
    require(r.perfect == (2 * r.mu == g.n()), || "perfect flag".into())
}

fn matching(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    let hi = cfg.order(7, 8);
    let mut tally = over_orders(cfg, 2, hi, &|g: &Graph| Ok(check_matching(g)))?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let graphs = (0..cfg.random_count)
        .map(|_| {
            let n = rng.gen_range(2..=16);
            let p = rng.gen_range(0.05..0.95);
            random_graph(&mut rng, n, p)
        })
        .collect();
    tally = tally.merge(sweep(&GraphList { graphs, label: String::new() }, |g| Ok(check_matching(g)))?);
    let population = format!(
        "{} and {} random graphs with 2 <= n <= 16 (seed {})",
        labeled_population(cfg, 2, hi),
        cfg.random_count,
        cfg.seed
    );
    Ok(outcome("matching", population, tally, None))
}

/// Complement is a single path on three vertices, i.e. the graph is
/// `P₃(K₁, K_m, K₂)` with `m = n - 3` (`m = 0` gives `K₂ ∪ K₁`).
fn is_p3_substitution(g: &Graph) -> bool {
    let missing = g.complement_edges();
    missing.len() == 2 && missing[0].touches(missing[1])
}

fn alpha_two(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "alpha_two", 7, 8, None, |g| {
        let f = family(g, cfg)?;
        if f.alpha != 2 || is_complete_minus_edge(g) {
            return Ok(Status::Skip);
        }
        let plus = oracle_alpha_plus(g).stable;
        let p3 = oracle_p3_plus(g).stable;
        let pp = oracle_plus_plus(g).stable;
        let k = f.len();
        let structural = is_p3_substitution(g);
        let mut bad = Vec::new();
        if plus != (k >= 2) {
            bad.push("(i)");
        }
        if p3 != (plus && (f.xi == 0 || (f.xi == 1 && k >= 3))) {
            bad.push("(ii)");
        }
        if pp != (k >= 3) {
            bad.push("(iii)");
        }
        if p3 != (plus && !structural) {
            bad.push("(iv)");
        }
        if (4..=6).contains(&g.n()) {
            let target = p3_substitution(g.n() - 3).expect("m >= 1");
            if structural != isomorphic(g, &target) {
                bad.push("substitution recognition");
            }
        }
        Ok(require(bad.is_empty(), || format!("{} fail (|Omega| = {k}, xi = {})", bad.join(", "), f.xi)))
    })
}

/// `x` lies in every member and some pair `y, z` of other vertices meets
/// every member.
fn hits_pairs(f: &StableSetFamily, n: usize, x: usize) -> bool {
    f.core.contains(x)
        && (0..n).filter(|&y| y != x).any(|y| {
            (y + 1..n).filter(|&z| z != x).any(|z| f.sets.iter().all(|s| s.contains(y) || s.contains(z)))
        })
}

fn triple_criterion(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "triple_criterion", 7, 8, None, |g| {
        let f = family(g, cfg)?;
        if f.alpha < 3 {
            return Ok(Status::Skip);
        }
        let plus = oracle_alpha_plus(g).stable;
        let holders = (0..g.n()).filter(|&x| hits_pairs(&f, g.n(), x)).count();
        let rhs = oracle_p3_plus(g).stable || holders == 1;
        Ok(agree(plus, rhs, || format!("alpha+ = {plus}, {holders} vertices with the property")))
    })
}

fn g0_pairs(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "g0_pairs", 7, 8, None, |g| {
        let f = family(g, cfg)?;
        let Some(v) = alpha1_g0_characterization(g, &f, cfg.budget)? else {
            return Ok(Status::Skip);
        };
        let p3 = oracle_p3_plus(g).stable;
        Ok(agree(p3, v.p3_plus, || format!("oracle says {p3}, G0 test says {}", v.p3_plus)))
    })
}

fn g0_component(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "g0_component", 7, 8, None, |g| {
        let f = family(g, cfg)?;
        if f.xi != 1 || oracle_p3_plus(g).stable {
            return Ok(Status::Skip);
        }
        let v = f.core.first().expect("core of size one");
        let (g0, map) = g.remove_vertices(g.closed_neighborhood(v))?;
        let found = g0.connected_components().iter().any(|c| {
            let ids: Vec<usize> = c.iter().map(|i| map[i]).collect();
            ids.iter().enumerate().any(|(i, &x)| {
                ids[i + 1..].iter().any(|&y| {
                    let pair = EdgePair::new(Edge::new(x, v), Edge::new(y, v)).expect("distinct");
                    alpha(&g.add_edges(&pair).expect("non-edges")) < f.alpha
                })
            })
        });
        Ok(require(found, || format!("no dropping pair inside a component of G - N[{v}]")))
    })
}

/// `(S, V - S)` has a matching saturating `V - S`.
fn saturated_split(g: &Graph, s: VertexSet) -> bool {
    let t = g.vertices().difference(s);
    let cross: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|e| s.contains(e.u()) != s.contains(e.v()))
        .map(|e| (e.u(), e.v()))
        .collect();
    let b = Graph::from_edges(g.n(), cross).expect("subgraph");
    matching_number(&b) == t.len()
}

fn ke_decomposition(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "ke_decomposition", 6, 7, None, |g| {
        let ke = is_koenig_egervary(g);
        let f = family(g, cfg)?;
        let n = g.n();
        let maximum = f.sets.iter().any(|&s| 2 * s.len() >= n && saturated_split(g, s));
        let any_stable = (0..1u64 << n)
            .map(VertexSet::from_bits)
            .any(|s| 2 * s.len() >= n && g.is_stable(s) && saturated_split(g, s));
        let split = ke_decompose_with(g, cfg.budget)?;
        let v = [ke, maximum, any_stable, split.is_some()];
        Ok(require(v.iter().all(|&b| b == ke), || {
            format!("K-E, Omega split, stable split, decomposition = {v:?}")
        }))
    })
}

fn report(cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    exhaustive(cfg, "report", 6, 7, None, |g| {
        let r = classify_full(g, cfg.budget)?;
        let mut bad = r.conflicts.clone();
        if r.plus.is_plus() != (r.xi <= 1) {
            bad.push(format!("plus = {:?} with xi = {}", r.plus, r.xi));
        }
        if r.plus == PlusClass::Alpha0Plus && r.xi != 0 {
            bad.push("ALPHA0_PLUS with a nonempty core".into());
        }
        if r.plus_plus && !r.p3_plus {
            bad.push("plus_plus without p3_plus".into());
        }
        for flag in [Flag::Plus, Flag::P3Plus, Flag::PlusPlus] {
            if r.flag(flag) == r.witnesses.contains_key(&flag) {
                bad.push(format!("witness presence for {}", flag.as_str()));
            }
        }
        Ok(require(bad.is_empty(), || bad.join("; ")))
    })
}
