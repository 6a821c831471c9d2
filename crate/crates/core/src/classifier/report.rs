use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::{alpha, matching_number, max_stable_sets_with, Budget};

use super::cover::{cover_criterion_p3, cover_criterion_plus_plus};
use super::fast::{
    alpha1_g0_characterization, fast_alpha_plus, fast_p3_pendant, fast_p3_zero_core,
    fast_plus_plus_avoidable, fast_plus_plus_bipartite, fast_plus_plus_ke, fast_plus_plus_pendant, PlusClass,
};
use super::oracle::{oracle_alpha_plus, oracle_p3_plus, oracle_plus_plus, Witness};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Plus,
    P3Plus,
    PlusPlus,
}

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Flag::Plus => "plus",
            Flag::P3Plus => "p3_plus",
            Flag::PlusPlus => "plus_plus",
        }
    }
}

/// Every classification flag of one graph. Flags come from the oracles;
/// characterizations that apply are recorded under `fast_paths` and any
/// disagreement with the oracle lands in `conflicts`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub n: usize,
    pub alpha: usize,
    pub mu: usize,
    pub xi: usize,
    pub omega_count: usize,
    #[serde(rename = "ke")]
    pub is_ke: bool,
    pub plus: PlusClass,
    pub p3_plus: bool,
    pub plus_plus: bool,
    pub witnesses: BTreeMap<Flag, Witness>,
    pub fast_paths: BTreeMap<Flag, Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conflicts: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl StabilityReport {
    pub fn flag(&self, f: Flag) -> bool {
        match f {
            Flag::Plus => self.plus.is_plus(),
            Flag::P3Plus => self.p3_plus,
            Flag::PlusPlus => self.plus_plus,
        }
    }
}

struct Checks {
    fast_paths: BTreeMap<Flag, Vec<String>>,
    conflicts: Vec<String>,
}

impl Checks {
    fn record(&mut self, flag: Flag, name: &str, verdict: Option<bool>, oracle: bool) {
        let Some(v) = verdict else { return };
        self.fast_paths.entry(flag).or_default().push(name.to_string());
        if v != oracle {
            self.conflicts.push(format!("{}: {name} says {v}, oracle says {oracle}", flag.as_str()));
        }
    }
}

fn replay(g: &Graph, a: usize, w: &Witness) -> Result<()> {
    let h = w.apply(g)?;
    if alpha(&h) < a {
        Ok(())
    } else {
        Err(Error::Invariant(format!("witness {:?} does not lower alpha", w.edges())))
    }
}

pub fn classify_full(g: &Graph, budget: Budget) -> Result<StabilityReport> {
    let family = max_stable_sets_with(g, budget)?;
    let a = family.alpha;
    let mu = matching_number(g);

    let plus_v = oracle_alpha_plus(g);
    let p3_v = oracle_p3_plus(g);
    let pp_v = oracle_plus_plus(g);

    let mut checks = Checks { fast_paths: BTreeMap::new(), conflicts: Vec::new() };
    let mut notes = Vec::new();

    let fast_plus = fast_alpha_plus(&family);
    checks.record(Flag::Plus, "core_size", Some(fast_plus.is_plus()), plus_v.stable);
    let plus = match (plus_v.stable, family.xi) {
        (false, _) => PlusClass::NotPlus,
        (true, 0) => PlusClass::Alpha0Plus,
        (true, _) => PlusClass::Alpha1Plus,
    };

    checks.record(Flag::P3Plus, "core_cover", Some(cover_criterion_p3(g, &family).is_none()), p3_v.stable);
    checks.record(Flag::P3Plus, "zero_core", fast_p3_zero_core(&family), p3_v.stable);
    checks.record(Flag::P3Plus, "pendant_matching", fast_p3_pendant(g), p3_v.stable);
    if let Some(g0) = alpha1_g0_characterization(g, &family, budget)? {
        checks.record(Flag::P3Plus, "g0_avoidable_pairs", Some(g0.p3_plus), p3_v.stable);
        if g0.empty_g0 {
            notes.push(format!("G - N[{}] is empty; the G0 test holds vacuously", g0.v));
        }
    }

    checks.record(
        Flag::PlusPlus,
        "pair_cover",
        Some(cover_criterion_plus_plus(g, &family).is_none()),
        pp_v.stable,
    );
    checks.record(Flag::PlusPlus, "avoidable_pairs", fast_plus_plus_avoidable(g, &family), pp_v.stable);
    checks.record(Flag::PlusPlus, "ke_pendant_c4", fast_plus_plus_ke(g), pp_v.stable);
    checks.record(Flag::PlusPlus, "pendant_c4", fast_plus_plus_pendant(g), pp_v.stable);
    checks.record(
        Flag::PlusPlus,
        "bipartite_well_covered_c4",
        fast_plus_plus_bipartite(g, budget)?,
        pp_v.stable,
    );

    let mut witnesses = BTreeMap::new();
    for (flag, v) in [(Flag::Plus, plus_v), (Flag::P3Plus, p3_v), (Flag::PlusPlus, pp_v)] {
        if let Some(w) = v.witness {
            replay(g, a, &w)?;
            witnesses.insert(flag, w);
        }
    }
    if pp_v.stable && !p3_v.stable {
        checks.conflicts.push("plus_plus holds but p3_plus fails".into());
    }
    if g.is_complete() {
        notes.push("complete graph: every flag holds vacuously".into());
    }

    Ok(StabilityReport {
        n: g.n(),
        alpha: a,
        mu,
        xi: family.xi,
        omega_count: family.len(),
        is_ke: a + mu == g.n(),
        plus,
        p3_plus: p3_v.stable,
        plus_plus: pp_v.stable,
        witnesses,
        fast_paths: checks.fast_paths,
        conflicts: checks.conflicts,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, Edge, EdgePair, Fixture};

    fn report(g: &Graph) -> StabilityReport {
        classify_full(g, Budget::default()).unwrap()
    }

    #[test]
    fn c4_report() {
        let r = report(&cycle(4).unwrap());
        assert_eq!((r.alpha, r.mu, r.is_ke), (2, 2, true));
        assert_eq!(r.plus, PlusClass::Alpha0Plus);
        assert!(r.p3_plus && !r.plus_plus);
        assert!(r.conflicts.is_empty(), "{:?}", r.conflicts);
        assert!(r.witnesses.contains_key(&Flag::PlusPlus));
    }

    #[test]
    fn k4_plus_e_report() {
        let r = report(&Fixture::K4PlusE.graph());
        assert_eq!(r.alpha, 2);
        assert!(!r.is_ke);
        assert_eq!(r.plus, PlusClass::Alpha1Plus);
        assert!(r.p3_plus && r.plus_plus);
        assert!(r.witnesses.is_empty());
        assert!(r.conflicts.is_empty(), "{:?}", r.conflicts);
    }

    #[test]
    fn g1_report() {
        let f = Fixture::G1;
        let r = report(&f.graph());
        assert!(!r.plus_plus);
        let id = |s| f.vertex(s).unwrap();
        let w = EdgePair::new(Edge::new(id("a"), id("d")), Edge::new(id("b"), id("c"))).unwrap();
        assert_eq!(r.witnesses[&Flag::PlusPlus], Witness::Pair(w));
        assert!(r.fast_paths[&Flag::PlusPlus].contains(&"ke_pendant_c4".to_string()));
        assert!(r.conflicts.is_empty(), "{:?}", r.conflicts);
    }

    #[test]
    fn odd_cycle_is_plus_plus() {
        let r = report(&cycle(7).unwrap());
        assert!(r.plus_plus);
        assert!(r.conflicts.is_empty());
    }

    #[test]
    fn report_serializes() {
        let r = report(&cycle(4).unwrap());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["plus"], "ALPHA0_PLUS");
        assert_eq!(v["ke"], true);
        assert_eq!(v["witnesses"]["plus_plus"], serde_json::json!([[0, 2], [1, 3]]));
        let back: StabilityReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
