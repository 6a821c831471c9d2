//! Machine verification of the characterizations over graph populations,
//! plus the report document written by the command-line tool.

mod document;
mod sources;
mod suites;
mod sweep;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::solvers::Budget;

pub use document::{GraphRecord, InputIdentity, ReportDocument, Summary};
pub use sources::{
    canonical_mask, enumerate_canonical, enumerate_graphs, girth_at_least_masks, graph_from_mask,
    is_canonical, isomorphic, labeled_trees, mask_of, pair_count, pair_index, pendant_perfect_graphs,
    prufer_tree, random_graphs, tree_count, RandomGraphs, CANONICAL_LIMIT, ENUMERATION_LIMIT,
};
pub use suites::{brute_force_mu, SuiteInfo, SUITES};
#[cfg(feature = "parallel")]
pub use sweep::sweep_parallel;
pub use sweep::{
    sweep, sweep_sequential, GraphList, LabeledGraphs, MaskList, Population, Status, Tally, Trees,
};

/// One graph on which a statement failed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    pub theorem_id: String,
    pub population: String,
    /// Graphs inside the hypothesis that were checked.
    pub checked: u64,
    /// Graphs set aside by a documented exclusion.
    #[serde(default)]
    pub excluded: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exclusion: Option<String>,
    /// Sorted by graph6 string.
    pub violations: Vec<Violation>,
}

impl VerificationOutcome {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Knobs shared by every suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Overrides each suite's default order bound (clamped to its cap).
    pub nmax: Option<usize>,
    pub seed: u64,
    /// Sweep one graph per isomorphism class where the suite enumerates
    /// all graphs of an order.
    pub canonical: bool,
    pub budget: Budget,
    /// Random graphs added to the matching suite.
    pub random_count: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { nmax: None, seed: 0, canonical: false, budget: Budget::default(), random_count: 10_000 }
    }
}

impl SuiteConfig {
    fn order(&self, default: usize, cap: usize) -> usize {
        self.nmax.unwrap_or(default).min(cap)
    }
}

pub fn suite(id: &str) -> Option<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.id == id)
}

/// Resolves a comma separated list of suite ids, or `all`.
pub fn select_suites(ids: &str) -> Result<Vec<&'static SuiteInfo>> {
    if ids.trim() == "all" {
        return Ok(SUITES.iter().collect());
    }
    ids.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|id| suite(id).ok_or_else(|| Error::Parameter(format!("unknown suite `{id}`"))))
        .collect()
}

pub fn run_suite(info: &SuiteInfo, cfg: &SuiteConfig) -> Result<VerificationOutcome> {
    (info.run)(cfg)
}
