//! Exact solvers: stable sets, matchings, well-coveredness.

mod matching;
mod stable;

pub use matching::{
    all_maximum_matchings, matching_number, maximum_matching, pendant_perfect_matching, MatchingResult,
};
pub use stable::{
    alpha, core_avoidable_pairs, for_each_maximal_stable_set, is_very_well_covered,
    is_very_well_covered_with, is_well_covered, is_well_covered_with, max_stable_sets, max_stable_sets_with,
    Budget, StableSetFamily, DEFAULT_BUDGET,
};
