//! Stability classes by definition and by characterization.

mod cover;
mod fast;
mod ke;
mod oracle;
mod report;

pub use cover::{
    cover_criterion_p3, cover_criterion_plus_plus, exhaustive_two_cover, CoverWitness, EXHAUSTIVE_COVER_LIMIT,
};
pub use fast::{
    alpha1_g0_characterization, fast_alpha_plus, fast_p3_pendant, fast_p3_zero_core,
    fast_plus_plus_avoidable, fast_plus_plus_bipartite, fast_plus_plus_ke, fast_plus_plus_pendant,
    girth6_panel, girth6_population_member, is_c7, G0Verdict, Girth6Panel, PlusClass,
};
pub use ke::{is_koenig_egervary, ke_decompose, ke_decompose_with, KEDecomposition};
pub use oracle::{
    is_complete_minus_edge, oracle_alpha_plus, oracle_p3_plus, oracle_plus_plus, Verdict, Witness,
};
pub use report::{classify_full, Flag, StabilityReport};
