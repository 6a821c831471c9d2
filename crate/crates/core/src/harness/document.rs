use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classifier::StabilityReport;
use crate::graph::{to_graph6, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputIdentity {
    pub source: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    #[serde(flatten)]
    pub report: StabilityReport,
}

impl GraphRecord {
    pub fn new(g: &Graph, report: StabilityReport) -> Self {
        GraphRecord { graph6: to_graph6(g), report }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    /// Count per α⁺ class name.
    pub plus: BTreeMap<String, usize>,
    pub p3_plus: usize,
    pub plus_plus: usize,
    pub ke: usize,
    pub conflicts: usize,
}

/// What `classify` emits: one record per input graph, in input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub input: InputIdentity,
    pub graphs: Vec<GraphRecord>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(input: InputIdentity, graphs: Vec<GraphRecord>) -> Self {
        let mut summary = Summary { graphs: graphs.len(), ..Summary::default() };
        for g in &graphs {
            let r = &g.report;
            *summary.plus.entry(r.plus.as_str().to_string()).or_default() += 1;
            summary.p3_plus += r.p3_plus as usize;
            summary.plus_plus += r.plus_plus as usize;
            summary.ke += r.is_ke as usize;
            summary.conflicts += r.conflicts.len();
        }
        ReportDocument { version: env!("CARGO_PKG_VERSION").to_string(), input, graphs, summary }
    }
}
