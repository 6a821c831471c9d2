//! Evaluating a check over a population, sequentially or with rayon.

use crate::error::Result;
use crate::graph::{to_graph6, Graph};

use super::sources::{graph_from_mask, is_canonical, pair_count, prufer_tree, tree_count};
use super::Violation;

/// An indexable family of graphs. `get` may return `None` for indices the
/// population filters out.
pub trait Population: Sync {
    fn len(&self) -> u64;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn get(&self, index: u64) -> Option<Graph>;
    fn describe(&self) -> String;
}

/// Every labeled graph on `n` vertices, optionally one per isomorphism class.
pub struct LabeledGraphs {
    pub n: usize,
    pub canonical: bool,
}

impl Population for LabeledGraphs {
    fn len(&self) -> u64 {
        1 << pair_count(self.n)
    }

    fn get(&self, index: u64) -> Option<Graph> {
        if self.canonical && !is_canonical(self.n, index) {
            return None;
        }
        Some(graph_from_mask(self.n, index))
    }

    fn describe(&self) -> String {
        let kind = if self.canonical { "non-isomorphic" } else { "labeled" };
        format!("all {kind} graphs on {} vertices", self.n)
    }
}

pub struct Trees {
    pub n: usize,
}

impl Population for Trees {
    fn len(&self) -> u64 {
        tree_count(self.n)
    }

    fn get(&self, index: u64) -> Option<Graph> {
        Some(prufer_tree(self.n, index))
    }

    fn describe(&self) -> String {
        format!("all labeled trees on {} vertices", self.n)
    }
}

/// Graphs stored as edge masks on a common vertex count.
pub struct MaskList {
    pub n: usize,
    pub masks: Vec<u64>,
    pub label: String,
}

impl Population for MaskList {
    fn len(&self) -> u64 {
        self.masks.len() as u64
    }

    fn get(&self, index: u64) -> Option<Graph> {
        Some(graph_from_mask(self.n, self.masks[index as usize]))
    }

    fn describe(&self) -> String {
        self.label.clone()
    }
}

pub struct GraphList {
    pub graphs: Vec<Graph>,
    pub label: String,
}

impl Population for GraphList {
    fn len(&self) -> u64 {
        self.graphs.len() as u64
    }

    fn get(&self, index: u64) -> Option<Graph> {
        Some(self.graphs[index as usize].clone())
    }

    fn describe(&self) -> String {
        self.label.clone()
    }
}

/// Result of checking one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    /// Outside the statement's hypothesis.
    Skip,
    /// Inside the hypothesis but in a documented exclusion.
    Excluded,
    Pass,
    Fail(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub excluded: u64,
    pub violations: Vec<Violation>,
}

impl Tally {
    fn add(&mut self, g: &Graph, status: Status) {
        match status {
            Status::Skip => {}
            Status::Excluded => self.excluded += 1,
            Status::Pass => self.checked += 1,
            Status::Fail(detail) => {
                self.checked += 1;
                self.violations.push(Violation { graph6: to_graph6(g), detail });
            }
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.excluded += other.excluded;
        self.violations.extend(other.violations);
        self
    }

    fn finish(mut self) -> Tally {
        self.violations.sort();
        self
    }
}

pub fn sweep_sequential<P, F>(pop: &P, check: F) -> Result<Tally>
where
    P: Population + ?Sized,
    F: Fn(&Graph) -> Result<Status>,
{
    let mut tally = Tally::default();
    for i in 0..pop.len() {
        if let Some(g) = pop.get(i) {
            let status = check(&g)?;
            tally.add(&g, status);
        }
    }
    Ok(tally.finish())
}

#[cfg(feature = "parallel")]
pub fn sweep_parallel<P, F>(pop: &P, check: F) -> Result<Tally>
where
    P: Population + ?Sized,
    F: Fn(&Graph) -> Result<Status> + Sync + Send,
{
    use rayon::prelude::*;
    let tally = (0..pop.len())
        .into_par_iter()
        .try_fold(Tally::default, |mut t, i| {
            if let Some(g) = pop.get(i) {
                let status = check(&g)?;
                t.add(&g, status);
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    Ok(tally.finish())
}

/// Parallel when the `parallel` feature is on.
pub fn sweep<P, F>(pop: &P, check: F) -> Result<Tally>
where
    P: Population + ?Sized,
    F: Fn(&Graph) -> Result<Status> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        sweep_parallel(pop, check)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential(pop, check)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd_edges(g: &Graph) -> Result<Status> {
        Ok(match g.edge_count() {
            0 => Status::Skip,
            1 => Status::Excluded,
            m if m % 2 == 1 => Status::Fail(format!("{m} edges")),
            _ => Status::Pass,
        })
    }

    #[test]
    fn tallies() {
        let pop = LabeledGraphs { n: 4, canonical: false };
        let t = sweep_sequential(&pop, odd_edges).unwrap();
        // 64 masks: 1 empty, 6 single edges, 20 + 6 odd, 15 + 15 + 1 even
        assert_eq!(t.excluded, 6);
        assert_eq!(t.checked, 57);
        assert_eq!(t.violations.len(), 26);
        assert!(t.violations.windows(2).all(|w| w[0] <= w[1]));
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let pop = LabeledGraphs { n: 5, canonical: false };
        assert_eq!(sweep_parallel(&pop, odd_edges).unwrap(), sweep_sequential(&pop, odd_edges).unwrap());
    }

    #[test]
    fn errors_propagate() {
        let pop = Trees { n: 4 };
        let r = sweep(&pop, |_| Err(crate::Error::Budget("test".into())));
        assert!(r.unwrap_err().is_budget());
    }
}
