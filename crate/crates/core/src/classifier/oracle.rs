//! Definitional tests: add the missing edges and recompute `α`.
//!
//! These never look at the family of maximum stable sets; they are the
//! reference every characterization is checked against.

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, EdgePair, Graph};
use crate::solvers::alpha;

/// Edges whose addition lowers the stability number.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<Edge>", try_from = "Vec<Edge>")]
pub enum Witness {
    Edge(Edge),
    Pair(EdgePair),
}

impl Witness {
    pub fn edges(&self) -> Vec<Edge> {
        match *self {
            Witness::Edge(e) => vec![e],
            Witness::Pair(p) => vec![p.e1, p.e2],
        }
    }

    /// `G` plus the witness edges.
    pub fn apply(&self, g: &Graph) -> crate::Result<Graph> {
        match self {
            Witness::Edge(e) => g.with_edge(*e),
            Witness::Pair(p) => g.add_edges(p),
        }
    }
}

impl From<Witness> for Vec<Edge> {
    fn from(w: Witness) -> Self {
        w.edges()
    }
}

impl TryFrom<Vec<Edge>> for Witness {
    type Error = String;

    fn try_from(v: Vec<Edge>) -> Result<Self, String> {
        match v.as_slice() {
            [e] => Ok(Witness::Edge(*e)),
            [e1, e2] => EdgePair::new(*e1, *e2).map(Witness::Pair).map_err(|e| e.to_string()),
            _ => Err(format!("a witness has one or two edges, got {}", v.len())),
        }
    }
}

/// Outcome of a definitional test.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub stable: bool,
    /// The lexicographically first offending addition when `stable` is false.
    pub witness: Option<Witness>,
}

impl Verdict {
    const STABLE: Verdict = Verdict { stable: true, witness: None };

    fn broken(w: Witness) -> Self {
        Verdict { stable: false, witness: Some(w) }
    }
}

/// Non-edges of `g` with a lazily filled table of which ones lower `α`
/// on their own.
struct Drops<'a> {
    g: &'a Graph,
    a: usize,
    missing: Vec<Edge>,
    known: Vec<Option<bool>>,
}

impl<'a> Drops<'a> {
    fn new(g: &'a Graph, a: usize) -> Self {
        let missing = g.complement_edges();
        let known = vec![None; missing.len()];
        Drops { g, a, missing, known }
    }

    fn get(&mut self, i: usize) -> bool {
        let (g, a, e) = (self.g, self.a, self.missing[i]);
        *self.known[i].get_or_insert_with(|| alpha(&g.with_edge(e).expect("non-edge")) < a)
    }

    /// First pair `(i, j)`, `i < j`, accepted by `admit`, whose joint
    /// addition lowers `α`. A pair containing an edge that lowers `α` on
    /// its own needs no recomputation.
    fn first_pair(&mut self, admit: impl Fn(Edge, Edge) -> bool) -> Option<EdgePair> {
        let k = self.missing.len();
        for i in 0..k {
            for j in i + 1..k {
                let (e1, e2) = (self.missing[i], self.missing[j]);
                if !admit(e1, e2) {
                    continue;
                }
                let pair = EdgePair::new(e1, e2).expect("distinct non-edges");
                if self.get(i) || self.get(j) || alpha(&self.g.add_edges(&pair).expect("non-edges")) < self.a
                {
                    return Some(pair);
                }
            }
        }
        None
    }
}

/// `α(G+e) = α(G)` for every non-edge `e`. Complete graphs pass vacuously.
pub fn oracle_alpha_plus(g: &Graph) -> Verdict {
    let a = alpha(g);
    for e in g.complement_edges() {
        if alpha(&g.with_edge(e).expect("non-edge")) < a {
            return Verdict::broken(Witness::Edge(e));
        }
    }
    Verdict::STABLE
}

/// `α(G+e1+e2) = α(G)` for every two distinct non-edges sharing an endpoint.
pub fn oracle_p3_plus(g: &Graph) -> Verdict {
    let mut drops = Drops::new(g, alpha(g));
    match drops.first_pair(Edge::touches) {
        Some(p) => Verdict::broken(Witness::Pair(p)),
        None => Verdict::STABLE,
    }
}

/// `α(G+e1+e2) = α(G)` for every two distinct non-edges. With a single
/// non-edge the test degenerates to adding that edge alone; complete graphs
/// pass vacuously.
pub fn oracle_plus_plus(g: &Graph) -> Verdict {
    let mut drops = Drops::new(g, alpha(g));
    if drops.missing.len() == 1 {
        let e = drops.missing[0];
        return if drops.get(0) { Verdict::broken(Witness::Edge(e)) } else { Verdict::STABLE };
    }
    match drops.first_pair(|_, _| true) {
        Some(p) => Verdict::broken(Witness::Pair(p)),
        None => Verdict::STABLE,
    }
}

/// Exactly one vertex pair is non-adjacent.
pub fn is_complete_minus_edge(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && g.edge_count() + 1 == n * (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_minus_edge, cycle, Fixture};

    fn pair(a: (usize, usize), b: (usize, usize)) -> Witness {
        Witness::Pair(EdgePair::new(Edge::new(a.0, a.1), Edge::new(b.0, b.1)).unwrap())
    }

    #[test]
    fn alpha_plus_examples() {
        assert!(oracle_alpha_plus(&cycle(4).unwrap()).stable);
        assert!(!oracle_alpha_plus(&complete_minus_edge(4).unwrap()).stable);
        assert!(oracle_alpha_plus(&Fixture::K3PlusE.graph()).stable);
        assert!(oracle_alpha_plus(&complete(4).unwrap()).stable);
        let v = oracle_alpha_plus(&Fixture::K4MinusE.graph());
        assert_eq!(v.witness, Some(Witness::Edge(Edge::new(0, 1))));
    }

    #[test]
    fn p3_plus_examples() {
        for n in 3..=6 {
            assert!(oracle_p3_plus(&complete_minus_edge(n).unwrap()).stable, "K{n}-e");
        }
        let v = oracle_p3_plus(&Fixture::K3PlusE.graph());
        assert!(!v.stable);
        // pendant p = 3 joined to y and z
        assert_eq!(v.witness, Some(pair((1, 3), (2, 3))));
        assert!(oracle_p3_plus(&Fixture::K4PlusE.graph()).stable);
    }

    #[test]
    fn plus_plus_examples() {
        let v = oracle_plus_plus(&cycle(4).unwrap());
        assert_eq!(v.witness, Some(pair((0, 2), (1, 3))));
        assert!(oracle_plus_plus(&cycle(5).unwrap()).stable);
        let f = Fixture::G1;
        let v = oracle_plus_plus(&f.graph());
        let id = |s| f.vertex(s).unwrap();
        assert_eq!(v.witness, Some(pair((id("a"), id("d")), (id("b"), id("c")))));
        assert!(oracle_plus_plus(&complete(5).unwrap()).stable);
        let v = oracle_plus_plus(&complete_minus_edge(4).unwrap());
        assert_eq!(v.witness, Some(Witness::Edge(Edge::new(0, 1))));
    }

    #[test]
    fn witness_serializes_as_edge_list() {
        let w = pair((0, 2), (1, 3));
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, "[[0,2],[1,3]]");
        assert_eq!(serde_json::from_str::<Witness>(&json).unwrap(), w);
        assert!(serde_json::from_str::<Witness>("[]").is_err());
        assert!(serde_json::from_str::<Witness>("[[0,2],[0,2]]").is_err());
    }

    #[test]
    fn complete_minus_edge_detection() {
        assert!(is_complete_minus_edge(&complete_minus_edge(5).unwrap()));
        assert!(is_complete_minus_edge(&Graph::empty(2).unwrap()));
        assert!(!is_complete_minus_edge(&complete(5).unwrap()));
        assert!(!is_complete_minus_edge(&cycle(4).unwrap()));
    }
}
