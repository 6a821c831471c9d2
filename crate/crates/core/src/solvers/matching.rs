//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm) and the pendant perfect matching test.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph, VertexSet};

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingResult {
    pub mu: usize,
    /// Lexicographically sorted.
    pub matching: Vec<Edge>,
    pub perfect: bool,
    /// A perfect matching made of pendant edges, when one exists.
    pub pendant_perfect: Option<Vec<Edge>>,
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grow an alternating tree from `root`; returns the free endpoint of an
    /// augmenting path if one is found.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn solve(mut self) -> Vec<usize> {
        for root in 0..self.g.n() {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

/// `μ(G)` with one maximum matching.
pub fn maximum_matching(g: &Graph) -> MatchingResult {
    let mate = Blossom::new(g).solve();
    let mut matching: Vec<Edge> = mate
        .iter()
        .enumerate()
        .filter(|&(v, &m)| m != NONE && v < m)
        .map(|(v, &m)| Edge::new(v, m))
        .collect();
    matching.sort_unstable();
    let mu = matching.len();
    MatchingResult { mu, perfect: 2 * mu == g.n(), matching, pendant_perfect: pendant_perfect_matching(g) }
}

pub fn matching_number(g: &Graph) -> usize {
    Blossom::new(g).solve().iter().filter(|&&m| m != NONE).count() / 2
}

/// A perfect matching consisting of pendant edges.
///
/// Each pendant vertex can only be matched along its own edge, so such a
/// matching exists exactly when the forced edges are pairwise disjoint and
/// cover every vertex.
pub fn pendant_perfect_matching(g: &Graph) -> Option<Vec<Edge>> {
    let (_, edges) = g.pendant_data();
    let mut covered = VertexSet::EMPTY;
    for e in &edges {
        if !covered.intersection(e.endpoints()).is_empty() {
            return None;
        }
        covered = covered.union(e.endpoints());
    }
    (covered == g.vertices()).then_some(edges)
}

/// Every maximum matching, by exhaustive search. Intended for small graphs.
pub fn all_maximum_matchings(g: &Graph) -> Vec<Vec<Edge>> {
    fn go(g: &Graph, left: VertexSet, cur: &mut Vec<Edge>, best: &mut usize, out: &mut Vec<Vec<Edge>>) {
        let Some(v) = left.first() else {
            record(cur, best, out);
            return;
        };
        if cur.len() + left.len() / 2 < *best {
            return;
        }
        let rest = left.without(v);
        for w in g.neighbors(v).intersection(rest) {
            cur.push(Edge::new(v, w));
            go(g, rest.without(w), cur, best, out);
            cur.pop();
        }
        go(g, rest, cur, best, out);
    }
    fn record(cur: &[Edge], best: &mut usize, out: &mut Vec<Vec<Edge>>) {
        if cur.len() > *best {
            *best = cur.len();
            out.clear();
        }
        if cur.len() == *best {
            let mut m = cur.to_vec();
            m.sort_unstable();
            out.push(m);
        }
    }
    let mut out = Vec::new();
    let mut best = 0;
    go(g, g.vertices(), &mut Vec::new(), &mut best, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star, Fixture};

    /// Exhaustive edge-subset search, written independently of the solver.
    fn brute_mu(g: &Graph) -> usize {
        let edges = g.edges();
        assert!(edges.len() <= 20);
        (0u32..1 << edges.len())
            .filter_map(|mask| {
                let mut used = VertexSet::EMPTY;
                for (i, e) in edges.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        if !used.intersection(e.endpoints()).is_empty() {
                            return None;
                        }
                        used = used.union(e.endpoints());
                    }
                }
                Some(mask.count_ones() as usize)
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn odd_cycle() {
        let r = maximum_matching(&cycle(5).unwrap());
        assert_eq!(r.mu, 2);
        assert!(!r.perfect);
    }

    #[test]
    fn g1_pendant_matching() {
        let g = Fixture::G1.graph();
        let r = maximum_matching(&g);
        assert_eq!(r.mu, 4);
        assert!(r.perfect);
        let f = Fixture::G1;
        let v = |s| f.vertex(s).unwrap();
        let mut expected = vec![
            Edge::new(v("a"), v("b2")),
            Edge::new(v("b"), v("t2")),
            Edge::new(v("c"), v("b3")),
            Edge::new(v("d"), v("t3")),
        ];
        expected.sort_unstable();
        assert_eq!(r.pendant_perfect, Some(expected));
    }

    #[test]
    fn k4_plus_e_matching() {
        let g = Fixture::K4PlusE.graph();
        let r = maximum_matching(&g);
        assert_eq!(r.mu, brute_mu(&g));
        assert_eq!(r.mu, 2);
        assert!(!r.perfect);
    }

    #[test]
    fn pendant_perfect_examples() {
        let f = Fixture::G2;
        let v = |s| f.vertex(s).unwrap();
        let mut expected =
            vec![Edge::new(v("p1"), v("p2")), Edge::new(v("q3"), v("q2")), Edge::new(v("p4"), v("p3"))];
        expected.sort_unstable();
        assert_eq!(pendant_perfect_matching(&f.graph()), Some(expected));
        assert_eq!(pendant_perfect_matching(&cycle(6).unwrap()), None);
        assert_eq!(pendant_perfect_matching(&star(3).unwrap()), None);
        assert_eq!(pendant_perfect_matching(&complete(2).unwrap()), Some(vec![Edge::new(0, 1)]));
        assert_eq!(pendant_perfect_matching(&path(4).unwrap()), Some(vec![Edge::new(0, 1), Edge::new(2, 3)]));
        assert_eq!(pendant_perfect_matching(&path(5).unwrap()), None);
    }

    #[test]
    fn blossom_on_petersen_like_graph() {
        // two pentagons joined by a perfect matching
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        edges.extend((0..5).map(|i| (i, i + 5)));
        let g = Graph::from_edges(10, edges).unwrap();
        assert_eq!(maximum_matching(&g).mu, 5);
        assert_eq!(brute_mu(&g), 5);
    }

    #[test]
    fn all_maximum_matchings_of_c4() {
        let ms = all_maximum_matchings(&cycle(4).unwrap());
        assert_eq!(ms.len(), 2);
        assert!(ms.iter().all(|m| m.len() == 2));
        let ms = all_maximum_matchings(&Graph::empty(3).unwrap());
        assert_eq!(ms, vec![Vec::<Edge>::new()]);
    }
}
