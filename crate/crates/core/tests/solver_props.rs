use proptest::prelude::*;
use stabgraph::graph::to_graph6;
use stabgraph::harness::{brute_force_mu, enumerate_graphs, random_graphs};
use stabgraph::solvers::{
    alpha, is_well_covered, matching_number, max_stable_sets, maximum_matching, pendant_perfect_matching,
};
use stabgraph::{Graph, VertexSet};

/// Branch on the lowest vertex: leave it out, or take it and drop its neighbours.
fn alpha_recursive(g: &Graph, left: VertexSet) -> usize {
    let Some(v) = left.first() else { return 0 };
    let out = alpha_recursive(g, left.without(v));
    let within = 1 + alpha_recursive(g, left.difference(g.closed_neighborhood(v)));
    out.max(within)
}

fn is_maximal_stable(g: &Graph, s: VertexSet) -> bool {
    g.is_stable(s) && g.vertices().difference(s).iter().all(|v| !g.is_stable(s.with(v)))
}

#[test]
fn stable_sets_exhaustive() {
    for n in 2..=7 {
        for g in enumerate_graphs(n).unwrap() {
            let f = max_stable_sets(&g).unwrap();
            let a = alpha_recursive(&g, g.vertices());
            assert_eq!((f.alpha, alpha(&g)), (a, a), "{}", to_graph6(&g));
            assert!(f.sets.iter().all(|&s| s.len() == a && is_maximal_stable(&g, s)));
            assert!(f.sets.windows(2).all(|w| w[0] < w[1]));
            assert!(f.xi <= f.alpha);
            let brute = (0..1u64 << n)
                .filter(|&b| VertexSet::from_bits(b).len() == a && g.is_stable(VertexSet::from_bits(b)))
                .count();
            assert_eq!(f.len(), brute);
        }
    }
}

#[test]
fn matching_exhaustive() {
    for n in 2..=7 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(matching_number(&g), brute_force_mu(&g), "{}", to_graph6(&g));
        }
    }
}

/// Every labeled graph on eight vertices; tens of minutes on one core.
#[test]
#[ignore]
fn matching_exhaustive_eight() {
    for g in enumerate_graphs(8).unwrap() {
        assert_eq!(matching_number(&g), brute_force_mu(&g), "{}", to_graph6(&g));
    }
}

#[test]
fn koenig_bound_on_bipartite_graphs() {
    for n in 2..=7 {
        for g in enumerate_graphs(n).unwrap().filter(Graph::is_bipartite) {
            assert_eq!(alpha(&g) + matching_number(&g), n, "{}", to_graph6(&g));
        }
    }
}

#[test]
fn well_covered_by_definition() {
    for n in 2..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let a = alpha(&g);
            let by_def = (1..1u64 << n)
                .map(VertexSet::from_bits)
                .filter(|&s| is_maximal_stable(&g, s))
                .all(|s| s.len() == a);
            assert_eq!(is_well_covered(&g).unwrap(), by_def, "{}", to_graph6(&g));
        }
    }
}

#[test]
fn pendant_matching_is_pendant_and_perfect() {
    for n in 2..=7 {
        for g in enumerate_graphs(n).unwrap() {
            let Some(m) = pendant_perfect_matching(&g) else { continue };
            assert_eq!(2 * m.len(), n);
            let mut covered = VertexSet::EMPTY;
            for e in &m {
                assert!(g.has_edge(e.u(), e.v()));
                assert!(g.degree(e.u()) == 1 || g.degree(e.v()) == 1);
                covered = covered.union(e.endpoints());
            }
            assert_eq!(covered, g.vertices());
        }
    }
}

fn seeded(n: usize) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 0.05f64..0.95)
        .prop_map(move |(seed, p)| random_graphs(n, 1, p, seed).unwrap().next().unwrap())
}

proptest! {
    #[test]
    fn blossom_is_a_valid_maximum_matching(g in (2usize..=18).prop_flat_map(seeded)) {
        let r = maximum_matching(&g);
        let mut used = VertexSet::EMPTY;
        for e in &r.matching {
            prop_assert!(g.has_edge(e.u(), e.v()));
            prop_assert!(used.intersection(e.endpoints()).is_empty());
            used = used.union(e.endpoints());
        }
        prop_assert_eq!(r.mu, brute_force_mu(&g));
    }

    #[test]
    fn alpha_matches_recursion(g in (2usize..=24).prop_flat_map(seeded)) {
        prop_assert_eq!(alpha(&g), alpha_recursive(&g, g.vertices()));
    }

    #[test]
    fn alpha_plus_matching_bounds(g in (2usize..=30).prop_flat_map(seeded)) {
        // A stable set takes at most one end of each matching edge.
        let (a, mu) = (alpha(&g), matching_number(&g));
        prop_assert!(a + mu <= g.n());
        prop_assert!(a >= g.n() - 2 * mu);
    }
}
