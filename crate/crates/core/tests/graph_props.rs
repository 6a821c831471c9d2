use proptest::prelude::*;
use stabgraph::graph::{cycle, parse_graph6, to_graph6, Girth};
use stabgraph::harness::{enumerate_graphs, graph_from_mask, labeled_trees, mask_of, pair_count};
use stabgraph::{Graph, VertexSet};

#[test]
fn graph6_round_trip_up_to_seven() {
    for n in 2..=7 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(parse_graph6(to_graph6(&g).as_bytes()).unwrap(), g);
        }
    }
}

/// All 2^28 masks on eight vertices; about a minute on one core.
#[test]
#[ignore]
fn graph6_round_trip_eight() {
    for mask in 0..1u64 << pair_count(8) {
        let g = graph_from_mask(8, mask);
        assert_eq!(mask_of(&parse_graph6(to_graph6(&g).as_bytes()).unwrap()), mask);
    }
}

fn brute_c4(g: &Graph) -> bool {
    let n = g.n();
    let adj = |a, b| g.has_edge(a, b);
    (0..n).any(|a| {
        (0..n).any(|b| {
            (0..n).any(|c| {
                (0..n).any(|d| {
                    let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                    distinct && adj(a, b) && adj(b, c) && adj(c, d) && adj(d, a)
                })
            })
        })
    })
}

#[test]
fn c4_matches_brute_force() {
    for n in 2..=7 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(g.has_c4(), brute_c4(&g), "{}", to_graph6(&g));
        }
    }
}

#[test]
fn girth_of_cycles_and_trees() {
    for n in 3..=12 {
        assert_eq!(cycle(n).unwrap().girth(), Girth::Finite(n));
    }
    for n in 2..=9 {
        assert!(labeled_trees(n).unwrap().all(|t| t.girth() == Girth::Infinite));
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edges_and_complement_partition_pairs(g in arb_graph(20)) {
        let (e, c) = (g.edges(), g.complement_edges());
        prop_assert_eq!(e.len() + c.len(), g.n() * (g.n() - 1) / 2);
        prop_assert!(c.iter().all(|x| !g.has_edge(x.u(), x.v())));
        prop_assert!(e.iter().all(|x| g.has_edge(x.u(), x.v())));
    }

    #[test]
    fn induced_on_everything_is_identity(g in arb_graph(30)) {
        let (h, map) = g.induced_subgraph(g.vertices()).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(map, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn graph6_round_trip_large(g in arb_graph(64)) {
        prop_assert_eq!(parse_graph6(to_graph6(&g).as_bytes()).unwrap(), g);
    }

    #[test]
    fn removal_complements_induction(g in arb_graph(12), bits in any::<u64>()) {
        let x = VertexSet::from_bits(bits).intersection(g.vertices());
        prop_assume!(!x.is_empty() && x != g.vertices());
        let (h, hmap) = g.induced_subgraph(x).unwrap();
        let (r, rmap) = g.remove_vertices(x).unwrap();
        prop_assert_eq!(h.n() + r.n(), g.n());
        for e in h.edges() {
            prop_assert!(g.has_edge(hmap[e.u()], hmap[e.v()]));
        }
        let crossing = g.edges().iter().filter(|e| x.contains(e.u()) != x.contains(e.v())).count();
        prop_assert_eq!(h.edge_count() + r.edge_count() + crossing, g.edge_count());
        prop_assert!(rmap.iter().all(|&v| !x.contains(v)));
    }
}
