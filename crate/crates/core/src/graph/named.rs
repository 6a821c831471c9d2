//! Standard families and the fixed example graphs.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Parameter(msg()))
    }
}

/// `C_n`, vertices in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    need((3..=64).contains(&n), || format!("cycle needs 3 <= n <= 64, got {n}"))?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_n` on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    need((2..=64).contains(&n), || format!("path needs 2 <= n <= 64, got {n}"))?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    need((2..=64).contains(&n), || format!("complete needs 2 <= n <= 64, got {n}"))?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_n - e` with the edge `{0,1}` removed.
pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    need((2..=64).contains(&n), || format!("complete_minus_edge needs 2 <= n <= 64, got {n}"))?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&e| e != (0, 1)))
}

pub fn edgeless(n: usize) -> Result<Graph> {
    need((2..=64).contains(&n), || format!("edgeless needs 2 <= n <= 64, got {n}"))?;
    Graph::empty(n)
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Result<Graph> {
    need((1..=63).contains(&k), || format!("star needs 1 <= k <= 63, got {k}"))?;
    Graph::from_edges(k + 1, (1..=k).map(|v| (0, v)))
}

/// `P3(K1, Km, K2)`: vertex `0` is the `K1`, `1..=m` the clique `Km`,
/// `m+1, m+2` the `K2`. Every clique vertex is joined to all three others.
pub fn p3_substitution(m: usize) -> Result<Graph> {
    need((1..=61).contains(&m), || format!("p3_substitution needs 1 <= m <= 61, got {m}"))?;
    let (c1, c2) = (m + 1, m + 2);
    let mut edges = vec![(c1, c2)];
    for b in 1..=m {
        edges.extend((b + 1..=m).map(|b2| (b, b2)));
        edges.extend([(0, b), (b, c1), (b, c2)]);
    }
    Graph::from_edges(m + 3, edges)
}

/// The named example graphs.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// Triangle `x y z` plus pendant `p` on `x`.
    K3PlusE,
    /// `K4` on `u1..u4` plus pendant `p` on `u1`.
    K4PlusE,
    /// `K4` minus one edge.
    K4MinusE,
    /// Two stacked paths joined by two verticals and one diagonal.
    G1,
    /// A triangle with three pendant edges.
    G2,
    /// Triangle `b_i b_k a_k` with pendant `a_i` on `b_i`.
    PendantTriangle,
    /// The 4-cycle `a_i b_i a_k b_k`.
    Square,
    /// The path `a_i b_i a_k b_k a_j b_j`.
    SixPath,
}

impl Fixture {
    pub const ALL: [Fixture; 8] = [
        Fixture::K3PlusE,
        Fixture::K4PlusE,
        Fixture::K4MinusE,
        Fixture::G1,
        Fixture::G2,
        Fixture::PendantTriangle,
        Fixture::Square,
        Fixture::SixPath,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::K3PlusE => "K3_PLUS_E",
            Fixture::K4PlusE => "K4_PLUS_E",
            Fixture::K4MinusE => "K4_MINUS_E",
            Fixture::G1 => "G1",
            Fixture::G2 => "G2",
            Fixture::PendantTriangle => "PENDANT_TRIANGLE",
            Fixture::Square => "SQUARE",
            Fixture::SixPath => "SIX_PATH",
        }
    }

    /// Vertex names, indexed by vertex id.
    pub fn labels(self) -> &'static [&'static str] {
        match self {
            Fixture::K3PlusE => &["x", "y", "z", "p"],
            Fixture::K4PlusE => &["u1", "u2", "u3", "u4", "p"],
            Fixture::K4MinusE => &["v0", "v1", "v2", "v3"],
            Fixture::G1 => &["a", "b2", "b3", "c", "b", "t2", "t3", "d"],
            Fixture::G2 => &["p1", "p2", "p3", "p4", "q2", "q3"],
            Fixture::PendantTriangle | Fixture::Square => &["a_i", "a_k", "b_i", "b_k"],
            Fixture::SixPath => &["a_i", "a_k", "a_j", "b_i", "b_k", "b_j"],
        }
    }

    /// Id of the vertex called `label`.
    pub fn vertex(self, label: &str) -> Option<usize> {
        self.labels().iter().position(|&l| l == label)
    }

    fn solid_edges(self) -> &'static [(usize, usize)] {
        match self {
            Fixture::K3PlusE => &[
                (0, 1), // x-y
                (0, 2), // x-z
                (1, 2), // y-z
                (0, 3), // x-p, the pendant edge
            ],
            Fixture::K4PlusE => &[
                (0, 1), // clique
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4), // u1-p, the pendant edge
            ],
            Fixture::K4MinusE => &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            Fixture::G1 => &[
                (0, 1), // a-b2, bottom path
                (1, 2), // b2-b3
                (2, 3), // b3-c
                (4, 5), // b-t2, top path
                (5, 6), // t2-t3
                (6, 7), // t3-d
                (1, 5), // b2-t2, vertical
                (2, 6), // b3-t3, vertical
                (1, 6), // b2-t3, diagonal
            ],
            Fixture::G2 => &[
                (0, 1), // p1-p2, path
                (1, 2), // p2-p3
                (2, 3), // p3-p4
                (4, 5), // q2-q3
                (1, 4), // p2-q2
                (4, 2), // q2-p3
            ],
            Fixture::PendantTriangle => &[
                (0, 2), // a_i-b_i, matching
                (1, 3), // a_k-b_k, matching
                (1, 2), // a_k-b_i
                (2, 3), // b_i-b_k
            ],
            Fixture::Square => &[
                (0, 2), // a_i-b_i, matching
                (1, 3), // a_k-b_k, matching
                (1, 2), // a_k-b_i
                (0, 3), // a_i-b_k
            ],
            Fixture::SixPath => &[
                (0, 3), // a_i-b_i, matching
                (1, 4), // a_k-b_k, matching
                (2, 5), // a_j-b_j, matching
                (1, 3), // a_k-b_i
                (2, 4), // a_j-b_k
            ],
        }
    }

    /// Optional extra pairs of the three case fixtures; empty for the others.
    pub fn dotted_edges(self) -> &'static [(usize, usize)] {
        match self {
            Fixture::PendantTriangle => &[(0, 1), (0, 3)], // a_i-a_k, a_i-b_k
            Fixture::Square => &[(2, 3), (0, 1)],          // b_i-b_k, a_i-a_k
            Fixture::SixPath => &[(0, 1), (4, 5)],         // a_i-a_k, b_k-b_j
            _ => &[],
        }
    }

    pub fn graph(self) -> Graph {
        Graph::from_edges(self.labels().len(), self.solid_edges().iter().copied())
            .expect("fixture edge lists are valid")
    }

    /// The solid edges plus the dotted ones.
    pub fn graph_with_dotted(self) -> Graph {
        let edges = self.solid_edges().iter().chain(self.dotted_edges()).copied();
        Graph::from_edges(self.labels().len(), edges).expect("fixture edge lists are valid")
    }

    /// Render a vertex set using the fixture's vertex names.
    pub fn describe(self, vertices: impl IntoIterator<Item = usize>) -> String {
        let names: Vec<&str> = vertices.into_iter().map(|v| self.labels()[v]).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_uppercase().replace('-', "_");
        Fixture::ALL.into_iter().find(|f| f.name() == key).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Build a graph by name, e.g. `("cycle", &[5])` or `("G1", &[])`.
pub fn make_named(name: &str, params: &[usize]) -> Result<Graph> {
    let one = || -> Result<usize> {
        match params {
            [k] => Ok(*k),
            _ => Err(Error::Parameter(format!("{name} takes exactly one parameter"))),
        }
    };
    match name.to_ascii_lowercase().as_str() {
        "cycle" => cycle(one()?),
        "path" => path(one()?),
        "complete" => complete(one()?),
        "complete_minus_edge" => complete_minus_edge(one()?),
        "edgeless" => edgeless(one()?),
        "star" => star(one()?),
        "p3_substitution" => p3_substitution(one()?),
        _ => {
            let fixture: Fixture = name.parse()?;
            if !params.is_empty() {
                return Err(Error::Parameter(format!("{name} takes no parameters")));
            }
            Ok(fixture.graph())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(cycle(4).unwrap().edge_count(), 4);
        assert_eq!(path(2).unwrap().edge_count(), 1);
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert_eq!(complete_minus_edge(4).unwrap().edge_count(), 5);
        assert_eq!(complete_minus_edge(2).unwrap().edge_count(), 0);
        assert_eq!(star(3).unwrap().edge_count(), 3);
    }

    #[test]
    fn parameter_ranges() {
        assert!(cycle(2).is_err());
        assert!(path(1).is_err());
        assert!(complete(65).is_err());
        assert!(p3_substitution(0).is_err());
        assert!(make_named("cycle", &[]).is_err());
        assert!(make_named("G1", &[3]).is_err());
        assert!(matches!(make_named("petersen", &[]), Err(Error::UnknownName(_))));
    }

    #[test]
    fn p3_substitution_shape() {
        let g = p3_substitution(1).unwrap();
        assert_eq!(g.n(), 4);
        // a-b, b-c1, b-c2, c1-c2
        assert_eq!(g.edge_count(), 4);
        let g = p3_substitution(3).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.complement_edges(), vec![super::super::Edge::new(0, 4), super::super::Edge::new(0, 5)]);
    }

    #[test]
    fn fixture_counts() {
        assert_eq!(Fixture::G1.graph().edge_count(), 9);
        assert_eq!(Fixture::G2.graph().edge_count(), 6);
        assert_eq!(Fixture::K3PlusE.graph().edge_count(), 4);
        assert_eq!(Fixture::K4PlusE.graph().edge_count(), 7);
        assert_eq!(Fixture::PendantTriangle.graph_with_dotted().edge_count(), 6);
    }

    #[test]
    fn g1_pendants_and_c4() {
        let g = Fixture::G1.graph();
        let names = Fixture::G1.describe(g.pendant_vertices());
        assert_eq!(names, "{a,c,b,d}");
        let [a, b, c, d] = g.find_c4(super::super::C4Mode::Subgraph).unwrap();
        let mut quad = vec![a, b, c, d];
        quad.sort_unstable();
        assert_eq!(Fixture::G1.describe(quad), "{b2,b3,t2,t3}");
    }

    #[test]
    fn names_round_trip() {
        for f in Fixture::ALL {
            assert_eq!(f.name().parse::<Fixture>().unwrap(), f);
            assert_eq!(make_named(f.name(), &[]).unwrap(), f.graph());
        }
        assert_eq!("k4_plus_e".parse::<Fixture>().unwrap(), Fixture::K4PlusE);
    }
}
