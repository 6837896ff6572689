//! Named graph families and the small graph operations used to build them.
//!
//! Every constructor fixes its vertex order so that outputs are reproducible:
//! hub or clique vertices come first, then matching edges as consecutive
//! pairs, then the vertices of the independent side.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Version of the fixture edge lists below. Bump when any list changes.
pub const FIXTURE_DATA_VERSION: u32 = 1;

/// Fixed small graphs that appear as case-analysis obstacles in the
/// chorded-cycle extremal argument. Each is a triangle `{0, 1, 2}` hung on
/// vertex 0 plus a second structure through vertex 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    H1,
    H2,
    H3,
    F1,
    F2,
    F3,
}

// Drawings place vertex 0 at (0,0) and the triangle partners at (-1,1) and
// (-1,-1); the comments give the drawing coordinates of the other indices.

// 3=(1,1) 4=(2,0) 5=(1,0) 6=(1,-1)
const H1_EDGES: [(usize, usize); 9] = [
    (0, 1),
    (1, 2),
    (0, 2),
    (0, 3),
    (3, 4),
    (4, 5),
    (5, 0),
    (0, 6),
    (6, 4),
];
// 3=(1,1) 4=(2,1) 5=(2,-1) 6=(1,-1)
const H2_EDGES: [(usize, usize); 9] = [
    (0, 1),
    (1, 2),
    (0, 2),
    (0, 3),
    (3, 4),
    (4, 6),
    (6, 0),
    (3, 5),
    (5, 6),
];
// 3=(1,1) 4=(2,0) 5=(1,-1)
const H3_EDGES: [(usize, usize); 7] = [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (5, 0)];
// 3=(1,1) 4=(2,0.5) 5=(2,-0.5) 6=(1,-1)
const F1_EDGES: [(usize, usize); 8] = [
    (0, 1),
    (1, 2),
    (0, 2),
    (0, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 0),
];
// F1 plus 7=(0,1)
const F2_EDGES: [(usize, usize); 9] = [
    (0, 1),
    (1, 2),
    (0, 2),
    (0, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 0),
    (0, 7),
];
// 3=(0.6,1) 4=(1.5,1) 5=(2.1,0) 6=(1.5,-1) 7=(0.6,-1)
const F3_EDGES: [(usize, usize); 9] = [
    (0, 1),
    (1, 2),
    (0, 2),
    (0, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 0),
];

impl Fixture {
    pub const ALL: [Fixture; 6] = [
        Fixture::H1,
        Fixture::H2,
        Fixture::H3,
        Fixture::F1,
        Fixture::F2,
        Fixture::F3,
    ];

    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            Fixture::H1 => &H1_EDGES,
            Fixture::H2 => &H2_EDGES,
            Fixture::H3 => &H3_EDGES,
            Fixture::F1 => &F1_EDGES,
            Fixture::F2 => &F2_EDGES,
            Fixture::F3 => &F3_EDGES,
        }
    }

    pub fn order(self) -> usize {
        self.edges()
            .iter()
            .map(|&(a, b)| a.max(b) + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn graph(self) -> Graph {
        Graph::from_edges(self.order(), self.edges()).expect("fixture edge lists are valid")
    }

    pub fn name(self) -> &'static str {
        match self {
            Fixture::H1 => "H1",
            Fixture::H2 => "H2",
            Fixture::H3 => "H3",
            Fixture::F1 => "F1",
            Fixture::F2 => "F2",
            Fixture::F3 => "F3",
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(name))
    }
}

/// A named graph family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `K_{1,leaves}`.
    Star {
        leaves: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `K_1 ∨ (matching·K_2 ∪ isolated·K_1)`.
    BookStar {
        matching: usize,
        isolated: usize,
    },
    /// `K_clique ∨ independent·K_1`.
    CliqueJoin {
        clique: usize,
        independent: usize,
    },
    /// `K_k ∨ (m/k − (k−1)/2)K_1`, the graph with `m` edges attaining the
    /// k-chorded threshold.
    CliqueJoinForSize {
        k: usize,
        m: usize,
    },
    /// `(K_{k−2s} ∪ (n−k+s)K_1) ∨ K_s`, the extremal connected graphs with no
    /// path on `k+1` vertices.
    Gnks {
        n: usize,
        k: usize,
        s: usize,
    },
    /// `K_1 ∨ (tK_2 ∪ (m−3t)K_1)` with `t = ⌊m/3⌋`: the chorded-cycle-free
    /// extremal graph of size `m` for `4 ≤ m ≤ 8`.
    ChordFreeExtremal {
        m: usize,
    },
    /// `K_4` with one edge subdivided.
    Sk4,
    /// `K_1 ∨ P_4`.
    K1JoinP4,
    Fixture(Fixture),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    InvalidParams {
        family: &'static str,
        reason: String,
    },
    UnknownFamily(String),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::InvalidParams { family, reason } => {
                write!(f, "invalid parameters for {family}: {reason}")
            }
            FamilyError::UnknownFamily(name) => write!(f, "unknown family {name:?}"),
        }
    }
}

impl core::error::Error for FamilyError {}

fn invalid(family: &'static str, reason: &str) -> FamilyError {
    FamilyError::InvalidParams {
        family,
        reason: reason.to_string(),
    }
}

/// Number of independent vertices in `K_k ∨ tK_1` with `m` edges, i.e.
/// `t = m/k − (k−1)/2`, when that is a positive integer.
pub fn clique_join_independent_count(k: usize, m: usize) -> Option<usize> {
    if k == 0 {
        return None;
    }
    // k·t = m − k(k−1)/2
    let clique_edges = k * (k - 1) / 2;
    let rest = m.checked_sub(clique_edges)?;
    if rest == 0 || rest % k != 0 {
        return None;
    }
    Some(rest / k)
}

impl FamilySpec {
    /// Validated constructor for `K_k ∨ (m/k − (k−1)/2)K_1`.
    pub fn clique_join_for_size(k: usize, m: usize) -> Result<FamilySpec, FamilyError> {
        let spec = FamilySpec::CliqueJoinForSize { k, m };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            FamilySpec::CompleteMultipartite { ref parts } if parts.is_empty() => Err(invalid(
                "complete_multipartite",
                "at least one part is required",
            )),
            FamilySpec::CliqueJoinForSize { k, m } => {
                if k < 1 {
                    return Err(invalid("clique_join_size", "k must be positive"));
                }
                clique_join_independent_count(k, m)
                    .map(|_| ())
                    .ok_or_else(|| {
                        invalid(
                            "clique_join_size",
                            "m/k - (k-1)/2 must be a positive integer",
                        )
                    })
            }
            FamilySpec::Gnks { n, k, s } => {
                if !(k > 2 * s && s > 0) {
                    Err(invalid("gnks", "requires k > 2s > 0"))
                } else if n < k {
                    Err(invalid("gnks", "requires n >= k"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::ChordFreeExtremal { m } if m < 1 => {
                Err(invalid("chord_free_extremal", "m must be positive"))
            }
            FamilySpec::Cycle { n } if n < 3 => {
                Err(invalid("cycle", "a cycle needs at least 3 vertices"))
            }
            _ => Ok(()),
        }
    }

    /// Short `name:params` form accepted by the command line.
    pub fn to_compact(&self) -> String {
        use alloc::format;
        match self {
            FamilySpec::Star { leaves } => format!("star:{leaves}"),
            FamilySpec::Complete { n } => format!("complete:{n}"),
            FamilySpec::CompleteBipartite { a, b } => format!("complete_bipartite:{a},{b}"),
            FamilySpec::CompleteMultipartite { parts } => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                format!("complete_multipartite:{}", parts.join(","))
            }
            FamilySpec::Path { n } => format!("path:{n}"),
            FamilySpec::Cycle { n } => format!("cycle:{n}"),
            FamilySpec::BookStar { matching, isolated } => {
                format!("book_star:{matching},{isolated}")
            }
            FamilySpec::CliqueJoin {
                clique,
                independent,
            } => format!("clique_join:{clique},{independent}"),
            FamilySpec::CliqueJoinForSize { k, m } => format!("clique_join_size:{k},{m}"),
            FamilySpec::Gnks { n, k, s } => format!("gnks:{n},{k},{s}"),
            FamilySpec::ChordFreeExtremal { m } => format!("chord_free_extremal:{m}"),
            FamilySpec::Sk4 => "sk4".into(),
            FamilySpec::K1JoinP4 => "k1_join_p4".into(),
            FamilySpec::Fixture(f) => format!("fixture:{}", f.name()),
        }
    }

    /// Parses the `name:params` grammar, e.g. `star:9`, `complete_bipartite:2,5`,
    /// `fixture:F2`, `sk4`.
    pub fn parse(text: &str) -> Result<FamilySpec, FamilyError> {
        let (name, params) = match text.split_once(':') {
            Some((n, p)) => (n.trim(), p.trim()),
            None => (text.trim(), ""),
        };
        let ints = || -> Result<Vec<usize>, FamilyError> {
            if params.is_empty() {
                return Ok(Vec::new());
            }
            params
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| FamilyError::UnknownFamily(text.to_string()))
                })
                .collect()
        };
        let want = |count: usize, family: &'static str| -> Result<Vec<usize>, FamilyError> {
            let v = ints()?;
            if v.len() != count {
                return Err(invalid(family, "wrong number of parameters"));
            }
            Ok(v)
        };
        let spec = match name {
            "star" => FamilySpec::Star {
                leaves: want(1, "star")?[0],
            },
            "complete" => FamilySpec::Complete {
                n: want(1, "complete")?[0],
            },
            "complete_bipartite" => {
                let v = want(2, "complete_bipartite")?;
                FamilySpec::CompleteBipartite { a: v[0], b: v[1] }
            }
            "complete_multipartite" => FamilySpec::CompleteMultipartite { parts: ints()? },
            "path" => FamilySpec::Path {
                n: want(1, "path")?[0],
            },
            "cycle" => FamilySpec::Cycle {
                n: want(1, "cycle")?[0],
            },
            "book_star" => {
                let v = want(2, "book_star")?;
                FamilySpec::BookStar {
                    matching: v[0],
                    isolated: v[1],
                }
            }
            "clique_join" => {
                let v = want(2, "clique_join")?;
                FamilySpec::CliqueJoin {
                    clique: v[0],
                    independent: v[1],
                }
            }
            "clique_join_size" => {
                let v = want(2, "clique_join_size")?;
                FamilySpec::CliqueJoinForSize { k: v[0], m: v[1] }
            }
            "gnks" => {
                let v = want(3, "gnks")?;
                FamilySpec::Gnks {
                    n: v[0],
                    k: v[1],
                    s: v[2],
                }
            }
            "chord_free_extremal" => FamilySpec::ChordFreeExtremal {
                m: want(1, "chord_free_extremal")?[0],
            },
            "sk4" => FamilySpec::Sk4,
            "k1_join_p4" => FamilySpec::K1JoinP4,
            "fixture" => FamilySpec::Fixture(
                Fixture::from_name(params)
                    .ok_or_else(|| FamilyError::UnknownFamily(text.to_string()))?,
            ),
            _ => return Err(FamilyError::UnknownFamily(text.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(i, j);
        }
    }
    g
}

fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

/// Builds the graph named by `spec`.
pub fn family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Star { leaves } => join(&Graph::empty(1), &Graph::empty(leaves)),
        FamilySpec::Complete { n } => complete(n),
        FamilySpec::CompleteBipartite { a, b } => join(&Graph::empty(a), &Graph::empty(b)),
        FamilySpec::CompleteMultipartite { ref parts } => parts
            .iter()
            .fold(Graph::empty(0), |acc, &p| join(&acc, &Graph::empty(p))),
        FamilySpec::Path { n } => path(n),
        FamilySpec::Cycle { n } => {
            let mut g = path(n);
            g.add_edge(0, n - 1);
            g
        }
        FamilySpec::BookStar { matching, isolated } => join(
            &Graph::empty(1),
            &disjoint_union(&copies(matching, &complete(2)), &Graph::empty(isolated)),
        ),
        FamilySpec::CliqueJoin {
            clique,
            independent,
        } => join(&complete(clique), &Graph::empty(independent)),
        FamilySpec::CliqueJoinForSize { k, m } => {
            let t = clique_join_independent_count(k, m).expect("validated");
            join(&complete(k), &Graph::empty(t))
        }
        FamilySpec::Gnks { n, k, s } => join(
            &complete(s),
            &disjoint_union(&complete(k - 2 * s), &Graph::empty(n - k + s)),
        ),
        FamilySpec::ChordFreeExtremal { m } => {
            let t = m / 3;
            family(&FamilySpec::BookStar {
                matching: t,
                isolated: m - 3 * t,
            })?
        }
        FamilySpec::Sk4 => {
            // K4 on 0..4 with edge 23 subdivided by vertex 4.
            Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)])
                .expect("valid")
        }
        FamilySpec::K1JoinP4 => join(&Graph::empty(1), &path(4)),
        FamilySpec::Fixture(f) => f.graph(),
    };
    debug_assert!(g.check_invariants());
    Ok(g)
}

/// `G ∨ H`: vertices of `h` follow those of `g`, and every cross pair is joined.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = disjoint_union(g, h);
    let a = g.order();
    for u in 0..a {
        for v in 0..h.order() {
            out.add_edge(u, a + v);
        }
    }
    out
}

/// `G ∪ H` with the vertices of `h` relabeled after those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let a = g.order();
    let mut out = g.with_extra_vertices(h.order());
    for (u, v) in h.edges() {
        out.add_edge(a + u, a + v);
    }
    out
}

/// `kG`.
pub fn copies(k: usize, g: &Graph) -> Graph {
    (0..k).fold(Graph::empty(0), |acc, _| disjoint_union(&acc, g))
}
