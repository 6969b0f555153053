//! Complexity of Colouring on `(H1, H2)`-free graphs, as far as the known
//! hardness and tractability results decide it.
//!
//! The rule tables are not a dichotomy: pairs matched by neither table are
//! reported as `Unknown`. Both orders of the pair are tried.

use crate::classifier::{Status, Verdict};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::names::graph;
use crate::pattern::{cycle_and_path_probes, is_induced_subgraph, DEFAULT_PROBE_CAP};

/// Induced subgraphs of `2P2` on four vertices.
const SPANNING_2P2: [&str; 3] = ["4P1", "2P1+P2", "2P2"];

/// Facts about one graph used by the colouring rules.
#[derive(Debug, Clone)]
pub struct ColouringProfile {
    vertex_count: usize,
    is_forest: bool,
    has_triangle: bool,
    longest_cycle: usize,
    co_longest_cycle: usize,
    spanning_2p2: bool,
    has: Vec<bool>,
    within: Vec<bool>,
    max_degree_le_1: bool,
    core_within_p5: bool,
    complete_size: Option<usize>,
    edges: usize,
    co_edges: usize,
    is_k15: bool,
    is_k13_3p1: bool,
    is_2p2: bool,
}

const HAS: &[&str] = &["K1_3", "K1_4", "K1_5", "bull", "K3+P1", "C4+P1", "K4", "diamond"];
const HAS_K13: usize = 0;
const HAS_K14: usize = 1;
const HAS_K15: usize = 2;
const HAS_BULL: usize = 3;
const HAS_C3_P1: usize = 4;
const HAS_C4_P1: usize = 5;
const HAS_K4: usize = 6;
const HAS_DIAMOND: usize = 7;

const WITHIN: &[&str] = &[
    "P1+P3", "P4", "K1_3", "bull", "hammer", "P5", "paw", "P1+P4", "co(P1+P4)", "co(P5)",
    "2P1+P2", "co(3P1+P2)", "co(2P1+P3)", "diamond", "3P1+P2", "2P1+P3", "4P1", "C4",
];
const IN_P1_P3: usize = 0;
const IN_P4: usize = 1;
const IN_K13: usize = 2;
const IN_BULL: usize = 3;
const IN_HAMMER: usize = 4;
const IN_P5: usize = 5;
const IN_PAW: usize = 6;
const IN_P1_P4: usize = 7;
const IN_GEM: usize = 8;
const IN_CO_P5: usize = 9;
const IN_2P1_P2: usize = 10;
const IN_CO_3P1_P2: usize = 11;
const IN_CO_2P1_P3: usize = 12;
const IN_DIAMOND: usize = 13;
const IN_3P1_P2: usize = 14;
const IN_2P1_P3: usize = 15;
const IN_4P1: usize = 16;
const IN_C4: usize = 17;

/// Vertex count of the long path in the triangle rule.
const LONG_PATH: usize = 22;

impl ColouringProfile {
    /// Fails with a capacity error when `g` or its complement has a cycle
    /// and more vertices than the induced-cycle probe allows.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        let co = g.complement();
        let probes = cycle_and_path_probes(g, DEFAULT_PROBE_CAP)?;
        let co_probes = cycle_and_path_probes(&co, DEFAULT_PROBE_CAP)?;
        let contains = |x: &str| is_induced_subgraph(&graph(x), g);
        let core: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
        let core_graph = g.induced_subgraph(&core)?;
        let complete = g.edge_count() == n * n.saturating_sub(1) / 2;
        Ok(ColouringProfile {
            vertex_count: n,
            is_forest: g.is_forest(),
            has_triangle: probes.has_triangle,
            longest_cycle: probes.longest_induced_cycle.unwrap_or(0),
            co_longest_cycle: co_probes.longest_induced_cycle.unwrap_or(0),
            spanning_2p2: SPANNING_2P2.iter().any(|x| contains(x)),
            has: HAS.iter().map(|x| contains(x)).collect(),
            within: WITHIN.iter().map(|x| is_induced_subgraph(g, &graph(x))).collect(),
            max_degree_le_1: g.max_degree() <= 1,
            core_within_p5: is_induced_subgraph(&core_graph, &Graph::path(5)),
            complete_size: complete.then_some(n),
            edges: g.edge_count(),
            co_edges: co.edge_count(),
            is_k15: g.is_isomorphic(&graph("K1_5")),
            is_k13_3p1: g.is_isomorphic(&graph("K1_3+3P1")),
            is_2p2: g.is_isomorphic(&graph("2P2")),
        })
    }

    fn contains_long_path(&self, g: &Graph) -> bool {
        self.vertex_count >= LONG_PATH && is_induced_subgraph(&Graph::path(LONG_PATH), g)
    }

    /// `H ⊆ sP2` or `H ⊆ sP1+P5` for some `s`.
    fn sparse_left(&self) -> bool {
        self.max_degree_le_1 || self.core_within_p5
    }
}

struct Side<'a> {
    g: &'a Graph,
    p: &'a ColouringProfile,
}

struct ColRule {
    id: &'static str,
    status: Status,
    citation: &'static str,
    test: fn(&Side, &Side) -> bool,
}

const COLOURING_RULES: &[ColRule] = &[
    ColRule {
        id: "COL-N1",
        status: Status::NpComplete,
        citation: "H1 and H2 both contain a cycle",
        test: |a, b| !a.p.is_forest && !b.p.is_forest,
    },
    ColRule {
        id: "COL-N2",
        status: Status::NpComplete,
        citation: "H1 and H2 both contain K1_3",
        test: |a, b| a.p.has[HAS_K13] && b.p.has[HAS_K13],
    },
    ColRule {
        id: "COL-N3",
        status: Status::NpComplete,
        citation: "H1 and H2 both contain 4P1, 2P1+P2 or 2P2",
        test: |a, b| a.p.spanning_2p2 && b.p.spanning_2p2,
    },
    ColRule {
        id: "COL-N4",
        status: Status::NpComplete,
        citation: "H1 contains the bull and H2 contains K1_4",
        test: |a, b| a.p.has[HAS_BULL] && b.p.has[HAS_K14],
    },
    ColRule {
        id: "COL-N5",
        status: Status::NpComplete,
        citation: "H1 contains K3 and H2 contains K1_5",
        test: |a, b| a.p.has_triangle && b.p.has[HAS_K15],
    },
    ColRule {
        id: "COL-N6",
        status: Status::NpComplete,
        citation: "H1 contains an induced cycle of length at least 4 and H2 contains K1_3",
        test: |a, b| a.p.longest_cycle >= 4 && b.p.has[HAS_K13],
    },
    ColRule {
        id: "COL-N7",
        status: Status::NpComplete,
        citation: "H1 contains K3 and H2 contains P22",
        test: |a, b| a.p.has_triangle && b.p.contains_long_path(b.g),
    },
    ColRule {
        id: "COL-N8",
        status: Status::NpComplete,
        citation: "H1 contains an induced cycle of length at least 5 and H2 contains 4P1, 2P1+P2 or 2P2",
        test: |a, b| a.p.longest_cycle >= 5 && b.p.spanning_2p2,
    },
    ColRule {
        id: "COL-N9",
        status: Status::NpComplete,
        citation: "H1 contains K3+P1, C4+P1 or the complement of a cycle of length at least 6, \
                   and H2 contains 4P1, 2P1+P2 or 2P2",
        test: |a, b| {
            (a.p.has[HAS_C3_P1] || a.p.has[HAS_C4_P1] || a.p.co_longest_cycle >= 6) && b.p.spanning_2p2
        },
    },
    ColRule {
        id: "COL-N10",
        status: Status::NpComplete,
        citation: "H1 contains K4 or the diamond and H2 contains K1_3",
        test: |a, b| (a.p.has[HAS_K4] || a.p.has[HAS_DIAMOND]) && b.p.has[HAS_K13],
    },
    ColRule {
        id: "COL-P1",
        status: Status::Polynomial,
        citation: "H1 or H2 is an induced subgraph of P1+P3 or of P4",
        test: |a, b| [a, b].iter().any(|s| s.p.within[IN_P1_P3] || s.p.within[IN_P4]),
    },
    ColRule {
        id: "COL-P2",
        status: Status::Polynomial,
        citation: "H1 within K1_3 and H2 within the bull, the hammer or P5",
        test: |a, b| a.p.within[IN_K13] && (b.p.within[IN_BULL] || b.p.within[IN_HAMMER] || b.p.within[IN_P5]),
    },
    ColRule {
        id: "COL-P3",
        status: Status::Polynomial,
        citation: "H1 is a forest on at most six vertices other than K1_5, or H1 = K1_3+3P1, and H2 within the paw",
        test: |a, b| {
            ((a.p.is_forest && a.p.vertex_count <= 6 && !a.p.is_k15) || a.p.is_k13_3p1) && b.p.within[IN_PAW]
        },
    },
    ColRule {
        id: "COL-P4",
        status: Status::Polynomial,
        citation: "H1 within sP2 or sP1+P5, and H2 = Kt with t at least 4",
        test: |a, b| a.p.sparse_left() && b.p.complete_size.is_some_and(|t| t >= 4),
    },
    ColRule {
        id: "COL-P5",
        status: Status::Polynomial,
        citation: "H1 within sP2 or sP1+P5, and H2 within the paw",
        test: |a, b| a.p.sparse_left() && b.p.within[IN_PAW],
    },
    ColRule {
        id: "COL-P6",
        status: Status::Polynomial,
        citation: "H1 within P1+P4 or P5, and H2 within co(P1+P4)",
        test: |a, b| (a.p.within[IN_P1_P4] || a.p.within[IN_P5]) && b.p.within[IN_GEM],
    },
    ColRule {
        id: "COL-P7",
        status: Status::Polynomial,
        citation: "H1 within P1+P4 or P5, and H2 within co(P5)",
        test: |a, b| (a.p.within[IN_P1_P4] || a.p.within[IN_P5]) && b.p.within[IN_CO_P5],
    },
    ColRule {
        id: "COL-P8",
        status: Status::Polynomial,
        citation: "H1 within 2P1+P2, and H2 within co(3P1+P2) or co(2P1+P3)",
        test: |a, b| a.p.within[IN_2P1_P2] && (b.p.within[IN_CO_3P1_P2] || b.p.within[IN_CO_2P1_P3]),
    },
    ColRule {
        id: "COL-P9",
        status: Status::Polynomial,
        citation: "H1 within the diamond, and H2 within 3P1+P2 or 2P1+P3",
        test: |a, b| a.p.within[IN_DIAMOND] && (b.p.within[IN_3P1_P2] || b.p.within[IN_2P1_P3]),
    },
    ColRule {
        id: "COL-P10",
        status: Status::Polynomial,
        citation: "H1 within sP1+P2 or H1 = 2P2, and H2 within co(tP1+P2)",
        test: |a, b| (a.p.edges <= 1 || a.p.is_2p2) && b.p.co_edges <= 1,
    },
    ColRule {
        id: "COL-P11",
        status: Status::Polynomial,
        citation: "H1 within 4P1 and H2 within co(2P1+P3)",
        test: |a, b| a.p.within[IN_4P1] && b.p.within[IN_CO_2P1_P3],
    },
    ColRule {
        id: "COL-P12",
        status: Status::Polynomial,
        citation: "H1 within P5, and H2 within C4 or co(2P1+P3)",
        test: |a, b| a.p.within[IN_P5] && (b.p.within[IN_C4] || b.p.within[IN_CO_2P1_P3]),
    },
];

fn first_firing<'r>(
    status: Status,
    g1: &Graph,
    p1: &ColouringProfile,
    g2: &Graph,
    p2: &ColouringProfile,
) -> Option<(&'r ColRule, bool)> {
    let s1 = Side { g: g1, p: p1 };
    let s2 = Side { g: g2, p: p2 };
    COLOURING_RULES
        .iter()
        .filter(|r| r.status == status)
        .find_map(|r| {
            if (r.test)(&s1, &s2) {
                Some((r, false))
            } else if (r.test)(&s2, &s1) {
                Some((r, true))
            } else {
                None
            }
        })
}

/// Classifies with precomputed profiles (`p1` of `g1`, `p2` of `g2`).
pub fn classify_colouring_profiles(
    g1: &Graph,
    p1: &ColouringProfile,
    g2: &Graph,
    p2: &ColouringProfile,
) -> Result<Verdict> {
    let hard = first_firing(Status::NpComplete, g1, p1, g2, p2);
    let easy = first_firing(Status::Polynomial, g1, p1, g2, p2);
    let ordered = |swapped: bool| {
        if swapped {
            vec![g2.clone(), g1.clone()]
        } else {
            vec![g1.clone(), g2.clone()]
        }
    };
    match (hard, easy) {
        (Some((h, _)), Some((e, _))) => Err(Error::Invariant(format!(
            "colouring rules {} and {} both fire",
            h.id, e.id
        ))),
        (Some((rule, swapped)), None) | (None, Some((rule, swapped))) => Ok(Verdict::new(
            rule.status,
            rule.id,
            rule.citation,
            ordered(swapped),
        )),
        (None, None) => Ok(Verdict::new(
            Status::Unknown,
            "COL-NONE",
            "no known hardness or tractability result applies",
            ordered(false),
        )),
    }
}

pub fn classify_colouring(h1: &Graph, h2: &Graph) -> Result<Verdict> {
    let p1 = ColouringProfile::new(h1)?;
    let p2 = ColouringProfile::new(h2)?;
    classify_colouring_profiles(h1, &p1, h2, &p2)
}

/// The pairs for which the rule tables leave the complexity open.
pub const UNKNOWN_CASES: &[(&str, &str)] = &[
    ("K3", "P1+S_1_1_3"),
    ("K3", "S_1_2_3"),
    ("paw", "P1+S_1_1_3"),
    ("paw", "S_1_2_3"),
    ("2P1+P2", "co(P1+P2+P3)"),
    ("2P1+P2", "co(P1+2P2)"),
    ("2P1+P2", "co(P1+P5)"),
    ("diamond", "P1+P2+P3"),
    ("diamond", "P1+2P2"),
    ("diamond", "P1+P5"),
    ("P1+P4", "co(P1+2P2)"),
    ("P1+P4", "co(P2+P3)"),
    ("co(P1+P4)", "P1+2P2"),
    ("co(P1+P4)", "P2+P3"),
    ("2P1+P3", "co(2P1+P3)"),
];

#[cfg(test)]
mod tests {
    use super::*;

    fn col(a: &str, b: &str) -> Verdict {
        classify_colouring(&graph(a), &graph(b)).unwrap()
    }

    #[test]
    fn examples() {
        let v = col("K1_3", "K1_3");
        assert_eq!((v.status, v.rule.as_str()), (Status::NpComplete, "COL-N2"));
        for other in ["K5", "C6", "P7", "co(P6)"] {
            let v = col("P4", other);
            assert_eq!((v.status, v.rule.as_str()), (Status::Polynomial, "COL-P1"), "{other}");
        }
        assert_eq!(col("2P1+P2", "co(P1+2P2)").status, Status::Unknown);
    }

    #[test]
    fn listed_unknown_cases() {
        for (a, b) in UNKNOWN_CASES {
            assert_eq!(col(a, b).status, Status::Unknown, "({a}, {b})");
        }
    }

    #[test]
    fn specific_rules() {
        assert_eq!(col("bull", "K1_4").rule, "COL-N4");
        assert_eq!(col("K1_4", "bull").rule, "COL-N4");
        assert_eq!(col("C5", "4P1").status, Status::NpComplete);
        assert_eq!(col("2P2", "K4").status, Status::Polynomial);
        assert_eq!(col("diamond", "3P1+P2").rule, "COL-P9");
    }
}
