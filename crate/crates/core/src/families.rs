//! Named graphs and parametrised families.
//!
//! Figure graphs are transcribed with their printed 1-based labels; label
//! `i` becomes vertex `i - 1`. For `K_TRIANGLE(l)` the clique vertex `i`
//! becomes `i - 1` and the primed vertex `i'` becomes `l + i - 1`. Each
//! figure carries its vertex count, edge count and degree sequence, which
//! are re-checked whenever it is built.

use std::fmt;
use std::str::FromStr;

use crate::error::FamilyError;
use crate::graph::{Graph, MAX_VERTICES};
use crate::orientation::OrientedGraph;
use crate::word::Word;

struct Figure {
    n: usize,
    edges: &'static [(usize, usize)],
    degrees: &'static [usize],
}

impl Figure {
    fn build(&self) -> Graph {
        let g = from_one_based_edges(self.n, self.edges);
        assert_eq!(g.edge_count(), self.edges.len(), "repeated edge in figure transcription");
        assert_eq!(g.degree_sequence(), self.degrees, "figure degree sequence drifted");
        g
    }
}

fn from_one_based_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
    let shifted: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edges(n, &shifted).expect("figure edges are in range")
}

const T1: Figure = Figure {
    n: 7,
    edges: &[(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (2, 7), (3, 5), (3, 6), (3, 7), (4, 5), (5, 6), (5, 7)],
    degrees: &[5, 5, 5, 3, 2, 2, 2],
};

const T2: Figure = Figure {
    n: 7,
    edges: &[(1, 2), (1, 3), (1, 4), (1, 7), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5), (4, 6)],
    degrees: &[6, 4, 4, 4, 2, 2, 2],
};

const T3: Figure = Figure {
    n: 7,
    edges: &[
        (1, 2), (1, 3), (1, 4), (1, 6), (1, 7), (2, 3), (2, 4), (2, 5),
        (2, 6), (2, 7), (3, 4), (3, 5), (3, 6), (4, 5), (4, 7),
    ],
    degrees: &[6, 5, 5, 5, 3, 3, 3],
};

/// Second drawing of `T3` in the same figure, nodes renumbered from 1.
const T3_RIGHT: Figure = Figure {
    n: 7,
    edges: &[
        (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5),
        (2, 6), (2, 7), (3, 4), (3, 6), (3, 7), (4, 5), (4, 7),
    ],
    degrees: &[6, 5, 5, 5, 3, 3, 3],
};

const T4: Figure = Figure {
    n: 8,
    edges: &[
        (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (2, 3),
        (2, 4), (2, 5), (2, 6), (3, 4), (3, 6), (3, 8), (4, 7), (4, 8),
    ],
    degrees: &[7, 5, 5, 5, 3, 3, 2, 2],
};

const B1: Figure = Figure {
    n: 6,
    edges: &[(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 6)],
    degrees: &[3, 3, 3, 1, 1, 1],
};

const B2: Figure = Figure {
    n: 6,
    edges: &[(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 5), (3, 6), (4, 5), (5, 6)],
    degrees: &[4, 4, 4, 2, 2, 2],
};

const B3: Figure = Figure {
    n: 7,
    edges: &[(1, 2), (1, 4), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5), (4, 6), (5, 7)],
    degrees: &[4, 4, 4, 2, 2, 1, 1],
};

const CO_T2: Figure = Figure {
    n: 7,
    edges: &[
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (2, 7), (3, 4),
        (3, 5), (3, 6), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
    ],
    degrees: &[5, 5, 5, 4, 4, 4, 3],
};

/// The straight line drawn from 4 to 5 passes through 2 and 3, so it is
/// read as the three edges 4-2, 2-3, 3-5.
const FIG4_RIGHT: Figure = Figure {
    n: 7,
    edges: &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 6), (3, 5), (3, 6), (4, 7), (5, 7), (6, 7)],
    degrees: &[4, 4, 4, 3, 3, 3, 3],
};

const FIG2_EXAMPLE: Figure = Figure { n: 4, edges: &[(1, 2), (2, 3), (2, 4), (3, 4)], degrees: &[3, 2, 2, 1] };

/// The configuration on a 3-clique with three degree-2 vertices and a
/// degree-3 vertex, left drawing.
const MAX3: Figure = Figure {
    n: 6,
    edges: &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6), (4, 6)],
    degrees: &[5, 5, 4, 4, 3, 3],
};

const MAX3_RIGHT: Figure = Figure {
    n: 6,
    edges: &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 6)],
    degrees: &[5, 5, 4, 4, 3, 3],
};

/// Clique 1234 with independent vertices 5..10.
const M: Figure = Figure {
    n: 10,
    edges: &[
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        (5, 1), (5, 2), (5, 3), (6, 1), (6, 3), (6, 4),
        (7, 1), (7, 2), (8, 2), (8, 3), (9, 3), (9, 4), (10, 1), (10, 4),
    ],
    degrees: &[7, 7, 6, 6, 3, 3, 2, 2, 2, 2],
};

/// Drawing labels of `M` removed to obtain `M1`..`M6`. `M1` drops vertex 7,
/// as drawn; dropping vertex 3 would lose the induced `T4`.
fn m_deleted(tag: &FamilyId) -> Option<&'static [usize]> {
    Some(match tag {
        FamilyId::M => &[],
        FamilyId::M1 => &[7],
        FamilyId::M2 => &[5],
        FamilyId::M3 => &[7, 5],
        FamilyId::M4 => &[7, 6],
        FamilyId::M5 => &[7, 8],
        FamilyId::M6 => &[7, 9],
        _ => return None,
    })
}

/// Semi-transitive orientations drawn for the representable `M` subgraphs,
/// in drawing labels. The drawing for `M2` directs 10 -> 1 and 10 -> 4,
/// which makes 10 -> 1 -> 2 -> 4 a shortcut (10 and 2 are not adjacent);
/// here vertex 10 sits on 1 -> 10 -> 4 instead.
fn m_orientation_arcs(tag: &FamilyId) -> Option<&'static [(usize, usize)]> {
    Some(match tag {
        FamilyId::M2 => &[
            (1, 2), (1, 3), (1, 4), (1, 6), (1, 7), (2, 3), (2, 4), (2, 7), (2, 8),
            (3, 4), (3, 8), (3, 9), (4, 9), (6, 3), (6, 4), (1, 10), (10, 4),
        ],
        FamilyId::M3 => &[
            (1, 2), (1, 3), (1, 4), (1, 6), (1, 10), (2, 3), (2, 4), (2, 8),
            (3, 4), (3, 8), (3, 9), (4, 9), (6, 3), (6, 4), (10, 4),
        ],
        FamilyId::M4 => &[
            (1, 2), (1, 3), (1, 4), (1, 5), (1, 10), (2, 3), (2, 4), (2, 5),
            (2, 8), (3, 4), (3, 5), (3, 8), (3, 9), (4, 9), (10, 4),
        ],
        FamilyId::M6 => &[
            (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 10), (2, 3), (2, 8),
            (3, 8), (4, 2), (4, 3), (4, 6), (4, 10), (5, 2), (5, 3), (6, 3),
        ],
        _ => return None,
    })
}

/// `K_l` on `0..l` plus vertex `l + i` adjacent to `i` and `(i + 1) mod l`.
pub fn k_triangle(l: usize) -> Result<Graph, FamilyError> {
    if l < 3 || 2 * l > MAX_VERTICES {
        return Err(FamilyError::Parameter(format!("K_TRIANGLE needs 3 <= l <= 32, got {l}")));
    }
    k_ell_k(l, 2)
}

/// Clique `i -> j` for `i < j`; each primed vertex is a sink of its two
/// clique neighbours except the last, which sits on `0 -> (2l-1) -> l-1`.
pub fn k_triangle_canonical_orientation(l: usize) -> Result<OrientedGraph, FamilyError> {
    let g = k_triangle(l)?;
    let mut arcs = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            arcs.push((i, j));
        }
    }
    for i in 0..l - 1 {
        arcs.push((i, l + i));
        arcs.push((i + 1, l + i));
    }
    arcs.push((0, 2 * l - 1));
    arcs.push((2 * l - 1, l - 1));
    Ok(OrientedGraph::from_arcs(&g, &arcs).expect("arcs cover the edges once"))
}

/// The 2-uniform word representing `K_TRIANGLE(l)` for odd `l`: blocks
/// `i' i (i+1) i'` for odd `i < l`, then `l' l 1 l'`, then the blocks for
/// even `i`, written in drawing labels and mapped as described above.
pub fn k_triangle_odd_word(l: usize) -> Result<Word, FamilyError> {
    k_triangle(l)?;
    if l.is_multiple_of(2) {
        return Err(FamilyError::Parameter(format!("the explicit word needs odd l, got {l}")));
    }
    let clique = |i: usize| i - 1;
    let primed = |i: usize| l + i - 1;
    let block = |i: usize, next: usize| [primed(i), clique(i), clique(next), primed(i)];
    let mut letters = Vec::with_capacity(4 * l);
    for i in (1..l - 1).step_by(2) {
        letters.extend(block(i, i + 1));
    }
    letters.extend(block(l, 1));
    for i in (2..l).step_by(2) {
        letters.extend(block(i, i + 1));
    }
    Ok(Word::new(letters))
}

/// `K_TRIANGLE(l - 1)` plus the apex `2l - 2` adjacent to its clique.
pub fn a_graph(l: usize) -> Result<Graph, FamilyError> {
    if l < 4 {
        return Err(FamilyError::Parameter(format!("A_GRAPH needs l >= 4, got {l}")));
    }
    let mut g = k_triangle(l - 1)?;
    let clique: Vec<usize> = (0..l - 1).collect();
    g.add_vertex(&clique);
    Ok(g)
}

/// `K_l` on `0..l` plus vertex `l + i` adjacent to the `k` circularly
/// consecutive clique vertices starting at `i`.
pub fn k_ell_k(l: usize, k: usize) -> Result<Graph, FamilyError> {
    if k == 0 || l + 1 < 2 * k || l <= k || 2 * l > MAX_VERTICES {
        return Err(FamilyError::Parameter(format!(
            "K_L_K needs k >= 1, l >= 2k - 1, l > k and l <= 32, got l={l}, k={k}"
        )));
    }
    let mut g = Graph::complete(l);
    for i in 0..l {
        let nbrs: Vec<usize> = (0..k).map(|j| (i + j) % l).collect();
        g.add_vertex(&nbrs);
    }
    Ok(g)
}

/// Clique path `0 -> 1 -> ... -> l-1`. Intervals that do not wrap around
/// make their vertex a sink; a wrapping interval `{i..l-1} u {0..j}`
/// receives from `0..=j` and sends to `i..l`.
pub fn k_ell_k_orientation(l: usize, k: usize) -> Result<OrientedGraph, FamilyError> {
    let g = k_ell_k(l, k)?;
    let mut arcs: Vec<(usize, usize)> = g.edges().into_iter().filter(|&(_, v)| v < l).collect();
    for i in 0..l {
        let x = l + i;
        for j in 0..k {
            let c = (i + j) % l;
            if i + k <= l || c < i {
                arcs.push((c, x));
            } else {
                arcs.push((x, c));
            }
        }
    }
    Ok(OrientedGraph::from_arcs(&g, &arcs).expect("arcs cover the edges once"))
}

/// `B1`, `B2`, `B3`: the split graphs that are minimal non-comparability
/// graphs among split graphs.
pub fn forbidden_split_comparability() -> [Graph; 3] {
    [B1.build(), B2.build(), B3.build()]
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    KTriangle(usize),
    AGraph(usize),
    KLK(usize, usize),
    T1,
    T2,
    T3,
    T4,
    W5,
    B1,
    B2,
    B3,
    CoT2,
    Fig4Right,
    Fig2Example,
    M,
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
    Max3,
    Cycle(usize),
    TwoK2,
    Complete(usize),
    Empty(usize),
}

impl FamilyId {
    /// Every tag that takes no parameter.
    pub const FIXED: [FamilyId; 22] = [
        FamilyId::T1,
        FamilyId::T2,
        FamilyId::T3,
        FamilyId::T4,
        FamilyId::W5,
        FamilyId::B1,
        FamilyId::B2,
        FamilyId::B3,
        FamilyId::CoT2,
        FamilyId::Fig4Right,
        FamilyId::Fig2Example,
        FamilyId::M,
        FamilyId::M1,
        FamilyId::M2,
        FamilyId::M3,
        FamilyId::M4,
        FamilyId::M5,
        FamilyId::M6,
        FamilyId::Max3,
        FamilyId::TwoK2,
        FamilyId::Cycle(5),
        FamilyId::Complete(4),
    ];

    /// Build from a tag name and its numeric parameters.
    pub fn from_parts(tag: &str, params: &[usize]) -> Result<Self, FamilyError> {
        let upper = tag.to_ascii_uppercase();
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(FamilyError::Parameter(format!("{upper} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let fixed = match upper.as_str() {
            "T1" => Some(FamilyId::T1),
            "T2" => Some(FamilyId::T2),
            "T3" => Some(FamilyId::T3),
            "T4" => Some(FamilyId::T4),
            "W5" => Some(FamilyId::W5),
            "B1" => Some(FamilyId::B1),
            "B2" => Some(FamilyId::B2),
            "B3" => Some(FamilyId::B3),
            "CO_T2" => Some(FamilyId::CoT2),
            "FIG4_RIGHT" => Some(FamilyId::Fig4Right),
            "FIG2_EXAMPLE" => Some(FamilyId::Fig2Example),
            "M" => Some(FamilyId::M),
            "M1" => Some(FamilyId::M1),
            "M2" => Some(FamilyId::M2),
            "M3" => Some(FamilyId::M3),
            "M4" => Some(FamilyId::M4),
            "M5" => Some(FamilyId::M5),
            "M6" => Some(FamilyId::M6),
            "MAX3" => Some(FamilyId::Max3),
            "TWO_K2" => Some(FamilyId::TwoK2),
            _ => None,
        };
        if let Some(id) = fixed {
            arity(0)?;
            return Ok(id);
        }
        let id = match upper.as_str() {
            "K_TRIANGLE" => {
                arity(1)?;
                FamilyId::KTriangle(params[0])
            }
            "A_GRAPH" => {
                arity(1)?;
                FamilyId::AGraph(params[0])
            }
            "K_L_K" => {
                arity(2)?;
                FamilyId::KLK(params[0], params[1])
            }
            "C" => {
                arity(1)?;
                FamilyId::Cycle(params[0])
            }
            "K" => {
                arity(1)?;
                FamilyId::Complete(params[0])
            }
            "EMPTY" => {
                arity(1)?;
                FamilyId::Empty(params[0])
            }
            _ => return Err(FamilyError::UnknownTag(tag.to_string())),
        };
        Ok(id)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::KTriangle(l) => write!(f, "K_TRIANGLE({l})"),
            FamilyId::AGraph(l) => write!(f, "A_GRAPH({l})"),
            FamilyId::KLK(l, k) => write!(f, "K_L_K({l},{k})"),
            FamilyId::Cycle(m) => write!(f, "C({m})"),
            FamilyId::Complete(n) => write!(f, "K({n})"),
            FamilyId::Empty(n) => write!(f, "EMPTY({n})"),
            FamilyId::T1 => f.write_str("T1"),
            FamilyId::T2 => f.write_str("T2"),
            FamilyId::T3 => f.write_str("T3"),
            FamilyId::T4 => f.write_str("T4"),
            FamilyId::W5 => f.write_str("W5"),
            FamilyId::B1 => f.write_str("B1"),
            FamilyId::B2 => f.write_str("B2"),
            FamilyId::B3 => f.write_str("B3"),
            FamilyId::CoT2 => f.write_str("CO_T2"),
            FamilyId::Fig4Right => f.write_str("FIG4_RIGHT"),
            FamilyId::Fig2Example => f.write_str("FIG2_EXAMPLE"),
            FamilyId::M => f.write_str("M"),
            FamilyId::M1 => f.write_str("M1"),
            FamilyId::M2 => f.write_str("M2"),
            FamilyId::M3 => f.write_str("M3"),
            FamilyId::M4 => f.write_str("M4"),
            FamilyId::M5 => f.write_str("M5"),
            FamilyId::M6 => f.write_str("M6"),
            FamilyId::Max3 => f.write_str("MAX3"),
            FamilyId::TwoK2 => f.write_str("TWO_K2"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    /// `TAG` or `TAG(p1,p2,...)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (tag, params) = match s.split_once('(') {
            None => (s, Vec::new()),
            Some((tag, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| FamilyError::Parameter(format!("unbalanced parentheses in {s:?}")))?;
                let params = inner
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| FamilyError::Parameter(format!("{s:?}: {e}")))?;
                (tag, params)
            }
        };
        FamilyId::from_parts(tag, &params)
    }
}

fn small(n: usize, what: &str) -> Result<usize, FamilyError> {
    if n > MAX_VERTICES {
        return Err(FamilyError::Parameter(format!("{what} needs at most {MAX_VERTICES} vertices, got {n}")));
    }
    Ok(n)
}

/// Drawing labels kept when building an `M` graph.
fn m_labels(tag: &FamilyId) -> Option<Vec<usize>> {
    m_deleted(tag).map(|del| (1..=10).filter(|v| !del.contains(v)).collect())
}

pub fn named(tag: &FamilyId) -> Result<Graph, FamilyError> {
    if let Some(labels) = m_labels(tag) {
        let kept: Vec<usize> = labels.iter().map(|v| v - 1).collect();
        return Ok(M.build().induced_subgraph(&kept).expect("labels are in range"));
    }
    Ok(match tag {
        FamilyId::KTriangle(l) => k_triangle(*l)?,
        FamilyId::AGraph(l) => a_graph(*l)?,
        FamilyId::KLK(l, k) => k_ell_k(*l, *k)?,
        FamilyId::T1 => T1.build(),
        FamilyId::T2 => T2.build(),
        FamilyId::T3 => {
            let g = T3.build();
            assert!(g.is_isomorphic(&T3_RIGHT.build()), "the two drawings of T3 differ");
            g
        }
        FamilyId::T4 => T4.build(),
        FamilyId::W5 => {
            let mut g = Graph::cycle(5);
            g.add_vertex(&[0, 1, 2, 3, 4]);
            g
        }
        FamilyId::B1 => B1.build(),
        FamilyId::B2 => B2.build(),
        FamilyId::B3 => B3.build(),
        FamilyId::CoT2 => CO_T2.build(),
        FamilyId::Fig4Right => FIG4_RIGHT.build(),
        FamilyId::Fig2Example => FIG2_EXAMPLE.build(),
        FamilyId::Max3 => {
            let g = MAX3.build();
            assert!(g.is_isomorphic(&MAX3_RIGHT.build()), "the two drawings of MAX3 differ");
            g
        }
        FamilyId::Cycle(m) => {
            if *m < 3 {
                return Err(FamilyError::Parameter(format!("C needs m >= 3, got {m}")));
            }
            Graph::cycle(small(*m, "C")?)
        }
        FamilyId::TwoK2 => Graph::from_edges(4, &[(0, 1), (2, 3)]).expect("valid edges"),
        FamilyId::Complete(n) => Graph::complete(small(*n, "K")?),
        FamilyId::Empty(n) => Graph::new(small(*n, "EMPTY")?),
        FamilyId::M | FamilyId::M1 | FamilyId::M2 | FamilyId::M3 | FamilyId::M4 | FamilyId::M5 | FamilyId::M6 => {
            unreachable!("handled above")
        }
    })
}

/// A semi-transitive orientation shipped with the family, where one is
/// known: the constructive ones for `K_TRIANGLE`, `K_L_K` and `K(n)`, and
/// the drawn ones for `M2`, `M3`, `M4`, `M6`.
pub fn known_orientation(tag: &FamilyId) -> Result<Option<OrientedGraph>, FamilyError> {
    if let (Some(labels), Some(arcs)) = (m_labels(tag), m_orientation_arcs(tag)) {
        let g = named(tag)?;
        let index = |p: usize| labels.iter().position(|&q| q == p).expect("arc endpoint is kept");
        let mapped: Vec<(usize, usize)> = arcs.iter().map(|&(u, v)| (index(u), index(v))).collect();
        return Ok(Some(OrientedGraph::from_arcs(&g, &mapped).expect("drawn arcs cover the edges once")));
    }
    Ok(match tag {
        FamilyId::KTriangle(l) => Some(k_triangle_canonical_orientation(*l)?),
        FamilyId::KLK(l, k) => Some(k_ell_k_orientation(*l, *k)?),
        FamilyId::Complete(_) => Some(OrientedGraph::low_to_high(&named(tag)?)),
        _ => None,
    })
}

/// The word drawn next to the example graph, `1213423` shifted to 0-based.
pub fn fig2_word() -> Word {
    Word::new(vec![0, 1, 0, 2, 3, 1, 2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orientation::is_semi_transitive;
    use crate::word::represents;

    #[test]
    fn triangle_sizes() {
        let g = k_triangle(6).unwrap();
        assert_eq!((g.n(), g.edge_count()), (12, 27));
        let g = k_triangle(3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 9));
        assert!(k_triangle(2).is_err());
    }

    #[test]
    fn odd_word_for_three() {
        // 1'121'3'313'2'232' with 1',2',3' = 3,4,5.
        assert_eq!(k_triangle_odd_word(3).unwrap().letters(), &[3, 0, 1, 3, 5, 2, 0, 5, 4, 1, 2, 4]);
        assert!(k_triangle_odd_word(4).is_err());
    }

    #[test]
    fn odd_words_represent() {
        for l in [3, 5, 7, 9] {
            assert!(represents(&k_triangle_odd_word(l).unwrap(), &k_triangle(l).unwrap()));
        }
    }

    #[test]
    fn canonical_orientation_is_semi_transitive() {
        for l in 3..=8 {
            assert!(is_semi_transitive(&k_triangle_canonical_orientation(l).unwrap()));
        }
    }

    #[test]
    fn a4_is_t1() {
        assert!(a_graph(4).unwrap().is_isomorphic(&named(&FamilyId::T1).unwrap()));
        assert_eq!(a_graph(5).unwrap().n(), 9);
        assert_eq!(a_graph(4).unwrap().remove_vertex(6), k_triangle(3).unwrap());
    }

    #[test]
    fn k_ell_two_is_k_triangle() {
        for l in 3..=8 {
            assert_eq!(k_ell_k(l, 2).unwrap(), k_triangle(l).unwrap());
        }
        assert!(k_ell_k(4, 3).is_err());
        assert!(k_ell_k(3, 3).is_err());
        assert!(k_ell_k(5, 0).is_err());
    }

    #[test]
    fn tags_round_trip() {
        for id in FamilyId::FIXED {
            assert_eq!(id.to_string().parse::<FamilyId>().unwrap(), id);
        }
        assert_eq!("k_l_k(7, 3)".parse::<FamilyId>().unwrap(), FamilyId::KLK(7, 3));
        assert_eq!(FamilyId::from_parts("A_GRAPH", &[5]).unwrap(), FamilyId::AGraph(5));
        assert!(matches!("NOPE".parse::<FamilyId>(), Err(FamilyError::UnknownTag(_))));
        assert!(matches!(FamilyId::from_parts("T1", &[2]), Err(FamilyError::Parameter(_))));
    }

    #[test]
    fn every_figure_builds() {
        for id in FamilyId::FIXED {
            named(&id).unwrap();
        }
        assert_eq!(named(&FamilyId::W5).unwrap().edge_count(), 10);
    }

    #[test]
    fn drawn_orientations_are_semi_transitive() {
        for id in [FamilyId::M2, FamilyId::M3, FamilyId::M4, FamilyId::M6] {
            assert!(is_semi_transitive(&known_orientation(&id).unwrap().unwrap()), "{id}");
        }
    }
}
