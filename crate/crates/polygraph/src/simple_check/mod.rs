//! Simple-polytopality obstructions from induced short cycles, the
//! facet-complex backtracking searches, and the product factorization rule.
//!
//! Every induced cycle of length 3, 4 or 5 in the graph of a simple polytope
//! bounds a 2-face, any two 2-faces intersect properly, and every pair of
//! edges at a vertex spans exactly one 2-face. These facts drive both the
//! immediate conflict checks and the exhaustive searches.

mod facets;
mod product_rule;

pub use facets::{
    enumerate_candidate_facets, facet_complex_search, CandidateFace, FacetComplexCandidate,
    SearchMode, SearchOutcome, Transcript, TranscriptLine,
};
pub use product_rule::{
    product_factor_check, simple_polytopality_prospect, ProductRuleOutcome, SimpleProspect,
};

use crate::graph::{contains_induced, induced_cycles, named_graph, Graph, NamedFamily};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimpleCheckError {
    #[error("graph is not regular (degrees {0}..{1})")]
    NotRegular(usize, usize),
    #[error("mode mismatch: d={0} is neither 4 nor the regular degree")]
    ModeMismatch(usize),
}

/// Improper intersection between two forced 2-faces.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwoFaceConflict {
    pub cycle_a: Vec<usize>,
    pub cycle_b: Vec<usize>,
    pub shared: Vec<usize>,
}

/// Result of collecting the forced 2-faces of a candidate simple realization.
#[derive(Debug, Clone)]
pub enum RequiredFaces {
    /// All induced cycles of length 3..=5, pairwise properly intersecting.
    Faces(Vec<Vec<usize>>),
    Conflict(TwoFaceConflict),
}

/// Every induced cycle of length 3, 4 or 5 must be a 2-face of a simple
/// realization; two of them sharing at least 3 vertices, or sharing 2
/// vertices without sharing the connecting edge, intersect improperly.
pub fn required_2faces(g: &Graph, d: usize) -> Result<RequiredFaces, SimpleCheckError> {
    let Some(deg) = g.regular_degree() else {
        return Err(SimpleCheckError::NotRegular(g.min_degree(), g.max_degree()));
    };
    let _ = (deg, d);
    let cycles = induced_cycles(g, 5);
    for i in 0..cycles.len() {
        for j in (i + 1)..cycles.len() {
            if let Some(shared) = improper_pair(g, &cycles[i], &cycles[j]) {
                return Ok(RequiredFaces::Conflict(TwoFaceConflict {
                    cycle_a: cycles[i].clone(),
                    cycle_b: cycles[j].clone(),
                    shared,
                }));
            }
        }
    }
    Ok(RequiredFaces::Faces(cycles))
}

/// Shared vertices if the two cycles intersect improperly (as 2-faces would).
pub(crate) fn improper_pair(g: &Graph, a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    let sa: std::collections::BTreeSet<usize> = a.iter().copied().collect();
    let shared: Vec<usize> = b.iter().copied().filter(|v| sa.contains(v)).collect();
    match shared.len() {
        0 | 1 => None,
        2 => {
            let (x, y) = (shared[0], shared[1]);
            let edge_in = |c: &[usize]| {
                let k = c.len();
                (0..k).any(|i| {
                    let (u, v) = (c[i], c[(i + 1) % k]);
                    (u == x && v == y) || (u == y && v == x)
                })
            };
            if g.has_edge(x, y) && edge_in(a) && edge_in(b) {
                None
            } else {
                let mut s = shared;
                s.sort_unstable();
                Some(s)
            }
        }
        _ => {
            let mut s = shared;
            s.sort_unstable();
            Some(s)
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum SimpleObstruction {
    Pass,
    /// (i) an induced cycle of length 3..5 separates the graph.
    SeparatingShortCycle {
        cycle: Vec<usize>,
    },
    /// (ii) two induced 4/5-cycles share at least 3 vertices.
    SharedTriple {
        cycle_a: Vec<usize>,
        cycle_b: Vec<usize>,
        shared: Vec<usize>,
    },
    /// (iii) an induced K_{2,3} or an induced Petersen graph.
    ForbiddenInduced {
        pattern: String,
        witness: Vec<usize>,
    },
}

/// Ordered checks for simply polytopal graphs: (i) no induced 3/4/5-cycle
/// separates; (ii) no two induced 4/5-cycles share 3 vertices; (iii) no
/// induced K_{2,3} or Petersen subgraph. Returns the first obstruction found.
/// An induced K_{2,3} or Petersen always contains the pattern of (ii), so in
/// this fixed order (iii) is only reachable when (ii) was skipped by custom
/// callers; it is kept for direct queries.
pub fn simple_obstructions(g: &Graph, d: usize) -> Result<SimpleObstruction, SimpleCheckError> {
    if g.regular_degree().is_none() {
        return Err(SimpleCheckError::NotRegular(g.min_degree(), g.max_degree()));
    }
    let _ = d;
    let cycles = induced_cycles(g, 5);
    for c in &cycles {
        if g.components_avoiding(c).len() > 1 {
            return Ok(SimpleObstruction::SeparatingShortCycle { cycle: c.clone() });
        }
    }
    let longer: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() >= 4).collect();
    for i in 0..longer.len() {
        for j in (i + 1)..longer.len() {
            let sa: std::collections::BTreeSet<usize> = longer[i].iter().copied().collect();
            let shared: Vec<usize> = longer[j]
                .iter()
                .copied()
                .filter(|v| sa.contains(v))
                .collect();
            if shared.len() >= 3 {
                let mut s = shared;
                s.sort_unstable();
                return Ok(SimpleObstruction::SharedTriple {
                    cycle_a: longer[i].clone(),
                    cycle_b: longer[j].clone(),
                    shared: s,
                });
            }
        }
    }
    let k23 = named_graph(&NamedFamily::CompleteBipartite(2, 3)).expect("K23");
    if let Some(map) = contains_induced(g, &k23) {
        return Ok(SimpleObstruction::ForbiddenInduced {
            pattern: "K2,3".into(),
            witness: map,
        });
    }
    let petersen = named_graph(&NamedFamily::Petersen).expect("petersen");
    if petersen.n() <= g.n() {
        if let Some(map) = contains_induced(g, &petersen) {
            return Ok(SimpleObstruction::ForbiddenInduced {
                pattern: "petersen".into(),
                witness: map,
            });
        }
    }
    Ok(SimpleObstruction::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, circulant, NamedFamily};

    #[test]
    fn cube_has_six_squares_no_conflict() {
        let q3 = named_graph(&NamedFamily::Hypercube(3)).unwrap();
        match required_2faces(&q3, 3).unwrap() {
            RequiredFaces::Faces(f) => {
                assert_eq!(f.len(), 6);
                assert!(f.iter().all(|c| c.len() == 4));
            }
            RequiredFaces::Conflict(c) => panic!("{c:?}"),
        }
    }

    #[test]
    fn two_ring_family_n1_conflicts_on_shared_edges() {
        let g = named_graph(&NamedFamily::MarcAntonio(1)).unwrap();
        match required_2faces(&g, 4).unwrap() {
            RequiredFaces::Conflict(c) => {
                assert!(c.shared.len() >= 2);
            }
            RequiredFaces::Faces(_) => panic!("expected a two-face conflict"),
        }
    }

    #[test]
    fn k23_has_conflicting_squares() {
        let g = named_graph(&NamedFamily::CompleteBipartite(2, 3)).unwrap();
        match required_2faces(&g, 2) {
            // K2,3 is not regular; the conflict surfaces through the general
            // cycle check instead.
            Err(SimpleCheckError::NotRegular(2, 3)) => {}
            other => panic!("{other:?}"),
        }
        // Direct conflict audit on the induced squares.
        let cycles = induced_cycles(&g, 5);
        let squares: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() == 4).collect();
        assert_eq!(squares.len(), 3);
        assert!(improper_pair(&g, squares[0], squares[1]).is_some());
    }

    #[test]
    fn petersen_square_fails_simple_obstructions() {
        let p = named_graph(&NamedFamily::Petersen).unwrap();
        let pp = cartesian_product(&p, &p);
        if let SimpleObstruction::Pass = simple_obstructions(&pp, 6).unwrap() {
            panic!("must fail")
        }
    }

    #[test]
    fn hypercube_4_passes_simple_obstructions() {
        let q4 = named_graph(&NamedFamily::Hypercube(4)).unwrap();
        assert!(matches!(
            simple_obstructions(&q4, 4).unwrap(),
            SimpleObstruction::Pass
        ));
    }

    #[test]
    fn moebius_prism_fails() {
        // Segment times the 3-regular circulant on 8 vertices.
        let m8 = circulant(8, &[1, 4]).unwrap();
        let k2 = named_graph(&NamedFamily::Complete(2)).unwrap();
        let g = cartesian_product(&k2, &m8);
        assert!(!matches!(
            simple_obstructions(&g, 4).unwrap(),
            SimpleObstruction::Pass
        ));
    }
}
