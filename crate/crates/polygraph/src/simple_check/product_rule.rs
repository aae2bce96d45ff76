//! The product factorization rule: a product of graphs is simply polytopal
//! exactly when its factors are, so refuting one factor excludes the product
//! at its regular degree.

use super::{
    facet_complex_search, required_2faces, simple_obstructions, RequiredFaces, SearchMode,
    SearchOutcome, SimpleObstruction,
};
use crate::graph::{are_isomorphic, cartesian_product, prime_factorization, Graph, GraphJson};
use crate::obstructions::{steinitz_decide, SteinitzOutcome};
use serde::{Deserialize, Serialize};

/// Verdict on whether a graph could be the graph of a simple polytope of its
/// own regular degree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum SimpleProspect {
    SimplyPolytopal { evidence: String },
    Refuted { reason: String },
    Unknown { note: String },
}

/// Decides or bounds simple polytopality of `g` at its regular degree.
/// Degrees 1..3 are exact (segment, cycle, planar 3-connected); degree >= 4
/// runs the conflict checks and the exhaustive angle search within budget.
pub fn simple_polytopality_prospect(g: &Graph, node_budget: u64) -> SimpleProspect {
    let Some(deg) = g.regular_degree() else {
        return SimpleProspect::Refuted {
            reason: "not regular".into(),
        };
    };
    if !g.is_connected() {
        return SimpleProspect::Refuted {
            reason: "disconnected".into(),
        };
    }
    match deg {
        0 => SimpleProspect::SimplyPolytopal {
            evidence: "a point".into(),
        },
        1 => {
            if g.n() == 2 {
                SimpleProspect::SimplyPolytopal {
                    evidence: "segment".into(),
                }
            } else {
                SimpleProspect::Refuted {
                    reason: "1-regular but not a single edge".into(),
                }
            }
        }
        2 => SimpleProspect::SimplyPolytopal {
            evidence: "polygon".into(),
        },
        3 => match steinitz_decide(g) {
            SteinitzOutcome::Yes(_) => SimpleProspect::SimplyPolytopal {
                evidence: "planar and 3-connected".into(),
            },
            SteinitzOutcome::NotPlanar(_) => SimpleProspect::Refuted {
                reason: "cubic and non-planar".into(),
            },
            SteinitzOutcome::NotThreeConnected { .. } => SimpleProspect::Refuted {
                reason: "cubic and not 3-connected".into(),
            },
            SteinitzOutcome::TooSmall => SimpleProspect::Refuted {
                reason: "too few vertices".into(),
            },
        },
        d => {
            match required_2faces(g, d) {
                Ok(RequiredFaces::Conflict(_)) => {
                    return SimpleProspect::Refuted {
                        reason: "forced 2-faces intersect improperly".into(),
                    }
                }
                Ok(RequiredFaces::Faces(_)) => {}
                Err(e) => {
                    return SimpleProspect::Unknown {
                        note: e.to_string(),
                    }
                }
            }
            match simple_obstructions(g, d) {
                Ok(SimpleObstruction::Pass) => {}
                Ok(obs) => {
                    return SimpleProspect::Refuted {
                        reason: format!("{obs:?}"),
                    }
                }
                Err(e) => {
                    return SimpleProspect::Unknown {
                        note: e.to_string(),
                    }
                }
            }
            match facet_complex_search(g, d, SearchMode::SimpleAngles, node_budget, 0) {
                Ok(SearchOutcome::Refuted { .. }) => SimpleProspect::Refuted {
                    reason: "2-face assignment search exhausted".into(),
                },
                Ok(SearchOutcome::RealizableComplex { .. }) => SimpleProspect::Unknown {
                    note: "a consistent 2-face complex exists (not a polytopality proof)".into(),
                },
                Ok(SearchOutcome::Unknown { note, .. }) => SimpleProspect::Unknown { note },
                Err(e) => SimpleProspect::Unknown {
                    note: e.to_string(),
                },
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum ProductRuleOutcome {
    /// Some factor cannot be simply polytopal in its degree, so the product
    /// is not simply polytopal at the sum of the degrees.
    ExcludedAtDegree {
        degree: usize,
        factor: GraphJson,
        factor_degree: usize,
        reason: String,
    },
    /// Every factor passed or stayed open; no exclusion follows.
    NoConclusion {
        factor_prospects: Vec<String>,
    },
    NotAProduct,
    /// The provided factor pair fails the product isomorphism audit.
    BadFactors(String),
}

/// Evaluates the simple polytopality of the factors of `g`. With explicit
/// factors their product is audited against `g` first; otherwise Cartesian
/// prime factorization via the square-property relation is attempted, with
/// re-multiplication guarding correctness.
pub fn product_factor_check(
    g: &Graph,
    factors: Option<(&Graph, &Graph)>,
    node_budget: u64,
) -> ProductRuleOutcome {
    let Some(degree) = g.regular_degree() else {
        return ProductRuleOutcome::NoConclusion {
            factor_prospects: vec!["input graph is not regular".into()],
        };
    };
    let factor_list: Vec<Graph> = match factors {
        Some((a, b)) => {
            let prod = cartesian_product(a, b);
            if are_isomorphic(&prod, g).is_none() {
                return ProductRuleOutcome::BadFactors(
                    "product of the provided factors is not isomorphic to the input".into(),
                );
            }
            vec![a.clone(), b.clone()]
        }
        None => match prime_factorization(g) {
            Some(f) => f.factors,
            None => return ProductRuleOutcome::NotAProduct,
        },
    };
    let mut prospects = Vec::new();
    for f in &factor_list {
        let p = simple_polytopality_prospect(f, node_budget);
        match &p {
            SimpleProspect::Refuted { reason } => {
                return ProductRuleOutcome::ExcludedAtDegree {
                    degree,
                    factor: GraphJson::from(f),
                    factor_degree: f.regular_degree().unwrap_or(0),
                    reason: reason.clone(),
                };
            }
            SimpleProspect::SimplyPolytopal { evidence } => {
                prospects.push(format!("factor on {} vertices: {evidence}", f.n()))
            }
            SimpleProspect::Unknown { note } => {
                prospects.push(format!("factor on {} vertices: open ({note})", f.n()))
            }
        }
    }
    ProductRuleOutcome::NoConclusion {
        factor_prospects: prospects,
    }
}
