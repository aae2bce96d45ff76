//! Exact rational convex-hull and face-lattice kernel plus all witness
//! polytope constructions. No floating point enters any predicate; regular
//! polygons use exact rational points on the unit circle and correctness is
//! defined combinatorially, guarded by hull audits.

mod constructions;
mod hull;
mod linalg;
mod subdivision;

pub use constructions::{
    centroid as centroid_of, davidsstar, join_polytope, klee_stacked_graph, minkowski_sum,
    named_polytope, polygon, product_polytope, pyramid, stacked_cyclic, truncate_vertex,
    NamedPolytope,
};
pub use hull::{
    convex_hull_facets, face_lattice, lattices_isomorphic, skeleton_graph, verify_graph,
    FaceLattice, Facet, Fnv, GraphMatch, Polytope, DEFAULT_HULL_CAP,
};
pub use linalg::{affine_rank, rat, rat_frac, rat_from_str, rat_to_string, Rat};
pub use subdivision::{
    domino_product, lifted_product, prism_octahedron_realizations, regular_subdivision,
    starclique_octahedron_product, starclique_octahedron_subdivision, Lifting, SubdivisionComplex,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("point set is empty or all points coincide")]
    Degenerate,
    #[error("duplicate point at indices {0} and {1}")]
    DuplicatePoint(usize, usize),
    #[error("point {0} has dimension {1}, expected {2}")]
    MixedDimensions(usize, usize, usize),
    #[error("{0} points exceed the hull cap {1}")]
    CapExceeded(usize, usize),
    #[error("unknown polytope `{0}`")]
    UnknownPolytope(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("vertex {0} is not simple (degree {1}, dimension {2})")]
    NotSimpleVertex(usize, usize, usize),
    #[error("lifting error: {0}")]
    Lifting(String),
    #[error("construction audit failed: {0}")]
    AuditFailed(String),
}

/// Exact-rational point configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    pub dim: usize,
    pub points: Vec<Vec<Rat>>,
    pub labels: Option<Vec<String>>,
}

impl PointConfig {
    pub fn new(points: Vec<Vec<Rat>>) -> Result<PointConfig, GeometryError> {
        if points.is_empty() {
            return Err(GeometryError::Degenerate);
        }
        let dim = points[0].len();
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(GeometryError::MixedDimensions(i, p.len(), dim));
            }
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i] == points[j] {
                    return Err(GeometryError::DuplicatePoint(i, j));
                }
            }
        }
        Ok(PointConfig {
            dim,
            points,
            labels: None,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Supporting inequality `normal · x <= offset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperplane {
    pub normal: Vec<String>,
    pub offset: String,
}
