//! Report types: per-dimension verdicts with machine-checkable certificates.

use crate::graph::{Graph, GraphJson, KuratowskiWitness};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum VerdictStatus {
    Excluded,
    Confirmed,
    Unknown,
}

/// Self-contained certificate payloads. EXCLUDED and CONFIRMED verdicts
/// always carry one; UNKNOWN never does.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Dimension 1 or 2 admits only segments and cycles.
    NotSegment {
        n: usize,
        edges: usize,
    },
    NotCycle {
        reason: String,
    },
    /// The graph is realized in some dimension <= 3, where realizations are
    /// unique, so every other dimension is excluded.
    UniqueLowDimension {
        realized_dim: usize,
    },
    NonPlanar {
        witness: KuratowskiWitness,
    },
    NotThreeConnected {
        cut: Vec<usize>,
    },
    VertexCut {
        cut: Vec<usize>,
        components: usize,
    },
    TooFewVertices {
        needed: usize,
        found: usize,
    },
    PspFailure {
        vertex: usize,
        exhausted: bool,
        nodes_used: u64,
    },
    SeparationViolation {
        separator: Vec<usize>,
        components: usize,
        bound: u64,
        cap: usize,
    },
    CompleteBipartite {
        left: Vec<usize>,
        right: Vec<usize>,
    },
    SegmentTimesCompleteBipartite {
        class_size: usize,
    },
    StarCliqueChain {
        /// Contraction chain: vertex/edge counts per step, base graph last.
        steps: Vec<(usize, usize)>,
        base: GraphJson,
    },
    SegmentTimesCubicNonpolytopal {
        factor: GraphJson,
    },
    /// A factor of this regular product cannot be the graph of a simple
    /// polytope of its degree, so the product is excluded at its degree.
    ProductFactor {
        factor: GraphJson,
        factor_degree: usize,
        reason: String,
    },
    /// Two forced 2-faces intersect improperly.
    TwoFaceConflict {
        cycle_a: Vec<usize>,
        cycle_b: Vec<usize>,
        shared: Vec<usize>,
    },
    SimpleObstruction {
        obstruction: String,
        witness: Vec<usize>,
    },
    FacetSearchRefuted {
        mode: String,
        transcript_hash: String,
        nodes_used: u64,
    },
    /// A constructed polytope whose skeleton was verified isomorphic.
    Polytope {
        construction: String,
        content_hash: String,
        dim: usize,
        isomorphism: Vec<usize>,
    },
    /// Planar 3-connected: realizable in dimension 3 (exact decision), with
    /// the combinatorial embedding as certificate.
    SteinitzEmbedding {
        faces: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DimensionVerdict {
    pub d: usize,
    pub status: VerdictStatus,
    /// Rule id that produced the verdict.
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl DimensionVerdict {
    pub fn excluded(d: usize, reason: &str, certificate: Certificate) -> Self {
        DimensionVerdict {
            d,
            status: VerdictStatus::Excluded,
            reason: reason.to_string(),
            certificate: Some(certificate),
        }
    }
    pub fn confirmed(d: usize, reason: &str, certificate: Certificate) -> Self {
        DimensionVerdict {
            d,
            status: VerdictStatus::Confirmed,
            reason: reason.to_string(),
            certificate: Some(certificate),
        }
    }
    pub fn unknown(d: usize, reason: &str) -> Self {
        DimensionVerdict {
            d,
            status: VerdictStatus::Unknown,
            reason: reason.to_string(),
            certificate: None,
        }
    }
}

/// Per-dimension verdicts for d in 1..=min_degree, plus summary sets.
/// Dimensions above the minimum degree are implicitly excluded: the graph of
/// a d-polytope is d-connected, hence has minimum degree at least d.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub graph: GraphJson,
    pub graph6: String,
    pub min_degree: usize,
    pub verdicts: Vec<DimensionVerdict>,
    /// Dimensions with a verified realization.
    pub confirmed: Vec<usize>,
    /// Dimensions not excluded (confirmed or unknown).
    pub open: Vec<usize>,
}

impl ObstructionReport {
    pub fn new(g: &Graph, verdicts: Vec<DimensionVerdict>) -> Self {
        let confirmed = verdicts
            .iter()
            .filter(|v| v.status == VerdictStatus::Confirmed)
            .map(|v| v.d)
            .collect();
        let open = verdicts
            .iter()
            .filter(|v| v.status != VerdictStatus::Excluded)
            .map(|v| v.d)
            .collect();
        ObstructionReport {
            graph: GraphJson::from(g),
            graph6: crate::graph::to_graph6(g),
            min_degree: g.min_degree(),
            verdicts,
            confirmed,
            open,
        }
    }

    pub fn status_of(&self, d: usize) -> Option<VerdictStatus> {
        self.verdicts.iter().find(|v| v.d == d).map(|v| v.status)
    }

    pub fn has_unknown(&self) -> bool {
        self.verdicts
            .iter()
            .any(|v| v.status == VerdictStatus::Unknown)
    }

    /// Range as a sorted set when fully decided: confirmed dimensions only.
    pub fn decided_range(&self) -> Option<Vec<usize>> {
        (!self.has_unknown()).then(|| self.confirmed.clone())
    }
}
