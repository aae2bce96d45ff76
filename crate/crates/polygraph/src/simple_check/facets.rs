//! Exhaustive facet-complex searches.
//!
//! Two modes mechanize the case analyses that refute polytopality:
//!
//! - `ThreeFaces` (dimension 4): candidate 3-faces are the induced planar
//!   3-connected subgraphs; constraints are proper pairwise intersection,
//!   every 2-face of a chosen 3-face in exactly two chosen 3-faces, and
//!   every edge of the graph in at least three chosen 3-faces. A triangle-
//!   free 3-polytope has at least 8 vertices, which prunes the enumeration.
//!
//! - `SimpleAngles` (d-regular graph tested as a simple d-polytope): every
//!   induced cycle of length 3..5 is a forced 2-face, every pair of edges at
//!   a vertex lies in exactly one 2-face, and 2-faces intersect properly.
//!   Candidate 2-faces for uncovered angles are induced cycles of any
//!   length, enumerated lazily per angle.
//!
//! REFUTED requires exhaustive completion; budget exhaustion or an
//! incomplete candidate enumeration yields UNKNOWN. A found complex is only
//! a non-refutation, never a polytopality proof.

use super::{improper_pair, required_2faces, RequiredFaces, SimpleCheckError, TwoFaceConflict};
use crate::graph::{canonical_rotation, induced_cycles_through_angle, Graph};
use crate::obstructions::{steinitz_decide, whitney_2faces, SteinitzOutcome};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchMode {
    ThreeFaces,
    SimpleAngles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FaceKind {
    Face2,
    Face3,
}

/// A candidate face for the dimension-4 search: an induced subgraph that is
/// the graph of a 3-polytope, with its 2-faces and degree/face-size counts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CandidateFace {
    pub vertices: Vec<usize>,
    pub face_kind: FaceKind,
    /// 2-faces in original vertex ids, canonical rotation, sorted.
    pub two_faces: Vec<Vec<usize>>,
    /// Degree histogram (v_k) and face-size histogram (p_k).
    pub stats: (BTreeMap<usize, usize>, BTreeMap<usize, usize>),
}

/// A chosen family of 3-faces with its 2-face incidence map.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FacetComplexCandidate {
    /// Indices into the candidate list.
    pub chosen: Vec<usize>,
    /// 2-face (canonical cycle) -> indices of chosen 3-faces containing it.
    pub incidence: Vec<(Vec<usize>, Vec<usize>)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TranscriptLine {
    pub step: u64,
    pub action: String,
    /// Constraint id justifying a rejection/conflict, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constraint: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Transcript {
    pub mode: String,
    pub lines: Vec<TranscriptLine>,
}

impl Transcript {
    fn push(&mut self, action: String, constraint: Option<&str>) {
        let step = self.lines.len() as u64;
        self.lines.push(TranscriptLine {
            step,
            action,
            constraint: constraint.map(|s| s.to_string()),
        });
    }

    pub fn content_hash(&self) -> String {
        let mut h = crate::geometry::Fnv::new();
        h.write(self.mode.as_bytes());
        for l in &self.lines {
            h.write(l.action.as_bytes());
            if let Some(c) = &l.constraint {
                h.write(c.as_bytes());
            }
            h.write(b"\n");
        }
        format!("fnv1a:{:016x}", h.finish())
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&serde_json::to_string(l).expect("serializable line"));
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    /// A complex satisfying all constraints (necessary conditions met; this
    /// is a non-refutation, not a proof of polytopality).
    RealizableComplex {
        faces2: Vec<Vec<usize>>,
        complex: Option<FacetComplexCandidate>,
        transcript: Transcript,
    },
    Refuted {
        transcript: Transcript,
        nodes_used: u64,
    },
    Unknown {
        nodes_used: u64,
        note: String,
    },
}

/// All induced connected subgraphs up to `size_cap` vertices that are planar
/// and 3-connected, each with its 2-face list. Deterministic order: by size
/// descending, then lexicographic vertex set. Returns the candidates and
/// whether the enumeration completed within the node budget.
///
/// Enumeration is the standard exclusive-neighborhood scheme: each connected
/// set is generated exactly once, rooted at its minimum vertex.
pub fn enumerate_candidate_facets(
    g: &Graph,
    size_cap: usize,
    node_budget: u64,
) -> (Vec<CandidateFace>, bool) {
    let cap = size_cap.min(g.n());
    let mut out: Vec<CandidateFace> = Vec::new();
    let mut nodes = 0u64;
    let mut complete = true;
    let mut in_set = vec![false; g.n()];
    let mut near_count = vec![0usize; g.n()];
    let mut set: Vec<usize> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn grow(
        g: &Graph,
        root: usize,
        cap: usize,
        set: &mut Vec<usize>,
        extension: &[usize],
        in_set: &mut Vec<bool>,
        near_count: &mut Vec<usize>,
        nodes: &mut u64,
        budget: u64,
        complete: &mut bool,
        out: &mut Vec<CandidateFace>,
    ) {
        *nodes += 1;
        if *nodes >= budget {
            *complete = false;
            return;
        }
        if set.len() >= 4 {
            if let Some(c) = candidate_from_set(g, set) {
                out.push(c);
            }
        }
        if set.len() == cap {
            return;
        }
        // Process extension vertices in order; each branch removes its pivot
        // and adds the pivot's exclusive neighbors.
        for (i, &w) in extension.iter().enumerate() {
            let mut ext2: Vec<usize> = extension[i + 1..].to_vec();
            for &u in g.neighbors(w) {
                if u > root && !in_set[u] && near_count[u] == 0 {
                    ext2.push(u);
                }
            }
            ext2.sort_unstable();
            ext2.dedup();
            set.push(w);
            in_set[w] = true;
            for &u in g.neighbors(w) {
                near_count[u] += 1;
            }
            grow(
                g, root, cap, set, &ext2, in_set, near_count, nodes, budget, complete, out,
            );
            set.pop();
            in_set[w] = false;
            for &u in g.neighbors(w) {
                near_count[u] -= 1;
            }
            if !*complete {
                return;
            }
        }
    }

    for v in 0..g.n() {
        if !complete {
            break;
        }
        set.push(v);
        in_set[v] = true;
        for &u in g.neighbors(v) {
            near_count[u] += 1;
        }
        let ext: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| u > v).collect();
        grow(
            g,
            v,
            cap,
            &mut set,
            &ext,
            &mut in_set,
            &mut near_count,
            &mut nodes,
            node_budget,
            &mut complete,
            &mut out,
        );
        set.pop();
        in_set[v] = false;
        for &u in g.neighbors(v) {
            near_count[u] -= 1;
        }
    }
    out.sort_by(|a, b| {
        b.vertices
            .len()
            .cmp(&a.vertices.len())
            .then(a.vertices.cmp(&b.vertices))
    });
    (out, complete)
}

fn candidate_from_set(g: &Graph, set: &[usize]) -> Option<CandidateFace> {
    let (sub, map) = g.induced(set);
    // A 3-polytope with no triangular facet has at least 8 vertices; for an
    // induced subgraph, triangle-free implies no triangular facet.
    if sub.n() < 8 && sub.triangle_counts().iter().all(|&t| t == 0) {
        return None;
    }
    if sub.min_degree() < 3 || sub.edge_count() * 2 < 3 * sub.n() {
        return None;
    }
    if !matches!(steinitz_decide(&sub), SteinitzOutcome::Yes(_)) {
        return None;
    }
    let faces = whitney_2faces(&sub).ok()?;
    let mut v_k: BTreeMap<usize, usize> = BTreeMap::new();
    for v in 0..sub.n() {
        *v_k.entry(sub.degree(v)).or_default() += 1;
    }
    let mut p_k: BTreeMap<usize, usize> = BTreeMap::new();
    for f in &faces {
        *p_k.entry(f.len()).or_default() += 1;
    }
    // Double-counting audit: v3 + p3 = 8 + sum_{k>=5} (k-4)(v_k + p_k).
    let v3 = *v_k.get(&3).unwrap_or(&0) as i64;
    let p3 = *p_k.get(&3).unwrap_or(&0) as i64;
    let mut rhs = 8i64;
    for (&k, &c) in v_k.iter().chain(p_k.iter()) {
        if k >= 5 {
            rhs += (k as i64 - 4) * c as i64;
        }
    }
    debug_assert_eq!(v3 + p3, rhs, "double counting identity on {set:?}");
    let two_faces: Vec<Vec<usize>> = {
        let mut fs: Vec<Vec<usize>> = faces
            .iter()
            .map(|f| canonical_rotation(&f.iter().map(|&v| map[v]).collect::<Vec<_>>()))
            .collect();
        fs.sort();
        fs
    };
    let mut vertices = set.to_vec();
    vertices.sort_unstable();
    Some(CandidateFace {
        vertices,
        face_kind: FaceKind::Face3,
        two_faces,
        stats: (v_k, p_k),
    })
}

/// Facet-complex search. `d` must be 4 (ThreeFaces mode) or the regular
/// degree of the graph (SimpleAngles mode); when both apply the caller
/// chooses via `mode`.
pub fn facet_complex_search(
    g: &Graph,
    d: usize,
    mode: SearchMode,
    node_budget: u64,
    size_cap: usize,
) -> Result<SearchOutcome, SimpleCheckError> {
    match mode {
        SearchMode::ThreeFaces => {
            if d != 4 {
                return Err(SimpleCheckError::ModeMismatch(d));
            }
            Ok(three_faces_search(g, node_budget, size_cap))
        }
        SearchMode::SimpleAngles => {
            if g.regular_degree() != Some(d) {
                return Err(SimpleCheckError::ModeMismatch(d));
            }
            simple_angles_search(g, d, node_budget)
        }
    }
}

// ---------------------------------------------------------------------------
// Dimension-4 mode.

fn three_faces_search(g: &Graph, node_budget: u64, size_cap: usize) -> SearchOutcome {
    let mut transcript = Transcript {
        mode: "three-faces".into(),
        ..Default::default()
    };
    let mut nodes = 0u64;
    let (candidates, complete) = enumerate_candidate_facets(g, size_cap.min(g.n()), node_budget);
    let enumeration_sound = complete && size_cap >= g.n();
    transcript.push(
        format!(
            "candidates enumerated: {} (complete: {complete}, cap {})",
            candidates.len(),
            size_cap.min(g.n())
        ),
        Some("lemma-8-pruning"),
    );

    let edges = g.edges();
    // Quick necessary check: every edge needs >= 3 covering 3-faces.
    for &(u, v) in &edges {
        let cover = candidates
            .iter()
            .filter(|c| c.vertices.contains(&u) && c.vertices.contains(&v))
            .count();
        if cover < 3 {
            transcript.push(
                format!("edge ({u},{v}) has only {cover} candidate 3-faces"),
                Some("edge-in-three-facets"),
            );
            if enumeration_sound {
                transcript.push("refuted".into(), None);
                return SearchOutcome::Refuted {
                    transcript,
                    nodes_used: nodes,
                };
            }
            return SearchOutcome::Unknown {
                nodes_used: nodes,
                note: "candidate enumeration incomplete".into(),
            };
        }
    }

    let mut chosen: Vec<usize> = Vec::new();
    let mut face2_count: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut edge_cover: BTreeMap<(usize, usize), usize> =
        edges.iter().map(|&e| (e, 0usize)).collect();

    let outcome = d4_extend(
        g,
        &candidates,
        &mut chosen,
        &mut face2_count,
        &mut edge_cover,
        &mut nodes,
        node_budget,
        &mut transcript,
    );
    match outcome {
        D4Result::Complete => {
            let incidence: Vec<(Vec<usize>, Vec<usize>)> = face2_count
                .iter()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            let faces2 = face2_count.keys().cloned().collect();
            transcript.push(format!("complete complex of {} faces", chosen.len()), None);
            SearchOutcome::RealizableComplex {
                faces2,
                complex: Some(FacetComplexCandidate {
                    chosen: chosen.clone(),
                    incidence,
                }),
                transcript,
            }
        }
        D4Result::Exhausted => {
            if enumeration_sound {
                transcript.push("search space exhausted".into(), None);
                SearchOutcome::Refuted {
                    transcript,
                    nodes_used: nodes,
                }
            } else {
                SearchOutcome::Unknown {
                    nodes_used: nodes,
                    note: "exhausted over an incomplete candidate list".into(),
                }
            }
        }
        D4Result::BudgetOut => SearchOutcome::Unknown {
            nodes_used: nodes,
            note: "node budget exhausted".into(),
        },
    }
}

enum D4Result {
    Complete,
    Exhausted,
    BudgetOut,
}

#[allow(clippy::too_many_arguments)]
fn d4_extend(
    g: &Graph,
    candidates: &[CandidateFace],
    chosen: &mut Vec<usize>,
    face2_count: &mut BTreeMap<Vec<usize>, Vec<usize>>,
    edge_cover: &mut BTreeMap<(usize, usize), usize>,
    nodes: &mut u64,
    budget: u64,
    transcript: &mut Transcript,
) -> D4Result {
    *nodes += 1;
    if *nodes >= budget {
        return D4Result::BudgetOut;
    }
    // Next obligation: a 2-face covered exactly once, else an edge covered
    // fewer than 3 times, else the complex is complete.
    let open_face = face2_count
        .iter()
        .find(|(_, v)| v.len() == 1)
        .map(|(k, _)| k.clone());
    let target: Obligation = if let Some(f) = open_face {
        Obligation::Face(f)
    } else if let Some((&e, _)) = edge_cover.iter().find(|(_, &c)| c < 3) {
        Obligation::Edge(e)
    } else {
        return D4Result::Complete;
    };

    let viable: Vec<usize> = (0..candidates.len())
        .filter(|&i| !chosen.contains(&i))
        .filter(|&i| match &target {
            Obligation::Face(f) => candidates[i].two_faces.binary_search(f).is_ok(),
            Obligation::Edge((u, v)) => {
                candidates[i].vertices.contains(u) && candidates[i].vertices.contains(v)
            }
        })
        .collect();
    if viable.is_empty() {
        transcript.push(
            format!("no candidate covers obligation {target:?}"),
            Some(match target {
                Obligation::Face(_) => "two-face-in-exactly-two",
                Obligation::Edge(_) => "edge-in-three-facets",
            }),
        );
        return D4Result::Exhausted;
    }
    let mut budget_hit = false;
    'branch: for &ci in &viable {
        // Proper intersection against all chosen.
        for &cj in chosen.iter() {
            if let Some(reason) = improper_3faces(g, &candidates[ci], &candidates[cj]) {
                transcript.push(format!("reject candidate {ci} against {cj}"), Some(&reason));
                continue 'branch;
            }
        }
        // A 2-face may not land in more than two 3-faces.
        for f in &candidates[ci].two_faces {
            if face2_count.get(f).map(|v| v.len()).unwrap_or(0) >= 2 {
                transcript.push(
                    format!("reject candidate {ci}: saturated 2-face"),
                    Some("two-face-in-exactly-two"),
                );
                continue 'branch;
            }
        }
        chosen.push(ci);
        for f in &candidates[ci].two_faces {
            face2_count.entry(f.clone()).or_default().push(ci);
        }
        let vs = &candidates[ci].vertices;
        for (i, &u) in vs.iter().enumerate() {
            for &v in vs.iter().skip(i + 1) {
                if g.has_edge(u, v) {
                    *edge_cover.get_mut(&(u.min(v), u.max(v))).expect("edge") += 1;
                }
            }
        }
        transcript.push(format!("choose candidate {ci}"), None);
        match d4_extend(
            g,
            candidates,
            chosen,
            face2_count,
            edge_cover,
            nodes,
            budget,
            transcript,
        ) {
            D4Result::Complete => return D4Result::Complete,
            D4Result::BudgetOut => budget_hit = true,
            D4Result::Exhausted => {}
        }
        // Undo.
        chosen.pop();
        for f in &candidates[ci].two_faces {
            let entry = face2_count.get_mut(f).expect("pushed above");
            entry.pop();
            if entry.is_empty() {
                face2_count.remove(f);
            }
        }
        for (i, &u) in vs.iter().enumerate() {
            for &v in vs.iter().skip(i + 1) {
                if g.has_edge(u, v) {
                    *edge_cover.get_mut(&(u.min(v), u.max(v))).expect("edge") -= 1;
                }
            }
        }
        transcript.push(format!("backtrack candidate {ci}"), None);
        if budget_hit {
            return D4Result::BudgetOut;
        }
    }
    D4Result::Exhausted
}

#[derive(Debug, Clone)]
enum Obligation {
    Face(Vec<usize>),
    Edge((usize, usize)),
}

/// Two 3-faces must meet in nothing, a vertex, an edge, or a common 2-face.
fn improper_3faces(g: &Graph, a: &CandidateFace, b: &CandidateFace) -> Option<String> {
    let sa: BTreeSet<usize> = a.vertices.iter().copied().collect();
    let inter: Vec<usize> = b
        .vertices
        .iter()
        .copied()
        .filter(|v| sa.contains(v))
        .collect();
    match inter.len() {
        0 | 1 => None,
        2 => {
            if g.has_edge(inter[0], inter[1]) {
                None
            } else {
                Some("proper-intersection: two vertices without an edge".into())
            }
        }
        _ => {
            // Must be a common 2-face (same canonical cycle in both lists).
            let shared: Option<&Vec<usize>> = a
                .two_faces
                .iter()
                .find(|f| f.len() == inter.len() && f.iter().all(|v| inter.contains(v)));
            match shared {
                Some(f) if b.two_faces.binary_search(f).is_ok() => None,
                _ => Some("proper-intersection: overlap is not a common 2-face".into()),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Simple mode: angle assignment.

fn simple_angles_search(
    g: &Graph,
    d: usize,
    node_budget: u64,
) -> Result<SearchOutcome, SimpleCheckError> {
    let mut transcript = Transcript {
        mode: "simple-angles".into(),
        ..Default::default()
    };
    let forced = match required_2faces(g, d)? {
        RequiredFaces::Conflict(TwoFaceConflict {
            cycle_a,
            cycle_b,
            shared,
        }) => {
            transcript.push(
                format!("forced faces {cycle_a:?} and {cycle_b:?} share {shared:?}"),
                Some("proper-intersection"),
            );
            transcript.push("refuted".into(), None);
            return Ok(SearchOutcome::Refuted {
                transcript,
                nodes_used: 0,
            });
        }
        RequiredFaces::Faces(f) => f,
    };
    transcript.push(format!("{} forced short 2-faces", forced.len()), None);

    // Angle table: (v, a, b) with a < b neighbors of v.
    let mut angle_index: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    let mut angles: Vec<(usize, usize, usize)> = Vec::new();
    for v in 0..g.n() {
        let ns = g.neighbors(v);
        for (i, &a) in ns.iter().enumerate() {
            for &b in ns.iter().skip(i + 1) {
                angle_index.insert((v, a, b), angles.len());
                angles.push((v, a, b));
            }
        }
    }
    let angles_of = |cycle: &[usize]| -> Vec<usize> {
        let k = cycle.len();
        (0..k)
            .map(|i| {
                let v = cycle[i];
                let a = cycle[(i + k - 1) % k];
                let b = cycle[(i + 1) % k];
                angle_index[&(v, a.min(b), a.max(b))]
            })
            .collect()
    };

    let mut owner: Vec<Option<usize>> = vec![None; angles.len()]; // face id covering the angle
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for f in &forced {
        let fid = faces.len();
        for ai in angles_of(f) {
            if let Some(prev) = owner[ai] {
                // Two forced faces on one angle share three vertices; the
                // pairwise-proper scan would have caught it.
                transcript.push(
                    format!("angle {ai} claimed by faces {prev} and {fid}"),
                    Some("angle-unique-two-face"),
                );
                transcript.push("refuted".into(), None);
                return Ok(SearchOutcome::Refuted {
                    transcript,
                    nodes_used: 0,
                });
            }
            owner[ai] = Some(fid);
        }
        faces.push(f.clone());
    }

    let mut nodes = 0u64;
    let result = angle_extend(
        g,
        &angles,
        &angles_of,
        &mut owner,
        &mut faces,
        &mut nodes,
        node_budget,
        &mut transcript,
    );
    match result {
        D4Result::Complete => {
            let mut faces2 = faces.clone();
            faces2.sort();
            transcript.push(
                format!("complete assignment, {} 2-faces", faces2.len()),
                None,
            );
            Ok(SearchOutcome::RealizableComplex {
                faces2,
                complex: None,
                transcript,
            })
        }
        D4Result::Exhausted => {
            transcript.push("assignments exhausted".into(), None);
            Ok(SearchOutcome::Refuted {
                transcript,
                nodes_used: nodes,
            })
        }
        D4Result::BudgetOut => Ok(SearchOutcome::Unknown {
            nodes_used: nodes,
            note: "node budget exhausted".into(),
        }),
    }
}

#[allow(clippy::too_many_arguments)]
fn angle_extend(
    g: &Graph,
    angles: &[(usize, usize, usize)],
    angles_of: &dyn Fn(&[usize]) -> Vec<usize>,
    owner: &mut Vec<Option<usize>>,
    faces: &mut Vec<Vec<usize>>,
    nodes: &mut u64,
    budget: u64,
    transcript: &mut Transcript,
) -> D4Result {
    *nodes += 1;
    if *nodes >= budget {
        return D4Result::BudgetOut;
    }
    let Some(open) = owner.iter().position(|o| o.is_none()) else {
        return D4Result::Complete;
    };
    let (v, a, b) = angles[open];
    let candidates = induced_cycles_through_angle(g, v, a, b);
    if candidates.is_empty() {
        transcript.push(
            format!("no induced cycle through angle ({v};{a},{b})"),
            Some("angle-unique-two-face"),
        );
        return D4Result::Exhausted;
    }
    let mut budget_hit = false;
    'cand: for cyc in candidates {
        *nodes += 1;
        if *nodes >= budget {
            return D4Result::BudgetOut;
        }
        // All owner angles of this cycle must be free.
        let cyc_angles = angles_of(&cyc);
        for &ai in &cyc_angles {
            if owner[ai].is_some() {
                continue 'cand;
            }
        }
        // Proper intersection against every existing face.
        for f in faces.iter() {
            if improper_pair(g, f, &cyc).is_some() {
                transcript.push(
                    format!("reject cycle {cyc:?} against {f:?}"),
                    Some("proper-intersection"),
                );
                continue 'cand;
            }
        }
        let fid = faces.len();
        for &ai in &cyc_angles {
            owner[ai] = Some(fid);
        }
        faces.push(cyc.clone());
        transcript.push(format!("assign {cyc:?} to angle ({v};{a},{b})"), None);
        match angle_extend(
            g, angles, angles_of, owner, faces, nodes, budget, transcript,
        ) {
            D4Result::Complete => return D4Result::Complete,
            D4Result::BudgetOut => budget_hit = true,
            D4Result::Exhausted => {}
        }
        faces.pop();
        for &ai in &cyc_angles {
            owner[ai] = None;
        }
        transcript.push(format!("backtrack {cyc:?}"), None);
        if budget_hit {
            return D4Result::BudgetOut;
        }
    }
    transcript.push(
        format!("angle ({v};{a},{b}) exhausted"),
        Some("angle-unique-two-face"),
    );
    D4Result::Exhausted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, circulant, named_graph, NamedFamily};

    #[test]
    fn tetrahedra_candidates_in_circulant_8_134() {
        let g = circulant(8, &[1, 3, 4]).unwrap();
        let (cands, complete) = enumerate_candidate_facets(&g, 8, 10_000_000);
        assert!(complete);
        assert_eq!(cands.len(), 4);
        assert!(cands.iter().all(|c| c.vertices.len() == 4));
    }

    #[test]
    fn circulant_8_124_candidates_include_known_shapes() {
        let g = circulant(8, &[1, 2, 4]).unwrap();
        let (cands, complete) = enumerate_candidate_facets(&g, 8, 10_000_000);
        assert!(complete);
        // The two tetrahedra on odd and even vertices.
        let tetra: Vec<&CandidateFace> = cands.iter().filter(|c| c.vertices.len() == 4).collect();
        assert!(tetra.iter().any(|c| c.vertices == vec![0, 2, 4, 6]));
        assert!(tetra.iter().any(|c| c.vertices == vec![1, 3, 5, 7]));
        // Five- and six-vertex 3-polytopal induced subgraphs exist.
        assert!(cands.iter().any(|c| c.vertices.len() == 5));
        assert!(cands.iter().any(|c| c.vertices.len() == 6));
    }

    #[test]
    fn cycles_are_not_candidates() {
        let c6 = named_graph(&NamedFamily::Cycle(6)).unwrap();
        let (cands, complete) = enumerate_candidate_facets(&c6, 6, 1_000_000);
        assert!(complete);
        assert!(cands.is_empty());
    }

    #[test]
    fn refutes_circulant_8_134_in_dimension_four() {
        let g = circulant(8, &[1, 3, 4]).unwrap();
        match facet_complex_search(&g, 4, SearchMode::ThreeFaces, 10_000_000, 8).unwrap() {
            SearchOutcome::Refuted { transcript, .. } => {
                assert!(!transcript.lines.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn refutes_circulant_8_124_in_dimension_four() {
        let g = circulant(8, &[1, 2, 4]).unwrap();
        match facet_complex_search(&g, 4, SearchMode::ThreeFaces, 10_000_000, 8).unwrap() {
            SearchOutcome::Refuted { .. } => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn four_cube_assembles_its_eight_cubes() {
        let q4 = named_graph(&NamedFamily::Hypercube(4)).unwrap();
        match facet_complex_search(&q4, 4, SearchMode::ThreeFaces, 50_000_000, 10).unwrap() {
            SearchOutcome::RealizableComplex { complex, .. } => {
                let complex = complex.expect("three-faces mode yields a complex");
                assert_eq!(complex.chosen.len(), 8);
                // Every 2-face in exactly two chosen 3-faces.
                assert!(complex.incidence.iter().all(|(_, v)| v.len() == 2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn four_simplex_assembles_five_tetrahedra() {
        let k5 = named_graph(&NamedFamily::Complete(5)).unwrap();
        match facet_complex_search(&k5, 4, SearchMode::ThreeFaces, 10_000_000, 5).unwrap() {
            SearchOutcome::RealizableComplex { complex, .. } => {
                assert_eq!(complex.unwrap().chosen.len(), 5);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn simple_mode_refutes_two_ring_family() {
        for n in 1..=3 {
            let g = named_graph(&NamedFamily::MarcAntonio(n)).unwrap();
            match facet_complex_search(&g, 4, SearchMode::SimpleAngles, 50_000_000, 0).unwrap() {
                SearchOutcome::Refuted { .. } => {}
                other => panic!("n={n}: {other:?}"),
            }
        }
    }

    #[test]
    fn simple_mode_refutes_circulants_at_degree_five() {
        for steps in [vec![1usize, 2, 4], vec![1, 3, 4]] {
            let g = circulant(8, &steps).unwrap();
            match facet_complex_search(&g, 5, SearchMode::SimpleAngles, 50_000_000, 0).unwrap() {
                SearchOutcome::Refuted { .. } => {}
                other => panic!("{steps:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn simple_mode_accepts_prism_times_prism() {
        let prism = cartesian_product(
            &named_graph(&NamedFamily::Cycle(3)).unwrap(),
            &named_graph(&NamedFamily::Complete(2)).unwrap(),
        );
        let pp = cartesian_product(&prism, &prism);
        match facet_complex_search(&pp, 6, SearchMode::SimpleAngles, 50_000_000, 0).unwrap() {
            SearchOutcome::RealizableComplex { faces2, .. } => {
                // Triangles times vertices, squares times vertices, and
                // edge-times-edge squares.
                let triangles = faces2.iter().filter(|f| f.len() == 3).count();
                assert_eq!(triangles, 2 * 6 * 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn transcripts_replay_deterministically() {
        let g = circulant(8, &[1, 2, 4]).unwrap();
        let first = facet_complex_search(&g, 4, SearchMode::ThreeFaces, 10_000_000, 8).unwrap();
        let second = facet_complex_search(&g, 4, SearchMode::ThreeFaces, 10_000_000, 8).unwrap();
        let hash = |o: &SearchOutcome| match o {
            SearchOutcome::Refuted { transcript, .. } => transcript.content_hash(),
            _ => panic!("expected refutation"),
        };
        assert_eq!(hash(&first), hash(&second));
    }
}
