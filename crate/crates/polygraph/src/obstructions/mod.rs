//! Necessary-condition checks for d-polytopality, the exact low-dimension
//! decisions, and the rule engine assembling them into a range report.

mod cyclic;
mod range;
mod report;

pub use cyclic::{cyclic_facet_count, cyclic_polytope_facets, CyclicError};
pub use range::{polytopality_range, BudgetConfig};
pub use report::{Certificate, DimensionVerdict, ObstructionReport, VerdictStatus};

use crate::graph::{
    is_planar, kappa_with_cut, Graph, KuratowskiWitness, PlanarEmbedding, PlanarityResult,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Witness for the principal-subdivision property at one vertex: the chosen
/// branch neighbors and, for every branch pair, a connecting path whose
/// interior avoids the principal vertex, all branch vertices, and the
/// interiors of all other paths.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PspWitness {
    pub principal: usize,
    pub branch: Vec<usize>,
    /// Keyed by branch pair (i < j by vertex id), full path including both
    /// endpoints.
    pub paths: Vec<((usize, usize), Vec<usize>)>,
}

impl PspWitness {
    /// Structural audit of the witness invariants.
    pub fn verify(&self, g: &Graph) -> bool {
        let d = self.branch.len();
        if self.paths.len() != d * (d - 1) / 2 {
            return false;
        }
        if self.branch.iter().any(|&b| !g.has_edge(self.principal, b)) {
            return false;
        }
        let mut used = std::collections::BTreeSet::new();
        for ((a, b), path) in &self.paths {
            if path.first() != Some(a) || path.last() != Some(b) {
                return false;
            }
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return false;
                }
            }
            for &v in &path[1..path.len() - 1] {
                if v == self.principal || self.branch.contains(&v) || !used.insert(v) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PspFailure {
    pub vertex: usize,
    /// True when every branch subset was exhausted, making the failure a
    /// genuine obstruction rather than a budget artifact.
    pub exhausted: bool,
    pub nodes_used: u64,
}

#[derive(Debug, Clone)]
pub enum PspOutcome {
    /// Witnesses for every vertex checked.
    Witnesses(Vec<PspWitness>),
    Failure(PspFailure),
}

/// Balinski-style check: d-connectivity plus the vertex-count floor.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum BalinskiOutcome {
    Pass,
    TooFewVertices { needed: usize, found: usize },
    Cut { cut: Vec<usize>, components: usize },
}

pub fn balinski_check(g: &Graph, d: usize) -> BalinskiOutcome {
    assert!(d >= 1);
    if g.n() < d + 1 {
        return BalinskiOutcome::TooFewVertices {
            needed: d + 1,
            found: g.n(),
        };
    }
    let (kappa, cut) = kappa_with_cut(g);
    if kappa >= d {
        BalinskiOutcome::Pass
    } else {
        let components = g.components_avoiding(&cut).len();
        BalinskiOutcome::Cut { cut, components }
    }
}

/// Principal-subdivision check at one vertex or over all vertices.
/// For each d-subset of the neighbors (lexicographic), the search routes the
/// non-adjacent branch pairs through internally disjoint paths by exhaustive
/// backtracking; adjacent pairs always take their edge. Exhaustion of every
/// subset is a genuine failure; hitting the node budget is not.
pub fn psp_check(g: &Graph, d: usize, vertex: Option<usize>, node_budget: u64) -> PspOutcome {
    assert!(d >= 2);
    let verts: Vec<usize> = match vertex {
        Some(v) => vec![v],
        None => (0..g.n()).collect(),
    };
    let mut witnesses = Vec::new();
    for v in verts {
        let counter = std::cell::Cell::new(0u64);
        match psp_at_vertex(g, d, v, node_budget, &counter) {
            Some(w) => witnesses.push(w),
            None => {
                return PspOutcome::Failure(PspFailure {
                    vertex: v,
                    exhausted: counter.get() < node_budget,
                    nodes_used: counter.get(),
                });
            }
        }
    }
    PspOutcome::Witnesses(witnesses)
}

fn psp_at_vertex(
    g: &Graph,
    d: usize,
    v: usize,
    budget: u64,
    nodes: &std::cell::Cell<u64>,
) -> Option<PspWitness> {
    let nbrs = g.neighbors(v);
    if nbrs.len() < d {
        return None;
    }
    let mut subset: Vec<usize> = Vec::with_capacity(d);
    try_subsets(g, d, v, nbrs, 0, &mut subset, budget, nodes)
}

#[allow(clippy::too_many_arguments)]
fn try_subsets(
    g: &Graph,
    d: usize,
    v: usize,
    nbrs: &[usize],
    start: usize,
    subset: &mut Vec<usize>,
    budget: u64,
    nodes: &std::cell::Cell<u64>,
) -> Option<PspWitness> {
    if subset.len() == d {
        return route_branch_pairs(g, v, subset, budget, nodes);
    }
    let remaining = d - subset.len();
    for i in start..nbrs.len() {
        if nbrs.len() - i < remaining {
            break;
        }
        subset.push(nbrs[i]);
        if let Some(w) = try_subsets(g, d, v, nbrs, i + 1, subset, budget, nodes) {
            return Some(w);
        }
        subset.pop();
        if nodes.get() >= budget {
            return None;
        }
    }
    None
}

fn route_branch_pairs(
    g: &Graph,
    v: usize,
    branch: &[usize],
    budget: u64,
    nodes: &std::cell::Cell<u64>,
) -> Option<PspWitness> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut fixed: Vec<((usize, usize), Vec<usize>)> = Vec::new();
    for i in 0..branch.len() {
        for j in (i + 1)..branch.len() {
            let (a, b) = (branch[i], branch[j]);
            if g.has_edge(a, b) {
                // The direct edge never hurts: it consumes no interior
                // vertices, so any witness can be rewritten to use it.
                fixed.push(((a, b), vec![a, b]));
            } else {
                pairs.push((a, b));
            }
        }
    }
    let mut blocked = vec![false; g.n()];
    blocked[v] = true;
    for &b in branch {
        blocked[b] = true;
    }
    let mut routed: Vec<((usize, usize), Vec<usize>)> = Vec::new();
    if route_rest(g, &pairs, 0, &mut blocked, &mut routed, budget, nodes) {
        let mut paths = fixed;
        paths.append(&mut routed);
        paths.sort_by_key(|(k, _)| *k);
        Some(PspWitness {
            principal: v,
            branch: branch.to_vec(),
            paths,
        })
    } else {
        None
    }
}

fn route_rest(
    g: &Graph,
    pairs: &[(usize, usize)],
    idx: usize,
    blocked: &mut Vec<bool>,
    routed: &mut Vec<((usize, usize), Vec<usize>)>,
    budget: u64,
    nodes: &std::cell::Cell<u64>,
) -> bool {
    if idx == pairs.len() {
        return true;
    }
    let (a, b) = pairs[idx];
    // DFS over simple a..b paths with unblocked interiors; each found path
    // is committed (interiors blocked) and the remaining pairs are routed
    // recursively before giving up on it.
    let mut path = vec![a];
    dfs_route(g, pairs, idx, b, blocked, routed, &mut path, budget, nodes)
}

#[allow(clippy::too_many_arguments)]
fn dfs_route(
    g: &Graph,
    pairs: &[(usize, usize)],
    idx: usize,
    target: usize,
    blocked: &mut Vec<bool>,
    routed: &mut Vec<((usize, usize), Vec<usize>)>,
    path: &mut Vec<usize>,
    budget: u64,
    nodes: &std::cell::Cell<u64>,
) -> bool {
    if nodes.get() >= budget {
        return false;
    }
    nodes.set(nodes.get() + 1);
    let last = *path.last().unwrap();
    for &c in g.neighbors(last) {
        if c == target {
            let full: Vec<usize> = path.iter().copied().chain([target]).collect();
            for &w in &full[1..full.len() - 1] {
                blocked[w] = true;
            }
            routed.push(((pairs[idx].0, pairs[idx].1), full.clone()));
            let ok = route_rest(g, pairs, idx + 1, blocked, routed, budget, nodes);
            if ok {
                return true;
            }
            routed.pop();
            for &w in &full[1..full.len() - 1] {
                blocked[w] = false;
            }
            continue;
        }
        if blocked[c] || path.contains(&c) {
            continue;
        }
        path.push(c);
        if dfs_route(g, pairs, idx, target, blocked, routed, path, budget, nodes) {
            return true;
        }
        path.pop();
        if nodes.get() >= budget {
            return false;
        }
    }
    false
}

/// Separation outcome for one dimension.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum SeparationOutcome {
    /// No violation among all subsets of size d+1..=cap (partial if the
    /// subset budget ran out).
    Pass { cap: usize, partial: bool },
    Fail {
        separator: Vec<usize>,
        components: usize,
        bound: u64,
    },
}

/// Checks that removing any n-subset (d < n <= cap) leaves at most
/// f_{d-1}(C_d(n)) components. Only the upper bound is usable as a necessary
/// condition for a single graph.
pub fn separation_check(g: &Graph, d: usize, cap: usize, subset_budget: u64) -> SeparationOutcome {
    assert!(d >= 1 && cap > d);
    let cap = cap.min(g.n());
    let mut budget = subset_budget;
    let mut partial = false;
    for size in (d + 1)..=cap {
        let Ok(bound) = cyclic_facet_count(d.max(2), size) else {
            continue;
        };
        // Components number at most n - size; skip sizes that cannot violate.
        if g.n().saturating_sub(size) as u64 <= bound {
            continue;
        }
        let mut subset: Vec<usize> = Vec::with_capacity(size);
        match separation_scan(g, size, bound, 0, &mut subset, &mut budget) {
            ScanResult::Violation(sep, comps) => {
                return SeparationOutcome::Fail {
                    separator: sep,
                    components: comps,
                    bound,
                };
            }
            ScanResult::Exhausted => {}
            ScanResult::BudgetOut => {
                partial = true;
                break;
            }
        }
    }
    SeparationOutcome::Pass { cap, partial }
}

enum ScanResult {
    Violation(Vec<usize>, usize),
    Exhausted,
    BudgetOut,
}

fn separation_scan(
    g: &Graph,
    size: usize,
    bound: u64,
    start: usize,
    subset: &mut Vec<usize>,
    budget: &mut u64,
) -> ScanResult {
    if subset.len() == size {
        if *budget == 0 {
            return ScanResult::BudgetOut;
        }
        *budget -= 1;
        let comps = g.components_avoiding(subset).len();
        if comps as u64 > bound {
            return ScanResult::Violation(subset.clone(), comps);
        }
        return ScanResult::Exhausted;
    }
    let remaining = size - subset.len();
    for v in start..g.n() {
        if g.n() - v < remaining {
            break;
        }
        subset.push(v);
        match separation_scan(g, size, bound, v + 1, subset, budget) {
            ScanResult::Exhausted => {}
            other => {
                subset.pop();
                return other;
            }
        }
        subset.pop();
    }
    ScanResult::Exhausted
}

/// Exact dimension-3 decision: planar and 3-connected.
#[derive(Debug, Clone)]
pub enum SteinitzOutcome {
    Yes(PlanarEmbedding),
    NotPlanar(KuratowskiWitness),
    NotThreeConnected { cut: Vec<usize> },
    TooSmall,
}

pub fn steinitz_decide(g: &Graph) -> SteinitzOutcome {
    if g.n() < 4 {
        return SteinitzOutcome::TooSmall;
    }
    match is_planar(g) {
        PlanarityResult::NonPlanar(w) => SteinitzOutcome::NotPlanar(w),
        PlanarityResult::Planar(embedding) => {
            let (kappa, cut) = kappa_with_cut(g);
            if kappa >= 3 {
                SteinitzOutcome::Yes(embedding)
            } else {
                SteinitzOutcome::NotThreeConnected { cut }
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum WhitneyError {
    #[error("graph is not 3-polytopal: {0}")]
    NotThreePolytopal(String),
    #[error("face audit failed: {0}")]
    Audit(String),
}

/// The 2-faces of the unique 3-polytope realizing `g`: all induced
/// non-separating cycles, read off the (unique) planar embedding and audited.
pub fn whitney_2faces(g: &Graph) -> Result<Vec<Vec<usize>>, WhitneyError> {
    let embedding = match steinitz_decide(g) {
        SteinitzOutcome::Yes(e) => e,
        SteinitzOutcome::NotPlanar(_) => {
            return Err(WhitneyError::NotThreePolytopal("not planar".into()))
        }
        SteinitzOutcome::NotThreeConnected { .. } => {
            return Err(WhitneyError::NotThreePolytopal("not 3-connected".into()))
        }
        SteinitzOutcome::TooSmall => {
            return Err(WhitneyError::NotThreePolytopal(
                "fewer than 4 vertices".into(),
            ))
        }
    };
    let mut faces: Vec<Vec<usize>> = embedding
        .faces
        .iter()
        .map(|w| crate::graph::canonical_rotation(w))
        .collect();
    faces.sort();
    faces.dedup();
    // Audits: Euler count, each face induced and non-separating, every edge
    // in exactly two faces.
    if faces.len() != g.edge_count() - g.n() + 2 {
        return Err(WhitneyError::Audit(format!(
            "face count {} violates Euler",
            faces.len()
        )));
    }
    let mut edge_cover: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for face in &faces {
        if !crate::graph::is_chordless_cycle(g, face) {
            return Err(WhitneyError::Audit(format!("face {face:?} has a chord")));
        }
        if g.components_avoiding(face).len() > 1 {
            return Err(WhitneyError::Audit(format!("face {face:?} separates")));
        }
        let k = face.len();
        for i in 0..k {
            let (a, b) = (face[i], face[(i + 1) % k]);
            *edge_cover.entry((a.min(b), a.max(b))).or_default() += 1;
        }
    }
    if edge_cover.values().any(|&c| c != 2) || edge_cover.len() != g.edge_count() {
        return Err(WhitneyError::Audit("edge not in exactly two faces".into()));
    }
    Ok(faces)
}

/// One inverse star-clique move: a clique whose vertices each have exactly
/// one neighbor outside, contracted to a single vertex.
#[derive(Debug, Clone)]
pub struct ReverseStarClique {
    /// The clique, sorted.
    pub clique: Vec<usize>,
    /// Contracted graph: non-clique vertices keep their relative order,
    /// the contraction vertex is appended last.
    pub contracted: Graph,
    /// Map new index -> old index (contraction vertex maps to usize::MAX).
    pub vertex_map: Vec<usize>,
}

/// All inverse star-clique moves of `g`, validated by re-expansion: applying
/// the star-clique operation at the contraction vertex must reproduce `g` up
/// to isomorphism. Candidates failing the round trip (for example a triangle
/// of K4, whose outside neighbors coincide) are dropped.
pub fn reverse_star_clique(g: &Graph) -> Vec<ReverseStarClique> {
    let mut out = Vec::new();
    let n = g.n();
    let mut clique: Vec<usize> = Vec::new();
    let mut all = Vec::new();
    enumerate_cliques(g, 0, &mut clique, &mut all);
    for k in all {
        let mut outside = Vec::new();
        let mut ok = true;
        for &v in &k {
            let ext: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|w| !k.contains(w))
                .collect();
            if ext.len() != 1 {
                ok = false;
                break;
            }
            outside.push(ext[0]);
        }
        if !ok {
            continue;
        }
        // Contract: drop the clique, add a fresh vertex adjacent to the
        // (deduplicated) outside neighbors.
        let keep: Vec<usize> = (0..n).filter(|v| !k.contains(v)).collect();
        let old_to_new: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let nv = keep.len() + 1;
        let fresh = keep.len();
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|&(a, b)| !k.contains(&a) && !k.contains(&b))
            .map(|(a, b)| (old_to_new[&a], old_to_new[&b]))
            .collect();
        let mut targets: Vec<usize> = outside.iter().map(|w| old_to_new[w]).collect();
        targets.sort_unstable();
        targets.dedup();
        for &t in &targets {
            edges.push((fresh, t));
        }
        let contracted = match Graph::make(nv, &edges) {
            Ok(c) => c,
            Err(_) => continue,
        };
        // Round-trip audit: the re-expansion must reproduce g.
        if contracted.degree(fresh) != k.len() {
            continue;
        }
        let expanded = match crate::graph::star_clique(&contracted, fresh) {
            Ok(e) => e,
            Err(_) => continue,
        };
        if crate::graph::are_isomorphic(&expanded, g).is_none() {
            continue;
        }
        let mut vertex_map: Vec<usize> = keep.clone();
        vertex_map.push(usize::MAX);
        out.push(ReverseStarClique {
            clique: k,
            contracted,
            vertex_map,
        });
    }
    out
}

fn enumerate_cliques(g: &Graph, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() >= 3 {
        out.push(cur.clone());
    }
    for v in start..g.n() {
        if cur.iter().all(|&u| g.has_edge(u, v)) {
            cur.push(v);
            enumerate_cliques(g, v + 1, cur, out);
            cur.pop();
        }
    }
}

/// Iterated inverse star-clique search: returns a non-empty contraction
/// chain ending in a 4-regular planar 3-connected graph if one is found
/// within the step bound. Such a chain certifies non-polytopality of the
/// start graph. Greedy-first DFS with a visited-key cache; missing a chain
/// is sound (the rule simply does not fire), finding one is exact.
pub fn star_clique_chain_to_regular_base(g: &Graph, max_steps: usize) -> Option<Vec<Graph>> {
    fn key(g: &Graph) -> (usize, usize, Vec<usize>) {
        (g.n(), g.edge_count(), g.degree_sequence())
    }
    fn dfs(
        g: &Graph,
        depth: usize,
        max_steps: usize,
        chain: &mut Vec<Graph>,
        visited: &mut std::collections::BTreeSet<(usize, usize, Vec<usize>)>,
    ) -> bool {
        if depth > 0
            && g.regular_degree() == Some(4)
            && matches!(steinitz_decide(g), SteinitzOutcome::Yes(_))
        {
            return true;
        }
        if depth == max_steps {
            return false;
        }
        for mv in reverse_star_clique(g) {
            if !visited.insert(key(&mv.contracted)) {
                continue;
            }
            chain.push(mv.contracted.clone());
            if dfs(&mv.contracted, depth + 1, max_steps, chain, visited) {
                return true;
            }
            chain.pop();
        }
        false
    }
    let mut visited = std::collections::BTreeSet::new();
    let mut chain = vec![g.clone()];
    if dfs(g, 0, max_steps, &mut chain, &mut visited) {
        Some(chain)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, named_graph, star_clique, NamedFamily};

    #[test]
    fn balinski_examples() {
        let k5 = named_graph(&NamedFamily::Complete(5)).unwrap();
        assert!(matches!(balinski_check(&k5, 4), BalinskiOutcome::Pass));

        let g = named_graph(&NamedFamily::MarcAntonio(1)).unwrap();
        assert!(matches!(balinski_check(&g, 4), BalinskiOutcome::Pass));

        let c6 = named_graph(&NamedFamily::Cycle(6)).unwrap();
        match balinski_check(&c6, 3) {
            BalinskiOutcome::Cut { cut, .. } => assert_eq!(cut.len(), 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn psp_on_k5_uses_single_edges() {
        let k5 = named_graph(&NamedFamily::Complete(5)).unwrap();
        match psp_check(&k5, 4, Some(0), 1_000_000) {
            PspOutcome::Witnesses(ws) => {
                let w = &ws[0];
                assert!(w.verify(&k5));
                assert!(w.paths.iter().all(|(_, p)| p.len() == 2));
            }
            _ => panic!("K5 satisfies its own principal subdivision"),
        }
    }

    #[test]
    fn odd_antiprism_family_fails_psp_dimension_four() {
        let g = circulant(9, &[1, 2]).unwrap();
        match psp_check(&g, 4, None, 1_000_000) {
            PspOutcome::Failure(f) => assert!(f.exhausted),
            _ => panic!("expected genuine failure"),
        }
        let g = circulant(7, &[1, 2]).unwrap();
        match psp_check(&g, 4, None, 1_000_000) {
            PspOutcome::Failure(f) => assert!(f.exhausted),
            _ => panic!("expected genuine failure"),
        }
    }

    #[test]
    fn cocktail_party_fails_psp_at_degree() {
        let g = circulant(8, &[1, 2, 3]).unwrap();
        match psp_check(&g, 6, None, 1_000_000) {
            PspOutcome::Failure(f) => assert!(f.exhausted),
            _ => panic!("expected failure in dimension 6"),
        }
    }

    #[test]
    fn two_ring_family_has_psp_witness_at_origin() {
        let g = named_graph(&NamedFamily::MarcAntonio(1)).unwrap();
        match psp_check(&g, 4, Some(0), 1_000_000) {
            PspOutcome::Witnesses(ws) => assert!(ws[0].verify(&g)),
            _ => panic!("expected witness at the origin vertex"),
        }
    }

    #[test]
    fn psp_failure_stable_under_relabeling() {
        let g = circulant(9, &[1, 2]).unwrap();
        let perm: Vec<usize> = (0..9).map(|i| (i * 4 + 2) % 9).collect();
        let h = g.relabel(&perm);
        match psp_check(&h, 4, None, 1_000_000) {
            PspOutcome::Failure(f) => assert!(f.exhausted),
            _ => panic!("failure must be stable under relabeling"),
        }
    }

    #[test]
    fn separation_on_k5_passes() {
        let k5 = named_graph(&NamedFamily::Complete(5)).unwrap();
        assert!(matches!(
            separation_check(&k5, 4, 5, 1_000_000),
            SeparationOutcome::Pass { .. }
        ));
    }

    #[test]
    fn stacked_tetrahedron_passes_dimension_three() {
        let g = named_graph(&NamedFamily::KleeStacked(3, 4)).unwrap();
        // Equality 4 = 4 is not a violation.
        assert!(matches!(
            separation_check(&g, 3, 4, 1_000_000),
            SeparationOutcome::Pass { .. }
        ));
    }

    #[test]
    fn stacked_cyclic_46_fails_dimension_three() {
        let g = named_graph(&NamedFamily::KleeStacked(4, 6)).unwrap();
        match separation_check(&g, 3, 6, 10_000_000) {
            SeparationOutcome::Fail {
                separator,
                components,
                bound,
            } => {
                assert_eq!(separator.len(), 6);
                assert_eq!(components, 9);
                assert_eq!(bound, 8);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn steinitz_decisions() {
        let pent_prism = circulant(10, &[2, 5]).unwrap();
        assert!(matches!(
            steinitz_decide(&pent_prism),
            SteinitzOutcome::Yes(_)
        ));

        let k33 = named_graph(&NamedFamily::CompleteBipartite(3, 3)).unwrap();
        assert!(matches!(
            steinitz_decide(&k33),
            SteinitzOutcome::NotPlanar(_)
        ));

        let oct = circulant(6, &[1, 2]).unwrap();
        assert!(matches!(steinitz_decide(&oct), SteinitzOutcome::Yes(_)));
    }

    #[test]
    fn whitney_face_counts() {
        let cube = named_graph(&NamedFamily::Hypercube(3)).unwrap();
        let faces = whitney_2faces(&cube).unwrap();
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().all(|f| f.len() == 4));

        let prism = crate::graph::cartesian_product(
            &named_graph(&NamedFamily::Cycle(3)).unwrap(),
            &named_graph(&NamedFamily::Complete(2)).unwrap(),
        );
        let faces = whitney_2faces(&prism).unwrap();
        let tri = faces.iter().filter(|f| f.len() == 3).count();
        let sq = faces.iter().filter(|f| f.len() == 4).count();
        assert_eq!((tri, sq), (2, 3));
    }

    #[test]
    fn whitney_octahedron_excludes_separating_squares() {
        // Exactly the 8 triangles; the 3 induced squares separate.
        let oct = circulant(6, &[1, 2]).unwrap();
        let faces = whitney_2faces(&oct).unwrap();
        assert_eq!(faces.len(), 8);
        assert!(faces.iter().all(|f| f.len() == 3));
        // Independent oracle: enumeration plus separation audit.
        let all = crate::graph::induced_cycles(&oct, 6);
        let oracle: Vec<Vec<usize>> = all
            .into_iter()
            .filter(|c| oct.components_avoiding(c).len() <= 1)
            .collect();
        assert_eq!(faces, oracle);
    }

    #[test]
    fn whitney_rejects_ineligible_graphs() {
        let k33 = named_graph(&NamedFamily::CompleteBipartite(3, 3)).unwrap();
        assert!(matches!(
            whitney_2faces(&k33),
            Err(WhitneyError::NotThreePolytopal(_))
        ));
        let c6 = named_graph(&NamedFamily::Cycle(6)).unwrap();
        assert!(whitney_2faces(&c6).is_err());
    }

    #[test]
    fn reverse_star_clique_round_trip() {
        let k4 = named_graph(&NamedFamily::Complete(4)).unwrap();
        let s = star_clique(&k4, 0).unwrap();
        let moves = reverse_star_clique(&s);
        // The prism has two triangles, both reversible back to K4.
        assert_eq!(moves.len(), 2);
        for mv in &moves {
            assert!(crate::graph::are_isomorphic(&mv.contracted, &k4).is_some());
        }
    }

    #[test]
    fn k4_triangles_fail_re_expansion() {
        let k4 = named_graph(&NamedFamily::Complete(4)).unwrap();
        // All three outside neighbors coincide, so contraction gives K2 and
        // re-expansion cannot reproduce K4.
        assert!(reverse_star_clique(&k4).is_empty());
    }

    #[test]
    fn starred_star_polytope_contracts_to_its_base() {
        let (_, starred) = crate::geometry::davidsstar(3).unwrap();
        let chain = star_clique_chain_to_regular_base(&starred, 8).expect("chain");
        assert!(chain.len() >= 2);
        let last = chain.last().unwrap();
        assert_eq!(last.regular_degree(), Some(4));
        assert!(matches!(steinitz_decide(last), SteinitzOutcome::Yes(_)));
    }
}
