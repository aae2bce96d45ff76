//! Facet enumeration for exact rational point sets, skeleton extraction,
//! face lattices, and skeleton/graph verification.
//!
//! The hull algorithm enumerates hyperplanes spanned by affinely independent
//! point subsets and keeps the one-sided ones. O(n^(d+1)) but transparent and
//! exactly auditable, which is what this crate needs at desk scale.

use super::linalg::{
    self, affine_rank, dot, hyperplane_through, rat_to_string, solve_square, sub, Rat,
};
use super::{GeometryError, Hyperplane, PointConfig};
use crate::graph::{are_isomorphic, Graph};
use num_traits::Zero;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

pub const DEFAULT_HULL_CAP: usize = 64;

#[derive(Debug, Clone)]
pub struct Facet {
    /// Vertex indices (into the polytope's vertex list), sorted.
    pub vertices: Vec<usize>,
    /// Supporting inequality in ambient coordinates: normal · x <= offset.
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

#[derive(Debug, Clone)]
pub struct Polytope {
    /// Intrinsic dimension (affine rank of the vertices minus one).
    pub dim: usize,
    pub ambient_dim: usize,
    /// Hull vertices in input order (non-vertex input points stripped).
    pub vertices: Vec<Vec<Rat>>,
    pub facets: Vec<Facet>,
    /// Input points that were not vertices (reported, then stripped).
    pub stripped: Vec<Vec<Rat>>,
    pub label: String,
}

impl Polytope {
    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Facet vertex sets as bitmasks (vertex count <= 128 enforced by cap).
    pub fn facet_masks(&self) -> Vec<u128> {
        self.facets
            .iter()
            .map(|f| f.vertices.iter().fold(0u128, |m, &v| m | (1 << v)))
            .collect()
    }

    /// Deterministic content hash of the vertex coordinates and facets.
    pub fn content_hash(&self) -> String {
        let mut h = Fnv::new();
        for p in &self.vertices {
            for x in p {
                h.write(rat_to_string(x).as_bytes());
                h.write(b",");
            }
            h.write(b";");
        }
        for f in &self.facets {
            for &v in &f.vertices {
                h.write(&v.to_le_bytes());
            }
            h.write(b"|");
        }
        format!("fnv1a:{:016x}", h.finish())
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Polytope {
        self.label = label.into();
        self
    }
}

/// Full facet enumeration with exact supporting hyperplanes. Lower
/// dimensional input is handled by working inside the affine hull; the
/// reported hyperplanes are valid ambient supports.
pub fn convex_hull_facets(cfg: &PointConfig, cap: usize) -> Result<Polytope, GeometryError> {
    let cap = cap.min(128);
    if cfg.len() > cap {
        return Err(GeometryError::CapExceeded(cfg.len(), cap));
    }
    let arank = affine_rank(&cfg.points);
    if arank < 2 {
        return Err(GeometryError::Degenerate);
    }
    let dim = arank - 1;
    let ambient = cfg.dim;

    // Reduce to dim-dimensional coordinates if the input is degenerate.
    let (reduced, basis): (Vec<Vec<Rat>>, Option<AffineBasis>) = if dim == ambient {
        (cfg.points.clone(), None)
    } else {
        let basis = AffineBasis::from_points(&cfg.points, dim)?;
        let red = cfg
            .points
            .iter()
            .map(|p| basis.coordinates(p))
            .collect::<Option<Vec<_>>>()
            .ok_or(GeometryError::Degenerate)?;
        (red, Some(basis))
    };

    let n = reduced.len();
    let mut facet_map: BTreeMap<Vec<usize>, (Vec<Rat>, Rat)> = BTreeMap::new();
    let mut seen_planes: BTreeSet<(Vec<String>, String)> = BTreeSet::new();

    // dim == 1: facets are the two extreme points.
    if dim == 1 {
        let (mut lo, mut hi) = (0usize, 0usize);
        for i in 1..n {
            if reduced[i][0] < reduced[lo][0] {
                lo = i;
            }
            if reduced[i][0] > reduced[hi][0] {
                hi = i;
            }
        }
        facet_map.insert(vec![lo], (vec![-linalg::rat(1)], -reduced[lo][0].clone()));
        facet_map.insert(vec![hi], (vec![linalg::rat(1)], reduced[hi][0].clone()));
    } else {
        let mut subset: Vec<usize> = Vec::with_capacity(dim);
        enumerate_subsets(n, dim, &mut subset, &mut |s| {
            let pts: Vec<Vec<Rat>> = s.iter().map(|&i| reduced[i].clone()).collect();
            // hyperplane_through rejects affinely dependent subsets itself.
            let Some((normal, offset)) = hyperplane_through(&pts) else {
                return;
            };
            let key = (
                normal.iter().map(rat_to_string).collect::<Vec<_>>(),
                rat_to_string(&offset),
            );
            if !seen_planes.insert(key.clone()) {
                // Also try the flipped orientation key for dedup symmetry.
                return;
            }
            let mut neg = false;
            let mut pos = false;
            let mut tight = Vec::new();
            for (i, p) in reduced.iter().enumerate() {
                let val = dot(&normal, p) - &offset;
                if val.is_zero() {
                    tight.push(i);
                } else if val > Rat::zero() {
                    pos = true;
                } else {
                    neg = true;
                }
                if pos && neg {
                    return;
                }
            }
            // Orient the inequality so all points satisfy normal·x <= offset.
            // Plain negation keeps integrality; never re-canonicalize here,
            // that could flip the direction back.
            let (normal, offset) = if pos {
                (
                    normal.iter().map(|x| -x).collect::<Vec<Rat>>(),
                    -offset.clone(),
                )
            } else {
                (normal, offset)
            };
            facet_map.entry(tight).or_insert((normal, offset));
        });
    }

    // Vertex test: a point is a vertex iff its tight facet normals span R^dim.
    let facet_list: Vec<(Vec<usize>, (Vec<Rat>, Rat))> = facet_map.into_iter().collect();
    let mut is_vertex = vec![false; n];
    for i in 0..n {
        let normals: Vec<Vec<Rat>> = facet_list
            .iter()
            .filter(|(vs, _)| vs.binary_search(&i).is_ok())
            .map(|(_, (nm, _))| nm.clone())
            .collect();
        if linalg::rank(&normals) == dim {
            is_vertex[i] = true;
        }
    }

    let mut new_index = vec![usize::MAX; n];
    let mut vertices = Vec::new();
    let mut stripped = Vec::new();
    for i in 0..n {
        if is_vertex[i] {
            new_index[i] = vertices.len();
            vertices.push(cfg.points[i].clone());
        } else {
            stripped.push(cfg.points[i].clone());
        }
    }

    let mut facets = Vec::new();
    for (vs, (normal, offset)) in facet_list {
        let verts: Vec<usize> = vs
            .iter()
            .filter(|&&i| is_vertex[i])
            .map(|&i| new_index[i])
            .collect();
        // Map the hyperplane back to ambient coordinates if reduced.
        let (nrm, off) = match &basis {
            None => (normal, offset),
            Some(b) => b.lift_hyperplane(&normal, &offset),
        };
        facets.push(Facet {
            vertices: verts,
            normal: nrm,
            offset: off,
        });
    }
    facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let poly = Polytope {
        dim,
        ambient_dim: ambient,
        vertices,
        facets,
        stripped,
        label: String::new(),
    };
    audit_hull(&poly)?;
    Ok(poly)
}

/// Hull audit: every facet's hyperplane has all vertices on one closed side
/// with equality exactly on its vertex set.
fn audit_hull(p: &Polytope) -> Result<(), GeometryError> {
    for (fi, f) in p.facets.iter().enumerate() {
        let set: BTreeSet<usize> = f.vertices.iter().copied().collect();
        for (i, v) in p.vertices.iter().enumerate() {
            let val = dot(&f.normal, v) - &f.offset;
            if set.contains(&i) {
                if !val.is_zero() {
                    return Err(GeometryError::AuditFailed(format!(
                        "facet {fi} vertex {i} not on its hyperplane"
                    )));
                }
            } else if val >= Rat::zero() {
                return Err(GeometryError::AuditFailed(format!(
                    "facet {fi} does not strictly separate point {i}"
                )));
            }
        }
    }
    Ok(())
}

fn enumerate_subsets(n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let remaining = k - cur.len();
        for v in start..=(n - remaining) {
            cur.push(v);
            rec(v + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k <= n {
        rec(0, n, k, cur, f);
    }
}

/// Affine coordinate system for degenerate input: an origin point plus a
/// rational basis of difference vectors.
struct AffineBasis {
    origin: Vec<Rat>,
    basis: Vec<Vec<Rat>>, // dim vectors of ambient length
    gram: Vec<Vec<Rat>>,  // basis gram matrix, for coordinate solves
}

impl AffineBasis {
    fn from_points(points: &[Vec<Rat>], dim: usize) -> Result<AffineBasis, GeometryError> {
        let origin = points[0].clone();
        let mut basis: Vec<Vec<Rat>> = Vec::new();
        for p in &points[1..] {
            let d = sub(p, &origin);
            let mut trial = basis.clone();
            trial.push(d.clone());
            if linalg::rank(&trial) == basis.len() + 1 {
                basis.push(d);
                if basis.len() == dim {
                    break;
                }
            }
        }
        if basis.len() != dim {
            return Err(GeometryError::Degenerate);
        }
        let gram: Vec<Vec<Rat>> = basis
            .iter()
            .map(|a| basis.iter().map(|b| dot(a, b)).collect())
            .collect();
        Ok(AffineBasis {
            origin,
            basis,
            gram,
        })
    }

    /// Coordinates lambda with `sum lambda_i b_i = p - origin`, via the
    /// normal equations (exact since p lies in the affine hull).
    fn coordinates(&self, p: &[Rat]) -> Option<Vec<Rat>> {
        let d = sub(p, &self.origin);
        let rhs: Vec<Rat> = self.basis.iter().map(|b| dot(b, &d)).collect();
        let lambda = solve_square(&self.gram, &rhs)?;
        // Verify exactness (p must lie in the affine hull).
        let mut recon = vec![Rat::zero(); self.origin.len()];
        for (l, b) in lambda.iter().zip(&self.basis) {
            for (r, x) in recon.iter_mut().zip(b) {
                *r = &*r + &(l * x);
            }
        }
        (recon == d).then_some(lambda)
    }

    /// Lifts a reduced hyperplane (normal_red · lambda <= c) to ambient
    /// coordinates. The ambient functional x -> normal_red · coords(x) is
    /// linear; it is realized by B^T G^{-1} n_red applied to (x - origin).
    /// Only positive rescaling is applied, so the inequality direction is
    /// preserved.
    fn lift_hyperplane(&self, normal_red: &[Rat], offset: &Rat) -> (Vec<Rat>, Rat) {
        let w = solve_square(&self.gram, normal_red).expect("gram invertible");
        let ambient = self.origin.len();
        let mut nrm = vec![Rat::zero(); ambient];
        for (wi, b) in w.iter().zip(&self.basis) {
            for (nj, xj) in nrm.iter_mut().zip(b) {
                *nj = &*nj + &(wi * xj);
            }
        }
        let off = offset + dot(&nrm, &self.origin);
        (nrm, off)
    }
}

/// Skeleton graph: vertices of the hull, edges = 1-faces (pairs whose facet
/// intersection is exactly the pair).
pub fn skeleton_graph(p: &Polytope) -> Graph {
    let n = p.vertex_count();
    if p.dim == 1 {
        return Graph::make(n, &[(0, 1)]).expect("segment skeleton");
    }
    let masks = p.facet_masks();
    let full: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let mut inter = full;
            let mut any = false;
            for m in &masks {
                if m & (1 << u) != 0 && m & (1 << v) != 0 {
                    inter &= m;
                    any = true;
                }
            }
            if any && inter == (1u128 << u) | (1u128 << v) {
                edges.push((u, v));
            }
        }
    }
    Graph::make(n, &edges)
        .expect("skeleton is simple")
        .with_label(format!("skeleton({})", p.label))
}

/// Graded face lattice from vertex-facet incidences, as the closure of
/// facet-set intersections. Faces are vertex bitmasks.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    /// levels[k] = faces of dimension k-1 (so levels[0] = {empty face}),
    /// each a sorted list of vertex masks. The top entry is the polytope.
    pub levels: Vec<Vec<u128>>,
}

impl FaceLattice {
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    /// Proper faces only (no empty face, no full polytope).
    pub fn proper_face_counts(&self) -> Vec<usize> {
        let k = self.levels.len();
        self.levels[1..k - 1].iter().map(|l| l.len()).collect()
    }

    pub fn contains_face(&self, mask: u128) -> bool {
        self.levels.iter().any(|l| l.binary_search(&mask).is_ok())
    }
}

pub fn face_lattice(p: &Polytope) -> FaceLattice {
    let masks = p.facet_masks();
    let n = p.vertex_count();
    let full: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    let mut faces: BTreeSet<u128> = BTreeSet::new();
    faces.insert(full);
    let mut frontier: Vec<u128> = vec![full];
    while let Some(f) = frontier.pop() {
        for m in &masks {
            let g = f & m;
            if g != f && faces.insert(g) {
                frontier.push(g);
            }
        }
    }
    faces.insert(0);
    // Grade by affine rank of the vertex subsets.
    let mut levels: Vec<Vec<u128>> = vec![Vec::new(); p.dim + 2];
    for f in faces {
        let pts: Vec<Vec<Rat>> = (0..n)
            .filter(|&i| f & (1 << i) != 0)
            .map(|i| p.vertices[i].clone())
            .collect();
        let d = if pts.is_empty() { 0 } else { affine_rank(&pts) };
        levels[d].push(f);
    }
    for l in levels.iter_mut() {
        l.sort_unstable();
    }
    FaceLattice { levels }
}

/// Isomorphism of graded face lattices via iterative color refinement on the
/// Hasse relation plus backtracking.
pub fn lattices_isomorphic(a: &FaceLattice, b: &FaceLattice) -> bool {
    if a.f_vector() != b.f_vector() {
        return false;
    }
    let fa = flatten(a);
    let fb = flatten(b);
    let ca = refine(&fa);
    let cb = refine(&fb);
    let mut ma: Vec<u64> = ca.clone();
    let mut mb: Vec<u64> = cb.clone();
    ma.sort_unstable();
    mb.sort_unstable();
    if ma != mb {
        return false;
    }
    // Backtracking on faces ordered by color class size.
    let n = fa.nodes.len();
    let mut order: Vec<usize> = (0..n).collect();
    let mut class_size: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in &ca {
        *class_size.entry(c).or_default() += 1;
    }
    order.sort_by_key(|&v| (class_size[&ca[v]], ca[v], v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(&fa, &fb, &ca, &cb, &order, 0, &mut map, &mut used)
}

struct FlatLattice {
    nodes: Vec<(usize, u128)>, // (level, mask)
    covers: Vec<Vec<usize>>,   // node -> nodes it covers (one level down, subset)
}

fn flatten(l: &FaceLattice) -> FlatLattice {
    let mut nodes = Vec::new();
    for (lev, faces) in l.levels.iter().enumerate() {
        for &f in faces {
            nodes.push((lev, f));
        }
    }
    let covers: Vec<Vec<usize>> = nodes
        .iter()
        .map(|&(lev, f)| {
            nodes
                .iter()
                .enumerate()
                .filter(|&(_, &(l2, g))| l2 + 1 == lev && g & f == g)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    FlatLattice { nodes, covers }
}

fn refine(fl: &FlatLattice) -> Vec<u64> {
    let n = fl.nodes.len();
    let mut color: Vec<u64> = fl
        .nodes
        .iter()
        .map(|&(lev, mask)| ((lev as u64) << 32) | mask.count_ones() as u64)
        .collect();
    let parents: Vec<Vec<usize>> = {
        let mut p = vec![Vec::new(); n];
        for (i, cov) in fl.covers.iter().enumerate() {
            for &j in cov {
                p[j].push(i);
            }
        }
        p
    };
    for _ in 0..n.min(16) {
        let sig: Vec<(u64, Vec<u64>, Vec<u64>)> = (0..n)
            .map(|i| {
                let mut down: Vec<u64> = fl.covers[i].iter().map(|&j| color[j]).collect();
                let mut up: Vec<u64> = parents[i].iter().map(|&j| color[j]).collect();
                down.sort_unstable();
                up.sort_unstable();
                (color[i], down, up)
            })
            .collect();
        let mut sorted = sig.clone();
        sorted.sort();
        sorted.dedup();
        let index: BTreeMap<&(u64, Vec<u64>, Vec<u64>), u64> = sorted
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i as u64))
            .collect();
        let next: Vec<u64> = (0..n).map(|i| index[&sig[i]]).collect();
        if next == color {
            break;
        }
        color = next;
    }
    color
}

fn backtrack(
    fa: &FlatLattice,
    fb: &FlatLattice,
    ca: &[u64],
    cb: &[u64],
    order: &[usize],
    k: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if k == order.len() {
        return true;
    }
    let i = order[k];
    'cand: for j in 0..fb.nodes.len() {
        if used[j] || cb[j] != ca[i] {
            continue;
        }
        // Cover relation must be preserved against already-mapped nodes.
        for &c in &fa.covers[i] {
            if map[c] != usize::MAX && !fb.covers[j].contains(&map[c]) {
                continue 'cand;
            }
        }
        // Reverse direction: mapped nodes covering i must cover j's image.
        for prev in order[..k].iter() {
            let p = *prev;
            let covers_ip = fa.covers[p].contains(&i);
            let covers_jq = fb.covers[map[p]].contains(&j);
            if covers_ip != covers_jq {
                continue 'cand;
            }
            let covered_by_ip = fa.covers[i].contains(&p);
            let covered_by_jq = fb.covers[j].contains(&map[p]);
            if covered_by_ip != covered_by_jq {
                continue 'cand;
            }
        }
        map[i] = j;
        used[j] = true;
        if backtrack(fa, fb, ca, cb, order, k + 1, map, used) {
            return true;
        }
        map[i] = usize::MAX;
        used[j] = false;
    }
    false
}

/// Result of matching a polytope's skeleton against a graph.
#[derive(Debug, Clone, Serialize)]
pub enum GraphMatch {
    /// Image of each skeleton vertex in the target graph.
    Bijection(Vec<usize>),
    Mismatch {
        reason: String,
    },
}

/// Verifies that the skeleton of `p` is isomorphic to `g`.
pub fn verify_graph(p: &Polytope, g: &Graph) -> GraphMatch {
    let sk = skeleton_graph(p);
    if sk.n() != g.n() {
        return GraphMatch::Mismatch {
            reason: format!("vertex counts differ: {} vs {}", sk.n(), g.n()),
        };
    }
    if sk.edge_count() != g.edge_count() {
        return GraphMatch::Mismatch {
            reason: format!(
                "edge counts differ: {} vs {}",
                sk.edge_count(),
                g.edge_count()
            ),
        };
    }
    // Fast path: identity.
    if sk.edges() == g.edges() {
        return GraphMatch::Bijection((0..g.n()).collect());
    }
    match are_isomorphic(&sk, g) {
        Some(map) => GraphMatch::Bijection(map),
        None => {
            let reason = if sk.degree_sequence() != g.degree_sequence() {
                "degree sequences differ".to_string()
            } else {
                "no isomorphism (exhaustive search)".to_string()
            };
            GraphMatch::Mismatch { reason }
        }
    }
}

impl From<&Facet> for Hyperplane {
    fn from(f: &Facet) -> Hyperplane {
        Hyperplane {
            normal: f.normal.iter().map(rat_to_string).collect(),
            offset: rat_to_string(&f.offset),
        }
    }
}

/// FNV-1a, for deterministic content hashes (not cryptographic).
pub struct Fnv(u64);

impl Fnv {
    pub fn new() -> Fnv {
        Fnv(0xcbf29ce484222325)
    }
    pub fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x100000001b3);
        }
    }
    pub fn finish(&self) -> u64 {
        self.0
    }
}

impl Default for Fnv {
    fn default() -> Self {
        Fnv::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::linalg::rat;

    fn cube_points(d: usize) -> PointConfig {
        let mut pts = Vec::new();
        for bits in 0..(1usize << d) {
            pts.push((0..d).map(|i| rat(((bits >> i) & 1) as i64)).collect());
        }
        PointConfig::new(pts).unwrap()
    }

    #[test]
    fn cube_has_six_facets() {
        let p = convex_hull_facets(&cube_points(3), 64).unwrap();
        assert_eq!(p.facet_count(), 6);
        assert_eq!(p.vertex_count(), 8);
        assert_eq!(p.dim, 3);
        let sk = skeleton_graph(&p);
        assert_eq!(sk.edge_count(), 12);
        assert_eq!(sk.regular_degree(), Some(3));
    }

    #[test]
    fn moment_curve_six_points_dim_four() {
        let pts: Vec<Vec<Rat>> = (1..=6)
            .map(|t| {
                let t = rat(t);
                vec![t.clone(), &t * &t, &t * &t * &t, &t * &t * &t * &t]
            })
            .collect();
        let p = convex_hull_facets(&PointConfig::new(pts).unwrap(), 64).unwrap();
        assert_eq!(p.facet_count(), 9); // m(m-3)/2 with m = 6
        let sk = skeleton_graph(&p);
        assert!(sk.is_complete());
    }

    #[test]
    fn cross_polytope_facets() {
        let d = 4;
        let mut pts = Vec::new();
        for i in 0..d {
            for s in [1i64, -1] {
                let mut p = vec![rat(0); d];
                p[i] = rat(s);
                pts.push(p);
            }
        }
        let p = convex_hull_facets(&PointConfig::new(pts).unwrap(), 64).unwrap();
        assert_eq!(p.facet_count(), 16); // 2^d
    }

    #[test]
    fn interior_points_are_stripped() {
        let mut pts = cube_points(2).points;
        pts.push(vec![rat_half(), rat_half()]);
        let p = convex_hull_facets(&PointConfig::new(pts).unwrap(), 64).unwrap();
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.stripped.len(), 1);
    }

    fn rat_half() -> Rat {
        super::super::linalg::rat_frac(1, 2)
    }

    #[test]
    fn degenerate_input_uses_affine_hull() {
        // A square embedded in 3-space on the plane z = x + 1.
        let pts = vec![
            vec![rat(0), rat(0), rat(1)],
            vec![rat(1), rat(0), rat(2)],
            vec![rat(0), rat(1), rat(1)],
            vec![rat(1), rat(1), rat(2)],
        ];
        let p = convex_hull_facets(&PointConfig::new(pts).unwrap(), 64).unwrap();
        assert_eq!(p.dim, 2);
        assert_eq!(p.facet_count(), 4);
        let sk = skeleton_graph(&p);
        assert!(sk.is_cycle_graph());
    }

    #[test]
    fn simplex_lattice_levels() {
        // Tetrahedron: proper faces 4 + 6 + 4.
        let pts = vec![
            vec![rat(0), rat(0), rat(0)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ];
        let p = convex_hull_facets(&PointConfig::new(pts).unwrap(), 64).unwrap();
        let l = face_lattice(&p);
        assert_eq!(l.proper_face_counts(), vec![4, 6, 4]);
    }

    #[test]
    fn lattice_iso_distinguishes_cube_from_simplex_products() {
        let cube = convex_hull_facets(&cube_points(3), 64).unwrap();
        let l1 = face_lattice(&cube);
        let l2 = face_lattice(&cube);
        assert!(lattices_isomorphic(&l1, &l2));
    }
}
