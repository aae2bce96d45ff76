//! The witness polytope catalog: named polytopes, products, joins, Minkowski
//! sums, pyramids, vertex truncation, stacked polytopes and the star polytope
//! family.

use super::hull::{convex_hull_facets, skeleton_graph, Polytope, DEFAULT_HULL_CAP};
use super::linalg::{add, dot, rat, rat_frac, scale, sub, Rat};
use super::{GeometryError, PointConfig};
use crate::graph::{are_isomorphic, star_clique, Graph};
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedPolytope {
    /// Standard d-simplex (origin plus unit vectors).
    Simplex(usize),
    /// 0/1 cube.
    Cube(usize),
    /// Cross-polytope conv(±e_i).
    CrossPolytope(usize),
    /// Cyclic polytope C_d(n) on the moment curve t = 1..n.
    Cyclic(usize, usize),
    /// Convex n-gon on the unit circle (exact rational points).
    Polygon(usize),
    /// Segment [-1, 1].
    Segment,
    /// Prism over an n-gon.
    Prism(usize),
    /// Antiprism over an m-gon.
    Antiprism(usize),
    Octahedron,
}

pub fn named_polytope(which: &NamedPolytope) -> Result<Polytope, GeometryError> {
    match *which {
        NamedPolytope::Simplex(d) => {
            if d < 1 {
                return Err(GeometryError::BadParams("simplex needs d >= 1".into()));
            }
            let mut pts = vec![vec![rat(0); d]];
            for i in 0..d {
                let mut p = vec![rat(0); d];
                p[i] = rat(1);
                pts.push(p);
            }
            hull_labeled(pts, format!("simplex({d})"))
        }
        NamedPolytope::Cube(d) => {
            if d < 1 {
                return Err(GeometryError::BadParams("cube needs d >= 1".into()));
            }
            let pts: Vec<Vec<Rat>> = (0..1usize << d)
                .map(|bits| (0..d).map(|i| rat(((bits >> i) & 1) as i64)).collect())
                .collect();
            hull_labeled(pts, format!("cube({d})"))
        }
        NamedPolytope::CrossPolytope(d) => {
            if d < 1 {
                return Err(GeometryError::BadParams("cross needs d >= 1".into()));
            }
            let mut pts = Vec::new();
            for i in 0..d {
                for s in [1i64, -1] {
                    let mut p = vec![rat(0); d];
                    p[i] = rat(s);
                    pts.push(p);
                }
            }
            hull_labeled(pts, format!("cross({d})"))
        }
        NamedPolytope::Cyclic(d, n) => {
            if d < 2 || n < d + 1 {
                return Err(GeometryError::BadParams(format!(
                    "cyclic needs 2 <= d < n, got d={d} n={n}"
                )));
            }
            let pts: Vec<Vec<Rat>> = (1..=n as i64)
                .map(|t| {
                    let mut p = Vec::with_capacity(d);
                    let mut cur = rat(1);
                    for _ in 0..d {
                        cur = &cur * &rat(t);
                        p.push(cur.clone());
                    }
                    p
                })
                .collect();
            hull_labeled(pts, format!("cyclic({d},{n})"))
        }
        NamedPolytope::Polygon(n) => {
            let pts = polygon(n)?;
            hull_labeled(pts, format!("polygon({n})"))
        }
        NamedPolytope::Segment => hull_labeled(vec![vec![rat(-1)], vec![rat(1)]], "segment".into()),
        NamedPolytope::Prism(n) => {
            let gon = named_polytope(&NamedPolytope::Polygon(n))?;
            let seg = named_polytope(&NamedPolytope::Segment)?;
            Ok(product_polytope(&seg, &gon)?.relabel(format!("prism({n})")))
        }
        NamedPolytope::Antiprism(m) => antiprism(m),
        NamedPolytope::Octahedron => {
            Ok(named_polytope(&NamedPolytope::CrossPolytope(3))?.relabel("octahedron"))
        }
    }
}

fn hull_labeled(points: Vec<Vec<Rat>>, label: String) -> Result<Polytope, GeometryError> {
    let cfg = PointConfig::new(points)?;
    Ok(convex_hull_facets(&cfg, DEFAULT_HULL_CAP)?.relabel(label))
}

/// n distinct exact rational points on the unit circle in convex position,
/// approximating the regular n-gon. Uses the tangent half-angle
/// parametrization, so every point lies exactly on the circle.
pub fn polygon(n: usize) -> Result<Vec<Vec<Rat>>, GeometryError> {
    if n < 3 {
        return Err(GeometryError::BadParams("polygon needs n >= 3".into()));
    }
    circle_points(&(0..n).map(|k| (k as f64) / (n as f64)).collect::<Vec<_>>())
}

/// Rational points on the unit circle at approximately the given fractions
/// of a full turn (each in [0, 1)).
fn circle_points(turns: &[f64]) -> Result<Vec<Vec<Rat>>, GeometryError> {
    let pts = circle_points_with_precision(turns, 100_000)?;
    // Distinctness audit.
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            if pts[i] == pts[j] {
                return Err(GeometryError::BadParams(
                    "circle approximation collided; increase precision".into(),
                ));
            }
        }
    }
    Ok(pts)
}

/// Nearest rational with the given denominator.
fn rational_approx(x: f64, denom: i64) -> Rat {
    let num = (x * denom as f64).round() as i64;
    rat_frac(num, denom)
}

/// Antiprism over an m-gon: top ring at height 1, bottom ring rotated half a
/// step at height -1. The combinatorics is coordinate-robust; the hull audit
/// plus a skeleton check against the expected circulant guards the rational
/// approximation, retrying with finer precision if needed.
fn antiprism(m: usize) -> Result<Polytope, GeometryError> {
    if m < 3 {
        return Err(GeometryError::BadParams("antiprism needs m >= 3".into()));
    }
    let expected = crate::graph::circulant(2 * m, &[1, 2])
        .map_err(|e| GeometryError::BadParams(e.to_string()))?;
    for precision in [100_000i64, 10_000_000, 1_000_000_000] {
        let mut turns = Vec::new();
        for k in 0..m {
            turns.push(k as f64 / m as f64);
        }
        for k in 0..m {
            turns.push((k as f64 + 0.5) / m as f64);
        }
        let ring = circle_points_with_precision(&turns, precision)?;
        let mut pts = Vec::new();
        for (i, xy) in ring.iter().enumerate() {
            let z = if i < m { rat(1) } else { rat(-1) };
            pts.push(vec![xy[0].clone(), xy[1].clone(), z]);
        }
        let p = hull_labeled(pts, format!("antiprism({m})"))?;
        let sk = skeleton_graph(&p);
        // Vertex i on top ring, m+i on bottom: expected adjacency is the
        // circulant pattern after interleaving the rings.
        let interleave: Vec<usize> = (0..2 * m)
            .map(|i| if i % 2 == 0 { i / 2 } else { m + i / 2 })
            .collect();
        let relabeled = sk.relabel(&interleave);
        if are_isomorphic(&relabeled, &expected).is_some() {
            return Ok(p);
        }
    }
    Err(GeometryError::AuditFailed(format!(
        "antiprism({m}) rational approximation never matched the expected skeleton"
    )))
}

fn circle_points_with_precision(
    turns: &[f64],
    precision: i64,
) -> Result<Vec<Vec<Rat>>, GeometryError> {
    let mut pts = Vec::with_capacity(turns.len());
    for &f in turns {
        let theta = 2.0 * std::f64::consts::PI * f;
        let half = theta / 2.0;
        let p = if (f - 0.5).abs() < 1e-12 {
            vec![rat(-1), rat(0)]
        } else {
            let t = half.tan();
            let tr = rational_approx(t, precision);
            let one = rat(1);
            let t2 = &tr * &tr;
            let denom = &one + &t2;
            vec![(&one - &t2) / &denom, (&tr + &tr) / &denom]
        };
        pts.push(p);
    }
    Ok(pts)
}

/// Cartesian product: coordinates concatenated, vertex (i, j) at index
/// i * |Q| + j. The skeleton is audited against the product of skeletons.
pub fn product_polytope(p: &Polytope, q: &Polytope) -> Result<Polytope, GeometryError> {
    let mut pts = Vec::with_capacity(p.vertex_count() * q.vertex_count());
    for a in &p.vertices {
        for b in &q.vertices {
            let mut v = a.clone();
            v.extend_from_slice(b);
            pts.push(v);
        }
    }
    let label = format!("{}×{}", p.label, q.label);
    let prod = hull_labeled(pts, label)?;
    // Audit: vertex order is (i, j)-major, so the product skeleton must match
    // under the identity map.
    let expected = crate::graph::cartesian_product(&skeleton_graph(p), &skeleton_graph(q));
    let got = skeleton_graph(&prod);
    if got.edges() != expected.edges() {
        return Err(GeometryError::AuditFailed(format!(
            "product skeleton mismatch for {}",
            prod.label
        )));
    }
    Ok(prod)
}

/// Join: embed P and Q in complementary affine subspaces at heights 0 and 1.
pub fn join_polytope(p: &Polytope, q: &Polytope) -> Result<Polytope, GeometryError> {
    let (dp, dq) = (p.ambient_dim, q.ambient_dim);
    let mut pts = Vec::new();
    for a in &p.vertices {
        let mut v = a.clone();
        v.extend(std::iter::repeat_n(rat(0), dq + 1));
        pts.push(v);
    }
    for b in &q.vertices {
        let mut v = vec![rat(0); dp];
        v.extend_from_slice(b);
        v.push(rat(1));
        pts.push(v);
    }
    hull_labeled(pts, format!("join({},{})", p.label, q.label))
}

/// Minkowski sum: hull of pairwise sums.
pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope, GeometryError> {
    if p.ambient_dim != q.ambient_dim {
        return Err(GeometryError::BadParams(
            "minkowski sum needs equal ambient dimensions".into(),
        ));
    }
    let mut pts: Vec<Vec<Rat>> = Vec::new();
    for a in &p.vertices {
        for b in &q.vertices {
            let s = add(a, b);
            if !pts.contains(&s) {
                pts.push(s);
            }
        }
    }
    hull_labeled(pts, format!("minkowski({},{})", p.label, q.label))
}

/// Pyramid over P with apex above the vertex centroid.
pub fn pyramid(p: &Polytope, apex_height: &Rat) -> Result<Polytope, GeometryError> {
    if apex_height.is_zero() {
        return Err(GeometryError::BadParams(
            "apex height must be nonzero".into(),
        ));
    }
    let mut pts = Vec::new();
    for v in &p.vertices {
        let mut w = v.clone();
        w.push(rat(0));
        pts.push(w);
    }
    let mut apex = centroid(&p.vertices);
    apex.push(apex_height.clone());
    pts.push(apex);
    hull_labeled(pts, format!("pyramid({})", p.label))
}

pub fn centroid(points: &[Vec<Rat>]) -> Vec<Rat> {
    let d = points[0].len();
    let n = rat(points.len() as i64);
    let mut c = vec![Rat::zero(); d];
    for p in points {
        for (ci, xi) in c.iter_mut().zip(p) {
            *ci = &*ci + xi;
        }
    }
    c.into_iter().map(|x| x / &n).collect()
}

/// Truncates a simple vertex: replace `v` by points `v + t (w - v)` for each
/// neighbor w. The parameter is auto-shrunk (halved) until the hull audit
/// passes: all new points are vertices, no old vertex is cut off, and
/// exactly one facet is added.
pub fn truncate_vertex(p: &Polytope, v: usize, t: &Rat) -> Result<Polytope, GeometryError> {
    let sk = skeleton_graph(p);
    if v >= sk.n() {
        return Err(GeometryError::BadParams(format!("no vertex {v}")));
    }
    let deg = sk.degree(v);
    if deg != p.dim {
        return Err(GeometryError::NotSimpleVertex(v, deg, p.dim));
    }
    if !(t > &Rat::zero() && t < &rat(1)) {
        return Err(GeometryError::BadParams("t must lie in (0,1)".into()));
    }
    let mut t = t.clone();
    for _attempt in 0..40 {
        let mut pts: Vec<Vec<Rat>> = Vec::new();
        for (i, pt) in p.vertices.iter().enumerate() {
            if i != v {
                pts.push(pt.clone());
            }
        }
        for &w in sk.neighbors(v) {
            let dir = sub(&p.vertices[w], &p.vertices[v]);
            pts.push(add(&p.vertices[v], &scale(&dir, &t)));
        }
        let cfg = PointConfig::new(pts)?;
        let trunc = convex_hull_facets(&cfg, DEFAULT_HULL_CAP.max(cfg.len()))?;
        let keeps_all = trunc.stripped.is_empty();
        let facet_gain = trunc.facet_count() == p.facet_count() + 1;
        if keeps_all && facet_gain {
            return Ok(trunc.relabel(format!("truncate({},{v})", p.label)));
        }
        t /= rat(2);
    }
    Err(GeometryError::AuditFailed(format!(
        "truncation parameter never became admissible at vertex {v}"
    )))
}

/// Cyclic polytope with one vertex stacked beyond every facet. The stacked
/// polytope realizes a graph whose only possible dimension is d.
pub fn stacked_cyclic(d: usize, n: usize) -> Result<Polytope, GeometryError> {
    let base = named_polytope(&NamedPolytope::Cyclic(d, n))?;
    let inner = centroid(&base.vertices);
    let mut t = rat_frac(1, 4);
    'shrink: for _ in 0..40 {
        let mut pts = base.vertices.clone();
        for f in &base.facets {
            // Apex beyond facet f: move from the facet centroid away from the
            // interior point, crossing the facet hyperplane by factor t.
            let fc = centroid(
                &f.vertices
                    .iter()
                    .map(|&i| base.vertices[i].clone())
                    .collect::<Vec<_>>(),
            );
            let dir = sub(&fc, &inner);
            let apex = add(&fc, &scale(&dir, &t));
            pts.push(apex);
        }
        let cfg = PointConfig::new(pts)?;
        let stacked = convex_hull_facets(&cfg, DEFAULT_HULL_CAP.max(cfg.len()))?;
        if !stacked.stripped.is_empty() {
            t /= rat(2);
            continue;
        }
        // Audit: each apex must see exactly its facet (degree d in skeleton)
        // and all base edges must survive.
        let sk = skeleton_graph(&stacked);
        let base_sk = skeleton_graph(&base);
        for (u, v) in base_sk.edges() {
            if !sk.has_edge(u, v) {
                t /= rat(2);
                continue 'shrink;
            }
        }
        for apex in base.vertex_count()..stacked.vertex_count() {
            if sk.degree(apex) != d {
                t /= rat(2);
                continue 'shrink;
            }
        }
        return Ok(stacked.relabel(format!("stacked_cyclic({d},{n})")));
    }
    Err(GeometryError::AuditFailed(
        "stacking height never became admissible".into(),
    ))
}

/// Skeleton of the stacked cyclic polytope (plumbing for graph generators).
pub fn klee_stacked_graph(d: usize, n: usize) -> Result<Graph, GeometryError> {
    Ok(skeleton_graph(&stacked_cyclic(d, n)?))
}

/// Star polytope: the Minkowski sum of two pyramids over n-gons, one apex up
/// and one apex down, the base polygons interleaved by half a step. Its
/// vertex set is an outer 2n-ring in the plane plus two lifted inner n-rings
/// at heights ±1. Returns the polytope together with the starred graph
/// variant (star-clique applied at every outer-ring vertex).
///
/// Building through the Minkowski sum keeps the quadrilateral faces exactly
/// planar (they are edge-plus-edge parallelograms), so the combinatorics
/// survives the rational approximation of the regular polygons.
pub fn davidsstar(n: usize) -> Result<(Polytope, Graph), GeometryError> {
    if n < 3 {
        return Err(GeometryError::BadParams("davidsstar needs n >= 3".into()));
    }
    let m = 2 * n;
    let half = rat_frac(1, 2);
    let ring_a = circle_points(&(0..n).map(|k| k as f64 / n as f64).collect::<Vec<_>>())?;
    let ring_b = circle_points(
        &(0..n)
            .map(|k| (k as f64 + 0.5) / n as f64)
            .collect::<Vec<_>>(),
    )?;
    let mut pyr1: Vec<Vec<Rat>> = ring_a
        .iter()
        .map(|xy| vec![&xy[0] * &half, &xy[1] * &half, rat(0)])
        .collect();
    pyr1.push(vec![rat(0), rat(0), rat(1)]);
    let mut pyr2: Vec<Vec<Rat>> = ring_b
        .iter()
        .map(|xy| vec![&xy[0] * &half, &xy[1] * &half, rat(0)])
        .collect();
    pyr2.push(vec![rat(0), rat(0), rat(-1)]);
    let p1 = hull_labeled(pyr1, "pyramid-up".into())?;
    let p2 = hull_labeled(pyr2, "pyramid-down".into())?;
    let p = minkowski_sum(&p1, &p2)?.relabel(format!("davidsstar({n})"));

    // Layout audit: 2n outer vertices on the plane z = 0, n at height 1,
    // n at height -1, and a 4-regular skeleton.
    if p.vertex_count() != 2 * m {
        return Err(GeometryError::AuditFailed(format!(
            "davidsstar({n}): expected {} vertices, hull kept {}",
            2 * m,
            p.vertex_count()
        )));
    }
    let outer: Vec<usize> = (0..p.vertex_count())
        .filter(|&i| p.vertices[i][2].is_zero())
        .collect();
    let top = (0..p.vertex_count())
        .filter(|&i| p.vertices[i][2].is_positive())
        .count();
    let bottom = (0..p.vertex_count())
        .filter(|&i| p.vertices[i][2].is_negative())
        .count();
    if outer.len() != m || top != n || bottom != n {
        return Err(GeometryError::AuditFailed(format!(
            "davidsstar({n}): ring layout {}/{top}/{bottom} unexpected",
            outer.len()
        )));
    }
    let sk = skeleton_graph(&p);
    if sk.regular_degree() != Some(4) {
        return Err(GeometryError::AuditFailed(format!(
            "davidsstar({n}): skeleton not 4-regular"
        )));
    }
    // Starred variant: star-clique every outer-ring vertex.
    let mut starred = sk.clone();
    for &v in &outer {
        starred =
            star_clique(&starred, v).map_err(|e| GeometryError::AuditFailed(e.to_string()))?;
    }
    let starred = starred.with_label(format!("davidsstar_star({n})"));
    Ok((p, starred))
}

/// Interior-point test against the facet inequalities.
pub fn strictly_interior(p: &Polytope, x: &[Rat]) -> bool {
    p.facets
        .iter()
        .all(|f| (dot(&f.normal, x) - &f.offset).is_negative())
}
