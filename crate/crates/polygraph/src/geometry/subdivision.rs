//! Regular subdivisions from liftings, and the lifted product construction
//! that realizes products of a polytopal graph with a subdivision graph.

use super::constructions::{centroid, named_polytope, strictly_interior, NamedPolytope};
use super::hull::{convex_hull_facets, face_lattice, skeleton_graph, Polytope, DEFAULT_HULL_CAP};
use super::linalg::{sub, Rat};
use super::{GeometryError, PointConfig};
use crate::graph::Graph;
use num_traits::{Signed, Zero};

/// Heights for the points of a configuration (vertices of the polytope being
/// subdivided plus optional extra points appended after them).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lifting {
    pub heights: Vec<Rat>,
}

impl Lifting {
    pub fn constant(n: usize, h: Rat) -> Lifting {
        Lifting {
            heights: vec![h; n],
        }
    }
}

/// A polyhedral subdivision induced by a lifting: the projections of the
/// upper facets of the lifted hull.
#[derive(Debug, Clone)]
pub struct SubdivisionComplex {
    /// Vertex index sets of the cells (sorted), sorted lexicographically.
    pub cells: Vec<Vec<usize>>,
    /// Union of the cell skeletons, on the full point index set.
    pub graph: Graph,
    /// Points that appear in at least one cell (on the upper envelope).
    pub used: Vec<usize>,
}

/// Computes the regular subdivision of the hull of `cfg` induced by lifting
/// each point `q` to `(q, heights[q])` and projecting the upper facets.
/// A constant (or any affine) lifting yields the trivial subdivision.
pub fn regular_subdivision(
    cfg: &PointConfig,
    lifting: &Lifting,
) -> Result<SubdivisionComplex, GeometryError> {
    if lifting.heights.len() != cfg.len() {
        return Err(GeometryError::Lifting(format!(
            "lifting covers {} points, configuration has {}",
            lifting.heights.len(),
            cfg.len()
        )));
    }
    let lifted: Vec<Vec<Rat>> = cfg
        .points
        .iter()
        .zip(&lifting.heights)
        .map(|(p, h)| {
            let mut q = p.clone();
            q.push(h.clone());
            q
        })
        .collect();
    let base = convex_hull_facets(cfg, DEFAULT_HULL_CAP.max(cfg.len()))?;
    let lifted_rank = super::linalg::affine_rank(&lifted);
    let cells: Vec<Vec<usize>> = if lifted_rank == base.dim + 1 {
        // Affine lifting: single trivial cell on the hull's vertices.
        // Identify base vertices by matching coordinates back to cfg indices.
        let mut cell = Vec::new();
        for (i, p) in cfg.points.iter().enumerate() {
            if base.vertices.contains(p) {
                cell.push(i);
            }
        }
        vec![cell]
    } else {
        // Hull in one dimension up; keep facets whose outward normal points
        // upward in the lifting coordinate.
        let lcfg = PointConfig::new(lifted)?;
        let lifted_hull = convex_hull_facets(&lcfg, DEFAULT_HULL_CAP.max(lcfg.len()))?;
        // Map lifted-hull vertex indices back to cfg indices.
        let back: Vec<usize> = lifted_hull
            .vertices
            .iter()
            .map(|v| {
                let q = &v[..cfg.dim];
                cfg.points
                    .iter()
                    .position(|p| p == q)
                    .expect("lifted vertex projects to an input point")
            })
            .collect();
        let e = cfg.dim;
        let mut cells: Vec<Vec<usize>> = lifted_hull
            .facets
            .iter()
            .filter(|f| f.normal[e].is_positive())
            .map(|f| {
                let mut cell: Vec<usize> = f.vertices.iter().map(|&i| back[i]).collect();
                cell.sort_unstable();
                cell
            })
            .collect();
        cells.sort();
        cells
    };

    // Cell skeleta and their union.
    let mut edges = Vec::new();
    let mut used: Vec<usize> = Vec::new();
    for cell in &cells {
        used.extend_from_slice(cell);
        let pts: Vec<Vec<Rat>> = cell.iter().map(|&i| cfg.points[i].clone()).collect();
        if pts.len() == 2 {
            edges.push((cell[0], cell[1]));
            continue;
        }
        let sub_hull =
            convex_hull_facets(&PointConfig::new(pts)?, DEFAULT_HULL_CAP.max(cell.len()))?;
        if !sub_hull.stripped.is_empty() {
            return Err(GeometryError::AuditFailed(
                "subdivision cell contains a non-vertex point".into(),
            ));
        }
        let sk = skeleton_graph(&sub_hull);
        for (u, v) in sk.edges() {
            edges.push((cell[u], cell[v]));
        }
    }
    used.sort_unstable();
    used.dedup();
    let graph = Graph::make(cfg.len(), &edges).expect("cell skeleton union is simple");

    let complex = SubdivisionComplex { cells, graph, used };
    audit_complex(cfg, &complex)?;
    Ok(complex)
}

/// Cells must pairwise intersect in a common face of both.
fn audit_complex(cfg: &PointConfig, complex: &SubdivisionComplex) -> Result<(), GeometryError> {
    let lattices: Vec<_> = complex
        .cells
        .iter()
        .map(|cell| {
            let pts: Vec<Vec<Rat>> = cell.iter().map(|&i| cfg.points[i].clone()).collect();
            if pts.len() < 3 {
                return Ok(None);
            }
            let hull =
                convex_hull_facets(&PointConfig::new(pts)?, DEFAULT_HULL_CAP.max(cell.len()))?;
            Ok(Some(face_lattice(&hull)))
        })
        .collect::<Result<Vec<_>, GeometryError>>()?;
    for i in 0..complex.cells.len() {
        for j in (i + 1)..complex.cells.len() {
            let (a, b) = (&complex.cells[i], &complex.cells[j]);
            let inter: Vec<usize> = a.iter().filter(|x| b.contains(x)).copied().collect();
            for (cell, lat) in [(a, &lattices[i]), (b, &lattices[j])] {
                let Some(lat) = lat else { continue };
                let mask = inter
                    .iter()
                    .map(|&v| cell.iter().position(|&c| c == v).expect("member"))
                    .fold(0u128, |m, k| m | (1 << k));
                if !lat.contains_face(mask) {
                    return Err(GeometryError::AuditFailed(format!(
                        "cells {i} and {j} intersect improperly"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Lifted product of a polytope P with a lifted configuration Q: the hull of
/// `(ω_p(q)·p, q)` over vertices `p` of P and points `q` of Q. A single
/// lifting used at every vertex of P realizes `graph(P) × graph(subdivision)`;
/// per-vertex liftings realize the mixed graph where the fiber over `p`
/// carries the subdivision induced by `ω_p`. P is translated so the origin is
/// interior; every lifting must be strictly positive.
///
/// Returns the polytope together with the expected product graph (audited).
pub fn lifted_product(
    p: &Polytope,
    q_cfg: &PointConfig,
    liftings: &[Lifting],
) -> Result<(Polytope, Graph), GeometryError> {
    let np = p.vertex_count();
    if liftings.len() != 1 && liftings.len() != np {
        return Err(GeometryError::Lifting(format!(
            "need 1 or {np} liftings, got {}",
            liftings.len()
        )));
    }
    for l in liftings {
        if l.heights.iter().any(|h| !h.is_positive()) {
            return Err(GeometryError::Lifting(
                "lifting heights must be strictly positive".into(),
            ));
        }
    }
    // Extra points (beyond the vertices of conv(Q)) require dim P > 1.
    let q_hull = convex_hull_facets(q_cfg, DEFAULT_HULL_CAP.max(q_cfg.len()))?;
    let has_extra_points = q_hull.vertex_count() != q_cfg.len();
    if has_extra_points && p.dim <= 1 {
        return Err(GeometryError::Lifting(
            "extra subdivision points require the left factor to have dimension > 1".into(),
        ));
    }

    // Subdivisions per lifting; all must use the same point set (all of Q).
    let per_vertex: Vec<&Lifting> = if liftings.len() == 1 {
        vec![&liftings[0]; np]
    } else {
        liftings.iter().collect()
    };
    let mut subdivisions: Vec<SubdivisionComplex> = Vec::with_capacity(np);
    for l in &per_vertex {
        let s = regular_subdivision(q_cfg, l)?;
        if s.used.len() != q_cfg.len() {
            return Err(GeometryError::Lifting(
                "every lifted point must lie on the upper envelope".into(),
            ));
        }
        subdivisions.push(s);
    }

    // Translate P so the origin is interior (vertex centroid shift).
    let shift = centroid(&p.vertices);
    let p_verts: Vec<Vec<Rat>> = p.vertices.iter().map(|v| sub(v, &shift)).collect();
    {
        let shifted = Polytope {
            dim: p.dim,
            ambient_dim: p.ambient_dim,
            vertices: p_verts.clone(),
            facets: p
                .facets
                .iter()
                .map(|f| super::hull::Facet {
                    vertices: f.vertices.clone(),
                    normal: f.normal.clone(),
                    offset: &f.offset - &super::linalg::dot(&f.normal, &shift),
                })
                .collect(),
            stripped: Vec::new(),
            label: p.label.clone(),
        };
        let origin = vec![Rat::zero(); p.ambient_dim];
        if !strictly_interior(&shifted, &origin) {
            return Err(GeometryError::Lifting(
                "origin not interior to the left factor after centroid shift".into(),
            ));
        }
    }

    // Point set of the lifted product: vertex (i, j) at index i·|Q| + j.
    let nq = q_cfg.len();
    let mut pts = Vec::with_capacity(np * nq);
    for (i, pv) in p_verts.iter().enumerate() {
        let omega = &per_vertex[i].heights;
        for (j, qv) in q_cfg.points.iter().enumerate() {
            let w = &omega[j];
            let mut coords: Vec<Rat> = pv.iter().map(|x| x * w).collect();
            coords.extend_from_slice(qv);
            pts.push(coords);
        }
    }
    let cfg = PointConfig::new(pts)?;
    let hull = convex_hull_facets(&cfg, DEFAULT_HULL_CAP.max(cfg.len()))?;
    if !hull.stripped.is_empty() {
        return Err(GeometryError::AuditFailed(
            "lifted product dropped points that should be vertices".into(),
        ));
    }

    // Expected graph: fibers carry their subdivision graphs, cross edges
    // copy the skeleton of P.
    let p_sk = skeleton_graph(p);
    let mut edges = Vec::new();
    for i in 0..np {
        for (u, v) in subdivisions[i].graph.edges() {
            edges.push((i * nq + u, i * nq + v));
        }
    }
    for (a, b) in p_sk.edges() {
        for j in 0..nq {
            edges.push((a * nq + j, b * nq + j));
        }
    }
    let expected = Graph::make(np * nq, &edges).expect("expected product graph is simple");

    let got = skeleton_graph(&hull);
    if got.edges() != expected.edges() {
        return Err(GeometryError::AuditFailed(format!(
            "lifted product skeleton does not match the expected product graph \
             ({} vs {} edges)",
            got.edge_count(),
            expected.edge_count()
        )));
    }
    let label = format!("lifted_product({}, {} pts)", p.label, nq);
    Ok((hull.relabel(label), expected))
}

/// The four realizations of the segment × octahedron graph: choose, at each
/// end of the segment, either the trivial subdivision of the octahedron or a
/// split into two pyramids over an equatorial square (same square, or two
/// different squares).
pub fn prism_octahedron_realizations() -> Result<Vec<Polytope>, GeometryError> {
    let oct = named_polytope(&NamedPolytope::Octahedron)?;
    let seg = named_polytope(&NamedPolytope::Segment)?;
    let oct_cfg = PointConfig::new(oct.vertices.clone())?;
    let n = oct_cfg.len();
    // Vertex order of cross(3): (±e1, ±e2, ±e3) = indices 0..6 with the
    // equator "missing axis k" spanned by the other two axes.
    let egyptian = |axis: usize| -> Lifting {
        let mut h = vec![super::linalg::rat(2); n];
        h[2 * axis] = super::linalg::rat(1);
        h[2 * axis + 1] = super::linalg::rat(1);
        Lifting { heights: h }
    };
    let constant = Lifting::constant(n, super::linalg::rat(1));
    let choices: [(&str, Lifting, Lifting); 4] = [
        ("prism", constant.clone(), constant.clone()),
        ("one-split", constant.clone(), egyptian(2)),
        ("two-splits-same", egyptian(2).clone(), egyptian(2)),
        ("two-splits-orthogonal", egyptian(2), egyptian(0)),
    ];
    let mut out = Vec::new();
    for (name, la, lb) in choices {
        let (poly, _) = lifted_product(&seg, &oct_cfg, &[la, lb])?;
        out.push(poly.relabel(format!("octahedron-prism-graph[{name}]")));
    }
    Ok(out)
}

/// A 3-polytope with 9 vertices whose graph misses exactly one clique edge of
/// the star-clique of the octahedron graph, together with a lifting whose
/// subdivision adds that edge back. The product of a segment with this
/// subdivision is a 4-polytope realizing segment × star-clique(octahedron).
///
/// The roof fold: truncate the top vertex of the octahedron but tilt the cut
/// so the four new vertices are not coplanar; a tetrahedron cell over the
/// fold plus two side cells form the regular subdivision.
pub fn starclique_octahedron_subdivision() -> Result<(PointConfig, Lifting), GeometryError> {
    use super::linalg::{rat, rat_frac};
    let points = vec![
        vec![rat_frac(1, 2), rat(0), rat_frac(1, 2)],  // a1
        vec![rat(0), rat_frac(3, 5), rat_frac(2, 5)],  // a2
        vec![rat_frac(-1, 2), rat(0), rat_frac(1, 2)], // a3
        vec![rat(0), rat_frac(-3, 5), rat_frac(2, 5)], // a4
        vec![rat(1), rat(0), rat(0)],                  // n1
        vec![rat(0), rat(1), rat(0)],                  // n2
        vec![rat(-1), rat(0), rat(0)],                 // n3
        vec![rat(0), rat(-1), rat(0)],                 // n4
        vec![rat(0), rat(0), rat(-1)],                 // bottom apex
    ];
    // Heights: 8 + min(0, x+5z-2, -x+5z-2) evaluated at each point; the three
    // linear pieces carve the tetrahedron cell over the roof and the two
    // halves below it.
    let heights = vec![
        rat(8),
        rat(8),
        rat(8),
        rat(8),
        rat(5),
        rat(6),
        rat(5),
        rat(6),
        rat(1),
    ];
    let cfg = PointConfig::new(points)?;
    Ok((cfg, Lifting { heights }))
}

/// Lifted product of a segment with the star-clique-octahedron subdivision.
pub fn starclique_octahedron_product() -> Result<(Polytope, Graph), GeometryError> {
    let seg = named_polytope(&NamedPolytope::Segment)?;
    let (cfg, lift) = starclique_octahedron_subdivision()?;
    let (poly, expected) = lifted_product(&seg, &cfg, &[lift])?;
    Ok((poly.relabel("segment×starclique(octahedron)"), expected))
}

/// Lifted product realizing the product of two domino graphs: a square times
/// the unit-grid subdivision of the rectangle [0,p] × [0,q]. The grid uses
/// boundary and interior points, which is admissible because the left factor
/// is 2-dimensional.
pub fn domino_product(p: usize, q: usize) -> Result<(Polytope, Graph), GeometryError> {
    use super::linalg::rat;
    if p < 1 || q < 1 {
        return Err(GeometryError::BadParams(
            "domino product needs p, q >= 1".into(),
        ));
    }
    let square = named_polytope(&NamedPolytope::CrossPolytope(2))?;
    let mut pts = Vec::new();
    let mut heights = Vec::new();
    let shift = rat((p * p + q * q + 1) as i64);
    for i in 0..=p {
        for j in 0..=q {
            pts.push(vec![rat(i as i64), rat(j as i64)]);
            heights.push(&shift - &rat((i * i + j * j) as i64));
        }
    }
    let cfg = PointConfig::new(pts)?;
    let (poly, expected) = lifted_product(&square, &cfg, &[Lifting { heights }])?;
    Ok((poly.relabel(format!("domino({p})×domino({q})")), expected))
}

#[cfg(test)]
mod tests {
    use super::super::linalg::rat;
    use super::*;
    use crate::geometry::hull::{face_lattice, lattices_isomorphic, verify_graph, GraphMatch};
    use crate::graph::{are_isomorphic, circulant, named_graph, NamedFamily};

    #[test]
    fn constant_lifting_is_trivial() {
        let oct = named_polytope(&NamedPolytope::Octahedron).unwrap();
        let cfg = PointConfig::new(oct.vertices.clone()).unwrap();
        let s = regular_subdivision(&cfg, &Lifting::constant(6, rat(5))).unwrap();
        assert_eq!(s.cells.len(), 1);
        let sk = skeleton_graph(&oct);
        assert_eq!(s.graph.edges(), sk.edges());
    }

    #[test]
    fn octahedron_splits_into_two_pyramids() {
        let oct = named_polytope(&NamedPolytope::Octahedron).unwrap();
        let cfg = PointConfig::new(oct.vertices.clone()).unwrap();
        // Square on axes 1,2 (indices 0..4), apexes ±e3 lowered.
        let mut h = vec![rat(0); 6];
        h[4] = rat(-1);
        h[5] = rat(-1);
        let s = regular_subdivision(&cfg, &Lifting { heights: h }).unwrap();
        assert_eq!(s.cells.len(), 2);
        // Both cells are square pyramids: 5 vertices each, sharing 4.
        assert!(s.cells.iter().all(|c| c.len() == 5));
        let shared: Vec<usize> = s.cells[0]
            .iter()
            .filter(|v| s.cells[1].contains(v))
            .copied()
            .collect();
        assert_eq!(shared.len(), 4);
        // No new edges: the subdivision graph is the octahedron graph.
        let sk = skeleton_graph(&oct);
        assert_eq!(s.graph.edges(), sk.edges());
    }

    #[test]
    fn segment_with_midpoint_gives_a_path() {
        let cfg = PointConfig::new(vec![vec![rat(0)], vec![rat(1)], vec![rat(2)]]).unwrap();
        let s = regular_subdivision(
            &cfg,
            &Lifting {
                heights: vec![rat(1), rat(2), rat(1)],
            },
        )
        .unwrap();
        assert_eq!(s.cells.len(), 2);
        // Graph is the path 0 - 1 - 2.
        assert_eq!(s.graph.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn triangle_times_subdivided_segment() {
        let tri = named_polytope(&NamedPolytope::Polygon(3)).unwrap();
        let cfg = PointConfig::new(vec![vec![rat(0)], vec![rat(1)], vec![rat(2)]]).unwrap();
        let lift = Lifting {
            heights: vec![rat(1), rat(2), rat(1)],
        };
        let (poly, expected) = lifted_product(&tri, &cfg, &[lift]).unwrap();
        assert_eq!(poly.dim, 3);
        assert_eq!(poly.vertex_count(), 9);
        let c3 = named_graph(&NamedFamily::Cycle(3)).unwrap();
        let p3 = named_graph(&NamedFamily::Path(2)).unwrap();
        let want = crate::graph::cartesian_product(&c3, &p3);
        assert!(are_isomorphic(&expected, &want).is_some());
        match verify_graph(&poly, &want) {
            GraphMatch::Bijection(_) => {}
            GraphMatch::Mismatch { reason } => panic!("{reason}"),
        }
    }

    #[test]
    fn segment_times_split_square() {
        let seg = named_polytope(&NamedPolytope::Segment).unwrap();
        // Unit square with vertices in cyclic order 0,1,2,3.
        let cfg = PointConfig::new(vec![
            vec![rat(0), rat(0)],
            vec![rat(1), rat(0)],
            vec![rat(1), rat(1)],
            vec![rat(0), rat(1)],
        ])
        .unwrap();
        // Lift one diagonal higher: two triangle cells glued along it.
        let lift = Lifting {
            heights: vec![rat(2), rat(1), rat(2), rat(1)],
        };
        let (poly, expected) = lifted_product(&seg, &cfg, &[lift]).unwrap();
        assert_eq!(poly.dim, 3);
        assert_eq!(poly.vertex_count(), 8);
        // Expected: K2 × (square plus one diagonal).
        let glued = Graph::make(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let k2 = named_graph(&NamedFamily::Complete(2)).unwrap();
        let want = crate::graph::cartesian_product(&k2, &glued);
        assert!(are_isomorphic(&expected, &want).is_some());
    }

    #[test]
    fn four_octahedron_prism_realizations() {
        let polys = prism_octahedron_realizations().unwrap();
        assert_eq!(polys.len(), 4);
        let k2 = named_graph(&NamedFamily::Complete(2)).unwrap();
        let oct_graph = circulant(6, &[1, 2]).unwrap();
        let want = crate::graph::cartesian_product(&k2, &oct_graph);
        for p in &polys {
            match verify_graph(p, &want) {
                GraphMatch::Bijection(_) => {}
                GraphMatch::Mismatch { reason } => panic!("{}: {reason}", p.label),
            }
        }
        assert_eq!(polys[0].facet_count(), 10);
        // Face lattices pairwise non-isomorphic.
        let lattices: Vec<_> = polys.iter().map(face_lattice).collect();
        for i in 0..4 {
            for j in (i + 1)..4 {
                assert!(
                    !lattices_isomorphic(&lattices[i], &lattices[j]),
                    "{} vs {}",
                    polys[i].label,
                    polys[j].label
                );
            }
        }
    }
}
