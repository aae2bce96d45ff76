//! Polytopal products of non-polytopal graphs via regular subdivisions:
//! lifting the right factor's vertices (and, above dimension one, extra
//! points) turns a product with a subdivision graph into a polytope.
//!
//! Run with: cargo run --release --example lifted_products

use polygraph::geometry::{
    domino_product, lifted_product, named_polytope, rat, starclique_octahedron_product, Lifting,
    NamedPolytope, PointConfig,
};
use polygraph::graph::{are_isomorphic, cartesian_product, named_graph, star_clique, NamedFamily};

fn main() {
    // A triangle times a path: the path is not polytopal, but it is the
    // graph of a subdivided segment.
    let tri = named_polytope(&NamedPolytope::Polygon(3)).unwrap();
    let seg3 = PointConfig::new(vec![vec![rat(0)], vec![rat(1)], vec![rat(2)]]).unwrap();
    let lift = Lifting {
        heights: vec![rat(1), rat(2), rat(1)],
    };
    let (poly, graph) = lifted_product(&tri, &seg3, &[lift]).unwrap();
    println!(
        "triangle × subdivided segment: dim {}, {} vertices, {} facets",
        poly.dim,
        poly.vertex_count(),
        poly.facet_count()
    );
    let c3p3 = cartesian_product(
        &named_graph(&NamedFamily::Cycle(3)).unwrap(),
        &named_graph(&NamedFamily::Path(2)).unwrap(),
    );
    assert!(are_isomorphic(&graph, &c3p3).is_some());

    // A segment times two glued triangles (a split square).
    let seg = named_polytope(&NamedPolytope::Segment).unwrap();
    let square = PointConfig::new(vec![
        vec![rat(0), rat(0)],
        vec![rat(1), rat(0)],
        vec![rat(1), rat(1)],
        vec![rat(0), rat(1)],
    ])
    .unwrap();
    let lift = Lifting {
        heights: vec![rat(2), rat(1), rat(2), rat(1)],
    };
    let (poly, _) = lifted_product(&seg, &square, &[lift]).unwrap();
    println!(
        "segment × split square: dim {}, {} vertices, {} facets",
        poly.dim,
        poly.vertex_count(),
        poly.facet_count()
    );

    // A segment times the star-clique subdivision of the octahedron: the
    // right factor's graph is non-polytopal, the product is a 4-polytope.
    let (poly, graph) = starclique_octahedron_product().unwrap();
    let sigma = star_clique(&named_graph(&NamedFamily::Octahedron).unwrap(), 0).unwrap();
    let expected = cartesian_product(&named_graph(&NamedFamily::Complete(2)).unwrap(), &sigma);
    assert!(are_isomorphic(&graph, &expected).is_some());
    println!(
        "segment × star-clique(octahedron) subdivision: dim {}, {} vertices, {} facets",
        poly.dim,
        poly.vertex_count(),
        poly.facet_count()
    );

    // Two dominos: neither factor is polytopal, the product is a 4-polytope
    // built as a square times the unit-grid subdivision of a rectangle.
    let (poly, graph) = domino_product(2, 2).unwrap();
    let d2 = named_graph(&NamedFamily::Domino(2)).unwrap();
    let expected = cartesian_product(&d2, &d2);
    assert!(are_isomorphic(&graph, &expected).is_some());
    println!(
        "domino(2) × domino(2): dim {}, {} vertices, {} facets",
        poly.dim,
        poly.vertex_count(),
        poly.facet_count()
    );
}
