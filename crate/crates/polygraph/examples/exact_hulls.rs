//! The exact rational hull kernel: facet enumeration, skeletons, face
//! lattices, and skeleton verification.
//!
//! Run with: cargo run --release --example exact_hulls

use polygraph::geometry::{
    face_lattice, named_polytope, skeleton_graph, verify_graph, GraphMatch, NamedPolytope,
};
use polygraph::graph::{circulant, named_graph, NamedFamily};

fn main() {
    for (name, which) in [
        ("simplex(5)", NamedPolytope::Simplex(5)),
        ("cube(3)", NamedPolytope::Cube(3)),
        ("cross(4)", NamedPolytope::CrossPolytope(4)),
        ("cyclic(4,8)", NamedPolytope::Cyclic(4, 8)),
        ("antiprism(4)", NamedPolytope::Antiprism(4)),
    ] {
        let p = named_polytope(&which).unwrap();
        let sk = skeleton_graph(&p);
        let lat = face_lattice(&p);
        println!(
            "{name}: dim {}, {} vertices, {} facets, f-vector {:?}",
            p.dim,
            p.vertex_count(),
            p.facet_count(),
            lat.proper_face_counts()
        );
        println!(
            "  skeleton: {} edges, regular degree {:?}",
            sk.edge_count(),
            sk.regular_degree()
        );
    }

    // Neighborliness: the cyclic polytope in dimension 4 on 8 vertices has
    // the complete graph as skeleton.
    let p = named_polytope(&NamedPolytope::Cyclic(4, 8)).unwrap();
    let k8 = named_graph(&NamedFamily::Complete(8)).unwrap();
    match verify_graph(&p, &k8) {
        GraphMatch::Bijection(_) => println!("cyclic(4,8) skeleton is K8: verified"),
        GraphMatch::Mismatch { reason } => println!("mismatch: {reason}"),
    }

    // The 4-dimensional cross-polytope realizes the 8-vertex cocktail-party
    // circulant; a different circulant is rejected with a reason.
    let cross = named_polytope(&NamedPolytope::CrossPolytope(4)).unwrap();
    let good = circulant(8, &[1, 2, 3]).unwrap();
    let bad = circulant(8, &[1, 3, 4]).unwrap();
    println!(
        "cross(4) vs circulant(8;1,2,3): {:?}",
        matches!(verify_graph(&cross, &good), GraphMatch::Bijection(_))
    );
    if let GraphMatch::Mismatch { reason } = verify_graph(&cross, &bad) {
        println!("cross(4) vs circulant(8;1,3,4): mismatch, {reason}");
    }
}
