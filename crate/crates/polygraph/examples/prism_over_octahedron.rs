//! One graph, four polytopes: the octahedron-prism graph is realized by four
//! combinatorially different 4-polytopes, obtained by splitting the
//! octahedron at either end of the segment into two pyramids (same square or
//! orthogonal squares).
//!
//! Run with: cargo run --release --example prism_over_octahedron

use polygraph::geometry::{
    face_lattice, lattices_isomorphic, prism_octahedron_realizations, verify_graph, GraphMatch,
};
use polygraph::graph::{cartesian_product, circulant, named_graph, NamedFamily};

fn main() {
    let polys = prism_octahedron_realizations().unwrap();
    let graph = cartesian_product(
        &named_graph(&NamedFamily::Complete(2)).unwrap(),
        &circulant(6, &[1, 2]).unwrap(),
    );
    let lattices: Vec<_> = polys.iter().map(face_lattice).collect();
    for (p, l) in polys.iter().zip(&lattices) {
        let matched = matches!(verify_graph(p, &graph), GraphMatch::Bijection(_));
        println!(
            "{:<42} {} facets, f-vector {:?}, skeleton matches: {matched}",
            p.label,
            p.facet_count(),
            l.proper_face_counts()
        );
    }
    println!();
    for i in 0..polys.len() {
        for j in (i + 1)..polys.len() {
            let iso = lattices_isomorphic(&lattices[i], &lattices[j]);
            println!(
                "lattices {} vs {}: {}",
                i,
                j,
                if iso { "isomorphic" } else { "distinct" }
            );
        }
    }
}
