//! Truncating a simple vertex realizes the star-clique operation on the
//! skeleton: the clique replacing the vertex is the new facet.
//!
//! Run with: cargo run --release --example truncation_star_clique

use polygraph::geometry::{
    named_polytope, rat_frac, skeleton_graph, truncate_vertex, verify_graph, GraphMatch,
    NamedPolytope,
};
use polygraph::graph::{are_isomorphic, star_clique};

fn main() {
    let cases = [
        NamedPolytope::Simplex(3),
        NamedPolytope::Cube(3),
        NamedPolytope::Prism(5),
    ];
    for which in cases {
        let p = named_polytope(&which).unwrap();
        let sk = skeleton_graph(&p);
        let truncated = truncate_vertex(&p, 0, &rat_frac(1, 3)).unwrap();
        let expected = star_clique(&sk, 0).unwrap();
        let ok = matches!(
            verify_graph(&truncated, &expected),
            GraphMatch::Bijection(_)
        );
        println!(
            "{}: {} -> {} vertices, {} -> {} facets, skeleton law holds: {ok}",
            p.label,
            p.vertex_count(),
            truncated.vertex_count(),
            p.facet_count(),
            truncated.facet_count()
        );
    }

    // Truncating any vertex of the tetrahedron gives the triangular prism.
    let p = named_polytope(&NamedPolytope::Simplex(3)).unwrap();
    let t = truncate_vertex(&p, 2, &rat_frac(1, 3)).unwrap();
    let prism = named_polytope(&NamedPolytope::Prism(3)).unwrap();
    let same = are_isomorphic(&skeleton_graph(&t), &skeleton_graph(&prism)).is_some();
    println!("truncated tetrahedron is the triangular prism: {same}");
}
