//! Regular subdivisions from liftings: upper facets of the lifted hull,
//! projected back down.
//!
//! Run with: cargo run --release --example regular_subdivisions

use polygraph::geometry::{
    named_polytope, rat, regular_subdivision, skeleton_graph, Lifting, NamedPolytope, PointConfig,
};

fn main() {
    // The octahedron, split into two pyramids glued along an equator square:
    // lower the two apexes of one axis.
    let oct = named_polytope(&NamedPolytope::Octahedron).unwrap();
    let cfg = PointConfig::new(oct.vertices.clone()).unwrap();
    let mut heights = vec![rat(0); 6];
    heights[4] = rat(-1);
    heights[5] = rat(-1);
    let s = regular_subdivision(&cfg, &Lifting { heights }).unwrap();
    println!(
        "octahedron with lowered apexes: {} cells {:?}",
        s.cells.len(),
        s.cells
    );
    println!(
        "  subdivision graph has {} edges (no additional edges: {})",
        s.graph.edge_count(),
        s.graph.edges() == skeleton_graph(&oct).edges()
    );

    // Constant lifting: the trivial subdivision.
    let s = regular_subdivision(&cfg, &Lifting::constant(6, rat(3))).unwrap();
    println!(
        "constant lifting: {} cell of {:?}",
        s.cells.len(),
        s.cells[0]
    );

    // A segment with an interior point lifted above the chord: two cells,
    // the path graph on three vertices.
    let cfg = PointConfig::new(vec![vec![rat(0)], vec![rat(1)], vec![rat(2)]]).unwrap();
    let s = regular_subdivision(
        &cfg,
        &Lifting {
            heights: vec![rat(1), rat(2), rat(1)],
        },
    )
    .unwrap();
    println!(
        "segment with lifted midpoint: cells {:?}, graph edges {:?}",
        s.cells,
        s.graph.edges()
    );
}
