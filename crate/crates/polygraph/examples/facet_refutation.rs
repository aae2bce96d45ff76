//! The facet-complex searches in action: two circulants on 8 vertices pass
//! the classic necessary conditions in dimension 4 but admit no consistent
//! family of 3-faces, and a positive control reassembles the 4-cube from its
//! graph alone.
//!
//! Run with: cargo run --release --example facet_refutation

use polygraph::graph::{circulant, named_graph, NamedFamily};
use polygraph::simple_check::{
    enumerate_candidate_facets, facet_complex_search, SearchMode, SearchOutcome,
};

fn main() {
    for steps in [vec![1usize, 3, 4], vec![1, 2, 4]] {
        let g = circulant(8, &steps).unwrap();
        let label = g.label().unwrap().to_string();
        let (cands, complete) = enumerate_candidate_facets(&g, 8, 10_000_000);
        println!(
            "{label}: {} candidate 3-faces (complete: {complete})",
            cands.len()
        );
        for c in cands.iter().take(4) {
            println!(
                "  candidate {:?} with {} two-faces",
                c.vertices,
                c.two_faces.len()
            );
        }
        match facet_complex_search(&g, 4, SearchMode::ThreeFaces, 10_000_000, 8).unwrap() {
            SearchOutcome::Refuted {
                transcript,
                nodes_used,
            } => {
                println!(
                    "  dimension 4: REFUTED after {nodes_used} nodes ({} transcript lines, hash {})",
                    transcript.lines.len(),
                    transcript.content_hash()
                );
            }
            other => println!("  unexpected outcome: {other:?}"),
        }
        println!();
    }

    // Positive control: the graph of the 4-cube admits exactly its 8 cubical
    // facets as a consistent complex.
    let q4 = named_graph(&NamedFamily::Hypercube(4)).unwrap();
    match facet_complex_search(&q4, 4, SearchMode::ThreeFaces, 50_000_000, 10).unwrap() {
        SearchOutcome::RealizableComplex { complex, .. } => {
            let complex = complex.unwrap();
            println!(
                "4-cube graph: consistent complex of {} three-faces, every 2-face in exactly two",
                complex.chosen.len()
            );
        }
        other => println!("unexpected outcome: {other:?}"),
    }
}
