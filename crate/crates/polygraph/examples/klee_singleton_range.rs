//! A graph whose only possible dimension is 4: stack a vertex beyond every
//! facet of the cyclic 4-polytope on 6 vertices. Removing the 6 original
//! vertices isolates 9 stacked apexes, which beats the dimension-3
//! separation bound of 8, while the degree-4 apexes cap the dimension at 4.
//!
//! Run with: cargo run --release --example klee_singleton_range

use polygraph::graph::{named_graph, NamedFamily};
use polygraph::obstructions::{
    polytopality_range, separation_check, BudgetConfig, SeparationOutcome,
};

fn main() {
    let g = named_graph(&NamedFamily::KleeStacked(4, 6)).unwrap();
    println!(
        "{}: {} vertices, min degree {}",
        g.label().unwrap(),
        g.n(),
        g.min_degree()
    );

    match separation_check(&g, 3, 6, 10_000_000) {
        SeparationOutcome::Fail {
            separator,
            components,
            bound,
        } => println!(
            "dimension 3: removing {separator:?} leaves {components} components > bound {bound}"
        ),
        other => println!("unexpected: {other:?}"),
    }

    let report = polytopality_range(&g, &BudgetConfig::default());
    for v in &report.verdicts {
        println!("  d={}  {:?} via {}", v.d, v.status, v.reason);
    }
    assert_eq!(report.open, vec![4]);
    println!("polytopality range pinned to {:?}", report.confirmed);
}
