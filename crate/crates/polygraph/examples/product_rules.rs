//! Product rules: a product of graphs is simply polytopal exactly when its
//! factors are, and some segment products are not polytopal at all.
//!
//! Run with: cargo run --release --example product_rules

use polygraph::graph::{cartesian_product, circulant, named_graph, NamedFamily};
use polygraph::obstructions::{polytopality_range, BudgetConfig};
use polygraph::simple_check::{product_factor_check, ProductRuleOutcome};

fn main() {
    // Segment times a non-planar cubic graph: non-polytopal.
    let k2 = named_graph(&NamedFamily::Complete(2)).unwrap();
    let moebius = circulant(8, &[1, 4]).unwrap();
    let g = cartesian_product(&k2, &moebius);
    match product_factor_check(&g, None, 1_000_000) {
        ProductRuleOutcome::ExcludedAtDegree { degree, reason, .. } => {
            println!("segment × circulant(8;1,4): excluded at dimension {degree} ({reason})")
        }
        other => println!("unexpected: {other:?}"),
    }
    let report = polytopality_range(&g, &BudgetConfig::default());
    println!("  full range report: open = {:?}\n", report.open);

    // Segment times a complete bipartite graph: non-polytopal.
    let k33 = named_graph(&NamedFamily::CompleteBipartite(3, 3)).unwrap();
    let g = cartesian_product(&k2, &k33);
    let report = polytopality_range(&g, &BudgetConfig::default());
    for v in &report.verdicts {
        println!("segment × K3,3, d={}: {:?} via {}", v.d, v.status, v.reason);
    }
    println!();

    // The product of two Petersen graphs: the factors cannot be the graphs
    // of simple 3-polytopes, so the product is excluded at dimension 6;
    // dimensions 4 and 5 stay open.
    let p = named_graph(&NamedFamily::Petersen).unwrap();
    let pp = cartesian_product(&p, &p);
    println!("petersen × petersen ({} vertices, 6-regular):", pp.n());
    let report = polytopality_range(&pp, &BudgetConfig::default());
    for v in &report.verdicts {
        println!("  d={}  {:?} via {}", v.d, v.status, v.reason);
    }
}
