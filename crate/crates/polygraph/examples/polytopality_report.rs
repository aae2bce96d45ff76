//! Full polytopality-range report for one graph, with certificates.
//!
//! Run with: cargo run --release --example polytopality_report [spec]
//! where spec is a compact graph spec (default: circ8-1,2,3).

use polygraph::cli::parse_graph_spec;
use polygraph::obstructions::{polytopality_range, BudgetConfig};

fn main() {
    let spec = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "circ8-1,2,3".into());
    let g = parse_graph_spec(&spec).expect("valid graph spec");
    println!(
        "graph {} on {} vertices, min degree {}",
        g.label().unwrap_or(&spec),
        g.n(),
        g.min_degree()
    );
    let report = polytopality_range(&g, &BudgetConfig::default());
    for v in &report.verdicts {
        println!("  d={}  {:<9?} via {}", v.d, v.status, v.reason);
    }
    println!("confirmed: {:?}", report.confirmed);
    println!("not excluded: {:?}", report.open);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
