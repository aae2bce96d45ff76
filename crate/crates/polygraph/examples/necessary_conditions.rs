//! The classic necessary conditions are not sufficient: the two-ring family
//! passes connectivity, principal subdivisions, and separation in dimension
//! 4, yet the range report excludes every dimension.
//!
//! Run with: cargo run --release --example necessary_conditions

use polygraph::graph::{named_graph, NamedFamily};
use polygraph::obstructions::{
    balinski_check, polytopality_range, psp_check, separation_check, BudgetConfig, PspOutcome,
};

fn main() {
    for n in 1..=3usize {
        let g = named_graph(&NamedFamily::MarcAntonio(n)).unwrap();
        println!("== {} ({} vertices, 4-regular)", g.label().unwrap(), g.n());

        println!("  connectivity(4):  {:?}", balinski_check(&g, 4));
        match psp_check(&g, 4, None, 1_000_000) {
            PspOutcome::Witnesses(ws) => {
                println!(
                    "  subdivisions(4):  witness at every vertex ({} total)",
                    ws.len()
                );
                let w = &ws[0];
                println!(
                    "    e.g. principal {} with branch {:?}",
                    w.principal, w.branch
                );
            }
            PspOutcome::Failure(f) => println!("  subdivisions(4):  FAILED {f:?}"),
        }
        println!(
            "  separation(4):    {:?}",
            separation_check(&g, 4, 8, 10_000_000)
        );

        let report = polytopality_range(&g, &BudgetConfig::default());
        println!("  range verdicts:");
        for v in &report.verdicts {
            println!("    d={}  {:?} via {}", v.d, v.status, v.reason);
        }
        assert!(
            report.open.is_empty(),
            "non-polytopal for non-trivial reasons"
        );
        println!();
    }
}
