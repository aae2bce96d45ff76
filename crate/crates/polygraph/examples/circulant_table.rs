//! Regenerates the polytopality ranges of all connected circulant graphs on
//! at most 8 vertices, one row per isomorphism class.
//!
//! Run with: cargo run --release --example circulant_table

use polygraph::cli::circulant_table;
use polygraph::obstructions::BudgetConfig;

fn main() {
    let rows = circulant_table(8, &BudgetConfig::default());
    println!(
        "{:<24} {:>3}  {:<12} merged step sets",
        "graph", "n", "range"
    );
    for row in rows {
        let range = if row.confirmed.is_empty() {
            "∅".to_string()
        } else {
            format!(
                "{{{}}}",
                row.confirmed
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        };
        let merged = row
            .step_sets
            .iter()
            .map(|s| {
                format!(
                    "({})",
                    s.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect::<Vec<_>>()
            .join(" ");
        println!("{:<24} {:>3}  {:<12} {merged}", row.label, row.n, range);
        assert_eq!(row.open, row.confirmed, "every dimension decided");
    }
}
