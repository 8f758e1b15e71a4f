//! Verifies which searches extend which, at the label level over {1..5} and
//! at the ordering level on all graphs with at most five vertices.
//!
//! cargo run --release --example hierarchy

use tbls::corpus::corpus;
use tbls::hierarchy::verify_hierarchy;

fn main() {
    let graphs = corpus(5, false);
    let report = verify_hierarchy(5, &graphs, 10, 0);
    println!("cover arcs:");
    for (s, t) in &report.arcs {
        println!("  {s} -> {t}");
    }
    println!("\nsome non-arcs:");
    for na in report.non_arcs.iter().take(6) {
        println!(
            "  {} -/-> {}: {} ≺ {} under {} only",
            na.from, na.to, na.witness.0, na.witness.1, na.from
        );
    }
    let checked: usize = report
        .ordering_checks
        .iter()
        .map(|c| c.orderings_checked)
        .sum();
    println!(
        "\n{checked} search outputs checked on {} graphs, matches expected: {}",
        graphs.len(),
        report.matches_expected()
    );
}
