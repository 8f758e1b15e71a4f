//! Runs every built-in search on a small graph, then traces one run.
//!
//! cargo run --example run_search

use tbls::engine::tbls_run_traced;
use tbls::{run_search, EngineChoice, Graph, LabelOrder, Search, VertexOrdering};

fn main() {
    // x6 - x4 - x1 - x2, x1 - x3 - x5
    let g = Graph::undirected(6, [(4, 6), (1, 4), (1, 2), (1, 3), (3, 5)]).unwrap();
    let tau = VertexOrdering::identity(6);

    for s in Search::ALL {
        let out = run_search(&g, &s.into(), &tau, EngineChoice::Auto);
        println!(
            "{:<5} {}   ({} engine)",
            s.token(),
            out.ordering,
            out.engine
        );
    }

    println!("\nldfs, step by step:");
    let order: LabelOrder = Search::Ldfs.into();
    tbls_run_traced(&g, &order, &tau, |t| {
        let eligible: Vec<String> = t.eligible.iter().map(|(v, l)| format!("{v}{l}")).collect();
        println!(
            "  step {}: eligible {:<24} visit {}",
            t.step,
            eligible.join(" "),
            t.chosen
        );
    });
}
