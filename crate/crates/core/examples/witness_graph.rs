//! Builds graphs in which two chosen labels are live at the same step.
//!
//! cargo run --example witness_graph

use tbls::engine::left_dates;
use tbls::hierarchy::witness_graph;
use tbls::{check_fixpoint, LabelOrder, LabelSet, Search};

fn main() {
    let cases = [
        (Search::Gen, vec![1], vec![2], 4),
        (Search::Lbfs, vec![1, 3], vec![2], 5),
        (Search::Mcs, vec![2], vec![1], 5),
        (Search::Bfs, vec![], vec![1], 4),
    ];
    for (s, a, b, p) in cases {
        let (a, b) = (LabelSet::from_dates(a), LabelSet::from_dates(b));
        let order: LabelOrder = s.into();
        match witness_graph(&order, &a, &b, p) {
            Ok((g, sigma)) => {
                let edges: Vec<String> = g.edges().map(|(u, v)| format!("z{u}z{v}")).collect();
                println!("{s} A={a} B={b} p={p}: edges {}", edges.join(" "));
                println!(
                    "  σ is a {s} ordering: {}; labels at step {}: {} and {}",
                    check_fixpoint(&g, &order, &sigma).is_accepted(),
                    p - 1,
                    left_dates(&g, &sigma, p - 1, p - 1),
                    left_dates(&g, &sigma, p, p - 1)
                );
            }
            Err(e) => println!("{s} A={a} B={b} p={p}: {e}"),
        }
    }
}
