//! Two graphs on which layered search would need the same pair of labels to
//! be both incomparable and comparable.
//!
//! cargo run --example layered_limitation

use tbls::hierarchy::layered_fixture_check;

fn main() {
    let r = layered_fixture_check();
    for (name, f) in [("G", &r.g), ("H", &r.h)] {
        println!(
            "{name}: labels of vertices 5 and 6 after 1 2 3 4: {} {}",
            f.labels.0, f.labels.1
        );
        for c in &f.completions {
            println!("  {:?} layered: {}", c.ordering, c.layered);
        }
    }
    println!(
        "G needs the labels incomparable: {}",
        r.g_requires_incomparable
    );
    println!(
        "H needs them comparable:         {}",
        r.h_requires_comparable
    );
    println!("no single label order works:     {}", r.no_single_order);
}
