//! Defines a label order in user code and combines orders with meet.
//!
//! cargo run --example custom_order

use tbls::label::LabelCmp;
use tbls::{check_fixpoint, run_search, EngineChoice, Graph, LabelOrder, Search, VertexOrdering};

fn main() {
    let g = Graph::undirected(6, [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (5, 6)]).unwrap();
    let tau = VertexOrdering::identity(6);

    // prefer labels with the larger sum of dates; a strict weak order
    let by_sum = LabelOrder::custom("sum", true, |a, b| {
        let (x, y): (usize, usize) = (a.dates().iter().sum(), b.dates().iter().sum());
        match x.cmp(&y) {
            std::cmp::Ordering::Less => LabelCmp::Less,
            std::cmp::Ordering::Greater => LabelCmp::Greater,
            std::cmp::Ordering::Equal => LabelCmp::Incomparable,
        }
    });
    let out = run_search(&g, &by_sum, &tau, EngineChoice::Auto);
    println!("sum:          {} ({} engine)", out.ordering, out.engine);

    let meet = LabelOrder::meet(Search::Bfs.into(), Search::Mcs.into());
    let out = run_search(&g, &meet, &tau, EngineChoice::Auto);
    println!("meet:bfs+mcs: {} ({} engine)", out.ordering, out.engine);
    // every bfs ordering is also an ordering of the weaker meet
    let bfs = run_search(&g, &Search::Bfs.into(), &tau, EngineChoice::Auto).ordering;
    println!(
        "bfs output {} accepted by meet: {}",
        bfs,
        check_fixpoint(&g, &meet, &bfs).is_accepted()
    );
}
