//! Partition-refinement engine on a large random graph, compared with the
//! reference engine on a smaller one.
//!
//! cargo run --release --example fast_engine

use std::time::Instant;

use tbls::fast::tbls_fast_with_stats;
use tbls::generate::gen_random_graph;
use tbls::search::run_search;
use tbls::{tbls_fast, tbls_run, EngineChoice, Graph, LabelOrder, Search, VertexOrdering};

fn main() {
    let g = gen_random_graph(100_000, 500_000, 1);
    let tau = VertexOrdering::identity(g.n());
    for s in [
        Search::Bfs,
        Search::Dfs,
        Search::Lbfs,
        Search::Ldfs,
        Search::Mcs,
    ] {
        let t = Instant::now();
        let (_, stats) = tbls_fast_with_stats(&g, &s.into(), &tau).unwrap();
        println!(
            "{:<5} n={} m={}: {:>6.0?}, {} heap insertions",
            s.token(),
            g.n(),
            g.edge_count(),
            t.elapsed(),
            stats.heap_insertions
        );
    }

    let small = gen_random_graph(1_000, 5_000, 2);
    let tau = VertexOrdering::identity(small.n());
    let order: LabelOrder = Search::Lbfs.into();
    let t = Instant::now();
    let fast = tbls_fast(&small, &order, &tau).unwrap();
    let tf = t.elapsed();
    let t = Instant::now();
    let slow = tbls_run(&small, &order, &tau);
    println!(
        "\nn=1000: fast {tf:.0?}, reference {:.0?}, same output: {}",
        t.elapsed(),
        fast == slow
    );

    // orders that are not weak orders make the fast engine give up
    let p4 = Graph::undirected(4, [(1, 2), (1, 3), (2, 4)]).unwrap();
    let out = run_search(
        &p4,
        &Search::Gen.into(),
        &VertexOrdering::identity(4),
        EngineChoice::Fast,
    );
    println!(
        "gen on P4 with --engine fast: {} via {} ({})",
        out.ordering,
        out.engine,
        out.fallback.unwrap()
    );
}
