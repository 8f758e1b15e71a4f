//! Multi-sweep LBFS: unit interval and cocomparability recognition.
//!
//! cargo run --example multisweep

use tbls::generate::{gen_graph_with_induced_claw, gen_permutation_graph, gen_unit_interval_graph};
use tbls::multisweep::{cocomp_pipeline, recognize_unit_interval};
use tbls::Graph;

fn main() {
    let g = gen_unit_interval_graph(50, 42);
    let out = recognize_unit_interval(&g).unwrap();
    println!(
        "unit interval graph n=50 m={}: accepted={}",
        g.edge_count(),
        out.is_accepted()
    );
    for (i, sigma) in out.trace.orderings.iter().enumerate().skip(1) {
        println!("  σ{i} = {sigma}");
    }

    let (g, claw) = gen_graph_with_induced_claw(15, 0.3, 5);
    let out = recognize_unit_interval(&g).unwrap();
    println!(
        "\ngraph with induced claw {claw:?}: {}",
        out.certificate.to_json()
    );

    let g = gen_permutation_graph(32, 7);
    let out = cocomp_pipeline(&g).unwrap();
    println!(
        "\npermutation graph n=32 after {} sweeps: accepted={}",
        out.trace.sweeps(),
        out.is_accepted()
    );

    let c5 = Graph::undirected(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
    println!(
        "C5: {}",
        cocomp_pipeline(&c5).unwrap().certificate.to_json()
    );
}
