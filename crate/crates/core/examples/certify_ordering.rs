//! Certifies orderings and prints the JSON certificates, including the
//! witness that explains each rejection.
//!
//! cargo run --example certify_ordering

use tbls::certify::recognize;
use tbls::{Graph, LabelOrder, Search, VertexOrdering};

fn main() {
    let g = Graph::undirected(4, [(1, 2), (1, 3), (2, 4)]).unwrap();
    let orderings = [[1, 2, 3, 4], [1, 2, 4, 3], [1, 3, 2, 4], [2, 4, 1, 3]];
    let orders: Vec<LabelOrder> = Search::ALL
        .iter()
        .map(|&s| s.into())
        .chain(["meet:bfs+dfs".parse().unwrap()])
        .collect();

    for o in orderings {
        let sigma = VertexOrdering::new(o.to_vec()).unwrap();
        println!("σ = {sigma}");
        for order in &orders {
            let cert = recognize(&g, order, &sigma).unwrap();
            println!("  {:<13} {}", order.to_string(), cert.to_json());
        }
    }
}
