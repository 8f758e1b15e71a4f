//! Tie-breaking label search.
//!
//! A search is fixed by a strict partial order `≺` on label sets (sets of
//! visiting dates) and a tie-break permutation `τ`. At each step the engine
//! visits the τ-leftmost unnumbered vertex whose label is `≺`-maximal, then
//! adds the current date to the labels of its unnumbered neighbours. BFS,
//! DFS, LBFS, LDFS, MCS, MNS and generic search are all instances.
//!
//! ```
//! use tbls::graph::{Graph, VertexOrdering};
//! use tbls::label::Search;
//! use tbls::engine::tbls_run;
//!
//! let g = Graph::undirected(4, [(1, 2), (1, 3), (2, 4)]).unwrap();
//! let sigma = tbls_run(&g, &Search::Dfs.into(), &VertexOrdering::identity(4));
//! assert_eq!(sigma.as_slice(), &[1, 2, 4, 3]);
//! ```

pub mod certificate;
pub mod certify;
pub mod cli;
pub mod corpus;
pub mod engine;
pub mod fast;
pub mod generate;
pub mod graph;
pub mod hierarchy;
pub mod io;
pub mod label;
pub mod multisweep;
pub mod search;

pub use certificate::{Certificate, Rule, Witness};
pub use certify::{certify, recognize, CertifyError};
pub use engine::{check_fixpoint, check_pairwise, tbls_run};
pub use fast::{tbls_fast, TotalityViolation};
pub use graph::{Graph, Vertex, VertexOrdering};
pub use label::{LabelOrder, LabelSet, Search};
pub use search::{run_search, EngineChoice};
