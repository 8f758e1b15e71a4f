//! Engine selection.

use std::fmt;
use std::str::FromStr;

use crate::engine::tbls_run;
use crate::fast::{tbls_fast, TotalityViolation};
use crate::graph::{Graph, VertexOrdering};
use crate::label::LabelOrder;

/// Which engine computes a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EngineChoice {
    /// Brute-force eligible sets; any partial order.
    Reference,
    /// Partition refinement; falls back to the reference engine on a
    /// totality violation.
    Fast,
    /// Fast for weak orders (bfs, dfs, lbfs, ldfs, mcs), reference otherwise.
    #[default]
    Auto,
}

impl FromStr for EngineChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ref" => Ok(EngineChoice::Reference),
            "fast" => Ok(EngineChoice::Fast),
            "auto" => Ok(EngineChoice::Auto),
            _ => Err(format!(
                "unknown engine `{s}`; valid engines: ref, fast, auto"
            )),
        }
    }
}

impl fmt::Display for EngineChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngineChoice::Reference => "ref",
            EngineChoice::Fast => "fast",
            EngineChoice::Auto => "auto",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub ordering: VertexOrdering,
    /// `Fast` or `Reference`, whichever produced the ordering.
    pub engine: EngineChoice,
    /// Set when the fast engine gave up and the reference engine took over.
    pub fallback: Option<TotalityViolation>,
}

/// Runs `TBLS(G, ≺, τ)` on the chosen engine.
pub fn run_search(
    graph: &Graph,
    order: &LabelOrder,
    tau: &VertexOrdering,
    engine: EngineChoice,
) -> SearchOutcome {
    let use_fast = match engine {
        EngineChoice::Reference => false,
        EngineChoice::Fast => true,
        EngineChoice::Auto => order.is_weak_order(),
    };
    if use_fast {
        match tbls_fast(graph, order, tau) {
            Ok(ordering) => {
                return SearchOutcome {
                    ordering,
                    engine: EngineChoice::Fast,
                    fallback: None,
                }
            }
            Err(violation) => {
                return SearchOutcome {
                    ordering: tbls_run(graph, order, tau),
                    engine: EngineChoice::Reference,
                    fallback: Some(violation),
                }
            }
        }
    }
    SearchOutcome {
        ordering: tbls_run(graph, order, tau),
        engine: EngineChoice::Reference,
        fallback: None,
    }
}
