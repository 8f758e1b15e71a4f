//! Accept/reject answers with checkable witnesses.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Position, Vertex, VertexOrdering};
use crate::label::LabelSet;

/// The condition a rejected ordering violates.
///
/// Each rule fixes how the witness vertices are to be read:
///
/// * `Pairwise`: `[x, y]` with `x <σ y` and `N_σ(x,x) ≺ N_σ(y,x)`;
///   `labels` holds those two sets.
/// * `Fixpoint`: `[σ(i), engine choice, dominator]` where `i` is the first
///   step at which re-running the search with tie-break σ diverges from σ,
///   and the dominator is an unnumbered vertex whose label is strictly above
///   the label of `σ(i)` at that step. `labels` holds the three labels.
/// * `GenTriple`, `BfsTriple`, `DfsTriple`: a triple `[a, b, c]` with
///   `a <σ b <σ c`, `ac ∈ E`, `ab ∉ E`, and `b` has no neighbour before it
///   (gen), before `a` (bfs), or strictly between `a` and `b` (dfs).
/// * `LbfsPattern`, `LdfsPattern`: `[a, b, c]` with `a <σ b <σ c`, `a` the
///   leftmost (lbfs) or rightmost (ldfs) vertex of `N(b) △ N(c)` placed
///   before `b`, and `a ∈ N(c) − N(b)`.
/// * `UnitInterval`: `[x, y, z]` with `x <σ y <σ z`, `xz ∈ E` and one of
///   `xy`, `yz` missing.
/// * `Umbrella`: `[x, y, z]` with `x <σ y <σ z`, `xz ∈ E`, `xy ∉ E`, `yz ∉ E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Pairwise,
    Fixpoint,
    GenTriple,
    BfsTriple,
    DfsTriple,
    LbfsPattern,
    LdfsPattern,
    UnitInterval,
    Umbrella,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Pairwise => "tbls-pairwise",
            Rule::Fixpoint => "tbls-fixpoint",
            Rule::GenTriple => "gen-triple",
            Rule::BfsTriple => "bfs-triple",
            Rule::DfsTriple => "dfs-triple",
            Rule::LbfsPattern => "lbfs-pattern",
            Rule::LdfsPattern => "ldfs-pattern",
            Rule::UnitInterval => "unit-interval-triple",
            Rule::Umbrella => "umbrella",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertices: Vec<Vertex>,
    pub positions: Vec<Position>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<LabelSet>,
    /// Search step the witness refers to, for engine-based rules.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<usize>,
}

impl Witness {
    pub fn new(sigma: &VertexOrdering, vertices: Vec<Vertex>) -> Self {
        let positions = vertices.iter().map(|&v| sigma.position_of(v)).collect();
        Witness {
            vertices,
            positions,
            labels: Vec::new(),
            step: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<LabelSet>) -> Self {
        self.labels = labels;
        self
    }

    pub fn at_step(mut self, step: usize) -> Self {
        self.step = Some(step);
        self
    }
}

/// Outcome of a recognition query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub accepted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<Rule>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Certificate {
    pub fn accept() -> Self {
        Certificate {
            accepted: true,
            rule: None,
            witness: None,
        }
    }

    pub fn reject(rule: Rule, witness: Witness) -> Self {
        Certificate {
            accepted: false,
            rule: Some(rule),
            witness: Some(witness),
        }
    }

    pub fn is_accepted(&self) -> bool {
        self.accepted
    }

    /// Witness vertices, empty on accept.
    pub fn vertices(&self) -> &[Vertex] {
        self.witness.as_ref().map_or(&[], |w| &w.vertices)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        assert_eq!(Certificate::accept().to_json(), r#"{"accepted":true}"#);
        let s = VertexOrdering::new(vec![2, 1, 3]).unwrap();
        let c = Certificate::reject(Rule::BfsTriple, Witness::new(&s, vec![2, 1, 3]));
        assert_eq!(
            c.to_json(),
            r#"{"accepted":false,"rule":"bfs-triple","witness":{"vertices":[2,1,3],"positions":[1,2,3]}}"#
        );
    }
}
