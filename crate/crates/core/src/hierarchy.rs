//! Executable checks of the extension hierarchy between the seven searches.
//!
//! `S ≪ S'` (S' extends S) when every S'-ordering is an S-ordering, which
//! holds exactly when `A ≺_S B` implies `A ≺_S' B` for all labels. The label
//! side is checked exhaustively over subsets of `{1..u}`; the ordering side by
//! running searches on a graph corpus.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use serde::Serialize;
use thiserror::Error;

use crate::certify::recognize;
use crate::engine::{left_dates, tbls_run};
use crate::generate::rng;
use crate::graph::{Graph, Vertex, VertexOrdering};
use crate::label::{LabelOrder, LabelSet, Search};

/// The cover relation of the hierarchy: `(S, S')` means S' extends S and
/// nothing sits strictly between them.
pub const HIERARCHY_ARCS: [(Search, Search); 8] = [
    (Search::Gen, Search::Bfs),
    (Search::Gen, Search::Dfs),
    (Search::Gen, Search::Mns),
    (Search::Mns, Search::Lbfs),
    (Search::Mns, Search::Ldfs),
    (Search::Mns, Search::Mcs),
    (Search::Bfs, Search::Lbfs),
    (Search::Dfs, Search::Ldfs),
];

/// Largest label universe accepted by [`check_label_extension`].
pub const MAX_UNIVERSE: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LabelExtension {
    Extension,
    /// `A ≺_S B` but not `A ≺_S' B`.
    Witness(LabelSet, LabelSet),
}

/// Tests whether `ext` extends `base` on all label pairs over `{1..u}`.
/// Pairs are visited with `A` in the outer loop, both in binary counting
/// order of their bitmasks, so the witness is the first such pair.
pub fn check_label_extension(base: &LabelOrder, ext: &LabelOrder, u: usize) -> LabelExtension {
    assert!(
        u <= MAX_UNIVERSE,
        "label universe is capped at {MAX_UNIVERSE}"
    );
    let sets: Vec<LabelSet> = (0..1u64 << u).map(|m| LabelSet::from_mask(m, u)).collect();
    for a in &sets {
        for b in &sets {
            if base.less(a, b) && !ext.less(a, b) {
                return LabelExtension::Witness(a.clone(), b.clone());
            }
        }
    }
    LabelExtension::Extension
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessGraphError {
    #[error("{a} ≺ {b}, so no ordering can leave both labels eligible")]
    Precedes { a: LabelSet, b: LabelSet },
    #[error("labels must be subsets of {{1..{max}}} when p = {p}")]
    OutOfRange { p: usize, max: usize },
}

/// Builds a graph on `z_1..z_p` (vertex `i` is `z_i`) in which the identity
/// ordering is an ordering of `order` and, at step `p − 1`, `z_{p−1}` carries
/// label `A` while `z_p` carries `B`. Requires `A ⊀ B` and
/// `A, B ⊆ {1..p−2}`.
pub fn witness_graph(
    order: &LabelOrder,
    a: &LabelSet,
    b: &LabelSet,
    p: usize,
) -> Result<(Graph, VertexOrdering), WitnessGraphError> {
    let max = p.saturating_sub(2);
    if p < 2 || a.dates().iter().chain(b.dates()).any(|&d| d > max) {
        return Err(WitnessGraphError::OutOfRange { p, max });
    }
    if order.less(a, b) {
        return Err(WitnessGraphError::Precedes {
            a: a.clone(),
            b: b.clone(),
        });
    }
    let mut edges = Vec::new();
    for i in 2..=max {
        // z_i copies whichever of the two truncated labels is not dominated
        let side = if order.less(&a.below(i), &b.below(i)) {
            b
        } else {
            a
        };
        edges.extend(side.dates().iter().filter(|&&k| k < i).map(|&k| (i, k)));
    }
    edges.extend(a.dates().iter().map(|&k| (p - 1, k)));
    edges.extend(b.dates().iter().map(|&k| (p, k)));
    let graph = Graph::undirected(p, edges).expect("dates stay below p − 1");
    Ok((graph, VertexOrdering::identity(p)))
}

#[derive(Debug, Clone, Serialize)]
pub struct NonArc {
    pub from: Search,
    pub to: Search,
    /// `A ≺_from B` while `A ⊀_to B`.
    pub witness: (LabelSet, LabelSet),
}

#[derive(Debug, Clone, Serialize)]
pub struct ArcCheck {
    pub from: Search,
    pub to: Search,
    pub orderings_checked: usize,
    /// `(graph index in the corpus, ordering)` pairs the recognizer of
    /// `from` rejected.
    pub failures: Vec<(usize, Vec<Vertex>)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HierarchyReport {
    pub universe: usize,
    /// Every `(S, S')` with `S ≠ S'` and S' extending S.
    pub extensions: Vec<(Search, Search)>,
    /// Transitive reduction of `extensions`.
    pub arcs: Vec<(Search, Search)>,
    pub non_arcs: Vec<NonArc>,
    pub ordering_checks: Vec<ArcCheck>,
}

impl HierarchyReport {
    /// Whether the arcs are exactly [`HIERARCHY_ARCS`] and every arc held
    /// at the ordering level.
    pub fn matches_expected(&self) -> bool {
        let found: BTreeSet<_> = self.arcs.iter().copied().collect();
        let expected: BTreeSet<_> = HIERARCHY_ARCS.iter().copied().collect();
        found == expected && self.ordering_checks.iter().all(|c| c.failures.is_empty())
    }
}

/// Label-level extension over all ordered pairs of the seven searches, and
/// an ordering-level check of each expected arc `S → S'`: for every corpus
/// graph and `taus` random tie-breaks, the S'-search output must pass the
/// S recognizer.
pub fn verify_hierarchy(u: usize, corpus: &[Graph], taus: usize, seed: u64) -> HierarchyReport {
    let mut extensions = Vec::new();
    let mut non_arcs = Vec::new();
    for from in Search::ALL {
        for to in Search::ALL {
            if from == to {
                continue;
            }
            match check_label_extension(&from.into(), &to.into(), u) {
                LabelExtension::Extension => extensions.push((from, to)),
                LabelExtension::Witness(a, b) => non_arcs.push(NonArc {
                    from,
                    to,
                    witness: (a, b),
                }),
            }
        }
    }
    let arcs = transitive_reduction(&extensions);

    let mut rng = rng(seed);
    let ordering_checks = HIERARCHY_ARCS
        .iter()
        .map(|&(from, to)| {
            let mut check = ArcCheck {
                from,
                to,
                orderings_checked: 0,
                failures: Vec::new(),
            };
            for (gi, g) in corpus.iter().enumerate() {
                let mut tau: Vec<Vertex> = g.vertices().collect();
                for _ in 0..taus {
                    tau.shuffle(&mut rng);
                    let tau = VertexOrdering::new(tau.clone()).expect("a shuffled identity");
                    let sigma = tbls_run(g, &to.into(), &tau);
                    let cert = recognize(g, &from.into(), &sigma).expect("sizes agree");
                    check.orderings_checked += 1;
                    if !cert.is_accepted() {
                        check.failures.push((gi, sigma.as_slice().to_vec()));
                    }
                }
            }
            check
        })
        .collect();

    HierarchyReport {
        universe: u,
        extensions,
        arcs,
        non_arcs,
        ordering_checks,
    }
}

/// Drops `(a, c)` whenever some `b` has `(a, b)` and `(b, c)`. Assumes the
/// relation is transitive.
pub fn transitive_reduction(pairs: &[(Search, Search)]) -> Vec<(Search, Search)> {
    let set: BTreeSet<_> = pairs.iter().copied().collect();
    pairs
        .iter()
        .copied()
        .filter(|&(a, c)| {
            !Search::ALL
                .iter()
                .any(|&b| b != a && b != c && set.contains(&(a, b)) && set.contains(&(b, c)))
        })
        .collect()
}

/// One completion of a search prefix on one of the two fixture graphs.
#[derive(Debug, Clone, Serialize)]
pub struct Completion {
    pub ordering: Vec<Vertex>,
    pub layered: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureResult {
    pub completions: [Completion; 2],
    /// Labels of the two remaining vertices at step 5, in vertex order.
    pub labels: (LabelSet, LabelSet),
}

#[derive(Debug, Clone, Serialize)]
pub struct LayeredReport {
    pub g: FixtureResult,
    pub h: FixtureResult,
    /// Both completions of G are layered: the two labels must be incomparable.
    pub g_requires_incomparable: bool,
    /// Only one completion of H is layered: the same labels must be comparable.
    pub h_requires_comparable: bool,
    /// No strict partial order on labels meets both requirements.
    pub no_single_order: bool,
}

/// Layered-search fixtures. G has edges `x6x4, x4x1, x1x2, x1x3, x3x5` and H
/// has `v1v2, v2v4, v4v6, v1v3, v3v5`; both are searched from the prefix
/// `1 2 3 4`, leaving labels `{3}` on vertex 5 and `{4}` on vertex 6.
pub fn layered_fixture_check() -> LayeredReport {
    let g = Graph::undirected(6, [(6, 4), (4, 1), (1, 2), (1, 3), (3, 5)]).expect("fixture");
    let h = Graph::undirected(6, [(1, 2), (2, 4), (4, 6), (1, 3), (3, 5)]).expect("fixture");
    let g = fixture(&g);
    let h = fixture(&h);
    let g_requires_incomparable = g.completions.iter().all(|c| c.layered);
    let h_requires_comparable = h.completions.iter().filter(|c| c.layered).count() == 1;
    LayeredReport {
        no_single_order: g_requires_incomparable && h_requires_comparable && g.labels == h.labels,
        g,
        h,
        g_requires_incomparable,
        h_requires_comparable,
    }
}

fn fixture(graph: &Graph) -> FixtureResult {
    let completions = [[1, 2, 3, 4, 5, 6], [1, 2, 3, 4, 6, 5]].map(|o| {
        let sigma = VertexOrdering::new(o.to_vec()).expect("fixture ordering");
        Completion {
            layered: is_layered(graph, &sigma),
            ordering: o.to_vec(),
        }
    });
    let sigma = VertexOrdering::new(completions[0].ordering.clone()).expect("fixture ordering");
    let labels = (
        left_dates(graph, &sigma, 5, 5),
        left_dates(graph, &sigma, 6, 5),
    );
    FixtureResult {
        completions,
        labels,
    }
}

/// Whether `sigma` never places a vertex before one that is closer to the
/// first visited vertex of its component.
pub fn is_layered(graph: &Graph, sigma: &VertexOrdering) -> bool {
    let n = graph.n();
    let mut dist: Vec<Option<usize>> = vec![None; n + 1];
    let mut root_of = vec![0; n + 1];
    for s in sigma.iter() {
        if dist[s].is_some() {
            continue;
        }
        dist[s] = Some(0);
        root_of[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in graph.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(dist[v].unwrap() + 1);
                    root_of[w] = s;
                    queue.push_back(w);
                }
            }
        }
    }
    // within a component, distances along σ must never decrease
    let mut last = vec![0; n + 1];
    sigma.iter().all(|v| {
        let d = dist[v].unwrap();
        let ok = d >= last[root_of[v]];
        last[root_of[v]] = d;
        ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::check_fixpoint;

    fn set(d: &[usize]) -> LabelSet {
        LabelSet::from_dates(d.iter().copied())
    }

    #[test]
    fn label_extension_examples() {
        let ext = |a: Search, b: Search, u| check_label_extension(&a.into(), &b.into(), u);
        assert_eq!(ext(Search::Gen, Search::Bfs, 4), LabelExtension::Extension);
        assert_eq!(ext(Search::Bfs, Search::Lbfs, 4), LabelExtension::Extension);
        assert_eq!(
            ext(Search::Bfs, Search::Dfs, 2),
            LabelExtension::Witness(set(&[2]), set(&[1]))
        );
        assert!(matches!(
            ext(Search::Lbfs, Search::Ldfs, 4),
            LabelExtension::Witness(..)
        ));
        assert!(matches!(
            ext(Search::Mcs, Search::Lbfs, 4),
            LabelExtension::Witness(..)
        ));
        assert!(matches!(
            ext(Search::Lbfs, Search::Mcs, 4),
            LabelExtension::Witness(..)
        ));
    }

    #[test]
    fn meet_is_extended_by_both_sides() {
        for a in Search::ALL {
            for b in Search::ALL {
                let m = LabelOrder::meet(a.into(), b.into());
                assert_eq!(
                    check_label_extension(&m, &a.into(), 4),
                    LabelExtension::Extension
                );
                assert_eq!(
                    check_label_extension(&m, &b.into(), 4),
                    LabelExtension::Extension
                );
            }
        }
    }

    #[test]
    fn witness_graph_examples() {
        let (g, sigma) = witness_graph(&Search::Gen.into(), &set(&[1]), &set(&[2]), 4).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 4)]);
        assert_eq!(sigma, VertexOrdering::identity(4));
        assert_eq!(left_dates(&g, &sigma, 3, 3), set(&[1]));
        assert_eq!(left_dates(&g, &sigma, 4, 3), set(&[2]));
        assert!(check_fixpoint(&g, &Search::Gen.into(), &sigma).is_accepted());

        let (g, _) = witness_graph(&Search::Bfs.into(), &set(&[]), &set(&[]), 3).unwrap();
        assert_eq!(g.edge_count(), 0);

        assert!(matches!(
            witness_graph(&Search::Gen.into(), &set(&[]), &set(&[1]), 4),
            Err(WitnessGraphError::Precedes { .. })
        ));
        assert!(matches!(
            witness_graph(&Search::Gen.into(), &set(&[3]), &set(&[1]), 4),
            Err(WitnessGraphError::OutOfRange { .. })
        ));
    }

    #[test]
    fn reduction_of_a_chain() {
        let pairs = [
            (Search::Gen, Search::Bfs),
            (Search::Bfs, Search::Lbfs),
            (Search::Gen, Search::Lbfs),
        ];
        assert_eq!(transitive_reduction(&pairs), pairs[..2].to_vec());
    }

    #[test]
    fn layered_fixtures() {
        let r = layered_fixture_check();
        assert!(r.g.completions.iter().all(|c| c.layered));
        assert!(r.h.completions[0].layered);
        assert!(!r.h.completions[1].layered);
        assert_eq!(r.g.labels, (set(&[3]), set(&[4])));
        assert_eq!(r.h.labels, (set(&[3]), set(&[4])));
        assert!(r.no_single_order);
    }

    #[test]
    fn layering_respects_components() {
        let g = Graph::undirected(4, [(1, 2), (3, 4)]).unwrap();
        assert!(is_layered(
            &g,
            &VertexOrdering::new(vec![1, 3, 4, 2]).unwrap()
        ));
        let p = Graph::undirected(3, [(1, 2), (2, 3)]).unwrap();
        assert!(!is_layered(
            &p,
            &VertexOrdering::new(vec![1, 3, 2]).unwrap()
        ));
    }
}
