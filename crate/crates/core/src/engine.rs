//! Reference tie-breaking label search and the two generic recognizers.
//!
//! This engine computes the eligible set by brute force, `O(u²)` label
//! comparisons per step for `u` unnumbered vertices. It works for any strict
//! partial order and is the oracle the faster engine and the specialised
//! certifiers are checked against.

use std::borrow::Cow;

use crate::certificate::{Certificate, Rule, Witness};
use crate::graph::{Graph, Vertex, VertexOrdering};
use crate::label::{Date, LabelOrder, LabelSet};

/// Labels and visiting dates part-way through a search.
#[derive(Debug, Clone)]
pub struct EngineState {
    labels: Vec<LabelSet>,
    numbered: Vec<Option<Date>>,
    step: usize,
}

impl EngineState {
    pub fn new(n: usize) -> Self {
        EngineState {
            labels: vec![LabelSet::new(); n + 1],
            numbered: vec![None; n + 1],
            step: 1,
        }
    }

    /// Builds a state directly from labels, for vertices `1..=labels.len()`,
    /// all unnumbered.
    pub fn with_labels(labels: Vec<LabelSet>) -> Self {
        let n = labels.len();
        let mut all = Vec::with_capacity(n + 1);
        all.push(LabelSet::new());
        all.extend(labels);
        EngineState {
            labels: all,
            numbered: vec![None; n + 1],
            step: 1,
        }
    }

    /// The step about to be performed, `1..=n`.
    pub fn step(&self) -> usize {
        self.step
    }

    pub fn label(&self, v: Vertex) -> &LabelSet {
        &self.labels[v]
    }

    pub fn date(&self, v: Vertex) -> Option<Date> {
        self.numbered[v]
    }

    pub fn unnumbered(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..self.numbered.len()).filter(|&v| self.numbered[v].is_none())
    }

    /// Numbers `v` with the current step and stamps that date on the labels
    /// of its unnumbered (out-)neighbours.
    pub fn visit(&mut self, graph: &Graph, v: Vertex) {
        debug_assert!(self.numbered[v].is_none());
        let date = self.step;
        self.numbered[v] = Some(date);
        for &w in graph.neighbors(v) {
            if self.numbered[w].is_none() {
                self.labels[w].push(date);
            }
        }
        self.step += 1;
    }
}

/// Unnumbered vertices whose label is maximal under `order`, in increasing
/// vertex order. Never empty while some vertex is unnumbered.
pub fn eligible_set(state: &EngineState, order: &LabelOrder) -> Vec<Vertex> {
    let live: Vec<Vertex> = state.unnumbered().collect();
    live.iter()
        .copied()
        .filter(|&x| {
            let lx = state.label(x);
            !live.iter().any(|&y| order.less(lx, state.label(y)))
        })
        .collect()
}

/// What the engine saw at one step.
#[derive(Debug, Clone)]
pub struct StepTrace {
    pub step: usize,
    pub eligible: Vec<(Vertex, LabelSet)>,
    pub chosen: Vertex,
}

/// `TBLS(G, ≺, τ)`: repeatedly visit the τ-leftmost eligible vertex.
pub fn tbls_run(graph: &Graph, order: &LabelOrder, tau: &VertexOrdering) -> VertexOrdering {
    tbls_run_traced(graph, order, tau, |_| {})
}

/// [`tbls_run`], reporting every step to `observe`.
pub fn tbls_run_traced<F>(
    graph: &Graph,
    order: &LabelOrder,
    tau: &VertexOrdering,
    mut observe: F,
) -> VertexOrdering
where
    F: FnMut(&StepTrace),
{
    assert_eq!(
        graph.n(),
        tau.len(),
        "tie-break ordering must cover the graph"
    );
    let n = graph.n();
    let mut state = EngineState::new(n);
    let mut sigma = Vec::with_capacity(n);
    for _ in 0..n {
        let eligible = eligible_set(&state, order);
        let chosen = *eligible
            .iter()
            .min_by_key(|&&v| tau.position_of(v))
            .expect("a finite partial order has a maximal element");
        observe(&StepTrace {
            step: state.step(),
            eligible: eligible
                .iter()
                .map(|&v| (v, state.label(v).clone()))
                .collect(),
            chosen,
        });
        state.visit(graph, chosen);
        sigma.push(chosen);
    }
    VertexOrdering::new(sigma).expect("each vertex is visited exactly once")
}

/// Vertices whose visit stamps the label of each vertex: its neighbours, or
/// its in-neighbours for a directed graph.
pub(crate) fn label_sources(graph: &Graph) -> Cow<'_, Graph> {
    if graph.is_directed() {
        Cow::Owned(graph.reversed())
    } else {
        Cow::Borrowed(graph)
    }
}

fn left_dates_in(sources: &Graph, sigma: &VertexOrdering, u: Vertex, v: Vertex) -> LabelSet {
    let bound = sigma.position_of(v);
    LabelSet::from_dates(
        sources
            .neighbors(u)
            .iter()
            .map(|&w| sigma.position_of(w))
            .filter(|&p| p < bound),
    )
}

/// `N_σ(u, v)`: visiting dates of the neighbours of `u` placed strictly
/// before `v`. This is the label `u` carries when `v` is about to be visited.
pub fn left_dates(graph: &Graph, sigma: &VertexOrdering, u: Vertex, v: Vertex) -> LabelSet {
    left_dates_in(&label_sources(graph), sigma, u, v)
}

/// Accepts iff no `x <σ y` has `N_σ(x,x) ≺ N_σ(y,x)`.
pub fn check_pairwise(graph: &Graph, order: &LabelOrder, sigma: &VertexOrdering) -> Certificate {
    let n = graph.n();
    let mut state = EngineState::new(n);
    for i in 1..=n {
        let x = sigma.vertex_at(i);
        for j in i + 1..=n {
            let y = sigma.vertex_at(j);
            if order.less(state.label(x), state.label(y)) {
                let labels = vec![state.label(x).clone(), state.label(y).clone()];
                return Certificate::reject(
                    Rule::Pairwise,
                    Witness::new(sigma, vec![x, y])
                        .with_labels(labels)
                        .at_step(i),
                );
            }
        }
        state.visit(graph, x);
    }
    Certificate::accept()
}

/// Accepts iff `TBLS(G, ≺, σ) = σ`.
///
/// On rejection the witness names `σ(i)` at the first divergence, the vertex
/// the engine picked instead, and the σ-leftmost eligible vertex whose label
/// dominates that of `σ(i)`. For a total order the last two coincide.
pub fn check_fixpoint(graph: &Graph, order: &LabelOrder, sigma: &VertexOrdering) -> Certificate {
    let rerun = tbls_run(graph, order, sigma);
    let Some(i) = (1..=graph.n()).find(|&i| rerun.vertex_at(i) != sigma.vertex_at(i)) else {
        return Certificate::accept();
    };
    let sources = label_sources(graph);
    let x = sigma.vertex_at(i);
    let chosen = rerun.vertex_at(i);
    let label_at = |v| left_dates_in(&sources, sigma, v, x);
    let lx = label_at(x);
    let later: Vec<(Vertex, LabelSet)> = (i + 1..=graph.n())
        .map(|j| sigma.vertex_at(j))
        .map(|v| (v, label_at(v)))
        .collect();
    let dominator = later
        .iter()
        .filter(|(_, l)| order.less(&lx, l))
        .find(|(_, l)| !later.iter().any(|(_, m)| order.less(l, m)))
        .map(|(v, _)| *v)
        .expect("σ(i) was not eligible, so a maximal label dominates it");
    let labels = vec![lx, label_at(chosen), label_at(dominator)];
    Certificate::reject(
        Rule::Fixpoint,
        Witness::new(sigma, vec![x, chosen, dominator])
            .with_labels(labels)
            .at_step(i),
    )
}
