//! Multi-sweep pipelines: `σ_i = TBLS(G, ≺, reverse(σ_{i-1}))`.

use serde::Serialize;

use crate::certificate::{Certificate, Rule, Witness};
use crate::certify::{precheck, CertifyError};
use crate::graph::{Graph, VertexOrdering};
use crate::label::{LabelOrder, Search};
use crate::search::{run_search, EngineChoice};

#[derive(Debug, Clone)]
pub struct SweepTrace {
    /// `σ_0, σ_1, ..., σ_k`.
    pub orderings: Vec<VertexOrdering>,
    pub order: LabelOrder,
}

impl SweepTrace {
    pub fn seed(&self) -> &VertexOrdering {
        &self.orderings[0]
    }

    pub fn last(&self) -> &VertexOrdering {
        self.orderings.last().expect("a trace holds at least σ0")
    }

    pub fn sweeps(&self) -> usize {
        self.orderings.len() - 1
    }
}

/// Runs `k` sweeps from `sigma0`. Each sweep uses the fast engine when the
/// order is a weak order and the reference engine otherwise.
pub fn sweep_sequence(
    graph: &Graph,
    order: &LabelOrder,
    sigma0: &VertexOrdering,
    k: usize,
) -> SweepTrace {
    let mut orderings = Vec::with_capacity(k + 1);
    orderings.push(sigma0.clone());
    for _ in 0..k {
        let tau = orderings.last().unwrap().reversed();
        orderings.push(run_search(graph, order, &tau, EngineChoice::Auto).ordering);
    }
    SweepTrace {
        orderings,
        order: order.clone(),
    }
}

/// Checks that `x <σ y <σ z` and `xz ∈ E` force `xy, yz ∈ E`.
///
/// Equivalent to every closed neighbourhood occupying a contiguous run of
/// positions, which is what is tested in `O(n + m)`.
pub fn is_unit_interval_ordering(
    graph: &Graph,
    sigma: &VertexOrdering,
) -> Result<Certificate, CertifyError> {
    precheck(graph, sigma)?;
    for v in graph.vertices() {
        let p = sigma.position_of(v);
        let (mut lo, mut hi) = (p, p);
        for &u in graph.neighbors(v) {
            let q = sigma.position_of(u);
            lo = lo.min(q);
            hi = hi.max(q);
        }
        if hi - lo == graph.degree(v) {
            continue;
        }
        let gap = (lo + 1..hi)
            .map(|i| sigma.vertex_at(i))
            .find(|&w| w != v && !graph.has_edge(v, w))
            .expect("a non-contiguous neighbourhood has a gap");
        let triple = if sigma.precedes(gap, v) {
            vec![sigma.vertex_at(lo), gap, v]
        } else {
            vec![v, gap, sigma.vertex_at(hi)]
        };
        return Ok(Certificate::reject(
            Rule::UnitInterval,
            Witness::new(sigma, triple),
        ));
    }
    Ok(Certificate::accept())
}

/// Checks that no edge `xz` spans a `y` adjacent to neither end. `O(n·m)`.
pub fn is_cocomp_ordering(
    graph: &Graph,
    sigma: &VertexOrdering,
) -> Result<Certificate, CertifyError> {
    precheck(graph, sigma)?;
    for (a, b) in graph.edges() {
        let (x, z) = if sigma.precedes(a, b) { (a, b) } else { (b, a) };
        for i in sigma.position_of(x) + 1..sigma.position_of(z) {
            let y = sigma.vertex_at(i);
            if !graph.has_edge(x, y) && !graph.has_edge(y, z) {
                return Ok(Certificate::reject(
                    Rule::Umbrella,
                    Witness::new(sigma, vec![x, y, z]),
                ));
            }
        }
    }
    Ok(Certificate::accept())
}

/// A sweep trace together with the verdict on its last ordering.
#[derive(Debug, Clone)]
pub struct PipelineOutcome {
    pub trace: SweepTrace,
    pub certificate: Certificate,
}

impl PipelineOutcome {
    pub fn is_accepted(&self) -> bool {
        self.certificate.is_accepted()
    }

    pub fn ordering(&self) -> &VertexOrdering {
        self.trace.last()
    }
}

/// Three LBFS sweeps from the identity, then the unit interval check.
pub fn recognize_unit_interval(graph: &Graph) -> Result<PipelineOutcome, CertifyError> {
    pipeline(graph, 3, is_unit_interval_ordering)
}

/// `n` LBFS sweeps from the identity, then the umbrella-free check.
pub fn cocomp_pipeline(graph: &Graph) -> Result<PipelineOutcome, CertifyError> {
    pipeline(graph, graph.n(), is_cocomp_ordering)
}

fn pipeline(
    graph: &Graph,
    sweeps: usize,
    check: fn(&Graph, &VertexOrdering) -> Result<Certificate, CertifyError>,
) -> Result<PipelineOutcome, CertifyError> {
    if graph.is_directed() {
        return Err(CertifyError::Directed);
    }
    let trace = sweep_sequence(
        graph,
        &Search::Lbfs.into(),
        &VertexOrdering::identity(graph.n()),
        sweeps,
    );
    let certificate = check(graph, trace.last())?;
    Ok(PipelineOutcome { trace, certificate })
}

/// One JSON line of `multisweep` output.
#[derive(Debug, Serialize)]
pub struct SweepLine<'a> {
    pub sweep: usize,
    pub ordering: &'a [usize],
}
