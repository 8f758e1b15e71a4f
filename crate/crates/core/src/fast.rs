//! Partition-refinement search engine.
//!
//! Unnumbered vertices are kept in an ordered partition whose parts are
//! classes of vertices with identical labels, each part sorted by τ. Visiting
//! `x` refines every part by `N(x)`; the next vertex is the head of the part
//! with the greatest label. Parts sit in an indexed max-heap keyed by their
//! (immutable) label, ties between incomparable labels of a weak order broken
//! by the τ-rank of the part head.
//!
//! Runs in `O(n + m·T(n)·log n)` for comparison cost `T(n)`, and produces
//! exactly the same ordering as [`crate::engine::tbls_run`] whenever the
//! order can rank every pair of live parts.

use thiserror::Error;

use crate::engine::label_sources;
use crate::graph::{Graph, Vertex, VertexOrdering};
use crate::label::{Date, LabelCmp, LabelOrder, LabelSet};

/// Two live parts carry distinct labels the order cannot rank.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("labels {0} and {1} are incomparable; the order is not total on live labels")]
pub struct TotalityViolation(pub LabelSet, pub LabelSet);

type PartId = usize;
const NIL: usize = 0;

#[derive(Debug, Clone)]
struct Part {
    head: Vertex,
    tail: Vertex,
    size: usize,
    label: LabelSet,
    // date of the last refine that split this part, with the fragment it spawned
    split_date: Date,
    child: PartId,
}

/// An ordered partition of the unnumbered vertices into τ-sorted parts, each
/// tagged with the label shared by its vertices.
#[derive(Debug, Clone)]
pub struct OrderedPartition {
    rank: Vec<usize>,
    next: Vec<Vertex>,
    prev: Vec<Vertex>,
    part_of: Vec<PartId>,
    // slot 0 unused, dead parts keep size 0
    parts: Vec<Part>,
}

/// Parts touched by one refinement.
#[derive(Debug, Default)]
pub(crate) struct Refinement {
    pub created: Vec<PartId>,
    /// Parts that lost vertices, with their head before the refinement.
    pub shrunk: Vec<(PartId, Vertex)>,
}

impl OrderedPartition {
    /// A single part holding every vertex of `tau`, in τ order, with label ∅.
    pub fn new(tau: &VertexOrdering) -> Self {
        let n = tau.len();
        let mut rank = vec![0; n + 1];
        let mut next = vec![NIL; n + 1];
        let mut prev = vec![NIL; n + 1];
        let mut part_of = vec![NIL; n + 1];
        for i in 1..=n {
            let v = tau.vertex_at(i);
            rank[v] = i;
            part_of[v] = 1;
            if i > 1 {
                prev[v] = tau.vertex_at(i - 1);
            }
            if i < n {
                next[v] = tau.vertex_at(i + 1);
            }
        }
        let sentinel = Part {
            head: NIL,
            tail: NIL,
            size: 0,
            label: LabelSet::new(),
            split_date: 0,
            child: NIL,
        };
        let mut parts = vec![sentinel.clone()];
        if n > 0 {
            parts.push(Part {
                head: tau.vertex_at(1),
                tail: tau.vertex_at(n),
                size: n,
                ..sentinel
            });
        }
        OrderedPartition {
            rank,
            next,
            prev,
            part_of,
            parts,
        }
    }

    /// Non-empty parts as `(vertices in τ order, label)`, in creation order.
    pub fn parts(&self) -> Vec<(Vec<Vertex>, LabelSet)> {
        (1..self.parts.len())
            .filter(|&p| self.parts[p].size > 0)
            .map(|p| (self.members(p), self.parts[p].label.clone()))
            .collect()
    }

    fn members(&self, p: PartId) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.parts[p].size);
        let mut v = self.parts[p].head;
        while v != NIL {
            out.push(v);
            v = self.next[v];
        }
        out
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.part_of[v] != NIL
    }

    /// Splits every part `Q` into `Q ∩ pivot`, whose label gains `date`, and
    /// `Q − pivot`. Vertices not in the partition are ignored. Cost is
    /// `O(|pivot| log |pivot|)` here; the engine feeds pre-sorted pivots and
    /// skips the sort.
    pub fn refine(&mut self, pivot: &[Vertex], date: Date) {
        let mut sorted: Vec<Vertex> = pivot.to_vec();
        sorted.sort_unstable_by_key(|&v| self.rank[v]);
        sorted.dedup();
        self.refine_sorted(&sorted, date);
    }

    /// Removes a vertex (it has just been numbered).
    pub fn remove(&mut self, v: Vertex) {
        let p = self.part_of[v];
        debug_assert!(p != NIL);
        self.unlink(p, v);
        self.part_of[v] = NIL;
    }

    fn unlink(&mut self, p: PartId, v: Vertex) {
        let (a, b) = (self.prev[v], self.next[v]);
        if a != NIL {
            self.next[a] = b;
        } else {
            self.parts[p].head = b;
        }
        if b != NIL {
            self.prev[b] = a;
        } else {
            self.parts[p].tail = a;
        }
        self.prev[v] = NIL;
        self.next[v] = NIL;
        self.parts[p].size -= 1;
    }

    fn append(&mut self, p: PartId, v: Vertex) {
        let t = self.parts[p].tail;
        self.prev[v] = t;
        self.next[v] = NIL;
        if t != NIL {
            self.next[t] = v;
        } else {
            self.parts[p].head = v;
        }
        self.parts[p].tail = v;
        self.parts[p].size += 1;
        self.part_of[v] = p;
    }

    /// `pivot` must be sorted by τ-rank.
    pub(crate) fn refine_sorted(&mut self, pivot: &[Vertex], date: Date) -> Refinement {
        let mut out = Refinement::default();
        for &v in pivot {
            let p = self.part_of[v];
            if p == NIL {
                continue;
            }
            if self.parts[p].split_date != date {
                let child = self.parts.len();
                let label = self.parts[p].label.with(date);
                self.parts.push(Part {
                    head: NIL,
                    tail: NIL,
                    size: 0,
                    label,
                    split_date: date,
                    child: NIL,
                });
                self.parts[p].split_date = date;
                self.parts[p].child = child;
                out.created.push(child);
                out.shrunk.push((p, self.parts[p].head));
            }
            let child = self.parts[p].child;
            self.unlink(p, v);
            self.append(child, v);
        }
        out
    }

    /// Checks that every part is τ-sorted and that each vertex's part label
    /// equals `expected(v)`.
    pub fn check_invariants<F>(&self, mut expected: F) -> bool
    where
        F: FnMut(Vertex) -> LabelSet,
    {
        let mut seen = std::collections::HashSet::new();
        for p in 1..self.parts.len() {
            let members = self.members(p);
            if members.len() != self.parts[p].size {
                return false;
            }
            if members
                .windows(2)
                .any(|w| self.rank[w[0]] >= self.rank[w[1]])
            {
                return false;
            }
            if members
                .iter()
                .any(|&v| self.part_of[v] != p || expected(v) != self.parts[p].label)
            {
                return false;
            }
            if !members.is_empty() && !seen.insert(self.parts[p].label.clone()) {
                return false;
            }
        }
        true
    }
}

/// Indexed binary max-heap over part ids.
struct PartHeap {
    heap: Vec<PartId>,
    slot: Vec<usize>,
    insertions: usize,
}

const ABSENT: usize = usize::MAX;

struct Ranker<'a> {
    order: &'a LabelOrder,
    weak: bool,
    partition: &'a OrderedPartition,
}

impl Ranker<'_> {
    /// `true` iff part `a` should be visited before part `b`.
    fn above(&self, a: PartId, b: PartId) -> Result<bool, TotalityViolation> {
        let (pa, pb) = (&self.partition.parts[a], &self.partition.parts[b]);
        let by_rank = || self.partition.rank[pa.head] < self.partition.rank[pb.head];
        match self.order.compare(&pa.label, &pb.label) {
            LabelCmp::Greater => Ok(true),
            LabelCmp::Less => Ok(false),
            LabelCmp::Incomparable if self.weak => Ok(by_rank()),
            LabelCmp::Incomparable => Err(TotalityViolation(pa.label.clone(), pb.label.clone())),
        }
    }
}

impl PartHeap {
    fn new(capacity: usize) -> Self {
        PartHeap {
            heap: Vec::new(),
            slot: vec![ABSENT; capacity],
            insertions: 0,
        }
    }

    fn top(&self) -> Option<PartId> {
        self.heap.first().copied()
    }

    fn place(&mut self, i: usize, p: PartId) {
        self.heap[i] = p;
        self.slot[p] = i;
    }

    fn push(&mut self, p: PartId, r: &Ranker) -> Result<(), TotalityViolation> {
        if p >= self.slot.len() {
            self.slot.resize(p + 1, ABSENT);
        }
        self.insertions += 1;
        self.heap.push(p);
        let i = self.heap.len() - 1;
        self.slot[p] = i;
        self.sift_up(i, r)
    }

    fn remove(&mut self, p: PartId, r: &Ranker) -> Result<(), TotalityViolation> {
        let i = self.slot[p];
        debug_assert!(i != ABSENT);
        self.slot[p] = ABSENT;
        let last = self.heap.pop().expect("part is in the heap");
        if i < self.heap.len() {
            self.place(i, last);
            self.sift_up(i, r)?;
            let j = self.slot[last];
            self.sift_down(j, r)?;
        }
        Ok(())
    }

    /// Restores heap order after the head of `p` moved later in τ.
    fn demote(&mut self, p: PartId, r: &Ranker) -> Result<(), TotalityViolation> {
        let i = self.slot[p];
        self.sift_down(i, r)
    }

    fn sift_up(&mut self, mut i: usize, r: &Ranker) -> Result<(), TotalityViolation> {
        let p = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            let q = self.heap[parent];
            if !r.above(p, q)? {
                break;
            }
            self.place(i, q);
            i = parent;
        }
        self.place(i, p);
        Ok(())
    }

    fn sift_down(&mut self, mut i: usize, r: &Ranker) -> Result<(), TotalityViolation> {
        let p = self.heap[i];
        let len = self.heap.len();
        loop {
            let left = 2 * i + 1;
            if left >= len {
                break;
            }
            let right = left + 1;
            let mut best = left;
            if right < len && r.above(self.heap[right], self.heap[left])? {
                best = right;
            }
            if !r.above(self.heap[best], p)? {
                break;
            }
            let q = self.heap[best];
            self.place(i, q);
            i = best;
        }
        self.place(i, p);
        Ok(())
    }
}

/// Counters from a fast-engine run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FastStats {
    /// Parts ever pushed on the heap, the initial one included.
    pub heap_insertions: usize,
}

/// Adjacency lists (label-stamping direction) sorted by τ-rank, by a
/// bucket pass over τ: `O(n + m)`.
fn tau_sorted_adjacency(graph: &Graph, tau: &VertexOrdering) -> Vec<Vec<Vertex>> {
    let sources = label_sources(graph);
    let mut out: Vec<Vec<Vertex>> = graph
        .vertices()
        .map(|v| Vec::with_capacity(graph.degree(v)))
        .collect();
    out.insert(0, Vec::new());
    for u in tau.iter() {
        // u is stamped by each w with an arc w -> u, so u belongs in out[w]
        for &w in sources.neighbors(u) {
            out[w].push(u);
        }
    }
    out
}

/// Partition-refinement `TBLS(G, ≺, τ)`.
///
/// Errors with [`TotalityViolation`] when two live parts carry labels the
/// order leaves incomparable and the order is not a weak order.
pub fn tbls_fast(
    graph: &Graph,
    order: &LabelOrder,
    tau: &VertexOrdering,
) -> Result<VertexOrdering, TotalityViolation> {
    tbls_fast_with_stats(graph, order, tau).map(|(s, _)| s)
}

/// [`tbls_fast`] with run counters.
pub fn tbls_fast_with_stats(
    graph: &Graph,
    order: &LabelOrder,
    tau: &VertexOrdering,
) -> Result<(VertexOrdering, FastStats), TotalityViolation> {
    run(graph, order, tau, false)
}

/// [`tbls_fast`], asserting the partition invariants after every refinement.
/// Quadratic; meant for tests.
pub fn tbls_fast_checked(
    graph: &Graph,
    order: &LabelOrder,
    tau: &VertexOrdering,
) -> Result<VertexOrdering, TotalityViolation> {
    run(graph, order, tau, true).map(|(s, _)| s)
}

fn run(
    graph: &Graph,
    order: &LabelOrder,
    tau: &VertexOrdering,
    check: bool,
) -> Result<(VertexOrdering, FastStats), TotalityViolation> {
    assert_eq!(
        graph.n(),
        tau.len(),
        "tie-break ordering must cover the graph"
    );
    let n = graph.n();
    let adj = tau_sorted_adjacency(graph, tau);
    let mut partition = OrderedPartition::new(tau);
    let mut heap = PartHeap::new(n + 2);
    let weak = order.is_weak_order();
    let mut sigma = Vec::with_capacity(n);
    let mut date_of = vec![0; n + 1];

    if n > 0 {
        let r = Ranker {
            order,
            weak,
            partition: &partition,
        };
        heap.push(1, &r)?;
    }
    for date in 1..=n {
        let p = heap.top().expect("unnumbered vertices remain");
        let x = partition.parts[p].head;
        partition.remove(x);
        {
            let r = Ranker {
                order,
                weak,
                partition: &partition,
            };
            if partition.parts[p].size == 0 {
                heap.remove(p, &r)?;
            } else {
                heap.demote(p, &r)?;
            }
        }
        sigma.push(x);
        date_of[x] = date;

        let refinement = partition.refine_sorted(&adj[x], date);
        let r = Ranker {
            order,
            weak,
            partition: &partition,
        };
        for &(q, old_head) in &refinement.shrunk {
            if partition.parts[q].size == 0 {
                heap.remove(q, &r)?;
            } else if partition.parts[q].head != old_head {
                heap.demote(q, &r)?;
            }
        }
        for &c in &refinement.created {
            heap.push(c, &r)?;
        }

        if check {
            let stamped = |v: Vertex| {
                LabelSet::from_dates(
                    graph
                        .vertices()
                        .filter(|&w| date_of[w] != 0 && adj[w].contains(&v))
                        .map(|w| date_of[w]),
                )
            };
            assert!(
                partition.check_invariants(stamped),
                "partition invariants at step {date}"
            );
        }
    }
    let stats = FastStats {
        heap_insertions: heap.insertions,
    };
    Ok((
        VertexOrdering::new(sigma).expect("each vertex is visited exactly once"),
        stats,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::tbls_run;
    use crate::label::Search;
    use std::collections::BTreeSet;

    fn as_set(parts: Vec<(Vec<Vertex>, LabelSet)>) -> BTreeSet<(Vec<Vertex>, LabelSet)> {
        parts.into_iter().collect()
    }

    #[test]
    fn single_split() {
        let mut p = OrderedPartition::new(&VertexOrdering::identity(3));
        p.refine(&[2], 1);
        assert_eq!(
            as_set(p.parts()),
            as_set(vec![(vec![2], [1].into()), (vec![1, 3], LabelSet::new())])
        );
    }

    #[test]
    fn disjoint_pivot_is_noop() {
        let mut p = OrderedPartition::new(&VertexOrdering::identity(3));
        p.remove(2);
        let before = p.parts();
        p.refine(&[2], 1);
        assert_eq!(p.parts(), before);
    }

    #[test]
    fn p4_after_first_visit() {
        let mut p = OrderedPartition::new(&VertexOrdering::identity(4));
        p.remove(1);
        p.refine(&[3, 2], 1);
        assert_eq!(
            as_set(p.parts()),
            as_set(vec![(vec![2, 3], [1].into()), (vec![4], LabelSet::new())])
        );
    }

    #[test]
    fn engine_examples() {
        let h = Graph::undirected(6, [(1, 2), (2, 4), (4, 6), (1, 3), (3, 5)]).unwrap();
        let id = VertexOrdering::identity(6);
        assert_eq!(tbls_fast(&h, &Search::Bfs.into(), &id).unwrap(), id);

        let p4 = Graph::undirected(4, [(1, 2), (1, 3), (2, 4)]).unwrap();
        let s = tbls_fast(&p4, &Search::Lbfs.into(), &VertexOrdering::identity(4)).unwrap();
        assert_eq!(s.as_slice(), &[1, 2, 3, 4]);
    }

    #[test]
    fn gen_raises_totality_violation() {
        // after visiting 1 and 2, vertex 3 carries {1} and vertex 4 carries {2}
        let g = Graph::undirected(4, [(1, 2), (1, 3), (2, 4)]).unwrap();
        let err = tbls_fast(&g, &Search::Gen.into(), &VertexOrdering::identity(4)).unwrap_err();
        let pair = BTreeSet::from([err.0, err.1]);
        assert_eq!(
            pair,
            BTreeSet::from([LabelSet::from([1]), LabelSet::from([2])])
        );
    }

    #[test]
    fn null_order_returns_tau() {
        let g = Graph::undirected(4, [(1, 3), (2, 4), (3, 4)]).unwrap();
        let tau = VertexOrdering::new(vec![4, 2, 1, 3]).unwrap();
        assert_eq!(tbls_fast(&g, &LabelOrder::null(), &tau).unwrap(), tau);
    }

    #[test]
    fn insertions_bounded_by_edges() {
        let g = Graph::undirected(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3)]).unwrap();
        let tau = VertexOrdering::new(vec![3, 5, 1, 4, 2]).unwrap();
        for s in [Search::Bfs, Search::Lbfs, Search::Mcs] {
            let (sigma, stats) = tbls_fast_with_stats(&g, &s.into(), &tau).unwrap();
            assert_eq!(sigma, tbls_run(&g, &s.into(), &tau));
            assert!(stats.heap_insertions <= g.edge_count() + 1);
        }
    }

    #[test]
    fn directed_matches_reference() {
        let g = Graph::directed(5, [(1, 3), (2, 3), (3, 5), (4, 1), (5, 2)]).unwrap();
        let tau = VertexOrdering::new(vec![2, 4, 1, 5, 3]).unwrap();
        for s in [
            Search::Bfs,
            Search::Dfs,
            Search::Lbfs,
            Search::Ldfs,
            Search::Mcs,
        ] {
            assert_eq!(
                tbls_fast_checked(&g, &s.into(), &tau).unwrap(),
                tbls_run(&g, &s.into(), &tau),
                "{s}"
            );
        }
    }
}
