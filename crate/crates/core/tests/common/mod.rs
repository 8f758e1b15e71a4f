//! Brute-force oracles written from the definitions, sharing nothing with the
//! library beyond `Graph` and `VertexOrdering`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use tbls::certificate::{Certificate, Rule};
use tbls::graph::{Graph, VertexOrdering};
use tbls::label::Search;

pub type Dates = BTreeSet<usize>;

/// `A ≺ B` for the seven searches, straight from their definitions.
pub fn brute_less(s: Search, a: &Dates, b: &Dates) -> bool {
    let umin = |x: &Dates| x.iter().next().copied().unwrap_or(usize::MAX);
    let umax = |x: &Dates| x.iter().next_back().copied().unwrap_or(0);
    let sym: Dates = a.symmetric_difference(b).copied().collect();
    match s {
        Search::Gen => a.is_empty() && !b.is_empty(),
        Search::Bfs => umin(a) > umin(b),
        Search::Dfs => umax(a) < umax(b),
        Search::Lbfs => sym.iter().next().is_some_and(|d| b.contains(d)),
        Search::Ldfs => sym.iter().next_back().is_some_and(|d| b.contains(d)),
        Search::Mcs => a.len() < b.len(),
        Search::Mns => a.len() < b.len() && a.is_subset(b),
    }
}

/// Dates of the neighbours of `v` among the first `step - 1` vertices of σ.
pub fn label_at(g: &Graph, sigma: &[usize], v: usize, step: usize) -> Dates {
    (1..step).filter(|&d| g.has_edge(sigma[d - 1], v)).collect()
}

/// σ is an S-ordering iff at every step the visited vertex carries a label
/// no unnumbered vertex strictly dominates.
pub fn brute_is_ordering(g: &Graph, s: Search, sigma: &[usize]) -> bool {
    let n = sigma.len();
    (1..=n).all(|i| {
        let lx = label_at(g, sigma, sigma[i - 1], i);
        (i + 1..=n).all(|j| !brute_less(s, &lx, &label_at(g, sigma, sigma[j - 1], i)))
    })
}

/// Whether `(a, b, c)` (given as positions) breaks the pattern condition of
/// `s`: `a < b < c`, `ac ∈ E`, `ab ∉ E`, and no rescuing `d` exists.
pub fn violates_pattern(
    g: &Graph,
    s: Search,
    sigma: &[usize],
    pa: usize,
    pb: usize,
    pc: usize,
) -> bool {
    let v = |p: usize| sigma[p - 1];
    let e = |p: usize, q: usize| g.has_edge(v(p), v(q));
    if !(pa < pb && pb < pc && e(pa, pc) && !e(pa, pb)) {
        return false;
    }
    let rescued = match s {
        Search::Gen => (1..pb).any(|d| e(d, pb)),
        Search::Bfs => (1..pa).any(|d| e(d, pb)),
        Search::Dfs => (pa + 1..pb).any(|d| e(d, pb)),
        Search::Lbfs => (1..pa).any(|d| e(d, pb) && !e(d, pc)),
        Search::Ldfs => (pa + 1..pb).any(|d| e(d, pb) && !e(d, pc)),
        Search::Mcs | Search::Mns => panic!("no pattern condition for {s}"),
    };
    !rescued
}

pub fn pattern_holds(g: &Graph, s: Search, sigma: &[usize]) -> bool {
    let n = sigma.len();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                if violates_pattern(g, s, sigma, a, b, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// Replays a reject certificate against the condition its rule names.
/// Returns a description of what is wrong, or `None` if the witness holds.
pub fn replay_witness(g: &Graph, s: Search, sigma: &[usize], cert: &Certificate) -> Option<String> {
    let (Some(rule), Some(w)) = (cert.rule, cert.witness.as_ref()) else {
        return Some("reject without rule or witness".into());
    };
    let pos = |v: usize| sigma.iter().position(|&x| x == v).unwrap() + 1;
    let positions: Vec<usize> = w.vertices.iter().map(|&v| pos(v)).collect();
    if positions != w.positions {
        return Some(format!(
            "positions {:?} do not match vertices {:?}",
            w.positions, w.vertices
        ));
    }
    let has = |a: usize, b: usize| g.has_edge(w.vertices[a], w.vertices[b]);
    let ok = match rule {
        Rule::GenTriple
        | Rule::BfsTriple
        | Rule::DfsTriple
        | Rule::LbfsPattern
        | Rule::LdfsPattern => {
            let expected = match rule {
                Rule::GenTriple => Search::Gen,
                Rule::BfsTriple => Search::Bfs,
                Rule::DfsTriple => Search::Dfs,
                Rule::LbfsPattern => Search::Lbfs,
                _ => Search::Ldfs,
            };
            // bfs and dfs certifiers may reject through the generic condition
            let family_ok = expected == s || expected == Search::Gen;
            family_ok
                && positions.len() == 3
                && violates_pattern(g, expected, sigma, positions[0], positions[1], positions[2])
        }
        Rule::Pairwise => {
            let step = w.step.unwrap_or(0);
            positions.len() == 2
                && positions[0] == step
                && positions[0] < positions[1]
                && brute_less(
                    s,
                    &label_at(g, sigma, w.vertices[0], step),
                    &label_at(g, sigma, w.vertices[1], step),
                )
        }
        Rule::Fixpoint => {
            let step = w.step.unwrap_or(0);
            let lx = label_at(g, sigma, w.vertices[0], step);
            let ld = label_at(g, sigma, w.vertices[2], step);
            positions.len() == 3
                && positions[0] == step
                && positions[1] > step
                && positions[2] > step
                && brute_less(s, &lx, &ld)
        }
        Rule::UnitInterval => {
            positions.windows(2).all(|p| p[0] < p[1]) && has(0, 2) && !(has(0, 1) && has(1, 2))
        }
        Rule::Umbrella => {
            positions.windows(2).all(|p| p[0] < p[1]) && has(0, 2) && !has(0, 1) && !has(1, 2)
        }
    };
    (!ok).then(|| format!("{rule} witness {:?} does not replay", w.vertices))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

pub fn random_ordering<R: Rng>(n: usize, rng: &mut R) -> VertexOrdering {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    VertexOrdering::new(v).unwrap()
}

/// Random simple graph where each edge is present with probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::undirected(n, edges).unwrap()
}

pub fn ord(v: &[usize]) -> VertexOrdering {
    VertexOrdering::new(v.to_vec()).unwrap()
}

pub fn dates(d: &[usize]) -> Dates {
    d.iter().copied().collect()
}
