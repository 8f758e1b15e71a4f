//! Seeded instance generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)` (crate
//! `rand_chacha`), whose output stream is stable across platforms and
//! releases, so a seed always yields the same graph.

use std::collections::HashSet;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Intersection graph of the closed unit intervals `[l, l + 1]`, vertex `i`
/// owning `left[i - 1]`. Built by a sweep over sorted endpoints.
pub fn unit_interval_graph(left: &[f64]) -> Graph {
    let n = left.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| left[a].total_cmp(&left[b]));
    let mut edges = Vec::new();
    for (k, &a) in idx.iter().enumerate() {
        for &b in &idx[k + 1..] {
            if left[b] - left[a] > 1.0 {
                break;
            }
            edges.push((a + 1, b + 1));
        }
    }
    Graph::undirected(n, edges).expect("indices are in range")
}

/// `n` unit intervals with left endpoints drawn uniformly from `[0, n/2]`.
pub fn gen_unit_interval_graph(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let span = n as f64 / 2.0;
    let left: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..=span)).collect();
    unit_interval_graph(&left)
}

/// Permutation graph of `perm` (a permutation of `1..=n`): `i < j` are
/// adjacent iff `perm` inverts them.
pub fn permutation_graph(perm: &[usize]) -> Graph {
    let n = perm.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] > perm[j] {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Graph::undirected(n, edges).expect("indices are in range")
}

pub fn gen_permutation_graph(n: usize, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(&mut rng(seed));
    permutation_graph(&perm)
}

/// Uniform random simple graph with exactly `min(m, n(n-1)/2)` edges.
pub fn gen_random_graph(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let m = m.min(n * n.saturating_sub(1) / 2);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.random_range(1..=n);
        let v = rng.random_range(1..=n);
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if seen.insert(e) {
            edges.push(e);
        }
    }
    Graph::undirected(n, edges).expect("indices are in range")
}

/// A random graph on `n ≥ 4` vertices with edge density `p` in which four
/// random vertices are forced to induce a claw `K1,3`. Returns the graph and
/// `[centre, leaf, leaf, leaf]`.
pub fn gen_graph_with_induced_claw(n: usize, p: f64, seed: u64) -> (Graph, [Vertex; 4]) {
    assert!(n >= 4, "a claw needs four vertices");
    let mut rng = rng(seed);
    let vertices: Vec<Vertex> = (1..=n).collect();
    let chosen: Vec<Vertex> = vertices.choose_multiple(&mut rng, 4).copied().collect();
    let claw = [chosen[0], chosen[1], chosen[2], chosen[3]];
    let in_claw = |v: Vertex| claw.contains(&v);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if in_claw(u) && in_claw(v) {
                continue;
            }
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.extend(claw[1..].iter().map(|&leaf| (claw[0], leaf)));
    (
        Graph::undirected(n, edges).expect("indices are in range"),
        claw,
    )
}
