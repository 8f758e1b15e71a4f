//! Every graph on up to six vertices, one per isomorphism class.

use crate::graph::{Graph, Vertex};

/// Largest vertex count supported by [`small_graphs`].
pub const MAX_CORPUS_N: usize = 6;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut perm, &mut out);
    out
}

fn heap_permute(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(perm.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, perm, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        perm.swap(j, k - 1);
    }
    heap_permute(k - 1, perm, out);
}

/// One representative per isomorphism class of simple undirected graphs on
/// exactly `n` vertices, taken as the edge bitmask that is smallest among all
/// relabellings. Sorted by that mask.
pub fn small_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= MAX_CORPUS_N,
        "corpus enumeration is exhaustive; n ≤ {MAX_CORPUS_N}"
    );
    let pairs = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    // bit i of a mask moves to bit maps[p][i] under permutation p
    let maps: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index[p[u]][p[v]]).collect())
        .collect();

    let total = 1u32 << pairs.len();
    let mut seen = vec![false; total as usize];
    let mut reps = Vec::new();
    for mask in 0..total {
        if seen[mask as usize] {
            continue;
        }
        // mask is the least member of its class since classes are visited in order
        for map in &maps {
            let mut image = 0u32;
            for (i, &to) in map.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    image |= 1 << to;
                }
            }
            seen[image as usize] = true;
        }
        reps.push(mask);
    }
    reps.into_iter()
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &(u, v))| (u + 1, v + 1));
            Graph::undirected(n, edges).expect("pairs are in range")
        })
        .collect()
}

pub fn is_connected(graph: &Graph) -> bool {
    let n = graph.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n + 1];
    let mut stack: Vec<Vertex> = vec![1];
    seen[1] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in graph.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// All graphs with `1 ≤ n ≤ max_n`, optionally only the connected ones.
pub fn corpus(max_n: usize, connected_only: bool) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(small_graphs)
        .filter(|g| !connected_only || is_connected(g))
        .collect()
}
