//! Helpers shared by the integration tests: seeded random graphs and
//! brute-force oracles that share no code with the library solvers.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectradom::harness::enumerate_nonisomorphic;
use spectradom::{Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with every pair drawn independently.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random order in `lo..=hi` and random density.
pub fn random_graph_in<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.05..0.95);
    random_graph(rng, n, p)
}

/// Smallest k such that some k-subset dominates, by scanning all subsets.
pub fn brute_force_gamma(g: &Graph) -> usize {
    let n = g.order();
    let all = (1u64 << n) - 1;
    let closed: Vec<u64> = (0..n).map(|v| g.adjacency()[v] | 1u64 << v).collect();
    let mut best = n;
    for mask in 0u64..=all {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut covered = 0u64;
        for (v, c) in closed.iter().enumerate() {
            if mask >> v & 1 == 1 {
                covered |= c;
            }
        }
        if covered == all {
            best = size;
        }
    }
    best
}

/// Every non-isomorphic graph with 1 <= n <= 7.
pub fn census() -> Vec<Graph> {
    (1..=7)
        .flat_map(|n| enumerate_nonisomorphic(n).unwrap())
        .collect()
}

pub fn set(vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(vs.iter().copied())
}
