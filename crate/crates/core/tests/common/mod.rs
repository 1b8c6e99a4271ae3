#![allow(dead_code)]

use heawood_core::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdos-Renyi style graph on `1..=n`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 1..=n as u32 {
        for v in u + 1..=n as u32 {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// `count` random graphs with `min_n..=max_n` vertices and varying density.
pub fn corpus(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(min_n..=max_n);
            let p = r.gen_range(0.15..0.9);
            random_graph(&mut r, n, p)
        })
        .collect()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        v.swap(i, j);
    }
    v
}

/// Number of Hamiltonian cycles of the subgraph induced on `vertices`, by
/// trying every ordering that starts at the first vertex. Each cycle is seen
/// once per direction.
fn hamiltonian_cycles_induced(g: &Graph, vertices: &[u32]) -> u64 {
    fn walk(g: &Graph, vs: &[u32], path: &mut Vec<u32>, used: &mut Vec<bool>, count: &mut u64) {
        if path.len() == vs.len() {
            if g.has_edge(*path.last().unwrap(), path[0]) {
                *count += 1;
            }
            return;
        }
        for i in 1..vs.len() {
            if !used[i] && g.has_edge(*path.last().unwrap(), vs[i]) {
                used[i] = true;
                path.push(vs[i]);
                walk(g, vs, path, used, count);
                path.pop();
                used[i] = false;
            }
        }
    }
    let mut used = vec![false; vertices.len()];
    used[0] = true;
    let mut path = vec![vertices[0]];
    let mut count = 0;
    walk(g, vertices, &mut path, &mut used, &mut count);
    count / 2
}

/// Subset oracle: the number of k-cycles is the sum over all k-subsets of
/// the Hamiltonian cycles of the induced subgraph.
pub fn brute_force_cycle_count(g: &Graph, k: usize) -> u64 {
    let n = g.n();
    let labels = g.labels();
    let mut total = 0;
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let vs: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| labels[i]).collect();
        total += hamiltonian_cycles_induced(g, &vs);
    }
    total
}
