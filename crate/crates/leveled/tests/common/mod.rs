//! Shared corpus builders for the integration suites: exhaustive
//! non-isomorphic small graphs and seeded random connected samples.
#![allow(dead_code)]

use leveled::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let mut i = n.saturating_sub(1);
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// All graphs on exactly `n` labeled-canonical vertices, one per isomorphism
/// class: a graph is kept iff its edge bitmask is the minimum over all vertex
/// permutations. Intended for n <= 6.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs = vertex_pairs(n);
    let m = pairs.len();
    let perms = permutations(n);
    // pair_maps[p][i] = index of pairs[i] after applying permutation p
    let pair_index = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let pair_maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|perm| {
            pairs
                .iter()
                .map(|&(a, b)| pair_index(perm[a], perm[b]))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    'mask: for mask in 0u32..(1 << m) {
        for map in &pair_maps {
            let mut image = 0u32;
            for i in 0..m {
                if mask >> i & 1 == 1 {
                    image |= 1 << map[i];
                }
            }
            if image < mask {
                continue 'mask;
            }
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        out.push(Graph::new(n, edges).unwrap());
    }
    out
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

/// A seeded sample of distinct connected graphs on exactly `n` vertices.
pub fn random_connected_sample(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let pairs = vertex_pairs(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    while out.len() < count {
        let p: f64 = rng.gen_range(0.2..0.9);
        let mut mask = 0u64;
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|_| rng.gen_bool(p))
            .map(|(i, &e)| {
                mask |= 1 << i;
                e
            })
            .collect();
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() && seen.insert(mask) {
            out.push(g);
        }
    }
    out
}
