//! Cross-checks the face-insertion planarity test against an independent
//! oracle: a graph is planar iff it has neither a K5 nor a K33 minor.

mod common;

use leveled::graph::Graph;
use leveled::planarity::is_planar;

/// True iff `g` has a minor isomorphic to the pattern given by `blocks`
/// required edges on `k` branch sets. Exhaustive assignment of every vertex
/// to a branch set or to "unused", connectivity and adjacency checked at the
/// leaves. Only viable for small n.
fn has_minor(g: &Graph, k: usize, required: &[(usize, usize)], classes: &[usize]) -> bool {
    let n = g.vertex_count();
    if n < k {
        return false;
    }
    let mut nb = vec![0u32; n];
    for &(u, v) in g.edges() {
        nb[u] |= 1 << v;
        nb[v] |= 1 << u;
    }
    let mut blocks = vec![0u32; k];
    assign(&nb, n, k, required, classes, 0, &mut blocks)
}

fn assign(
    nb: &[u32],
    n: usize,
    k: usize,
    required: &[(usize, usize)],
    classes: &[usize],
    v: usize,
    blocks: &mut Vec<u32>,
) -> bool {
    if v == n {
        return blocks.iter().all(|&b| b != 0 && connected(nb, b))
            && required
                .iter()
                .all(|&(a, b)| touches(nb, blocks[a], blocks[b]));
    }
    // not enough vertices left to fill the empty blocks
    let empty = blocks.iter().filter(|&&b| b == 0).count();
    if empty > n - v {
        return false;
    }
    // interchangeable empty blocks: try only the first one per symmetry class
    let mut tried_empty = [false; 8];
    for b in 0..k {
        if blocks[b] == 0 {
            if tried_empty[classes[b]] {
                continue;
            }
            tried_empty[classes[b]] = true;
        }
        blocks[b] |= 1 << v;
        if assign(nb, n, k, required, classes, v + 1, blocks) {
            return true;
        }
        blocks[b] &= !(1 << v);
    }
    // leave v unused
    assign(nb, n, k, required, classes, v + 1, blocks)
}

fn connected(nb: &[u32], set: u32) -> bool {
    let start = set.trailing_zeros() as usize;
    let mut reach = 1u32 << start;
    loop {
        let mut grown = reach;
        let mut frontier = reach;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            grown |= nb[v] & set;
        }
        if grown == reach {
            return reach == set;
        }
        reach = grown;
    }
}

fn touches(nb: &[u32], a: u32, b: u32) -> bool {
    let mut rest = a;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if nb[v] & b != 0 {
            return true;
        }
    }
    false
}

fn oracle_planar(g: &Graph) -> bool {
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    !has_minor(g, 5, &k5, &[0; 5]) && !has_minor(g, 6, &k33, &[0, 0, 0, 1, 1, 1])
}

#[test]
fn oracle_on_knowns() {
    use leveled::graph::{generate, FamilySpec};
    assert!(oracle_planar(&generate(FamilySpec::Complete(4)).unwrap()));
    assert!(!oracle_planar(&generate(FamilySpec::Complete(5)).unwrap()));
    assert!(!oracle_planar(
        &generate(FamilySpec::CompleteBipartite(3, 3)).unwrap()
    ));
    assert!(oracle_planar(
        &generate(FamilySpec::CompleteBipartite(2, 5)).unwrap()
    ));
    assert!(!oracle_planar(&generate(FamilySpec::MoebiusLadder(8)).unwrap()));
}

#[test]
fn agrees_exhaustively_up_to_six_vertices() {
    for n in 1..=6 {
        for g in common::all_graphs(n) {
            assert_eq!(
                is_planar(&g),
                oracle_planar(&g),
                "disagreement on n={n}, edges {:?}",
                g.edges()
            );
        }
    }
}

#[test]
fn agrees_on_random_seven_vertex_graphs() {
    for g in common::random_connected_sample(7, 40, 0x9e3779b9) {
        assert_eq!(
            is_planar(&g),
            oracle_planar(&g),
            "disagreement on edges {:?}",
            g.edges()
        );
    }
}
