//! Minimal obstructions checked against a labelled exhaustive filter.
//!
//! The oracle walks every labelled graph on `n` vertices. Embeddability is
//! hereditary, so a graph with a non-embeddable `G - v` is not embeddable and
//! not minimal; otherwise it is decided by brute force. Obstructions are then
//! deduplicated with a plain all-permutations isomorphism test.

use itertools::Itertools;

use mpart::solver::brute_force_has_embedding;
use mpart::{
    coloring_matrix, enumerate_minimal_obstructions, parse_matrix, EdgeColor, SimpleGraph, TypeGraph, VertexColor,
};

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).tuple_combinations().collect()
}

fn graph_from_mask(n: usize, mask: u32) -> SimpleGraph {
    let edges: Vec<_> = pairs(n).into_iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e).collect();
    SimpleGraph::from_edges(n, &edges).unwrap()
}

fn isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && (0..a.order()).permutations(a.order()).any(|p| a.edges().all(|(u, v)| b.has_edge(p[u], p[v])))
}

fn oracle(ty: &TypeGraph, max_n: usize) -> Vec<SimpleGraph> {
    let mut found: Vec<SimpleGraph> = Vec::new();
    // embeddable[mask] for the previous order.
    let mut prev = vec![brute_force_has_embedding(&SimpleGraph::empty(0), ty).unwrap()];
    for n in 1..=max_n {
        let p = pairs(n);
        let sub_index: Vec<Vec<Option<usize>>> = (0..n)
            .map(|v| {
                let smaller = pairs(n - 1);
                p.iter()
                    .map(|&(a, b)| {
                        if a == v || b == v {
                            return None;
                        }
                        let shift = |x: usize| if x > v { x - 1 } else { x };
                        smaller.iter().position(|&e| e == (shift(a), shift(b)))
                    })
                    .collect()
            })
            .collect();
        let mut current = vec![false; 1 << p.len()];
        for mask in 0u32..1 << p.len() {
            let all_sub = (0..n).all(|v| {
                let sub = sub_index[v]
                    .iter()
                    .enumerate()
                    .filter_map(|(k, t)| t.filter(|_| mask >> k & 1 == 1))
                    .fold(0usize, |acc, t| acc | 1 << t);
                prev[sub]
            });
            if !all_sub {
                continue;
            }
            let g = graph_from_mask(n, mask);
            if brute_force_has_embedding(&g, ty).unwrap() {
                current[mask as usize] = true;
            } else if !found.iter().any(|h| isomorphic(h, &g)) {
                found.push(g);
            }
        }
        prev = current;
    }
    found
}

fn assert_same_up_to_isomorphism(ty: &TypeGraph, max_n: usize) -> usize {
    let expected = oracle(ty, max_n);
    let got = enumerate_minimal_obstructions(ty, max_n).unwrap();
    assert_eq!(got.len(), expected.len(), "{ty:?}");
    for g in &got {
        assert!(expected.iter().any(|h| isomorphic(g, h)), "{g:?} not in oracle for {ty:?}");
    }
    got.len()
}

#[test]
fn two_colouring_up_to_seven() {
    let ty = TypeGraph::from(&coloring_matrix(2).unwrap());
    assert_eq!(assert_same_up_to_isomorphism(&ty, 7), 3);
    let got = enumerate_minimal_obstructions(&ty, 7).unwrap();
    for (g, n) in got.iter().zip([3, 5, 7]) {
        assert!(isomorphic(g, &SimpleGraph::cycle(n)));
    }
}

#[test]
fn three_colouring_up_to_six() {
    let ty = TypeGraph::from(&coloring_matrix(3).unwrap());
    let count = assert_same_up_to_isomorphism(&ty, 6);
    let got = enumerate_minimal_obstructions(&ty, 4).unwrap();
    assert_eq!(got.len(), 1);
    assert!(isomorphic(&got[0], &SimpleGraph::complete(4)));
    // K4 and the 5-wheel.
    assert_eq!(count, 2);
}

#[test]
fn split_graphs_up_to_six() {
    // A clique part and an independent part: obstructions 2K2, C4, C5.
    let ty = TypeGraph::from(&parse_matrix("2\n0*\n*1\n").unwrap());
    assert_eq!(assert_same_up_to_isomorphism(&ty, 6), 3);
}

#[test]
fn random_small_types() {
    let mut rng = mpart::random::SplitMix64::new(17);
    for _ in 0..12 {
        let n = 1 + rng.below_usize(3);
        let vertices = (0..n).map(|_| if rng.below(2) == 0 { VertexColor::Red } else { VertexColor::Blue }).collect();
        let mut ty = TypeGraph::uniform(vertices, EdgeColor::Red);
        for (u, v) in (0..n).tuple_combinations() {
            ty.set_edge(u, v, EdgeColor::ALL[rng.below_usize(3)]);
        }
        assert_same_up_to_isomorphism(&ty, 5);
    }
}
