//! Canonical forms for graphs on at most eight vertices.
//!
//! The adjacency bitstring of a labelled graph lists the pairs in column order
//! `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`. The canonical form is the
//! lexicographically least bitstring over all vertex permutations. Because
//! column `k` only involves the first `k + 1` positions, the minimum can be
//! built one position at a time, keeping only the partial labellings whose
//! prefix is still minimal.

use crate::graph::SimpleGraph;

pub const MAX_CANON_ORDER: usize = 8;

/// Graph order plus the minimum adjacency bitstring, first pair most significant.
///
/// The derived ordering sorts by order, then bitstring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: u8,
    bits: u32,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn bit_len(&self) -> usize {
        let n = self.order();
        n * n.saturating_sub(1) / 2
    }

    /// The bitstring as `0`/`1` characters; empty for graphs with fewer than two vertices.
    pub fn bitstring(&self) -> String {
        let len = self.bit_len();
        (0..len).map(|i| if self.bits >> (len - 1 - i) & 1 == 1 { '1' } else { '0' }).collect()
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> SimpleGraph {
        let n = self.order();
        let mut g = SimpleGraph::empty(n);
        let mut pos = self.bit_len();
        for k in 1..n {
            for i in 0..k {
                pos -= 1;
                if self.bits >> pos & 1 == 1 {
                    g.add_edge(i, k);
                }
            }
        }
        g
    }
}

/// Panics if `g` has more than [`MAX_CANON_ORDER`] vertices.
pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    let n = g.order();
    assert!(n <= MAX_CANON_ORDER, "canonical forms support at most {MAX_CANON_ORDER} vertices");
    let mut partials: Vec<Vec<usize>> = vec![Vec::new()];
    let mut bits = 0u32;
    for k in 0..n {
        let mut best: Option<u32> = None;
        let mut next = Vec::new();
        for p in &partials {
            for v in (0..n).filter(|v| !p.contains(v)) {
                let block = p.iter().fold(0u32, |acc, &u| acc << 1 | g.has_edge(u, v) as u32);
                match best {
                    Some(b) if block > b => continue,
                    Some(b) if block < b => next.clear(),
                    _ => {}
                }
                best = Some(block);
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        bits = bits << k | best.unwrap_or(0);
        partials = next;
    }
    CanonicalForm { order: n as u8, bits }
}

pub fn canonical_graph(g: &SimpleGraph) -> SimpleGraph {
    canonical_form(g).to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    /// Minimum over every permutation, computed the slow way.
    fn naive_form(g: &SimpleGraph) -> (usize, u32) {
        let n = g.order();
        let best = (0..n)
            .permutations(n)
            .map(|perm| {
                let mut bits = 0u32;
                for k in 1..n {
                    for i in 0..k {
                        bits = bits << 1 | g.has_edge(perm[i], perm[k]) as u32;
                    }
                }
                bits
            })
            .min()
            .unwrap_or(0);
        (n, best)
    }

    #[test]
    fn matches_naive_minimum_on_all_small_graphs() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
                let g = SimpleGraph::from_edges(n, &edges).unwrap();
                let form = canonical_form(&g);
                assert_eq!((form.order(), form.bits()), naive_form(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn representative_round_trips() {
        let g = SimpleGraph::cycle(7);
        let form = canonical_form(&g);
        assert_eq!(canonical_form(&form.to_graph()), form);
        assert_eq!(form.to_graph().size(), 7);
        assert_eq!(form.bitstring().len(), 21);
    }

    #[test]
    fn isomorphic_graphs_share_a_form() {
        let a = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = SimpleGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&star));
        assert_eq!(canonical_form(&SimpleGraph::empty(3)).bitstring(), "000");
        assert_eq!(canonical_form(&SimpleGraph::complete(3)).bitstring(), "111");
    }
}
