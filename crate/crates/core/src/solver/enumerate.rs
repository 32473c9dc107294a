//! Minimal obstructions by orderly generation over vertex count.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalForm, MAX_CANON_ORDER};
use super::search::{has_embedding, SolverError};
use crate::graph::SimpleGraph;
use crate::types::TypeGraph;

/// Every minimal obstruction of `ty` with at most `max_vertices` vertices, one
/// canonical representative per isomorphism class, sorted by order then bitstring.
///
/// Level `n` is generated by adding a vertex, with every possible
/// neighbourhood, to each embeddable graph of level `n - 1`; every embeddable
/// graph and every minimal obstruction arises this way. A candidate with some
/// non-embeddable `G - v` is discarded without a search.
pub fn enumerate_minimal_obstructions(ty: &TypeGraph, max_vertices: usize) -> Result<Vec<SimpleGraph>, SolverError> {
    Ok(obstruction_forms(ty, max_vertices)?.into_iter().map(|f| f.to_graph()).collect())
}

pub fn obstruction_forms(ty: &TypeGraph, max_vertices: usize) -> Result<Vec<CanonicalForm>, SolverError> {
    if max_vertices > MAX_CANON_ORDER {
        return Err(SolverError::TooManyVertices { got: max_vertices, max: MAX_CANON_ORDER });
    }
    let mut obstructions = Vec::new();
    let mut embeddable: HashSet<CanonicalForm> = HashSet::from([canonical_form(&SimpleGraph::empty(0))]);
    for n in 1..=max_vertices {
        let candidates: BTreeSet<CanonicalForm> = embeddable
            .par_iter()
            .flat_map_iter(|parent| {
                let base = parent.to_graph().with_extra_vertices(1);
                (0u32..1 << (n - 1)).map(move |mask| {
                    let mut g = base.clone();
                    for u in (0..n - 1).filter(|u| mask >> u & 1 == 1) {
                        g.add_edge(u, n - 1);
                    }
                    canonical_form(&g)
                })
            })
            .collect();

        let classified: Vec<(CanonicalForm, bool)> = candidates
            .into_par_iter()
            .filter_map(|form| {
                let g = form.to_graph();
                let hereditary = (0..n).all(|v| embeddable.contains(&canonical_form(&g.remove_vertex(v))));
                hereditary.then(|| (form, has_embedding(&g, ty)))
            })
            .collect();

        embeddable = classified.iter().filter(|(_, ok)| *ok).map(|(f, _)| *f).collect();
        obstructions.extend(classified.iter().filter(|(_, ok)| !*ok).map(|(f, _)| *f));
    }
    obstructions.sort_unstable();
    Ok(obstructions)
}
