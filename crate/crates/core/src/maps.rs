//! Vertex maps and the embedding / homomorphism predicates.

use crate::graph::SimpleGraph;
use crate::types::{EdgeColor, TypeGraph};

/// A total map from `0..image.len()` into the vertices of some type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMap {
    image: Vec<usize>,
}

impl VertexMap {
    pub fn new(image: Vec<usize>) -> Self {
        VertexMap { image }
    }

    pub fn constant(domain: usize, target: usize) -> Self {
        VertexMap { image: vec![target; domain] }
    }

    pub fn identity(domain: usize) -> Self {
        VertexMap { image: (0..domain).collect() }
    }

    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn get(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn into_image(self) -> Vec<usize> {
        self.image
    }

    /// Whether the map is total on `domain` vertices and lands in `0..target`.
    pub fn fits(&self, domain: usize, target: usize) -> bool {
        self.image.len() == domain && self.image.iter().all(|&t| t < target)
    }

    /// `outer ∘ self`.
    pub fn then(&self, outer: &VertexMap) -> VertexMap {
        VertexMap { image: self.image.iter().map(|&v| outer.get(v)).collect() }
    }

    pub fn fixed_points(&self, domain_labels: &[usize]) -> usize {
        self.image.iter().zip(domain_labels).filter(|(a, b)| a == b).count()
    }
}

impl From<Vec<usize>> for VertexMap {
    fn from(image: Vec<usize>) -> Self {
        VertexMap::new(image)
    }
}

/// Every edge of `g` lands in one blue vertex or across a blue/green edge, and
/// every non-edge lands in one red vertex or across a red/green edge.
///
/// A map that is not total on `V(g)` or leaves `V(ty)` is not an embedding.
pub fn is_embedding(g: &SimpleGraph, ty: &TypeGraph, psi: &VertexMap) -> bool {
    if !psi.fits(g.order(), ty.order()) {
        return false;
    }
    (0..g.order()).all(|u| {
        (u + 1..g.order()).all(|v| {
            let (s, t) = (psi.get(u), psi.get(v));
            if g.has_edge(u, v) {
                ty.admits_edge(s, t)
            } else {
                ty.admits_non_edge(s, t)
            }
        })
    })
}

/// Red edges of `sigma` go to red vertices or red/green edges; blue edges go to
/// blue vertices or blue/green edges. Green edges are unconstrained.
pub fn is_edge_homomorphism(sigma: &TypeGraph, tau: &TypeGraph, phi: &VertexMap) -> bool {
    if !phi.fits(sigma.order(), tau.order()) {
        return false;
    }
    sigma.pairs().all(|(v, w)| {
        let (s, t) = (phi.get(v), phi.get(w));
        match sigma.edge_color(v, w) {
            EdgeColor::Red => tau.admits_non_edge(s, t),
            EdgeColor::Blue => tau.admits_edge(s, t),
            EdgeColor::Green => true,
        }
    })
}

/// Edge-homomorphism that also preserves vertex colours and sends green edges
/// across green edges.
pub fn is_type_homomorphism(sigma: &TypeGraph, tau: &TypeGraph, phi: &VertexMap) -> bool {
    is_edge_homomorphism(sigma, tau, phi)
        && (0..sigma.order()).all(|v| sigma.vertex_color(v) == tau.vertex_color(phi.get(v)))
        && sigma.pairs().all(|(v, w)| {
            sigma.edge_color(v, w) != EdgeColor::Green
                || (phi.get(v) != phi.get(w) && tau.edge_color(phi.get(v), phi.get(w)) == EdgeColor::Green)
        })
}
