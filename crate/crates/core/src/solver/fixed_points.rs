//! Exhaustive edge-homomorphism enumeration and the small-type fixed-point study.

use itertools::Itertools;

use super::search::SolverError;
use crate::maps::VertexMap;
use crate::types::TypeGraph;
use crate::Rational;

/// Largest target type accepted by the exhaustive fixed-point scan.
pub const MAX_FIXED_POINT_ORDER: usize = 7;

/// Depth-first stream of every edge-homomorphism `sigma -> tau`, in
/// lexicographic order of the image vector.
pub struct EdgeHomomorphisms<'a> {
    sigma: &'a TypeGraph,
    tau: &'a TypeGraph,
    image: Vec<usize>,
    // Next candidate to try at each depth.
    cursor: Vec<usize>,
    done: bool,
}

impl<'a> EdgeHomomorphisms<'a> {
    pub fn new(sigma: &'a TypeGraph, tau: &'a TypeGraph) -> Self {
        EdgeHomomorphisms { sigma, tau, image: Vec::new(), cursor: vec![0], done: false }
    }

    fn fits(&self, v: usize, t: usize) -> bool {
        self.image.iter().enumerate().all(|(w, &s)| match self.sigma.edge_color(w, v) {
            crate::types::EdgeColor::Red => self.tau.admits_non_edge(s, t),
            crate::types::EdgeColor::Blue => self.tau.admits_edge(s, t),
            crate::types::EdgeColor::Green => true,
        })
    }
}

impl Iterator for EdgeHomomorphisms<'_> {
    type Item = VertexMap;

    fn next(&mut self) -> Option<VertexMap> {
        let (n, k) = (self.sigma.order(), self.tau.order());
        while !self.done {
            let depth = self.image.len();
            if depth == n {
                let out = VertexMap::new(self.image.clone());
                // Backtrack so the following call resumes after this leaf.
                self.cursor.pop();
                match self.image.pop() {
                    Some(_) => {}
                    None => self.done = true,
                }
                return Some(out);
            }
            let start = self.cursor[depth];
            match (start..k).find(|&t| self.fits(depth, t)) {
                Some(t) => {
                    self.cursor[depth] = t + 1;
                    self.image.push(t);
                    self.cursor.push(0);
                }
                None => {
                    self.cursor.pop();
                    if self.image.pop().is_none() {
                        self.done = true;
                    }
                }
            }
        }
        None
    }
}

pub fn enumerate_edge_homomorphisms<'a>(sigma: &'a TypeGraph, tau: &'a TypeGraph) -> EdgeHomomorphisms<'a> {
    EdgeHomomorphisms::new(sigma, tau)
}

/// A fewest-fixed-points witness over all large subtypes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointReport {
    pub subtype_size: usize,
    /// Host vertices of the subtype, ascending; `map` is indexed by position here.
    pub domain: Vec<usize>,
    pub map: VertexMap,
    pub fixed_count: usize,
    pub alpha: Rational,
    /// Observed `fixed_count / |V(tau)|`.
    pub beta: Rational,
}

/// Scans every subtype of `tau` with at least `alpha * |V(tau)|` vertices and
/// every edge-homomorphism from it into `tau`, returning one that fixes the
/// fewest vertices (first found on ties). `None` when no subtype qualifies.
pub fn min_fixed_points(tau: &TypeGraph, alpha: Rational) -> Result<Option<FixedPointReport>, SolverError> {
    let n = tau.order();
    if n > MAX_FIXED_POINT_ORDER {
        return Err(SolverError::TooManyVertices { got: n, max: MAX_FIXED_POINT_ORDER });
    }
    // Smallest size s with s >= alpha * n.
    let min_size = (alpha * Rational::from_integer(n as i64)).ceil().to_integer().max(0) as usize;
    let mut best: Option<FixedPointReport> = None;
    for size in min_size.max(1)..=n {
        for domain in (0..n).combinations(size) {
            let sigma = tau.subtype(&domain).pattern;
            for phi in enumerate_edge_homomorphisms(&sigma, tau) {
                let fixed = phi.fixed_points(&domain);
                if best.as_ref().is_none_or(|b| fixed < b.fixed_count) {
                    best = Some(FixedPointReport {
                        subtype_size: size,
                        domain: domain.clone(),
                        map: phi,
                        fixed_count: fixed,
                        alpha,
                        beta: Rational::new(fixed as i64, n as i64),
                    });
                }
            }
        }
    }
    Ok(best)
}
