use thiserror::Error;

use super::rng::SplitMix64;
use crate::error::ModelError;
use crate::types::{EdgeColor, SubtypeCopy, TypeGraph, VertexColor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    /// `n` vertices, each red or blue with probability 1/2; every edge red, blue
    /// or green with probability 1/3.
    General,
    /// `n` red vertices `0..n` then `n` blue vertices `n..2n`; red-blue edges
    /// uniform over three colours, same-colour edges uniform over red and blue.
    Friendly,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::General => "general",
            Model::Friendly => "friendly",
        }
    }

    pub fn parse(s: &str) -> Option<Model> {
        match s {
            "general" => Some(Model::General),
            "friendly" => Some(Model::Friendly),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RandomSpec {
    n: usize,
    pub model: Model,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RandomError {
    #[error("random types need n >= 1")]
    ZeroOrder,
    #[error("cannot plant: {0}")]
    Plant(#[from] ModelError),
    #[error("tuple space {got} exceeds the exhaustive limit {limit}")]
    TooLarge { got: u128, limit: u128 },
    #[error("inconsistent scenario: {0}")]
    Scenario(String),
    #[error("chernoff bound needs 0 < eps <= 1 and n >= 3")]
    ChernoffDomain,
    #[error("not enough vertices of each colour to plant the pattern")]
    NotEnoughVertices,
}

impl RandomSpec {
    pub fn new(n: usize, model: Model, seed: u64) -> Result<Self, RandomError> {
        if n == 0 {
            return Err(RandomError::ZeroOrder);
        }
        Ok(RandomSpec { n, model, seed })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

const THREE: [EdgeColor; 3] = [EdgeColor::Red, EdgeColor::Blue, EdgeColor::Green];
const TWO: [EdgeColor; 2] = [EdgeColor::Red, EdgeColor::Blue];

/// Draws a type. The stream is fixed: vertex colours in index order (general
/// model only), then edge colours for pairs `(u, v)`, `u < v`, in
/// lexicographic order. Each draw is `below(2)` or `below(3)` mapped through
/// `[Red, Blue]` or `[Red, Blue, Green]`.
pub fn sample_type(spec: &RandomSpec) -> TypeGraph {
    let mut rng = SplitMix64::new(spec.seed);
    let vertices: Vec<VertexColor> = match spec.model {
        Model::General => {
            (0..spec.n).map(|_| if rng.below(2) == 0 { VertexColor::Red } else { VertexColor::Blue }).collect()
        }
        Model::Friendly => {
            let mut v = vec![VertexColor::Red; spec.n];
            v.resize(2 * spec.n, VertexColor::Blue);
            v
        }
    };
    let mut ty = TypeGraph::uniform(vertices, EdgeColor::Red);
    let pairs: Vec<(usize, usize)> = ty.pairs().collect();
    for (u, v) in pairs {
        let color = match spec.model {
            Model::General => THREE[rng.below_usize(3)],
            Model::Friendly if ty.vertex_color(u) != ty.vertex_color(v) => THREE[rng.below_usize(3)],
            Model::Friendly => TWO[rng.below_usize(2)],
        };
        ty.set_edge(u, v, color);
    }
    ty
}

/// Overwrites the edges among `position` with those of `pattern`.
///
/// `position[p]` receives pattern vertex `p`; vertex colours must already match.
pub fn plant_subtype(tau: &TypeGraph, pattern: &TypeGraph, position: &[usize]) -> Result<TypeGraph, RandomError> {
    if position.len() != pattern.order() {
        return Err(ModelError::MapSize { got: position.len(), expected: pattern.order() }.into());
    }
    let mut seen = vec![false; tau.order()];
    for (p, &h) in position.iter().enumerate() {
        if h >= tau.order() {
            return Err(ModelError::VertexOutOfRange { vertex: h, len: tau.order() }.into());
        }
        if std::mem::replace(&mut seen[h], true) {
            return Err(ModelError::NotInjective(h).into());
        }
        if tau.vertex_color(h) != pattern.vertex_color(p) {
            return Err(ModelError::VertexColourMismatch(p).into());
        }
    }
    let mut out = tau.clone();
    for (p, q) in pattern.pairs() {
        out.set_edge(position[p], position[q], pattern.edge_color(p, q));
    }
    Ok(out)
}

/// Plants `pattern` on the first vertices of each colour it needs, in index
/// order, and returns the planted type with the copy.
pub fn plant_at_first(tau: &TypeGraph, pattern: &TypeGraph) -> Result<(TypeGraph, SubtypeCopy), RandomError> {
    let mut red = tau.red_vertices().into_iter();
    let mut blue = tau.blue_vertices().into_iter();
    let position = (0..pattern.order())
        .map(|p| match pattern.vertex_color(p) {
            VertexColor::Red => red.next(),
            VertexColor::Blue => blue.next(),
        })
        .collect::<Option<Vec<usize>>>()
        .ok_or(RandomError::NotEnoughVertices)?;
    let planted = plant_subtype(tau, pattern, &position)?;
    let copy = SubtypeCopy::new(&planted, pattern.clone(), position)?;
    Ok((planted, copy))
}
