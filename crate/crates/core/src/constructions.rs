//! The special types and the graphs built from them: the path-gadget
//! obstruction family and the reduction that pads a graph with a common
//! neighbourhood.

use std::fmt::Write as _;

use itertools::Itertools;
use thiserror::Error;

use crate::error::ModelError;
use crate::format::{write_graph, write_type};
use crate::graph::SimpleGraph;
use crate::maps::{is_embedding, VertexMap};
use crate::matrix::coloring_matrix;
use crate::types::{EdgeColor, SubtypeCopy, TypeGraph, VertexColor};

/// Vertex indices of [`rho_theorem1`].
pub mod rho1 {
    pub const R1: usize = 0;
    pub const R2: usize = 1;
    pub const R3: usize = 2;
    pub const B1: usize = 3;
    pub const B2: usize = 4;
    pub const B3: usize = 5;
}

/// The six-vertex friendly type behind the infinite obstruction family.
///
/// Blue edges `r1r3, r2r3, b1b2`; green edges `r1b1, r1b3, r2b2, r3b2`; every
/// other edge red.
pub fn rho_theorem1() -> TypeGraph {
    use rho1::*;
    use VertexColor::{Blue, Red};
    let blue = [(R1, R3), (R2, R3), (B1, B2)];
    let green = [(R1, B1), (R1, B3), (R2, B2), (R3, B2)];
    TypeGraph::from_fn(vec![Red, Red, Red, Blue, Blue, Blue], |u, v| {
        if blue.contains(&(u, v)) {
            EdgeColor::Blue
        } else if green.contains(&(u, v)) {
            EdgeColor::Green
        } else {
            EdgeColor::Red
        }
    })
}

/// Three red vertices joined by green edges: the type of 3-colouring.
pub fn rho_theorem3() -> TypeGraph {
    TypeGraph::from(&coloring_matrix(3).expect("k = 3 is positive"))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid copy: {0}")]
    InvalidCopy(#[from] ModelError),
    #[error("the copy's pattern is not the expected type")]
    WrongPattern,
    #[error("m must be at least 1")]
    ZeroLength,
    #[error("host vertex {0} of the copy is not in sigma")]
    NotInSigma(usize),
    #[error("index {index} outside 1..={m}")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("the given map is not an embedding into the pattern")]
    NotAnEmbedding,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    /// Copy `v'` of the host vertex `v`.
    Prime(usize),
    /// `x_i`, 1-based.
    X(usize),
    /// `y_i`, 1-based.
    Y(usize),
}

impl std::fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VertexLabel::Prime(v) => write!(f, "prime {v}"),
            VertexLabel::X(i) => write!(f, "x {i}"),
            VertexLabel::Y(i) => write!(f, "y {i}"),
        }
    }
}

/// The graph on `σ' ∪ {x_1..x_m, y_1..y_m}` with `σ = N(r1,r2) ∩ N(b1,b2)`.
/// Graph vertices are the sorted primes, then `x_1..x_m`, then `y_1..y_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionInstance {
    pub tau: TypeGraph,
    pub rho_copy: SubtypeCopy,
    pub m: usize,
    pub sigma: Vec<usize>,
    pub graph: SimpleGraph,
    pub labels: Vec<VertexLabel>,
}

impl ObstructionInstance {
    /// Graph vertex of `x_i`.
    pub fn x(&self, i: usize) -> usize {
        self.sigma.len() + i - 1
    }

    /// Graph vertex of `y_i`.
    pub fn y(&self, i: usize) -> usize {
        self.sigma.len() + self.m + i - 1
    }

    /// Graph vertex of `v'`, if `v ∈ σ`.
    pub fn prime(&self, v: usize) -> Option<usize> {
        self.sigma.binary_search(&v).ok()
    }

    /// Host vertex carrying `rho1` vertex `p`.
    pub fn host(&self, p: usize) -> usize {
        self.rho_copy.host_vertex(p)
    }

    /// Type, copy image, `m`, graph and labels, one block after another.
    pub fn to_text(&self) -> String {
        let mut out = write_type(&self.tau);
        let _ = writeln!(out, "{}", self.rho_copy.image.iter().join(" "));
        let _ = writeln!(out, "{}", self.m);
        out.push_str(&write_graph(&self.graph));
        for label in &self.labels {
            let _ = writeln!(out, "{label}");
        }
        out
    }
}

pub fn obstruction_graph(
    tau: &TypeGraph,
    rho_copy: &SubtypeCopy,
    m: usize,
) -> Result<ObstructionInstance, ConstructionError> {
    use rho1::*;
    if rho_copy.pattern != rho_theorem1() {
        return Err(ConstructionError::WrongPattern);
    }
    rho_copy.validate(tau)?;
    if m == 0 {
        return Err(ConstructionError::ZeroLength);
    }
    let h = |p| rho_copy.host_vertex(p);
    let n_rr = tau.common_neighborhood(&[h(R1), h(R2)]);
    let n_bb = tau.common_neighborhood(&[h(B1), h(B2)]);
    let sigma: Vec<usize> = n_rr.into_iter().filter(|v| n_bb.contains(v)).collect();
    for p in [R3, B3] {
        if !sigma.contains(&h(p)) {
            return Err(ConstructionError::NotInSigma(h(p)));
        }
    }

    let s = sigma.len();
    let mut labels: Vec<VertexLabel> = sigma.iter().map(|&v| VertexLabel::Prime(v)).collect();
    labels.extend((1..=m).map(VertexLabel::X));
    labels.extend((1..=m).map(VertexLabel::Y));
    let x = |i: usize| s + i - 1;
    let y = |i: usize| s + m + i - 1;
    let prime = |v: usize| sigma.binary_search(&v).expect("vertex of sigma");
    let blue = |u: usize, v: usize| tau.edge_color(u, v) == EdgeColor::Blue;

    let mut g = SimpleGraph::empty(s + 2 * m);
    for (a, b) in sigma.iter().copied().tuple_combinations() {
        if blue(a, b) {
            g.add_edge(prime(a), prime(b));
        }
    }
    for (i, j) in (1..=m).tuple_combinations() {
        g.add_edge(y(i), y(j));
    }
    for i in 1..=m {
        g.add_edge(x(i), y(i));
        if i < m {
            g.add_edge(y(i), x(i + 1));
        }
    }
    g.add_edge(x(1), prime(h(B3)));
    g.add_edge(y(m), prime(h(R3)));
    for &v in &sigma {
        if blue(h(R1), v) || blue(h(R2), v) {
            for i in 1..=m {
                g.add_edge(x(i), prime(v));
            }
        }
        if blue(h(B1), v) || blue(h(B2), v) {
            for i in 1..=m {
                g.add_edge(y(i), prime(v));
            }
        }
    }

    Ok(ObstructionInstance { tau: tau.clone(), rho_copy: rho_copy.clone(), m, sigma, graph: g, labels })
}

/// Embedding of `graph - x_i` into `tau`: primes to themselves, `x_j, y_j` to
/// `r1, b1` before `i` and to `r2, b2` after, and `y_i` to `b2`.
///
/// Returns the reduced graph (vertices above `x_i` shift down by one) and the map.
pub fn claim2_embedding(inst: &ObstructionInstance, i: usize) -> Result<(SimpleGraph, VertexMap), ConstructionError> {
    use rho1::*;
    if i == 0 || i > inst.m {
        return Err(ConstructionError::IndexOutOfRange { index: i, m: inst.m });
    }
    let image = inst
        .labels
        .iter()
        .filter(|&&l| l != VertexLabel::X(i))
        .map(|&l| match l {
            VertexLabel::Prime(v) => v,
            VertexLabel::X(j) if j < i => inst.host(R1),
            VertexLabel::X(_) => inst.host(R2),
            VertexLabel::Y(j) if j < i => inst.host(B1),
            VertexLabel::Y(_) => inst.host(B2),
        })
        .collect();
    Ok((inst.graph.remove_vertex(inst.x(i)), VertexMap::new(image)))
}

/// True when no embedding of the whole graph fixes every `v' -> v`, sends each
/// `x_i` into `{r1, r2}` and each `y_i` into `{b1, b2}`. Checks all `4^m`
/// placements.
pub fn restricted_unsat_check(inst: &ObstructionInstance) -> bool {
    use rho1::*;
    let s = inst.sigma.len();
    let mut image: Vec<usize> = inst.sigma.clone();
    image.resize(s + 2 * inst.m, 0);
    let reds = [inst.host(R1), inst.host(R2)];
    let blues = [inst.host(B1), inst.host(B2)];
    let bits = 2 * inst.m;
    assert!(bits < 64, "m too large for exhaustive placement");
    !(0u64..1 << bits).any(|mask| {
        for i in 0..inst.m {
            image[s + i] = reds[(mask >> i & 1) as usize];
            image[s + inst.m + i] = blues[(mask >> (inst.m + i) & 1) as usize];
        }
        is_embedding(&inst.graph, &inst.tau, &VertexMap::new(image.clone()))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionLabel {
    Original(usize),
    Prime(usize),
}

/// `G'`: the input graph followed by a copy `v'` of each `v ∈ N(V(ρ))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub input: SimpleGraph,
    pub tau: TypeGraph,
    pub rho_copy: SubtypeCopy,
    pub sigma: Vec<usize>,
    pub output: SimpleGraph,
    pub labels: Vec<ReductionLabel>,
}

pub fn reduction_graph(
    g: &SimpleGraph,
    tau: &TypeGraph,
    rho_copy: &SubtypeCopy,
) -> Result<ReductionInstance, ConstructionError> {
    rho_copy.validate(tau)?;
    let sigma = tau.common_neighborhood(&rho_copy.image);
    let n = g.order();
    let mut out = g.with_extra_vertices(sigma.len());
    for (k, &v) in sigma.iter().enumerate() {
        if rho_copy.image.iter().any(|&r| tau.edge_color(v, r) == EdgeColor::Blue) {
            for u in 0..n {
                out.add_edge(n + k, u);
            }
        }
    }
    for ((a, &v), (b, &w)) in sigma.iter().enumerate().tuple_combinations() {
        if tau.edge_color(v, w) == EdgeColor::Blue {
            out.add_edge(n + a, n + b);
        }
    }
    let mut labels: Vec<ReductionLabel> = (0..n).map(ReductionLabel::Original).collect();
    labels.extend(sigma.iter().map(|&v| ReductionLabel::Prime(v)));
    Ok(ReductionInstance { input: g.clone(), tau: tau.clone(), rho_copy: rho_copy.clone(), sigma, output: out, labels })
}

/// Lifts an embedding `psi: G -> ρ` to `G' -> τ` through the copy, sending each `v'` to `v`.
pub fn extend_embedding(psi: &VertexMap, inst: &ReductionInstance) -> Result<VertexMap, ConstructionError> {
    if !is_embedding(&inst.input, &inst.rho_copy.pattern, psi) {
        return Err(ConstructionError::NotAnEmbedding);
    }
    let image = psi.image().iter().map(|&p| inst.rho_copy.host_vertex(p)).chain(inst.sigma.iter().copied()).collect();
    Ok(VertexMap::new(image))
}

#[cfg(test)]
mod tests {
    use super::rho1::*;
    use super::*;
    use crate::random::{plant_at_first, sample_type, Model, RandomSpec};
    use crate::solver::has_embedding;
    use crate::types::find_subtype_copy;

    fn rho_instance(m: usize) -> ObstructionInstance {
        let rho = rho_theorem1();
        let copy = SubtypeCopy::new(&rho, rho.clone(), (0..6).collect()).unwrap();
        obstruction_graph(&rho, &copy, m).unwrap()
    }

    #[test]
    fn rho_theorem1_shape() {
        let rho = rho_theorem1();
        assert_eq!(rho.red_vertices(), vec![R1, R2, R3]);
        assert_eq!(rho.blue_vertices(), vec![B1, B2, B3]);
        assert!(rho.is_friendly());
        assert_eq!(rho.count_edges(EdgeColor::Green), 4);
        assert_eq!(rho.count_edges(EdgeColor::Blue), 3);
        assert_eq!(rho.edge_color(R3, R1), EdgeColor::Blue);
        assert_eq!(rho.edge_color(B2, R3), EdgeColor::Green);
    }

    #[test]
    fn rho_theorem3_is_three_colouring() {
        let rho = rho_theorem3();
        assert_eq!(rho, TypeGraph::from(&coloring_matrix(3).unwrap()));
        assert!(has_embedding(&SimpleGraph::complete(3), &rho));
        assert!(!has_embedding(&SimpleGraph::complete(4), &rho));
    }

    #[test]
    fn obstruction_on_rho_itself() {
        let inst = rho_instance(1);
        assert_eq!(inst.sigma, vec![R3, B3]);
        assert_eq!(inst.graph.order(), 4);
        let (r3, b3, x1, y1) = (inst.prime(R3).unwrap(), inst.prime(B3).unwrap(), inst.x(1), inst.y(1));
        let mut expected = vec![(x1, y1), (x1, b3), (y1, r3), (x1, r3)];
        for e in &mut expected {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        expected.sort_unstable();
        assert_eq!(inst.graph.edges().collect::<Vec<_>>(), expected);
        assert_eq!(
            inst.labels,
            vec![VertexLabel::Prime(R3), VertexLabel::Prime(B3), VertexLabel::X(1), VertexLabel::Y(1)]
        );
    }

    #[test]
    fn claim2_on_rho_itself() {
        let inst = rho_instance(1);
        let (g, psi) = claim2_embedding(&inst, 1).unwrap();
        assert_eq!(psi.image(), &[R3, B3, B2]);
        assert!(is_embedding(&g, &inst.tau, &psi));
        assert!(claim2_embedding(&inst, 2).is_err());
        assert!(claim2_embedding(&inst, 0).is_err());
    }

    #[test]
    fn restricted_check_and_negative_control() {
        for m in 1..=4 {
            let inst = rho_instance(m);
            assert!(restricted_unsat_check(&inst), "m = {m}");
            let mut mutated = inst.clone();
            mutated.graph.remove_edge(inst.y(m), inst.prime(R3).unwrap());
            assert!(!restricted_unsat_check(&mutated), "m = {m}");
        }
    }

    #[test]
    fn planted_instances() {
        for seed in 0..10 {
            let tau = sample_type(&RandomSpec::new(15, Model::Friendly, seed).unwrap());
            let (tau, copy) = plant_at_first(&tau, &rho_theorem1()).unwrap();
            let Ok(inst) = obstruction_graph(&tau, &copy, 3) else {
                continue;
            };
            assert_eq!(inst.graph.order(), inst.sigma.len() + 6);
            assert!(restricted_unsat_check(&inst));
            for i in 1..=3 {
                let (g, psi) = claim2_embedding(&inst, i).unwrap();
                assert!(is_embedding(&g, &tau, &psi));
                assert_eq!(psi.get(g.order() - 3 + i - 1), copy.host_vertex(B2));
            }
        }
    }

    #[test]
    fn obstruction_rejects_bad_input() {
        let rho = rho_theorem1();
        let copy = SubtypeCopy::new(&rho, rho.clone(), (0..6).collect()).unwrap();
        assert_eq!(obstruction_graph(&rho, &copy, 0), Err(ConstructionError::ZeroLength));
        let three = rho_theorem3();
        let other = SubtypeCopy::new(&three, three.clone(), vec![0, 1, 2]).unwrap();
        assert_eq!(obstruction_graph(&three, &other, 1), Err(ConstructionError::WrongPattern));
        let mut broken = rho.clone();
        broken.set_edge(R1, R3, EdgeColor::Red);
        assert!(matches!(obstruction_graph(&broken, &copy, 1), Err(ConstructionError::InvalidCopy(_))));
    }

    #[test]
    fn instance_text() {
        let text = rho_instance(1).to_text();
        assert!(text.ends_with("0 1 2 3 4 5\n1\n4 4\n0 2\n0 3\n1 2\n2 3\nprime 2\nprime 5\nx 1\ny 1\n"), "{text}");
    }

    #[test]
    fn reduction_with_three_colouring() {
        let tau = sample_type(&RandomSpec::new(25, Model::General, 11).unwrap());
        let Ok((tau, copy)) = plant_at_first(&tau, &rho_theorem3()) else {
            panic!("seed has three red vertices");
        };
        assert!(find_subtype_copy(&tau, &rho_theorem3()).is_some());
        let g = SimpleGraph::cycle(5);
        let inst = reduction_graph(&g, &tau, &copy).unwrap();
        assert_eq!(inst.output.order(), 5 + inst.sigma.len());
        assert_eq!(inst.output.induced(&[0, 1, 2, 3, 4]), g);
        let psi = VertexMap::new(vec![0, 1, 0, 1, 2]);
        let ext = extend_embedding(&psi, &inst).unwrap();
        assert!(is_embedding(&inst.output, &tau, &ext));
        assert_eq!(&ext.image()[5..], &inst.sigma[..]);
        assert!(extend_embedding(&VertexMap::new(vec![0, 0, 0, 0, 0]), &inst).is_err());
    }

    #[test]
    fn reduction_without_blue_edges() {
        let tau = TypeGraph::uniform(vec![VertexColor::Red; 6], EdgeColor::Green);
        let rho = rho_theorem3();
        let copy = SubtypeCopy::new(&tau, rho, vec![0, 1, 2]).unwrap();
        let inst = reduction_graph(&SimpleGraph::empty(4), &tau, &copy).unwrap();
        assert_eq!(inst.sigma, vec![3, 4, 5]);
        assert_eq!(inst.output.size(), 0);
        assert_eq!(inst.labels[4], ReductionLabel::Prime(3));
    }
}
