//! Backtracking search for embeddings of a graph into a type.

use std::num::NonZeroU64;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::maps::{is_embedding, VertexMap};
use crate::types::TypeGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VariableOrder {
    /// Graph vertices in index order.
    #[default]
    Static,
    /// Smallest remaining candidate set first (ties by index).
    MostConstrained,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub forward_checking: bool,
    pub variable_order: VariableOrder,
    /// Maximum number of candidate placements tried before giving up.
    pub node_limit: Option<NonZeroU64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { forward_checking: true, variable_order: VariableOrder::MostConstrained, node_limit: None }
    }
}

impl SolverConfig {
    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = NonZeroU64::new(limit);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(VertexMap),
    NoEmbedding,
    /// The node limit was hit before the search finished; says nothing about existence.
    LimitExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolverStats {
    pub nodes: u64,
    pub max_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub outcome: SearchOutcome,
    pub stats: SolverStats,
}

impl SolveReport {
    /// `Some(true)` / `Some(false)` when decided, `None` when the limit was hit.
    pub fn decided(&self) -> Option<bool> {
        match self.outcome {
            SearchOutcome::Found(_) => Some(true),
            SearchOutcome::NoEmbedding => Some(false),
            SearchOutcome::LimitExceeded => None,
        }
    }

    pub fn embedding(&self) -> Option<&VertexMap> {
        match &self.outcome {
            SearchOutcome::Found(psi) => Some(psi),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("search space {0} exceeds the brute-force guard of 10^8 maps")]
    TooLarge(u128),
    #[error("enumeration supports at most {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
}

/// For each type vertex `t`, the type vertices `c` a neighbour (resp.
/// non-neighbour) of a vertex placed on `t` may still go to.
struct Compatibility {
    on_edge: Vec<FixedBitSet>,
    on_non_edge: Vec<FixedBitSet>,
}

impl Compatibility {
    fn new(ty: &TypeGraph) -> Self {
        let n = ty.order();
        let table = |ok: &dyn Fn(usize, usize) -> bool| -> Vec<FixedBitSet> {
            (0..n)
                .map(|t| {
                    let mut set = FixedBitSet::with_capacity(n);
                    set.extend((0..n).filter(|&c| ok(t, c)));
                    set
                })
                .collect()
        };
        Compatibility {
            on_edge: table(&|t, c| ty.admits_edge(t, c)),
            on_non_edge: table(&|t, c| ty.admits_non_edge(t, c)),
        }
    }

    fn allowed(&self, adjacent: bool, t: usize) -> &FixedBitSet {
        if adjacent {
            &self.on_edge[t]
        } else {
            &self.on_non_edge[t]
        }
    }
}

struct LimitHit;

struct Search<'a> {
    g: &'a SimpleGraph,
    compat: Compatibility,
    cfg: SolverConfig,
    assignment: Vec<Option<usize>>,
    stats: SolverStats,
}

impl Search<'_> {
    fn pick_variable(&self, domains: &[FixedBitSet]) -> Option<usize> {
        let free = (0..self.g.order()).filter(|&v| self.assignment[v].is_none());
        match self.cfg.variable_order {
            VariableOrder::Static => free.min(),
            VariableOrder::MostConstrained => free.min_by_key(|&v| (domains[v].count_ones(..), v)),
        }
    }

    fn consistent(&self, var: usize, t: usize) -> bool {
        (0..self.g.order()).all(|w| match self.assignment[w] {
            Some(s) if w != var => self.compat.allowed(self.g.has_edge(var, w), s).contains(t),
            _ => true,
        })
    }

    fn run(&mut self, depth: usize, domains: &[FixedBitSet]) -> Result<bool, LimitHit> {
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let Some(var) = self.pick_variable(domains) else {
            return Ok(true);
        };
        for t in domains[var].ones() {
            self.stats.nodes += 1;
            if let Some(limit) = self.cfg.node_limit {
                if self.stats.nodes > limit.get() {
                    return Err(LimitHit);
                }
            }
            if !self.cfg.forward_checking && !self.consistent(var, t) {
                continue;
            }
            let mut next = domains.to_vec();
            let mut wiped_out = false;
            if self.cfg.forward_checking {
                for (w, dom) in next.iter_mut().enumerate() {
                    if w == var || self.assignment[w].is_some() {
                        continue;
                    }
                    dom.intersect_with(self.compat.allowed(self.g.has_edge(var, w), t));
                    if dom.is_clear() {
                        wiped_out = true;
                        break;
                    }
                }
            }
            if wiped_out {
                continue;
            }
            self.assignment[var] = Some(t);
            if self.run(depth + 1, &next)? {
                return Ok(true);
            }
            self.assignment[var] = None;
        }
        Ok(false)
    }
}

/// Complete search for an embedding of `g` into `ty`.
///
/// Each graph vertex keeps a candidate set of type vertices. With forward
/// checking, placing `v` on `t` prunes every free neighbour to type vertices
/// reachable from `t` by a blue/green edge (or `t` itself when blue), and
/// every free non-neighbour to those reachable by a red/green edge (or `t`
/// itself when red).
pub fn find_embedding(g: &SimpleGraph, ty: &TypeGraph, cfg: &SolverConfig) -> SolveReport {
    let mut full = FixedBitSet::with_capacity(ty.order());
    full.insert_range(..);
    let domains = vec![full; g.order()];
    let mut search = Search {
        g,
        compat: Compatibility::new(ty),
        cfg: *cfg,
        assignment: vec![None; g.order()],
        stats: SolverStats::default(),
    };
    let outcome = match search.run(0, &domains) {
        Ok(true) => {
            let psi = VertexMap::new(search.assignment.iter().map(|a| a.expect("complete assignment")).collect());
            debug_assert!(is_embedding(g, ty, &psi));
            SearchOutcome::Found(psi)
        }
        Ok(false) => SearchOutcome::NoEmbedding,
        Err(LimitHit) => SearchOutcome::LimitExceeded,
    };
    SolveReport { outcome, stats: search.stats }
}

/// Unlimited search with the default configuration.
pub fn has_embedding(g: &SimpleGraph, ty: &TypeGraph) -> bool {
    find_embedding(g, ty, &SolverConfig::default()).decided().expect("no node limit set")
}

pub const BRUTE_FORCE_LIMIT: u128 = 100_000_000;

/// Tries every map `V(g) -> V(ty)` in odometer order.
pub fn brute_force_has_embedding(g: &SimpleGraph, ty: &TypeGraph) -> Result<bool, SolverError> {
    let (n, k) = (g.order(), ty.order());
    let space = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if space > BRUTE_FORCE_LIMIT {
        return Err(SolverError::TooLarge(space));
    }
    if n == 0 {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    let mut image = vec![0usize; n];
    loop {
        let psi = VertexMap::new(image.clone());
        if is_embedding(g, ty, &psi) {
            return Ok(true);
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(false);
            }
            image[pos] += 1;
            if image[pos] < k {
                break;
            }
            image[pos] = 0;
            pos += 1;
        }
    }
}

/// `g` has no embedding but every `g - v` does.
pub fn is_minimal_obstruction(g: &SimpleGraph, ty: &TypeGraph) -> bool {
    !has_embedding(g, ty) && (0..g.order()).all(|v| has_embedding(&g.remove_vertex(v), ty))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::coloring_matrix;
    use crate::types::{type_from_matrix, EdgeColor, VertexColor};

    fn colouring(k: usize) -> TypeGraph {
        type_from_matrix(&coloring_matrix(k).unwrap())
    }

    fn all_configs() -> Vec<SolverConfig> {
        let mut out = vec![];
        for fc in [false, true] {
            for order in [VariableOrder::Static, VariableOrder::MostConstrained] {
                out.push(SolverConfig { forward_checking: fc, variable_order: order, node_limit: None });
            }
        }
        out
    }

    #[test]
    fn cycles_and_cliques_against_colourings() {
        for cfg in all_configs() {
            let report = find_embedding(&SimpleGraph::cycle(5), &colouring(3), &cfg);
            assert!(is_embedding(&SimpleGraph::cycle(5), &colouring(3), report.embedding().unwrap()));
            assert_eq!(
                find_embedding(&SimpleGraph::complete(4), &colouring(3), &cfg).outcome,
                SearchOutcome::NoEmbedding
            );
            assert_eq!(find_embedding(&SimpleGraph::cycle(5), &colouring(2), &cfg).decided(), Some(false));
        }
    }

    #[test]
    fn clique_into_blue_vertex() {
        let blue = TypeGraph::uniform(vec![VertexColor::Blue], EdgeColor::Red);
        let report = find_embedding(&SimpleGraph::complete(3), &blue, &SolverConfig::default());
        assert_eq!(report.embedding(), Some(&VertexMap::constant(3, 0)));
    }

    #[test]
    fn brute_force_edges() {
        let empty_type = TypeGraph::uniform(vec![], EdgeColor::Red);
        assert_eq!(brute_force_has_embedding(&SimpleGraph::empty(0), &colouring(2)), Ok(true));
        assert_eq!(brute_force_has_embedding(&SimpleGraph::empty(0), &empty_type), Ok(true));
        assert_eq!(brute_force_has_embedding(&SimpleGraph::empty(1), &empty_type), Ok(false));
        assert_eq!(brute_force_has_embedding(&SimpleGraph::cycle(5), &colouring(2)), Ok(false));
        assert!(matches!(
            brute_force_has_embedding(&SimpleGraph::empty(30), &colouring(3)),
            Err(SolverError::TooLarge(_))
        ));
    }

    #[test]
    fn node_limit_is_inconclusive_not_negative() {
        let cfg = SolverConfig { forward_checking: false, variable_order: VariableOrder::Static, node_limit: None }
            .with_node_limit(5);
        let report = find_embedding(&SimpleGraph::complete(6), &colouring(5), &cfg);
        assert_eq!(report.outcome, SearchOutcome::LimitExceeded);
        assert_eq!(report.decided(), None);
    }

    #[test]
    fn minimal_obstruction_examples() {
        assert!(is_minimal_obstruction(&SimpleGraph::cycle(5), &colouring(2)));
        assert!(!is_minimal_obstruction(&SimpleGraph::cycle(6), &colouring(2)));
        assert!(is_minimal_obstruction(&SimpleGraph::complete(4), &colouring(3)));
        // C7 with a chord contains a shorter odd cycle, so it is not minimal.
        let mut chorded = SimpleGraph::cycle(7);
        chorded.add_edge(0, 2);
        assert!(!has_embedding(&chorded, &colouring(2)));
        assert!(!is_minimal_obstruction(&chorded, &colouring(2)));
    }
}
