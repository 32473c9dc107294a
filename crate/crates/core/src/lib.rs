//! Matrix partitions of graphs and their types.
//!
//! A symmetric matrix over `{0, 1, *}` describes a partition problem; its
//! type is the complete graph with red/blue vertices and red/blue/green edges
//! read off the entries. This crate decides embeddings of graphs into types,
//! enumerates small minimal obstructions, samples random types and checks the
//! common-neighbourhood bounds on them, and builds the path-gadget
//! obstruction family and the padding reduction.

pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod maps;
pub mod matrix;
pub mod random;
pub mod scalar;
pub mod solver;
pub mod types;

pub use constructions::{
    claim2_embedding, extend_embedding, obstruction_graph, reduction_graph, restricted_unsat_check, rho_theorem1,
    rho_theorem3, ConstructionError, ObstructionInstance, ReductionInstance, ReductionLabel, VertexLabel,
};
pub use error::ModelError;
pub use format::{parse_graph, parse_matrix, parse_type, write_graph, write_matrix, write_type, ParseError};
pub use graph::{is_split_graph, SimpleGraph};
pub use maps::{is_edge_homomorphism, is_embedding, is_type_homomorphism, VertexMap};
pub use matrix::{coloring_matrix, homomorphism_matrix, BlockRowReport, Entry, PartitionMatrix};
pub use random::{
    check_neighborhood_lemma, exact_membership_probability, monte_carlo, sample_type, Experiment, LemmaId, LemmaReport,
    McSummary, Model, ProbabilityResult, RandomSpec,
};
pub use scalar::Scalar;
pub use solver::{
    enumerate_minimal_obstructions, find_embedding, has_embedding, is_minimal_obstruction, min_fixed_points,
    SolverConfig,
};
pub use types::{
    find_subtype_copy, matrix_from_type, type_from_matrix, EdgeColor, SubtypeCopy, TypeGraph, VertexColor,
};

/// Exact rational used for thresholds and probabilities.
pub type Rational = num_rational::Ratio<i64>;

/// Membership probability as an exact fraction.
pub type ExactProbability = ProbabilityResult<Rational>;

/// Membership probability as a float.
pub type FloatProbability = ProbabilityResult<f64>;

/// Monte Carlo summary with `f64` statistics.
pub type McSummary64 = McSummary<f64>;
