//! Exact decision procedures: embedding search, minimality, obstruction
//! enumeration and the edge-homomorphism fixed-point scan.

pub mod canon;
mod enumerate;
mod fixed_points;
mod search;

pub use canon::{canonical_form, canonical_graph, CanonicalForm, MAX_CANON_ORDER};
pub use enumerate::{enumerate_minimal_obstructions, obstruction_forms};
pub use fixed_points::{
    enumerate_edge_homomorphisms, min_fixed_points, EdgeHomomorphisms, FixedPointReport, MAX_FIXED_POINT_ORDER,
};
pub use search::{
    brute_force_has_embedding, find_embedding, has_embedding, is_minimal_obstruction, SearchOutcome, SolveReport,
    SolverConfig, SolverError, SolverStats, VariableOrder, BRUTE_FORCE_LIMIT,
};
