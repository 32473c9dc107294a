use thiserror::Error;

/// Violations of the structural invariants of matrices, types, graphs and maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("row {row} has {len} entries, expected {expected}")]
    RaggedRow { row: usize, len: usize, expected: usize },
    #[error("not symmetric ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("star on diagonal {0}")]
    StarOnDiagonal(usize),
    #[error("a colouring matrix needs at least one colour")]
    NoColours,
    #[error("vertex {vertex} out of range for {len} vertices")]
    VertexOutOfRange { vertex: usize, len: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("map has {got} entries, domain has {expected} vertices")]
    MapSize { got: usize, expected: usize },
    #[error("host vertex {0} used twice")]
    NotInjective(usize),
    #[error("vertex colour mismatch at pattern vertex {0}")]
    VertexColourMismatch(usize),
    #[error("edge colour mismatch on pattern pair ({0},{1})")]
    EdgeColourMismatch(usize, usize),
}
