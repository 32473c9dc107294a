//! Symmetric `{0, 1, *}` partition matrices.

use std::fmt;

use crate::error::ModelError;
use crate::graph::SimpleGraph;

/// One cell of a partition matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    /// No edges between (or inside) the two classes.
    Zero,
    /// All edges between (or inside) the two classes.
    One,
    /// Unconstrained.
    Star,
}

impl Entry {
    pub fn symbol(self) -> char {
        match self {
            Entry::Zero => '0',
            Entry::One => '1',
            Entry::Star => '*',
        }
    }

    pub fn from_symbol(c: char) -> Option<Entry> {
        match c {
            '0' => Some(Entry::Zero),
            '1' => Some(Entry::One),
            '*' => Some(Entry::Star),
            _ => None,
        }
    }
}

/// A symmetric `m x m` matrix over `{0, 1, *}` with no `*` on the diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartitionMatrix {
    dim: usize,
    entries: Vec<Entry>,
}

impl PartitionMatrix {
    pub fn new(rows: Vec<Vec<Entry>>) -> Result<Self, ModelError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (row, cells) in rows.into_iter().enumerate() {
            if cells.len() != dim {
                return Err(ModelError::RaggedRow { row, len: cells.len(), expected: dim });
            }
            entries.extend(cells);
        }
        Self::from_entries(dim, entries)
    }

    /// Builds a matrix from a cell function evaluated on every `(i, j)`.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Entry) -> Result<Self, ModelError> {
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self::from_entries(dim, entries)
    }

    fn from_entries(dim: usize, entries: Vec<Entry>) -> Result<Self, ModelError> {
        let matrix = PartitionMatrix { dim, entries };
        for i in 0..dim {
            if matrix.get(i, i) == Entry::Star {
                return Err(ModelError::StarOnDiagonal(i));
            }
            for j in i + 1..dim {
                if matrix.get(i, j) != matrix.get(j, i) {
                    return Err(ModelError::NotSymmetric(i, j));
                }
            }
        }
        Ok(matrix)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Entry {
        self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[Entry] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    /// `false` iff some principal 2x2 submatrix is `[[0,*],[*,0]]` or `[[1,*],[*,1]]`.
    pub fn is_friendly(&self) -> bool {
        (0..self.dim)
            .all(|i| (i + 1..self.dim).all(|j| !(self.get(i, j) == Entry::Star && self.get(i, i) == self.get(j, j))))
    }

    /// Row-equality tests on the zero-diagonal block `A` and the one-diagonal
    /// block `B`. Rows are compared in full (length `m`).
    pub fn block_row_distinctness(&self) -> BlockRowReport {
        let block = |diag: Entry| -> Vec<&[Entry]> {
            (0..self.dim).filter(|&i| self.get(i, i) == diag).map(|i| self.row(i)).collect()
        };
        let a = block(Entry::Zero);
        let b = block(Entry::One);
        BlockRowReport {
            a_rows_distinct: max_multiplicity(&a) < 2,
            b_rows_distinct: max_multiplicity(&b) < 2,
            no_three_rows_equal_a: max_multiplicity(&a) < 3,
            no_three_rows_equal_b: max_multiplicity(&b) < 3,
        }
    }
}

fn max_multiplicity(rows: &[&[Entry]]) -> usize {
    let mut sorted = rows.to_vec();
    sorted.sort_unstable();
    sorted.chunk_by(|x, y| x == y).map(<[_]>::len).max().unwrap_or(0)
}

impl fmt::Debug for PartitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.dim).map(|i| self.row(i).iter().map(|e| e.symbol()).collect()).collect();
        f.debug_tuple("PartitionMatrix").field(&rows).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockRowReport {
    pub a_rows_distinct: bool,
    pub b_rows_distinct: bool,
    pub no_three_rows_equal_a: bool,
    pub no_three_rows_equal_b: bool,
}

/// `k x k` matrix with zero diagonal and `*` elsewhere: the `k`-colouring problem.
pub fn coloring_matrix(k: usize) -> Result<PartitionMatrix, ModelError> {
    if k == 0 {
        return Err(ModelError::NoColours);
    }
    PartitionMatrix::from_fn(k, |i, j| if i == j { Entry::Zero } else { Entry::Star })
}

/// Matrix whose partitions are exactly the homomorphisms into `h`.
pub fn homomorphism_matrix(h: &SimpleGraph) -> PartitionMatrix {
    PartitionMatrix::from_fn(h.order(), |i, j| if i != j && h.has_edge(i, j) { Entry::Star } else { Entry::Zero })
        .expect("homomorphism matrix is symmetric with zero diagonal")
}
