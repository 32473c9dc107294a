//! Plain-text file formats.
//!
//! Matrix (also used for types):
//!
//! ```text
//! 3
//! 0**
//! *0*
//! **0
//! ```
//!
//! Graph: a header line `n e` followed by `e` lines `u v`.
//!
//! Blank lines after the payload are ignored; anything else is an error.

use std::fmt;

use thiserror::Error;

use crate::error::ModelError;
use crate::graph::SimpleGraph;
use crate::matrix::{Entry, PartitionMatrix};
use crate::types::TypeGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    BadHeader(String),
    BadSymbol(char),
    RowLength { expected: usize, got: usize },
    MissingLines { expected: usize, got: usize },
    TrailingContent,
    NotSymmetric(usize, usize),
    StarOnDiagonal(usize),
    BadEdgeLine(String),
    Loop(usize),
    DuplicateEdge(usize, usize),
    VertexOutOfRange(usize),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::BadHeader(h) => write!(f, "bad header {h:?}"),
            ParseErrorKind::BadSymbol(c) => write!(f, "bad symbol {c:?}, expected one of 0 1 *"),
            ParseErrorKind::RowLength { expected, got } => {
                write!(f, "row has {got} symbols, expected {expected}")
            }
            ParseErrorKind::MissingLines { expected, got } => {
                write!(f, "expected {expected} lines after the header, found {got}")
            }
            ParseErrorKind::TrailingContent => write!(f, "unexpected content after the last line"),
            ParseErrorKind::NotSymmetric(i, j) => write!(f, "not symmetric ({i},{j})"),
            ParseErrorKind::StarOnDiagonal(i) => write!(f, "star on diagonal {i}"),
            ParseErrorKind::BadEdgeLine(l) => write!(f, "bad edge line {l:?}, expected \"u v\""),
            ParseErrorKind::Loop(v) => write!(f, "loop at vertex {v}"),
            ParseErrorKind::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            ParseErrorKind::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
        }
    }
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

/// Lines with trailing whitespace (and `\r`) removed, numbered from 1.
fn numbered_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end())).collect()
}

fn check_trailing(lines: &[(usize, &str)]) -> Result<(), ParseError> {
    match lines.iter().find(|(_, l)| !l.is_empty()) {
        Some(&(line, _)) => Err(err(line, 1, ParseErrorKind::TrailingContent)),
        None => Ok(()),
    }
}

pub fn parse_matrix(text: &str) -> Result<PartitionMatrix, ParseError> {
    let lines = numbered_lines(text);
    let Some(&(_, header)) = lines.first() else {
        return Err(err(1, 1, ParseErrorKind::BadHeader(String::new())));
    };
    let dim: usize = header.trim().parse().map_err(|_| err(1, 1, ParseErrorKind::BadHeader(header.to_string())))?;
    let body = &lines[1..];
    if body.len() < dim {
        return Err(err(lines.len() + 1, 1, ParseErrorKind::MissingLines { expected: dim, got: body.len() }));
    }
    let mut rows = Vec::with_capacity(dim);
    for &(line, text) in &body[..dim] {
        let row = text
            .chars()
            .enumerate()
            .map(|(col, c)| Entry::from_symbol(c).ok_or_else(|| err(line, col + 1, ParseErrorKind::BadSymbol(c))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != dim {
            return Err(err(line, row.len().min(dim) + 1, ParseErrorKind::RowLength { expected: dim, got: row.len() }));
        }
        rows.push(row);
    }
    check_trailing(&body[dim..])?;
    PartitionMatrix::new(rows).map_err(|e| match e {
        ModelError::NotSymmetric(i, j) => err(j + 2, i + 1, ParseErrorKind::NotSymmetric(i, j)),
        ModelError::StarOnDiagonal(i) => err(i + 2, i + 1, ParseErrorKind::StarOnDiagonal(i)),
        other => unreachable!("rows are square by construction: {other}"),
    })
}

pub fn parse_type(text: &str) -> Result<TypeGraph, ParseError> {
    parse_matrix(text).map(|m| TypeGraph::from(&m))
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph, ParseError> {
    let lines = numbered_lines(text);
    let Some(&(_, header)) = lines.first() else {
        return Err(err(1, 1, ParseErrorKind::BadHeader(String::new())));
    };
    let bad_header = || err(1, 1, ParseErrorKind::BadHeader(header.to_string()));
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, e] = fields[..] else { return Err(bad_header()) };
    let order: usize = n.parse().map_err(|_| bad_header())?;
    let size: usize = e.parse().map_err(|_| bad_header())?;

    let body = &lines[1..];
    if body.len() < size {
        return Err(err(lines.len() + 1, 1, ParseErrorKind::MissingLines { expected: size, got: body.len() }));
    }
    let mut g = SimpleGraph::empty(order);
    for &(line, text) in &body[..size] {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let bad_line = || err(line, 1, ParseErrorKind::BadEdgeLine(text.to_string()));
        let [a, b] = fields[..] else { return Err(bad_line()) };
        let u: usize = a.parse().map_err(|_| bad_line())?;
        let v: usize = b.parse().map_err(|_| bad_line())?;
        if u >= order {
            return Err(err(line, 1, ParseErrorKind::VertexOutOfRange(u)));
        }
        if v >= order {
            return Err(err(line, a.len() + 2, ParseErrorKind::VertexOutOfRange(v)));
        }
        if u == v {
            return Err(err(line, 1, ParseErrorKind::Loop(u)));
        }
        if g.has_edge(u, v) {
            return Err(err(line, 1, ParseErrorKind::DuplicateEdge(u.min(v), u.max(v))));
        }
        g.add_edge(u, v);
    }
    check_trailing(&body[size..])?;
    Ok(g)
}

pub fn write_matrix(m: &PartitionMatrix) -> String {
    let mut out = format!("{}\n", m.dim());
    for i in 0..m.dim() {
        out.extend(m.row(i).iter().map(|e| e.symbol()));
        out.push('\n');
    }
    out
}

pub fn write_type(ty: &TypeGraph) -> String {
    write_matrix(&PartitionMatrix::from(ty))
}

/// Edges are written `u v` with `u < v`, in lexicographic order.
pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::coloring_matrix;

    #[test]
    fn matrix_examples() {
        assert_eq!(parse_matrix("2\n0*\n*0\n").unwrap(), coloring_matrix(2).unwrap());
        let e = parse_matrix("1\n*\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::StarOnDiagonal(0));
        assert!(e.to_string().contains("star on diagonal 0"));
        let e = parse_matrix("2\n01\n*0\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NotSymmetric(0, 1));
        assert!(e.to_string().contains("not symmetric (0,1)"));
        assert_eq!((e.line, e.column), (3, 1));
    }

    #[test]
    fn matrix_errors_carry_positions() {
        let e = parse_matrix("2\n0x\n*0\n").unwrap_err();
        assert_eq!((e.line, e.column, e.kind), (2, 2, ParseErrorKind::BadSymbol('x')));
        let e = parse_matrix("2\n0\n*0\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::RowLength { expected: 2, got: 1 }));
        assert!(matches!(parse_matrix("two\n").unwrap_err().kind, ParseErrorKind::BadHeader(_)));
        assert!(matches!(parse_matrix("3\n000\n").unwrap_err().kind, ParseErrorKind::MissingLines { .. }));
        assert_eq!(parse_matrix("1\n0\n1\n").unwrap_err().kind, ParseErrorKind::TrailingContent);
        assert!(matches!(parse_matrix("").unwrap_err().kind, ParseErrorKind::BadHeader(_)));
    }

    #[test]
    fn matrix_tolerates_crlf_and_blank_tail() {
        assert_eq!(parse_matrix("2\r\n0*\r\n*0\r\n\n\n").unwrap(), coloring_matrix(2).unwrap());
    }

    #[test]
    fn graph_examples() {
        assert_eq!(parse_graph("3 3\n0 1\n1 2\n0 2\n").unwrap(), SimpleGraph::complete(3));
        assert_eq!(parse_graph("2 1\n0 0\n").unwrap_err().kind, ParseErrorKind::Loop(0));
        assert_eq!(parse_graph("2 2\n0 1\n1 0\n").unwrap_err().kind, ParseErrorKind::DuplicateEdge(0, 1));
        let e = parse_graph("2 1\n0 5\n").unwrap_err();
        assert_eq!((e.line, e.column, e.kind), (2, 3, ParseErrorKind::VertexOutOfRange(5)));
        assert!(matches!(parse_graph("2 1\n0\n").unwrap_err().kind, ParseErrorKind::BadEdgeLine(_)));
        assert!(matches!(parse_graph("2\n").unwrap_err().kind, ParseErrorKind::BadHeader(_)));
    }

    #[test]
    fn graph_output_is_normalized() {
        let g = parse_graph("3 2\n2 1\n1 0\n").unwrap();
        assert_eq!(write_graph(&g), "3 2\n0 1\n1 2\n");
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }
}
