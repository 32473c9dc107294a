//! Types: complete graphs with red/blue vertices and red/blue/green edges.
//!
//! A type is the graphical form of a partition matrix. Vertex `i` is red when
//! the diagonal entry is `0` and blue when it is `1`; the edge `ij` is red,
//! blue or green when the entry is `0`, `1` or `*`.

use fixedbitset::FixedBitSet;

use crate::error::ModelError;
use crate::matrix::{Entry, PartitionMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexColor {
    Red,
    Blue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeColor {
    Red,
    Blue,
    Green,
}

impl EdgeColor {
    pub const ALL: [EdgeColor; 3] = [EdgeColor::Red, EdgeColor::Blue, EdgeColor::Green];

    /// Whether a graph edge may be placed across an edge of this colour.
    pub fn admits_edge(self) -> bool {
        self != EdgeColor::Red
    }

    /// Whether a graph non-edge may be placed across an edge of this colour.
    pub fn admits_non_edge(self) -> bool {
        self != EdgeColor::Blue
    }
}

impl From<VertexColor> for EdgeColor {
    fn from(c: VertexColor) -> Self {
        match c {
            VertexColor::Red => EdgeColor::Red,
            VertexColor::Blue => EdgeColor::Blue,
        }
    }
}

/// A type on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TypeGraph {
    vertices: Vec<VertexColor>,
    // Full order x order table; the diagonal is unused and kept Red.
    edges: Vec<EdgeColor>,
}

impl TypeGraph {
    /// Every vertex coloured by `vertex`, every edge by `edge(u, v)` for `u < v`.
    pub fn from_fn(vertices: Vec<VertexColor>, edge: impl Fn(usize, usize) -> EdgeColor) -> Self {
        let n = vertices.len();
        let mut ty = TypeGraph { vertices, edges: vec![EdgeColor::Red; n * n] };
        for u in 0..n {
            for v in u + 1..n {
                ty.set_edge(u, v, edge(u, v));
            }
        }
        ty
    }

    /// Type with all edges coloured `edge`.
    pub fn uniform(vertices: Vec<VertexColor>, edge: EdgeColor) -> Self {
        Self::from_fn(vertices, |_, _| edge)
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_color(&self, v: usize) -> VertexColor {
        self.vertices[v]
    }

    pub fn vertex_colors(&self) -> &[VertexColor] {
        &self.vertices
    }

    /// Colour of the edge `uv`; `u` and `v` must differ.
    pub fn edge_color(&self, u: usize, v: usize) -> EdgeColor {
        debug_assert!(u != v, "types have no loops");
        self.edges[u * self.order() + v]
    }

    pub fn set_edge(&mut self, u: usize, v: usize, color: EdgeColor) {
        assert!(u != v, "types have no loops");
        let n = self.order();
        self.edges[u * n + v] = color;
        self.edges[v * n + u] = color;
    }

    pub fn red_vertices(&self) -> Vec<usize> {
        self.vertices_of(VertexColor::Red)
    }

    pub fn blue_vertices(&self) -> Vec<usize> {
        self.vertices_of(VertexColor::Blue)
    }

    pub fn vertices_of(&self, color: VertexColor) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.vertices[v] == color).collect()
    }

    /// Unordered pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.order();
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
    }

    pub fn count_edges(&self, color: EdgeColor) -> usize {
        self.pairs().filter(|&(u, v)| self.edge_color(u, v) == color).count()
    }

    /// No green edge joins two vertices of the same colour.
    pub fn is_friendly(&self) -> bool {
        self.pairs().all(|(u, v)| self.edge_color(u, v) != EdgeColor::Green || self.vertices[u] != self.vertices[v])
    }

    /// Whether a graph edge may map onto the (possibly equal) type vertices `s`, `t`.
    pub fn admits_edge(&self, s: usize, t: usize) -> bool {
        if s == t {
            self.vertices[s] == VertexColor::Blue
        } else {
            self.edge_color(s, t).admits_edge()
        }
    }

    /// Whether a graph non-edge may map onto the (possibly equal) type vertices `s`, `t`.
    pub fn admits_non_edge(&self, s: usize, t: usize) -> bool {
        if s == t {
            self.vertices[s] == VertexColor::Red
        } else {
            self.edge_color(s, t).admits_non_edge()
        }
    }

    /// `N(A)`: vertices outside `A` that are not joined by a red edge to one
    /// member of `A` and by a blue edge to another. Evaluated directly from
    /// the definition; see [`NeighborhoodIndex`] for the bitset version.
    pub fn common_neighborhood(&self, set: &[usize]) -> Vec<usize> {
        (0..self.order())
            .filter(|v| !set.contains(v))
            .filter(|&v| {
                let red = set.iter().any(|&r| self.edge_color(v, r) == EdgeColor::Red);
                let blue = set.iter().any(|&b| self.edge_color(v, b) == EdgeColor::Blue);
                !(red && blue)
            })
            .collect()
    }

    /// Induced subtype on `set`, as a copy whose image records the host indices.
    pub fn subtype(&self, set: &[usize]) -> SubtypeCopy {
        let mut image = set.to_vec();
        image.sort_unstable();
        image.dedup();
        let pattern = TypeGraph::from_fn(image.iter().map(|&v| self.vertices[v]).collect(), |i, j| {
            self.edge_color(image[i], image[j])
        });
        SubtypeCopy { pattern, image }
    }
}

impl From<&PartitionMatrix> for TypeGraph {
    fn from(m: &PartitionMatrix) -> Self {
        let vertices = (0..m.dim())
            .map(|i| match m.get(i, i) {
                Entry::Zero => VertexColor::Red,
                Entry::One => VertexColor::Blue,
                Entry::Star => unreachable!("partition matrices have no star on the diagonal"),
            })
            .collect();
        TypeGraph::from_fn(vertices, |i, j| match m.get(i, j) {
            Entry::Zero => EdgeColor::Red,
            Entry::One => EdgeColor::Blue,
            Entry::Star => EdgeColor::Green,
        })
    }
}

impl From<&TypeGraph> for PartitionMatrix {
    fn from(ty: &TypeGraph) -> Self {
        PartitionMatrix::from_fn(ty.order(), |i, j| {
            let color = if i == j { EdgeColor::from(ty.vertex_color(i)) } else { ty.edge_color(i, j) };
            match color {
                EdgeColor::Red => Entry::Zero,
                EdgeColor::Blue => Entry::One,
                EdgeColor::Green => Entry::Star,
            }
        })
        .expect("a type always yields a valid matrix")
    }
}

pub fn type_from_matrix(m: &PartitionMatrix) -> TypeGraph {
    TypeGraph::from(m)
}

pub fn matrix_from_type(ty: &TypeGraph) -> PartitionMatrix {
    PartitionMatrix::from(ty)
}

/// Per-vertex red and blue neighbourhoods as bitsets, for fast `N(A)` queries.
#[derive(Debug, Clone)]
pub struct NeighborhoodIndex {
    red: Vec<FixedBitSet>,
    blue: Vec<FixedBitSet>,
}

impl NeighborhoodIndex {
    pub fn new(ty: &TypeGraph) -> Self {
        let n = ty.order();
        let mut red = vec![FixedBitSet::with_capacity(n); n];
        let mut blue = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in ty.pairs() {
            let side = match ty.edge_color(u, v) {
                EdgeColor::Red => &mut red,
                EdgeColor::Blue => &mut blue,
                EdgeColor::Green => continue,
            };
            side[u].insert(v);
            side[v].insert(u);
        }
        NeighborhoodIndex { red, blue }
    }

    pub fn order(&self) -> usize {
        self.red.len()
    }

    /// `N(A)` as a bitset: the complement of `A` minus every vertex with a red
    /// edge into `A` and a blue edge into `A`.
    pub fn neighborhood(&self, set: &[usize]) -> FixedBitSet {
        let n = self.order();
        let mut red_hit = FixedBitSet::with_capacity(n);
        let mut blue_hit = FixedBitSet::with_capacity(n);
        for &a in set {
            red_hit.union_with(&self.red[a]);
            blue_hit.union_with(&self.blue[a]);
        }
        red_hit.intersect_with(&blue_hit);
        let mut out = FixedBitSet::with_capacity(n);
        out.insert_range(..);
        out.difference_with(&red_hit);
        for &a in set {
            out.set(a, false);
        }
        out
    }
}

/// An injective, colour-exact placement of `pattern` inside some host type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubtypeCopy {
    pub pattern: TypeGraph,
    /// `image[p]` is the host vertex carrying pattern vertex `p`.
    pub image: Vec<usize>,
}

impl SubtypeCopy {
    /// Checks injectivity and exact vertex and edge colours against `host`.
    pub fn new(host: &TypeGraph, pattern: TypeGraph, image: Vec<usize>) -> Result<Self, ModelError> {
        let copy = SubtypeCopy { pattern, image };
        copy.validate(host)?;
        Ok(copy)
    }

    pub fn validate(&self, host: &TypeGraph) -> Result<(), ModelError> {
        if self.image.len() != self.pattern.order() {
            return Err(ModelError::MapSize { got: self.image.len(), expected: self.pattern.order() });
        }
        let mut seen = FixedBitSet::with_capacity(host.order());
        for (p, &h) in self.image.iter().enumerate() {
            if h >= host.order() {
                return Err(ModelError::VertexOutOfRange { vertex: h, len: host.order() });
            }
            if seen.put(h) {
                return Err(ModelError::NotInjective(h));
            }
            if host.vertex_color(h) != self.pattern.vertex_color(p) {
                return Err(ModelError::VertexColourMismatch(p));
            }
        }
        for (p, q) in self.pattern.pairs() {
            if host.edge_color(self.image[p], self.image[q]) != self.pattern.edge_color(p, q) {
                return Err(ModelError::EdgeColourMismatch(p, q));
            }
        }
        Ok(())
    }

    pub fn host_vertex(&self, pattern_vertex: usize) -> usize {
        self.image[pattern_vertex]
    }
}

/// Lexicographically least colour-exact copy of `pattern` in `host`, if any.
pub fn find_subtype_copy(host: &TypeGraph, pattern: &TypeGraph) -> Option<SubtypeCopy> {
    fn extend(host: &TypeGraph, pattern: &TypeGraph, image: &mut Vec<usize>, used: &mut FixedBitSet) -> bool {
        let p = image.len();
        if p == pattern.order() {
            return true;
        }
        for h in 0..host.order() {
            if used.contains(h) || host.vertex_color(h) != pattern.vertex_color(p) {
                continue;
            }
            if image.iter().enumerate().any(|(q, &hq)| host.edge_color(hq, h) != pattern.edge_color(q, p)) {
                continue;
            }
            image.push(h);
            used.insert(h);
            if extend(host, pattern, image, used) {
                return true;
            }
            used.set(h, false);
            image.pop();
        }
        false
    }

    let mut image = Vec::with_capacity(pattern.order());
    let mut used = FixedBitSet::with_capacity(host.order());
    extend(host, pattern, &mut image, &mut used).then(|| SubtypeCopy { pattern: pattern.clone(), image })
}
