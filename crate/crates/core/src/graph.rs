//! Finite simple undirected graphs.

use crate::error::ModelError;

/// A loopless undirected graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    order: usize,
    adj: Vec<bool>,
}

impl SimpleGraph {
    /// Graph with no edges.
    pub fn empty(order: usize) -> Self {
        SimpleGraph { order, adj: vec![false; order * order] }
    }

    /// Validates every pair: rejects loops, duplicates and out-of-range endpoints.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, ModelError> {
        let mut g = Self::empty(order);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(ModelError::VertexOutOfRange { vertex: w, len: order });
                }
            }
            if u == v {
                return Err(ModelError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(ModelError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "a cycle needs at least three vertices");
        let mut g = Self::path(order);
        g.add_edge(order - 1, 0);
        g
    }

    pub fn path(order: usize) -> Self {
        let mut g = Self::empty(order);
        for u in 1..order {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges().count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.order + v]
    }

    /// Panics on a loop or out-of-range vertex. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at vertex {u}");
        self.adj[u * self.order + v] = true;
        self.adj[v * self.order + u] = true;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.order + v] = false;
        self.adj[v * self.order + u] = false;
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order)
            .flat_map(move |u| (u + 1..self.order).map(move |v| (u, v)))
            .filter(move |&(u, v)| self.has_edge(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.order).filter(|&w| self.has_edge(v, w)).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&w| self.has_edge(v, w))
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = Self::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// `G - v`, with vertices above `v` shifted down by one.
    pub fn remove_vertex(&self, v: usize) -> SimpleGraph {
        let keep: Vec<usize> = (0..self.order).filter(|&w| w != v).collect();
        self.induced(&keep)
    }

    /// Copy with `extra` isolated vertices appended.
    pub fn with_extra_vertices(&self, extra: usize) -> SimpleGraph {
        let mut g = Self::empty(self.order + extra);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        g
    }

    /// Whether the vertices split into a clique and an independent set.
    ///
    /// Degree-sequence test: with degrees sorted non-increasingly and `k` the
    /// largest index with `d_k >= k - 1`, the graph is split iff
    /// `sum_{i<=k} d_i = k(k-1) + sum_{i>k} d_i`.
    pub fn is_split(&self) -> bool {
        let mut degrees: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let k = degrees.iter().enumerate().filter(|&(i, &d)| d >= i).map(|(i, _)| i + 1).max().unwrap_or(0);
        let head: usize = degrees[..k].iter().sum();
        let tail: usize = degrees[k..].iter().sum();
        head == k * k.saturating_sub(1) + tail
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("SimpleGraph").field("order", &self.order).field("edges", &edges).finish()
    }
}

/// Free-function form of [`SimpleGraph::is_split`].
pub fn is_split_graph(g: &SimpleGraph) -> bool {
    g.is_split()
}
