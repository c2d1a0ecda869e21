//! 2-subdivisions and their complements.
//!
//! Subdividing every edge twice turns an `(n, m)` graph into one with
//! `n + 2m` vertices and `3m` edges; the co-2-subdivision is its complement.

use super::Graph;

/// The 2-subdivision together with the labeling of its edge vertices.
///
/// Vertex layout: ids `0..n` are the original vertices; edge `k` (in the
/// lexicographic order reported by [`Graph::edges`]) contributes
/// `plus_vertex(k) = n + 2k` adjacent to the smaller endpoint and
/// `minus_vertex(k) = n + 2k + 1` adjacent to the larger one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoSubdivision {
    pub graph: Graph,
    /// Original edges, index `k` matching the vertex layout.
    pub edges: Vec<(u32, u32)>,
    original: usize,
}

impl TwoSubdivision {
    pub fn original_count(&self) -> usize {
        self.original
    }

    pub fn plus_vertex(&self, k: usize) -> u32 {
        (self.original + 2 * k) as u32
    }

    pub fn minus_vertex(&self, k: usize) -> u32 {
        (self.original + 2 * k + 1) as u32
    }
}

/// Replaces each edge `v_i v_j` by the path `v_i, v+(e_k), v-(e_k), v_j`.
pub fn two_subdivision(g: &Graph) -> TwoSubdivision {
    let n = g.vertex_count();
    let edges: Vec<(u32, u32)> = g.edges().collect();
    let mut out = Graph::new(n + 2 * edges.len());
    for (k, &(u, v)) in edges.iter().enumerate() {
        let plus = (n + 2 * k) as u32;
        let minus = (n + 2 * k + 1) as u32;
        out.add_edge(u, plus);
        out.add_edge(plus, minus);
        out.add_edge(minus, v);
    }
    TwoSubdivision {
        graph: out,
        edges,
        original: n,
    }
}

pub fn co_two_subdivision(g: &Graph) -> Graph {
    two_subdivision(g).graph.complement()
}
