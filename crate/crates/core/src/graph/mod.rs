//! Undirected simple graphs with optional non-negative rational vertex
//! weights, plus the polynomial-time primitives the solver and generators
//! are built from.

mod bipartite;
mod clique;
mod odd_cycle;
mod subdivision;

pub use bipartite::{is_bipartite, max_independent_set_bipartite, Coloring, InvalidColoring, Side};
pub(crate) use bipartite::mwis_bipartite_masked;
pub use clique::{brute_force_max_clique, MaxClique, OracleError, DEFAULT_ORACLE_LIMIT};
pub use odd_cycle::{odd_cycle_cover, shortest_odd_cycle, OddCycle, OddCycleCover};
pub use subdivision::{co_two_subdivision, two_subdivision, TwoSubdivision};

use crate::bits::VertexBits;
use crate::rat::Rational;
use num_traits::Zero;
use std::collections::BTreeSet;
use thiserror::Error;

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency is kept symmetric and loop-free by construction. Weights are
/// optional; an unweighted graph behaves as if every vertex weighs 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<BTreeSet<u32>>,
    weights: Option<Vec<Rational>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("expected {expected} weights, got {got}")]
    CountMismatch { expected: usize, got: usize },
    #[error("negative weight at vertex {vertex}")]
    Negative { vertex: u32 },
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            weights: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Inserts the edge `{u, v}`. Panics on self-loops or out-of-range ids;
    /// the text parser rejects those before they ever reach here.
    pub fn add_edge(&mut self, u: u32, v: u32) {
        assert!(u != v, "self-loop at {u}");
        assert!((u as usize) < self.adj.len() && (v as usize) < self.adj.len());
        self.adj[u as usize].insert(v);
        self.adj[v as usize].insert(u);
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(&v)
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.adj[v as usize].iter().copied()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| (u as u32) < v)
                .map(move |v| (u as u32, v))
        })
    }

    pub fn set_weights(&mut self, weights: Vec<Rational>) -> Result<(), WeightError> {
        if weights.len() != self.vertex_count() {
            return Err(WeightError::CountMismatch {
                expected: self.vertex_count(),
                got: weights.len(),
            });
        }
        if let Some(v) = weights.iter().position(|w| w < &Rational::zero()) {
            return Err(WeightError::Negative { vertex: v as u32 });
        }
        self.weights = Some(weights);
        Ok(())
    }

    pub fn weights(&self) -> Option<&[Rational]> {
        self.weights.as_deref()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn weight(&self, v: u32) -> Rational {
        match &self.weights {
            Some(w) => w[v as usize].clone(),
            None => Rational::from_integer(1.into()),
        }
    }

    pub fn set_weight_of(&self, set: &[u32]) -> Rational {
        set.iter().map(|&v| self.weight(v)).sum()
    }

    /// Edge `uv` in the output iff absent here; weights carried over.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(n);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.weights = self.weights.clone();
        g
    }

    /// Induced subgraph on `verts` (sorted, distinct), relabeled by position.
    pub fn induced(&self, verts: &[u32]) -> Graph {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i as u32, j as u32);
                }
            }
        }
        if let Some(w) = &self.weights {
            g.weights = Some(verts.iter().map(|&v| w[v as usize].clone()).collect());
        }
        g
    }

    /// N[set]: the set together with every neighbor of it.
    pub fn closed_neighborhood(&self, set: &[u32]) -> BTreeSet<u32> {
        let mut out: BTreeSet<u32> = set.iter().copied().collect();
        for &v in set {
            out.extend(self.neighbors(v));
        }
        out
    }

    pub fn is_clique(&self, set: &[u32]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..]
                .iter()
                .all(|&v| self.has_edge(u, v))
        })
    }

    pub fn is_independent_set(&self, set: &[u32]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Adjacency rows as bit sets, for the enumeration-heavy callers.
    pub(crate) fn adjacency_bits(&self) -> Vec<VertexBits> {
        let n = self.vertex_count();
        (0..n as u32)
            .map(|v| VertexBits::from_iter(n, self.neighbors(v)))
            .collect()
    }

    // --- small constructors used across the crate and its tests ---

    pub fn cycle(len: usize) -> Graph {
        assert!(len >= 3);
        let mut g = Graph::new(len);
        for i in 0..len {
            g.add_edge(i as u32, ((i + 1) % len) as u32);
        }
        g
    }

    pub fn path(len: usize) -> Graph {
        let mut g = Graph::new(len);
        for i in 1..len {
            g.add_edge((i - 1) as u32, i as u32);
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n).complement()
    }

    /// Disjoint union, vertices renumbered block by block.
    pub fn disjoint_union(parts: &[Graph]) -> Graph {
        let n: usize = parts.iter().map(|g| g.vertex_count()).sum();
        let mut g = Graph::new(n);
        let mut offset = 0u32;
        for part in parts {
            for (u, v) in part.edges() {
                g.add_edge(offset + u, offset + v);
            }
            offset += part.vertex_count() as u32;
        }
        g
    }
}
