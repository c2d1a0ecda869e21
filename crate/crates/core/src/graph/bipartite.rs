//! Two-colorings and maximum-weight independent sets in bipartite graphs.
//!
//! The weighted case is solved exactly: a minimum-weight vertex cover is
//! extracted from a source/sink cut computed with rational capacities, and
//! the independent set is its complement. No thresholds, no floats.

use super::Graph;
use crate::bits::VertexBits;
use crate::rat::Rational;
use num_traits::Zero;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A proper two-coloring: every edge joins `Left` to `Right`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    sides: Vec<Side>,
}

impl Coloring {
    pub(crate) fn from_sides(sides: Vec<Side>) -> Coloring {
        Coloring { sides }
    }

    pub fn side(&self, v: u32) -> Side {
        self.sides[v as usize]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("edge ({}, {}) joins two vertices on the same side", edge.0, edge.1)]
pub struct InvalidColoring {
    pub edge: (u32, u32),
}

/// BFS two-coloring. Returns `None` exactly when some component contains an
/// odd closed walk. Component roots (smallest unvisited id) go `Left`.
pub fn is_bipartite(g: &Graph) -> Option<Coloring> {
    let n = g.vertex_count();
    let mut sides: Vec<Option<Side>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n as u32 {
        if sides[root as usize].is_some() {
            continue;
        }
        sides[root as usize] = Some(Side::Left);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let u_side = sides[u as usize].unwrap();
            let v_side = match u_side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            };
            for v in g.neighbors(u) {
                match sides[v as usize] {
                    None => {
                        sides[v as usize] = Some(v_side);
                        queue.push_back(v);
                    }
                    Some(s) if s == u_side => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Coloring {
        sides: sides.into_iter().map(|s| s.unwrap()).collect(),
    })
}

/// Maximum-weight independent set of a bipartite graph.
///
/// Rejects the coloring if any edge sits inside one side, reporting the
/// lexicographically first offender.
pub fn max_independent_set_bipartite(
    g: &Graph,
    coloring: &Coloring,
) -> Result<Vec<u32>, InvalidColoring> {
    assert_eq!(coloring.sides.len(), g.vertex_count());
    for (u, v) in g.edges() {
        if coloring.side(u) == coloring.side(v) {
            return Err(InvalidColoring { edge: (u, v) });
        }
    }
    let alive = VertexBits::full(g.vertex_count());
    Ok(mwis_bipartite_masked(g, coloring, &alive).0)
}

/// Same computation restricted to `alive`; callers guarantee the coloring is
/// proper on the induced subgraph.
pub(crate) fn mwis_bipartite_masked(
    g: &Graph,
    coloring: &Coloring,
    alive: &VertexBits,
) -> (Vec<u32>, Rational) {
    let n = g.vertex_count();
    // Node layout: 0 = source, 1 = sink, v + 2 = vertex v.
    let nodes = n + 2;
    let mut cap = vec![vec![Rational::zero(); nodes]; nodes];
    let infinite: Rational = alive
        .iter()
        .map(|v| g.weight(v))
        .sum::<Rational>()
        + Rational::from_integer(1.into());

    for v in alive.iter() {
        match coloring.side(v) {
            Side::Left => cap[0][v as usize + 2] = g.weight(v),
            Side::Right => cap[v as usize + 2][1] = g.weight(v),
        }
    }
    for u in alive.iter() {
        if coloring.side(u) != Side::Left {
            continue;
        }
        for v in g.neighbors(u) {
            if alive.contains(v) {
                debug_assert_eq!(coloring.side(v), Side::Right);
                cap[u as usize + 2][v as usize + 2] = infinite.clone();
            }
        }
    }

    // Edmonds–Karp: shortest augmenting paths, neighbors scanned in index
    // order so the run is reproducible.
    loop {
        let mut parent: Vec<Option<usize>> = vec![None; nodes];
        parent[0] = Some(0);
        let mut queue = VecDeque::from([0usize]);
        'bfs: while let Some(u) = queue.pop_front() {
            for v in 0..nodes {
                if parent[v].is_none() && cap[u][v] > Rational::zero() {
                    parent[v] = Some(u);
                    if v == 1 {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if parent[1].is_none() {
            break;
        }
        let mut bottleneck: Option<Rational> = None;
        let mut v = 1;
        while v != 0 {
            let u = parent[v].unwrap();
            bottleneck = Some(match bottleneck {
                None => cap[u][v].clone(),
                Some(b) => b.min(cap[u][v].clone()),
            });
            v = u;
        }
        let f = bottleneck.unwrap();
        let mut v = 1;
        while v != 0 {
            let u = parent[v].unwrap();
            cap[u][v] -= &f;
            cap[v][u] += &f;
            v = u;
        }
    }

    // Reachability in the residual network gives the minimum cut: the cover
    // is (Left not reached) together with (Right reached).
    let mut reached = vec![false; nodes];
    reached[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for v in 0..nodes {
            if !reached[v] && cap[u][v] > Rational::zero() {
                reached[v] = true;
                queue.push_back(v);
            }
        }
    }

    let mut set = Vec::new();
    let mut weight = Rational::zero();
    for v in alive.iter() {
        let in_cover = match coloring.side(v) {
            Side::Left => !reached[v as usize + 2],
            Side::Right => reached[v as usize + 2],
        };
        if !in_cover {
            set.push(v);
            weight += g.weight(v);
        }
    }
    debug_assert!(g.is_independent_set(&set));
    (set, weight)
}
