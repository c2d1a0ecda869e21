//! Shortest odd cycles and odd cycle covers.
//!
//! The odd girth is computed by breadth-first search from every vertex on the
//! bipartite double cover. Among minimum-length odd closed walks, ties break
//! toward the lowest starting vertex and then the lexicographically smallest
//! walk, so repeated runs produce identical cycles. A shortest odd closed
//! walk of minimum length over all starts is automatically a simple,
//! chordless cycle: any repeated vertex or chord would yield a strictly
//! shorter odd cycle.

use super::{is_bipartite, Graph};
use std::collections::VecDeque;

/// An induced odd cycle, stored in traversal order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddCycle {
    vertices: Vec<u32>,
}

impl OddCycle {
    pub(crate) fn from_walk(g: &Graph, vertices: Vec<u32>) -> OddCycle {
        let cycle = OddCycle { vertices };
        debug_assert!(cycle.is_cycle_of(g));
        debug_assert!(cycle.is_chordless_in(g));
        cycle
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Distinct vertices, odd count >= 3, cyclically consecutive adjacency.
    pub fn is_cycle_of(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        if k < 3 || k % 2 == 0 {
            return false;
        }
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return false;
        }
        (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// No edge between non-consecutive cycle vertices.
    pub fn is_chordless_in(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if !consecutive && g.has_edge(self.vertices[i], self.vertices[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Double-cover state: vertex `v` with walk parity `p`.
fn state(v: u32, p: usize) -> usize {
    v as usize * 2 + p
}

fn bfs_double_cover(g: &Graph, from: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.vertex_count() * 2];
    dist[from] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(s) = queue.pop_front() {
        let (v, p) = ((s / 2) as u32, s % 2);
        let d = dist[s].unwrap();
        for u in g.neighbors(v) {
            let t = state(u, 1 - p);
            if dist[t].is_none() {
                dist[t] = Some(d + 1);
                queue.push_back(t);
            }
        }
    }
    dist
}

/// Returns a shortest odd cycle (length = odd girth), or `None` for
/// bipartite graphs. The cycle is chordless.
pub fn shortest_odd_cycle(g: &Graph) -> Option<OddCycle> {
    let n = g.vertex_count();
    let mut best: Option<(u32, u32)> = None; // (length, start)
    for v in 0..n as u32 {
        let dist = bfs_double_cover(g, state(v, 0));
        if let Some(d) = dist[state(v, 1)] {
            if best.as_ref().is_none_or(|&(bd, _)| d < bd) {
                best = Some((d, v));
            }
        }
    }
    let (length, start) = best?;

    // Walk greedily toward the target using distances measured from it; at
    // every step the smallest admissible vertex id is chosen, which yields
    // the lexicographically least shortest walk.
    let back = bfs_double_cover(g, state(start, 1));
    debug_assert_eq!(back[state(start, 0)], Some(length));
    let mut walk = vec![start];
    let mut cur = (start, 0usize);
    let mut remaining = length;
    while remaining > 0 {
        let (v, p) = cur;
        let next = g
            .neighbors(v)
            .find(|&u| back[state(u, 1 - p)] == Some(remaining - 1))
            .expect("a shortest walk continues");
        if remaining > 1 {
            walk.push(next);
        }
        cur = (next, 1 - p);
        remaining -= 1;
    }
    Some(OddCycle::from_walk(g, walk))
}

/// A vertex set whose deletion leaves the graph bipartite, produced by
/// repeatedly deleting the closed neighborhood of a shortest odd cycle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddCycleCover {
    /// Sorted vertex ids of the cover.
    pub vertices: Vec<u32>,
    /// Number of extraction iterations it took.
    pub rounds: usize,
}

pub fn odd_cycle_cover(g: &Graph) -> OddCycleCover {
    let mut keep: Vec<u32> = (0..g.vertex_count() as u32).collect();
    let mut cover: Vec<u32> = Vec::new();
    let mut rounds = 0;
    loop {
        let sub = g.induced(&keep);
        if is_bipartite(&sub).is_some() {
            break;
        }
        let cycle = shortest_odd_cycle(&sub).expect("non-bipartite graph has an odd cycle");
        let closed = sub.closed_neighborhood(cycle.vertices());
        let removed: Vec<u32> = closed.iter().map(|&i| keep[i as usize]).collect();
        cover.extend(&removed);
        keep.retain(|v| !removed.contains(v));
        rounds += 1;
    }
    cover.sort_unstable();
    OddCycleCover {
        vertices: cover,
        rounds,
    }
}
