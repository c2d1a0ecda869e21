//! Desk-scale exact clique oracle: Bron–Kerbosch with pivoting, tracking the
//! maximum-weight maximal clique. Guarded by a vertex limit so CI never
//! wanders into an accidental exponential blowup.

use super::Graph;
use crate::bits::VertexBits;
use crate::rat::Rational;
use num_traits::Zero;
use thiserror::Error;

pub const DEFAULT_ORACLE_LIMIT: usize = 24;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MaxClique {
    /// Sorted vertex ids.
    pub vertices: Vec<u32>,
    pub weight: Rational,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {vertices} vertices, oracle limit is {limit}")]
    TooLarge { vertices: usize, limit: usize },
}

/// Exact maximum-weight clique by pivoted maximal-clique enumeration.
///
/// With non-negative weights some maximal clique attains the optimum, so
/// enumerating maximal cliques suffices. Ties break toward the
/// lexicographically smallest vertex set.
pub fn brute_force_max_clique(g: &Graph, limit: usize) -> Result<MaxClique, OracleError> {
    let n = g.vertex_count();
    if n > limit {
        return Err(OracleError::TooLarge {
            vertices: n,
            limit,
        });
    }
    let adj = g.adjacency_bits();
    let mut best = MaxClique {
        vertices: Vec::new(),
        weight: Rational::zero(),
    };
    let mut r = Vec::new();
    expand(
        g,
        &adj,
        &mut r,
        Rational::zero(),
        VertexBits::full(n),
        VertexBits::empty(n),
        &mut best,
    );
    Ok(best)
}

fn better(weight: &Rational, set: &[u32], best: &MaxClique) -> bool {
    match weight.cmp(&best.weight) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => set < best.vertices.as_slice(),
    }
}

fn expand(
    g: &Graph,
    adj: &[VertexBits],
    r: &mut Vec<u32>,
    r_weight: Rational,
    mut p: VertexBits,
    mut x: VertexBits,
    best: &mut MaxClique,
) {
    if p.is_empty() && x.is_empty() {
        let mut set = r.clone();
        set.sort_unstable();
        if better(&r_weight, &set, best) {
            *best = MaxClique {
                vertices: set,
                weight: r_weight,
            };
        }
        return;
    }
    // Pivot on the vertex of P ∪ X covering most of P; lowest id on ties.
    let mut pivot = None;
    let mut pivot_cover = 0usize;
    for u in p.iter().chain(x.iter()) {
        let cover = p.intersection_count(&adj[u as usize]);
        if pivot.is_none() || cover > pivot_cover {
            pivot = Some(u);
            pivot_cover = cover;
        }
    }
    let pivot = pivot.unwrap();
    let candidates: Vec<u32> = p
        .iter()
        .filter(|&v| !adj[pivot as usize].contains(v))
        .collect();
    for v in candidates {
        let mut p_next = p.clone();
        p_next.intersect_with(&adj[v as usize]);
        let mut x_next = x.clone();
        x_next.intersect_with(&adj[v as usize]);
        r.push(v);
        expand(g, adj, r, r_weight.clone() + g.weight(v), p_next, x_next, best);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Independent route: plain subset enumeration.
    fn subset_oracle(g: &Graph) -> Rational {
        let n = g.vertex_count();
        assert!(n <= 16);
        let mut best = Rational::zero();
        for mask in 0u32..(1 << n) {
            let set: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
            if g.is_clique(&set) {
                let w: Rational = set.iter().map(|&v| g.weight(v)).sum();
                if w > best {
                    best = w;
                }
            }
        }
        best
    }

    #[test]
    fn k4_and_c5() {
        let k4 = brute_force_max_clique(&Graph::complete(4), DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(k4.vertices, vec![0, 1, 2, 3]);
        assert_eq!(k4.weight, rat(4));
        let c5 = brute_force_max_clique(&Graph::cycle(5), DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(c5.weight, rat(2));
        assert_eq!(c5.vertices, vec![0, 1]);
    }

    #[test]
    fn complement_of_cycle_union_has_clique_seven() {
        let union = Graph::disjoint_union(&[Graph::cycle(4), Graph::cycle(6), Graph::cycle(5)]);
        let g = union.complement();
        // 2 + 3 + 2, frozen from the subset-enumeration oracle below.
        assert_eq!(subset_oracle(&g), rat(7));
        let best = brute_force_max_clique(&g, DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(best.weight, rat(7));
        assert!(g.is_clique(&best.vertices));
    }

    #[test]
    fn refuses_oversized_instances() {
        let g = Graph::new(25);
        assert_eq!(
            brute_force_max_clique(&g, DEFAULT_ORACLE_LIMIT),
            Err(OracleError::TooLarge {
                vertices: 25,
                limit: 24
            })
        );
        assert!(brute_force_max_clique(&g, 30).is_ok());
    }

    #[test]
    fn weighted_ties_and_values_match_subset_enumeration() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..80 {
            let n = rng.gen_range(1..=11);
            let mut g = Graph::new(n);
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            if rng.gen_bool(0.5) {
                g.set_weights((0..n).map(|_| rat(rng.gen_range(0..9))).collect())
                    .unwrap();
            }
            let best = brute_force_max_clique(&g, DEFAULT_ORACLE_LIMIT).unwrap();
            assert!(g.is_clique(&best.vertices));
            assert_eq!(best.weight, subset_oracle(&g));
        }
    }

    #[test]
    fn lexicographic_tie_break() {
        let mut g = Graph::new(4);
        g.add_edge(2, 3);
        g.add_edge(0, 1);
        let best = brute_force_max_clique(&g, DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(best.vertices, vec![0, 1]);
    }
}
