//! Representation normalizers: remove tangency-only edges, then push centers
//! off common lines. Both transforms preserve the intersection graph exactly.
//!
//! Euclidean gaps between disks are irrational in general, so the safety
//! margins below are rational *lower bounds* on the true minimum gaps
//! (`sqrt(x) <= max(1, x)` gives the bound), and each adjustment spends at
//! most a quarter of the margin. Two adjusted disks together therefore never
//! consume a full gap, and every strict inequality stays strict.

use super::predicates::collinear;
use super::{Disk, Point, Representation};
use crate::rat::Rational;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalizeError {
    #[error("representation is not proper: disks {} and {} are tangent", pair.0, pair.1)]
    NotProper { pair: (u32, u32) },
}

fn sqrt_upper_bound(x: &Rational) -> Rational {
    let one = Rational::one();
    if *x >= one {
        x.clone()
    } else {
        one
    }
}

enum PairKind {
    /// dist > r+r'; holds a positive rational lower bound on the gap.
    Separated(Rational),
    /// dist == r+r' exactly.
    Tangent,
    /// dist < r+r'; holds a positive rational lower bound on the overlap
    /// depth along the center line.
    Overlapping(Rational),
}

fn classify(a: &Disk, b: &Disk) -> PairKind {
    let d2 = a.center.distance2(&b.center);
    let s = &a.radius + &b.radius;
    let s2 = &s * &s;
    match d2.cmp(&s2) {
        std::cmp::Ordering::Greater => {
            // d - s = (d2 - s2) / (d + s) >= (d2 - s2) / (ub + s)
            let bound = (&d2 - &s2) / (sqrt_upper_bound(&d2) + &s);
            PairKind::Separated(bound)
        }
        std::cmp::Ordering::Equal => PairKind::Tangent,
        std::cmp::Ordering::Less => {
            // s - d = (s2 - d2) / (s + d) >= (s2 - d2) / (2 s)
            let bound = (&s2 - &d2) / (Rational::from_integer(2.into()) * &s);
            PairKind::Overlapping(bound)
        }
    }
}

/// Turns every tangency into a proper overlap by inflating the lower-indexed
/// disk of each tangent pair, leaving the intersection graph untouched.
///
/// The inflation is a quarter of the smallest separation bound; when no pair
/// is separated it falls back to a quarter of the smallest overlap bound,
/// and to 1 when every pair is tangent.
pub fn make_proper(rep: &Representation) -> Representation {
    let disks = rep.disks();
    let n = disks.len();
    let mut tangent_members: Vec<bool> = vec![false; n];
    let mut any_tangent = false;
    let mut min_gap: Option<Rational> = None;
    let mut min_overlap: Option<Rational> = None;
    for u in 0..n {
        for v in u + 1..n {
            match classify(&disks[u], &disks[v]) {
                PairKind::Separated(b) => {
                    min_gap = Some(match min_gap {
                        None => b,
                        Some(m) => m.min(b),
                    });
                }
                PairKind::Tangent => {
                    tangent_members[u] = true;
                    any_tangent = true;
                }
                PairKind::Overlapping(b) => {
                    min_overlap = Some(match min_overlap {
                        None => b,
                        Some(m) => m.min(b),
                    });
                }
            }
        }
    }
    if !any_tangent {
        return rep.clone();
    }
    let eps = min_gap
        .or(min_overlap)
        .unwrap_or_else(Rational::one);
    let inflation = eps / Rational::from_integer(4.into());

    let new_disks: Vec<Disk> = disks
        .iter()
        .enumerate()
        .map(|(v, d)| {
            if tangent_members[v] {
                Disk {
                    center: d.center.clone(),
                    radius: &d.radius + &inflation,
                }
            } else {
                d.clone()
            }
        })
        .collect();
    let out = Representation::new(new_disks).expect("non-empty by construction");
    match rep.labels() {
        Some(l) => out.with_labels(l.to_vec()).expect("same length"),
        None => out,
    }
}

/// Moves centers off common lines until no three are collinear, keeping each
/// moved center well inside the smallest gap/overlap margin so the
/// intersection graph and properness are preserved.
///
/// Requires a proper representation; tangent pairs are rejected.
pub fn perturb_general_position(
    rep: &Representation,
) -> Result<Representation, NormalizeError> {
    let n = rep.len();
    let mut min_margin: Option<Rational> = None;
    for u in 0..n {
        for v in u + 1..n {
            match classify(&rep.disks()[u], &rep.disks()[v]) {
                PairKind::Tangent => {
                    return Err(NormalizeError::NotProper {
                        pair: (u as u32, v as u32),
                    })
                }
                PairKind::Separated(b) | PairKind::Overlapping(b) => {
                    min_margin = Some(match min_margin {
                        None => b,
                        Some(m) => m.min(b),
                    });
                }
            }
        }
    }
    let eps = min_margin.unwrap_or_else(Rational::one);
    let budget = eps / Rational::from_integer(4.into());

    let mut centers: Vec<Point> = rep.disks().iter().map(|d| d.center.clone()).collect();
    // Coincident centers first (they sit on every line), then collinear
    // triples. A relocated center lands off every line through two others,
    // so it never needs to move again and the loop terminates.
    loop {
        if let Some(k) = first_coincident_later_index(&centers) {
            relocate(&mut centers, k, &budget);
            continue;
        }
        if let Some((_, _, k)) = first_collinear_triple(&centers) {
            relocate(&mut centers, k, &budget);
            continue;
        }
        break;
    }

    let new_disks: Vec<Disk> = rep
        .disks()
        .iter()
        .zip(centers)
        .map(|(d, c)| Disk {
            center: c,
            radius: d.radius.clone(),
        })
        .collect();
    let out = Representation::new(new_disks).expect("non-empty by construction");
    Ok(match rep.labels() {
        Some(l) => out.with_labels(l.to_vec()).expect("same length"),
        None => out,
    })
}

fn first_coincident_later_index(centers: &[Point]) -> Option<usize> {
    let n = centers.len();
    if n < 3 {
        return None; // no triple can exist, nothing to repair
    }
    for i in 0..n {
        for j in i + 1..n {
            if centers[i] == centers[j] {
                return Some(j);
            }
        }
    }
    None
}

/// All centers distinct when this runs.
fn first_collinear_triple(centers: &[Point]) -> Option<(usize, usize, usize)> {
    let n = centers.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear(&centers[i], &centers[j], &centers[k]) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Moves `centers[k]` to a nearby point (within the budget ball) that
/// coincides with no other center and lies on no line through two distinct
/// other centers. Candidates sit on a parabola, so each line excludes at
/// most two of them and the search always succeeds.
fn relocate(centers: &mut [Point], k: usize, budget: &Rational) {
    let n = centers.len();
    for j in 1..=(4 * n * n + 4) as i64 {
        let u = Rational::new(1.into(), (2 * j).into());
        let cand = Point::new(
            &centers[k].x + budget * &u,
            &centers[k].y + budget * &u * &u,
        );
        let distinct = (0..n).filter(|&a| a != k).all(|a| cand != centers[a]);
        let off_lines = (0..n).filter(|&a| a != k).all(|a| {
            (a + 1..n)
                .filter(|&b| b != k && centers[a] != centers[b])
                .all(|b| !collinear(&centers[a], &centers[b], &cand))
        });
        if distinct && off_lines {
            centers[k] = cand;
            return;
        }
    }
    unreachable!("parabola candidates exhausted");
}
