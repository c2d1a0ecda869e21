//! The parity audit behind "two disjoint odd cycles are never co-disk".
//!
//! Given two odd closed polygons whose segments stand for the complement
//! non-edges of two cycles, count for every segment `S_i` of the first
//! polygon: `a_i` = segments of the second polygon crossed by the line
//! prolonging `S_i`, `b_i` = segments of the second polygon whose prolonging
//! line crosses `S_i`, and `c_i` = segments of the second polygon meeting
//! `S_i` outright (and symmetrically `a'_j, b'_j, c'_j`). In a disk
//! representation every pair would have to satisfy the diagonal condition,
//! forcing `a_i + b_i - c_i` to equal the (odd) length of the other cycle —
//! but each `a_i` is even, the total crossing count is even, and the `b`/`a'`
//! sums coincide, so the parities cannot work out. The audit exhibits a pair
//! of segments violating the condition, which always exists.

use super::predicates::{collinear, line_intersects_segment, segments_intersect};
use super::Point;
use thiserror::Error;

/// Per-segment incidence counts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SegmentCounts {
    /// Segments of the other cycle hit by this segment's prolonging line.
    pub line_hits_other: usize,
    /// Segments of the other cycle whose prolonging line hits this segment.
    pub other_lines_hit_this: usize,
    /// Segments of the other cycle meeting this segment directly.
    pub crossings: usize,
}

/// The full parity ledger of one audit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityLedger {
    pub cycle1: Vec<SegmentCounts>,
    pub cycle2: Vec<SegmentCounts>,
}

impl ParityLedger {
    pub fn sum_a(&self) -> usize {
        self.cycle1.iter().map(|c| c.line_hits_other).sum()
    }
    pub fn sum_b(&self) -> usize {
        self.cycle1.iter().map(|c| c.other_lines_hit_this).sum()
    }
    pub fn sum_c(&self) -> usize {
        self.cycle1.iter().map(|c| c.crossings).sum()
    }
    pub fn sum_a_primed(&self) -> usize {
        self.cycle2.iter().map(|c| c.line_hits_other).sum()
    }
    pub fn sum_b_primed(&self) -> usize {
        self.cycle2.iter().map(|c| c.other_lines_hit_this).sum()
    }
    pub fn sum_c_primed(&self) -> usize {
        self.cycle2.iter().map(|c| c.crossings).sum()
    }
}

/// A witness pair failing the diagonal condition both ways, plus the ledger
/// that guarantees such a pair had to exist.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct K22Violation {
    /// Endpoints of the violating segment on the first cycle.
    pub segment_a: (Point, Point),
    /// Endpoints of the violating segment on the second cycle.
    pub segment_b: (Point, Point),
    /// Segment indices within their cycles.
    pub index_a: usize,
    pub index_b: usize,
    pub parity_ledger: ParityLedger,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AuditError {
    #[error("cycle {which} has even length {len}; the parity argument needs odd cycles")]
    EvenLength { which: usize, len: usize },
    #[error("cycle {which} has length {len}, need at least 3")]
    TooShort { which: usize, len: usize },
    #[error("cycle {which} repeats the consecutive point {point}")]
    ZeroLengthSegment { which: usize, point: String },
    #[error("degenerate geometry: collinear triple {0}")]
    Degenerate(String),
}

fn segments(cycle: &[Point]) -> Vec<(&Point, &Point)> {
    (0..cycle.len())
        .map(|i| (&cycle[i], &cycle[(i + 1) % cycle.len()]))
        .collect()
}

fn validate(c1: &[Point], c2: &[Point]) -> Result<(), AuditError> {
    for (which, cycle) in [(1usize, c1), (2, c2)] {
        if cycle.len() < 3 {
            return Err(AuditError::TooShort {
                which,
                len: cycle.len(),
            });
        }
        if cycle.len() % 2 == 0 {
            return Err(AuditError::EvenLength {
                which,
                len: cycle.len(),
            });
        }
        for i in 0..cycle.len() {
            if cycle[i] == cycle[(i + 1) % cycle.len()] {
                return Err(AuditError::ZeroLengthSegment {
                    which,
                    point: cycle[i].to_string(),
                });
            }
        }
    }
    // Every incidence test pits a segment of one cycle against a vertex of
    // the other; a collinear such triple would make a count ambiguous.
    for (own, other) in [(c1, c2), (c2, c1)] {
        for (p, q) in segments(own) {
            for r in other {
                if collinear(p, q, r) {
                    return Err(AuditError::Degenerate(format!("{p}, {q}, {r}")));
                }
            }
        }
    }
    Ok(())
}

/// Runs the parity audit and returns the ledger plus one violating pair.
///
/// For valid inputs a violating pair is a theorem, not a hope; its absence
/// would make `sum(a_i + b_i - c_i)` both odd and even at once.
pub fn audit_two_odd_cycles(c1: &[Point], c2: &[Point]) -> Result<K22Violation, AuditError> {
    validate(c1, c2)?;
    let seg1 = segments(c1);
    let seg2 = segments(c2);

    let counts = |own: &[(&Point, &Point)], other: &[(&Point, &Point)]| -> Vec<SegmentCounts> {
        own.iter()
            .map(|(p, q)| SegmentCounts {
                line_hits_other: other
                    .iter()
                    .filter(|(a, b)| line_intersects_segment(p, q, a, b))
                    .count(),
                other_lines_hit_this: other
                    .iter()
                    .filter(|(a, b)| line_intersects_segment(a, b, p, q))
                    .count(),
                crossings: other
                    .iter()
                    .filter(|(a, b)| segments_intersect(p, q, a, b))
                    .count(),
            })
            .collect()
    };
    let ledger = ParityLedger {
        cycle1: counts(&seg1, &seg2),
        cycle2: counts(&seg2, &seg1),
    };

    debug_assert!(ledger.cycle1.iter().all(|c| c.line_hits_other % 2 == 0));
    debug_assert!(ledger.cycle2.iter().all(|c| c.line_hits_other % 2 == 0));
    debug_assert_eq!(ledger.sum_c() % 2, 0);
    debug_assert_eq!(ledger.sum_b(), ledger.sum_a_primed());

    for (i, (p, q)) in seg1.iter().enumerate() {
        for (j, (a, b)) in seg2.iter().enumerate() {
            if !line_intersects_segment(p, q, a, b) && !line_intersects_segment(a, b, p, q) {
                return Ok(K22Violation {
                    segment_a: ((*p).clone(), (*q).clone()),
                    segment_b: ((*a).clone(), (*b).clone()),
                    index_a: i,
                    index_b: j,
                    parity_ledger: ledger,
                });
            }
        }
    }
    unreachable!("parity forces a violating pair for odd cycles in general position");
}
