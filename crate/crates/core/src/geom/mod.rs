//! Exact-rational planar toolkit: disks, their intersection graphs, the
//! representation normalizers, the two-odd-cycles parity audit, and the
//! verified builder for complements of cycle unions.

mod audit;
mod builder;
mod normalize;
mod predicates;
pub mod svg;

pub use audit::{audit_two_odd_cycles, AuditError, K22Violation, ParityLedger, SegmentCounts};
pub use builder::{build_co_cycles_representation, plan_target_graph, BuildError, BuildPlan};
pub use normalize::{make_proper, perturb_general_position, NormalizeError};
pub use predicates::{
    collinear, disks_intersect, k22_condition_holds, line_intersects_segment, orient,
    segments_intersect, DegenerateInput, Orientation,
};

use crate::graph::Graph;
use crate::rat::{format_rational, Rational};
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

/// A point with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn distance2(&self, other: &Point) -> Rational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

/// A closed disk with positive rational radius.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Disk {
    pub center: Point,
    pub radius: Rational,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("disk radius must be positive, got {0}")]
pub struct NonPositiveRadius(pub String);

impl Disk {
    pub fn new(center: Point, radius: Rational) -> Result<Self, NonPositiveRadius> {
        if radius <= Rational::zero() {
            return Err(NonPositiveRadius(format_rational(&radius)));
        }
        Ok(Disk { center, radius })
    }
}

/// Disks indexed by vertex id, with optional display labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    disks: Vec<Disk>,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepresentationError {
    #[error("a representation needs at least one disk")]
    Empty,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

impl Representation {
    pub fn new(disks: Vec<Disk>) -> Result<Self, RepresentationError> {
        if disks.is_empty() {
            return Err(RepresentationError::Empty);
        }
        Ok(Representation {
            disks,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, RepresentationError> {
        if labels.len() != self.disks.len() {
            return Err(RepresentationError::LabelCount {
                expected: self.disks.len(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn label_of(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }
}

/// One vertex per disk, an edge for every intersecting pair.
pub fn intersection_graph(rep: &Representation) -> Graph {
    let n = rep.len();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if disks_intersect(&rep.disks[u], &rep.disks[v]) {
                g.add_edge(u as u32, v as u32);
            }
        }
    }
    g
}

/// The first adjacency disagreement between a representation and a claimed
/// graph, with the exact comparison that decided it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mismatch {
    pub pair: (u32, u32),
    pub expected_edge: bool,
    /// Squared center distance of the pair.
    pub distance2: Rational,
    /// Squared sum of the radii.
    pub radius_sum2: Rational,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pair ({}, {}): claimed {}, but dist^2 = {} vs (r+r')^2 = {}",
            self.pair.0,
            self.pair.1,
            if self.expected_edge { "edge" } else { "non-edge" },
            format_rational(&self.distance2),
            format_rational(&self.radius_sum2),
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("representation has {disks} disks but graph has {vertices} vertices")]
pub struct SizeMismatch {
    pub disks: usize,
    pub vertices: usize,
}

/// Checks `intersection_graph(rep) == claimed`, reporting the first
/// mismatched pair (lexicographic order) on failure.
pub fn verify_representation(
    rep: &Representation,
    claimed: &Graph,
) -> Result<Result<(), Mismatch>, SizeMismatch> {
    if rep.len() != claimed.vertex_count() {
        return Err(SizeMismatch {
            disks: rep.len(),
            vertices: claimed.vertex_count(),
        });
    }
    let n = rep.len();
    for u in 0..n {
        for v in u + 1..n {
            let a = &rep.disks[u];
            let b = &rep.disks[v];
            let has = disks_intersect(a, b);
            let want = claimed.has_edge(u as u32, v as u32);
            if has != want {
                let s = &a.radius + &b.radius;
                return Ok(Err(Mismatch {
                    pair: (u as u32, v as u32),
                    expected_edge: want,
                    distance2: a.center.distance2(&b.center),
                    radius_sum2: &s * &s,
                }));
            }
        }
    }
    Ok(Ok(()))
}
