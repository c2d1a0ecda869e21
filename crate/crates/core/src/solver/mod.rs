//! Maximum (weighted) clique on disk graphs via maximum independent set on
//! the complement.
//!
//! The win-win strategy: while the complement has a vertex of high degree
//! (against the *original* vertex count), branch on it exactly. Below the
//! threshold, either enumerate independent subsets of an odd cycle cover, or
//! of the closed neighborhood of a shortest odd cycle — whichever is
//! a-priori cheaper — and finish each guess with a polynomial bipartite
//! solve. The closed-neighborhood route is available precisely because the
//! complement of a disk graph cannot contain two vertex-disjoint odd cycles
//! with no edges between them; when that impossibility is contradicted, the
//! input was no disk graph, and the solver attaches the two offending cycles
//! as a certificate while still answering exactly through the cover route.

mod search;

use crate::graph::{is_bipartite, shortest_odd_cycle, Graph, OddCycle};
use crate::rat::Rational;
use num_traits::Zero;
use thiserror::Error;

pub use search::{branch_high_degree, mis_via_occ, mis_via_ncc, MisResult, NccOutcome};

pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Mode {
    /// Exact optimum.
    Exact,
    /// Win-win branching with a cover-deletion base; additive error at most
    /// the reported cover weight.
    Approx { eps: Rational },
    /// Same base, but branching at the quasi-polynomial degree threshold
    /// `n / ln^4 n`.
    Qptas { eps: Rational },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ThresholdPolicy {
    /// Branch while some complement degree is at least `n^(1/3)`.
    WinWinCubeRoot,
    /// Branch while some complement degree is at least `n / ln^4 n`.
    QptasLog4,
    Fixed(usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolveConfig {
    pub mode: Mode,
    pub threshold: ThresholdPolicy,
    /// Guard on `2^|set|` enumerations; a frontier whose cheapest set would
    /// exceed this falls back to cover deletion and marks the result
    /// non-optimal.
    pub enumeration_cap: u64,
    /// Hint: explore branches and enumeration prefixes on worker threads.
    /// Parallel and sequential runs return identical reports.
    pub parallel: bool,
}

impl SolveConfig {
    pub fn exact() -> Self {
        SolveConfig {
            mode: Mode::Exact,
            threshold: ThresholdPolicy::WinWinCubeRoot,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            parallel: true,
        }
    }

    pub fn approx(eps: Rational) -> Self {
        SolveConfig {
            mode: Mode::Approx { eps },
            threshold: ThresholdPolicy::WinWinCubeRoot,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            parallel: true,
        }
    }

    pub fn qptas(eps: Rational) -> Self {
        SolveConfig {
            mode: Mode::Qptas { eps },
            threshold: ThresholdPolicy::QptasLog4,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            parallel: true,
        }
    }

    pub fn with_threshold(mut self, policy: ThresholdPolicy) -> Self {
        self.threshold = policy;
        self
    }

    pub fn with_enumeration_cap(mut self, cap: u64) -> Self {
        assert!(cap >= 1);
        self.enumeration_cap = cap;
        self
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }
}

/// Which strategy handled a frontier subproblem.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    /// The subproblem was bipartite; solved outright.
    Bipartite,
    /// Enumerated independent subsets of an odd cycle cover.
    CoverEnumeration,
    /// Enumerated independent subsets of N[shortest odd cycle].
    NeighborhoodEnumeration,
    /// Deleted the cover and solved the bipartite rest (approximation, or
    /// the capped fallback).
    CoverDeletion,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TraceEvent {
    /// Exact branch on a high-degree complement vertex.
    BranchOn { vertex: u32, degree: usize },
    /// A frontier subproblem with its structural measurements: size, max
    /// degree, odd girth, cover size and rounds, |N[C]|, whether the
    /// complement-minus-N[C] residual is bipartite, and the chosen route.
    Frontier {
        n: usize,
        max_degree: usize,
        odd_girth: Option<usize>,
        cover_size: usize,
        cover_rounds: usize,
        closed_neighborhood: Option<usize>,
        residual_bipartite: Option<bool>,
        route: Route,
    },
    /// An executed subset enumeration: the chosen set size and how many
    /// independent subsets were actually visited (pruning skips the rest of
    /// the `2^set_size` space).
    Enumerated {
        route: Route,
        set_size: usize,
        subsets: u64,
    },
    /// A cover-deletion base case: everything the answer can have lost.
    CoverDeleted {
        cover_size: usize,
        cover_weight: Rational,
    },
    /// Both enumeration sets blew the cap; fell back to cover deletion.
    CapExceeded {
        cover_size: usize,
        closed_neighborhood: Option<usize>,
    },
    /// Two disjoint anticomplete odd cycles were found in the complement.
    EvidenceFound { cycle_a_len: usize, cycle_b_len: usize },
}

/// Top-level measurements of the instance (complement side).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InstanceStats {
    pub vertices: usize,
    pub edges: usize,
    pub complement_max_degree: usize,
    pub complement_odd_girth: Option<usize>,
}

/// Two vertex-disjoint, chordless, odd cycles of the complement with no
/// edges between them: a proof the input graph is not a disk graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NotCoDiskEvidence {
    pub cycle_a: OddCycle,
    pub cycle_b: OddCycle,
}

impl NotCoDiskEvidence {
    /// Directly re-checks every claimed property against `h`.
    pub fn verify(&self, h: &Graph) -> bool {
        if !self.cycle_a.is_cycle_of(h)
            || !self.cycle_b.is_cycle_of(h)
            || !self.cycle_a.is_chordless_in(h)
            || !self.cycle_b.is_chordless_in(h)
        {
            return false;
        }
        for &u in self.cycle_a.vertices() {
            for &v in self.cycle_b.vertices() {
                if u == v || h.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Additive guarantee attached to approximation-mode reports: the value is
/// at least the optimum minus the heaviest cover deleted at any base case.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ApproxBound {
    pub cover_size: usize,
    pub cover_weight: Rational,
    pub requested_eps: Option<Rational>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolveReport {
    /// Sorted vertex ids of a clique in the input graph.
    pub clique: Vec<u32>,
    /// Total weight of the clique (its size, for unweighted inputs).
    pub value: Rational,
    /// When true, `value` is the exact optimum.
    pub optimal: bool,
    pub stats: InstanceStats,
    pub trace: Vec<TraceEvent>,
    pub certificate: Option<NotCoDiskEvidence>,
    pub approx_bound: Option<ApproxBound>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("enumeration over {set_size} vertices exceeds the cap of {cap}")]
pub struct CapExceeded {
    pub set_size: usize,
    pub cap: u64,
}

/// Solves maximum weighted clique on `g` by running the win-win search on
/// its complement. No geometric representation is needed.
pub fn solve_max_clique(g: &Graph, cfg: &SolveConfig) -> SolveReport {
    let h = g.complement();
    let stats = InstanceStats {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        complement_max_degree: h.max_degree(),
        complement_odd_girth: shortest_odd_cycle(&h).map(|c| c.len()),
    };
    let outcome = search::run(&h, cfg);

    assert!(
        g.is_clique(&outcome.set),
        "internal error: solver produced a non-clique"
    );
    if let Some(ev) = &outcome.evidence {
        assert!(ev.verify(&h), "internal error: invalid certificate");
    }

    let exact_run = matches!(cfg.mode, Mode::Exact);
    let lossless = outcome.max_cover_weight.is_zero();
    let approx_bound = match &cfg.mode {
        Mode::Exact => None,
        Mode::Approx { eps } | Mode::Qptas { eps } => Some(ApproxBound {
            cover_size: outcome.max_cover_size,
            cover_weight: outcome.max_cover_weight.clone(),
            requested_eps: Some(eps.clone()),
        }),
    };
    SolveReport {
        clique: outcome.set,
        value: outcome.weight,
        optimal: outcome.uncapped && (exact_run || lossless),
        stats,
        trace: outcome.trace,
        certificate: outcome.evidence,
        approx_bound,
    }
}

/// Quasi-polynomial approximation mode: exact branching at the
/// `n / ln^4 n` threshold, cover-deletion base cases, additive bound in the
/// report.
pub fn solve_qptas_mode(g: &Graph, eps: Rational) -> SolveReport {
    solve_max_clique(g, &SolveConfig::qptas(eps))
}

/// Convenience wrapper used by tests and the command-line tool: is `h`
/// bipartite, and if not, what are its structural measurements.
pub fn complement_profile(h: &Graph) -> (Option<usize>, usize) {
    let girth = if is_bipartite(h).is_some() {
        None
    } else {
        shortest_odd_cycle(h).map(|c| c.len())
    };
    (girth, h.max_degree())
}
