//! Machine-readable solve reports: a stable JSON document with deterministic
//! key order. Rational values are serialized as `p/q` strings so nothing is
//! rounded. The schema is documented in the repository README.

use crate::graph::Graph;
use crate::rat::{format_rational, Rational};
use crate::solver::{Mode, Route, SolveConfig, SolveReport, TraceEvent};
use serde::Serialize;

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ReportDoc {
    pub instance: InstanceDoc,
    pub mode: String,
    pub value: String,
    pub optimal: bool,
    pub clique: Vec<u32>,
    pub stats: StatsDoc,
    pub approx_bound: Option<BoundDoc>,
    pub certificate: Option<CertificateDoc>,
    pub trace: Vec<TraceDoc>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct InstanceDoc {
    pub vertices: usize,
    pub edges: usize,
    pub weighted: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct StatsDoc {
    pub complement_max_degree: usize,
    pub complement_odd_girth: Option<usize>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct BoundDoc {
    pub cover_size: usize,
    pub cover_weight: String,
    pub requested_eps: Option<String>,
}

/// Two vertex-disjoint anticomplete odd cycles in the complement: the input
/// is not a disk graph.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CertificateDoc {
    pub cycle_a: Vec<u32>,
    pub cycle_b: Vec<u32>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceDoc {
    BranchOn {
        vertex: u32,
        degree: usize,
    },
    Frontier {
        n: usize,
        max_degree: usize,
        odd_girth: Option<usize>,
        cover_size: usize,
        cover_rounds: usize,
        closed_neighborhood: Option<usize>,
        residual_bipartite: Option<bool>,
        route: String,
    },
    Enumerated {
        route: String,
        set_size: usize,
        subsets: u64,
    },
    CoverDeleted {
        cover_size: usize,
        cover_weight: String,
    },
    CapExceeded {
        cover_size: usize,
        closed_neighborhood: Option<usize>,
    },
    EvidenceFound {
        cycle_a_len: usize,
        cycle_b_len: usize,
    },
}

fn route_name(route: Route) -> String {
    match route {
        Route::Bipartite => "bipartite",
        Route::CoverEnumeration => "cover_enumeration",
        Route::NeighborhoodEnumeration => "neighborhood_enumeration",
        Route::CoverDeletion => "cover_deletion",
    }
    .to_string()
}

fn mode_name(mode: &Mode) -> String {
    match mode {
        Mode::Exact => "exact",
        Mode::Approx { .. } => "approx",
        Mode::Qptas { .. } => "qptas",
    }
    .to_string()
}

fn rational_string(r: &Rational) -> String {
    format_rational(r)
}

pub fn report_to_doc(g: &Graph, cfg: &SolveConfig, report: &SolveReport) -> ReportDoc {
    ReportDoc {
        instance: InstanceDoc {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            weighted: g.is_weighted(),
        },
        mode: mode_name(&cfg.mode),
        value: rational_string(&report.value),
        optimal: report.optimal,
        clique: report.clique.clone(),
        stats: StatsDoc {
            complement_max_degree: report.stats.complement_max_degree,
            complement_odd_girth: report.stats.complement_odd_girth,
        },
        approx_bound: report.approx_bound.as_ref().map(|b| BoundDoc {
            cover_size: b.cover_size,
            cover_weight: rational_string(&b.cover_weight),
            requested_eps: b.requested_eps.as_ref().map(rational_string),
        }),
        certificate: report.certificate.as_ref().map(|c| CertificateDoc {
            cycle_a: c.cycle_a.vertices().to_vec(),
            cycle_b: c.cycle_b.vertices().to_vec(),
        }),
        trace: report.trace.iter().map(trace_to_doc).collect(),
    }
}

fn trace_to_doc(event: &TraceEvent) -> TraceDoc {
    match event {
        TraceEvent::BranchOn { vertex, degree } => TraceDoc::BranchOn {
            vertex: *vertex,
            degree: *degree,
        },
        TraceEvent::Frontier {
            n,
            max_degree,
            odd_girth,
            cover_size,
            cover_rounds,
            closed_neighborhood,
            residual_bipartite,
            route,
        } => TraceDoc::Frontier {
            n: *n,
            max_degree: *max_degree,
            odd_girth: *odd_girth,
            cover_size: *cover_size,
            cover_rounds: *cover_rounds,
            closed_neighborhood: *closed_neighborhood,
            residual_bipartite: *residual_bipartite,
            route: route_name(*route),
        },
        TraceEvent::Enumerated {
            route,
            set_size,
            subsets,
        } => TraceDoc::Enumerated {
            route: route_name(*route),
            set_size: *set_size,
            subsets: *subsets,
        },
        TraceEvent::CoverDeleted {
            cover_size,
            cover_weight,
        } => TraceDoc::CoverDeleted {
            cover_size: *cover_size,
            cover_weight: rational_string(cover_weight),
        },
        TraceEvent::CapExceeded {
            cover_size,
            closed_neighborhood,
        } => TraceDoc::CapExceeded {
            cover_size: *cover_size,
            closed_neighborhood: *closed_neighborhood,
        },
        TraceEvent::EvidenceFound {
            cycle_a_len,
            cycle_b_len,
        } => TraceDoc::EvidenceFound {
            cycle_a_len: *cycle_a_len,
            cycle_b_len: *cycle_b_len,
        },
    }
}

pub fn report_to_json(g: &Graph, cfg: &SolveConfig, report: &SolveReport) -> String {
    serde_json::to_string_pretty(&report_to_doc(g, cfg, report))
        .expect("report serialization cannot fail")
}
