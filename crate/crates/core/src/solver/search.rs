//! The search engine: exact branching above a degree threshold, structural
//! frontier handling below it, and pruned independent-subset enumeration.
//!
//! Everything here is deterministic under parallelism: worker tasks see only
//! immutable subproblem views, results merge by weight with lexicographic
//! tie-breaking, and traces are assembled in a fixed order (branch event,
//! include-side, exclude-side), so one thread or many produce the same
//! report bit for bit.

use super::{CapExceeded, Mode, NotCoDiskEvidence, Route, SolveConfig, ThresholdPolicy, TraceEvent};
use crate::bits::VertexBits;
use crate::graph::{
    is_bipartite, max_independent_set_bipartite, mwis_bipartite_masked, odd_cycle_cover,
    shortest_odd_cycle, Coloring, Graph, OddCycle,
};
use crate::rat::Rational;
use num_traits::Zero;

#[cfg(feature = "parallel")]
fn maybe_join<A, B, RA, RB>(parallel: bool, a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    if parallel {
        rayon::join(a, b)
    } else {
        (a(), b())
    }
}

#[cfg(not(feature = "parallel"))]
fn maybe_join<A, B, RA, RB>(_parallel: bool, a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA,
    B: FnOnce() -> RB,
{
    (a(), b())
}

#[derive(Clone, Copy)]
enum Threshold {
    /// Branch while degree^3 >= original n.
    CubeRoot(usize),
    /// Branch while degree >= the precomputed float threshold.
    AtLeast(f64),
    Fixed(usize),
}

impl Threshold {
    fn from_policy(policy: ThresholdPolicy, n_original: usize) -> Threshold {
        match policy {
            ThresholdPolicy::WinWinCubeRoot => Threshold::CubeRoot(n_original),
            ThresholdPolicy::QptasLog4 => {
                let n = n_original as f64;
                let thr = if n_original <= 1 {
                    1.0
                } else {
                    (n / n.ln().powi(4)).max(1.0)
                };
                Threshold::AtLeast(thr)
            }
            ThresholdPolicy::Fixed(k) => Threshold::Fixed(k),
        }
    }

    fn met_by(&self, degree: usize) -> bool {
        match *self {
            Threshold::CubeRoot(n) => degree.pow(3) >= n,
            Threshold::AtLeast(t) => degree as f64 >= t,
            Threshold::Fixed(k) => degree >= k,
        }
    }
}

pub(super) struct Outcome {
    pub set: Vec<u32>,
    pub weight: Rational,
    pub uncapped: bool,
    pub trace: Vec<TraceEvent>,
    pub evidence: Option<NotCoDiskEvidence>,
    pub max_cover_size: usize,
    pub max_cover_weight: Rational,
}

impl Outcome {
    fn leaf(set: Vec<u32>, weight: Rational) -> Outcome {
        Outcome {
            set,
            weight,
            uncapped: true,
            trace: Vec::new(),
            evidence: None,
            max_cover_size: 0,
            max_cover_weight: Rational::zero(),
        }
    }
}

struct Ctx<'a> {
    h: &'a Graph,
    adj: Vec<VertexBits>,
    threshold: Threshold,
    cap: u64,
    parallel: bool,
    exact_frontier: bool,
}

pub(super) fn run(h: &Graph, cfg: &SolveConfig) -> Outcome {
    let ctx = Ctx {
        h,
        adj: h.adjacency_bits(),
        threshold: Threshold::from_policy(cfg.threshold, h.vertex_count()),
        cap: cfg.enumeration_cap,
        parallel: cfg.parallel,
        exact_frontier: matches!(cfg.mode, Mode::Exact),
    };
    search(&ctx, VertexBits::full(h.vertex_count()), 0)
}

/// Prefer higher weight; on equal weight the lexicographically smaller
/// vertex set wins. Total order, so parallel merges are order-independent.
fn better(candidate: &(Vec<u32>, Rational), incumbent: &(Vec<u32>, Rational)) -> bool {
    match candidate.1.cmp(&incumbent.1) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => candidate.0 < incumbent.0,
    }
}

fn search(ctx: &Ctx, alive: VertexBits, depth: usize) -> Outcome {
    // Highest alive degree, lowest id on ties.
    let mut pick: Option<(u32, usize)> = None;
    for v in alive.iter() {
        let deg = ctx.adj[v as usize].intersection_count(&alive);
        if pick.is_none() || deg > pick.unwrap().1 {
            pick = Some((v, deg));
        }
    }
    let Some((v, deg)) = pick else {
        return Outcome::leaf(Vec::new(), Rational::zero());
    };
    if !ctx.threshold.met_by(deg) {
        return frontier(ctx, &alive);
    }

    // Branch: v in the independent set (drop N[v]) or v discarded.
    let mut include_alive = alive.clone();
    include_alive.remove(v);
    include_alive.subtract(&ctx.adj[v as usize]);
    let mut exclude_alive = alive;
    exclude_alive.remove(v);
    let go_parallel = ctx.parallel && depth < 12;
    let (mut include, exclude) = maybe_join(
        go_parallel,
        || search(ctx, include_alive, depth + 1),
        || search(ctx, exclude_alive, depth + 1),
    );
    let pos = include.set.partition_point(|&u| u < v);
    include.set.insert(pos, v);
    include.weight += ctx.h.weight(v);

    let (best_set, best_weight) = if better(
        &(include.set.clone(), include.weight.clone()),
        &(exclude.set.clone(), exclude.weight.clone()),
    ) {
        (include.set, include.weight)
    } else {
        (exclude.set, exclude.weight)
    };
    let mut trace = vec![TraceEvent::BranchOn { vertex: v, degree: deg }];
    trace.extend(include.trace);
    trace.extend(exclude.trace);
    Outcome {
        set: best_set,
        weight: best_weight,
        uncapped: include.uncapped && exclude.uncapped,
        trace,
        evidence: include.evidence.or(exclude.evidence),
        max_cover_size: include.max_cover_size.max(exclude.max_cover_size),
        max_cover_weight: include.max_cover_weight.max(exclude.max_cover_weight),
    }
}

fn frontier(ctx: &Ctx, alive: &VertexBits) -> Outcome {
    let verts = alive.to_vec();
    let sub = ctx.h.induced(&verts);
    let n = sub.vertex_count();
    let max_degree = sub.max_degree();
    let to_original = |locals: &[u32]| -> Vec<u32> {
        let mut out: Vec<u32> = locals.iter().map(|&l| verts[l as usize]).collect();
        out.sort_unstable();
        out
    };

    if let Some(coloring) = is_bipartite(&sub) {
        let (locals, weight) =
            mwis_bipartite_masked(&sub, &coloring, &VertexBits::full(n));
        let mut out = Outcome::leaf(to_original(&locals), weight);
        out.trace.push(TraceEvent::Frontier {
            n,
            max_degree,
            odd_girth: None,
            cover_size: 0,
            cover_rounds: 0,
            closed_neighborhood: None,
            residual_bipartite: None,
            route: Route::Bipartite,
        });
        return out;
    }

    let cover = odd_cycle_cover(&sub);
    let cycle = shortest_odd_cycle(&sub).expect("frontier graph is not bipartite");
    let closed: Vec<u32> = sub
        .closed_neighborhood(cycle.vertices())
        .into_iter()
        .collect();
    let residual: Vec<u32> = (0..n as u32).filter(|u| !closed.contains(u)).collect();
    let residual_graph = sub.induced(&residual);
    let residual_bipartite = is_bipartite(&residual_graph).is_some();

    // Two anticomplete odd cycles certify that the instance is no disk
    // graph; record them whether or not the neighborhood route was going to
    // be used.
    let evidence = if residual_bipartite {
        None
    } else {
        let second = shortest_odd_cycle(&residual_graph).expect("residual is not bipartite");
        let lift_a: Vec<u32> = cycle.vertices().iter().map(|&l| verts[l as usize]).collect();
        let lift_b: Vec<u32> = second
            .vertices()
            .iter()
            .map(|&l| verts[residual[l as usize] as usize])
            .collect();
        Some(NotCoDiskEvidence {
            cycle_a: OddCycle::from_walk(ctx.h, lift_a),
            cycle_b: OddCycle::from_walk(ctx.h, lift_b),
        })
    };

    let fits = |k: usize| k < 64 && (1u64 << k) <= ctx.cap;
    let cover_ok = fits(cover.vertices.len());
    let closed_ok = fits(closed.len()) && residual_bipartite;
    let route = if !ctx.exact_frontier {
        Route::CoverDeletion
    } else if closed_ok && (!cover_ok || closed.len() <= cover.vertices.len()) {
        Route::NeighborhoodEnumeration
    } else if cover_ok {
        Route::CoverEnumeration
    } else {
        Route::CoverDeletion
    };

    let mut trace = vec![TraceEvent::Frontier {
        n,
        max_degree,
        odd_girth: Some(cycle.len()),
        cover_size: cover.vertices.len(),
        cover_rounds: cover.rounds,
        closed_neighborhood: Some(closed.len()),
        residual_bipartite: Some(residual_bipartite),
        route,
    }];
    if let Some(ev) = &evidence {
        trace.push(TraceEvent::EvidenceFound {
            cycle_a_len: ev.cycle_a.len(),
            cycle_b_len: ev.cycle_b.len(),
        });
    }

    let mut out = match route {
        Route::Bipartite => unreachable!("handled above"),
        Route::NeighborhoodEnumeration => {
            let (locals, weight, subsets) =
                enumerate_exact(&sub, &closed, ctx.parallel);
            trace.push(TraceEvent::Enumerated {
                route,
                set_size: closed.len(),
                subsets,
            });
            Outcome::leaf(to_original(&locals), weight)
        }
        Route::CoverEnumeration => {
            let (locals, weight, subsets) =
                enumerate_exact(&sub, &cover.vertices, ctx.parallel);
            trace.push(TraceEvent::Enumerated {
                route,
                set_size: cover.vertices.len(),
                subsets,
            });
            Outcome::leaf(to_original(&locals), weight)
        }
        Route::CoverDeletion => {
            let (locals, weight) = cover_deletion(&sub, &cover.vertices);
            let cover_weight: Rational =
                cover.vertices.iter().map(|&u| sub.weight(u)).sum();
            if ctx.exact_frontier {
                trace.push(TraceEvent::CapExceeded {
                    cover_size: cover.vertices.len(),
                    closed_neighborhood: Some(closed.len()),
                });
            }
            trace.push(TraceEvent::CoverDeleted {
                cover_size: cover.vertices.len(),
                cover_weight: cover_weight.clone(),
            });
            let mut o = Outcome::leaf(to_original(&locals), weight);
            o.uncapped = !ctx.exact_frontier;
            o.max_cover_size = cover.vertices.len();
            o.max_cover_weight = cover_weight;
            o
        }
    };
    out.trace = {
        trace.extend(std::mem::take(&mut out.trace));
        trace
    };
    out.evidence = evidence;
    out
}

/// Exact answer on `g` by guessing the optimum's intersection with `set`
/// (pruned to independent prefixes) and finishing each guess with a
/// maximum-weight bipartite solve on what survives. `g - set` must be
/// bipartite. Returns the winner and how many complete subsets were visited.
fn enumerate_exact(g: &Graph, set: &[u32], parallel: bool) -> (Vec<u32>, Rational, u64) {
    let n = g.vertex_count();
    let adj = g.adjacency_bits();
    let mut base_alive = VertexBits::full(n);
    for &v in set {
        base_alive.remove(v);
    }
    let base_graph = g.induced(&base_alive.to_vec());
    let base_coloring =
        is_bipartite(&base_graph).expect("graph minus the enumeration set must be bipartite");
    // Re-index the coloring onto g's own ids so masked solves can use it.
    let mut sides = vec![crate::graph::Side::Left; n];
    for (i, &v) in base_alive.to_vec().iter().enumerate() {
        sides[v as usize] = base_coloring.sides()[i];
    }
    let coloring = Coloring::from_sides(sides);

    struct EnumCtx<'a> {
        g: &'a Graph,
        adj: &'a [VertexBits],
        set: &'a [u32],
        base_alive: &'a VertexBits,
        coloring: &'a Coloring,
        parallel: bool,
    }

    fn rec(
        ctx: &EnumCtx,
        idx: usize,
        chosen: Vec<u32>,
        chosen_weight: Rational,
        blocked: VertexBits,
        depth: usize,
    ) -> ((Vec<u32>, Rational), u64) {
        if idx == ctx.set.len() {
            let mut rest = ctx.base_alive.clone();
            for &c in &chosen {
                rest.subtract(&ctx.adj[c as usize]);
            }
            let (mis, mis_weight) = mwis_bipartite_masked(ctx.g, ctx.coloring, &rest);
            let mut full = chosen;
            full.extend(mis);
            full.sort_unstable();
            return ((full, chosen_weight + mis_weight), 1);
        }
        let v = ctx.set[idx];
        let can_take = !blocked.contains(v);
        if !can_take {
            return rec(ctx, idx + 1, chosen, chosen_weight, blocked, depth + 1);
        }
        let take_chosen = {
            let mut c = chosen.clone();
            c.push(v);
            c
        };
        let take_weight = chosen_weight.clone() + ctx.g.weight(v);
        let mut take_blocked = blocked.clone();
        take_blocked.union_with(&ctx.adj[v as usize]);
        take_blocked.insert(v);
        let go_parallel = ctx.parallel && depth < 6;
        let (skip, take) = maybe_join(
            go_parallel,
            || rec(ctx, idx + 1, chosen, chosen_weight, blocked, depth + 1),
            || rec(ctx, idx + 1, take_chosen, take_weight, take_blocked, depth + 1),
        );
        let count = skip.1 + take.1;
        if better(&take.0, &skip.0) {
            (take.0, count)
        } else {
            (skip.0, count)
        }
    }

    let ctx = EnumCtx {
        g,
        adj: &adj,
        set,
        base_alive: &base_alive,
        coloring: &coloring,
        parallel,
    };
    let ((best, weight), count) = rec(
        &ctx,
        0,
        Vec::new(),
        Rational::zero(),
        VertexBits::empty(n),
        0,
    );
    (best, weight, count)
}

/// Approximation base case: delete the cover, solve the bipartite rest.
fn cover_deletion(g: &Graph, cover: &[u32]) -> (Vec<u32>, Rational) {
    let n = g.vertex_count();
    let mut alive = VertexBits::full(n);
    for &v in cover {
        alive.remove(v);
    }
    let rest_graph = g.induced(&alive.to_vec());
    let coloring = is_bipartite(&rest_graph).expect("cover deletion leaves a bipartite graph");
    let mut sides = vec![crate::graph::Side::Left; n];
    for (i, &v) in alive.to_vec().iter().enumerate() {
        sides[v as usize] = coloring.sides()[i];
    }
    mwis_bipartite_masked(g, &Coloring::from_sides(sides), &alive)
}

// ---------------------------------------------------------------------------
// public single-shot operations
// ---------------------------------------------------------------------------

/// A maximum-weight independent set with its weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MisResult {
    pub set: Vec<u32>,
    pub weight: Rational,
}

/// Exact maximum-weight independent set driver: branch on a highest-degree
/// vertex while one reaches `threshold`, handle sub-threshold graphs through
/// the structural frontier.
pub fn branch_high_degree(h: &Graph, threshold: usize) -> MisResult {
    let cfg = SolveConfig::exact().with_threshold(ThresholdPolicy::Fixed(threshold));
    let out = run(h, &cfg);
    MisResult {
        set: out.set,
        weight: out.weight,
    }
}

/// Exact maximum-weight independent set by exhaustively guessing the
/// optimum's intersection with an odd cycle cover.
pub fn mis_via_occ(h: &Graph, cap: u64) -> Result<MisResult, CapExceeded> {
    let cover = odd_cycle_cover(h);
    let k = cover.vertices.len();
    if k >= 64 || (1u64 << k) > cap {
        return Err(CapExceeded { set_size: k, cap });
    }
    let (set, weight, _) = enumerate_exact(h, &cover.vertices, false);
    Ok(MisResult { set, weight })
}

/// Outcome of the closed-neighborhood route: the exact answer, plus the
/// two-odd-cycles certificate whenever the route's precondition failed and
/// the computation fell back to the cover route.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NccOutcome {
    pub result: MisResult,
    pub evidence: Option<NotCoDiskEvidence>,
}

/// Exact maximum-weight independent set by guessing the optimum's
/// intersection with N[shortest odd cycle]. If deleting that neighborhood
/// does not leave a bipartite graph, the input's complement is provably not
/// a disk graph; the evidence is returned and the cover route supplies the
/// answer.
pub fn mis_via_ncc(h: &Graph, cap: u64) -> Result<NccOutcome, CapExceeded> {
    let Some(cycle) = shortest_odd_cycle(h) else {
        // Bipartite: solve directly.
        let coloring = is_bipartite(h).expect("no odd cycle means bipartite");
        let set = max_independent_set_bipartite(h, &coloring)
            .expect("coloring came from is_bipartite");
        let weight = h.set_weight_of(&set);
        return Ok(NccOutcome {
            result: MisResult { set, weight },
            evidence: None,
        });
    };
    let closed: Vec<u32> = h.closed_neighborhood(cycle.vertices()).into_iter().collect();
    let residual: Vec<u32> = (0..h.vertex_count() as u32)
        .filter(|v| !closed.contains(v))
        .collect();
    let residual_graph = h.induced(&residual);
    if is_bipartite(&residual_graph).is_some() {
        let k = closed.len();
        if k >= 64 || (1u64 << k) > cap {
            return Err(CapExceeded { set_size: k, cap });
        }
        let (set, weight, _) = enumerate_exact(h, &closed, false);
        return Ok(NccOutcome {
            result: MisResult { set, weight },
            evidence: None,
        });
    }
    let second = shortest_odd_cycle(&residual_graph).expect("residual is not bipartite");
    let lifted: Vec<u32> = second
        .vertices()
        .iter()
        .map(|&l| residual[l as usize])
        .collect();
    let evidence = NotCoDiskEvidence {
        cycle_a: cycle,
        cycle_b: OddCycle::from_walk(h, lifted),
    };
    let result = mis_via_occ(h, cap)?;
    Ok(NccOutcome {
        result,
        evidence: Some(evidence),
    })
}
