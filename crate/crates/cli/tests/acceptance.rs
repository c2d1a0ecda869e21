//! Acceptance suite: one test per criterion, each printing a PASS line after
//! asserting its property at zero tolerance.
//!
//! The shared corpus holds three instance families solved exactly and
//! checked against the brute-force oracle:
//!   (a) random disk representations with up to 18 disks and random rational
//!       centers/radii,
//!   (b) every cycle-union build plan with total length at most 16,
//!   (c) co-2-subdivisions of random graphs with at most 6 vertices.

use disk_clique::fmt::emit_graph;
use disk_clique::geom::{
    audit_two_odd_cycles, build_co_cycles_representation, intersection_graph, make_proper,
    collinear, perturb_general_position, plan_target_graph, verify_representation, BuildPlan,
    Disk, Point, Representation,
};
use disk_clique::graph::{
    brute_force_max_clique, co_two_subdivision, Graph, DEFAULT_ORACLE_LIMIT,
};
use disk_clique::rat::{rat, ratio, Rational};
use disk_clique::solver::{
    solve_max_clique, SolveConfig, SolveReport, TraceEvent,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use std::process::Command;
use std::sync::LazyLock;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Family {
    RandomDisks,
    Builder,
    CoTwoSubdivision,
}

struct Instance {
    label: String,
    family: Family,
    graph: Graph,
}

struct Corpus {
    instances: Vec<Instance>,
    exact_reports: Vec<SolveReport>,
    oracle_values: Vec<Rational>,
}

static CORPUS: LazyLock<Corpus> = LazyLock::new(build_corpus);

fn random_disk_instance(rng: &mut StdRng) -> Graph {
    let n = rng.gen_range(2..=18);
    let spread = rng.gen_range(2i64..=5); // controls density
    let disks: Vec<Disk> = (0..n)
        .map(|_| {
            Disk::new(
                Point::new(
                    ratio(rng.gen_range(-40 * spread..=40 * spread), rng.gen_range(3..=13)),
                    ratio(rng.gen_range(-40 * spread..=40 * spread), rng.gen_range(3..=13)),
                ),
                ratio(rng.gen_range(4..=40), rng.gen_range(2..=7)),
            )
            .unwrap()
        })
        .collect();
    intersection_graph(&Representation::new(disks).unwrap())
}

/// Even-part multisets (parts >= 4, even) with sums up to `max_sum`.
fn even_multisets(max_sum: usize) -> Vec<Vec<usize>> {
    fn rec(min_part: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let mut part = min_part;
        while part <= remaining {
            cur.push(part);
            out.push(cur.clone());
            rec(part, remaining - part, cur, out);
            cur.pop();
            part += 2;
        }
    }
    let mut out = vec![vec![]];
    rec(4, max_sum, &mut vec![], &mut out);
    out
}

fn builder_plans(total_cap: usize, odd_choices: &[usize]) -> Vec<BuildPlan> {
    let mut plans = Vec::new();
    for evens in even_multisets(total_cap) {
        let used: usize = evens.iter().sum();
        for odd in std::iter::once(None).chain(odd_choices.iter().map(|&l| Some(l))) {
            let odds: Vec<usize> = odd.into_iter().collect();
            if evens.is_empty() && odds.is_empty() {
                continue;
            }
            if used + odds.first().copied().unwrap_or(0) > total_cap {
                continue;
            }
            plans.push(BuildPlan::new(evens.clone(), odds).unwrap());
        }
    }
    plans
}

fn random_small_graph(rng: &mut StdRng, max_n: usize, max_m: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let mut g = Graph::new(n);
    let mut pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .collect();
    // deterministic shuffle
    for i in (1..pairs.len()).rev() {
        let j = rng.gen_range(0..=i);
        pairs.swap(i, j);
    }
    let m = rng.gen_range(1..=max_m.min(pairs.len()));
    for &(u, v) in pairs.iter().take(m) {
        g.add_edge(u, v);
    }
    g
}

fn build_corpus() -> Corpus {
    let mut instances = Vec::new();
    let mut rng = StdRng::seed_from_u64(0xD15C);

    for i in 0..700 {
        instances.push(Instance {
            label: format!("random-disks-{i}"),
            family: Family::RandomDisks,
            graph: random_disk_instance(&mut rng),
        });
    }

    for plan in builder_plans(16, &[3, 5, 7, 9, 11, 13, 15]) {
        let rep = build_co_cycles_representation(&plan)
            .unwrap_or_else(|e| panic!("builder failed for {plan:?}: {e}"));
        let g = intersection_graph(&rep);
        assert_eq!(g, plan_target_graph(&plan));
        instances.push(Instance {
            label: format!(
                "builder-{:?}+{:?}",
                plan.even_lengths(),
                plan.odd_length()
            ),
            family: Family::Builder,
            graph: g,
        });
    }

    // always include the flagship non-disk instance
    instances.push(Instance {
        label: "co2sub-C3+C3".into(),
        family: Family::CoTwoSubdivision,
        graph: co_two_subdivision(&Graph::disjoint_union(&[Graph::cycle(3), Graph::cycle(3)])),
    });
    for i in 0..260 {
        let g = random_small_graph(&mut rng, 6, 9);
        instances.push(Instance {
            label: format!("co2sub-{i}"),
            family: Family::CoTwoSubdivision,
            graph: co_two_subdivision(&g),
        });
    }

    assert!(instances.len() >= 1000, "corpus has {}", instances.len());

    let cfg = SolveConfig::exact();
    let (exact_reports, oracle_values): (Vec<_>, Vec<_>) = instances
        .par_iter()
        .map(|inst| {
            let report = solve_max_clique(&inst.graph, &cfg);
            let oracle = brute_force_max_clique(&inst.graph, DEFAULT_ORACLE_LIMIT)
                .unwrap_or_else(|e| panic!("oracle refused {}: {e}", inst.label));
            (report, oracle.weight)
        })
        .unzip();

    Corpus {
        instances,
        exact_reports,
        oracle_values,
    }
}

fn cli() -> Command {
    Command::new(env!("CARGO_BIN_EXE_disk-clique"))
}

#[test]
fn criterion_1_exact_solver_equals_oracle() {
    let corpus = &*CORPUS;
    for ((inst, report), oracle) in corpus
        .instances
        .iter()
        .zip(&corpus.exact_reports)
        .zip(&corpus.oracle_values)
    {
        assert!(report.optimal, "{} was not solved to optimality", inst.label);
        assert_eq!(
            &report.value, oracle,
            "solver disagrees with oracle on {}",
            inst.label
        );
        assert!(inst.graph.is_clique(&report.clique));
    }

    // End-to-end spot check through the binary on a sample.
    let dir = tempfile::tempdir().unwrap();
    for (idx, inst) in corpus.instances.iter().enumerate().step_by(211) {
        let path = dir.path().join(format!("inst{idx}.graph"));
        std::fs::write(&path, emit_graph(&inst.graph)).unwrap();
        let out = cli()
            .args(["solve", path.to_str().unwrap(), "--mode", "exact"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", inst.label);
        let doc: serde_json::Value =
            serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
        assert_eq!(
            doc["value"].as_str().unwrap(),
            disk_clique::rat::format_rational(&corpus.oracle_values[idx])
        );
    }

    println!(
        "criterion 1: PASS ({} instances, exact value == oracle value on all)",
        corpus.instances.len()
    );
}

#[test]
fn criterion_2_structural_theorem_holds_everywhere() {
    // (i) on complement-of-disk instances the case (iii) precondition holds
    // at every frontier the solver visited.
    let corpus = &*CORPUS;
    let mut frontiers_with_odd_cycles = 0usize;
    for (inst, report) in corpus.instances.iter().zip(&corpus.exact_reports) {
        if inst.family == Family::CoTwoSubdivision {
            continue; // those are not complements of disk graphs
        }
        for event in &report.trace {
            if let TraceEvent::Frontier {
                odd_girth: Some(_),
                residual_bipartite,
                ..
            } = event
            {
                frontiers_with_odd_cycles += 1;
                assert_eq!(
                    *residual_bipartite,
                    Some(true),
                    "case (iii) precondition failed on {}",
                    inst.label
                );
            }
        }
        assert!(report.certificate.is_none(), "{}", inst.label);
    }
    assert!(frontiers_with_odd_cycles > 0, "check never fired");

    // (ii) the parity audit finds a violated pair on 100 random placements
    // of every odd cycle pair with lengths in {3, 5, 7, 9}.
    let lengths = [3usize, 5, 7, 9];
    let mut audits = 0usize;
    let mut rng = StdRng::seed_from_u64(0xA0D1);
    for (i, &la) in lengths.iter().enumerate() {
        for &lb in &lengths[i..] {
            let mut done = 0;
            while done < 100 {
                let c1: Vec<Point> = (0..la)
                    .map(|_| {
                        Point::new(
                            ratio(rng.gen_range(-8000..8000), 1009),
                            ratio(rng.gen_range(-8000..8000), 997),
                        )
                    })
                    .collect();
                let shift = rng.gen_range(-20_000..20_000);
                let c2: Vec<Point> = (0..lb)
                    .map(|_| {
                        Point::new(
                            ratio(shift + rng.gen_range(-8000..8000), 1013),
                            ratio(rng.gen_range(-8000..8000), 1019),
                        )
                    })
                    .collect();
                match audit_two_odd_cycles(&c1, &c2) {
                    Ok(violation) => {
                        let ledger = &violation.parity_ledger;
                        for row in ledger.cycle1.iter().chain(&ledger.cycle2) {
                            assert_eq!(row.line_hits_other % 2, 0);
                        }
                        assert_eq!(ledger.sum_c() % 2, 0);
                        assert_eq!(ledger.sum_c(), ledger.sum_c_primed());
                        assert_eq!(ledger.sum_b(), ledger.sum_a_primed());
                        assert_eq!(ledger.sum_b_primed(), ledger.sum_a());
                        done += 1;
                        audits += 1;
                    }
                    // degenerate random placement: resample
                    Err(_) => continue,
                }
            }
        }
    }
    assert_eq!(audits, 1000);
    println!(
        "criterion 2: PASS ({frontiers_with_odd_cycles} frontiers show a bipartite residual; 1000/1000 audits violated)"
    );
}

#[test]
fn criterion_3_builder_succeeds_on_the_full_sweep() {
    // Every even multiset summing to at most 40, joined with each odd length
    // in {3, 5, 7, 9, 11}; built and verified exactly.
    let mut plans = Vec::new();
    for evens in even_multisets(40) {
        for odd in [3usize, 5, 7, 9, 11] {
            plans.push(BuildPlan::new(evens.clone(), vec![odd]).unwrap());
        }
    }
    let total = plans.len();
    plans.par_iter().for_each(|plan| {
        let rep = build_co_cycles_representation(plan)
            .unwrap_or_else(|e| panic!("builder failed for {plan:?}: {e}"));
        match verify_representation(&rep, &plan_target_graph(plan)).unwrap() {
            Ok(()) => {}
            Err(m) => panic!("verification failed for {plan:?}: {m}"),
        }
    });

    // The binary path: a sample of plans end to end, plus every two-odd
    // request refused with exit 65.
    let dir = tempfile::tempdir().unwrap();
    for (evens, odd) in [("4", "3"), ("4,6", "5"), ("10", "11"), ("4,4,4", "9")] {
        let disks = dir.path().join(format!("rep-{evens}-{odd}.disks"));
        let out = cli()
            .args([
                "build-rep",
                "--even",
                evens,
                "--odd",
                odd,
                "--out",
                disks.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "build-rep {evens}+{odd}");
        let lens: Vec<usize> = evens.split(',').map(|s| s.parse().unwrap()).collect();
        let plan = BuildPlan::new(lens, vec![odd.parse().unwrap()]).unwrap();
        let target = dir.path().join(format!("target-{evens}-{odd}.graph"));
        std::fs::write(&target, emit_graph(&plan_target_graph(&plan))).unwrap();
        let verify = cli()
            .args([
                "verify-rep",
                disks.to_str().unwrap(),
                target.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(verify.status.code(), Some(0), "verify-rep {evens}+{odd}");
    }
    let odd_lengths = [3, 5, 7, 9, 11];
    for (i, a) in odd_lengths.iter().enumerate() {
        for b in &odd_lengths[i..] {
            let out = cli()
                .args(["build-rep", "--even", "4", "--odd", &format!("{a},{b}")])
                .output()
                .unwrap();
            assert_eq!(out.status.code(), Some(65), "two odds {a},{b}");
        }
    }
    println!("criterion 3: PASS ({total} plans built and verified; two-odd requests exit 65)");
}

#[test]
fn criterion_4_triangle_gadgets_match_co_two_subdivisions() {
    use disk_clique::hardness::build_triangle_gadget;

    // the flagship identity first: C3 + C3 realizes the complement of
    // C9 + C9 with 18 vertices and (18 choose 2) - 27 + ... = 135 edges
    let c3c3 = Graph::disjoint_union(&[Graph::cycle(3), Graph::cycle(3)]);
    let gadget = build_triangle_gadget(&c3c3).unwrap();
    let h = gadget.intersection_graph();
    assert_eq!(h.vertex_count(), 18);
    assert_eq!(h.edge_count(), 135);
    assert_eq!(h, co_two_subdivision(&c3c3));

    let mut rng = StdRng::seed_from_u64(0x6AD6);
    let graphs: Vec<Graph> = (0..200).map(|_| random_small_graph(&mut rng, 6, 10)).collect();
    graphs.par_iter().enumerate().for_each(|(i, g)| {
        let gadget =
            build_triangle_gadget(g).unwrap_or_else(|e| panic!("gadget {i} failed: {e}"));
        let want = co_two_subdivision(g);
        assert_eq!(gadget.intersection_graph(), want, "gadget {i}");
        assert_eq!(gadget.target(), &want, "gadget {i} target");
    });
    println!("criterion 4: PASS (C3+C3 plus 200 seeded graphs, exact graph equality)");
}

#[test]
fn criterion_5_qptas_bound_and_thread_determinism() {
    let corpus = &*CORPUS;
    let eps = ratio(1, 10);
    corpus
        .instances
        .par_iter()
        .zip(&corpus.oracle_values)
        .for_each(|(inst, opt)| {
            let sequential = solve_max_clique(
                &inst.graph,
                &SolveConfig::qptas(eps.clone()).with_parallel(false),
            );
            let parallel = solve_max_clique(
                &inst.graph,
                &SolveConfig::qptas(eps.clone()).with_parallel(true),
            );
            assert_eq!(sequential, parallel, "thread nondeterminism on {}", inst.label);
            let bound = sequential.approx_bound.as_ref().unwrap();
            assert!(
                sequential.value <= *opt,
                "{}: value exceeds optimum",
                inst.label
            );
            assert!(
                sequential.value.clone() + bound.cover_weight.clone() >= *opt,
                "{}: additive bound violated (value {}, bound {}, opt {})",
                inst.label,
                sequential.value,
                bound.cover_weight,
                opt
            );
        });
    println!(
        "criterion 5: PASS ({} instances: OPT - |X| <= value <= OPT, parallel == sequential bit for bit)",
        corpus.instances.len()
    );
}

#[test]
fn criterion_6_enumeration_shape_matches_the_bounds() {
    let corpus = &*CORPUS;
    let mut checked_frontiers = 0usize;
    let mut recounted = 0usize;
    for (inst, report) in corpus.instances.iter().zip(&corpus.exact_reports) {
        if inst.family != Family::Builder {
            continue;
        }
        for event in &report.trace {
            if let TraceEvent::Frontier {
                odd_girth: Some(c),
                max_degree,
                closed_neighborhood: Some(k),
                ..
            } = event
            {
                assert!(
                    *k <= c * (max_degree - 1),
                    "{}: |N[C]| = {k} exceeds c(delta-1) = {} * {}",
                    inst.label,
                    c,
                    max_degree - 1
                );
                checked_frontiers += 1;
            }
            if let TraceEvent::Enumerated {
                set_size, subsets, ..
            } = event
            {
                assert!(*set_size < 64 && *subsets <= 1u64 << set_size);
                assert!(*subsets >= 1);
            }
        }

        // Unbranched runs expose the frontier graph: recount the pruned
        // enumeration independently as the number of independent subsets of
        // the chosen set in the complement.
        let branched = report
            .trace
            .iter()
            .any(|e| matches!(e, TraceEvent::BranchOn { .. }));
        if branched {
            continue;
        }
        let h = inst.graph.complement();
        for event in &report.trace {
            if let TraceEvent::Enumerated {
                route,
                set_size,
                subsets,
            } = event
            {
                let chosen: Vec<u32> = match route {
                    disk_clique::solver::Route::NeighborhoodEnumeration => {
                        let cycle = disk_clique::graph::shortest_odd_cycle(&h).unwrap();
                        h.closed_neighborhood(cycle.vertices()).into_iter().collect()
                    }
                    disk_clique::solver::Route::CoverEnumeration => {
                        disk_clique::graph::odd_cycle_cover(&h).vertices
                    }
                    _ => continue,
                };
                assert_eq!(chosen.len(), *set_size, "{}", inst.label);
                let independent_subsets = count_independent_subsets(&h, &chosen);
                assert_eq!(independent_subsets, *subsets, "{}", inst.label);
                recounted += 1;
            }
        }
    }
    assert!(checked_frontiers > 0 && recounted > 0);
    println!(
        "criterion 6: PASS ({checked_frontiers} frontiers satisfy |N[C]| <= c(delta-1); {recounted} enumerations recounted exactly)"
    );
}

fn count_independent_subsets(h: &Graph, set: &[u32]) -> u64 {
    fn rec(h: &Graph, set: &[u32], idx: usize, chosen: &mut Vec<u32>) -> u64 {
        if idx == set.len() {
            return 1;
        }
        let mut total = rec(h, set, idx + 1, chosen);
        let v = set[idx];
        if chosen.iter().all(|&u| !h.has_edge(u, v)) {
            chosen.push(v);
            total += rec(h, set, idx + 1, chosen);
            chosen.pop();
        }
        total
    }
    rec(h, set, 0, &mut Vec::new())
}

#[test]
fn criterion_7_normalizers_preserve_graphs_and_general_position() {
    let mut rng = StdRng::seed_from_u64(0x70D0);
    for trial in 0..200 {
        let n = rng.gen_range(1..=20);
        let disks: Vec<Disk> = (0..n)
            .map(|_| {
                Disk::new(
                    Point::new(rat(rng.gen_range(-12..=12)), rat(rng.gen_range(-12..=12))),
                    rat(rng.gen_range(1..=5)),
                )
                .unwrap()
            })
            .collect();
        let rep = Representation::new(disks).unwrap();
        let graph = intersection_graph(&rep);
        let proper = make_proper(&rep);
        assert_eq!(
            verify_representation(&proper, &graph).unwrap(),
            Ok(()),
            "make_proper changed the graph on trial {trial}"
        );
        let general = perturb_general_position(&proper)
            .unwrap_or_else(|e| panic!("perturb rejected a proper representation: {e}"));
        assert_eq!(
            verify_representation(&general, &graph).unwrap(),
            Ok(()),
            "perturb changed the graph on trial {trial}"
        );
        let centers: Vec<Point> = general.disks().iter().map(|d| d.center.clone()).collect();
        for i in 0..centers.len() {
            for j in i + 1..centers.len() {
                for k in j + 1..centers.len() {
                    assert!(
                        !collinear(&centers[i], &centers[j], &centers[k]),
                        "collinear triple after perturbation on trial {trial}"
                    );
                }
            }
        }
    }
    println!("criterion 7: PASS (200 representations normalized, graphs unchanged, no collinear triples)");
}
