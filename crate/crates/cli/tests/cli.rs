//! End-to-end checks of the command-line surface: formats, exit codes,
//! report structure.

use disk_clique::fmt::{emit_disks, emit_graph, parse_disks, parse_graph};
use disk_clique::geom::{build_co_cycles_representation, plan_target_graph, BuildPlan};
use disk_clique::graph::Graph;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_disk-clique"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn cycles_complement(lens: &[usize]) -> Graph {
    Graph::disjoint_union(&lens.iter().map(|&l| Graph::cycle(l)).collect::<Vec<_>>()).complement()
}

#[test]
fn solve_reports_the_optimum_with_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let instance = write(dir.path(), "g.graph", &emit_graph(&cycles_complement(&[4, 6, 5])));
    let out = run(&["solve", &instance]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["value"], "7");
    assert_eq!(doc["optimal"], true);
    assert_eq!(doc["mode"], "exact");
}

#[test]
fn solve_exit_codes_for_bad_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.graph", "graph 2\nedge 0 0\n");
    assert_eq!(run(&["solve", &bad]).status.code(), Some(64));
    assert_eq!(
        run(&["solve", dir.path().join("nope.graph").to_str().unwrap()])
            .status
            .code(),
        Some(66)
    );
    let ok = write(dir.path(), "ok.graph", "graph 2\nedge 0 1\n");
    assert_eq!(
        run(&["solve", &ok, "--mode", "sideways"]).status.code(),
        Some(65)
    );
}

#[test]
fn solve_capped_run_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let instance = write(dir.path(), "g.graph", &emit_graph(&cycles_complement(&[9, 9])));
    let out = run(&["solve", &instance, "--cap", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["optimal"], false);
}

#[test]
fn solve_attaches_the_non_disk_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let instance = write(dir.path(), "g.graph", &emit_graph(&cycles_complement(&[9, 9])));
    let out = run(&["solve", &instance]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["value"], "8");
    assert_eq!(doc["certificate"]["cycle_a"].as_array().unwrap().len(), 9);
}

#[test]
fn solve_threads_flag_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let instance = write(dir.path(), "g.graph", &emit_graph(&cycles_complement(&[4, 6, 5])));
    let one = run(&["solve", &instance, "--threads", "1"]);
    let many = run(&["solve", &instance, "--threads", "4"]);
    assert_eq!(stdout(&one), stdout(&many));
}

#[test]
fn oracle_answers_and_guards() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.graph", &emit_graph(&Graph::complete(4)));
    let out = run(&["oracle", &k4]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("value 4"));
    assert!(stdout(&out).contains("clique 0 1 2 3"));

    let big = write(dir.path(), "big.graph", &emit_graph(&Graph::new(30)));
    assert_eq!(run(&["oracle", &big]).status.code(), Some(65));
    assert_eq!(run(&["oracle", &big, "--limit", "30"]).status.code(), Some(0));
}

#[test]
fn build_rep_round_trips_through_verify_rep() {
    let dir = tempfile::tempdir().unwrap();
    let disks_path = dir.path().join("rep.disks");
    let out = run(&[
        "build-rep",
        "--even",
        "4,6",
        "--odd",
        "5",
        "--out",
        disks_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let plan = BuildPlan::new(vec![4, 6], vec![5]).unwrap();
    let target = write(dir.path(), "target.graph", &emit_graph(&plan_target_graph(&plan)));
    let verify = run(&["verify-rep", disks_path.to_str().unwrap(), &target]);
    assert_eq!(verify.status.code(), Some(0));
    assert!(stdout(&verify).contains("ok"));

    // Corrupt one radius: the verifier names the first wrong pair, exit 1.
    let rep = parse_disks(&std::fs::read_to_string(&disks_path).unwrap()).unwrap();
    let mut corrupted = String::new();
    for (id, d) in rep.disks().iter().enumerate() {
        use disk_clique::rat::format_rational;
        let r = if id == 3 {
            format_rational(&(d.radius.clone() / disk_clique::rat::rat(2)))
        } else {
            format_rational(&d.radius)
        };
        corrupted.push_str(&format!(
            "disk {id} {} {} {r}\n",
            format_rational(&d.center.x),
            format_rational(&d.center.y)
        ));
    }
    let bad = write(dir.path(), "bad.disks", &corrupted);
    let verify = run(&["verify-rep", &bad, &target]);
    assert_eq!(verify.status.code(), Some(1));
    assert!(stdout(&verify).contains("mismatch"));

    // Size mismatch is a precondition violation, not a graph mismatch.
    let small = write(dir.path(), "small.graph", &emit_graph(&Graph::new(3)));
    assert_eq!(
        run(&["verify-rep", disks_path.to_str().unwrap(), &small])
            .status
            .code(),
        Some(65)
    );
}

#[test]
fn build_rep_rejects_two_odd_cycles() {
    let out = run(&["build-rep", "--even", "4", "--odd", "3,5"]);
    assert_eq!(out.status.code(), Some(65));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("two odd cycles"), "stderr: {err}");
}

#[test]
fn build_rep_emits_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg_path = dir.path().join("rep.svg");
    let out = run(&[
        "build-rep",
        "--even",
        "4",
        "--svg",
        svg_path.to_str().unwrap(),
        "--out",
        dir.path().join("rep.disks").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.contains(r#"xmlns="http://www.w3.org/2000/svg""#));
    assert!(svg.contains("version=\"1.1\""));
    assert_eq!(svg.matches("<circle").count(), 4);
}

#[test]
fn audit_prints_ledger_and_violated_pair() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "cycles.txt",
        "cycle 0 0 2 0 1 2\ncycle 100 1 102 3 101 7\n",
    );
    let out = run(&["audit-odd-cycles", &file]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("violated pair"));
    assert!(text.contains("cycle1 segment 0"));

    let even = write(
        dir.path(),
        "even.txt",
        "cycle 0 0 1 0 1 1 0 1\ncycle 9 9 11 9 10 11\n",
    );
    assert_eq!(run(&["audit-odd-cycles", &even]).status.code(), Some(64));

    // odd lengths but degenerate geometry
    let degenerate = write(
        dir.path(),
        "deg.txt",
        "cycle 0 0 2 0 1 2\ncycle 10 0 12 1 11 3\n",
    );
    assert_eq!(run(&["audit-odd-cycles", &degenerate]).status.code(), Some(65));
}

#[test]
fn gen_co2sub_matches_the_count_formula() {
    let dir = tempfile::tempdir().unwrap();
    let c3c3 = write(
        dir.path(),
        "c3c3.graph",
        &emit_graph(&Graph::disjoint_union(&[Graph::cycle(3), Graph::cycle(3)])),
    );
    let out = run(&["gen-co2sub", &c3c3]);
    assert_eq!(out.status.code(), Some(0));
    let g = parse_graph(&stdout(&out)).unwrap();
    assert_eq!(g.vertex_count(), 18);
    assert_eq!(g.edge_count(), 135);
}

#[test]
fn gen_triangles_produces_a_verified_gadget_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.graph", "graph 2\nedge 0 1\n");
    let svg_path = dir.path().join("gadget.svg");
    let out = run(&[
        "gen-triangles",
        &k2,
        "--svg",
        svg_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("triangle")).count(), 4);
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 4);

    // no edges: nothing to encode
    let edgeless = write(dir.path(), "none.graph", "graph 3\n");
    assert_eq!(run(&["gen-triangles", &edgeless]).status.code(), Some(65));
}

#[test]
fn solve_round_trips_builder_output_graphs() {
    // Build a representation in-process, feed its intersection graph through
    // the CLI, and expect the known clique number.
    let dir = tempfile::tempdir().unwrap();
    let plan = BuildPlan::new(vec![4, 6], vec![5]).unwrap();
    let rep = build_co_cycles_representation(&plan).unwrap();
    let g = disk_clique::geom::intersection_graph(&rep);
    let instance = write(dir.path(), "built.graph", &emit_graph(&g));
    let out = run(&["solve", &instance, "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["value"], "7");

    // The emitted disk file re-parses to the same representation.
    assert_eq!(parse_disks(&emit_disks(&rep)).unwrap(), rep);
}
