//! Command-line front end: solve maximum clique on disk-graph instances,
//! run the desk-scale oracle, build and verify disk representations of
//! cycle-union complements, audit two odd cycles, and generate hardness
//! instances.
//!
//! Exit codes: 0 success/optimal, 1 verify-rep mismatch, 2 capped partial
//! solve, 3 internal verification failure, 64 instance parse error,
//! 65 precondition violation, 66 file i/o error.

use clap::{Args, Parser, Subcommand};
use disk_clique::fmt::report::report_to_json;
use disk_clique::fmt::{
    emit_disks, emit_graph, emit_triangles, parse_cycles, parse_disks, parse_graph,
};
use disk_clique::geom::svg::{gadget_to_svg, representation_to_svg};
use disk_clique::geom::{
    audit_two_odd_cycles, build_co_cycles_representation, plan_target_graph,
    verify_representation, AuditError, BuildError, BuildPlan,
};
use disk_clique::graph::{brute_force_max_clique, OracleError, DEFAULT_ORACLE_LIMIT};
use disk_clique::hardness::{build_triangle_gadget, GadgetError};
use disk_clique::graph::co_two_subdivision;
use disk_clique::rat::{format_rational, parse_rational};
use disk_clique::solver::{solve_max_clique, SolveConfig, TraceEvent};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_MISMATCH: u8 = 1;
const EXIT_CAPPED: u8 = 2;
const EXIT_VERIFY_FAILED: u8 = 3;
const EXIT_PARSE: u8 = 64;
const EXIT_PRECONDITION: u8 = 65;
const EXIT_IO: u8 = 66;

#[derive(Parser)]
#[command(
    name = "disk-clique",
    about = "Maximum clique on disk graphs via complement-side structure",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve maximum (weighted) clique on a graph instance.
    Solve(SolveArgs),
    /// Exact brute-force clique value (size-guarded).
    Oracle(OracleArgs),
    /// Build and verify a disk representation of a cycle-union complement.
    BuildRep(BuildRepArgs),
    /// Run the two-odd-cycles parity audit on a cycle file.
    AuditOddCycles(AuditArgs),
    /// Emit the co-2-subdivision of a graph.
    GenCo2sub(GenCo2subArgs),
    /// Build and verify the filled-triangle gadget of a graph's
    /// co-2-subdivision.
    GenTriangles(GenTrianglesArgs),
    /// Check that a disk file represents exactly a claimed graph.
    VerifyRep(VerifyRepArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Graph instance file.
    instance: PathBuf,
    /// exact, approx, or qptas.
    #[arg(long, default_value = "exact")]
    mode: String,
    /// Approximation parameter for approx/qptas modes (rational).
    #[arg(long)]
    eps: Option<String>,
    /// Guard on 2^|set| enumerations.
    #[arg(long)]
    cap: Option<u64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Worker thread hint; 1 forces sequential execution.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct OracleArgs {
    instance: PathBuf,
    /// Vertex-count guard (default 24).
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct BuildRepArgs {
    /// Even cycle lengths, comma separated (e.g. 4,6).
    #[arg(long, value_delimiter = ',')]
    even: Vec<usize>,
    /// Odd cycle lengths, comma separated; more than one is rejected.
    #[arg(long, value_delimiter = ',')]
    odd: Vec<usize>,
    /// Write the disk file here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG rendering.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    /// File with exactly two `cycle` lines.
    cycles: PathBuf,
}

#[derive(Args)]
struct GenCo2subArgs {
    graph: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenTrianglesArgs {
    graph: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyRepArgs {
    disks: PathBuf,
    graph: PathBuf,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_IO, format!("cannot read {}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| fail(EXIT_IO, format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    ExitCode::from(code)
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Solve(args) => cmd_solve(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::BuildRep(args) => cmd_build_rep(args),
        Command::AuditOddCycles(args) => cmd_audit(args),
        Command::GenCo2sub(args) => cmd_gen_co2sub(args),
        Command::GenTriangles(args) => cmd_gen_triangles(args),
        Command::VerifyRep(args) => cmd_verify_rep(args),
    }
}

fn parse_eps(args_eps: Option<&str>) -> Result<disk_clique::Rational, Failure> {
    let text = args_eps.unwrap_or("1/10");
    let eps = parse_rational(text).map_err(|e| fail(EXIT_PRECONDITION, e.to_string()))?;
    if eps <= num_traits::Zero::zero() {
        return Err(fail(EXIT_PRECONDITION, "eps must be positive"));
    }
    Ok(eps)
}

fn cmd_solve(args: SolveArgs) -> Result<u8, Failure> {
    let text = read_file(&args.instance)?;
    let graph = parse_graph(&text).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;

    let mut cfg = match args.mode.as_str() {
        "exact" => SolveConfig::exact(),
        "approx" => SolveConfig::approx(parse_eps(args.eps.as_deref())?),
        "qptas" => SolveConfig::qptas(parse_eps(args.eps.as_deref())?),
        other => {
            return Err(fail(
                EXIT_PRECONDITION,
                format!("unknown mode `{other}` (expected exact, approx, or qptas)"),
            ))
        }
    };
    if let Some(cap) = args.cap {
        if cap == 0 {
            return Err(fail(EXIT_PRECONDITION, "cap must be at least 1"));
        }
        cfg = cfg.with_enumeration_cap(cap);
    }
    match args.threads {
        Some(0) => return Err(fail(EXIT_PRECONDITION, "threads must be at least 1")),
        Some(1) => cfg = cfg.with_parallel(false),
        Some(_t) => {
            #[cfg(feature = "parallel")]
            {
                // Pool size is a hint; ignore failures from double-init.
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(_t)
                    .build_global();
            }
        }
        None => {}
    }

    let report = solve_max_clique(&graph, &cfg);
    let json = report_to_json(&graph, &cfg, &report);
    write_output(args.report.as_deref(), &format!("{json}\n"))?;
    let capped = report
        .trace
        .iter()
        .any(|e| matches!(e, TraceEvent::CapExceeded { .. }));
    Ok(if capped { EXIT_CAPPED } else { EXIT_OK })
}

fn cmd_oracle(args: OracleArgs) -> Result<u8, Failure> {
    let text = read_file(&args.instance)?;
    let graph = parse_graph(&text).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    let limit = args.limit.unwrap_or(DEFAULT_ORACLE_LIMIT);
    let best = brute_force_max_clique(&graph, limit).map_err(|e| match e {
        OracleError::TooLarge { .. } => fail(EXIT_PRECONDITION, e.to_string()),
    })?;
    println!("value {}", format_rational(&best.weight));
    let ids: Vec<String> = best.vertices.iter().map(|v| v.to_string()).collect();
    println!("clique {}", ids.join(" "));
    Ok(EXIT_OK)
}

fn cmd_build_rep(args: BuildRepArgs) -> Result<u8, Failure> {
    let plan = BuildPlan::new(args.even.clone(), args.odd.clone())
        .map_err(|e| fail(EXIT_PRECONDITION, e.to_string()))?;
    let rep = match build_co_cycles_representation(&plan) {
        Ok(rep) => rep,
        Err(e @ BuildError::Unrealized { .. }) => {
            return Err(fail(EXIT_VERIFY_FAILED, e.to_string()))
        }
        Err(e) => return Err(fail(EXIT_PRECONDITION, e.to_string())),
    };
    // Belt and braces: the builder has already verified this exactly.
    let target = plan_target_graph(&plan);
    match verify_representation(&rep, &target) {
        Ok(Ok(())) => {}
        Ok(Err(m)) => return Err(fail(EXIT_VERIFY_FAILED, m.to_string())),
        Err(e) => return Err(fail(EXIT_VERIFY_FAILED, e.to_string())),
    }
    if let Some(svg_path) = &args.svg {
        write_output(Some(svg_path), &representation_to_svg(&rep))?;
    }
    write_output(args.out.as_deref(), &emit_disks(&rep))?;
    eprintln!(
        "built and verified {} disks for {} cycle(s)",
        rep.len(),
        plan.even_lengths().len() + plan.odd_length().iter().len()
    );
    Ok(EXIT_OK)
}

fn cmd_audit(args: AuditArgs) -> Result<u8, Failure> {
    let text = read_file(&args.cycles)?;
    let (c1, c2) = parse_cycles(&text).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    let violation = audit_two_odd_cycles(&c1, &c2).map_err(|e| match e {
        AuditError::EvenLength { .. }
        | AuditError::TooShort { .. }
        | AuditError::ZeroLengthSegment { .. }
        | AuditError::Degenerate(_) => fail(EXIT_PRECONDITION, e.to_string()),
    })?;
    let ledger = &violation.parity_ledger;
    println!("parity ledger (a = line hits other cycle, b = other lines hit this segment, c = direct crossings)");
    for (which, rows) in [(1, &ledger.cycle1), (2, &ledger.cycle2)] {
        for (i, row) in rows.iter().enumerate() {
            println!(
                "cycle{which} segment {i}: a={} b={} c={}",
                row.line_hits_other, row.other_lines_hit_this, row.crossings
            );
        }
    }
    println!(
        "sums: cycle1 a={} b={} c={} | cycle2 a'={} b'={} c'={}",
        ledger.sum_a(),
        ledger.sum_b(),
        ledger.sum_c(),
        ledger.sum_a_primed(),
        ledger.sum_b_primed(),
        ledger.sum_c_primed()
    );
    println!(
        "violated pair: segment {} of cycle 1 ({} -- {}) and segment {} of cycle 2 ({} -- {})",
        violation.index_a,
        violation.segment_a.0,
        violation.segment_a.1,
        violation.index_b,
        violation.segment_b.0,
        violation.segment_b.1
    );
    println!("neither prolonging line meets the other segment: no disk representation can realize these as two non-edges of a K_2,2");
    Ok(EXIT_OK)
}

fn cmd_gen_co2sub(args: GenCo2subArgs) -> Result<u8, Failure> {
    let text = read_file(&args.graph)?;
    let graph = parse_graph(&text).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    write_output(args.out.as_deref(), &emit_graph(&co_two_subdivision(&graph)))?;
    Ok(EXIT_OK)
}

fn cmd_gen_triangles(args: GenTrianglesArgs) -> Result<u8, Failure> {
    let text = read_file(&args.graph)?;
    let graph = parse_graph(&text).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    let gadget = build_triangle_gadget(&graph).map_err(|e| match e {
        GadgetError::NoEdges => fail(EXIT_PRECONDITION, e.to_string()),
        GadgetError::Unrealized { .. } => fail(EXIT_VERIFY_FAILED, e.to_string()),
    })?;
    if let Some(svg_path) = &args.svg {
        write_output(Some(svg_path), &gadget_to_svg(&gadget))?;
    }
    write_output(args.out.as_deref(), &emit_triangles(&gadget.all_triangles()))?;
    eprintln!(
        "built and verified {} triangles against the co-2-subdivision",
        gadget.all_triangles().len()
    );
    Ok(EXIT_OK)
}

fn cmd_verify_rep(args: VerifyRepArgs) -> Result<u8, Failure> {
    let disks_text = read_file(&args.disks)?;
    let rep = parse_disks(&disks_text).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    let graph_text = read_file(&args.graph)?;
    let graph = parse_graph(&graph_text).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    match verify_representation(&rep, &graph) {
        Ok(Ok(())) => {
            println!("ok: representation matches the claimed graph");
            Ok(EXIT_OK)
        }
        Ok(Err(mismatch)) => {
            println!("mismatch: {mismatch}");
            Ok(EXIT_MISMATCH)
        }
        Err(size) => Err(fail(EXIT_PRECONDITION, size.to_string())),
    }
}
