//! `spext`: spectral radius, classification, switches, ascents, enumeration
//! and exhaustive verification from the command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure
//! (a counterexample file is written), 3 numerical non-convergence.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use spext_core::enumeration::{
    enumerate_class, odd_cycle_sweep, report_csv, survey_class, verify_extremal,
    verify_max_edge_triangles, ClassName, Limits, DEFAULT_GUARD,
};
use spext_core::random::{random_cactus, seeded};
use spext_core::transforms::{maximize_cactus, sigma_switch, unicyclic_ascent, TransformTrace};
use spext_core::{
    compare_results, cycle, h_n, is_cactus, is_max_edge_cactus, is_odd_cycle_graph, is_unicyclic,
    k1n_plus, par, parse_edge_list, path, spectral_radius, star, write_edge_list, EnumerationError,
    Graph, SpectralError, TransformError, DEFAULT_TOL,
};
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{message}\ncounterexample written to {}", path.display())]
    Verification { message: String, path: PathBuf },
    #[error("{0}")]
    NonConvergence(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verification { .. } => 2,
            CliError::NonConvergence(_) => 3,
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::NonConvergence { .. } => CliError::NonConvergence(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Hn,
    K1nplus,
    Star,
    Cycle,
    Path,
    RandomCactus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

/// Claims checked by `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Claim {
    Cactus,
    MaxEdgeCactus,
    Unicyclic,
    OddCycle,
    /// Every connected graph whose cycles are all odd is a cactus.
    OddCycleLemma,
    /// Max-edge cacti other than C_4 have triangle blocks and at most one bridge.
    MaxEdgeTriangles,
}

#[derive(Debug, Parser)]
#[command(
    name = "spext",
    version,
    about = "Spectral-radius ascent over cacti and unicyclic graphs"
)]
struct Cli {
    /// Convergence tolerance for the power iteration.
    #[arg(long, global = true, env = "SPEXT_TOL", default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Seed for random constructions.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for enumeration and verification (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory for counterexample files.
    #[arg(long, global = true)]
    counterexample_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectral radius, residual and iteration count.
    Rho { file: String },
    /// Class membership flags, t(G) and maximum degree.
    Classify { file: String },
    /// Moves the neighbours S of v over to u.
    Switch {
        file: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        s: Vec<usize>,
        #[arg(long, short, default_value = "-")]
        output: String,
    },
    /// Drives a connected cactus to H_n.
    Maximize {
        file: String,
        #[arg(long)]
        trace: Option<String>,
        #[arg(long, short, default_value = "-")]
        output: String,
    },
    /// Drives a unicyclic graph to K_{1,n-1}^+.
    Ascent {
        file: String,
        #[arg(long)]
        trace: Option<String>,
        #[arg(long, short, default_value = "-")]
        output: String,
    },
    /// Writes a named construction.
    Family {
        #[arg(value_enum)]
        kind: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, short, default_value = "-")]
        output: String,
    },
    /// Lists the members of a class, or its spectral report with --out.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: ClassName,
        #[arg(long, value_enum)]
        out: Option<ReportFormat>,
        #[arg(long, short, default_value = "-")]
        output: String,
    },
    /// Exhaustively checks an extremal claim; exit 2 on a counterexample.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        class: Claim,
    },
}

struct Ctx {
    tol: f64,
    seed: u64,
    format: Format,
    counterexample_dir: PathBuf,
}

fn read_input(file: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if file == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(file).map_err(|e| CliError::Usage(format!("{file}: {e}")))?;
    }
    Ok(text)
}

/// Reads an edge list, or the JSON form `{"n": .., "edges": [[u, v], ..]}`.
fn read_graph(file: &str) -> Result<Graph, CliError> {
    let text = read_input(file)?;
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{file}: {e}")));
    }
    parse_edge_list(&text).map_err(|e| CliError::Usage(format!("{file}: {e}")))
}

fn write_output(file: &str, text: &str) -> Result<(), CliError> {
    if file == "-" {
        let mut out = io::stdout().lock();
        match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
            _ => Ok(()),
        }
    } else {
        fs::write(file, text).map_err(|e| CliError::Usage(format!("{file}: {e}")))
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

/// Writes a graph together with a summary. When the graph goes to stdout in
/// text mode the summary goes to stderr, so pipelines see only the edge list.
fn emit_graph(
    ctx: &Ctx,
    output: &str,
    g: &Graph,
    mut summary: Value,
    text: &str,
) -> Result<(), CliError> {
    if output != "-" {
        write_output(output, &write_edge_list(g))?;
    }
    match ctx.format {
        Format::Json => {
            if let Value::Object(map) = &mut summary {
                map.insert(
                    "graph".into(),
                    serde_json::to_value(g).expect("serializable"),
                );
            }
            write_output("-", &to_json(&summary))
        }
        Format::Text if output == "-" => {
            if !text.is_empty() {
                eprint!("{text}");
            }
            write_output("-", &write_edge_list(g))
        }
        Format::Text => write_output("-", text),
    }
}

fn counterexample(ctx: &Ctx, name: &str, g: &Graph, message: String) -> CliError {
    let path = ctx
        .counterexample_dir
        .join(format!("spext-counterexample-{name}.txt"));
    match fs::write(&path, write_edge_list(g)) {
        Ok(()) => CliError::Verification { message, path },
        Err(e) => CliError::Usage(format!(
            "{message}\ncould not write {}: {e}",
            path.display()
        )),
    }
}

fn enumeration_error(ctx: &Ctx, e: EnumerationError) -> CliError {
    match e {
        EnumerationError::Counterexample {
            ref claim,
            n,
            ref graph,
        } => {
            let name = format!(
                "{}-n{n}",
                claim.split_whitespace().next().unwrap_or("claim")
            );
            counterexample(ctx, &name.to_ascii_lowercase(), graph, e.to_string())
        }
        EnumerationError::Spectral(s) => s.into(),
        other => CliError::Usage(other.to_string()),
    }
}

fn transform_error(ctx: &Ctx, e: TransformError) -> CliError {
    match e {
        TransformError::Spectral(s) => s.into(),
        TransformError::NoIncrease { ref graph, .. } => {
            match serde_json::from_str::<Graph>(graph) {
                Ok(g) => counterexample(ctx, "no-increase", &g, e.to_string()),
                Err(_) => CliError::Usage(e.to_string()),
            }
        }
        other => CliError::Usage(other.to_string()),
    }
}

fn rho(ctx: &Ctx, file: &str) -> Result<(), CliError> {
    let g = read_graph(file)?;
    let r = spectral_radius(&g, ctx.tol)?;
    let text = match ctx.format {
        Format::Json => to_json(&r),
        Format::Text => format!(
            "rho: {}\nresidual: {:e}\niterations: {}\n",
            r.rho, r.residual, r.iterations
        ),
    };
    write_output("-", &text)
}

fn classify(ctx: &Ctx, file: &str) -> Result<(), CliError> {
    let g = read_graph(file)?;
    let report = json!({
        "n": g.order(),
        "m": g.size(),
        "connected": g.is_connected(),
        "cactus": is_cactus(&g),
        "unicyclic": is_unicyclic(&g),
        "odd_cycle": g.is_connected() && is_odd_cycle_graph(&g),
        "max_edge": is_max_edge_cactus(&g),
        "t": g.t_count(),
        "max_degree": g.max_degree(),
    });
    let text = match ctx.format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = String::new();
            for key in [
                "n",
                "m",
                "connected",
                "cactus",
                "unicyclic",
                "odd_cycle",
                "max_edge",
                "t",
                "max_degree",
            ] {
                s.push_str(&format!("{key}: {}\n", report[key]));
            }
            s
        }
    };
    write_output("-", &text)
}

fn switch(
    ctx: &Ctx,
    file: &str,
    u: usize,
    v: usize,
    s: &[usize],
    output: &str,
) -> Result<(), CliError> {
    let g = read_graph(file)?;
    let next = sigma_switch(&g, u, v, s).map_err(|e| transform_error(ctx, e))?;
    let before = spectral_radius(&g, ctx.tol)?;
    let after = spectral_radius(&next, ctx.tol)?;
    let ordering = compare_results(&after, &before, ctx.tol);
    let summary = json!({
        "rho_before": before.rho,
        "rho_after": after.rho,
        "ordering": ordering,
    });
    let text = format!(
        "rho before: {}\nrho after: {}\nafter vs before: {ordering:?}\n",
        before.rho, after.rho
    );
    emit_graph(ctx, output, &next, summary, &text)
}

fn run_ascent(
    ctx: &Ctx,
    file: &str,
    trace_out: Option<&str>,
    output: &str,
    ascend: fn(&Graph, f64) -> Result<TransformTrace, TransformError>,
) -> Result<(), CliError> {
    if trace_out == Some("-") && (output == "-" || ctx.format == Format::Json) {
        return Err(CliError::Usage(
            "--trace - needs the graph sent elsewhere with --output and text format".into(),
        ));
    }
    let g = read_graph(file)?;
    let trace = ascend(&g, ctx.tol).map_err(|e| transform_error(ctx, e))?;
    let rho_initial = match trace.steps.first() {
        Some(step) => step.rho_before,
        None => spectral_radius(&g, ctx.tol)?.rho,
    };
    let rho_final = trace.steps.last().map_or(rho_initial, |s| s.rho_after);
    if let Some(path) = trace_out {
        write_output(path, &to_json(&trace))?;
    }
    let summary = json!({
        "steps": trace.steps.len(),
        "rho_initial": rho_initial,
        "rho_final": rho_final,
    });
    let text = if trace_out == Some("-") {
        String::new()
    } else {
        format!(
            "steps: {}\nrho: {rho_initial} -> {rho_final}\n",
            trace.steps.len()
        )
    };
    emit_graph(ctx, output, &trace.final_graph, summary, &text)
}

fn family(ctx: &Ctx, kind: Family, n: usize, output: &str) -> Result<(), CliError> {
    let g = match kind {
        Family::Hn => h_n(n),
        Family::K1nplus => k1n_plus(n),
        Family::Star => star(n),
        Family::Cycle => cycle(n),
        Family::Path => path(n),
        Family::RandomCactus if n == 0 => Err(spext_core::GraphError::OrderTooSmall { n, min: 1 }),
        Family::RandomCactus => Ok(random_cactus(&mut seeded(ctx.seed), n)),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let text = match ctx.format {
        Format::Json => to_json(&g),
        Format::Text => write_edge_list(&g),
    };
    write_output(output, &text)
}

fn enumerate(
    ctx: &Ctx,
    n: usize,
    class: ClassName,
    out: Option<ReportFormat>,
    output: &str,
) -> Result<(), CliError> {
    let text = match out {
        Some(format) => {
            let (report, _) = survey_class(n, class, DEFAULT_GUARD, &Limits::default())
                .map_err(|e| enumeration_error(ctx, e))?;
            match format {
                ReportFormat::Csv => report_csv(&[report]),
                ReportFormat::Json => to_json(&report),
            }
        }
        None => {
            let graphs = enumerate_class(n, class).map_err(|e| enumeration_error(ctx, e))?;
            match ctx.format {
                Format::Json => graphs
                    .iter()
                    .map(|g| serde_json::to_string(g).expect("serializable") + "\n")
                    .collect(),
                Format::Text => graphs
                    .iter()
                    .map(write_edge_list)
                    .collect::<Vec<_>>()
                    .join("\n"),
            }
        }
    };
    write_output(output, &text)
}

fn verify(ctx: &Ctx, n: usize, claim: Claim) -> Result<(), CliError> {
    let class = match claim {
        Claim::Cactus => Some(ClassName::Cactus),
        Claim::MaxEdgeCactus => Some(ClassName::MaxEdgeCactus),
        Claim::Unicyclic => Some(ClassName::Unicyclic),
        Claim::OddCycle => Some(ClassName::OddCycle),
        Claim::OddCycleLemma | Claim::MaxEdgeTriangles => None,
    };
    let (value, text) = if let Some(class) = class {
        let r = verify_extremal(n, class, DEFAULT_GUARD).map_err(|e| enumeration_error(ctx, e))?;
        let text = format!(
            "confirmed: {class} n={n}, {} classes, unique maximiser with rho {}\n",
            r.iso_class_count, r.max_rho
        );
        (serde_json::to_value(&r).expect("serializable"), text)
    } else if claim == Claim::OddCycleLemma {
        let s = odd_cycle_sweep(n, &Limits::default()).map_err(|e| enumeration_error(ctx, e))?;
        let text = format!(
            "confirmed: n={n}, all {} odd-cycle graphs among {} connected graphs are cacti\n",
            s.odd_cycle_graphs, s.connected_graphs
        );
        (serde_json::to_value(s).expect("serializable"), text)
    } else {
        let checked = verify_max_edge_triangles(n).map_err(|e| enumeration_error(ctx, e))?;
        let text = format!("confirmed: n={n}, {checked} max-edge cacti have triangle blocks\n");
        (json!({ "n": n, "checked": checked }), text)
    };
    match ctx.format {
        Format::Json => write_output("-", &to_json(&value)),
        Format::Text => write_output("-", &text),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let ctx = Ctx {
        tol: cli.tol,
        seed: cli.seed,
        format: cli.format,
        counterexample_dir: cli.counterexample_dir.unwrap_or_else(std::env::temp_dir),
    };
    if !Path::new(&ctx.counterexample_dir).is_dir() {
        return Err(CliError::Usage(format!(
            "counterexample directory {} does not exist",
            ctx.counterexample_dir.display()
        )));
    }
    match cli.command {
        Command::Rho { file } => rho(&ctx, &file),
        Command::Classify { file } => classify(&ctx, &file),
        Command::Switch {
            file,
            u,
            v,
            s,
            output,
        } => switch(&ctx, &file, u, v, &s, &output),
        Command::Maximize {
            file,
            trace,
            output,
        } => run_ascent(&ctx, &file, trace.as_deref(), &output, maximize_cactus),
        Command::Ascent {
            file,
            trace,
            output,
        } => run_ascent(&ctx, &file, trace.as_deref(), &output, unicyclic_ascent),
        Command::Family { kind, n, output } => family(&ctx, kind, n, &output),
        Command::Enumerate {
            n,
            class,
            out,
            output,
        } => enumerate(&ctx, n, class, out, &output),
        Command::Verify { n, class } => verify(&ctx, n, class),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let jobs = cli.jobs;
    match par::with_jobs(jobs, || run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
