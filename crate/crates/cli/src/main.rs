//! `kswap`: solve, benchmark and generate maximum-clique instances.
//!
//! Exit codes: 0 success, 1 usage error, 2 bad input, 3 solver invariant
//! violation.

use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kswap::bench::{
    emit_csv, gen_collection, load_instance, load_instances, parse_algorithms, read_best_known, run_suite, Algorithm,
    BenchError, GenRnSpec, MeasureReport, Preset, SuiteOptions,
};
use kswap::local_search::LsOptions;
use kswap::{MicroTable, ProblemMode};
use log::info;

#[derive(Parser)]
#[command(
    name = "kswap",
    version,
    about = "Maximum clique heuristics and (1,k)-swap local search"
)]
struct Cli {
    /// More log output (-v info, -vv debug). RUST_LOG overrides.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one DIMACS instance and print the solution.
    Solve(SolveArgs),
    /// Run algorithms over instances and write a CSV report.
    Bench(BenchArgs),
    /// Generate a random G(n, d) collection as DIMACS files.
    Gen(GenArgs),
    /// Dump or verify the 6-vertex lookup table.
    Table {
        #[command(subcommand)]
        action: TableCommand,
    },
}

#[derive(Args)]
struct SolveArgs {
    #[arg(short, long)]
    input: PathBuf,
    /// Algorithm name, e.g. `ld_bin` or `ls_1_k_ld_bin`.
    #[arg(short, long, default_value = "ls_1_k_ld_bin")]
    algo: Algorithm,
    /// `mcp` (maximum clique) or `mis` (maximum independent set).
    #[arg(short, long, default_value = "mcp")]
    problem: ProblemMode,
    /// Re-derive the local-search state after every swap.
    #[arg(long)]
    check_invariants: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemChoice {
    Mcp,
    Mis,
    Both,
}

impl ProblemChoice {
    fn modes(self) -> Vec<ProblemMode> {
        match self {
            ProblemChoice::Mcp => vec![ProblemMode::MaxClique],
            ProblemChoice::Mis => vec![ProblemMode::MaxIndependentSet],
            ProblemChoice::Both => vec![ProblemMode::MaxClique, ProblemMode::MaxIndependentSet],
        }
    }
}

#[derive(Args)]
struct BenchArgs {
    /// DIMACS files or directories of them (not recursive).
    #[arg(short, long, num_args = 1.., required = true)]
    inputs: Vec<PathBuf>,
    /// Comma-separated algorithm names, or `all`.
    #[arg(short, long, default_value = "all")]
    algos: String,
    #[arg(short, long, value_enum, default_value = "both")]
    problem: ProblemChoice,
    /// Two-column CSV of `instance,size` best-known solution sizes.
    #[arg(long)]
    best_known: Option<PathBuf>,
    #[arg(short, long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Runs per (instance, algorithm); the median time is kept.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    repeats: u16,
    #[arg(long)]
    check_invariants: bool,
    /// Output CSV file; standard output when omitted.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["preset", "spec"])))]
struct GenArgs {
    /// Named collection: c1, c2 or c3.
    #[arg(long)]
    preset: Option<Preset>,
    /// `n_rpt,n0,nI,nN,d0,dI,dN,seed`; end `dN` with `)` to exclude it.
    #[arg(long)]
    spec: Option<GenRnSpec>,
    /// Divide every order by this factor.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    scale: u32,
    /// Override the number of repetitions.
    #[arg(long)]
    reps: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory, created if missing.
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum TableCommand {
    /// Write the 32768-byte table.
    Dump {
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Check every entry of a dumped table, or of a freshly built one.
    Verify {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
}

/// An error paired with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn input_error(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: 2,
        error: error.into(),
    }
}

fn invariant_error(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: 3,
        error: error.into(),
    }
}

fn bench_error(e: BenchError) -> Failure {
    match e {
        BenchError::Solver { .. } => invariant_error(e),
        other => input_error(other),
    }
}

type Outcome = Result<(), Failure>;

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
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let result = match cli.command {
        Command::Solve(args) => solve(args),
        Command::Bench(args) => bench(args),
        Command::Gen(args) => gen(args),
        Command::Table { action } => table(action),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn solve(args: SolveArgs) -> Outcome {
    let instance = load_instance(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))
        .map_err(input_error)?;
    let table = MicroTable::build();
    let g = instance.graph.for_problem(args.problem);
    let sg = g.vertices();
    let start = Instant::now();
    let solution = args
        .algo
        .solve(
            &table,
            &g,
            &sg,
            LsOptions {
                check_invariants: args.check_invariants,
            },
        )
        .map_err(|e| invariant_error(anyhow!(e).context(format!("{} on {}", args.algo, instance.id))))?;
    let elapsed = start.elapsed();
    if !g.is_clique(&solution) {
        return Err(invariant_error(anyhow!(
            "{} returned an infeasible solution",
            args.algo
        )));
    }
    info!("{} on {} ({}) took {elapsed:.2?}", args.algo, instance.id, args.problem);

    let vertices: Vec<String> = solution.iter().map(|v| (v + 1).to_string()).collect();
    let mut out = io::stdout().lock();
    let written =
        writeln!(out, "size {}", solution.count()).and_then(|_| writeln!(out, "vertices {}", vertices.join(" ")));
    match written {
        // A closed pipe (`| head`) is not a failure.
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(input_error(e)),
        _ => Ok(()),
    }
}

fn bench(args: BenchArgs) -> Outcome {
    let algorithms = parse_algorithms(&args.algos).map_err(input_error)?;
    let best_known = match &args.best_known {
        Some(path) => {
            let file = File::open(path)
                .with_context(|| format!("opening {}", path.display()))
                .map_err(input_error)?;
            Some(read_best_known(BufReader::new(file)).map_err(input_error)?)
        }
        None => None,
    };

    // Unreadable files are logged by the loader and listed in the notes.
    let (instances, skipped) = load_instances(&args.inputs);
    if instances.is_empty() {
        return Err(input_error(anyhow!("no readable instances among the inputs")));
    }
    info!("{} instances, {} algorithms", instances.len(), algorithms.len());

    let table = MicroTable::build();
    let opts = SuiteOptions {
        jobs: args.jobs as usize,
        repeats: args.repeats as usize,
        check_invariants: args.check_invariants,
    };
    let mut records = Vec::new();
    for mode in args.problem.modes() {
        let start = Instant::now();
        records.extend(run_suite(&table, &instances, &algorithms, mode, opts).map_err(bench_error)?);
        info!("{mode} finished in {:.2?}", start.elapsed());
    }
    let report = MeasureReport::new(&records, best_known.as_ref()).map_err(bench_error)?;

    let algo_names: Vec<String> = algorithms.iter().map(ToString::to_string).collect();
    let mut notes = vec![
        format!("algorithms: {}", algo_names.join(" ")),
        format!("repeats: {} (median time)", opts.repeats),
        format!("jobs: {}", opts.jobs),
        format!(
            "ratio_solution reference: {}",
            match &args.best_known {
                Some(p) => format!("best known from {}", p.display()),
                None => "best found by the listed algorithms".to_string(),
            }
        ),
    ];
    notes.extend(skipped.iter().map(|(p, why)| format!("skipped {}: {why}", p.display())));

    let written = match &args.out {
        Some(path) => File::create(path)
            .map_err(anyhow::Error::from)
            .and_then(|f| emit_csv(&report, &records, BufWriter::new(f), &notes).map_err(Into::into))
            .with_context(|| format!("writing {}", path.display())),
        None => emit_csv(&report, &records, io::stdout().lock(), &notes).map_err(Into::into),
    };
    written.map_err(input_error)?;

    for row in &report.summary {
        let scope = row.problem.map_or("all", |p| p.name());
        eprintln!(
            "{:<16} {:<4} R_P {:.3}  R_T {:.3}",
            row.algorithm, scope, row.mean_solution, row.mean_time
        );
    }
    Ok(())
}

fn gen(args: GenArgs) -> Outcome {
    let mut spec = match (args.preset, args.spec) {
        (Some(p), _) => p.spec(),
        (None, Some(s)) => s,
        (None, None) => unreachable!("clap requires one source"),
    };
    spec = spec.scaled(args.scale as usize);
    if let Some(reps) = args.reps {
        spec = spec.with_repetitions(reps);
    }
    if let Some(seed) = args.seed {
        spec.seed = seed;
    }
    spec.validate().map_err(input_error)?;
    let instances = gen_collection(&spec).map_err(input_error)?;

    fs::create_dir_all(&args.out)
        .with_context(|| format!("creating {}", args.out.display()))
        .map_err(input_error)?;
    let source = args
        .preset
        .map_or("custom".to_string(), |p| format!("{p:?}").to_lowercase());
    let header = [
        format!("kswap gen, source {source}"),
        format!("spec {spec}"),
        format!("scale 1/{}", args.scale),
    ];
    for inst in &instances {
        let path = args.out.join(format!("{}.clq", inst.id));
        write_instance(&path, &inst.graph, &header)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(input_error)?;
    }
    eprintln!("wrote {} instances to {}", instances.len(), args.out.display());
    Ok(())
}

fn write_instance(path: &Path, g: &kswap::Graph, header: &[String]) -> io::Result<()> {
    let comments: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut out = BufWriter::new(File::create(path)?);
    g.write_dimacs(&mut out, &comments)?;
    out.flush()
}

fn table(action: TableCommand) -> Outcome {
    match action {
        TableCommand::Dump { out } => {
            let table = MicroTable::build();
            fs::write(&out, table.to_bytes())
                .with_context(|| format!("writing {}", out.display()))
                .map_err(input_error)?;
            eprintln!("wrote {} entries to {}", table.len(), out.display());
        }
        TableCommand::Verify { input: Some(path) } => {
            let bytes = fs::read(&path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(input_error)?;
            let table = MicroTable::from_bytes(&bytes)
                .with_context(|| format!("verifying {}", path.display()))
                .map_err(input_error)?;
            println!("ok: {} entries verified", table.len());
        }
        TableCommand::Verify { input: None } => {
            let table = MicroTable::build();
            table.verify().map_err(invariant_error)?;
            println!("ok: {} entries verified", table.len());
        }
    }
    Ok(())
}
