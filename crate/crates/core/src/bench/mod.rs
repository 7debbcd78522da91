//! Benchmark apparatus: algorithm registry, suite runner, relative measures,
//! CSV reports and random instance collections.

mod collection;
mod measure;
mod report;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use log::warn;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, GraphError, ProblemMode, VertexSet};
use crate::heuristics::HeuristicKind;
use crate::local_search::{ls_1_k_with, LocalSearchError, LsOptions};
use crate::micro::MicroTable;

pub use collection::{gen_collection, GenRnSpec, Preset};
pub use measure::{relative_solution_measure, relative_time_measure, MeasureReport, SummaryRow};
pub use report::{emit_csv, read_best_known, CSV_HEADER, SUMMARY_HEADER};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
    #[error("instance {instance}: best known size {best_known} is below the found size {found}")]
    BestKnownTooSmall {
        instance: String,
        best_known: usize,
        found: usize,
    },
    #[error("{0} ratios supplied for {1} records")]
    LengthMismatch(usize, usize),
    #[error("invalid collection spec: {0}")]
    InvalidSpec(String),
    #[error("best-known file, record {record}: {message}")]
    BestKnownFormat { record: usize, message: String },
    #[error("instance {instance}, {algorithm}: {source}")]
    Solver {
        instance: String,
        algorithm: String,
        source: LocalSearchError,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A solver selectable by name: a constructive heuristic alone, or the
/// (1,k)-swap local search seeded by one (`ls_1_k_<heuristic>`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Heuristic(HeuristicKind),
    LocalSearch(HeuristicKind),
}

impl Algorithm {
    /// All ten algorithms, each heuristic followed by its local search.
    pub fn all() -> Vec<Algorithm> {
        HeuristicKind::ALL
            .iter()
            .flat_map(|&h| [Algorithm::Heuristic(h), Algorithm::LocalSearch(h)])
            .collect()
    }

    pub fn name(self) -> String {
        self.to_string()
    }

    /// Solves maximum clique on `g` restricted to `sg`.
    pub fn solve(
        self,
        table: &MicroTable,
        g: &Graph,
        sg: &VertexSet,
        opts: LsOptions,
    ) -> Result<VertexSet, LocalSearchError> {
        match self {
            Algorithm::Heuristic(h) => Ok(h.run(g, sg)),
            Algorithm::LocalSearch(h) => ls_1_k_with(table, g, sg, h, opts).map(|o| o.clique),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Heuristic(h) => f.write_str(h.name()),
            Algorithm::LocalSearch(h) => write!(f, "ls_1_k_{}", h.name()),
        }
    }
}

impl FromStr for Algorithm {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, BenchError> {
        let lower = s.trim().to_ascii_lowercase();
        let lower = lower
            .strip_prefix("fvs_")
            .or_else(|| lower.strip_prefix("fvs"))
            .unwrap_or(&lower);
        let parsed = match lower.strip_prefix("ls_1_k_") {
            Some(rest) => rest.parse().map(Algorithm::LocalSearch),
            None => lower.parse().map(Algorithm::Heuristic),
        };
        parsed.map_err(|_| BenchError::UnknownAlgorithm(s.to_string()))
    }
}

/// Parses a comma-separated algorithm list; `all` expands to every algorithm.
pub fn parse_algorithms(list: &str) -> Result<Vec<Algorithm>, BenchError> {
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name.eq_ignore_ascii_case("all") {
            out.extend(Algorithm::all());
        } else {
            out.push(name.parse()?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub graph: Graph,
}

/// One (instance, algorithm) run.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub problem: ProblemMode,
    pub algorithm: String,
    pub solution_size: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Worker threads across instances; 1 runs inline.
    pub jobs: usize,
    /// Runs per (instance, algorithm); the median time is reported.
    pub repeats: usize,
    pub check_invariants: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            repeats: 1,
            check_invariants: false,
        }
    }
}

fn run_instance(
    table: &MicroTable,
    instance: &Instance,
    algorithms: &[Algorithm],
    problem: ProblemMode,
    opts: SuiteOptions,
) -> Result<Vec<BenchRecord>, BenchError> {
    // Building the graph to solve is not part of any algorithm's time.
    let g = instance.graph.for_problem(problem);
    let sg = g.vertices();
    let ls_opts = LsOptions {
        check_invariants: opts.check_invariants,
    };
    let mut records = Vec::with_capacity(algorithms.len());
    for &algo in algorithms {
        let mut times = Vec::with_capacity(opts.repeats.max(1));
        let mut size = None;
        for _ in 0..opts.repeats.max(1) {
            let start = Instant::now();
            let solution = algo
                .solve(table, &g, &sg, ls_opts)
                .map_err(|source| BenchError::Solver {
                    instance: instance.id.clone(),
                    algorithm: algo.name(),
                    source,
                })?;
            let elapsed = start.elapsed();
            let count = solution.count();
            drop(solution);
            debug_assert!(size.is_none_or(|s| s == count), "non-deterministic solver");
            size = Some(count);
            times.push(elapsed.max(Duration::from_nanos(1)));
        }
        times.sort_unstable();
        records.push(BenchRecord {
            instance: instance.id.clone(),
            n: instance.graph.order(),
            m: instance.graph.edge_count(),
            problem,
            algorithm: algo.name(),
            solution_size: size.expect("at least one run"),
            elapsed: times[times.len() / 2],
        });
    }
    Ok(records)
}

/// Runs every algorithm on every instance. Records come back grouped by
/// instance in input order, algorithms in the given order, whatever `jobs`.
pub fn run_suite(
    table: &MicroTable,
    instances: &[Instance],
    algorithms: &[Algorithm],
    problem: ProblemMode,
    opts: SuiteOptions,
) -> Result<Vec<BenchRecord>, BenchError> {
    let per_instance: Vec<Result<Vec<BenchRecord>, BenchError>> = if opts.jobs <= 1 {
        instances
            .iter()
            .map(|inst| run_instance(table, inst, algorithms, problem, opts))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            instances
                .par_iter()
                .map(|inst| run_instance(table, inst, algorithms, problem, opts))
                .collect()
        })
    };
    let mut records = Vec::with_capacity(instances.len() * algorithms.len());
    for r in per_instance {
        records.extend(r?);
    }
    Ok(records)
}

const GRAPH_EXTENSIONS: [&str; 5] = ["clq", "col", "dimacs", "graph", "txt"];

/// Instance id of a DIMACS file: its file name minus a graph-file
/// extension. Other dots are kept, so `C125.9` stays `C125.9`.
pub fn instance_id(path: &Path) -> String {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    match name.rsplit_once('.') {
        Some((stem, ext)) if !stem.is_empty() && GRAPH_EXTENSIONS.contains(&ext.to_ascii_lowercase().as_str()) => {
            stem.to_string()
        }
        _ => name,
    }
}

fn expand_paths(paths: &[PathBuf]) -> Vec<Result<PathBuf, (PathBuf, std::io::Error)>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            match std::fs::read_dir(p) {
                Ok(entries) => {
                    let mut files: Vec<PathBuf> = entries
                        .filter_map(Result::ok)
                        .map(|e| e.path())
                        .filter(|p| p.is_file())
                        .collect();
                    files.sort();
                    out.extend(files.into_iter().map(Ok));
                }
                Err(e) => out.push(Err((p.clone(), e))),
            }
        } else {
            out.push(Ok(p.clone()));
        }
    }
    out
}

pub fn load_instance(path: &Path) -> Result<Instance, GraphError> {
    let file = std::fs::File::open(path)?;
    let graph = Graph::from_dimacs(std::io::BufReader::new(file))?;
    Ok(Instance {
        id: instance_id(path),
        graph,
    })
}

/// Reads DIMACS files, expanding directories (sorted, non-recursive).
/// Unreadable or malformed files are logged and returned separately.
pub fn load_instances(paths: &[PathBuf]) -> (Vec<Instance>, Vec<(PathBuf, String)>) {
    let mut loaded = Vec::new();
    let mut skipped = Vec::new();
    for entry in expand_paths(paths) {
        match entry {
            Ok(path) => match load_instance(&path) {
                Ok(inst) => loaded.push(inst),
                Err(e) => {
                    warn!("skipping {}: {e}", path.display());
                    skipped.push((path, e.to_string()));
                }
            },
            Err((path, e)) => {
                warn!("skipping {}: {e}", path.display());
                skipped.push((path, e.to_string()));
            }
        }
    }
    (loaded, skipped)
}
