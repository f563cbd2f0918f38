//! `vgrid`: generate Villarceau grids, compute metric dimension, verify
//! landmark sets and sweep the published claims.
//!
//! Exit codes: 0 success, 1 verification or claim failure, 2 usage or
//! validation error, 3 resource limit.

pub mod format;
pub mod report;

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand};
use serde::Serialize;
use villarceau::claims::{run_all_claims, ClaimOptions, ClaimStatus};
use villarceau::graph::all_pairs;
use villarceau::resolver::{
    exact_dimension, greedy_upper_bound, is_resolving, LandmarkSet, PairMatrix, Resolution, SolveOptions,
    SolveStatus,
};
use villarceau::{Coord, DiagGraph, Family, GridSpec};

use format::OutputFormat;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "vgrid", version, about = "Villarceau grids and exact metric dimension")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Inclusive integer range written `a..b` or a single `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span(pub usize, pub usize);

impl std::str::FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range {s:?}"));
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    return Err(format!("empty range {s:?}"));
                }
                Ok(Span(a, b))
            }
            None => num(s).map(|a| Span(a, a)),
        }
    }
}

/// Comma-separated family names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyList(pub Vec<Family>);

impl std::str::FromStr for FamilyList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|t| t.trim().parse::<Family>().map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()
            .map(FamilyList)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a generated graph.
    Gen {
        family: Family,
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: OutputFormat,
    },
    /// Compute the metric dimension of a generated graph or an input file.
    Dim {
        family: Option<Family>,
        m: Option<usize>,
        n: Option<usize>,
        /// Edge list or graph JSON; coordinates act as vertex labels.
        #[arg(long, conflicts_with_all = ["family", "m", "n"])]
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "greedy")]
        exact: bool,
        /// Greedy upper bound only.
        #[arg(long)]
        greedy: bool,
        /// Seconds before the exact search gives up.
        #[arg(long, default_value_t = 60.0)]
        time_limit: f64,
        #[arg(long)]
        max_k: Option<usize>,
        /// Deterministic search node budget.
        #[arg(long)]
        node_limit: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Check whether the given landmarks ("x,y") resolve a generated graph.
    Verify {
        family: Family,
        m: usize,
        n: usize,
        #[arg(required = true, num_args = 1..)]
        landmarks: Vec<String>,
    },
    /// Check every published claim over a parameter sweep.
    CheckPaper {
        #[arg(long, value_delimiter = ',', default_value = "vg1,vg2,grid")]
        families: Vec<Family>,
        #[arg(long, default_value_t = 3)]
        m_max: usize,
        /// Defaults to 2*m_max + 1.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        #[arg(long, default_value_t = ClaimOptions::default().node_limit)]
        node_limit: u64,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Compare conjectured dimensions and landmark sets with exact solves.
    Conjecture {
        #[arg(long, value_delimiter = ',', default_value = "vg1,vg2")]
        family: Vec<Family>,
        #[arg(long, default_value_t = 2)]
        m_max: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 60.0)]
        time_limit: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Tabulate structural parameters.
    ///
    /// Positional form: `survey <families> [m-range] [n-range]`; the n range
    /// defaults to the m range.
    Survey {
        #[arg(conflicts_with = "families")]
        family_pos: Option<FamilyList>,
        #[arg(conflicts_with = "m")]
        m_pos: Option<Span>,
        #[arg(conflicts_with = "n")]
        n_pos: Option<Span>,
        #[arg(long, value_delimiter = ',', default_value = "vg1,vg2,grid")]
        families: Vec<Family>,
        #[arg(long, default_value = "1..3")]
        m: Span,
        #[arg(long)]
        n: Option<Span>,
        #[arg(long, default_value_t = 60.0)]
        time_limit: f64,
        /// Deterministic search node budget; overrides the time limit.
        #[arg(long)]
        node_limit: Option<u64>,
        /// Leave elapsed_ms empty so output is reproducible.
        #[arg(long)]
        no_timings: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<villarceau::Error> for CliError {
    fn from(e: villarceau::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

type CmdResult = Result<i32, CliError>;

/// Runs a parsed command, writing results to `out`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError {
        code: EXIT_FAILED,
        message: format!("write failed: {e}"),
    })
}

fn unsupported(cmd: &str, f: OutputFormat) -> CliError {
    CliError::usage(format!("{cmd} does not support --format {}", f.name()))
}

fn seconds(s: f64) -> Result<Duration, CliError> {
    Duration::try_from_secs_f64(s).map_err(|_| CliError::usage(format!("invalid time limit {s}")))
}

fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(CliError::usage("--workers must be at least 1")),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| CliError::usage(e.to_string())),
    }
}

fn specs_for(families: &[Family], ms: Span, ns: Span) -> Vec<GridSpec> {
    let mut out = Vec::new();
    for &f in families {
        for m in ms.0..=ms.1 {
            for n in ns.0..=ns.1 {
                if let Ok(s) = GridSpec::new(f, m, n) {
                    out.push(s);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Gen { family, m, n, format } => cmd_gen(GridSpec::new(family, m, n)?, format, out),
        Command::Dim {
            family,
            m,
            n,
            input,
            exact: _,
            greedy,
            time_limit,
            max_k,
            node_limit,
            format,
        } => {
            let (g, spec) = match (input, family, m, n) {
                (Some(path), ..) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
                    (format::parse_graph(&text).map_err(CliError::usage)?, None)
                }
                (None, Some(f), Some(m), Some(n)) => {
                    let spec = GridSpec::new(f, m, n)?;
                    (spec.build(), Some(spec))
                }
                _ => return Err(CliError::usage("dim needs <family> <m> <n> or --input <file>")),
            };
            let opts = SolveOptions {
                max_k,
                time_limit: Some(seconds(time_limit)?),
                node_limit,
                parallel: true,
            };
            cmd_dim(&g, spec.as_ref(), greedy, &opts, format, out)
        }
        Command::Verify { family, m, n, landmarks } => {
            cmd_verify(GridSpec::new(family, m, n)?, &landmarks, out)
        }
        Command::CheckPaper {
            families,
            m_max,
            n_max,
            format,
            node_limit,
            workers,
        } => {
            if !matches!(format, OutputFormat::Csv | OutputFormat::Json) {
                return Err(unsupported("check-paper", format));
            }
            let specs = specs_for(&families, Span(1, m_max), Span(1, n_max.unwrap_or(2 * m_max + 1)));
            let reports = with_workers(workers, || run_all_claims(&specs, &ClaimOptions { node_limit }))?;
            let text = match format {
                OutputFormat::Json => report::claims_json(&reports),
                _ => report::claims_csv(&reports),
            };
            emit(out, &text)?;
            let failed = reports.iter().filter(|r| r.status == ClaimStatus::Fail).count();
            if failed > 0 {
                let _ = writeln!(err, "{failed} claim(s) failed");
                return Ok(EXIT_FAILED);
            }
            Ok(EXIT_OK)
        }
        Command::Conjecture {
            family,
            m_max,
            n_max,
            time_limit,
            format,
            workers,
        } => {
            if format != OutputFormat::Csv {
                return Err(unsupported("conjecture", format));
            }
            let specs: Vec<GridSpec> = specs_for(&family, Span(1, m_max), Span(1, n_max))
                .into_iter()
                .filter(GridSpec::in_conjecture_range)
                .collect();
            let limit = Some(seconds(time_limit)?);
            let rows = with_workers(workers, || report::conjecture(&specs, limit))?;
            emit(out, &report::conjecture_csv(&rows))?;
            let bad = rows
                .iter()
                .any(|r| !r.set_resolves || r.status == report::Agreement::Disagree);
            Ok(if bad { EXIT_FAILED } else { EXIT_OK })
        }
        Command::Survey {
            family_pos,
            m_pos,
            n_pos,
            families,
            m,
            n,
            time_limit,
            node_limit,
            no_timings,
            format,
            workers,
        } => {
            if format != OutputFormat::Csv {
                return Err(unsupported("survey", format));
            }
            let families = family_pos.map_or(families, |f| f.0);
            let m = m_pos.unwrap_or(m);
            let n = n_pos.or(n).unwrap_or(m);
            let specs = specs_for(&families, m, n);
            let opts = SolveOptions {
                max_k: None,
                time_limit: if node_limit.is_some() { None } else { Some(seconds(time_limit)?) },
                node_limit,
                parallel: true,
            };
            let rows = with_workers(workers, || report::survey(&specs, &opts, !no_timings))?;
            emit(out, &report::survey_csv(&rows))?;
            Ok(EXIT_OK)
        }
    }
}

pub fn cmd_gen(spec: GridSpec, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let g = spec.build();
    let text = match format {
        OutputFormat::Edgelist => format::edgelist(&g),
        OutputFormat::Dot => format::dot(&g, &format!("{}_{}_{}", spec.family, spec.m, spec.n)),
        OutputFormat::Json => format::json(&g, Some(&spec)),
        OutputFormat::Csv => return Err(unsupported("gen", format)),
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct DimJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    vertices: usize,
    dim: usize,
    lower_bound: usize,
    basis: Vec<[i64; 2]>,
    status: SolveStatus,
    nodes_explored: u64,
    elapsed_ms: u128,
}

pub fn cmd_dim(
    g: &DiagGraph,
    spec: Option<&GridSpec>,
    greedy: bool,
    opts: &SolveOptions,
    format: Option<OutputFormat>,
    out: &mut dyn Write,
) -> CmdResult {
    if let Some(f) = format.filter(|&f| f != OutputFormat::Json) {
        return Err(unsupported("dim", f));
    }
    let d = all_pairs(g).map_err(|e| CliError::usage(e.to_string()))?;
    let result = if greedy {
        let started = std::time::Instant::now();
        let basis = greedy_upper_bound(&PairMatrix::new(&d));
        villarceau::resolver::SolveResult {
            dim: basis.len(),
            lower_bound: villarceau::resolver::twin_lower_bound(g, &d),
            basis,
            nodes_explored: 0,
            elapsed: started.elapsed(),
            status: SolveStatus::UpperBoundOnly,
        }
    } else {
        exact_dimension(g, &d, opts)
    };
    let basis = result.basis.coords(g);
    let text = if format == Some(OutputFormat::Json) {
        let doc = DimJson {
            family: spec.map(|s| s.family),
            m: spec.map(|s| s.m),
            n: spec.map(|s| s.n),
            vertices: g.vertex_count(),
            dim: result.dim,
            lower_bound: result.lower_bound,
            basis: basis.iter().map(|c| [c.x, c.y]).collect(),
            status: result.status,
            nodes_explored: result.nodes_explored,
            elapsed_ms: result.elapsed.as_millis(),
        };
        serde_json::to_string(&doc).expect("dim json serializes") + "\n"
    } else {
        let coords: Vec<String> = basis.iter().map(Coord::to_string).collect();
        format!(
            "dim: {}\nlower_bound: {}\nbasis: {}\nstatus: {}\nnodes: {}\nelapsed_ms: {}\n",
            result.dim,
            result.lower_bound,
            coords.join(" "),
            result.status.as_str(),
            result.nodes_explored,
            result.elapsed.as_millis()
        )
    };
    emit(out, &text)?;
    Ok(match result.status {
        SolveStatus::Timeout => EXIT_LIMIT,
        _ => EXIT_OK,
    })
}

pub fn cmd_verify(spec: GridSpec, landmarks: &[String], out: &mut dyn Write) -> CmdResult {
    let coords = landmarks
        .iter()
        .map(|s| s.parse::<Coord>().map_err(CliError::usage))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(&bad) = coords.iter().find(|&&c| !villarceau::generators::is_vertex(&spec, c)) {
        return Err(CliError::usage(format!("{bad} is not a vertex of {spec}")));
    }
    let g = spec.build();
    let set = LandmarkSet::from_coords(&coords, &g)?;
    let d = all_pairs(&g)?;
    match is_resolving(&d, set.ids())? {
        Resolution::Resolving => {
            emit(out, "RESOLVING\n")?;
            Ok(EXIT_OK)
        }
        Resolution::Collision(u, v) => {
            emit(out, &format!("NOT RESOLVING\nwitness: {} {}\n", g.coord(u), g.coord(v)))?;
            Ok(EXIT_FAILED)
        }
    }
}
