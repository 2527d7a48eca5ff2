//! Command-line front end. Every run is a pure function of its arguments.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use thiserror::Error;

use crate::algebra::{AlgebraError, LinearCode, PrimeField};
use crate::bounds::{psi_bruteforce, psi_closed, BoundReport, BoundsError, LrcParams, CSV_HEADER};
use crate::graph_lrc::{
    cycle_code_params, extend_to_tanner, generate_regular_girth, named_graph, GraphError, SimpleGraph,
};
use crate::poly_lrc::{ConstructionError, LrcCode};
use crate::verify::{cross_check, Claims, VerifyConfig, COLUMN_SUBSET_GUARD, REPORT_CSV_HEADER};
use crate::FpMatrix;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "lrc", version, about = "Locally repairable codes: bounds, constructions, verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Guards {
    /// Exhaustive sweeps may visit at most 2^GUARD_K codewords.
    #[arg(long = "guard-k", default_value_t = 24)]
    pub guard_k: u32,
    /// Largest dual-codeword weight searched for repair sets.
    #[arg(long = "dual-cap", default_value_t = 6)]
    pub dual_cap: usize,
}

impl Guards {
    fn config(&self) -> VerifyConfig {
        VerifyConfig {
            guard_bits: self.guard_k,
            dual_cap: self.dual_cap,
            column_guard: COLUMN_SUBSET_GUARD,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    TamoBarg,
    Modified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    /// Edge list: `V E` then `u v` lines.
    Graph,
    /// Vertex-edge incidence matrix.
    Parity,
    /// Generator matrix of the cycle code.
    Generator,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All distance bounds for one parameter triple.
    Bound {
        n: u32,
        k: u32,
        r: u32,
        #[arg(long)]
        csv: bool,
    },
    /// Exact Psi(x) with a maximizing configuration.
    Psi { x: u32, n1: u32, n2: u32, r: u32 },
    /// Build an evaluation code and write its generator matrix.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        n: usize,
        k: usize,
        r: usize,
        /// Field modulus; defaults to the smallest suitable prime.
        #[arg(long)]
        q: Option<u64>,
        /// Matrix file; the header goes to `<out>.meta`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cycle code of a graph: `name:<id>`, `file:<path>` or
    /// `gen:<degree>,<girth>,<vertices>[,<seed>]`.
    Graph {
        source: String,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        guards: Guards,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a matrix file against claimed distance, locality, availability.
    Verify {
        matrix: PathBuf,
        /// The file holds a parity-check matrix rather than a generator.
        #[arg(long)]
        parity: bool,
        /// key=value claims file; defaults to `<matrix>.meta` when present.
        #[arg(long)]
        claims: Option<PathBuf>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        locality: Option<usize>,
        #[arg(long)]
        availability: Option<usize>,
        #[command(flatten)]
        guards: Guards,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV of bounds over a parameter sweep.
    Table {
        #[arg(long, default_value_t = 3)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value_t = 1)]
        r_min: u32,
        #[arg(long)]
        r_max: u32,
        /// Keep only rows with n1 <= n2.
        #[arg(long)]
        applicable_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a graph source as an edge list or matrix.
    Export {
        source: String,
        #[arg(long, value_enum, default_value_t = ExportFormat::Parity)]
        format: ExportFormat,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a command produced: text for stdout or `--out`, and whether every
/// check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn meta_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta");
    PathBuf::from(s)
}

pub struct LoadedGraph {
    pub graph: SimpleGraph,
    /// `Some(met)` for generated graphs.
    pub generator_met: Option<bool>,
}

/// Resolves `name:`, `file:` and `gen:` graph sources.
pub fn load_graph(source: &str, seed: Option<u64>) -> Result<LoadedGraph, CliError> {
    let (scheme, rest) = source
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("graph source {source:?} needs a name:, file: or gen: prefix")))?;
    match scheme {
        "name" => Ok(LoadedGraph {
            graph: named_graph(rest)?,
            generator_met: None,
        }),
        "file" => Ok(LoadedGraph {
            graph: SimpleGraph::parse_text(&read(Path::new(rest))?)?,
            generator_met: None,
        }),
        "gen" => {
            let nums: Vec<u64> = rest
                .split(',')
                .map(|s| s.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Usage(format!("bad generator source {rest:?}")))?;
            let (degree, girth, budget, seed) = match (&nums[..], seed) {
                ([d, g, m, s], None) => (*d, *g, *m, *s),
                ([d, g, m], Some(s)) => (*d, *g, *m, s),
                ([_, _, _, _], Some(_)) => {
                    return Err(CliError::Usage("seed given both in the source and via --seed".into()))
                }
                ([_, _, _], None) => return Err(CliError::Usage("generated graphs need a seed".into())),
                _ => return Err(CliError::Usage(format!("bad generator source {rest:?}"))),
            };
            let out = generate_regular_girth(degree as usize, girth as usize, budget as usize, seed)?;
            Ok(LoadedGraph {
                graph: out.graph,
                generator_met: Some(out.met),
            })
        }
        other => Err(CliError::Usage(format!("unknown graph source {other:?}"))),
    }
}

fn parse_claims(text: &str) -> Result<Claims, CliError> {
    let mut claims = Claims::default();
    for line in text.lines() {
        let Some((key, value)) = line.split_once('=') else {
            continue;
        };
        let slot = match key.trim() {
            "d_lower" => &mut claims.d_lower,
            "locality" => &mut claims.locality,
            "availability" => &mut claims.availability,
            _ => continue,
        };
        let v = value.trim();
        *slot = Some(v.parse().map_err(|_| CliError::Usage(format!("claim {key}={v} is not a count")))?);
    }
    Ok(claims)
}

fn field_arg(q: Option<u64>) -> Result<Option<PrimeField>, CliError> {
    Ok(q.map(PrimeField::new).transpose()?)
}

fn cmd_bound(n: u32, k: u32, r: u32, csv: bool) -> Result<Outcome, CliError> {
    let report = BoundReport::compute(LrcParams::new(n, k, r)?);
    let text = if csv {
        format!("{CSV_HEADER}\n{}\n", report.to_csv_row())
    } else {
        report.to_kv()
    };
    Ok(Outcome { text, passed: true })
}

fn cmd_psi(x: u32, n1: u32, n2: u32, r: u32) -> Result<Outcome, CliError> {
    let w = psi_bruteforce(x, n1, n2, r)?;
    let mut text = String::new();
    let _ = writeln!(text, "x={x}\nn1={n1}\nn2={n2}\nr={r}");
    let _ = writeln!(text, "psi={}", w.value);
    let _ = writeln!(text, "parts={}", w.s);
    let _ = writeln!(text, "t={}", w.t.iter().join(","));
    let _ = writeln!(text, "a={}", w.a.iter().join(","));
    if n1 <= n2 {
        let _ = writeln!(text, "closed_form={}", psi_closed(x, r)?);
    }
    Ok(Outcome { text, passed: true })
}

fn cmd_construct(kind: Kind, n: usize, k: usize, r: usize, q: Option<u64>, out: Option<&Path>) -> Result<Outcome, CliError> {
    let field = field_arg(q)?;
    let code = match kind {
        Kind::TamoBarg => LrcCode::tamo_barg(n, k, r, field)?,
        Kind::Modified => LrcCode::modified(n, k, r, field)?,
    };
    let header = code.header();
    let matrix = code.generator_matrix().to_text();
    let text = match out {
        Some(path) => {
            write(path, &matrix)?;
            write(&meta_path(path), &header)?;
            header
        }
        None => format!("{header}\n{matrix}"),
    };
    Ok(Outcome { text, passed: true })
}

fn cmd_graph(source: &str, seed: Option<u64>, guards: Guards) -> Result<Outcome, CliError> {
    let loaded = load_graph(source, seed)?;
    let g = &loaded.graph;
    let t = extend_to_tanner(g);
    let params = cycle_code_params(&t, guards.guard_k)?;
    let mut text = String::new();
    let _ = writeln!(text, "graph={source}");
    let _ = writeln!(text, "vertices={}\nedges={}", g.vertex_count(), g.edge_count());
    let degree = g.regular_degree().map_or("irregular".to_string(), |d| d.to_string());
    let _ = writeln!(text, "regular_degree={degree}");
    let _ = writeln!(text, "components={}\ngirth={}", g.component_count(), t.girth());
    if let Some(met) = loaded.generator_met {
        let _ = writeln!(text, "generator_met={met}");
    }
    let _ = writeln!(
        text,
        "params=[{},{},{}] locality={} availability={} d_source={}",
        params.n,
        params.k,
        params.d,
        params.locality,
        params.availability,
        params.d_source.name()
    );
    let claims = Claims {
        d_lower: Some(params.d),
        locality: Some(params.locality),
        availability: Some(params.availability),
    };
    let report = cross_check(source, t.code(), claims, &guards.config());
    text.push_str(&report.to_kv());
    Ok(Outcome {
        text,
        passed: report.passed(),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    matrix: &Path,
    parity: bool,
    claims_file: Option<&Path>,
    d: Option<usize>,
    locality: Option<usize>,
    availability: Option<usize>,
    guards: Guards,
    csv: bool,
) -> Result<Outcome, CliError> {
    let m = FpMatrix::parse_text(&read(matrix)?)?;
    let code = if parity {
        LinearCode::from_parity_check(&m)
    } else {
        LinearCode::from_generator(&m)
    };
    let sidecar = meta_path(matrix);
    let mut claims = match claims_file {
        Some(p) => parse_claims(&read(p)?)?,
        None if sidecar.exists() => parse_claims(&read(&sidecar)?)?,
        None => Claims::default(),
    };
    claims.d_lower = d.or(claims.d_lower);
    claims.locality = locality.or(claims.locality);
    claims.availability = availability.or(claims.availability);
    let label = matrix.file_name().map_or("matrix".into(), |s| s.to_string_lossy().into_owned());
    let report = cross_check(&label, &code, claims, &guards.config());
    let text = if csv {
        format!("{REPORT_CSV_HEADER}\n{}\n", report.to_csv_row())
    } else {
        report.to_kv()
    };
    Ok(Outcome {
        text,
        passed: report.passed(),
    })
}

fn achievability_regime(p: &LrcParams) -> bool {
    p.n1() <= p.n2() && p.u() + p.v() > p.r && p.n2() != p.r
}

/// Bound rows for every valid triple in the sweep, ordered by `(r, n, k)`.
pub fn bound_table(n_min: u32, n_max: u32, r_min: u32, r_max: u32, applicable_only: bool) -> String {
    let mut text = format!("{CSV_HEADER},strict,achievability_regime\n");
    for r in r_min.max(1)..=r_max {
        for n in n_min..=n_max {
            for k in r + 1..n {
                let Ok(p) = LrcParams::new(n, k, r) else {
                    continue;
                };
                let report = BoundReport::compute(p);
                if applicable_only && !report.applicable() {
                    continue;
                }
                let strict = report.improved.is_some_and(|b| b.value < report.gopalan);
                let _ = writeln!(text, "{},{strict},{}", report.to_csv_row(), achievability_regime(&p));
            }
        }
    }
    text
}

fn cmd_export(source: &str, format: ExportFormat, seed: Option<u64>) -> Result<Outcome, CliError> {
    let g = load_graph(source, seed)?.graph;
    let text = match format {
        ExportFormat::Graph => g.to_text(),
        ExportFormat::Parity => extend_to_tanner(&g).parity_check().to_text(),
        ExportFormat::Generator => extend_to_tanner(&g).code().generator().to_text(),
    };
    Ok(Outcome { text, passed: true })
}

/// Runs a parsed command. Output goes to `--out` when given (for `construct`
/// the matrix and header are written there and the header echoed), else it
/// is returned for stdout.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let (outcome, out) = match &cli.command {
        Command::Bound { n, k, r, csv } => (cmd_bound(*n, *k, *r, *csv)?, None),
        Command::Psi { x, n1, n2, r } => (cmd_psi(*x, *n1, *n2, *r)?, None),
        Command::Construct { kind, n, k, r, q, out } => {
            return cmd_construct(*kind, *n, *k, *r, *q, out.as_deref());
        }
        Command::Graph {
            source,
            seed,
            guards,
            out,
        } => (cmd_graph(source, *seed, *guards)?, out.as_deref()),
        Command::Verify {
            matrix,
            parity,
            claims,
            d,
            locality,
            availability,
            guards,
            csv,
            out,
        } => (
            cmd_verify(matrix, *parity, claims.as_deref(), *d, *locality, *availability, *guards, *csv)?,
            out.as_deref(),
        ),
        Command::Table {
            n_min,
            n_max,
            r_min,
            r_max,
            applicable_only,
            out,
        } => (
            Outcome {
                text: bound_table(*n_min, *n_max, *r_min, *r_max, *applicable_only),
                passed: true,
            },
            out.as_deref(),
        ),
        Command::Export {
            source,
            format,
            seed,
            out,
        } => (cmd_export(source, *format, *seed)?, out.as_deref()),
    };
    match out {
        Some(path) => {
            write(path, &outcome.text)?;
            Ok(Outcome {
                text: String::new(),
                passed: outcome.passed,
            })
        }
        None => Ok(outcome),
    }
}

/// Exit status: 0 success, 1 failed verification, 2 usage or input error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.text.as_bytes());
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
