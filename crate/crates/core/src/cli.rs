//! Command-line front end. [`run`] is the whole program; the `fjoin` binary
//! only wires it to the process's arguments and standard streams.
//!
//! Exit status: 0 success, 1 input/parse failure or verification mismatch,
//! 2 usage error, 3 arithmetic overflow.

use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};

use crate::closed_form::{AuditGrid, audit_examples};
use crate::derived::{DerivedKind, derive};
use crate::error::Error;
use crate::graph::{Family, Graph, generate, read_edge_list};
use crate::harness::{BenchParams, BenchRecord, CorpusConfig, bench_compare_with, verify_corpus};
use crate::indices::invariants;
use crate::join::{JoinMode, OperationSpec, f_join};

/// Environment variable consulted for the seed when `--seed` is absent.
pub const SEED_ENV: &str = "FJOIN_SEED";

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_OVERFLOW: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "fjoin", version, about = "F-index of vertex and edge F-join graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_kind(s: &str) -> Result<DerivedKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<JoinMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a path, cycle, complete graph or star as an edge list.
    Gen {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Print S(G), R(G), Q(G) or T(G) of the input graph.
    Derive {
        #[arg(long, value_parser = parse_kind)]
        kind: DerivedKind,
        /// Input edge list (stdin if absent).
        #[arg(long = "in")]
        input: Option<String>,
        /// Write the vertex provenance sidecar JSON to this file.
        #[arg(long)]
        tags: Option<String>,
    },
    /// Print the vertex or edge F-join of two graphs.
    Join {
        #[arg(long, value_parser = parse_kind)]
        kind: DerivedKind,
        #[arg(long, value_parser = parse_mode)]
        mode: JoinMode,
        /// First operand (stdin if absent).
        #[arg(long)]
        g1: Option<String>,
        /// Second operand (stdin if absent).
        #[arg(long)]
        g2: Option<String>,
    },
    /// Print n, m, M1, M2, F, HM, ReZM and M4 of the input graph.
    Index {
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check all eight closed formulas against built composites over a corpus.
    Verify {
        /// JSON corpus config; the built-in default corpus is used if absent.
        #[arg(long)]
        config: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check the printed path/cycle example polynomials against the formulas.
    Audit {
        /// HI, LO..HI or NLO..NHI,MLO..MHI
        #[arg(long, default_value = "8")]
        grid: String,
    },
    /// Time closed-form evaluation against composite construction.
    Bench {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: Option<u64>,
        /// Override the edge count of G1 instead of deriving it from the density.
        #[arg(long)]
        m1: Option<usize>,
        /// Override the edge count of G2.
        #[arg(long)]
        m2: Option<usize>,
        /// Largest composite the construction arm may build.
        #[arg(long, default_value_t = crate::harness::DEFAULT_EDGE_BUDGET)]
        max_edges: usize,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<u8, Failure>;

/// Runs the CLI reading `FJOIN_SEED` from the process environment.
pub fn run<R: Read, W: Write, E: Write>(args: &[String], stdin: R, stdout: &mut W, stderr: &mut E) -> u8 {
    let env_seed = std::env::var(SEED_ENV).ok();
    run_with_env(args, env_seed.as_deref(), stdin, stdout, stderr)
}

/// Like [`run`], with the `FJOIN_SEED` value passed explicitly.
pub fn run_with_env<R: Read, W: Write, E: Write>(
    args: &[String],
    env_seed: Option<&str>,
    stdin: R,
    stdout: &mut W,
    stderr: &mut E,
) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut stdin = Some(stdin);
    match dispatch(cli.command, env_seed, &mut stdin, stdout) {
        Ok(code) => code,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Usage(msg) => (EXIT_USAGE, msg),
                Failure::Io(msg) => (EXIT_FAILURE, msg),
                Failure::Lib(e) => {
                    let code = match e {
                        Error::Domain(_) => EXIT_USAGE,
                        Error::Overflow { .. } => EXIT_OVERFLOW,
                        Error::Parse { .. } | Error::InvalidGraph(_) => EXIT_FAILURE,
                    };
                    (code, e.to_string())
                }
            };
            let _ = writeln!(stderr, "fjoin: {message}");
            code
        }
    }
}

fn resolve_seed(flag: Option<u64>, env_seed: Option<&str>) -> Result<Option<u64>, Failure> {
    match (flag, env_seed) {
        (Some(seed), _) => Ok(Some(seed)),
        (None, Some(text)) => text
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{SEED_ENV}={text:?} is not an unsigned 64-bit integer"))),
        (None, None) => Ok(None),
    }
}

fn read_graph<R: Read>(path: Option<&str>, stdin: &mut Option<R>) -> Result<Graph, Failure> {
    match path {
        Some(p) if p != "-" => {
            let file = fs::File::open(p).map_err(|e| Failure::Io(format!("{p}: {e}")))?;
            read_edge_list(file).map_err(|e| match e {
                Error::Parse { line, message } => Failure::Io(format!("{p}: line {line}: {message}")),
                other => Failure::Lib(other),
            })
        }
        _ => {
            let reader = stdin
                .take()
                .ok_or_else(|| Failure::Usage("standard input can feed only one operand".into()))?;
            Ok(read_edge_list(reader)?)
        }
    }
}

fn emit<W: Write>(stdout: &mut W, text: &str) -> Result<(), Failure> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| Failure::Io(format!("write failed: {e}")))
}

fn dispatch<R: Read, W: Write>(
    command: Command,
    env_seed: Option<&str>,
    stdin: &mut Option<R>,
    stdout: &mut W,
) -> Outcome {
    match command {
        Command::Gen { family, n } => {
            emit(stdout, &generate(family, n)?.to_edge_list())?;
        }
        Command::Derive { kind, input, tags } => {
            let graph = read_graph(input.as_deref(), stdin)?;
            let derived = derive(kind, &graph);
            if let Some(path) = tags {
                fs::write(&path, derived.provenance_json())
                    .map_err(|e| Failure::Io(format!("{path}: {e}")))?;
            }
            emit(stdout, &derived.graph().to_edge_list())?;
        }
        Command::Join { kind, mode, g1, g2 } => {
            if g1.is_none() && g2.is_none() {
                return Err(Failure::Usage(
                    "join needs at least one of --g1/--g2 as a file; stdin can supply only one".into(),
                ));
            }
            let first = read_graph(g1.as_deref(), stdin)?;
            let second = read_graph(g2.as_deref(), stdin)?;
            let composite = f_join(OperationSpec::new(kind, mode), &first, &second);
            emit(stdout, &composite.graph().to_edge_list())?;
        }
        Command::Index { input, json } => {
            let inv = invariants(&read_graph(input.as_deref(), stdin)?)?;
            if json {
                emit(stdout, &format!("{}\n", inv.to_json()))?;
            } else {
                let rows = [
                    ("n", inv.n as u128),
                    ("m", inv.m as u128),
                    ("M1", inv.m1),
                    ("M2", inv.m2),
                    ("F", inv.f),
                    ("HM", inv.hm),
                    ("ReZM", inv.rezm),
                    ("M4", inv.m4),
                ];
                let width = rows.iter().map(|(_, v)| v.to_string().len()).max().unwrap_or(1);
                let text: String = rows
                    .iter()
                    .map(|(name, value)| format!("{name:<5}{value:>width$}\n"))
                    .collect();
                emit(stdout, &text)?;
            }
        }
        Command::Verify { config, seed } => {
            let mut corpus = match config {
                Some(path) => {
                    let text = fs::read_to_string(&path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
                    serde_json::from_str::<CorpusConfig>(&text)
                        .map_err(|e| Failure::Io(format!("{path}: {e}")))?
                }
                None => CorpusConfig::default(),
            };
            if let Some(seed) = resolve_seed(seed, env_seed)? {
                corpus.seed = seed;
            }
            let report = verify_corpus(&corpus)?;
            emit(stdout, &report.to_json())?;
            return Ok(if report.is_clean() { EXIT_OK } else { EXIT_FAILURE });
        }
        Command::Audit { grid } => {
            let report = audit_examples(&AuditGrid::parse(&grid)?)?;
            emit(stdout, &report.to_json())?;
        }
        Command::Bench {
            n1,
            n2,
            density,
            seed,
            m1,
            m2,
            max_edges,
        } => {
            let seed = resolve_seed(seed, env_seed)?.unwrap_or(0);
            let mut params = BenchParams::from_density(n1, n2, density, seed)?;
            params.m1 = m1.unwrap_or(params.m1);
            params.m2 = m2.unwrap_or(params.m2);
            params.max_edges = max_edges;
            let record = bench_compare_with(params)?;
            emit(stdout, &format!("{}\n{}\n", BenchRecord::CSV_HEADER, record.csv_row()))?;
        }
    }
    Ok(EXIT_OK)
}
