use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use kces::bounds::{combined_lower_bound, max_kces_dim, optimal_partition_shape, trivial_case, Composition};
use kces::catalog::{lookup, CatalogEntry};
use kces::construction::{build_kces, min_spanning_count};
use kces::io::{
    basis_to_json, kces_result_to_json, parse_rational, ppt_state_to_json, product_set_from_json, product_set_to_json,
    state_input_from_json, verdict_to_json,
};
use kces::product::{ppt_state_from_set, vector_depth};
use kces::{verify_level, Rational, Scenario};

#[derive(Parser)]
#[command(
    name = "kces",
    version,
    about = "Exact tools for subspaces of bounded entanglement depth"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ScenarioArgs {
    /// Local dimension.
    #[arg(long)]
    d: u32,
    /// Number of parties.
    #[arg(long)]
    n: u32,
    /// Entanglement depth.
    #[arg(long)]
    k: u32,
}

impl ScenarioArgs {
    fn scenario(self) -> Result<Scenario, String> {
        Scenario::new(self.d, self.n, self.k).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Maximal dimension and the smallest spanning set of the construction.
    Dims(ScenarioArgs),
    /// Lower bounds on the size of sets unextendible at level k - 1.
    Bounds(ScenarioArgs),
    /// Builds the Vandermonde spanning set and its orthocomplement.
    Construct {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Number of Vandermonde vectors (defaults to the minimum).
        #[arg(long)]
        count: Option<usize>,
        /// Comma-separated increasing positive nodes, e.g. `1,2,7/2`.
        #[arg(long, value_delimiter = ',')]
        nodes: Option<Vec<String>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decides unextendibility by products across blocks of at most `level` parties.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        level: usize,
    },
    /// Entanglement depth of each basis row or of a raw vector.
    Depth {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Emits a named reference set or basis.
    Catalog {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normalized projector onto the orthocomplement, with partial-transpose checks.
    PptState {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct DimsJson {
    scenario: Scenario,
    max_kces_dim: String,
    optimal_partition_shape: Composition,
    min_spanning_count: String,
}

#[derive(Serialize)]
struct BoundsJson {
    scenario: Scenario,
    trivial: String,
    trivial_case: String,
    pigeonhole: String,
    combined: String,
    pigeonhole_strict: bool,
}

#[derive(Serialize)]
struct DepthJson {
    depth: usize,
    finest: Vec<Vec<usize>>,
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

/// Writes `doc` to `out` when given (returning a summary line), else returns `doc`.
fn emit(doc: String, out: Option<&Path>, summary: impl FnOnce() -> String, json: bool) -> Result<String, String> {
    match out {
        None => Ok(doc),
        Some(path) => {
            fs::write(path, doc + "\n").map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            Ok(if json { String::new() } else { summary() })
        }
    }
}

fn json_line<J: Serialize>(j: &J) -> String {
    serde_json::to_string(j).expect("plain structs always serialize")
}

fn run(cli: Cli) -> Result<String, String> {
    let json = cli.json;
    match cli.command {
        Command::Dims(args) => {
            let s = args.scenario()?;
            let dim = max_kces_dim(s);
            let shape = optimal_partition_shape(s);
            let count = min_spanning_count(s);
            Ok(if json {
                json_line(&DimsJson {
                    scenario: s,
                    max_kces_dim: dim.to_string(),
                    optimal_partition_shape: shape,
                    min_spanning_count: count.to_string(),
                })
            } else {
                let parts: Vec<String> = shape.0.iter().map(u32::to_string).collect();
                format!(
                    "max k-CES dim: {dim}; min spanning count: {count}\noptimal partition shape: {}",
                    parts.join("+")
                )
            })
        }
        Command::Bounds(args) => {
            let s = args.scenario()?;
            let b = combined_lower_bound(s);
            let case = format!("{:?}", trivial_case(s));
            Ok(if json {
                json_line(&BoundsJson {
                    scenario: s,
                    trivial: b.trivial.to_string(),
                    trivial_case: case,
                    pigeonhole: b.pigeonhole.to_string(),
                    combined: b.value.to_string(),
                    pigeonhole_strict: b.pigeonhole_strict,
                })
            } else {
                format!(
                    "trivial: {} ({case}); pigeonhole: {}; combined: {}; pigeonhole strict: {}",
                    b.trivial, b.pigeonhole, b.value, b.pigeonhole_strict
                )
            })
        }
        Command::Construct {
            scenario,
            count,
            nodes,
            out,
        } => {
            let s = scenario.scenario()?;
            let nodes = nodes
                .map(|ns| {
                    ns.iter()
                        .map(|x| parse_rational(x.trim()))
                        .collect::<Result<Vec<Rational>, _>>()
                })
                .transpose()
                .map_err(|e| e.to_string())?;
            let count = match (count, &nodes) {
                (Some(c), _) => c,
                (None, Some(ns)) => ns.len(),
                (None, None) => {
                    let min = min_spanning_count(s);
                    usize::try_from(&min).map_err(|_| format!("minimal count {min} is too large"))?
                }
            };
            let r = build_kces::<Rational>(s, count, nodes).map_err(|e| e.to_string())?;
            let summary = || {
                format!(
                    "{} vectors; complement dimension {}; certified level {}",
                    r.spanning.len(),
                    r.complement.dim(),
                    r.certified_level
                )
            };
            emit(kces_result_to_json(&r), out.as_deref(), summary, json)
        }
        Command::Verify { input, level } => {
            let set = product_set_from_json(&read(&input)?).map_err(|e| e.to_string())?;
            let verdict = verify_level(&set, level).map_err(|e| e.to_string())?;
            Ok(verdict_to_json(&verdict, set.dims()))
        }
        Command::Depth { input } => {
            let (dims, rows) = state_input_from_json(&read(&input)?).map_err(|e| e.to_string())?;
            let depths = rows
                .iter()
                .map(|r| vector_depth(r, &dims))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            Ok(if json {
                let out: Vec<DepthJson> = depths
                    .iter()
                    .map(|d| DepthJson {
                        depth: d.depth,
                        finest: d.finest.one_based(),
                    })
                    .collect();
                json_line(&out)
            } else {
                let lines: Vec<String> = depths
                    .iter()
                    .enumerate()
                    .map(|(i, d)| format!("row {}: depth {}; finest {}", i + 1, d.depth, d.finest))
                    .collect();
                lines.join("\n")
            })
        }
        Command::Catalog { name, out } => {
            let (doc, summary) = match lookup::<Rational>(&name).map_err(|e| e.to_string())? {
                CatalogEntry::Set(s) => (product_set_to_json(&s), format!("{name}: {} product vectors", s.len())),
                CatalogEntry::Basis(b) => (basis_to_json(&b), format!("{name}: basis of dimension {}", b.dim())),
            };
            emit(doc, out.as_deref(), || summary, json)
        }
        Command::PptState { input, out } => {
            let set = product_set_from_json(&read(&input)?).map_err(|e| e.to_string())?;
            let state = ppt_state_from_set(&set).map_err(|e| e.to_string())?;
            let summary = || {
                let mut lines = vec![format!(
                    "rho: {0}x{0}; trace {1}; psd {2}",
                    state.rho.rows(),
                    state.rho.trace(),
                    state.rho_psd
                )];
                lines.extend(state.ppt_verdicts.iter().map(|(p, ok)| format!("{p}: ppt {ok}")));
                lines.push(format!("ppt: {}", state.is_ppt()));
                lines.join("\n")
            };
            emit(ppt_state_to_json(&state, set.dims()), out.as_deref(), summary, json)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("KCES_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("KCES_THREADS must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(text) => {
            if !text.is_empty() {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
