//! `tsimplex` command line.
//!
//! Exit status: 0 success, 1 usage error, 2 failed verification claim,
//! 3 search budget overrun.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::embeddings::{self, MeshVertex, TripyVertex};
use crate::export;
use crate::harness::{self, CampaignConfig, Grid};
use crate::oracles::{self, FaultEnumeration, FaultSet, OracleError, OracleGraph, DEFAULT_BUDGET};
use crate::routing;
use crate::simplex::{self, GraphParams, Vertex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CLAIM_FAILED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "tsimplex", version, about = "Integer simplex T_m^n: routing, oracles, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Instance {
    /// Dimension (vertices have n+1 coordinates)
    #[arg(short = 'n', long = "dim")]
    n: usize,
    /// Side length (coordinate sum)
    #[arg(short = 'm', long = "side")]
    m: u32,
}

impl Instance {
    fn params(&self) -> Result<GraphParams, String> {
        GraphParams::new(self.n, self.m).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Args)]
struct Faults {
    /// Faulty vertex, repeatable or ';'-separated, e.g. --faults "1,0,1;0,1,1"
    #[arg(long = "faults", value_delimiter = ';')]
    faults: Vec<String>,
}

impl Faults {
    fn parse(&self, params: GraphParams) -> Result<FaultSet, String> {
        self.faults
            .iter()
            .filter(|s| !s.trim().is_empty())
            .map(|s| parse_vertex(s, params))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Edges,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MapSource {
    Mesh,
    Tripy,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every vertex, one per line
    Gen {
        #[command(flatten)]
        instance: Instance,
    },
    /// Disjoint-path container as JSON, or a fault-avoiding path when faults are given
    Route {
        u: String,
        v: String,
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        faults: Faults,
    },
    /// BFS distance, optionally avoiding faults
    Dist {
        u: String,
        v: String,
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        faults: Faults,
    },
    /// Exact diameter, optionally of the graph minus faults
    Diam {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        faults: Faults,
        /// Print the full report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Exact fault diameter D_omega by fault-set enumeration
    FaultDiam {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        omega: usize,
        /// Enumerate every fault-set size below omega, not only omega - 1
        #[arg(long)]
        all_sizes: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exact wide diameter d_omega by bounded disjoint-path search
    WideDiam {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        omega: usize,
        /// Node-expansion budget per pair and length bound
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification campaign over a grid of instances
    Verify {
        /// Instances as n1..n2,m1..m2
        #[arg(long, default_value = "2..3,1..3")]
        grid: Grid,
        /// Seed for pair sampling on large instances
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Pairs checked per instance before switching to sampling
        #[arg(long, default_value_t = 500)]
        pairs: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Audit mode: enumerate every fault-set size
        #[arg(long)]
        all_sizes: bool,
        /// Emit JSON lines instead of a table
        #[arg(long)]
        jsonl: bool,
    },
    /// Map a mesh vertex "x,y" or tripy vertex "k:x,y" into the simplex
    Map {
        #[arg(long = "from", value_enum)]
        from: MapSource,
        vertex: String,
        /// Mesh side length or tripy level count
        #[arg(short = 'm', long = "side")]
        m: u32,
    },
    /// Export the graph
    Export {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
    },
}

fn parse_vertex(text: &str, params: GraphParams) -> Result<Vertex, String> {
    Vertex::parse(text, params).map_err(|e| format!("vertex {text:?}: {e}"))
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<String> for Failure {
    fn from(msg: String) -> Self {
        Failure::Usage(msg)
    }
}

fn oracle_failure(err: OracleError) -> Failure {
    match err {
        OracleError::BudgetExceeded { .. } => Failure::Budget(err.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::Usage(format!("write failed: {e}"));
    match command {
        Command::Gen { instance } => {
            for v in instance.params()?.vertices() {
                writeln!(out, "{v}").map_err(io)?;
            }
        }
        Command::Route { u, v, instance, faults } => {
            let params = instance.params()?;
            let (u, v) = (parse_vertex(&u, params)?, parse_vertex(&v, params)?);
            let faults = faults.parse(params)?;
            if faults.is_empty() {
                let container = routing::build_container(&u, &v).map_err(|e| e.to_string())?;
                writeln!(out, "{}", to_json(&container.to_json())).map_err(io)?;
            } else {
                let path = routing::route_avoiding(&u, &v, &faults).map_err(|e| e.to_string())?;
                let body = serde_json::json!({
                    "params": {"n": params.n, "m": params.m},
                    "u": u,
                    "v": v,
                    "faults": faults,
                    "path": path,
                    "length": path.len(),
                });
                writeln!(out, "{body}").map_err(io)?;
            }
        }
        Command::Dist { u, v, instance, faults } => {
            let params = instance.params()?;
            let (u, v) = (parse_vertex(&u, params)?, parse_vertex(&v, params)?);
            let faults = faults.parse(params)?;
            let d = oracles::bfs_distance(params, &u, &v, &faults).map_err(oracle_failure)?;
            writeln!(out, "{d}").map_err(io)?;
        }
        Command::Diam { instance, faults, json } => {
            let params = instance.params()?;
            let faults = faults.parse(params)?;
            let report = oracles::exact_diameter(params, &faults).map_err(oracle_failure)?;
            let text = if json { to_json(&report) } else { report.value.to_string() };
            writeln!(out, "{text}").map_err(io)?;
        }
        Command::FaultDiam { instance, omega, all_sizes, json } => {
            let params = instance.params()?;
            let mode = if all_sizes { FaultEnumeration::AllSizes } else { FaultEnumeration::MaximalOnly };
            let report = oracles::exact_fault_diameter(params, omega, mode).map_err(oracle_failure)?;
            let text = if json { to_json(&report) } else { report.value.to_string() };
            writeln!(out, "{text}").map_err(io)?;
        }
        Command::WideDiam { instance, omega, budget, json } => {
            let params = instance.params()?;
            let report = OracleGraph::new(params).wide_diameter(omega, budget).map_err(oracle_failure)?;
            let text = if json { to_json(&report) } else { report.value.to_string() };
            writeln!(out, "{text}").map_err(io)?;
        }
        Command::Verify { grid, seed, pairs, budget, all_sizes, jsonl } => {
            let config = CampaignConfig {
                grid,
                seed,
                pair_budget: pairs,
                search_budget: budget,
                fault_mode: if all_sizes { FaultEnumeration::AllSizes } else { FaultEnumeration::MaximalOnly },
            };
            let report = harness::run_campaign(&config);
            let text = if jsonl { report.to_json_lines() } else { report.to_table() };
            write!(out, "{text}").map_err(io)?;
            if report.failures() > 0 {
                return Ok(EXIT_CLAIM_FAILED);
            }
        }
        Command::Map { from, vertex, m } => {
            let image = match from {
                MapSource::Mesh => {
                    let a: MeshVertex = vertex.parse().map_err(|e: simplex::VertexError| e.to_string())?;
                    embeddings::sigma1(a, m)
                }
                MapSource::Tripy => {
                    let a: TripyVertex = vertex.parse().map_err(|e: simplex::VertexError| e.to_string())?;
                    embeddings::sigma2(a, m)
                }
            }
            .map_err(|e| format!("vertex {vertex:?}: {e}"))?;
            writeln!(out, "{image}").map_err(io)?;
        }
        Command::Export { instance, format } => {
            let params = instance.params()?;
            let text = match format {
                ExportFormat::Dot => export::to_dot(params),
                ExportFormat::Edges => export::to_edge_lines(params),
                ExportFormat::Json => to_json(&export::to_json(params)) + "\n",
            };
            write!(out, "{text}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `argv` (including the program name), runs the command, and returns
/// the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_BUDGET
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("tsimplex").chain(args.split_whitespace());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn route_container_json() {
        let (code, out, _) = run_str("route 2,0,0 0,0,2 -n 2 -m 2");
        assert_eq!(code, EXIT_OK);
        let json: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(json["lengths"], serde_json::json!([2, 3]));
    }

    #[test]
    fn route_with_faults() {
        let (code, out, _) = run_str("route 2,0,0 0,0,2 -n 2 -m 2 --faults 1,0,1");
        assert_eq!(code, EXIT_OK);
        let json: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(json["length"], 3);
        assert_eq!(json["path"], serde_json::json!(["2,0,0", "1,1,0", "0,1,1", "0,0,2"]));
    }

    #[test]
    fn scalar_answers() {
        assert_eq!(run_str("dist 2,0,0 0,0,2 -n 2 -m 2").1, "2\n");
        assert_eq!(run_str("dist 2,0,0 0,0,2 -n 2 -m 2 --faults 1,0,1").1, "3\n");
        assert_eq!(run_str("fault-diam -n 2 -m 2 --omega 2").1, "3\n");
        assert_eq!(run_str("wide-diam -n 2 -m 2 --omega 2").1, "3\n");
        assert_eq!(run_str("diam -n 2 -m 3").1, "3\n");
        assert_eq!(run_str("diam -n 2 -m 2 --faults 1,0,1;1,1,0").1, "infinity\n");
    }

    #[test]
    fn gen_and_map() {
        assert_eq!(run_str("gen -n 1 -m 2").1, "0,2\n1,1\n2,0\n");
        assert_eq!(run_str("map --from mesh 1,0 -m 3").1, "2,1,0\n");
        assert_eq!(run_str("map --from tripy 2:1,0 -m 2").1, "0,1,1,0\n");
        assert_eq!(run_str("map --from tripy 3:1,0 -m 2").0, EXIT_USAGE);
    }

    #[test]
    fn export_formats() {
        let (code, dot, _) = run_str("export -n 2 -m 1 --format dot");
        assert_eq!(code, EXIT_OK);
        assert!(dot.starts_with("graph T {\n"));
        assert_eq!(run_str("export -n 1 -m 1 --format edges").1, "0,1 1,0\n");
        let (_, json, _) = run_str("export -n 1 -m 1 --format json");
        assert!(serde_json::from_str::<serde_json::Value>(&json).is_ok());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str("route 1,1,1 0,0,2 -n 2 -m 2").0, EXIT_USAGE);
        assert_eq!(run_str("route 2,0 0,0,2 -n 2 -m 2").0, EXIT_USAGE);
        assert_eq!(run_str("route 2,0,0 2,0,0 -n 2 -m 2").0, EXIT_USAGE);
        assert_eq!(run_str("dist 2,0,0 0,0,2 -n 0 -m 2").0, EXIT_USAGE);
        assert_eq!(run_str("gen -n 2 -m 2 --bogus").0, EXIT_USAGE);
        assert_eq!(run_str("frobnicate").0, EXIT_USAGE);
        assert_eq!(run_str("verify --grid 3..2,1..2").0, EXIT_USAGE);
        let (code, _, err) = run_str("dist 2,x,0 0,0,2 -n 2 -m 2");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("2,x,0"));
    }

    #[test]
    fn budget_overrun_exit_code() {
        assert_eq!(run_str("wide-diam -n 2 -m 2 --omega 2 --budget 5").0, EXIT_BUDGET);
    }

    #[test]
    fn verify_small_grid() {
        let (code, out, _) = run_str("verify --grid 2..2,2..2");
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("PASS"));
        let (code, out, _) = run_str("verify --grid 2..2,1..1 --jsonl");
        assert_eq!(code, EXIT_OK);
        assert!(out.lines().all(|l| serde_json::from_str::<serde_json::Value>(l).is_ok()));
    }

    #[test]
    fn help_is_success() {
        assert_eq!(run_str("--help").0, EXIT_OK);
    }

    #[test]
    fn output_is_deterministic() {
        assert_eq!(run_str("verify --grid 2..3,2..2"), run_str("verify --grid 2..3,2..2"));
    }
}
