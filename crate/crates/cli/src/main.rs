use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crithyp::bounds::bounds_report;
use crithyp::constructor::{build_critical, BuildOptions};
use crithyp::cover::{is_critical, DEFAULT_NODE_BUDGET};
use crithyp::format;
use crithyp::generators::{base_critical, complete_critical, complete_uniform, projective_plane, DEFAULT_EDGE_CAP};
use crithyp::greedy::{self, greedy_covering};
use crithyp::oracle::{brute_force_f, brute_force_u, OracleOptions, DEFAULT_MAX_CANDIDATES, DEFAULT_ORACLE_BUDGET};
use crithyp::transforms::{add_one, add_one_checked, wreath_product};
use crithyp::Hypergraph;

/// Build, transform and verify critical intersecting hypergraphs.
#[derive(Parser)]
#[command(name = "crithyp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named hypergraph family.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Wreath product of two hypergraph files.
    Product {
        outer: PathBuf,
        inner: PathBuf,
        #[command(flatten)]
        cap: EdgeCap,
        #[command(flatten)]
        out: Output,
    },
    /// Raise the uniformity of a critical hypergraph by one.
    Augment {
        input: PathBuf,
        /// Verify criticality before and after.
        #[arg(long)]
        paranoid: bool,
        #[arg(long, env = "CRITHYP_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[command(flatten)]
        cap: EdgeCap,
        #[command(flatten)]
        out: Output,
    },
    /// Build a critical hypergraph on exactly n vertices.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Check the result with the exact cover solver.
        #[arg(long)]
        verify: bool,
        #[arg(long, env = "CRITHYP_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cap: EdgeCap,
        #[command(flatten)]
        out: Output,
    },
    /// Report whether a hypergraph file is critical.
    Verify {
        input: PathBuf,
        #[arg(long, env = "CRITHYP_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Lower and upper bounds for (n, r).
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Greedy hypergraph in which every (n-r+1)-set contains an edge.
    Greedy {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, env = "CRITHYP_SUBSET_CAP", default_value_t = greedy::DEFAULT_SUBSET_CAP)]
        subset_cap: u64,
        /// Write the per-round log as JSON.
        #[arg(long)]
        log: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Exhaustive search for f(n, r) or U(n, n-r+1, r).
    Oracle {
        #[arg(long, value_enum)]
        quantity: QuantityArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, env = "CRITHYP_ORACLE_BUDGET", default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u64,
        #[arg(long, env = "CRITHYP_MAX_CANDIDATES", default_value_t = DEFAULT_MAX_CANDIDATES)]
        max_candidates: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Convert between the JSON and text formats.
    Convert {
        input: PathBuf,
        /// Emit the text format instead of JSON.
        #[arg(long)]
        text: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum Family {
    /// All r-subsets of m vertices.
    Complete {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        cap: EdgeCap,
        #[command(flatten)]
        out: Output,
    },
    /// All r-subsets of 2r-1 vertices, padded to 2r.
    Critical {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        cap: EdgeCap,
        #[command(flatten)]
        out: Output,
    },
    /// Projective plane PG(2, q) for q = 1 or prime.
    Plane {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Cheapest critical r-uniform base.
    Base {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        cap: EdgeCap,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct EdgeCap {
    #[arg(long = "edge-cap", env = "CRITHYP_EDGE_CAP", default_value_t = DEFAULT_EDGE_CAP)]
    edge_cap: u64,
}

#[derive(Args)]
struct Output {
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantityArg {
    #[value(name = "f")]
    F,
    #[value(name = "U", alias = "u")]
    U,
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    format::parse_any(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: &Output, body: &str) -> Result<()> {
    match &out.out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn emit_hypergraph(out: &Output, h: &Hypergraph) -> Result<()> {
    emit(out, &format!("{}\n", format::to_json(h)))
}

fn pretty<T: Serialize>(value: &T) -> Result<String> {
    Ok(format!("{}\n", serde_json::to_string_pretty(value)?))
}

/// `h.json` becomes `h.plan.json`.
fn sidecar(path: &Path) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}.plan.json"))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { family } => match family {
            Family::Complete { m, r, cap, out } => emit_hypergraph(&out, &complete_uniform(m, r, cap.edge_cap)?),
            Family::Critical { r, cap, out } => emit_hypergraph(&out, &complete_critical(r, cap.edge_cap)?),
            Family::Plane { q, out } => emit_hypergraph(&out, &projective_plane(q)?),
            Family::Base { r, cap, out } => {
                let (h, choice) = base_critical(r, cap.edge_cap)?;
                log::info!("base for r={r}: {:?}", choice.kind);
                emit_hypergraph(&out, &h)
            }
        },
        Command::Product { outer, inner, cap, out } => {
            let h = wreath_product(&read_hypergraph(&outer)?, &read_hypergraph(&inner)?, cap.edge_cap)?;
            emit_hypergraph(&out, &h)
        }
        Command::Augment { input, paranoid, budget, cap, out } => {
            let h = read_hypergraph(&input)?;
            let h = if paranoid { add_one_checked(&h, cap.edge_cap, budget)? } else { add_one(&h, cap.edge_cap)? };
            emit_hypergraph(&out, &h)
        }
        Command::Construct { n, r, verify, budget, json, cap, out } => {
            let result = build_critical(n, r, BuildOptions { edge_cap: cap.edge_cap, verify, node_budget: budget })?;
            match &out.out {
                Some(path) => {
                    emit_hypergraph(&out, &result.hypergraph)?;
                    let plan_path = sidecar(path);
                    fs::write(&plan_path, pretty(&result)?)
                        .with_context(|| format!("writing {}", plan_path.display()))?;
                    if json {
                        print!("{}", pretty(&result)?);
                    } else {
                        print!("{}", construct_summary(&result));
                    }
                    Ok(())
                }
                None if json => {
                    print!("{}", pretty(&result)?);
                    Ok(())
                }
                None => emit_hypergraph(&out, &result.hypergraph),
            }
        }
        Command::Verify { input, budget, json } => {
            let h = read_hypergraph(&input)?;
            let report = is_critical(&h, budget)?;
            if json {
                #[derive(Serialize)]
                struct Verdict<'a> {
                    n: usize,
                    edges: usize,
                    #[serde(flatten)]
                    report: &'a crithyp::CriticalityReport,
                }
                print!("{}", pretty(&Verdict { n: h.n(), edges: h.edge_count(), report: &report })?);
            } else {
                println!("n={} r={} edges={}", h.n(), report.r, h.edge_count());
                println!("intersecting: {}", if report.intersecting { "yes" } else { "no" });
                println!("tau: {} (cover {:?})", report.certificate.tau, report.certificate.cover);
                match &report.reason {
                    None => println!("critical"),
                    Some(reason) => println!("not critical: {reason}"),
                }
            }
            Ok(())
        }
        Command::Bounds { n, r, json } => {
            let report = bounds_report(n, r)?;
            if json {
                print!("{}", pretty(&report)?);
            } else {
                print!("{}", report.table());
            }
            Ok(())
        }
        Command::Greedy { n, r, subset_cap, log, out } => {
            let g = greedy_covering(n, r, subset_cap)?;
            if let Some(path) = log {
                fs::write(&path, pretty(&g.log)?).with_context(|| format!("writing {}", path.display()))?;
            }
            emit_hypergraph(&out, &g.hypergraph)
        }
        Command::Oracle { quantity, n, r, budget, max_candidates, out } => {
            let options = OracleOptions { node_budget: budget, max_candidates };
            let result = match quantity {
                QuantityArg::F => brute_force_f(n, r, options)?,
                QuantityArg::U => brute_force_u(n, r, options)?,
            };
            if !result.exhaustive {
                log::warn!("budget exhausted; value lies in [{}, {}]", result.lower, result.value);
            }
            emit(&out, &pretty(&result)?)
        }
        Command::Convert { input, text, out } => {
            let h = read_hypergraph(&input)?;
            if text {
                emit(&out, &format::to_text(&h))
            } else {
                emit_hypergraph(&out, &h)
            }
        }
    }
}

fn construct_summary(result: &crithyp::BuildResult) -> String {
    let plan = &result.plan;
    let bases = plan
        .base1
        .iter()
        .chain(std::iter::once(&plan.base2))
        .map(|b| format!("{:?}(r={})", b.kind, b.uniformity))
        .collect::<Vec<_>>()
        .join(" x ");
    let verdict = match &result.verified {
        Some(report) if report.critical => "verified critical".to_string(),
        Some(report) => format!("not critical: {}", report.reason.as_deref().unwrap_or("unknown")),
        None => "not verified".to_string(),
    };
    format!(
        "n={} r={} edges={} case={:?} r1={} r2={} t={} bases={}\n{verdict}\n",
        plan.n,
        plan.r,
        result.hypergraph.edge_count(),
        plan.case,
        plan.r1,
        plan.r2,
        plan.t,
        bases,
    )
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<crithyp::Error>() {
            return if e.is_input_error() { 2 } else { 1 };
        }
        if cause.is::<std::io::Error>() || cause.is::<serde_json::Error>() {
            return 2;
        }
    }
    1
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
