//! qcx: spreading measures and complexities of quantum densities.
//!
//! Subcommands produce deterministic CSV (single-state reports, parameter
//! sweeps, named figure/table presets). Exit codes: 0 success, 2 argument
//! error, 3 numerical non-convergence.

mod output;
mod presets;
mod rows;
mod sweep;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

use output::{write_table, Cell, OutputSpec};
use qcx::quadrature::QuadConfig;
use rows::{Params, RowError, Target};
use sweep::{parse_values, run_sweep, SweepSpec};

#[derive(Parser)]
#[command(
    name = "qcx",
    about = "Information-theoretic spreading measures and complexities of hydrogenic, Klein-Gordon and orthogonal-polynomial densities",
    version
)]
struct Cli {
    /// Absolute quadrature tolerance (overrides QCX_TOL_ABS).
    #[arg(long, global = true)]
    tol_abs: Option<f64>,

    /// Relative quadrature tolerance (overrides QCX_TOL_REL).
    #[arg(long, global = true)]
    tol_rel: Option<f64>,

    /// Significant digits in numeric output (4..=17).
    #[arg(long, global = true, default_value_t = 12)]
    precision: usize,

    /// Write CSV to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Also write a gnuplot script next to the CSV file.
    #[arg(long, global = true)]
    emit_plot_script: bool,

    /// Worker threads for sweeps and presets.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One 3D hydrogenic orbital report.
    Hydrogen(HydrogenArgs),
    /// One D-dimensional hydrogenic state report.
    Hydrod(HydrodArgs),
    /// One Klein-Gordon (pionic) state report.
    Kleingordon(KleingordonArgs),
    /// Spreading lengths of Hermite/Laguerre polynomials.
    Polylen(PolylenArgs),
    /// Sweep one parameter of any report target.
    Sweep(SweepArgs),
    /// Run a named figure/table preset (or list them).
    Preset(PresetArgs),
}

#[derive(Args)]
struct HydrogenArgs {
    #[arg(long, default_value_t = 1.0)]
    z: f64,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    l: u32,
    #[arg(long)]
    m: i32,
}

#[derive(Args)]
struct HydrodArgs {
    #[arg(long)]
    d: u32,
    #[arg(long, default_value_t = 1.0)]
    z: f64,
    #[arg(long, default_value_t = 1)]
    n: u32,
    /// Hyperangular momenta μ_1,…,μ_{D-1} (comma separated).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    mu: Vec<i32>,
    /// Ground state shortcut (n = 1, all μ = 0).
    #[arg(long, conflicts_with_all = ["mu", "circular"])]
    ground: bool,
    /// Circular state shortcut (μ_i = n-1).
    #[arg(long, conflicts_with = "mu")]
    circular: bool,
    /// Restrict the report row to one space: position | momentum | both.
    #[arg(long, default_value = "both")]
    space: String,
}

#[derive(Args)]
struct KleingordonArgs {
    #[arg(long)]
    z: f64,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    l: u32,
    #[arg(long, default_value_t = 0)]
    m: i32,
    /// Particle mass in atomic units (defaults to the pion mass).
    #[arg(long)]
    mass: Option<f64>,
}

#[derive(Args)]
struct PolylenArgs {
    /// Polynomial family: hermite | laguerre.
    family: String,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 2)]
    q: u32,
    /// Laguerre parameter α.
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// Target: hydrogen | hydrod | kleingordon | polylen-hermite | polylen-laguerre.
    target: String,
    /// Axis parameter name (e.g. n, l, m, Z, D, q, alpha).
    #[arg(long)]
    axis: String,
    /// Axis values: "1:10", "1:10:0.5" or "1,2,5".
    #[arg(long)]
    values: String,
    /// Fixed parameters, repeatable: --set Z=1 --set l=0.
    #[arg(long = "set", value_parser = parse_assign)]
    fixed: Vec<(String, f64)>,
    /// Columns to emit (comma separated); all columns when omitted.
    #[arg(long, value_delimiter = ',')]
    columns: Vec<String>,
}

#[derive(Args)]
struct PresetArgs {
    /// Preset name, e.g. fig-1.1 or table-4.2.
    name: Option<String>,
    /// List available presets.
    #[arg(long)]
    list: bool,
}

fn parse_assign(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got '{s}'"))?;
    let value: f64 = v.parse().map_err(|_| format!("bad value in '{s}'"))?;
    Ok((k.to_string(), value))
}

const EXIT_ARGUMENT: i32 = 2;
const EXIT_NUMERICAL: i32 = 3;

fn main() {
    let cli = Cli::parse();
    let config = resolve_config(&cli);
    let out = OutputSpec {
        destination: cli.output.clone(),
        precision: cli.precision,
        emit_plot_script: cli.emit_plot_script,
    };
    if let Err(msg) = out.validate() {
        eprintln!("error: {msg}");
        std::process::exit(EXIT_ARGUMENT);
    }

    let result = match &cli.command {
        Command::Hydrogen(args) => {
            let mut p = Params::default();
            p.0.insert("Z".into(), args.z);
            p.0.insert("n".into(), args.n as f64);
            p.0.insert("l".into(), args.l as f64);
            p.0.insert("m".into(), args.m as f64);
            report(Target::Hydrogen, &p, &config, &out)
        }
        Command::Hydrod(args) => {
            let mut p = Params::default();
            p.0.insert("D".into(), args.d as f64);
            p.0.insert("Z".into(), args.z);
            p.0.insert("n".into(), args.n as f64);
            if args.ground {
                p.0.insert("kind".into(), 0.0);
            } else if args.circular {
                p.0.insert("kind".into(), 1.0);
            } else {
                if args.mu.len() != (args.d.saturating_sub(1)) as usize {
                    eprintln!(
                        "error: need {} hyperangular momenta via --mu (or use --ground/--circular)",
                        args.d.saturating_sub(1)
                    );
                    std::process::exit(EXIT_ARGUMENT);
                }
                for (j, v) in args.mu.iter().enumerate() {
                    p.0.insert(format!("mu{}", j + 1), *v as f64);
                }
            }
            match args.space.as_str() {
                "position" | "momentum" | "both" => {}
                other => {
                    eprintln!("error: unknown space '{other}'");
                    std::process::exit(EXIT_ARGUMENT);
                }
            }
            report_filtered(Target::Hydrod, &p, &config, &out, &args.space)
        }
        Command::Kleingordon(args) => {
            let mut p = Params::default();
            p.0.insert("Z".into(), args.z);
            p.0.insert("n".into(), args.n as f64);
            p.0.insert("l".into(), args.l as f64);
            p.0.insert("m".into(), args.m as f64);
            if let Some(mass) = args.mass {
                p.0.insert("mass".into(), mass);
            }
            report(Target::KleinGordon, &p, &config, &out)
        }
        Command::Polylen(args) => {
            let mut p = Params::default();
            p.0.insert("n".into(), args.n as f64);
            p.0.insert("q".into(), args.q as f64);
            let target = match args.family.as_str() {
                "hermite" => Target::PolylenHermite,
                "laguerre" => {
                    p.0.insert("alpha".into(), args.alpha);
                    Target::PolylenLaguerre
                }
                other => {
                    eprintln!("error: unknown family '{other}' (hermite | laguerre)");
                    std::process::exit(EXIT_ARGUMENT);
                }
            };
            report(target, &p, &config, &out)
        }
        Command::Sweep(args) => run_sweep_command(args, &cli, &config, &out),
        Command::Preset(args) => {
            if args.list || args.name.is_none() {
                for name in presets::PRESET_NAMES {
                    println!("{name}");
                }
                return;
            }
            let name = args.name.as_deref().unwrap();
            match presets::run_preset(name, &config, cli.workers) {
                Ok(table) => write_table(&out, &table.header, &table.rows)
                    .map_err(|e| RowError::Argument(format!("write failed: {e}"))),
                Err(e) => Err(e),
            }
        }
    };

    match result {
        Ok(()) => {}
        Err(RowError::Argument(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(EXIT_ARGUMENT);
        }
        Err(RowError::Numerical(e)) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_NUMERICAL);
        }
    }
}

/// Tolerance precedence: command flag > environment variable > default.
fn resolve_config(cli: &Cli) -> QuadConfig {
    let mut config = QuadConfig::default();
    if let Ok(v) = std::env::var("QCX_TOL_ABS") {
        if let Ok(x) = v.parse::<f64>() {
            config.abs_tol = x;
        }
    }
    if let Ok(v) = std::env::var("QCX_TOL_REL") {
        if let Ok(x) = v.parse::<f64>() {
            config.rel_tol = x;
        }
    }
    if let Some(x) = cli.tol_abs {
        config.abs_tol = x;
    }
    if let Some(x) = cli.tol_rel {
        config.rel_tol = x;
    }
    config
}

fn report(
    target: Target,
    p: &Params,
    config: &QuadConfig,
    out: &OutputSpec,
) -> Result<(), RowError> {
    let row = target.build_row(p, config)?;
    let header: Vec<String> = row.iter().map(|(k, _)| k.to_string()).collect();
    let cells: Vec<Cell> = row.into_iter().map(|(_, c)| c).collect();
    write_table(out, &header, &[cells])
        .map_err(|e| RowError::Argument(format!("write failed: {e}")))
}

/// The hydrod row filtered to one space when requested.
fn report_filtered(
    target: Target,
    p: &Params,
    config: &QuadConfig,
    out: &OutputSpec,
    space: &str,
) -> Result<(), RowError> {
    let row = target.build_row(p, config)?;
    let keep = |k: &str| -> bool {
        match space {
            "position" => !k.ends_with("_mom") && k != "k3",
            "momentum" => !k.ends_with("_pos") && k != "k1",
            _ => true,
        }
    };
    let header: Vec<String> = row
        .iter()
        .filter(|(k, _)| keep(k))
        .map(|(k, _)| k.to_string())
        .collect();
    let cells: Vec<Cell> = row
        .into_iter()
        .filter(|(k, _)| keep(k))
        .map(|(_, c)| c)
        .collect();
    write_table(out, &header, &[cells])
        .map_err(|e| RowError::Argument(format!("write failed: {e}")))
}

fn run_sweep_command(
    args: &SweepArgs,
    cli: &Cli,
    config: &QuadConfig,
    out: &OutputSpec,
) -> Result<(), RowError> {
    let target = Target::parse(&args.target).map_err(RowError::Argument)?;
    let values = parse_values(&args.values).map_err(RowError::Argument)?;
    let mut fixed = Params::default();
    for (k, v) in &args.fixed {
        fixed.0.insert(k.clone(), *v);
    }
    let spec = SweepSpec {
        target,
        axis: args.axis.clone(),
        values,
        fixed,
        columns: args.columns.clone(),
    };
    let result = run_sweep(&spec, config, cli.workers).map_err(RowError::Argument)?;
    write_table(out, &result.header, &result.rows)
        .map_err(|e| RowError::Argument(format!("write failed: {e}")))?;
    if let Some((value, err)) = result.failure {
        match err {
            RowError::Numerical(e) => {
                eprintln!("error at {} = {}: {}", spec.axis, value, e);
                std::process::exit(EXIT_NUMERICAL);
            }
            RowError::Argument(msg) => {
                eprintln!("error at {} = {}: {}", spec.axis, value, msg);
                std::process::exit(EXIT_ARGUMENT);
            }
        }
    }
    Ok(())
}
