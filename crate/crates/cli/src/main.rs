use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use orthowatch_cli::error::Result;
use orthowatch_cli::io::{parse_polygon, parse_route, read_input, to_json, write_output};
use orthowatch_cli::{cmd_bench, cmd_check, cmd_decompose, cmd_gen, cmd_render, cmd_route, RenderOptions, ShowFlags};
use orthowatch_core::{GenKind, GenParams, Step, TrimMode};

/// Watchman routes in orthogonal polygons.
#[derive(Parser)]
#[command(name = "orthowatch", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded polygon.
    Gen {
        #[arg(long, default_value = "monotone")]
        kind: GenKind,
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coordinate range; defaults to max(2n, 16).
        #[arg(long)]
        range: Option<i64>,
        /// Allow monotone polygons to stack vertical edges on one x.
        #[arg(long)]
        degenerate: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print slabs, class and balanced groups.
    Decompose {
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a watchman route.
    Route {
        input: Option<PathBuf>,
        #[arg(long, default_value = "safe")]
        trim: TrimMode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check sampled coverage of a route; exit 0 iff every sample is seen.
    Check {
        input: Option<PathBuf>,
        /// Route JSON; the pipeline route is used when absent.
        #[arg(long)]
        route: Option<PathBuf>,
        #[arg(long, default_value = "safe")]
        trim: TrimMode,
        #[arg(long, default_value = "1/2")]
        step: Step,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the polygon as SVG.
    Render {
        input: Option<PathBuf>,
        #[arg(long)]
        route: Option<PathBuf>,
        #[arg(long, default_value = "safe")]
        trim: TrimMode,
        #[arg(long, default_value_t = 20.0)]
        scale: f64,
        /// Comma-separated layers: slabs, groups, corridors, route, kernel, all.
        #[arg(long, default_value = "slabs,groups,route")]
        show: ShowFlags,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the pipeline on generated polygons of growing size.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = orthowatch_cli::DEFAULT_SIZES)]
        sizes: Vec<usize>,
        #[arg(long, default_value = "monotone")]
        kind: GenKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "safe")]
        trim: TrimMode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { kind, n, seed, range, degenerate, out } => {
            let mut params = GenParams::new(kind, n, seed).with_general_position(!degenerate);
            if let Some(r) = range {
                params = params.with_range(r);
            }
            write_output(out.as_deref(), &cmd_gen(&params)?)?;
        }
        Command::Decompose { input, out } => {
            let p = parse_polygon(&read_input(input.as_deref())?)?;
            write_output(out.as_deref(), &cmd_decompose(&p)?)?;
        }
        Command::Route { input, trim, out } => {
            let p = parse_polygon(&read_input(input.as_deref())?)?;
            write_output(out.as_deref(), &cmd_route(&p, trim)?)?;
        }
        Command::Check { input, route, trim, step, out } => {
            let p = parse_polygon(&read_input(input.as_deref())?)?;
            let route = route.map(|r| read_input(Some(&r)).and_then(|t| parse_route(&t))).transpose()?;
            let (report, full) = cmd_check(&p, route, trim, step)?;
            write_output(out.as_deref(), &report)?;
            return Ok(full);
        }
        Command::Render { input, route, trim, scale, show, out } => {
            let p = parse_polygon(&read_input(input.as_deref())?)?;
            let route = route.map(|r| read_input(Some(&r)).and_then(|t| parse_route(&t))).transpose()?;
            write_output(out.as_deref(), &cmd_render(&p, route, trim, &RenderOptions { scale, show })?)?;
        }
        Command::Bench { sizes, kind, seed, trim, out } => {
            let table = cmd_bench(&sizes, kind, seed, trim)?;
            write_output(out.as_deref(), &to_json(&table)?)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("orthowatch: coverage failure: some samples are not seen by the route");
            ExitCode::from(4)
        }
        Err(e) => {
            eprintln!("orthowatch: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
