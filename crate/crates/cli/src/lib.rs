//! Library side of the `orthowatch` command: file formats, subcommands, SVG
//! rendering and the scaling benchmark.

pub mod bench;
pub mod commands;
pub mod error;
pub mod io;
pub mod render;

pub use bench::{cmd_bench, BenchRow, BenchTable, DEFAULT_SIZES};
pub use commands::{cmd_check, cmd_decompose, cmd_gen, cmd_render, cmd_route, route_file};
pub use error::CliError;
pub use render::{RenderOptions, Scene, ShowFlags};
