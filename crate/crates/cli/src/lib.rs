//! Library side of the `acheb` command-line tool: configuration, the five
//! commands and their CSV/JSON rendering.

mod commands;
mod config;
mod error;
mod table;

pub use commands::{
    cmd_envelope, cmd_eval, cmd_limit_points, cmd_salem, cmd_zeros, render, run, Command,
};
pub use config::{parse_grid, parse_indices, parse_reals, Format, Grid, JobConfig, Method};
pub use error::{CliError, CliResult};
pub use table::{format_float, Cell, Output, TOOL};
