use std::path::PathBuf;
use std::process::ExitCode;

use acheb_cli::{
    parse_grid, parse_indices, parse_reals, render, run, CliResult, Command, Format, JobConfig,
    Method,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "acheb",
    version,
    about = "A-Chebyshev polynomials: values, envelopes, zeros, limit points and Salem sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// T_{n,A}(x) and U_{n,A}(x) on a grid
    Eval(Common),
    /// Envelope E_A with optional T_{n,A} overlays
    Envelope(Common),
    /// Zeros of T_{n,A} or U_{n,A}
    Zeros(Common),
    /// Distances from predicted limit points to the zero sets
    LimitPoints(Common),
    /// Salem sequences R_k or S_2n from a Pisot polynomial
    Salem(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Theta,
    Wplane,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct Common {
    /// Tuple a0,...,am
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Polynomial coefficients, highest degree first
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// Index list, e.g. 14,44
    #[arg(long)]
    n: Option<String>,
    /// Index range lo:hi[:step] (inclusive)
    #[arg(long)]
    n_range: Option<String>,
    /// Index range for R_k
    #[arg(long)]
    k_range: Option<String>,
    /// Explicit abscissae (instead of --grid)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Grid lo:hi:count
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// T or U (R or S for salem)
    #[arg(long)]
    kind: Option<String>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Write here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    tol: Option<f64>,
    /// JSON job file; flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Common {
    fn job(&self) -> CliResult<JobConfig> {
        let base = match &self.config {
            Some(path) => JobConfig::from_json(&std::fs::read_to_string(path)?)?,
            None => JobConfig::default(),
        };
        let flags = JobConfig {
            a: self.a.as_deref().map(parse_reals).transpose()?,
            p: self.p.as_deref().map(parse_reals).transpose()?,
            n: self.n.as_deref().map(parse_indices).transpose()?,
            n_range: self.n_range.clone(),
            k_range: self.k_range.clone(),
            x: self.x.as_deref().map(parse_reals).transpose()?,
            grid: self.grid.as_deref().map(parse_grid).transpose()?,
            method: self.method.map(|m| match m {
                MethodArg::Theta => Method::Theta,
                MethodArg::Wplane => Method::Wplane,
            }),
            kind: self.kind.clone(),
            format: self.format.map(|f| match f {
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            }),
            out: self.out.clone(),
            tol: self.tol,
        };
        Ok(base.merged(flags))
    }
}

fn execute(cli: Cli) -> CliResult<()> {
    let (command, common) = match &cli.command {
        Cmd::Eval(c) => (Command::Eval, c),
        Cmd::Envelope(c) => (Command::Envelope, c),
        Cmd::Zeros(c) => (Command::Zeros, c),
        Cmd::LimitPoints(c) => (Command::LimitPoints, c),
        Cmd::Salem(c) => (Command::Salem, c),
    };
    let job = common.job()?;
    let output = run(command, &job)?;
    let text = render(command, &output);
    match &job.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("acheb: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
