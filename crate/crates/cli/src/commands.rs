//! The five commands. Each takes a [`JobConfig`] and returns an [`Output`]
//! table; nothing here touches the terminal or the file system.

use achebyshev::envelope::{envelope_sq_series, envelope_zeros};
use achebyshev::family::{eval_t_a, eval_u_a};
use achebyshev::rootfinder::{
    all_zeros, limit_set_experiment, real_zeros_theta_kind, Kind, DEFAULT_DEGREE_CAP,
};
use achebyshev::salem::{pisot_root, pisot_to_salem_sequence, DEFAULT_TOL};
use achebyshev::{ATuple, RealPolynomial, SalemKind};
use serde_json::{json, Value};

use crate::config::{parse_indices, Format, Grid, JobConfig, Method};
use crate::error::{CliError, CliResult};
use crate::table::{Cell, Output};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Eval,
    Envelope,
    Zeros,
    LimitPoints,
    Salem,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Eval => "eval",
            Command::Envelope => "envelope",
            Command::Zeros => "zeros",
            Command::LimitPoints => "limit-points",
            Command::Salem => "salem",
        }
    }

    pub fn default_format(self) -> Format {
        match self {
            Command::LimitPoints => Format::Json,
            _ => Format::Csv,
        }
    }
}

pub fn run(command: Command, config: &JobConfig) -> CliResult<Output> {
    match command {
        Command::Eval => cmd_eval(config),
        Command::Envelope => cmd_envelope(config),
        Command::Zeros => cmd_zeros(config),
        Command::LimitPoints => cmd_limit_points(config),
        Command::Salem => cmd_salem(config),
    }
}

/// Render in the configured format, or the command's default.
pub fn render(command: Command, output: &Output) -> String {
    match output.config.format.unwrap_or(command.default_format()) {
        Format::Csv => output.to_csv(),
        Format::Json => output.to_json(),
    }
}

fn tuple(config: &JobConfig) -> CliResult<ATuple> {
    let a = config
        .a
        .clone()
        .ok_or_else(|| CliError::Invalid("the tuple --a is required".into()))?;
    Ok(ATuple::new(a)?)
}

fn indices(config: &JobConfig, what: &str) -> CliResult<Vec<usize>> {
    let list = match (&config.n_range, &config.n) {
        (Some(r), _) => parse_indices(r)?,
        (None, Some(n)) => n.clone(),
        (None, None) => return Err(CliError::Invalid(format!("{what} needs --n or --n-range"))),
    };
    if list.is_empty() {
        return Err(CliError::Invalid(format!(
            "{what} needs at least one index"
        )));
    }
    Ok(list)
}

fn check_indices(a: &ATuple, ns: &[usize]) -> CliResult<()> {
    match ns.iter().find(|&&n| n < a.m()) {
        Some(n) => Err(CliError::Invalid(format!(
            "index n = {n} is below the tuple degree m = {}",
            a.m()
        ))),
        None => Ok(()),
    }
}

/// Explicit `x` values if given, otherwise the grid (or `default`).
fn abscissae(config: &mut JobConfig, default: Grid) -> CliResult<Vec<f64>> {
    if let Some(xs) = &config.x {
        if xs.is_empty() || xs.iter().any(|v| !v.is_finite()) {
            return Err(CliError::Invalid(
                "x values must be finite and non-empty".into(),
            ));
        }
        return Ok(xs.clone());
    }
    let grid = *config.grid.get_or_insert(default);
    grid.validate()?;
    Ok(grid.points())
}

fn kind(config: &JobConfig) -> CliResult<Kind> {
    match config.kind.as_deref().unwrap_or("T") {
        "T" | "t" => Ok(Kind::T),
        "U" | "u" => Ok(Kind::U),
        other => Err(CliError::Invalid(format!(
            "kind must be T or U, got {other:?}"
        ))),
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::T => "T",
        Kind::U => "U",
    }
}

/// Rows `(n, x, T_{n,A}(x), U_{n,A}(x))`.
pub fn cmd_eval(config: &JobConfig) -> CliResult<Output> {
    let mut config = config.clone();
    let a = tuple(&config)?;
    let ns = indices(&config, "eval")?;
    check_indices(&a, &ns)?;
    let xs = abscissae(
        &mut config,
        Grid {
            lo: -1.0,
            hi: 1.0,
            count: 201,
        },
    )?;
    let mut out = Output::new("eval", config, &["n", "x", "T", "U"]);
    for &n in &ns {
        for &x in &xs {
            out.rows.push(vec![
                n.into(),
                x.into(),
                eval_t_a(&a, n, x)?.into(),
                eval_u_a(&a, n, x)?.into(),
            ]);
        }
    }
    Ok(out)
}

/// Rows `(x, E^2, E, +E, -E, T_n...)` with one overlay column per
/// requested `n`; the series and monomial forms of `E^2` go in the header.
pub fn cmd_envelope(config: &JobConfig) -> CliResult<Output> {
    let mut config = config.clone();
    let a = tuple(&config)?;
    let overlays = match (&config.n_range, &config.n) {
        (None, None) => Vec::new(),
        _ => indices(&config, "envelope")?,
    };
    check_indices(&a, &overlays)?;
    let xs = abscissae(
        &mut config,
        Grid {
            lo: -1.0,
            hi: 1.0,
            count: 1001,
        },
    )?;

    let sq = envelope_sq_series(&a);
    let overlay_names: Vec<String> = overlays.iter().map(|n| format!("T_{n}")).collect();
    let mut columns = vec!["x", "E2", "E", "plus_E", "minus_E"];
    columns.extend(overlay_names.iter().map(String::as_str));
    let mut out = Output::new("envelope", config, &columns);
    out.extras
        .insert("e2_chebyshev".into(), json!(sq.series.coeffs()));
    out.extras.insert(
        "e2_monomial".into(),
        json!(sq.to_monomial().to_string_in("x")),
    );
    out.extras
        .insert("envelope_zeros".into(), json!(envelope_zeros(&a)?));

    for &x in &xs {
        let e2 = sq.eval(x);
        let e = e2.abs().sqrt();
        let mut row: Vec<Cell> = vec![x.into(), e2.into(), e.into(), e.into(), (-e).into()];
        for &n in &overlays {
            row.push(eval_t_a(&a, n, x)?.into());
        }
        out.rows.push(row);
    }
    Ok(out)
}

/// Rows `(n, re, im, method, residual)`. The `theta` method returns real
/// zeros in `[-1, 1]` with residual `|T_{n,A}(x)|` (or `|U_{n,A}(x)|`); the
/// `wplane` method returns all `n` zeros with the solver residual.
pub fn cmd_zeros(config: &JobConfig) -> CliResult<Output> {
    let mut config = config.clone();
    let a = tuple(&config)?;
    let ns = indices(&config, "zeros")?;
    check_indices(&a, &ns)?;
    let k = kind(&config)?;
    config.kind = Some(kind_name(k).into());
    let method = *config.method.get_or_insert(Method::Wplane);
    let mut out = Output::new("zeros", config, &["n", "re", "im", "method", "residual"]);
    for &n in &ns {
        match method {
            Method::Theta => {
                for x in real_zeros_theta_kind(&a, n, k)? {
                    let v = match k {
                        Kind::T => eval_t_a(&a, n, x)?,
                        Kind::U => eval_u_a(&a, n, x)?,
                    };
                    out.rows.push(vec![
                        n.into(),
                        x.into(),
                        0.0.into(),
                        "theta".into(),
                        v.abs().into(),
                    ]);
                }
            }
            Method::Wplane => {
                let zs = all_zeros(&a, n, k, DEFAULT_DEGREE_CAP)?;
                for (z, r) in zs.roots.iter().zip(&zs.residuals) {
                    out.rows.push(vec![
                        n.into(),
                        z.re.into(),
                        z.im.into(),
                        "wplane".into(),
                        (*r).into(),
                    ]);
                }
            }
        }
    }
    Ok(out)
}

/// Rows `(n, max_gap, real_zero_count, dist_0, ...)`; `dist_i` is the
/// distance from the `i`-th predicted point (listed in the header) to the
/// nearest zero.
pub fn cmd_limit_points(config: &JobConfig) -> CliResult<Output> {
    let mut config = config.clone();
    let a = tuple(&config)?;
    let ns = indices(&config, "limit-points")?;
    check_indices(&a, &ns)?;
    let k = kind(&config)?;
    config.kind = Some(kind_name(k).into());
    let report = limit_set_experiment(&a, &ns, k)?;

    let dist_names: Vec<String> = (0..report.predicted.len())
        .map(|i| format!("dist_{i}"))
        .collect();
    let mut columns = vec!["n", "max_gap", "real_zero_count"];
    columns.extend(dist_names.iter().map(String::as_str));
    let mut out = Output::new("limit-points", config, &columns);
    out.extras.insert(
        "interval".into(),
        json!([report.interval.0, report.interval.1]),
    );
    let predicted: Vec<Value> = report
        .predicted
        .iter()
        .map(|p| {
            json!({
                "omega_re": p.omega.re,
                "omega_im": p.omega.im,
                "x_re": p.x.re,
                "x_im": p.x.im,
                "is_real": p.is_real,
            })
        })
        .collect();
    out.extras
        .insert("predicted".into(), Value::Array(predicted));
    for row in &report.rows {
        let mut cells: Vec<Cell> =
            vec![row.n.into(), row.max_gap.into(), row.real_zero_count.into()];
        cells.extend(row.distances.iter().map(|&d| Cell::from(d)));
        out.rows.push(cells);
    }
    Ok(out)
}

/// Rows `(kind, param, index, tau, residual, outside, on_circle, inside,
/// polynomial)`; the Pisot target `q` goes in the header.
pub fn cmd_salem(config: &JobConfig) -> CliResult<Output> {
    let mut config = config.clone();
    let coeffs = config
        .p
        .clone()
        .ok_or_else(|| CliError::Invalid("the polynomial --p is required".into()))?;
    if coeffs.first().is_none_or(|&c| c == 0.0) {
        return Err(CliError::Invalid(
            "leading coefficient of --p must be nonzero".into(),
        ));
    }
    let p = RealPolynomial::from_highest_first(&coeffs);
    let salem_kind = match config.kind.as_deref().unwrap_or("S") {
        "S" | "s" => SalemKind::S,
        "R" | "r" => SalemKind::R,
        other => {
            return Err(CliError::Invalid(format!(
                "kind must be R or S, got {other:?}"
            )))
        }
    };
    let params = match (salem_kind, &config.k_range) {
        (SalemKind::R, Some(r)) => parse_indices(r)?,
        _ => indices(&config, "salem")?,
    };
    let tol = *config.tol.get_or_insert(DEFAULT_TOL);
    if !(tol > 0.0 && tol < 1.0) {
        return Err(CliError::Invalid(format!(
            "tol must lie in (0, 1), got {tol}"
        )));
    }
    config.kind = Some(match salem_kind {
        SalemKind::R => "R".into(),
        SalemKind::S => "S".into(),
    });

    let q = pisot_root(&p, tol)?;
    let seq = pisot_to_salem_sequence(&p, &params, salem_kind, tol)?;
    let mut out = Output::new(
        "salem",
        config,
        &[
            "kind",
            "param",
            "index",
            "tau",
            "residual",
            "outside",
            "on_circle",
            "inside",
            "polynomial",
        ],
    );
    out.extras
        .insert("pisot_polynomial".into(), json!(p.to_string_in("x")));
    out.extras.insert("target".into(), json!(q));
    for s in &seq {
        let name = match s.kind {
            SalemKind::R => "R",
            SalemKind::S => "S",
        };
        out.rows.push(vec![
            name.into(),
            s.param.into(),
            s.index.into(),
            s.tau.unwrap_or(f64::NAN).into(),
            s.residual.unwrap_or(f64::NAN).into(),
            s.census.outside.into(),
            s.census.on_circle.into(),
            s.census.inside.into(),
            s.poly.to_string_in("w").into(),
        ]);
    }
    Ok(out)
}
