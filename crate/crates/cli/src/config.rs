//! Job configuration shared by the command line and `--config` files.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl Grid {
    pub fn validate(&self) -> CliResult<()> {
        if self.count < 2 {
            return Err(CliError::Invalid(format!(
                "grid count must be >= 2, got {}",
                self.count
            )));
        }
        if !self.lo.is_finite() || !self.hi.is_finite() || self.lo >= self.hi {
            return Err(CliError::Invalid(format!(
                "grid needs finite lo < hi, got {}:{}",
                self.lo, self.hi
            )));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.hi
                } else {
                    self.lo + (self.hi - self.lo) * i as f64 / last
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Theta,
    Wplane,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Every option a command may read. Absent fields fall back to per-command
/// defaults; flags given on the command line replace values from a file.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<f64>>,
    /// Polynomial coefficients, highest degree first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_range: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_range: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
}

impl JobConfig {
    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("config file: {e}")))
    }

    /// Fields set in `over` replace those in `self`.
    pub fn merged(self, over: JobConfig) -> JobConfig {
        JobConfig {
            a: over.a.or(self.a),
            p: over.p.or(self.p),
            n: over.n.or(self.n),
            n_range: over.n_range.or(self.n_range),
            k_range: over.k_range.or(self.k_range),
            x: over.x.or(self.x),
            grid: over.grid.or(self.grid),
            method: over.method.or(self.method),
            kind: over.kind.or(self.kind),
            format: over.format.or(self.format),
            out: over.out.or(self.out),
            tol: over.tol.or(self.tol),
        }
    }
}

/// Comma-separated reals, e.g. `2,-5,2`.
pub fn parse_reals(s: &str) -> CliResult<Vec<f64>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Invalid(format!("not a finite number: {t:?}")))
        })
        .collect()
}

/// `a:b` (inclusive), `a:b:step`, or a comma list.
pub fn parse_indices(s: &str) -> CliResult<Vec<usize>> {
    let bad = |t: &str| CliError::Invalid(format!("not a non-negative integer: {t:?}"));
    let int = |t: &str| t.trim().parse::<usize>().map_err(|_| bad(t));
    if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        let (lo, hi, step) = match parts.as_slice() {
            [lo, hi] => (int(lo)?, int(hi)?, 1),
            [lo, hi, step] => (int(lo)?, int(hi)?, int(step)?),
            _ => return Err(CliError::Invalid(format!("bad range {s:?}"))),
        };
        if step == 0 || lo > hi {
            return Err(CliError::Invalid(format!("bad range {s:?}")));
        }
        Ok((lo..=hi).step_by(step).collect())
    } else {
        s.split(',').map(int).collect()
    }
}

/// `lo:hi:count`.
pub fn parse_grid(s: &str) -> CliResult<Grid> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, count] = parts.as_slice() else {
        return Err(CliError::Invalid(format!(
            "grid must be lo:hi:count, got {s:?}"
        )));
    };
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| CliError::Invalid(format!("bad grid bound {t:?}")))
    };
    let grid = Grid {
        lo: num(lo)?,
        hi: num(hi)?,
        count: count
            .trim()
            .parse()
            .map_err(|_| CliError::Invalid(format!("bad grid count {count:?}")))?,
    };
    grid.validate()?;
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_syntax() {
        assert_eq!(parse_indices("5:8").unwrap(), vec![5, 6, 7, 8]);
        assert_eq!(parse_indices("8:64:8").unwrap().len(), 8);
        assert_eq!(parse_indices("14,44").unwrap(), vec![14, 44]);
        assert!(parse_indices("9:3").is_err());
        assert!(parse_indices("-1").is_err());
    }

    #[test]
    fn grid_syntax() {
        let g = parse_grid("-1:1:5").unwrap();
        assert_eq!(g.points(), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert!(parse_grid("1:1:5").is_err());
        assert!(parse_grid("0:1:1").is_err());
        assert!(parse_grid("0:1").is_err());
    }

    #[test]
    fn reals_and_merge() {
        assert_eq!(parse_reals("2,-5,2").unwrap(), vec![2.0, -5.0, 2.0]);
        assert!(parse_reals("1,x").is_err());
        assert!(parse_reals("1,inf").is_err());
        let file = JobConfig::from_json(r#"{"a":[1,0,1],"n":[5],"tol":1e-3}"#).unwrap();
        let flags = JobConfig {
            n: Some(vec![7]),
            ..Default::default()
        };
        let m = file.merged(flags);
        assert_eq!(m.n, Some(vec![7]));
        assert_eq!(m.a, Some(vec![1.0, 0.0, 1.0]));
        assert_eq!(m.tol, Some(1e-3));
        assert!(JobConfig::from_json(r#"{"bogus":1}"#).is_err());
    }
}
