//! Convergence experiments for the limit set of `Z_{n,A}` as `n` grows.
//!
//! Each root `ω` of `P_A` with `|ω| > 1` predicts a limit point
//! `x(ω) = (ω + 1/ω)/2`; the whole of `[-1, 1]` is predicted as well. The
//! report records, per `n`, the distance from every predicted point to the
//! nearest zero and the largest gap between real zeros in `[-1, 1]`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{all_zeros, complex_roots, max_gap, real_zeros_theta_kind, Kind, DEFAULT_DEGREE_CAP};
use crate::error::{Error, Result};
use crate::family::{char_poly, ATuple};
use crate::kernel::x_of_w;

/// Roots of `P_A` within this of the unit circle are not counted as outside.
const OUTSIDE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredictedPoint {
    /// Root of `P_A` with `|ω| > 1`.
    pub omega: Complex64,
    pub x: Complex64,
    /// False for complex limit points off the real axis.
    pub is_real: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitRow {
    pub n: usize,
    /// `distances[i]` pairs with `predicted[i]`.
    pub distances: Vec<f64>,
    pub max_gap: f64,
    pub real_zero_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitPointReport {
    pub tuple: Vec<f64>,
    pub kind: Kind,
    /// Always `(-1, 1)`.
    pub interval: (f64, f64),
    pub predicted: Vec<PredictedPoint>,
    pub rows: Vec<LimitRow>,
}

impl LimitPointReport {
    /// Distances to `predicted[i]` across the tested `n`, in order.
    pub fn distance_series(&self, i: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r.distances[i]).collect()
    }

    pub fn gap_series(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.max_gap).collect()
    }
}

fn predicted_points(a: &ATuple) -> Result<Vec<PredictedPoint>> {
    let p = char_poly(a);
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let mut out: Vec<PredictedPoint> = complex_roots(&p)?
        .roots
        .into_iter()
        .filter(|w| w.norm() > 1.0 + OUTSIDE_TOL)
        .map(|omega| {
            let mut x = x_of_w(omega);
            let is_real = x.im.abs() <= 1e-12 * (1.0 + x.re.abs());
            if is_real {
                x.im = 0.0;
            }
            PredictedPoint { omega, x, is_real }
        })
        .collect();
    out.sort_by(|a, b| a.x.re.total_cmp(&b.x.re).then(a.x.im.total_cmp(&b.x.im)));
    Ok(out)
}

/// Run the experiment over `n_list` for the first (`Kind::T`) or second
/// (`Kind::U`) kind. Every `n` must be at least `m` and at most half the
/// dense-solve degree cap.
pub fn limit_set_experiment(a: &ATuple, n_list: &[usize], kind: Kind) -> Result<LimitPointReport> {
    if let Some(&n) = n_list.iter().find(|&&n| n < a.m()) {
        return Err(Error::IndexBelowDegree { n, m: a.m() });
    }
    let predicted = predicted_points(a)?;
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let zeros = all_zeros(a, n, kind, DEFAULT_DEGREE_CAP)?;
        let distances = predicted.iter().map(|p| zeros.distance_to(p.x)).collect();
        let real = real_zeros_theta_kind(a, n, kind)?;
        rows.push(LimitRow {
            n,
            distances,
            max_gap: max_gap(&real),
            real_zero_count: real.len(),
        });
    }
    Ok(LimitPointReport {
        tuple: a.coeffs().to_vec(),
        kind,
        interval: (-1.0, 1.0),
        predicted,
        rows,
    })
}
