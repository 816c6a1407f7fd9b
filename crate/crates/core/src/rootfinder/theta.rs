//! Real zeros in `[-1, 1]` through the angle variable `x = cos θ`.
//!
//! With `C(θ) = sum_k a_k cos((m-k)θ)` and `S(θ) = sum_k a_k sin((m-k)θ)`,
//!
//! ```text
//! T_{n,A}(cos θ)       = cos((n-m)θ) C(θ) - sin((n-m)θ) S(θ)
//! U_{n,A}(cos θ) sin θ = sin((n+1-m)θ) C(θ) + cos((n+1-m)θ) S(θ)
//! ```
//!
//! Both are bracketed on a uniform grid of `8(n+1)` angles and bisected.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::family::{eval_u_a, ATuple};

use super::Kind;

fn c_and_s(a: &ATuple, theta: f64) -> (f64, f64) {
    let m = a.m();
    a.coeffs()
        .iter()
        .enumerate()
        .fold((0.0, 0.0), |(c, s), (k, &ak)| {
            let arg = (m - k) as f64 * theta;
            (c + ak * arg.cos(), s + ak * arg.sin())
        })
}

/// `T_{n,A}(cos θ)` in product form.
pub fn theta_function_t(a: &ATuple, n: usize, theta: f64) -> f64 {
    let (c, s) = c_and_s(a, theta);
    let k = (n - a.m()) as f64 * theta;
    k.cos() * c - k.sin() * s
}

/// `U_{n,A}(cos θ) sin θ` in product form.
pub fn theta_function_u(a: &ATuple, n: usize, theta: f64) -> f64 {
    let (c, s) = c_and_s(a, theta);
    let k = (n + 1 - a.m()) as f64 * theta;
    k.sin() * c + k.cos() * s
}

/// Zeros of `T_{n,A}` (or `U_{n,A}`) in `[0, π]` as angles, ascending.
pub fn theta_roots(a: &ATuple, n: usize, kind: Kind) -> Result<Vec<f64>> {
    crate::family::eval_t_a(a, n, 0.0)?;
    let scale: f64 = a.coeffs().iter().map(|v| v.abs()).sum();
    let count = 8 * (n + 1);
    let step = std::f64::consts::PI / count as f64;

    // f has the sign of the polynomial at x = cos θ for every θ in [0, π]
    let f = |theta: f64| -> f64 {
        match kind {
            Kind::T => theta_function_t(a, n, theta),
            Kind::U => theta_function_u(a, n, theta) / theta.sin(),
        }
    };
    let endpoint = |x: f64| -> Result<f64> {
        match kind {
            Kind::T => Ok(theta_function_t(
                a,
                n,
                if x > 0.0 { 0.0 } else { std::f64::consts::PI },
            )),
            Kind::U => eval_u_a(a, n, x),
        }
    };
    let endpoint_tol = match kind {
        Kind::T => 1e-13 * scale,
        Kind::U => 1e-13 * scale * (n as f64 + 1.0),
    };

    let mut values = Vec::with_capacity(count + 1);
    values.push(endpoint(1.0)?);
    for i in 1..count {
        values.push(f(i as f64 * step));
    }
    values.push(endpoint(-1.0)?);

    let is_zero = |i: usize| -> bool {
        if i == 0 || i == count {
            values[i].abs() <= endpoint_tol
        } else {
            values[i] == 0.0
        }
    };

    let mut roots = Vec::new();
    for i in 0..=count {
        if is_zero(i) {
            roots.push(i as f64 * step);
            continue;
        }
        if i < count && !is_zero(i + 1) && (values[i] < 0.0) != (values[i + 1] < 0.0) {
            roots.push(bisect(
                &f,
                i as f64 * step,
                (i + 1) as f64 * step,
                values[i],
            ));
        }
    }
    if let Some(last) = roots.last_mut() {
        if is_zero(count) {
            *last = std::f64::consts::PI;
        }
    }
    Ok(roots)
}

fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, f_lo: f64) -> f64 {
    let lo_neg = f_lo < 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 1e-15 {
            break;
        }
        let v = f(mid);
        if v == 0.0 {
            return mid;
        }
        if (v < 0.0) == lo_neg {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Real zeros of `T_{n,A}` in `[-1, 1]`, ascending.
pub fn real_zeros_theta(a: &ATuple, n: usize) -> Result<Vec<f64>> {
    real_zeros_theta_kind(a, n, Kind::T)
}

/// Real zeros of `T_{n,A}` or `U_{n,A}` in `[-1, 1]`, ascending.
pub fn real_zeros_theta_kind(a: &ATuple, n: usize, kind: Kind) -> Result<Vec<f64>> {
    let mut xs: Vec<f64> = theta_roots(a, n, kind)?.into_iter().map(f64::cos).collect();
    xs.reverse();
    Ok(xs)
}

/// Largest distance between consecutive points of `{-1} ∪ zeros ∪ {1}`.
pub fn max_gap(sorted_zeros: &[f64]) -> f64 {
    let mut prev = -1.0;
    let mut gap: f64 = 0.0;
    for &x in sorted_zeros.iter().chain(std::iter::once(&1.0)) {
        gap = gap.max(x - prev);
        prev = x;
    }
    gap
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Interlacing {
    pub n: usize,
    pub refined_n: usize,
    pub holds: bool,
    /// First pair of consecutive angles for index `n` with no angle for the
    /// refined index strictly between them.
    pub first_violation: Option<(f64, f64)>,
}

/// Between every two consecutive θ-roots for `n` there is a θ-root for
/// `2n - m`.
pub fn interlacing_check(a: &ATuple, n: usize) -> Result<Interlacing> {
    let coarse = theta_roots(a, n, Kind::T)?;
    let refined_n = 2 * n - a.m();
    let fine = theta_roots(a, refined_n, Kind::T)?;
    let mut first_violation = None;
    let mut j = 0;
    for w in coarse.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        while j < fine.len() && fine[j] <= lo {
            j += 1;
        }
        if !(j < fine.len() && fine[j] < hi) {
            first_violation = Some((lo, hi));
            break;
        }
    }
    Ok(Interlacing {
        n,
        refined_n,
        holds: first_violation.is_none(),
        first_violation,
    })
}
