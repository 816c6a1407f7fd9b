//! The envelope `E_A` of an A-Chebyshev family.
//!
//! `E_A(x)^2` is the Chebyshev series whose coefficients are the
//! autocorrelations of the tuple,
//!
//! ```text
//! E_A(x)^2 = sum_i a_i^2 + 2 sum_{k>=1} (sum_i a_i a_{i+k}) T_k(x),
//! ```
//!
//! which also equals `P_A(w) P_A(1/w)` with `w = x + sqrt(x^2 - 1)`. The
//! envelope does not depend on `n`, bounds `|T_{n,A}|` on `[-1, 1]` and is
//! tangent to it wherever the two meet at a positive value.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{char_poly, eval_t_a, ATuple};
use crate::kernel::{w_map, ChebSeries};
use crate::poly::RealPolynomial;

/// Unit-circle tolerance used when locating zeros of the envelope.
const UNIT_CIRCLE_TOL: f64 = 1e-8;

/// The square of the envelope as a degree-`m` Chebyshev series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeSq {
    pub series: ChebSeries,
}

impl EnvelopeSq {
    pub fn eval(&self, x: f64) -> f64 {
        self.series.eval(x)
    }

    pub fn to_monomial(&self) -> RealPolynomial {
        self.series.to_monomial()
    }
}

/// `c_0 = sum a_i^2`, `c_k = 2 sum_i a_i a_{i+k}`.
pub fn envelope_sq_series(a: &ATuple) -> EnvelopeSq {
    let c = a.coeffs();
    let m = a.m();
    let coeffs = (0..=m)
        .map(|k| {
            let s: f64 = (0..=m - k).map(|i| c[i] * c[i + k]).sum();
            if k == 0 {
                s
            } else {
                2.0 * s
            }
        })
        .collect();
    EnvelopeSq {
        series: ChebSeries::new(coeffs).expect("tuple is non-empty"),
    }
}

/// `E_A(x) = sqrt(|sum_k c_k T_k(x)|)`.
pub fn envelope_eval(a: &ATuple, x: f64) -> f64 {
    envelope_sq_series(a).eval(x).abs().sqrt()
}

/// `P_A(w) P_A(1/w)` with `w = w_map(x)`. Real for real `x`; equal to
/// `|P_A(w)|^2` when `|x| <= 1`.
pub fn envelope_sq_charpoly(a: &ATuple, x: f64) -> Complex64 {
    let p = char_poly(a);
    let w = w_map(x);
    p.eval_complex(w) * p.eval_complex(w.inv())
}

/// `E_A(x) = sqrt(|P_A(w) P_A(1/w)|)`.
pub fn envelope_eval_charpoly(a: &ATuple, x: f64) -> f64 {
    envelope_sq_charpoly(a, x).norm().sqrt()
}

/// `E_A^2` expanded in the monomial basis, written out term by term for
/// `m <= 4`.
pub fn envelope_expansion_m_le_4(a: &ATuple) -> Result<RealPolynomial> {
    let c = a.coeffs();
    let coeffs = match *c {
        [a0] => vec![a0 * a0],
        [a0, a1] => vec![a0 * a0 + a1 * a1, 2.0 * a0 * a1],
        [a0, a1, a2] => vec![
            a0 * a0 + a1 * a1 + a2 * a2 - 2.0 * a0 * a2,
            2.0 * a0 * a1 + 2.0 * a1 * a2,
            4.0 * a0 * a2,
        ],
        [a0, a1, a2, a3] => vec![
            a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 - 2.0 * a0 * a2 - 2.0 * a1 * a3,
            2.0 * a0 * a1 + 2.0 * a1 * a2 + 2.0 * a2 * a3 - 6.0 * a0 * a3,
            4.0 * a0 * a2 + 4.0 * a1 * a3,
            8.0 * a0 * a3,
        ],
        [a0, a1, a2, a3, a4] => vec![
            a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4
                - 2.0 * a0 * a2
                - 2.0 * a1 * a3
                - 2.0 * a2 * a4
                + 2.0 * a0 * a4,
            2.0 * a0 * a1 + 2.0 * a1 * a2 + 2.0 * a2 * a3 + 2.0 * a3 * a4
                - 6.0 * a0 * a3
                - 6.0 * a1 * a4,
            4.0 * a0 * a2 + 4.0 * a1 * a3 + 4.0 * a2 * a4 - 16.0 * a0 * a4,
            8.0 * a0 * a3 + 8.0 * a1 * a4,
            16.0 * a0 * a4,
        ],
        _ => {
            return Err(Error::InvalidArgument(format!(
                "explicit expansion is only available for m <= 4, got m = {}",
                a.m()
            )))
        }
    };
    Ok(RealPolynomial::new(coeffs))
}

/// Points of `[-1, 1]` where `E_A` vanishes, i.e. `x = Re ω` for roots `ω`
/// of `P_A` on the unit circle. These are the only points where `E_A` can
/// fail to be smooth. Sorted ascending.
pub fn envelope_zeros(a: &ATuple) -> Result<Vec<f64>> {
    let p = char_poly(a);
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let roots = crate::rootfinder::complex_roots(&p)?;
    let mut xs: Vec<f64> = roots
        .roots
        .iter()
        .filter(|w| (w.norm() - 1.0).abs() <= UNIT_CIRCLE_TOL && w.im >= -UNIT_CIRCLE_TOL)
        .map(|w| w.re.clamp(-1.0, 1.0))
        .collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup_by(|x, y| (*x - *y).abs() <= 1e-7);
    Ok(xs)
}

/// Touch points of `|T_{n,A}|` with `E_A` inside `(-1, 1)`.
///
/// Local maxima of `|T_{n,A}| / E_A` are located on a `4n`-point grid in
/// `θ = acos x`, refined by golden-section search, and kept when
/// `E_A - |T_{n,A}| < gap_tol` and `E_A > floor`.
pub fn tangency_points(a: &ATuple, n: usize, gap_tol: f64, floor: f64) -> Result<Vec<f64>> {
    let sq = envelope_sq_series(a);
    let ratio = |theta: f64| -> f64 {
        let x = theta.cos();
        let e = sq.eval(x).abs().sqrt();
        if e <= floor {
            return 0.0;
        }
        eval_t_a(a, n, x).map(|t| t.abs() / e).unwrap_or(0.0)
    };
    eval_t_a(a, n, 0.0)?;

    let count = (4 * n).max(64);
    let step = std::f64::consts::PI / count as f64;
    let grid: Vec<f64> = (0..=count).map(|i| ratio(i as f64 * step)).collect();

    let mut out = Vec::new();
    for i in 1..count {
        if grid[i] >= grid[i - 1] && grid[i] > grid[i + 1] {
            let (lo, hi) = ((i - 1) as f64 * step, (i + 1) as f64 * step);
            let theta = touch_angle(a, n, lo, hi).unwrap_or_else(|| golden_max(&ratio, lo, hi));
            let x = theta.cos();
            let e = sq.eval(x).abs().sqrt();
            let t = eval_t_a(a, n, x)?;
            if e > floor && e - t.abs() < gap_tol {
                out.push(x);
            }
        }
    }
    out.sort_by(f64::total_cmp);
    out.dedup();
    Ok(out)
}

/// `Im(P_A(w) w^(n-m))` at `w = e^{iθ}`, i.e. `sum_k a_k sin((n-k)θ)`.
/// `T_{n,A}(cos θ) = ±E_A(cos θ)` exactly where this vanishes.
fn phase_sine(a: &ATuple, n: usize, theta: f64) -> f64 {
    a.coeffs()
        .iter()
        .enumerate()
        .map(|(k, ak)| ak * ((n - k) as f64 * theta).sin())
        .sum()
}

/// Root of [`phase_sine`] in `[lo, hi]` closest to the middle, by bisection.
fn touch_angle(a: &ATuple, n: usize, lo: f64, hi: f64) -> Option<f64> {
    let f = |t: f64| phase_sine(a, n, t);
    let mid = 0.5 * (lo + hi);
    let (fl, fm, fh) = (f(lo), f(mid), f(hi));
    let (mut l, mut h, mut fl) = if fm == 0.0 {
        return Some(mid);
    } else if (fl < 0.0) != (fm < 0.0) {
        (lo, mid, fl)
    } else if (fm < 0.0) != (fh < 0.0) {
        (mid, hi, fm)
    } else {
        return None;
    };
    for _ in 0..200 {
        let c = 0.5 * (l + h);
        if c <= l || c >= h {
            break;
        }
        let fc = f(c);
        if fc == 0.0 {
            return Some(c);
        }
        if (fc < 0.0) == (fl < 0.0) {
            l = c;
            fl = fc;
        } else {
            h = c;
        }
    }
    Some(0.5 * (l + h))
}

fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if hi - lo <= 1e-15 * (1.0 + lo.abs()) {
            break;
        }
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    0.5 * (lo + hi)
}

/// Derivatives at a touch point, by centered finite differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangencyCheck {
    pub x: f64,
    /// `sign(T) T'(x)`.
    pub poly_slope: f64,
    pub envelope_slope: f64,
    /// `|poly_slope - envelope_slope| / max(1, |envelope_slope|)`.
    pub mismatch: f64,
}

/// Compare `d/dx (±T_{n,A})` with `d/dx E_A` at `x`.
///
/// Differences are taken in `θ = acos x` with step `h / max(n, 1)` and
/// converted with `dx/dθ = -sin θ`; within `1e-3` of `±1` they are taken
/// directly in `x` with step `h`.
pub fn tangency_check(a: &ATuple, n: usize, x: f64, h: f64) -> Result<TangencyCheck> {
    let t = eval_t_a(a, n, x)?;
    let s = if t < 0.0 { -1.0 } else { 1.0 };
    let theta = x.clamp(-1.0, 1.0).acos();
    let (dt, de) = if theta.sin() > 1e-3 {
        let k = h / n.max(1) as f64;
        let tf = |th: f64| eval_t_a(a, n, th.cos());
        let ef = |th: f64| envelope_eval(a, th.cos());
        let scale = -2.0 * k * theta.sin();
        (
            (tf(theta + k)? - tf(theta - k)?) / scale,
            (ef(theta + k) - ef(theta - k)) / scale,
        )
    } else {
        (
            (eval_t_a(a, n, x + h)? - eval_t_a(a, n, x - h)?) / (2.0 * h),
            (envelope_eval(a, x + h) - envelope_eval(a, x - h)) / (2.0 * h),
        )
    };
    let poly_slope = s * dt;
    Ok(TangencyCheck {
        x,
        poly_slope,
        envelope_slope: de,
        mismatch: (poly_slope - de).abs() / de.abs().max(1.0),
    })
}
