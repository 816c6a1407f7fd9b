//! Simultaneous-iteration (Aberth-Ehrlich) solver for all complex roots of a
//! real polynomial.
//!
//! Starting points are spread over circles whose radii come from the upper
//! convex hull of `(k, log|c_k|)`, which keeps clusters near the unit circle
//! and isolated large roots apart from the first iteration. Outside the unit
//! disc the Newton ratio is computed from the reversed polynomial so degree
//! 512 inputs with roots of modulus 4 or 5 do not overflow.

use num_complex::Complex64;

use super::RootSet;
use crate::error::{Error, Result};
use crate::poly::RealPolynomial;

pub const MAX_ITERATIONS: usize = 500;

/// Roots closer than this are treated as one cluster and skip polishing.
const CLUSTER_TOL: f64 = 1e-6;

/// All complex roots of `p`, certified by a backward-error test.
///
/// Multiple roots come back as clustered copies. Fails with
/// [`Error::NoConvergence`] when the iteration cap is hit before every root
/// meets the acceptance bound.
pub fn complex_roots(p: &RealPolynomial) -> Result<RootSet> {
    if p.degree() == 0 {
        return Err(Error::InvalidPolynomial(
            "root finding needs degree >= 1".into(),
        ));
    }
    if p.coeffs().iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidPolynomial("non-finite coefficient".into()));
    }

    // exact zero roots
    let zeros = p.coeffs().iter().take_while(|&&c| c == 0.0).count();
    let core = RealPolynomial::new(p.coeffs()[zeros..].to_vec());
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let mut iterations = 0;
    if core.degree() > 0 {
        let lead = core.leading();
        let monic: Vec<f64> = core.coeffs().iter().map(|c| c / lead).collect();
        let (found, its) = aberth(&monic)?;
        iterations = its;
        roots.extend(polish(&monic, found));
    }

    let residuals = roots
        .iter()
        .map(|&z| newton_step(p.coeffs(), z).norm())
        .collect();
    Ok(RootSet {
        roots,
        residuals,
        pairing: None,
        iterations,
    })
}

/// `p(z) / p'(z)`, evaluated in the reversed variable when `|z| > 1`.
pub(crate) fn newton_step(c: &[f64], z: Complex64) -> Complex64 {
    let d = c.len() - 1;
    if z.norm() <= 1.0 {
        let (p, dp) = horner2(c.iter().rev(), z);
        if dp == Complex64::new(0.0, 0.0) {
            return p;
        }
        p / dp
    } else {
        let y = z.inv();
        let (r, dr) = horner2(c.iter(), y);
        let den = d as f64 * r - y * dr;
        if den == Complex64::new(0.0, 0.0) {
            return r;
        }
        z * r / den
    }
}

fn horner2<'a>(coeffs: impl Iterator<Item = &'a f64>, z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Relative backward error of `z` as a root: `|p(z)| / sum |c_k| |z|^k`,
/// computed in the reversed variable outside the unit disc.
pub(crate) fn backward_error(c: &[f64], z: Complex64) -> f64 {
    let (num, den) = if z.norm() <= 1.0 {
        let r = z.norm();
        let mut p = Complex64::new(0.0, 0.0);
        let mut s = 0.0;
        for &ck in c.iter().rev() {
            p = p * z + ck;
            s = s * r + ck.abs();
        }
        (p.norm(), s)
    } else {
        let y = z.inv();
        let r = y.norm();
        let mut p = Complex64::new(0.0, 0.0);
        let mut s = 0.0;
        for &ck in c.iter() {
            p = p * y + ck;
            s = s * r + ck.abs();
        }
        (p.norm(), s)
    };
    if den == 0.0 {
        num
    } else {
        num / den
    }
}

fn initial_guesses(c: &[f64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    // upper convex hull of (k, log|c_k|), zero coefficients excluded
    let pts: Vec<(usize, f64)> = c
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != 0.0)
        .map(|(k, v)| (k, v.abs().ln()))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (k1, y1) = hull[hull.len() - 2];
            let (k2, y2) = hull[hull.len() - 1];
            let cross =
                (k2 as f64 - k1 as f64) * (pt.1 - y1) - (y2 - y1) * (pt.0 as f64 - k1 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }

    let mut guesses = Vec::with_capacity(d);
    let tau = std::f64::consts::TAU;
    for win in hull.windows(2) {
        let (k1, y1) = win[0];
        let (k2, y2) = win[1];
        let count = k2 - k1;
        let radius = ((y1 - y2) / count as f64).exp();
        let offset = 0.4 + k1 as f64 * 0.7 / d as f64;
        for j in 0..count {
            let angle = tau * j as f64 / count as f64 + offset + tau * k1 as f64 / d as f64;
            guesses.push(Complex64::from_polar(radius, angle));
        }
    }
    guesses
}

fn aberth(monic: &[f64]) -> Result<(Vec<Complex64>, usize)> {
    let d = monic.len() - 1;
    if d == 1 {
        return Ok((vec![Complex64::new(-monic[0], 0.0)], 0));
    }
    let mut z = initial_guesses(monic);
    let mut done = vec![false; d];
    let stop = 4.0 * f64::EPSILON * d as f64;

    for it in 1..=MAX_ITERATIONS {
        for i in 0..d {
            if done[i] {
                continue;
            }
            let zi = z[i];
            if backward_error(monic, zi) <= stop {
                done[i] = true;
                continue;
            }
            let ratio = newton_step(monic, zi);
            let sum: Complex64 = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &zj)| (zi - zj).inv())
                .sum();
            let corr = ratio / (1.0 - ratio * sum);
            if !corr.re.is_finite() || !corr.im.is_finite() {
                continue;
            }
            z[i] = zi - corr;
            if corr.norm() <= f64::EPSILON * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|&f| f) {
            return Ok((z, it));
        }
    }

    // accept at the cap only if every root passes the certification bound
    if z.iter().all(|&zi| backward_error(monic, zi) <= 1e-10) {
        Ok((z, MAX_ITERATIONS))
    } else {
        Err(Error::NoConvergence {
            iterations: MAX_ITERATIONS,
            degree: d,
        })
    }
}

/// A couple of Newton steps on isolated roots, kept only when they reduce
/// the backward error.
fn polish(monic: &[f64], mut z: Vec<Complex64>) -> Vec<Complex64> {
    let n = z.len();
    for i in 0..n {
        let isolated =
            (0..n).all(|j| j == i || (z[i] - z[j]).norm() > CLUSTER_TOL * (1.0 + z[i].norm()));
        if !isolated {
            continue;
        }
        for _ in 0..2 {
            let cand = z[i] - newton_step(monic, z[i]);
            if backward_error(monic, cand) < backward_error(monic, z[i]) {
                z[i] = cand;
            } else {
                break;
            }
        }
    }
    // snap conjugate-symmetric noise on essentially real roots
    for zi in z.iter_mut() {
        if zi.im.abs() <= 1e-14 * zi.norm().max(1e-300) {
            let real = Complex64::new(zi.re, 0.0);
            if backward_error(monic, real) <= backward_error(monic, *zi) {
                *zi = real;
            }
        }
    }
    z
}
