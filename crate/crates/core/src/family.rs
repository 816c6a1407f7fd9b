//! The coefficient tuple `A`, its characteristic polynomial, and evaluation of
//! `T_{n,A}` / `U_{n,A}` by direct summation and by the `w`-form.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{cheb_t, cheb_t_complex, cheb_u, cheb_u_complex, w_map, w_map_complex};
use crate::poly::RealPolynomial;

/// `A = (a0, ..., am)` with `a0 != 0` and `am != 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ATuple {
    a: Vec<f64>,
}

impl ATuple {
    pub fn new(a: Vec<f64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidTuple("tuple is empty".into()));
        }
        if a.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidTuple("tuple entries must be finite".into()));
        }
        if a[0] == 0.0 {
            return Err(Error::InvalidTuple("a0 must be nonzero".into()));
        }
        if *a.last().unwrap() == 0.0 {
            return Err(Error::InvalidTuple("am must be nonzero".into()));
        }
        Ok(Self { a })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.a
    }

    /// Degree of the tuple, `m = len - 1`.
    pub fn m(&self) -> usize {
        self.a.len() - 1
    }

    fn check_index(&self, n: usize) -> Result<()> {
        if n < self.m() {
            Err(Error::IndexBelowDegree { n, m: self.m() })
        } else {
            Ok(())
        }
    }
}

impl TryFrom<Vec<f64>> for ATuple {
    type Error = Error;

    fn try_from(a: Vec<f64>) -> Result<Self> {
        Self::new(a)
    }
}

impl From<ATuple> for Vec<f64> {
    fn from(t: ATuple) -> Self {
        t.a
    }
}

/// `P_A(x) = a0 x^m + a1 x^(m-1) + ... + am`.
pub fn char_poly(a: &ATuple) -> RealPolynomial {
    RealPolynomial::from_highest_first(a.coeffs())
}

/// `Q(x) = x^m P(1/x)`.
pub fn reciprocal(p: &RealPolynomial) -> RealPolynomial {
    p.reciprocal()
}

/// `T_{n,A}(x) = sum_i a_i T_{n-i}(x)`.
pub fn eval_t_a(a: &ATuple, n: usize, x: f64) -> Result<f64> {
    a.check_index(n)?;
    Ok(a.coeffs()
        .iter()
        .enumerate()
        .map(|(i, &ai)| ai * cheb_t(n - i, x))
        .sum())
}

/// `U_{n,A}(x) = sum_i a_i U_{n-i}(x)`.
pub fn eval_u_a(a: &ATuple, n: usize, x: f64) -> Result<f64> {
    a.check_index(n)?;
    Ok(a.coeffs()
        .iter()
        .enumerate()
        .map(|(i, &ai)| ai * cheb_u(n - i, x))
        .sum())
}

/// `T_{n,A}(z)` at complex `z` (recurrence for each `T_k`).
pub fn eval_t_a_complex(a: &ATuple, n: usize, z: Complex64) -> Result<Complex64> {
    a.check_index(n)?;
    Ok(a.coeffs()
        .iter()
        .enumerate()
        .map(|(i, &ai)| ai * cheb_t_complex(n - i, z))
        .sum())
}

/// `U_{n,A}(z)` at complex `z`.
pub fn eval_u_a_complex(a: &ATuple, n: usize, z: Complex64) -> Result<Complex64> {
    a.check_index(n)?;
    Ok(a.coeffs()
        .iter()
        .enumerate()
        .map(|(i, &ai)| ai * cheb_u_complex(n - i, z))
        .sum())
}

/// `(P_A(w) w^(n-m) + P_A(1/w) w^-(n-m)) / 2` with `w = w_map(x)`.
pub fn eval_t_a_wform(a: &ATuple, n: usize, x: f64) -> Result<Complex64> {
    a.check_index(n)?;
    Ok(t_wform_at(a, n, w_map(x)))
}

pub fn eval_t_a_wform_complex(a: &ATuple, n: usize, x: Complex64) -> Result<Complex64> {
    a.check_index(n)?;
    Ok(t_wform_at(a, n, w_map_complex(x)))
}

fn t_wform_at(a: &ATuple, n: usize, w: Complex64) -> Complex64 {
    let p = char_poly(a);
    let k = (n - a.m()) as i32;
    let wi = w.inv();
    0.5 * (p.eval_complex(w) * w.powi(k) + p.eval_complex(wi) * wi.powi(k))
}

/// `(w^(n+1-m) P_A(w) - w^-(n+1-m) P_A(1/w)) / (w - 1/w)`.
///
/// Fails with [`Error::Singular`] at `x = ±1`, where the denominator
/// vanishes; use [`eval_u_a`] there.
pub fn eval_u_a_wform(a: &ATuple, n: usize, x: f64) -> Result<Complex64> {
    a.check_index(n)?;
    if (x * x - 1.0).abs() <= f64::EPSILON {
        return Err(Error::Singular(x));
    }
    Ok(u_wform_at(a, n, w_map(x)))
}

pub fn eval_u_a_wform_complex(a: &ATuple, n: usize, x: Complex64) -> Result<Complex64> {
    a.check_index(n)?;
    if (x * x - 1.0).norm() <= f64::EPSILON {
        return Err(Error::Singular(x.re));
    }
    Ok(u_wform_at(a, n, w_map_complex(x)))
}

fn u_wform_at(a: &ATuple, n: usize, w: Complex64) -> Complex64 {
    let p = char_poly(a);
    let k = (n + 1 - a.m()) as i32;
    let wi = w.inv();
    (w.powi(k) * p.eval_complex(w) - wi.powi(k) * p.eval_complex(wi)) / (w - wi)
}
