//! Dense real polynomials in the monomial basis, lowest degree first.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    /// Build from coefficients `c0, c1, ...` (lowest degree first). Trailing
    /// zero coefficients are dropped; the zero polynomial is stored as `[0]`.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    /// Build from coefficients written the usual way, highest degree first.
    pub fn from_highest_first(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().rev().copied().collect())
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0.0
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    /// Sum of absolute values of the coefficients.
    pub fn norm1(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// `(p(z), p'(z))` by a doubled Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::new(vec![0.0]);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    /// `x^deg p(1/x)`: the coefficient reversal. Drops degree when the constant
    /// term vanishes.
    pub fn reciprocal(&self) -> Self {
        Self::new(self.coeffs.iter().rev().copied().collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0.0; k];
        c.extend_from_slice(&self.coeffs);
        Self::new(c)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
        Self::new(
            (0..n)
                .map(|i| get(&self.coeffs, i) + get(&other.coeffs, i))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Long division: returns `(quotient, remainder)` with
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::InvalidPolynomial(
                "division by the zero polynomial".into(),
            ));
        }
        let dd = divisor.degree();
        if self.degree() < dd {
            return Ok((Self::new(vec![0.0]), self.clone()));
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0.0; self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd] / lead;
            quot[k] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= q * d;
            }
            rem[k + dd] = 0.0;
        }
        rem.truncate(dd.max(1));
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// True when `c_k == c_{d-k}` for all `k`, up to `tol` relative to the
    /// largest coefficient. `tol = 0` demands exact equality.
    pub fn is_palindromic(&self, tol: f64) -> bool {
        let scale = self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        self.coeffs
            .iter()
            .zip(self.coeffs.iter().rev())
            .all(|(a, b)| (a - b).abs() <= tol * scale)
    }

    /// Human-readable form, highest degree first, in the variable `var`.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let neg = c < 0.0;
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            if mag != 1.0 || k == 0 {
                out.push_str(&format!("{mag}"));
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

impl fmt::Display for RealPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trims_and_degree() {
        let p = RealPolynomial::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), 1);
        assert!(RealPolynomial::new(vec![]).is_zero());
        assert_eq!(
            RealPolynomial::from_highest_first(&[2.0, -5.0, 2.0]).coeffs(),
            &[2.0, -5.0, 2.0]
        );
    }

    #[test]
    fn reciprocal_examples() {
        let p = RealPolynomial::from_highest_first(&[1.0, -1.0, -1.0]);
        assert_eq!(
            p.reciprocal(),
            RealPolynomial::from_highest_first(&[-1.0, -1.0, 1.0])
        );
        let q = RealPolynomial::from_highest_first(&[2.0, -5.0, 2.0]);
        assert_eq!(q.reciprocal(), q);
        // constant term zero drops the degree
        let r = RealPolynomial::new(vec![0.0, 1.0, 3.0]);
        assert_eq!(r.reciprocal().degree(), 1);
    }

    #[test]
    fn division_by_w2_minus_1() {
        // w^6 - w^5 - w^4 + w^2 + w - 1 = (w^2 - 1)(w^4 - w^3 - w + 1)
        let n = RealPolynomial::from_highest_first(&[1.0, -1.0, -1.0, 0.0, 1.0, 1.0, -1.0]);
        let d = RealPolynomial::new(vec![-1.0, 0.0, 1.0]);
        let (q, r) = n.div_rem(&d).unwrap();
        assert_eq!(
            q,
            RealPolynomial::from_highest_first(&[1.0, -1.0, 0.0, -1.0, 1.0])
        );
        assert!(r.is_zero());
        assert!(n.div_rem(&RealPolynomial::new(vec![0.0])).is_err());
    }

    #[test]
    fn display() {
        let p = RealPolynomial::from_highest_first(&[
            1.0, -1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0, -1.0, 1.0,
        ]);
        assert_eq!(p.to_string_in("w"), "w^12-w^11-w^10-w^2-w+1");
        assert_eq!(
            RealPolynomial::new(vec![-0.5, 0.0, 2.0]).to_string(),
            "2x^2-0.5"
        );
    }

    #[test]
    fn derivative_and_eval() {
        let p = RealPolynomial::new(vec![1.0, -3.0, 0.0, 2.0]);
        assert_eq!(p.derivative().coeffs(), &[-3.0, 0.0, 6.0]);
        let z = Complex64::new(0.3, -1.2);
        let (v, dv) = p.eval_with_derivative(z);
        assert!((v - p.eval_complex(z)).norm() < 1e-14);
        assert!((dv - p.derivative().eval_complex(z)).norm() < 1e-14);
    }

    proptest! {
        #[test]
        fn reciprocal_is_an_involution(c in prop::collection::vec(-10.0f64..10.0, 1..12)) {
            prop_assume!(c[0] != 0.0);
            let p = RealPolynomial::new(c);
            prop_assert_eq!(p.reciprocal().reciprocal(), p);
        }

        #[test]
        fn div_rem_reconstructs(
            a in prop::collection::vec(-5.0f64..5.0, 1..10),
            b in prop::collection::vec(-5.0f64..5.0, 1..5),
        ) {
            let b = RealPolynomial::new(b);
            prop_assume!(b.leading().abs() > 0.1);
            let a = RealPolynomial::new(a);
            let (q, r) = a.div_rem(&b).unwrap();
            let back = q.mul(&b).add(&r);
            let scale = 1.0 + a.norm1() * (1.0 + q.norm1());
            for (x, y) in back.coeffs().iter().zip(a.coeffs()) {
                prop_assert!((x - y).abs() <= 1e-12 * scale);
            }
        }
    }
}
