//! Scalar kernels for the classical Chebyshev polynomials `T_n`, `U_n` and
//! for finite Chebyshev series, valid on and off `[-1, 1]`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::RealPolynomial;

/// `T_n(x)`.
///
/// Inside `[-1, 1]` this is `cos(n acos x)`; outside it is
/// `sign^n cosh(n acosh |x|)`, which equals `(w^n + w^-n) / 2`.
pub fn cheb_t(n: usize, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x,
        _ if x.abs() <= 1.0 => (n as f64 * x.acos()).cos(),
        _ => {
            let v = (n as f64 * x.abs().acosh()).cosh();
            if x < 0.0 && n % 2 == 1 {
                -v
            } else {
                v
            }
        }
    }
}

/// `U_n(x)`.
///
/// Uses `sin((n+1)θ) / sin θ` inside the interval, the hyperbolic analogue
/// outside it, and the limits `U_n(±1) = (±1)^n (n+1)` at the endpoints.
pub fn cheb_u(n: usize, x: f64) -> f64 {
    let parity = |v: f64| if x < 0.0 && n % 2 == 1 { -v } else { v };
    match n {
        0 => 1.0,
        1 => 2.0 * x,
        _ if x.abs() == 1.0 => parity(n as f64 + 1.0),
        _ if x.abs() < 1.0 => {
            let theta = x.acos();
            ((n as f64 + 1.0) * theta).sin() / theta.sin()
        }
        _ => {
            let t = x.abs().acosh();
            parity(((n as f64 + 1.0) * t).sinh() / t.sinh())
        }
    }
}

/// `T_n(z)` for complex `z` by the forward three-term recurrence.
pub fn cheb_t_complex(n: usize, z: Complex64) -> Complex64 {
    three_term(n, z, z)
}

/// `U_n(z)` for complex `z` by the forward three-term recurrence.
pub fn cheb_u_complex(n: usize, z: Complex64) -> Complex64 {
    three_term(n, z, 2.0 * z)
}

fn three_term(n: usize, z: Complex64, first: Complex64) -> Complex64 {
    let mut prev = Complex64::new(1.0, 0.0);
    if n == 0 {
        return prev;
    }
    let mut cur = first;
    for _ in 1..n {
        let next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The map `x -> w = x + sqrt(x^2 - 1)` on the branch with `|w| >= 1`.
///
/// For real `|x| <= 1` both branches lie on the unit circle and the one in the
/// closed upper half plane is returned, so `w_map(cos θ) = e^{iθ}`.
pub fn w_map(x: f64) -> Complex64 {
    if x.abs() <= 1.0 {
        Complex64::new(x, ((1.0 - x) * (1.0 + x)).sqrt())
    } else if x > 1.0 {
        Complex64::new(x + ((x - 1.0) * (x + 1.0)).sqrt(), 0.0)
    } else {
        Complex64::new(x - ((x - 1.0) * (x + 1.0)).sqrt(), 0.0)
    }
}

/// Complex version of [`w_map`].
pub fn w_map_complex(x: Complex64) -> Complex64 {
    if x.im == 0.0 {
        return w_map(x.re);
    }
    let s = (x - 1.0).sqrt() * (x + 1.0).sqrt();
    let (a, b) = (x + s, x - s);
    let (na, nb) = (a.norm(), b.norm());
    if na > nb || (na == nb && a.im >= b.im) {
        a
    } else {
        b
    }
}

/// Inverse of the `w`-map: `x = (w + 1/w) / 2`.
pub fn x_of_w(w: Complex64) -> Complex64 {
    0.5 * (w + w.inv())
}

/// A finite Chebyshev-basis expansion `sum_k c_k T_k(x)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChebSeries {
    coeffs: Vec<f64>,
}

impl ChebSeries {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "Chebyshev series needs at least one coefficient".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Clenshaw backward recurrence.
    pub fn eval(&self, x: f64) -> f64 {
        let mut b1 = 0.0;
        let mut b2 = 0.0;
        for &c in self.coeffs[1..].iter().rev() {
            let b0 = 2.0 * x * b1 - b2 + c;
            b2 = b1;
            b1 = b0;
        }
        x * b1 - b2 + self.coeffs[0]
    }

    /// Re-expand in the monomial basis using `T_{k+1} = 2x T_k - T_{k-1}`.
    pub fn to_monomial(&self) -> RealPolynomial {
        let d = self.degree();
        let mut out = vec![0.0; d + 1];
        let mut prev = vec![0.0; d + 1];
        let mut cur = vec![0.0; d + 1];
        prev[0] = 1.0;
        if d >= 1 {
            cur[1] = 1.0;
        }
        for (k, &c) in self.coeffs.iter().enumerate() {
            let basis = if k == 0 { &prev } else { &cur };
            for (o, b) in out.iter_mut().zip(basis) {
                *o += c * b;
            }
            if k >= 1 && k < d {
                let mut next = vec![0.0; d + 1];
                for j in 0..d {
                    next[j + 1] += 2.0 * cur[j];
                }
                for (nj, pj) in next.iter_mut().zip(&prev) {
                    *nj -= pj;
                }
                prev = std::mem::replace(&mut cur, next);
            }
        }
        RealPolynomial::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn trivial_values() {
        assert_eq!(cheb_t(0, 0.7), 1.0);
        assert_relative_eq!(cheb_t(3, 0.5), -1.0, epsilon = 1e-15);
        assert_eq!(cheb_t(1, -3.25), -3.25);
        assert_eq!(cheb_u(0, -0.3), 1.0);
        assert_eq!(cheb_u(1, 0.4), 0.8);
    }

    #[test]
    fn endpoints_of_u() {
        assert_eq!(cheb_u(5, 1.0), 6.0);
        assert_eq!(cheb_u(5, -1.0), -6.0);
        assert_eq!(cheb_u(4, -1.0), 5.0);
    }

    #[test]
    fn t_outside_interval_matches_w_form() {
        let w = 1.25 + (0.5625f64).sqrt();
        assert_eq!(w, 2.0);
        let expected = 0.5 * (w.powi(5) + w.powi(-5));
        assert_relative_eq!(cheb_t(5, 1.25), expected, max_relative = 1e-14);
        assert_relative_eq!(cheb_t(5, -1.25), -expected, max_relative = 1e-14);
        assert_relative_eq!(
            cheb_t(4, -1.25),
            0.5 * (16.0 + 1.0 / 16.0),
            max_relative = 1e-14
        );
    }

    #[test]
    fn w_map_branches() {
        assert_eq!(w_map(1.25), Complex64::new(2.0, 0.0));
        assert_eq!(w_map(-1.25), Complex64::new(-2.0, 0.0));
        assert_eq!(w_map(1.0), Complex64::new(1.0, 0.0));
        assert_eq!(w_map(0.0), Complex64::new(0.0, 1.0));
        let w = w_map(0.3);
        assert!(w.im > 0.0);
        assert_relative_eq!(w.norm(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn w_map_complex_picks_outer_branch() {
        for &(re, im) in &[(0.3, 0.2), (-2.0, 0.5), (0.0, -1.0), (5.0, -3.0)] {
            let x = Complex64::new(re, im);
            let w = w_map_complex(x);
            assert!(w.norm() >= 1.0);
            assert!((x_of_w(w) - x).norm() <= 1e-14 * (1.0 + x.norm()));
        }
    }

    #[test]
    fn complex_recurrence_agrees_on_real_axis() {
        for n in 0..20 {
            for &x in &[-1.7, -0.4, 0.0, 0.9, 2.2] {
                let t = cheb_t_complex(n, Complex64::new(x, 0.0));
                let u = cheb_u_complex(n, Complex64::new(x, 0.0));
                assert!((t.re - cheb_t(n, x)).abs() <= 1e-10 * (1.0 + t.re.abs()));
                assert!((u.re - cheb_u(n, x)).abs() <= 1e-10 * (1.0 + u.re.abs()));
            }
        }
    }

    #[test]
    fn series_small_cases() {
        let s = ChebSeries::new(vec![5.0]).unwrap();
        assert_eq!(s.eval(0.123), 5.0);
        assert_eq!(s.eval(-7.0), 5.0);
        let s = ChebSeries::new(vec![2.0, 0.0, 2.0]).unwrap();
        assert_relative_eq!(s.eval(0.5), 1.0, epsilon = 1e-15);
        assert!(ChebSeries::new(vec![]).is_err());
    }

    #[test]
    fn to_monomial_low_degrees() {
        // T3 = 4x^3 - 3x
        let s = ChebSeries::new(vec![0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(s.to_monomial().coeffs(), &[0.0, -3.0, 0.0, 4.0]);
        // 2 + 2 T3 = 2 - 6x + 8x^3
        let s = ChebSeries::new(vec![2.0, 0.0, 0.0, 2.0]).unwrap();
        assert_eq!(s.to_monomial().coeffs(), &[2.0, -6.0, 0.0, 8.0]);
        // T4 = 8x^4 - 8x^2 + 1
        let s = ChebSeries::new(vec![0.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(s.to_monomial().coeffs(), &[1.0, 0.0, -8.0, 0.0, 8.0]);
    }

    #[test]
    fn t_of_cos_is_cos_multiple() {
        for n in 0..=64 {
            for j in 0..=100 {
                let theta = PI * j as f64 / 100.0;
                let v = cheb_t(n, theta.cos());
                assert!(
                    (v - (n as f64 * theta).cos()).abs() <= 1e-12,
                    "n={n} θ={theta}"
                );
            }
        }
    }
}
