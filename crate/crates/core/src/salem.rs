//! Salem polynomial sequences built from a Pisot minimal polynomial `P` of
//! degree `m` with reciprocal `Q(x) = x^m P(1/x)`:
//!
//! ```text
//! R_k(w)  = w^k P(w) + Q(w)
//! S_2n(w) = (w^(2n+2-m) P(w) - Q(w)) / (w^2 - 1)
//! ```
//!
//! Both are palindromic, have at most one root outside the unit circle, and
//! their dominant real roots converge to the Pisot number as the index grows.
//! Certification here is numeric: a root census by modulus with a tolerance.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{char_poly, eval_t_a_complex, eval_u_a_complex, ATuple};
use crate::kernel::x_of_w;
use crate::poly::RealPolynomial;
use crate::rootfinder::complex_roots;

/// Default modulus tolerance for root censuses.
pub const DEFAULT_TOL: f64 = 1e-6;

/// Roots with `|im|` below this count as real.
const REAL_TOL: f64 = 1e-8;

fn check_constant_term(p: &RealPolynomial) -> Result<()> {
    if p.is_zero() || p.coeffs()[0] == 0.0 {
        return Err(Error::InvalidPolynomial(
            "constant term must be nonzero".into(),
        ));
    }
    Ok(())
}

/// `R_k(w) = w^k P(w) + Q(w)`, palindromic of degree `k + m`.
pub fn salem_r(p: &RealPolynomial, k: usize) -> Result<RealPolynomial> {
    check_constant_term(p)?;
    Ok(p.shift(k).add(&p.reciprocal()))
}

/// `S_2n(w) = (w^(2n+2-m) P(w) - Q(w)) / (w^2 - 1)`, palindromic of degree
/// `2n`.
///
/// The numerator vanishes at `w = ±1` identically; the division is checked
/// and fails with [`Error::InexactDivision`] if the remainder is not
/// negligible.
pub fn salem_s(p: &RealPolynomial, n: usize) -> Result<RealPolynomial> {
    check_constant_term(p)?;
    let m = p.degree();
    if n < m {
        return Err(Error::IndexBelowDegree { n, m });
    }
    let numer = p.shift(2 * n + 2 - m).sub(&p.reciprocal());
    let scale = numer.norm1().max(1.0);
    for w in [1.0, -1.0] {
        let v = numer.eval(w);
        if v.abs() > 1e-12 * scale {
            return Err(Error::InexactDivision(v.abs()));
        }
    }
    let (q, r) = numer.div_rem(&RealPolynomial::new(vec![-1.0, 0.0, 1.0]))?;
    let rem = r.coeffs().iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
    if rem > 1e-10 * scale {
        return Err(Error::InexactDivision(rem));
    }
    // The exact quotient is palindromic; average with its reversal so the
    // stored coefficients are too.
    let c = q.coeffs();
    let sym = c
        .iter()
        .zip(c.iter().rev())
        .map(|(a, b)| 0.5 * (a + b))
        .collect();
    Ok(RealPolynomial::new(sym))
}

/// Largest deviation in `2 w^n T_{n,A}(x(w)) = R_{2n-m}(w)` and
/// `w^n U_{n,A}(x(w)) = S_2n(w)` over `samples`, each relative to
/// `1 + |right-hand side|`.
pub fn wform_identity_check(a: &ATuple, n: usize, samples: &[Complex64]) -> Result<f64> {
    if n < a.m() {
        return Err(Error::IndexBelowDegree { n, m: a.m() });
    }
    let p = char_poly(a);
    let r = salem_r(&p, 2 * n - a.m())?;
    let s = salem_s(&p, n)?;
    let mut worst: f64 = 0.0;
    for &w in samples {
        if w.norm() == 0.0 || (w * w - 1.0).norm() == 0.0 {
            return Err(Error::InvalidArgument(format!(
                "sample w = {w} is excluded"
            )));
        }
        let x = x_of_w(w);
        let wn = w.powi(n as i32);
        let lhs_t = 2.0 * wn * eval_t_a_complex(a, n, x)?;
        let rhs_t = r.eval_complex(w);
        let lhs_u = wn * eval_u_a_complex(a, n, x)?;
        let rhs_u = s.eval_complex(w);
        worst = worst
            .max((lhs_t - rhs_t).norm() / (1.0 + rhs_t.norm()))
            .max((lhs_u - rhs_u).norm() / (1.0 + rhs_u.norm()));
    }
    Ok(worst)
}

/// Root counts by modulus: `> 1 + tol`, within `tol` of 1, `< 1 - tol`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub outside: usize,
    pub on_circle: usize,
    pub inside: usize,
}

impl Census {
    pub fn total(&self) -> usize {
        self.outside + self.on_circle + self.inside
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} outside, {} on the unit circle, {} inside",
            self.outside, self.on_circle, self.inside
        )
    }
}

fn census_of(roots: &[Complex64], tol: f64) -> Census {
    let mut c = Census {
        outside: 0,
        on_circle: 0,
        inside: 0,
    };
    for z in roots {
        let r = z.norm();
        if r > 1.0 + tol {
            c.outside += 1;
        } else if r < 1.0 - tol {
            c.inside += 1;
        } else {
            c.on_circle += 1;
        }
    }
    c
}

pub fn root_census(p: &RealPolynomial, tol: f64) -> Result<Census> {
    Ok(census_of(&complex_roots(p)?.roots, tol))
}

/// Numeric Salem test: palindromic, exactly one real root `τ > 1 + tol`, no
/// other root outside the circle, and at least two roots within `tol` of it.
/// Polynomials of degree below 4 are never Salem.
pub fn is_salem_numeric(p: &RealPolynomial, tol: f64) -> Result<bool> {
    if p.degree() < 4 || !p.is_palindromic(1e-12) {
        return Ok(false);
    }
    let roots = complex_roots(p)?.roots;
    let census = census_of(&roots, tol);
    let real_outside = roots
        .iter()
        .filter(|z| z.norm() > 1.0 + tol && z.im.abs() <= REAL_TOL && z.re > 0.0)
        .count();
    Ok(census.outside == 1 && real_outside == 1 && census.on_circle >= 2)
}

/// The Pisot number of `p`: its single root of modulus `> 1`, which must be
/// real and positive, with every other root of modulus `< 1 - tol`.
pub fn pisot_root(p: &RealPolynomial, tol: f64) -> Result<f64> {
    if p.degree() == 0 {
        return Err(Error::NotPisot("constant polynomial".into()));
    }
    let roots = complex_roots(p)?.roots;
    let census = census_of(&roots, tol);
    let big: Vec<&Complex64> = roots.iter().filter(|z| z.norm() > 1.0 + tol).collect();
    if census.outside != 1 || census.on_circle != 0 {
        return Err(Error::NotPisot(format!("root census: {census}")));
    }
    let q = big[0];
    if q.im.abs() > REAL_TOL || q.re <= 0.0 {
        return Err(Error::NotPisot(format!(
            "dominant root {q} is not a positive real number (census: {census})"
        )));
    }
    Ok(q.re)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SalemKind {
    /// `R_k`, indexed by `k`.
    R,
    /// `S_2n`, indexed by `n`.
    S,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SalemApproximant {
    pub kind: SalemKind,
    /// The requested `k` (for `R`) or `n` (for `S`).
    pub param: usize,
    /// Subscript of the polynomial: `k` for `R_k`, `2n` for `S_2n`.
    pub index: usize,
    pub poly: RealPolynomial,
    /// Largest real root; `None` if the polynomial has no real root.
    pub tau: Option<f64>,
    /// `|tau - q|`.
    pub residual: Option<f64>,
    pub census: Census,
}

/// Largest real root, polished by Newton on the real line.
fn largest_real_root(p: &RealPolynomial, roots: &[Complex64]) -> Option<f64> {
    let cand = roots
        .iter()
        .filter(|z| z.im.abs() <= REAL_TOL * (1.0 + z.norm()))
        .map(|z| z.re)
        .fold(None, |best: Option<f64>, x| {
            Some(best.map_or(x, |b| b.max(x)))
        })?;
    let dp = p.derivative();
    let mut x = cand;
    for _ in 0..8 {
        let d = dp.eval(x);
        if d == 0.0 {
            break;
        }
        let next = x - p.eval(x) / d;
        if !next.is_finite() || p.eval(next).abs() >= p.eval(x).abs() {
            break;
        }
        x = next;
    }
    Some(x)
}

/// Build `R_k` or `S_2n` for every index and measure how close the dominant
/// root comes to the Pisot number of `p`.
pub fn pisot_to_salem_sequence(
    p: &RealPolynomial,
    indices: &[usize],
    kind: SalemKind,
    tol: f64,
) -> Result<Vec<SalemApproximant>> {
    check_constant_term(p)?;
    let q = pisot_root(p, tol)?;
    indices
        .iter()
        .map(|&param| {
            let (poly, index) = match kind {
                SalemKind::R => (salem_r(p, param)?, param),
                SalemKind::S => (salem_s(p, param)?, 2 * param),
            };
            let roots = complex_roots(&poly)?.roots;
            let tau = largest_real_root(&poly, &roots);
            Ok(SalemApproximant {
                kind,
                param,
                index,
                census: census_of(&roots, tol),
                residual: tau.map(|t| (t - q).abs()),
                tau,
                poly,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> RealPolynomial {
        RealPolynomial::from_highest_first(&[1.0, -1.0, -1.0])
    }

    #[test]
    fn salem_r_golden() {
        let r = salem_r(&golden(), 10).unwrap();
        assert_eq!(r.to_string_in("w"), "w^12-w^11-w^10-w^2-w+1");
        assert!(r.is_palindromic(0.0));
    }

    #[test]
    fn salem_r_of_palindrome_at_zero_doubles() {
        let p = RealPolynomial::from_highest_first(&[2.0, -5.0, 2.0]);
        assert_eq!(salem_r(&p, 0).unwrap(), p.scale(2.0));
    }

    #[test]
    fn salem_s_small_golden() {
        let s = salem_s(&golden(), 2).unwrap();
        assert_eq!(
            s,
            RealPolynomial::from_highest_first(&[1.0, -1.0, 0.0, -1.0, 1.0])
        );
        assert!(salem_s(&golden(), 1).is_err());
    }

    #[test]
    fn zero_constant_term_rejected() {
        let p = RealPolynomial::new(vec![0.0, -1.0, 1.0]);
        assert!(salem_r(&p, 3).is_err());
        assert!(salem_s(&p, 3).is_err());
    }

    #[test]
    fn census_examples() {
        let c = root_census(&golden(), DEFAULT_TOL).unwrap();
        assert_eq!((c.outside, c.on_circle, c.inside), (1, 0, 1));
        let c = root_census(&RealPolynomial::new(vec![-1.0, 0.0, 1.0]), DEFAULT_TOL).unwrap();
        assert_eq!((c.outside, c.on_circle, c.inside), (0, 2, 0));
    }

    #[test]
    fn salem_numeric_examples() {
        let lehmer_like = RealPolynomial::from_highest_first(&[1.0, -1.0, -1.0, -1.0, 1.0]);
        assert!(is_salem_numeric(&lehmer_like, DEFAULT_TOL).unwrap());
        assert!(!is_salem_numeric(&golden(), DEFAULT_TOL).unwrap());
        let s4 = salem_s(&golden(), 2).unwrap();
        assert!(!is_salem_numeric(&s4, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn non_pisot_rejected() {
        let p = RealPolynomial::from_highest_first(&[1.0, -3.0, 2.0]);
        assert!(matches!(
            pisot_to_salem_sequence(&p, &[5], SalemKind::S, DEFAULT_TOL),
            Err(Error::NotPisot(_))
        ));
    }

    #[test]
    fn golden_sequence_r() {
        let seq = pisot_to_salem_sequence(&golden(), &[10], SalemKind::R, DEFAULT_TOL).unwrap();
        let tau = seq[0].tau.unwrap();
        assert!(seq[0].poly.eval(tau).abs() < 1e-10);
        assert_eq!(seq[0].census.outside, 1);
        assert_eq!(seq[0].census.total(), 12);
    }

    #[test]
    fn identity_small_case() {
        let a = ATuple::new(vec![1.0]).unwrap();
        let d = wform_identity_check(&a, 3, &[Complex64::new(2.0, 0.0)]).unwrap();
        assert!(d <= 1e-10);
        assert!(wform_identity_check(&a, 3, &[Complex64::new(1.0, 0.0)]).is_err());
    }
}
