//! Zeros of `T_{n,A}` and `U_{n,A}`.
//!
//! Real zeros in `[-1, 1]` come from the angle equation ([`real_zeros_theta`]).
//! All complex zeros come from the `w`-plane: `2 w^n T_{n,A}((w + 1/w)/2)` is
//! the palindromic polynomial `R_{2n-m}(w)` and `w^n U_{n,A}((w + 1/w)/2)` is
//! `S_2n(w)`. Their roots come in reciprocal pairs `(w, 1/w)`, each pair
//! giving one zero `x = (w + 1/w)/2`.

mod aberth;
mod limit;
mod theta;
mod zeros;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use aberth::{complex_roots, MAX_ITERATIONS};
pub use limit::{limit_set_experiment, LimitPointReport, LimitRow, PredictedPoint};
pub use theta::{
    interlacing_check, max_gap, real_zeros_theta, real_zeros_theta_kind, theta_function_t,
    theta_function_u, theta_roots, Interlacing,
};
pub use zeros::{
    all_zeros, all_zeros_t, all_zeros_u, pair_reciprocal, persistent_zeros, DEFAULT_DEGREE_CAP,
};

pub(crate) use aberth::newton_step;

/// First or second kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    T,
    U,
}

/// Roots with a per-root residual `|p(z) / p'(z)|` (the size of the next
/// Newton correction) and optional reciprocal pairing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
    /// `pairing[i] = Some(j)` when `roots[j]` is the reciprocal partner of
    /// `roots[i]`.
    pub pairing: Option<Vec<Option<usize>>>,
    pub iterations: usize,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Real parts of the roots with `|im| <= im_tol` and `|re| <= 1 + im_tol`,
    /// ascending.
    pub fn real_in_unit_interval(&self, im_tol: f64) -> Vec<f64> {
        let mut xs: Vec<f64> = self
            .roots
            .iter()
            .filter(|z| z.im.abs() <= im_tol && z.re.abs() <= 1.0 + im_tol)
            .map(|z| z.re)
            .collect();
        xs.sort_by(f64::total_cmp);
        xs
    }

    /// Distance from `target` to the nearest root, `+inf` when empty.
    pub fn distance_to(&self, target: Complex64) -> f64 {
        self.roots
            .iter()
            .map(|z| (z - target).norm())
            .fold(f64::INFINITY, f64::min)
    }
}
