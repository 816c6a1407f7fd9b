//! A-Chebyshev polynomials.
//!
//! For a fixed real tuple `A = (a0, ..., am)` with `a0, am != 0` this crate
//! works with the families
//!
//! ```text
//! T_{n,A}(x) = a0 T_n(x) + a1 T_{n-1}(x) + ... + am T_{n-m}(x)
//! U_{n,A}(x) = a0 U_n(x) + a1 U_{n-1}(x) + ... + am U_{n-m}(x)
//! ```
//!
//! and the characteristic polynomial `P_A(x) = a0 x^m + ... + am`. It provides
//! evaluation by two independent routes (direct summation and the `w`-form
//! with `x = (w + 1/w) / 2`), the n-independent envelope of the family, the
//! zero sets and their limit points as `n` grows, and the Salem polynomial
//! sequences `R_k` and `S_2n` built from a Pisot minimal polynomial.
//!
//! Polynomial coefficients are stored lowest degree first throughout.

pub mod envelope;
mod error;
pub mod family;
pub mod kernel;
pub mod poly;
pub mod rootfinder;
pub mod salem;

pub use error::{Error, Result};
pub use family::ATuple;
pub use kernel::ChebSeries;
pub use num_complex::Complex64;
pub use poly::RealPolynomial;
pub use rootfinder::{LimitPointReport, RootSet};
pub use salem::{Census, SalemApproximant, SalemKind};
