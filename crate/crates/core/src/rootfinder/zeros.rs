use num_complex::Complex64;

use super::{complex_roots, newton_step, Kind, RootSet};
use crate::error::{Error, Result};
use crate::family::{char_poly, ATuple};
use crate::kernel::x_of_w;
use crate::poly::RealPolynomial;
use crate::salem::{salem_r, salem_s};

/// Largest `w`-plane degree solved densely (`n <= 256` for the first kind).
pub const DEFAULT_DEGREE_CAP: usize = 512;

const PAIR_TOL: f64 = 1e-6;
const PERSISTENT_TOL: f64 = 1e-8;

/// Match every root with the remaining root nearest to its reciprocal.
///
/// Roots are visited by decreasing modulus. A match is accepted when
/// `|w w' - 1| <= tol`; unit-circle roots end up paired with their
/// conjugates.
pub fn pair_reciprocal(roots: &[Complex64], tol: f64) -> Vec<Option<usize>> {
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&i, &j| roots[j].norm().total_cmp(&roots[i].norm()).then(i.cmp(&j)));
    let mut pairing = vec![None; roots.len()];
    for &i in &order {
        if pairing[i].is_some() {
            continue;
        }
        let target = roots[i].inv();
        let best = order
            .iter()
            .copied()
            .filter(|&j| j != i && pairing[j].is_none())
            .min_by(|&j, &k| {
                (roots[j] - target)
                    .norm()
                    .total_cmp(&(roots[k] - target).norm())
            });
        if let Some(j) = best {
            if (roots[i] * roots[j] - 1.0).norm() <= tol {
                pairing[i] = Some(j);
                pairing[j] = Some(i);
            }
        }
    }
    pairing
}

fn w_polynomial(a: &ATuple, n: usize, kind: Kind) -> Result<RealPolynomial> {
    let p = char_poly(a);
    match kind {
        Kind::T => salem_r(&p, 2 * n - a.m()),
        Kind::U => salem_s(&p, n),
    }
}

/// All `n` zeros of `T_{n,A}` (`kind = T`) or `U_{n,A}` (`kind = U`) in the
/// `x`-plane, sorted by real then imaginary part.
///
/// The residual attached to each zero is `|dx/dw| |p(w)/p'(w)|` maximised
/// over the two `w`-roots of its pair, i.e. the `x`-plane size of the next
/// Newton correction.
pub fn all_zeros(a: &ATuple, n: usize, kind: Kind, degree_cap: usize) -> Result<RootSet> {
    if n < a.m() {
        return Err(Error::IndexBelowDegree { n, m: a.m() });
    }
    if 2 * n > degree_cap {
        return Err(Error::DegreeCap {
            degree: 2 * n,
            cap: degree_cap,
        });
    }
    if n == 0 {
        return Ok(RootSet {
            roots: Vec::new(),
            residuals: Vec::new(),
            pairing: None,
            iterations: 0,
        });
    }
    let poly = w_polynomial(a, n, kind)?;
    let wroots = complex_roots(&poly)?;
    let w = &wroots.roots;
    let mut pairing = pair_reciprocal(w, PAIR_TOL);

    // leftovers (only after severe loss of accuracy): pair greedily anyway
    let mut rest: Vec<usize> = (0..w.len()).filter(|&i| pairing[i].is_none()).collect();
    while rest.len() >= 2 {
        let i = rest.remove(0);
        let target = w[i].inv();
        let (pos, _) = rest
            .iter()
            .enumerate()
            .min_by(|(_, &j), (_, &k)| (w[j] - target).norm().total_cmp(&(w[k] - target).norm()))
            .unwrap();
        let j = rest.remove(pos);
        pairing[i] = Some(j);
        pairing[j] = Some(i);
    }

    let x_residual = |z: Complex64| -> f64 {
        let dxdw = 0.5 * (1.0 - (z * z).inv());
        (dxdw * newton_step(poly.coeffs(), z)).norm()
    };
    let mut zeros: Vec<(Complex64, f64)> = Vec::with_capacity(n);
    for i in 0..w.len() {
        match pairing[i] {
            Some(j) if j > i => {
                let x = 0.5 * (x_of_w(w[i]) + x_of_w(w[j]));
                zeros.push((x, x_residual(w[i]).max(x_residual(w[j]))));
            }
            Some(_) => {}
            None => zeros.push((x_of_w(w[i]), x_residual(w[i]))),
        }
    }
    if zeros.len() != n {
        return Err(Error::NoConvergence {
            iterations: wroots.iterations,
            degree: poly.degree(),
        });
    }
    zeros.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    Ok(RootSet {
        roots: zeros.iter().map(|z| z.0).collect(),
        residuals: zeros.iter().map(|z| z.1).collect(),
        pairing: None,
        iterations: wroots.iterations,
    })
}

/// All zeros of `T_{n,A}` via the roots of `R_{2n-m}(w)`.
pub fn all_zeros_t(a: &ATuple, n: usize) -> Result<RootSet> {
    all_zeros(a, n, Kind::T, DEFAULT_DEGREE_CAP)
}

/// All zeros of `U_{n,A}` via the roots of `S_2n(w)`.
pub fn all_zeros_u(a: &ATuple, n: usize) -> Result<RootSet> {
    all_zeros(a, n, Kind::U, DEFAULT_DEGREE_CAP)
}

/// Zeros shared by every `T_{n,A}`, `n >= m`: `x = (ω + 1/ω)/2` for each
/// root `ω` of `P_A` whose reciprocal is also a root. Self-reciprocal roots
/// `ω = ±1` give `x = ±1`. One value per pair, sorted.
pub fn persistent_zeros(a: &ATuple) -> Result<Vec<Complex64>> {
    let p = char_poly(a);
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let roots = complex_roots(&p)?.roots;
    let pairing = pair_reciprocal(&roots, PERSISTENT_TOL);
    let mut out = Vec::new();
    for (i, pair) in pairing.iter().enumerate() {
        match *pair {
            Some(j) if j > i => {
                let mut x = 0.5 * (roots[i] + roots[j]);
                if x.im.abs() <= 1e-12 * (1.0 + x.re.abs()) {
                    x.im = 0.0;
                }
                out.push(x);
            }
            Some(_) => {}
            None => {
                let w = roots[i];
                if (w * w - 1.0).norm() <= PERSISTENT_TOL {
                    out.push(Complex64::new(w.re.signum(), 0.0));
                }
            }
        }
    }
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    out.dedup_by(|a, b| (*a - *b).norm() <= 1e-9);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::eval_t_a_complex;
    use std::f64::consts::PI;

    fn tuple(a: &[f64]) -> ATuple {
        ATuple::new(a.to_vec()).unwrap()
    }

    #[test]
    fn contains_five_quarters() {
        let z = all_zeros_t(&tuple(&[2.0, -5.0, 2.0]), 4).unwrap();
        assert_eq!(z.len(), 4);
        assert!(z.distance_to(Complex64::new(1.25, 0.0)) < 1e-12);
    }

    #[test]
    fn classical_nodes_from_w_plane() {
        let z = all_zeros_t(&tuple(&[1.0]), 4).unwrap();
        assert_eq!(z.len(), 4);
        for (k, x) in z.roots.iter().rev().enumerate() {
            let node = ((k as f64 + 0.5) * PI / 4.0).cos();
            assert!((x.re - node).abs() < 1e-13 && x.im.abs() < 1e-13);
        }
    }

    #[test]
    fn second_kind_classical() {
        let z = all_zeros_u(&tuple(&[1.0]), 3).unwrap();
        let h = 0.5f64.sqrt();
        let re: Vec<f64> = z.roots.iter().map(|x| x.re).collect();
        assert!((re[0] + h).abs() < 1e-13 && re[1].abs() < 1e-13 && (re[2] - h).abs() < 1e-13);
    }

    #[test]
    fn degree_cap_and_index_errors() {
        let a = tuple(&[1.0, 2.0]);
        assert_eq!(
            all_zeros(&a, 300, Kind::T, DEFAULT_DEGREE_CAP),
            Err(Error::DegreeCap {
                degree: 600,
                cap: 512
            })
        );
        assert!(all_zeros_t(&tuple(&[1.0, 2.0, 3.0]), 1).is_err());
    }

    #[test]
    fn persistent_examples() {
        assert_eq!(
            persistent_zeros(&tuple(&[2.0, -5.0, 2.0])).unwrap().len(),
            1
        );
        assert!((persistent_zeros(&tuple(&[2.0, -5.0, 2.0])).unwrap()[0] - 1.25).norm() < 1e-14);
        let z = persistent_zeros(&tuple(&[1.0, -3.0, 1.0])).unwrap();
        assert_eq!(z.len(), 1);
        assert!((z[0] - 1.5).norm() < 1e-14);
        assert_eq!(
            persistent_zeros(&tuple(&[1.0, 1.0])).unwrap(),
            vec![Complex64::new(-1.0, 0.0)]
        );
        assert!(persistent_zeros(&tuple(&[1.0, -1.0, -1.0]))
            .unwrap()
            .is_empty());
        assert!(persistent_zeros(&tuple(&[3.0])).unwrap().is_empty());
    }

    #[test]
    fn persistent_zeros_vanish_for_all_n() {
        // P = (x^2 + 4)(x^2 + 1/4)(x - 3): reciprocal pairs (2i, -i/2) and (-2i, i/2)
        let p = RealPolynomial::new(vec![4.0, 0.0, 1.0])
            .mul(&RealPolynomial::new(vec![0.25, 0.0, 1.0]))
            .mul(&RealPolynomial::new(vec![-3.0, 1.0]));
        let a = tuple(&p.coeffs().iter().rev().copied().collect::<Vec<_>>());
        let z = persistent_zeros(&a).unwrap();
        assert_eq!(z.len(), 2);
        for x in &z {
            for n in a.m()..=a.m() + 20 {
                let v = eval_t_a_complex(&a, n, *x).unwrap();
                let scale: f64 = (0..=n)
                    .map(|k| crate::kernel::cheb_t_complex(k, *x).norm())
                    .fold(1.0, f64::max);
                assert!(v.norm() <= 1e-11 * scale, "n={n} x={x} v={v}");
            }
        }
    }

    #[test]
    fn pairing_tolerance_respected() {
        let roots = vec![
            Complex64::new(2.0, 0.0),
            Complex64::new(0.5, 0.0),
            Complex64::new(3.0, 0.0),
        ];
        let p = pair_reciprocal(&roots, 1e-6);
        assert_eq!(p, vec![Some(1), Some(0), None]);
    }
}
