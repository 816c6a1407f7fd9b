use achebyshev::family::{char_poly, eval_t_a};
use achebyshev::rootfinder::{
    all_zeros_t, all_zeros_u, complex_roots, interlacing_check, limit_set_experiment, max_gap,
    pair_reciprocal, persistent_zeros, real_zeros_theta, Kind,
};
use achebyshev::salem::salem_r;
use achebyshev::{ATuple, Complex64, RealPolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn tuple(a: &[f64]) -> ATuple {
    ATuple::new(a.to_vec()).unwrap()
}

fn random_tuple(rng: &mut ChaCha8Rng, max_m: usize) -> ATuple {
    let m = rng.gen_range(0..=max_m);
    let mut a: Vec<f64> = (0..=m).map(|_| rng.gen_range(-2.0..2.0)).collect();
    for i in [0, m] {
        if a[i].abs() < 0.1 {
            a[i] = 1.1;
        }
    }
    ATuple::new(a).unwrap()
}

/// Real parts of zeros that are real to `tol` and lie in `[-1, 1]`.
fn real_part(zs: &[Complex64], tol: f64) -> Vec<f64> {
    let mut v: Vec<f64> = zs
        .iter()
        .filter(|z| z.im.abs() <= tol && z.re.abs() <= 1.0 + tol)
        .map(|z| z.re.clamp(-1.0, 1.0))
        .collect();
    v.sort_by(f64::total_cmp);
    v
}

#[test]
fn quadratic_roots_match_formula() {
    let r = complex_roots(&RealPolynomial::from_highest_first(&[1.0, -1.0, -1.0])).unwrap();
    let s5 = 5f64.sqrt();
    let mut re: Vec<f64> = r.roots.iter().map(|z| z.re).collect();
    re.sort_by(f64::total_cmp);
    assert!((re[0] - (1.0 - s5) / 2.0).abs() < 1e-15);
    assert!((re[1] - (1.0 + s5) / 2.0).abs() < 1e-15);
    assert!(r.roots.iter().all(|z| z.im == 0.0));
}

#[test]
fn count_and_route_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..60 {
        let a = random_tuple(&mut rng, 4);
        let n = rng.gen_range(a.m().max(1)..=30);
        let all = all_zeros_t(&a, n).unwrap();
        assert_eq!(all.len(), n);
        let scale = 1.0 + a.coeffs().iter().map(|v| v.abs()).sum::<f64>();
        assert!(all.residuals.iter().all(|&r| r <= 1e-8 * scale));
        let theta = real_zeros_theta(&a, n).unwrap();
        let from_w = real_part(&all.roots, 1e-7);
        assert_eq!(theta.len(), from_w.len(), "a={a:?} n={n}");
        for (u, v) in theta.iter().zip(&from_w) {
            assert!((u - v).abs() <= 1e-7, "a={a:?} n={n} {u} {v}");
        }
        let u = all_zeros_u(&a, n).unwrap();
        assert_eq!(u.len(), n);
    }
}

#[test]
fn theta_route_matches_sign_change_oracle() {
    // T_{3,(1,-1)}(cos θ) = cos 3θ - cos 2θ
    let zs = real_zeros_theta(&tuple(&[1.0, -1.0]), 3).unwrap();
    let g = |t: f64| (3.0 * t).cos() - (2.0 * t).cos();
    let count = 200_000;
    let mut expected = Vec::new();
    for i in 0..count {
        let (t0, t1) = (
            std::f64::consts::PI * i as f64 / count as f64,
            std::f64::consts::PI * (i + 1) as f64 / count as f64,
        );
        if g(t0) == 0.0 || (g(t0) < 0.0) != (g(t1) < 0.0) {
            expected.push(t0.cos());
        }
    }
    // θ = 0 is a zero: cos 0 - cos 0
    expected.sort_by(f64::total_cmp);
    assert_eq!(zs.len(), expected.len());
    for (z, e) in zs.iter().zip(&expected) {
        assert!((z - e).abs() < 1e-4);
        assert!(eval_t_a(&tuple(&[1.0, -1.0]), 3, *z).unwrap().abs() < 1e-12);
    }
}

#[test]
fn w_plane_polynomial_is_palindromic_and_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..30 {
        let a = random_tuple(&mut rng, 4);
        let n = rng.gen_range(a.m().max(1)..=25);
        let r = salem_r(&char_poly(&a), 2 * n - a.m()).unwrap();
        let c = r.coeffs();
        assert!(c.iter().zip(c.iter().rev()).all(|(x, y)| x == y));
        let roots = complex_roots(&r).unwrap().roots;
        let pairing = pair_reciprocal(&roots, 1e-6);
        for (i, p) in pairing.iter().enumerate() {
            if let Some(j) = *p {
                assert!((roots[i] * roots[j] - 1.0).norm() <= 1e-6);
            }
        }
    }
}

#[test]
fn persistent_zero_for_reciprocal_pair() {
    let a = tuple(&[1.0, -3.0, 1.0]);
    assert!((persistent_zeros(&a).unwrap()[0] - 1.5).norm() < 1e-14);
    for n in 10..=40 {
        let d = all_zeros_t(&a, n)
            .unwrap()
            .distance_to(Complex64::new(1.5, 0.0));
        assert!(d <= 1e-7, "n={n} d={d}");
    }
    for n in 2..=40 {
        let z = all_zeros_t(&tuple(&[2.0, -5.0, 2.0]), n).unwrap();
        assert!(z.distance_to(Complex64::new(1.25, 0.0)) <= 1e-9);
    }
}

#[test]
fn non_reciprocal_outer_root_attracts_zeros() {
    // P = x^2 - x - 1: roots q and -1/q, q * (-1/q) = -1, so not a reciprocal pair
    let a = tuple(&[1.0, -1.0, -1.0]);
    assert!(persistent_zeros(&a).unwrap().is_empty());
    let q = (1.0 + 5f64.sqrt()) / 2.0;
    let target = 0.5 * (q + 1.0 / q);
    let report = limit_set_experiment(&a, &[8, 16, 32, 64], Kind::T).unwrap();
    assert_eq!(report.predicted.len(), 1);
    assert!((report.predicted[0].x.re - target).abs() < 1e-12);
    let d = report.distance_series(0);
    assert!(d[3] < d[0] / 10.0, "{d:?}");
    assert!(d.windows(2).all(|w| w[1] <= w[0]));
}

#[test]
fn complex_limit_points_are_labelled() {
    // P = x^2 + 4: roots ±2i
    let report = limit_set_experiment(&tuple(&[1.0, 0.0, 4.0]), &[10, 20, 40], Kind::T).unwrap();
    assert_eq!(report.predicted.len(), 2);
    assert!(report.predicted.iter().all(|p| !p.is_real));
    for i in 0..2 {
        let d = report.distance_series(i);
        assert!(d[2] < d[0] / 10.0, "{d:?}");
    }
}

#[test]
fn density_in_the_interval() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..20 {
        let a = random_tuple(&mut rng, 4);
        let g16 = max_gap(&real_zeros_theta(&a, 16).unwrap());
        let g64 = max_gap(&real_zeros_theta(&a, 64).unwrap());
        assert!(g64 < g16, "a={a:?} {g16} {g64}");
    }
    for a in [tuple(&[1.0]), tuple(&[1.0, -1.0, -1.0])] {
        let g32 = max_gap(&real_zeros_theta(&a, 32).unwrap());
        let g128 = max_gap(&real_zeros_theta(&a, 128).unwrap());
        assert!(g128 < g32 / 2.0);
    }
}

#[test]
fn gap_trend_in_report() {
    let report =
        limit_set_experiment(&tuple(&[1.0, 0.5, -0.3]), &[8, 16, 32, 64, 128], Kind::T).unwrap();
    let g = report.gap_series();
    assert!(g.last().unwrap() < g.first().unwrap());
    let rising = g.windows(2).filter(|w| w[1] > w[0]).count();
    assert!(rising <= 1);
}

#[test]
fn interlacing_on_random_tuples() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let a = random_tuple(&mut rng, 4);
        let n = rng.gen_range((a.m() + 1).max(2)..=30);
        let v = interlacing_check(&a, n).unwrap();
        assert!(v.holds, "a={a:?} n={n} {v:?}");
    }
}

#[test]
fn second_kind_zero_near_golden_image() {
    let q = (1.0 + 5f64.sqrt()) / 2.0;
    let z = all_zeros_u(&tuple(&[1.0, -1.0, -1.0]), 5).unwrap();
    let d = z.distance_to(Complex64::new(0.5 * (q + 1.0 / q), 0.0));
    assert!(d < 0.05, "{d}");
    let far = all_zeros_u(&tuple(&[1.0, -1.0, -1.0]), 20).unwrap();
    assert!(far.distance_to(Complex64::new(0.5 * (q + 1.0 / q), 0.0)) < d);
}

#[test]
fn zeros_of_t_vanish() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..20 {
        let a = random_tuple(&mut rng, 3);
        let n = rng.gen_range(a.m().max(1)..=20);
        for z in all_zeros_t(&a, n).unwrap().roots {
            let v = achebyshev::family::eval_t_a_complex(&a, n, z).unwrap();
            let scale: f64 = (0..=n)
                .map(|k| achebyshev::kernel::cheb_t_complex(k, z).norm())
                .fold(1.0, f64::max)
                * a.coeffs().iter().map(|v| v.abs()).sum::<f64>();
            assert!(v.norm() <= 1e-8 * scale, "a={a:?} n={n} z={z} v={v}");
        }
    }
}
