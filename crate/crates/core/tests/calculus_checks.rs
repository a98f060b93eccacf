use lagcore::atlas::*;
use lagcore::calculus::*;
use lagcore::geomcore::*;
use nalgebra::DMatrix;
use proptest::prelude::*;
use std::f64::consts::{PI, TAU};

#[test]
fn identity_and_linear_jacobians() {
    let id = SmoothMap::new("id", chart_flat(3), chart_flat(3), |x| x.to_vec());
    let j = id.jacobian(&[0.3, -1.0, 2.0]).unwrap();
    assert!((j - DMatrix::<f64>::identity(3, 3)).abs().max() < 1e-9);
    let m = DMatrix::from_row_slice(2, 3, &[1.0, 2.0, -1.0, 0.5, 0.0, 3.0]);
    let mc = m.clone();
    let lin = SmoothMap::new("M", chart_flat(3), chart_flat(2), move |x| {
        (&mc * nalgebra::DVector::from_column_slice(x)).as_slice().to_vec()
    });
    assert!((lin.jacobian(&[0.1, 0.2, 0.3]).unwrap() - m).abs().max() < 1e-9);
}

#[test]
fn analytic_jacobians_match_finite_differences() {
    for e in symplecto_catalog().into_iter().filter(|e| e.map.has_analytic_jacobian()) {
        for i in 0..100 {
            let mut rng = stream_rng(11, e.id, i);
            let x = (e.sampler)(&mut rng);
            let a = e.map.jacobian(&x).unwrap();
            let f = e.map.fd_jacobian(&x);
            let rel = (&a - &f).abs().max() / a.abs().max().max(1.0);
            assert!(rel < 1e-6, "{} relative Jacobian gap {rel:e}", e.id);
        }
    }
    // at xi = 1 the quaternionic map has an explicit derivative
    let m = symplecto_entry("phi1").unwrap().map;
    let x = [1.0, 0.0, 0.0, 0.0];
    assert!((m.jacobian(&x).unwrap() - m.fd_jacobian(&x)).abs().max() < 1e-8);
}

#[test]
fn off_domain_base_is_rejected() {
    let m = symplecto_entry("Phi2").unwrap().map;
    assert!(m.jacobian(&[2.0, 0.0, 0.0, 0.0, 1.0, 0.0]).is_err());
}

#[test]
fn quaternion_map_pulls_back_liouville_form() {
    let m = symplecto_entry("phi1").unwrap().map;
    let lam = lambda_form();
    let want = half_liouville();
    for i in 0..200 {
        let mut rng = stream_rng(5, "phi1-lambda", i);
        let x = sample_ball(4, 0.05, 1.95, &mut rng);
        let v = gaussian_vec(4, &mut rng);
        let got = pullback_one_form(&m, &lam, &x, &v);
        assert!((got - want.eval(&x, &v)).abs() < 1e-8);
    }
    assert_eq!(pullback_one_form(&m, &lam, &[1.0, 0.0, 0.0, 0.0], &[0.0; 4]), 0.0);
}

#[test]
fn psi_p_lift_pulls_back_alpha_to_lambda() {
    let n = 3;
    let m = SmoothMap::new("PsiP-lift", chart_cotangent(n), chart_flat(2 * n + 2), psi_p_lift);
    for i in 0..200 {
        let mut rng = stream_rng(5, "psiP-alpha", i);
        let c = sample_cotangent(n, 0.01, 0.99, &mut rng);
        let x = c.flat();
        let basis = chart_cotangent(n).tangent_basis(&x);
        let v = combine(&basis, &gaussian_vec(basis.len(), &mut rng));
        let got = pullback_one_form(&m, &alpha_form(), &x, &v);
        assert!((got - lambda_form().eval(&x, &v)).abs() < 1e-8);
    }
}

#[test]
fn chain_rule_for_pullbacks() {
    let f = symplecto_entry("phi1").unwrap().map;
    let g = SmoothMap::new("Phi2^-1", chart_cotangent(2), chart_sphere_pair(), phi2_inv);
    let fg = f.then(&g);
    let form = omega_sphere_pair(0.5);
    for i in 0..200 {
        let mut rng = stream_rng(5, "chain", i);
        let x = sample_ball(4, 0.1, 1.9, &mut rng);
        let (v, w) = (gaussian_vec(4, &mut rng), gaussian_vec(4, &mut rng));
        let direct = pullback_two_form(&fg, &form, &x, &v, &w);
        let y = f.eval(&x);
        let iterated = form.eval(&g.eval(&y), &g.push(&y, &f.push(&x, &v)), &g.push(&y, &f.push(&x, &w)));
        assert!((direct - iterated).abs() < 1e-6, "{direct} {iterated}");
    }
}

#[test]
fn lie_brackets_of_the_four_fields() {
    let proj = |x: &[f64], v: Vec<f64>| -> Vec<f64> {
        let (a, b) = (&x[..3], &x[3..]);
        let mut out = v;
        let ca = dot(&out[..3], a);
        let cb = dot(&out[3..], b);
        for i in 0..3 {
            out[i] -= ca * a[i];
            out[3 + i] -= cb * b[i];
        }
        out
    };
    let x = |k: usize| move |p: &[f64]| x_field(k, p);
    for i in 0..100 {
        let mut rng = stream_rng(3, "brackets", i);
        let (v, w) = (sample_sphere(2, &mut rng), sample_sphere(2, &mut rng));
        let p = [v.clone(), w.clone()].concat();
        if norm(&sub(&v, &w)) < 0.05 || norm(&add(&v, &w)) < 0.05 {
            continue;
        }
        let b13 = proj(&p, lie_bracket(&x(1), &x(3), &p));
        let x4 = x_field(4, &p);
        assert!(max_abs_diff(&b13, &scale(-2.0, &x4)) < 1e-5);
        let b24 = proj(&p, lie_bracket(&x(2), &x(4), &p));
        assert!(max_abs_diff(&b24, &scale(2.0 * dot(&v, &w), &x4)) < 1e-5);
        let b12 = proj(&p, lie_bracket(&x(1), &x(2), &p));
        let d2 = dot(&sub(&v, &w), &sub(&v, &w));
        assert!(max_abs_diff(&b12, &scale(0.5 * d2, &x_field(1, &p))) < 1e-5);
        let b34 = proj(&p, lie_bracket(&x(3), &x(4), &p));
        assert!(max_abs_diff(&b34, &scale(-0.5 * d2, &x_field(1, &p))) < 1e-5);
        let s2 = dot(&add(&v, &w), &add(&v, &w));
        let b14 = proj(&p, lie_bracket(&x(1), &x(4), &p));
        let b23 = proj(&p, lie_bracket(&x(2), &x(3), &p));
        assert!(max_abs_diff(&b14, &scale(0.5 * s2, &x_field(3, &p))) < 1e-5);
        assert!(max_abs_diff(&b23, &b14) < 1e-5);
        let b11 = lie_bracket(&x(1), &x(1), &p);
        assert!(max_abs(&b11) < 1e-8);
    }
}

#[test]
fn disk_integral_examples() {
    let cap = disk_integral(&cap_disk, &omega_sphere(0.5), 64);
    assert!((cap.value.abs() - PI / 2.0).abs() < 1e-6, "{cap:?}");
    let r = 0.7;
    let round = disk_integral(&move |z: &[f64]| vec![r * z[0], r * z[1]], &omega_std(), 64);
    assert!((round.value - PI * r * r).abs() < 1e-10);
}

#[test]
fn quadrature_converges_on_smooth_integrands() {
    let limit = disk_integral(&cap_disk, &omega_sphere(0.5), 64).value;
    let e4 = (disk_integral(&cap_disk, &omega_sphere(0.5), 4).value - limit).abs();
    let e8 = (disk_integral(&cap_disk, &omega_sphere(0.5), 8).value - limit).abs();
    assert!(e8 * 3.0 <= e4, "{e4:e} {e8:e}");
}

#[test]
fn planar_area_examples() {
    let circle = |a: f64| move |t: f64| [a * t.cos(), a * t.sin()];
    let q = planar_area(&circle(0.5), &omega_prime_primitive);
    assert!((q.value - TAU * (1.0 - 3f64.sqrt() / 2.0)).abs() < 1e-8);
    assert!((q.value - 0.841787).abs() < 1e-6);
    let q = planar_area(&circle(5f64.sqrt() / 3.0), &omega_prime_primitive);
    assert!((q.value - TAU / 3.0).abs() < 1e-8);
    let q = planar_area(&circle(1.0), &std_primitive);
    assert!((q.value - PI).abs() < 1e-12);
}

#[test]
fn omega_prime_primitive_matches_disk_integral() {
    for i in 0..10 {
        let mut rng = stream_rng(9, "primitive", i);
        let c = sample_ball(2, 0.0, 0.3, &mut rng);
        let g = gaussian_vec(3, &mut rng);
        let (a, b, th) = (0.2 + 0.3 * g[0].abs().min(1.0), 0.1 + 0.3 * g[1].abs().min(1.0), g[2]);
        let (s, co) = th.sin_cos();
        let ell = move |z: &[f64]| {
            let (x, y) = (a * z[0], b * z[1]);
            vec![c[0] + co * x - s * y, c[1] + s * x + co * y]
        };
        let e2 = ell.clone();
        let curve = move |t: f64| {
            let p = e2(&[t.cos(), t.sin()]);
            [p[0], p[1]]
        };
        let green = planar_area(&curve, &omega_prime_primitive).value;
        let direct = disk_integral(&ell, &omega_prime_disk(), 64).value;
        assert!((green - direct).abs() < 1e-8, "{green} {direct}");
    }
}

#[test]
fn figure_eight_is_not_simple() {
    let pts: Vec<[f64; 2]> = (0..200).map(|j| {
        let t = TAU * j as f64 / 200.0;
        [t.sin(), (2.0 * t).sin()]
    }).collect();
    assert!(!polygon_is_simple(&pts));
    let circle: Vec<[f64; 2]> = (0..200).map(|j| {
        let t = TAU * j as f64 / 200.0;
        [t.cos(), t.sin()]
    }).collect();
    assert!(polygon_is_simple(&circle));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pullbacks_are_antisymmetric(seed in any::<u64>(), which in 0usize..11) {
        let e = &symplecto_catalog()[which];
        let mut rng = stream_rng(seed, "antisym", 0);
        let x = (e.sampler)(&mut rng);
        let basis = e.map.domain.tangent_basis(&x);
        let v = combine(&basis, &gaussian_vec(basis.len(), &mut rng));
        let w = combine(&basis, &gaussian_vec(basis.len(), &mut rng));
        let a = pullback_two_form(&e.map, &e.target_form, &x, &v, &w);
        let b = pullback_two_form(&e.map, &e.target_form, &x, &w, &v);
        prop_assert!((a + b).abs() < 1e-12 * (1.0 + a.abs()));
        prop_assert!(pullback_two_form(&e.map, &e.target_form, &x, &v, &v).abs() < 1e-12);
    }
}
