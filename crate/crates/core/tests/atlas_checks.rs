use lagcore::atlas::*;
use lagcore::geomcore::*;
use proptest::prelude::*;
use std::f64::consts::{FRAC_1_SQRT_2, TAU};

fn cz(x: &[f64]) -> Vec<C64> {
    to_complex(x)
}

fn s2_pair(seed: u64, i: u64) -> (Vec<f64>, Vec<f64>) {
    let mut rng = stream_rng(seed, "s2-pair", i);
    loop {
        let v = sample_sphere(2, &mut rng);
        let w = sample_sphere(2, &mut rng);
        if norm(&sub(&v, &w)) > 1e-3 && norm(&add(&v, &w)) > 1e-3 {
            return (v, w);
        }
    }
}

#[test]
fn catalog_pullbacks_hold() {
    for e in symplecto_catalog() {
        let r = pullback_residual(&e, 1000, 7, true);
        assert!(r.passes(), "{}: {:e} > {:e}", e.id, r.max_residual, r.tolerance());
    }
}

#[test]
fn catalog_ids_are_stable() {
    let ids: Vec<_> = symplecto_catalog().iter().map(|e| e.id).collect();
    for id in ["phi1", "Phi2", "PsiP", "ThetaQ", "Thetap", "ThetaDelta", "PsiQ", "psi", "psiP", "h1", "Phi1bar"] {
        assert!(ids.contains(&id), "{id}");
    }
    assert!(symplecto_entry("nope").is_err());
}

#[test]
fn phi2_at_orthogonal_pair() {
    let x = phi2(&[1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
    let want = [0.0, 0.0, FRAC_1_SQRT_2, FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0];
    assert!(max_abs_diff(&x, &want) < 1e-15);
}

#[test]
fn round_trips() {
    for i in 0..1000 {
        let (v, w) = s2_pair(1, i);
        let x = [v, w].concat();
        assert!(max_abs_diff(&phi2_inv(&phi2(&x)), &x) < 1e-10);

        let mut rng = stream_rng(1, "round-trip", i);
        let z = sample_ball(2, 0.0, 1.4, &mut rng);
        assert!(max_abs_diff(&psi_disk_inv(&psi_disk(&z)), &z) < 1e-10);
        let z4 = sample_ball(4, 0.0, 1.4, &mut rng);
        assert!(max_abs_diff(&psi_proj_inv(&psi_proj(&z4)), &z4) < 1e-10);
        assert!(max_abs_diff(&unitary_q_inv(&unitary_q(&z4)), &z4) < 1e-12);
        let w = sample_ball(2, 0.0, 1.4, &mut rng);
        assert!(max_abs_diff(&h2_inv(&h2(&w)), &w) < 1e-10);

        let c = sample_cotangent(3, 0.01, 0.99, &mut rng).flat();
        let back = psi_p_inv(&psi_p_lift(&c));
        assert!(max_abs_diff(&back, &canonicalize_cotangent(&c)) < 1e-9);
        assert!(max_abs_diff(&psi_quadric_inv(&psi_quadric(&c)), &c) < 1e-10);

        let t = sample_cotangent(2, 0.05, 1.35, &mut rng);
        let tx = [t.q.clone(), t.p.clone()].concat();
        assert!(max_abs_diff(&theta_delta_inv(&theta_delta(&tx)), &tx) < 1e-10);

        let pq = sample_quadric(4, &mut rng);
        let y = from_complex(&pq);
        let lift = theta_q_inv(&y);
        assert!(proj_dist(&cz(&theta_q_lift(&lift)), &pq) < 1e-8);
        let pp = sample_proj(3, &mut rng);
        let y = from_complex(&pp);
        let lift = theta_p_inv(&y);
        assert!(proj_dist(&cz(&theta_p_lift(&lift)), &pp) < 1e-8);
    }
}

#[test]
fn psi_p_images_and_zero_section() {
    let q = [0.6, 0.0, 0.8];
    let z = psi_p_lift(&[0.0, 0.0, 0.0, q[0], q[1], q[2]]);
    let want: Vec<C64> = q.iter().map(|a| C64::new(0.0, SQRT2 * a)).collect();
    assert!(proj_dist(&cz(&z), &want) < 1e-12);
    for i in 0..200 {
        let mut rng = stream_rng(2, "psiP-image", i);
        let c = sample_cotangent(3, 0.0, 0.99, &mut rng);
        let z = cz(&psi_p_lift(&c.flat()));
        assert!((cnorm2(&z) - 2.0).abs() < 1e-10);
        let s = csum_sq(&z);
        assert!(s.im.abs() < 1e-10 && s.re < 0.0);
        let np = norm(&c.p);
        assert!((s.re + 2.0 * (1.0 - np * np).sqrt()).abs() < 1e-10);
    }
}

#[test]
fn helper_f_values() {
    assert_eq!(helper_f(0.0), 0.5);
    assert!((helper_f(0.5) - (4.0 - 2.0 * 3f64.sqrt())).abs() < 1e-15);
    assert!((helper_f(0.5) - 0.535898).abs() < 1e-6);
    let x: f64 = 0.9;
    let f = helper_f(x);
    assert!((x * x * f + 1.0 / f - 2.0).abs() < 1e-13);
    // matches the naive quotient where it is well conditioned
    for x in [0.1f64, 0.3, 0.7, 0.99] {
        let naive = (1.0 - (1.0 - x * x).sqrt()) / (x * x);
        assert!((helper_f(x) - naive).abs() < 1e-12);
    }
    assert!((helper_f(1e-5) - (0.5 + 1e-10 / 8.0)).abs() < 1e-15);
}

#[test]
fn geodesic_flow_examples() {
    let mut rng = stream_rng(3, "geo", 0);
    let c = sample_cotangent(4, 0.1, 0.9, &mut rng).flat();
    assert_eq!(geodesic_flow(0.0, &c), c);
    assert!(max_abs_diff(&geodesic_flow(TAU, &c), &c) < 1e-12);
    for i in 0..100 {
        let mut rng = stream_rng(3, "geo-iota", i);
        let x = sample_sphere(1, &mut rng);
        let y = sample_sphere(2, &mut rng);
        let th = sample_angle(&mut rng);
        let flowed = geodesic_flow(th, &iota(1.0, 0.0, &x, &y));
        assert!(max_abs_diff(&flowed, &iota(1.0, th, &x, &y)) < 1e-12);
    }
}

#[test]
fn moment_maps() {
    let mut rng = stream_rng(4, "mm", 0);
    let c = sample_cotangent(3, 0.3, 0.3, &mut rng).flat();
    assert!((so_norm(&mu_s(&c)) - 0.3).abs() < 1e-12);
    for i in 0..1000 {
        let mut rng = stream_rng(4, "mm", i);
        let c = sample_cotangent(3, 0.0, 0.99, &mut rng).flat();
        let a = mu_s(&c);
        assert!((&a + a.transpose()).abs().max() == 0.0);
        assert!((mu_q(&psi_quadric(&c)) - &a).abs().max() < 1e-10);
        let z = psi_p_lift(&c);
        assert!((phi_c(&z) - &a).abs().max() < 1e-10);
        let zp = from_complex(&sample_proj(3, &mut rng));
        assert!((so_norm(&phi_c(&zp)) - phi_c_norm_formula(&zp)).abs() < 1e-12);
    }
    let real = from_complex(&[C64::new(0.3, 0.0), C64::new(-1.0, 0.0), C64::new(0.5, 0.0)]);
    assert_eq!(phi_c(&real).abs().max(), 0.0);
}

#[test]
fn quaternion_map_is_a_double_cover() {
    for i in 0..200 {
        let mut rng = stream_rng(5, "cover", i);
        let xi = sample_ball(4, 0.1, 1.9, &mut rng);
        let neg: Vec<f64> = xi.iter().map(|a| -a).collect();
        assert_eq!(phi1(&xi), phi1(&neg));
        let other = sample_ball(4, 0.1, 1.9, &mut rng);
        assert!(max_abs_diff(&phi1(&xi), &phi1(&other)) > 1e-6);

        let (z1, z2) = (C64::new(xi[0], xi[1]), C64::new(xi[2], xi[3]));
        let x = phi1(&xi);
        let (p, q) = (&x[..3], &x[3..]);
        assert!((norm(p) - (z1.norm_sqr() + z2.norm_sqr()) / 4.0).abs() < 1e-12);
        assert!((cross(p, q)[0] - (z1.norm_sqr() - z2.norm_sqr()) / 4.0).abs() < 1e-12);
    }
}

#[test]
fn phi2_hamiltonians_and_cross_identity() {
    for i in 0..1000 {
        let (v, w) = s2_pair(6, i);
        let s = add(&v, &w);
        let d = sub(&v, &w);
        let c = cross(&v, &w);
        assert!((dot(&d, &d) * dot(&s, &s) - 4.0 * dot(&c, &c)).abs() < 1e-12);
        let x = phi2(&[v.clone(), w.clone()].concat());
        let (p, q) = (&x[..3], &x[3..]);
        assert!((norm(p) - norm(&s) / 2.0).abs() < 1e-12);
        assert!((cross(p, q)[0] - s[0] / 2.0).abs() < 1e-12);
    }
}

#[test]
fn disk_map_is_equivariant() {
    for i in 0..200 {
        let mut rng = stream_rng(7, "psi-eq", i);
        let z = sample_ball(2, 0.0, 1.4, &mut rng);
        let t = sample_angle(&mut rng);
        let (s, c) = t.sin_cos();
        let rz = [c * z[0] - s * z[1], s * z[0] + c * z[1]];
        assert!(max_abs_diff(&psi_disk(&rz), &rot_e1(t, &psi_disk(&z))) < 1e-12);
    }
}

#[test]
fn psi_p_is_orthogonally_equivariant() {
    for i in 0..200 {
        let mut rng = stream_rng(8, "psiP-eq", i);
        let g = sample_ortho(4, &mut rng);
        let c = sample_cotangent(3, 0.0, 0.99, &mut rng);
        let gx = [g.apply(&c.p), g.apply(&c.q)].concat();
        let z = cz(&psi_p_lift(&c.flat()));
        let re: Vec<f64> = z.iter().map(|a| a.re).collect();
        let im: Vec<f64> = z.iter().map(|a| a.im).collect();
        let (gr, gi) = (g.apply(&re), g.apply(&im));
        let gz: Vec<C64> = gr.iter().zip(&gi).map(|(a, b)| C64::new(*a, *b)).collect();
        assert!(proj_dist(&cz(&psi_p_lift(&gx)), &gz) < 1e-12);
    }
}

#[test]
fn psi_p_pulls_back_hamiltonians() {
    for i in 0..200 {
        let mut rng = stream_rng(9, "psiP-ham", i);
        let c = sample_cotangent(3, 0.0, 0.99, &mut rng);
        let z = normalize_rep(&cz(&psi_p_lift(&c.flat())));
        let h = 0.25 * (4.0 - csum_sq(&z).norm_sqr()).max(0.0).sqrt();
        assert!((h - norm(&c.p) / 2.0).abs() < 1e-12);
        for a in 0..4 {
            for b in a + 1..4 {
                let g = (z[a].conj() * z[b]).im;
                assert!((g - (c.p[a] * c.q[b] - c.p[b] * c.q[a])).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn theta_delta_closed_form() {
    for i in 0..200 {
        let mut rng = stream_rng(10, "theta-delta", i);
        let t = sample_cotangent(2, 0.05, 1.35, &mut rng);
        let (x, y) = (&t.q, &t.p);
        let ny = norm(y);
        let got = phi2(&theta_delta(&[x.clone(), y.clone()].concat()));
        let xy = cross(x, y);
        let want: Vec<f64> = xy.iter().map(|a| (ny * ny / 2.0 - 1.0) * a / ny).chain(y.iter().map(|a| a / ny)).collect();
        assert!(max_abs_diff(&got, &want) < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn phi2_lands_in_unit_codisk(seed in any::<u64>()) {
        let (v, w) = s2_pair(seed, 0);
        let x = phi2(&[v, w].concat());
        prop_assert!((norm(&x[3..]) - 1.0).abs() < 1e-12);
        prop_assert!(dot(&x[..3], &x[3..]).abs() < 1e-12);
        prop_assert!(norm(&x[..3]) <= 1.0 + 1e-12);
    }

    #[test]
    fn helper_identity(x in 0.0f64..0.999) {
        let f = helper_f(x);
        prop_assert!((x * x * f + 1.0 / f - 2.0).abs() < 1e-12);
    }
}
