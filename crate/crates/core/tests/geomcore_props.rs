use lagcore::geomcore::*;
use proptest::prelude::*;

fn unit_quat(seed: u64) -> Quat {
    let mut rng = stream_rng(seed, "quat", 0);
    Quat::from_slice(&sample_sphere(3, &mut rng))
}

#[test]
fn sandwich_identity_and_pair_formula() {
    assert_eq!(quat_sandwich(&Quat::new(1.0, 0.0, 0.0, 0.0), &Quat::I).unwrap(), [1.0, 0.0, 0.0]);
    // i* j i = -i j i = -k i = -j
    assert_eq!(quat_sandwich(&Quat::I, &Quat::J).unwrap(), [0.0, -1.0, 0.0]);
    let (z1, z2) = (C64::new(0.3, -0.4), C64::new(0.5, 0.7));
    let got = quat_sandwich(&Quat::from_pair(z1, z2), &Quat::I).unwrap();
    // Hamilton product: conj(xi) i xi = (|z1|^2 - |z2|^2) i + i w j, w = 2 conj(z1) z2
    let w = 2.0 * z1.conj() * z2;
    let want = [z1.norm_sqr() - z2.norm_sqr(), -w.im, w.re];
    for i in 0..3 {
        assert!((got[i] - want[i]).abs() < 1e-14, "{got:?} {want:?}");
    }
    assert!((got[1].hypot(got[2]) - w.norm()).abs() < 1e-14);
}

#[test]
fn proj_dist_examples() {
    let a = vec![C64::new(SQRT2, 0.0), C64::new(0.0, 0.0)];
    let b = vec![C64::new(0.0, 0.0), C64::new(SQRT2, 0.0)];
    assert_eq!(proj_dist(&a, &a), 0.0);
    assert!((proj_dist(&a, &b) - SQRT2).abs() < 1e-15);
}

#[test]
fn canonicalize_examples() {
    let e = vec![C64::new(SQRT2, 0.0), C64::new(0.0, 0.0)];
    assert_eq!(canonicalize_proj(&e), e);
    let ie: Vec<C64> = e.iter().map(|c| c * C64::i()).collect();
    let c = canonicalize_proj(&ie);
    assert!((c[0] - e[0]).norm() < 1e-15 && c[1].norm() < 1e-15);
}

#[test]
fn sphere_sampler_mean_band() {
    let mut rng = stream_rng(42, "uniform-sphere", 0);
    let mean: f64 = (0..10_000).map(|_| sample_sphere(2, &mut rng)[0].abs()).sum::<f64>() / 1e4;
    assert!((mean - 0.5).abs() < 0.02, "mean {mean}");
}

#[test]
fn streams_are_reproducible() {
    let a: Vec<f64> = (0..5).flat_map(|i| sample_sphere(3, &mut stream_rng(42, "x", i))).collect();
    let b: Vec<f64> = (0..5).flat_map(|i| sample_sphere(3, &mut stream_rng(42, "x", i))).collect();
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sandwich_is_orthogonal(seed in any::<u64>()) {
        let xi = unit_quat(seed);
        let imgs: Vec<[f64; 3]> = [Quat::I, Quat::J, Quat::K].iter().map(|a| quat_sandwich(&xi, a).unwrap()).collect();
        for a in 0..3 {
            for b in 0..3 {
                let d = dot(&imgs[a], &imgs[b]);
                let delta = if a == b { 1.0 } else { 0.0 };
                prop_assert!((d - delta).abs() < 1e-12);
            }
        }
        let c = cross(&imgs[0], &imgs[1]);
        prop_assert!(max_abs_diff(&c, &imgs[2]) < 1e-12);
    }

    #[test]
    fn sandwich_kernel_is_plus_minus_one(seed in any::<u64>()) {
        let xi = unit_quat(seed);
        let neg = Quat::new(-xi.w, -xi.x, -xi.y, -xi.z);
        for a in [Quat::I, Quat::J, Quat::K] {
            prop_assert_eq!(quat_sandwich(&xi, &a).unwrap(), quat_sandwich(&neg, &a).unwrap());
        }
    }

    #[test]
    fn proj_dist_is_a_metric(seed in any::<u64>(), theta in 0.0..std::f64::consts::TAU) {
        let mut rng = stream_rng(seed, "metric", 0);
        let (a, b, c) = (sample_proj(3, &mut rng), sample_proj(3, &mut rng), sample_proj(3, &mut rng));
        prop_assert!((proj_dist(&a, &b) - proj_dist(&b, &a)).abs() < 1e-14);
        prop_assert!(proj_dist(&a, &c) <= proj_dist(&a, &b) + proj_dist(&b, &c) + 1e-12);
        let ph: Vec<C64> = a.iter().map(|z| z * C64::from_polar(1.0, theta)).collect();
        prop_assert!(proj_dist(&a, &ph) < 1e-14);
    }

    #[test]
    fn canonicalize_is_idempotent(seed in any::<u64>()) {
        let mut rng = stream_rng(seed, "canon", 0);
        let a = sample_proj(3, &mut rng);
        let c = canonicalize_proj(&a);
        let cc = canonicalize_proj(&c);
        prop_assert!(c.iter().zip(&cc).all(|(x, y)| (x - y).norm() < 1e-15));
        prop_assert!(proj_dist(&a, &c) < 1e-7);
    }

    #[test]
    fn samplers_satisfy_constraints(seed in any::<u64>()) {
        let mut rng = stream_rng(seed, "samplers", 0);
        let c = sample_cotangent(4, 0.0, 0.9, &mut rng);
        prop_assert!((norm(&c.q) - 1.0).abs() < 1e-14);
        prop_assert!(dot(&c.p, &c.q).abs() < 1e-14);
        let o = sample_ortho(4, &mut rng);
        let e = &o.0.transpose() * &o.0 - nalgebra::DMatrix::<f64>::identity(4, 4);
        prop_assert!(e.abs().max() < 1e-14);
        let z = sample_quadric(3, &mut rng);
        prop_assert!(csum_sq(&z).norm() < 1e-14);
        prop_assert!((cnorm2(&z) - 2.0).abs() < 1e-14);
    }
}
