use lagcore::floerdata::*;
use lagcore::geomcore::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn spelled_out(s: SignVector, p: &[C64; 3]) -> C64 {
    let e = |j| s.eps(j);
    let [x, y, z] = *p;
    (e(1) * x + e(2) * x / y + e(3) * y / x + e(4) / x) / z + e(5) * z
}

#[test]
fn maslov_and_area_of_classes() {
    let l = Lattice::Cp3;
    assert_eq!(maslov_of_class(&l.line()), BigInt::from(8));
    let b = RelClass::basis_class(l, "B").unwrap();
    let c1 = RelClass::basis_class(l, "C1").unwrap();
    let c2 = RelClass::basis_class(l, "C2").unwrap();
    assert_eq!(maslov_of_class(&b), BigInt::from(4));
    assert_eq!(maslov_of_class(&b.scale(2).sub(&c1).sub(&c2)), BigInt::from(8));
    assert_eq!(maslov_of_class(&RelClass::zero(l)), BigInt::from(0));
    for m in 2..=5usize {
        let lm = Lattice::CpM(m);
        assert_eq!(maslov_of_class(&lm.line()), BigInt::from(2 * (m as i64 + 2)));
        assert_eq!(maslov_of_class(&RelClass::basis_class(lm, "D").unwrap()), BigInt::from(2));
    }
    let lam = BigRational::new(1.into(), 3.into());
    assert_eq!(area_of_class(&l.line(), &lam), BigRational::new(4.into(), 3.into()));
}

#[test]
fn divisor_table_rows() {
    let t = Lattice::Cp3.divisors();
    assert_eq!(t.row("l").unwrap(), &[2, 1, 1, 1, 1]);
    assert_eq!(t.row("C1").unwrap(), &[0, 1, -1, 0, 0]);
    assert_eq!(t.row("C2").unwrap(), &[0, 0, 0, 1, -1]);
    assert_eq!(t.row("D").unwrap(), &[1, 0, 0, 0, 0]);
    assert_eq!(t.row("B").unwrap(), &[1, 1, 0, 1, 0]);
    // the line row follows from l = 2B - C1 - C2
    let via_basis = t.pairings(&Lattice::Cp3.line()).unwrap();
    let direct: Vec<BigInt> = t.row("l").unwrap().iter().map(|v| BigInt::from(*v)).collect();
    assert_eq!(via_basis, direct);
}

#[test]
fn enumeration_matches_the_five_classes() {
    let got: Vec<String> = enumerate_maslov2_positive(Lattice::Cp3).unwrap().iter().map(|c| c.to_string()).collect();
    let mut want: Vec<String> = cp3_sign_order().iter().map(|c| c.to_string()).collect();
    let mut got_sorted = got.clone();
    got_sorted.sort();
    want.sort();
    assert_eq!(got_sorted, want);
    let t = Lattice::Cp3.divisors();
    for c in enumerate_maslov2_positive(Lattice::Cp3).unwrap() {
        let k = c.small();
        assert_eq!(2 * k[0] + k[3], 1, "{c}");
        assert!(t.pairings(&c).unwrap().iter().all(|v| *v >= BigInt::from(0)));
        assert_eq!(maslov_of_class(&c), BigInt::from(2));
    }
    for m in [2, 3, 4, 6] {
        let got: Vec<String> = enumerate_maslov2_positive(Lattice::CpM(m)).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(got, vec!["D".to_string()], "m = {m}");
    }
}

#[test]
fn n_parity_examples() {
    let t = Lattice::Cp3.divisors();
    assert_eq!(n_parity_check(&t).unwrap(), 1);
    let col = t.column("H0+").unwrap();
    let mut h = t.clone();
    h.rows.iter_mut().find(|(n, _)| n == "C1").unwrap().1[col] = 0;
    assert_eq!(n_parity_check(&h).unwrap(), 2);
    let mut half = t.clone();
    half.rows.iter_mut().find(|(n, _)| n == "l").unwrap().1[col] = 2;
    assert!(n_parity_check(&half).is_err());
}

#[test]
fn superpotential_examples() {
    let one = C64::new(1.0, 0.0);
    let p = [one, one, C64::new(2.0, 0.0)];
    let s = SignVector::all_plus();
    assert!((superpotential_eval(s, &p).unwrap() - C64::new(4.0, 0.0)).norm() < 1e-15);
    assert!(superpotential_grad(s, &p).unwrap().iter().all(|g| g.norm() < 1e-15));
    assert!(superpotential_eval(s, &[C64::new(0.0, 0.0), one, one]).is_err());
}

#[test]
fn superpotential_matches_the_spelled_out_polynomial() {
    for s in SignVector::all() {
        for i in 0..20 {
            let mut rng = stream_rng(1, &format!("W:{s}"), i);
            let g = gaussian_vec(6, &mut rng);
            let p = [C64::new(g[0], g[1]), C64::new(g[2], g[3]), C64::new(g[4], g[5])];
            let a = superpotential_eval(s, &p).unwrap();
            assert!((a - spelled_out(s, &p)).norm() < 1e-10 * (1.0 + a.norm()));
            let flipped = SignVector::new([-s.0[0], -s.0[1], -s.0[2], -s.0[3], s.0[4]]).unwrap();
            let neg_x = [-p[0], p[1], p[2]];
            assert!((superpotential_eval(s, &neg_x).unwrap() - superpotential_eval(flipped, &p).unwrap()).norm() < 1e-10 * (1.0 + a.norm()));
        }
    }
}

#[test]
fn critical_points_for_every_sign_vector() {
    let s = SignVector::all_plus();
    let pts = critical_points(s);
    let has = |z: f64| pts.iter().any(|c| (c.x[0] - 1.0).abs() < 1e-12 && (c.y[0] - 1.0).abs() < 1e-12 && (c.z[0] - z).abs() < 1e-12);
    assert!(has(2.0) && has(-2.0));
    // real critical points have real values; the value set is closed under conjugation
    for c in &pts {
        if [c.x[1], c.y[1], c.z[1]].iter().all(|v| v.abs() < 1e-12) {
            assert!(c.value[1].abs() < 1e-12, "{c:?}");
        }
        assert!(pts.iter().any(|d| (d.value[0] - c.value[0]).abs() < 1e-12 && (d.value[1] + c.value[1]).abs() < 1e-12));
    }
    for s in SignVector::all() {
        let pts = critical_points(s);
        assert!(!pts.is_empty(), "{s}");
        for c in &pts {
            assert!(c.polished && c.grad_norm <= 1e-12, "{s}: {c:?}");
            let y = C64::new(c.y[0], c.y[1]);
            assert!((y + s.eps(1) * s.eps(2)).norm() > 1e-6);
        }
        assert_eq!(grid_critical_count(s, 256), pts.len(), "{s}");
    }
}

#[test]
fn cp_m_superpotential_has_no_critical_points() {
    for m in 2..=4 {
        for sign in [1, -1] {
            let w = superpotential_cpm(m, sign).unwrap();
            assert!(certify_no_critical_points(&w).certified);
            let g = w.log_gradient(&[C64::new(0.3, 0.4), C64::new(-2.0, 1.0)]).unwrap();
            assert!(g.iter().map(|v| v.norm()).sum::<f64>() > 0.0);
        }
    }
}

#[test]
fn sign_vectors_parse_and_print() {
    let s: SignVector = "+,-,+,+,-".parse().unwrap();
    assert_eq!(s.to_string(), "+,-,+,+,-");
    assert!("+,-,+".parse::<SignVector>().is_err());
    assert!("+,-,+,0,-".parse::<SignVector>().is_err());
    assert_eq!(SignVector::all().len(), 32);
}

proptest! {
    #[test]
    fn class_arithmetic_is_linear(a in prop::array::uniform4(-5i64..5), b in prop::array::uniform4(-5i64..5), k in -4i64..4) {
        let l = Lattice::Cp3;
        let (x, y) = (RelClass::new(l, &a), RelClass::new(l, &b));
        prop_assert_eq!(maslov_of_class(&x.add(&y)), maslov_of_class(&x) + maslov_of_class(&y));
        prop_assert_eq!(maslov_of_class(&x.scale(k)), maslov_of_class(&x) * BigInt::from(k));
        prop_assert_eq!(x.add(&y).sub(&y), x);
    }
}
