//! Explicit maps, their inverses, moment maps and circle actions.
//!
//! Conventions: a point of `T^*S^n` is `(p, q)` flattened to `2n+2` reals, a
//! point of `S^2 x S^2` is `(v, w)` in R^6, a point of the disk bundle of `TS^2`
//! is `(x, y)` in R^6, and complex vectors are interleaved.

use crate::calculus::{
    bundle_lift_form, combine, pullback_two_form, d_eta, d_lambda, fs_form, omega_sphere, omega_sphere_pair, omega_std, Chart, SmoothMap, TwoForm,
};
use crate::error::{GeomError, Result};
use crate::par::par_max;
use crate::tolerances::{PULLBACK_ANALYTIC, PULLBACK_FD};
use crate::geomcore::{
    axpy, canonicalize_cotangent, cnorm2, cross, csum_sq, dot, from_complex, gaussian_vec, norm, normalize, rot_e1,
    sample_ball, sample_cotangent, sample_sphere, scale, stream_rng, sub, to_complex, Quat, C64, SQRT2,
};
use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_1_SQRT_2, TAU};

pub fn chart_flat(dim: usize) -> Chart {
    Chart::flat(&format!("R^{dim}"), dim)
}

pub fn chart_sphere_pair() -> Chart {
    Chart::cut_out("S2xS2", 6, |x| vec![dot(&x[..3], &x[..3]) - 1.0, dot(&x[3..], &x[3..]) - 1.0])
}

/// `T^*S^n` inside R^{2n+2}.
pub fn chart_cotangent(n: usize) -> Chart {
    Chart::cut_out(&format!("T*S^{n}"), 2 * n + 2, move |x| {
        let (p, q) = x.split_at(n + 1);
        vec![dot(q, q) - 1.0, dot(p, q)]
    })
}

/// `TS^2` as pairs `(x, y)` with `|x| = 1`, `x . y = 0`.
pub fn chart_tangent_s2() -> Chart {
    Chart::cut_out("TS^2", 6, |x| vec![dot(&x[..3], &x[..3]) - 1.0, dot(&x[..3], &x[3..])])
}

/// Representatives of `CP^n(sqrt 2)`: the sphere of radius `sqrt 2` in C^{n+1}.
pub fn chart_proj(n: usize) -> Chart {
    Chart::cut_out(&format!("CP^{n}"), 2 * n + 2, |x| vec![dot(x, x) - 2.0])
}

/// Representatives of the quadric in `CP^n(sqrt 2)`.
pub fn chart_quadric(n: usize) -> Chart {
    Chart::cut_out(&format!("Q_{}", n - 1), 2 * n + 2, |x| {
        let s = csum_sq(&to_complex(x));
        vec![dot(x, x) - 2.0, s.re, s.im]
    })
}

/// The lift `P_Q x D`: pairs of orthonormal `u, v` in R^N stored as
/// `w = u + i v` interleaved, followed by `zeta` in R^2.
pub fn chart_pq_lift(ncomplex: usize) -> Chart {
    Chart::cut_out(&format!("P_Q(C^{ncomplex})xD"), 2 * ncomplex + 2, move |x| {
        let (u, v) = split_uv(&x[..2 * ncomplex]);
        vec![dot(&u, &u) - 1.0, dot(&v, &v) - 1.0, dot(&u, &v)]
    })
}

pub fn split_uv(w: &[f64]) -> (Vec<f64>, Vec<f64>) {
    (w.iter().step_by(2).copied().collect(), w.iter().skip(1).step_by(2).copied().collect())
}

pub fn join_uv(u: &[f64], v: &[f64]) -> Vec<f64> {
    u.iter().zip(v).flat_map(|(a, b)| [*a, *b]).collect()
}

fn quat_im_sandwich(xi: &Quat, a: &Quat) -> [f64; 3] {
    xi.conj().mul(a).mul(xi).imag()
}

/// `phi_1(xi) = (-Im(xi* k xi)/4, Im(xi* j xi)/|xi|^2)` from `C^2 \ 0` to `T^*S^2`.
pub fn phi1(xi: &[f64]) -> Vec<f64> {
    let q = Quat::from_slice(xi);
    let n2 = q.norm_sqr();
    let a = quat_im_sandwich(&q, &Quat::K);
    let b = quat_im_sandwich(&q, &Quat::J);
    vec![-a[0] / 4.0, -a[1] / 4.0, -a[2] / 4.0, b[0] / n2, b[1] / n2, b[2] / n2]
}

/// Analytic Jacobian of `phi1`.
pub fn phi1_jacobian(xi: &[f64]) -> DMatrix<f64> {
    let q = Quat::from_slice(xi);
    let n2 = q.norm_sqr();
    let b = quat_im_sandwich(&q, &Quat::J);
    let mut jac = DMatrix::zeros(6, 4);
    for i in 0..4 {
        let mut e = [0.0; 4];
        e[i] = 1.0;
        let d = Quat::from_slice(&e);
        let dk = add3(d.conj().mul(&Quat::K).mul(&q).imag(), q.conj().mul(&Quat::K).mul(&d).imag());
        let dj = add3(d.conj().mul(&Quat::J).mul(&q).imag(), q.conj().mul(&Quat::J).mul(&d).imag());
        let dn = 2.0 * xi[i];
        for r in 0..3 {
            jac[(r, i)] = -dk[r] / 4.0;
            jac[(3 + r, i)] = dj[r] / n2 - b[r] * dn / (n2 * n2);
        }
    }
    jac
}

fn add3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// `phi1` followed by the canonical lift in `T^*RP^2`.
pub fn phi1_bar(xi: &[f64]) -> Vec<f64> {
    canonicalize_cotangent(&phi1(xi))
}

/// `Phi_2(v, w) = ((v x w)/|v - w|, (v - w)/|v - w|)`.
pub fn phi2(x: &[f64]) -> Vec<f64> {
    let (v, w) = (&x[..3], &x[3..]);
    let d = sub(v, w);
    let nd = norm(&d);
    let c = cross(v, w);
    vec![c[0] / nd, c[1] / nd, c[2] / nd, d[0] / nd, d[1] / nd, d[2] / nd]
}

pub fn phi2_jacobian(x: &[f64]) -> DMatrix<f64> {
    let (v, w) = (&x[..3], &x[3..]);
    let d = sub(v, w);
    let nd = norm(&d);
    let c = cross(v, w);
    let mut j = DMatrix::zeros(6, 6);
    for k in 0..6 {
        let mut e = [0.0; 6];
        e[k] = 1.0;
        let (a, b) = (&e[..3], &e[3..]);
        let dd = sub(a, b);
        let (c1, c2) = (cross(a, w), cross(v, b));
        let dn = dot(&d, &dd) / nd;
        for i in 0..3 {
            j[(i, k)] = (c1[i] + c2[i]) / nd - c[i] * dn / (nd * nd);
            j[(3 + i, k)] = dd[i] / nd - d[i] * dn / (nd * nd);
        }
    }
    j
}

pub fn phi2_inv(x: &[f64]) -> Vec<f64> {
    let (p, q) = (&x[..3], &x[3..]);
    let s = (1.0 - dot(p, p)).max(0.0).sqrt();
    let qp = cross(q, p);
    let v: Vec<f64> = (0..3).map(|i| s * q[i] - qp[i]).collect();
    let w: Vec<f64> = (0..3).map(|i| -s * q[i] - qp[i]).collect();
    [v, w].concat()
}

/// `psi(z) = (1 - |z|^2, x sqrt(2 - |z|^2), y sqrt(2 - |z|^2))` from `B^2(sqrt 2)` to `S^2`.
pub fn psi_disk(z: &[f64]) -> Vec<f64> {
    let r2 = z[0] * z[0] + z[1] * z[1];
    let s = (2.0 - r2).sqrt();
    vec![1.0 - r2, z[0] * s, z[1] * s]
}

pub fn psi_disk_jacobian(z: &[f64]) -> DMatrix<f64> {
    let r2 = z[0] * z[0] + z[1] * z[1];
    let s = (2.0 - r2).sqrt();
    DMatrix::from_row_slice(
        3,
        2,
        &[
            -2.0 * z[0],
            -2.0 * z[1],
            s - z[0] * z[0] / s,
            -z[0] * z[1] / s,
            -z[0] * z[1] / s,
            s - z[1] * z[1] / s,
        ],
    )
}

pub fn psi_disk_inv(x: &[f64]) -> Vec<f64> {
    let r2 = 1.0 - x[0];
    let s = (2.0 - r2).sqrt();
    vec![x[1] / s, x[2] / s]
}

/// `(1 - sqrt(1 - x^2)) / x^2`, evaluated in the cancellation-free form
/// `1 / (1 + sqrt(1 - x^2))`.
pub fn helper_f(x: f64) -> f64 {
    1.0 / (1.0 + (1.0 - x * x).sqrt())
}

/// Lift of `Psi^P`: `(p, q) -> sqrt(f(|p|)) p + i q / sqrt(f(|p|))`.
pub fn psi_p_lift(x: &[f64]) -> Vec<f64> {
    let n = x.len() / 2;
    let (p, q) = x.split_at(n);
    let sf = helper_f(norm(p)).sqrt();
    p.iter().zip(q).flat_map(|(a, b)| [sf * a, b / sf]).collect()
}

/// Inverse of `Psi^P` on a representative, returned as the canonical lift in `T^*RP^n`.
pub fn psi_p_inv(z: &[f64]) -> Vec<f64> {
    let zc = normalize_rep(&to_complex(z));
    let s = csum_sq(&zc);
    // phase e^{i a} with e^{2 i a} s real negative
    let a = (std::f64::consts::PI - s.arg()) / 2.0;
    let ph = C64::from_polar(1.0, a);
    let w: Vec<C64> = zc.iter().map(|c| c * ph).collect();
    let u: Vec<f64> = w.iter().map(|c| c.re).collect();
    let v: Vec<f64> = w.iter().map(|c| c.im).collect();
    let nv = norm(&v);
    let p = scale(nv, &u);
    let q = scale(1.0 / nv, &v);
    canonicalize_cotangent(&[p, q].concat())
}

pub fn normalize_rep(z: &[C64]) -> Vec<C64> {
    let s = (2.0 / cnorm2(z)).sqrt();
    z.iter().map(|c| c * s).collect()
}

/// `psi_P(z_1, z_2) = [sqrt(2 - |z|^2) : z_1 : z_2]` from `B^4(sqrt 2)` to `CP^2`.
pub fn psi_proj(z: &[f64]) -> Vec<f64> {
    let r2 = dot(z, z);
    let mut out = vec![(2.0 - r2).sqrt(), 0.0];
    out.extend_from_slice(z);
    out
}

pub fn psi_proj_inv(x: &[f64]) -> Vec<f64> {
    let z = normalize_rep(&to_complex(x));
    let ph = z[0].conj() / z[0].norm();
    from_complex(&z[1..].iter().map(|c| c * ph).collect::<Vec<_>>())
}

/// `h_1(zeta) = [i(s + zeta/sqrt 2) : s - zeta/sqrt 2]`, `s = sqrt(1 - |zeta|^2/2)`.
pub fn h1(z: &[f64]) -> Vec<f64> {
    let zeta = C64::new(z[0], z[1]);
    let s = (1.0 - zeta.norm_sqr() / 2.0).sqrt();
    let a = C64::i() * (s + zeta * FRAC_1_SQRT_2);
    let b = s - zeta * FRAC_1_SQRT_2;
    vec![a.re, a.im, b.re, b.im]
}

/// `h_2(w) = [w : sqrt(2 - |w|^2)]`.
pub fn h2(w: &[f64]) -> Vec<f64> {
    vec![w[0], w[1], (2.0 - w[0] * w[0] - w[1] * w[1]).sqrt(), 0.0]
}

pub fn h2_inv(x: &[f64]) -> Vec<f64> {
    let z = normalize_rep(&to_complex(x));
    let w = z[0] * z[1].conj() / z[1].norm();
    vec![w.re, w.im]
}

/// `h_2^{-1} h_1` from the unit disk to the upper half of `D(sqrt 2)`.
pub fn h_plane(z: &[f64]) -> Vec<f64> {
    h2_inv(&h1(z))
}

/// `Theta_Delta(x, y) = ((1 - |y|^2/2) x + sqrt(1 - |y|^2/4) y, (1 - |y|^2/2) x - sqrt(1 - |y|^2/4) y)`.
pub fn theta_delta(x: &[f64]) -> Vec<f64> {
    let (p, y) = (&x[..3], &x[3..]);
    let y2 = dot(y, y);
    let a = 1.0 - y2 / 2.0;
    let b = (1.0 - y2 / 4.0).sqrt();
    let v: Vec<f64> = (0..3).map(|i| a * p[i] + b * y[i]).collect();
    let w: Vec<f64> = (0..3).map(|i| a * p[i] - b * y[i]).collect();
    [v, w].concat()
}

pub fn theta_delta_inv(x: &[f64]) -> Vec<f64> {
    let (v, w) = (&x[..3], &x[3..]);
    let s: Vec<f64> = (0..3).map(|i| v[i] + w[i]).collect();
    let d: Vec<f64> = (0..3).map(|i| v[i] - w[i]).collect();
    let ns = norm(&s);
    let c = 1.0 / (2.0 + ns).sqrt();
    [scale(1.0 / ns, &s), scale(c, &d)].concat()
}

/// Circle action on the unit tangent bundle: `y -> cos t y + sin t x cross y`.
pub fn rotate_tangent(t: f64, x: &[f64]) -> Vec<f64> {
    let (p, y) = (&x[..3], &x[3..]);
    let c = cross(p, y);
    let (s, co) = t.sin_cos();
    let y2: Vec<f64> = (0..3).map(|i| co * y[i] + s * c[i]).collect();
    [p.to_vec(), y2].concat()
}

/// Lift of `Theta_Q`: `(w, zeta) -> (sqrt(1 - |zeta|^2/4) zeta, (1 - |zeta|^2/4) w - zeta^2 conj(w)/4)`.
pub fn theta_q_lift(x: &[f64]) -> Vec<f64> {
    let n = x.len() - 2;
    let w = to_complex(&x[..n]);
    let zeta = C64::new(x[n], x[n + 1]);
    let r2 = zeta.norm_sqr();
    let mut out = vec![zeta * (1.0 - r2 / 4.0).sqrt()];
    out.extend(w.iter().map(|c| c * (1.0 - r2 / 4.0) - zeta * zeta * c.conj() / 4.0));
    from_complex(&out)
}

/// A lift `(w, zeta)` with real `zeta >= 0` of a point of the quadric.
pub fn theta_q_inv(x: &[f64]) -> Vec<f64> {
    let z = normalize_rep(&to_complex(x));
    let ph = if z[0].norm() > 1e-300 { z[0].conj() / z[0].norm() } else { C64::new(1.0, 0.0) };
    let z: Vec<C64> = z.iter().map(|c| c * ph).collect();
    let a2 = z[0].norm_sqr();
    let r2 = 2.0 * a2 / (1.0 + (1.0 - a2).max(0.0).sqrt());
    let r = r2.sqrt();
    let c = 1.0 - r2 / 2.0;
    let mut out: Vec<f64> = z[1..].iter().flat_map(|w| [w.re / c, w.im]).collect();
    out.extend([r, 0.0]);
    out
}

/// Lift of `Theta_p`: `(w, zeta) -> sqrt(1 - |zeta|^2/2) w - zeta conj(w)/sqrt 2`.
pub fn theta_p_lift(x: &[f64]) -> Vec<f64> {
    let n = x.len() - 2;
    let w = to_complex(&x[..n]);
    let zeta = C64::new(x[n], x[n + 1]);
    let s = (1.0 - zeta.norm_sqr() / 2.0).sqrt();
    from_complex(&w.iter().map(|c| c * s - zeta * c.conj() * FRAC_1_SQRT_2).collect::<Vec<_>>())
}

/// A lift `(w, zeta)` with real `zeta >= 0` of a point of `CP^n` off the quadric `|sum z^2| = 2`.
pub fn theta_p_inv(x: &[f64]) -> Vec<f64> {
    let z = normalize_rep(&to_complex(x));
    let s = csum_sq(&z);
    let a = (std::f64::consts::PI - s.arg()) / 2.0;
    let ph = C64::from_polar(1.0, a);
    let z: Vec<C64> = z.iter().map(|c| c * ph).collect();
    let re: Vec<f64> = z.iter().map(|c| c.re).collect();
    let im: Vec<f64> = z.iter().map(|c| c.im).collect();
    let (na, nb) = (norm(&re), norm(&im));
    let rho = (nb - na) / SQRT2;
    let mut out = join_uv(&scale(1.0 / na, &re), &scale(1.0 / nb, &im));
    out.extend([rho, 0.0]);
    out
}

/// `Psi(p, q) = [sqrt(1 - |p|^2) : p + i q]` from `T^*S^n` to the quadric.
pub fn psi_quadric(x: &[f64]) -> Vec<f64> {
    let n = x.len() / 2;
    let (p, q) = x.split_at(n);
    let mut out = vec![(1.0 - dot(p, p)).sqrt(), 0.0];
    out.extend(p.iter().zip(q).flat_map(|(a, b)| [*a, *b]));
    out
}

pub fn psi_quadric_inv(x: &[f64]) -> Vec<f64> {
    let z = normalize_rep(&to_complex(x));
    let ph = z[0].conj() / z[0].norm();
    let rest: Vec<C64> = z[1..].iter().map(|c| c * ph).collect();
    let p: Vec<f64> = rest.iter().map(|c| c.re).collect();
    let q: Vec<f64> = rest.iter().map(|c| c.im).collect();
    [p, q].concat()
}

/// `iota(theta, x, y) = ((-r sin theta x, r cos theta y), (cos theta x, sin theta y))`.
pub fn iota(r: f64, theta: f64, x: &[f64], y: &[f64]) -> Vec<f64> {
    let (s, c) = theta.sin_cos();
    let mut p: Vec<f64> = x.iter().map(|a| -r * s * a).collect();
    p.extend(y.iter().map(|b| r * c * b));
    let mut q: Vec<f64> = x.iter().map(|a| c * a).collect();
    q.extend(y.iter().map(|b| s * b));
    [p, q].concat()
}

/// Unit-speed geodesic flow for the Hamiltonian `|p|` on `T^*S^n \ 0`.
pub fn geodesic_flow(s: f64, x: &[f64]) -> Vec<f64> {
    let n = x.len() / 2;
    let (p, q) = x.split_at(n);
    let np = norm(p);
    if np == 0.0 {
        return x.to_vec();
    }
    let (sn, c) = s.sin_cos();
    let p2: Vec<f64> = (0..n).map(|i| c * p[i] - np * sn * q[i]).collect();
    let q2: Vec<f64> = (0..n).map(|i| c * q[i] + sn * p[i] / np).collect();
    [p2, q2].concat()
}

pub fn rho_ep(t: f64, x: &[f64]) -> Vec<f64> {
    [rot_e1(t, &x[..3]).to_vec(), rot_e1(t, &x[3..]).to_vec()].concat()
}

pub fn rho_cs(t: f64, x: &[f64]) -> Vec<f64> {
    [rot_e1(t, &x[..3]).to_vec(), rot_e1(-t, &x[3..]).to_vec()].concat()
}

/// `(v, w) -> (v, diag(-1, -1, 1) w)`.
pub fn q2_map(x: &[f64]) -> Vec<f64> {
    vec![x[0], x[1], x[2], -x[3], -x[4], x[5]]
}

/// The unitary `(1/sqrt 2) [[1, -i], [1, i]]` on C^2.
pub fn unitary_q(z: &[f64]) -> Vec<f64> {
    let a = C64::new(z[0], z[1]);
    let b = C64::new(z[2], z[3]);
    let u = (a - C64::i() * b) * FRAC_1_SQRT_2;
    let v = (a + C64::i() * b) * FRAC_1_SQRT_2;
    vec![u.re, u.im, v.re, v.im]
}

pub fn unitary_q_inv(z: &[f64]) -> Vec<f64> {
    let u = C64::new(z[0], z[1]);
    let v = C64::new(z[2], z[3]);
    let a = (u + v) * FRAC_1_SQRT_2;
    let b = (C64::i() * (u - v)) * FRAC_1_SQRT_2;
    vec![a.re, a.im, b.re, b.im]
}

pub fn unitary_q_proj_inv(x: &[f64]) -> Vec<f64> {
    psi_proj(&unitary_q_inv(&psi_proj_inv(x)))
}

/// `psi_P U psi_P^{-1}` on representatives of `CP^2`.
pub fn unitary_q_proj(x: &[f64]) -> Vec<f64> {
    psi_proj(&unitary_q(&psi_proj_inv(x)))
}

/// `C(s) = ((-(sqrt 3/2) sin s, -(sqrt 3/2) cos s, 1/2), ((sqrt 3/2) sin s, (sqrt 3/2) cos s, 1/2))`.
pub fn curve_c(s: f64) -> Vec<f64> {
    let h = 3f64.sqrt() / 2.0;
    let (sn, c) = s.sin_cos();
    vec![-h * sn, -h * c, 0.5, h * sn, h * c, 0.5]
}

/// `Gamma'(s) = (-(sqrt 3/2) sin s, -(sqrt 3/2) cos s, 1/2)` on `S^2`.
pub fn gamma_prime(s: f64) -> Vec<f64> {
    curve_c(s)[..3].to_vec()
}

/// The cap disk `g(r e^{i phi}) = ((sqrt 3/2) r sin phi, -(sqrt 3/2) r cos phi, sqrt(1 - 3r^2/4))`.
pub fn cap_disk(z: &[f64]) -> Vec<f64> {
    let h = 3f64.sqrt() / 2.0;
    let r2 = z[0] * z[0] + z[1] * z[1];
    vec![h * z[1], -h * z[0], (1.0 - 0.75 * r2).sqrt()]
}

/// Vector fields `X_1 .. X_4` on `S^2 x S^2`.
pub fn x_field(k: usize, x: &[f64]) -> Vec<f64> {
    let (v, w) = (&x[..3], &x[3..]);
    let vw = cross(v, w);
    let wv = cross(w, v);
    let (a, b) = match k {
        1 => (vw, wv),
        2 => (cross(v, &vw), cross(w, &wv)),
        3 => (wv, wv),
        4 => (cross(v, &wv), cross(w, &wv)),
        _ => panic!("no vector field X_{k}"),
    };
    [a.to_vec(), b.to_vec()].concat()
}

/// Hamiltonian vector field of `F_1 = (v + w) . e_1 / 2` for `omega/2 + omega/2`.
pub fn x_f1(x: &[f64]) -> Vec<f64> {
    let e1 = [1.0, 0.0, 0.0];
    [cross(&e1, &x[..3]).to_vec(), cross(&e1, &x[3..]).to_vec()].concat()
}

/// `p q^T - q p^T`.
pub fn mu_s(x: &[f64]) -> DMatrix<f64> {
    let n = x.len() / 2;
    let (p, q) = x.split_at(n);
    DMatrix::from_fn(n, n, |i, j| p[i] * q[j] - q[i] * p[j])
}

/// `Im(conj(z) z^T)` for an interleaved complex vector.
pub fn im_outer(z: &[f64]) -> DMatrix<f64> {
    let zc = to_complex(z);
    let n = zc.len();
    DMatrix::from_fn(n, n, |i, j| (zc[i].conj() * zc[j]).im)
}

/// Moment map of `SO(n+1)` on `CP^n(sqrt 2)`, on a representative.
pub fn phi_c(z: &[f64]) -> DMatrix<f64> {
    im_outer(&from_complex(&normalize_rep(&to_complex(z))))
}

/// Moment map of `SO(n+1)` on the quadric, ignoring the first coordinate.
pub fn mu_q(z: &[f64]) -> DMatrix<f64> {
    let z = from_complex(&normalize_rep(&to_complex(z)));
    im_outer(&z[2..])
}

/// `sqrt(tr(A^T A)/2)`.
pub fn so_norm(a: &DMatrix<f64>) -> f64 {
    ((a.transpose() * a).trace() / 2.0).sqrt()
}

/// Max entry of the diagonal blocks of sizes `k+1` and `m+1`.
pub fn diagonal_blocks_residual(a: &DMatrix<f64>, k: usize, m: usize) -> f64 {
    let mut r: f64 = 0.0;
    for (lo, len) in [(0, k + 1), (k + 1, m + 1)] {
        for i in lo..lo + len {
            for j in lo..lo + len {
                r = r.max(a[(i, j)].abs());
            }
        }
    }
    r
}

/// Block action of `SO(k+1) x SO(m+1)` on `T^*S^{k+m+1}`.
pub fn block_rotate(a: &DMatrix<f64>, b: &DMatrix<f64>, x: &[f64]) -> Vec<f64> {
    let n = x.len() / 2;
    let k1 = a.nrows();
    let apply = |v: &[f64]| -> Vec<f64> {
        let va = a * nalgebra::DVector::from_column_slice(&v[..k1]);
        let vb = b * nalgebra::DVector::from_column_slice(&v[k1..]);
        [va.as_slice(), vb.as_slice()].concat()
    };
    [apply(&x[..n]), apply(&x[n..])].concat()
}

/// Form on the lift of `Theta_Q`: `d((|zeta|^2/4 - 1/2) theta) + omega_std`.
pub fn theta_q_lift_form() -> TwoForm {
    bundle_lift_form(|s| s / 4.0 - 0.5, |_| 0.25)
}

/// Form on the lift of `Theta_p`: `d(((|zeta|^2 - 1)/2) theta) + omega_std`.
pub fn theta_p_lift_form() -> TwoForm {
    bundle_lift_form(|s| (s - 1.0) / 2.0, |_| 0.5)
}

/// A map with its domain and target forms and a sampler of base points.
pub struct SymplectoEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub map: SmoothMap,
    pub domain_form: TwoForm,
    pub target_form: TwoForm,
    pub sampler: fn(&mut ChaCha8Rng) -> Vec<f64>,
}

fn sample_orthonormal_pair(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let u = sample_sphere(n - 1, rng);
    let g = gaussian_vec(n, rng);
    let v = normalize(&axpy(&g, -dot(&g, &u), &u));
    join_uv(&u, &v)
}

fn sample_pq_lift(n: usize, rmax: f64, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut x = sample_orthonormal_pair(n, rng);
    x.extend(sample_ball(2, 0.0, rmax, rng));
    x
}

fn sample_s2_pair(rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let v = sample_sphere(2, rng);
        let w = sample_sphere(2, rng);
        if norm(&sub(&v, &w)) > 0.05 {
            return [v, w].concat();
        }
    }
}

fn sample_tangent_s2(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let c = sample_cotangent(2, 0.05, SQRT2 - 0.05, rng);
    [c.q, c.p].concat()
}

/// The catalog of symplectomorphisms with their forms.
pub fn symplecto_catalog() -> Vec<SymplectoEntry> {
    let proj = |n| chart_proj(n);
    vec![
        SymplectoEntry {
            id: "phi1",
            description: "C^2 minus 0 (std) to T*S^2 (dlambda), quaternionic sandwich",
            map: SmoothMap::new("phi1", chart_flat(4), chart_cotangent(2), phi1).with_jacobian(phi1_jacobian),
            domain_form: omega_std(),
            target_form: d_lambda(),
            sampler: |r| sample_ball(4, 0.05, 1.95, r),
        },
        SymplectoEntry {
            id: "Phi2",
            description: "S^2xS^2 minus diagonal (omega/2 + omega/2) to T*S^2 (dlambda)",
            map: SmoothMap::new("Phi2", chart_sphere_pair(), chart_cotangent(2), phi2).with_jacobian(phi2_jacobian),
            domain_form: omega_sphere_pair(0.5),
            target_form: d_lambda(),
            sampler: sample_s2_pair,
        },
        SymplectoEntry {
            id: "PsiP",
            description: "T*S^3 (dlambda) to CP^3 (FS) through the lift sqrt(f) p + i q / sqrt(f)",
            map: SmoothMap::new("PsiP", chart_cotangent(3), proj(3), psi_p_lift),
            domain_form: d_lambda(),
            target_form: fs_form(),
            sampler: |r| sample_cotangent(3, 0.0, 0.95, r).flat(),
        },
        SymplectoEntry {
            id: "Phi1bar",
            description: "C^2 minus 0 mod i (std) to T*RP^2 (dlambda) with canonical lift",
            map: SmoothMap::new("Phi1bar", chart_flat(4), chart_cotangent(2), phi1_bar),
            domain_form: omega_std(),
            target_form: d_lambda(),
            sampler: |r| sample_ball(4, 0.05, 1.95, r),
        },
        SymplectoEntry {
            id: "psi",
            description: "B^2(sqrt 2) (std) to S^2 (omega/2)",
            map: SmoothMap::new("psi", chart_flat(2), Chart::cut_out("S2", 3, |x| vec![dot(x, x) - 1.0]), psi_disk)
                .with_jacobian(psi_disk_jacobian),
            domain_form: omega_std(),
            target_form: omega_sphere(0.5),
            sampler: |r| sample_ball(2, 0.0, SQRT2 - 0.05, r),
        },
        SymplectoEntry {
            id: "psiP",
            description: "B^4(sqrt 2) (std) to CP^2 (FS)",
            map: SmoothMap::new("psiP", chart_flat(4), proj(2), psi_proj),
            domain_form: omega_std(),
            target_form: fs_form(),
            sampler: |r| sample_ball(4, 0.0, SQRT2 - 0.05, r),
        },
        SymplectoEntry {
            id: "ThetaDelta",
            description: "disk bundle of TS^2 minus zero section (d eta) to S^2xS^2 (omega/2 + omega/2)",
            map: SmoothMap::new("ThetaDelta", chart_tangent_s2(), chart_sphere_pair(), theta_delta),
            domain_form: d_eta(),
            target_form: omega_sphere_pair(0.5),
            sampler: sample_tangent_s2,
        },
        SymplectoEntry {
            id: "ThetaQ",
            description: "lift P_Q(C^4) x D(sqrt 2) to the quadric in CP^4 (FS)",
            map: SmoothMap::new("ThetaQ", chart_pq_lift(4), chart_quadric(4), theta_q_lift),
            domain_form: theta_q_lift_form(),
            target_form: fs_form(),
            sampler: |r| sample_pq_lift(4, SQRT2 - 0.05, r),
        },
        SymplectoEntry {
            id: "Thetap",
            description: "lift P_Q(C^4) x D(1) to CP^3 (FS)",
            map: SmoothMap::new("Thetap", chart_pq_lift(4), proj(3), theta_p_lift),
            domain_form: theta_p_lift_form(),
            target_form: fs_form(),
            sampler: |r| sample_pq_lift(4, 0.95, r),
        },
        SymplectoEntry {
            id: "PsiQ",
            description: "T*S^3 (dlambda) to the quadric in CP^4 (FS)",
            map: SmoothMap::new("PsiQ", chart_cotangent(3), chart_quadric(4), psi_quadric),
            domain_form: d_lambda(),
            target_form: fs_form(),
            sampler: |r| sample_cotangent(3, 0.0, 0.95, r).flat(),
        },
        SymplectoEntry {
            id: "h1",
            description: "D(sqrt 2) (std) to CP^1 (FS)",
            map: SmoothMap::new("h1", chart_flat(2), proj(1), h1),
            domain_form: omega_std(),
            target_form: fs_form(),
            sampler: |r| sample_ball(2, 0.0, SQRT2 - 0.05, r),
        },
    ]
}

pub fn symplecto_entry(id: &str) -> Result<SymplectoEntry> {
    symplecto_catalog()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| GeomError::Parameter(format!("unknown map id {id}")))
}

/// Result of a pullback sweep over random `(base, v, w)` triples.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct PullbackReport {
    pub max_residual: f64,
    pub samples: usize,
    pub analytic: bool,
}

impl PullbackReport {
    pub fn tolerance(&self) -> f64 {
        if self.analytic {
            PULLBACK_ANALYTIC
        } else {
            PULLBACK_FD
        }
    }

    pub fn passes(&self) -> bool {
        self.max_residual <= self.tolerance()
    }
}

/// Largest `|F^* target(v, w) - domain(v, w)|` over unit tangent pairs at
/// random base points.
pub fn pullback_residual(entry: &SymplectoEntry, n: usize, seed: u64, parallel: bool) -> PullbackReport {
    let id = format!("pullback:{}", entry.id);
    let max_residual = par_max(n, parallel, |i| {
        let mut rng = stream_rng(seed, &id, i as u64);
        let x = (entry.sampler)(&mut rng);
        let basis = entry.map.domain.tangent_basis(&x);
        let mut pick = || {
            let c = gaussian_vec(basis.len(), &mut rng);
            normalize(&combine(&basis, &c))
        };
        let (v, w) = (pick(), pick());
        (pullback_two_form(&entry.map, &entry.target_form, &x, &v, &w) - entry.domain_form.eval(&x, &v, &w)).abs()
    });
    PullbackReport { max_residual, samples: n, analytic: entry.map.has_analytic_jacobian() }
}

/// `||Phi^C([z])|| = sqrt(4 - |sum z_j^2|^2) / 2`.
pub fn phi_c_norm_formula(z: &[f64]) -> f64 {
    let z = normalize_rep(&to_complex(z));
    0.5 * (4.0 - csum_sq(&z).norm_sqr()).max(0.0).sqrt()
}

/// Random angle in `[0, 2 pi)`.
pub fn sample_angle(rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(0.0..TAU)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomcore::stream_rng;

    #[test]
    fn phi2_roundtrip() {
        let mut rng = stream_rng(3, "phi2", 0);
        for _ in 0..100 {
            let x = sample_s2_pair(&mut rng);
            let y = phi2_inv(&phi2(&x));
            assert!(crate::geomcore::max_abs_diff(&x, &y) < 1e-10);
        }
    }

    #[test]
    fn helper_f_at_zero() {
        assert_eq!(helper_f(0.0), 0.5);
    }
}
