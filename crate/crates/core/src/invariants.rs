//! Disk areas, Maslov indices, monotone radii, minimal Maslov numbers,
//! displaceability data, a displacement isotopy and a Morse-function check.

use crate::atlas::{h_plane, iota, theta_p_lift, theta_q_lift};
use crate::calculus::{
    d_lambda, disk_integral, fd_push, fs_form, gauss_legendre, omega_prime_primitive, planar_area, polygon_is_simple,
    std_primitive, Quadrature, TwoForm,
};
use crate::error::{GeomError, Result};
use crate::geomcore::{dot, from_complex, norm, proj_dist, to_complex, C64, SQRT2};
use crate::lagrangians::{check_km, s_km_point, sphere_tangent};
use crate::par::par_map;
use nalgebra::{DMatrix, DVector};
use num_rational::Rational64;
use std::f64::consts::{PI, TAU};
use std::sync::Arc;

pub type DiskFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;
pub type FrameFn = Arc<dyn Fn(f64) -> Vec<Vec<f64>> + Send + Sync>;

/// Symplectic vector bundle the Maslov engine trivializes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Ambient {
    /// `T^*S^n` in R^{2n+2} with `dp ^ dq`.
    Cotangent(usize),
    /// C^N with coordinates `(x_1..x_N, y_1..y_N)` and `dx ^ dy`.
    Flat(usize),
}

impl Ambient {
    fn half(&self) -> usize {
        match self {
            Ambient::Cotangent(n) => n + 1,
            Ambient::Flat(n) => *n,
        }
    }

    fn rank(&self) -> usize {
        match self {
            Ambient::Cotangent(n) => *n,
            Ambient::Flat(n) => *n,
        }
    }

    fn omega(&self, a: &[f64], b: &[f64]) -> f64 {
        let h = self.half();
        dot(&a[..h], &b[h..]) - dot(&b[..h], &a[h..])
    }

    /// Orthogonal projection onto the tangent space at `x`.
    fn projector(&self, x: &[f64]) -> Box<dyn Fn(&[f64]) -> Vec<f64>> {
        match self {
            Ambient::Flat(_) => Box::new(|v: &[f64]| v.to_vec()),
            Ambient::Cotangent(_) => {
                let h = self.half();
                let (p, q) = (x[..h].to_vec(), x[h..].to_vec());
                let r1: Vec<f64> = vec![0.0; h].into_iter().chain(q.iter().copied()).collect();
                let r2: Vec<f64> = q.iter().chain(p.iter()).copied().collect();
                let g = nalgebra::Matrix2::new(dot(&r1, &r1), dot(&r1, &r2), dot(&r2, &r1), dot(&r2, &r2));
                let gi = g.try_inverse().unwrap_or_else(nalgebra::Matrix2::zeros);
                Box::new(move |v: &[f64]| {
                    let c = gi * nalgebra::Vector2::new(dot(&r1, v), dot(&r2, v));
                    v.iter().enumerate().map(|(i, x)| x - c[0] * r1[i] - c[1] * r2[i]).collect()
                })
            }
        }
    }
}

/// A disk with boundary on a Lagrangian, given by the map of the closed unit
/// disk and by a spanning set of the Lagrangian's tangent space along the
/// boundary.
#[derive(Clone)]
pub struct DiskSpec {
    pub id: String,
    pub ambient: Ambient,
    pub map: DiskFn,
    pub boundary_frame: FrameFn,
}

impl DiskSpec {
    pub fn eval(&self, z: &[f64]) -> Vec<f64> {
        (self.map)(z)
    }
}

/// The disks `u1, u2, u3` with boundary on `P^r_{k,m} = iota(S^1 x S^k x S^m)`.
pub fn disk_u(p: usize, k: usize, m: usize, r: f64) -> Result<DiskSpec> {
    check_km(k, m)?;
    let n = k + m + 1;
    let dim = n + 1;
    let (map, lift): (DiskFn, Arc<dyn Fn(f64) -> (f64, Vec<f64>, Vec<f64>) + Send + Sync>) = match p {
        1 => (
            Arc::new(move |z: &[f64]| {
                let mut pv = vec![0.0; dim];
                let mut qv = vec![0.0; dim];
                pv[0] = -r * z[1];
                pv[k + 1] = r * z[0];
                qv[0] = z[0];
                qv[k + 1] = z[1];
                qv[dim - 1] = (1.0 - z[0] * z[0] - z[1] * z[1]).max(0.0).sqrt();
                [pv, qv].concat()
            }),
            Arc::new(move |th: f64| (th, unit(k + 1, 0), unit(m + 1, 0))),
        ),
        2 => {
            if k == 0 {
                return Err(GeomError::Parameter("the disk u2 needs k >= 1".into()));
            }
            (
                Arc::new(move |z: &[f64]| {
                    let mut pv = vec![0.0; dim];
                    let mut qv = vec![0.0; dim];
                    pv[0] = r * z[0];
                    pv[1] = r * z[1];
                    qv[dim - 1] = 1.0;
                    [pv, qv].concat()
                }),
                Arc::new(move |th: f64| {
                    let mut x = vec![0.0; k + 1];
                    x[0] = -th.cos();
                    x[1] = -th.sin();
                    (PI / 2.0, x, unit(m + 1, m))
                }),
            )
        }
        3 => (
            Arc::new(move |z: &[f64]| {
                let mut pv = vec![0.0; dim];
                let mut qv = vec![0.0; dim];
                pv[k + 1] = r * z[0];
                pv[k + 2] = r * z[1];
                qv[0] = 1.0;
                [pv, qv].concat()
            }),
            Arc::new(move |th: f64| {
                let mut y = vec![0.0; m + 1];
                y[0] = th.cos();
                y[1] = th.sin();
                (0.0, unit(k + 1, 0), y)
            }),
        ),
        _ => return Err(GeomError::Parameter(format!("no disk u{p}"))),
    };
    let frame: FrameFn = Arc::new(move |th: f64| {
        let (t0, x, y) = lift(th);
        iota_tangents(r, t0, &x, &y)
    });
    Ok(DiskSpec { id: format!("u{p}(k={k},m={m},r={r})"), ambient: Ambient::Cotangent(n), map, boundary_frame: frame })
}

fn unit(n: usize, i: usize) -> Vec<f64> {
    let mut e = vec![0.0; n];
    e[i] = 1.0;
    e
}

/// Tangent vectors of `iota(S^1 x S^k x S^m)` at `iota(theta, x, y)`.
pub fn iota_tangents(r: f64, theta: f64, x: &[f64], y: &[f64]) -> Vec<Vec<f64>> {
    let k1 = x.len();
    let f = move |t: &[f64]| iota(r, t[0], &t[1..1 + k1], &t[1 + k1..]);
    let t: Vec<f64> = std::iter::once(theta).chain(x.iter().copied()).chain(y.iter().copied()).collect();
    let mut dirs = vec![unit(t.len(), 0)];
    for b in sphere_tangent(x) {
        let mut e = vec![0.0; t.len()];
        e[1..1 + k1].copy_from_slice(&b);
        dirs.push(e);
    }
    for b in sphere_tangent(y) {
        let mut e = vec![0.0; t.len()];
        e[1 + k1..].copy_from_slice(&b);
        dirs.push(e);
    }
    dirs.iter().map(|d| fd_push(&f, &t, d)).collect()
}

/// The disk `z -> (r_1 z, c_2, ..., c_N)` in C^N with boundary on the torus
/// `{|z_j| = r_j}`.
pub fn torus_oracle_disk(radii: &[f64]) -> DiskSpec {
    let n = radii.len();
    let rs = radii.to_vec();
    let rs2 = rs.clone();
    DiskSpec {
        id: format!("torus-oracle(N={n})"),
        ambient: Ambient::Flat(n),
        map: Arc::new(move |z: &[f64]| {
            let mut x = vec![0.0; 2 * n];
            x[0] = rs[0] * z[0];
            x[n] = rs[0] * z[1];
            x[1..n].copy_from_slice(&rs[1..n]);
            x
        }),
        boundary_frame: Arc::new(move |th: f64| {
            let mut out = Vec::new();
            let mut v = vec![0.0; 2 * n];
            v[0] = -rs2[0] * th.sin();
            v[n] = rs2[0] * th.cos();
            out.push(v);
            for j in 1..n {
                let mut v = vec![0.0; 2 * n];
                v[n + j] = rs2[j];
                out.push(v);
            }
            out
        }),
    }
}

/// Ordered list of real `2N x N` matrices `(X; Y)` spanning Lagrangian planes of
/// `dx ^ dy` on R^{2N}.
#[derive(Debug, Clone)]
pub struct LagrangianFrameLoop(pub Vec<DMatrix<f64>>);

fn orthonormal_columns(f: &DMatrix<f64>) -> DMatrix<f64> {
    f.clone().qr().q()
}

/// Largest principal angle between the column spans of two frames.
pub fn max_principal_angle(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    let qa = orthonormal_columns(a);
    let qb = orthonormal_columns(b);
    let s = (qa.transpose() * qb).singular_values();
    s.iter().fold(f64::INFINITY, |m, c| m.min(*c)).clamp(-1.0, 1.0).acos()
}

/// Maslov index of a loop of Lagrangian planes: the winding number of
/// `det(U)^2`, `U = Z (Z^* Z)^{-1/2}`, `Z = X + i Y`. Only the phase of
/// `det Z` enters, since `det U = det Z / |det Z|`.
pub fn maslov_frame_loop(lp: &LagrangianFrameLoop) -> Result<i64> {
    let frames = &lp.0;
    if frames.len() < 3 {
        return Err(GeomError::Parameter("loop needs at least 3 frames".into()));
    }
    let n = frames[0].ncols();
    for f in frames {
        for a in 0..n {
            for b in a + 1..n {
                let (ca, cb) = (f.column(a), f.column(b));
                let w: f64 = (0..n).map(|i| ca[i] * cb[n + i] - ca[n + i] * cb[i]).sum();
                if w.abs() > 1e-8 * ca.norm() * cb.norm() {
                    return Err(GeomError::Numerical(format!("frame not Lagrangian: omega = {w:e}")));
                }
            }
        }
    }
    let last = frames.len() - 1;
    if max_principal_angle(&frames[0], &frames[last]) > 1e-6 {
        return Err(GeomError::Numerical("loop does not close".into()));
    }
    let phase = |f: &DMatrix<f64>| -> f64 {
        let z = DMatrix::from_fn(n, n, |i, j| C64::new(f[(i, j)], f[(n + i, j)]));
        let d = z.determinant();
        (d * d).arg()
    };
    let mut total = 0.0;
    let mut prev = phase(&frames[0]);
    for f in &frames[1..] {
        let ph = phase(f);
        let mut step = ph - prev;
        step -= TAU * (step / TAU).round();
        if step.abs() > PI / 2.0 {
            return Err(GeomError::Numerical(format!("grid too coarse: phase step {step:.3}")));
        }
        total += step;
        prev = ph;
    }
    let w = total / TAU;
    let k = w.round();
    if (w - k).abs() > 0.01 {
        return Err(GeomError::Numerical(format!("winding {w} not near an integer")));
    }
    Ok(k as i64)
}

/// Symplectic Gram-Schmidt on an ordered spanning list, returning
/// `(e_1, f_1, e_2, f_2, ...)`.
fn symplectic_gram_schmidt(amb: &Ambient, list: Vec<Vec<f64>>) -> Result<Vec<Vec<f64>>> {
    let mut rest = list;
    let mut out = Vec::new();
    while !rest.is_empty() {
        let e = rest.remove(0);
        let (j, w) = rest
            .iter()
            .enumerate()
            .map(|(j, r)| (j, amb.omega(&e, r)))
            .fold((0usize, 0.0f64), |acc, c| if c.1.abs() > acc.1.abs() { c } else { acc });
        if w.abs() < 1e-10 {
            return Err(GeomError::Numerical("degenerate symplectic Gram-Schmidt".into()));
        }
        let f: Vec<f64> = rest.remove(j).iter().map(|x| x / w).collect();
        rest = rest
            .into_iter()
            .map(|r| {
                let (a, b) = (amb.omega(&r, &e), amb.omega(&r, &f));
                r.iter().enumerate().map(|(i, x)| x + a * f[i] - b * e[i]).collect()
            })
            .collect();
        out.push(e);
        out.push(f);
    }
    Ok(out)
}

fn center_frame(amb: &Ambient, x: &[f64]) -> Result<Vec<Vec<f64>>> {
    let h = amb.half();
    let proj = amb.projector(x);
    let mut basis: Vec<Vec<f64>> = Vec::new();
    // q-like coordinates first
    for i in (h..2 * h).chain(0..h) {
        let mut v = proj(&unit(2 * h, i));
        for b in &basis {
            let c = dot(&v, b);
            v.iter_mut().zip(b).for_each(|(a, bb)| *a -= c * bb);
        }
        let nv = norm(&v);
        if nv > 1e-8 {
            basis.push(v.iter().map(|a| a / nv).collect());
        }
        if basis.len() == 2 * amb.rank() {
            break;
        }
    }
    symplectic_gram_schmidt(amb, basis)
}

/// Carry a symplectic frame to the tangent space at `x`. Returns `None` when
/// the projection moves a frame vector by more than the jump threshold.
fn continue_frame(amb: &Ambient, x: &[f64], prev: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let proj = amb.projector(x);
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(prev.len());
    for pair in prev.chunks(2) {
        let mut e = proj(&pair[0]);
        let mut f = proj(&pair[1]);
        for v in [&pair[0], &pair[1]] {
            let pv = proj(v);
            let moved = norm(&pv.iter().zip(v.iter()).map(|(a, b)| a - b).collect::<Vec<_>>()) / norm(v);
            if moved > 0.3f64.sin() {
                return None;
            }
        }
        for q in out.chunks(2) {
            let (ee, ff) = (&q[0], &q[1]);
            let (a, b) = (amb.omega(&e, ee), amb.omega(&e, ff));
            e = e.iter().enumerate().map(|(i, x)| x + a * ff[i] - b * ee[i]).collect();
            let (a, b) = (amb.omega(&f, ee), amb.omega(&f, ff));
            f = f.iter().enumerate().map(|(i, x)| x + a * ff[i] - b * ee[i]).collect();
        }
        let c = amb.omega(&e, &f);
        if c <= 1e-6 {
            return None;
        }
        let s = 1.0 / c.sqrt();
        out.push(e.iter().map(|x| x * s).collect());
        out.push(f.iter().map(|x| x * s).collect());
    }
    Some(out)
}

/// Maslov-engine grid settings.
#[derive(Debug, Clone, Copy)]
pub struct MaslovGrid {
    pub radial: usize,
    pub angular: usize,
}

impl Default for MaslovGrid {
    fn default() -> Self {
        MaslovGrid { radial: 256, angular: 512 }
    }
}

/// Boundary frame loop of a disk in the radially continued trivialization.
pub fn disk_frame_loop(d: &DiskSpec, grid: MaslovGrid, parallel: bool) -> Result<LagrangianFrameLoop> {
    let amb = d.ambient;
    let c0 = center_frame(&amb, &d.eval(&[0.0, 0.0]))?;
    let n = amb.rank();
    let frames = par_map(grid.angular + 1, parallel, |i| -> Result<DMatrix<f64>> {
        let th = TAU * i as f64 / grid.angular as f64;
        let (sn, cs) = th.sin_cos();
        let mut radial = grid.radial;
        let frame = loop {
            let mut fr = c0.clone();
            let mut ok = true;
            for j in 1..=radial {
                let s = j as f64 / radial as f64;
                match continue_frame(&amb, &d.eval(&[s * cs, s * sn]), &fr) {
                    Some(f) => fr = f,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                break fr;
            }
            if radial >= 4 * grid.radial {
                return Err(GeomError::Numerical(format!("trivialization jump on ray {th:.4}")));
            }
            radial *= 2;
        };
        let xi = (d.boundary_frame)(th);
        Ok(DMatrix::from_fn(2 * n, n, |r, c| {
            let (e, f) = (&frame[2 * (r % n)], &frame[2 * (r % n) + 1]);
            if r < n {
                amb.omega(&xi[c], f)
            } else {
                amb.omega(e, &xi[c])
            }
        }))
    });
    Ok(LagrangianFrameLoop(frames.into_iter().collect::<Result<Vec<_>>>()?))
}

/// Maslov index of a disk, refining the angular grid up to 4x on phase jumps.
pub fn maslov_disk(d: &DiskSpec, grid: MaslovGrid, parallel: bool) -> Result<i64> {
    let mut g = grid;
    loop {
        match disk_frame_loop(d, g, parallel).and_then(|lp| maslov_frame_loop(&lp)) {
            Ok(k) => return Ok(k),
            Err(e) if g.angular >= 4 * grid.angular => return Err(e),
            Err(_) => g.angular *= 2,
        }
    }
}

/// Boundary residual of a disk: distance of boundary points from the
/// Lagrangian, measured by a supplied membership function.
pub fn disk_boundary_residual(d: &DiskSpec, membership: &dyn Fn(&[f64]) -> f64, n: usize) -> f64 {
    (0..n)
        .map(|i| {
            let th = TAU * i as f64 / n as f64;
            membership(&d.eval(&[th.cos(), th.sin()]))
        })
        .fold(0.0, f64::max)
}

pub fn disk_area(d: &DiskSpec, form: &TwoForm, nodes: usize) -> Quadrature {
    let m = d.map.clone();
    disk_integral(&move |z: &[f64]| m(z), form, nodes)
}

/// Area of a `T^*S^n` disk for `d lambda`.
pub fn cotangent_disk_area(d: &DiskSpec) -> Quadrature {
    disk_area(d, &d_lambda(), 64)
}

/// The frame `L_a(e^{i theta})` at `u3(e^{i theta})` for `r = 1/2`.
pub fn frame_isotopy(k: usize, m: usize, a: f64, theta: f64) -> Vec<Vec<f64>> {
    let dim = k + m + 2;
    let v: Vec<f64> = (0..m + 1).map(|i| [theta.cos(), theta.sin()].get(i).copied().unwrap_or(0.0)).collect();
    let build = |x: &[f64], y: &[f64], t: f64| -> Vec<f64> {
        let mut p = vec![0.0; dim];
        let mut q = vec![0.0; dim];
        for i in 0..=k {
            p[i] = a * x[i] - if i == 0 { (1.0 - a) * t / 2.0 } else { 0.0 };
            q[i] = (1.0 - a) * x[i];
        }
        for i in 0..=m {
            p[k + 1 + i] = y[i] + a * t * v[i];
            q[k + 1 + i] = (1.0 - a) * t * v[i];
        }
        [p, q].concat()
    };
    let zx = vec![0.0; k + 1];
    let zy = vec![0.0; m + 1];
    let mut out = vec![build(&zx, &zy, 1.0)];
    for xb in sphere_tangent(&unit(k + 1, 0)) {
        out.push(build(&xb, &zy, 0.0));
    }
    for yb in sphere_tangent(&v) {
        out.push(build(&zx, &yb, 0.0));
    }
    out
}

/// Affine fiber area `coeff * pi * (1 - r)`.
#[derive(Debug, Clone, Copy)]
pub struct FiberArea {
    pub coeff: Rational64,
}

/// Unique `r` in `(0, 1)` with `fiber_area(r) / fiber_maslov = line_area / line_maslov`,
/// areas given in units of `pi`.
pub fn monotone_radius(fiber: FiberArea, fiber_maslov: i64, line_area: Rational64, line_maslov: i64) -> Result<Rational64> {
    if fiber_maslov == 0 || line_maslov == 0 || *fiber.coeff.numer() == 0 {
        return Err(GeomError::Parameter("degenerate monotonicity data".into()));
    }
    let r = Rational64::from_integer(1) - line_area * Rational64::from_integer(fiber_maslov) / (Rational64::from_integer(line_maslov) * fiber.coeff);
    if r <= Rational64::from_integer(0) || r >= Rational64::from_integer(1) {
        return Err(GeomError::Numerical(format!("no monotone radius in (0,1): r = {r}")));
    }
    Ok(r)
}

/// Monotone radius of the quadric circle bundle: fiber `2 pi (1 - r)`, Maslov 2;
/// line area `2 pi`, Maslov `2(k+m+1)`.
pub fn quadric_monotone_radius(k: usize, m: usize) -> Result<Rational64> {
    check_km(k, m)?;
    monotone_radius(FiberArea { coeff: 2.into() }, 2, 2.into(), 2 * (k + m + 1) as i64)
}

/// Monotone radius of the projective circle bundle: fiber `pi (1 - r)`, Maslov 2;
/// line area `2 pi`, Maslov `2(k+m+2)`.
pub fn projective_monotone_radius(k: usize, m: usize) -> Result<Rational64> {
    check_km(k, m)?;
    monotone_radius(FiberArea { coeff: 1.into() }, 2, 2.into(), 2 * (k + m + 2) as i64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassLatticeEntry {
    pub id: String,
    pub area: f64,
    pub maslov: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Smallest positive Maslov value on the lattice spanned by the generators,
/// plus `delta = (sum)/2` when present.
pub fn minimal_maslov(entries: &[ClassLatticeEntry], half_class_present: bool) -> i64 {
    let mut vals: Vec<i64> = entries.iter().map(|e| e.maslov).collect();
    if half_class_present {
        let s: i64 = vals.iter().sum();
        vals.push(s / 2);
    }
    vals.into_iter().fold(0, gcd)
}

/// Generators `u1, u2, u3` (and `delta` when `k > 0`) of `P^{1/2}_{k,m}` with
/// their expected Maslov indices.
pub fn p_half_generators(k: usize, m: usize) -> Vec<ClassLatticeEntry> {
    let mut v = vec![ClassLatticeEntry { id: "u1".into(), area: PI, maslov: 2 * (k + m) as i64 }];
    if k > 0 {
        v.push(ClassLatticeEntry { id: "u2".into(), area: 0.0, maslov: 0 });
    }
    v.push(ClassLatticeEntry { id: "u3".into(), area: 0.0, maslov: 0 });
    v
}

/// `alpha < tau/2` and the generator area is an integer multiple of `tau`.
pub fn displaceability_criterion(alpha: f64, tau: f64, area_image_generator: f64) -> bool {
    let q = area_image_generator / tau;
    alpha < tau / 2.0 && (q - q.round()).abs() <= 1e-12
}

/// `(2 pi / tau) * area mod 2 pi`, in `[0, 2 pi)`, snapping values within
/// `1e-9` of `2 pi` to zero.
pub fn holonomy_angle(area: f64, tau: f64) -> f64 {
    let a = (TAU / tau * area).rem_euclid(TAU);
    if (TAU - a).abs() < 1e-9 {
        0.0
    } else {
        a
    }
}

/// Upper half of the conic `Q_1` in `CP^2`, bounded by `S_{0,1}`.
pub fn conic_hemisphere(z: &[f64]) -> Vec<f64> {
    let zeta = C64::new(z[0], z[1]);
    let a = C64::i() * (1.0 + zeta);
    let b = 1.0 - zeta;
    let v = [C64::i() * (b * b + a * a), b * b - a * a, 2.0 * a * b];
    from_complex(&crate::atlas::normalize_rep(&v))
}

/// Half of the line `[ia : ib : a : b]` in `Q_2` of `CP^3`, bounded by `S_{1,1}`.
pub fn line_half_disk(z: &[f64]) -> Vec<f64> {
    let zeta = C64::new(z[0], z[1]);
    let a = C64::i() * (1.0 + zeta);
    let b = 1.0 - zeta;
    let v = [C64::i() * a, C64::i() * b, a, b];
    from_complex(&crate::atlas::normalize_rep(&v))
}

/// `v_1(r e^{i theta}) = [i s r cos : i s r sin : sqrt(2 - r^2 s^2) : 0]`, `s = sqrt(1 - sqrt 3/2)`.
pub fn disk_v1(z: &[f64]) -> Vec<f64> {
    let s = (1.0 - 3f64.sqrt() / 2.0).sqrt();
    let r2 = z[0] * z[0] + z[1] * z[1];
    vec![0.0, s * z[0], 0.0, s * z[1], (2.0 - r2 * s * s).sqrt(), 0.0, 0.0, 0.0]
}

/// FS area of a map of the unit disk into projective space.
pub fn proj_disk_area(map: &(dyn Fn(&[f64]) -> Vec<f64> + Send + Sync), nodes: usize) -> Quadrature {
    disk_integral(map, &fs_form(), nodes)
}

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct MonotonicityReport {
    pub radius: f64,
    pub fiber_area: f64,
    pub u1_area: f64,
    pub u1_maslov: i64,
    pub lambda_fiber: f64,
    pub lambda_u1: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Compactification {
    Quadric,
    Projective,
}

/// Measure the fiber disk and `u1` at the monotone radius and compare
/// area/Maslov ratios. The fiber disk's Maslov index 2 is the normalization.
pub fn monotonicity_assembled(kind: Compactification, k: usize, m: usize, parallel: bool) -> Result<MonotonicityReport> {
    let r = match kind {
        Compactification::Quadric => quadric_monotone_radius(k, m)?,
        Compactification::Projective => projective_monotone_radius(k, m)?,
    };
    let r = *r.numer() as f64 / *r.denom() as f64;
    let w0 = s_km_point(&unit(k + 1, 0), &unit(m + 1, 0));
    let fiber = match kind {
        Compactification::Quadric => {
            let rho = (2.0 - 2.0 * r).sqrt();
            proj_disk_area(&move |z: &[f64]| theta_q_lift(&[w0.clone(), vec![rho * z[0], rho * z[1]]].concat()), 64)
        }
        Compactification::Projective => {
            let rho = (1.0 - r).sqrt();
            proj_disk_area(&move |z: &[f64]| theta_p_lift(&[w0.clone(), vec![rho * z[0], rho * z[1]]].concat()), 64)
        }
    };
    let u1 = disk_u(1, k, m, r)?;
    let area = cotangent_disk_area(&u1).value;
    let mu = maslov_disk(&u1, MaslovGrid { radial: 64, angular: 256 }, parallel)?;
    Ok(MonotonicityReport {
        radius: r,
        fiber_area: fiber.value,
        u1_area: area,
        u1_maslov: mu,
        lambda_fiber: fiber.value / 2.0,
        lambda_u1: area / mu as f64,
    })
}

/// Target of the displacement isotopy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DisplaceTarget {
    /// `L^Q_{0,m}` in the quadric, plane model `(D(1), du ^ dv / (1 - v^2))`.
    Quadric { m: usize },
    /// `L^P_{k,m}` in `CP^{k+m+1}`, plane model the upper half of `D(sqrt 2)`.
    Projective { k: usize, m: usize },
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct IsotopyCertificate {
    pub target: String,
    pub area: f64,
    pub half_total: f64,
    pub steps: usize,
    pub area_drift: f64,
    pub min_separation: f64,
    pub all_simple: bool,
    pub inside: bool,
}

impl IsotopyCertificate {
    pub fn passes(&self) -> bool {
        self.area_drift <= 1e-6 && self.min_separation > 0.01 && self.all_simple && self.inside
    }
}

/// A family of closed curves in the round disk `D(rho)`, from the centered
/// circle of radius `r0` to a crescent near the boundary, all enclosing the
/// same area. Curves are written in area-polar coordinates about
/// `p* = (-d, 0)`: `zeta = p* + sqrt(2 sigma) e^{i Theta}`, where the area form
/// is `d sigma ^ d Theta`.
#[derive(Debug, Clone)]
pub struct Crescent {
    pub rho: f64,
    pub r0: f64,
    d: f64,
    a0: f64,
    a1: f64,
    rm: f64,
    eps_top: f64,
    terms: usize,
    area: f64,
}

const SOFT_ETA: f64 = 2e-2;

fn sinc_scaled(a: f64, u: f64) -> f64 {
    if u.abs() < 1e-8 {
        a
    } else {
        (a * u).sin() / u
    }
}

impl Crescent {
    pub fn new(rho: f64, r0: f64) -> Result<Self> {
        if !(r0 > 0.0 && PI * r0 * r0 < PI * rho * rho / 2.0) {
            return Err(GeomError::Refused(format!(
                "enclosed area {:.6} is not below half the total {:.6}",
                PI * r0 * r0,
                PI * rho * rho / 2.0
            )));
        }
        let d = rho * (1.0 - 0.02);
        Ok(Crescent {
            rho,
            r0,
            d,
            a0: (r0 / d).asin(),
            a1: 1.45,
            rm: r0 + 0.03 * rho,
            eps_top: 0.02,
            terms: 8,
            area: PI * r0 * r0,
        })
    }

    /// Area coordinate of the boundary circle along direction `theta`.
    fn sigma_boundary(&self, theta: f64) -> f64 {
        let c = theta.cos();
        let t = self.d * c + (self.d * self.d * c * c - (self.d * self.d - self.rho * self.rho)).sqrt();
        0.5 * t * t
    }

    fn initial_profiles(&self, c: f64) -> (f64, f64) {
        let th = self.a0 * c;
        let m = 0.5 * (self.d * self.d * (2.0 * th).cos() + self.r0 * self.r0);
        let g = sinc_scaled(self.a0, 1.0 - c) * sinc_scaled(self.a0, 1.0 + c);
        let w = self.d * th.cos() * self.d * g.max(0.0).sqrt();
        let sd = self.sigma_boundary(th);
        (m / sd, w / sd)
    }

    fn final_profiles(&self, c: f64) -> (f64, f64) {
        let th = self.a1 * c;
        let sd = self.sigma_boundary(th);
        let top = (1.0 - self.eps_top) * sd;
        let x = self.rm * self.rm - self.d * self.d * th.sin().powi(2);
        let soft = ((x + (x * x + SOFT_ETA * SOFT_ETA).sqrt()) / 2.0).sqrt();
        let floor = 0.5 * (self.d * th.cos() + soft).powi(2);
        let series: f64 = (0..self.terms).map(|j| c.powi(2 * j as i32)).sum();
        ((top + floor) / 2.0 / sd, 0.5 * (top - floor) * series.sqrt() / sd)
    }

    fn profiles(&self, s: f64, c: f64) -> (f64, f64, f64) {
        let (m0, w0) = self.initial_profiles(c);
        let (m1, w1) = self.final_profiles(c);
        let a = (1.0 - s) * self.a0 + s * self.a1;
        (a, (1.0 - s) * m0 + s * m1, (1.0 - s) * w0 + s * w1)
    }

    /// Width factor keeping the enclosed area equal to the initial circle's.
    fn width_scale(&self, s: f64) -> f64 {
        let (xs, ws) = gauss_legendre(16);
        let panels = 1024;
        let h = PI / panels as f64;
        let raw: f64 = (0..panels)
            .map(|k| {
                xs.iter()
                    .zip(&ws)
                    .map(|(x, w)| {
                        let t = h * (k as f64 + 0.5 * (x + 1.0));
                        let c = t.cos();
                        let (a, _, wt) = self.profiles(s, c);
                        w * 2.0 * a * self.sigma_boundary(a * c) * wt * t.sin().powi(2)
                    })
                    .sum::<f64>()
            })
            .sum::<f64>()
            * h
            / 2.0;
        self.area / raw
    }

    /// The curve at isotopy time `s`, as a function of `t in [0, 2 pi)`.
    pub fn curve(&self, s: f64) -> impl Fn(f64) -> [f64; 2] + '_ {
        let lam = if s == 0.0 { 1.0 } else { self.width_scale(s) };
        move |t: f64| {
            let c = t.cos();
            let (a, m, w) = self.profiles(s, c);
            let th = a * c;
            let sigma = self.sigma_boundary(th) * (m + lam * w * t.sin());
            let r = (2.0 * sigma).max(0.0).sqrt();
            [-self.d + r * th.cos(), r * th.sin()]
        }
    }
}

/// `Phi : (D(1), du ^ dv / (1 - v^2)) -> (D(sqrt 2), std)`.
pub fn omega_prime_to_round(z: [f64; 2]) -> [f64; 2] {
    let r = (z[0] * z[0] + z[1] * z[1]).sqrt();
    if r == 0.0 {
        return [0.0, 0.0];
    }
    let s = (1.0 - r * r).sqrt();
    let big_r = (2.0 * r * r / (1.0 + s)).sqrt();
    let (u, v) = (z[0], s * z[1]);
    let n = (u * u + v * v).sqrt();
    [big_r * u / n, big_r * v / n]
}

pub fn round_to_omega_prime(w: [f64; 2]) -> [f64; 2] {
    let big_r = (w[0] * w[0] + w[1] * w[1]).sqrt();
    if big_r == 0.0 {
        return [0.0, 0.0];
    }
    let r = big_r * (1.0 - big_r * big_r / 4.0).sqrt();
    let s = 1.0 - big_r * big_r / 2.0;
    let (u, v) = (w[0] / big_r, w[1] / big_r / s);
    let n = (u * u + v * v).sqrt();
    [r * u / n, r * v / n]
}

/// `f(a + i b) = -a b / sqrt(1 - b^2) + i sqrt(1 - b^2)`.
pub fn plane_f(z: C64) -> C64 {
    let s = (1.0 - z.im * z.im).sqrt();
    C64::new(-z.re * z.im / s, s)
}

/// `c(z) = sqrt(2 - |z|^2 - |f(z)|^2)`.
pub fn plane_c(z: C64) -> f64 {
    (2.0 - z.norm_sqr() - plane_f(z).norm_sqr()).max(0.0).sqrt()
}

/// `G_gamma(x, y) = [gamma : f(gamma) x : c(gamma) y]` for the quadric family.
pub fn g_quadric(gamma: C64, x: &[f64], y: &[f64]) -> Vec<C64> {
    let f = plane_f(gamma);
    let c = plane_c(gamma);
    std::iter::once(gamma)
        .chain(x.iter().map(|a| f * *a))
        .chain(y.iter().map(|b| C64::new(c * b, 0.0)))
        .collect()
}

/// `G_gamma(x, y) = [gamma x : sqrt(2 - |gamma|^2) y]` for the projective family.
pub fn g_projective(gamma: C64, x: &[f64], y: &[f64]) -> Vec<C64> {
    let c = (2.0 - gamma.norm_sqr()).max(0.0).sqrt();
    x.iter().map(|a| gamma * *a).chain(y.iter().map(|b| C64::new(c * b, 0.0))).collect()
}

/// Displacement isotopy certificate for `L^Q_{0,m}` or `L^P_{k,m}`.
pub fn displacement_isotopy(target: DisplaceTarget, steps: usize, parallel: bool) -> Result<IsotopyCertificate> {
    let (name, rho, r0, half_total) = match target {
        DisplaceTarget::Quadric { m } => {
            if m < 1 {
                return Err(GeomError::Parameter("need m >= 1".into()));
            }
            let n = (m + 1) as f64;
            let a2 = (2.0 - 1.0 / n) / n;
            let big_r = (2.0 * a2 / (1.0 + (1.0 - a2).sqrt())).sqrt();
            (format!("L^Q_{{0,{m}}}"), SQRT2, big_r, PI)
        }
        DisplaceTarget::Projective { k, m } => {
            check_km(k, m)?;
            let r = 1.0 - 2.0 / (k + m + 2) as f64;
            (format!("L^P_{{{k},{m}}}"), 1.0, (1.0 - r).sqrt(), PI / 2.0)
        }
    };
    let area = PI * r0 * r0;
    if area >= half_total - 1e-12 {
        return Err(GeomError::Refused(format!(
            "{name}: enclosed area {area:.6} is not strictly below half the total area {half_total:.6}"
        )));
    }
    let cr = Crescent::new(rho, r0)?;
    // map from the round model to the target's plane model, and the plane area
    let to_plane = move |p: [f64; 2]| -> [f64; 2] {
        match target {
            DisplaceTarget::Quadric { .. } => round_to_omega_prime(p),
            DisplaceTarget::Projective { .. } => {
                let w = h_plane(&p);
                [w[0], w[1]]
            }
        }
    };
    let primitive: fn([f64; 2], [f64; 2]) -> f64 = match target {
        DisplaceTarget::Quadric { .. } => omega_prime_primitive,
        DisplaceTarget::Projective { .. } => std_primitive,
    };
    let reports = par_map(steps + 1, parallel, |i| {
        let s = i as f64 / steps as f64;
        let c = cr.curve(s);
        let mapped = |t: f64| to_plane(c(t));
        let a = planar_area(&mapped, &primitive).value;
        let pts: Vec<[f64; 2]> = (0..512).map(|j| c(TAU * j as f64 / 512.0)).collect();
        let simple = polygon_is_simple(&pts);
        let inside = pts.iter().all(|p| (p[0] * p[0] + p[1] * p[1]).sqrt() < rho * (1.0 - 1e-6));
        ((a - area).abs(), simple, inside)
    });
    let area_drift = reports.iter().map(|r| r.0).fold(0.0, f64::max);
    let all_simple = reports.iter().all(|r| r.1);
    let inside = reports.iter().all(|r| r.2);
    let c0 = cr.curve(0.0);
    let c1 = cr.curve(1.0);
    let nt = 256;
    let g0: Vec<C64> = (0..nt).map(|j| to_plane(c0(TAU * j as f64 / nt as f64))).map(|p| C64::new(p[0], p[1])).collect();
    let g1: Vec<C64> = (0..nt).map(|j| to_plane(c1(TAU * j as f64 / nt as f64))).map(|p| C64::new(p[0], p[1])).collect();
    let fibers = separation_fibers(target);
    let min_separation = par_map(nt, parallel, |i| {
        let mut best = f64::INFINITY;
        for (xa, ya) in &fibers {
            let pa = lagrangian_point(target, g0[i], xa, ya);
            for gb in &g1 {
                for (xb, yb) in &fibers {
                    best = best.min(proj_dist(&pa, &lagrangian_point(target, *gb, xb, yb)));
                }
            }
        }
        best
    })
    .into_iter()
    .fold(f64::INFINITY, f64::min);
    Ok(IsotopyCertificate { target: name, area, half_total, steps, area_drift, min_separation, all_simple, inside })
}

fn lagrangian_point(target: DisplaceTarget, gamma: C64, x: &[f64], y: &[f64]) -> Vec<C64> {
    match target {
        DisplaceTarget::Quadric { .. } => g_quadric(gamma, x, y),
        DisplaceTarget::Projective { .. } => g_projective(gamma, x, y),
    }
}

/// A few fixed sphere points for the fiber factors.
fn separation_fibers(target: DisplaceTarget) -> Vec<(Vec<f64>, Vec<f64>)> {
    let (k, m) = match target {
        DisplaceTarget::Quadric { m } => (0, m),
        DisplaceTarget::Projective { k, m } => (k, m),
    };
    let dirs = |n: usize| -> Vec<Vec<f64>> {
        let mut v = vec![unit(n + 1, 0), unit(n + 1, 0).iter().map(|x| -x).collect()];
        if n >= 1 {
            v.push(unit(n + 1, 1));
            let d: Vec<f64> = (0..=n).map(|_| 1.0 / ((n + 1) as f64).sqrt()).collect();
            v.push(d);
        }
        v
    };
    let mut out = Vec::new();
    for x in dirs(k) {
        for y in dirs(m) {
            out.push((x.clone(), y));
        }
    }
    out
}

/// `5 sin 2 theta + cos theta (x_1 + y_1)`.
pub fn morse_f(theta: f64, x: &[f64], y: &[f64]) -> f64 {
    5.0 * (2.0 * theta).sin() + theta.cos() * (x[0] + y[0])
}

/// The involution negating every coordinate of `x` and `y` but the first.
pub fn morse_involution(x: &[f64], y: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let flip = |v: &[f64]| -> Vec<f64> { v.iter().enumerate().map(|(i, a)| if i == 0 { *a } else { -a }).collect() };
    (flip(x), flip(y))
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CriticalPoint {
    pub theta: f64,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub value: f64,
    pub min_hessian_eig: f64,
}

fn morse_grad(theta: f64, x: &[f64], y: &[f64]) -> (f64, Vec<f64>, Vec<f64>) {
    let (s, c) = theta.sin_cos();
    let gt = 10.0 * (2.0 * theta).cos() - s * (x[0] + y[0]);
    let proj = |v: &[f64]| -> Vec<f64> {
        let e0 = unit(v.len(), 0);
        e0.iter().zip(v).map(|(a, b)| c * (a - v[0] * b)).collect()
    };
    let gx = if x.len() > 1 { proj(x) } else { vec![0.0] };
    (gt, gx, proj(y))
}

/// Critical points of `5 sin 2 theta + cos theta (x_1 + y_1)` on
/// `S^1 x S^k x S^m`, by multi-start Riemannian Newton iteration.
pub fn morse_critical_points(k: usize, m: usize, starts: usize, seed: u64) -> Result<Vec<CriticalPoint>> {
    check_km(k, m)?;
    use rand::Rng;
    let mut found: Vec<CriticalPoint> = Vec::new();
    let mut unconverged = 0;
    for i in 0..starts {
        let mut rng = crate::geomcore::stream_rng(seed, &format!("morse:{k},{m}"), i as u64);
        let mut th: f64 = rng.random_range(0.0..TAU);
        let mut x = if k == 0 {
            vec![if rng.random::<bool>() { 1.0 } else { -1.0 }]
        } else {
            crate::geomcore::sample_sphere(k, &mut rng)
        };
        let mut y = crate::geomcore::sample_sphere(m, &mut rng);
        let mut converged = false;
        for _ in 0..200 {
            let bx = if k == 0 { Vec::new() } else { sphere_tangent(&x) };
            let by = sphere_tangent(&y);
            let nloc = 1 + bx.len() + by.len();
            let point = |d: &[f64]| -> (f64, Vec<f64>, Vec<f64>) {
                let mut xx = x.clone();
                for (j, b) in bx.iter().enumerate() {
                    xx.iter_mut().zip(b).for_each(|(a, c)| *a += d[1 + j] * c);
                }
                if k > 0 {
                    let n = norm(&xx);
                    xx.iter_mut().for_each(|a| *a /= n);
                }
                let mut yy = y.clone();
                for (j, b) in by.iter().enumerate() {
                    yy.iter_mut().zip(b).for_each(|(a, c)| *a += d[1 + bx.len() + j] * c);
                }
                let n = norm(&yy);
                yy.iter_mut().for_each(|a| *a /= n);
                (th + d[0], xx, yy)
            };
            let local_grad = |d: &[f64]| -> Vec<f64> {
                let (t, xx, yy) = point(d);
                let (gt, gx, gy) = morse_grad(t, &xx, &yy);
                let mut g = vec![gt];
                g.extend(bx.iter().map(|b| dot(b, &gx)));
                g.extend(by.iter().map(|b| dot(b, &gy)));
                g
            };
            let g0 = local_grad(&vec![0.0; nloc]);
            if norm(&g0) < 1e-12 {
                converged = true;
                break;
            }
            let h = 1e-6;
            let hess = DMatrix::from_fn(nloc, nloc, |r, c| {
                let mut dp = vec![0.0; nloc];
                dp[c] = h;
                let gp = local_grad(&dp);
                dp[c] = -h;
                let gm = local_grad(&dp);
                (gp[r] - gm[r]) / (2.0 * h)
            });
            let Some(step) = hess.clone().lu().solve(&(-DVector::from_vec(g0.clone()))) else { break };
            let sn = step.norm();
            let scale = if sn > 0.5 { 0.5 / sn } else { 1.0 };
            let d: Vec<f64> = step.iter().map(|v| v * scale).collect();
            let (t, xx, yy) = point(&d);
            th = t.rem_euclid(TAU);
            x = xx;
            y = yy;
        }
        if !converged {
            unconverged += 1;
            continue;
        }
        if found.iter().any(|p| {
            let dt = (p.theta - th).rem_euclid(TAU);
            dt.min(TAU - dt) < 1e-6 && crate::geomcore::max_abs_diff(&p.x, &x) < 1e-6 && crate::geomcore::max_abs_diff(&p.y, &y) < 1e-6
        }) {
            continue;
        }
        let hess_eig = morse_hessian_min_eig(th, &x, &y, k);
        found.push(CriticalPoint { theta: th, x: x.clone(), y: y.clone(), value: morse_f(th, &x, &y), min_hessian_eig: hess_eig });
    }
    if found.is_empty() {
        return Err(GeomError::Numerical(format!("no critical point found ({unconverged} starts unconverged)")));
    }
    found.sort_by(|a, b| a.theta.partial_cmp(&b.theta).unwrap());
    Ok(found)
}

/// Smallest absolute eigenvalue of the Riemannian Hessian at a critical point,
/// from second differences along geodesics.
fn morse_hessian_min_eig(th: f64, x: &[f64], y: &[f64], k: usize) -> f64 {
    let bx = if k == 0 { Vec::new() } else { sphere_tangent(x) };
    let by = sphere_tangent(y);
    let n = 1 + bx.len() + by.len();
    let geo = |v: &[f64], b: &[f64], s: f64| -> Vec<f64> { v.iter().zip(b).map(|(a, c)| a * s.cos() + c * s.sin()).collect() };
    let f_at = |d: &[f64]| -> f64 {
        let mut xx = x.to_vec();
        let mut vx = vec![0.0; x.len()];
        for (j, b) in bx.iter().enumerate() {
            vx.iter_mut().zip(b).for_each(|(a, c)| *a += d[1 + j] * c);
        }
        let nx = norm(&vx);
        if nx > 0.0 {
            xx = geo(x, &vx.iter().map(|a| a / nx).collect::<Vec<_>>(), nx);
        }
        let mut vy = vec![0.0; y.len()];
        for (j, b) in by.iter().enumerate() {
            vy.iter_mut().zip(b).for_each(|(a, c)| *a += d[1 + bx.len() + j] * c);
        }
        let ny = norm(&vy);
        let yy = if ny > 0.0 { geo(y, &vy.iter().map(|a| a / ny).collect::<Vec<_>>(), ny) } else { y.to_vec() };
        morse_f(th + d[0], &xx, &yy)
    };
    let h = 1e-4;
    let hess = DMatrix::from_fn(n, n, |r, c| {
        let mut d = vec![0.0; n];
        let mut val = 0.0;
        for (sr, sc, w) in [(1.0, 1.0, 1.0), (1.0, -1.0, -1.0), (-1.0, 1.0, -1.0), (-1.0, -1.0, 1.0)] {
            d.iter_mut().for_each(|v| *v = 0.0);
            d[r] += sr * h;
            d[c] += sc * h;
            val += w * f_at(&d);
        }
        val / (4.0 * h * h)
    });
    let eig = nalgebra::SymmetricEigen::new(hess);
    eig.eigenvalues.iter().fold(f64::INFINITY, |m, v| m.min(v.abs()))
}

/// Closed-form critical angles: roots of `10 cos 2 theta = s sin theta` for
/// `s = x_1 + y_1`, by sign-change scan and bisection.
pub fn morse_critical_angles(s: f64) -> Vec<f64> {
    let g = |t: f64| 10.0 * (2.0 * t).cos() - s * t.sin();
    let n = 20000;
    let mut roots = Vec::new();
    for i in 0..n {
        let (mut a, mut b) = (TAU * i as f64 / n as f64, TAU * (i + 1) as f64 / n as f64);
        if g(a) == 0.0 {
            roots.push(a);
            continue;
        }
        if g(a) * g(b) < 0.0 {
            for _ in 0..100 {
                let c = 0.5 * (a + b);
                if g(a) * g(c) <= 0.0 {
                    b = c;
                } else {
                    a = c;
                }
            }
            roots.push(0.5 * (a + b));
        }
    }
    roots
}

/// Plane-model helper: `C_{0,1}`-type level curve `h(sqrt(1 - alpha) e^{i phi})`.
pub fn level_curve_point(alpha: f64, phi: f64) -> [f64; 2] {
    let r = (1.0 - alpha).sqrt();
    let w = h_plane(&[r * phi.cos(), r * phi.sin()]);
    [w[0], w[1]]
}

/// Residual of `|w^2 + 2 - |w|^2|^2 = 4(1 - alpha^2)` at `w`.
pub fn level_curve_residual(alpha: f64, w: [f64; 2]) -> f64 {
    let z = C64::new(w[0], w[1]);
    (z * z + 2.0 - z.norm_sqr()).norm_sqr() - 4.0 * (1.0 - alpha * alpha)
}

/// Convert a point of the quadric family to interleaved reals.
pub fn c_to_flat(z: &[C64]) -> Vec<f64> {
    from_complex(z)
}

pub fn flat_to_c(x: &[f64]) -> Vec<C64> {
    to_complex(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_prime_round_trip() {
        for (u, v) in [(0.3, 0.4), (-0.5, 0.1), (0.0, -0.9), (0.7, -0.7)] {
            let w = omega_prime_to_round([u, v]);
            let z = round_to_omega_prime(w);
            assert!((z[0] - u).abs() < 1e-12 && (z[1] - v).abs() < 1e-12);
        }
    }

    #[test]
    fn minimal_maslov_examples() {
        assert_eq!(minimal_maslov(&p_half_generators(1, 2), true), 3);
        assert_eq!(minimal_maslov(&p_half_generators(0, 2), false), 4);
    }
}
