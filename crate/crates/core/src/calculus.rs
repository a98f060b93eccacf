//! Charts, smooth maps, differential forms, pullbacks, Lie brackets and
//! quadrature.

use crate::error::{GeomError, Result};
use crate::geomcore::{axpy, cnorm2, cross, dot, herm, norm, scale, to_complex, C64};
use crate::tolerances::FD_STEP;
use nalgebra::{DMatrix, SymmetricEigen};
use std::f64::consts::{PI, TAU};
use std::sync::Arc;

pub type VecFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;
pub type JacFn = Arc<dyn Fn(&[f64]) -> DMatrix<f64> + Send + Sync>;
pub type TwoFormFn = Arc<dyn Fn(&[f64], &[f64], &[f64]) -> f64 + Send + Sync>;
pub type OneFormFn = Arc<dyn Fn(&[f64], &[f64]) -> f64 + Send + Sync>;

/// A submanifold of R^N cut out by constraint functions.
#[derive(Clone)]
pub struct Chart {
    pub name: String,
    pub ambient_dim: usize,
    constraints: Option<VecFn>,
}

impl Chart {
    pub fn flat(name: &str, dim: usize) -> Self {
        Chart { name: name.into(), ambient_dim: dim, constraints: None }
    }

    pub fn cut_out(name: &str, dim: usize, g: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static) -> Self {
        Chart { name: name.into(), ambient_dim: dim, constraints: Some(Arc::new(g)) }
    }

    pub fn constraints(&self, x: &[f64]) -> Vec<f64> {
        self.constraints.as_ref().map(|g| g(x)).unwrap_or_default()
    }

    pub fn residual(&self, x: &[f64]) -> f64 {
        self.constraints(x).iter().fold(0.0, |m, r| m.max(r.abs()))
    }

    /// Orthonormal basis of the tangent space at `x`: the kernel of the
    /// constraint Jacobian.
    pub fn tangent_basis(&self, x: &[f64]) -> Vec<Vec<f64>> {
        let n = self.ambient_dim;
        let Some(g) = &self.constraints else {
            return (0..n).map(|i| unit(n, i)).collect();
        };
        let j = fd_jacobian_of(g.as_ref(), x, 1e-6);
        if j.nrows() == 0 {
            return (0..n).map(|i| unit(n, i)).collect();
        }
        kernel_basis(&j)
    }
}

pub fn unit(n: usize, i: usize) -> Vec<f64> {
    let mut e = vec![0.0; n];
    e[i] = 1.0;
    e
}

/// Orthonormal basis of `ker J`, from the small eigenvalues of `J^T J`.
pub fn kernel_basis(j: &DMatrix<f64>) -> Vec<Vec<f64>> {
    let jtj = j.transpose() * j;
    let eig = SymmetricEigen::new(jtj);
    let top = eig.eigenvalues.iter().fold(0.0_f64, |m, v| m.max(v.abs())).max(1.0);
    (0..eig.eigenvalues.len())
        .filter(|&i| eig.eigenvalues[i].abs() < 1e-12 * top)
        .map(|i| eig.eigenvectors.column(i).iter().copied().collect())
        .collect()
}

/// Central-difference Jacobian of `f` at `x` with absolute step `h`.
pub fn fd_jacobian_of(f: &(dyn Fn(&[f64]) -> Vec<f64> + Send + Sync), x: &[f64], h: f64) -> DMatrix<f64> {
    let n = x.len();
    let m = f(x).len();
    let mut jac = DMatrix::zeros(m, n);
    let mut xp = x.to_vec();
    for i in 0..n {
        xp[i] = x[i] + h;
        let fp = f(&xp);
        xp[i] = x[i] - h;
        let fm = f(&xp);
        xp[i] = x[i];
        for r in 0..m {
            jac[(r, i)] = (fp[r] - fm[r]) / (2.0 * h);
        }
    }
    jac
}

/// Directional central difference `Df(x) v`, with step relative to `|x|`.
pub fn fd_push(f: &(dyn Fn(&[f64]) -> Vec<f64> + Send + Sync), x: &[f64], v: &[f64]) -> Vec<f64> {
    let nv = norm(v);
    if nv == 0.0 {
        return vec![0.0; f(x).len()];
    }
    let h = FD_STEP * norm(x).max(1.0) / nv;
    let fp = f(&axpy(x, h, v));
    let fm = f(&axpy(x, -h, v));
    fp.iter().zip(&fm).map(|(a, b)| (a - b) / (2.0 * h)).collect()
}

#[derive(Clone)]
pub struct SmoothMap {
    pub name: String,
    pub domain: Chart,
    pub codomain: Chart,
    f: VecFn,
    jac: Option<JacFn>,
}

impl SmoothMap {
    pub fn new(
        name: &str,
        domain: Chart,
        codomain: Chart,
        f: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        SmoothMap { name: name.into(), domain, codomain, f: Arc::new(f), jac: None }
    }

    pub fn with_jacobian(mut self, j: impl Fn(&[f64]) -> DMatrix<f64> + Send + Sync + 'static) -> Self {
        self.jac = Some(Arc::new(j));
        self
    }

    pub fn has_analytic_jacobian(&self) -> bool {
        self.jac.is_some()
    }

    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        (self.f)(x)
    }

    /// Evaluate after checking that `x` lies on the domain.
    pub fn checked_eval(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_base(x)?;
        Ok(self.eval(x))
    }

    fn check_base(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.domain.ambient_dim {
            return Err(GeomError::Dimension { expected: self.domain.ambient_dim, got: x.len() });
        }
        let r = self.domain.residual(x);
        if r > 1e-8 {
            return Err(GeomError::Domain { map: self.name.clone(), detail: format!("base residual {r:e}") });
        }
        Ok(())
    }

    pub fn fd_jacobian(&self, x: &[f64]) -> DMatrix<f64> {
        let h = FD_STEP * norm(x).max(1.0);
        fd_jacobian_of(self.f.as_ref(), x, h)
    }

    /// Jacobian at a base point on the domain; analytic when available.
    pub fn jacobian(&self, x: &[f64]) -> Result<DMatrix<f64>> {
        self.check_base(x)?;
        Ok(match &self.jac {
            Some(j) => j(x),
            None => self.fd_jacobian(x),
        })
    }

    /// Pushforward of a tangent vector.
    pub fn push(&self, x: &[f64], v: &[f64]) -> Vec<f64> {
        match &self.jac {
            Some(j) => {
                let out = j(x) * nalgebra::DVector::from_column_slice(v);
                out.as_slice().to_vec()
            }
            None => fd_push(self.f.as_ref(), x, v),
        }
    }

    pub fn push_fd(&self, x: &[f64], v: &[f64]) -> Vec<f64> {
        fd_push(self.f.as_ref(), x, v)
    }

    /// `other` after `self`.
    pub fn then(&self, other: &SmoothMap) -> SmoothMap {
        let a = self.f.clone();
        let b = other.f.clone();
        SmoothMap::new(
            &format!("{}.{}", other.name, self.name),
            self.domain.clone(),
            other.codomain.clone(),
            move |x| b(&a(x)),
        )
    }
}

#[derive(Clone)]
pub struct TwoForm {
    pub name: String,
    f: TwoFormFn,
}

impl TwoForm {
    pub fn new(name: &str, f: impl Fn(&[f64], &[f64], &[f64]) -> f64 + Send + Sync + 'static) -> Self {
        TwoForm { name: name.into(), f: Arc::new(f) }
    }

    pub fn eval(&self, x: &[f64], a: &[f64], b: &[f64]) -> f64 {
        (self.f)(x, a, b)
    }

    pub fn scaled(&self, c: f64) -> TwoForm {
        let f = self.f.clone();
        TwoForm::new(&format!("{c}*{}", self.name), move |x, a, b| c * f(x, a, b))
    }
}

#[derive(Clone)]
pub struct OneForm {
    pub name: String,
    f: OneFormFn,
}

impl OneForm {
    pub fn new(name: &str, f: impl Fn(&[f64], &[f64]) -> f64 + Send + Sync + 'static) -> Self {
        OneForm { name: name.into(), f: Arc::new(f) }
    }

    pub fn eval(&self, x: &[f64], a: &[f64]) -> f64 {
        (self.f)(x, a)
    }
}

/// `sum dx_j ^ dy_j` on interleaved coordinates `(x_0, y_0, x_1, y_1, ...)`.
pub fn omega_std() -> TwoForm {
    TwoForm::new("omega_std", |_, a, b| {
        a.chunks(2).zip(b.chunks(2)).map(|(u, v)| u[0] * v[1] - u[1] * v[0]).sum()
    })
}

/// `sum x_j dy_j` on interleaved coordinates.
pub fn alpha_form() -> OneForm {
    OneForm::new("alpha", |x, a| x.chunks(2).zip(a.chunks(2)).map(|(p, v)| p[0] * v[1]).sum())
}

/// `1/2 sum (x dy - y dx)` on interleaved coordinates.
pub fn half_liouville() -> OneForm {
    OneForm::new("half_liouville", |x, a| {
        0.5 * x.chunks(2).zip(a.chunks(2)).map(|(p, v)| p[0] * v[1] - p[1] * v[0]).sum::<f64>()
    })
}

/// Canonical one-form `p . dq` on `(p, q)`.
pub fn lambda_form() -> OneForm {
    OneForm::new("lambda", |x, a| {
        let n = x.len() / 2;
        dot(&x[..n], &a[n..])
    })
}

/// `d lambda = dp ^ dq` on `(p, q)`.
pub fn d_lambda() -> TwoForm {
    TwoForm::new("dlambda", |_, a, b| {
        let n = a.len() / 2;
        dot(&a[..n], &b[n..]) - dot(&b[..n], &a[n..])
    })
}

/// `c * x . (a x b)` on the unit sphere in R^3.
pub fn omega_sphere(c: f64) -> TwoForm {
    TwoForm::new("omega_S2", move |x, a, b| c * dot(x, &cross(a, b)))
}

/// `c * omega_std + c * omega_std` on `S^2 x S^2` in R^6.
pub fn omega_sphere_pair(c: f64) -> TwoForm {
    TwoForm::new("omega_S2xS2", move |x, a, b| {
        c * (dot(&x[..3], &cross(&a[..3], &b[..3])) + dot(&x[3..], &cross(&a[3..], &b[3..])))
    })
}

/// Fubini-Study form of `CP^n(sqrt 2)` evaluated on any representative.
pub fn fs_form() -> TwoForm {
    TwoForm::new("omega_FS", |x, a, b| {
        let z = to_complex(x);
        let av = to_complex(a);
        let bv = to_complex(b);
        let n2 = cnorm2(&z);
        let ah = horizontal(&z, &av, n2);
        let bh = horizontal(&z, &bv, n2);
        2.0 / n2 * herm(&ah, &bh).im
    })
}

fn horizontal(z: &[C64], v: &[C64], n2: f64) -> Vec<C64> {
    let c = herm(z, v) / n2;
    v.iter().zip(z).map(|(vi, zi)| vi - c * zi).collect()
}

/// `du ^ dv / (1 - v^2)` on the unit disk.
pub fn omega_prime_disk() -> TwoForm {
    TwoForm::new("omega_prime", |x, a, b| (a[0] * b[1] - a[1] * b[0]) / (1.0 - x[1] * x[1]))
}

/// `d eta` on the complement of the zero section in `T S^2`, points `(x, y)`,
/// with `eta = (1/2 - 1/|y|^2) (x cross y) . dy`.
pub fn d_eta() -> TwoForm {
    TwoForm::new("d_eta", |x, a, b| {
        let (p, y) = (&x[..3], &x[3..]);
        let y2 = dot(y, y);
        let g = 0.5 - 1.0 / y2;
        let c_dir = |v: &[f64]| -> [f64; 3] {
            let (va, vb) = (&v[..3], &v[3..]);
            let dg = 2.0 * dot(y, vb) / (y2 * y2);
            let xy = cross(p, y);
            let t1 = cross(va, y);
            let t2 = cross(p, vb);
            [
                dg * xy[0] + g * (t1[0] + t2[0]),
                dg * xy[1] + g * (t1[1] + t2[1]),
                dg * xy[2] + g * (t1[2] + t2[2]),
            ]
        };
        dot(&c_dir(a), &b[3..]) - dot(&c_dir(b), &a[3..])
    })
}

/// Form on a lift `P x D`, points `(w, zeta)` with `w = u + i v` interleaved,
/// equal to `d(h(|zeta|^2) theta) + omega_std(zeta)` where
/// `theta = sum (v du - u dv)`.
pub fn bundle_lift_form(h: fn(f64) -> f64, dh: fn(f64) -> f64) -> TwoForm {
    TwoForm::new("bundle_lift", move |x, a, b| {
        let n = x.len() - 2;
        let (w, z) = (&x[..n], &x[n..]);
        let s = dot(z, z);
        let theta = |t: &[f64]| -> f64 {
            w.chunks(2).zip(t[..n].chunks(2)).map(|(uv, d)| uv[1] * d[0] - uv[0] * d[1]).sum()
        };
        let dtheta: f64 = -2.0
            * a[..n]
                .chunks(2)
                .zip(b[..n].chunks(2))
                .map(|(p, q)| p[0] * q[1] - q[0] * p[1])
                .sum::<f64>();
        let dha = dh(s) * 2.0 * dot(z, &a[n..]);
        let dhb = dh(s) * 2.0 * dot(z, &b[n..]);
        let wedge = dha * theta(b) - dhb * theta(a);
        let omz = a[n] * b[n + 1] - a[n + 1] * b[n];
        wedge + h(s) * dtheta + omz
    })
}

pub fn pullback_two_form(map: &SmoothMap, form: &TwoForm, x: &[f64], v: &[f64], w: &[f64]) -> f64 {
    form.eval(&map.eval(x), &map.push(x, v), &map.push(x, w))
}

pub fn pullback_one_form(map: &SmoothMap, form: &OneForm, x: &[f64], v: &[f64]) -> f64 {
    form.eval(&map.eval(x), &map.push(x, v))
}

/// `[X, Y] = DY X - DX Y` at `x`, so that `[X, Y] f = X(Y f) - Y(X f)`.
pub fn lie_bracket(
    xf: &(dyn Fn(&[f64]) -> Vec<f64> + Send + Sync),
    yf: &(dyn Fn(&[f64]) -> Vec<f64> + Send + Sync),
    x: &[f64],
) -> Vec<f64> {
    let xv = xf(x);
    let yv = yf(x);
    let dy_x = fd_push(yf, x, &xv);
    let dx_y = fd_push(xf, x, &yv);
    dy_x.iter().zip(&dx_y).map(|(a, b)| a - b).collect()
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pn1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pn1) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        xs[i] = -x;
        xs[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        ws[i] = w;
        ws[n - 1 - i] = w;
    }
    (xs, ws)
}

/// Integral with an error estimate from the half-resolution rule.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
}

fn tensor_gl(
    n: usize,
    (a, b): (f64, f64),
    (c, d): (f64, f64),
    f: &(dyn Fn(f64, f64) -> f64 + Sync),
) -> f64 {
    let (xs, ws) = gauss_legendre(n);
    let mut total = 0.0;
    for (xi, wi) in xs.iter().zip(&ws) {
        let s = 0.5 * (b - a) * xi + 0.5 * (a + b);
        for (yj, wj) in xs.iter().zip(&ws) {
            let t = 0.5 * (d - c) * yj + 0.5 * (c + d);
            total += wi * wj * f(s, t);
        }
    }
    total * 0.25 * (b - a) * (d - c)
}

/// Integral of a two-form over a parametrized rectangle `[a,b] x [c,d]`,
/// oriented by `(d/ds, d/dt)`.
pub fn rect_integral(
    param: &(dyn Fn(&[f64]) -> Vec<f64> + Send + Sync),
    form: &TwoForm,
    s_range: (f64, f64),
    t_range: (f64, f64),
    n: usize,
) -> Quadrature {
    let integrand = |s: f64, t: f64| {
        let x = [s, t];
        let u = param(&x);
        let ds = fd_push(param, &x, &[1.0, 0.0]);
        let dt = fd_push(param, &x, &[0.0, 1.0]);
        form.eval(&u, &ds, &dt)
    };
    let hi = tensor_gl(n, s_range, t_range, &integrand);
    let lo = tensor_gl(n / 2, s_range, t_range, &integrand);
    Quadrature { value: hi, error: (hi - lo).abs() }
}

/// Integral of a two-form over a map of the closed unit disk, in polar
/// coordinates with the standard orientation.
pub fn disk_integral(
    param: &(dyn Fn(&[f64]) -> Vec<f64> + Send + Sync),
    form: &TwoForm,
    n: usize,
) -> Quadrature {
    let integrand = |s: f64, th: f64| {
        let (sn, cs) = th.sin_cos();
        let x = [s * cs, s * sn];
        let u = param(&x);
        let ds = fd_push(param, &x, &[cs, sn]);
        let dth = fd_push(param, &x, &[-sn, cs]);
        s * form.eval(&u, &ds, &dth)
    };
    let hi = tensor_gl(n, (0.0, 1.0), (0.0, TAU), &integrand);
    let lo = tensor_gl(n / 2, (0.0, 1.0), (0.0, TAU), &integrand);
    Quadrature { value: hi, error: (hi - lo).abs() }
}

/// Signed integral of a primitive one-form around a closed curve
/// `t in [0, 2 pi)`, by the periodic trapezoid rule. The derivative is a
/// fourth-order central difference.
pub fn loop_integral(curve: &dyn Fn(f64) -> [f64; 2], primitive: &dyn Fn([f64; 2], [f64; 2]) -> f64, n: usize) -> f64 {
    let h = 1e-3;
    let dt = TAU / n as f64;
    (0..n)
        .map(|i| {
            let t = i as f64 * dt;
            let p = curve(t);
            let f = |s: f64| curve(t + s);
            let (a, b, c, d) = (f(-2.0 * h), f(-h), f(h), f(2.0 * h));
            let dv = [
                (a[0] - 8.0 * b[0] + 8.0 * c[0] - d[0]) / (12.0 * h),
                (a[1] - 8.0 * b[1] + 8.0 * c[1] - d[1]) / (12.0 * h),
            ];
            primitive(p, dv)
        })
        .sum::<f64>()
        * dt
}

/// Primitive `1/2 (x dy - y dx)` of the standard area form.
pub fn std_primitive(p: [f64; 2], v: [f64; 2]) -> f64 {
    0.5 * (p[0] * v[1] - p[1] * v[0])
}

/// Primitive `-artanh(v) du` of `du ^ dv / (1 - v^2)`.
pub fn omega_prime_primitive(p: [f64; 2], v: [f64; 2]) -> f64 {
    -p[1].atanh() * v[0]
}

/// Enclosed area of a simple closed planar curve for a form with the given
/// primitive. Positive for either orientation.
pub fn planar_area(curve: &dyn Fn(f64) -> [f64; 2], primitive: &dyn Fn([f64; 2], [f64; 2]) -> f64) -> Quadrature {
    let hi = loop_integral(curve, primitive, 4096);
    let lo = loop_integral(curve, primitive, 2048);
    Quadrature { value: hi.abs(), error: (hi - lo).abs() }
}

fn segments_cross(p1: [f64; 2], p2: [f64; 2], q1: [f64; 2], q2: [f64; 2]) -> bool {
    let orient = |a: [f64; 2], b: [f64; 2], c: [f64; 2]| (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// True when the closed polygon has no crossing between non-adjacent edges.
pub fn polygon_is_simple(pts: &[[f64; 2]]) -> bool {
    let n = pts.len();
    for i in 0..n {
        let (a, b) = (pts[i], pts[(i + 1) % n]);
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if segments_cross(a, b, pts[j], pts[(j + 1) % n]) {
                return false;
            }
        }
    }
    true
}

/// Closed planar curve stored as a trigonometric polynomial.
#[derive(Debug, Clone)]
pub struct TrigCurve {
    /// `(a_k, b_k)` cosine and sine coefficients per coordinate, `k = 0..=degree`.
    pub coeffs: [Vec<(f64, f64)>; 2],
}

impl TrigCurve {
    /// Least-squares fit from `n` equispaced samples (exact for `degree < n/2`).
    pub fn fit(curve: &dyn Fn(f64) -> [f64; 2], degree: usize, n: usize) -> Self {
        let pts: Vec<[f64; 2]> = (0..n).map(|i| curve(TAU * i as f64 / n as f64)).collect();
        let coord = |c: usize| -> Vec<(f64, f64)> {
            (0..=degree)
                .map(|k| {
                    let (mut a, mut b) = (0.0, 0.0);
                    for (i, p) in pts.iter().enumerate() {
                        let t = TAU * i as f64 / n as f64;
                        a += p[c] * (k as f64 * t).cos();
                        b += p[c] * (k as f64 * t).sin();
                    }
                    let s = if k == 0 { 1.0 } else { 2.0 } / n as f64;
                    (a * s, b * s)
                })
                .collect()
        };
        TrigCurve { coeffs: [coord(0), coord(1)] }
    }

    pub fn eval(&self, t: f64) -> [f64; 2] {
        let f = |c: &[(f64, f64)]| c.iter().enumerate().map(|(k, (a, b))| a * (k as f64 * t).cos() + b * (k as f64 * t).sin()).sum();
        [f(&self.coeffs[0]), f(&self.coeffs[1])]
    }

    pub fn derivative(&self, t: f64) -> [f64; 2] {
        let f = |c: &[(f64, f64)]| {
            c.iter()
                .enumerate()
                .map(|(k, (a, b))| {
                    let k = k as f64;
                    k * (b * (k * t).cos() - a * (k * t).sin())
                })
                .sum()
        };
        [f(&self.coeffs[0]), f(&self.coeffs[1])]
    }
}

/// Linear combination of basis vectors.
pub fn combine(basis: &[Vec<f64>], coeffs: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; basis[0].len()];
    for (b, c) in basis.iter().zip(coeffs) {
        out = axpy(&out, *c, b);
    }
    out
}

pub fn rescale(v: &[f64], len: f64) -> Vec<f64> {
    scale(len / norm(v), v)
}
