//! Parametrized Lagrangians and curves with independent residual functions,
//! set equality by two-sided sampling, and isotropy checks.

use crate::atlas::{
    chart_proj, chart_quadric, chart_sphere_pair, curve_c, gamma_prime, geodesic_flow, h_plane, im_outer, iota,
    join_uv, mu_q, phi2, phi2_inv, phi_c, psi_disk, psi_disk_inv, psi_p_lift, psi_proj, psi_proj_inv, psi_quadric,
    q2_map, rho_cs, rho_ep, so_norm, split_uv, theta_delta, theta_delta_inv, theta_p_inv, theta_p_lift, theta_q_inv,
    theta_q_lift, diagonal_blocks_residual, normalize_rep,
};
use crate::calculus::{fs_form, omega_sphere_pair, Chart, TwoForm, VecFn};
use crate::error::{GeomError, Result};
use crate::geomcore::{
    cnorm2, cross, csum_sq, dot, from_complex, norm, rot_e1, sample_sphere, stream_rng, to_complex, C64, SQRT2,
};
use crate::par::par_map;
use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;
use std::sync::Arc;

pub type ScalarFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Factor {
    /// An angle in `[0, 2 pi)`.
    Circle,
    /// The unit sphere `S^k` in R^{k+1}; `S^0 = {+1, -1}`.
    Sphere(usize),
}

impl Factor {
    fn coords(&self) -> usize {
        match self {
            Factor::Circle => 1,
            Factor::Sphere(k) => k + 1,
        }
    }

    fn dim(&self) -> usize {
        match self {
            Factor::Circle => 1,
            Factor::Sphere(k) => *k,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParamSpace(pub Vec<Factor>);

impl ParamSpace {
    pub fn dim(&self) -> usize {
        self.0.iter().map(Factor::dim).sum()
    }

    pub fn coords(&self) -> usize {
        self.0.iter().map(Factor::coords).sum()
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.coords());
        for f in &self.0 {
            match f {
                Factor::Circle => out.push(rng.random_range(0.0..TAU)),
                Factor::Sphere(0) => out.push(if rng.random::<bool>() { 1.0 } else { -1.0 }),
                Factor::Sphere(k) => out.extend(sample_sphere(*k, rng)),
            }
        }
        out
    }

    /// Orthonormal tangent vectors at `x`, in parameter coordinates.
    pub fn tangent_basis(&self, x: &[f64]) -> Vec<Vec<f64>> {
        let n = self.coords();
        let mut out = Vec::new();
        let mut off = 0;
        for f in &self.0 {
            match f {
                Factor::Circle => {
                    let mut e = vec![0.0; n];
                    e[off] = 1.0;
                    out.push(e);
                }
                Factor::Sphere(k) => {
                    let s = &x[off..off + k + 1];
                    for b in sphere_tangent(s) {
                        let mut e = vec![0.0; n];
                        e[off..off + k + 1].copy_from_slice(&b);
                        out.push(e);
                    }
                }
            }
            off += f.coords();
        }
        out
    }
}

/// Orthonormal basis of `s^perp` in R^{k+1}.
pub fn sphere_tangent(s: &[f64]) -> Vec<Vec<f64>> {
    let n = s.len();
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        let mut v: Vec<f64> = e.iter().zip(s).map(|(a, b)| a - s[i] * b).collect();
        for b in &basis {
            let c = dot(&v, b);
            v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
        }
        let nv = norm(&v);
        if nv > 1e-6 && basis.len() < n - 1 {
            basis.push(v.iter().map(|x| x / nv).collect());
        }
    }
    basis
}

/// A submanifold given by a parametrization and by residual functions that
/// vanish exactly on it.
#[derive(Clone)]
pub struct LagrangianSpec {
    pub id: String,
    pub description: String,
    pub ambient: Chart,
    pub params: ParamSpace,
    pub param: VecFn,
    pub residuals: Vec<(String, ScalarFn)>,
}

impl LagrangianSpec {
    pub fn new(
        id: &str,
        description: &str,
        ambient: Chart,
        params: ParamSpace,
        param: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        LagrangianSpec {
            id: id.into(),
            description: description.into(),
            ambient,
            params,
            param: Arc::new(param),
            residuals: Vec::new(),
        }
    }

    pub fn residual(mut self, name: &str, f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> Self {
        self.residuals.push((name.into(), Arc::new(f)));
        self
    }

    pub fn dim(&self) -> usize {
        self.params.dim()
    }

    pub fn eval(&self, t: &[f64]) -> Vec<f64> {
        (self.param)(t)
    }

    /// Max of the ambient constraint residual and the set's own residuals.
    pub fn membership(&self, x: &[f64]) -> f64 {
        self.residuals
            .iter()
            .map(|(_, f)| f(x).abs())
            .fold(self.ambient.residual(x), |m, r| if r.is_nan() { f64::INFINITY } else { m.max(r) })
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        self.eval(&self.params.sample(rng))
    }

    /// Same parametrization pushed through `map`, with new residuals to be attached.
    pub fn mapped(&self, id: &str, ambient: Chart, map: VecFn) -> LagrangianSpec {
        let p = self.param.clone();
        LagrangianSpec {
            id: id.into(),
            description: format!("image of {}", self.id),
            ambient,
            params: self.params.clone(),
            param: Arc::new(move |t| map(&p(t))),
            residuals: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct SetEqualReport {
    /// Max residual of `B` on samples of `A`.
    pub a_in_b: f64,
    /// Max residual of `A` on samples of `B`.
    pub b_in_a: f64,
    pub samples: usize,
}

impl SetEqualReport {
    pub fn max(&self) -> f64 {
        self.a_in_b.max(self.b_in_a)
    }
}

/// Two-sided sampled set equality.
pub fn set_equal(a: &LagrangianSpec, b: &LagrangianSpec, n: usize, seed: u64, parallel: bool) -> SetEqualReport {
    let side = |from: &LagrangianSpec, to: &LagrangianSpec| -> f64 {
        let tag = format!("{}->{}", from.id, to.id);
        par_map(n, parallel, |i| {
            let mut rng = stream_rng(seed, &tag, i as u64);
            to.membership(&from.sample(&mut rng))
        })
        .into_iter()
        .fold(0.0, f64::max)
    };
    SetEqualReport { a_in_b: side(a, b), b_in_a: side(b, a), samples: n }
}

/// Set equality of `map(A)` and `B`: samples of `A` pushed forward must lie
/// on `B`, and samples of `B` pulled back by `inverse` must lie on `A`.
pub fn mapped_equal(
    map: VecFn,
    inverse: VecFn,
    a: &LagrangianSpec,
    b: &LagrangianSpec,
    n: usize,
    seed: u64,
    parallel: bool,
) -> SetEqualReport {
    let fwd_tag = format!("{}=>{}", a.id, b.id);
    let bwd_tag = format!("{}<={}", a.id, b.id);
    let a_in_b = par_map(n, parallel, |i| {
        let mut rng = stream_rng(seed, &fwd_tag, i as u64);
        b.membership(&map(&a.sample(&mut rng)))
    })
    .into_iter()
    .fold(0.0, f64::max);
    let b_in_a = par_map(n, parallel, |i| {
        let mut rng = stream_rng(seed, &bwd_tag, i as u64);
        a.membership(&inverse(&b.sample(&mut rng)))
    })
    .into_iter()
    .fold(0.0, f64::max);
    SetEqualReport { a_in_b, b_in_a, samples: n }
}

fn is_projective(c: &Chart) -> bool {
    c.name.starts_with("CP") || c.name.starts_with('Q')
}

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct IsotropyReport {
    pub max_form: f64,
    pub min_singular: f64,
    pub dim: usize,
}

/// Max `|omega(v_i, v_j)|` over tangent frames of sampled points, and the
/// smallest singular value of the frames (immersion check).
pub fn lagrangian_check(spec: &LagrangianSpec, form: &TwoForm, n: usize, seed: u64, parallel: bool) -> IsotropyReport {
    let res = par_map(n, parallel, |i| {
        let mut rng = stream_rng(seed, &format!("iso:{}", spec.id), i as u64);
        let t = spec.params.sample(&mut rng);
        let x = spec.eval(&t);
        let vs: Vec<Vec<f64>> = spec
            .params
            .tangent_basis(&t)
            .iter()
            .map(|b| crate::calculus::fd_push(spec.param.as_ref(), &t, b))
            .collect();
        let mut m: f64 = 0.0;
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                m = m.max(form.eval(&x, &vs[a], &vs[b]).abs());
            }
        }
        let sv = if vs.is_empty() {
            0.0
        } else {
            let mat = DMatrix::from_fn(vs[0].len(), vs.len(), |r, c| vs[c][r]);
            let mut mat = mat;
            if is_projective(&spec.ambient) {
                // remove the complex line of x so that only the projective part counts
                let xc = to_complex(&x);
                for c in 0..mat.ncols() {
                    let col: Vec<f64> = mat.column(c).iter().copied().collect();
                    let vc = to_complex(&col);
                    let h = crate::geomcore::herm(&xc, &vc) / cnorm2(&xc);
                    let hor = from_complex(&vc.iter().zip(&xc).map(|(v, z)| v - h * z).collect::<Vec<_>>());
                    mat.column_mut(c).copy_from_slice(&hor);
                }
            }
            mat.singular_values().min()
        };
        (m, sv)
    });
    let max_form = res.iter().map(|r| r.0).fold(0.0, f64::max);
    let min_singular = res.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
    IsotropyReport { max_form, min_singular, dim: spec.dim() }
}

/// The orbit of a curve under a circle action: `(s, t) -> act(t, c(s))`.
pub fn orbit_spec(
    id: &str,
    ambient: Chart,
    curve: impl Fn(f64) -> Vec<f64> + Send + Sync + 'static,
    act: impl Fn(f64, &[f64]) -> Vec<f64> + Send + Sync + 'static,
) -> LagrangianSpec {
    LagrangianSpec::new(id, "orbit of a curve under a circle action", ambient, ParamSpace(vec![Factor::Circle, Factor::Circle]), move |t| {
        act(t[1], &curve(t[0]))
    })
}

fn sphere_residuals(spec: LagrangianSpec) -> LagrangianSpec {
    spec.residual("|v|-1", |x| norm(&x[..3]) - 1.0).residual("|w|-1", |x| norm(&x[3..]) - 1.0)
}

/// `T_EP`: the orbit of `C` under rotation of both factors about `e_1`.
pub fn t_ep() -> LagrangianSpec {
    let s = orbit_spec("T_EP", chart_sphere_pair(), curve_c, rho_ep)
        .residual("(v+w).e1", |x| x[0] + x[3])
        .residual("v.w+1/2", |x| dot(&x[..3], &x[3..]) + 0.5);
    sphere_residuals(s)
}

/// Product of the great circles `{v_1 = 0}` and `{w_1 = 0}`.
pub fn clifford() -> LagrangianSpec {
    let s = LagrangianSpec::new("Clifford", "product of equators", chart_sphere_pair(), ParamSpace(vec![Factor::Circle, Factor::Circle]), |t| {
        vec![0.0, t[0].cos(), t[0].sin(), 0.0, t[1].cos(), t[1].sin()]
    })
    .residual("v1", |x| x[0])
    .residual("w1", |x| x[3]);
    sphere_residuals(s)
}

/// `T_AF = Phi_2^{-1}{|p| = 1/2, (p x q).e_1 = 0}`.
pub fn t_af() -> LagrangianSpec {
    let s = LagrangianSpec::new("T_AF", "preimage of the level torus of |p| and the e1 angular momentum", chart_sphere_pair(), ParamSpace(vec![Factor::Circle, Factor::Circle]), |t| {
        let pq = geodesic_flow(t[0], &[0.5, 0.0, 0.0, 0.0, 1.0, 0.0]);
        let p = rot_e1(t[1], &pq[..3]);
        let q = rot_e1(t[1], &pq[3..]);
        phi2_inv(&[p.to_vec(), q.to_vec()].concat())
    })
    .residual("|p|-1/2", |x| norm(&phi2(x)[..3]) - 0.5)
    .residual("(pxq).e1", |x| {
        let pq = phi2(x);
        cross(&pq[..3], &pq[3..])[0]
    });
    sphere_residuals(s)
}

/// The level set `|v+w|/2 + (v+w).e_1/2 = 1/2`, `1/2 - |v+w|/2 = 0`.
pub fn fooo_target() -> LagrangianSpec {
    let s = LagrangianSpec::new("T_FOOO", "level set of the two toric moment functions", chart_sphere_pair(), ParamSpace(vec![Factor::Circle, Factor::Circle]), |t| {
        let sv = [0.0, t[0].cos(), t[0].sin()];
        let e = cross(&sv, &[1.0, 0.0, 0.0]);
        let h = 3f64.sqrt() / 2.0;
        let (sb, cb) = t[1].sin_cos();
        let d: Vec<f64> = (0..3).map(|i| h * (cb * [1.0, 0.0, 0.0][i] + sb * e[i])).collect();
        let v: Vec<f64> = (0..3).map(|i| sv[i] / 2.0 + d[i]).collect();
        let w: Vec<f64> = (0..3).map(|i| sv[i] / 2.0 - d[i]).collect();
        [v, w].concat()
    })
    .residual("F1", |x| {
        let s: Vec<f64> = (0..3).map(|i| x[i] + x[3 + i]).collect();
        0.5 * norm(&s) + 0.5 * s[0] - 0.5
    })
    .residual("F2", |x| {
        let s: Vec<f64> = (0..3).map(|i| x[i] + x[3 + i]).collect();
        0.5 - 0.5 * norm(&s)
    });
    sphere_residuals(s)
}

/// `T_CS = (psi x psi)` of the orbit of `psi^{-1}(Gamma')` under `(e^{it}, e^{-it})`.
pub fn t_cs() -> LagrangianSpec {
    let s = LagrangianSpec::new("T_CS", "anti-diagonal orbit of the pulled-back cap boundary", chart_sphere_pair(), ParamSpace(vec![Factor::Circle, Factor::Circle]), |t| {
        let z = psi_disk_inv(&gamma_prime(t[0]));
        let zc = C64::new(z[0], z[1]);
        let a = zc * C64::from_polar(1.0, t[1]);
        let b = zc * C64::from_polar(1.0, -t[1]);
        [psi_disk(&[a.re, a.im]), psi_disk(&[b.re, b.im])].concat()
    })
    .residual("v1-w1", |x| x[0] - x[3])
    .residual("Re(VW)-(1/2-v1^2)", |x| {
        let vv = C64::new(x[1], x[2]);
        let ww = C64::new(x[4], x[5]);
        (vv * ww).re - (0.5 - x[0] * x[0])
    });
    sphere_residuals(s)
}

/// `T_BC`: the circle-bundle lift of the great circle `{x_1 = 0}` through `Theta_Delta`.
pub fn t_bc() -> LagrangianSpec {
    let s = LagrangianSpec::new("T_BC", "unit circle bundle over a great circle, through Theta_Delta", chart_sphere_pair(), ParamSpace(vec![Factor::Circle, Factor::Circle]), |t| {
        let x = [0.0, t[0].cos(), t[0].sin()];
        let c = cross(&x, &[1.0, 0.0, 0.0]);
        let (sb, cb) = t[1].sin_cos();
        let y: Vec<f64> = (0..3).map(|i| cb * [1.0, 0.0, 0.0][i] + sb * c[i]).collect();
        theta_delta(&[x.to_vec(), y].concat())
    })
    .residual("x1", |x| theta_delta_inv(x)[0])
    .residual("|y|-1", |x| norm(&theta_delta_inv(x)[3..]) - 1.0);
    sphere_residuals(s)
}

/// `Psi^P` of the orbit `iota(S^1 x S^0 x S^1)` at radius 1/3, in `CP^2`.
pub fn l_p01() -> LagrangianSpec {
    LagrangianSpec::new("L^P_{0,1}", "Psi^P image of iota at radius 1/3", chart_proj(2), ParamSpace(vec![Factor::Circle, Factor::Sphere(0), Factor::Sphere(1)]), |t| {
        psi_p_lift(&iota(1.0 / 3.0, t[0], &t[1..2], &t[2..4]))
    })
    .residual("|sum z^2|-4sqrt2/3", |x| csum_sq(&normalize_rep(&to_complex(x))).norm() - 4.0 * SQRT2 / 3.0)
    .residual("Im(z1 z2bar)", |x| im_outer(&from_complex(&normalize_rep(&to_complex(x))))[(1, 2)])
}

/// Point of `C_{0,1}` in the upper half of `D(sqrt 2)`.
pub fn c01_point(phi: f64) -> C64 {
    let r = (2.0f64 / 3.0).sqrt();
    let w = h_plane(&[r * phi.cos(), r * phi.sin()]);
    C64::new(w[0], w[1])
}

/// The level set claimed for the toric degeneration torus in `CP^2`.
pub fn t_w_target() -> LagrangianSpec {
    LagrangianSpec::new("T_W", "rotation orbit of C_P in CP^2", chart_proj(2), ParamSpace(vec![Factor::Circle, Factor::Circle]), |t| {
        let w = c01_point(t[0]);
        let (s, c) = t[1].sin_cos();
        let z0 = (2.0 - w.norm_sqr()).sqrt();
        from_complex(&[C64::new(z0, 0.0), w * c, -w * s])
    })
    .residual("H+G-1/3", |x| {
        let z = normalize_rep(&to_complex(x));
        0.5 * (4.0 - csum_sq(&z).norm_sqr()).sqrt() + (z[1].conj() * z[2]).im - 1.0 / 3.0
    })
    .residual("1/2-H/2-1/3", |x| {
        let z = normalize_rep(&to_complex(x));
        0.5 - 0.25 * (4.0 - csum_sq(&z).norm_sqr()).sqrt() - 1.0 / 3.0
    })
}

/// `psi_P` of the orbit of `C_{0,1}/sqrt 2` under `(e^{it}, e^{-it})`.
pub fn t_cs_p() -> LagrangianSpec {
    LagrangianSpec::new("T_CS^P", "anti-diagonal orbit in B^4(sqrt 2) through psi_P", chart_proj(2), ParamSpace(vec![Factor::Circle, Factor::Circle]), |t| {
        let z = c01_point(t[0]) / SQRT2;
        let a = z * C64::from_polar(1.0, t[1]);
        let b = z * C64::from_polar(1.0, -t[1]);
        psi_proj(&[a.re, a.im, b.re, b.im])
    })
    .residual("|Z1|^2-|Z2|^2", |x| {
        let z = psi_proj_inv(x);
        (z[0] * z[0] + z[1] * z[1]) - (z[2] * z[2] + z[3] * z[3])
    })
    .residual("|Z1Z2+1-|Z1Z2||^2-8/9", |x| {
        let z = to_complex(&psi_proj_inv(x));
        let p = z[0] * z[1];
        (p + 1.0 - p.norm()).norm_sqr() - 8.0 / 9.0
    })
}

/// `(ix, y)` as `u + i v` with `u = (0, y)`, `v = (x, 0)`, interleaved.
pub fn s_km_point(x: &[f64], y: &[f64]) -> Vec<f64> {
    let u: Vec<f64> = x.iter().map(|_| 0.0).chain(y.iter().copied()).collect();
    let v: Vec<f64> = x.iter().copied().chain(y.iter().map(|_| 0.0)).collect();
    join_uv(&u, &v)
}

fn km_params(k: usize, m: usize) -> ParamSpace {
    ParamSpace(vec![Factor::Circle, Factor::Sphere(k), Factor::Sphere(m)])
}

/// Residual of membership of a lift `(u + i v)` in `S_{k,m}`.
fn s_km_residual(w: &[f64], k: usize, m: usize) -> f64 {
    let (u, v) = split_uv(w);
    let ortho = (norm(&u) - 1.0).abs().max((norm(&v) - 1.0).abs()).max(dot(&u, &v).abs());
    ortho.max(diagonal_blocks_residual(&im_outer(w), k, m))
}

pub fn check_km(k: usize, m: usize) -> Result<()> {
    if m < 1 || k > m {
        return Err(GeomError::Parameter(format!("need 0 <= k <= m and m >= 1, got k={k} m={m}")));
    }
    Ok(())
}

/// `Psi(P^r_{k,m})` in the quadric `Q_{k+m+1}`.
pub fn quadric_orbit(k: usize, m: usize, r: f64) -> Result<LagrangianSpec> {
    check_km(k, m)?;
    let n = k + m + 2;
    Ok(LagrangianSpec::new(&format!("Psi(P^r_{{{k},{m}}})"), "Psi image of the iota orbit", chart_quadric(n), km_params(k, m), move |t| {
        psi_quadric(&iota(r, t[0], &t[1..k + 2], &t[k + 2..]))
    })
    .residual("mu_Q blocks", move |x| diagonal_blocks_residual(&mu_q(x), k, m))
    .residual("|z0|^2-(1-r^2)", move |x| normalize_rep(&to_complex(x))[0].norm_sqr() - (1.0 - r * r)))
}

/// Circle-bundle lift of `S_{k,m}` at fiber radius `sqrt(2 - 2r)` through `Theta_Q`.
pub fn quadric_lift(k: usize, m: usize, r: f64) -> Result<LagrangianSpec> {
    check_km(k, m)?;
    let n = k + m + 2;
    let rho = (2.0 - 2.0 * r).sqrt();
    Ok(LagrangianSpec::new(&format!("ThetaQ-lift(S_{{{k},{m}}})"), "circle-bundle lift through Theta_Q", chart_quadric(n), km_params(k, m), move |t| {
        let mut w = s_km_point(&t[1..k + 2], &t[k + 2..]);
        w.extend([rho * t[0].cos(), rho * t[0].sin()]);
        theta_q_lift(&w)
    })
    .residual("S_km", move |x| s_km_residual(&theta_q_inv(x)[..2 * n], k, m))
    .residual("|zeta|-rho", move |x| theta_q_inv(x)[2 * n] - rho))
}

/// `Psi^P(P^r_{k,m})` in `CP^{k+m+1}`.
pub fn proj_orbit(k: usize, m: usize, r: f64) -> Result<LagrangianSpec> {
    check_km(k, m)?;
    let n = k + m + 1;
    Ok(LagrangianSpec::new(&format!("PsiP(P^r_{{{k},{m}}})"), "Psi^P image of the iota orbit", chart_proj(n), km_params(k, m), move |t| {
        psi_p_lift(&iota(r, t[0], &t[1..k + 2], &t[k + 2..]))
    })
    .residual("Phi^C blocks", move |x| diagonal_blocks_residual(&phi_c(x), k, m))
    .residual("|Phi^C|-r", move |x| so_norm(&phi_c(x)) - r))
}

/// Circle-bundle lift of `S_{k,m}` at fiber radius `sqrt(1 - r)` through `Theta_p`.
pub fn proj_lift(k: usize, m: usize, r: f64) -> Result<LagrangianSpec> {
    check_km(k, m)?;
    let n = k + m + 2;
    let rho = (1.0 - r).sqrt();
    Ok(LagrangianSpec::new(&format!("Thetap-lift(S_{{{k},{m}}})"), "circle-bundle lift through Theta_p", chart_proj(n - 1), km_params(k, m), move |t| {
        let mut w = s_km_point(&t[1..k + 2], &t[k + 2..]);
        w.extend([rho * t[0].cos(), rho * t[0].sin()]);
        theta_p_lift(&w)
    })
    .residual("S_km", move |x| s_km_residual(&theta_p_inv(x)[..2 * n], k, m))
    .residual("|zeta|-rho", move |x| theta_p_inv(x)[2 * n] - rho))
}

/// Generic circle-bundle lift: `(base params, phi) -> theta(w(base), rho e^{i phi})`.
pub fn circle_bundle_lift(
    id: &str,
    base: &LagrangianSpec,
    rho: f64,
    ambient: Chart,
    theta: fn(&[f64]) -> Vec<f64>,
) -> LagrangianSpec {
    let p = base.param.clone();
    let mut factors = vec![Factor::Circle];
    factors.extend(base.params.0.iter().copied());
    LagrangianSpec::new(id, "circle-bundle lift", ambient, ParamSpace(factors), move |t| {
        let mut w = p(&t[1..]);
        w.extend([rho * t[0].cos(), rho * t[0].sin()]);
        theta(&w)
    })
}

/// The great circle `{x_1 = 0}` in `S^2`, with zero tangent coordinates
/// appended so it can be lifted through `Theta_Delta` as `(x, y)`.
pub fn diagonal_circle_lift() -> LagrangianSpec {
    LagrangianSpec::new("Theta_Delta-lift({x1=0})", "unit circle bundle over a great circle", chart_sphere_pair(), ParamSpace(vec![Factor::Circle, Factor::Circle]), |t| {
        let x = [0.0, t[1].cos(), t[1].sin()];
        let c = cross(&x, &[1.0, 0.0, 0.0]);
        let (s, co) = t[0].sin_cos();
        let y: Vec<f64> = (0..3).map(|i| co * [1.0, 0.0, 0.0][i] + s * c[i]).collect();
        theta_delta(&[x.to_vec(), y].concat())
    })
}

/// Map `(v, w) -> (v, Q_2 w)` as a shared closure.
pub fn q2_fn() -> VecFn {
    Arc::new(q2_map)
}

pub fn orbit_cs_of_c() -> LagrangianSpec {
    orbit_spec("rho_CS(C)", chart_sphere_pair(), curve_c, rho_cs)
}

/// Catalog of two-dimensional tori in `S^2 x S^2` and `CP^2`, with the form
/// used for the isotropy check.
pub fn torus_catalog() -> Vec<(LagrangianSpec, TwoForm)> {
    let om = omega_sphere_pair(0.5);
    vec![
        (t_ep(), om.clone()),
        (clifford(), om.clone()),
        (t_af(), om.clone()),
        (fooo_target(), om.clone()),
        (t_cs(), om.clone()),
        (t_bc(), om.clone()),
        (l_p01(), fs_form()),
        (t_w_target(), fs_form()),
        (t_cs_p(), fs_form()),
    ]
}

pub fn torus_by_id(id: &str) -> Result<LagrangianSpec> {
    torus_catalog()
        .into_iter()
        .map(|(s, _)| s)
        .find(|s| s.id == id)
        .ok_or_else(|| GeomError::Parameter(format!("unknown torus id {id}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_params_satisfy_own_residuals() {
        for (spec, _) in torus_catalog() {
            let mut rng = stream_rng(1, &spec.id, 0);
            for _ in 0..50 {
                let x = spec.sample(&mut rng);
                assert!(spec.membership(&x) < 1e-10, "{} {}", spec.id, spec.membership(&x));
            }
        }
    }
}
