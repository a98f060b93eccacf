//! The check registry: every check is a descriptor with a run function over
//! query parameters.

use crate::params::Params;
use anyhow::{bail, ensure, Result};
use lagcore::atlas::*;
use lagcore::calculus::*;
use lagcore::floerdata::*;
use lagcore::geomcore::*;
use lagcore::invariants::*;
use lagcore::lagrangians::*;
use lagcore::tolerances::*;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::Rational64;
use std::f64::consts::{PI, TAU};
use std::sync::Arc;

/// Run-wide settings.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub samples: usize,
    pub seed: u64,
    pub tol: Option<f64>,
    pub parallel: bool,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx { samples: 1000, seed: 7, tol: None, parallel: true }
    }
}

/// What a check measured. `tolerance` is replaced by `--tol` when
/// `overridable` is set.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub metric: f64,
    pub tolerance: f64,
    pub overridable: bool,
    pub samples: usize,
    pub notes: String,
}

impl Outcome {
    pub fn within(metric: f64, tolerance: f64, samples: usize, notes: impl Into<String>) -> Self {
        Outcome { metric, tolerance, overridable: true, samples, notes: notes.into() }
    }

    pub fn exact(got: i64, expected: i64, notes: impl Into<String>) -> Self {
        let n = notes.into();
        let notes = if n.is_empty() { format!("got {got}, expected {expected}") } else { format!("got {got}, expected {expected}; {n}") };
        Outcome { metric: (got - expected).abs() as f64, tolerance: 0.0, overridable: false, samples: 0, notes }
    }

    /// Boolean check: metric 0 when `ok`, 1 otherwise.
    pub fn flag(ok: bool, samples: usize, notes: impl Into<String>) -> Self {
        Outcome { metric: if ok { 0.0 } else { 1.0 }, tolerance: 0.0, overridable: false, samples, notes: notes.into() }
    }

    /// `value >= threshold`, reported as the shortfall.
    pub fn at_least(value: f64, threshold: f64, samples: usize, notes: impl Into<String>) -> Self {
        let n = notes.into();
        Outcome {
            metric: (threshold - value).max(0.0),
            tolerance: 0.0,
            overridable: false,
            samples,
            notes: format!("value {value:.6e} vs lower bound {threshold:e}; {n}"),
        }
    }
}

pub type CheckFn = fn(&Ctx, &Params) -> Result<Outcome>;
/// Evaluate a sweepable check at one parameter value: `(value, expected)`.
pub type SweepFn = fn(&Ctx, f64) -> Result<(f64, f64)>;

pub struct CheckDescriptor {
    pub id: &'static str,
    pub module: &'static str,
    pub description: &'static str,
    /// Declared parameters with their defaults, in canonical order.
    pub params: &'static [(&'static str, &'static str)],
    /// Query strings run by `all`; empty means the defaults only.
    pub instances: &'static [&'static str],
    pub run: CheckFn,
    /// Sweepable parameter name and evaluator.
    pub sweep: Option<(&'static str, SweepFn)>,
}

const KM: &[(&str, &str)] = &[("k", "0"), ("m", "1")];
const KM_RUN: &[&str] = &["k=0&m=1", "k=1&m=1", "k=0&m=2", "k=1&m=2"];
const KM_MASLOV: &[&str] = &["k=0&m=1", "k=1&m=1", "k=0&m=2"];
const KM_ALL3: &[&str] = &["k=0&m=1", "k=1&m=1", "k=0&m=2", "k=1&m=2", "k=2&m=2", "k=0&m=3", "k=1&m=3", "k=2&m=3", "k=3&m=3"];

fn km(p: &Params) -> Result<(usize, usize)> {
    let (k, m) = (p.usize("k")?, p.usize("m")?);
    check_km(k, m)?;
    Ok((k, m))
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, |m, x| if x.is_nan() { f64::INFINITY } else { m.max(x) })
}

fn sampled(ctx: &Ctx, tag: &str, f: impl Fn(&mut rand_chacha::ChaCha8Rng) -> f64 + Sync + Send) -> f64 {
    max_of(lagcore::par::par_map(ctx.samples, ctx.parallel, |i| f(&mut stream_rng(ctx.seed, tag, i as u64))))
}

fn set_outcome(r: SetEqualReport, tol: f64) -> Outcome {
    Outcome::within(r.max(), tol, 2 * r.samples, format!("forward {:.3e}, backward {:.3e}", r.a_in_b, r.b_in_a))
}

// ---------------------------------------------------------------- atlas

fn pullback_check(ctx: &Ctx, id: &str) -> Result<Outcome> {
    let e = symplecto_entry(id)?;
    let r = pullback_residual(&e, ctx.samples, ctx.seed, ctx.parallel);
    let kind = if r.analytic { "analytic Jacobian" } else { "finite-difference Jacobian" };
    Ok(Outcome::within(r.max_residual, r.tolerance(), r.samples, format!("{}; {kind}", e.description)))
}

macro_rules! pullback {
    ($id:literal) => {
        CheckDescriptor {
            id: concat!("symplecto.", $id),
            module: "atlas",
            description: concat!("pullback of the target form by ", $id, " equals the domain form"),
            params: &[],
            instances: &[],
            run: |c, _| pullback_check(c, $id),
            sweep: None,
        }
    };
}

fn s2_pair(rng: &mut rand_chacha::ChaCha8Rng, margin: f64) -> (Vec<f64>, Vec<f64>) {
    loop {
        let v = sample_sphere(2, rng);
        let w = sample_sphere(2, rng);
        if norm(&sub(&v, &w)) > margin && norm(&add(&v, &w)) > margin {
            return (v, w);
        }
    }
}

fn oneform_phi1(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let m = symplecto_entry("phi1")?.map;
    let (lam, half) = (lambda_form(), half_liouville());
    let r = sampled(ctx, "oneform.phi1", |rng| {
        let x = sample_ball(4, 0.05, 1.95, rng);
        let v = gaussian_vec(4, rng);
        (pullback_one_form(&m, &lam, &x, &v) - half.eval(&x, &v)).abs()
    });
    Ok(Outcome::within(r, 1e-8, ctx.samples, "phi1 pulls back lambda to (x dy - y dx)/2"))
}

fn oneform_psip(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let n = 3;
    let m = SmoothMap::new("PsiP-lift", chart_cotangent(n), chart_flat(2 * n + 2), psi_p_lift);
    let r = sampled(ctx, "oneform.psiP", |rng| {
        let x = sample_cotangent(n, 0.01, 0.99, rng).flat();
        let basis = chart_cotangent(n).tangent_basis(&x);
        let v = combine(&basis, &gaussian_vec(basis.len(), rng));
        (pullback_one_form(&m, &alpha_form(), &x, &v) - lambda_form().eval(&x, &v)).abs()
    });
    Ok(Outcome::within(r, 1e-8, ctx.samples, "lift of Psi^P pulls back sum x dy to p dq"))
}

fn brackets(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let x = |k: usize| move |p: &[f64]| x_field(k, p);
    let r = sampled(ctx, "brackets", |rng| {
        let (v, w) = s2_pair(rng, 0.05);
        let p = [v.clone(), w.clone()].concat();
        let br = |a: usize, b: usize| lie_bracket(&x(a), &x(b), &p);
        let d2 = dot(&sub(&v, &w), &sub(&v, &w));
        let s2 = dot(&add(&v, &w), &add(&v, &w));
        max_of([
            max_abs_diff(&br(1, 3), &scale(-2.0, &x_field(4, &p))),
            max_abs_diff(&br(2, 4), &scale(2.0 * dot(&v, &w), &x_field(4, &p))),
            max_abs_diff(&br(1, 2), &scale(0.5 * d2, &x_field(1, &p))),
            max_abs_diff(&br(3, 4), &scale(-0.5 * d2, &x_field(1, &p))),
            max_abs_diff(&br(1, 4), &scale(0.5 * s2, &x_field(3, &p))),
            max_abs_diff(&br(2, 3), &scale(0.5 * s2, &x_field(3, &p))),
            max_abs(&br(1, 1)),
        ])
    });
    Ok(Outcome::within(r, 1e-5, ctx.samples, "commutators of X1..X4 on S^2 x S^2"))
}

fn roundtrips(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "roundtrip", |rng| {
        let (v, w) = s2_pair(rng, 1e-3);
        let x = [v, w].concat();
        let z2 = sample_ball(2, 0.0, 1.4, rng);
        let z4 = sample_ball(4, 0.0, 1.4, rng);
        let c = sample_cotangent(3, 0.01, 0.99, rng).flat();
        let t = sample_cotangent(2, 0.05, 1.35, rng);
        let tx = [t.q, t.p].concat();
        let pq = sample_quadric(4, rng);
        let pp = sample_proj(3, rng);
        max_of([
            max_abs_diff(&phi2_inv(&phi2(&x)), &x),
            max_abs_diff(&psi_disk_inv(&psi_disk(&z2)), &z2),
            max_abs_diff(&psi_proj_inv(&psi_proj(&z4)), &z4),
            max_abs_diff(&unitary_q_inv(&unitary_q(&z4)), &z4),
            max_abs_diff(&h2_inv(&h2(&z2)), &z2),
            max_abs_diff(&psi_p_inv(&psi_p_lift(&c)), &canonicalize_cotangent(&c)),
            max_abs_diff(&psi_quadric_inv(&psi_quadric(&c)), &c),
            max_abs_diff(&theta_delta_inv(&theta_delta(&tx)), &tx),
            proj_dist(&to_complex(&theta_q_lift(&theta_q_inv(&from_complex(&pq)))), &pq),
            proj_dist(&to_complex(&theta_p_lift(&theta_p_inv(&from_complex(&pp)))), &pp),
        ])
    });
    Ok(Outcome::within(r, POINT, ctx.samples, "forward after inverse for every map with an inverse"))
}

fn cross_identity(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "identity.cross", |rng| {
        let (v, w) = (sample_sphere(2, rng), sample_sphere(2, rng));
        let (s, d, c) = (add(&v, &w), sub(&v, &w), cross(&v, &w));
        (dot(&d, &d) * dot(&s, &s) - 4.0 * dot(&c, &c)).abs()
    });
    Ok(Outcome::within(r, ALGEBRAIC, ctx.samples, "|v-w|^2 |v+w|^2 = 4 |v x w|^2 on S^2 x S^2"))
}

fn helper_identity(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "identity.helper", |rng| {
        let x: f64 = rand::Rng::random_range(rng, 0.0..0.999);
        let f = helper_f(x);
        (x * x * f + 1.0 / f - 2.0).abs()
    });
    let r = r.max((helper_f(0.0) - 0.5).abs()).max((helper_f(0.5) - (4.0 - 2.0 * 3f64.sqrt())).abs());
    Ok(Outcome::within(r, ALGEBRAIC, ctx.samples, "x^2 f + 1/f = 2, f(0) = 1/2, f(1/2) = 4 - 2 sqrt 3"))
}

fn psip_image(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "identity.psiP-image", |rng| {
        let c = sample_cotangent(3, 0.0, 0.99, rng);
        let z = to_complex(&psi_p_lift(&c.flat()));
        let s = csum_sq(&z);
        let np = norm(&c.p);
        max_of([(cnorm2(&z) - 2.0).abs(), s.im.abs(), (s.re + 2.0 * (1.0 - np * np).sqrt()).abs()])
    });
    Ok(Outcome::within(r, ALGEBRAIC, ctx.samples, "|z|^2 = 2 and sum z^2 = -2 sqrt(1 - |p|^2) on the image of Psi^P"))
}

fn hamiltonians_phi1(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "hamiltonians.phi1", |rng| {
        let xi = sample_ball(4, 0.1, 1.9, rng);
        let (z1, z2) = (C64::new(xi[0], xi[1]), C64::new(xi[2], xi[3]));
        let x = phi1(&xi);
        let neg: Vec<f64> = xi.iter().map(|a| -a).collect();
        max_of([
            (norm(&x[..3]) - (z1.norm_sqr() + z2.norm_sqr()) / 4.0).abs(),
            (cross(&x[..3], &x[3..])[0] - (z1.norm_sqr() - z2.norm_sqr()) / 4.0).abs(),
            max_abs_diff(&x, &phi1(&neg)),
        ])
    });
    Ok(Outcome::within(r, ALGEBRAIC, ctx.samples, "|p| and (p x q).e1 after phi1; phi1(-xi) = phi1(xi)"))
}

fn hamiltonians_phi2(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "hamiltonians.Phi2", |rng| {
        let (v, w) = s2_pair(rng, 1e-3);
        let s = add(&v, &w);
        let x = phi2(&[v, w].concat());
        max_of([(norm(&x[..3]) - norm(&s) / 2.0).abs(), (cross(&x[..3], &x[3..])[0] - s[0] / 2.0).abs()])
    });
    let e = phi2(&[1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let r = r.max(max_abs_diff(&e, &[0.0, 0.0, h, h, -h, 0.0]));
    Ok(Outcome::within(r, ALGEBRAIC, ctx.samples, "|p| = |v+w|/2 and (p x q).e1 = (v+w).e1/2 after Phi2"))
}

fn hamiltonians_psip(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "hamiltonians.psiP", |rng| {
        let c = sample_cotangent(3, 0.0, 0.99, rng);
        let z = normalize_rep(&to_complex(&psi_p_lift(&c.flat())));
        let h = 0.25 * (4.0 - csum_sq(&z).norm_sqr()).max(0.0).sqrt();
        let mut m = (h - norm(&c.p) / 2.0).abs();
        for a in 0..4 {
            for b in a + 1..4 {
                m = m.max(((z[a].conj() * z[b]).im - (c.p[a] * c.q[b] - c.p[b] * c.q[a])).abs());
            }
        }
        m
    });
    Ok(Outcome::within(r, ALGEBRAIC, ctx.samples, "H and G_ij pulled back by Psi^P"))
}

fn equivariance_psi(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "equivariance.psi", |rng| {
        let z = sample_ball(2, 0.0, 1.4, rng);
        let t = sample_angle(rng);
        let (s, c) = t.sin_cos();
        max_abs_diff(&psi_disk(&[c * z[0] - s * z[1], s * z[0] + c * z[1]]), &rot_e1(t, &psi_disk(&z)))
    });
    Ok(Outcome::within(r, ALGEBRAIC, ctx.samples, "psi(e^{it} z) = R_t psi(z)"))
}

fn equivariance_psip(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "equivariance.psiP", |rng| {
        let g = sample_ortho(4, rng);
        let c = sample_cotangent(3, 0.0, 0.99, rng);
        let z = to_complex(&psi_p_lift(&c.flat()));
        let re: Vec<f64> = z.iter().map(|a| a.re).collect();
        let im: Vec<f64> = z.iter().map(|a| a.im).collect();
        let gz: Vec<C64> = g.apply(&re).iter().zip(g.apply(&im)).map(|(a, b)| C64::new(*a, b)).collect();
        let gx = [g.apply(&c.p), g.apply(&c.q)].concat();
        proj_dist(&to_complex(&psi_p_lift(&gx)), &gz)
    });
    Ok(Outcome::within(r, POINT, ctx.samples, "Psi^P commutes with O(4)"))
}

fn theta_delta_closed(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "closed-form.theta-delta", |rng| {
        let t = sample_cotangent(2, 0.05, 1.35, rng);
        let (x, y) = (&t.q, &t.p);
        let ny = norm(y);
        let xy = cross(x, y);
        let want: Vec<f64> = xy.iter().map(|a| (ny * ny / 2.0 - 1.0) * a / ny).chain(y.iter().map(|a| a / ny)).collect();
        max_abs_diff(&phi2(&theta_delta(&[x.clone(), y.clone()].concat())), &want)
    });
    Ok(Outcome::within(r, ALGEBRAIC, ctx.samples, "Phi2 after Theta_Delta in closed form"))
}

fn geodesic(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "flow.geodesic", |rng| {
        let c = sample_cotangent(4, 0.1, 0.9, rng).flat();
        let x = sample_sphere(1, rng);
        let y = sample_sphere(2, rng);
        let th = sample_angle(rng);
        let flowed = geodesic_flow(th, &iota(1.0, 0.0, &x, &y));
        max_of([max_abs_diff(&geodesic_flow(TAU, &c), &c), max_abs_diff(&flowed, &iota(1.0, th, &x, &y))])
    });
    Ok(Outcome::within(r, ALGEBRAIC, ctx.samples, "2 pi periodicity and flow along iota"))
}

fn moment_quadric(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "moment.quadric", |rng| {
        let c = sample_cotangent(3, 0.0, 0.99, rng).flat();
        (mu_q(&psi_quadric(&c)) - mu_s(&c)).abs().max()
    });
    Ok(Outcome::within(r, POINT, ctx.samples, "mu_S = mu_Q after Psi"))
}

fn moment_projective(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "moment.projective", |rng| {
        let c = sample_cotangent(3, 0.0, 0.99, rng).flat();
        (phi_c(&psi_p_lift(&c)) - mu_s(&c)).abs().max()
    });
    Ok(Outcome::within(r, POINT, ctx.samples, "Phi^R = Phi^C after Psi^P"))
}

fn moment_norms(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "moment.norms", |rng| {
        let c = sample_cotangent(3, 0.0, 0.99, rng);
        let z = from_complex(&sample_proj(3, rng));
        max_of([(so_norm(&mu_s(&c.flat())) - norm(&c.p)).abs(), (so_norm(&phi_c(&z)) - phi_c_norm_formula(&z)).abs()])
    });
    let real = from_complex(&[C64::new(0.3, 0.0), C64::new(-1.0, 0.0), C64::new(0.5, 0.0)]);
    let r = r.max(phi_c(&real).abs().max());
    Ok(Outcome::within(r, POINT, ctx.samples, "||Phi^R|| = |p| and ||Phi^C|| = sqrt(4 - |sum z^2|^2)/2"))
}

fn quat_check(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "quat.sandwich", |rng| {
        let g = gaussian_vec(4, rng);
        let (z1, z2) = (C64::new(g[0], g[1]), C64::new(g[2], g[3]));
        let got = quat_sandwich(&Quat::from_pair(z1, z2), &Quat::I).unwrap_or([f64::NAN; 3]);
        let w = 2.0 * z1.conj() * z2;
        max_of([(got[0] - (z1.norm_sqr() - z2.norm_sqr())).abs(), (got[1].hypot(got[2]) - w.norm()).abs()])
    });
    let e = quat_sandwich(&Quat::I, &Quat::J)?;
    let r = r.max(max_abs_diff(&e, &[0.0, -1.0, 0.0]));
    Ok(Outcome::within(r, 1e-12, ctx.samples, "i-component and norm of conj(xi) i xi"))
}

// ---------------------------------------------------------------- lagrangians

fn torus_pair(ctx: &Ctx, a: LagrangianSpec, b: LagrangianSpec) -> Result<Outcome> {
    Ok(set_outcome(set_equal(&a, &b, ctx.samples, ctx.seed, ctx.parallel), MEMBERSHIP))
}

fn clifford_distinct(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = set_equal(&t_ep(), &clifford(), ctx.samples, ctx.seed, ctx.parallel);
    Ok(Outcome::at_least(r.max(), 0.4, 2 * r.samples, "the level torus and the product of equators differ"))
}

fn torus_cs(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = mapped_equal(q2_fn(), q2_fn(), &t_ep(), &t_cs(), ctx.samples, ctx.seed, ctx.parallel);
    Ok(set_outcome(r, MEMBERSHIP))
}

fn torus_csp(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = mapped_equal(Arc::new(unitary_q_proj), Arc::new(unitary_q_proj_inv), &l_p01(), &t_cs_p(), ctx.samples, ctx.seed, ctx.parallel);
    Ok(set_outcome(r, MEMBERSHIP))
}

fn lift_quadric(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (k, m) = km(p)?;
    let r = 1.0 - 1.0 / (k + m + 1) as f64;
    let rep = set_equal(&quadric_lift(k, m, r)?, &quadric_orbit(k, m, r)?, ctx.samples, ctx.seed, ctx.parallel);
    Ok(set_outcome(rep, MEMBERSHIP))
}

fn lift_projective(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (k, m) = km(p)?;
    let r = 1.0 - 2.0 / (k + m + 2) as f64;
    let rep = set_equal(&proj_lift(k, m, r)?, &proj_orbit(k, m, r)?, ctx.samples, ctx.seed, ctx.parallel);
    Ok(set_outcome(rep, MEMBERSHIP))
}

fn orbit_in_cotangent(k: usize, m: usize, r: f64) -> LagrangianSpec {
    LagrangianSpec::new(
        "P^r",
        "iota orbit",
        chart_cotangent(k + m + 1),
        ParamSpace(vec![Factor::Circle, Factor::Sphere(k), Factor::Sphere(m)]),
        move |t| iota(r, t[0], &t[1..k + 2], &t[k + 2..]),
    )
    .residual("mu_S blocks", move |x| diagonal_blocks_residual(&mu_s(x), k, m))
    .residual("|p|-r", move |x| norm(&x[..x.len() / 2]) - r)
}

fn isotropy_tori(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    let mut notes = Vec::new();
    for (spec, form) in torus_catalog() {
        let r = lagrangian_check(&spec, &form, ctx.samples, ctx.seed, ctx.parallel);
        ensure!(r.min_singular > 1e-3, "{} is not immersed at a sample (singular value {:e})", spec.id, r.min_singular);
        worst = worst.max(r.max_form);
        notes.push(format!("{} {:.1e}", spec.id, r.max_form));
    }
    Ok(Outcome::within(worst, NUMERIC, ctx.samples, notes.join(", ")))
}

fn isotropy_orbit(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (k, m) = km(p)?;
    let r = p.f64("r")?;
    ensure!(r > 0.0 && r < 1.0, "need 0 < r < 1");
    let rep = lagrangian_check(&orbit_in_cotangent(k, m, r), &d_lambda(), ctx.samples, ctx.seed, ctx.parallel);
    ensure!(rep.min_singular > 1e-3, "orbit not immersed");
    Ok(Outcome::within(rep.max_form, NUMERIC, ctx.samples, format!("dimension {}", rep.dim)))
}

fn sphere_factor(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let s = LagrangianSpec::new("S2xpt", "sphere factor", chart_sphere_pair(), ParamSpace(vec![Factor::Sphere(2)]), |s| {
        [s.to_vec(), vec![1.0, 0.0, 0.0]].concat()
    });
    let rep = lagrangian_check(&s, &omega_sphere_pair(0.5), ctx.samples, ctx.seed, ctx.parallel);
    Ok(Outcome::at_least(rep.max_form, 0.1, ctx.samples, "a sphere factor is symplectic, not isotropic"))
}

fn orbit_invariance(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (k, m) = km(p)?;
    let spec = orbit_in_cotangent(k, m, 0.5);
    let r = sampled(ctx, "invariance.orbit", |rng| {
        let x = spec.sample(rng);
        let t = sample_angle(rng);
        let a = sample_ortho(k + 1, rng).0;
        let b = sample_ortho(m + 1, rng).0;
        spec.membership(&geodesic_flow(t, &x)).max(spec.membership(&block_rotate(&a, &b, &x)))
    });
    Ok(Outcome::within(r, POINT, ctx.samples, "geodesic flow and SO(k+1) x SO(m+1) preserve the orbit"))
}

fn iota_two_to_one(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "iota.two-to-one", |rng| {
        let x = sample_sphere(1, rng);
        let y = sample_sphere(2, rng);
        let th = sample_angle(rng);
        let nx: Vec<f64> = x.iter().map(|v| -v).collect();
        let ny: Vec<f64> = y.iter().map(|v| -v).collect();
        max_abs_diff(&iota(0.4, th, &x, &y), &iota(0.4, th + PI, &nx, &ny))
    });
    Ok(Outcome::within(r, ALGEBRAIC, ctx.samples, "iota(-e^{it}, -x, -y) = iota(e^{it}, x, y)"))
}

// ---------------------------------------------------------------- areas

fn level_area(alpha: f64) -> Result<(f64, f64)> {
    ensure!(alpha > 0.0 && alpha < 1.0, "need 0 < alpha < 1");
    let c = move |s: f64| level_curve_point(alpha, s);
    let on_set = max_of((0..256).map(|j| level_curve_residual(alpha, c(TAU * j as f64 / 256.0)).abs()));
    ensure!(on_set < 1e-10, "curve leaves its level set: {on_set:e}");
    Ok((planar_area(&c, &std_primitive).value.abs(), PI * (1.0 - alpha)))
}

fn omega_prime_area(a: f64) -> Result<(f64, f64)> {
    ensure!(a > 0.0 && a < 1.0, "need 0 < a < 1");
    let q = disk_integral(&move |z: &[f64]| vec![a * z[0], a * z[1]], &omega_prime_disk(), 64);
    Ok((q.value, TAU * (1.0 - (1.0 - a * a).sqrt())))
}

fn area_outcome(v: (f64, f64), tol: f64) -> Outcome {
    Outcome::within((v.0 - v.1).abs(), tol, 0, format!("value {:.12}, expected {:.12}", v.0, v.1))
}

fn u_area(p: usize, params: &Params) -> Result<Outcome> {
    let (k, m) = km(params)?;
    let d = disk_u(p, k, m, 0.5)?;
    let a = cotangent_disk_area(&d).value;
    let (want, tol) = if p == 1 { (PI, NUMERIC) } else { (0.0, 1e-8) };
    Ok(area_outcome((a, want), tol))
}

fn proj_disks(_: &Ctx, _: &Params) -> Result<Outcome> {
    let v1 = proj_disk_area(&disk_v1, 64).value;
    let conic = proj_disk_area(&conic_hemisphere, 64).value.abs();
    let line = proj_disk_area(&line_half_disk, 64).value.abs();
    let r = max_of([v1.abs(), (conic - TAU).abs(), (line - PI).abs()]);
    Ok(Outcome::within(r, NUMERIC, 0, format!("v1 {v1:.3e}, conic half {conic:.9}, half line {line:.9}")))
}

// ---------------------------------------------------------------- maslov

fn maslov_u(p: usize, ctx: &Ctx, params: &Params) -> Result<Outcome> {
    let (k, m) = km(params)?;
    let d = disk_u(p, k, m, 0.5)?;
    let mu = maslov_disk(&d, MaslovGrid::default(), ctx.parallel)?;
    let want = if p == 1 { 2 * (k + m) as i64 } else { 0 };
    Ok(Outcome::exact(mu, want, ""))
}

fn maslov_loops(_: &Ctx, _: &Params) -> Result<Outcome> {
    let id = DMatrix::from_row_slice(4, 2, &[1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
    let constant = maslov_frame_loop(&LagrangianFrameLoop(vec![id; 16]))?;
    let line = LagrangianFrameLoop(
        (0..=64)
            .map(|i| {
                let t = TAU * i as f64 / 64.0;
                DMatrix::from_row_slice(2, 1, &[t.cos(), t.sin()])
            })
            .collect(),
    );
    let turning = maslov_frame_loop(&line)?;
    Ok(Outcome::flag(constant == 0 && turning == 2, 0, format!("constant loop {constant}, rotating line {turning}")))
}

fn maslov_oracle(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let mu = maslov_disk(&torus_oracle_disk(&[1.0, 0.7, 0.4]), MaslovGrid::default(), ctx.parallel)?;
    Ok(Outcome::exact(mu, 2, "coordinate disk on a product torus in C^3"))
}

fn frame_isotopy_check(_: &Ctx, p: &Params) -> Result<Outcome> {
    let (k, m) = km(p)?;
    let n = k + m + 2;
    let mut worst: f64 = 0.0;
    let mut rank_ok = true;
    for a in [0.0, 0.25, 0.5, 0.75, 1.0] {
        for j in 0..128 {
            let vs = frame_isotopy(k, m, a, TAU * j as f64 / 128.0);
            for i in 0..vs.len() {
                for l in i + 1..vs.len() {
                    worst = worst.max((dot(&vs[i][..n], &vs[l][n..]) - dot(&vs[l][..n], &vs[i][n..])).abs());
                }
            }
            let mat = DMatrix::from_fn(2 * n, vs.len(), |r, c| vs[c][r]);
            rank_ok &= vs.len() == n - 1 && mat.singular_values().min() > 1e-3;
        }
    }
    ensure!(rank_ok, "frame lost rank along the isotopy");
    Ok(Outcome::within(worst, ISOTROPY, 0, "five isotopy parameters on a 128-point circle"))
}

// ---------------------------------------------------------------- monotonicity

fn exact_radius(r: Rational64, want: Rational64) -> Outcome {
    let mut o = Outcome::flag(r == want, 0, format!("r = {r}, expected {want}"));
    o.metric = (*r.numer() as f64 / *r.denom() as f64 - *want.numer() as f64 / *want.denom() as f64).abs();
    if r != want && o.metric == 0.0 {
        o.metric = 1.0;
    }
    o
}

fn radius_quadric(_: &Ctx, p: &Params) -> Result<Outcome> {
    let (k, m) = km(p)?;
    let n = (k + m) as i64;
    Ok(exact_radius(quadric_monotone_radius(k, m)?, Rational64::new(n, n + 1)))
}

fn radius_projective(_: &Ctx, p: &Params) -> Result<Outcome> {
    let (k, m) = km(p)?;
    let n = (k + m) as i64;
    Ok(exact_radius(projective_monotone_radius(k, m)?, Rational64::new(n, n + 2)))
}

fn monotone_assembled(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (k, m) = km(p)?;
    let kind = match p.str("kind")? {
        "quadric" => Compactification::Quadric,
        "projective" => Compactification::Projective,
        other => bail!("unknown kind {other}, expected quadric or projective"),
    };
    let r = monotonicity_assembled(kind, k, m, ctx.parallel)?;
    Ok(Outcome::within(
        (r.lambda_fiber - r.lambda_u1).abs(),
        1e-5,
        0,
        format!("r = {:.6}, fiber area {:.9}, u1 area {:.9}, Maslov {}", r.radius, r.fiber_area, r.u1_area, r.u1_maslov),
    ))
}

fn min_maslov(_: &Ctx, p: &Params) -> Result<Outcome> {
    let (k, m) = km(p)?;
    let got = minimal_maslov(&p_half_generators(k, m), k > 0);
    let want = if k > 0 { (k + m) as i64 } else { 2 * m as i64 };
    Ok(Outcome::exact(got, want, ""))
}

fn criterion(_: &Ctx, _: &Params) -> Result<Outcome> {
    let ok_n: Vec<bool> = (1..=8).map(|n| displaceability_criterion(TAU / (n + 1) as f64, PI, PI)).collect();
    let threshold = ok_n.iter().enumerate().all(|(i, ok)| *ok == (i + 1 >= 4));
    let k_pos = !displaceability_criterion(0.1, PI, PI / 2.0);
    Ok(Outcome::flag(threshold && k_pos, 0, format!("CP^n verdicts n=1..8: {ok_n:?}; half-generator case refused: {k_pos}")))
}

fn holonomy(_: &Ctx, _: &Params) -> Result<Outcome> {
    let conic = proj_disk_area(&conic_hemisphere, 64).value.abs();
    let line = proj_disk_area(&line_half_disk, 64).value.abs();
    let r = max_of([
        holonomy_angle(0.0, PI),
        holonomy_angle(PI, PI),
        (holonomy_angle(PI / 2.0, PI) - PI).abs(),
        holonomy_angle(conic, TAU).min(TAU - holonomy_angle(conic, TAU)),
        (holonomy_angle(line, TAU) - PI).abs(),
    ]);
    Ok(Outcome::within(r, NUMERIC, 0, format!("measured disks: conic half {conic:.9}, half line {line:.9}, tau = 2 pi")))
}

fn isotopy_outcome(c: IsotopyCertificate) -> Outcome {
    let notes = format!(
        "{}: area {:.9} < {:.9}, drift {:.2e}, separation {:.4}, simple {}, inside {}, steps {}",
        c.target, c.area, c.half_total, c.area_drift, c.min_separation, c.all_simple, c.inside, c.steps
    );
    let mut o = Outcome::within(c.area_drift, 1e-6, c.steps, notes);
    if !(c.min_separation > 0.01 && c.all_simple && c.inside) {
        o.metric = f64::MAX;
        o.overridable = false;
    }
    o
}

fn isotopy_quadric(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let m = p.usize("m")?;
    Ok(isotopy_outcome(displacement_isotopy(DisplaceTarget::Quadric { m }, 64, ctx.parallel)?))
}

fn isotopy_projective(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (k, m) = km(p)?;
    Ok(isotopy_outcome(displacement_isotopy(DisplaceTarget::Projective { k, m }, 64, ctx.parallel)?))
}

fn isotopy_refused(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let targets = [
        DisplaceTarget::Quadric { m: 1 },
        DisplaceTarget::Projective { k: 0, m: 1 },
        DisplaceTarget::Projective { k: 1, m: 1 },
        DisplaceTarget::Projective { k: 0, m: 2 },
    ];
    let refused: Vec<bool> = targets
        .iter()
        .map(|t| matches!(displacement_isotopy(*t, 64, ctx.parallel), Err(lagcore::GeomError::Refused(_))))
        .collect();
    Ok(Outcome::flag(refused.iter().all(|r| *r), 0, format!("refused at half area: {refused:?}")))
}

fn morse(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (k, m) = km(p)?;
    ensure!(k + m <= 3, "morse check supports k + m <= 3");
    let pts = morse_critical_points(k, m, 400, ctx.seed)?;
    let mut want: Vec<f64> = Vec::new();
    for sx in [1.0, -1.0] {
        for sy in [1.0, -1.0] {
            for th in morse_critical_angles(sx + sy) {
                want.push(5.0 * (2.0 * th).sin() + th.cos() * (sx + sy));
            }
        }
    }
    if pts.len() != want.len() {
        return Ok(Outcome::flag(false, 400, format!("found {} critical points, oracle has {}", pts.len(), want.len())));
    }
    let axis = |v: &[f64]| (v[0].abs() - 1.0).abs().max(max_abs(&v[1..]));
    let mut got: Vec<f64> = pts.iter().map(|c| c.value).collect();
    got.sort_by(f64::total_cmp);
    want.sort_by(f64::total_cmp);
    let nondeg = pts.iter().all(|c| c.min_hessian_eig > 1e-3 && c.theta.cos().abs() > 1e-3);
    let mut r = max_of(pts.iter().map(|c| axis(&c.x).max(axis(&c.y))));
    r = r.max(max_of(got.iter().zip(&want).map(|(g, w)| (g - w).abs())));
    r = r.max(max_of(got.iter().zip(got.iter().rev()).map(|(a, b)| (a + b).abs())));
    if !nondeg {
        r = f64::MAX;
    }
    Ok(Outcome::within(r, 1e-8, 400, format!("{} nondegenerate critical points on the coordinate axes", pts.len())))
}

fn morse_involution_check(ctx: &Ctx, _: &Params) -> Result<Outcome> {
    let r = sampled(ctx, "morse.involution", |rng| {
        let th = rand::Rng::random_range(rng, 0.0..TAU);
        let x = sample_sphere(1, rng);
        let y = sample_sphere(2, rng);
        let (ix, iy) = morse_involution(&x, &y);
        (morse_f(th, &x, &y) - morse_f(th, &ix, &iy)).abs()
    });
    Ok(Outcome::within(r, 0.0, ctx.samples, "f is invariant under the involution"))
}

// ---------------------------------------------------------------- floer

fn enumerate_cp3(_: &Ctx, _: &Params) -> Result<Outcome> {
    let mut got: Vec<String> = enumerate_maslov2_positive(Lattice::Cp3)?.iter().map(|c| c.to_string()).collect();
    let mut want: Vec<String> = cp3_sign_order().iter().map(|c| c.to_string()).collect();
    got.sort();
    want.sort();
    Ok(Outcome::flag(got == want, 0, got.join("; ")))
}

fn enumerate_cpm(_: &Ctx, p: &Params) -> Result<Outcome> {
    let m = p.usize("m")?;
    ensure!(m >= 2, "the line-and-disk lattice is used for m >= 2");
    let got: Vec<String> = enumerate_maslov2_positive(Lattice::CpM(m))?.iter().map(|c| c.to_string()).collect();
    Ok(Outcome::flag(got == ["D"], 0, got.join("; ")))
}

fn class_maslov(_: &Ctx, _: &Params) -> Result<Outcome> {
    let l = Lattice::Cp3;
    let b = RelClass::basis_class(l, "B").ok_or_else(|| anyhow::anyhow!("no B"))?;
    let c1 = RelClass::basis_class(l, "C1").ok_or_else(|| anyhow::anyhow!("no C1"))?;
    let c2 = RelClass::basis_class(l, "C2").ok_or_else(|| anyhow::anyhow!("no C2"))?;
    let ok = maslov_of_class(&l.line()) == BigInt::from(8)
        && maslov_of_class(&b) == BigInt::from(4)
        && maslov_of_class(&b.scale(2).sub(&c1).sub(&c2)) == BigInt::from(8)
        && maslov_of_class(&RelClass::zero(l)) == BigInt::from(0);
    Ok(Outcome::flag(ok, 0, "mu(l) = 8, mu(B) = 4, mu(2B - C1 - C2) = 8, mu(0) = 0"))
}

fn n_parity(_: &Ctx, _: &Params) -> Result<Outcome> {
    Ok(Outcome::exact(n_parity_check(&Lattice::Cp3.divisors())?, 1, ""))
}

fn superpotential_sample(_: &Ctx, _: &Params) -> Result<Outcome> {
    let p = [C64::new(1.0, 0.0), C64::new(1.0, 0.0), C64::new(2.0, 0.0)];
    let s = SignVector::all_plus();
    let v = superpotential_eval(s, &p)?;
    let g = superpotential_grad(s, &p)?;
    let r = (v - C64::new(4.0, 0.0)).norm().max(max_of(g.iter().map(|c| c.norm())));
    Ok(Outcome::within(r, ALGEBRAIC, 0, format!("W(1, 1, 2) = {v}")))
}

fn critical_for(signs: SignVector) -> (f64, usize, bool) {
    let pts = critical_points(signs);
    let worst = max_of(pts.iter().map(|c| if c.polished { c.grad_norm } else { f64::INFINITY }));
    let admissible = pts.iter().all(|c| (C64::new(c.y[0], c.y[1]) + signs.eps(1) * signs.eps(2)).norm() > 1e-6);
    (worst, pts.len(), admissible)
}

fn critical_signs(_: &Ctx, p: &Params) -> Result<Outcome> {
    let signs: SignVector = p.str("signs")?.parse().map_err(|e| anyhow::anyhow!("{e}"))?;
    let (worst, n, ok) = critical_for(signs);
    ensure!(n > 0, "no critical points for {signs}");
    ensure!(ok, "excluded y value returned");
    Ok(Outcome::within(worst, ALGEBRAIC, n, format!("{n} critical points for {signs}")))
}

fn critical_all(_: &Ctx, _: &Params) -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    let mut total = 0;
    for s in SignVector::all() {
        let (w, n, ok) = critical_for(s);
        ensure!(n > 0 && ok, "sign vector {s} has no admissible critical points");
        worst = worst.max(w);
        total += n;
    }
    Ok(Outcome::within(worst, ALGEBRAIC, total, format!("{total} critical points over 32 sign vectors")))
}

fn grid_oracle(_: &Ctx, _: &Params) -> Result<Outcome> {
    let bad: Vec<String> = SignVector::all()
        .into_iter()
        .filter(|s| grid_critical_count(*s, 256) != critical_points(*s).len())
        .map(|s| s.to_string())
        .collect();
    Ok(Outcome::flag(bad.is_empty(), 32, if bad.is_empty() { "grid scan agrees for all 32 sign vectors".into() } else { bad.join(" ") }))
}

fn no_critical(_: &Ctx, p: &Params) -> Result<Outcome> {
    let m = p.usize("m")?;
    ensure!(m >= 2, "need m >= 2");
    let ok = [1i8, -1].iter().map(|s| superpotential_cpm(m, *s).map(|w| certify_no_critical_points(&w).certified)).collect::<lagcore::Result<Vec<bool>>>()?;
    Ok(Outcome::flag(ok.iter().all(|c| *c), 0, "W = +-t_D is a single nonconstant monomial"))
}

/// All registered checks, sorted by id.
pub fn registry() -> Vec<CheckDescriptor> {
    let mut v = vec![
        pullback!("phi1"),
        pullback!("Phi2"),
        pullback!("PsiP"),
        pullback!("Phi1bar"),
        pullback!("psi"),
        pullback!("psiP"),
        pullback!("ThetaDelta"),
        pullback!("ThetaQ"),
        pullback!("Thetap"),
        pullback!("PsiQ"),
        pullback!("h1"),
        CheckDescriptor { id: "oneform.phi1", module: "calculus", description: "phi1 pulls back the canonical one-form", params: &[], instances: &[], run: oneform_phi1, sweep: None },
        CheckDescriptor { id: "oneform.psiP", module: "calculus", description: "lift of Psi^P pulls back sum x dy to p dq", params: &[], instances: &[], run: oneform_psip, sweep: None },
        CheckDescriptor { id: "brackets.s2xs2", module: "calculus", description: "commutator table of the four vector fields on S^2 x S^2", params: &[], instances: &[], run: brackets, sweep: None },
        CheckDescriptor { id: "roundtrip.catalog", module: "atlas", description: "inverse maps invert the catalog maps", params: &[], instances: &[], run: roundtrips, sweep: None },
        CheckDescriptor { id: "identity.cross-product", module: "atlas", description: "|v-w|^2 |v+w|^2 = 4 |v x w|^2", params: &[], instances: &[], run: cross_identity, sweep: None },
        CheckDescriptor { id: "identity.helper-f", module: "atlas", description: "x^2 f(x) + 1/f(x) = 2 and sample values", params: &[], instances: &[], run: helper_identity, sweep: None },
        CheckDescriptor { id: "identity.psiP-image", module: "atlas", description: "image of Psi^P has sum z^2 = -2 sqrt(1 - |p|^2)", params: &[], instances: &[], run: psip_image, sweep: None },
        CheckDescriptor { id: "hamiltonians.phi1", module: "atlas", description: "phi1 is a double cover and pulls back the toric Hamiltonians", params: &[], instances: &[], run: hamiltonians_phi1, sweep: None },
        CheckDescriptor { id: "hamiltonians.Phi2", module: "atlas", description: "Phi2 pulls back the toric Hamiltonians", params: &[], instances: &[], run: hamiltonians_phi2, sweep: None },
        CheckDescriptor { id: "hamiltonians.psiP", module: "atlas", description: "Psi^P pulls back H and G_ij", params: &[], instances: &[], run: hamiltonians_psip, sweep: None },
        CheckDescriptor { id: "equivariance.psi", module: "atlas", description: "the disk map intertwines rotations", params: &[], instances: &[], run: equivariance_psi, sweep: None },
        CheckDescriptor { id: "equivariance.psiP", module: "atlas", description: "Psi^P is O(n+1)-equivariant", params: &[], instances: &[], run: equivariance_psip, sweep: None },
        CheckDescriptor { id: "closed-form.theta-delta", module: "atlas", description: "Phi2 after Theta_Delta in closed form", params: &[], instances: &[], run: theta_delta_closed, sweep: None },
        CheckDescriptor { id: "flow.geodesic", module: "atlas", description: "geodesic flow is 2 pi periodic and moves iota along its circle", params: &[], instances: &[], run: geodesic, sweep: None },
        CheckDescriptor { id: "moment.quadric", module: "atlas", description: "moment maps agree through Psi", params: &[], instances: &[], run: moment_quadric, sweep: None },
        CheckDescriptor { id: "moment.projective", module: "atlas", description: "moment maps agree through Psi^P", params: &[], instances: &[], run: moment_projective, sweep: None },
        CheckDescriptor { id: "moment.norms", module: "atlas", description: "closed-form norms of the moment maps", params: &[], instances: &[], run: moment_norms, sweep: None },
        CheckDescriptor { id: "quat.sandwich", module: "geomcore", description: "conj(xi) i xi from the pair (z1, z2)", params: &[], instances: &[], run: quat_check, sweep: None },
        CheckDescriptor { id: "torus.af-ep", module: "lagrangians", description: "action-angle torus equals the level torus", params: &[], instances: &[], run: |c, _| torus_pair(c, t_af(), t_ep()), sweep: None },
        CheckDescriptor { id: "torus.bc-ep", module: "lagrangians", description: "circle-bundle torus equals the level torus", params: &[], instances: &[], run: |c, _| torus_pair(c, t_bc(), t_ep()), sweep: None },
        CheckDescriptor { id: "torus.fooo-ep", module: "lagrangians", description: "toric level set equals the level torus", params: &[], instances: &[], run: |c, _| torus_pair(c, fooo_target(), t_ep()), sweep: None },
        CheckDescriptor { id: "torus.cs-ep", module: "lagrangians", description: "(v, Q2 w) maps the level torus onto the anti-diagonal orbit torus", params: &[], instances: &[], run: torus_cs, sweep: None },
        CheckDescriptor { id: "torus.w-p01", module: "lagrangians", description: "degeneration level set equals the projective orbit torus", params: &[], instances: &[], run: |c, _| torus_pair(c, t_w_target(), l_p01()), sweep: None },
        CheckDescriptor { id: "torus.csp-p01", module: "lagrangians", description: "unitary conjugation maps the projective orbit torus onto the ball orbit torus", params: &[], instances: &[], run: torus_csp, sweep: None },
        CheckDescriptor { id: "torus.orbit-ep", module: "lagrangians", description: "orbit of the curve C under the diagonal rotation is the level torus", params: &[], instances: &[], run: |c, _| torus_pair(c, orbit_spec("C-orbit", chart_sphere_pair(), curve_c, rho_ep), t_ep()), sweep: None },
        CheckDescriptor { id: "torus.clifford-distinct", module: "lagrangians", description: "the level torus is not the product of equators", params: &[], instances: &[], run: clifford_distinct, sweep: None },
        CheckDescriptor { id: "lift.quadric", module: "lagrangians", description: "quadric circle-bundle lift equals the Psi image of the orbit", params: KM, instances: KM_RUN, run: lift_quadric, sweep: None },
        CheckDescriptor { id: "lift.projective", module: "lagrangians", description: "projective circle-bundle lift equals the Psi^P image of the orbit", params: KM, instances: KM_RUN, run: lift_projective, sweep: None },
        CheckDescriptor { id: "lift.diagonal", module: "lagrangians", description: "unit circle bundle over a great circle equals the level torus", params: &[], instances: &[], run: |c, _| torus_pair(c, diagonal_circle_lift(), t_ep()), sweep: None },
        CheckDescriptor { id: "isotropy.tori", module: "lagrangians", description: "every catalog torus is Lagrangian and immersed", params: &[], instances: &[], run: isotropy_tori, sweep: None },
        CheckDescriptor { id: "isotropy.orbit", module: "lagrangians", description: "the iota orbit is Lagrangian in T*S^{k+m+1}", params: &[("k", "1"), ("m", "1"), ("r", "0.5")], instances: &[], run: isotropy_orbit, sweep: None },
        CheckDescriptor { id: "isotropy.sphere-factor", module: "lagrangians", description: "a sphere factor of S^2 x S^2 is not isotropic", params: &[], instances: &[], run: sphere_factor, sweep: None },
        CheckDescriptor { id: "invariance.orbit", module: "lagrangians", description: "the iota orbit is invariant under the flow and the block rotations", params: &[("k", "1"), ("m", "2")], instances: &[], run: orbit_invariance, sweep: None },
        CheckDescriptor { id: "iota.two-to-one", module: "lagrangians", description: "iota identifies (e^{it}, x, y) with (-e^{it}, -x, -y)", params: &[], instances: &[], run: iota_two_to_one, sweep: None },
        CheckDescriptor {
            id: "area.level-curve",
            module: "lagrangians",
            description: "the level curve of parameter alpha encloses area pi (1 - alpha)",
            params: &[("alpha", "0.25")],
            instances: &["alpha=0.25", "alpha=1/3", "alpha=0.5"],
            run: |_, p| Ok(area_outcome(level_area(p.f64("alpha")?)?, NUMERIC)),
            sweep: Some(("alpha", |_, a| level_area(a))),
        },
        CheckDescriptor {
            id: "area.omega-prime-disk",
            module: "calculus",
            description: "centered disk of radius a has omega'-area 2 pi (1 - sqrt(1 - a^2))",
            params: &[("a", "0.5")],
            instances: &["a=0.2", "a=0.4", "a=0.5", "a=0.745355992499929", "a=0.9"],
            run: |_, p| Ok(area_outcome(omega_prime_area(p.f64("a")?)?, NUMERIC)),
            sweep: Some(("a", |_, a| omega_prime_area(a))),
        },
        CheckDescriptor { id: "area.cap-disk", module: "calculus", description: "the cap disk has half-form area pi/2", params: &[], instances: &[], run: |_, _| Ok(area_outcome((disk_integral(&cap_disk, &omega_sphere(0.5), 64).value.abs(), PI / 2.0), NUMERIC)), sweep: None },
        CheckDescriptor {
            id: "area.gamma-prime",
            module: "lagrangians",
            description: "the disk-model preimage of the cap boundary encloses pi/2",
            params: &[],
            instances: &[],
            run: |_, _| {
                let g = |s: f64| {
                    let z = psi_disk_inv(&gamma_prime(s));
                    [z[0], z[1]]
                };
                Ok(area_outcome((planar_area(&g, &std_primitive).value.abs(), PI / 2.0), NUMERIC))
            },
            sweep: None,
        },
        CheckDescriptor {
            id: "area.c-tilde",
            module: "lagrangians",
            description: "the rescaled level curve in the ball encloses pi/3",
            params: &[],
            instances: &[],
            run: |_, _| {
                let c = |s: f64| {
                    let w = c01_point(s) / SQRT2;
                    [w.re, w.im]
                };
                Ok(area_outcome((planar_area(&c, &std_primitive).value.abs(), PI / 3.0), NUMERIC))
            },
            sweep: None,
        },
        CheckDescriptor { id: "area.u1", module: "invariants", description: "the disk u1 has area pi at r = 1/2", params: KM, instances: KM_RUN, run: |_, p| u_area(1, p), sweep: None },
        CheckDescriptor { id: "area.u2", module: "invariants", description: "the disk u2 has zero area", params: &[("k", "1"), ("m", "1")], instances: &["k=1&m=1", "k=1&m=2"], run: |_, p| u_area(2, p), sweep: None },
        CheckDescriptor { id: "area.u3", module: "invariants", description: "the disk u3 has zero area", params: KM, instances: KM_RUN, run: |_, p| u_area(3, p), sweep: None },
        CheckDescriptor { id: "area.projective-disks", module: "invariants", description: "areas of the totally real disk, the conic half and the half line", params: &[], instances: &[], run: proj_disks, sweep: None },
        CheckDescriptor { id: "maslov.u1", module: "invariants", description: "Maslov index of u1 is 2(k+m)", params: KM, instances: KM_MASLOV, run: |c, p| maslov_u(1, c, p), sweep: None },
        CheckDescriptor { id: "maslov.u2", module: "invariants", description: "Maslov index of u2 is 0", params: &[("k", "1"), ("m", "1")], instances: &["k=1&m=1"], run: |c, p| maslov_u(2, c, p), sweep: None },
        CheckDescriptor { id: "maslov.u3", module: "invariants", description: "Maslov index of u3 is 0", params: KM, instances: KM_MASLOV, run: |c, p| maslov_u(3, c, p), sweep: None },
        CheckDescriptor { id: "maslov.torus-oracle", module: "invariants", description: "coordinate disk on a product torus has Maslov index 2", params: &[], instances: &[], run: maslov_oracle, sweep: None },
        CheckDescriptor { id: "maslov.loops", module: "invariants", description: "constant loop has index 0, a rotating line 2", params: &[], instances: &[], run: maslov_loops, sweep: None },
        CheckDescriptor { id: "maslov.frame-isotopy", module: "invariants", description: "the interpolating frames stay Lagrangian", params: &[("k", "1"), ("m", "1")], instances: &["k=0&m=1", "k=1&m=1", "k=1&m=2"], run: frame_isotopy_check, sweep: None },
        CheckDescriptor { id: "radius.quadric", module: "invariants", description: "monotone radius 1 - 1/(k+m+1) in the quadric, exact", params: KM, instances: KM_ALL3, run: radius_quadric, sweep: None },
        CheckDescriptor { id: "radius.projective", module: "invariants", description: "monotone radius 1 - 2/(k+m+2) in projective space, exact", params: KM, instances: KM_ALL3, run: radius_projective, sweep: None },
        CheckDescriptor {
            id: "monotone.assembled",
            module: "invariants",
            description: "fiber disk and u1 have equal area/Maslov ratio at the monotone radius",
            params: &[("kind", "quadric"), ("k", "0"), ("m", "1")],
            instances: &["kind=quadric&k=0&m=1", "kind=quadric&k=1&m=1", "kind=projective&k=0&m=1", "kind=projective&k=1&m=1"],
            run: monotone_assembled,
            sweep: None,
        },
        CheckDescriptor { id: "maslov.minimal", module: "invariants", description: "minimal Maslov number k+m (k > 0) or 2m (k = 0)", params: KM, instances: KM_ALL3, run: min_maslov, sweep: None },
        CheckDescriptor { id: "displace.criterion", module: "invariants", description: "the area criterion reproduces the n >= 4 threshold in CP^n", params: &[], instances: &[], run: criterion, sweep: None },
        CheckDescriptor { id: "displace.holonomy", module: "invariants", description: "holonomy angles of the sample disks", params: &[], instances: &[], run: holonomy, sweep: None },
        CheckDescriptor { id: "isotopy.quadric", module: "invariants", description: "area-preserving isotopy displaces L^Q_{0,m}", params: &[("m", "2")], instances: &["m=2", "m=3"], run: isotopy_quadric, sweep: None },
        CheckDescriptor { id: "isotopy.projective", module: "invariants", description: "area-preserving isotopy displaces L^P_{k,m}", params: &[("k", "1"), ("m", "2")], instances: &["k=1&m=2", "k=0&m=3"], run: isotopy_projective, sweep: None },
        CheckDescriptor { id: "isotopy.refused", module: "invariants", description: "targets at half the total area are refused", params: &[], instances: &[], run: isotopy_refused, sweep: None },
        CheckDescriptor { id: "morse.critical", module: "invariants", description: "critical points of the Morse function match the angle oracle", params: KM, instances: KM_MASLOV, run: morse, sweep: None },
        CheckDescriptor { id: "morse.involution", module: "invariants", description: "the Morse function is invariant under the involution", params: &[], instances: &[], run: morse_involution_check, sweep: None },
        CheckDescriptor { id: "floer.enumerate-cp3", module: "floerdata", description: "exactly five Maslov-2 classes with nonnegative intersections", params: &[], instances: &[], run: enumerate_cp3, sweep: None },
        CheckDescriptor { id: "floer.enumerate-cpm", module: "floerdata", description: "only the disk class in CP^{m+1}", params: &[("m", "2")], instances: &["m=2", "m=3"], run: enumerate_cpm, sweep: None },
        CheckDescriptor { id: "floer.class-maslov", module: "floerdata", description: "Maslov indices of the line and basis classes", params: &[], instances: &[], run: class_maslov, sweep: None },
        CheckDescriptor { id: "floer.n-parity", module: "floerdata", description: "the line coefficient in 2B = C1 + C2 + n l is 1", params: &[], instances: &[], run: n_parity, sweep: None },
        CheckDescriptor { id: "floer.superpotential", module: "floerdata", description: "W(1, 1, 2) = 4 with zero gradient for all-plus signs", params: &[], instances: &[], run: superpotential_sample, sweep: None },
        CheckDescriptor { id: "floer.critical", module: "floerdata", description: "closed-form critical points for one sign vector", params: &[("signs", "+,+,+,+,+")], instances: &[], run: critical_signs, sweep: None },
        CheckDescriptor { id: "floer.critical-all-signs", module: "floerdata", description: "closed-form critical points for all 32 sign vectors", params: &[], instances: &[], run: critical_all, sweep: None },
        CheckDescriptor { id: "floer.grid-oracle", module: "floerdata", description: "grid scan counts the same critical points", params: &[], instances: &[], run: grid_oracle, sweep: None },
        CheckDescriptor { id: "floer.no-critical", module: "floerdata", description: "W = +-t_D has no critical points", params: &[("m", "2")], instances: &["m=2", "m=3"], run: no_critical, sweep: None },
    ];
    v.sort_by_key(|d| d.id);
    v
}
