//! Points, quaternions, projective distances and seeded samplers.
//!
//! Real points are flat `Vec<f64>`. A complex vector `(z_0, ..., z_n)` is stored
//! interleaved as `(re z_0, im z_0, re z_1, ...)`. Projective points are
//! represented by vectors of norm `sqrt(2)`, which is the radius used for
//! `CP^n(sqrt 2)` and the quadric inside it.

use crate::error::{GeomError, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use sha2::{Digest, Sha256};

pub type C64 = Complex64;

pub const SQRT2: f64 = std::f64::consts::SQRT_2;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(s: f64, a: &[f64]) -> Vec<f64> {
    a.iter().map(|x| s * x).collect()
}

/// `a + s * b`
pub fn axpy(a: &[f64], s: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

pub fn normalize(a: &[f64]) -> Vec<f64> {
    scale(1.0 / norm(a), a)
}

pub fn cross(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn max_abs(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, x| m.max(x.abs()))
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Rotation by `t` in the (2,3)-plane of R^3, fixing e_1.
pub fn rot_e1(t: f64, v: &[f64]) -> [f64; 3] {
    let (s, c) = t.sin_cos();
    [v[0], c * v[1] - s * v[2], s * v[1] + c * v[2]]
}

pub fn to_complex(x: &[f64]) -> Vec<C64> {
    x.chunks(2).map(|p| C64::new(p[0], p[1])).collect()
}

pub fn from_complex(z: &[C64]) -> Vec<f64> {
    z.iter().flat_map(|c| [c.re, c.im]).collect()
}

/// Hermitian product `sum conj(a_j) b_j`.
pub fn herm(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn cnorm2(a: &[C64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum()
}

/// `sum z_j^2`
pub fn csum_sq(z: &[C64]) -> C64 {
    z.iter().map(|c| c * c).sum()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quat {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quat {
    pub const I: Quat = Quat { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Quat = Quat { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Quat = Quat { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quat { w, x, y, z }
    }

    pub fn pure(v: [f64; 3]) -> Self {
        Quat::new(0.0, v[0], v[1], v[2])
    }

    /// The quaternion `z1 + z2 j` for complex `z1, z2`.
    pub fn from_pair(z1: C64, z2: C64) -> Self {
        Quat::new(z1.re, z1.im, z2.re, z2.im)
    }

    pub fn from_slice(v: &[f64]) -> Self {
        Quat::new(v[0], v[1], v[2], v[3])
    }

    pub fn conj(&self) -> Self {
        Quat::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn imag(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn mul(&self, o: &Quat) -> Quat {
        Quat::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

/// `Im(conj(xi) a xi)` for a purely imaginary `a`.
pub fn quat_sandwich(xi: &Quat, a: &Quat) -> Result<[f64; 3]> {
    if a.w.abs() > 1e-14 {
        return Err(GeomError::Constraint(format!(
            "sandwich needs a purely imaginary quaternion, real part {}",
            a.w
        )));
    }
    Ok(xi.conj().mul(a).mul(xi).imag())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint(pub Vec<f64>);

impl SpherePoint {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        let r = (norm(&x) - 1.0).abs();
        if r > 1e-10 {
            return Err(GeomError::Constraint(format!("|x| - 1 = {r:e}")));
        }
        Ok(SpherePoint(x))
    }
}

/// A covector `p` at `q` on the unit sphere, stored as `(p, q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CotangentPoint {
    pub p: Vec<f64>,
    pub q: Vec<f64>,
}

impl CotangentPoint {
    pub fn new(p: Vec<f64>, q: Vec<f64>) -> Result<Self> {
        if p.len() != q.len() {
            return Err(GeomError::Dimension { expected: q.len(), got: p.len() });
        }
        let r = (norm(&q) - 1.0).abs().max(dot(&p, &q).abs());
        if r > 1e-10 {
            return Err(GeomError::Constraint(format!("cotangent residual {r:e}")));
        }
        Ok(CotangentPoint { p, q })
    }

    pub fn flat(&self) -> Vec<f64> {
        [self.p.as_slice(), self.q.as_slice()].concat()
    }

    pub fn from_flat(x: &[f64]) -> Self {
        let n = x.len() / 2;
        CotangentPoint { p: x[..n].to_vec(), q: x[n..].to_vec() }
    }
}

/// A point of the cotangent bundle of real projective space, kept as the
/// canonical one of the two lifts `(p, q)` and `(-p, -q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjCotangentPoint(pub CotangentPoint);

impl ProjCotangentPoint {
    pub fn new(c: CotangentPoint) -> Self {
        let flat = canonicalize_cotangent(&c.flat());
        ProjCotangentPoint(CotangentPoint::from_flat(&flat))
    }
}

/// Pick the lexicographically larger of `x` and `-x`.
pub fn canonicalize_cotangent(x: &[f64]) -> Vec<f64> {
    match x.iter().find(|v| **v != 0.0) {
        Some(v) if *v < 0.0 => scale(-1.0, x),
        _ => x.to_vec(),
    }
}

/// A point of `CP^n(sqrt 2)` given by a representative of norm `sqrt 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint(pub Vec<C64>);

impl ProjPoint {
    /// Rescale any nonzero vector to norm `sqrt 2`.
    pub fn from_vec(z: Vec<C64>) -> Result<Self> {
        let n2 = cnorm2(&z);
        if n2 < 1e-300 {
            return Err(GeomError::Constraint("zero vector has no projective class".into()));
        }
        let s = (2.0 / n2).sqrt();
        Ok(ProjPoint(z.into_iter().map(|c| c * s).collect()))
    }

    pub fn canonical(&self) -> ProjPoint {
        ProjPoint(canonicalize_proj(&self.0))
    }
}

/// A point of the quadric `sum z_j^2 = 0` in `CP^n(sqrt 2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricPoint(pub ProjPoint);

impl QuadricPoint {
    pub fn new(z: Vec<C64>) -> Result<Self> {
        let p = ProjPoint::from_vec(z)?;
        let r = csum_sq(&p.0).norm();
        if r > 1e-10 {
            return Err(GeomError::Constraint(format!("|sum z^2| = {r:e}")));
        }
        Ok(QuadricPoint(p))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrthoMatrix(pub DMatrix<f64>);

impl OrthoMatrix {
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        let n = m.nrows();
        let r = (m.transpose() * &m - DMatrix::identity(n, n)).abs().max();
        if r > 1e-10 {
            return Err(GeomError::Constraint(format!("|A^T A - I| = {r:e}")));
        }
        Ok(OrthoMatrix(m))
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        (&self.0 * nalgebra::DVector::from_column_slice(v)).as_slice().to_vec()
    }
}

/// Fubini-Study chordal distance `sqrt(2 - |<a, b>|)` between lines, for
/// representatives of norm `sqrt 2`. Unnormalized inputs are rescaled first.
///
/// Evaluated as `|a - e^{i phi} b| / sqrt 2` with the aligning phase, which
/// equals the chordal form but keeps full precision near zero.
pub fn proj_dist(a: &[C64], b: &[C64]) -> f64 {
    let a = normalize_rep(a);
    let b = normalize_rep(b);
    let h = herm(&b, &a);
    let ph = if h.norm() > 0.0 { h / h.norm() } else { C64::new(1.0, 0.0) };
    let d2: f64 = a.iter().zip(&b).map(|(x, y)| (x - ph * y).norm_sqr()).sum();
    (d2 / 2.0).sqrt()
}

fn normalize_rep(z: &[C64]) -> Vec<C64> {
    let s = (2.0 / cnorm2(z)).sqrt();
    z.iter().map(|c| c * s).collect()
}

/// Rotate the phase so the first coordinate of (near) maximal modulus is real
/// and positive.
pub fn canonicalize_proj(z: &[C64]) -> Vec<C64> {
    let m = z.iter().fold(0.0_f64, |m, c| m.max(c.norm()));
    let j = z.iter().position(|c| c.norm() >= m * (1.0 - 1e-12)).unwrap_or(0);
    let ph = z[j].conj() / z[j].norm();
    z.iter().map(|c| c * ph).collect()
}

/// Independent random stream for `(root_seed, check_id, index)`.
pub fn stream_rng(root_seed: u64, check_id: &str, index: u64) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(root_seed.to_le_bytes());
    h.update((check_id.len() as u64).to_le_bytes());
    h.update(check_id.as_bytes());
    h.update(index.to_le_bytes());
    let digest = h.finalize();
    let mut seed = [0u8; 32];
    seed.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(seed)
}

pub fn gaussian_vec<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect()
}

/// Uniform point of the unit sphere `S^n` in R^{n+1}.
pub fn sample_sphere<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let g = gaussian_vec(n + 1, rng);
        let r = norm(&g);
        if r > 1e-8 {
            return scale(1.0 / r, &g);
        }
    }
}

/// Uniform direction at a uniform base point, with `|p|` uniform in `[rmin, rmax]`.
pub fn sample_cotangent<R: Rng>(n: usize, rmin: f64, rmax: f64, rng: &mut R) -> CotangentPoint {
    let q = sample_sphere(n, rng);
    loop {
        let g = gaussian_vec(n + 1, rng);
        let p = axpy(&g, -dot(&g, &q), &q);
        let r = norm(&p);
        if r > 1e-8 {
            let len = rng.random_range(rmin..=rmax);
            return CotangentPoint { p: scale(len / r, &p), q };
        }
    }
}

/// Point of the ball shell `rmin <= |x| <= rmax` in R^dim, uniform in volume.
pub fn sample_ball<R: Rng>(dim: usize, rmin: f64, rmax: f64, rng: &mut R) -> Vec<f64> {
    let dir = sample_sphere(dim - 1, rng);
    let u: f64 = rng.random();
    let d = dim as f64;
    let r = (rmin.powf(d) + u * (rmax.powf(d) - rmin.powf(d))).powf(1.0 / d);
    scale(r, &dir)
}

/// Haar-random orthogonal `n x n` matrix.
pub fn sample_ortho<R: Rng>(n: usize, rng: &mut R) -> OrthoMatrix {
    let g = DMatrix::from_vec(n, n, gaussian_vec(n * n, rng));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            for i in 0..n {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    OrthoMatrix(q)
}

/// Representative of norm `sqrt 2` of a uniform point of `CP^n`.
pub fn sample_proj<R: Rng>(n: usize, rng: &mut R) -> Vec<C64> {
    let s = sample_sphere(2 * n + 1, rng);
    to_complex(&scale(SQRT2, &s))
}

/// Representative of a point of the quadric in `CP^{n+1}`: `u + i v` with
/// orthonormal `u, v` in R^{n+2}, times a random phase.
pub fn sample_quadric<R: Rng>(n: usize, rng: &mut R) -> Vec<C64> {
    let u = sample_sphere(n + 1, rng);
    let g = gaussian_vec(n + 2, rng);
    let v = normalize(&axpy(&g, -dot(&g, &u), &u));
    let ph = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    u.iter().zip(&v).map(|(a, b)| ph * C64::new(*a, *b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_proj_example() {
        let ph = C64::from_polar(1.0, 0.7);
        let z = vec![ph, C64::i() * ph];
        let c = canonicalize_proj(&z);
        assert!((c[0] - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((c[1] - C64::i()).norm() < 1e-15);
    }

    #[test]
    fn sandwich_rejects_real_part() {
        let xi = Quat::new(1.0, 2.0, 0.0, 0.0);
        assert!(quat_sandwich(&xi, &Quat::new(0.1, 1.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn quadric_sampler_on_quadric() {
        let mut rng = stream_rng(1, "t", 0);
        for _ in 0..50 {
            let z = sample_quadric(3, &mut rng);
            assert!(csum_sq(&z).norm() < 1e-13);
            assert!((cnorm2(&z) - 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn streams_differ_by_id() {
        let a: u64 = stream_rng(7, "a", 0).random();
        let b: u64 = stream_rng(7, "b", 0).random();
        let a2: u64 = stream_rng(7, "a", 0).random();
        assert_ne!(a, b);
        assert_eq!(a, a2);
    }
}
