//! Relative homology classes with exact coefficients, Maslov-2 enumeration
//! under positivity of intersections, and the superpotential.

use crate::error::{GeomError, Result};
use crate::geomcore::C64;
use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Which lattice a class lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lattice {
    /// `(CP^3, L^P_{1,1})` with basis `B, C1, C2, D`.
    Cp3,
    /// `(CP^{m+1}, L^P_{0,m})` with basis `l, D`.
    CpM(usize),
}

impl Lattice {
    pub fn basis(&self) -> &'static [&'static str] {
        match self {
            Lattice::Cp3 => &["B", "C1", "C2", "D"],
            Lattice::CpM(_) => &["l", "D"],
        }
    }

    /// Maslov indices of the basis classes.
    pub fn basis_maslov(&self) -> Vec<i64> {
        match self {
            Lattice::Cp3 => vec![4, 0, 0, 2],
            Lattice::CpM(m) => vec![2 * (*m as i64 + 2), 2],
        }
    }

    pub fn divisors(&self) -> DivisorTable {
        match self {
            Lattice::Cp3 => DivisorTable {
                divisors: vec!["Q".into(), "H0+".into(), "H0-".into(), "H2+".into(), "H2-".into()],
                rows: vec![
                    ("B".into(), vec![1, 1, 0, 1, 0]),
                    ("C1".into(), vec![0, 1, -1, 0, 0]),
                    ("C2".into(), vec![0, 0, 0, 1, -1]),
                    ("D".into(), vec![1, 0, 0, 0, 0]),
                    ("l".into(), vec![2, 1, 1, 1, 1]),
                ],
            },
            Lattice::CpM(_) => DivisorTable {
                divisors: vec!["Q".into(), "H".into()],
                rows: vec![("l".into(), vec![2, 1]), ("D".into(), vec![1, 0])],
            },
        }
    }

    /// The class of a complex line.
    pub fn line(&self) -> RelClass {
        match self {
            Lattice::Cp3 => RelClass::new(*self, &[2, -1, -1, 0]),
            Lattice::CpM(_) => RelClass::new(*self, &[1, 0]),
        }
    }
}

/// Integer combination of basis classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelClass {
    pub lattice: Lattice,
    pub coeffs: Vec<BigInt>,
}

impl RelClass {
    pub fn new(lattice: Lattice, coeffs: &[i64]) -> Self {
        assert_eq!(coeffs.len(), lattice.basis().len());
        RelClass { lattice, coeffs: coeffs.iter().map(|c| BigInt::from(*c)).collect() }
    }

    pub fn zero(lattice: Lattice) -> Self {
        RelClass { lattice, coeffs: vec![BigInt::zero(); lattice.basis().len()] }
    }

    pub fn basis_class(lattice: Lattice, name: &str) -> Option<Self> {
        let i = lattice.basis().iter().position(|b| *b == name)?;
        let mut c = vec![0; lattice.basis().len()];
        c[i] = 1;
        Some(Self::new(lattice, &c))
    }

    pub fn add(&self, o: &RelClass) -> RelClass {
        RelClass { lattice: self.lattice, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &RelClass) -> RelClass {
        RelClass { lattice: self.lattice, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, k: i64) -> RelClass {
        RelClass { lattice: self.lattice, coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }

    /// Coefficients as machine integers, for display and characters.
    pub fn small(&self) -> Vec<i64> {
        self.coeffs.iter().map(|c| c.to_i64().expect("coefficient fits in i64")).collect()
    }
}

impl fmt::Display for RelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (c, b) in self.coeffs.iter().zip(self.lattice.basis()) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !c.abs().is_one() {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(b);
        }
        if s.is_empty() {
            s.push('0');
        }
        f.write_str(&s)
    }
}

/// Intersection numbers of classes with a list of divisors.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorTable {
    pub divisors: Vec<String>,
    pub rows: Vec<(String, Vec<i64>)>,
}

impl DivisorTable {
    pub fn row(&self, class: &str) -> Option<&[i64]> {
        self.rows.iter().find(|r| r.0 == class).map(|r| r.1.as_slice())
    }

    pub fn column(&self, divisor: &str) -> Option<usize> {
        self.divisors.iter().position(|d| d == divisor)
    }

    /// Pairing of a class with every divisor, from the basis rows.
    pub fn pairings(&self, a: &RelClass) -> Result<Vec<BigInt>> {
        let mut out = vec![BigInt::zero(); self.divisors.len()];
        for (c, b) in a.coeffs.iter().zip(a.lattice.basis()) {
            let row = self.row(b).ok_or_else(|| GeomError::Parameter(format!("no row for {b}")))?;
            for (o, r) in out.iter_mut().zip(row) {
                *o += c * r;
            }
        }
        Ok(out)
    }
}

pub fn maslov_of_class(a: &RelClass) -> BigInt {
    a.coeffs.iter().zip(a.lattice.basis_maslov()).map(|(c, m)| c * m).sum()
}

/// `lambda * maslov / 2` for a monotone Lagrangian with constant `lambda`.
pub fn area_of_class(a: &RelClass, lambda: &BigRational) -> BigRational {
    lambda * BigRational::from_integer(maslov_of_class(a)) / BigRational::from_integer(2.into())
}

/// `a . x + c >= 0`.
#[derive(Debug, Clone)]
struct Ineq {
    a: Vec<BigRational>,
    c: BigRational,
}

/// Eliminate the last variable by Fourier-Motzkin.
fn eliminate_last(cons: &[Ineq]) -> Vec<Ineq> {
    let n = cons[0].a.len() - 1;
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for c in cons {
        if c.a[n].is_positive() {
            pos.push(c);
        } else if c.a[n].is_negative() {
            neg.push(c);
        } else {
            out.push(Ineq { a: c.a[..n].to_vec(), c: c.c.clone() });
        }
    }
    for p in &pos {
        for q in &neg {
            let (wp, wq) = (-q.a[n].clone(), p.a[n].clone());
            out.push(Ineq {
                a: (0..n).map(|i| &p.a[i] * &wp + &q.a[i] * &wq).collect(),
                c: &p.c * &wp + &q.c * &wq,
            });
        }
    }
    out
}

/// All integer points of a bounded polyhedron, found by projecting to the
/// first coordinate, enumerating its integer range and recursing.
fn integer_points(cons: &[Ineq]) -> Result<Vec<Vec<BigInt>>> {
    let n = cons[0].a.len();
    if n == 0 {
        return Ok(if cons.iter().all(|c| !c.c.is_negative()) { vec![vec![]] } else { vec![] });
    }
    let mut proj = cons.to_vec();
    while proj[0].a.len() > 1 {
        proj = eliminate_last(&proj);
        if proj.is_empty() {
            return Err(GeomError::Numerical("enumeration region is unbounded".into()));
        }
    }
    let (mut lo, mut hi): (Option<BigRational>, Option<BigRational>) = (None, None);
    for c in &proj {
        if c.a[0].is_zero() {
            if c.c.is_negative() {
                return Ok(vec![]);
            }
            continue;
        }
        let b = -&c.c / &c.a[0];
        if c.a[0].is_positive() {
            lo = Some(lo.map_or(b.clone(), |l| l.max(b.clone())));
        } else {
            hi = Some(hi.map_or(b.clone(), |h| h.min(b.clone())));
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(GeomError::Numerical("enumeration region is unbounded".into()));
    };
    let mut out = Vec::new();
    let mut v = lo.ceil().to_integer();
    let top = hi.floor().to_integer();
    while v <= top {
        let fixed = BigRational::from_integer(v.clone());
        let sub: Vec<Ineq> = cons.iter().map(|c| Ineq { a: c.a[1..].to_vec(), c: &c.c + &c.a[0] * &fixed }).collect();
        for mut rest in integer_points(&sub)? {
            rest.insert(0, v.clone());
            out.push(rest);
        }
        v += 1;
    }
    Ok(out)
}

/// Classes of Maslov index 2 with nonnegative intersection with every divisor.
pub fn enumerate_maslov2_positive(lattice: Lattice) -> Result<Vec<RelClass>> {
    let table = lattice.divisors();
    let q = |x: i64| BigRational::from_integer(x.into());
    let nb = lattice.basis().len();
    let mut cons = Vec::new();
    for j in 0..table.divisors.len() {
        let a: Result<Vec<BigRational>> = lattice
            .basis()
            .iter()
            .map(|b| table.row(b).map(|r| q(r[j])).ok_or_else(|| GeomError::Parameter(format!("no row for {b}"))))
            .collect();
        cons.push(Ineq { a: a?, c: q(0) });
    }
    let mu: Vec<BigRational> = lattice.basis_maslov().into_iter().map(q).collect();
    cons.push(Ineq { a: mu.clone(), c: q(-2) });
    cons.push(Ineq { a: mu.iter().map(|x| -x).collect(), c: q(2) });
    debug_assert_eq!(cons[0].a.len(), nb);
    let mut out: Vec<RelClass> =
        integer_points(&cons)?.into_iter().map(|coeffs| RelClass { lattice, coeffs }).collect();
    out.sort_by_key(|c| c.small());
    Ok(out)
}

/// Solve `2B = C1 + C2 + n l` paired against `H0+` for `n`.
pub fn n_parity_check(table: &DivisorTable) -> Result<i64> {
    let col = table.column("H0+").ok_or_else(|| GeomError::Parameter("table has no H0+ column".into()))?;
    let get = |c: &str| table.row(c).map(|r| r[col]).ok_or_else(|| GeomError::Parameter(format!("table has no {c} row")));
    let (b, c1, c2, l) = (get("B")?, get("C1")?, get("C2")?, get("l")?);
    if l == 0 {
        return Err(GeomError::Numerical("line does not meet H0+; n undetermined".into()));
    }
    let num = 2 * b - c1 - c2;
    if num % l != 0 {
        return Err(GeomError::Numerical(format!("n = {num}/{l} is not an integer")));
    }
    Ok(num / l)
}

/// Five signs, one per Maslov-2 class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector(pub [i8; 5]);

impl SignVector {
    pub fn new(s: [i8; 5]) -> Result<Self> {
        if s.iter().any(|e| *e != 1 && *e != -1) {
            return Err(GeomError::Parameter("signs must be +1 or -1".into()));
        }
        Ok(SignVector(s))
    }

    pub fn all_plus() -> Self {
        SignVector([1; 5])
    }

    /// All 32 sign vectors.
    pub fn all() -> Vec<SignVector> {
        (0..32u32).map(|b| SignVector(std::array::from_fn(|i| if b >> i & 1 == 1 { -1 } else { 1 }))).collect()
    }

    pub fn eps(&self, j: usize) -> f64 {
        self.0[j - 1] as f64
    }
}

impl std::str::FromStr for SignVector {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 5 {
            return Err(GeomError::Parameter(format!("expected 5 signs, got {}", parts.len())));
        }
        let mut out = [0i8; 5];
        for (o, p) in out.iter_mut().zip(parts) {
            *o = match p {
                "+" | "+1" | "1" => 1,
                "-" | "-1" => -1,
                _ => return Err(GeomError::Parameter(format!("bad sign {p:?}"))),
            };
        }
        SignVector::new(out)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.0.iter().map(|e| if *e > 0 { "+" } else { "-" }).collect();
        f.write_str(&s.join(","))
    }
}

/// Laurent polynomial `sum c_i t^{a_i}` in several variables.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly {
    pub nvars: usize,
    pub terms: Vec<(C64, Vec<i64>)>,
}

impl LaurentPoly {
    fn check(&self, t: &[C64]) -> Result<()> {
        if t.len() != self.nvars {
            return Err(GeomError::Dimension { expected: self.nvars, got: t.len() });
        }
        if t.iter().any(|z| z.norm() == 0.0) {
            return Err(GeomError::Domain { map: "laurent".into(), detail: "zero coordinate".into() });
        }
        Ok(())
    }

    fn monomial(t: &[C64], a: &[i64]) -> C64 {
        t.iter().zip(a).map(|(z, e)| z.powi(*e as i32)).product()
    }

    pub fn eval(&self, t: &[C64]) -> Result<C64> {
        self.check(t)?;
        Ok(self.terms.iter().map(|(c, a)| c * Self::monomial(t, a)).sum())
    }

    /// `(t_1 d/dt_1, ..., t_n d/dt_n)`.
    pub fn log_gradient(&self, t: &[C64]) -> Result<Vec<C64>> {
        self.check(t)?;
        let mut g = vec![C64::new(0.0, 0.0); self.nvars];
        for (c, a) in &self.terms {
            let v = c * Self::monomial(t, a);
            for (gi, e) in g.iter_mut().zip(a) {
                *gi += v * *e as f64;
            }
        }
        Ok(g)
    }

    pub fn log_hessian(&self, t: &[C64]) -> Result<DMatrix<C64>> {
        self.check(t)?;
        let n = self.nvars;
        let mut h = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
        for (c, a) in &self.terms {
            let v = c * Self::monomial(t, a);
            for i in 0..n {
                for j in 0..n {
                    h[(i, j)] += v * (a[i] * a[j]) as f64;
                }
            }
        }
        Ok(h)
    }
}

/// Exponent vector of the boundary character of a class in the coordinates
/// `(x, y, z) = (chi(dB), chi(dC1), chi(dD))`; `chi(dC2) = x^2 / y`.
pub fn character_exponents(a: &RelClass) -> Vec<i64> {
    match a.lattice {
        Lattice::Cp3 => {
            let c = a.small();
            vec![c[0] + 2 * c[2], c[1] - c[2], c[3]]
        }
        Lattice::CpM(_) => a.small(),
    }
}

/// The Maslov-2 classes of `(CP^3, L^P_{1,1})` in sign order:
/// `B-D, B-D-C1, B-D-C2, B-D-C1-C2, D`.
pub fn cp3_sign_order() -> Vec<RelClass> {
    let l = Lattice::Cp3;
    vec![
        RelClass::new(l, &[1, 0, 0, -1]),
        RelClass::new(l, &[1, -1, 0, -1]),
        RelClass::new(l, &[1, 0, -1, -1]),
        RelClass::new(l, &[1, -1, -1, -1]),
        RelClass::new(l, &[0, 0, 0, 1]),
    ]
}

/// `W = sum_A eps_A chi(dA)` over the Maslov-2 classes.
pub fn superpotential(signs: SignVector) -> LaurentPoly {
    LaurentPoly {
        nvars: 3,
        terms: cp3_sign_order()
            .iter()
            .enumerate()
            .map(|(j, a)| (C64::new(signs.eps(j + 1), 0.0), character_exponents(a)))
            .collect(),
    }
}

pub fn superpotential_eval(signs: SignVector, p: &[C64; 3]) -> Result<C64> {
    superpotential(signs).eval(p)
}

pub fn superpotential_grad(signs: SignVector, p: &[C64; 3]) -> Result<[C64; 3]> {
    let g = superpotential(signs).log_gradient(p)?;
    Ok([g[0], g[1], g[2]])
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CriticalPointReport {
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub z: [f64; 2],
    pub value: [f64; 2],
    pub grad_norm: f64,
    pub polished: bool,
}

fn csqrt_pair(w: C64) -> [C64; 2] {
    let r = w.sqrt();
    [r, -r]
}

/// Damped Newton in log coordinates; at most 20 iterations.
pub fn newton_polish(w: &LaurentPoly, start: &[C64]) -> (Vec<C64>, f64) {
    let mut t = start.to_vec();
    let gnorm = |t: &[C64]| w.log_gradient(t).map(|g| g.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()).unwrap_or(f64::INFINITY);
    let mut res = gnorm(&t);
    for _ in 0..20 {
        if res <= 1e-14 {
            break;
        }
        let (Ok(g), Ok(h)) = (w.log_gradient(&t), w.log_hessian(&t)) else { break };
        let Some(step) = h.lu().solve(&(-DVector::from_vec(g))) else { break };
        let mut damp = 1.0;
        let mut improved = false;
        for _ in 0..10 {
            let cand: Vec<C64> = t.iter().zip(step.iter()).map(|(z, s)| z * (s * damp).exp()).collect();
            let r = gnorm(&cand);
            if r < res {
                t = cand;
                res = r;
                improved = true;
                break;
            }
            damp *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (t, res)
}

/// Closed-form critical points, Newton-polished.
pub fn critical_points(signs: SignVector) -> Vec<CriticalPointReport> {
    let w = superpotential(signs);
    let e = |j| signs.eps(j);
    let mut out = Vec::new();
    for x in csqrt_pair(C64::new(e(1) * e(4), 0.0)) {
        for y in csqrt_pair(C64::new(e(1) * e(2) * e(3) * e(4), 0.0)) {
            if (y + e(1) * e(2)).norm() < 1e-12 {
                continue;
            }
            let z2 = 2.0 * e(4) * e(5) * (y + e(1) * e(2)) / (x * y);
            for z in csqrt_pair(z2) {
                let (t, res) = newton_polish(&w, &[x, y, z]);
                let polished = res <= 1e-12;
                let t = if polished { t } else { vec![x, y, z] };
                let v = w.eval(&t).unwrap_or(C64::new(f64::NAN, f64::NAN));
                out.push(CriticalPointReport {
                    x: [t[0].re, t[0].im],
                    y: [t[1].re, t[1].im],
                    z: [t[2].re, t[2].im],
                    value: [v.re, v.im],
                    grad_norm: if polished { res } else { w.log_gradient(&t).map(|g| g.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()).unwrap_or(f64::INFINITY) },
                    polished,
                });
            }
        }
    }
    out
}

/// Result of a no-critical-point certificate.
#[derive(Debug, Clone, serde::Serialize)]
pub struct NoCriticalCertificate {
    pub terms: usize,
    pub exponent: Vec<i64>,
    pub certified: bool,
}

/// A single monomial `c t^a` with `c != 0` and `a != 0` has log gradient
/// `c a t^a`, which never vanishes on the torus.
pub fn certify_no_critical_points(w: &LaurentPoly) -> NoCriticalCertificate {
    let nonzero: Vec<&(C64, Vec<i64>)> = w.terms.iter().filter(|(c, _)| c.norm() != 0.0).collect();
    if nonzero.len() == 1 {
        let a = nonzero[0].1.clone();
        let certified = a.iter().any(|e| *e != 0);
        NoCriticalCertificate { terms: 1, exponent: a, certified }
    } else {
        NoCriticalCertificate { terms: nonzero.len(), exponent: vec![], certified: false }
    }
}

/// `W = sign * chi(dA)` summed over the Maslov-2 classes of `(CP^{m+1}, L^P_{0,m})`.
pub fn superpotential_cpm(m: usize, sign: i8) -> Result<LaurentPoly> {
    let classes = enumerate_maslov2_positive(Lattice::CpM(m))?;
    Ok(LaurentPoly {
        nvars: 2,
        terms: classes.iter().map(|a| (C64::new(sign as f64, 0.0), character_exponents(a))).collect(),
    })
}

/// Independent count of critical points: scan the unit torus in `(x, y)` for
/// zeros of the `x` and `y` numerators, refine each basin, and count the
/// admissible `z` roots of `z^2 = eps5 S(x, y)`.
pub fn grid_critical_count(signs: SignVector, grid: usize) -> usize {
    let e = |j| signs.eps(j);
    let num = |x: C64, y: C64| -> (C64, C64, C64) {
        let s = e(1) * x + e(2) * x / y + e(3) * y / x + e(4) / x;
        let nx = e(1) * x + e(2) * x / y - e(3) * y / x - e(4) / x;
        let ny = -e(2) * x / y + e(3) * y / x;
        (nx, ny, s)
    };
    let f = |a: f64, b: f64| {
        let (nx, ny, _) = num(C64::from_polar(1.0, a), C64::from_polar(1.0, b));
        nx.norm_sqr() + ny.norm_sqr()
    };
    let h = std::f64::consts::TAU / grid as f64;
    let mut found: Vec<(f64, f64)> = Vec::new();
    for i in 0..grid {
        for j in 0..grid {
            let (a, b) = (i as f64 * h, j as f64 * h);
            let v = f(a, b);
            let is_min = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)]
                .iter()
                .all(|(di, dj)| v <= f(a + *di as f64 * h, b + *dj as f64 * h));
            if !is_min {
                continue;
            }
            // local refinement by shrinking pattern search
            let (mut a, mut b, mut step) = (a, b, h);
            let mut best = v;
            while step > 1e-13 {
                let mut moved = false;
                for (da, db) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
                    let c = f(a + da * step, b + db * step);
                    if c < best {
                        best = c;
                        a += da * step;
                        b += db * step;
                        moved = true;
                        break;
                    }
                }
                if !moved {
                    step *= 0.5;
                }
            }
            if best > 1e-16 {
                continue;
            }
            let (a, b) = (a.rem_euclid(std::f64::consts::TAU), b.rem_euclid(std::f64::consts::TAU));
            let close = |p: &(f64, f64)| {
                let d = |u: f64, v: f64| {
                    let t = (u - v).rem_euclid(std::f64::consts::TAU);
                    t.min(std::f64::consts::TAU - t)
                };
                d(p.0, a) < 1e-6 && d(p.1, b) < 1e-6
            };
            if !found.iter().any(close) {
                found.push((a, b));
            }
        }
    }
    found
        .iter()
        .map(|(a, b)| {
            let (_, _, s) = num(C64::from_polar(1.0, *a), C64::from_polar(1.0, *b));
            if s.norm() < 1e-9 {
                0
            } else {
                2
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_classes() {
        let a = RelClass::new(Lattice::Cp3, &[1, -1, 0, -1]);
        assert_eq!(a.to_string(), "B - C1 - D");
        assert_eq!(RelClass::zero(Lattice::Cp3).to_string(), "0");
    }

    #[test]
    fn sign_parse_round_trip() {
        let s: SignVector = "+,-,+,+,-".parse().unwrap();
        assert_eq!(s.to_string(), "+,-,+,+,-");
        assert!("+,+".parse::<SignVector>().is_err());
    }
}
