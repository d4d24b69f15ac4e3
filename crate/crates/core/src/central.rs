//! Roots of the central companion polynomial, grouped into conjugacy-class
//! candidates `(trace, norm)`.
//!
//! A root `z0` of `Φ` over the algebraic closure can only meet the octonion
//! algebra when it generates an extension of degree 1 or 2. Degree-1 roots
//! give candidates with `T = 2 z0`, `N = z0²`; degree-2 roots give the
//! coefficients of their minimal polynomial `z² - T z + N`.
//!
//! Exact mode factors `Φ` over the rationals (square-free decomposition, then
//! linear and quadratic factors, every factor checked by exact division).
//! Float mode runs a simultaneous Aberth iteration and pairs complex
//! conjugates.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::error::{domain, Error, Result};
use crate::polynomial::CentralPolynomial;
use crate::scalar::{two, Rational, Scalar, Tolerance};

#[derive(Debug, Clone, PartialEq)]
pub struct ClassCandidate<S> {
    pub trace: S,
    pub norm: S,
    /// Degree over the base field of the underlying root, 1 or 2.
    pub field_degree: u8,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CentralRoots<S> {
    pub candidates: Vec<ClassCandidate<S>>,
    /// Degree of the part of `Φ` whose roots were not turned into candidates.
    pub discarded_degree: usize,
    pub notes: Vec<String>,
}

/// Backend that solves a central polynomial over the algebraic closure.
pub trait ClosureRoots: Scalar {
    fn central_roots(phi: &CentralPolynomial<Self>, tol: &Tolerance) -> Result<CentralRoots<Self>>;
}

/// Orders candidates by norm ascending, then trace descending.
fn sort_candidates<S: Scalar>(cands: &mut [ClassCandidate<S>]) {
    cands.sort_by(|a, b| {
        a.norm
            .partial_cmp(&b.norm)
            .unwrap_or(Ordering::Equal)
            .then(b.trace.partial_cmp(&a.trace).unwrap_or(Ordering::Equal))
    });
}

// ---------------------------------------------------------------------------
// Exact backend

/// Monic linear or quadratic factors of `Φ` over the rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactFactorization {
    /// Monic factors of degree 1 or 2 with their multiplicities.
    pub factors: Vec<(CentralPolynomial<Rational>, usize)>,
    /// Everything not split off, including the leading coefficient of `Φ`.
    pub remainder: CentralPolynomial<Rational>,
}

impl ExactFactorization {
    /// Product of all factors (with multiplicity) and the remainder.
    pub fn expand(&self) -> CentralPolynomial<Rational> {
        let mut acc = self.remainder.coeffs().to_vec();
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = upoly::mul(&acc, f.coeffs());
            }
        }
        CentralPolynomial::new(acc)
    }
}

/// Dense univariate helpers over the rationals, lowest degree first.
mod upoly {
    use super::*;

    pub fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
        while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        if p.is_empty() {
            p.push(Rational::zero());
        }
        p
    }

    pub fn degree(p: &[Rational]) -> usize {
        p.len() - 1
    }

    pub fn is_const(p: &[Rational]) -> bool {
        p.len() == 1
    }

    pub fn monic(p: &[Rational]) -> Vec<Rational> {
        let lc = p.last().unwrap().clone();
        p.iter().map(|c| c / &lc).collect()
    }

    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|k| {
                let x = a.get(k).cloned().unwrap_or_else(Rational::zero);
                let y = b.get(k).cloned().unwrap_or_else(Rational::zero);
                x - y
            })
            .collect();
        trim(out)
    }

    pub fn derivative(p: &[Rational]) -> Vec<Rational> {
        if p.len() <= 1 {
            return vec![Rational::zero()];
        }
        let out = p
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect();
        trim(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let db = degree(b);
        let lc = b.last().unwrap();
        let mut r = a.to_vec();
        if a.len() < b.len() {
            return (vec![Rational::zero()], trim(r));
        }
        let mut q = vec![Rational::zero(); a.len() - db];
        for k in (0..q.len()).rev() {
            let c = &r[k + db] / lc;
            if !c.is_zero() {
                for (j, bj) in b.iter().enumerate() {
                    r[k + j] -= &c * bj;
                }
            }
            q[k] = c;
        }
        r.truncate(db.max(1));
        (trim(q), trim(r))
    }

    /// Exact quotient if `b` divides `a`.
    pub fn divide_exact(a: &[Rational], b: &[Rational]) -> Option<Vec<Rational>> {
        let (q, r) = divrem(a, b);
        if r.iter().all(|c| c.is_zero()) {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd.
    pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !(y.len() == 1 && y[0].is_zero()) {
            let (_, r) = divrem(&x, &y);
            x = y;
            y = r;
        }
        monic(&x)
    }

    pub fn eval(p: &[Rational], z: &Rational) -> Rational {
        p.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
    }

    /// Yun's square-free decomposition of a monic polynomial:
    /// `p = Π f_i^i` with the `f_i` square-free and pairwise coprime.
    pub fn squarefree(p: &[Rational]) -> Vec<(Vec<Rational>, usize)> {
        let mut out = Vec::new();
        if is_const(p) {
            return out;
        }
        let dp = derivative(p);
        let c = gcd(p, &dp);
        let mut w = divrem(p, &c).0;
        let mut y = divrem(&dp, &c).0;
        let mut z = sub(&y, &derivative(&w));
        let mut i = 1;
        while !is_const(&w) {
            let g = gcd(&w, &z);
            if !is_const(&g) {
                out.push((g.clone(), i));
            }
            w = divrem(&w, &g).0;
            y = divrem(&z, &g).0;
            z = sub(&y, &derivative(&w));
            i += 1;
        }
        out
    }

    /// Integer coefficients with content 1, proportional to `p`.
    pub fn primitive(p: &[Rational]) -> Vec<BigInt> {
        let lcm = p
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    pub fn to_f64(p: &[Rational]) -> Vec<f64> {
        p.iter().map(<Rational as Scalar>::to_f64).collect()
    }
}

/// Bound on `±p/q` candidates tried by the rational-root theorem.
const RATIONAL_ROOT_CANDIDATES: usize = 10_000;

/// Positive divisors of `n` when it factors by trial division below 10⁶.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= n {
        if p > limit {
            return None;
        }
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1u32;
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
        if divs.len() > RATIONAL_ROOT_CANDIDATES {
            return None;
        }
    }
    Some(divs)
}

/// Candidate rational roots `±p/q` with `p | a_0`, `q | a_n`.
fn rational_root_candidates(prim: &[BigInt]) -> Option<Vec<Rational>> {
    let a0 = prim.first()?;
    let an = prim.last()?;
    let dp = divisors(a0)?;
    let dq = divisors(an)?;
    if 2 * dp.len() * dq.len() > RATIONAL_ROOT_CANDIDATES {
        return None;
    }
    let mut out = Vec::with_capacity(2 * dp.len() * dq.len());
    for q in &dq {
        for p in &dp {
            let r = Rational::new(p.clone(), q.clone());
            out.push(-r.clone());
            out.push(r);
        }
    }
    Some(out)
}

/// Continued-fraction convergents of `x` with denominators up to `max_den`.
fn convergents(x: f64, max_den: i128) -> Vec<Rational> {
    let mut out = Vec::new();
    if !x.is_finite() {
        return out;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut v = x;
    for _ in 0..64 {
        let a = Float::floor(v);
        if a.abs() > 1e30 {
            break;
        }
        let ai = a as i128;
        let (h2, k2) = match (
            ai.checked_mul(h1).and_then(|t| t.checked_add(h0)),
            ai.checked_mul(k1).and_then(|t| t.checked_add(k0)),
        ) {
            (Some(h), Some(k)) => (h, k),
            _ => break,
        };
        if k2 > max_den {
            break;
        }
        out.push(Rational::new(BigInt::from(h2), BigInt::from(k2)));
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = v - a;
        if frac.abs() < 1e-18 {
            break;
        }
        v = 1.0 / frac;
    }
    out.reverse();
    out
}

/// Splits one square-free monic factor into rational linear and quadratic
/// factors. Returns the factors found and the unsplit part.
fn split_squarefree(p: &[Rational]) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let mut rest = p.to_vec();
    let mut found = Vec::new();

    // Rational-root theorem on the primitive integer form.
    while rest.len() > 1 && rest[0].is_zero() {
        found.push(vec![Rational::zero(), Rational::one()]);
        rest.remove(0);
    }
    if let Some(cands) = rational_root_candidates(&upoly::primitive(&rest)) {
        for r in cands {
            if upoly::degree(&rest) == 0 {
                break;
            }
            if upoly::eval(&rest, &r).is_zero() {
                let lin = vec![-r.clone(), Rational::one()];
                rest = upoly::divrem(&rest, &lin).0;
                found.push(lin);
            }
        }
    }
    if upoly::degree(&rest) == 0 {
        return (found, rest);
    }

    // Remaining rational roots and quadratic factors: float roots propose
    // (T, N), convergents with bounded denominators propose rationals, exact
    // division decides.
    let max_den = {
        let prim = upoly::primitive(&rest);
        prim.last()
            .and_then(|a| a.abs().to_i128())
            .unwrap_or(i128::MAX)
            .clamp(1, 1_000_000_000_000)
    };
    let Ok(mut roots) = numeric_roots(&upoly::to_f64(&rest), &Tolerance::default()) else {
        return (found, rest);
    };

    let try_factor = |rest: &mut Vec<Rational>, t: f64, n: Option<f64>| -> Option<Vec<Rational>> {
        let t_cands = convergents(t, max_den);
        match n {
            None => {
                for r in t_cands {
                    let lin = vec![-r, Rational::one()];
                    if let Some(q) = upoly::divide_exact(rest, &lin) {
                        *rest = q;
                        return Some(lin);
                    }
                }
                None
            }
            Some(n) => {
                let n_cands = convergents(n, max_den);
                for tq in &t_cands {
                    for nq in &n_cands {
                        let quad = vec![nq.clone(), -tq.clone(), Rational::one()];
                        if let Some(q) = upoly::divide_exact(rest, &quad) {
                            *rest = q;
                            return Some(quad);
                        }
                    }
                }
                None
            }
        }
    };

    // Real roots that are rational.
    let mut k = 0;
    while k < roots.len() {
        let z = roots[k];
        if z.im.abs() <= 1e-7 * (1.0 + z.norm()) {
            if let Some(f) = try_factor(&mut rest, z.re, None) {
                found.push(f);
                roots.remove(k);
                continue;
            }
        }
        k += 1;
    }

    // Pairs of roots whose sum and product are real.
    let mut i = 0;
    'outer: while i < roots.len() {
        for j in (i + 1)..roots.len() {
            let (a, b) = (roots[i], roots[j]);
            let s = a + b;
            let p = a * b;
            let scale = 1.0 + a.norm() + b.norm();
            if s.im.abs() > 1e-7 * scale || p.im.abs() > 1e-7 * scale * scale {
                continue;
            }
            if let Some(f) = try_factor(&mut rest, s.re, Some(p.re)) {
                found.push(f);
                roots.remove(j);
                roots.remove(i);
                continue 'outer;
            }
        }
        i += 1;
    }
    (found, rest)
}

/// Splits `Φ` into monic rational factors of degree 1 and 2 with
/// multiplicities, plus an exact remainder.
pub fn exact_quadratic_factors(phi: &CentralPolynomial<Rational>) -> Result<ExactFactorization> {
    if phi.is_zero() {
        return Err(domain("the zero polynomial has no roots to classify"));
    }
    let coeffs = phi.coeffs();
    let lc = coeffs.last().unwrap().clone();
    let monic = upoly::monic(coeffs);
    let mut factors = Vec::new();
    let mut remainder = vec![lc];
    for (part, mult) in upoly::squarefree(&monic) {
        let (found, rest) = split_squarefree(&part);
        for f in found {
            factors.push((CentralPolynomial::new(f), mult));
        }
        for _ in 0..mult {
            remainder = upoly::mul(&remainder, &rest);
        }
    }
    Ok(ExactFactorization {
        factors,
        remainder: CentralPolynomial::new(remainder),
    })
}

impl ClosureRoots for Rational {
    fn central_roots(phi: &CentralPolynomial<Self>, _tol: &Tolerance) -> Result<CentralRoots<Self>> {
        let fact = exact_quadratic_factors(phi)?;
        let mut candidates: Vec<ClassCandidate<Rational>> = Vec::new();
        for (f, mult) in &fact.factors {
            let c = f.coeffs();
            let cand = if c.len() == 2 {
                let z0 = -c[0].clone();
                ClassCandidate {
                    trace: two::<Rational>() * z0.clone(),
                    norm: z0.clone() * z0,
                    field_degree: 1,
                    multiplicity: *mult,
                }
            } else {
                ClassCandidate {
                    trace: -c[1].clone(),
                    norm: c[0].clone(),
                    field_degree: 2,
                    multiplicity: *mult,
                }
            };
            match candidates
                .iter_mut()
                .find(|x| x.trace == cand.trace && x.norm == cand.norm)
            {
                Some(x) => x.multiplicity += cand.multiplicity,
                None => candidates.push(cand),
            }
        }
        sort_candidates(&mut candidates);
        let discarded_degree = fact.remainder.degree();
        let mut notes = Vec::new();
        if discarded_degree > 0 {
            notes.push(format!(
                "{discarded_degree} roots of the companion polynomial were not split into rational factors of degree <= 2 and cannot meet the algebra"
            ));
        }
        Ok(CentralRoots {
            candidates,
            discarded_degree,
            notes,
        })
    }
}

// ---------------------------------------------------------------------------
// Float backend

const ABERTH_MAX_ITER: usize = 200;

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `Σ |b_k| |z|^k`
fn eval_scale(coeffs: &[f64], r: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.abs())
}

/// `Σ k |b_k| |z|^(k-1)`
fn derivative_scale(coeffs: &[f64], r: f64) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .rev()
        .fold(0.0, |acc, (k, c)| acc * r + k as f64 * c.abs())
}

/// All complex roots of a real polynomial (lowest degree first), by Aberth
/// iteration from a perturbed circle followed by one Newton step per root.
pub fn numeric_roots(coeffs: &[f64], tol: &Tolerance) -> Result<Vec<Complex64>> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
        coeffs.pop();
    }
    let n = coeffs.len() - 1;
    if n == 0 {
        return Err(domain("numeric root finding needs degree >= 1"));
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(domain("non-finite polynomial coefficient"));
    }
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();

    // Roots at zero are exact; strip them so the circle radius is sensible.
    let zeros = monic.iter().take_while(|c| **c == 0.0).count();
    let work = &monic[zeros..];
    let m = work.len() - 1;
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    if m == 0 {
        return Ok(roots);
    }

    let radius = Float::powf(work[0].abs(), 1.0 / m as f64).max(1e-3);
    let mut rng = SmallRng::seed_from_u64(0x0ab3_17f1 ^ m as u64);
    let mut z: Vec<Complex64> = (0..m)
        .map(|k| {
            let angle = 2.0 * PI * k as f64 / m as f64 + 0.4 + rng.gen_range(-0.1..0.1);
            let r = radius * (1.0 + rng.gen_range(-0.05..0.05));
            Complex64::from_polar(r, angle)
        })
        .collect();

    for _ in 0..ABERTH_MAX_ITER {
        let mut max_step = 0.0f64;
        for k in 0..m {
            let (p, dp) = horner(work, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..m {
                if j != k {
                    s += (z[k] - z[j]).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[k] -= w;
                max_step = max_step.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }

    for zk in z.iter_mut() {
        let (p, dp) = horner(work, *zk);
        if dp.norm() > 0.0 {
            let cand = *zk - p / dp;
            if cand.is_finite() && horner(work, cand).0.norm() <= p.norm() {
                *zk = cand;
            }
        }
    }

    let residuals: Vec<f64> = z.iter().map(|zk| horner(&coeffs, *zk).0.norm()).collect();
    let ok = z
        .iter()
        .zip(residuals.iter())
        .all(|(zk, r)| *r <= tol.bound(eval_scale(&coeffs, zk.norm())));
    if !ok {
        return Err(Error::NumericFailure {
            message: format!("Aberth iteration did not converge in {ABERTH_MAX_ITER} steps"),
            residuals,
        });
    }
    roots.extend(z);
    Ok(roots)
}

/// A root of multiplicity `m` is only located to about `ε^(1/m)` by
/// simultaneous iteration, but it is a simple root of `Φ^(m-1)`. Newton on
/// that derivative recovers full precision; the estimate is kept if Newton
/// wanders off.
fn refine_multiple(coeffs: &[f64], start: Complex64, m: usize) -> Complex64 {
    if m < 2 {
        return start;
    }
    let mut d = coeffs.to_vec();
    for _ in 1..m {
        d = d.iter().enumerate().skip(1).map(|(k, c)| k as f64 * c).collect();
    }
    let radius = MERGE_RADIUS * (1.0 + start.norm());
    let mut z = start;
    for _ in 0..50 {
        let (p, dp) = horner(&d, z);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        if !step.is_finite() {
            return start;
        }
        z -= step;
        if step.norm() <= f64::EPSILON * (1.0 + z.norm()) {
            break;
        }
    }
    if (z - start).norm() <= radius {
        z
    } else {
        start
    }
}

/// Relative radius within which roots with a vanishing derivative merge.
const MERGE_RADIUS: f64 = 1e-4;

struct Cluster {
    center: Complex64,
    members: Vec<Complex64>,
}

/// Groups numerically repeated roots. Two roots merge when they are within
/// `10·(abs_eps + rel_eps·|z|)`, or when they are within `1e-4·(1+|z|)` and the
/// derivative nearly vanishes at their midpoint (a multiple root smeared by
/// rounding).
fn cluster_roots(coeffs: &[f64], roots: &[Complex64], tol: &Tolerance) -> Vec<Cluster> {
    let mut clusters: Vec<Cluster> = Vec::new();
    for &r in roots {
        let near = clusters.iter_mut().find(|c| {
            let d = (c.center - r).norm();
            if d <= 10.0 * tol.bound(r.norm()) {
                return true;
            }
            if d > MERGE_RADIUS * (1.0 + r.norm()) {
                return false;
            }
            let mid = (c.center + r) * 0.5;
            let dp = horner(coeffs, mid).1.norm();
            dp <= 1e-6 * derivative_scale(coeffs, mid.norm()).max(f64::MIN_POSITIVE)
        });
        match near {
            Some(c) => {
                c.members.push(r);
                let k = c.members.len() as f64;
                c.center = c.members.iter().fold(Complex64::new(0.0, 0.0), |a, b| a + b) / k;
            }
            None => clusters.push(Cluster {
                center: r,
                members: vec![r],
            }),
        }
    }
    clusters
}

impl ClosureRoots for f64 {
    fn central_roots(phi: &CentralPolynomial<f64>, tol: &Tolerance) -> Result<CentralRoots<f64>> {
        if phi.coeffs().iter().all(|c| *c == 0.0) {
            return Err(domain("the zero polynomial has no roots to classify"));
        }
        let coeffs = phi.coeffs();
        if coeffs.len() == 1 {
            return Ok(CentralRoots {
                candidates: Vec::new(),
                discarded_degree: 0,
                notes: Vec::new(),
            });
        }
        let roots = numeric_roots(coeffs, tol)?;
        let clusters = cluster_roots(coeffs, &roots, tol);
        let mut notes = Vec::new();

        let mut reals: Vec<(f64, usize)> = Vec::new();
        let mut upper: Vec<(Complex64, usize)> = Vec::new();
        let mut lower: Vec<(Complex64, usize)> = Vec::new();
        for c in clusters {
            let m = c.members.len();
            // A multiple real root comes back as a small cloud near the axis;
            // its mirror image would have been merged into the same cluster.
            let cloud_on_axis =
                m > 1 && 2.0 * c.center.im.abs() <= MERGE_RADIUS * (1.0 + c.center.norm());
            if cloud_on_axis || tol.is_zero_at(c.center.im, c.center.norm()) {
                reals.push((refine_multiple(coeffs, Complex64::new(c.center.re, 0.0), m).re, m));
            } else if c.center.im > 0.0 {
                upper.push((refine_multiple(coeffs, c.center, m), m));
            } else {
                lower.push((refine_multiple(coeffs, c.center, m), m));
            }
        }

        let mut pairs: Vec<(f64, f64, usize)> = Vec::new();
        for (u, mu) in upper {
            let best = lower
                .iter()
                .enumerate()
                .min_by(|a, b| {
                    let da = (a.1 .0 - u.conj()).norm();
                    let db = (b.1 .0 - u.conj()).norm();
                    da.partial_cmp(&db).unwrap_or(Ordering::Equal)
                })
                .map(|(k, _)| k);
            let (re, im, m) = match best {
                Some(k) => {
                    let (l, ml) = lower.remove(k);
                    if ml != mu {
                        notes.push(format!(
                            "conjugate roots near {:.6}±{:.6}i were found with unequal multiplicities {mu} and {ml}",
                            u.re, u.im
                        ));
                    }
                    ((u.re + l.re) / 2.0, (u.im + l.im.abs()) / 2.0, mu.max(ml))
                }
                None => {
                    notes.push(format!(
                        "root {:.6}+{:.6}i had no conjugate partner; symmetrized",
                        u.re, u.im
                    ));
                    (u.re, u.im, mu)
                }
            };
            pairs.push((re, im, m));
        }
        for (l, ml) in lower {
            notes.push(format!(
                "root {:.6}{:.6}i had no conjugate partner; symmetrized",
                l.re, l.im
            ));
            pairs.push((l.re, l.im.abs(), ml));
        }

        let mut candidates: Vec<ClassCandidate<f64>> = Vec::new();
        let mut push = |cand: ClassCandidate<f64>| {
            let scale = cand.trace.abs().max(cand.norm.abs()).max(1.0);
            match candidates.iter_mut().find(|x| {
                x.field_degree == cand.field_degree
                    && tol.is_zero_at(x.trace - cand.trace, scale)
                    && tol.is_zero_at(x.norm - cand.norm, scale)
            }) {
                Some(x) => x.multiplicity += cand.multiplicity,
                None => candidates.push(cand),
            }
        };
        for (r, m) in reals {
            push(ClassCandidate {
                trace: 2.0 * r,
                norm: r * r,
                field_degree: 1,
                multiplicity: m,
            });
        }
        for (re, im, m) in pairs {
            let re = if tol.is_zero_at(re, im.abs()) { 0.0 } else { re };
            push(ClassCandidate {
                trace: 2.0 * re,
                norm: re * re + im * im,
                field_degree: 2,
                multiplicity: m,
            });
        }
        sort_candidates(&mut candidates);
        Ok(CentralRoots {
            candidates,
            discarded_degree: 0,
            notes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> CentralPolynomial<Rational> {
        CentralPolynomial::new(v.iter().map(|&x| Rational::from_i64(x)).collect())
    }

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn cand(t: i64, n: i64, deg: u8, m: usize) -> ClassCandidate<Rational> {
        ClassCandidate {
            trace: q(t),
            norm: q(n),
            field_degree: deg,
            multiplicity: m,
        }
    }

    #[test]
    fn exact_candidates() {
        let tol = Tolerance::default();
        let r = Rational::central_roots(&ints(&[1, 0, 1, 0, 1]), &tol).unwrap();
        assert_eq!(r.candidates, vec![cand(1, 1, 2, 1), cand(-1, 1, 2, 1)]);
        assert_eq!(r.discarded_degree, 0);

        let r = Rational::central_roots(&ints(&[1, 0, 2, 0, 1]), &tol).unwrap();
        assert_eq!(r.candidates, vec![cand(0, 1, 2, 2)]);

        let r = Rational::central_roots(&ints(&[2, 0, 3, 0, 1]), &tol).unwrap();
        assert_eq!(r.candidates, vec![cand(0, 1, 2, 1), cand(0, 2, 2, 1)]);
    }

    #[test]
    fn exact_factor_examples() {
        let f = exact_quadratic_factors(&ints(&[2, 0, 3, 0, 1])).unwrap();
        let mut fs: Vec<_> = f.factors.iter().map(|(p, m)| (p.coeffs().to_vec(), *m)).collect();
        fs.sort_by(|a, b| a.0[0].cmp(&b.0[0]));
        assert_eq!(fs, vec![(vec![q(1), q(0), q(1)], 1), (vec![q(2), q(0), q(1)], 1)]);
        assert_eq!(f.remainder, ints(&[1]));

        let f = exact_quadratic_factors(&ints(&[2, -3, 1])).unwrap();
        let mut fs: Vec<_> = f.factors.iter().map(|(p, m)| (p.coeffs().to_vec(), *m)).collect();
        fs.sort_by(|a, b| b.0[0].cmp(&a.0[0]));
        assert_eq!(fs, vec![(vec![q(-1), q(1)], 1), (vec![q(-2), q(1)], 1)]);

        let f = exact_quadratic_factors(&ints(&[1, 0, 1, 0, 1])).unwrap();
        let mut fs: Vec<_> = f.factors.iter().map(|(p, m)| (p.coeffs().to_vec(), *m)).collect();
        fs.sort_by(|a, b| a.0[1].cmp(&b.0[1]));
        assert_eq!(fs, vec![(vec![q(1), q(-1), q(1)], 1), (vec![q(1), q(1), q(1)], 1)]);
        assert_eq!(f.remainder, ints(&[1]));
    }

    #[test]
    fn exact_factorization_reproduces_input() {
        // 3 (z² + 2)² (z - 1/2) (z³ - 2)
        let base = upoly::mul(&[q(2), q(0), q(1)], &[q(2), q(0), q(1)]);
        let base = upoly::mul(&base, &[Rational::from_ratio(-1, 2), q(1)]);
        let base = upoly::mul(&base, &[q(-2), q(0), q(0), q(1)]);
        let base: Vec<Rational> = base.iter().map(|c| c * q(3)).collect();
        let phi = CentralPolynomial::new(base);
        let f = exact_quadratic_factors(&phi).unwrap();
        assert_eq!(f.expand(), phi);
        assert_eq!(f.remainder.degree(), 3);
        let r = Rational::central_roots(&phi, &Tolerance::default()).unwrap();
        assert_eq!(r.discarded_degree, 3);
        let deg: usize = r
            .candidates
            .iter()
            .map(|c| c.field_degree as usize * c.multiplicity)
            .sum();
        assert_eq!(deg + r.discarded_degree, phi.degree());
    }

    #[test]
    fn exact_large_coefficients() {
        // (z² - 7z + 1234567) (z² + 3z + 98765) (z + 11)
        let p = upoly::mul(&[q(1234567), q(-7), q(1)], &[q(98765), q(3), q(1)]);
        let p = upoly::mul(&p, &[q(11), q(1)]);
        let r = Rational::central_roots(&CentralPolynomial::new(p), &Tolerance::default()).unwrap();
        assert_eq!(r.discarded_degree, 0);
        assert!(r.candidates.contains(&cand(7, 1234567, 2, 1)));
        assert!(r.candidates.contains(&cand(-3, 98765, 2, 1)));
        assert!(r.candidates.contains(&cand(-22, 121, 1, 1)));
    }

    #[test]
    fn zero_polynomial_is_error() {
        assert!(Rational::central_roots(&ints(&[0]), &Tolerance::default()).is_err());
        assert!(f64::central_roots(&CentralPolynomial::new(vec![0.0]), &Tolerance::default()).is_err());
    }

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap()
                .then(a.im.partial_cmp(&b.im).unwrap())
        });
        v
    }

    #[test]
    fn numeric_examples() {
        let tol = Tolerance::default();
        let r = sorted(numeric_roots(&[1.0, 0.0, 1.0], &tol).unwrap());
        assert!((r[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((r[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);

        let r = sorted(numeric_roots(&[1.0, 0.0, 1.0, 0.0, 1.0], &tol).unwrap());
        let h = 3.0f64.sqrt() / 2.0;
        let expect = [(-0.5, -h), (-0.5, h), (0.5, -h), (0.5, h)];
        for (z, (re, im)) in r.iter().zip(expect) {
            assert!((z - Complex64::new(re, im)).norm() < 1e-12, "{z}");
        }

        let r = sorted(numeric_roots(&[2.0, -3.0, 1.0], &tol).unwrap());
        assert!((r[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((r[1] - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn float_candidates_merge_multiplicity() {
        let tol = Tolerance::default();
        let r = f64::central_roots(&CentralPolynomial::new(vec![1.0, 0.0, 2.0, 0.0, 1.0]), &tol).unwrap();
        assert_eq!(r.candidates.len(), 1);
        let c = &r.candidates[0];
        assert_eq!((c.field_degree, c.multiplicity), (2, 2));
        assert!(c.trace.abs() < 1e-12 && (c.norm - 1.0).abs() < 1e-12);

        let r = f64::central_roots(&CentralPolynomial::new(vec![1.0, 0.0, 1.0, 0.0, 1.0]), &tol).unwrap();
        assert_eq!(r.candidates.len(), 2);
        assert!((r.candidates[0].trace - 1.0).abs() < 1e-12);
        assert!((r.candidates[1].trace + 1.0).abs() < 1e-12);

        // (z - 2)²: one real class of multiplicity 2
        let r = f64::central_roots(&CentralPolynomial::new(vec![4.0, -4.0, 1.0]), &tol).unwrap();
        assert_eq!(r.candidates.len(), 1);
        assert_eq!((r.candidates[0].field_degree, r.candidates[0].multiplicity), (1, 2));
        assert!((r.candidates[0].trace - 4.0).abs() < 1e-12);
    }

    #[test]
    fn convergents_recover_fractions() {
        let c = convergents(355.0 / 113.0, 1000);
        assert_eq!(c[0], Rational::new(BigInt::from(355), BigInt::from(113)));
        let c = convergents(-0.75, 10);
        assert!(c.contains(&Rational::new(BigInt::from(-3), BigInt::from(4))));
    }
}
