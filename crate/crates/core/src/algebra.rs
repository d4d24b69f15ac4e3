//! Octonion algebras `A = Q ⊕ Qℓ` over a characteristic-0 field.
//!
//! The quaternion algebra `Q` has basis `1, i, j, ij` with `i² = α`, `j² = β`,
//! `ij = -ji`. Octonions are written `p + qℓ` with `p, q ∈ Q`, `ℓ² = γ`, and
//! multiplied by the doubling formula
//!
//! ```text
//! (p + qℓ)(r + sℓ) = pr + γ·conj(s)q + (sp + q·conj(r))ℓ
//! ```
//!
//! Coordinates are stored over the ordered basis
//! `e0 = 1, e1 = i, e2 = j, e3 = ij, e4 = ℓ, e5 = iℓ, e6 = jℓ, e7 = (ij)ℓ`.
//! The structure constants are derived from the doubling formula once, when
//! an [`Algebra`] is built, and every product afterwards goes through the
//! table.

use alloc::format;
use core::array;
use core::ops::{Add, AddAssign, Index, Neg, Sub};

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::error::{domain, singular, Error, Result};
use crate::scalar::{half, two, Scalar, Tolerance};

/// Basis labels in storage order, using `k = ij`.
pub const BASIS_LABELS: [&str; 8] = ["1", "i", "j", "k", "l", "il", "jl", "kl"];

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraParams<S> {
    /// `i² = alpha`
    pub alpha: S,
    /// `j² = beta`
    pub beta: S,
    /// `ℓ² = gamma`
    pub gamma: S,
}

impl<S: Scalar> AlgebraParams<S> {
    pub fn new(alpha: S, beta: S, gamma: S) -> Result<Self> {
        if alpha.is_zero() || beta.is_zero() || gamma.is_zero() {
            return Err(Error::Config(
                "algebra parameters alpha, beta, gamma must be nonzero".into(),
            ));
        }
        Ok(AlgebraParams { alpha, beta, gamma })
    }

    /// The real octonions, `α = β = γ = -1`.
    pub fn standard() -> Self {
        AlgebraParams {
            alpha: -S::one(),
            beta: -S::one(),
            gamma: -S::one(),
        }
    }

    /// Coefficients `q_k` of the diagonal norm form `Norm(x) = Σ q_k x_k²`.
    pub fn norm_diagonal(&self) -> [S; 8] {
        let (a, b, g) = (&self.alpha, &self.beta, &self.gamma);
        let ab = a.clone() * b.clone();
        [
            S::one(),
            -a.clone(),
            -b.clone(),
            ab.clone(),
            -g.clone(),
            a.clone() * g.clone(),
            b.clone() * g.clone(),
            -(ab * g.clone()),
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Octonion<S>(pub [S; 8]);

impl<S: Scalar> Octonion<S> {
    pub fn from_coords(coords: [S; 8]) -> Self {
        Octonion(coords)
    }

    pub fn zero() -> Self {
        Octonion(array::from_fn(|_| S::zero()))
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    /// `s·e0`
    pub fn scalar(s: S) -> Self {
        let mut x = Self::zero();
        x.0[0] = s;
        x
    }

    /// The basis element `e_k`.
    pub fn basis(k: usize) -> Self {
        let mut x = Self::zero();
        x.0[k] = S::one();
        x
    }

    /// Build from small integer coordinates.
    pub fn from_ints(c: [i64; 8]) -> Self {
        Octonion(c.map(S::from_i64))
    }

    pub fn coords(&self) -> &[S; 8] {
        &self.0
    }

    pub fn real(&self) -> &S {
        &self.0[0]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Pure part: coordinates 1..7, with the real part cleared.
    pub fn pure(&self) -> Self {
        let mut x = self.clone();
        x.0[0] = S::zero();
        x
    }

    pub fn scale(&self, s: &S) -> Self {
        Octonion(array::from_fn(|k| self.0[k].clone() * s.clone()))
    }

    /// Involution: fixes `e0`, negates `e1..e7`.
    pub fn conj(&self) -> Self {
        Octonion(array::from_fn(|k| {
            if k == 0 {
                self.0[0].clone()
            } else {
                -self.0[k].clone()
            }
        }))
    }

    /// Largest coordinate magnitude, the scale for float zero tests.
    pub fn max_magnitude(&self) -> f64 {
        self.0.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    pub fn is_negligible(&self, scale: f64, tol: &Tolerance) -> bool {
        self.0.iter().all(|c| c.is_negligible(scale, tol))
    }

    pub fn approx_eq(&self, other: &Self, scale: f64, tol: &Tolerance) -> bool {
        if S::EXACT {
            self == other
        } else {
            (self.clone() - other.clone()).is_negligible(scale, tol)
        }
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> Octonion<T> {
        Octonion(self.0.each_ref().map(f))
    }
}

impl<S> Index<usize> for Octonion<S> {
    type Output = S;
    fn index(&self, k: usize) -> &S {
        &self.0[k]
    }
}

/// Coordinates in basis order, e.g. `[1/2, 0, 0, 1/2, 0, 1/2, 1/2, 0]`.
impl<S: core::fmt::Display> core::fmt::Display for Octonion<S> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl<S: Scalar> Add for Octonion<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Octonion(array::from_fn(|k| self.0[k].clone() + rhs.0[k].clone()))
    }
}

impl<S: Scalar> Add<&Octonion<S>> for &Octonion<S> {
    type Output = Octonion<S>;
    fn add(self, rhs: &Octonion<S>) -> Octonion<S> {
        Octonion(array::from_fn(|k| self.0[k].clone() + rhs.0[k].clone()))
    }
}

impl<S: Scalar> AddAssign<&Octonion<S>> for Octonion<S> {
    fn add_assign(&mut self, rhs: &Octonion<S>) {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a = a.clone() + b.clone();
        }
    }
}

impl<S: Scalar> Sub for Octonion<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Octonion(array::from_fn(|k| self.0[k].clone() - rhs.0[k].clone()))
    }
}

impl<S: Scalar> Sub<&Octonion<S>> for &Octonion<S> {
    type Output = Octonion<S>;
    fn sub(self, rhs: &Octonion<S>) -> Octonion<S> {
        Octonion(array::from_fn(|k| self.0[k].clone() - rhs.0[k].clone()))
    }
}

impl<S: Scalar> Neg for Octonion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Octonion(self.0.map(|c| -c))
    }
}

impl<S: Scalar> Neg for &Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        Octonion(array::from_fn(|k| -self.0[k].clone()))
    }
}

/// Quaternion product over `1, i, j, ij` with `i² = α`, `j² = β`.
fn quat_mul<S: Scalar>(alpha: &S, beta: &S, x: &[S; 4], y: &[S; 4]) -> [S; 4] {
    let [a1, b1, c1, d1] = x.clone();
    let [a2, b2, c2, d2] = y.clone();
    let ab = alpha.clone() * beta.clone();
    [
        a1.clone() * a2.clone() + alpha.clone() * b1.clone() * b2.clone()
            + beta.clone() * c1.clone() * c2.clone()
            - ab * d1.clone() * d2.clone(),
        a1.clone() * b2.clone() + b1.clone() * a2.clone()
            - beta.clone() * c1.clone() * d2.clone()
            + beta.clone() * d1.clone() * c2.clone(),
        a1.clone() * c2.clone() + c1.clone() * a2.clone()
            + alpha.clone() * b1.clone() * d2.clone()
            - alpha.clone() * d1.clone() * b2.clone(),
        a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
    ]
}

fn quat_conj<S: Scalar>(x: &[S; 4]) -> [S; 4] {
    [x[0].clone(), -x[1].clone(), -x[2].clone(), -x[3].clone()]
}

fn quat_add<S: Scalar>(x: [S; 4], y: [S; 4]) -> [S; 4] {
    let [a, b, c, d] = x;
    let [e, f, g, h] = y;
    [a + e, b + f, c + g, d + h]
}

/// Product computed straight from the doubling formula, without the
/// structure-constant table.
pub fn doubling_product<S: Scalar>(
    params: &AlgebraParams<S>,
    x: &Octonion<S>,
    y: &Octonion<S>,
) -> Octonion<S> {
    let (a, b, g) = (&params.alpha, &params.beta, &params.gamma);
    let p: [S; 4] = array::from_fn(|k| x.0[k].clone());
    let q: [S; 4] = array::from_fn(|k| x.0[k + 4].clone());
    let r: [S; 4] = array::from_fn(|k| y.0[k].clone());
    let s: [S; 4] = array::from_fn(|k| y.0[k + 4].clone());

    let sbar_q = quat_mul(a, b, &quat_conj(&s), &q).map(|c| c * g.clone());
    let lo = quat_add(quat_mul(a, b, &p, &r), sbar_q);
    let hi = quat_add(quat_mul(a, b, &s, &p), quat_mul(a, b, &q, &quat_conj(&r)));
    Octonion(array::from_fn(|k| {
        if k < 4 {
            lo[k].clone()
        } else {
            hi[k - 4].clone()
        }
    }))
}

/// One entry of the multiplication table: `e_a · e_b = coeff · e_index`.
#[derive(Debug, Clone, PartialEq)]
pub struct TableEntry<S> {
    pub coeff: S,
    pub index: usize,
}

/// Structure constants of the algebra, derived from the doubling formula.
pub fn mult_table<S: Scalar>(params: &AlgebraParams<S>) -> [[TableEntry<S>; 8]; 8] {
    array::from_fn(|a| {
        array::from_fn(|b| {
            let prod = doubling_product(params, &Octonion::basis(a), &Octonion::basis(b));
            let mut nonzero = prod.0.iter().enumerate().filter(|(_, c)| !c.is_zero());
            let (index, coeff) = nonzero
                .next()
                .expect("basis products are nonzero for nonzero parameters");
            debug_assert!(nonzero.next().is_none());
            TableEntry {
                coeff: coeff.clone(),
                index,
            }
        })
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum DivisionStatus<S> {
    /// The norm form is provably anisotropic.
    Division,
    /// A nonzero element of norm zero.
    Split(Octonion<S>),
    /// Neither anisotropy nor an isotropic vector could be established.
    Unverified,
}

/// An octonion algebra with its structure constants and float tolerance.
#[derive(Debug, Clone)]
pub struct Algebra<S> {
    params: AlgebraParams<S>,
    table: [[TableEntry<S>; 8]; 8],
    diag: [S; 8],
    tol: Tolerance,
}

const ISOTROPY_SAMPLES: usize = 10_000;

impl<S: Scalar> Algebra<S> {
    pub fn new(params: AlgebraParams<S>) -> Self {
        Self::with_tolerance(params, Tolerance::default())
    }

    pub fn with_tolerance(params: AlgebraParams<S>, tol: Tolerance) -> Self {
        let table = mult_table(&params);
        let diag = params.norm_diagonal();
        Algebra {
            params,
            table,
            diag,
            tol,
        }
    }

    pub fn params(&self) -> &AlgebraParams<S> {
        &self.params
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    pub fn table(&self) -> &[[TableEntry<S>; 8]; 8] {
        &self.table
    }

    pub fn norm_diagonal(&self) -> &[S; 8] {
        &self.diag
    }

    pub fn mul(&self, x: &Octonion<S>, y: &Octonion<S>) -> Octonion<S> {
        let mut z = Octonion::<S>::zero();
        for (a, xa) in x.0.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.0.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let TableEntry { coeff, index } = &self.table[a][b];
                let p = xa.clone() * yb.clone();
                let slot = &mut z.0[*index];
                // structure constants are ±1 for the usual parameters
                let acc = core::mem::replace(slot, S::zero());
                *slot = if coeff.is_one() {
                    acc + p
                } else if (-coeff.clone()).is_one() {
                    acc - p
                } else {
                    acc + coeff.clone() * p
                };
            }
        }
        z
    }

    /// `x^n` by left-to-right repeated multiplication.
    pub fn pow(&self, x: &Octonion<S>, n: usize) -> Octonion<S> {
        let mut acc = Octonion::one();
        for _ in 0..n {
            acc = self.mul(x, &acc);
        }
        acc
    }

    /// `1, x, x², …, x^n`
    pub fn powers(&self, x: &Octonion<S>, n: usize) -> alloc::vec::Vec<Octonion<S>> {
        let mut out = alloc::vec::Vec::with_capacity(n + 1);
        out.push(Octonion::one());
        for i in 1..=n {
            let next = self.mul(x, &out[i - 1]);
            out.push(next);
        }
        out
    }

    pub fn trace(&self, x: &Octonion<S>) -> S {
        two::<S>() * x.0[0].clone()
    }

    pub fn norm(&self, x: &Octonion<S>) -> S {
        x.0.iter()
            .zip(self.diag.iter())
            .fold(S::zero(), |acc, (c, q)| acc + q.clone() * c.clone() * c.clone())
    }

    /// `(Tr(x), Norm(x))`
    pub fn quadratic_invariants(&self, x: &Octonion<S>) -> (S, S) {
        (self.trace(x), self.norm(x))
    }

    /// Polarization of the norm: `Norm(x+y) - Norm(x) - Norm(y)`.
    pub fn bilinear_form(&self, x: &Octonion<S>, y: &Octonion<S>) -> S {
        x.0.iter()
            .zip(y.0.iter())
            .zip(self.diag.iter())
            .fold(S::zero(), |acc, ((a, b), q)| {
                acc + two::<S>() * q.clone() * a.clone() * b.clone()
            })
    }

    /// Magnitude of the terms summed in `Norm(x)`.
    pub fn norm_scale(&self, x: &Octonion<S>) -> f64 {
        x.0.iter()
            .zip(self.diag.iter())
            .map(|(c, q)| q.magnitude() * c.magnitude() * c.magnitude())
            .sum()
    }

    pub fn is_invertible(&self, x: &Octonion<S>) -> bool {
        !self.norm(x).is_negligible(self.norm_scale(x), &self.tol)
    }

    /// `conj(x) / Norm(x)`
    pub fn inv(&self, x: &Octonion<S>) -> Result<Octonion<S>> {
        let n = self.norm(x);
        if n.is_negligible(self.norm_scale(x), &self.tol) {
            return Err(singular(format!("{x} has zero norm")));
        }
        Ok(x.conj().scale(&(S::one() / n)))
    }

    /// Equality of scalars under the algebra's tolerance.
    pub fn scalar_eq(&self, a: &S, b: &S) -> bool {
        let scale = a.magnitude().max(b.magnitude());
        a.approx_eq(b, scale, &self.tol)
    }

    pub fn oct_eq(&self, x: &Octonion<S>, y: &Octonion<S>) -> bool {
        let scale = x.max_magnitude().max(y.max_magnitude());
        x.approx_eq(y, scale, &self.tol)
    }

    /// Elements are conjugate iff trace and norm agree.
    pub fn same_class(&self, x: &Octonion<S>, y: &Octonion<S>) -> bool {
        let (tx, nx) = self.quadratic_invariants(x);
        let (ty, ny) = self.quadratic_invariants(y);
        self.scalar_eq(&tx, &ty) && self.scalar_eq(&nx, &ny)
    }

    /// A trace-zero `δ` with `(δh)δ⁻¹ = g`.
    pub fn conjugator(&self, g: &Octonion<S>, h: &Octonion<S>) -> Result<Octonion<S>> {
        if !self.same_class(g, h) {
            return Err(domain("conjugator: elements are not conjugate"));
        }
        let g_scale = g.max_magnitude();
        if g.pure().is_negligible(g_scale, &self.tol) {
            return Ok(Octonion::one());
        }
        let hbar = h.conj();
        if !self.oct_eq(g, &hbar) {
            return Ok(g - &hbar);
        }
        let one = Octonion::one();
        let candidates = (1..8)
            .map(Octonion::basis)
            .chain((1..8).flat_map(|a| {
                ((a + 1)..8).map(move |b| Octonion::basis(a) + Octonion::basis(b))
            }));
        for delta in candidates {
            let scale = g_scale.max(1.0);
            if self.trace(&delta).is_negligible(scale, &self.tol)
                && self.bilinear_form(&one, &delta).is_negligible(scale, &self.tol)
                && self.bilinear_form(g, &delta).is_negligible(scale, &self.tol)
                && self.is_invertible(&delta)
            {
                return Ok(delta);
            }
        }
        Err(domain("conjugator: no invertible element orthogonal to 1 and g"))
    }

    /// Decide whether the algebra is a division algebra.
    pub fn division_check(&self) -> DivisionStatus<S> {
        let p = &self.params;
        if p.alpha.is_neg() && p.beta.is_neg() && p.gamma.is_neg() {
            return DivisionStatus::Division;
        }
        // Two-term witnesses q_a x² + q_b y² = 0.
        for a in 0..8 {
            for b in (a + 1)..8 {
                let ratio = -(self.diag[b].clone() / self.diag[a].clone());
                if let Some(r) = ratio.sqrt() {
                    let w = Octonion::basis(a).scale(&r) + Octonion::basis(b);
                    if !w.is_zero() && self.norm(&w).is_zero() {
                        return DivisionStatus::Split(w);
                    }
                }
            }
        }
        let mut rng = SmallRng::seed_from_u64(0x6f63_7461);
        for _ in 0..ISOTROPY_SAMPLES {
            let w = Octonion::<S>(array::from_fn(|_| S::from_i64(rng.gen_range(-3..=3))));
            if !w.is_zero() && self.norm(&w).is_zero() {
                return DivisionStatus::Split(w);
            }
        }
        DivisionStatus::Unverified
    }
}

/// `T/2 + u` split of an element with invariants `(T, N)`: returns `N - T²/4`,
/// the norm its pure part must have.
pub(crate) fn pure_norm<S: Scalar>(trace: &S, norm: &S) -> S {
    let t_half = trace.clone() * half::<S>();
    norm.clone() - t_half.clone() * t_half
}
