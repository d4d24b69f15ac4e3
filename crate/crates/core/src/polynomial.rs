//! Standard polynomials over an octonion algebra.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Octonion};
use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// Which side of the powers the coefficients sit on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `c_n z^n + … + c_1 z + c_0`
    Left,
    /// The mirror polynomial `z^n c_n + … + z c_1 + c_0`.
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StandardPolynomial<S> {
    coeffs: Vec<Octonion<S>>,
    side: Side,
}

impl<S: Scalar> StandardPolynomial<S> {
    /// Coefficients are given lowest degree first. Trailing zero
    /// coefficients are dropped; the zero polynomial is rejected.
    pub fn new(mut coeffs: Vec<Octonion<S>>, side: Side) -> Result<Self> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(domain("the zero polynomial is not a valid input"));
        }
        Ok(StandardPolynomial { coeffs, side })
    }

    pub fn left(coeffs: Vec<Octonion<S>>) -> Result<Self> {
        Self::new(coeffs, Side::Left)
    }

    /// `z^n + c_{n-1} z^{n-1} + … + c_0` from the lower coefficients.
    pub fn monic(lower: Vec<Octonion<S>>) -> Self {
        let mut coeffs = lower;
        coeffs.push(Octonion::one());
        StandardPolynomial {
            coeffs,
            side: Side::Left,
        }
    }

    pub fn coeffs(&self) -> &[Octonion<S>] {
        &self.coeffs
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Octonion<S> {
        self.coeffs.last().expect("nonempty by construction")
    }

    pub fn is_monic(&self) -> bool {
        *self.leading() == Octonion::one()
    }

    /// Same coefficients on the other side of the powers.
    pub fn mirror(&self) -> Self {
        StandardPolynomial {
            coeffs: self.coeffs.clone(),
            side: self.side.flip(),
        }
    }

    /// Conjugates every coefficient and flips the side, so that
    /// `conj(φ(λ)) = ψ(conj(λ))` for the returned `ψ`. Roots of a mirror
    /// polynomial are the conjugates of the roots of a left-sided one.
    pub fn conjugate(&self) -> Self {
        StandardPolynomial {
            coeffs: self.coeffs.iter().map(Octonion::conj).collect(),
            side: self.side.flip(),
        }
    }

    fn require_left(&self, what: &str) -> Result<()> {
        if self.side != Side::Left {
            return Err(domain(alloc::format!(
                "{what} is defined for left-coefficient polynomials only"
            )));
        }
        Ok(())
    }

    fn require_monic(&self, what: &str) -> Result<()> {
        self.require_left(what)?;
        if !self.is_monic() {
            return Err(domain(alloc::format!(
                "{what} requires a monic polynomial (leading coefficient 1)"
            )));
        }
        Ok(())
    }

    /// `φ(λ)`, with powers built by repeated multiplication.
    pub fn eval(&self, alg: &Algebra<S>, lam: &Octonion<S>) -> Octonion<S> {
        let powers = alg.powers(lam, self.degree());
        let mut acc = Octonion::zero();
        for (c, p) in self.coeffs.iter().zip(powers.iter()) {
            let term = match self.side {
                Side::Left => alg.mul(c, p),
                Side::Right => alg.mul(p, c),
            };
            acc += &term;
        }
        acc
    }

    /// `Σ ‖c_i‖·‖λ‖^i`, the scale for float zero tests on `φ(λ)`.
    pub fn eval_scale(&self, lam: &Octonion<S>) -> f64 {
        let m = lam.max_magnitude();
        let mut p = 1.0;
        let mut total = 0.0;
        for c in &self.coeffs {
            total += c.max_magnitude() * p;
            p *= m;
        }
        total
    }

    /// The central companion polynomial.
    ///
    /// `b_k` sums `Tr(conj(c_i) c_j)` over `i < j`, `i + j = k`, and adds
    /// `Norm(c_m)` when `k = 2m`.
    pub fn companion(&self, alg: &Algebra<S>) -> Result<CentralPolynomial<S>> {
        self.require_left("the companion polynomial")?;
        let n = self.degree();
        let mut b = vec![S::zero(); 2 * n + 1];
        for (i, ci) in self.coeffs.iter().enumerate() {
            b[2 * i] = b[2 * i].clone() + alg.norm(ci);
            let ci_bar = ci.conj();
            for (j, cj) in self.coeffs.iter().enumerate().skip(i + 1) {
                b[i + j] = b[i + j].clone() + alg.trace(&alg.mul(&ci_bar, cj));
            }
        }
        Ok(CentralPolynomial::new(b))
    }

    /// `E(N,T) = Σ c_i e_i(N,T)` and `G(N,T) = Σ c_i g_i(N,T)`, so that
    /// `φ(λ) = E λ + G` for every `λ` of trace `T` and norm `N`.
    pub fn reduce_to_linear(&self, norm: &S, trace: &S) -> Result<ReducedLinearForm<S>> {
        self.require_left("reduction to a linear form")?;
        let mut e = Octonion::zero();
        let mut g = Octonion::zero();
        for (c, (ei, gi)) in self.coeffs.iter().zip(EgSequence::new(norm, trace)) {
            e += &c.scale(&ei);
            g += &c.scale(&gi);
        }
        Ok(ReducedLinearForm {
            e,
            g,
            norm: norm.clone(),
            trace: trace.clone(),
        })
    }

    /// `φ_γ`: coefficients `γ⁻¹ c_k`, leading coefficient `γ⁻¹`.
    pub fn twist_left(&self, alg: &Algebra<S>, gamma: &Octonion<S>) -> Result<Self> {
        self.require_monic("twisting")?;
        let g_inv = alg.inv(gamma)?;
        let coeffs = self.coeffs.iter().map(|c| alg.mul(&g_inv, c)).collect();
        Ok(StandardPolynomial {
            coeffs,
            side: Side::Left,
        })
    }

    /// `φ^γ`: coefficients `γ⁻¹ c_k γ⁻¹`, leading coefficient `γ⁻²`.
    pub fn twist_two_sided(&self, alg: &Algebra<S>, gamma: &Octonion<S>) -> Result<Self> {
        self.require_monic("twisting")?;
        let g_inv = alg.inv(gamma)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| alg.mul(&alg.mul(&g_inv, c), &g_inv))
            .collect();
        Ok(StandardPolynomial {
            coeffs,
            side: Side::Left,
        })
    }
}

/// `(e_i, g_i)` with `z^i = e_i z + g_i` modulo `z² = T z - N`.
pub fn eg_coeffs<S: Scalar>(norm: &S, trace: &S, i: usize) -> (S, S) {
    EgSequence::new(norm, trace)
        .nth(i)
        .expect("the sequence is infinite")
}

/// Iterator over `(e_i, g_i)` for `i = 0, 1, 2, …`.
struct EgSequence<S> {
    norm: S,
    trace: S,
    e: S,
    g: S,
}

impl<S: Scalar> EgSequence<S> {
    fn new(norm: &S, trace: &S) -> Self {
        EgSequence {
            norm: norm.clone(),
            trace: trace.clone(),
            e: S::zero(),
            g: S::one(),
        }
    }
}

impl<S: Scalar> Iterator for EgSequence<S> {
    type Item = (S, S);

    fn next(&mut self) -> Option<(S, S)> {
        let out = (self.e.clone(), self.g.clone());
        // z (e z + g) = e (T z - N) + g z
        let e_next = self.trace.clone() * self.e.clone() + self.g.clone();
        let g_next = -(self.norm.clone() * self.e.clone());
        self.e = e_next;
        self.g = g_next;
        Some(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReducedLinearForm<S> {
    pub e: Octonion<S>,
    pub g: Octonion<S>,
    pub norm: S,
    pub trace: S,
}

impl<S: Scalar> ReducedLinearForm<S> {
    pub fn eval(&self, alg: &Algebra<S>, lam: &Octonion<S>) -> Octonion<S> {
        alg.mul(&self.e, lam) + self.g.clone()
    }
}

/// Polynomial with coefficients in the base field, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralPolynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> CentralPolynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(S::zero());
        }
        CentralPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval_scalar(&self, z: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * z.clone() + c.clone())
    }

    /// `Σ b_k z^k` at an octonion; central coefficients commute with
    /// everything, so the side does not matter.
    pub fn eval(&self, alg: &Algebra<S>, z: &Octonion<S>) -> Octonion<S> {
        let powers = alg.powers(z, self.degree());
        let mut acc = Octonion::zero();
        for (b, p) in self.coeffs.iter().zip(powers.iter()) {
            acc += &p.scale(b);
        }
        acc
    }

    pub fn scale(&self, s: &S) -> Self {
        CentralPolynomial::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }
}
