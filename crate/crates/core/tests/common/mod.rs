//! Random inputs shared by the integration tests.

#![allow(dead_code)]

use octoroots::{Algebra, AlgebraParams, Octonion, Rational, Scalar, StandardPolynomial};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

pub fn exact_algebra() -> Algebra<Rational> {
    Algebra::new(AlgebraParams::standard())
}

pub fn float_algebra() -> Algebra<f64> {
    Algebra::new(AlgebraParams::standard())
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

pub struct Gen {
    rng: SmallRng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: SmallRng::seed_from_u64(seed),
        }
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    /// Half-integers in [-3, 3] for exact scalars; three-decimal values in
    /// [-10, 10] for floats.
    pub fn scalar<S: Scalar>(&mut self) -> S {
        if S::EXACT {
            S::from_ratio(self.rng.gen_range(-6..=6), 2)
        } else {
            S::from_ratio(self.rng.gen_range(-10_000..=10_000), 1000)
        }
    }

    pub fn small_int<S: Scalar>(&mut self) -> S {
        S::from_i64(self.rng.gen_range(-3..=3))
    }

    pub fn octonion<S: Scalar>(&mut self) -> Octonion<S> {
        Octonion::from_coords(core::array::from_fn(|_| self.scalar()))
    }

    /// Integer coordinates in [-3, 3], about half of them zero.
    pub fn sparse_octonion<S: Scalar>(&mut self) -> Octonion<S> {
        Octonion::from_coords(core::array::from_fn(|_| {
            if self.coin() {
                S::zero()
            } else {
                self.small_int()
            }
        }))
    }

    pub fn nonzero<S: Scalar>(&mut self, gen: impl Fn(&mut Self) -> Octonion<S>) -> Octonion<S> {
        loop {
            let x = gen(self);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Coordinates only on 1, i, j, ij.
    pub fn quaternion<S: Scalar>(&mut self) -> Octonion<S> {
        Octonion::from_coords(core::array::from_fn(|k| {
            if k < 4 {
                self.small_int()
            } else {
                S::zero()
            }
        }))
    }

    pub fn pure<S: Scalar>(&mut self) -> Octonion<S> {
        loop {
            let x = self.sparse_octonion::<S>().pure();
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Monic polynomial of the given degree with random lower coefficients.
    pub fn monic<S: Scalar>(&mut self, degree: usize) -> StandardPolynomial<S> {
        StandardPolynomial::monic((0..degree).map(|_| self.sparse_octonion()).collect())
    }

    /// Monic polynomial with `root` planted: `c_0 = -Σ_{i≥1} c_i root^i`.
    pub fn planted<S: Scalar>(
        &mut self,
        alg: &Algebra<S>,
        degree: usize,
        root: &Octonion<S>,
        gen: impl Fn(&mut Self) -> Octonion<S>,
    ) -> StandardPolynomial<S> {
        let mut coeffs: Vec<Octonion<S>> = (0..degree).map(|_| gen(self)).collect();
        coeffs.push(Octonion::one());
        let powers = alg.powers(root, degree);
        let mut c0 = Octonion::zero();
        for (c, p) in coeffs.iter().zip(&powers).skip(1) {
            c0 += &alg.mul(c, p);
        }
        coeffs[0] = -c0;
        StandardPolynomial::monic(coeffs[..degree].to_vec())
    }

    /// Same as [`Gen::planted`] but for the mirror polynomial `Σ z^i c_i`,
    /// returned as the left-coefficient polynomial with the same coefficients.
    pub fn planted_mirror<S: Scalar>(
        &mut self,
        alg: &Algebra<S>,
        degree: usize,
        root: &Octonion<S>,
        gen: impl Fn(&mut Self) -> Octonion<S>,
    ) -> StandardPolynomial<S> {
        let mut coeffs: Vec<Octonion<S>> = (0..degree).map(|_| gen(self)).collect();
        coeffs.push(Octonion::one());
        let powers = alg.powers(root, degree);
        let mut c0 = Octonion::zero();
        for (c, p) in coeffs.iter().zip(&powers).skip(1) {
            c0 += &alg.mul(p, c);
        }
        coeffs[0] = -c0;
        StandardPolynomial::monic(coeffs[..degree].to_vec())
    }
}

/// `max |a - b|` over coordinates, relative to `max(1, |a|, |b|)`.
pub fn rel_residual<S: Scalar>(a: &Octonion<S>, b: &Octonion<S>) -> f64 {
    let diff = (a.clone() - b.clone()).max_magnitude();
    diff / a.max_magnitude().max(b.max_magnitude()).max(1.0)
}

pub fn scalar_rel_residual<S: Scalar>(a: &S, b: &S) -> f64 {
    (a.clone() - b.clone()).magnitude() / a.magnitude().max(b.magnitude()).max(1.0)
}
