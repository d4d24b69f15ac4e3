#![no_std]

//! Root finding for standard polynomials over octonion division algebras.
//!
//! A standard polynomial carries its coefficients on the left of the powers,
//! `c_n z^n + ... + c_1 z + c_0`. Its roots are found by passing to the
//! central companion polynomial (coefficients built from traces and norms of
//! products `conj(c_i) c_j`), splitting that into conjugacy-class candidates
//! `(trace, norm)`, and resolving each class through the linear form
//! `E(N,T) z + G(N,T)` obtained by reducing modulo `z^2 - T z + N`.
//!
//! The [`eigen`] module decides left and right eigenvalue membership for the
//! companion matrix of a monic polynomial by testing singularity of an 8x8
//! scalar operator.
//!
//! Two scalar backends are supported: exact rationals ([`Rational`]) and
//! `f64` with a [`Tolerance`].

extern crate alloc;

pub mod algebra;
pub mod central;
pub mod eigen;
mod error;
mod linalg;
pub mod polynomial;
pub mod scalar;
pub mod solver;

pub use crate::algebra::{Algebra, AlgebraParams, DivisionStatus, Octonion};
pub use crate::central::{CentralRoots, ClassCandidate, ClosureRoots};
pub use crate::error::{Error, Result};
pub use crate::polynomial::{CentralPolynomial, ReducedLinearForm, Side, StandardPolynomial};
pub use crate::scalar::{Rational, Scalar, Tolerance};
pub use crate::solver::{solve, ClassResolution, ResolvedClass, RootReport};
