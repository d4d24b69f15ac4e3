//! Left and right eigenvalues of the companion matrix of a monic polynomial.
//!
//! `λ` is a left eigenvalue of `C_φ` iff some nonzero `γ` solves
//! `Σ_{i<n} c_i (λ^i γ) + λ^n γ = 0`, and a right eigenvalue iff some nonzero
//! `v` solves `Σ_{i<n} c_i (v λ^i) + v λ^n = 0`. Both maps are linear over the
//! base field, so membership is a kernel computation on an 8x8 matrix.

use alloc::vec;
use alloc::vec::Vec;
use core::array;

use crate::algebra::{Algebra, Octonion};
use crate::central::{ClassCandidate, ClosureRoots};
use crate::error::{domain, Result};
use crate::linalg::{kernel_vector, Mat8};
use crate::polynomial::{Side, StandardPolynomial};
use crate::scalar::Scalar;
use crate::solver::{solve, verify_root, ClassResolution};

/// Companion matrix: ones on the superdiagonal, last row `(-c_0, …, -c_{n-1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompanionMatrix<S> {
    rows: Vec<Vec<Octonion<S>>>,
}

impl<S: Scalar> CompanionMatrix<S> {
    pub fn new(phi: &StandardPolynomial<S>) -> Result<Self> {
        require_monic(phi)?;
        let n = phi.degree();
        if n == 0 {
            return Err(domain("the companion matrix needs degree >= 1"));
        }
        let mut rows = vec![vec![Octonion::zero(); n]; n];
        for (r, row) in rows.iter_mut().enumerate().take(n - 1) {
            row[r + 1] = Octonion::one();
        }
        for (c, coeff) in phi.coeffs()[..n].iter().enumerate() {
            rows[n - 1][c] = -coeff;
        }
        Ok(CompanionMatrix { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Octonion<S>>] {
        &self.rows
    }

    /// `C v` with entries multiplied as (matrix entry)·(vector entry).
    pub fn apply(&self, alg: &Algebra<S>, v: &[Octonion<S>]) -> Result<Vec<Octonion<S>>> {
        if v.len() != self.dim() {
            return Err(domain(alloc::format!(
                "vector has length {} but the matrix is {}x{}",
                v.len(),
                self.dim(),
                self.dim()
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                row.iter().zip(v).fold(Octonion::zero(), |acc, (m, x)| {
                    if m.is_zero() {
                        acc
                    } else {
                        acc + alg.mul(m, x)
                    }
                })
            })
            .collect())
    }
}

fn require_monic<S: Scalar>(phi: &StandardPolynomial<S>) -> Result<()> {
    if phi.side() != Side::Left || !phi.is_monic() {
        return Err(domain(
            "companion-matrix eigenvalues are defined for monic left-coefficient polynomials",
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipReport<S> {
    pub member: bool,
    /// `γ` (left) or `v_1` (right) spanning part of the kernel.
    pub kernel_element: Option<Octonion<S>>,
    pub eigenvector: Option<Vec<Octonion<S>>>,
}

/// Matrix of a linear map `A -> A` over the octonion basis; column `k` holds
/// the image of `e_k`.
fn operator_matrix<S: Scalar>(f: impl Fn(&Octonion<S>) -> Octonion<S>) -> Mat8<S> {
    let cols: [Octonion<S>; 8] = array::from_fn(|k| f(&Octonion::basis(k)));
    array::from_fn(|r| array::from_fn(|c| cols[c][r].clone()))
}

/// The map `γ ↦ Σ_{i<n} c_i (λ^i γ) + λ^n γ`.
pub fn lev_operator<S: Scalar>(alg: &Algebra<S>, phi: &StandardPolynomial<S>, lam: &Octonion<S>) -> [[S; 8]; 8] {
    let n = phi.degree();
    let powers = alg.powers(lam, n);
    operator_matrix(|g| {
        let mut acc = alg.mul(&powers[n], g);
        for (c, p) in phi.coeffs()[..n].iter().zip(&powers) {
            acc += &alg.mul(c, &alg.mul(p, g));
        }
        acc
    })
}

/// The map `v ↦ Σ_{i<n} c_i (v λ^i) + v λ^n`.
pub fn rev_operator<S: Scalar>(alg: &Algebra<S>, phi: &StandardPolynomial<S>, lam: &Octonion<S>) -> [[S; 8]; 8] {
    let n = phi.degree();
    let powers = alg.powers(lam, n);
    operator_matrix(|v| {
        let mut acc = alg.mul(v, &powers[n]);
        for (c, p) in phi.coeffs()[..n].iter().zip(&powers) {
            acc += &alg.mul(c, &alg.mul(v, p));
        }
        acc
    })
}

/// Is `λ` a left eigenvalue of `C_φ`?
pub fn lev_test<S: Scalar>(alg: &Algebra<S>, phi: &StandardPolynomial<S>, lam: &Octonion<S>) -> Result<MembershipReport<S>> {
    require_monic(phi)?;
    let m = lev_operator(alg, phi, lam);
    Ok(match kernel_vector(&m, alg.tolerance()) {
        None => MembershipReport {
            member: false,
            kernel_element: None,
            eigenvector: None,
        },
        Some(k) => {
            let gamma = Octonion(k);
            let eigenvector = alg
                .powers(lam, phi.degree() - 1)
                .iter()
                .map(|p| alg.mul(p, &gamma))
                .collect();
            MembershipReport {
                member: true,
                kernel_element: Some(gamma),
                eigenvector: Some(eigenvector),
            }
        }
    })
}

/// Is `λ` a right eigenvalue of `C_φ`?
pub fn rev_test<S: Scalar>(alg: &Algebra<S>, phi: &StandardPolynomial<S>, lam: &Octonion<S>) -> Result<MembershipReport<S>> {
    require_monic(phi)?;
    let m = rev_operator(alg, phi, lam);
    Ok(match kernel_vector(&m, alg.tolerance()) {
        None => MembershipReport {
            member: false,
            kernel_element: None,
            eigenvector: None,
        },
        Some(k) => {
            let v1 = Octonion(k);
            let eigenvector = alg
                .powers(lam, phi.degree() - 1)
                .iter()
                .map(|p| alg.mul(&v1, p))
                .collect();
            MembershipReport {
                member: true,
                kernel_element: Some(v1),
                eigenvector: Some(eigenvector),
            }
        }
    })
}

fn class_linear_form<S: Scalar>(
    alg: &Algebra<S>,
    phi: &StandardPolynomial<S>,
    norm: &S,
    trace: &S,
    g: &Octonion<S>,
) -> Result<(Octonion<S>, Octonion<S>, Octonion<S>)> {
    require_monic(phi)?;
    let lin = phi.reduce_to_linear(norm, trace)?;
    let scale = phi.coeffs().iter().map(Octonion::max_magnitude).fold(1.0, f64::max);
    if lin.e.is_negligible(scale, alg.tolerance()) {
        return Err(domain(
            "E(N,T) vanishes: the whole class consists of eigenvalues",
        ));
    }
    let e_inv = alg.inv(&lin.e)?;
    let g_inv = alg.inv(g)?;
    Ok((e_inv, lin.g, g_inv))
}

/// `-(E⁻¹ g)(g⁻¹ G)`, a left eigenvalue in the class `(T, N)`.
pub fn lev_class_point<S: Scalar>(
    alg: &Algebra<S>,
    phi: &StandardPolynomial<S>,
    norm: &S,
    trace: &S,
    g: &Octonion<S>,
) -> Result<Octonion<S>> {
    let (e_inv, big_g, g_inv) = class_linear_form(alg, phi, norm, trace, g)?;
    Ok(-alg.mul(&alg.mul(&e_inv, g), &alg.mul(&g_inv, &big_g)))
}

/// `-g (E⁻¹ (G g⁻¹))`, a right eigenvalue in the class `(T, N)`.
pub fn rev_class_point<S: Scalar>(
    alg: &Algebra<S>,
    phi: &StandardPolynomial<S>,
    norm: &S,
    trace: &S,
    g: &Octonion<S>,
) -> Result<Octonion<S>> {
    let (e_inv, big_g, g_inv) = class_linear_form(alg, phi, norm, trace, g)?;
    Ok(-alg.mul(g, &alg.mul(&e_inv, &alg.mul(&big_g, &g_inv))))
}

/// Conjugacy classes whose union is the set of right eigenvalues: the
/// companion-polynomial classes that actually meet the algebra.
pub fn rev_classes<S: ClosureRoots>(alg: &Algebra<S>, phi: &StandardPolynomial<S>) -> Result<Vec<ClassCandidate<S>>> {
    require_monic(phi)?;
    let report = solve(alg, phi)?;
    Ok(report
        .classes
        .into_iter()
        .filter(|c| {
            matches!(
                c.resolution,
                ClassResolution::SingleRoot(_) | ClassResolution::FullClass { .. }
            )
        })
        .map(|c| c.candidate)
        .collect())
}

/// `C v = λ v` (left) or `C v = v λ` (right).
pub fn verify_eigen_pair<S: Scalar>(
    alg: &Algebra<S>,
    c: &CompanionMatrix<S>,
    lam: &Octonion<S>,
    v: &[Octonion<S>],
    side: Side,
) -> Result<bool> {
    let cv = c.apply(alg, v)?;
    if v.iter().all(Octonion::is_zero) {
        return Err(domain("eigenvector must be nonzero"));
    }
    let scale = c
        .rows()
        .iter()
        .flatten()
        .map(Octonion::max_magnitude)
        .fold(lam.max_magnitude(), f64::max)
        .max(1.0)
        * v.iter().map(Octonion::max_magnitude).fold(0.0, f64::max);
    Ok(cv.iter().zip(v).all(|(lhs, x)| {
        let rhs = match side {
            Side::Left => alg.mul(lam, x),
            Side::Right => alg.mul(x, lam),
        };
        lhs.approx_eq(&rhs, scale, alg.tolerance())
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubalgebraCheck {
    pub lev_member: bool,
    pub phi_root: bool,
    pub mirror_root: bool,
}

fn in_quaternion_span<S: Scalar>(x: &Octonion<S>) -> bool {
    x.coords()[4..].iter().all(|c| c.is_zero())
}

/// Left-eigenvalue membership against roots of `φ` and of its mirror, for
/// coefficients and `λ` in the quaternion subalgebra spanned by `1, i, j, ij`.
pub fn subalgebra_lev_check<S: Scalar>(
    alg: &Algebra<S>,
    phi: &StandardPolynomial<S>,
    lam: &Octonion<S>,
) -> Result<SubalgebraCheck> {
    if !phi.coeffs().iter().all(in_quaternion_span) || !in_quaternion_span(lam) {
        return Err(domain(
            "coefficients and λ must lie in the quaternion subalgebra span(1, i, j, ij)",
        ));
    }
    let lev = lev_test(alg, phi, lam)?;
    Ok(SubalgebraCheck {
        lev_member: lev.member,
        phi_root: verify_root(alg, phi, lam),
        mirror_root: verify_root(alg, &phi.mirror(), lam),
    })
}
