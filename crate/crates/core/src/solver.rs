//! All roots of a standard polynomial.
//!
//! Every root lies in a conjugacy class `(T, N)` cut out by the companion
//! polynomial `Φ`. Within such a class the polynomial collapses to
//! `E(N,T) λ + G(N,T)`: if `E = 0` the whole class consists of roots,
//! otherwise `-E⁻¹G` is the only candidate. Every emitted root is checked by
//! substitution before it is reported.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{pure_norm, Algebra, AlgebraParams, DivisionStatus, Octonion};
use crate::central::{ClassCandidate, ClosureRoots};
use crate::error::{domain, Error, Result};
use crate::polynomial::{CentralPolynomial, Side, StandardPolynomial};
use crate::scalar::{half, Scalar, Tolerance};

#[derive(Debug, Clone, PartialEq)]
pub enum ClassResolution<S> {
    /// The class meets the root set in exactly this element.
    SingleRoot(Octonion<S>),
    /// Every element of the class is a root; `witness` is one of them.
    FullClass {
        trace: S,
        norm: S,
        witness: Octonion<S>,
    },
    NoRootInClass,
    /// The class has no element in the algebra.
    ClassNotEmbeddable,
    Undetermined(String),
}

impl<S> ClassResolution<S> {
    pub fn tag(&self) -> &'static str {
        match self {
            ClassResolution::SingleRoot(_) => "single_root",
            ClassResolution::FullClass { .. } => "full_class",
            ClassResolution::NoRootInClass => "no_root_in_class",
            ClassResolution::ClassNotEmbeddable => "class_not_embeddable",
            ClassResolution::Undetermined(_) => "undetermined",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedClass<S> {
    pub candidate: ClassCandidate<S>,
    pub resolution: ClassResolution<S>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootReport<S> {
    pub params: AlgebraParams<S>,
    pub polynomial: StandardPolynomial<S>,
    /// Companion polynomial of the left-sided polynomial actually solved
    /// (the conjugate polynomial when the input is a mirror polynomial).
    pub companion: CentralPolynomial<S>,
    pub classes: Vec<ResolvedClass<S>>,
    pub discarded_degree: usize,
    pub exact: bool,
    pub tolerance: Tolerance,
    pub warnings: Vec<String>,
}

impl<S: Scalar> RootReport<S> {
    /// Roots that were isolated, one per class.
    pub fn single_roots(&self) -> impl Iterator<Item = &Octonion<S>> {
        self.classes.iter().filter_map(|c| match &c.resolution {
            ClassResolution::SingleRoot(r) => Some(r),
            _ => None,
        })
    }

    /// `(trace, norm, witness)` of every class made entirely of roots.
    pub fn full_classes(&self) -> impl Iterator<Item = (&S, &S, &Octonion<S>)> {
        self.classes.iter().filter_map(|c| match &c.resolution {
            ClassResolution::FullClass {
                trace,
                norm,
                witness,
            } => Some((trace, norm, witness)),
            _ => None,
        })
    }

    /// True when no class was left undetermined, so the report lists the
    /// complete root set. Discarded factors of `Φ` have no roots in the
    /// algebra and do not count against completeness.
    pub fn is_complete(&self) -> bool {
        self.classes
            .iter()
            .all(|c| !matches!(c.resolution, ClassResolution::Undetermined(_)))
    }
}

/// `φ(λ) = 0`, exactly or at the scale `Σ‖c_i‖·‖λ‖^i`.
pub fn verify_root<S: Scalar>(alg: &Algebra<S>, phi: &StandardPolynomial<S>, lam: &Octonion<S>) -> bool {
    let value = phi.eval(alg, lam);
    value.is_negligible(phi.eval_scale(lam), alg.tolerance())
}

fn invariants_match<S: Scalar>(alg: &Algebra<S>, lam: &Octonion<S>, trace: &S, norm: &S) -> bool {
    let (t, n) = alg.quadratic_invariants(lam);
    let scale = 1.0f64.max(trace.magnitude()).max(norm.magnitude());
    let tol = alg.tolerance();
    t.approx_eq(trace, scale, tol) && n.approx_eq(norm, scale, tol)
}

/// Height bound for the two-term witness search.
const WITNESS_HEIGHT: i64 = 50;

/// Positive rationals `p/q` with `1 <= p, q <= bound` in lowest terms, ordered
/// by height `max(p, q)`.
fn rationals_by_height(bound: i64) -> impl Iterator<Item = (i64, i64)> {
    core::iter::once((1, 1)).chain((2..=bound).flat_map(|h| {
        (1..h)
            .filter(move |&o| gcd(h, o) == 1)
            .flat_map(move |o| [(h, o), (o, h)])
    }))
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// An element of trace `T` and norm `N`, written `T/2 + u` with `u` pure of
/// norm `N - T²/4`.
pub fn class_witness<S: Scalar>(alg: &Algebra<S>, norm: &S, trace: &S) -> Option<Octonion<S>> {
    let center = Octonion::scalar(trace.clone() * half::<S>());
    let s = pure_norm(trace, norm);
    let scale = 1.0f64.max(trace.magnitude() * trace.magnitude()).max(norm.magnitude());
    if s.is_negligible(scale, alg.tolerance()) {
        return Some(center);
    }
    let diag = alg.norm_diagonal();
    for k in 1..8 {
        if let Some(r) = (s.clone() / diag[k].clone()).sqrt() {
            let w = center.clone() + Octonion::basis(k).scale(&r);
            return Some(w);
        }
    }
    if !S::EXACT {
        return None;
    }
    for a in 1..8 {
        for b in (a + 1)..8 {
            for (p, q) in rationals_by_height(WITNESS_HEIGHT) {
                let x = S::from_ratio(p, q);
                let rest = (s.clone() - diag[a].clone() * x.clone() * x.clone()) / diag[b].clone();
                if let Some(y) = rest.sqrt() {
                    if y.is_zero() {
                        continue;
                    }
                    let w = center.clone()
                        + Octonion::basis(a).scale(&x)
                        + Octonion::basis(b).scale(&y);
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Float coordinates that are rounding noise next to the largest one become
/// exact zeros (this also clears negative zeros).
fn tidy<S: Scalar>(x: Octonion<S>, tol: &Tolerance) -> Octonion<S> {
    if S::EXACT {
        return x;
    }
    let scale = x.max_magnitude();
    x.map(|c| if c.is_negligible(scale, tol) { S::zero() } else { c.clone() })
}

/// Resolve one conjugacy-class candidate of a left-sided polynomial.
pub fn resolve_class<S: Scalar>(
    alg: &Algebra<S>,
    phi: &StandardPolynomial<S>,
    cand: &ClassCandidate<S>,
    warnings: &mut Vec<String>,
) -> Result<ClassResolution<S>> {
    let (trace, norm) = (&cand.trace, &cand.norm);
    if cand.field_degree == 1 {
        // Degenerate class: the only element of trace T and norm T²/4 is T/2.
        let lam = Octonion::scalar(trace.clone() * half::<S>());
        return Ok(if verify_root(alg, phi, &lam) {
            ClassResolution::SingleRoot(lam)
        } else {
            ClassResolution::NoRootInClass
        });
    }

    let lin = phi.reduce_to_linear(norm, trace)?;
    let coeff_scale = phi
        .coeffs()
        .iter()
        .map(Octonion::max_magnitude)
        .fold(0.0, f64::max);
    let power_scale = {
        let m = 1.0f64.max(trace.magnitude()).max(norm.magnitude());
        let mut total = 0.0;
        let mut p = 1.0;
        for _ in 0..=phi.degree() {
            total += p;
            p *= m;
        }
        total * coeff_scale
    };
    let tol = alg.tolerance();
    let e_zero = lin.e.is_negligible(power_scale, tol);
    let g_zero = lin.g.is_negligible(power_scale, tol);

    if e_zero {
        if !g_zero {
            warnings.push(format!(
                "class (trace {}, norm {}): E vanishes but G does not; no root in this class",
                trace, norm
            ));
            return Ok(ClassResolution::NoRootInClass);
        }
        return Ok(match class_witness(alg, norm, trace) {
            Some(w) if verify_root(alg, phi, &w) => ClassResolution::FullClass {
                trace: trace.clone(),
                norm: norm.clone(),
                witness: w,
            },
            Some(_) => ClassResolution::Undetermined(String::from(
                "class witness failed substitution",
            )),
            None => ClassResolution::Undetermined(format!(
                "no witness found at height {WITNESS_HEIGHT}"
            )),
        });
    }

    let e_inv = match alg.inv(&lin.e) {
        Ok(x) => x,
        Err(_) => {
            return Ok(ClassResolution::Undetermined(String::from(
                "E(N,T) is a zero divisor",
            )))
        }
    };
    let lam = tidy(-alg.mul(&e_inv, &lin.g), tol);
    if verify_root(alg, phi, &lam) && invariants_match(alg, &lam, trace, norm) {
        Ok(ClassResolution::SingleRoot(lam))
    } else {
        Ok(ClassResolution::ClassNotEmbeddable)
    }
}

/// Find every root of `phi` in the algebra.
///
/// Mirror polynomials are solved through their conjugate: `λ` is a root of
/// `Σ λ^i c_i` exactly when `conj(λ)` is a root of `Σ conj(c_i) λ^i`.
pub fn solve<S: ClosureRoots>(alg: &Algebra<S>, phi: &StandardPolynomial<S>) -> Result<RootReport<S>> {
    let mut warnings = Vec::new();
    match alg.division_check() {
        DivisionStatus::Division => {}
        DivisionStatus::Split(w) => {
            return Err(Error::UnsupportedAlgebra(format!(
                "the algebra is split: {w} is a nonzero element of norm zero"
            )))
        }
        DivisionStatus::Unverified => warnings.push(String::from(
            "could not verify that the algebra is a division algebra; results assume it is",
        )),
    }
    if phi.degree() == 0 {
        return Err(domain("a constant polynomial has no roots to find"));
    }

    let (left, mirrored) = match phi.side() {
        Side::Left => (phi.clone(), false),
        Side::Right => (phi.conjugate(), true),
    };
    let companion = left.companion(alg)?;
    let central = S::central_roots(&companion, alg.tolerance())?;
    warnings.extend(central.notes.iter().cloned());

    let mut classes = Vec::with_capacity(central.candidates.len());
    for cand in central.candidates {
        let mut resolution = resolve_class(alg, &left, &cand, &mut warnings)?;
        if mirrored {
            resolution = match resolution {
                ClassResolution::SingleRoot(r) => ClassResolution::SingleRoot(r.conj()),
                ClassResolution::FullClass {
                    trace,
                    norm,
                    witness,
                } => ClassResolution::FullClass {
                    trace,
                    norm,
                    witness: witness.conj(),
                },
                other => other,
            };
        }
        // Emitted roots must satisfy the polynomial as given.
        let emitted = match &resolution {
            ClassResolution::SingleRoot(r) => Some(r),
            ClassResolution::FullClass { witness, .. } => Some(witness),
            _ => None,
        };
        if let Some(r) = emitted {
            if !verify_root(alg, phi, r) {
                warnings.push(format!("root {r} failed re-verification"));
                resolution = ClassResolution::Undetermined(String::from("root failed re-verification"));
            }
        }
        classes.push(ResolvedClass {
            candidate: cand,
            resolution,
        });
    }

    Ok(RootReport {
        params: alg.params().clone(),
        polynomial: phi.clone(),
        companion,
        classes,
        discarded_degree: central.discarded_degree,
        exact: S::EXACT,
        tolerance: *alg.tolerance(),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use alloc::vec;

    type Q = Rational;

    fn alg() -> Algebra<Q> {
        Algebra::new(AlgebraParams::standard())
    }

    fn e(k: usize) -> Octonion<Q> {
        Octonion::basis(k)
    }

    fn q(n: i64, d: i64) -> Q {
        Q::from_ratio(n, d)
    }

    fn cand(t: i64, n: i64) -> ClassCandidate<Q> {
        ClassCandidate {
            trace: q(t, 1),
            norm: q(n, 1),
            field_degree: 2,
            multiplicity: 1,
        }
    }

    fn golden() -> StandardPolynomial<Q> {
        StandardPolynomial::left(vec![e(4), e(2), e(1)]).unwrap()
    }

    fn lev_example() -> StandardPolynomial<Q> {
        StandardPolynomial::monic(vec![e(0) + e(3), e(1)])
    }

    #[test]
    fn solve_golden() {
        let report = solve(&alg(), &golden()).unwrap();
        let roots: Vec<_> = report.single_roots().cloned().collect();
        assert_eq!(
            roots,
            vec![
                Octonion::from_ints([1, 0, 0, 1, 0, 1, 1, 0]).scale(&q(1, 2)),
                Octonion::from_ints([-1, 0, 0, 1, 0, -1, 1, 0]).scale(&q(1, 2)),
            ]
        );
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn solve_full_class() {
        let phi = StandardPolynomial::monic(vec![Octonion::one(), Octonion::zero()]);
        let report = solve(&alg(), &phi).unwrap();
        assert_eq!(report.classes.len(), 1);
        assert_eq!(
            report.classes[0].resolution,
            ClassResolution::FullClass {
                trace: q(0, 1),
                norm: q(1, 1),
                witness: e(1)
            }
        );
        assert_eq!(report.classes[0].candidate.multiplicity, 2);
    }

    #[test]
    fn solve_lev_example() {
        let report = solve(&alg(), &lev_example()).unwrap();
        let roots: Vec<_> = report.single_roots().cloned().collect();
        assert_eq!(roots, vec![-e(2), -e(1) - e(2)]);
    }

    #[test]
    fn solve_rejects_split_and_constants() {
        let split = Algebra::new(AlgebraParams::new(q(-1, 1), q(-1, 1), q(1, 1)).unwrap());
        let phi = StandardPolynomial::monic(vec![e(1)]);
        assert!(matches!(solve(&split, &phi), Err(Error::UnsupportedAlgebra(_))));
        let c = StandardPolynomial::left(vec![e(1)]).unwrap();
        assert!(matches!(solve(&alg(), &c), Err(Error::Domain(_))));
    }

    #[test]
    fn solve_mirror_polynomial() {
        let a = alg();
        let m = lev_example().mirror();
        let report = solve(&a, &m).unwrap();
        let roots: Vec<_> = report.single_roots().cloned().collect();
        assert!(!roots.is_empty());
        for r in &roots {
            assert!(m.eval(&a, r).is_zero());
        }
        assert!(roots.contains(&e(2)));
    }

    #[test]
    fn resolve_examples() {
        let a = alg();
        let mut w = Vec::new();
        assert_eq!(
            resolve_class(&a, &golden(), &cand(1, 1), &mut w).unwrap(),
            ClassResolution::SingleRoot(Octonion::from_ints([1, 0, 0, 1, 0, 1, 1, 0]).scale(&q(1, 2)))
        );
        let phi = StandardPolynomial::monic(vec![Octonion::one(), Octonion::zero()]);
        assert!(matches!(
            resolve_class(&a, &phi, &cand(0, 1), &mut w).unwrap(),
            ClassResolution::FullClass { .. }
        ));
        assert_eq!(
            resolve_class(&a, &lev_example(), &cand(0, 1), &mut w).unwrap(),
            ClassResolution::SingleRoot(-e(2))
        );
        assert!(w.is_empty());
    }

    #[test]
    fn resolve_real_candidate() {
        let a = alg();
        // z - 2: Φ = (z - 2)²
        let phi = StandardPolynomial::monic(vec![Octonion::scalar(q(-2, 1))]);
        let c = ClassCandidate {
            trace: q(4, 1),
            norm: q(4, 1),
            field_degree: 1,
            multiplicity: 2,
        };
        let mut w = Vec::new();
        assert_eq!(
            resolve_class(&a, &phi, &c, &mut w).unwrap(),
            ClassResolution::SingleRoot(Octonion::scalar(q(2, 1)))
        );
    }

    #[test]
    fn witness_examples() {
        let a = alg();
        assert_eq!(class_witness(&a, &q(1, 1), &q(0, 1)), Some(e(1)));
        assert_eq!(class_witness(&a, &q(2, 1), &q(0, 1)), Some(e(1) + e(2)));
        assert_eq!(class_witness(&a, &q(1, 1), &q(2, 1)), Some(Octonion::one()));
        // N - T²/4 = 7 needs four squares over the rationals
        assert_eq!(class_witness(&a, &q(7, 1), &q(0, 1)), None);
        let w = class_witness(&a, &q(5, 4), &q(1, 1)).unwrap();
        assert_eq!(a.quadratic_invariants(&w), (q(1, 1), q(5, 4)));
    }

    #[test]
    fn verify_root_examples() {
        let a = alg();
        let root = Octonion::from_ints([1, 0, 0, 1, 0, 1, 1, 0]).scale(&q(1, 2));
        assert!(verify_root(&a, &golden(), &root));
        assert!(!verify_root(&a, &lev_example(), &e(2)));
        let c0 = e(0) + e(5);
        let phi = StandardPolynomial::monic(vec![-c0.clone()]);
        assert!(verify_root(&a, &phi, &c0));
    }

    #[test]
    fn rationals_enumeration() {
        let v: Vec<_> = rationals_by_height(3).collect();
        assert_eq!(v, vec![(1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (3, 2), (2, 3)]);
    }

    #[test]
    fn float_solve_golden() {
        let a: Algebra<f64> = Algebra::new(AlgebraParams::standard());
        let phi = StandardPolynomial::left(vec![
            Octonion::basis(4),
            Octonion::basis(2),
            Octonion::basis(1),
        ])
        .unwrap();
        let report = solve(&a, &phi).unwrap();
        let roots: Vec<_> = report.single_roots().cloned().collect();
        assert_eq!(roots.len(), 2);
        let expect = Octonion([0.5, 0.0, 0.0, 0.5, 0.0, 0.5, 0.5, 0.0]);
        assert!(a.oct_eq(&roots[0], &expect));
    }
}
