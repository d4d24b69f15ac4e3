//! JSON shapes of the command outputs. Field order is the output key order.

use octoroots::eigen::MembershipReport;
use octoroots::{Algebra, ClassResolution, Octonion, RootReport, Scalar, Side};
use serde::Serialize;

use crate::literal::{format_coefficients, format_octonion, LiteralScalar};

#[derive(Debug, Serialize)]
pub struct AlgebraJson {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub mode: &'static str,
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl AlgebraJson {
    pub fn new<S: LiteralScalar>(alg: &Algebra<S>) -> Self {
        let p = alg.params();
        AlgebraJson {
            alpha: p.alpha.render(),
            beta: p.beta.render(),
            gamma: p.gamma.render(),
            mode: if S::EXACT { "exact" } else { "float" },
            abs_eps: alg.tolerance().abs_eps,
            rel_eps: alg.tolerance().rel_eps,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PolynomialJson {
    pub side: &'static str,
    pub degree: usize,
    /// `c_0` first.
    pub coefficients: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ClassJson {
    pub trace: String,
    pub norm: String,
    pub field_degree: u8,
    pub multiplicity: usize,
    pub resolution: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_literal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_literal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct SolveJson {
    pub algebra: AlgebraJson,
    pub polynomial: PolynomialJson,
    pub companion: Vec<String>,
    pub classes: Vec<ClassJson>,
    pub warnings: Vec<String>,
}

fn coords<S: LiteralScalar>(x: &Octonion<S>) -> Vec<String> {
    x.coords().iter().map(LiteralScalar::render).collect()
}

impl SolveJson {
    pub fn new<S: LiteralScalar>(alg: &Algebra<S>, report: &RootReport<S>) -> Self {
        let classes = report
            .classes
            .iter()
            .map(|c| {
                let mut out = ClassJson {
                    trace: c.candidate.trace.render(),
                    norm: c.candidate.norm.render(),
                    field_degree: c.candidate.field_degree,
                    multiplicity: c.candidate.multiplicity,
                    resolution: c.resolution.tag(),
                    root: None,
                    root_literal: None,
                    witness: None,
                    witness_literal: None,
                    reason: None,
                };
                match &c.resolution {
                    ClassResolution::SingleRoot(r) => {
                        out.root = Some(coords(r));
                        out.root_literal = Some(format_octonion(r));
                    }
                    ClassResolution::FullClass { witness, .. } => {
                        out.witness = Some(coords(witness));
                        out.witness_literal = Some(format_octonion(witness));
                    }
                    ClassResolution::Undetermined(why) => out.reason = Some(why.clone()),
                    ClassResolution::NoRootInClass | ClassResolution::ClassNotEmbeddable => {}
                }
                out
            })
            .collect();
        SolveJson {
            algebra: AlgebraJson::new(alg),
            polynomial: PolynomialJson {
                side: side_name(report.polynomial.side()),
                degree: report.polynomial.degree(),
                coefficients: format_coefficients(&report.polynomial),
            },
            companion: report.companion.coeffs().iter().map(LiteralScalar::render).collect(),
            classes,
            warnings: report.warnings.clone(),
        }
    }
}

pub fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
    }
}

#[derive(Debug, Serialize)]
pub struct ClassInvariantsJson {
    pub trace: String,
    pub norm: String,
}

#[derive(Debug, Serialize)]
pub struct EigenJson {
    pub member: bool,
    pub kernel_element: Option<String>,
    pub eigenvector: Option<Vec<String>>,
    pub class: ClassInvariantsJson,
}

impl EigenJson {
    pub fn new<S: LiteralScalar + Scalar>(alg: &Algebra<S>, lam: &Octonion<S>, m: &MembershipReport<S>) -> Self {
        let (trace, norm) = alg.quadratic_invariants(lam);
        EigenJson {
            member: m.member,
            kernel_element: m.kernel_element.as_ref().map(format_octonion),
            eigenvector: m.eigenvector.as_ref().map(|v| v.iter().map(format_octonion).collect()),
            class: ClassInvariantsJson {
                trace: trace.render(),
                norm: norm.render(),
            },
        }
    }
}
