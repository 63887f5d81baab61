//! The non-algebraicity certificate: verify the certificate hypotheses for
//! an integer vector field, reduce mod 2, certify the 2-divisor, compare
//! degrees against the Carnicer bound, and assemble a conclusion.

use serde_json::{json, Value};

use crate::foliation::{GoodReduction, PlaneVectorField};
use crate::newton::{Backend, IrrStatus};
use crate::poly::SparsePoly;
use crate::ring::{Coeff, Ring};
use crate::Error;

/// Degree bound for irreducible invariant curves of a nondicritical
/// foliation of degree d.
pub fn carnicer_bound(d: u32) -> u32 {
    d + 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypStatus {
    Proved,
    Evidence,
    Failed,
    Assumed,
}

impl HypStatus {
    fn as_str(&self) -> &'static str {
        match self {
            HypStatus::Proved => "proved",
            HypStatus::Evidence => "evidence",
            HypStatus::Failed => "failed",
            HypStatus::Assumed => "assumed",
        }
    }

    fn satisfied(&self) -> bool {
        matches!(self, HypStatus::Proved | HypStatus::Assumed)
    }
}

#[derive(Clone, Debug)]
pub struct HypothesisEntry {
    pub id: u8,
    pub name: &'static str,
    pub status: HypStatus,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct DegreeRecord {
    pub foliation_degree: u32,
    pub carnicer_bound: u32,
    /// affine degree of the full 2-divisor, when not 2-closed
    pub divisor_degree: Option<u32>,
    /// degree of the candidate irreducible component after stripping
    pub candidate_degree: Option<u32>,
    /// candidate degree strictly exceeds the Carnicer bound
    pub inequality_strict: bool,
    pub expected_projective_degree: u32,
    pub z_multiplicity: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// No algebraic invariant curve at all.
    NoAlgebraicSolutions,
    /// The line at infinity is invariant and is the only possible curve.
    UniqueInvariantLineAtInfinity,
    /// Everything checks out except dicriticality, which finite-field jets
    /// cannot decide.
    ConditionalOnDicriticality,
    NotEstablished,
}

impl Conclusion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Conclusion::NoAlgebraicSolutions => "no_algebraic_solutions",
            Conclusion::UniqueInvariantLineAtInfinity => "unique_invariant_curve_linf",
            Conclusion::ConditionalOnDicriticality => "conditional_on_dicriticality",
            Conclusion::NotEstablished => "not_established",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub hypotheses: Vec<HypothesisEntry>,
    pub degrees: DegreeRecord,
    pub conclusion: Conclusion,
    pub evidence: Vec<String>,
}

impl CertificateReport {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "hypotheses": self.hypotheses.iter().map(|h| json!({
                "id": h.id,
                "name": h.name,
                "status": h.status.as_str(),
                "detail": h.detail,
            })).collect::<Vec<_>>(),
            "degrees": {
                "foliation_degree": self.degrees.foliation_degree,
                "carnicer_bound": self.degrees.carnicer_bound,
                "divisor_degree": self.degrees.divisor_degree,
                "candidate_degree": self.degrees.candidate_degree,
                "inequality_strict": self.degrees.inequality_strict,
                "expected_projective_degree": self.degrees.expected_projective_degree,
                "z_multiplicity": self.degrees.z_multiplicity,
            },
            "conclusion": self.conclusion.as_str(),
            "evidence": self.evidence,
        })
    }
}

/// Run the full certificate for an integer-coefficient vector field.
///
/// Dicriticality is `Assumed` when asserted by the caller; otherwise the jets
/// at every singular point found over F_2..F_16 are reported as evidence,
/// never as proof: the certificate then concludes at most conditionally.
pub fn theorem_main_certificate(
    v: &PlaneVectorField,
    assert_nondicritical: bool,
) -> Result<CertificateReport, Error> {
    if *v.ring() != Ring::Int {
        return Err(Error::RingMismatch);
    }
    let mut evidence: Vec<String> = Vec::new();
    let char0 = v.degree_and_linf();
    let d = char0.foliation_degree;
    let bound = carnicer_bound(d);

    let h1 = HypothesisEntry {
        id: 1,
        name: "integer_coefficients",
        status: HypStatus::Proved,
        detail: "components have integer coefficients".into(),
    };

    // hypothesis 3: good reduction at 2
    let h3 = match v.good_reduction_at(2) {
        Ok(GoodReduction::Good) => HypothesisEntry {
            id: 3,
            name: "good_reduction_mod_2",
            status: HypStatus::Proved,
            detail: format!(
                "gcd(A mod 2, B mod 2) constant; degree {d} and l_inf behavior preserved"
            ),
        },
        Ok(GoodReduction::Bad(reason)) => HypothesisEntry {
            id: 3,
            name: "good_reduction_mod_2",
            status: HypStatus::Failed,
            detail: format!("{reason:?}"),
        },
        Err(e) => HypothesisEntry {
            id: 3,
            name: "good_reduction_mod_2",
            status: HypStatus::Failed,
            detail: e.to_string(),
        },
    };

    let f2 = Ring::parse("F2").unwrap();
    let v2 = v.to_ring(&f2).ok().and_then(|w| {
        if w.a().is_zero() && w.b().is_zero() {
            None
        } else {
            Some(w)
        }
    });

    // hypothesis 4: irreducible 2-divisor (after stripping components that
    // cannot host an invariant curve)
    let mut divisor_degree = None;
    let mut candidate_degree = None;
    let mut z_multiplicity = None;
    let mut expected_projective_degree = 2 * d.saturating_sub(1) + d + 2;
    let h4 = match &v2 {
        None => HypothesisEntry {
            id: 4,
            name: "irreducible_2_divisor",
            status: HypStatus::Failed,
            detail: "vector field vanishes mod 2".into(),
        },
        Some(v2) => {
            let mut result = v2.p_divisor(2)?;
            expected_projective_degree = result.expected_projective_degree;
            z_multiplicity = result.z_multiplicity;
            if result.p_closed {
                HypothesisEntry {
                    id: 4,
                    name: "irreducible_2_divisor",
                    status: HypStatus::Failed,
                    detail: "reduction mod 2 is 2-closed: the 2-divisor vanishes".into(),
                }
            } else {
                divisor_degree = result.divisor.total_degree().finite();
                // strip monomial components and check each for invariance
                let content = result.divisor.monomial_content();
                let mut invariant_component: Option<String> = None;
                for var in 0..2usize {
                    if content.0[var] == 0 {
                        continue;
                    }
                    let line = SparsePoly::var(f2.clone(), 2, var);
                    let mult = result.split_component(&line);
                    let inv = v2.is_invariant_curve(&line)?;
                    evidence.push(format!(
                        "stripped component {line}^{mult} from the 2-divisor; {{{line}=0}} invariant: {inv}"
                    ));
                    if inv {
                        invariant_component = Some(line.to_string());
                    }
                }
                match &result.z_multiplicity {
                    Some(z) if *z > 0 && !result.degree_report.linf_invariant => {
                        evidence.push(format!(
                            "degree bookkeeping anomaly: z-multiplicity {z} but l_inf not invariant"
                        ));
                    }
                    Some(z) if *z < 0 => {
                        evidence.push(format!(
                            "degree bookkeeping anomaly: affine divisor degree exceeds the projective degree formula by {}",
                            -z
                        ));
                    }
                    _ => {}
                }
                let cofactor = result.cofactor.clone();
                candidate_degree = cofactor.total_degree().finite();
                if let Some(line) = invariant_component {
                    HypothesisEntry {
                        id: 4,
                        name: "irreducible_2_divisor",
                        status: HypStatus::Failed,
                        detail: format!(
                            "invariant line {{{line}=0}} divides the 2-divisor; curves reducing to it cannot be excluded"
                        ),
                    }
                } else if cofactor.is_constant() {
                    HypothesisEntry {
                        id: 4,
                        name: "irreducible_2_divisor",
                        status: HypStatus::Failed,
                        detail: "2-divisor consists of monomial components only".into(),
                    }
                } else {
                    let verdict =
                        crate::newton::certify_irreducible(&cofactor, Backend::Both { bound: 4 })?;
                    match verdict.status {
                        IrrStatus::IrreducibleByPolytope => HypothesisEntry {
                            id: 4,
                            name: "irreducible_2_divisor",
                            status: HypStatus::Proved,
                            detail: "Newton polytope of the divisor cofactor is Minkowski indecomposable".into(),
                        },
                        IrrStatus::IrreducibleByFactorSearch { bound } => HypothesisEntry {
                            id: 4,
                            name: "irreducible_2_divisor",
                            status: HypStatus::Proved,
                            detail: format!(
                                "exhaustive factor search to degree {bound} (half the divisor degree) found no factor"
                            ),
                        },
                        IrrStatus::Reducible { witness } => HypothesisEntry {
                            id: 4,
                            name: "irreducible_2_divisor",
                            status: HypStatus::Failed,
                            detail: format!("2-divisor cofactor has factor {witness}"),
                        },
                        IrrStatus::Inconclusive { reason } => HypothesisEntry {
                            id: 4,
                            name: "irreducible_2_divisor",
                            status: HypStatus::Evidence,
                            detail: format!("irreducibility not certified: {reason}"),
                        },
                    }
                }
            }
        }
    };

    // hypothesis 2: nondicriticality
    let h2 = if assert_nondicritical {
        HypothesisEntry {
            id: 2,
            name: "nondicritical",
            status: HypStatus::Assumed,
            detail: "asserted by caller".into(),
        }
    } else {
        match &v2 {
            None => HypothesisEntry {
                id: 2,
                name: "nondicritical",
                status: HypStatus::Evidence,
                detail: "no mod-2 jet evidence available (vector field vanishes mod 2)".into(),
            },
            Some(v2) => {
                let (tested, dicritical) = jet_evidence(v2, &mut evidence)?;
                let status = HypStatus::Evidence;
                let detail = if dicritical.is_empty() {
                    format!(
                        "nondicritical as far as checked: {tested} affine singular point(s) over F_2..F_16, none with radial first jet; characteristic-0 dicriticality is not decided by finite-field jets"
                    )
                } else {
                    format!(
                        "warning: radial first jet mod 2 at {}; this neither proves nor refutes characteristic-0 dicriticality",
                        dicritical.join(", ")
                    )
                };
                HypothesisEntry {
                    id: 2,
                    name: "nondicritical",
                    status,
                    detail,
                }
            }
        }
    };

    let inequality_strict = match candidate_degree {
        Some(c) => c > bound,
        None => false,
    };
    let degrees = DegreeRecord {
        foliation_degree: d,
        carnicer_bound: bound,
        divisor_degree,
        candidate_degree,
        inequality_strict,
        expected_projective_degree,
        z_multiplicity,
    };

    let core_ok =
        h1.status.satisfied() && h3.status.satisfied() && h4.status.satisfied() && inequality_strict && d > 1;
    let conclusion = if core_ok && h2.status.satisfied() {
        if char0.linf_invariant {
            Conclusion::UniqueInvariantLineAtInfinity
        } else {
            Conclusion::NoAlgebraicSolutions
        }
    } else if core_ok && h2.status == HypStatus::Evidence {
        Conclusion::ConditionalOnDicriticality
    } else {
        Conclusion::NotEstablished
    };

    if conclusion == Conclusion::UniqueInvariantLineAtInfinity {
        evidence.push(
            "the line at infinity is invariant; every affine invariant curve is excluded by the degree comparison".into(),
        );
    }

    Ok(CertificateReport {
        hypotheses: vec![h1, h2, h3, h4],
        degrees,
        conclusion,
        evidence,
    })
}

/// Jet-test every affine singular point over F_{2^k}, k <= 4, skipping
/// points already seen in a subfield. Returns (points tested, dicritical
/// point descriptions).
fn jet_evidence(
    v2: &PlaneVectorField,
    evidence: &mut Vec<String>,
) -> Result<(usize, Vec<String>), Error> {
    let mut tested = 0usize;
    let mut dicritical = Vec::new();
    for k in 1..=4usize {
        let pts = v2.singular_points_over(k)?;
        let spec = match &pts.ring {
            Ring::Gf(spec) => spec.clone(),
            _ => unreachable!(),
        };
        for [x, y] in &pts.points {
            let (gx, gy) = match (x, y) {
                (Coeff::Gf(a), Coeff::Gf(b)) => (a, b),
                _ => unreachable!(),
            };
            // skip points that already live in a proper subfield
            let new_here = (1..k).all(|j| {
                !(k % j == 0 && spec.in_subfield(gx, j) && spec.in_subfield(gy, j))
            });
            if !new_here {
                continue;
            }
            tested += 1;
            let jet = v2.first_jet_dicritical_at(&[x.clone(), y.clone()], &pts.ring)?;
            let desc = format!(
                "({}, {}) in F_{}",
                pts.ring.fmt_coeff(x),
                pts.ring.fmt_coeff(y),
                spec.order()
            );
            evidence.push(format!(
                "singular point {desc}: jet order {}, dicritical: {}",
                jet.jet_order, jet.dicritical
            ));
            if jet.dicritical {
                dicritical.push(desc);
            }
        }
    }
    Ok((tested, dicritical))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_field, FamilySpec};
    use crate::parse::parse_poly;

    fn vz(a: &str, b: &str) -> PlaneVectorField {
        PlaneVectorField::new(
            parse_poly(a, &Ring::Int).unwrap(),
            parse_poly(b, &Ring::Int).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn carnicer_values() {
        assert_eq!(carnicer_bound(3), 5);
        assert_eq!(carnicer_bound(1), 3);
        let d = 3u32;
        assert_eq!(carnicer_bound(d * d + d + 1), d * d + d + 3);
    }

    #[test]
    fn jouanolou3_certificate() {
        let v = make_field(&FamilySpec::Jouanolou { d: 3 }, &Ring::Int).unwrap();
        let report = theorem_main_certificate(&v, true).unwrap();
        assert_eq!(report.conclusion, Conclusion::NoAlgebraicSolutions);
        assert!(report.hypotheses.iter().all(|h| h.status.satisfied()));
        assert_eq!(report.degrees.foliation_degree, 3);
        assert_eq!(report.degrees.candidate_degree, Some(9));
        assert!(report.degrees.inequality_strict);
    }

    #[test]
    fn jouanolou3_without_assertion_is_conditional() {
        let v = make_field(&FamilySpec::Jouanolou { d: 3 }, &Ring::Int).unwrap();
        let report = theorem_main_certificate(&v, false).unwrap();
        assert_eq!(report.conclusion, Conclusion::ConditionalOnDicriticality);
        let h2 = &report.hypotheses[1];
        assert_eq!(h2.status, HypStatus::Evidence);
        assert!(h2.detail.contains("none with radial first jet"));
    }

    #[test]
    fn radial_field_not_established() {
        let v = vz("x", "y");
        let report = theorem_main_certificate(&v, false).unwrap();
        assert_eq!(report.conclusion, Conclusion::NotEstablished);
        let h4 = &report.hypotheses[3];
        assert_eq!(h4.status, HypStatus::Failed);
        assert!(h4.detail.contains("2-closed"));
    }

    #[test]
    fn family_f6_unique_linf() {
        let v = make_field(
            &FamilySpec::FamilyF {
                e: 6,
                a: 1,
                b: 1,
                c: 1,
            },
            &Ring::Int,
        )
        .unwrap();
        let report = theorem_main_certificate(&v, true).unwrap();
        assert_eq!(report.conclusion, Conclusion::UniqueInvariantLineAtInfinity);
        assert_eq!(report.degrees.foliation_degree, 7);
        assert_eq!(report.degrees.divisor_degree, Some(15));
        assert_eq!(report.degrees.z_multiplicity, Some(6));
    }

    #[test]
    fn family_g5_no_solutions() {
        let v = make_field(
            &FamilySpec::FamilyG {
                d: 5,
                u: 1,
                a: 1,
                b: 1,
                c: 1,
            },
            &Ring::Int,
        )
        .unwrap();
        let report = theorem_main_certificate(&v, true).unwrap();
        assert_eq!(report.conclusion, Conclusion::NoAlgebraicSolutions);
        assert_eq!(report.degrees.foliation_degree, 5);
        assert_eq!(report.degrees.candidate_degree, Some(15));
    }

    #[test]
    fn monotone_downgrade() {
        // same field, weaker dicriticality knowledge: conclusion can only drop
        let v = make_field(&FamilySpec::Jouanolou { d: 3 }, &Ring::Int).unwrap();
        let strong = theorem_main_certificate(&v, true).unwrap();
        let weak = theorem_main_certificate(&v, false).unwrap();
        let rank = |c: Conclusion| match c {
            Conclusion::NoAlgebraicSolutions | Conclusion::UniqueInvariantLineAtInfinity => 2,
            Conclusion::ConditionalOnDicriticality => 1,
            Conclusion::NotEstablished => 0,
        };
        assert!(rank(weak.conclusion) <= rank(strong.conclusion));
    }

    #[test]
    fn report_json_shape() {
        let v = vz("x", "y");
        let report = theorem_main_certificate(&v, false).unwrap();
        let j = report.to_json();
        assert_eq!(j["schema"], 1);
        assert_eq!(j["hypotheses"].as_array().unwrap().len(), 4);
        assert_eq!(j["conclusion"], "not_established");
        assert!(j["degrees"]["carnicer_bound"].is_number());
    }
}
