//! Plane vector fields as derivations: p-th powers, wedge products,
//! p-divisors, degree and line-at-infinity analysis, first-jet dicriticality,
//! singular point enumeration over small finite fields, and good reduction.

use std::sync::Arc;

use crate::poly::{Degree, Mono, SparsePoly};
use crate::ring::{Coeff, FieldSpec, Ring};
use crate::Error;

/// v = A dx + B dy on the affine chart, with A, B over a shared ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneVectorField {
    a: SparsePoly,
    b: SparsePoly,
}

impl PlaneVectorField {
    pub fn new(a: SparsePoly, b: SparsePoly) -> Result<PlaneVectorField, Error> {
        if a.ring() != b.ring() {
            return Err(Error::RingMismatch);
        }
        if a.arity() != 2 || b.arity() != 2 {
            return Err(Error::ArityMismatch);
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(PlaneVectorField { a, b })
    }

    pub fn a(&self) -> &SparsePoly {
        &self.a
    }

    pub fn b(&self) -> &SparsePoly {
        &self.b
    }

    pub fn ring(&self) -> &Ring {
        self.a.ring()
    }

    pub fn to_ring(&self, ring: &Ring) -> Result<PlaneVectorField, Error> {
        PlaneVectorField::new(self.a.to_ring(ring)?, self.b.to_ring(ring)?)
    }

    /// Apply the derivation: v(f) = A f_x + B f_y.
    pub fn derive(&self, f: &SparsePoly) -> SparsePoly {
        assert!(self.ring() == f.ring(), "ring mismatch");
        self.a
            .mul(&f.partial_derivative(0))
            .add(&self.b.mul(&f.partial_derivative(1)))
    }

    /// v^p by the iterated-derivation recurrence: AA_1 = A,
    /// AA_{i+1} = v(AA_i), output AA_p (same for B).
    pub fn p_power(&self, p: u64) -> Result<PlaneVectorField, Error> {
        let chi = self.ring().characteristic();
        if chi != p {
            return Err(Error::CharacteristicMismatch {
                expected: p,
                found: chi,
            });
        }
        let mut ax = self.a.clone();
        let mut by = self.b.clone();
        for _ in 1..p {
            ax = self.derive(&ax);
            by = self.derive(&by);
        }
        Ok(PlaneVectorField { a: ax, b: by })
    }

    /// Coefficient of dx ^ dy in v ^ w: v(x) w(y) - v(y) w(x).
    pub fn wedge(&self, other: &PlaneVectorField) -> SparsePoly {
        self.a.mul(&other.b).sub(&self.b.mul(&other.a))
    }

    /// Whether {F = 0} is invariant: F divides v(F).
    pub fn is_invariant_curve(&self, f: &SparsePoly) -> Result<bool, Error> {
        if f.is_constant() {
            return Err(Error::DegenerateInput("constant curve".into()));
        }
        Ok(self.derive(f).exact_div(f).is_some())
    }

    /// Degree and line-at-infinity analysis from the top graded parts.
    pub fn degree_and_linf(&self) -> DegreeReport {
        let e = self
            .a
            .total_degree()
            .max(self.b.total_degree())
            .finite()
            .expect("vector field is nonzero");
        let a_top = self.a.graded_part(e);
        let b_top = self.b.graded_part(e);
        let x = SparsePoly::var(self.ring().clone(), 2, 0);
        let y = SparsePoly::var(self.ring().clone(), 2, 1);
        let witness = x.mul(&b_top).sub(&y.mul(&a_top));
        let linf_invariant = !witness.is_zero();
        let foliation_degree = if linf_invariant { e } else { e - 1 };
        DegreeReport {
            affine_top_degree: e,
            foliation_degree,
            linf_invariant,
            witness,
        }
    }

    /// The p-divisor: vanishing of v ^ v^p, as the affine polynomial
    /// A v^p(y) - B v^p(x), with degree bookkeeping.
    pub fn p_divisor(&self, p: u64) -> Result<PDivisorResult, Error> {
        let vp = self.p_power(p)?;
        let divisor = self.wedge(&vp);
        let degree_report = self.degree_and_linf();
        let d = degree_report.foliation_degree;
        let expected_projective_degree = p as u32 * (d.saturating_sub(1)) + d + 2;
        let p_closed = divisor.is_zero();
        let z_multiplicity = divisor
            .total_degree()
            .finite()
            .map(|deg| expected_projective_degree as i64 - deg as i64);
        let cofactor = divisor.clone();
        Ok(PDivisorResult {
            p,
            divisor,
            p_closed,
            degree_report,
            expected_projective_degree,
            z_multiplicity,
            components: vec![],
            cofactor,
        })
    }

    pub fn is_p_closed(&self, p: u64) -> Result<bool, Error> {
        Ok(self.p_divisor(p)?.p_closed)
    }

    /// First-jet dicriticality test at a singular point. The point's
    /// coordinates must live in a ring the components embed into.
    pub fn first_jet_dicritical_at(&self, point: &[Coeff; 2], ring: &Ring) -> Result<JetReport, Error> {
        let v = self.to_ring(ring)?;
        let offset = [point[0].clone(), point[1].clone()];
        let a_t = v.a.shift(&offset);
        let b_t = v.b.shift(&offset);
        let origin_a = a_t.coeff(&Mono::one());
        let origin_b = b_t.coeff(&Mono::one());
        if !ring.is_zero(&origin_a) || !ring.is_zero(&origin_b) {
            return Err(Error::PointNotSingular);
        }
        // local 1-form is B dx - A dy; m = least order of a nonzero jet
        let m = match (a_t.order_at_origin(), b_t.order_at_origin()) {
            (Degree::MinusInfinity, Degree::MinusInfinity) => unreachable!("field is nonzero"),
            (oa, ob) => oa.min(ob).finite().unwrap(),
        };
        let a_m = a_t.graded_part(m);
        let b_m = b_t.graded_part(m);
        let x = SparsePoly::var(ring.clone(), 2, 0);
        let y = SparsePoly::var(ring.clone(), 2, 1);
        let witness = x.mul(&b_m).sub(&y.mul(&a_m));
        Ok(JetReport {
            point: [point[0].clone(), point[1].clone()],
            ring: ring.clone(),
            jet_order: m,
            dicritical: witness.is_zero(),
            witness,
        })
    }

    /// Exhaustive enumeration of common zeros of (A, B) over F_{p^k} for a
    /// prime-field vector field, in canonical element order.
    pub fn singular_points_over(&self, k: usize) -> Result<SingularPoints, Error> {
        let spec = match self.ring() {
            Ring::Gf(spec) if spec.k() == 1 => spec.clone(),
            _ => {
                return Err(Error::DegenerateInput(
                    "singular point search needs a prime-field vector field".into(),
                ))
            }
        };
        let ext: Arc<FieldSpec> = FieldSpec::tabled(spec.p(), k)?;
        let ring = Ring::Gf(ext.clone());
        let v = self.to_ring(&ring)?;
        let mut points = Vec::new();
        for xi in 0..ext.order() {
            for yi in 0..ext.order() {
                let x = Coeff::Gf(ext.elem_by_index(xi));
                let y = Coeff::Gf(ext.elem_by_index(yi));
                let pa = v.a.eval(&[x.clone(), y.clone()]);
                let pb = v.b.eval(&[x.clone(), y.clone()]);
                if ring.is_zero(&pa) && ring.is_zero(&pb) {
                    points.push([x, y]);
                }
            }
        }
        Ok(SingularPoints { ring, points })
    }

    /// Good reduction at p for an integer vector field: the reduction keeps a
    /// finite affine singular locus (no common factor) and the same degree
    /// and line-at-infinity behavior.
    pub fn good_reduction_at(&self, p: u64) -> Result<GoodReduction, Error> {
        if *self.ring() != Ring::Int {
            return Err(Error::RingMismatch);
        }
        let a_bar = self.a.reduce_mod_p(p)?;
        let b_bar = self.b.reduce_mod_p(p)?;
        if a_bar.is_zero() && b_bar.is_zero() {
            return Err(Error::DegenerateInput(format!(
                "both components vanish mod {p}"
            )));
        }
        let g = a_bar.gcd(&b_bar);
        if !g.is_constant() {
            return Ok(GoodReduction::Bad(BadReductionReason::CommonFactor {
                gcd: g,
            }));
        }
        let before = self.degree_and_linf();
        let reduced = PlaneVectorField::new(a_bar, b_bar)?;
        let after = reduced.degree_and_linf();
        if before.foliation_degree != after.foliation_degree
            || before.linf_invariant != after.linf_invariant
        {
            return Ok(GoodReduction::Bad(BadReductionReason::DegreeChanged {
                char_zero: (before.foliation_degree, before.linf_invariant),
                mod_p: (after.foliation_degree, after.linf_invariant),
            }));
        }
        Ok(GoodReduction::Good)
    }
}

/// Outcome of the top-graded-part analysis.
#[derive(Clone, Debug)]
pub struct DegreeReport {
    /// e = max(deg A, deg B).
    pub affine_top_degree: u32,
    /// e if the line at infinity is invariant, else e - 1.
    pub foliation_degree: u32,
    pub linf_invariant: bool,
    /// x B_e - y A_e on the top graded parts.
    pub witness: SparsePoly,
}

/// p-divisor of a vector field, with the degree bookkeeping needed to place
/// it inside the projective divisor.
#[derive(Clone, Debug)]
pub struct PDivisorResult {
    pub p: u64,
    /// Affine polynomial A v^p(y) - B v^p(x).
    pub divisor: SparsePoly,
    pub p_closed: bool,
    pub degree_report: DegreeReport,
    /// p(d-1) + d + 2 for the computed foliation degree d.
    pub expected_projective_degree: u32,
    /// expected projective degree minus affine degree; None when p-closed.
    /// Negative values are reported, never silently clamped.
    pub z_multiplicity: Option<i64>,
    /// Factors split off the divisor so far, with multiplicities.
    pub components: Vec<(SparsePoly, u32)>,
    /// divisor / product(components^multiplicity).
    pub cofactor: SparsePoly,
}

impl PDivisorResult {
    /// Split every power of `factor` out of the cofactor, recording the
    /// multiplicity. Returns how many times it divided.
    pub fn split_component(&mut self, factor: &SparsePoly) -> u32 {
        let mut mult = 0;
        while let Some(q) = self.cofactor.exact_div(factor) {
            self.cofactor = q;
            mult += 1;
        }
        if mult > 0 {
            self.components.push((factor.clone(), mult));
        }
        mult
    }

    /// Projective reconstruction: z^max(z_mult,0) * homogenize(divisor).
    pub fn projective_divisor(&self) -> Option<SparsePoly> {
        if self.p_closed {
            return None;
        }
        let h = self.divisor.homogenize(None).ok()?;
        let shift = self.z_multiplicity.unwrap_or(0).max(0) as u32;
        let mut m = Mono::one();
        m.0[2] = shift;
        Some(h.poly.mul_mono(&m, &self.divisor.ring().one()))
    }
}

impl DegreeReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "affine_top_degree": self.affine_top_degree,
            "foliation_degree": self.foliation_degree,
            "linf_invariant": self.linf_invariant,
            "witness": self.witness.to_string(),
        })
    }
}

impl PDivisorResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "p": self.p,
            "ring": self.divisor.ring().tag(),
            "divisor": self.divisor.to_string(),
            "p_closed": self.p_closed,
            "divisor_degree": self.divisor.total_degree().finite(),
            "degree": self.degree_report.to_json(),
            "expected_projective_degree": self.expected_projective_degree,
            "z_multiplicity": self.z_multiplicity,
            "components": self.components.iter()
                .map(|(f, m)| serde_json::json!([f.to_string(), m]))
                .collect::<Vec<_>>(),
            "cofactor": self.cofactor.to_string(),
        })
    }
}

/// First-jet report at a singular point.
#[derive(Clone, Debug)]
pub struct JetReport {
    pub point: [Coeff; 2],
    pub ring: Ring,
    /// Least total degree with a nonzero graded part of (B, -A) after
    /// translating the point to the origin.
    pub jet_order: u32,
    /// Witness x B_m - y A_m vanishes exactly for the radial model.
    pub dicritical: bool,
    pub witness: SparsePoly,
}

/// Singular points over one extension field, in deterministic order.
#[derive(Clone, Debug)]
pub struct SingularPoints {
    pub ring: Ring,
    pub points: Vec<[Coeff; 2]>,
}

impl SingularPoints {
    pub fn format_points(&self) -> Vec<String> {
        self.points
            .iter()
            .map(|[x, y]| {
                format!(
                    "({}, {})",
                    self.ring.fmt_coeff(x),
                    self.ring.fmt_coeff(y)
                )
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BadReductionReason {
    /// A common factor of (A, B) mod p appears: a curve of singularities.
    CommonFactor { gcd: SparsePoly },
    /// Degree or line-at-infinity behavior changes under reduction.
    DegreeChanged {
        char_zero: (u32, bool),
        mod_p: (u32, bool),
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoodReduction {
    Good,
    Bad(BadReductionReason),
}
