//! Exact computation of p-th powers of plane polynomial vector fields, of
//! p-divisors of the foliations they define in characteristic p, and of
//! non-algebraicity certificates built from reduction modulo 2, Newton
//! polytope indecomposability, and the Carnicer degree bound.

pub mod certificate;
pub mod divide;
pub mod families;
pub mod foliation;
pub mod newton;
pub mod parse;
pub mod poly;
pub mod ring;

pub use certificate::{carnicer_bound, theorem_main_certificate, CertificateReport, Conclusion};
pub use divide::{p_factor_test, NotPFactorReason, PFactorVerdict};
pub use families::{expected_divisor, make_field, verify_family_theorem, FamilySpec};
pub use foliation::{DegreeReport, JetReport, PDivisorResult, PlaneVectorField};
pub use newton::{certify_irreducible, Backend, IrrStatus, IrreducibilityVerdict, LatticePolytope};
pub use parse::parse_poly;
pub use poly::{Degree, Mono, SparsePoly};
pub use ring::{Coeff, FieldSpec, GfElem, Ring};

use std::fmt;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Syntax error in a polynomial expression, with byte position.
    Parse { pos: usize, msg: String },
    /// Operands belong to different coefficient rings.
    RingMismatch,
    /// Operands have different variable arities.
    ArityMismatch,
    /// Ring characteristic does not match the requested prime.
    CharacteristicMismatch { expected: u64, found: u64 },
    /// Operation needs field coefficients.
    NotAField,
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// Input is outside the operation's domain.
    DegenerateInput(String),
    /// Family parameter constraints violated.
    ConstraintViolation(String),
    /// The given point is not a singular point of the vector field.
    PointNotSingular,
    /// No closed-form divisor is available for this family.
    NoClosedForm,
    /// Field construction problem (bad prime, reducible modulus, ...).
    UnsupportedField(String),
    /// Polytope operation undefined for a single point.
    PointPolytope,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { pos, msg } => write!(f, "parse error at position {pos}: {msg}"),
            Error::RingMismatch => write!(f, "coefficient ring mismatch"),
            Error::ArityMismatch => write!(f, "variable arity mismatch"),
            Error::CharacteristicMismatch { expected, found } => {
                write!(f, "characteristic mismatch: need {expected}, ring has {found}")
            }
            Error::NotAField => write!(f, "operation requires field coefficients"),
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            Error::DegenerateInput(msg) => write!(f, "degenerate input: {msg}"),
            Error::ConstraintViolation(msg) => write!(f, "constraint violation: {msg}"),
            Error::PointNotSingular => write!(f, "point is not singular"),
            Error::NoClosedForm => write!(f, "no closed-form divisor for this family"),
            Error::UnsupportedField(msg) => write!(f, "unsupported field: {msg}"),
            Error::PointPolytope => write!(f, "operation undefined for a point polytope"),
        }
    }
}

impl std::error::Error for Error {}
