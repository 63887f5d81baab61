//! Exact division, multivariate gcd, and the p-factor test.
//!
//! Division cancels graded-lex leading terms, which decides divisibility
//! exactly. The gcd treats operands as univariate in the highest occurring
//! variable over the polynomial ring in the remaining ones, runs a primitive
//! pseudo-remainder sequence, and recurses on contents.

use crate::poly::{Mono, SparsePoly};
use crate::ring::Ring;
use crate::Error;

impl SparsePoly {
    /// Exact quotient self / divisor, or None when not divisible.
    ///
    /// Over a field this decides divisibility in k[x,y,z]; over Z it decides
    /// divisibility in Z[x,y,z] (coefficient quotients must stay integral).
    ///
    /// Panics if `divisor` is zero.
    pub fn exact_div(&self, divisor: &SparsePoly) -> Option<SparsePoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (dm, dc) = divisor.leading_term().unwrap();
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(self.ring().clone(), self.arity());
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(&rm) {
                return None;
            }
            let qc = self.ring().div_exact(&rc, &dc)?;
            let qm = rm.div(&dm);
            quot.set_term(qm, qc.clone());
            rem = rem.sub(&divisor.mul_mono(&qm, &qc));
        }
        Some(quot)
    }

    /// Coefficient of `var^e`, as a polynomial in the remaining variables
    /// (same arity, `var`-exponent zeroed).
    pub fn coeff_of_power(&self, var: usize, e: u32) -> SparsePoly {
        let mut out = SparsePoly::zero(self.ring().clone(), self.arity());
        for (m, c) in self.terms() {
            if m.0[var] == e {
                let mut m2 = *m;
                m2.0[var] = 0;
                out.set_term(m2, c.clone());
            }
        }
        out
    }

    /// Monic gcd over a field; gcd(f, 0) = monic f.
    pub fn gcd(&self, other: &SparsePoly) -> SparsePoly {
        assert!(self.ring().is_field(), "gcd requires field coefficients");
        gcd_rec(self, other).monic()
    }
}

fn gcd_rec(f: &SparsePoly, g: &SparsePoly) -> SparsePoly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let mut used = f.used_vars();
    for v in g.used_vars() {
        if !used.contains(&v) {
            used.push(v);
        }
    }
    if used.is_empty() {
        return SparsePoly::one(f.ring().clone(), f.arity());
    }
    let v = used.into_iter().max().unwrap();

    let content_f = content_in(f, v);
    let content_g = content_in(g, v);
    let cont = gcd_rec(&content_f, &content_g);

    let mut a = f.exact_div(&content_f).expect("content divides");
    let mut b = g.exact_div(&content_g).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = prem(&a, &b, v);
        a = b;
        b = if r.is_zero() {
            r
        } else {
            let c = content_in(&r, v);
            r.exact_div(&c).expect("content divides")
        };
    }
    cont.mul(&a)
}

/// Content of `f` viewed as univariate in `v`: gcd of its coefficient
/// polynomials. Short-circuits to 1 once the running gcd is a constant.
fn content_in(f: &SparsePoly, v: usize) -> SparsePoly {
    let mut acc = SparsePoly::zero(f.ring().clone(), f.arity());
    let dv = f.degree_in(v).unwrap_or(0);
    for e in 0..=dv {
        let c = f.coeff_of_power(v, e);
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, &c);
        if !acc.is_zero() && acc.is_constant() {
            return SparsePoly::one(f.ring().clone(), f.arity());
        }
    }
    acc
}

/// Pseudo-remainder of `a` by `b` with respect to `v`: repeatedly multiplies
/// by the leading coefficient of `b` and cancels the top `v`-power. The
/// result is a pseudo-remainder up to a content factor, which the caller
/// strips anyway.
fn prem(a: &SparsePoly, b: &SparsePoly, v: usize) -> SparsePoly {
    let db = b.degree_in(v).expect("b nonzero");
    let lcb = b.coeff_of_power(v, db);
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if r.is_zero() || dr < db {
            break;
        }
        let lcr = r.coeff_of_power(v, dr);
        let mut shift = Mono::one();
        shift.0[v] = dr - db;
        let one = r.ring().one();
        r = lcb.mul(&r).sub(&lcr.mul(b).mul_mono(&shift, &one));
    }
    r
}

// ---------------------------------------------------------------------------
// p-th power parts and the p-factor test
// ---------------------------------------------------------------------------

/// Maximal p-th power split: f = root^p * cofactor with root monic and
/// maximal. Field coefficients in characteristic p.
pub fn pth_power_part(f: &SparsePoly) -> (SparsePoly, SparsePoly) {
    let p = f.ring().characteristic();
    assert!(p > 0, "pth_power_part requires positive characteristic");
    assert!(!f.is_zero(), "pth_power_part of zero");
    if f.is_constant() {
        return (SparsePoly::one(f.ring().clone(), f.arity()), f.clone());
    }
    if let Some(root) = f.pth_power_root() {
        return (
            root.monic(),
            f.exact_div(&root.monic().pow(p as u32))
                .expect("root^p divides"),
        );
    }
    let mut g = f.clone();
    for var in 0..f.arity() {
        let d = f.partial_derivative(var);
        if !d.is_zero() {
            g = g.gcd(&d);
        }
    }
    if g.is_constant() {
        return (SparsePoly::one(f.ring().clone(), f.arity()), f.clone());
    }
    let (root, _) = pth_power_part(&g);
    let cof = f
        .exact_div(&root.pow(p as u32))
        .expect("p-th power part divides");
    (root, cof)
}

/// Why a polynomial is not a p-factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotPFactorReason {
    /// p does not divide the (preserved) total degree.
    DegreeObstruction { degree: u32 },
    /// The reduction has a nonconstant factor that is no p-th power.
    NonPowerCofactor { cofactor: SparsePoly },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PFactorVerdict {
    /// The reduction mod p is root^p up to a constant.
    IsPFactor { root: SparsePoly },
    NotPFactor(NotPFactorReason),
}

/// Decide whether the reduction mod p of an integer polynomial is p times an
/// effective divisor, i.e. a perfect p-th power up to a constant.
pub fn p_factor_test(f: &SparsePoly, p: u64) -> Result<PFactorVerdict, Error> {
    if *f.ring() != Ring::Int {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let fbar = f.reduce_mod_p(p)?;
    if fbar.is_zero() {
        return Err(Error::DegenerateInput(format!(
            "polynomial reduces to 0 mod {p}"
        )));
    }
    let dz = f.total_degree().finite().unwrap();
    let dbar = fbar.total_degree().finite().unwrap();
    if dbar == dz && dz as u64 % p != 0 {
        return Ok(PFactorVerdict::NotPFactor(
            NotPFactorReason::DegreeObstruction { degree: dz },
        ));
    }
    let (root, cofactor) = pth_power_part(&fbar);
    if cofactor.is_constant() {
        Ok(PFactorVerdict::IsPFactor { root })
    } else {
        Ok(PFactorVerdict::NotPFactor(
            NotPFactorReason::NonPowerCofactor { cofactor },
        ))
    }
}
