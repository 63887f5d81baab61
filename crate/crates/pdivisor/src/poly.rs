//! Sparse multivariate polynomials: exponent-vector -> coefficient maps with
//! a fixed graded-lexicographic term order (x > y > z).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;


use crate::ring::{Coeff, Ring};
use crate::Error;

pub const MAX_ARITY: usize = 3;
pub const VAR_NAMES: [&str; MAX_ARITY] = ["x", "y", "z"];

/// Exponent vector. Entries beyond the polynomial arity stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub [u32; MAX_ARITY]);

impl Mono {
    pub fn one() -> Mono {
        Mono([0; MAX_ARITY])
    }

    pub fn var(idx: usize) -> Mono {
        let mut m = [0; MAX_ARITY];
        m[idx] = 1;
        Mono(m)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut m = [0; MAX_ARITY];
        for i in 0..MAX_ARITY {
            m[i] = self.0[i] + other.0[i];
        }
        Mono(m)
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Mono) -> Mono {
        let mut m = [0; MAX_ARITY];
        for i in 0..MAX_ARITY {
            m[i] = self.0[i] - other.0[i];
        }
        Mono(m)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree with a sentinel for the zero polynomial, so degree
/// comparisons never need a special case.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(&self) -> Option<u32> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(*d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Homogenization output: the homogeneous polynomial in (x,y,z) together with
/// the extra power of z introduced when the target degree exceeds deg f.
#[derive(Clone, Debug)]
pub struct HomogenizationResult {
    pub poly: SparsePoly,
    pub z_shift: u32,
}

/// Sparse polynomial over a [`Ring`]. No zero coefficients are stored and the
/// zero polynomial is the empty map.
#[derive(Clone, Debug)]
pub struct SparsePoly {
    ring: Ring,
    arity: usize,
    terms: BTreeMap<Mono, Coeff>,
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.arity == other.arity && self.terms == other.terms
    }
}

impl Eq for SparsePoly {}

impl SparsePoly {
    pub fn zero(ring: Ring, arity: usize) -> SparsePoly {
        assert!(arity >= 1 && arity <= MAX_ARITY, "arity must be 1..=3");
        SparsePoly {
            ring,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: Ring, arity: usize, c: Coeff) -> SparsePoly {
        let mut p = SparsePoly::zero(ring, arity);
        p.set_term(Mono::one(), c);
        p
    }

    pub fn one(ring: Ring, arity: usize) -> SparsePoly {
        let c = ring.one();
        SparsePoly::constant(ring, arity, c)
    }

    pub fn from_i64(ring: Ring, arity: usize, n: i64) -> SparsePoly {
        let c = ring.from_i64(n);
        SparsePoly::constant(ring, arity, c)
    }

    pub fn var(ring: Ring, arity: usize, idx: usize) -> SparsePoly {
        assert!(idx < arity, "variable index out of range");
        let mut p = SparsePoly::zero(ring, arity);
        let c = p.ring.one();
        p.set_term(Mono::var(idx), c);
        p
    }

    /// Monomial c * x^e0 y^e1 z^e2.
    pub fn monomial(ring: Ring, arity: usize, mono: Mono, c: Coeff) -> SparsePoly {
        let mut p = SparsePoly::zero(ring, arity);
        p.set_term(mono, c);
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| *m == Mono::one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::one())
                .map(|c| self.ring.is_one(c))
                .unwrap_or(false)
    }

    pub fn set_term(&mut self, m: Mono, c: Coeff) {
        for i in self.arity..MAX_ARITY {
            assert_eq!(m.0[i], 0, "exponent beyond arity");
        }
        if self.ring.is_zero(&c) {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, c);
        }
    }

    pub fn coeff(&self, m: &Mono) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    fn add_to_term(&mut self, m: Mono, c: &Coeff) {
        let cur = self.coeff(&m);
        let next = self.ring.add(&cur, c);
        self.set_term(m, next);
    }

    fn check_compatible(&self, other: &SparsePoly) {
        assert!(
            self.ring == other.ring,
            "ring mismatch: {} vs {}",
            self.ring,
            other.ring
        );
        assert_eq!(self.arity, other.arity, "arity mismatch");
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        self.check_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_to_term(*m, c);
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.ring.clone(), self.arity);
        for (m, c) in &self.terms {
            out.set_term(*m, self.ring.neg(c));
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        self.check_compatible(other);
        let mut out = SparsePoly::zero(self.ring.clone(), self.arity);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = self.ring.mul(c1, c2);
                out.add_to_term(m1.mul(m2), &c);
            }
        }
        out
    }

    pub fn mul_coeff(&self, c: &Coeff) -> SparsePoly {
        let mut out = SparsePoly::zero(self.ring.clone(), self.arity);
        for (m, c0) in &self.terms {
            out.add_to_term(*m, &self.ring.mul(c0, c));
        }
        out
    }

    pub fn mul_mono(&self, m: &Mono, c: &Coeff) -> SparsePoly {
        let mut out = SparsePoly::zero(self.ring.clone(), self.arity);
        for (m0, c0) in &self.terms {
            out.add_to_term(m0.mul(m), &self.ring.mul(c0, c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut acc = SparsePoly::one(self.ring.clone(), self.arity);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial_derivative(&self, var: usize) -> SparsePoly {
        assert!(var < self.arity, "variable index out of range");
        let mut out = SparsePoly::zero(self.ring.clone(), self.arity);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = *m;
            m2.0[var] = e - 1;
            let factor = self.ring.from_int(&BigInt::from(e));
            out.add_to_term(m2, &self.ring.mul(c, &factor));
        }
        out
    }

    pub fn total_degree(&self) -> Degree {
        match self.terms.keys().map(|m| m.total_degree()).max() {
            None => Degree::MinusInfinity,
            Some(d) => Degree::Finite(d),
        }
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Sum of the terms of exact total degree `e`.
    pub fn graded_part(&self, e: u32) -> SparsePoly {
        let mut out = SparsePoly::zero(self.ring.clone(), self.arity);
        for (m, c) in &self.terms {
            if m.total_degree() == e {
                out.set_term(*m, c.clone());
            }
        }
        out
    }

    /// The smallest total degree with a nonzero graded part.
    pub fn order_at_origin(&self) -> Degree {
        match self.terms.keys().map(|m| m.total_degree()).min() {
            None => Degree::MinusInfinity,
            Some(d) => Degree::Finite(d),
        }
    }

    /// Greatest monomial in graded-lex order, with its coefficient.
    pub fn leading_term(&self) -> Option<(Mono, Coeff)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (*m, c.clone()))
    }

    /// Scale so the graded-lex leading coefficient is 1. Field rings only.
    pub fn monic(&self) -> SparsePoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                if self.ring.is_one(&lc) {
                    return self.clone();
                }
                let inv = self
                    .ring
                    .inv(&lc)
                    .expect("monic requires field coefficients");
                self.mul_coeff(&inv)
            }
        }
    }

    /// Componentwise minimum of all exponent vectors: the monomial content.
    pub fn monomial_content(&self) -> Mono {
        let mut m = [u32::MAX; MAX_ARITY];
        for mono in self.terms.keys() {
            for i in 0..MAX_ARITY {
                m[i] = m[i].min(mono.0[i]);
            }
        }
        if self.terms.is_empty() {
            return Mono::one();
        }
        Mono(m)
    }

    /// Divide out the monomial content; returns (content, cofactor).
    pub fn strip_monomial_content(&self) -> (Mono, SparsePoly) {
        let content = self.monomial_content();
        let mut out = SparsePoly::zero(self.ring.clone(), self.arity);
        for (m, c) in &self.terms {
            out.set_term(m.div(&content), c.clone());
        }
        (content, out)
    }

    /// Variables that actually occur.
    pub fn used_vars(&self) -> Vec<usize> {
        let mut used = [false; MAX_ARITY];
        for m in self.terms.keys() {
            for i in 0..self.arity {
                if m.0[i] > 0 {
                    used[i] = true;
                }
            }
        }
        (0..self.arity).filter(|&i| used[i]).collect()
    }

    /// Map coefficients into another ring. Supports Z -> anything, any ring to
    /// itself, and prime-field constants into an extension of the same
    /// characteristic.
    pub fn to_ring(&self, ring: &Ring) -> Result<SparsePoly, Error> {
        if *ring == self.ring {
            return Ok(self.clone());
        }
        let mut out = SparsePoly::zero(ring.clone(), self.arity);
        for (m, c) in &self.terms {
            let mapped = match (c, ring) {
                (Coeff::Int(n), _) => ring.from_int(n),
                (Coeff::Gf(g), Ring::Gf(spec)) => {
                    match &self.ring {
                        // prime-field constants embed into any extension
                        Ring::Gf(src) if src.p() == spec.p() && src.k() == 1 => {
                            Coeff::Gf(spec.elem_from_u64(g.coeffs()[0]))
                        }
                        _ => return Err(Error::RingMismatch),
                    }
                }
                _ => return Err(Error::RingMismatch),
            };
            out.add_to_term(*m, &mapped);
        }
        Ok(out)
    }

    /// Coefficient-wise reduction of an integer polynomial modulo p.
    pub fn reduce_mod_p(&self, p: u64) -> Result<SparsePoly, Error> {
        if self.ring != Ring::Int {
            return Err(Error::RingMismatch);
        }
        let target = Ring::Gf(crate::ring::FieldSpec::prime(p)?);
        self.to_ring(&target)
    }

    /// In characteristic p: Some(g) with g^p = self iff every exponent is
    /// divisible by p (coefficients always have unique p-th roots).
    pub fn pth_power_root(&self) -> Option<SparsePoly> {
        let p = self.ring.characteristic();
        if p == 0 {
            return None;
        }
        let pu = p as u32;
        let mut out = SparsePoly::zero(self.ring.clone(), self.arity);
        for (m, c) in &self.terms {
            if m.0.iter().any(|&e| e % pu != 0) {
                return None;
            }
            let root_m = Mono([m.0[0] / pu, m.0[1] / pu, m.0[2] / pu]);
            let root_c = self.ring.pth_root(c)?;
            out.set_term(root_m, root_c);
        }
        Some(out)
    }

    /// Homogenize (x,y) -> (x,y,z) at `target` (defaults to deg f).
    pub fn homogenize(&self, target: Option<u32>) -> Result<HomogenizationResult, Error> {
        if self.arity != 2 {
            return Err(Error::ArityMismatch);
        }
        let deg = self.total_degree().finite().unwrap_or(0);
        let t = target.unwrap_or(deg);
        if t < deg {
            return Err(Error::DegenerateInput(format!(
                "target degree {t} below polynomial degree {deg}"
            )));
        }
        let mut out = SparsePoly::zero(self.ring.clone(), 3);
        for (m, c) in &self.terms {
            let z = t - m.total_degree();
            out.set_term(Mono([m.0[0], m.0[1], z]), c.clone());
        }
        Ok(HomogenizationResult {
            poly: out,
            z_shift: t - deg,
        })
    }

    /// Substitute z = 1 and drop to arity 2.
    pub fn dehomogenize(&self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.ring.clone(), 2);
        for (m, c) in &self.terms {
            out.add_to_term(Mono([m.0[0], m.0[1], 0]), c);
        }
        out
    }

    /// Evaluate at a point given by one coefficient per variable.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.arity, "point arity mismatch");
        let mut acc = self.ring.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, coord) in point.iter().enumerate() {
                for _ in 0..m.0[i] {
                    term = self.ring.mul(&term, coord);
                }
            }
            acc = self.ring.add(&acc, &term);
        }
        acc
    }

    /// Translate: f(x + a, y + b, ...) for offsets in the same ring.
    pub fn shift(&self, offset: &[Coeff]) -> SparsePoly {
        assert_eq!(offset.len(), self.arity, "offset arity mismatch");
        // precompute (var_i + offset_i)^e for the needed exponents
        let mut var_powers: Vec<Vec<SparsePoly>> = Vec::with_capacity(self.arity);
        for i in 0..self.arity {
            let max_e = self.degree_in(i).unwrap_or(0) as usize;
            let base = SparsePoly::var(self.ring.clone(), self.arity, i).add(
                &SparsePoly::constant(self.ring.clone(), self.arity, offset[i].clone()),
            );
            let mut powers = Vec::with_capacity(max_e + 1);
            powers.push(SparsePoly::one(self.ring.clone(), self.arity));
            for e in 1..=max_e {
                let next = powers[e - 1].mul(&base);
                powers.push(next);
            }
            var_powers.push(powers);
        }
        let mut out = SparsePoly::zero(self.ring.clone(), self.arity);
        for (m, c) in &self.terms {
            let mut term = SparsePoly::constant(self.ring.clone(), self.arity, c.clone());
            for i in 0..self.arity {
                term = term.mul(&var_powers[i][m.0[i] as usize]);
            }
            out = out.add(&term);
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    /// Canonical form: graded-lex descending, explicit `*` and `^`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let cs = self.ring.fmt_coeff(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            let needs_parens = mag.contains('+') || mag.contains('-') || mag.contains('*');
            let coeff_str = if needs_parens {
                format!("({mag})")
            } else {
                mag.clone()
            };
            if m.total_degree() == 0 {
                write!(f, "{coeff_str}")?;
                continue;
            }
            if mag != "1" || needs_parens {
                factors.push(coeff_str);
            }
            for i in 0..self.arity {
                match m.0[i] {
                    0 => {}
                    1 => factors.push(VAR_NAMES[i].to_string()),
                    e => factors.push(format!("{}^{}", VAR_NAMES[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Ring {
        Ring::parse("F2").unwrap()
    }

    fn zz() -> Ring {
        Ring::Int
    }

    #[test]
    fn mono_order_is_graded_lex() {
        let x2 = Mono([2, 0, 0]);
        let xy = Mono([1, 1, 0]);
        let y2 = Mono([0, 2, 0]);
        let y3 = Mono([0, 3, 0]);
        assert!(x2 > xy && xy > y2);
        assert!(y3 > x2);
    }

    #[test]
    fn add_cancels_in_char_2() {
        let r = f2();
        let xy = SparsePoly::var(r.clone(), 2, 0).add(&SparsePoly::var(r.clone(), 2, 1));
        assert!(xy.add(&xy).is_zero());
    }

    #[test]
    fn mul_expands() {
        let r = zz();
        let x1 = SparsePoly::var(r.clone(), 2, 0).add(&SparsePoly::one(r.clone(), 2));
        let y1 = SparsePoly::var(r.clone(), 2, 1).add(&SparsePoly::one(r.clone(), 2));
        let prod = x1.mul(&y1);
        assert_eq!(prod.num_terms(), 4);
        assert_eq!(prod.to_string(), "x*y + x + y + 1");
    }

    #[test]
    fn freshmans_dream() {
        let r = f2();
        let xy = SparsePoly::var(r.clone(), 2, 0).add(&SparsePoly::var(r.clone(), 2, 1));
        let sq = xy.pow(2);
        assert_eq!(sq.to_string(), "x^2 + y^2");
    }

    #[test]
    fn derivative_examples() {
        // d/dx (x y^3 - 1) = y^3 over Z
        let z = zz();
        let p = SparsePoly::monomial(z.clone(), 2, Mono([1, 3, 0]), z.one())
            .add(&SparsePoly::from_i64(z.clone(), 2, -1));
        assert_eq!(p.partial_derivative(0).to_string(), "y^3");

        let r = f2();
        // d/dy (x^3 + y^4) = 4y^3 = 0 mod 2
        let p = SparsePoly::monomial(r.clone(), 2, Mono([3, 0, 0]), r.one()).add(
            &SparsePoly::monomial(r.clone(), 2, Mono([0, 4, 0]), r.one()),
        );
        assert!(p.partial_derivative(1).is_zero());
        // d/dx (x^2 + xy) = 2x + y = y mod 2
        let q = SparsePoly::monomial(r.clone(), 2, Mono([2, 0, 0]), r.one()).add(
            &SparsePoly::monomial(r.clone(), 2, Mono([1, 1, 0]), r.one()),
        );
        assert_eq!(q.partial_derivative(0).to_string(), "y");
    }

    #[test]
    fn degree_of_zero_is_minus_infinity() {
        let z = SparsePoly::zero(zz(), 2);
        assert_eq!(z.total_degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(0));
    }

    #[test]
    fn graded_parts_reassemble() {
        let r = zz();
        // xy^3 - 1
        let p = SparsePoly::monomial(r.clone(), 2, Mono([1, 3, 0]), r.one())
            .add(&SparsePoly::from_i64(r.clone(), 2, -1));
        assert_eq!(p.graded_part(4).to_string(), "x*y^3");
        assert_eq!(p.graded_part(0).to_string(), "-1");
        let mut acc = SparsePoly::zero(r.clone(), 2);
        for e in 0..=4 {
            acc = acc.add(&p.graded_part(e));
        }
        assert_eq!(acc, p);
    }

    #[test]
    fn homogenize_round_trip() {
        let r = zz();
        // x^2 + y
        let p = SparsePoly::monomial(r.clone(), 2, Mono([2, 0, 0]), r.one())
            .add(&SparsePoly::var(r.clone(), 2, 1));
        let h = p.homogenize(None).unwrap();
        assert_eq!(h.z_shift, 0);
        assert_eq!(h.poly.to_string(), "x^2 + y*z");
        let h3 = p.homogenize(Some(3)).unwrap();
        assert_eq!(h3.z_shift, 1);
        assert_eq!(h3.poly.to_string(), "x^2*z + y*z^2");
        assert_eq!(h3.poly.dehomogenize(), p);
    }

    #[test]
    fn reduce_mod_p_drops_terms() {
        let r = zz();
        let p = SparsePoly::monomial(r.clone(), 2, Mono([2, 0, 0]), r.from_i64(2))
            .add(&SparsePoly::var(r.clone(), 2, 1));
        assert_eq!(p.reduce_mod_p(2).unwrap().to_string(), "y");
        let q = SparsePoly::var(r.clone(), 1, 0)
            .mul_coeff(&r.from_i64(3))
            .add(&SparsePoly::from_i64(r.clone(), 1, 3));
        assert!(q.reduce_mod_p(3).unwrap().is_zero());
    }

    #[test]
    fn reduce_mod_2_collapses_signs() {
        // -(x^3 - y^4) and x^3 + y^4 agree mod 2
        let r = zz();
        let p = SparsePoly::monomial(r.clone(), 2, Mono([3, 0, 0]), r.from_i64(-1)).add(
            &SparsePoly::monomial(r.clone(), 2, Mono([0, 4, 0]), r.one()),
        );
        assert_eq!(p.reduce_mod_p(2).unwrap().to_string(), "y^4 + x^3");
    }

    #[test]
    fn pth_power_root_detects() {
        let r = f2();
        let x = SparsePoly::var(r.clone(), 2, 0);
        let y = SparsePoly::var(r.clone(), 2, 1);
        let sq = x.add(&y).pow(2);
        assert_eq!(sq.pth_power_root().unwrap(), x.add(&y));
        let not_sq = sq.add(&x.mul(&y));
        assert!(not_sq.pth_power_root().is_none());

        let r3 = Ring::parse("F3").unwrap();
        let xy1 = SparsePoly::var(r3.clone(), 2, 0)
            .mul(&SparsePoly::var(r3.clone(), 2, 1))
            .add(&SparsePoly::one(r3.clone(), 2));
        let cube = xy1.pow(3);
        assert_eq!(cube.to_string(), "x^3*y^3 + 1");
        assert_eq!(cube.pth_power_root().unwrap(), xy1);
    }

    #[test]
    fn shift_translates_origin() {
        let r = f2();
        // f = x^2 + y, shifted by (1, 1): (x+1)^2 + y + 1 = x^2 + y (char 2)
        let p = SparsePoly::monomial(r.clone(), 2, Mono([2, 0, 0]), r.one())
            .add(&SparsePoly::var(r.clone(), 2, 1));
        let shifted = p.shift(&[r.one(), r.one()]);
        assert_eq!(shifted.to_string(), "x^2 + y");
        // constant term of the shift is the value at the offset
        let val = p.eval(&[r.one(), r.one()]);
        assert_eq!(shifted.coeff(&Mono::one()), val);
        assert!(r.is_zero(&val));
    }

    #[test]
    fn display_signs_over_z() {
        let r = zz();
        let p = SparsePoly::monomial(r.clone(), 2, Mono([1, 3, 0]), r.one())
            .add(&SparsePoly::from_i64(r.clone(), 2, -1));
        assert_eq!(p.to_string(), "x*y^3 - 1");
        assert_eq!(p.neg().to_string(), "-x*y^3 + 1");
        let two_x = SparsePoly::var(r.clone(), 2, 0).mul_coeff(&r.from_i64(2));
        assert_eq!(two_x.to_string(), "2*x");
    }

    #[test]
    fn monomial_content_strips() {
        let r = f2();
        // y^2 * (x + y)
        let p = SparsePoly::monomial(r.clone(), 2, Mono([1, 2, 0]), r.one()).add(
            &SparsePoly::monomial(r.clone(), 2, Mono([0, 3, 0]), r.one()),
        );
        let (content, core) = p.strip_monomial_content();
        assert_eq!(content, Mono([0, 2, 0]));
        assert_eq!(core.to_string(), "x + y");
    }
}
