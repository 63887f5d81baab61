//! Coefficient rings: exact integers, rationals, and finite fields F_{p^k}.
//!
//! Finite fields are represented relative to a [`FieldSpec`] (characteristic,
//! extension degree, irreducible modulus). Moduli for p in {2,3} and k <= 4
//! come from a built-in table; anything else must be supplied by the caller
//! and is checked for irreducibility.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

// ---------------------------------------------------------------------------
// univariate arithmetic over F_p, little-endian coefficient vectors
// ---------------------------------------------------------------------------

fn uni_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn uni_deg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn uni_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    uni_trim(&mut out);
    out
}

/// Remainder of `a` modulo monic-normalizable `b`, in place of full division.
fn uni_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    uni_trim(&mut r);
    let db = uni_deg(b).expect("division by zero polynomial");
    let lb_inv = mod_inv(b[db], p);
    while let Some(dr) = uni_deg(&r) {
        if dr < db {
            break;
        }
        let factor = (r[dr] * lb_inv) % p;
        let shift = dr - db;
        for (i, &bi) in b.iter().enumerate() {
            let idx = i + shift;
            let sub = (factor * bi) % p;
            r[idx] = (r[idx] + p - sub) % p;
        }
        uni_trim(&mut r);
    }
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p.
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Extended Euclid: returns (g, s) with s*a = g mod m, g = gcd(a, m), g monic.
fn uni_ext_gcd(a: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    uni_trim(&mut r0);
    uni_trim(&mut r1);
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        // quotient of r0 by r1
        let d1 = uni_deg(&r1).unwrap();
        let l1_inv = mod_inv(r1[d1], p);
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut rem = r0.clone();
        while let Some(d0) = uni_deg(&rem) {
            if d0 < d1 {
                break;
            }
            let factor = rem[d0] * l1_inv % p;
            q[d0 - d1] = factor;
            for (i, &bi) in r1.iter().enumerate() {
                let idx = i + d0 - d1;
                rem[idx] = (rem[idx] + p - factor * bi % p) % p;
            }
            uni_trim(&mut rem);
        }
        uni_trim(&mut q);
        // (r0, r1) = (r1, r0 - q r1); (s0, s1) = (s1, s0 - q s1)
        let qs1 = uni_mul(&q, &s1, p);
        let mut s2 = s0.clone();
        s2.resize(s2.len().max(qs1.len()), 0);
        for (i, &c) in qs1.iter().enumerate() {
            s2[i] = (s2[i] + p - c) % p;
        }
        uni_trim(&mut s2);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // normalize g monic
    if let Some(d) = uni_deg(&r0) {
        let inv = mod_inv(r0[d], p);
        for c in r0.iter_mut() {
            *c = *c * inv % p;
        }
        for c in s0.iter_mut() {
            *c = *c * inv % p;
        }
    }
    (r0, s0)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exhaustive irreducibility test over F_p: trial division by every monic
/// polynomial of degree up to deg/2. Only intended for the small tabled sizes.
fn uni_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = match uni_deg(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    for cd in 1..=(d / 2) {
        // enumerate monic polynomials of degree cd
        let count = p.pow(cd as u32);
        for n in 0..count {
            let mut cand = Vec::with_capacity(cd + 1);
            let mut v = n;
            for _ in 0..cd {
                cand.push(v % p);
                v /= p;
            }
            cand.push(1);
            if uni_rem(f, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

/// A concrete finite field F_{p^k} = F_p[t] / (modulus).
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    k: usize,
    /// monic irreducible of degree k, little-endian, length k+1
    modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Arc<FieldSpec>, Error> {
        if !is_prime(p) {
            return Err(Error::UnsupportedField(format!("{p} is not prime")));
        }
        let mut m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        uni_trim(&mut m);
        let k = match uni_deg(&m) {
            Some(k) if k >= 1 => k,
            _ => {
                return Err(Error::UnsupportedField(
                    "modulus must have degree >= 1".into(),
                ))
            }
        };
        if m[k] != 1 {
            let inv = mod_inv(m[k], p);
            for c in m.iter_mut() {
                *c = *c * inv % p;
            }
        }
        if !uni_is_irreducible(&m, p) {
            return Err(Error::UnsupportedField(format!(
                "modulus is reducible over F_{p}"
            )));
        }
        Ok(Arc::new(FieldSpec { p, k, modulus: m }))
    }

    /// Prime field F_p (modulus t).
    pub fn prime(p: u64) -> Result<Arc<FieldSpec>, Error> {
        FieldSpec::new(p, vec![0, 1])
    }

    /// Built-in moduli for p in {2,3}, k <= 4.
    pub fn tabled(p: u64, k: usize) -> Result<Arc<FieldSpec>, Error> {
        let table: Option<Vec<u64>> = match (p, k) {
            (_, 1) => Some(vec![0, 1]),
            (2, 2) => Some(vec![1, 1, 1]),
            (2, 3) => Some(vec![1, 1, 0, 1]),
            (2, 4) => Some(vec![1, 1, 0, 0, 1]),
            (3, 2) => Some(vec![1, 0, 1]),
            (3, 3) => Some(vec![1, 2, 0, 1]),
            (3, 4) => Some(vec![2, 1, 0, 0, 1]),
            _ => None,
        };
        match table {
            Some(m) => FieldSpec::new(p, m),
            None => Err(Error::UnsupportedField(format!(
                "no tabled modulus for p={p}, k={k}; supply one explicitly"
            ))),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn zero_elem(&self) -> GfElem {
        GfElem(vec![0; self.k])
    }

    pub fn one_elem(&self) -> GfElem {
        let mut v = vec![0; self.k];
        v[0] = 1;
        GfElem(v)
    }

    pub fn elem_from_u64(&self, n: u64) -> GfElem {
        let mut v = vec![0; self.k];
        v[0] = n % self.p;
        GfElem(v)
    }

    /// Element number `n` in the canonical enumeration (base-p digits).
    pub fn elem_by_index(&self, n: u64) -> GfElem {
        let mut v = vec![0; self.k];
        let mut n = n;
        for slot in v.iter_mut() {
            *slot = n % self.p;
            n /= self.p;
        }
        GfElem(v)
    }

    /// All field elements in canonical enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = GfElem> + '_ {
        (0..self.order()).map(|n| self.elem_by_index(n))
    }

    pub fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        GfElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| (x + y) % self.p)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GfElem) -> GfElem {
        GfElem(a.0.iter().map(|x| (self.p - x) % self.p).collect())
    }

    pub fn sub(&self, a: &GfElem, b: &GfElem) -> GfElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        let prod = uni_mul(&a.0, &b.0, self.p);
        let mut r = uni_rem(&prod, &self.modulus, self.p);
        r.resize(self.k, 0);
        GfElem(r)
    }

    pub fn inv(&self, a: &GfElem) -> Option<GfElem> {
        if a.is_zero() {
            return None;
        }
        let (g, s) = uni_ext_gcd(&a.0, &self.modulus, self.p);
        debug_assert_eq!(uni_deg(&g), Some(0));
        let mut s = uni_rem(&s, &self.modulus, self.p);
        s.resize(self.k, 0);
        Some(GfElem(s))
    }

    pub fn pow(&self, a: &GfElem, mut e: u64) -> GfElem {
        let mut acc = self.one_elem();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Inverse Frobenius: the unique b with b^p = a.
    pub fn pth_root(&self, a: &GfElem) -> GfElem {
        if self.k == 1 || a.is_zero() {
            return a.clone();
        }
        // Frobenius has order k, so a^(p^(k-1)) is the p-th root.
        let mut e = 1u64;
        for _ in 0..(self.k - 1) {
            e = e.saturating_mul(self.p);
        }
        self.pow(a, e)
    }

    /// Whether `a` lies in the subfield F_{p^j} (j must divide k to be a subfield).
    pub fn in_subfield(&self, a: &GfElem, j: usize) -> bool {
        let mut e = 1u64;
        for _ in 0..j {
            e = e.saturating_mul(self.p);
        }
        self.pow(a, e) == *a
    }

    pub fn fmt_elem(&self, a: &GfElem) -> String {
        if self.k == 1 {
            return a.0[0].to_string();
        }
        if a.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in a.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            let part = if i == 0 {
                c.to_string()
            } else if c == 1 {
                var
            } else {
                format!("{c}*{var}")
            };
            parts.push(part);
        }
        parts.join("+")
    }
}

/// Element of F_{p^k}: little-endian coefficients of length k w.r.t. the
/// power basis of the generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfElem(Vec<u64>);

impl GfElem {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

// ---------------------------------------------------------------------------
// Ring and Coeff
// ---------------------------------------------------------------------------

/// Coefficient ring tag shared by all terms of a polynomial.
#[derive(Clone, Debug)]
pub enum Ring {
    /// Arbitrary-precision integers.
    Int,
    /// Arbitrary-precision rationals.
    Rat,
    /// Finite field from a [`FieldSpec`].
    Gf(Arc<FieldSpec>),
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Ring::Int, Ring::Int) => true,
            (Ring::Rat, Ring::Rat) => true,
            (Ring::Gf(a), Ring::Gf(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn gf(p: u64, k: usize) -> Result<Ring, Error> {
        Ok(Ring::Gf(FieldSpec::tabled(p, k)?))
    }

    /// Parse a ring tag: "Z", "Q", or "F<q>" with q = p^k a tabled prime power.
    pub fn parse(tag: &str) -> Result<Ring, Error> {
        match tag {
            "Z" | "z" => Ok(Ring::Int),
            "Q" | "q" => Ok(Ring::Rat),
            _ => {
                let digits = tag
                    .strip_prefix('F')
                    .or_else(|| tag.strip_prefix('f'))
                    .ok_or_else(|| Error::UnsupportedField(format!("unknown ring tag {tag:?}")))?;
                let q: u64 = digits
                    .parse()
                    .map_err(|_| Error::UnsupportedField(format!("unknown ring tag {tag:?}")))?;
                // factor q as p^k
                for p in 2..=q {
                    if is_prime(p) && q % p == 0 {
                        let mut k = 0usize;
                        let mut m = q;
                        while m % p == 0 {
                            m /= p;
                            k += 1;
                        }
                        if m != 1 {
                            return Err(Error::UnsupportedField(format!(
                                "{q} is not a prime power"
                            )));
                        }
                        return if k == 1 {
                            Ok(Ring::Gf(FieldSpec::prime(p)?))
                        } else {
                            Ring::gf(p, k)
                        };
                    }
                }
                Err(Error::UnsupportedField(format!("bad field order {q}")))
            }
        }
    }

    pub fn tag(&self) -> String {
        match self {
            Ring::Int => "Z".into(),
            Ring::Rat => "Q".into(),
            Ring::Gf(spec) => format!("F{}", spec.order()),
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Ring::Int)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::Int | Ring::Rat => 0,
            Ring::Gf(spec) => spec.p(),
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Ring::Int => Coeff::Int(BigInt::zero()),
            Ring::Rat => Coeff::Rat(BigRational::zero()),
            Ring::Gf(spec) => Coeff::Gf(spec.zero_elem()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Ring::Int => Coeff::Int(BigInt::one()),
            Ring::Rat => Coeff::Rat(BigRational::one()),
            Ring::Gf(spec) => Coeff::Gf(spec.one_elem()),
        }
    }

    pub fn from_int(&self, n: &BigInt) -> Coeff {
        match self {
            Ring::Int => Coeff::Int(n.clone()),
            Ring::Rat => Coeff::Rat(BigRational::from_integer(n.clone())),
            Ring::Gf(spec) => {
                let p = BigInt::from(spec.p());
                let mut r = n % &p;
                if r.is_negative() {
                    r += &p;
                }
                let r: u64 = r.try_into().expect("residue fits in u64");
                Coeff::Gf(spec.elem_from_u64(r))
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        self.from_int(&BigInt::from(n))
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Ring::Int, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x + y),
            (Ring::Rat, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Ring::Gf(s), Coeff::Gf(x), Coeff::Gf(y)) => Coeff::Gf(s.add(x, y)),
            _ => panic!("coefficient does not belong to ring"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Ring::Int, Coeff::Int(x)) => Coeff::Int(-x),
            (Ring::Rat, Coeff::Rat(x)) => Coeff::Rat(-x),
            (Ring::Gf(s), Coeff::Gf(x)) => Coeff::Gf(s.neg(x)),
            _ => panic!("coefficient does not belong to ring"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Ring::Int, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x * y),
            (Ring::Rat, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Ring::Gf(s), Coeff::Gf(x), Coeff::Gf(y)) => Coeff::Gf(s.mul(x, y)),
            _ => panic!("coefficient does not belong to ring"),
        }
    }

    /// Multiplicative inverse; None for zero or for non-units of Z.
    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        match (self, a) {
            (Ring::Int, Coeff::Int(x)) => {
                if x.is_one() {
                    Some(Coeff::Int(BigInt::one()))
                } else if (-x).is_one() {
                    Some(Coeff::Int(-BigInt::one()))
                } else {
                    None
                }
            }
            (Ring::Rat, Coeff::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Coeff::Rat(x.recip()))
                }
            }
            (Ring::Gf(s), Coeff::Gf(x)) => s.inv(x).map(Coeff::Gf),
            _ => panic!("coefficient does not belong to ring"),
        }
    }

    /// Exact division a/b; None when not exactly divisible in the ring.
    pub fn div_exact(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        match (self, a, b) {
            (Ring::Int, Coeff::Int(x), Coeff::Int(y)) => {
                if y.is_zero() {
                    None
                } else if (x % y).is_zero() {
                    Some(Coeff::Int(x / y))
                } else {
                    None
                }
            }
            _ => self.inv(b).map(|bi| self.mul(a, &bi)),
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Int(x) => x.is_zero(),
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Gf(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match (self, a) {
            (_, Coeff::Int(x)) => x.is_one(),
            (_, Coeff::Rat(x)) => x.is_one(),
            (Ring::Gf(s), Coeff::Gf(x)) => *x == s.one_elem(),
            _ => false,
        }
    }

    /// The unique b with b^p = a, in characteristic p.
    pub fn pth_root(&self, a: &Coeff) -> Option<Coeff> {
        match (self, a) {
            (Ring::Gf(s), Coeff::Gf(x)) => Some(Coeff::Gf(s.pth_root(x))),
            _ => None,
        }
    }

    pub fn fmt_coeff(&self, a: &Coeff) -> String {
        match (self, a) {
            (_, Coeff::Int(x)) => x.to_string(),
            (_, Coeff::Rat(x)) => x.to_string(),
            (Ring::Gf(s), Coeff::Gf(x)) => s.fmt_elem(x),
            _ => panic!("coefficient does not belong to ring"),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// A scalar from one of the supported rings. Which ring it belongs to is
/// contextual; polynomials carry the ring tag once for all their terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Int(BigInt),
    Rat(BigRational),
    Gf(GfElem),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabled_moduli_are_irreducible() {
        for (p, k) in [
            (2, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (3, 1),
            (3, 2),
            (3, 3),
            (3, 4),
        ] {
            let spec = FieldSpec::tabled(p, k).unwrap();
            assert_eq!(spec.p(), p);
            assert_eq!(spec.k(), k);
            assert_eq!(spec.order(), p.pow(k as u32));
        }
    }

    #[test]
    fn rejects_reducible_modulus() {
        // t^2 + 1 = (t+1)^2 over F_2
        assert!(FieldSpec::new(2, vec![1, 0, 1]).is_err());
        assert!(FieldSpec::new(4, vec![0, 1]).is_err());
    }

    #[test]
    fn field_axioms_f16() {
        let s = FieldSpec::tabled(2, 4).unwrap();
        let elems: Vec<GfElem> = s.elements().collect();
        assert_eq!(elems.len(), 16);
        for a in &elems {
            if !a.is_zero() {
                let inv = s.inv(a).unwrap();
                assert_eq!(s.mul(a, &inv), s.one_elem());
                // p-th root inverts Frobenius
                let root = s.pth_root(a);
                assert_eq!(s.mul(&root, &root), *a);
            }
            for b in &elems {
                assert_eq!(s.mul(a, b), s.mul(b, a));
            }
        }
    }

    #[test]
    fn subfield_detection() {
        let s = FieldSpec::tabled(2, 4).unwrap();
        let in_f2: Vec<_> = s.elements().filter(|a| s.in_subfield(a, 1)).collect();
        let in_f4: Vec<_> = s.elements().filter(|a| s.in_subfield(a, 2)).collect();
        assert_eq!(in_f2.len(), 2);
        assert_eq!(in_f4.len(), 4);
    }

    #[test]
    fn f9_arithmetic() {
        let s = FieldSpec::tabled(3, 2).unwrap();
        // generator t satisfies t^2 = -1 = 2
        let t = s.elem_by_index(3); // coeffs [0,1]
        let t2 = s.mul(&t, &t);
        assert_eq!(t2, s.elem_from_u64(2));
        for a in s.elements() {
            if !a.is_zero() {
                assert_eq!(s.pow(&a, 8), s.one_elem());
            }
        }
    }

    #[test]
    fn ring_tags_round_trip() {
        for tag in ["Z", "Q", "F2", "F3", "F4", "F8", "F9", "F16", "F27", "F5"] {
            let r = Ring::parse(tag).unwrap();
            assert_eq!(r.tag(), tag);
        }
        assert!(Ring::parse("F6").is_err());
        assert!(Ring::parse("R").is_err());
    }

    #[test]
    fn from_int_reduces() {
        let r = Ring::parse("F2").unwrap();
        assert!(r.is_zero(&r.from_i64(2)));
        assert!(r.is_one(&r.from_i64(-3)));
        let r3 = Ring::parse("F3").unwrap();
        assert!(r3.is_zero(&r3.from_i64(-3)));
        assert_eq!(r3.from_i64(-1), r3.from_i64(2));
    }
}
