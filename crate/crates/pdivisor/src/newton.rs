//! Lattice polytopes of polynomial supports, Minkowski indecomposability via
//! the primitive-edge zero-sum criterion, and irreducibility certification.
//!
//! The indecomposability test subdivides every edge into primitive lattice
//! steps. A convex lattice polygon is a Minkowski sum of two smaller ones
//! exactly when its primitive edge multiset splits into two proper zero-sum
//! sub-multisets, so absence of a proper zero-sum sub-multiset certifies
//! indecomposability, which in turn certifies irreducibility for polynomials
//! not divisible by any variable.

use std::collections::{BTreeMap, HashMap};

use crate::poly::SparsePoly;
use crate::ring::Ring;
use crate::Error;

pub type Point = (i64, i64);

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn cross(o: Point, a: Point, b: Point) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// A 2D integral polytope: counterclockwise vertex cycle starting from the
/// lexicographically least vertex. A point and a segment are the degenerate
/// cases with one and two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    vertices: Vec<Point>,
}

impl LatticePolytope {
    /// Convex hull by monotone chain.
    pub fn hull(points: &[Point]) -> Result<LatticePolytope, Error> {
        if points.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() == 1 {
            return Ok(LatticePolytope { vertices: pts });
        }
        let collinear = pts
            .iter()
            .all(|&p| cross(pts[0], *pts.last().unwrap(), p) == 0);
        if collinear {
            return Ok(LatticePolytope {
                vertices: vec![pts[0], *pts.last().unwrap()],
            });
        }
        let chain = |iter: &mut dyn Iterator<Item = &Point>| {
            let mut out: Vec<Point> = Vec::new();
            for &p in iter {
                while out.len() >= 2 && cross(out[out.len() - 2], out[out.len() - 1], p) <= 0 {
                    out.pop();
                }
                out.push(p);
            }
            out
        };
        let mut lower = chain(&mut pts.iter());
        let mut upper = chain(&mut pts.iter().rev());
        lower.pop();
        upper.pop();
        lower.append(&mut upper);
        // rotate so the lex-least vertex comes first; the chain is already CCW
        let min_idx = lower
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| **p)
            .map(|(i, _)| i)
            .unwrap();
        lower.rotate_left(min_idx);
        Ok(LatticePolytope { vertices: lower })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    /// Primitive edge multiset: each edge u -> w contributes g copies of
    /// (w-u)/g with g the gcd of the coordinates. Sorted for determinism;
    /// empty for a point polytope. A segment is traversed both ways.
    pub fn primitive_edges(&self) -> Vec<(Point, u64)> {
        let n = self.vertices.len();
        if n < 2 {
            return vec![];
        }
        let mut multiset: BTreeMap<Point, u64> = BTreeMap::new();
        let pairs: Vec<(Point, Point)> = if n == 2 {
            vec![
                (self.vertices[0], self.vertices[1]),
                (self.vertices[1], self.vertices[0]),
            ]
        } else {
            (0..n)
                .map(|i| (self.vertices[i], self.vertices[(i + 1) % n]))
                .collect()
        };
        for (u, w) in pairs {
            let d = (w.0 - u.0, w.1 - u.1);
            let g = gcd_i64(d.0, d.1);
            *multiset.entry((d.0 / g, d.1 / g)).or_insert(0) += g as u64;
        }
        multiset.into_iter().collect()
    }

    /// True iff no proper nonempty sub-multiset of the primitive edges sums
    /// to zero. Decided by dynamic programming over achievable vector sums.
    pub fn is_indecomposable(&self) -> Result<bool, Error> {
        let edges = self.primitive_edges();
        if edges.is_empty() {
            return Err(Error::PointPolytope);
        }
        Ok(!has_proper_zero_sum(&edges))
    }

    /// Minkowski sum: hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &LatticePolytope) -> LatticePolytope {
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for &a in &self.vertices {
            for &b in &other.vertices {
                sums.push((a.0 + b.0, a.1 + b.1));
            }
        }
        LatticePolytope::hull(&sums).expect("nonempty")
    }
}

/// DP over partial sums. For every achievable sum we track which of the four
/// (used-any, skipped-any) flag pairs can realize it; a proper zero-sum
/// sub-multiset is sum (0,0) with both flags set.
fn has_proper_zero_sum(edges: &[(Point, u64)]) -> bool {
    let mut cur: HashMap<Point, u8> = HashMap::new();
    cur.insert((0, 0), 1 << 0); // (used=false, skipped=false)
    for &(v, mult) in edges {
        let mut next: HashMap<Point, u8> = HashMap::new();
        for (&sum, &flags) in &cur {
            for take in 0..=mult {
                let ns = (sum.0 + v.0 * take as i64, sum.1 + v.1 * take as i64);
                let mut nf = 0u8;
                for slot in 0..4 {
                    if flags >> slot & 1 == 0 {
                        continue;
                    }
                    let used = slot & 1 == 1;
                    let skipped = slot & 2 == 2;
                    let nu = used || take > 0;
                    let nk = skipped || take < mult;
                    nf |= 1 << ((nu as u8) | ((nk as u8) << 1));
                }
                *next.entry(ns).or_insert(0) |= nf;
            }
        }
        cur = next;
    }
    cur.get(&(0, 0)).map(|&f| f >> 3 & 1 == 1).unwrap_or(false)
}

/// How an irreducibility verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrrStatus {
    /// The Newton polytope of the monomial-free part is Minkowski
    /// indecomposable.
    IrreducibleByPolytope,
    /// Factor search ran to completion (bound reached half the degree).
    IrreducibleByFactorSearch { bound: u32 },
    /// A verified nonconstant proper factor.
    Reducible { witness: SparsePoly },
    Inconclusive { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    pub status: IrrStatus,
    /// Monomial gcd removed before testing, as a polynomial.
    pub stripped_monomial: SparsePoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Polytope,
    FactorSearch { bound: u32 },
    Both { bound: u32 },
}

/// Certify irreducibility of a nonconstant polynomial over its coefficient
/// field. The monomial content is stripped first and recorded; the verdict
/// describes the remaining cofactor (for a pure monomial input, the input
/// itself).
pub fn certify_irreducible(f: &SparsePoly, backend: Backend) -> Result<IrreducibilityVerdict, Error> {
    if f.is_constant() {
        return Err(Error::DegenerateInput("constant polynomial".into()));
    }
    let (content, core) = f.strip_monomial_content();
    let stripped = SparsePoly::monomial(f.ring().clone(), f.arity(), content, f.ring().one());
    if core.is_constant() {
        // pure monomial: a single variable is irreducible, anything bigger
        // splits off a variable
        let d = f.total_degree().finite().unwrap_or(0);
        let status = if d == 1 {
            IrrStatus::IrreducibleByPolytope
        } else {
            let var = (0..f.arity())
                .find(|&i| content.0[i] > 0)
                .expect("nonconstant monomial has a variable");
            IrrStatus::Reducible {
                witness: SparsePoly::var(f.ring().clone(), f.arity(), var),
            }
        };
        return Ok(IrreducibilityVerdict {
            status,
            stripped_monomial: stripped,
        });
    }

    let polytope_verdict = |reason_sink: &mut Option<String>| -> Result<Option<IrrStatus>, Error> {
        let poly = newton_polytope(&core)?;
        if poly.is_indecomposable()? {
            Ok(Some(IrrStatus::IrreducibleByPolytope))
        } else {
            *reason_sink = Some("polytope decomposes".to_string());
            Ok(None)
        }
    };

    let status = match backend {
        Backend::Polytope => {
            let mut reason = None;
            match polytope_verdict(&mut reason)? {
                Some(s) => s,
                None => IrrStatus::Inconclusive {
                    reason: reason.unwrap(),
                },
            }
        }
        Backend::FactorSearch { bound } => factor_search_status(&core, bound)?,
        Backend::Both { bound } => {
            let mut reason = None;
            match polytope_verdict(&mut reason)? {
                Some(s) => s,
                None => factor_search_status(&core, bound)?,
            }
        }
    };
    Ok(IrreducibilityVerdict {
        status,
        stripped_monomial: stripped,
    })
}

fn factor_search_status(core: &SparsePoly, bound: u32) -> Result<IrrStatus, Error> {
    let deg = core.total_degree().finite().unwrap();
    let half = deg / 2;
    let effective = bound.min(half);
    match factor_search(core, effective)? {
        Some(witness) => Ok(IrrStatus::Reducible { witness }),
        None => {
            if effective >= half {
                Ok(IrrStatus::IrreducibleByFactorSearch { bound: effective })
            } else {
                Ok(IrrStatus::Inconclusive {
                    reason: format!("no factor of degree <= {effective}; bound exhausted"),
                })
            }
        }
    }
}

/// Exhaustive factor search over a finite coefficient field: all candidate
/// polynomials of total degree 1..=bound, in a fixed enumeration order, so
/// the first (least) witness is deterministic.
pub fn factor_search(f: &SparsePoly, bound: u32) -> Result<Option<SparsePoly>, Error> {
    let spec = match f.ring() {
        Ring::Gf(spec) => spec.clone(),
        _ => return Err(Error::NotAField),
    };
    let q = spec.order();
    let monos: Vec<crate::poly::Mono> = {
        let mut v = vec![];
        for d in 0..=bound {
            for i in 0..=d {
                // graded, then lex ascending within the block
                let j = d - i;
                v.push(crate::poly::Mono([i, j, 0]));
            }
        }
        v.sort();
        v
    };
    let n = monos.len();
    let mut counters = vec![0u64; n];
    loop {
        // advance odometer
        let mut idx = 0;
        loop {
            if idx == n {
                return Ok(None);
            }
            counters[idx] += 1;
            if counters[idx] < q {
                break;
            }
            counters[idx] = 0;
            idx += 1;
        }
        let mut cand = SparsePoly::zero(f.ring().clone(), f.arity());
        for (i, &c) in counters.iter().enumerate() {
            if c > 0 {
                cand.set_term(monos[i], crate::ring::Coeff::Gf(spec.elem_by_index(c)));
            }
        }
        if cand.is_constant() {
            continue;
        }
        if cand.total_degree().finite().unwrap() > bound {
            continue;
        }
        // factors of a monomial-free polynomial are monomial-free
        let content = cand.monomial_content();
        if content.total_degree() > 0 {
            continue;
        }
        if f.exact_div(&cand).is_some() {
            return Ok(Some(cand));
        }
    }
}

impl LatticePolytope {
    /// JSON vertex list, counterclockwise from the lexicographically least
    /// vertex.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self
            .vertices
            .iter()
            .map(|(x, y)| serde_json::json!([x, y]))
            .collect::<Vec<_>>())
    }
}

impl IrreducibilityVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        let (status, extra) = match &self.status {
            IrrStatus::IrreducibleByPolytope => ("irreducible_by_polytope", serde_json::Value::Null),
            IrrStatus::IrreducibleByFactorSearch { bound } => {
                ("irreducible_by_factor_search", serde_json::json!(bound))
            }
            IrrStatus::Reducible { witness } => ("reducible", serde_json::json!(witness.to_string())),
            IrrStatus::Inconclusive { reason } => ("inconclusive", serde_json::json!(reason)),
        };
        serde_json::json!({
            "status": status,
            "detail": extra,
            "stripped_monomial": self.stripped_monomial.to_string(),
        })
    }
}

/// Newton polytope: convex hull of the support.
pub fn newton_polytope(f: &SparsePoly) -> Result<LatticePolytope, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let pts: Vec<Point> = f
        .terms()
        .map(|(m, _)| (m.0[0] as i64, m.0[1] as i64))
        .collect();
    LatticePolytope::hull(&pts)
}

/// Check a computed hull against an expected vertex set.
pub fn verify_polytope_figure(expected: &[Point], f: &SparsePoly) -> Result<bool, Error> {
    let hull = newton_polytope(f)?;
    let mut got: Vec<Point> = hull.vertices().to_vec();
    let mut want: Vec<Point> = expected.to_vec();
    got.sort();
    want.sort();
    Ok(got == want)
}
