//! Shared generators and property runners for the property and acceptance
//! suites. Seeds are fixed so every run exercises the same corpus.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pdivisor::divide::{p_factor_test, NotPFactorReason, PFactorVerdict};
use pdivisor::foliation::PlaneVectorField;
use pdivisor::newton::{self, Backend, IrrStatus};
use pdivisor::parse::parse_poly;
use pdivisor::poly::{Mono, SparsePoly};
use pdivisor::ring::Ring;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn f2() -> Ring {
    Ring::parse("F2").unwrap()
}

pub fn f3() -> Ring {
    Ring::parse("F3").unwrap()
}

pub fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring, max_deg: u32, max_terms: usize) -> SparsePoly {
    let mut p = SparsePoly::zero(ring.clone(), 2);
    let terms = rng.gen_range(0..=max_terms);
    for _ in 0..terms {
        let a = rng.gen_range(0..=max_deg);
        let b = rng.gen_range(0..=(max_deg - a));
        let c = ring.from_i64(rng.gen_range(-4..=4));
        let cur = p.coeff(&Mono([a, b, 0]));
        p.set_term(Mono([a, b, 0]), ring.add(&cur, &c));
    }
    p
}

pub fn random_nonzero_poly(
    rng: &mut ChaCha8Rng,
    ring: &Ring,
    max_deg: u32,
    max_terms: usize,
) -> SparsePoly {
    loop {
        let p = random_poly(rng, ring, max_deg, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_vf(rng: &mut ChaCha8Rng, ring: &Ring, max_deg: u32) -> PlaneVectorField {
    loop {
        let a = random_poly(rng, ring, max_deg, 4);
        let b = random_poly(rng, ring, max_deg, 4);
        if let Ok(v) = PlaneVectorField::new(a, b) {
            return v;
        }
    }
}

// ---------------------------------------------------------------------------
// property runners; each panics with context on the first violation
// ---------------------------------------------------------------------------

pub fn run_ring_laws(ring: &Ring, cases: usize, seed: u64) {
    let mut r = rng(seed);
    for i in 0..cases {
        let f = random_poly(&mut r, ring, 4, 4);
        let g = random_poly(&mut r, ring, 4, 4);
        let h = random_poly(&mut r, ring, 4, 4);
        assert_eq!(f.add(&g), g.add(&f), "commutative + (case {i})");
        assert_eq!(f.mul(&g), g.mul(&f), "commutative * (case {i})");
        assert_eq!(
            f.add(&g).add(&h),
            f.add(&g.add(&h)),
            "associative + (case {i})"
        );
        assert_eq!(
            f.mul(&g).mul(&h),
            f.mul(&g.mul(&h)),
            "associative * (case {i})"
        );
        assert_eq!(
            f.mul(&g.add(&h)),
            f.mul(&g).add(&f.mul(&h)),
            "distributive (case {i})"
        );
    }
}

pub fn run_frobenius(ring: &Ring, p: u32, cases: usize, seed: u64) {
    let mut r = rng(seed);
    for i in 0..cases {
        let f = random_poly(&mut r, ring, 4, 4);
        let g = random_poly(&mut r, ring, 4, 4);
        assert_eq!(
            f.add(&g).pow(p),
            f.pow(p).add(&g.pow(p)),
            "(f+g)^{p} = f^{p}+g^{p} (case {i})"
        );
    }
}

pub fn run_exact_div_round_trip(ring: &Ring, cases: usize, seed: u64) {
    let mut r = rng(seed);
    for i in 0..cases {
        let f = random_poly(&mut r, ring, 4, 4);
        let g = random_nonzero_poly(&mut r, ring, 4, 4);
        let q = f.mul(&g).exact_div(&g);
        assert_eq!(q, Some(f.clone()), "exact_div(f*g, g) = f (case {i})");
    }
}

pub fn run_gcd_properties(ring: &Ring, cases: usize, seed: u64) {
    let mut r = rng(seed);
    for i in 0..cases {
        let f = random_nonzero_poly(&mut r, ring, 3, 3);
        let g = random_nonzero_poly(&mut r, ring, 3, 3);
        let h = random_nonzero_poly(&mut r, ring, 3, 3);
        let d = f.gcd(&g);
        assert!(f.exact_div(&d).is_some(), "gcd divides f (case {i})");
        assert!(g.exact_div(&d).is_some(), "gcd divides g (case {i})");
        let dh = f.mul(&h).gcd(&g.mul(&h));
        assert!(
            dh.total_degree() >= h.total_degree(),
            "gcd(fh, gh) has degree >= deg h (case {i}: {dh} vs {h})"
        );
        assert!(
            f.mul(&h).exact_div(&dh).is_some(),
            "gcd divides fh (case {i})"
        );
    }
}

pub fn run_pth_root_round_trip(ring: &Ring, p: u32, cases: usize, seed: u64) {
    let mut r = rng(seed);
    for i in 0..cases {
        let g = random_nonzero_poly(&mut r, ring, 3, 4);
        let root = g.pow(p).pth_power_root();
        assert_eq!(root, Some(g.clone()), "pth root of g^p is g (case {i})");
    }
}

pub fn run_parse_print_round_trip(ring: &Ring, cases: usize, seed: u64) {
    let mut r = rng(seed);
    for i in 0..cases {
        let f = random_poly(&mut r, ring, 5, 6);
        let printed = f.to_string();
        let reparsed = parse_poly(&printed, ring)
            .unwrap_or_else(|e| panic!("case {i}: failed to reparse {printed:?}: {e}"));
        assert_eq!(reparsed, f, "parse(print(f)) = f (case {i}: {printed})");
    }
}

pub fn run_p_power_composition(ring: &Ring, p: u64, cases: usize, seed: u64) {
    let mut r = rng(seed);
    for i in 0..cases {
        let v = random_vf(&mut r, ring, 4);
        let vp = v.p_power(p).unwrap();
        let mut ax = SparsePoly::var(ring.clone(), 2, 0);
        let mut by = SparsePoly::var(ring.clone(), 2, 1);
        for _ in 0..p {
            ax = v.derive(&ax);
            by = v.derive(&by);
        }
        assert_eq!(vp.a(), &ax, "v^p(x) is p-fold derive of x (case {i})");
        assert_eq!(vp.b(), &by, "v^p(y) is p-fold derive of y (case {i})");
    }
}

pub fn run_leibniz_for_p_power(ring: &Ring, p: u64, cases: usize, seed: u64) {
    let mut r = rng(seed);
    for i in 0..cases {
        let v = random_vf(&mut r, ring, 3);
        let w = v.p_power(p).unwrap();
        let f = random_poly(&mut r, ring, 3, 3);
        let g = random_poly(&mut r, ring, 3, 3);
        let lhs = w.derive(&f.mul(&g));
        let rhs = f.mul(&w.derive(&g)).add(&g.mul(&w.derive(&f)));
        assert_eq!(lhs, rhs, "Leibniz for v^p (case {i})");
    }
}

pub fn run_wedge_antisymmetry(ring: &Ring, cases: usize, seed: u64) {
    let mut r = rng(seed);
    for i in 0..cases {
        let v = random_vf(&mut r, ring, 4);
        let w = random_vf(&mut r, ring, 4);
        assert_eq!(
            v.wedge(&w),
            w.wedge(&v).neg(),
            "wedge(v,w) = -wedge(w,v) (case {i})"
        );
        assert!(v.wedge(&v).is_zero(), "wedge(v,v) = 0 (case {i})");
    }
}

pub fn run_divisor_degree_bookkeeping(ring: &Ring, p: u64, cases: usize, seed: u64) {
    let mut r = rng(seed);
    for i in 0..cases {
        let v = random_vf(&mut r, ring, 3);
        let res = v.p_divisor(p).unwrap();
        if res.p_closed {
            assert!(res.z_multiplicity.is_none(), "p-closed has no z bookkeeping");
            continue;
        }
        let deg = res.divisor.total_degree().finite().unwrap() as i64;
        // the discrepancy, positive or negative, is always recorded
        assert_eq!(
            res.z_multiplicity,
            Some(res.expected_projective_degree as i64 - deg),
            "z-multiplicity bookkeeping (case {i})"
        );
    }
}

pub fn run_ostrowski(cases: usize, seed: u64) {
    let ring = f2();
    let mut r = rng(seed);
    for i in 0..cases {
        let f = random_nonzero_poly(&mut r, &ring, 5, 5);
        let g = random_nonzero_poly(&mut r, &ring, 5, 5);
        let lhs = newton::newton_polytope(&f.mul(&g)).unwrap();
        let rhs = newton::newton_polytope(&f)
            .unwrap()
            .minkowski_sum(&newton::newton_polytope(&g).unwrap());
        assert_eq!(lhs, rhs, "Newt(fg) = Newt(f) + Newt(g) (case {i}: f={f}, g={g})");
    }
}

/// Random nonconstant monomial-free factor with at least two terms.
pub fn random_product_factor(r: &mut ChaCha8Rng, ring: &Ring) -> SparsePoly {
    loop {
        let f = random_nonzero_poly(r, ring, 4, 4);
        let (_, core) = f.strip_monomial_content();
        if core.num_terms() >= 2 {
            return core;
        }
    }
}

pub fn run_product_polytopes_decomposable(cases: usize, seed: u64) {
    let ring = f2();
    let mut r = rng(seed);
    for i in 0..cases {
        let f = random_product_factor(&mut r, &ring);
        let g = random_product_factor(&mut r, &ring);
        let hull = newton_polytope_of(&f.mul(&g));
        assert_eq!(
            hull.is_indecomposable().unwrap(),
            false,
            "product polytope must decompose (case {i}: f={f}, g={g})"
        );
    }
}

pub fn run_certification_soundness(cases: usize, seed: u64) {
    let ring = f2();
    let mut r = rng(seed);
    for i in 0..cases {
        let f = random_product_factor(&mut r, &ring);
        let g = random_product_factor(&mut r, &ring);
        let prod = f.mul(&g);
        for backend in [Backend::Polytope, Backend::Both { bound: 2 }] {
            let verdict = newton::certify_irreducible(&prod, backend).unwrap();
            assert!(
                !matches!(
                    verdict.status,
                    IrrStatus::IrreducibleByPolytope | IrrStatus::IrreducibleByFactorSearch { .. }
                ),
                "certifier must never call a product irreducible (case {i}: f={f}, g={g}, got {:?})",
                verdict.status
            );
        }
    }
}

pub fn run_p_factor_squares(cases: usize, seed: u64) {
    let ring = Ring::Int;
    let mut r = rng(seed);
    let mut done = 0;
    while done < cases {
        let g = random_nonzero_poly(&mut r, &ring, 3, 4);
        if g.reduce_mod_p(2).unwrap().is_zero() {
            continue;
        }
        done += 1;
        match p_factor_test(&g.mul(&g), 2).unwrap() {
            PFactorVerdict::IsPFactor { .. } => {}
            v => panic!("g^2 must be a 2-factor (g={g}, got {v:?})"),
        }
    }
}

pub fn run_p_factor_odd_degree(cases: usize, seed: u64) {
    let ring = Ring::Int;
    let mut r = rng(seed);
    for _ in 0..cases {
        // odd total degree with an odd coefficient on a top monomial, so the
        // degree is odd and preserved mod 2
        let d = 2 * r.gen_range(0..=2u32) + 1;
        let mut f = random_poly(&mut r, &ring, d, 4);
        let a = r.gen_range(0..=d);
        f.set_term(Mono([a, d - a, 0]), ring.from_i64(2 * r.gen_range(0..=2) + 1));
        match p_factor_test(&f, 2).unwrap() {
            PFactorVerdict::NotPFactor(NotPFactorReason::DegreeObstruction { degree }) => {
                assert_eq!(degree, d)
            }
            v => panic!("odd-degree form must fail by degree (f={f}, got {v:?})"),
        }
    }
}

fn newton_polytope_of(f: &SparsePoly) -> newton::LatticePolytope {
    newton::newton_polytope(f).unwrap()
}
