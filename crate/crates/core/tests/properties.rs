//! Property tests for the algebraic and certification invariants.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use irrcert::cli::{parse_poly, render};
use irrcert::criteria;
use irrcert::numtheory::{factorize, is_prime, p_valuation, smallest_prime_divisor};
use irrcert::oracle::{kronecker_factor, KroneckerOutcome};
use irrcert::root_bounds::{
    dominance_outside, min_modulus_estimate, schur_cohn_outside, RootBoundVerdict,
};
use irrcert::Polynomial;

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn poly(max_deg: usize, bound: i64) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| Polynomial::from_i64s(&c))
}

fn nonconstant(max_deg: usize, bound: i64) -> impl Strategy<Value = Polynomial> {
    poly(max_deg, bound).prop_filter("degree >= 1", |f| f.degree().unwrap_or(0) >= 1)
}

fn nonzero(max_deg: usize, bound: i64) -> impl Strategy<Value = Polynomial> {
    poly(max_deg, bound).prop_filter("nonzero", |f| !f.is_zero())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-1000i64..=1000, 1i64..=97).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn from_roots(roots: &[i64]) -> Polynomial {
    roots
        .iter()
        .fold(Polynomial::from_i64s(&[1]), |acc, &r| acc.mul(&Polynomial::from_i64s(&[-r, 1])))
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(PRIMES.to_vec())
}

/// Textbook Eisenstein, written against raw coefficients.
fn eisenstein(c: &[BigInt], p: u64) -> bool {
    let p = BigInt::from(p);
    let n = c.len() - 1;
    let divides = |a: &BigInt| (a % &p).is_zero();
    let content = c.iter().fold(BigInt::zero(), |g, a| num_integer::Integer::gcd(&g, a));
    content.is_one()
        && n >= 1
        && !divides(&c[n])
        && c[..n].iter().all(divides)
        && !(&c[0] % (&p * &p)).is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mul_is_evaluation_homomorphism(f in poly(6, 30), g in poly(6, 30), t in rational()) {
        prop_assert_eq!(f.mul(&g).eval(&t), f.eval(&t) * g.eval(&t));
    }

    #[test]
    fn content_is_multiplicative(f in nonzero(5, 60), g in nonzero(5, 60)) {
        let lhs = f.mul(&g).content().unwrap();
        prop_assert_eq!(lhs, f.content().unwrap() * g.content().unwrap());
    }

    #[test]
    fn degree_adds(f in nonzero(6, 20), g in nonzero(6, 20)) {
        prop_assert_eq!(
            f.mul(&g).degree().unwrap(),
            f.degree().unwrap() + g.degree().unwrap()
        );
    }

    #[test]
    fn mul_commutes(f in poly(6, 50), g in poly(6, 50)) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
    }

    #[test]
    fn translate_round_trip(f in poly(7, 100), c in -20i64..=20) {
        let c = BigInt::from(c);
        prop_assert_eq!(f.translate(&c).translate(&-&c), f.clone());
        // f(x - c) evaluated at t + c is f(t)
        let t = BigInt::from(3);
        prop_assert_eq!(f.translate(&c).eval_int(&(&t + &c)), f.eval_int(&t));
    }

    #[test]
    fn reverse_is_involution_when_constant_nonzero(f in nonzero(7, 100)) {
        prop_assume!(!f.constant_term().is_zero());
        prop_assert_eq!(f.reverse().unwrap().reverse().unwrap(), f);
    }

    #[test]
    fn scale_arg_matches_eval(f in nonzero(6, 40), d in 1u32..=9, t in rational()) {
        let g = f.scale_arg(&BigUint::from(d)).unwrap();
        let dt = &t * BigRational::from_integer(d.into());
        prop_assert_eq!(g.eval(&t), f.eval(&dt));
    }

    #[test]
    fn parse_render_round_trip(f in poly(8, 1_000_000)) {
        let text = render(&f);
        prop_assert_eq!(parse_poly(&text).unwrap(), f);
    }

    #[test]
    fn valuation_of_constructed_value(p in prime(), k in 0u32..=12, d in 1i64..=10_000, neg in any::<bool>()) {
        prop_assume!(d % p as i64 != 0);
        let mut n = BigInt::from(p).pow(k) * BigInt::from(d);
        if neg {
            n = -n;
        }
        prop_assert_eq!(p_valuation(&n, p).unwrap(), k);
    }

    #[test]
    fn spd_is_first_factor(n in 2i64..=1_000_000_000, neg in any::<bool>()) {
        let n = BigInt::from(if neg { -n } else { n });
        let fac = factorize(&n).unwrap();
        prop_assert_eq!(smallest_prime_divisor(&n).unwrap(), fac.primes().next().unwrap());
    }

    #[test]
    fn dominance_implies_schur_cohn(f in nonconstant(6, 40), d in 1u32..=3) {
        let d = BigUint::from(d);
        if dominance_outside(&f, &d).unwrap().verdict == RootBoundVerdict::CertifiedOutside {
            prop_assert_eq!(
                schur_cohn_outside(&f, &d).unwrap().verdict,
                RootBoundVerdict::CertifiedOutside
            );
        }
    }

    #[test]
    fn schur_cohn_exact_on_integer_roots(
        roots in prop::collection::vec(-8i64..=8, 1..=5),
        lead in prop::sample::select(vec![1i64, -1, 2, 3, -5]),
        d in 1u32..=4,
    ) {
        let f = from_roots(&roots).mul(&Polynomial::from_i64s(&[lead]));
        let verdict = schur_cohn_outside(&f, &BigUint::from(d)).unwrap().verdict;
        let outside = roots.iter().all(|r| r.unsigned_abs() > d as u64);
        let expected = if outside {
            RootBoundVerdict::CertifiedOutside
        } else {
            RootBoundVerdict::NotAllOutside
        };
        prop_assert_eq!(verdict, expected);
        if outside {
            let est = min_modulus_estimate(&f).unwrap();
            prop_assert!(est > d as f64 + 1e-6, "estimate {est} at radius {d}");
        }
    }

    #[test]
    fn schur_cohn_monotone_in_radius(f in nonconstant(6, 200), d in 2u32..=6) {
        if schur_cohn_outside(&f, &BigUint::from(d)).unwrap().verdict == RootBoundVerdict::CertifiedOutside {
            for smaller in 1..d {
                prop_assert_eq!(
                    schur_cohn_outside(&f, &BigUint::from(smaller)).unwrap().verdict,
                    RootBoundVerdict::CertifiedOutside
                );
            }
        }
    }

    #[test]
    fn theorem_1_specializes_to_theorem_a(f in nonconstant(5, 60), p in prime(), d in 1u32..=6) {
        let d = BigUint::from(d);
        let a = criteria::check_theorem_a(&f, p, &d).unwrap();
        let t1 = criteria::check_theorem_1(&f, p, 1, &d, 1).unwrap();
        prop_assert_eq!(a.kind(), t1.kind());
    }

    #[test]
    fn theorem_b_k1_full_run_is_eisenstein(f in nonconstant(6, 60), p in prime()) {
        let n = f.degree().unwrap();
        let ours = criteria::check_theorem_b(&f, p, 1).unwrap();
        prop_assert_eq!(ours.is_irreducible(), eisenstein(f.coeffs(), p), "n = {}", n);
    }

    #[test]
    fn certificates_replay(f in nonconstant(5, 60)) {
        if let criteria::CriterionOutcome::Irreducible(cert) =
            criteria::auto_search(&f, &Default::default()).unwrap()
        {
            prop_assert!(criteria::replay(&f, &cert).unwrap());
        }
    }

    #[test]
    fn translated_theorem_a_certificate_is_sound(g in nonconstant(5, 30), c in -3i64..=3, p in prime(), d in 1u32..=3) {
        let shifted = g.translate(&BigInt::from(c));
        let out = criteria::check_theorem_a(&shifted, p, &BigUint::from(d)).unwrap();
        if out.is_irreducible() {
            let (_, pp) = g.primitive_part().unwrap();
            prop_assert_eq!(
                kronecker_factor(&pp, 6).unwrap(),
                KroneckerOutcome::IrreducibleByExhaustion
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn factorize_remultiplies(n in 1i64..=1_000_000_000_000, neg in any::<bool>()) {
        let v = BigInt::from(if neg { -n } else { n });
        let fac = factorize(&v).unwrap();
        prop_assert_eq!(BigInt::from(fac.product()), v.abs());
        for q in fac.primes() {
            prop_assert!(is_prime(q));
            prop_assert_eq!(p_valuation(&v, q).unwrap(), fac.exponent_of(q));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_recovers_products(g in nonconstant(3, 12), h in nonconstant(3, 12)) {
        let (_, g) = g.primitive_part().unwrap();
        let (_, h) = h.primitive_part().unwrap();
        let f = g.mul(&h);
        match kronecker_factor(&f, 6).unwrap() {
            KroneckerOutcome::Factored(w) => {
                prop_assert_eq!(w.product(), f);
                prop_assert!(w.factors.len() >= 2);
                for factor in &w.factors {
                    prop_assert_eq!(
                        kronecker_factor(factor, 6).unwrap(),
                        KroneckerOutcome::IrreducibleByExhaustion
                    );
                }
            }
            KroneckerOutcome::IrreducibleByExhaustion => {
                prop_assert!(false, "product {f} reported irreducible");
            }
        }
    }
}
