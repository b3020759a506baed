//! Irreducibility criteria built on zero location.
//!
//! Each check verifies the hypotheses of one criterion exactly, in a fixed
//! order, and records every verified hypothesis in a trace. The first failing
//! hypothesis ends the check with [`CriterionOutcome::Inconclusive`]: the
//! criteria are sufficient conditions only, so a failed hypothesis never
//! implies reducibility. Parameter domain violations (non-prime `p`, zero `k`
//! or `d`, `j` outside `1..=deg f`) are errors.
//!
//! | criterion | constant-term / leading condition | run condition | zeros |
//! |-----------|-----------------------------------|---------------|-------|
//! | A  | `a_0 = ±p d`, `p ∤ d` | none | `|θ| > d` |
//! | T1 | `a_0 = ±p^k d`, `p ∤ d` | `p^k | a_0..a_{j-1}`, `k>1 ⇒ p ∤ a_j` | `|θ| > d` |
//! | T2 | `a_n = ±p^k d`, `p ∤ d`, `|a_0/q| <= |a_n|` | `p^k | a_{n-j+1}..a_n`, `k>1 ⇒ p ∤ a_{n-j}` | `|θ| > d` |
//! | B  | `p^(k+1) ∤ a_0`, `p ∤ a_n` | `p^k | a_0..a_{n-1}`, `gcd(k,n)=1` | none |

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::numtheory::{self, NumTheoryError, DEFAULT_FACTOR_BOUND};
use crate::oracle::{self, FactorizationWitness, KroneckerOutcome, DEFAULT_MAX_DEGREE};
use crate::poly::{PolyError, Polynomial};
use crate::root_bounds::{self, RootBoundError, RootBoundProof};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("criteria require a polynomial of degree at least 1")]
    DegreeTooSmall,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parameter {0} must be a positive integer")]
    ZeroParameter(&'static str),
    #[error("index j = {j} outside 1..={n}")]
    IndexOutOfRange { j: usize, n: usize },
    #[error(transparent)]
    NumTheory(#[from] NumTheoryError),
    #[error(transparent)]
    RootBound(#[from] RootBoundError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    A,
    T1,
    T2,
    B,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::A => "A",
            Theorem::T1 => "T1",
            Theorem::T2 => "T2",
            Theorem::B => "B",
        })
    }
}

pub mod labels {
    pub const NONZERO_CONSTANT: &str = "constant term nonzero";
    pub const PRIMITIVE: &str = "f primitive";
    pub const A0_IS_PD: &str = "|a_0| = p*d";
    pub const A0_IS_PKD: &str = "|a_0| = p^k*d";
    pub const AN_IS_PKD: &str = "|a_n| = p^k*d";
    pub const P_NOT_DIVIDES_D: &str = "p does not divide d";
    pub const GCD_K_J: &str = "gcd(k, j) = 1";
    pub const GCD_K_JFACT: &str = "gcd(k, j!) = 1";
    pub const GCD_K_N: &str = "gcd(k, n) = 1";
    pub const LOW_RUN: &str = "p^k divides a_0, ..., a_{j-1}";
    pub const HIGH_RUN: &str = "p^k divides a_{n-j+1}, ..., a_n";
    pub const FULL_RUN: &str = "p^k divides a_0, ..., a_{n-1}";
    pub const P_NOT_DIVIDES_AJ: &str = "k > 1 implies p does not divide a_j";
    pub const P_NOT_DIVIDES_ANJ: &str = "k > 1 implies p does not divide a_{n-j}";
    pub const P_NOT_DIVIDES_AN: &str = "p does not divide a_n";
    pub const PK1_NOT_DIVIDES_A0: &str = "p^(k+1) does not divide a_0";
    pub const Q_DEFINED: &str = "smallest prime divisor q of a_0 defined";
    pub const A0_OVER_Q: &str = "|a_0/q| <= |a_n|";
    pub const ZEROS_OUTSIDE: &str = "every zero satisfies |theta| > d";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub label: String,
    pub value: String,
    pub holds: bool,
}

/// A replayable irreducibility proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub theorem: Theorem,
    pub p: u64,
    pub k: u32,
    pub d: Option<BigUint>,
    pub j: Option<usize>,
    pub root_proof: Option<RootBoundProof>,
    pub hypothesis_trace: Vec<Hypothesis>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriterionOutcome {
    Irreducible(Certificate),
    Reducible(FactorizationWitness),
    Inconclusive {
        reason: String,
        trace: Vec<Hypothesis>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OutcomeKind {
    Irreducible,
    Reducible,
    Inconclusive,
}

impl CriterionOutcome {
    pub fn kind(&self) -> OutcomeKind {
        match self {
            CriterionOutcome::Irreducible(_) => OutcomeKind::Irreducible,
            CriterionOutcome::Reducible(_) => OutcomeKind::Reducible,
            CriterionOutcome::Inconclusive { .. } => OutcomeKind::Inconclusive,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self, CriterionOutcome::Irreducible(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CriterionOutcome::Irreducible(c) => Some(c),
            _ => None,
        }
    }

    fn inconclusive(reason: impl Into<String>) -> Self {
        CriterionOutcome::Inconclusive {
            reason: reason.into(),
            trace: Vec::new(),
        }
    }
}

impl fmt::Display for OutcomeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutcomeKind::Irreducible => "Irreducible",
            OutcomeKind::Reducible => "Reducible",
            OutcomeKind::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckOptions {
    /// Additionally require `gcd(k, j!) = 1` for Theorems 1 and 2.
    pub remark_regime: bool,
}

#[derive(Default)]
struct Trace {
    entries: Vec<Hypothesis>,
}

impl Trace {
    fn check(&mut self, label: &str, value: String, holds: bool) -> bool {
        self.entries.push(Hypothesis {
            label: label.to_string(),
            value,
            holds,
        });
        holds
    }

    fn fail(self) -> CriterionOutcome {
        let reason = match self.entries.last() {
            Some(h) => format!("hypothesis failed: {} ({})", h.label, h.value),
            None => "hypothesis failed".to_string(),
        };
        CriterionOutcome::Inconclusive {
            reason,
            trace: self.entries,
        }
    }

    fn zeros_outside(
        &mut self,
        f: &Polynomial,
        d: &BigUint,
    ) -> Result<Option<RootBoundProof>, CriteriaError> {
        let proof = root_bounds::certify_outside(f, d)?;
        let value = format!("radius {d}, {}: {} ({})", proof.method, proof.verdict, proof.detail);
        Ok(self.check(labels::ZEROS_OUTSIDE, value, proof.is_certified()).then_some(proof))
    }
}

fn degree_of(f: &Polynomial) -> Result<usize, CriteriaError> {
    match f.degree() {
        Some(n) if n >= 1 => Ok(n),
        _ => Err(CriteriaError::DegreeTooSmall),
    }
}

fn require_prime(p: u64) -> Result<(), CriteriaError> {
    if numtheory::is_prime(p) {
        Ok(())
    } else {
        Err(CriteriaError::NotPrime(p))
    }
}

fn require_positive(value: bool, name: &'static str) -> Result<(), CriteriaError> {
    if value {
        Ok(())
    } else {
        Err(CriteriaError::ZeroParameter(name))
    }
}

fn require_index(j: usize, n: usize) -> Result<(), CriteriaError> {
    if (1..=n).contains(&j) {
        Ok(())
    } else {
        Err(CriteriaError::IndexOutOfRange { j, n })
    }
}

fn big(d: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, d.clone())
}

/// `gcd(k, j!) = 1` iff no prime factor of `k` is at most `j`.
fn coprime_to_factorial(k: u32, j: usize) -> bool {
    (2..=j).all(|i| (k as usize).gcd(&i) == 1)
}

fn primitive_check(t: &mut Trace, f: &Polynomial) -> Result<bool, CriteriaError> {
    let c = f.content()?;
    Ok(t.check(labels::PRIMITIVE, format!("content = {c}"), c.is_one()))
}

/// `|target| = p^k d` together with `p ∤ d`, i.e. `v_p(target) = k` exactly.
fn exact_power_check(
    t: &mut Trace,
    label: &str,
    target: &BigInt,
    p: u64,
    k: u32,
    d: &BigUint,
) -> bool {
    let pk = BigInt::from(p).pow(k);
    let expected = &pk * big(d);
    if !t.check(
        label,
        format!("{} vs {}", target.abs(), expected),
        target.abs() == expected,
    ) {
        return false;
    }
    let p_big = BigUint::from(p);
    t.check(
        labels::P_NOT_DIVIDES_D,
        format!("d mod p = {}", d % &p_big),
        !d.is_multiple_of(&p_big),
    )
}

fn run_check(t: &mut Trace, label: &str, f: &Polynomial, p: u64, k: u32, idx: std::ops::Range<usize>) -> bool {
    let pk = BigInt::from(p).pow(k);
    let bad = idx.clone().find(|&i| !f.coeff(i).is_multiple_of(&pk));
    let value = match bad {
        None => format!("p^k = {pk} divides a_{}..a_{}", idx.start, idx.end - 1),
        Some(i) => format!("p^k = {pk} does not divide a_{i} = {}", f.coeff(i)),
    };
    t.check(label, value, bad.is_none())
}

fn not_divisible_check(t: &mut Trace, label: &str, f: &Polynomial, p: u64, k: u32, idx: usize) -> bool {
    if k == 1 {
        return t.check(label, "vacuous (k = 1)".to_string(), true);
    }
    let a = f.coeff(idx);
    let holds = !a.is_multiple_of(&BigInt::from(p));
    t.check(label, format!("a_{idx} = {a}"), holds)
}

fn gcd_checks(t: &mut Trace, k: u32, j: usize, opts: &CheckOptions) -> bool {
    let g = (k as usize).gcd(&j);
    if !t.check(labels::GCD_K_J, format!("gcd({k}, {j}) = {g}"), g == 1) {
        return false;
    }
    if opts.remark_regime {
        let holds = coprime_to_factorial(k, j);
        return t.check(labels::GCD_K_JFACT, format!("k = {k}, j = {j}"), holds);
    }
    true
}

/// `|f(0)| = p d` with `p ∤ d` and every zero outside radius `d`.
///
/// Primitivity is also required: a non-primitive polynomial has a proper
/// constant factor in `Z[x]`.
pub fn check_theorem_a(f: &Polynomial, p: u64, d: &BigUint) -> Result<CriterionOutcome, CriteriaError> {
    degree_of(f)?;
    require_prime(p)?;
    require_positive(!d.is_zero(), "d")?;
    let mut t = Trace::default();
    let a0 = f.constant_term();
    if !t.check(labels::NONZERO_CONSTANT, format!("a_0 = {a0}"), !a0.is_zero()) {
        return Ok(CriterionOutcome::Inconclusive {
            reason: "zero constant term".into(),
            trace: t.entries,
        });
    }
    if !primitive_check(&mut t, f)? || !exact_power_check(&mut t, labels::A0_IS_PD, &a0, p, 1, d) {
        return Ok(t.fail());
    }
    let Some(proof) = t.zeros_outside(f, d)? else {
        return Ok(t.fail());
    };
    Ok(CriterionOutcome::Irreducible(Certificate {
        theorem: Theorem::A,
        p,
        k: 1,
        d: Some(d.clone()),
        j: None,
        root_proof: Some(proof),
        hypothesis_trace: t.entries,
    }))
}

pub fn check_theorem_1(
    f: &Polynomial,
    p: u64,
    k: u32,
    d: &BigUint,
    j: usize,
) -> Result<CriterionOutcome, CriteriaError> {
    check_theorem_1_with(f, p, k, d, j, &CheckOptions::default())
}

pub fn check_theorem_1_with(
    f: &Polynomial,
    p: u64,
    k: u32,
    d: &BigUint,
    j: usize,
    opts: &CheckOptions,
) -> Result<CriterionOutcome, CriteriaError> {
    let n = degree_of(f)?;
    require_index(j, n)?;
    require_prime(p)?;
    require_positive(k > 0, "k")?;
    require_positive(!d.is_zero(), "d")?;
    let mut t = Trace::default();
    let a0 = f.constant_term();
    if !t.check(labels::NONZERO_CONSTANT, format!("a_0 = {a0}"), !a0.is_zero()) {
        return Ok(CriterionOutcome::Inconclusive {
            reason: "zero constant term".into(),
            trace: t.entries,
        });
    }
    let ok = primitive_check(&mut t, f)?
        && exact_power_check(&mut t, labels::A0_IS_PKD, &a0, p, k, d)
        && gcd_checks(&mut t, k, j, opts)
        && run_check(&mut t, labels::LOW_RUN, f, p, k, 0..j)
        && not_divisible_check(&mut t, labels::P_NOT_DIVIDES_AJ, f, p, k, j);
    if !ok {
        return Ok(t.fail());
    }
    let Some(proof) = t.zeros_outside(f, d)? else {
        return Ok(t.fail());
    };
    Ok(CriterionOutcome::Irreducible(Certificate {
        theorem: Theorem::T1,
        p,
        k,
        d: Some(d.clone()),
        j: Some(j),
        root_proof: Some(proof),
        hypothesis_trace: t.entries,
    }))
}

pub fn check_theorem_2(
    f: &Polynomial,
    p: u64,
    k: u32,
    d: &BigUint,
    j: usize,
) -> Result<CriterionOutcome, CriteriaError> {
    check_theorem_2_with(f, p, k, d, j, &CheckOptions::default())
}

pub fn check_theorem_2_with(
    f: &Polynomial,
    p: u64,
    k: u32,
    d: &BigUint,
    j: usize,
    opts: &CheckOptions,
) -> Result<CriterionOutcome, CriteriaError> {
    let n = degree_of(f)?;
    require_index(j, n)?;
    require_prime(p)?;
    require_positive(k > 0, "k")?;
    require_positive(!d.is_zero(), "d")?;
    let mut t = Trace::default();
    let an = f.coeff(n);
    let ok = primitive_check(&mut t, f)?
        && exact_power_check(&mut t, labels::AN_IS_PKD, &an, p, k, d)
        && gcd_checks(&mut t, k, j, opts)
        && run_check(&mut t, labels::HIGH_RUN, f, p, k, n + 1 - j..n + 1)
        && not_divisible_check(&mut t, labels::P_NOT_DIVIDES_ANJ, f, p, k, n - j);
    if !ok {
        return Ok(t.fail());
    }
    let a0 = f.constant_term();
    if !t.check(labels::Q_DEFINED, format!("a_0 = {a0}"), a0.abs() >= BigInt::from(2)) {
        return Ok(CriterionOutcome::Inconclusive {
            reason: "smallest prime divisor undefined".into(),
            trace: t.entries,
        });
    }
    let q = numtheory::smallest_prime_divisor(&a0)?;
    let quotient = a0.abs() / BigInt::from(q);
    let holds = quotient <= an.abs();
    if !t.check(
        labels::A0_OVER_Q,
        format!("q = {q}, |a_0/q| = {quotient}, |a_n| = {}", an.abs()),
        holds,
    ) {
        return Ok(t.fail());
    }
    let Some(proof) = t.zeros_outside(f, d)? else {
        return Ok(t.fail());
    };
    Ok(CriterionOutcome::Irreducible(Certificate {
        theorem: Theorem::T2,
        p,
        k,
        d: Some(d.clone()),
        j: Some(j),
        root_proof: Some(proof),
        hypothesis_trace: t.entries,
    }))
}

/// The Eisenstein-Dumas type criterion with no condition on zeros. For
/// `k = 1` this is the classical Eisenstein criterion.
pub fn check_theorem_b(f: &Polynomial, p: u64, k: u32) -> Result<CriterionOutcome, CriteriaError> {
    let n = degree_of(f)?;
    require_prime(p)?;
    require_positive(k > 0, "k")?;
    let mut t = Trace::default();
    let g = (k as usize).gcd(&n);
    let pb = BigInt::from(p);
    let a0 = f.constant_term();
    let an = f.coeff(n);
    let pk1 = pb.pow(k + 1);
    let ok = primitive_check(&mut t, f)?
        && t.check(labels::GCD_K_N, format!("gcd({k}, {n}) = {g}"), g == 1)
        && run_check(&mut t, labels::FULL_RUN, f, p, k, 0..n)
        && t.check(
            labels::P_NOT_DIVIDES_AN,
            format!("a_n = {an}"),
            !an.is_multiple_of(&pb),
        )
        && t.check(
            labels::PK1_NOT_DIVIDES_A0,
            format!("p^(k+1) = {pk1}, a_0 = {a0}"),
            !a0.is_multiple_of(&pk1),
        );
    if !ok {
        return Ok(t.fail());
    }
    Ok(CriterionOutcome::Irreducible(Certificate {
        theorem: Theorem::B,
        p,
        k,
        d: None,
        j: None,
        root_proof: None,
        hypothesis_trace: t.entries,
    }))
}

/// Re-runs the named criterion with the certificate's witnesses and confirms
/// that it reproduces the identical certificate.
pub fn replay(f: &Polynomial, cert: &Certificate) -> Result<bool, CriteriaError> {
    let opts = CheckOptions {
        remark_regime: cert
            .hypothesis_trace
            .iter()
            .any(|h| h.label == labels::GCD_K_JFACT),
    };
    let missing = || CriteriaError::ZeroParameter("certificate witness");
    let outcome = match cert.theorem {
        Theorem::A => check_theorem_a(f, cert.p, cert.d.as_ref().ok_or_else(missing)?)?,
        Theorem::T1 => check_theorem_1_with(
            f,
            cert.p,
            cert.k,
            cert.d.as_ref().ok_or_else(missing)?,
            cert.j.ok_or_else(missing)?,
            &opts,
        )?,
        Theorem::T2 => check_theorem_2_with(
            f,
            cert.p,
            cert.k,
            cert.d.as_ref().ok_or_else(missing)?,
            cert.j.ok_or_else(missing)?,
            &opts,
        )?,
        Theorem::B => check_theorem_b(f, cert.p, cert.k)?,
    };
    Ok(outcome.certificate() == Some(cert))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Degree cap for the Kronecker fallback; `0` disables it.
    pub oracle_max_degree: usize,
    pub factor_bound: u64,
    pub check: CheckOptions,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            oracle_max_degree: DEFAULT_MAX_DEGREE,
            factor_bound: DEFAULT_FACTOR_BOUND,
            check: CheckOptions::default(),
        }
    }
}

/// Smallest `j` passing the non-root hypotheses of Theorem 1 (or of Theorem 2
/// when `from_top`). The zero-location hypothesis does not depend on `j`, so
/// later admissible `j` cannot succeed where this one fails.
fn first_admissible_j(
    f: &Polynomial,
    n: usize,
    p: u64,
    k: u32,
    from_top: bool,
    opts: &CheckOptions,
) -> Option<usize> {
    let pk = BigInt::from(p).pow(k);
    let pb = BigInt::from(p);
    let coeff = |i: usize| if from_top { f.coeff(n - i) } else { f.coeff(i) };
    (1..=n).find(|&j| {
        (k as usize).gcd(&j) == 1
            && (!opts.remark_regime || coprime_to_factorial(k, j))
            && (0..j).all(|i| coeff(i).is_multiple_of(&pk))
            && (k == 1 || !coeff(j).is_multiple_of(&pb))
    })
}

/// Canonical witness search: Theorem B, then 1, 2 and A; primes ascending,
/// then `j` ascending. Falls back to the Kronecker oracle when no criterion
/// applies and the degree is within `oracle_max_degree`.
pub fn auto_search(f: &Polynomial, opts: &SearchOptions) -> Result<CriterionOutcome, CriteriaError> {
    let n = degree_of(f)?;
    let content = f.content()?;
    if !content.is_one() {
        return Ok(CriterionOutcome::Inconclusive {
            reason: format!("not primitive: content {content}"),
            trace: vec![Hypothesis {
                label: labels::PRIMITIVE.into(),
                value: format!("content = {content}"),
                holds: false,
            }],
        });
    }
    let bound_exceeded = || CriterionOutcome::inconclusive("witness search bound exceeded");
    let a0 = f.constant_term();
    let an = f.coeff(n);
    let low_primes = if a0.is_zero() {
        Vec::new()
    } else {
        match numtheory::factorize_within(&a0, opts.factor_bound) {
            Ok(fact) => fact.factors,
            Err(_) => return Ok(bound_exceeded()),
        }
    };
    let high_primes = match numtheory::factorize_within(&an, opts.factor_bound) {
        Ok(fact) => fact.factors,
        Err(_) => return Ok(bound_exceeded()),
    };
    let cofactor = |v: &BigInt, p: u64, k: u32| -> BigUint {
        (v.abs() / BigInt::from(p).pow(k)).magnitude().clone()
    };
    let attempt = |outcome: Result<CriterionOutcome, CriteriaError>| match outcome {
        Ok(o) if o.is_irreducible() => Ok(Some(o)),
        Ok(_) => Ok(None),
        Err(CriteriaError::NumTheory(NumTheoryError::BoundExceeded { .. })) => Ok(None),
        Err(e) => Err(e),
    };

    for &(p, k) in &low_primes {
        if !an.is_multiple_of(&BigInt::from(p)) {
            if let Some(o) = attempt(check_theorem_b(f, p, k))? {
                return Ok(o);
            }
        }
    }
    for &(p, k) in &low_primes {
        if let Some(j) = first_admissible_j(f, n, p, k, false, &opts.check) {
            let d = cofactor(&a0, p, k);
            if let Some(o) = attempt(check_theorem_1_with(f, p, k, &d, j, &opts.check))? {
                return Ok(o);
            }
        }
    }
    if a0.abs() >= BigInt::from(2) {
        for &(p, k) in &high_primes {
            if let Some(j) = first_admissible_j(f, n, p, k, true, &opts.check) {
                let d = cofactor(&an, p, k);
                if let Some(o) = attempt(check_theorem_2_with(f, p, k, &d, j, &opts.check))? {
                    return Ok(o);
                }
            }
        }
    }
    for &(p, k) in &low_primes {
        if k == 1 {
            let d = cofactor(&a0, p, 1);
            if let Some(o) = attempt(check_theorem_a(f, p, &d))? {
                return Ok(o);
            }
        }
    }

    if n > opts.oracle_max_degree {
        return Ok(CriterionOutcome::inconclusive("no criterion applies"));
    }
    Ok(match oracle::kronecker_factor(f, opts.oracle_max_degree) {
        Ok(KroneckerOutcome::Factored(w)) => CriterionOutcome::Reducible(w),
        Ok(KroneckerOutcome::IrreducibleByExhaustion) => CriterionOutcome::inconclusive(
            "no criterion applies; oracle: irreducible by exhaustion",
        ),
        Err(e) => CriterionOutcome::inconclusive(format!("no criterion applies; oracle: {e}")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn r(d: u32) -> BigUint {
        BigUint::from(d)
    }

    fn reason(o: &CriterionOutcome) -> &str {
        match o {
            CriterionOutcome::Inconclusive { reason, .. } => reason,
            other => panic!("expected Inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn theorem_a_examples() {
        let o = check_theorem_a(&p(&[6, 1, 1]), 3, &r(2)).unwrap();
        let cert = o.certificate().expect("irreducible");
        assert_eq!(cert.theorem, Theorem::A);
        assert!(replay(&p(&[6, 1, 1]), cert).unwrap());

        let o = check_theorem_a(&p(&[6, 1, 1]), 2, &r(3)).unwrap();
        assert!(reason(&o).contains(labels::ZEROS_OUTSIDE));
        assert!(reason(&o).contains("NotAllOutside"));

        let o = check_theorem_a(&p(&[-1, 0, 1]), 2, &r(1)).unwrap();
        assert!(reason(&o).contains(labels::A0_IS_PD));

        let o = check_theorem_a(&p(&[0, 1, 1]), 2, &r(1)).unwrap();
        assert_eq!(reason(&o), "zero constant term");

        assert_eq!(
            check_theorem_a(&p(&[6, 1, 1]), 4, &r(1)),
            Err(CriteriaError::NotPrime(4))
        );
        assert!(check_theorem_a(&p(&[6]), 3, &r(2)).is_err());
    }

    #[test]
    fn theorem_1_examples() {
        let f = p(&[4, 1, 1]);
        let o = check_theorem_1(&f, 2, 2, &r(1), 1).unwrap();
        let cert = o.certificate().expect("irreducible");
        assert_eq!((cert.theorem, cert.p, cert.k, cert.j), (Theorem::T1, 2, 2, Some(1)));
        assert!(replay(&f, cert).unwrap());

        let sq = p(&[4, 0, 4, 0, 1]);
        let o = check_theorem_1(&sq, 2, 2, &r(1), 2).unwrap();
        assert!(reason(&o).contains(labels::GCD_K_J));

        assert!(matches!(
            check_theorem_1(&f, 2, 2, &r(1), 3),
            Err(CriteriaError::IndexOutOfRange { j: 3, n: 2 })
        ));
        assert!(check_theorem_1(&f, 2, 0, &r(1), 1).is_err());
        assert!(check_theorem_1(&f, 2, 2, &r(0), 1).is_err());
    }

    #[test]
    fn theorem_1_requires_exact_valuation() {
        // a_0 = 8 = 2^3: k = 2 with d = 2 has p | d
        let o = check_theorem_1(&p(&[8, 1, 1]), 2, 2, &r(2), 1).unwrap();
        assert!(reason(&o).contains(labels::P_NOT_DIVIDES_D));
    }

    #[test]
    fn theorem_1_non_primitive() {
        let o = check_theorem_1(&p(&[8, 2, 2]), 2, 3, &r(1), 1).unwrap();
        assert!(reason(&o).contains(labels::PRIMITIVE));
    }

    #[test]
    fn remark_regime_records_factorial_gcd() {
        let f = p(&[27, 27, 8, 3]);
        let strict = CheckOptions { remark_regime: true };
        // k = 3, j = 2: gcd(3, 2!) = 1
        let o = check_theorem_1_with(&f, 3, 3, &r(1), 2, &strict).unwrap();
        let cert = o.certificate().expect("irreducible");
        assert!(cert.hypothesis_trace.iter().any(|h| h.label == labels::GCD_K_JFACT));
        assert!(replay(&f, cert).unwrap());
        // k = 5, j = 6 would need gcd(5, 6!) = 1, which fails
        assert!(!coprime_to_factorial(5, 6));
        assert!(coprime_to_factorial(7, 6));
    }

    #[test]
    fn theorem_2_examples() {
        let f = p(&[6, 2, 3]);
        let o = check_theorem_2(&f, 3, 1, &r(1), 1).unwrap();
        let cert = o.certificate().expect("irreducible");
        assert_eq!(cert.theorem, Theorem::T2);
        assert!(replay(&f, cert).unwrap());

        let o = check_theorem_2(&p(&[30, 2, 3]), 3, 1, &r(1), 1).unwrap();
        assert!(reason(&o).contains(labels::A0_OVER_Q));

        let o = check_theorem_2(&p(&[1, 2, 3]), 3, 1, &r(1), 1).unwrap();
        assert_eq!(reason(&o), "smallest prime divisor undefined");
    }

    #[test]
    fn theorem_b_examples() {
        let o = check_theorem_b(&p(&[2, 2, 1]), 2, 1).unwrap();
        assert_eq!(o.certificate().unwrap().theorem, Theorem::B);
        let o = check_theorem_b(&p(&[4, 4, 4, 1]), 2, 2).unwrap();
        assert!(o.is_irreducible());
        let o = check_theorem_b(&p(&[4, 0, 4, 0, 1]), 2, 2).unwrap();
        assert!(reason(&o).contains(labels::GCD_K_N));
        let o = check_theorem_b(&p(&[8, 4, 4, 1]), 2, 2).unwrap();
        assert!(reason(&o).contains(labels::PK1_NOT_DIVIDES_A0));
    }

    #[test]
    fn auto_search_examples() {
        let opts = SearchOptions::default();
        let o = auto_search(&p(&[4, 1, 1]), &opts).unwrap();
        let cert = o.certificate().expect("irreducible");
        assert_eq!((cert.theorem, cert.p, cert.k, cert.j), (Theorem::T1, 2, 2, Some(1)));
        assert_eq!(cert.d, Some(r(1)));

        let o = auto_search(&p(&[2, 3, 1]), &opts).unwrap();
        let CriterionOutcome::Reducible(w) = o else {
            panic!("expected Reducible");
        };
        assert_eq!(w.factors, vec![p(&[1, 1]), p(&[2, 1])]);

        let o = auto_search(&p(&[1, 1, 1]), &opts).unwrap();
        assert!(reason(&o).contains("irreducible by exhaustion"));

        let o = auto_search(&p(&[2, 2, 1]), &opts).unwrap();
        assert_eq!(o.certificate().unwrap().theorem, Theorem::B);

        let o = auto_search(&p(&[4, 2, 2]), &opts).unwrap();
        assert!(reason(&o).contains("content 2"));
    }

    #[test]
    fn auto_search_without_oracle() {
        let opts = SearchOptions {
            oracle_max_degree: 0,
            ..SearchOptions::default()
        };
        let o = auto_search(&p(&[2, 3, 1]), &opts).unwrap();
        assert_eq!(reason(&o), "no criterion applies");
    }

    #[test]
    fn square_is_inconclusive_everywhere() {
        let sq = p(&[4, 0, 4, 0, 1]);
        assert!(!check_theorem_a(&sq, 2, &r(2)).unwrap().is_irreducible());
        for j in 1..=4 {
            assert!(!check_theorem_1(&sq, 2, 2, &r(1), j).unwrap().is_irreducible());
        }
        assert!(!check_theorem_b(&sq, 2, 2).unwrap().is_irreducible());
        let o = auto_search(&sq, &SearchOptions::default()).unwrap();
        assert_eq!(o.kind(), OutcomeKind::Reducible);
    }
}
