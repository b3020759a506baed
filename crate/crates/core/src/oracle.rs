//! Ground-truth factorization over the integers by Kronecker's method, and a
//! harness that checks Lemma-1-style divisibility claims on concrete
//! factorizations.
//!
//! Kronecker's method is exponential but exact: a factor `g` of degree `m`
//! is pinned down by its values at `m + 1` integer points, and each value must
//! divide the corresponding value of `f`. Candidates are enumerated in Newton
//! form so that every partial tuple whose divided differences fail to be
//! integers is discarded early.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::numtheory::{self, NumTheoryError, DEFAULT_FACTOR_BOUND};
use crate::poly::{PolyError, Polynomial};

pub const DEFAULT_MAX_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle bound exceeded: degree {degree} > {max}")]
    DegreeBound { degree: usize, max: usize },
    #[error("oracle requires a polynomial of degree at least 1")]
    Constant,
    #[error("oracle requires a primitive polynomial (content {0})")]
    NotPrimitive(BigInt),
    #[error("oracle bound exceeded: sample value {0} outside factorization range")]
    SampleBound(BigInt),
    #[error("lemma check requires nonconstant factors")]
    ConstantFactor,
    #[error("lemma check requires k >= 2, got {0}")]
    SmallExponent(u32),
    #[error("lemma check requires j >= 1")]
    ZeroIndex,
    #[error("fuzzing requires at least one trial")]
    NoTrials,
    #[error(transparent)]
    NumTheory(#[from] NumTheoryError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `unit * prod(factors)`; every factor has degree >= 1 and a positive
/// leading coefficient, and the list is sorted by degree then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationWitness {
    pub unit: BigInt,
    pub factors: Vec<Polynomial>,
}

impl FactorizationWitness {
    pub fn product(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::constant(self.unit.clone()), |acc, g| acc.mul(g))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KroneckerOutcome {
    Factored(FactorizationWitness),
    IrreducibleByExhaustion,
}

pub(crate) fn canonical_order(a: &Polynomial, b: &Polynomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Complete factorization of a primitive `f` with `1 <= deg f <= max_degree`.
pub fn kronecker_factor(f: &Polynomial, max_degree: usize) -> Result<KroneckerOutcome, OracleError> {
    let n = match f.degree() {
        None | Some(0) => return Err(OracleError::Constant),
        Some(n) => n,
    };
    if n > max_degree {
        return Err(OracleError::DegreeBound {
            degree: n,
            max: max_degree,
        });
    }
    let content = f.content()?;
    if !content.is_one() {
        return Err(OracleError::NotPrimitive(content));
    }
    let unit = if f.leading().is_some_and(Signed::is_negative) {
        BigInt::from(-1)
    } else {
        BigInt::one()
    };
    let mut rest = f.scale(&unit);
    let mut factors = Vec::new();
    let mut min_deg = 1;
    loop {
        let deg = rest.degree().unwrap_or(0);
        if deg == 0 {
            break;
        }
        let mut found = None;
        for m in min_deg..=deg / 2 {
            if let Some(g) = factor_of_degree(&rest, m)? {
                found = Some((m, g));
                break;
            }
        }
        match found {
            Some((m, g)) => {
                rest = rest
                    .div_exact(&g)
                    .expect("candidate was checked to divide exactly");
                factors.push(g);
                min_deg = m;
            }
            None => {
                factors.push(rest);
                break;
            }
        }
    }
    if factors.len() == 1 {
        return Ok(KroneckerOutcome::IrreducibleByExhaustion);
    }
    factors.sort_by(canonical_order);
    Ok(KroneckerOutcome::Factored(FactorizationWitness { unit, factors }))
}

/// Sample points `0, 1, -1, 2, -2, ...` skipping zeros of `f`.
fn sample_points(f: &Polynomial, count: usize) -> Vec<(i64, BigInt)> {
    let mut out = Vec::with_capacity(count);
    let mut k: i64 = 0;
    while out.len() < count {
        for x in if k == 0 { vec![0] } else { vec![k, -k] } {
            if out.len() == count {
                break;
            }
            let v = f.eval_int(&BigInt::from(x));
            if !v.is_zero() {
                out.push((x, v));
            }
        }
        k += 1;
    }
    out
}

fn signed_divisors(v: &BigInt) -> Result<Vec<i128>, OracleError> {
    let fact = numtheory::factorize_within(v, DEFAULT_FACTOR_BOUND)
        .map_err(|_| OracleError::SampleBound(v.clone()))?;
    let mut out = Vec::new();
    for d in fact.divisors() {
        let d = d.to_i128().ok_or_else(|| OracleError::SampleBound(v.clone()))?;
        out.push(d);
        out.push(-d);
    }
    Ok(out)
}

/// A factor of exact degree `m` with positive leading coefficient, if one
/// exists.
fn factor_of_degree(f: &Polynomial, m: usize) -> Result<Option<Polynomial>, OracleError> {
    let points = sample_points(f, m + 1);
    let xs: Vec<i128> = points.iter().map(|&(x, _)| x as i128).collect();
    let divisors = points
        .iter()
        .map(|(_, v)| signed_divisors(v))
        .collect::<Result<Vec<_>, _>>()?;
    let lead = f.leading().cloned().unwrap_or_default();
    let mut search = Search {
        f,
        xs: &xs,
        divisors: &divisors,
        lead: &lead,
        table: vec![Vec::new(); m + 1],
    };
    Ok(search.descend(0))
}

struct Search<'a> {
    f: &'a Polynomial,
    xs: &'a [i128],
    divisors: &'a [Vec<i128>],
    lead: &'a BigInt,
    /// `table[i][r]` is the divided difference `g[x_{i-r}, ..., x_i]`.
    table: Vec<Vec<i128>>,
}

impl Search<'_> {
    fn descend(&mut self, level: usize) -> Option<Polynomial> {
        let m = self.xs.len() - 1;
        let divisors = self.divisors;
        for &value in &divisors[level] {
            let Some(row) = self.extend_row(level, value) else {
                continue;
            };
            let top = row[level];
            self.table[level] = row;
            if level < m {
                if let Some(g) = self.descend(level + 1) {
                    return Some(g);
                }
                continue;
            }
            // exact degree m, positive leading coefficient dividing lead(f)
            if top <= 0 || !self.lead.is_multiple_of(&BigInt::from(top)) {
                continue;
            }
            let g = self.newton_to_monomial();
            if self.f.div_exact(&g).is_some() {
                return Some(g);
            }
        }
        None
    }

    fn extend_row(&self, level: usize, value: i128) -> Option<Vec<i128>> {
        let mut row = Vec::with_capacity(level + 1);
        row.push(value);
        for r in 1..=level {
            let num = row[r - 1].checked_sub(self.table[level - 1][r - 1])?;
            let den = self.xs[level] - self.xs[level - r];
            if num % den != 0 {
                return None;
            }
            row.push(num / den);
        }
        Some(row)
    }

    /// Coefficients of `sum_r c_r prod_{i<r} (x - x_i)` with `c_r = table[r][r]`.
    fn newton_to_monomial(&self) -> Polynomial {
        let m = self.xs.len() - 1;
        let mut acc = Polynomial::zero();
        for r in (0..=m).rev() {
            let c = Polynomial::constant(BigInt::from(self.table[r][r]));
            let lin = Polynomial::new(vec![BigInt::from(-self.xs[r]), BigInt::one()]);
            acc = &acc.mul(&lin) + &c;
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma1Verdict {
    /// All hypotheses hold and `p | a_j`.
    Holds,
    /// All hypotheses hold yet `p` does not divide `a_j`.
    Violated,
    NotApplicable,
}

/// Evaluates the Lemma 1 claim on `f = f1 * f2`: if `p^k | a_0, ..., a_{j-1}`,
/// `p^(k+1)` does not divide `a_0`, `gcd(k, j) = 1`, `j <= deg f`, `p | b_0`
/// and `p | c_0`, then `p | a_j`.
pub fn lemma1_check(
    f1: &Polynomial,
    f2: &Polynomial,
    p: u64,
    k: u32,
    j: usize,
) -> Result<Lemma1Verdict, OracleError> {
    if !numtheory::is_prime(p) {
        return Err(NumTheoryError::NotPrime(p).into());
    }
    if k < 2 {
        return Err(OracleError::SmallExponent(k));
    }
    if j == 0 {
        return Err(OracleError::ZeroIndex);
    }
    if f1.degree().unwrap_or(0) == 0 || f2.degree().unwrap_or(0) == 0 {
        return Err(OracleError::ConstantFactor);
    }
    let f = f1.mul(f2);
    let n = f.degree().unwrap_or(0);
    let pb = BigInt::from(p);
    let pk = pb.pow(k);
    let divides = |d: &BigInt, a: &BigInt| a.is_multiple_of(d);
    let applicable = j <= n
        && (k as usize).gcd(&j) == 1
        && (0..j).all(|i| divides(&pk, &f.coeff(i)))
        && !divides(&(&pk * &pb), &f.coeff(0))
        && divides(&pb, &f1.constant_term())
        && divides(&pb, &f2.constant_term());
    if !applicable {
        return Ok(Lemma1Verdict::NotApplicable);
    }
    Ok(if divides(&pb, &f.coeff(j)) {
        Lemma1Verdict::Holds
    } else {
        Lemma1Verdict::Violated
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Lemma1Summary {
    pub trials: usize,
    pub applicable: usize,
    pub holds: usize,
    pub violated: usize,
}

const FUZZ_PRIMES: [u64; 3] = [2, 3, 5];

/// Random factor pairs with `p | b_0` and `p | c_0`. Roughly half the pairs
/// have their low coefficients seeded with the powers of `p` that make the
/// product satisfy the divisibility run, so a healthy share of trials is
/// applicable.
pub fn lemma1_fuzz(trials: usize, seed: u64) -> Result<Lemma1Summary, OracleError> {
    if trials == 0 {
        return Err(OracleError::NoTrials);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = Lemma1Summary {
        trials,
        ..Default::default()
    };
    for _ in 0..trials {
        let p = FUZZ_PRIMES[rng.gen_range(0..FUZZ_PRIMES.len())];
        let k: u32 = rng.gen_range(2..=5);
        let ell = rng.gen_range(1..k);
        let deg1 = rng.gen_range(1..=4usize);
        let deg2 = rng.gen_range(1..=4usize);
        let structured = rng.gen_bool(0.6);
        let run = rng.gen_range(1..=deg1.max(deg2) + 1);
        let factor = |deg: usize, exp: u32, rng: &mut ChaCha8Rng| {
            let pe = BigInt::from(p).pow(exp);
            let coeffs: Vec<BigInt> = (0..=deg)
                .map(|i| {
                    let mut c = BigInt::from(rng.gen_range(-9i64..=9));
                    if i == 0 {
                        // unit part coprime to p keeps p^(k+1) out of a_0
                        let mut u = rng.gen_range(1i64..=9);
                        while u % p as i64 == 0 {
                            u += 1;
                        }
                        let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
                        c = &pe * (u * sign);
                    } else if structured && i < run {
                        c *= &pe;
                    }
                    if i == deg && c.is_zero() {
                        c = BigInt::one();
                    }
                    c
                })
                .collect();
            Polynomial::new(coeffs)
        };
        let f1 = factor(deg1, ell, &mut rng);
        let f2 = factor(deg2, k - ell, &mut rng);
        let f = f1.mul(&f2);
        let n = f.degree().unwrap_or(0);
        let pk = BigInt::from(p).pow(k);
        let run_len = (0..=n)
            .take_while(|&i| f.coeff(i).is_multiple_of(&pk))
            .count();
        // largest admissible j within the divisibility run
        let j = (1..=run_len.min(n))
            .rev()
            .find(|&j| (k as usize).gcd(&j) == 1)
            .unwrap_or(1);
        match lemma1_check(&f1, &f2, p, k, j)? {
            Lemma1Verdict::Holds => {
                summary.applicable += 1;
                summary.holds += 1;
            }
            Lemma1Verdict::Violated => {
                summary.applicable += 1;
                summary.violated += 1;
            }
            Lemma1Verdict::NotApplicable => {}
        }
    }
    Ok(summary)
}
