//! Integer primitives: deterministic primality, bounded trial-division
//! factorization, p-adic valuation and smallest prime divisor.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Largest magnitude `factorize` accepts by default.
pub const DEFAULT_FACTOR_BOUND: u64 = 1 << 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumTheoryError {
    #[error("cannot factor zero")]
    Zero,
    #[error("valuation infinite: n = 0")]
    ValuationInfinite,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no prime divisor of {0}")]
    NoPrimeDivisor(BigInt),
    #[error("factorization bound exceeded: |{value}| > {bound}")]
    BoundExceeded { value: BigInt, bound: u64 },
}

/// `(prime, exponent)` pairs with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimeFactorization {
    pub factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn product(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<BigUint> {
        let mut divs = vec![BigUint::one()];
        for &(p, e) in &self.factors {
            let p = BigUint::from(p);
            let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
            for d in &divs {
                let mut pw = d.clone();
                next.push(pw.clone());
                for _ in 0..e {
                    pw *= &p;
                    next.push(pw.clone());
                }
            }
            divs = next;
        }
        divs.sort();
        divs
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Miller-Rabin with the first twelve prime bases, which is exact for every
/// `n < 3.3 * 10^24` and hence for all of `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Accepts big inputs; anything past `u64` is reported as not prime since no
/// caller can use such a witness.
pub fn is_prime_big(n: &BigInt) -> bool {
    n.to_u64().is_some_and(is_prime)
}

fn bounded_magnitude(n: &BigInt, bound: u64) -> Result<u64, NumTheoryError> {
    if n.is_zero() {
        return Err(NumTheoryError::Zero);
    }
    match n.magnitude().to_u64() {
        Some(m) if m <= bound => Ok(m),
        _ => Err(NumTheoryError::BoundExceeded {
            value: n.clone(),
            bound,
        }),
    }
}

fn trial_factor(mut m: u64) -> PrimeFactorization {
    let mut factors = Vec::new();
    let mut push = |p: u64, m: &mut u64| {
        let mut e = 0;
        while *m % p == 0 {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut m);
    push(3, &mut m);
    // candidates 6i - 1, 6i + 1
    let mut p = 5u64;
    let mut cofactor_checked = false;
    while m > 1 {
        if !cofactor_checked {
            if is_prime(m) {
                break;
            }
            cofactor_checked = true;
        }
        if p.saturating_mul(p) > m {
            break;
        }
        let before = m;
        push(p, &mut m);
        push(p + 2, &mut m);
        if m != before {
            cofactor_checked = false;
        }
        p += 6;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    PrimeFactorization { factors }
}

pub fn factorize(n: &BigInt) -> Result<PrimeFactorization, NumTheoryError> {
    factorize_within(n, DEFAULT_FACTOR_BOUND)
}

/// Complete factorization of `|n|`, refusing magnitudes above `bound`.
pub fn factorize_within(n: &BigInt, bound: u64) -> Result<PrimeFactorization, NumTheoryError> {
    let m = bounded_magnitude(n, bound)?;
    Ok(trial_factor(m))
}

/// Largest `e` with `p^e | n`.
pub fn p_valuation(n: &BigInt, p: u64) -> Result<u32, NumTheoryError> {
    if !is_prime(p) {
        return Err(NumTheoryError::NotPrime(p));
    }
    if n.is_zero() {
        return Err(NumTheoryError::ValuationInfinite);
    }
    let p = BigInt::from(p);
    let mut e = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Ok(e);
        }
        m = q;
        e += 1;
    }
}

pub fn smallest_prime_divisor(n: &BigInt) -> Result<u64, NumTheoryError> {
    smallest_prime_divisor_within(n, DEFAULT_FACTOR_BOUND)
}

pub fn smallest_prime_divisor_within(n: &BigInt, bound: u64) -> Result<u64, NumTheoryError> {
    if n.magnitude() <= &BigUint::one() {
        return Err(NumTheoryError::NoPrimeDivisor(n.clone()));
    }
    let m = bounded_magnitude(n, bound)?;
    for p in [2u64, 3] {
        if m % p == 0 {
            return Ok(p);
        }
    }
    if is_prime(m) {
        return Ok(m);
    }
    let mut p = 5u64;
    while p.saturating_mul(p) <= m {
        if m % p == 0 {
            return Ok(p);
        }
        if m % (p + 2) == 0 {
            return Ok(p + 2);
        }
        p += 6;
    }
    Ok(m)
}
