//! The two explicit families of irreducible polynomials.
//!
//! `X_{j,k}` has constant-side block `p^(k+1) (1 + x + ... + x^(j-1))`, middle
//! coefficient `p^k - 1` at `x^j` and top block `p^(k-1) x^(j+1) (1 + ... +
//! x^(n-j-1))`. Its constant term is `p^(k+1)`, so the Theorem 1 witness uses
//! exponent `k + 1`.
//!
//! `Y_{j,k,m}` is `p^k (n + x + ... + x^(n-j-1)) + m x^(n-j) + p^k x^(n-j+1) (1
//! + ... + x^(j-1))`, taken literally (constant term `n p^k`), with the
//! Theorem 2 witness `(p, k, d = 1, j)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::criteria::{self, CriteriaError, CriterionOutcome};
use crate::numtheory;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("p = {0} is not prime")]
    NotPrime(u64),
    #[error("{0} must be a positive integer")]
    NonPositive(&'static str),
    #[error("gcd(k, j) = 1 violated: gcd({k}, {j}) = {g}")]
    NotCoprime { k: u32, j: usize, g: usize },
    #[error("n >= j+1 violated: n = {n}, j = {j}")]
    XDegree { n: usize, j: usize },
    #[error("j <= n violated: j = {j}, n = {n}")]
    YIndex { j: usize, n: usize },
    #[error("m < p violated: m = {m}, p = {p}")]
    MTooLarge { m: u64, p: u64 },
    #[error("family Y requires m")]
    MissingM,
    #[error("generator for family {expected:?} called with {got:?} parameters")]
    WrongFamily { expected: Family, got: Family },
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub family: Family,
    pub p: u64,
    pub k: u32,
    pub j: usize,
    pub n: usize,
    /// Y only.
    pub m: Option<u64>,
}

/// Witnesses handed to the designated criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyWitnesses {
    pub p: u64,
    pub k: u32,
    pub d: BigUint,
    pub j: usize,
}

impl FamilyParams {
    pub fn x(p: u64, k: u32, j: usize, n: usize) -> Self {
        FamilyParams {
            family: Family::X,
            p,
            k,
            j,
            n,
            m: None,
        }
    }

    pub fn y(p: u64, k: u32, j: usize, n: usize, m: u64) -> Self {
        FamilyParams {
            family: Family::Y,
            p,
            k,
            j,
            n,
            m: Some(m),
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if !numtheory::is_prime(self.p) {
            return Err(FamilyError::NotPrime(self.p));
        }
        if self.k == 0 {
            return Err(FamilyError::NonPositive("k"));
        }
        if self.j == 0 {
            return Err(FamilyError::NonPositive("j"));
        }
        if self.n == 0 {
            return Err(FamilyError::NonPositive("n"));
        }
        let g = (self.k as usize).gcd(&self.j);
        if g != 1 {
            return Err(FamilyError::NotCoprime {
                k: self.k,
                j: self.j,
                g,
            });
        }
        match self.family {
            Family::X if self.n < self.j + 1 => Err(FamilyError::XDegree {
                n: self.n,
                j: self.j,
            }),
            Family::X => Ok(()),
            Family::Y => {
                let m = self.m.ok_or(FamilyError::MissingM)?;
                if m == 0 {
                    return Err(FamilyError::NonPositive("m"));
                }
                if m >= self.p {
                    return Err(FamilyError::MTooLarge { m, p: self.p });
                }
                if self.j > self.n {
                    return Err(FamilyError::YIndex {
                        j: self.j,
                        n: self.n,
                    });
                }
                Ok(())
            }
        }
    }

    /// `(p, k+1, 1, j)` for X, `(p, k, 1, j)` for Y.
    pub fn witnesses(&self) -> FamilyWitnesses {
        let k = match self.family {
            Family::X => self.k + 1,
            Family::Y => self.k,
        };
        FamilyWitnesses {
            p: self.p,
            k,
            d: BigUint::one(),
            j: self.j,
        }
    }

    pub fn generate(&self) -> Result<Polynomial, FamilyError> {
        match self.family {
            Family::X => gen_x(self),
            Family::Y => gen_y(self),
        }
    }
}

fn pow(p: u64, e: u32) -> BigInt {
    BigInt::from(p).pow(e)
}

pub fn gen_x(params: &FamilyParams) -> Result<Polynomial, FamilyError> {
    params.validate()?;
    if params.family != Family::X {
        return Err(FamilyError::WrongFamily {
            expected: Family::X,
            got: params.family,
        });
    }
    let FamilyParams { p, k, j, n, .. } = *params;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for c in &mut coeffs[..j] {
        *c = pow(p, k + 1);
    }
    coeffs[j] = pow(p, k) - 1;
    for c in &mut coeffs[j + 1..=n] {
        *c = pow(p, k - 1);
    }
    Ok(Polynomial::new(coeffs))
}

/// Compares `(x - 1) X_{j,k}` against the closed form
/// `-p^(k+1) + (p^(k+1) - p^k + 1) x^j + (p^k - p^(k-1) - 1) x^(j+1) + p^(k-1) x^(n+1)`.
pub fn x_times_xminus1_identity(params: &FamilyParams) -> Result<bool, FamilyError> {
    let x = gen_x(params)?;
    let lhs = Polynomial::from_i64s(&[-1, 1]).mul(&x);
    let FamilyParams { p, k, j, n, .. } = *params;
    let rhs = [
        Polynomial::monomial(-pow(p, k + 1), 0),
        Polynomial::monomial(pow(p, k + 1) - pow(p, k) + 1, j),
        Polynomial::monomial(pow(p, k) - pow(p, k - 1) - 1, j + 1),
        Polynomial::monomial(pow(p, k - 1), n + 1),
    ]
    .iter()
    .fold(Polynomial::zero(), |acc, t| &acc + t);
    Ok(lhs == rhs)
}

pub fn gen_y(params: &FamilyParams) -> Result<Polynomial, FamilyError> {
    params.validate()?;
    if params.family != Family::Y {
        return Err(FamilyError::WrongFamily {
            expected: Family::Y,
            got: params.family,
        });
    }
    let m = params.m.ok_or(FamilyError::MissingM)?;
    let FamilyParams { p, k, j, n, .. } = *params;
    let pk = pow(p, k);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = &pk * BigInt::from(n);
    for c in coeffs.iter_mut().take(n - j).skip(1) {
        *c += &pk;
    }
    coeffs[n - j] += BigInt::from(m);
    for c in &mut coeffs[n - j + 1..=n] {
        *c += &pk;
    }
    Ok(Polynomial::new(coeffs))
}

/// Generates the family member and runs its designated criterion: Theorem 1
/// for X, Theorem 2 for Y, both at `d = 1`.
pub fn family_selftest(params: &FamilyParams) -> Result<CriterionOutcome, FamilyError> {
    let f = params.generate()?;
    let w = params.witnesses();
    let outcome = match params.family {
        Family::X => criteria::check_theorem_1(&f, w.p, w.k, &w.d, w.j)?,
        Family::Y => criteria::check_theorem_2(&f, w.p, w.k, &w.d, w.j)?,
    };
    Ok(outcome)
}
