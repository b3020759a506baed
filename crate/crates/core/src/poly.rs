//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order (`coeffs[i]` is the coefficient
//! of `x^i`) and kept normalized: the highest stored coefficient is nonzero and
//! the zero polynomial is the empty vector. Two equal polynomials therefore
//! always have identical coefficient vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("{0} undefined for the zero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("scaling radius must be a positive integer")]
    ZeroRadius,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^degree`
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Product by direct convolution: coefficient `t` is `sum_{i+j=t} f_i g_j`.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Positive gcd of the coefficients.
    pub fn content(&self) -> Result<BigInt, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial("content"));
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    pub fn is_primitive(&self) -> Result<bool, PolyError> {
        Ok(self.content()?.is_one())
    }

    /// Splits `f = content * primitive_part` with a positive content; the sign
    /// stays in the primitive part.
    pub fn primitive_part(&self) -> Result<(BigInt, Polynomial), PolyError> {
        let c = self.content()?;
        let pp = Self::new(self.coeffs.iter().map(|a| a / &c).collect());
        Ok((c, pp))
    }

    /// Exact value at a rational point (Horner).
    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Returns `g` with `g(x) = f(x - c)` via repeated synthetic division
    /// (Taylor shift).
    pub fn translate(&self, c: &BigInt) -> Polynomial {
        let shift = -c;
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for k in (i..n.saturating_sub(1)).rev() {
                let t = &a[k + 1] * &shift;
                a[k] += t;
            }
        }
        Self::new(a)
    }

    /// `x^n f(1/x)` for `n = deg f`. Only an involution when `f(0) != 0`.
    pub fn reverse(&self) -> Result<Polynomial, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial("reverse"));
        }
        Ok(Self::new(self.coeffs.iter().rev().cloned().collect()))
    }

    /// `f(d x)`: coefficient `i` becomes `a_i d^i`.
    pub fn scale_arg(&self, d: &BigUint) -> Result<Polynomial, PolyError> {
        if d.is_zero() {
            return Err(PolyError::ZeroRadius);
        }
        let d = BigInt::from_biguint(Sign::Plus, d.clone());
        let mut power = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &power);
            power *= &d;
        }
        Ok(Self::new(out))
    }

    /// Quotient `q` with `self = divisor * q` when it exists in `Z[x]`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let n = self.degree()?;
        if n < dd {
            return None;
        }
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let (q, r) = rem[i + dd].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            if q.is_zero() {
                continue;
            }
            for (k, b) in divisor.coeffs.iter().enumerate() {
                rem[i + k] -= &q * b;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Sum of `|a_i| d^i` over `i >= 1`.
    pub fn weighted_tail_norm(&self, d: &BigUint) -> BigInt {
        let d = BigInt::from_biguint(Sign::Plus, d.clone());
        let mut power = BigInt::one();
        let mut sum = BigInt::zero();
        for c in self.coeffs.iter().skip(1) {
            power *= &d;
            sum += c.abs() * &power;
        }
        sum
    }
}

impl From<Vec<BigInt>> for Polynomial {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Polynomial::new(coeffs)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Renders in descending degree, e.g. `3x^2 - 2x + 6`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
