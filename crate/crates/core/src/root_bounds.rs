//! Proofs that every zero of a polynomial lies strictly outside the closed
//! disk `|z| <= d`.
//!
//! Two exact methods are provided. The coefficient dominance test
//! `|a_0| > |a_1| d + ... + |a_n| d^n` is cheap but only sufficient. The
//! Schur-Cohn reduction decides the question completely: the zeros of
//! `g = reverse(f(d x))` are `d / theta`, so `f` has all zeros outside the
//! closed disk of radius `d` exactly when `g` has all zeros in the open unit
//! disk. A floating-point Durand-Kerner estimate of the smallest root modulus
//! is available for diagnostics and never feeds a certificate.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::poly::{PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootBoundError {
    #[error("radius must be a positive integer")]
    ZeroRadius,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("estimate unavailable: {0}")]
    EstimateUnavailable(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootBoundMethod {
    Dominance,
    SchurCohn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootBoundVerdict {
    CertifiedOutside,
    NotAllOutside,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBoundProof {
    pub radius: BigUint,
    pub method: RootBoundMethod,
    pub verdict: RootBoundVerdict,
    pub detail: String,
}

impl RootBoundProof {
    pub fn is_certified(&self) -> bool {
        self.verdict == RootBoundVerdict::CertifiedOutside
    }
}

impl fmt::Display for RootBoundMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootBoundMethod::Dominance => "Dominance",
            RootBoundMethod::SchurCohn => "SchurCohn",
        })
    }
}

impl fmt::Display for RootBoundVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootBoundVerdict::CertifiedOutside => "CertifiedOutside",
            RootBoundVerdict::NotAllOutside => "NotAllOutside",
            RootBoundVerdict::Inconclusive => "Inconclusive",
        })
    }
}

fn check_inputs(f: &Polynomial, d: &BigUint) -> Result<usize, RootBoundError> {
    if d.is_zero() {
        return Err(RootBoundError::ZeroRadius);
    }
    match f.degree() {
        None => Err(PolyError::ZeroPolynomial("root bound").into()),
        Some(0) => Err(RootBoundError::ConstantPolynomial),
        Some(n) => Ok(n),
    }
}

/// Certifies when `|a_0| > sum_{i>=1} |a_i| d^i`; inconclusive otherwise.
pub fn dominance_outside(f: &Polynomial, d: &BigUint) -> Result<RootBoundProof, RootBoundError> {
    check_inputs(f, d)?;
    let head = f.constant_term().abs();
    let tail = f.weighted_tail_norm(d);
    let holds = head > tail;
    let relation = if holds { ">" } else { "<=" };
    Ok(RootBoundProof {
        radius: d.clone(),
        method: RootBoundMethod::Dominance,
        verdict: if holds {
            RootBoundVerdict::CertifiedOutside
        } else {
            RootBoundVerdict::Inconclusive
        },
        detail: format!("|a_0| = {head} {relation} sum |a_i| d^i = {tail}"),
    })
}

/// `(lead * g - g(0) * reverse(g)) / x`, the degree-lowering Schur transform,
/// with the positive content divided out.
fn schur_step(g: &Polynomial, n: usize) -> Polynomial {
    let lead = g.coeff(n);
    let c0 = g.coeff(0);
    let coeffs: Vec<BigInt> = (1..=n)
        .map(|i| &lead * g.coeff(i) - &c0 * g.coeff(n - i))
        .collect();
    let next = Polynomial::new(coeffs);
    match next.primitive_part() {
        Ok((_, pp)) => pp,
        Err(_) => next,
    }
}

/// Exact decision of "every zero satisfies `|theta| > d`".
///
/// With `g = reverse(f(d x))` of degree `n`, each step requires
/// `|g(0)| < |lead(g)|` and replaces `g` by its Schur transform of degree
/// `n - 1`. All zeros of `g` lie in the open unit disk iff every step passes.
/// When some step has `|g(0)| >= |lead(g)|`, the product of that polynomial's
/// root moduli is at least 1, so it has a zero on or outside the unit circle
/// and the original `f` has a zero in the closed disk of radius `d`.
pub fn schur_cohn_outside(f: &Polynomial, d: &BigUint) -> Result<RootBoundProof, RootBoundError> {
    let n = check_inputs(f, d)?;
    let proof = |verdict, detail| RootBoundProof {
        radius: d.clone(),
        method: RootBoundMethod::SchurCohn,
        verdict,
        detail,
    };
    if f.constant_term().is_zero() {
        return Ok(proof(
            RootBoundVerdict::NotAllOutside,
            "f(0) = 0: zero at the origin".to_string(),
        ));
    }
    let mut g = f.scale_arg(d)?.reverse()?;
    debug_assert_eq!(g.degree(), Some(n));
    for step in 0..n {
        let deg = n - step;
        let lead = g.coeff(deg).abs();
        let c0 = g.coeff(0).abs();
        if c0 >= lead {
            let kind = if c0 == lead { "boundary" } else { "exterior" };
            return Ok(proof(
                RootBoundVerdict::NotAllOutside,
                format!(
                    "step {}: |g(0)| = {c0} >= |lead| = {lead} at degree {deg} ({kind} zero of the reversed polynomial)",
                    step + 1
                ),
            ));
        }
        g = schur_step(&g, deg);
    }
    Ok(proof(
        RootBoundVerdict::CertifiedOutside,
        format!("Schur-Cohn reduction passed all {n} steps"),
    ))
}

/// Dominance first, Schur-Cohn when dominance does not certify.
pub fn certify_outside(f: &Polynomial, d: &BigUint) -> Result<RootBoundProof, RootBoundError> {
    let dom = dominance_outside(f, d)?;
    if dom.is_certified() {
        return Ok(dom);
    }
    schur_cohn_outside(f, d)
}

const DK_MAX_ITER: usize = 10_000;
const DK_BACKWARD_TOL: f64 = 1e-12;

fn to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

/// Durand-Kerner estimate of `min |theta|` over the zeros of `f`. Advisory
/// only.
pub fn min_modulus_estimate(f: &Polynomial) -> Result<f64, RootBoundError> {
    let n = match f.degree() {
        None => return Err(PolyError::ZeroPolynomial("root estimate").into()),
        Some(0) => return Err(RootBoundError::ConstantPolynomial),
        Some(n) => n,
    };
    if f.constant_term().is_zero() {
        return Err(RootBoundError::EstimateUnavailable(
            "zero at the origin".into(),
        ));
    }
    let roots = durand_kerner(f, n)?;
    Ok(roots.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min))
}

fn durand_kerner(f: &Polynomial, n: usize) -> Result<Vec<Complex64>, RootBoundError> {
    let lead = to_f64(&f.coeff(n));
    let monic: Vec<f64> = (0..=n).map(|i| to_f64(&f.coeff(i)) / lead).collect();
    if monic.iter().any(|c| !c.is_finite()) {
        return Err(RootBoundError::EstimateUnavailable(
            "coefficients exceed floating-point range".into(),
        ));
    }
    let abs_coeffs: Vec<f64> = monic.iter().map(|c| c.abs()).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c);
    let eval_abs = |r: f64| abs_coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c);

    // Cauchy bound
    let radius = 1.0 + monic[..n].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    for _ in 0..DK_MAX_ITER {
        let mut converged = true;
        for i in 0..n {
            let zi = z[i];
            let denom = (0..n)
                .filter(|&k| k != i)
                .fold(Complex64::one(), |acc, k| acc * (zi - z[k]));
            if denom.norm() == 0.0 {
                z[i] += Complex64::new(1e-8, 1e-8);
                converged = false;
                continue;
            }
            let value = eval(zi);
            z[i] = zi - value / denom;
            if value.norm() > DK_BACKWARD_TOL * eval_abs(zi.norm()) {
                converged = false;
            }
        }
        if converged {
            return Ok(z);
        }
    }
    Err(RootBoundError::EstimateUnavailable(format!(
        "no convergence after {DK_MAX_ITER} iterations"
    )))
}
