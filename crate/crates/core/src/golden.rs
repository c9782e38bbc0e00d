//! Golden ratio φ and its conjugate Φ = φ − 1.
//!
//! Two rational approximations of φ are provided: convergents of the
//! continued fraction `[1; 1, 1, …]` and partial sums of the alternating
//! series `13/8 + Σ (−1)^(n+1) (2n+1)! / (4^(2n+3) n! (n+2)!)`. The oracle
//! value comes from the integer square root of 5 through `φ = (√5 + 1)/2`.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact_arith::{sqrt5_truncated, DigitCap, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhiMethod {
    ContinuedFraction,
    Series,
    FromSqrt5Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiApproximant {
    pub value: ExactRational,
    pub method: PhiMethod,
    /// Convergent depth, series term count, or oracle digits.
    pub depth_or_terms: usize,
}

/// The `depth`-th convergent of `[1; 1, 1, …]`; depth 0 is `1/1`.
pub fn phi_continued_fraction(depth: usize) -> PhiApproximant {
    // p₋₁/q₋₁ = 1/0, p₀/q₀ = 1/1
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::from(0u32));
    let (mut p, mut q) = (BigInt::one(), BigInt::one());
    for _ in 0..depth {
        let p_next = &p + &p_prev;
        let q_next = &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
    PhiApproximant {
        value: ExactRational::new(p, q),
        method: PhiMethod::ContinuedFraction,
        depth_or_terms: depth,
    }
}

/// Iterator over the summands of the φ series, starting at `n = 0`.
///
/// Consecutive summands differ by the factor `−(2n+3) / (8(n+3))`.
#[derive(Debug, Clone)]
pub struct PhiSeriesTerms {
    n: usize,
    term: ExactRational,
}

impl PhiSeriesTerms {
    pub fn new() -> Self {
        PhiSeriesTerms {
            n: 0,
            term: ExactRational::new(BigInt::from(-1), BigInt::from(128u32)),
        }
    }
}

impl Default for PhiSeriesTerms {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for PhiSeriesTerms {
    type Item = ExactRational;

    fn next(&mut self) -> Option<ExactRational> {
        let n = self.n as u64;
        let factor = ExactRational::new(-BigInt::from(2 * n + 3), BigInt::from(8 * (n + 3)));
        let next = &self.term * factor;
        self.n += 1;
        Some(std::mem::replace(&mut self.term, next))
    }
}

/// `13/8` plus the first `terms` summands of the φ series.
pub fn phi_series_partial(terms: usize) -> PhiApproximant {
    let base = ExactRational::new(BigInt::from(13u32), BigInt::from(8u32));
    let value = PhiSeriesTerms::new().take(terms).fold(base, |acc, t| acc + t);
    PhiApproximant {
        value,
        method: PhiMethod::Series,
        depth_or_terms: terms,
    }
}

/// `(√5 + 1)/2` with √5 truncated to `digits` fractional digits.
pub fn phi_oracle(digits: usize, cap: DigitCap) -> Result<PhiApproximant> {
    let sqrt5 = sqrt5_truncated(digits, cap)?;
    Ok(PhiApproximant {
        value: (sqrt5 + ExactRational::one()) / BigInt::from(2u32),
        method: PhiMethod::FromSqrt5Oracle,
        depth_or_terms: digits,
    })
}

/// `(√5 − 1)/2` with √5 truncated to `digits` fractional digits.
pub fn phi_conjugate_oracle(digits: usize, cap: DigitCap) -> Result<ExactRational> {
    Ok(phi_conjugate(&phi_oracle(digits, cap)?.value))
}

/// Φ = φ − 1.
pub fn phi_conjugate(phi: &ExactRational) -> ExactRational {
    phi - ExactRational::one()
}

/// `q² + q − 1`, which vanishes at Φ.
pub fn quadratic_residual(q: &ExactRational) -> ExactRational {
    q * q + q - ExactRational::one()
}

/// `2Φ + 1`, which equals √5 at the exact conjugate.
pub fn sqrt5_from_phi_conjugate(big_phi: &ExactRational) -> ExactRational {
    big_phi * BigInt::from(2u32) + ExactRational::one()
}
