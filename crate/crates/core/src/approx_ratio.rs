//! √5 from term ratios of the two minimal sequences.
//!
//! With `μᵢ = aᵢ/aᵢ₋₁` over the minimal super-increasing sequence and
//! `νᵢ = zᵢ/zᵢ₋₁` over the minimal extra-super-increasing one, the
//! difference `νᵢ − μᵢ` approaches Φ from below and `2(νₙ − μₙ) + 1`
//! approaches √5.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::approx_series::SeriesPartialSums;
use crate::error::{Error, Result};
use crate::exact_arith::{abs_error, pow10, rational_to_decimal, sqrt5_truncated, DigitCap, ExactRational};
use crate::golden::{phi_conjugate_oracle, sqrt5_from_phi_conjugate};
use crate::sequences::ExtraSuperTerms;

/// Extra oracle digits carried into every threshold comparison.
pub const GUARD_DIGITS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioRecord {
    pub index: usize,
    pub mu: ExactRational,
    pub nu: ExactRational,
    pub diff: ExactRational,
    pub sqrt5_approx: ExactRational,
}

/// Ratio records for `i = 1, 2, …`, carrying only the last two terms of
/// each sequence.
#[derive(Debug, Clone)]
pub struct RatioRecords {
    index: usize,
    a_prev: BigInt,
    a_sum: BigInt,
    z: ExtraSuperTerms,
    z_prev: BigInt,
}

impl RatioRecords {
    pub fn new() -> Self {
        let mut z = ExtraSuperTerms::new();
        let z0 = z.next().expect("unbounded");
        RatioRecords {
            index: 0,
            a_prev: BigInt::from(1u32),
            a_sum: BigInt::from(1u32),
            z,
            z_prev: z0,
        }
    }
}

impl Default for RatioRecords {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for RatioRecords {
    type Item = RatioRecord;

    fn next(&mut self) -> Option<RatioRecord> {
        self.index += 1;
        let a_cur = &self.a_sum + 1u32;
        self.a_sum += &a_cur;
        let z_cur = self.z.next().expect("unbounded");

        let mu = ExactRational::new(a_cur.clone(), std::mem::replace(&mut self.a_prev, a_cur));
        let nu = ExactRational::new(z_cur.clone(), std::mem::replace(&mut self.z_prev, z_cur));
        let diff = &nu - &mu;
        let sqrt5_approx = sqrt5_from_phi_conjugate(&diff);
        Some(RatioRecord {
            index: self.index,
            mu,
            nu,
            diff,
            sqrt5_approx,
        })
    }
}

fn record(i: usize) -> Result<RatioRecord> {
    if i == 0 {
        return Err(Error::Domain("term ratios start at index 1".into()));
    }
    Ok(RatioRecords::new().nth(i - 1).expect("unbounded"))
}

/// `μᵢ = aᵢ/aᵢ₋₁`.
pub fn term_ratio_mu(i: usize) -> Result<ExactRational> {
    if i == 0 {
        return Err(Error::Domain("term ratios start at index 1".into()));
    }
    let a = crate::sequences::minimal_super(i).into_terms();
    Ok(ExactRational::new(a[i].clone(), a[i - 1].clone()))
}

/// `νᵢ = zᵢ/zᵢ₋₁`.
pub fn term_ratio_nu(i: usize) -> Result<ExactRational> {
    record(i).map(|r| r.nu)
}

/// `νᵢ − μᵢ`.
pub fn ratio_diff(i: usize) -> Result<ExactRational> {
    record(i).map(|r| r.diff)
}

/// `2(νₙ − μₙ) + 1`.
pub fn sqrt5_via_ratio(n: usize) -> Result<ExactRational> {
    record(n).map(|r| r.sqrt5_approx)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Series,
    Ratio,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Series => "series",
            Method::Ratio => "ratio",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "series" => Ok(Method::Series),
            "ratio" => Ok(Method::Ratio),
            other => Err(Error::Domain(format!("unknown method {other:?}"))),
        }
    }
}

/// `(n, approximant of √5)` for `n = 1, 2, …` under `method`.
pub fn approximants(method: Method) -> Box<dyn Iterator<Item = (usize, ExactRational)> + Send> {
    match method {
        Method::Series => Box::new(SeriesPartialSums::new().skip(1)),
        Method::Ratio => Box::new(RatioRecords::new().map(|r| (r.index, r.sqrt5_approx))),
    }
}

/// The √5 approximant of `method` at `n`. Series accepts `n = 0`, ratio
/// does not.
pub fn approximant(method: Method, n: usize) -> Result<ExactRational> {
    match method {
        Method::Series => Ok(crate::approx_series::sqrt5_series_partial(n)),
        Method::Ratio => sqrt5_via_ratio(n),
    }
}

/// Smallest `n ≥ 1` with `|approx(n) − √5| < 10^(−target_digits)`.
pub fn find_min_n(method: Method, target_digits: usize, cap: DigitCap) -> Result<usize> {
    find_min_n_with_guard(method, target_digits, GUARD_DIGITS, cap)
}

pub fn find_min_n_with_guard(method: Method, target_digits: usize, guard: usize, cap: DigitCap) -> Result<usize> {
    if target_digits == 0 {
        return Err(Error::Domain("target digits must be at least 1".into()));
    }
    cap.check(target_digits)?;
    let oracle = sqrt5_truncated(target_digits + guard, cap)?;
    let threshold = ExactRational::new(1.into(), pow10(target_digits));
    let (n, _) = approximants(method)
        .find(|(_, a)| abs_error(a, &oracle) < threshold)
        .expect("both methods converge");
    Ok(n)
}

/// Outcome of searching for the index where `νₙ − μₙ` matches Φ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiMatch {
    pub requested_digits: usize,
    /// Smallest `n` with `|νₙ − μₙ − Φ| < 10^(−d)`.
    pub strict_error_n: usize,
    /// Smallest `n` whose `d`-digit truncation equals that of Φ.
    pub prefix_n: usize,
}

pub fn find_phi_match(precision_digits: usize, cap: DigitCap) -> Result<PhiMatch> {
    find_phi_match_with_guard(precision_digits, GUARD_DIGITS, cap)
}

pub fn find_phi_match_with_guard(precision_digits: usize, guard: usize, cap: DigitCap) -> Result<PhiMatch> {
    if precision_digits == 0 {
        return Err(Error::Domain("precision must be at least 1 digit".into()));
    }
    cap.check(precision_digits)?;
    let phi_conj = phi_conjugate_oracle(precision_digits + guard, cap)?;
    let threshold = ExactRational::new(1.into(), pow10(precision_digits));
    let target_prefix = rational_to_decimal(&phi_conj, precision_digits);

    let (mut strict, mut prefix) = (None, None);
    for r in RatioRecords::new() {
        if strict.is_none() && abs_error(&r.diff, &phi_conj) < threshold {
            strict = Some(r.index);
        }
        if prefix.is_none() && rational_to_decimal(&r.diff, precision_digits) == target_prefix {
            prefix = Some(r.index);
        }
        if let (Some(strict_error_n), Some(prefix_n)) = (strict, prefix) {
            return Ok(PhiMatch {
                requested_digits: precision_digits,
                strict_error_n,
                prefix_n,
            });
        }
    }
    unreachable!("ratio differences converge to Φ")
}

/// Smallest `n` with `|νₙ − μₙ − Φ| < 10^(−precision_digits)`.
pub fn find_phi_match_n(precision_digits: usize, cap: DigitCap) -> Result<usize> {
    find_phi_match(precision_digits, cap).map(|m| m.strict_error_n)
}

/// Sign of `q − Φ` decided without an oracle: `q < Φ` iff `q² + q − 1 < 0`
/// for `q > −(1+√5)/2`.
pub fn below_phi_conjugate(q: &ExactRational) -> bool {
    q.numer() <= &BigInt::zero() || crate::golden::quadratic_residual(q) < ExactRational::zero()
}
