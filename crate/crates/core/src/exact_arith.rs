//! Exact integer and rational arithmetic, truncating decimal rendering, and
//! the integer-square-root reference for √5.
//!
//! All decimal output in this crate goes through [`rational_to_decimal`],
//! which truncates toward zero. Nothing here ever rounds.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Unbounded signed integer.
pub type ExactInt = BigInt;

/// Fraction kept in lowest terms with a positive denominator.
pub type ExactRational = num_rational::BigRational;

pub const DEFAULT_DIGIT_CAP: usize = 100_000;

/// Environment variable overriding [`DEFAULT_DIGIT_CAP`].
pub const DIGIT_CAP_ENV: &str = "QRL_DIGIT_CAP";

/// Upper bound on requested decimal precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DigitCap(usize);

impl DigitCap {
    pub const fn new(cap: usize) -> Self {
        DigitCap(cap)
    }

    pub const fn get(self) -> usize {
        self.0
    }

    /// Reads `QRL_DIGIT_CAP`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(DIGIT_CAP_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .map(DigitCap)
                .map_err(|_| Error::Domain(format!("{DIGIT_CAP_ENV}={raw:?} is not a digit count"))),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn check(self, requested: usize) -> Result<()> {
        if requested > self.0 {
            Err(Error::DigitCap {
                requested,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for DigitCap {
    fn default() -> Self {
        DigitCap(DEFAULT_DIGIT_CAP)
    }
}

/// A decimal number with a fixed count of fractional digits.
///
/// Produced by truncation toward zero; `frac_part` always has exactly the
/// requested length, zero-padded when the expansion terminates early.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecimalString {
    negative: bool,
    int_part: String,
    frac_part: String,
}

impl DecimalString {
    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn int_part(&self) -> &str {
        &self.int_part
    }

    pub fn frac_part(&self) -> &str {
        &self.frac_part
    }

    pub fn frac_digits(&self) -> usize {
        self.frac_part.len()
    }

    /// The exact value this string denotes.
    pub fn to_rational(&self) -> ExactRational {
        let digits = format!("{}{}", self.int_part, self.frac_part);
        let mut num: BigInt = digits.parse().expect("validated digit string");
        if self.negative {
            num = -num;
        }
        ExactRational::new(num, pow10(self.frac_part.len()))
    }

    /// Drops fractional digits beyond `digits`. Never adds any.
    pub fn truncated(&self, digits: usize) -> DecimalString {
        if digits >= self.frac_part.len() {
            return self.clone();
        }
        let frac_part = self.frac_part[..digits].to_string();
        let all_zero = self.int_part.bytes().all(|b| b == b'0') && frac_part.bytes().all(|b| b == b'0');
        DecimalString {
            negative: self.negative && !all_zero,
            int_part: self.int_part.clone(),
            frac_part,
        }
    }

    /// Renders `scaled · 10^(−frac_digits)`.
    fn from_scaled(scaled: &BigInt, frac_digits: usize) -> DecimalString {
        let negative = scaled.is_negative();
        let mut digits = scaled.magnitude().to_str_radix(10);
        if digits.len() <= frac_digits {
            let pad = frac_digits + 1 - digits.len();
            digits.insert_str(0, &"0".repeat(pad));
        }
        let split = digits.len() - frac_digits;
        DecimalString {
            negative,
            int_part: digits[..split].to_string(),
            frac_part: digits[split..].to_string(),
        }
    }
}

impl fmt::Display for DecimalString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str(&self.int_part)?;
        if !self.frac_part.is_empty() {
            write!(f, ".{}", self.frac_part)?;
        }
        Ok(())
    }
}

impl FromStr for DecimalString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Decimal(s.to_string());
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) if !f.is_empty() => (i, f),
            Some(_) => return Err(bad()),
            None => (body, ""),
        };
        let is_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
        if int_part.is_empty() || !is_digits(int_part) || !is_digits(frac_part) {
            return Err(bad());
        }
        let all_zero = int_part.bytes().chain(frac_part.bytes()).all(|b| b == b'0');
        Ok(DecimalString {
            negative: negative && !all_zero,
            int_part: int_part.to_string(),
            frac_part: frac_part.to_string(),
        })
    }
}

impl Serialize for DecimalString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DecimalString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

pub fn pow10(exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(10u32), exp)
}

fn isqrt_u64(x: u64) -> u64 {
    if x < 2 {
        return x;
    }
    let mut r = 1u64 << (64 - x.leading_zeros()).div_ceil(2);
    loop {
        let next = (r + x / r) / 2;
        if next >= r {
            return r;
        }
        r = next;
    }
}

/// `floor(√x)` for nonnegative `x`.
///
/// Newton iteration from above, seeded by the square root of the top half of
/// the bits so that only one or two full-width divisions are needed.
pub fn int_isqrt(x: &ExactInt) -> Result<ExactInt> {
    if x.is_negative() {
        return Err(Error::Domain(format!("square root of negative number {x}")));
    }
    Ok(isqrt_nonneg(x))
}

fn isqrt_nonneg(x: &BigInt) -> BigInt {
    if let Some(small) = x.to_u64() {
        return BigInt::from(isqrt_u64(small));
    }
    let quarter = x.bits() / 4;
    let top = isqrt_nonneg(&(x >> (2 * quarter)));
    // (top+1)² > x >> 2q, hence ((top+1) << q)² > x
    let mut r: BigInt = (top + 1u32) << quarter;
    loop {
        let next: BigInt = (&r + x / &r) >> 1u32;
        if next >= r {
            return r;
        }
        r = next;
    }
}

/// Truncates `q` toward zero to exactly `digits` fractional digits.
pub fn rational_to_decimal(q: &ExactRational, digits: usize) -> DecimalString {
    let scaled = (q.numer() * pow10(digits)) / q.denom();
    // BigInt division truncates toward zero
    DecimalString::from_scaled(&scaled, digits)
}

/// The full decimal expansion of `q` when it terminates, i.e. when the
/// denominator has no prime factors besides 2 and 5.
pub fn terminating_decimal(q: &ExactRational) -> Option<DecimalString> {
    let mut den = q.denom().magnitude().clone();
    let (mut twos, mut fives) = (0usize, 0usize);
    let two = num_bigint::BigUint::from(2u32);
    let five = num_bigint::BigUint::from(5u32);
    while den.is_even() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    den.is_one().then(|| rational_to_decimal(q, twos.max(fives)))
}

/// √5 truncated to `digits` fractional digits, as the exact rational
/// `floor(√(5·10^(2·digits))) / 10^digits`.
pub fn sqrt5_truncated(digits: usize, cap: DigitCap) -> Result<ExactRational> {
    cap.check(digits)?;
    let root = isqrt_nonneg(&(BigInt::from(5u32) * pow10(2 * digits)));
    Ok(ExactRational::new(root, pow10(digits)))
}

/// √5 truncated to `digits` fractional digits.
pub fn sqrt5_reference(digits: usize, cap: DigitCap) -> Result<DecimalString> {
    cap.check(digits)?;
    let root = isqrt_nonneg(&(BigInt::from(5u32) * pow10(2 * digits)));
    Ok(DecimalString::from_scaled(&root, digits))
}

pub fn abs_error(a: &ExactRational, b: &ExactRational) -> ExactRational {
    (a - b).abs()
}

/// Exact sign of `q − √5`, decided by comparing `p²` with `5·d²`.
pub fn sqrt5_error_sign(q: &ExactRational) -> i8 {
    if q.numer().sign() != Sign::Plus {
        return -1;
    }
    let lhs = q.numer() * q.numer();
    let rhs = q.denom() * q.denom() * 5u32;
    match lhs.cmp(&rhs) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => unreachable!("√5 is irrational"),
    }
}

/// Largest `d` with `|error| < 10^(−d)`, floored at 0. Zero error has no
/// finite answer and yields `None`.
pub fn correct_digits(error: &ExactRational) -> Option<usize> {
    let e = error.abs();
    if e.is_zero() {
        return None;
    }
    // 10^d < den/num  ⇔  |e| < 10^(−d)
    let (num, den) = (e.numer(), e.denom());
    if num >= den {
        return Some(0);
    }
    let quotient = den / num;
    let exact = (&quotient * num) == *den;
    let len = quotient.to_str_radix(10).len();
    // quotient in [10^(len−1), 10^len); e < 10^(−d) needs 10^d < den/num
    let power_of_ten = quotient == pow10(len - 1);
    Some(if power_of_ten && exact { len - 2 } else { len - 1 })
}
