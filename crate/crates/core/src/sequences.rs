//! Super-increasing and extra-super-increasing sequences.
//!
//! A sequence `a₀, a₁, …` of positive integers is super-increasing when each
//! term exceeds the sum of all earlier terms, and extra-super-increasing when
//! each term `zᵢ` exceeds the weighted sum `Σ_{j<i} (i−j)·zⱼ`. The minimal
//! variants start at 1 and sit exactly one above the bound at every index.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::ExactInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    Generic,
    Super,
    ExtraSuper,
    MinimalSuper,
    MinimalExtraSuper,
}

/// Terms indexed from 0, tagged with the property they were built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSequence {
    terms: Vec<ExactInt>,
    kind: SequenceKind,
}

impl IntSequence {
    pub fn new(terms: Vec<ExactInt>, kind: SequenceKind) -> Result<Self> {
        let first = terms.first().ok_or(Error::EmptySequence)?;
        if matches!(kind, SequenceKind::MinimalSuper | SequenceKind::MinimalExtraSuper) && !first.is_one() {
            return Err(Error::Domain(format!("minimal sequences start at 1, got {first}")));
        }
        Ok(IntSequence { terms, kind })
    }

    pub fn terms(&self) -> &[ExactInt] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<ExactInt> {
        self.terms
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last(&self) -> &ExactInt {
        self.terms.last().expect("non-empty")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationReason {
    NonPositiveTerm,
    SumInequalityFailed,
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationReason::NonPositiveTerm => "non_positive_term",
            ViolationReason::SumInequalityFailed => "sum_inequality_failed",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub reason: ViolationReason,
}

/// Verdict of a validator: valid, or the first index that breaks the rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ValidationResult {
    pub violation: Option<Violation>,
}

impl ValidationResult {
    const VALID: ValidationResult = ValidationResult { violation: None };

    fn fail(index: usize, reason: ViolationReason) -> Self {
        ValidationResult {
            violation: Some(Violation { index, reason }),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }

    pub fn first_violation_index(&self) -> Option<usize> {
        self.violation.map(|v| v.index)
    }
}

/// Checks `aᵢ > Σ_{j<i} aⱼ` for every `i ≥ 1`, all terms positive.
pub fn is_super_increasing(terms: &[ExactInt]) -> Result<ValidationResult> {
    if terms.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut prefix = BigInt::zero();
    for (i, a) in terms.iter().enumerate() {
        if !a.is_positive() {
            return Ok(ValidationResult::fail(i, ViolationReason::NonPositiveTerm));
        }
        if i > 0 && *a <= prefix {
            return Ok(ValidationResult::fail(i, ViolationReason::SumInequalityFailed));
        }
        prefix += a;
    }
    Ok(ValidationResult::VALID)
}

/// Checks `zᵢ > Σ_{j<i} (i−j)·zⱼ` for every `i ≥ 1`, all terms positive.
///
/// The weighted sum is carried incrementally: going from `i` to `i+1` adds
/// one more copy of every earlier term, i.e. the plain prefix sum.
pub fn is_extra_super_increasing(terms: &[ExactInt]) -> Result<ValidationResult> {
    if terms.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut prefix = BigInt::zero();
    let mut weighted = BigInt::zero();
    for (i, z) in terms.iter().enumerate() {
        if !z.is_positive() {
            return Ok(ValidationResult::fail(i, ViolationReason::NonPositiveTerm));
        }
        if i > 0 && *z <= weighted {
            return Ok(ValidationResult::fail(i, ViolationReason::SumInequalityFailed));
        }
        prefix += z;
        weighted += &prefix;
    }
    Ok(ValidationResult::VALID)
}

/// `{a₀, …, aₙ}` with `a₀ = 1` and `aᵢ = 1 + Σ_{j<i} aⱼ`.
pub fn minimal_super(n: usize) -> IntSequence {
    let mut terms = Vec::with_capacity(n + 1);
    let mut prefix = BigInt::zero();
    for _ in 0..=n {
        let next = &prefix + 1u32;
        prefix += &next;
        terms.push(next);
    }
    IntSequence {
        terms,
        kind: SequenceKind::MinimalSuper,
    }
}

/// `{z₀, …, zₙ}` with `z₀ = 1` and `zᵢ = 1 + Σ_{j<i} (i−j)·zⱼ`, evaluated
/// term by term from the weighted sum. Quadratic in `n`.
pub fn minimal_extra_super(n: usize) -> IntSequence {
    let mut terms: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = BigInt::one();
        for (j, z) in terms.iter().enumerate() {
            acc += z * (i - j);
        }
        terms.push(acc);
    }
    IntSequence {
        terms,
        kind: SequenceKind::MinimalExtraSuper,
    }
}

/// Same sequence as [`minimal_extra_super`] via `zᵢ = 3zᵢ₋₁ − zᵢ₋₂`.
pub fn minimal_extra_super_fast(n: usize) -> IntSequence {
    IntSequence {
        terms: ExtraSuperTerms::new().take(n + 1).collect(),
        kind: SequenceKind::MinimalExtraSuper,
    }
}

/// Unbounded iterator over the minimal extra-super-increasing sequence,
/// using the linear recurrence.
#[derive(Debug, Clone)]
pub struct ExtraSuperTerms {
    prev: BigInt,
    cur: BigInt,
}

impl ExtraSuperTerms {
    pub fn new() -> Self {
        // seeded so that the first two outputs are 1 and 2
        ExtraSuperTerms {
            prev: BigInt::from(1u32),
            cur: BigInt::from(1u32),
        }
    }
}

impl Default for ExtraSuperTerms {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for ExtraSuperTerms {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        // z₋₁ = 1 satisfies 3·1 − 1 = 2 = z₁, so one rule covers every step
        let out = std::mem::replace(&mut self.cur, BigInt::zero());
        self.cur = &out * 3u32 - &self.prev;
        self.prev = out.clone();
        Some(out)
    }
}

/// Parses the `seq check` file format: one decimal integer per line with an
/// optional sign, blank lines and `#` comments ignored.
pub fn parse_sequence_file(text: &str) -> Result<Vec<ExactInt>> {
    let mut terms = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let digits = line.strip_prefix('+').unwrap_or(line);
        let body = line.strip_prefix(['+', '-']).unwrap_or(line);
        let valid = !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit());
        if !valid {
            return Err(Error::Parse {
                line: idx + 1,
                message: format!("not an integer: {line:?}"),
            });
        }
        terms.push(digits.parse().expect("validated digits"));
    }
    Ok(terms)
}
