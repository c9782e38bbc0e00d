//! √5 from the binomial series of `(1 + x)^(1/2)` at `x = 1/4`:
//! `√5 = 2·(1 + 1/4)^(1/2) = 2·Σ cₙ (1/4)ⁿ`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact_arith::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTerm {
    pub index: usize,
    /// `cₙ`, the coefficient of `xⁿ` in the expansion of `(1 + x)^(1/2)`.
    pub coefficient: ExactRational,
    /// `2·cₙ·(1/4)ⁿ`.
    pub contribution: ExactRational,
}

/// Successive [`SeriesTerm`]s from `n = 0`.
///
/// `cₙ₊₁ = −cₙ·(2n − 1) / (2(n + 1))`, which reproduces `c₁ = 1/2` from
/// `c₀ = 1` as well.
#[derive(Debug, Clone)]
pub struct SeriesTerms {
    index: usize,
    coefficient: ExactRational,
    scale: ExactRational,
}

impl SeriesTerms {
    pub fn new() -> Self {
        SeriesTerms {
            index: 0,
            coefficient: ExactRational::one(),
            scale: ExactRational::from_integer(BigInt::from(2u32)),
        }
    }
}

impl Default for SeriesTerms {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for SeriesTerms {
    type Item = SeriesTerm;

    fn next(&mut self) -> Option<SeriesTerm> {
        let n = self.index as i64;
        let term = SeriesTerm {
            index: self.index,
            coefficient: self.coefficient.clone(),
            contribution: &self.coefficient * &self.scale,
        };
        self.coefficient *= ExactRational::new(BigInt::from(-(2 * n - 1)), BigInt::from(2 * (n + 1)));
        self.scale /= BigInt::from(4u32);
        self.index += 1;
        Some(term)
    }
}

/// Partial sums `Sₙ = 2·Σ_{k≤n} cₖ (1/4)ᵏ` for `n = 0, 1, 2, …`.
#[derive(Debug, Clone, Default)]
pub struct SeriesPartialSums {
    terms: SeriesTerms,
    sum: ExactRational,
}

impl SeriesPartialSums {
    pub fn new() -> Self {
        SeriesPartialSums {
            terms: SeriesTerms::new(),
            sum: ExactRational::zero(),
        }
    }
}

impl Iterator for SeriesPartialSums {
    type Item = (usize, ExactRational);

    fn next(&mut self) -> Option<Self::Item> {
        let term = self.terms.next()?;
        self.sum += term.contribution;
        Some((term.index, self.sum.clone()))
    }
}

/// `cₙ`; `c₀ = 1`.
pub fn binomial_coefficient_term(n: usize) -> ExactRational {
    SeriesTerms::new().nth(n).expect("unbounded").coefficient
}

/// `2·Σ_{k=0}^{n} cₖ (1/4)ᵏ`.
pub fn sqrt5_series_partial(n: usize) -> ExactRational {
    SeriesPartialSums::new().nth(n).expect("unbounded").1
}
