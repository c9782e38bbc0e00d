//! Exact rational approximations of √5 and the golden ratio.
//!
//! Two routes to √5 are compared:
//!
//! * partial sums of the binomial series of `2·(1 + 1/4)^(1/2)`
//!   ([`approx_series`]), which oscillate around √5;
//! * `2(νₙ − μₙ) + 1`, where `μₙ` and `νₙ` are successive-term ratios of the
//!   minimal super-increasing and minimal extra-super-increasing sequences
//!   ([`approx_ratio`]), which approach √5 from below.
//!
//! Everything is computed with exact rationals and checked against an
//! integer-square-root oracle ([`exact_arith::sqrt5_reference`]).

pub mod analysis;
pub mod approx_ratio;
pub mod approx_series;
pub mod error;
pub mod exact_arith;
pub mod golden;
pub mod sequences;

pub use error::{Error, Result};
pub use exact_arith::{DecimalString, DigitCap, ExactInt, ExactRational};
