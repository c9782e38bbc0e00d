//! Side-by-side convergence of the two √5 approximants and report output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::approx_ratio::{approximants, find_min_n, find_phi_match, Method, PhiMatch};
use crate::error::{Error, Result};
use crate::exact_arith::{
    abs_error, correct_digits, pow10, rational_to_decimal, sqrt5_error_sign, sqrt5_truncated, DecimalString, DigitCap,
    ExactRational,
};
use crate::golden::{phi_oracle, PhiSeriesTerms};

/// Index `n` at which φ ≈ Φ + 1 was reported to match at 36 digits.
pub const CLAIMED_PHI_MATCH_N: usize = 40;

/// Default precision for the φ-match entry of a comparison.
pub const DEFAULT_PHI_MATCH_DIGITS: usize = 36;

/// Fractional digits of the rate estimates.
pub const RATE_DIGITS: usize = 10;

pub const CSV_HEADER: [&str; 6] = ["method", "n", "approx", "abs_error", "error_sign", "correct_digits"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergenceRecord {
    pub n: usize,
    pub approx: DecimalString,
    pub abs_error: DecimalString,
    pub error_sign: i8,
    pub correct_digits: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstReach {
    pub series: usize,
    pub ratio: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiMatchSummary {
    pub requested_digits: usize,
    pub strict_error_n: usize,
    pub prefix_n: usize,
    pub claimed_n: usize,
}

impl From<PhiMatch> for PhiMatchSummary {
    fn from(m: PhiMatch) -> Self {
        PhiMatchSummary {
            requested_digits: m.requested_digits,
            strict_error_n: m.strict_error_n,
            prefix_n: m.prefix_n,
            claimed_n: CLAIMED_PHI_MATCH_N,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub n_max: usize,
    pub ref_digits: usize,
    pub series_records: Vec<ConvergenceRecord>,
    pub ratio_records: Vec<ConvergenceRecord>,
    pub series_rate_estimate: DecimalString,
    pub ratio_rate_estimate: DecimalString,
    /// Measured error ratio of the φ series against the oracle.
    pub phi_series_rate_estimate: DecimalString,
    pub first_n_to_reach: BTreeMap<usize, FirstReach>,
    pub phi_match: PhiMatchSummary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Table,
}

/// Geometric mean of `e[k+1]/e[k]` over the back half of `errors`, which
/// telescopes to `(e_last / e_start)^(1/steps)`. Truncated, never rounded.
pub fn rate_estimate(errors: &[ExactRational]) -> DecimalString {
    let start = errors.len() / 2;
    let steps = errors.len().saturating_sub(1).saturating_sub(start);
    if steps == 0 || errors[start].is_zero() {
        return rational_to_decimal(&ExactRational::zero(), RATE_DIGITS);
    }
    let ratio = &errors[errors.len() - 1] / &errors[start];
    // floor(ratio · 10^(digits·steps)) then the integer steps-th root
    let scaled = (ratio * ExactRational::from_integer(pow10(RATE_DIGITS * steps))).to_integer();
    let root: BigInt = scaled.nth_root(steps as u32);
    rational_to_decimal(&ExactRational::new(root, pow10(RATE_DIGITS)), RATE_DIGITS)
}

fn sweep(method: Method, n_max: usize, ref_digits: usize, oracle: &ExactRational) -> (Vec<ConvergenceRecord>, Vec<ExactRational>) {
    approximants(method)
        .take(n_max)
        .map(|(n, approx)| {
            let err = abs_error(&approx, oracle);
            let record = ConvergenceRecord {
                n,
                approx: rational_to_decimal(&approx, ref_digits),
                abs_error: rational_to_decimal(&err, ref_digits),
                error_sign: sqrt5_error_sign(&approx),
                correct_digits: correct_digits(&err).unwrap_or(ref_digits),
            };
            (record, err)
        })
        .unzip()
}

fn phi_series_errors(n_max: usize, oracle: &ExactRational) -> Vec<ExactRational> {
    let mut partial = ExactRational::new(13.into(), 8.into());
    PhiSeriesTerms::new()
        .take(n_max)
        .map(|t| {
            partial += t;
            abs_error(&partial, oracle)
        })
        .collect()
}

/// Sweeps both √5 methods over `n = 1..=n_max` against the √5 oracle at
/// `ref_digits`, and collects the first `n` reaching each digit target.
pub fn build_comparison(
    n_max: usize,
    ref_digits: usize,
    digit_targets: &[usize],
    phi_digits: usize,
    cap: DigitCap,
) -> Result<ComparisonReport> {
    if n_max < 2 {
        return Err(Error::Domain(format!("n_max must be at least 2, got {n_max}")));
    }
    cap.check(ref_digits)?;
    if let Some(&max_target) = digit_targets.iter().max() {
        if ref_digits < max_target + crate::approx_ratio::GUARD_DIGITS {
            return Err(Error::Domain(format!(
                "ref_digits {ref_digits} must be at least the largest target plus {} guard digits",
                crate::approx_ratio::GUARD_DIGITS
            )));
        }
    }
    if digit_targets.contains(&0) {
        return Err(Error::Domain("digit targets must be at least 1".into()));
    }
    let oracle = sqrt5_truncated(ref_digits, cap)?;
    let phi = phi_oracle(ref_digits, cap)?.value;

    let ((series_records, series_errors), (ratio_records, ratio_errors)) = std::thread::scope(|s| {
        let series = s.spawn(|| sweep(Method::Series, n_max, ref_digits, &oracle));
        let ratio = sweep(Method::Ratio, n_max, ref_digits, &oracle);
        (series.join().expect("series sweep panicked"), ratio)
    });

    let mut first_n_to_reach = BTreeMap::new();
    for &d in digit_targets {
        first_n_to_reach.insert(
            d,
            FirstReach {
                series: find_min_n(Method::Series, d, cap)?,
                ratio: find_min_n(Method::Ratio, d, cap)?,
            },
        );
    }

    Ok(ComparisonReport {
        n_max,
        ref_digits,
        series_records,
        ratio_records,
        series_rate_estimate: rate_estimate(&series_errors),
        ratio_rate_estimate: rate_estimate(&ratio_errors),
        phi_series_rate_estimate: rate_estimate(&phi_series_errors(n_max, &phi)),
        first_n_to_reach,
        phi_match: find_phi_match(phi_digits, cap)?.into(),
    })
}

impl ComparisonReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        let rows = self
            .series_records
            .iter()
            .map(|r| (Method::Series, r))
            .chain(self.ratio_records.iter().map(|r| (Method::Ratio, r)));
        for (method, r) in rows {
            w.write_record([
                method.to_string(),
                r.n.to_string(),
                r.approx.to_string(),
                r.abs_error.to_string(),
                r.error_sign.to_string(),
                r.correct_digits.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let width = self.ref_digits + 3;
        let _ = writeln!(out, "sqrt(5) convergence, n = 1..{}, reference digits = {}", self.n_max, self.ref_digits);
        let _ = writeln!(
            out,
            "{:>5}  {:<width$}  {:>4} {:>6}  {:<width$}  {:>4} {:>6}",
            "n", "series", "sign", "digits", "ratio", "sign", "digits"
        );
        for (s, r) in self.series_records.iter().zip(&self.ratio_records) {
            let _ = writeln!(
                out,
                "{:>5}  {:<width$}  {:>+4} {:>6}  {:<width$}  {:>+4} {:>6}",
                s.n,
                s.approx.to_string(),
                s.error_sign,
                s.correct_digits,
                r.approx.to_string(),
                r.error_sign,
                r.correct_digits
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "series error ratio (geometric mean, back half): {}", self.series_rate_estimate);
        let _ = writeln!(out, "ratio error ratio (geometric mean, back half):  {}", self.ratio_rate_estimate);
        let _ = writeln!(out, "phi series error ratio (geometric mean, back half): {}", self.phi_series_rate_estimate);
        for (d, reach) in &self.first_n_to_reach {
            let _ = writeln!(
                out,
                "first n with |error| < 1e-{d}: series {}, ratio {}",
                reach.series, reach.ratio
            );
        }
        let m = &self.phi_match;
        let _ = writeln!(
            out,
            "phi conjugate match at {} digits: strict_error_n {}, prefix_n {}, claimed {}",
            m.requested_digits, m.strict_error_n, m.prefix_n, m.claimed_n
        );
        out
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Json => self.to_json(),
            ReportFormat::Table => self.to_table(),
        }
    }

    pub fn emit<W: io::Write>(&self, format: ReportFormat, mut out: W) -> io::Result<()> {
        out.write_all(self.render(format).as_bytes())?;
        out.flush()
    }
}

/// Whether the signs flip at every step, ignoring exact hits.
pub fn signs_alternate(records: &[ConvergenceRecord]) -> bool {
    records
        .windows(2)
        .all(|w| w[0].error_sign == 0 || w[1].error_sign == 0 || w[0].error_sign == -w[1].error_sign)
}

/// Whether every nonzero sign equals `sign`.
pub fn signs_constant(records: &[ConvergenceRecord], sign: i8) -> bool {
    records.iter().all(|r| r.error_sign == 0 || r.error_sign == sign)
}
