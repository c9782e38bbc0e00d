//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::{Command, ExitCode};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use qrl::analysis::{build_comparison, CLAIMED_PHI_MATCH_N};
use qrl::approx_ratio::{find_min_n, find_phi_match, ratio_diff, sqrt5_via_ratio, term_ratio_nu, Method, RatioRecords};
use qrl::approx_series::{sqrt5_series_partial, SeriesPartialSums};
use qrl::exact_arith::{
    abs_error, pow10, rational_to_decimal, sqrt5_reference, sqrt5_truncated, terminating_decimal, DigitCap, ExactRational,
};
use qrl::golden::{phi_conjugate, phi_conjugate_oracle, phi_continued_fraction, phi_oracle, phi_series_partial};
use qrl::sequences::{
    is_extra_super_increasing, is_super_increasing, minimal_extra_super, minimal_extra_super_fast, minimal_super,
    ValidationResult,
};

type Outcome = Result<String, String>;
type Validator = fn(&[BigInt]) -> qrl::Result<ValidationResult>;
type Criterion = (&'static str, fn() -> Outcome);

fn cap() -> DigitCap {
    DigitCap::default()
}

fn eps(digits: usize) -> ExactRational {
    ExactRational::new(BigInt::one(), pow10(digits))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

const LADDER: [&str; 10] = [
    "2.25",
    "2.234375",
    "2.236328125",
    "2.23602294921875",
    "2.23607635498046875",
    "2.236066341400146484375",
    "2.236068308353424072265625",
    "2.236067908816039562225341796875",
    "2.236067992052994668483734130859375",
    "2.2360679743651417084038257598876953125",
];

fn c1_series_ladder() -> Outcome {
    for (i, expected) in LADDER.iter().enumerate() {
        let n = i + 1;
        let got = terminating_decimal(&sqrt5_series_partial(n))
            .ok_or_else(|| format!("S_{n} does not terminate"))?
            .to_string();
        ensure(got == *expected, format!("n={n}: got {got}, expected {expected}"))?;
    }
    Ok("10/10 partial sums match character-for-character".into())
}

const NU: [&str; 16] = [
    "2",
    "2.5",
    "2.6",
    "2.6153846",
    "2.617647058",
    "2.61797752808",
    "2.6180257510729",
    "2.618032786885245",
    "2.61803381340012523",
    "2.6180339631667065295",
    "2.618033985017357938973",
    "2.61803398820532505147085",
    "2.6180339886704431856047984",
    "2.618033988738303006852732438",
    "2.61803398874820362134379819107",
    "2.6180339887496481015309718934329",
];

const DIFF: [&str; 16] = [
    "0",
    "0.5",
    "0.6",
    "0.6153846",
    "0.617647058",
    "0.61797752808",
    "0.6180257510729",
    "0.618032786885245",
    "0.61803381340012523",
    "0.6180339631667065295",
    "0.618033985017357938973",
    "0.61803398820532505147085",
    "0.6180339886704431856047984",
    "0.618033988738303006852732438",
    "0.61803398874820362134379819107",
    "0.6180339887496481015309718934329",
];

fn frac_len(s: &str) -> usize {
    s.split_once('.').map_or(0, |(_, f)| f.len())
}

fn c2_ratio_tables() -> Outcome {
    let z16 = minimal_extra_super_fast(16).last().clone();
    ensure(z16 == BigInt::from(3_524_578), format!("z16 = {z16}"))?;
    let mut mismatches = Vec::new();
    for i in 1..=16 {
        let nu = term_ratio_nu(i).unwrap();
        let diff = ratio_diff(i).unwrap();
        let (nu_s, diff_s) = (NU[i - 1], DIFF[i - 1]);
        let got_nu = rational_to_decimal(&nu, frac_len(nu_s)).to_string();
        let got_diff = rational_to_decimal(&diff, frac_len(diff_s)).to_string();
        if got_nu != nu_s {
            mismatches.push(format!("nu_{i}: truncated {got_nu} vs printed {nu_s}"));
        }
        if got_diff != diff_s {
            mismatches.push(format!("diff_{i}: truncated {got_diff} vs printed {diff_s}"));
        }
    }
    if mismatches.is_empty() {
        Ok("16/16 ratios and 16/16 differences match; z16 = 3524578".into())
    } else {
        Err(format!("{} mismatches: {}", mismatches.len(), mismatches.join("; ")))
    }
}

fn c3_selections() -> Outcome {
    let oracle = sqrt5_truncated(40, cap()).unwrap();
    for (d, expected) in [(5, 8), (8, 11)] {
        let n = find_min_n(Method::Ratio, d, cap()).unwrap();
        ensure(n == expected, format!("d={d}: n={n}, expected {expected}"))?;
        let at = abs_error(&sqrt5_via_ratio(n).unwrap(), &oracle);
        let before = abs_error(&sqrt5_via_ratio(n - 1).unwrap(), &oracle);
        ensure(at < eps(d), format!("d={d}: n={n} misses threshold"))?;
        ensure(before >= eps(d), format!("d={d}: n-1={} already meets threshold", n - 1))?;
    }
    Ok("ratio d=5 -> n=8, d=8 -> n=11, both minimal".into())
}

const PHI36: &str = "1.618033988749894848204586834365638117";
const CONJ36: &str = "0.618033988749894848204586834365638117";

fn c4_phi_value() -> Outcome {
    let oracle = phi_oracle(46, cap()).unwrap().value;
    ensure(rational_to_decimal(&oracle, 36).to_string() == PHI36, "oracle disagrees with printed phi")?;
    let cf = phi_continued_fraction(180).value;
    let series = phi_series_partial(65).value;
    for (name, v) in [("continued fraction (depth 180)", &cf), ("series (65 terms)", &series)] {
        let s = rational_to_decimal(v, 36).to_string();
        ensure(s == PHI36, format!("{name}: {s}"))?;
        ensure(abs_error(v, &oracle) < eps(36), format!("{name}: off the oracle by >= 1e-36"))?;
        let c = rational_to_decimal(&phi_conjugate(v), 36).to_string();
        ensure(c == CONJ36, format!("{name} conjugate: {c}"))?;
    }
    Ok(format!("both routes truncate to {PHI36}; conjugates to {CONJ36}"))
}

fn c5_phi_match() -> Outcome {
    let m = find_phi_match(36, cap()).unwrap();
    let n = m.strict_error_n;
    let conj = phi_conjugate_oracle(60, cap()).unwrap();
    ensure(abs_error(&ratio_diff(n).unwrap(), &conj) < eps(36), format!("n*={n} misses 1e-36"))?;
    ensure(abs_error(&ratio_diff(n - 1).unwrap(), &conj) >= eps(36), format!("n*-1={} already meets 1e-36", n - 1))?;
    let report = build_comparison(2, 20, &[], 36, cap()).unwrap();
    ensure(report.phi_match.strict_error_n == n, "report strict n differs")?;
    ensure(report.phi_match.prefix_n == m.prefix_n, "report prefix n differs")?;
    ensure(report.phi_match.claimed_n == CLAIMED_PHI_MATCH_N, "claimed n missing")?;
    let json = report.to_json();
    ensure(json.contains("\"claimed_n\": 40"), "claimed n absent from JSON")?;
    Ok(format!(
        "strict n* = {n} (n*-1 fails), prefix n = {}, claimed n = {CLAIMED_PHI_MATCH_N}",
        m.prefix_n
    ))
}

fn c6_equivalence() -> Outcome {
    let def = minimal_extra_super(2000);
    let fast = minimal_extra_super_fast(2000);
    for (i, (a, b)) in def.terms().iter().zip(fast.terms()).enumerate() {
        ensure(a == b, format!("z_{i} differs"))?;
    }
    ensure(def.len() == 2001 && fast.len() == 2001, "length mismatch")?;
    // shorter requests are prefixes of the longest one
    for n in [0, 1, 2, 17, 500] {
        ensure(minimal_extra_super(n).terms() == &fast.terms()[..=n], format!("prefix n={n}"))?;
        ensure(minimal_extra_super_fast(n).terms() == &fast.terms()[..=n], format!("fast prefix n={n}"))?;
    }
    Ok("definitional and recurrence generators agree for n = 0..2000".into())
}

fn breaks_at(verdict: ValidationResult, i: usize) -> bool {
    verdict.first_violation_index() == Some(i)
}

fn c7_minimality() -> Outcome {
    let mut checked = 0usize;
    for n in 0..=64 {
        let sequences: [(_, Validator); 2] = [
            (minimal_super(n), is_super_increasing),
            (minimal_extra_super(n), is_extra_super_increasing),
        ];
        for (seq, validate) in sequences {
            ensure(validate(seq.terms()).unwrap().is_valid(), format!("n={n}: generator output invalid"))?;
            for i in 0..=n {
                let mut terms = seq.terms().to_vec();
                terms[i] -= 1u32;
                let v = validate(&terms).unwrap();
                ensure(breaks_at(v, i), format!("n={n}, i={i}: verdict {v:?}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} single-term decrements each break at their own index"))
}

fn c8_rates() -> Outcome {
    let oracle = sqrt5_truncated(300, cap()).unwrap();
    let series: Vec<ExactRational> = SeriesPartialSums::new().take(202).map(|(_, s)| s - &oracle).collect();
    let ratio: Vec<ExactRational> = std::iter::once(ExactRational::one())
        .chain(RatioRecords::new().take(201).map(|r| r.sqrt5_approx - &oracle))
        .collect();

    let mut failures = Vec::new();
    // signs: series +, −, +, … from n = 1; ratio always −
    for n in 1..=201 {
        if series[n].is_positive() != (n % 2 == 1) {
            failures.push(format!("series sign at n={n}"));
        }
        if !ratio[n].is_negative() {
            failures.push(format!("ratio sign at n={n}"));
        }
    }

    let quarter = ExactRational::new(1.into(), 4.into());
    let series_tol = &quarter * ExactRational::new(2.into(), 100.into());
    let series_bad: Vec<usize> = (20..=200)
        .filter(|&n| ((series[n + 1].abs() / series[n].abs()) - &quarter).abs() > series_tol)
        .collect();
    if let (Some(first), Some(last)) = (series_bad.first(), series_bad.last()) {
        failures.push(format!(
            "series ratio outside 0.25 ± 2% at {} of 181 points (n = {first}..={last}); e.g. n=20 gives {}",
            series_bad.len(),
            rational_to_decimal(&(series[21].abs() / series[20].abs()), 6)
        ));
    }

    // φ⁻⁴ = Φ⁴ from the oracle
    let conj = phi_conjugate_oracle(300, cap()).unwrap();
    let target = conj.pow(4);
    let ratio_tol = &target / BigInt::from(100);
    let ratio_bad: Vec<usize> = (10..=200)
        .filter(|&n| ((ratio[n + 1].abs() / ratio[n].abs()) - &target).abs() > ratio_tol)
        .collect();
    if !ratio_bad.is_empty() {
        failures.push(format!("ratio-method ratio outside phi^-4 ± 1% at n = {ratio_bad:?}"));
    }

    if failures.is_empty() {
        Ok("series ratio within 2% of 0.25 (n=20..200), ratio-method within 1% of phi^-4 (n=10..200), signs as expected".into())
    } else {
        Err(failures.join("; "))
    }
}

fn c9_cross_oracle() -> Outcome {
    let approx = sqrt5_via_ratio(1000).unwrap();
    let reference = sqrt5_reference(800, cap()).unwrap();
    let rendered = rational_to_decimal(&approx, 800);
    ensure(rendered == reference, "first 800 fractional digits differ")?;
    let oracle = sqrt5_truncated(900, cap()).unwrap();
    let err = abs_error(&approx, &oracle);
    ensure(err < eps(800), "error is not below 1e-800")?;
    let digits = qrl::exact_arith::correct_digits(&err).unwrap();
    Ok(format!("sqrt5_via_ratio(1000) agrees with the isqrt reference to {digits} digits"))
}

fn run_compare(format: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qrl"))
        .args(["compare", "--n-max", "40", "--ref-digits", "60", "--targets", "5,8,20", "--format", format])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), format!("compare --format {format} exited with {}", out.status))?;
    Ok(out.stdout)
}

fn c10_determinism() -> Outcome {
    for format in ["csv", "json"] {
        let first = run_compare(format)?;
        let second = run_compare(format)?;
        ensure(!first.is_empty(), format!("{format}: empty output"))?;
        ensure(first == second, format!("{format}: outputs differ"))?;
    }
    Ok("two compare runs give byte-identical CSV and JSON".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 series partial-sum ladder, bit-exact", c1_series_ladder),
        ("2 term ratio and difference tables", c2_ratio_tables),
        ("3 minimal n for 5 and 8 digits", c3_selections),
        ("4 36-digit phi from both routes", c4_phi_value),
        ("5 phi-match internal consistency", c5_phi_match),
        ("6 definitional/recurrence equivalence", c6_equivalence),
        ("7 minimality under single decrements", c7_minimality),
        ("8 convergence rates and error signs", c8_rates),
        ("9 ratio method vs isqrt oracle at n=1000", c9_cross_oracle),
        ("10 compare output determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
