use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use qrl::analysis::{build_comparison, ReportFormat, DEFAULT_PHI_MATCH_DIGITS};
use qrl::approx_ratio::{approximant, find_min_n, find_phi_match, Method};
use qrl::exact_arith::{rational_to_decimal, terminating_decimal, DigitCap, ExactRational};
use qrl::golden::{phi_conjugate, phi_continued_fraction, phi_series_partial};
use qrl::sequences::{
    is_extra_super_increasing, is_super_increasing, minimal_extra_super, minimal_extra_super_fast, minimal_super,
    parse_sequence_file,
};

#[derive(Parser, Debug)]
#[command(name = "qrl", version, about = "Exact approximations of sqrt(5) and the golden ratio")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate or validate integer sequences
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Approximate sqrt(5), or find the smallest n reaching a precision
    Sqrt5(Sqrt5Args),
    /// Approximate the golden ratio (or its conjugate with `phi conj`)
    Phi(PhiArgs),
    /// Smallest n where the term ratio difference matches the golden ratio conjugate
    PhiMatch {
        #[arg(long)]
        digits: usize,
    },
    /// Convergence comparison of the series and ratio methods
    Compare(CompareArgs),
}

#[derive(Subcommand, Debug)]
enum SeqCommand {
    /// Print a minimal sequence, one term per line
    Gen {
        #[arg(long)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "rec")]
        method: GenMethod,
    },
    /// Validate a sequence file; exit 0 valid, 1 invalid, 2 on I/O or parse errors
    Check {
        #[arg(long)]
        kind: CheckKind,
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GenKind {
    MinSuper,
    MinExtraSuper,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GenMethod {
    Def,
    Rec,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckKind {
    Super,
    ExtraSuper,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Series,
    Ratio,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Series => Method::Series,
            MethodArg::Ratio => Method::Ratio,
        }
    }
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
struct Sqrt5Args {
    #[command(subcommand)]
    find: Option<Sqrt5Command>,
    #[arg(long, required = true)]
    method: Option<MethodArg>,
    #[arg(long, required = true)]
    n: Option<usize>,
    #[arg(long)]
    digits: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Sqrt5Command {
    /// Smallest n with |approximation - sqrt(5)| < 10^-digits
    FindN {
        #[arg(long)]
        method: MethodArg,
        #[arg(long)]
        digits: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PhiMethodArg {
    Cf,
    Series,
}

#[derive(Args, Debug)]
struct PhiValueArgs {
    #[arg(long)]
    method: PhiMethodArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    digits: usize,
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
struct PhiArgs {
    #[command(subcommand)]
    conj: Option<PhiCommand>,
    #[arg(long, required = true)]
    method: Option<PhiMethodArg>,
    #[arg(long, required = true)]
    n: Option<usize>,
    #[arg(long, required = true)]
    digits: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum PhiCommand {
    /// Print the conjugate phi - 1
    Conj(PhiValueArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Csv,
    Json,
    Table,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long)]
    ref_digits: usize,
    #[arg(long, value_delimiter = ',')]
    targets: Vec<usize>,
    #[arg(long, default_value = "table")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Precision of the phi-match entry
    #[arg(long, default_value_t = DEFAULT_PHI_MATCH_DIGITS)]
    phi_digits: usize,
}

fn print_decimal(q: &ExactRational, digits: Option<usize>) -> String {
    match digits {
        Some(d) => rational_to_decimal(q, d).to_string(),
        None => match terminating_decimal(q) {
            Some(dec) => dec.to_string(),
            None => q.to_string(),
        },
    }
}

fn phi_value(method: PhiMethodArg, n: usize) -> ExactRational {
    match method {
        PhiMethodArg::Cf => phi_continued_fraction(n).value,
        PhiMethodArg::Series => phi_series_partial(n).value,
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cap = DigitCap::from_env()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Seq(SeqCommand::Gen { kind, n, method }) => {
            let terms = match (kind, method) {
                (GenKind::MinSuper, GenMethod::Def) => minimal_super(n).into_terms(),
                (GenKind::MinSuper, GenMethod::Rec) => (0..=n).map(|i| BigInt::from(1u32) << i).collect(),
                (GenKind::MinExtraSuper, GenMethod::Def) => minimal_extra_super(n).into_terms(),
                (GenKind::MinExtraSuper, GenMethod::Rec) => minimal_extra_super_fast(n).into_terms(),
            };
            for t in terms {
                writeln!(out, "{t}")?;
            }
        }
        Command::Seq(SeqCommand::Check { kind, file }) => {
            let text = fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
            let terms = parse_sequence_file(&text).with_context(|| format!("cannot parse {}", file.display()))?;
            let verdict = match kind {
                CheckKind::Super => is_super_increasing(&terms)?,
                CheckKind::ExtraSuper => is_extra_super_increasing(&terms)?,
            };
            match verdict.violation {
                None => writeln!(out, "valid")?,
                Some(v) => {
                    writeln!(out, "invalid at index {}: {}", v.index, v.reason)?;
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Sqrt5(Sqrt5Args {
            find: Some(Sqrt5Command::FindN { method, digits }),
            ..
        }) => {
            writeln!(out, "{}", find_min_n(method.into(), digits, cap)?)?;
        }
        Command::Sqrt5(Sqrt5Args { method, n, digits, .. }) => {
            let (method, n) = (method.expect("required"), n.expect("required"));
            if let Some(d) = digits {
                cap.check(d)?;
            }
            let q = approximant(method.into(), n)?;
            writeln!(out, "{}", print_decimal(&q, digits))?;
        }
        Command::Phi(PhiArgs {
            conj: Some(PhiCommand::Conj(args)),
            ..
        }) => {
            cap.check(args.digits)?;
            let conj = phi_conjugate(&phi_value(args.method, args.n));
            writeln!(out, "{}", rational_to_decimal(&conj, args.digits))?;
        }
        Command::Phi(PhiArgs { method, n, digits, .. }) => {
            let digits = digits.expect("required");
            cap.check(digits)?;
            let phi = phi_value(method.expect("required"), n.expect("required"));
            writeln!(out, "{}", rational_to_decimal(&phi, digits))?;
        }
        Command::PhiMatch { digits } => {
            let m = find_phi_match(digits, cap)?;
            writeln!(out, "digits: {}", m.requested_digits)?;
            writeln!(out, "strict_error_n: {}", m.strict_error_n)?;
            writeln!(out, "prefix_n: {}", m.prefix_n)?;
            writeln!(out, "claimed_n: {}", qrl::analysis::CLAIMED_PHI_MATCH_N)?;
        }
        Command::Compare(args) => {
            let report = build_comparison(args.n_max, args.ref_digits, &args.targets, args.phi_digits, cap)?;
            let format = match args.format {
                FormatArg::Csv => ReportFormat::Csv,
                FormatArg::Json => ReportFormat::Json,
                FormatArg::Table => ReportFormat::Table,
            };
            match args.out {
                Some(path) => {
                    let file = fs::File::create(&path).with_context(|| format!("cannot create {}", path.display()))?;
                    report.emit(format, io::BufWriter::new(file))?;
                }
                None => report.emit(format, &mut out)?,
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
