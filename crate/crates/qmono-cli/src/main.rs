//! qmono: exact computations on the standard quantum sphere.
//!
//! Subcommands: verify (identity suites), spectrum (gauged Laplacian
//! eigenvalues), winding (index pairings per charge), eval (expression
//! evaluator), act (symmetry generators applied to an expression).
//!
//! Exit codes: 0 all checks pass / output produced, 1 check or
//! evaluation failure, 2 usage error.

use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qmono_core::actions::{act_word, Side};
use qmono_core::gauge::spectrum_table;
use qmono_core::scalars::{NumericError, Rat};
use qmono_core::traces::winding_report;

mod config;
mod expr;
mod report;
mod suites;

const NMAX_SOFT_CAP: i64 = 6;
const JMAX2_SOFT_CAP: i64 = 8;

#[derive(Parser)]
#[command(
    name = "qmono",
    about = "Exact line-bundle and spectral computations on the standard quantum sphere",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites over the library identities.
    Verify(VerifyArgs),
    /// Print gauged Laplacian eigenvalues per charge and level.
    Spectrum(SpectrumArgs),
    /// Print index pairings and integrated curvature per charge.
    Winding(WindingArgs),
    /// Normalize an expression, optionally after symmetry actions.
    Eval(EvalArgs),
    /// Apply a word of symmetry generators to an expression.
    Act(ActArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run: algebra, actions, sphere, bundles, calculus,
    /// gauge, traces, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Bundle-degree cutoff |n| <= nmax.
    #[arg(long)]
    nmax: Option<i64>,
    /// Spin cutoff J <= jmax (integer or half-integer like 5/2).
    #[arg(long)]
    jmax: Option<String>,
    /// Seed for the randomized checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Accept cutoffs beyond the soft caps (long runtimes).
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Charge range lo..hi (inclusive).
    #[arg(long, allow_hyphen_values = true, default_value = "-2..2")]
    n: String,
    /// Level range lo..hi (inclusive).
    #[arg(long, default_value = "0..2")]
    s: String,
    /// Rational evaluation point for q; 1 takes the limit.
    #[arg(long)]
    q: Option<String>,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct WindingArgs {
    /// Charge range lo..hi (inclusive).
    #[arg(long, allow_hyphen_values = true, default_value = "-2..2")]
    n: String,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct EvalArgs {
    /// Expression over a, as, c, cs, q and rationals.
    expr: String,
    /// Word of left-acting generators (K, Kinv, E, F), applied after
    /// normalization.
    #[arg(long)]
    left_act: Option<String>,
    /// Word of right-acting generators (K, Kinv, E, F).
    #[arg(long)]
    right_act: Option<String>,
}

#[derive(Args)]
struct ActArgs {
    /// Expression over a, as, c, cs, q and rationals.
    expr: String,
    /// Word of generators (K, Kinv, E, F).
    #[arg(long)]
    word: String,
    /// Which action to apply.
    #[arg(long, value_enum, default_value = "left")]
    side: ActSide,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ActSide {
    Left,
    Right,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match config::load() {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    match cli.command {
        Command::Verify(args) => cmd_verify(args, &cfg),
        Command::Spectrum(args) => cmd_spectrum(args, &cfg),
        Command::Winding(args) => cmd_winding(args, &cfg),
        Command::Eval(args) => cmd_eval(args),
        Command::Act(args) => cmd_act(args),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {}", message);
    ExitCode::from(2)
}

/// Write a finished document to stdout, exiting quietly when the reader
/// has gone away (e.g. the output is piped into `head`).
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    let res = out.write_all(text.as_bytes()).and_then(|()| out.flush());
    if let Err(e) = res {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {}", e);
        std::process::exit(1);
    }
}

fn pick_format(flag: Option<Format>, cfg: &config::Config) -> Format {
    if let Some(f) = flag {
        return f;
    }
    match cfg.format.as_deref() {
        Some("csv") => Format::Csv,
        Some("json") => Format::Json,
        _ => Format::Md,
    }
}

/// Parse "lo..hi" (inclusive).
fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("bad range {} (expected lo..hi)", text))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad range bound {}", text))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad range bound {}", text))?;
    if lo > hi {
        return Err(format!("empty range {}", text));
    }
    Ok((lo, hi))
}

/// Parse a non-negative rational "p" or "p/r".
fn parse_rational(text: &str) -> Result<Rat, String> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let p: i64 = num.parse().map_err(|_| format!("bad rational {}", text))?;
    let r: i64 = den.parse().map_err(|_| format!("bad rational {}", text))?;
    if r == 0 {
        return Err(format!("zero denominator in {}", text));
    }
    let v = qmono_core::scalars::rat(p, r);
    if v <= qmono_core::scalars::rat(0, 1) {
        return Err(format!("q must be positive, got {}", text));
    }
    Ok(v)
}

// ---- verify ----

fn cmd_verify(args: VerifyArgs, cfg: &config::Config) -> ExitCode {
    let nmax = args.nmax.or(cfg.nmax).unwrap_or(2);
    if nmax < 0 {
        return usage_error("nmax must be non-negative");
    }
    let jmax2 = match &args.jmax {
        Some(text) => match config::parse_half_int(text) {
            Ok(v) => v,
            Err(e) => return usage_error(&e),
        },
        None => cfg.jmax2.unwrap_or(4),
    };
    if jmax2 < 0 {
        return usage_error("jmax must be non-negative");
    }
    if (nmax > NMAX_SOFT_CAP || jmax2 > JMAX2_SOFT_CAP) && !args.force {
        return usage_error(&format!(
            "cutoffs nmax={} jmax={}/2 exceed the soft caps (nmax {}, jmax {}/2) \
             and may run for a very long time; pass --force to proceed",
            nmax, jmax2, NMAX_SOFT_CAP, JMAX2_SOFT_CAP
        ));
    }
    let seed = args.seed.or(cfg.seed).unwrap_or(42);
    let cutoffs = suites::Cutoffs { nmax, jmax2, seed };
    let reports = match suites::run(&args.suite, &cutoffs) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    for rep in &reports {
        eprintln!(
            "suite {} finished in {} ms",
            rep.suite,
            rep.elapsed.as_millis()
        );
    }
    let text = match pick_format(args.format, cfg) {
        Format::Md => report::render_text(&reports),
        Format::Csv => report::render_csv(&reports),
        Format::Json => report::render_json(&reports),
    };
    emit(&text);
    if reports.iter().all(report::Report::all_pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

// ---- spectrum ----

fn cmd_spectrum(args: SpectrumArgs, cfg: &config::Config) -> ExitCode {
    let (n_lo, n_hi) = match parse_range(&args.n) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    let (s_lo, s_hi) = match parse_range(&args.s) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    if s_lo < 0 {
        return usage_error("levels s must be non-negative");
    }
    let q0 = match &args.q {
        Some(text) => match parse_rational(text) {
            Ok(v) => Some(v),
            Err(e) => return usage_error(&e),
        },
        None => None,
    };
    let rows: Vec<_> = spectrum_table(n_lo, n_hi, s_hi as u32, q0.as_ref())
        .into_iter()
        .filter(|row| i64::from(row.s) >= s_lo)
        .collect();

    // any evaluation failure aborts before output
    for row in &rows {
        if let Some(Err(e)) = &row.energy_at {
            let reason = match e {
                NumericError::Pole => "pole",
                NumericError::IrrationalSqrt => {
                    "irrational square root (q has no rational square root)"
                }
                NumericError::DivisionByZero => "division by zero",
            };
            eprintln!(
                "error: cannot evaluate the energy at q = {}: {} at n = {}, s = {}",
                args.q.as_deref().unwrap_or("?"),
                reason,
                row.n,
                row.s
            );
            return ExitCode::from(1);
        }
    }

    let cell = |row: &qmono_core::gauge::SpectrumRow| -> String {
        match &row.energy_at {
            Some(Ok(v)) => v.to_string(),
            _ => String::new(),
        }
    };
    let mut text = String::new();
    match pick_format(args.format, cfg) {
        Format::Md => {
            text.push_str("| n | s | 2J | energy | energy at q | degeneracy |\n");
            text.push_str("|---|---|----|--------|-------------|------------|\n");
            for row in &rows {
                let _ = writeln!(
                    text,
                    "| {} | {} | {} | {} | {} | {} |",
                    row.n,
                    row.s,
                    row.j2,
                    row.energy.q_text(),
                    cell(row),
                    row.degeneracy
                );
            }
        }
        Format::Csv => {
            text.push_str("n,s,two_j,energy_symbolic,energy_at_q,degeneracy\n");
            for row in &rows {
                let _ = writeln!(
                    text,
                    "{},{},{},{},{},{}",
                    row.n,
                    row.s,
                    row.j2,
                    row.energy.q_text(),
                    cell(row),
                    row.degeneracy
                );
            }
        }
        Format::Json => {
            let doc: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "n": row.n,
                        "s": row.s,
                        "two_j": row.j2,
                        "energy_symbolic": row.energy.q_text(),
                        "energy_at_q": match &row.energy_at {
                            Some(Ok(v)) => {
                                serde_json::Value::String(v.to_string())
                            }
                            _ => serde_json::Value::Null,
                        },
                        "degeneracy": row.degeneracy,
                    })
                })
                .collect();
            let _ = writeln!(
                text,
                "{}",
                serde_json::to_string_pretty(&doc).expect("rows serialize")
            );
        }
    }
    emit(&text);
    ExitCode::SUCCESS
}

// ---- winding ----

fn cmd_winding(args: WindingArgs, cfg: &config::Config) -> ExitCode {
    let (n_lo, n_hi) = match parse_range(&args.n) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    let rows: Vec<serde_json::Value> =
        (n_lo..=n_hi).map(winding_report).collect();
    let mut text = String::new();
    match pick_format(args.format, cfg) {
        Format::Md => {
            text.push_str("| n | mu pairing | q-trace | integrated curvature |\n");
            text.push_str("|---|------------|---------|----------------------|\n");
            for row in &rows {
                let _ = writeln!(
                    text,
                    "| {} | {} | {} | {} |",
                    row["n"],
                    row["mu_pairing"],
                    row["qtr"].as_str().unwrap_or(""),
                    row["integrated_curvature"].as_str().unwrap_or("")
                );
            }
        }
        Format::Csv => {
            text.push_str("n,mu_pairing,qtr,integrated_curvature\n");
            for row in &rows {
                let _ = writeln!(
                    text,
                    "{},{},{},{}",
                    row["n"],
                    row["mu_pairing"],
                    row["qtr"].as_str().unwrap_or(""),
                    row["integrated_curvature"].as_str().unwrap_or("")
                );
            }
        }
        Format::Json => {
            let _ = writeln!(
                text,
                "{}",
                serde_json::to_string_pretty(&rows).expect("rows serialize")
            );
        }
    }
    emit(&text);
    ExitCode::SUCCESS
}

// ---- eval and act ----

fn cmd_eval(args: EvalArgs) -> ExitCode {
    let mut x = match expr::parse_element(&args.expr) {
        Ok(x) => x,
        Err(e) => return usage_error(&e.to_string()),
    };
    if let Some(word_text) = &args.right_act {
        let word = match expr::parse_action_word(word_text) {
            Ok(w) => w,
            Err(e) => return usage_error(&e.to_string()),
        };
        x = act_word(&word, &x, Side::Right);
    }
    if let Some(word_text) = &args.left_act {
        let word = match expr::parse_action_word(word_text) {
            Ok(w) => w,
            Err(e) => return usage_error(&e.to_string()),
        };
        x = act_word(&word, &x, Side::Left);
    }
    emit(&format!("{}\n", x));
    ExitCode::SUCCESS
}

fn cmd_act(args: ActArgs) -> ExitCode {
    let x = match expr::parse_element(&args.expr) {
        Ok(x) => x,
        Err(e) => return usage_error(&e.to_string()),
    };
    let word = match expr::parse_action_word(&args.word) {
        Ok(w) => w,
        Err(e) => return usage_error(&e.to_string()),
    };
    let side = match args.side {
        ActSide::Left => Side::Left,
        ActSide::Right => Side::Right,
    };
    println!("{}", act_word(&word, &x, side));
    ExitCode::SUCCESS
}

// ---- tests ----
