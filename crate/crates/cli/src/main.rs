//! `regdim`: dimension records, tables, resonance classification and
//! identity verification from the command line.
//!
//! Exit codes: 0 success, 1 usage/parse/IO error, 2 route disagreement,
//! 3 non-resonance assumption violated.

mod render;

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use regdim::dims::{compute_record, table, DimQuery, RPolicy};
use regdim::resonance::{classify, dims_for_config, ExponentConfig};
use regdim::verify::{run_suite, Suite};

const EXIT_USAGE: u8 = 1;
const EXIT_DISAGREE: u8 = 2;
const EXIT_VIOLATED: u8 = 3;

#[derive(Parser)]
#[command(name = "regdim", version, about = "Exact dimensions of regularizable cycles for Selberg-type integrals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    All,
    OnlyN,
    #[value(name = "only-n-minus-1")]
    OnlyNMinus1,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Pfaff,
    Contiguity,
    Pochhammer,
    Hockey,
    Routes,
    Theorem2,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Every route for a single (m, n, r)
    Dims {
        #[arg(short = 'm', allow_negative_numbers = true)]
        m: i64,
        #[arg(short = 'n', allow_negative_numbers = true)]
        n: i64,
        #[arg(short = 'r', allow_negative_numbers = true)]
        r: i64,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Records over ranges of m and n, e.g. --m-range 2..4
    Table {
        #[arg(long = "m-range")]
        m_range: String,
        #[arg(long = "n-range")]
        n_range: String,
        #[arg(long = "r-policy", value_enum, default_value = "all")]
        r_policy: Policy,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify an exponent configuration read from a JSON file
    Classify {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Run an identity or route verification suite
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cases: Option<u64>,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

/// Accepts `a`, `a..b`, `a..=b` or `a:b`, all inclusive.
fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let bound = |s: &str| s.trim().parse::<u32>().map_err(|e| format!("bad range bound `{s}`: {e}"));
    let (lo, hi) = if let Some((a, b)) = text.split_once("..=") {
        (bound(a)?, bound(b)?)
    } else if let Some((a, b)) = text.split_once("..") {
        (bound(a)?, bound(b)?)
    } else if let Some((a, b)) = text.split_once(':') {
        (bound(a)?, bound(b)?)
    } else {
        let v = bound(text)?;
        (v, v)
    };
    if lo < 1 || lo > hi {
        return Err(format!("range `{text}` must satisfy 1 <= start <= end"));
    }
    Ok(lo..=hi)
}

fn emit(text: &str) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage(format!("writing output: {e}")),
    }
}

fn run_dims(m: i64, n: i64, r: i64, format: Format) -> ExitCode {
    let query = match DimQuery::new(m, n, r) {
        Ok(q) => q,
        Err(e) => return usage(e),
    };
    let rec = compute_record(query);
    let text = match format {
        Format::Pretty => render::records_pretty(std::slice::from_ref(&rec)),
        Format::Csv => render::records_csv(std::slice::from_ref(&rec)),
        Format::Json => format!("{}\n", render::record_json(&rec)),
    };
    let code = emit(&text);
    if code != ExitCode::SUCCESS {
        return code;
    }
    if rec.routes_agree {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: routes disagree at (m, n, r) = ({m}, {n}, {r})");
        ExitCode::from(EXIT_DISAGREE)
    }
}

fn run_table(m_range: &str, n_range: &str, policy: Policy, format: Format, out: Option<PathBuf>) -> ExitCode {
    let (m_range, n_range) = match (parse_range(m_range), parse_range(n_range)) {
        (Ok(m), Ok(n)) => (m, n),
        (Err(e), _) | (_, Err(e)) => return usage(e),
    };
    let policy = match policy {
        Policy::All => RPolicy::All,
        Policy::OnlyN => RPolicy::OnlyN,
        Policy::OnlyNMinus1 => RPolicy::OnlyNMinus1,
    };
    let rows = match table(m_range, n_range, policy) {
        Ok(rows) => rows,
        Err(e) => return usage(e),
    };
    let text = match format {
        Format::Pretty => render::records_pretty(&rows),
        Format::Csv => render::records_csv(&rows),
        Format::Json => render::records_json(&rows),
    };
    let code = match out {
        Some(path) => match fs::write(&path, text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => return usage(format!("writing {}: {e}", path.display())),
        },
        None => emit(&text),
    };
    if code != ExitCode::SUCCESS {
        return code;
    }
    if let Some(bad) = rows.iter().find(|r| !r.routes_agree) {
        eprintln!("error: routes disagree at (m, n, r) = ({}, {}, {})", bad.query.m, bad.query.n, bad.query.r);
        return ExitCode::from(EXIT_DISAGREE);
    }
    ExitCode::SUCCESS
}

fn run_classify(path: &PathBuf, format: Format) -> ExitCode {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage(format!("reading {}: {e}", path.display())),
    };
    let cfg = match ExponentConfig::from_json_str(&text) {
        Ok(c) => c,
        Err(e) => return usage(format!("{}: {e}", path.display())),
    };
    let (report, record) = match dims_for_config(&cfg) {
        Ok((report, record)) => (report, Some(record)),
        Err(_) => (classify(&cfg), None),
    };
    let out = match format {
        Format::Pretty => render::classify_pretty(&cfg, &report, record.as_ref()),
        Format::Json => render::classify_json(&cfg, &report, record.as_ref()),
        Format::Csv => render::classify_csv(&cfg, &report, record.as_ref()),
    };
    let code = emit(&out);
    if code != ExitCode::SUCCESS {
        return code;
    }
    match record {
        None => ExitCode::from(EXIT_VIOLATED),
        Some(rec) if !rec.routes_agree => ExitCode::from(EXIT_DISAGREE),
        Some(_) => ExitCode::SUCCESS,
    }
}

fn run_verify(suite: SuiteArg, seed: u64, cases: Option<u64>, format: Format) -> ExitCode {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Pfaff => vec![Suite::Pfaff],
        SuiteArg::Contiguity => vec![Suite::Contiguity],
        SuiteArg::Pochhammer => vec![Suite::Pochhammer],
        SuiteArg::Hockey => vec![Suite::Hockey],
        SuiteArg::Routes => vec![Suite::Routes],
        SuiteArg::Theorem2 => vec![Suite::Theorem2],
    };
    let reports: Vec<_> = suites
        .into_iter()
        .map(|s| run_suite(s, seed, cases.map_or(s.default_cases(), |c| c as usize)))
        .collect();
    let text = match format {
        Format::Pretty => render::verify_pretty(&reports),
        Format::Csv => render::verify_csv(&reports),
        Format::Json => render::verify_json(&reports),
    };
    let code = emit(&text);
    if code != ExitCode::SUCCESS {
        return code;
    }
    if reports.iter().all(|r| r.all_passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISAGREE)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Dims { m, n, r, format } => run_dims(m, n, r, format),
        Command::Table { m_range, n_range, r_policy, format, out } => {
            run_table(&m_range, &n_range, r_policy, format, out)
        }
        Command::Classify { config, format } => run_classify(&config, format),
        Command::Verify { suite, seed, cases, format } => run_verify(suite, seed, cases, format),
    }
}
