use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use asmdpp_core::asm::{self, Asm};
use asmdpp_core::dpp::{self, Dpp};
use asmdpp_core::matrices::{self, MatrixName};
use asmdpp_core::paths::NilpSet;
use asmdpp_core::verify::{self, Suite, VerifyOptions};
use asmdpp_core::{formulas, SixVertexConfig, ENUM_LIMIT};

#[derive(Parser)]
#[command(name = "asmdpp", version, about = "Exact enumeration of alternating sign matrices and descending plane partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every object of one kind, one per line, in canonical order.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Directory for newline-delimited JSON caches keyed by kind and order.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Print Z(n; x, y, z) computed by one method.
    Genfunc {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// CSV of ASM and DPP counts per (p, m, k) cell.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Evaluate a closed-form count or product.
    Formula {
        #[arg(long, value_enum)]
        name: FormulaName,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        /// Suite name or `all`; may be repeated.
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
        /// Include elapsed times, which makes the output nondeterministic.
        #[arg(long)]
        timings: bool,
    },
    /// Dump a named matrix as JSON.
    Matrix {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        refined: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Asm,
    Dpp,
    Sixvertex,
    Nilp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Det,
    BruteAsm,
    BruteDpp,
    DetW,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaName {
    AsmTotal,
    Refined,
    Vsasm,
    ZMuZero,
    QProduct,
}

/// Bad arguments, as opposed to failed checks or I/O.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn enum_cap() -> Result<usize> {
    match std::env::var("ASMDPP_MAX_N") {
        Ok(v) => {
            let cap: usize = v.parse().map_err(|_| usage(format!("ASMDPP_MAX_N={v:?} is not a number")))?;
            Ok(cap.min(ENUM_LIMIT))
        }
        Err(_) => Ok(ENUM_LIMIT),
    }
}

fn check_n(n: usize) -> Result<()> {
    let cap = enum_cap()?;
    if n == 0 || n > cap {
        return Err(usage(format!("n must be between 1 and {cap}, got {n}")));
    }
    Ok(())
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Asm => "asm",
        Kind::Dpp => "dpp",
        Kind::Sixvertex => "sixvertex",
        Kind::Nilp => "nilp",
    }
}

/// Records as JSON lines.
fn records(kind: Kind, n: usize) -> Result<Vec<String>> {
    fn json<T: serde::Serialize>(x: &T) -> Result<String> {
        Ok(serde_json::to_string(x)?)
    }
    match kind {
        Kind::Asm => asm::enumerate_asms(n)?.iter().map(json).collect(),
        Kind::Sixvertex => asm::enumerate_asms(n)?.iter().map(|a| json(&SixVertexConfig::from_asm(a))).collect(),
        Kind::Dpp => dpp::enumerate_dpps(n)?.iter().map(json).collect(),
        Kind::Nilp => dpp::enumerate_dpps(n)?.iter().map(|d| json(&NilpSet::from_dpp(d, n)?)).collect(),
    }
}

fn text_of(kind: Kind, json: &str) -> Result<String> {
    Ok(match kind {
        Kind::Asm => serde_json::from_str::<Asm>(json)?.to_string(),
        Kind::Sixvertex => serde_json::from_str::<SixVertexConfig>(json)?.to_string(),
        Kind::Dpp => serde_json::from_str::<Dpp>(json)?.to_string(),
        Kind::Nilp => serde_json::from_str::<NilpSet>(json)?.to_string(),
    })
}

fn cmd_enumerate(
    kind: Kind,
    n: usize,
    format: Format,
    limit: Option<usize>,
    output: Option<&Path>,
    cache: Option<&Path>,
) -> Result<()> {
    check_n(n)?;
    let limit = limit.unwrap_or(usize::MAX);
    let cached = cache.map(|dir| dir.join(format!("{}-{n}.ndjson", kind_name(kind))));
    let json_lines: Vec<String> = match &cached {
        Some(path) if path.exists() => {
            let f = io::BufReader::new(fs::File::open(path)?);
            f.lines().collect::<io::Result<_>>()?
        }
        _ => {
            let recs = records(kind, n)?;
            if let Some(path) = &cached {
                fs::create_dir_all(path.parent().expect("joined path"))?;
                let mut w = BufWriter::new(fs::File::create(path)?);
                for j in &recs {
                    writeln!(w, "{j}")?;
                }
                w.flush()?;
            }
            recs
        }
    };
    let mut out = open_output(output)?;
    for line in json_lines.iter().take(limit) {
        match format {
            Format::Json => writeln!(out, "{line}")?,
            Format::Text => writeln!(out, "{}", text_of(kind, line)?)?,
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_genfunc(n: usize, method: Method, format: Format) -> Result<()> {
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    let p = match method {
        Method::Det => matrices::genfunc_det(n)?,
        Method::DetW => matrices::genfunc_det_w(n)?,
        Method::BruteAsm => {
            check_n(n)?;
            asm::z_asm_brute(n)?
        }
        Method::BruteDpp => {
            check_n(n)?;
            dpp::z_dpp_brute(n)?
        }
    };
    match format {
        Format::Text => println!("{p}"),
        Format::Json => println!("{}", serde_json::to_string(&p)?),
    }
    Ok(())
}

fn cmd_formula(name: FormulaName, n: usize, k: Option<usize>) -> Result<()> {
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    let out = match name {
        FormulaName::AsmTotal => formulas::asm_total(n)?.to_string(),
        FormulaName::Refined => {
            let k = k.ok_or_else(|| usage("--k is required for the refined count"))?;
            if k >= n {
                return Err(usage(format!("k must be below n = {n}")));
            }
            formulas::refined_total(n, k)?.to_string()
        }
        FormulaName::Vsasm => formulas::vsasm_total(n)?.to_string(),
        FormulaName::ZMuZero => formulas::z_mu_zero(n)?.to_string(),
        FormulaName::QProduct => formulas::q_factorial_product(n)?.to_string(),
    };
    println!("{out}");
    Ok(())
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>> {
    let mut out = Vec::new();
    for name in names {
        if name == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(name.parse::<Suite>().map_err(|e| usage(e.to_string()))?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Returns whether every check passed.
fn cmd_verify(suites: &[String], max_n: usize, seed: u64, report: ReportFormat, timings: bool) -> Result<bool> {
    let suites = parse_suites(suites)?;
    let max_n = max_n.min(enum_cap()?);
    let r = verify::run(&suites, &VerifyOptions { max_n, seed, timings });
    match report {
        ReportFormat::Text => print!("{r}"),
        ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&r)?),
    }
    Ok(r.passed())
}

fn cmd_matrix(name: &str, n: usize, refined: bool) -> Result<()> {
    let name: MatrixName = name.parse().map_err(|e: asmdpp_core::Error| usage(e.to_string()))?;
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    let m = matrices::build(name, n, refined)?;
    println!("{}", serde_json::to_string(&m)?);
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Enumerate { kind, n, format, limit, output, cache } => {
            cmd_enumerate(kind, n, format, limit, output.as_deref(), cache.as_deref())?
        }
        Command::Genfunc { n, method, format } => cmd_genfunc(n, method, format)?,
        Command::Table { n } => {
            check_n(n)?;
            print!("{}", verify::table_csv(n)?);
        }
        Command::Formula { name, n, k } => cmd_formula(name, n, k)?,
        Command::Verify { suite, max_n, seed, report, timings } => {
            return cmd_verify(&suite, max_n, seed, report, timings)
        }
        Command::Matrix { name, n, refined } => cmd_matrix(&name, n, refined)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() || e.downcast_ref::<asmdpp_core::Error>().is_some_and(is_usage) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn is_usage(e: &asmdpp_core::Error) -> bool {
    use asmdpp_core::Error::*;
    matches!(e, TooLarge { .. } | EmptyOrder | OutOfRange(_) | Parse(_))
}
