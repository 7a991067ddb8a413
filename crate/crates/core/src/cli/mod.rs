//! The `qgordon` command line: `verify`, `table` and `path`.
//!
//! Exit codes: 0 when every report passes, 1 when some report fails, 2 for
//! usage and configuration errors, 3 for arithmetic domain errors.

mod config;
mod suite;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::agcore::{b_bosonic, big_f, f_tilde};
use crate::error::{Error, Result};
use crate::paths::{render_path, render_path_svg, AdmissiblePath};
use crate::report::VerificationReport;
use crate::rrpoly::{rr_fermionic, RrKind};
use crate::santos::{santos_s, santos_t};

pub use config::{Format, SuiteConfig};
pub use suite::{run_family, Family};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "qgordon",
    version,
    about = "Exact checks of finite Rogers-Ramanujan and Andrews-Gordon identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one identity family (or all) and report pass/fail per identity.
    Verify(VerifyArgs),
    /// Print a family of polynomials over an index range.
    Table(TableArgs),
    /// Draw an admissible path on [-M, L-M] as ASCII or SVG.
    ///
    /// SVG geometry: 20 px per lattice unit in both directions, a 20 px
    /// margin, x = 20 px at the path start, and height 1 drawn 20 px above
    /// the dashed baseline.
    Path(PathArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    family: Family,
    /// Largest L of every grid (defaults: rr 30, paths 16, ag 10, santos 16).
    #[arg(long = "L-max")]
    l_max: Option<i64>,
    /// Largest shift M (defaults: gis 6, shifted Andrews-Gordon series 4, santos 8).
    #[arg(long = "M-max")]
    m_max: Option<i64>,
    /// Largest nu for the Andrews-Gordon families (default 2).
    #[arg(long)]
    nu: Option<i64>,
    /// Include nu = 3 (at L <= 7 unless --L-max is given).
    #[arg(long)]
    nu3: bool,
    /// Series cutoff (default 50).
    #[arg(long)]
    cutoff: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// key=value file mirroring the flags; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    E,
    D,
    Ftilde,
    Bigf,
    #[value(name = "B")]
    B,
    #[value(name = "S")]
    S,
    #[value(name = "T")]
    T,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(value_enum)]
    kind: TableKind,
    /// Index range, `a..b` (end excluded) or `a..=b`.
    #[arg(long, default_value = "0..6", allow_hyphen_values = true)]
    range: String,
    #[arg(long, default_value_t = 2)]
    nu: i64,
    /// s for ftilde/bigf, or the 1-based S for B.
    #[arg(long, default_value_t = 1)]
    s: i64,
    /// b for ftilde/bigf, or the 1-based B for B.
    #[arg(long, default_value_t = 1)]
    b: i64,
    /// Shift M for bigf.
    #[arg(long = "M", default_value_t = 0)]
    m: i64,
}

#[derive(Args, Debug)]
struct PathArgs {
    #[arg(long = "L")]
    l: i64,
    #[arg(long = "M", default_value_t = 0)]
    m: i64,
    /// Comma-separated peak positions.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    peaks: String,
    /// Start value (0 or 1).
    #[arg(long, default_value_t = 0)]
    s: u8,
    /// End value (0 or 1).
    #[arg(long, default_value_t = 0)]
    b: u8,
    #[arg(long)]
    svg: bool,
}

/// Runs the CLI with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => verify(a, out, err),
        Command::Table(a) => table(a, out).map(|_| EXIT_PASS),
        Command::Path(a) => path(a, out).map(|_| EXIT_PASS),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_) => EXIT_USAGE,
                _ => EXIT_DOMAIN,
            }
        }
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let mut cfg = SuiteConfig {
        l_max: a.l_max,
        m_max: a.m_max,
        nu: a.nu,
        cutoff: a.cutoff,
        nu3: a.nu3,
        format: a.format,
        jobs: a.jobs,
    };
    if let Some(path) = &a.config {
        cfg.merge_file(path)?;
    }
    cfg.validate()?;
    let reports = match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Parse(format!("cannot start {n} workers: {e}")))?
            .install(|| run_family(a.family, &cfg))?,
        None => run_family(a.family, &cfg)?,
    };
    write_reports(&reports, cfg.format, out, err).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(if reports.iter().all(VerificationReport::passed) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

/// Text: one line per report, counterexamples indented, then a summary.
/// JSON: one report per line on `out`, the summary on `err`.
pub fn write_reports(
    reports: &[VerificationReport],
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in reports {
                writeln!(out, "{}", r.to_json_line())?;
            }
            write_summary(reports, err)
        }
        Format::Text => {
            for r in reports {
                writeln!(out, "{r}")?;
                for note in &r.notes {
                    writeln!(out, "      note: {note}")?;
                }
                for c in r.counterexamples.iter().take(5) {
                    let params: Vec<String> =
                        c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    writeln!(out, "      {} at {}:", c.label, params.join(" "))?;
                    writeln!(out, "        lhs = {}", c.lhs.text)?;
                    writeln!(out, "        rhs = {}", c.rhs.text)?;
                }
            }
            write_summary(reports, out)
        }
    }
}

fn write_summary(reports: &[VerificationReport], w: &mut dyn Write) -> std::io::Result<()> {
    let passed = reports.iter().filter(|r| r.passed()).count();
    let checks: u64 = reports.iter().map(|r| r.checks).sum();
    let ms: u64 = reports.iter().map(|r| r.elapsed_ms).sum();
    writeln!(w, "{:-<60}", "")?;
    writeln!(
        w,
        "{:<20} {:>6} {:>10} {:>8}",
        "identity", "status", "checks", "ms"
    )?;
    for r in reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        writeln!(
            w,
            "{:<20} {:>6} {:>10} {:>8}",
            r.identity_id, status, r.checks, r.elapsed_ms
        )?;
    }
    writeln!(w, "{:-<60}", "")?;
    writeln!(
        w,
        "{passed}/{} reports passed, {checks} checks, {ms} ms",
        reports.len()
    )
}

/// `a..b` (end excluded) or `a..=b`; bounds may be negative.
pub fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<i64>> {
    let bad = || Error::Parse(format!("expected a range like 0..6 or 0..=5, got {text:?}"));
    let (lo, hi, inclusive) = if let Some((lo, hi)) = text.split_once("..=") {
        (lo, hi, true)
    } else if let Some((lo, hi)) = text.split_once("..") {
        (lo, hi, false)
    } else {
        return Err(bad());
    };
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    Ok(if inclusive { lo..=hi } else { lo..=hi - 1 })
}

fn table(a: TableArgs, out: &mut dyn Write) -> Result<()> {
    let io = |e: std::io::Error| Error::Parse(e.to_string());
    for i in parse_range(&a.range)? {
        let line = match a.kind {
            TableKind::E => format!("e_{i} = {}", rr_fermionic(RrKind::E, i)),
            TableKind::D => format!("d_{i} = {}", rr_fermionic(RrKind::D, i)),
            TableKind::Ftilde => format!(
                "ftilde_{{{},{}}}({i}) = {}",
                a.s,
                a.b,
                f_tilde(a.nu, a.s, a.b, i)?
            ),
            TableKind::Bigf => format!(
                "F_{{{},{}}}({i},{}) = {}",
                a.s,
                a.b,
                a.m,
                big_f(a.nu, a.s, a.b, i, a.m)?
            ),
            TableKind::B => {
                if (i - a.s - a.b).rem_euclid(2) != 0 {
                    continue;
                }
                format!(
                    "B_{{{},{}}}({i}) = {}",
                    a.s,
                    a.b,
                    b_bosonic(a.nu, a.s, a.b, i)?
                )
            }
            TableKind::S => format!("S_{i} = {}", santos_s(i)),
            TableKind::T => format!("T_{i} = {}", santos_t(i)),
        };
        writeln!(out, "{line}").map_err(io)?;
    }
    Ok(())
}

fn path(a: PathArgs, out: &mut dyn Write) -> Result<()> {
    let peaks = a
        .peaks
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<i64>()
                .map_err(|_| Error::Parse(format!("peak {p:?} is not an integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    let p = AdmissiblePath::from_peaks(-a.m, a.l - a.m, a.s, a.b, &peaks)?;
    let text = if a.svg {
        render_path_svg(&p)
    } else {
        render_path(&p)
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Parse(e.to_string()))
}
