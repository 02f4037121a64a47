//! Command-line front end for the `qdeform` library.
//!
//! Four subcommands cover the library surface: `expand` prints the power
//! series of a q-deformed number, `cfrac` expands a series into a continued
//! fraction (plain C-fraction or a super-delta staircase), `wall` prints rows
//! of shifted Hankel determinants, and `verify` runs the wall conjecture
//! checker for a metallic number.
//!
//! Exit codes: 0 success (or verified), 1 computational or verification
//! failure, 2 usage or parse error, 3 resource budget exceeded. All output is
//! deterministic: identical arguments produce byte-identical stdout.

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qdeform::cfrac::{c_expand, super_delta_expand};
use qdeform::coeff::{parse as parse_coeff, Coefficient};
use qdeform::hankel::{hankel_wall, WallEngine};
use qdeform::qreal::parse_number_spec;
use qdeform::recurrences::verify_conjecture;
use qdeform::serialize::{
    cfrac_text, conjecture_text, series_text, staircase_text, wall_text, Format,
};
use qdeform::series::TruncatedSeries;
use qdeform::{Error, Result};

/// Default certified order for `expand`.
const EXPAND_ORDER: i64 = 24;

/// Default certified order for `cfrac`: enough to witness two full periods
/// of every layer pattern the named series exhibit.
const CFRAC_ORDER: i64 = 80;

/// Extra certified order given to the wall commands beyond the strict
/// minimum, so the staircase engine has room for its final layer.
const LADDER_HEADROOM: i64 = 8;

const NUMBER_HELP: &str = "\
A number or series to work with:
  7, -3, 5/3            a rational, deformed as [x]_q
  [2,1,(3,1)]           a regular continued fraction; (…) marks the period
  metallic:N            the N-th metallic number (N + sqrt(N^2+4))/2
  golden|silver|bronze|platinum    aliases for metallic:1..4
  catalan, motzkin      named generating functions
  file:PATH             coefficients from a file (whitespace/comma separated)
  bfile:PATH            coefficients from \"index value\" lines";

#[derive(Parser)]
#[command(
    name = "qdeform",
    version,
    about = "q-deformed numbers: power series, continued fractions, Hankel walls",
    after_help = "Exit codes: 0 ok, 1 verification/computational failure, \
                  2 usage or parse error, 3 budget exceeded."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the power series of a q-deformed number
    Expand {
        #[arg(help = NUMBER_HELP, allow_hyphen_values = true)]
        number: String,
        /// Certified order: coefficients are exact for exponents below this
        /// (default 24; file inputs default to everything the file provides)
        #[arg(long)]
        order: Option<i64>,
        /// Output format: plain, csv, json, or bfile
        #[arg(long, default_value = "plain")]
        format: String,
    },
    /// Expand a series into a continued fraction
    Cfrac {
        #[arg(help = NUMBER_HELP, allow_hyphen_values = true)]
        number: String,
        /// Expand into a super-delta staircase instead of a plain C-fraction
        #[arg(long)]
        delta: Option<u32>,
        /// Drop this many leading coefficients before expanding
        #[arg(long, default_value_t = 0)]
        shift: u32,
        /// Certified order of the input series (default 80)
        #[arg(long)]
        order: Option<i64>,
        /// Stop after this many layers
        #[arg(long, default_value_t = 24)]
        layers: usize,
        /// Output format: plain, csv, or json
        #[arg(long, default_value = "plain")]
        format: String,
    },
    /// Print rows of shifted Hankel determinants (a number wall slice)
    Wall {
        #[arg(help = NUMBER_HELP, allow_hyphen_values = true)]
        number: String,
        /// Inclusive range of row shifts, e.g. 0..3 or a single shift
        #[arg(long, default_value = "0..3")]
        shifts: String,
        /// Largest determinant size in each row
        #[arg(long, default_value_t = 12)]
        n: u32,
        /// Certified order of the input series; raised automatically when it
        /// cannot cover the requested wall
        #[arg(long)]
        order: Option<i64>,
        /// Determinant engine: naive, ladder, or auto
        #[arg(long, default_value = "auto")]
        engine: String,
        /// Output format: plain, csv, json, or bfile (single row only)
        #[arg(long, default_value = "plain")]
        format: String,
    },
    /// Check the Hankel-wall conjecture for the k-th metallic number
    Verify {
        /// Metallic index k >= 1 (1 = golden, 2 = silver, ...)
        #[arg(long)]
        conjecture: u32,
        /// Check determinant sizes up to this bound
        #[arg(long, default_value_t = 60)]
        n: u32,
        /// Give up (exit code 3) after this much wall-clock time
        #[arg(long)]
        budget_seconds: Option<f64>,
        /// Determinant engine: naive, ladder, or auto
        #[arg(long, default_value = "auto")]
        engine: String,
        /// Output format: plain, csv, or json
        #[arg(long, default_value = "plain")]
        format: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::Parse { .. } | Error::InsufficientOrder { .. } => 2,
                Error::BudgetExceeded { .. } => 3,
                _ => 1,
            })
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Expand {
            number,
            order,
            format,
        } => {
            let format = parse_format(&format)?;
            let f = load_series(&number, order, EXPAND_ORDER)?;
            print!("{}", series_text(&f, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Cfrac {
            number,
            delta,
            shift,
            order,
            layers,
            format,
        } => {
            let format = parse_format(&format)?;
            let f = load_series(&number, order, CFRAC_ORDER)?;
            let f = f.shifted_tail(shift as i64);
            let text = match delta {
                None => {
                    let x = c_expand(&f, layers)?;
                    note_partial_expansion(x.cfrac.layers().len(), layers, x.complete);
                    cfrac_text(&x, format)?
                }
                Some(0) => {
                    return Err(Error::Parse {
                        message: "--delta must be at least 1".into(),
                    })
                }
                Some(d) => {
                    if f.valuation().is_some_and(|v| v < 0) {
                        return Err(Error::Parse {
                            message: "staircase expansion needs a power series with no \
                                      negative exponents; use --shift or the plain C-fraction"
                                .into(),
                        });
                    }
                    let x = super_delta_expand(&f, d, layers)?;
                    note_partial_expansion(x.cfrac.layers().len(), layers, x.complete);
                    staircase_text(&x, format)?
                }
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Wall {
            number,
            shifts,
            n,
            order,
            engine,
            format,
        } => {
            let format = parse_format(&format)?;
            let engine = parse_engine(&engine)?;
            let range = parse_shifts(&shifts)?;
            // An n x n determinant at the largest shift reads coefficients
            // through index shift_max + 2n - 2.
            let required = (*range.end() as i64 + 2 * n as i64 - 1).max(1);
            let f = load_wall_series(&number, order, required)?;
            let wall = hankel_wall(&f, range, n, engine)?;
            print!("{}", wall_text(&wall, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            conjecture,
            n,
            budget_seconds,
            engine,
            format,
        } => {
            let format = parse_format(&format)?;
            let engine = parse_engine(&engine)?;
            if conjecture == 0 {
                return Err(Error::Parse {
                    message: "--conjecture takes the metallic index k, starting at 1".into(),
                });
            }
            if budget_seconds.is_some_and(|b| !b.is_finite() || b < 0.0) {
                return Err(Error::Parse {
                    message: "--budget-seconds must be a nonnegative number".into(),
                });
            }
            let report = verify_conjecture(conjecture, n, budget_seconds, engine)?;
            print!("{}", conjecture_text(&report, format)?);
            if !report.all_pass {
                eprintln!("verification failed");
                return Ok(ExitCode::from(1));
            }
            if report.budget_exceeded {
                eprintln!("budget exceeded: not all rows were checked");
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_format(text: &str) -> Result<Format> {
    Format::parse(text).ok_or_else(|| Error::Parse {
        message: format!("unknown format '{text}' (expected plain, csv, json, or bfile)"),
    })
}

fn parse_engine(text: &str) -> Result<WallEngine> {
    match text {
        "naive" => Ok(WallEngine::Naive),
        "ladder" => Ok(WallEngine::Ladder { spot_checks: 5 }),
        "auto" => Ok(WallEngine::Auto),
        other => Err(Error::Parse {
            message: format!("unknown engine '{other}' (expected naive, ladder, or auto)"),
        }),
    }
}

/// Parses an inclusive shift range: `A..B`, `A..=B`, or a single shift `A`.
fn parse_shifts(text: &str) -> Result<RangeInclusive<u32>> {
    let bad = |detail: &str| Error::Parse {
        message: format!("cannot read shift range '{text}': {detail}"),
    };
    let parse_end = |part: &str, what: &str| {
        part.trim()
            .parse::<u32>()
            .map_err(|_| bad(&format!("{what} '{part}' is not a small nonnegative integer")))
    };
    match text.split_once("..") {
        None => {
            let single = parse_end(text, "shift")?;
            Ok(single..=single)
        }
        Some((a, b)) => {
            let lo = parse_end(a, "start")?;
            let hi = parse_end(b.strip_prefix('=').unwrap_or(b), "end")?;
            if lo > hi {
                return Err(bad("the range is empty"));
            }
            Ok(lo..=hi)
        }
    }
}

/// Loads the series named by `spec` at the requested certified order, or at
/// `default_order` when no `--order` was given. File inputs default to the
/// order the file provides.
fn load_series(spec: &str, order: Option<i64>, default_order: i64) -> Result<TruncatedSeries> {
    if let Some(o) = order {
        if o < 0 {
            return Err(Error::Parse {
                message: "--order must be nonnegative".into(),
            });
        }
    }
    if let Some(path) = spec.strip_prefix("file:") {
        return restrict_file_order(read_dense_file(path)?, order);
    }
    if let Some(path) = spec.strip_prefix("bfile:") {
        return restrict_file_order(read_bfile(path)?, order);
    }
    parse_number_spec(spec)?.to_series(order.unwrap_or(default_order))
}

/// Loads a series for a wall computation needing certified order `required`.
/// Generated series are widened to fit (with a notice when that overrides an
/// explicit `--order`); file data either covers the wall or is an error.
fn load_wall_series(spec: &str, order: Option<i64>, required: i64) -> Result<TruncatedSeries> {
    if spec.starts_with("file:") || spec.starts_with("bfile:") {
        let f = load_series(spec, order, 0)?;
        if f.order() < required {
            return Err(Error::InsufficientOrder {
                needed: required,
                have: f.order(),
            });
        }
        return Ok(f);
    }
    let order = match order {
        None => required + LADDER_HEADROOM,
        Some(o) if o < required => {
            eprintln!(
                "notice: --order raised to {required} so the wall has coefficients \
                 through index {}",
                required - 1
            );
            required
        }
        Some(o) => o,
    };
    load_series(spec, Some(order), order)
}

fn restrict_file_order(f: TruncatedSeries, order: Option<i64>) -> Result<TruncatedSeries> {
    match order {
        None => Ok(f),
        Some(o) if o <= f.order() => Ok(f.truncate(o)),
        Some(o) => Err(Error::Parse {
            message: format!(
                "the file certifies order {}, so --order {o} overstates it",
                f.order()
            ),
        }),
    }
}

/// Reads whitespace- or comma-separated coefficients; `#` starts a comment.
/// The first value is the coefficient of q^0.
fn read_dense_file(path: &str) -> Result<TruncatedSeries> {
    let text = read_file(path)?;
    let mut coeffs: Vec<Coefficient> = Vec::new();
    for line in text.lines() {
        let data = line.split('#').next().unwrap_or("");
        for token in data.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            coeffs.push(parse_coeff(token).ok_or_else(|| Error::Parse {
                message: format!("{path}: '{token}' is not an integer or fraction"),
            })?);
        }
    }
    series_from_values(path, 0, coeffs)
}

/// Reads OEIS-style b-file lines "index value", indices consecutive. The
/// first index may be negative (a Laurent head) but gaps are errors.
fn read_bfile(path: &str) -> Result<TruncatedSeries> {
    let text = read_file(path)?;
    let mut start: Option<i64> = None;
    let mut coeffs: Vec<Coefficient> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let data = line.split('#').next().unwrap_or("").trim();
        if data.is_empty() {
            continue;
        }
        let bad = |detail: String| Error::Parse {
            message: format!("{path}:{}: {detail}", lineno + 1),
        };
        let mut parts = data.split_whitespace();
        let (Some(index), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad("expected exactly two columns: index value".into()));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| bad(format!("'{index}' is not an integer index")))?;
        let expected = start.map_or(index, |s| s + coeffs.len() as i64);
        if index != expected {
            return Err(bad(format!("expected index {expected}, found {index}")));
        }
        start.get_or_insert(index);
        coeffs.push(parse_coeff(value).ok_or_else(|| {
            bad(format!("'{value}' is not an integer or fraction"))
        })?);
    }
    series_from_values(path, start.unwrap_or(0), coeffs)
}

fn series_from_values(
    path: &str,
    start: i64,
    coeffs: Vec<Coefficient>,
) -> Result<TruncatedSeries> {
    if coeffs.is_empty() {
        return Err(Error::Parse {
            message: format!("{path}: no values found"),
        });
    }
    let order = start + coeffs.len() as i64;
    Ok(TruncatedSeries::new(start, coeffs, order))
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        message: format!("cannot read {path}: {e}"),
    })
}

/// Points out on stderr when the expansion certified fewer layers than asked
/// for because the input series ran out of certified order.
fn note_partial_expansion(got: usize, asked: usize, complete: bool) {
    if !complete && got < asked {
        eprintln!("note: certified {got} layers; a longer --order may extend the expansion");
    }
}
