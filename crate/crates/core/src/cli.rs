//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
//! All output is deterministic for fixed arguments.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{self, AsymKind};
use crate::error::Error;
use crate::identities::{self, VerificationReport};
use crate::partitions::{self, RefinedKind as OracleKind, StatKind};
use crate::qfunctions::{self, Form, RefinedKind, SERIES_NAMES};
use crate::series::{recommended_order, IntSeries};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const GENERATOR: &str = "excludant";

#[derive(Debug, Parser)]
#[command(name = "excludant", version, about = "Exact q-series and excludant partition statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the coefficients of a named generating function
    Series {
        name: String,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "canonical")]
        form: Form,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Evaluate a statistic by enumerating partitions of n
    Oracle {
        #[arg(value_enum)]
        stat: OracleStat,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        distinct: bool,
    },
    /// Check registered identities
    Verify(VerifyArgs),
    /// Partial sums of the Rademacher-type series for sigma mex(n)
    Hrr {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 10)]
        terms: u64,
    },
    /// Closed-form asymptotic against the exact value
    Asym {
        #[arg(long, value_enum)]
        kind: AsymArg,
        #[arg(long)]
        n: u64,
    },
    /// Ratios of generating functions at q = e^{-t} against their leading behaviour
    Tauberian {
        #[arg(long)]
        t: f64,
        #[arg(long)]
        order: Option<usize>,
    },
    /// One slice of a two-variable refinement
    Refine {
        kind: RefinedKind,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Write every named series in every form as a JSON array
    Export {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 100)]
        order: usize,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("target").required(true).args(["all", "identity"])))]
struct VerifyArgs {
    #[arg(long)]
    all: bool,
    #[arg(long)]
    identity: Option<String>,
    /// Series order for series-vs-series identities
    #[arg(long)]
    order: Option<usize>,
    /// Largest n for series-vs-enumeration identities
    #[arg(long)]
    oracle_max: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleStat {
    Mex,
    Moex,
    Maex,
    Largest,
    OddMex,
    D2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AsymArg {
    SigmaMex,
    SigmaDMex,
    SigmaL,
}

/// One exported series. Coefficients are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub name: String,
    pub form: Form,
    pub order: usize,
    pub coeffs: Vec<String>,
    pub meta: Meta,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub generator: String,
    pub version: String,
}

impl OutputRecord {
    pub fn new(name: &str, form: Form, series: &IntSeries) -> Self {
        OutputRecord {
            name: name.to_string(),
            form,
            order: series.order(),
            coeffs: series.coeffs().iter().map(ToString::to_string).collect(),
            meta: Meta {
                generator: GENERATOR.to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
            },
        }
    }

    /// Parses the coefficients back into a series.
    pub fn to_series(&self) -> Result<IntSeries, String> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(|e| format!("bad coefficient `{c}`: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        IntSeries::new(coeffs, self.order).map_err(|e| e.to_string())
    }
}

pub fn to_csv(series: &IntSeries) -> String {
    let mut out = String::from("n,value\n");
    for (n, c) in series.coeffs().iter().enumerate() {
        out.push_str(&format!("{n},{c}\n"));
    }
    out
}

pub fn to_json(record: &OutputRecord) -> String {
    serde_json::to_string(record).expect("record serializes")
}

/// Entry point used by the binary.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn write_series(out: &mut dyn Write, name: &str, form: Form, series: &IntSeries, format: Format) -> std::io::Result<()> {
    match format {
        Format::Csv => out.write_all(to_csv(series).as_bytes()),
        Format::Json => writeln!(out, "{}", to_json(&OutputRecord::new(name, form, series))),
    }
}

fn print_reports(out: &mut dyn Write, reports: &[VerificationReport]) -> Result<i32, CliError> {
    for r in reports {
        writeln!(out, "{r}")?;
    }
    Ok(if reports.iter().all(VerificationReport::passed) { EXIT_OK } else { EXIT_FAIL })
}

const PROPERTY_CHECKS: [&str; 3] = ["monotonicity", "parity", "positivity"];

fn property_check(name: &str, range: usize) -> Result<VerificationReport, Error> {
    match name {
        "monotonicity" => identities::monotonicity_check(range),
        "parity" => identities::parity_check(range),
        "positivity" => identities::positivity_check(range),
        other => Err(Error::UnknownIdentity(other.to_string())),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Series { name, order, form, format } => {
            let named = qfunctions::build(&name, form, order)?;
            write_series(out, &name, form, &named.series, format)?;
        }
        Command::Oracle { stat, n, distinct } => {
            let value = match stat {
                OracleStat::Mex => partitions::stat_sum_oracle(StatKind::Mex, n, distinct),
                OracleStat::Moex => partitions::stat_sum_oracle(StatKind::Moex, n, distinct),
                OracleStat::Maex => partitions::stat_sum_oracle(StatKind::Maex, n, distinct),
                OracleStat::Largest => partitions::stat_sum_oracle(StatKind::Largest, n, distinct),
                OracleStat::OddMex => partitions::refined_count_oracle(OracleKind::OddMex, 0, n, distinct),
                OracleStat::D2 => partitions::two_colored_distinct_count(n),
            };
            writeln!(out, "{value}")?;
        }
        Command::Verify(args) => {
            let reports = if args.all {
                let mut reports = identities::verify_all(args.order, args.oracle_max);
                let range = args.order.unwrap_or(identities::DEFAULT_SERIES_RANGE);
                for name in PROPERTY_CHECKS {
                    reports.push(property_check(name, range)?);
                }
                reports
            } else {
                let name = args.identity.expect("clap enforces the target group");
                let report = if PROPERTY_CHECKS.contains(&name.as_str()) {
                    property_check(&name, args.order.unwrap_or(identities::DEFAULT_SERIES_RANGE))?
                } else {
                    let desc = identities::lookup(&name)?;
                    let range = match desc.comparison {
                        identities::Comparison::SeriesSeries => args.order,
                        identities::Comparison::SeriesOracle => args.oracle_max,
                    }
                    .unwrap_or(desc.default_range);
                    identities::verify_descriptor(&desc, range)
                };
                vec![report]
            };
            return print_reports(out, &reports);
        }
        Command::Hrr { n, terms } => {
            let exact = qfunctions::sigma_mex_series(n as usize).coeffs()[n as usize].clone();
            writeln!(out, "k,partial_sum,rounded,residual")?;
            for k in 1..=terms {
                let r = asymptotics::hrr_sigma_mex(n, k)?;
                writeln!(out, "{},{:.6},{},{:.6}", k, r.partial_sum, r.rounded, r.residual)?;
            }
            writeln!(out, "exact,{exact}")?;
        }
        Command::Asym { kind, n } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            let order = n as usize;
            let (kind, exact) = match kind {
                AsymArg::SigmaMex => (AsymKind::SigmaMex, qfunctions::sigma_mex_series(order)),
                AsymArg::SigmaDMex => (
                    AsymKind::SigmaDMex,
                    qfunctions::sigma_d_mex_series(order, Form::Canonical)?,
                ),
                AsymArg::SigmaL => (AsymKind::SigmaL, qfunctions::sigma_l_series(order)),
            };
            let exact = &exact.coeffs()[order];
            let approx = asymptotics::asym_value(kind, n);
            let ratio = num_traits::ToPrimitive::to_f64(exact).unwrap_or(f64::NAN) / approx;
            writeln!(out, "n,exact,asymptotic,ratio")?;
            writeln!(out, "{n},{exact},{approx:.6e},{ratio:.6}")?;
        }
        Command::Tauberian { t, order } => {
            if !(t > 0.0 && t <= 0.25) {
                return Err(CliError::Usage(format!("--t must lie in (0, 0.25], got {t}")));
            }
            let order = order.unwrap_or_else(|| recommended_order(t));
            let tauberian = asymptotics::tauberian_ratio(t, order)?;
            let eta = asymptotics::eta_ratio(t, order)?;
            let zagier = asymptotics::zagier_error(t)?;
            writeln!(out, "t,order,tauberian_ratio,eta_ratio,zagier_error")?;
            writeln!(out, "{t},{order},{tauberian:.6},{eta:.6},{zagier:.3e}")?;
        }
        Command::Refine { kind, index, order, format } => {
            let series = qfunctions::refined_series(kind, index, order)?;
            let name = format!("refined-{kind:?}-{index}").to_lowercase();
            write_series(out, &name, Form::Canonical, &series, format)?;
        }
        Command::Export { out: path, order } => {
            let mut records = Vec::new();
            for (name, forms) in SERIES_NAMES {
                for &form in *forms {
                    let named = qfunctions::build(name, form, order)?;
                    records.push(OutputRecord::new(name, form, &named.series));
                }
            }
            let body = serde_json::to_string_pretty(&records).expect("records serialize");
            fs::write(&path, body + "\n")?;
            writeln!(out, "wrote {} series to {}", records.len(), path.display())?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("excludant").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn series_csv() {
        let (code, out, _) = run_capture(&["series", "sigma-d-mex", "--order", "7", "--format", "csv"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "n,value\n0,1\n1,2\n2,1\n3,4\n4,3\n5,4\n6,8\n7,8\n");
    }

    #[test]
    fn series_json() {
        let (code, out, _) = run_capture(&["series", "sigma-d-moex", "--order", "4", "--form", "alt2", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let rec: OutputRecord = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(rec.name, "sigma-d-moex");
        assert_eq!(rec.form, Form::Alt2);
        assert_eq!(rec.coeffs, ["1", "3", "1", "4", "6"]);
    }

    #[test]
    fn usage_errors() {
        for args in [
            vec!["verify", "--identity", "thm-sigma-d-mex", "--order", "-1"],
            vec!["verify"],
            vec!["verify", "--all", "--identity", "euler-identity"],
            vec!["frobnicate"],
            vec!["series", "sigma-d-mex", "--order", "5", "--form", "alt2"],
            vec!["series", "no-such-series", "--order", "5"],
            vec!["verify", "--identity", "no-such-identity"],
            vec!["refine", "mex", "--index", "0", "--order", "5"],
            vec!["tauberian", "--t", "0.1", "--order", "10"],
            vec!["asym", "--kind", "sigma-d-mex", "--n", "0"],
        ] {
            let (code, _, err) = run_capture(&args);
            assert_eq!(code, EXIT_USAGE, "{args:?}");
            assert!(!err.is_empty(), "{args:?}");
        }
    }

    #[test]
    fn oracle_and_refine() {
        assert_eq!(run_capture(&["oracle", "mex", "--n", "3"]).1, "6\n");
        assert_eq!(run_capture(&["oracle", "mex", "--n", "3", "--distinct"]).1, "4\n");
        assert_eq!(run_capture(&["oracle", "d2", "--n", "3"]).1, "6\n");
        let (code, out, _) = run_capture(&["refine", "mex", "--index", "1", "--order", "5"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "n,value\n0,1\n1,0\n2,1\n3,1\n4,1\n5,2\n");
    }

    #[test]
    fn verify_single() {
        let (code, out, _) = run_capture(&["verify", "--identity", "euler-identity", "--order", "50"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "PASS euler-identity (range 50)\n");
        let (code, out, _) = run_capture(&["verify", "--identity", "positivity", "--order", "60"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("PASS positivity"));
    }

    #[test]
    fn hrr_and_asym_output() {
        let (code, out, _) = run_capture(&["hrr", "--n", "3", "--terms", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("k,partial_sum,rounded,residual\n1,"));
        assert!(out.ends_with("exact,6\n"));
        let (code, out, _) = run_capture(&["asym", "--kind", "sigma-d-mex", "--n", "3"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\n3,4,"));
    }
}
