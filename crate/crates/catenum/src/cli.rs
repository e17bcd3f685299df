//! Command-line front end. Exit codes: 0 success, 1 validation failure
//! (`verify` on an invalid alpha, `selftest` on any failed item), 2 usage
//! or capability errors.

use crate::bounds::{
    alpha_from_subset, bounds_report, build_noninterfering, default_split, is_noninterfering,
    sigma_estimate,
};
use crate::census::{
    burnside_count, classify_n3, enumerate_ordered, enumerate_reduced, Budget, Method,
};
use crate::compose::build_table;
use crate::conditions::alpha_check;
use crate::model::AlphaFunction;
use crate::report::{
    table_csv, table_rows, to_json_string, AlphaFile, BoundsJson, CensusResult, ClassifyReport,
    EnumerateConfig, Mode, TableJson, VerifyReport, WitnessReport,
};
use crate::{bruteforce, Error, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "catenum", version, about = "Censuses, verification and bounds for categories with two-morphism hom-sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count valid alpha functions, labeled or up to object relabeling.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Ordered)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Method::Backtrack)]
        method: Method,
        /// Re-check every counted alpha against the category-axiom oracle.
        #[arg(long)]
        certify: bool,
        /// Worker threads. Never affects the output bytes.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        /// Echoed into the report for provenance.
        #[arg(long)]
        seed: Option<u64>,
        /// Output format; only `json` is supported.
        #[arg(long, default_value = "json")]
        output: String,
    },
    /// Check an alpha file against the two validity conditions.
    Verify {
        #[arg(long)]
        alpha: PathBuf,
    },
    /// Exact census bounds and the analytic growth-rate window.
    Bounds {
        #[arg(long)]
        n: usize,
    },
    /// Build a non-interfering triple set and the census lower bound it
    /// witnesses.
    Witness {
        #[arg(long)]
        n: usize,
        /// Block sizes `a,b,c` with a+b+c = n; defaults to the
        /// floor(n/3) split.
        #[arg(long, value_parser = parse_parts)]
        parts: Option<(usize, usize, usize)>,
    },
    /// Export the composition table of an alpha function.
    Table {
        /// Object count for the all-zero alpha (ignored if --alpha names
        /// a file).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        alpha: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// The five reduced classes at n = 3 with their labels.
    Classify {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Re-derive the hardcoded constants and exit nonzero on any mismatch.
    Selftest {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
    },
}

fn parse_parts(raw: &str) -> std::result::Result<(usize, usize, usize), String> {
    let parts: Vec<usize> = raw
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("`{p}` is not an integer")))
        .collect::<std::result::Result<_, _>>()?;
    match parts[..] {
        [a, b, c] => Ok((a, b, c)),
        _ => Err(format!("expected three comma-separated sizes, got {}", parts.len())),
    }
}

fn with_pool<T: Send>(jobs: u64, work: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs as usize)
        .build()
        .map_err(|e| Error::BudgetParse(format!("cannot build a {jobs}-thread pool: {e}")))?;
    Ok(pool.install(work))
}

/// Parses `std::env::args` and runs; the binary is a one-line wrapper
/// around this.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Enumerate { n, mode, method, certify, jobs, seed, output } => {
            if output != "json" {
                return Err(Error::BudgetParse(format!(
                    "unsupported output format `{output}` (only json)"
                )));
            }
            let budget = Budget::from_env()?;
            let config = EnumerateConfig {
                n: *n,
                mode: *mode,
                method: *method,
                certify: *certify,
                seed: *seed,
            };
            let result = with_pool(*jobs, || -> Result<CensusResult> {
                match mode {
                    Mode::Ordered => {
                        let census = enumerate_ordered(*n, *method, *certify, &budget)?;
                        Ok(CensusResult::ordered(&census, config.clone()))
                    }
                    Mode::Reduced => {
                        let census = enumerate_reduced(*n, &budget)?;
                        if *certify {
                            let ordered = enumerate_ordered(*n, *method, true, &budget)?;
                            let orbit_total: u64 =
                                census.classes.iter().map(|c| c.orbit_size).sum();
                            if ordered.count != orbit_total {
                                return Err(Error::OracleMismatch {
                                    alpha: format!(
                                        "orbit total {orbit_total} != ordered count {}",
                                        ordered.count
                                    ),
                                });
                            }
                        }
                        Ok(CensusResult::reduced(&census, config.clone(), *certify))
                    }
                }
            })??;
            print!("{}", to_json_string(&result)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { alpha } => {
            let function = AlphaFile::load(alpha)?;
            let report = alpha_check(&function);
            let json = VerifyReport::new(&report, alpha.display().to_string(), function.n());
            print!("{}", to_json_string(&json)?);
            Ok(if report.valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Bounds { n } => {
            let report = bounds_report(*n);
            let sigma = sigma_estimate(&[]);
            print!("{}", to_json_string(&BoundsJson::new(&report, &sigma))?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { n, parts } => {
            let parts = parts.unwrap_or_else(|| default_split(*n));
            let set = build_noninterfering(*n, parts)?;
            debug_assert!(is_noninterfering(&set));
            let alpha = alpha_from_subset(&set).ok();
            print!("{}", to_json_string(&WitnessReport::new(&set, parts, alpha))?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { n, alpha, format } => {
            let function = match (alpha, n) {
                (Some(path), n) => {
                    let loaded = AlphaFile::load(path)?;
                    if let Some(n) = n {
                        if *n != loaded.n() {
                            return Err(Error::AlphaFile {
                                field: "n",
                                message: format!(
                                    "--n {n} disagrees with the file's n={}",
                                    loaded.n()
                                ),
                            });
                        }
                    }
                    loaded
                }
                (None, Some(n)) => AlphaFunction::zero(*n)?,
                (None, None) => {
                    return Err(Error::AlphaFile {
                        field: "n",
                        message: "pass --n or --alpha".into(),
                    })
                }
            };
            let rows = table_rows(&build_table(&function));
            match format {
                TableFormat::Csv => print!("{}", table_csv(&rows)),
                TableFormat::Json => {
                    let json = TableJson {
                        tool_version: crate::report::TOOL_VERSION,
                        config: crate::report::NConfig { n: function.n() },
                        n: function.n(),
                        rows,
                    };
                    print!("{}", to_json_string(&json)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { n } => {
            if *n != 3 {
                return Err(Error::Classification(format!(
                    "the labeled class table exists only at n=3 (got n={n})"
                )));
            }
            let census = enumerate_reduced(3, &Budget::from_env()?)?;
            let labeled = classify_n3(&census)?;
            print!("{}", to_json_string(&ClassifyReport::new(&labeled))?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest { jobs } => with_pool(*jobs, selftest),
    }
}

/// Re-derives the classification constants and prints one line per item.
fn selftest() -> ExitCode {
    let budget = Budget::default();
    let mut all_ok = true;
    let mut item = |name: &str, ok: bool| {
        println!("{} {name}", if ok { "PASS" } else { "FAIL" });
        all_ok &= ok;
    };

    let ordered: Vec<u64> = (1..=3)
        .map(|n| {
            enumerate_ordered(n, Method::Backtrack, true, &budget)
                .map(|c| c.count)
                .unwrap_or(u64::MAX)
        })
        .collect();
    item("ordered census n=1 is 1", ordered[0] == 1);
    item("ordered census n=2 is 1", ordered[1] == 1);
    item("ordered census n=3 is 18", ordered[2] == 18);
    item(
        "exhaustive scan agrees at n=3",
        enumerate_ordered(3, Method::Exhaustive, false, &budget)
            .map(|c| c.count == 18)
            .unwrap_or(false),
    );

    let reduced2 = enumerate_reduced(2, &budget);
    item(
        "reduced census n=2 is 1",
        reduced2.map(|c| c.count == 1).unwrap_or(false),
    );
    match enumerate_reduced(3, &budget) {
        Ok(census) => {
            item("reduced census n=3 is 5", census.count == 5);
            let mut sizes: Vec<u64> = census.classes.iter().map(|c| c.orbit_size).collect();
            sizes.sort_unstable();
            item("orbit sizes at n=3 are 1+2+3+6+6", sizes == [1, 2, 3, 6, 6]);
            item(
                "orbit sizes sum to the ordered census",
                census.classes.iter().map(|c| c.orbit_size).sum::<u64>() == 18,
            );
            item(
                "Burnside recount agrees at n=3",
                burnside_count(3, &budget).map(|c| c == census.count).unwrap_or(false),
            );
        }
        Err(_) => item("reduced census n=3 is 5", false),
    }

    let brute = bruteforce::two_object_census();
    item("two-object scan covers 2^18 tables", brute.raw_tables == 1 << 18);
    item("two-object reduced class is unique", brute.reduced_classes == 1);
    item("two-object survivors match the composition rules", brute.matches_rules);
    item("two-object survivors have idempotent F", brute.f_idempotent);
    item("two-object survivors close the G loop to F", brute.g_loop_is_f);

    let counts = [(1u64, 1u64), (1, 1), (18, 5)];
    let mut sandwich_ok = true;
    for (n, (ordered_count, reduced_count)) in (1..=3).zip(counts) {
        let b = bounds_report(n);
        let reduced_rat = BigRational::from_integer(BigUint::from(reduced_count).into());
        let upper_rat = BigRational::from_integer(b.upper.clone().into());
        sandwich_ok &= b.lower_reduced <= reduced_rat
            && reduced_rat <= upper_rat
            && b.lower_ordered <= BigUint::from(ordered_count)
            && BigUint::from(ordered_count) <= b.upper;
    }
    item("bound sandwich holds for n=1..3", sandwich_ok);

    println!("selftest: {}", if all_ok { "all items passed" } else { "FAILURES" });
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts_parser() {
        assert_eq!(parse_parts("1,2,3").unwrap(), (1, 2, 3));
        assert!(parse_parts("1,2").is_err());
        assert!(parse_parts("a,b,c").is_err());
    }

    #[test]
    fn cli_parses_spec_invocations() {
        for argv in [
            vec!["catenum", "enumerate", "--n", "3", "--mode", "reduced"],
            vec!["catenum", "enumerate", "--n", "4", "--method", "exhaustive", "--certify", "--jobs", "8", "--seed", "7", "--output", "json"],
            vec!["catenum", "verify", "--alpha", "a.json"],
            vec!["catenum", "bounds", "--n", "3"],
            vec!["catenum", "witness", "--n", "6", "--parts", "2,2,2"],
            vec!["catenum", "table", "--n", "2", "--format", "json"],
            vec!["catenum", "classify", "--n", "3"],
            vec!["catenum", "selftest"],
        ] {
            Cli::try_parse_from(&argv).unwrap_or_else(|e| panic!("{argv:?}: {e}"));
        }
    }

    #[test]
    fn cli_rejects_unknown_flags() {
        assert!(Cli::try_parse_from(["catenum", "enumerate", "--n", "3", "--frobnicate"]).is_err());
        assert!(Cli::try_parse_from(["catenum", "enumerate"]).is_err());
    }
}
