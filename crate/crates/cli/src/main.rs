use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pqfrob::covering::{self, CoveringInstance, NuOutcome};
use pqfrob::harness::{self, ScanOptions, SuiteConfig};
use pqfrob::oracle::{self, DEFAULT_MAX_MODULUS};
use pqfrob::pairmodel::nu_bounds;
use pqfrob::{Error, PrimePair};

#[derive(Parser)]
#[command(
    name = "pqfrob",
    version,
    about = "Frobenius numbers of prime-pair weight sets and non-genera of cyclic actions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Everything known about one prime pair.
    PairInfo { p: i64, q: i64 },
    /// Frobenius number of a coprime generator set.
    Frobenius {
        #[arg(required = true, num_args = 2..)]
        generators: Vec<i64>,
    },
    /// Nonnegative coefficients for `n`, or "none".
    Represent {
        n: i64,
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
    },
    /// Scan all pairs in range and emit CSV.
    Scan {
        #[arg(long)]
        pmax: i64,
        #[arg(long)]
        qmax: i64,
        #[arg(long)]
        oracle: bool,
        /// Also search ν for pairs with pq at most this.
        #[arg(long)]
        nu_cap: Option<i64>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Closed-form and searched largest non-genus for a pair.
    Nu {
        p: i64,
        q: i64,
        #[arg(long)]
        brute: bool,
    },
    /// Divisor weights and non-genera for a square-free odd degree.
    Covering {
        n: i64,
        #[arg(long)]
        nu: bool,
    },
    /// Run the full check suite.
    Verify {
        #[arg(long, default_value_t = 150)]
        pmax: i64,
        #[arg(long, default_value_t = 150)]
        qmax: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Classification grid for 2 < p < q < limit as CSV.
    Grid {
        #[arg(long, default_value_t = 300)]
        limit: i64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

enum Failed {
    Checks,
    Error(Error),
    Io(std::io::Error),
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        Failed::Error(e)
    }
}

impl From<std::io::Error> for Failed {
    fn from(e: std::io::Error) -> Self {
        Failed::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failed::Checks) => ExitCode::from(1),
        Err(Failed::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Input(_) | Error::Overflow(_) => 2,
                Error::Resource(_) => 3,
                Error::Logic(_) => 1,
            })
        }
        Err(Failed::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn emit(text: &str, path: Option<PathBuf>) -> Result<(), Failed> {
    match path {
        Some(path) => {
            fs::write(&path, text)?;
            eprintln!(
                "wrote {} rows to {}",
                text.lines().count().saturating_sub(1),
                path.display()
            );
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn run(command: Command) -> Result<(), Failed> {
    match command {
        Command::PairInfo { p, q } => {
            let pair = PrimePair::new(p, q)?;
            let rec = harness::pair_record(pair, true, None, DEFAULT_MAX_MODULUS)?;
            println!("{}", rec.summary_line());
            print!("{rec}");
            if !rec.all_checks_pass() {
                return Err(Failed::Checks);
            }
        }
        Command::Frobenius { generators } => {
            println!("{}", oracle::frobenius_number(&generators)?);
        }
        Command::Represent { n, gens } => match oracle::represent(n, &gens)? {
            Some(coeffs) => {
                let terms: Vec<String> = coeffs
                    .iter()
                    .zip(&gens)
                    .map(|(c, g)| format!("{c}*{g}"))
                    .collect();
                println!("{n} = {}", terms.join(" + "));
            }
            None => println!("none"),
        },
        Command::Scan {
            pmax,
            qmax,
            oracle,
            nu_cap,
            csv,
            jobs,
        } => {
            let opts = ScanOptions::new(pmax, qmax)
                .with_oracle(oracle)
                .with_nu_cap(nu_cap)
                .with_jobs(jobs);
            let records = harness::scan_pairs(&opts)?;
            emit(&harness::records_to_csv(&records)?, csv)?;
            let failing: Vec<_> = records.iter().filter(|r| !r.all_checks_pass()).collect();
            for rec in &failing {
                let names: Vec<_> = rec
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name)
                    .collect();
                eprintln!("check failure {}: {}", rec.pair, names.join(", "));
            }
            for rec in records.iter().filter(|r| r.oracle_error.is_some()) {
                eprintln!(
                    "skipped oracle {}: {}",
                    rec.pair,
                    rec.oracle_error.as_deref().unwrap_or("")
                );
            }
            if !failing.is_empty() {
                return Err(Failed::Checks);
            }
        }
        Command::Nu { p, q, brute } => {
            let pair = PrimePair::new(p, q)?;
            let rec =
                harness::pair_record(pair, true, brute.then_some(i64::MAX), DEFAULT_MAX_MODULUS)?;
            match rec.nu_formula {
                Some(nu) => println!("formula  {nu}"),
                None => println!("formula  none"),
            }
            if let Some(g) = rec.g_oracle() {
                let (lo, hi) = nu_bounds(&pair, g)?;
                println!("bounds   [{lo}, {hi}]");
            }
            if brute {
                match (rec.nu_brute, &rec.nu_error) {
                    (Some(nu), _) => println!("search   {nu}"),
                    (None, Some(e)) => return Err(Failed::Error(Error::Resource(e.clone()))),
                    (None, None) => println!("search   every genus attained"),
                }
                if let (Some(f), Some(b)) = (rec.nu_formula, rec.nu_brute) {
                    if f != b {
                        eprintln!("formula and search disagree");
                        return Err(Failed::Checks);
                    }
                }
            }
        }
        Command::Covering { n, nu } => {
            let inst = CoveringInstance::new(n)?;
            let primes: Vec<String> = inst.primes().iter().map(i64::to_string).collect();
            let weights: Vec<String> = inst.weights().iter().map(i64::to_string).collect();
            println!("primes   {}", primes.join(" "));
            println!("weights  {}", weights.join(" "));
            println!("g_n      {}", inst.frobenius_number()?);
            let semi = covering::largest_nongenus_semiregular(n)?;
            if semi < 0 {
                println!("semi-regular non-genus {semi} (every genus attained)");
            } else {
                println!("semi-regular non-genus {semi}");
            }
            if nu {
                match covering::nu_cyclic_bruteforce(&inst)? {
                    NuOutcome::NonGenus(v) => println!("ν        {v}"),
                    NuOutcome::AllGeneraAttained => {
                        println!("ν        none (every genus attained)")
                    }
                }
            }
        }
        Command::Verify { pmax, qmax, jobs } => {
            let cfg = SuiteConfig {
                jobs,
                ..SuiteConfig::new(pmax, qmax)
            };
            let report = harness::run_suite_with(&cfg)?;
            println!("{report}");
            if !report.passed() {
                return Err(Failed::Checks);
            }
        }
        Command::Grid { limit, csv } => {
            emit(&harness::classification_grid_csv(limit)?, csv)?;
        }
    }
    Ok(())
}
