use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use permdiag::diagram::build_diagram;
use permdiag::dyck::{path_features, DyckPath, PathFeatures};
use permdiag::involution::phi_traced;
use permdiag::lab::verify::{run_suite, Suite};
use permdiag::lab::{distribution, CountTable, Jobs, MAX_SWEEP_N};
use permdiag::perm::stat;
use permdiag::{Error, PatternClass, PatternKind, Permutation};

/// Permutation diagrams, the a_m / b_m statistics and the involution
/// exchanging them.
#[derive(Debug, Parser)]
#[command(name = "permdiag", version)]
struct Cli {
    /// Worker threads for exhaustive sweeps (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the ranked diagram of a permutation as JSON.
    Diagram {
        #[arg(value_parser = parse_perm)]
        perm: Permutation,
    },
    /// Apply the involution phi_m.
    Phi {
        #[arg(value_parser = parse_perm)]
        perm: Permutation,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        m: u32,
        /// Also print the low squares, tail rows and the r, c, e, c' vectors.
        #[arg(long)]
        trace: bool,
    },
    /// Print a_m and b_m as JSON (all m from 2 to n unless --m is given).
    Stats {
        #[arg(value_parser = parse_perm)]
        perm: Permutation,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        m: Option<u32>,
    },
    /// Print returns, high peaks, valleys and qualifying tunnels of a U/D word as JSON.
    Dyck {
        #[arg(value_parser = parse_path)]
        word: DyckPath,
    },
    /// Tabulate the distribution of a_m and/or b_m over S_n.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=MAX_SWEEP_N as i64))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        m: u32,
        #[arg(long, value_enum, default_value_t = StatArg::Both)]
        stat: StatArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StatArg {
    A,
    B,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_path(s: &str) -> Result<DyckPath, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

#[derive(Serialize)]
struct StatRecord {
    m: usize,
    a: usize,
    b: usize,
}

#[derive(Serialize)]
struct StatsOutput {
    perm: Permutation,
    n: usize,
    stats: Vec<StatRecord>,
}

#[derive(Serialize)]
struct DyckOutput {
    path: String,
    semilength: usize,
    #[serde(flatten)]
    features: PathFeatures,
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

enum Failure {
    Usage(String),
    Internal(String),
    ChecksFailed,
}

fn run(cli: Cli) -> Result<String, Failure> {
    let jobs = cli.jobs.map(Jobs::new).unwrap_or_default();
    let internal = |e: Error| Failure::Internal(e.to_string());
    match cli.command {
        Command::Diagram { perm } => Ok(format!("{}\n", build_diagram(&perm).to_json())),
        Command::Phi { perm, m, trace } => {
            let t = phi_traced(&perm, m as usize).map_err(internal)?;
            let mut out = format!("{}\n", t.image);
            if trace {
                let low: Vec<String> = t
                    .data
                    .low_squares
                    .iter()
                    .map(|(r, c)| format!("({r},{c})"))
                    .collect();
                out.push_str(&format!("low squares: {}\n", low.join(" ")));
                out.push_str(&format!("tail rows: {}\n", join(&t.data.tail_rows, " ")));
                out.push_str(&format!("r = ({})\n", join(&t.arrange.r, ",")));
                out.push_str(&format!("c = ({})\n", join(&t.arrange.c, ",")));
                out.push_str(&format!("e = ({})\n", join(&t.arrange.e, ",")));
                out.push_str(&format!("c' = ({})\n", join(&t.arrange.c_prime, ",")));
            }
            Ok(out)
        }
        Command::Stats { perm, m } => {
            let ms = match m {
                Some(m) => m as usize..=m as usize,
                None => 2..=perm.len().max(2),
            };
            let stats = ms
                .map(|m| StatRecord {
                    m,
                    a: stat(&perm, PatternClass::a(m).unwrap()),
                    b: stat(&perm, PatternClass::b(m).unwrap()),
                })
                .collect();
            let out = StatsOutput {
                n: perm.len(),
                perm,
                stats,
            };
            Ok(format!("{}\n", serde_json::to_string(&out).unwrap()))
        }
        Command::Dyck { word } => {
            let out = DyckOutput {
                path: word.to_string(),
                semilength: word.semilength(),
                features: path_features(&word),
            };
            Ok(format!("{}\n", serde_json::to_string(&out).unwrap()))
        }
        Command::Enumerate { n, m, stat, format } => {
            let (n, m) = (n as usize, m as usize);
            let kinds: &[PatternKind] = match stat {
                StatArg::A => &[PatternKind::A],
                StatArg::B => &[PatternKind::B],
                StatArg::Both => &[PatternKind::A, PatternKind::B],
            };
            let mut table = CountTable::default();
            for &kind in kinds {
                table.extend(distribution(n, m, kind, jobs).map_err(|e| Failure::Usage(e.to_string()))?);
            }
            let table = table.interleaved();
            Ok(match format {
                Format::Csv => table.to_csv(),
                Format::Json => format!("{}\n", table.to_json()),
            })
        }
        Command::Verify { suite, n_max } => {
            let reports = run_suite(suite, n_max, jobs).map_err(|e| match e {
                Error::LimitExceeded { .. } => Failure::Usage(e.to_string()),
                other => Failure::Internal(other.to_string()),
            })?;
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.render());
            }
            if reports.iter().all(|r| r.passed()) {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::ChecksFailed)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::ChecksFailed) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
    }
}
