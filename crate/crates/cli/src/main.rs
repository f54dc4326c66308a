//! `barry`: tables, sequences, OEIS b-files, verification suites and
//! timings for Barry's modified Pascal triangle.
//!
//! Exit status: 0 success, 1 counterexample or b-file mismatch, 2 usage
//! error, 3 I/O or b-file parse error.

mod bench;
mod range;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use barry_core::bfile::{self, BFile, BFileError, SequenceId};
use barry_core::continuant::{continuant, d_fast, run_lengths, PartialQuotients};
use barry_core::regular::{derive_linrep, linrep_eval, RecurrenceEvaluator};
use barry_core::stern::{carlitz_sum, stern};
use barry_core::triangle::{diag_sum_brute, row_sum_brute, row_sum_closed, t_exact, t_parity};
use barry_core::triangle::{rows, RowMode};
use barry_core::verify::{self, Suite};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::range::IndexRange;

#[derive(Debug, Parser)]
#[command(
    name = "barry",
    version,
    about = "Barry's modified Pascal triangle and its parity sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the first ROWS rows of the triangle, one row per line.
    Triangle {
        rows: u64,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Stream "<n> <value>" lines of a sequence over an inclusive range A..B.
    Seq {
        #[arg(value_enum)]
        which: Which,
        range: IndexRange,
        /// Evaluation method; defaults to the fastest one for the sequence.
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Entry kind for t-row.
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Print the continuant of comma-separated partial quotients, e.g. 3,4,5.
    Continuant {
        #[arg(allow_hyphen_values = true)]
        quotients: String,
    },
    /// Print the binary run lengths of N, most significant first.
    Runs { n: BigUint },
    /// Write an OEIS b-file for indices up to MAX_N.
    Bfile {
        seq_id: String,
        max_n: u64,
        /// Output path; standard output if omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Recompute every record of a local b-file and report the first mismatch.
    BfileCompare {
        seq_id: String,
        path: PathBuf,
        /// File index holding the sequence's first term.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        first_index: i64,
    },
    /// Check identity suites over 0..=MAX_N; exit 1 on any counterexample.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4096)]
        max_n: u64,
    },
    /// Median wall-clock time of an evaluation path at several sizes.
    Bench {
        #[arg(value_enum)]
        target: bench::Target,
        /// Comma-separated sizes: values of n, or bit lengths with --bits.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<BigUint>,
        /// Treat sizes as bit lengths of uniformly random inputs.
        #[arg(long)]
        bits: bool,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Parity,
}

impl From<Mode> for RowMode {
    fn from(m: Mode) -> RowMode {
        match m {
            Mode::Exact => RowMode::Exact,
            Mode::Parity => RowMode::Parity,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    D,
    R,
    Stern,
    TRow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Fast,
    Recurrence,
    Linrep,
    Closed,
    Carlitz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Proposition,
    Thm1,
    Thm2,
    Eq2,
    Eq3,
    Carlitz,
    Remark,
    Lucas,
    Glaisher,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        let one = match self {
            SuiteArg::All => return Suite::ALL.to_vec(),
            SuiteArg::Proposition => Suite::Proposition,
            SuiteArg::Thm1 => Suite::Thm1,
            SuiteArg::Thm2 => Suite::Thm2,
            SuiteArg::Eq2 => Suite::Eq2,
            SuiteArg::Eq3 => Suite::Eq3,
            SuiteArg::Carlitz => Suite::Carlitz,
            SuiteArg::Remark => Suite::Remark,
            SuiteArg::Lucas => Suite::Lucas,
            SuiteArg::Glaisher => Suite::Glaisher,
        };
        vec![one]
    }
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<BFileError> for Failure {
    fn from(e: BFileError) -> Self {
        match e {
            BFileError::UnknownSequence(_) => Failure::Usage(e.to_string()),
            _ => Failure::Io(e.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Outcome {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match command {
        Command::Triangle { rows, mode } => cmd_triangle(&mut out, rows, mode)?,
        Command::Seq {
            which,
            range,
            method,
            mode,
        } => cmd_seq(&mut out, which, range, method, mode)?,
        Command::Continuant { quotients } => {
            let q: PartialQuotients = quotients.parse().map_err(|e| {
                Failure::Usage(format!("invalid partial quotients {quotients:?}: {e}"))
            })?;
            let k = continuant(&q.0).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "{k}")?;
            ExitCode::SUCCESS
        }
        Command::Runs { n } => {
            writeln!(out, "{}", run_lengths(&n))?;
            ExitCode::SUCCESS
        }
        Command::Bfile {
            seq_id,
            max_n,
            out: path,
        } => {
            let id: SequenceId = seq_id.parse()?;
            let file = bfile::generate(id, max_n);
            match path {
                Some(p) => file.save(&p)?,
                None => file.write_to(&mut out)?,
            }
            ExitCode::SUCCESS
        }
        Command::BfileCompare {
            seq_id,
            path,
            first_index,
        } => {
            let id: SequenceId = seq_id.parse()?;
            let file = BFile::load(id, &path)?;
            let report = bfile::compare(&file, first_index);
            writeln!(out, "{report}")?;
            if report.is_clean() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Verify { suite, max_n } => {
            if max_n < 1 {
                return Err(Failure::Usage("--max-n must be at least 1".into()));
            }
            let report = verify::run(&suite.suites(), max_n);
            write!(out, "{report}")?;
            if report.is_clean() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Bench {
            target,
            sizes,
            bits,
            reps,
            seed,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            writeln!(out, "{}", bench::HEADER)?;
            for size in sizes {
                let n = if bits {
                    let width = u64::try_from(&size)
                        .map_err(|_| Failure::Usage(format!("bit length {size} too large")))?;
                    bench::random_with_bits(&mut rng, width)
                } else {
                    size.clone()
                };
                let label = if bits {
                    format!("{size}b")
                } else {
                    size.to_string()
                };
                let row = bench::run(target, &n, label, reps);
                writeln!(out, "{row}")?;
                out.flush()?;
            }
            ExitCode::SUCCESS
        }
    };
    out.flush()?;
    Ok(code)
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn cmd_triangle(out: &mut impl Write, count: u64, mode: Mode) -> Outcome {
    if count < 1 {
        return Err(Failure::Usage("ROWS must be at least 1".into()));
    }
    for row in rows(mode.into()).take(count as usize) {
        writeln!(out, "{row}")?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_seq(
    out: &mut impl Write,
    which: Which,
    range: IndexRange,
    method: Option<Method>,
    mode: Mode,
) -> Outcome {
    let bad_pair = |m: Method| {
        Failure::Usage(format!(
            "method {} is not available for {}",
            value_name(m),
            value_name(which)
        ))
    };
    match which {
        Which::D => {
            let method = method.unwrap_or(Method::Fast);
            let mut recurrence = RecurrenceEvaluator::new();
            let rep = derive_linrep();
            for n in range.iter() {
                let v = match method {
                    Method::Brute => diag_sum_brute(n),
                    Method::Fast => d_fast(&n.into()),
                    Method::Recurrence => {
                        recurrence.eval(n).map_err(|e| Failure::Io(e.to_string()))?
                    }
                    Method::Linrep => {
                        linrep_eval(&rep, &n.into()).map_err(|e| Failure::Io(e.to_string()))?
                    }
                    m => return Err(bad_pair(m)),
                };
                writeln!(out, "{n} {v}")?;
            }
        }
        Which::R => {
            let method = method.unwrap_or(Method::Closed);
            for n in range.iter() {
                let v = match method {
                    Method::Brute => row_sum_brute(n),
                    Method::Closed => row_sum_closed(&n.into()),
                    m => return Err(bad_pair(m)),
                };
                writeln!(out, "{n} {v}")?;
            }
        }
        Which::Stern => {
            let method = method.unwrap_or(Method::Fast);
            for n in range.iter() {
                let v = match method {
                    Method::Fast => stern(&n.into()),
                    // Carlitz's sum gives s(n+1); s(0) = 0 is the base value
                    Method::Carlitz if n == 0 => BigUint::default(),
                    Method::Carlitz => carlitz_sum(n - 1),
                    m => return Err(bad_pair(m)),
                };
                writeln!(out, "{n} {v}")?;
            }
        }
        Which::TRow => {
            let method = method.unwrap_or(match mode {
                Mode::Exact => Method::Brute,
                Mode::Parity => Method::Fast,
            });
            let entry: fn(u64, u64) -> BigUint = match (mode, method) {
                (Mode::Exact, Method::Brute) => |n, k| t_exact(n, k).expect("k <= n"),
                (Mode::Parity, Method::Brute) => {
                    |n, k| BigUint::from(t_exact(n, k).expect("k <= n").bit(0) as u8)
                }
                (Mode::Parity, Method::Fast) => {
                    |n, k| BigUint::from(t_parity(n, k).expect("k <= n") as u8)
                }
                (_, m) => return Err(bad_pair(m)),
            };
            for n in range.iter() {
                write!(out, "{n}")?;
                for k in 0..=n {
                    write!(out, " {}", entry(n, k))?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
