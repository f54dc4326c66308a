//! Wall-clock timings of the fast and brute-force evaluation paths.

use std::fmt;
use std::time::{Duration, Instant};

use barry_core::continuant::d_fast;
use barry_core::stern::stern;
use barry_core::triangle::{diag_sum_brute, row_sum_brute, row_sum_closed};
use clap::ValueEnum;
use num_bigint::{BigUint, RandBigInt};
use rand_chacha::ChaCha8Rng;

/// Largest `n` the linear-time targets will accept.
pub const BRUTE_LIMIT: u64 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    DFast,
    DBrute,
    Stern,
    RowsumClosed,
    RowsumBrute,
}

impl Target {
    fn is_brute(self) -> bool {
        matches!(self, Target::DBrute | Target::RowsumBrute)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

/// Uniform random integer with exactly `bits` bits (top bit set).
pub fn random_with_bits(rng: &mut ChaCha8Rng, bits: u64) -> BigUint {
    if bits == 0 {
        return BigUint::default();
    }
    let top = BigUint::from(1u8) << (bits - 1);
    top.clone() + rng.gen_biguint_below(&top)
}

pub enum Outcome {
    Timed { median: Duration, reps: usize },
    Refused(String),
}

pub struct Row {
    pub target: Target,
    pub size: String,
    pub input_bits: u64,
    pub outcome: Outcome,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<14} {:>12} {:>10}  ",
            self.target, self.size, self.input_bits
        )?;
        match &self.outcome {
            Outcome::Timed { median, reps } => {
                write!(
                    f,
                    "{:>14.3} us  (median of {reps})",
                    median.as_secs_f64() * 1e6
                )
            }
            Outcome::Refused(why) => write!(f, "refused: {why}"),
        }
    }
}

pub const HEADER: &str = "target                 size  inputbits          median";

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    samples[samples.len() / 2]
}

/// Time `target` at `n`, `reps` times.
pub fn run(target: Target, n: &BigUint, size: String, reps: usize) -> Row {
    let input_bits = n.bits();
    let refuse = |why: String| Row {
        target,
        size: size.clone(),
        input_bits,
        outcome: Outcome::Refused(why),
    };
    let small = u64::try_from(n).ok();
    if target.is_brute() {
        match small {
            Some(v) if v <= BRUTE_LIMIT => {}
            _ => {
                return refuse(format!(
                    "{target} costs O(n) parity tests; n has {input_bits} bits (limit n <= 2^30)"
                ))
            }
        }
    }
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        match target {
            Target::DFast => drop(std::hint::black_box(d_fast(n))),
            Target::Stern => drop(std::hint::black_box(stern(n))),
            Target::RowsumClosed => drop(std::hint::black_box(row_sum_closed(n))),
            Target::DBrute => drop(std::hint::black_box(diag_sum_brute(small.unwrap()))),
            Target::RowsumBrute => drop(std::hint::black_box(row_sum_brute(small.unwrap()))),
        }
        samples.push(start.elapsed());
    }
    Row {
        target,
        size,
        input_bits,
        outcome: Outcome::Timed {
            reps: samples.len(),
            median: median(samples),
        },
    }
}
