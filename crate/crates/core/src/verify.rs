//! Range checks of the identities that tie the evaluation paths together.
//!
//! Each suite reports, per identity, how many instances were checked, how
//! many held, and the first failing instance in index order. Work is split
//! across rayon workers; reports do not depend on the worker count.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::continuant::{d_fast, run_lengths};
use crate::regular::{derive_linrep, linrep_eval, verify_remark, RecurrenceEvaluator};
use crate::stern::{carlitz_sum, stern};
use crate::triangle::{
    binom_parity, diag_sum_brute, row_sum_brute, row_sum_closed, t_exact, t_parity,
};

/// A failing instance: its index (one or more coordinates) and both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub index: Vec<u64>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(index: Vec<u64>, lhs: &impl fmt::Display, rhs: &impl fmt::Display) -> Self {
        Counterexample {
            index,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.index.iter().map(u64::to_string).collect();
        write!(
            f,
            "at ({}): lhs = {}, rhs = {}",
            coords.join(", "),
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub checked: u64,
    pub passed: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub fn is_clean(&self) -> bool {
        self.checked == self.passed
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.is_clean() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status}  {}  {}/{}",
            self.name, self.passed, self.checked
        )?;
        if let Some(ce) = &self.first_counterexample {
            write!(f, "  first counterexample {ce}")?;
        }
        Ok(())
    }
}

/// Running count of checks, merged in index order.
#[derive(Debug, Clone, Default)]
pub struct Tally {
    checked: u64,
    failed: u64,
    first: Option<Counterexample>,
}

impl Tally {
    pub fn record(&mut self, ok: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(counterexample());
            }
        }
    }

    /// Combine with a tally covering later indices.
    pub fn then(self, later: Tally) -> Tally {
        Tally {
            checked: self.checked + later.checked,
            failed: self.failed + later.failed,
            first: self.first.or(later.first),
        }
    }

    pub fn into_report(self, name: impl Into<String>) -> IdentityReport {
        IdentityReport {
            name: name.into(),
            checked: self.checked,
            passed: self.checked - self.failed,
            first_counterexample: self.first,
        }
    }
}

/// Run `unit` for each value in `range` in parallel and merge the tallies
/// in range order.
fn tally_range<F>(range: std::ops::RangeInclusive<u64>, unit: F) -> Tally
where
    F: Fn(u64, &mut Tally) + Sync + Send,
{
    range
        .into_par_iter()
        .fold(Tally::default, |mut t, n| {
            unit(n, &mut t);
            t
        })
        .reduce(Tally::default, Tally::then)
}

fn compare<T: PartialEq + fmt::Display>(t: &mut Tally, index: Vec<u64>, lhs: T, rhs: T) {
    t.record(lhs == rhs, || Counterexample::new(index, &lhs, &rhs));
}

/// `t_parity(n, k) = t_exact(n, k) mod 2` for `0 ≤ k ≤ n ≤ max_n`.
pub fn check_parity_reduction(max_n: u64) -> IdentityReport {
    tally_range(0..=max_n, |n, t| {
        for k in 0..=n {
            let fast = t_parity(n, k).expect("k <= n") as u8;
            let exact = t_exact(n, k).expect("k <= n").bit(0) as u8;
            compare(t, vec![n, k], fast, exact);
        }
    })
    .into_report("T(n,k) mod 2 = parity reduction")
}

/// `binom_parity(n, k) = C(n, k) mod 2` for `0 ≤ k ≤ n ≤ max_n`, with
/// `C(n, k)` computed exactly.
pub fn check_lucas(max_n: u64) -> IdentityReport {
    tally_range(0..=max_n, |n, t| {
        let mut c = BigUint::one();
        for k in 0..=n {
            compare(t, vec![n, k], binom_parity(n, k) as u8, c.bit(0) as u8);
            c = c * (n - k) / (k + 1);
        }
    })
    .into_report("C(n,k) mod 2 = [k AND NOT n = 0]")
}

/// `Σ_k (C(n, k) mod 2) = 2^{popcount(n)}` for `n ≤ max_n`.
pub fn check_glaisher(max_n: u64) -> IdentityReport {
    tally_range(0..=max_n, |n, t| {
        let odd = (0..=n).filter(|&k| binom_parity(n, k)).count() as u64;
        compare(t, vec![n], odd, 1u64 << n.count_ones());
    })
    .into_report("#odd C(n,k) = 2^s2(n)")
}

/// `d_fast(n) = diag_sum_brute(n)` for `n ≤ max_n`.
pub fn check_d_fast_vs_brute(max_n: u64) -> IdentityReport {
    tally_range(0..=max_n, |n, t| {
        compare(t, vec![n], d_fast(&n.into()), diag_sum_brute(n));
    })
    .into_report("d_fast(n) = diag_sum_brute(n)")
}

/// `d_fast(n) = d_recurrence(n)` for `n ≤ max_n`.
pub fn check_d_fast_vs_recurrence(max_n: u64) -> IdentityReport {
    (0..=max_n)
        .into_par_iter()
        .fold(
            || (RecurrenceEvaluator::new(), Tally::default()),
            |(mut ev, mut t), n| {
                let rec = ev
                    .eval(n)
                    .map(|v| v.to_string())
                    .unwrap_or_else(|e| e.to_string());
                compare(&mut t, vec![n], d_fast(&n.into()).to_string(), rec);
                (ev, t)
            },
        )
        .map(|(_, t)| t)
        .reduce(Tally::default, Tally::then)
        .into_report("d_fast(n) = d_recurrence(n)")
}

/// `d_fast(n) = linrep_eval(derive_linrep(), n)` for `n ≤ max_n`.
pub fn check_d_fast_vs_linrep(max_n: u64) -> IdentityReport {
    let rep = derive_linrep();
    tally_range(0..=max_n, |n, t| {
        let n_big = BigUint::from(n);
        let lin = linrep_eval(&rep, &n_big)
            .map(|v| v.to_string())
            .unwrap_or_else(|e| e.to_string());
        compare(t, vec![n], d_fast(&n_big).to_string(), lin);
    })
    .into_report("d_fast(n) = linrep_eval(n)")
}

/// `row_sum_brute(n) = row_sum_closed(n)` for `1 ≤ n ≤ max_n`.
pub fn check_row_sum_closed(max_n: u64) -> IdentityReport {
    tally_range(1..=max_n, |n, t| {
        compare(t, vec![n], row_sum_brute(n), row_sum_closed(&n.into()));
    })
    .into_report("row_sum_brute(n) = row_sum_closed(n)")
}

/// `row_sum_closed(0) = 1 = row_sum_brute(0)`.
pub fn check_r0() -> IdentityReport {
    let mut t = Tally::default();
    compare(
        &mut t,
        vec![0],
        row_sum_closed(&BigUint::zero()),
        BigUint::one(),
    );
    compare(&mut t, vec![0], row_sum_brute(0), BigUint::one());
    t.into_report("r(0) = 1")
}

/// `diag_sum_brute(2n) = diag_sum_brute(2n+1)` for `n ≤ max_n`.
pub fn check_brute_doubling(max_n: u64) -> IdentityReport {
    tally_range(0..=max_n, |n, t| {
        compare(t, vec![n], diag_sum_brute(2 * n), diag_sum_brute(2 * n + 1));
    })
    .into_report("d(2n) = d(2n+1)")
}

/// `d_fast(2n) = d_fast(2n+1)` for `n ≤ max_n`.
pub fn check_fast_doubling(max_n: u64) -> IdentityReport {
    tally_range(0..=max_n, |n, t| {
        compare(
            t,
            vec![n],
            d_fast(&(2 * n).into()),
            d_fast(&(2 * n + 1).into()),
        );
    })
    .into_report("d_fast(2n) = d_fast(2n+1)")
}

/// `d_fast(2n+1) = stern(2n+1)` for `n ≤ max_n`.
pub fn check_odd_stern(max_n: u64) -> IdentityReport {
    tally_range(0..=max_n, |n, t| {
        let odd = BigUint::from(2 * n + 1);
        compare(t, vec![n], d_fast(&odd), stern(&odd));
    })
    .into_report("d_fast(2n+1) = stern(2n+1)")
}

/// For even `n ≤ max_n`, the continuants of the run lengths of `n` and of
/// `n + 1` coincide.
pub fn check_even_odd_continuants(max_n: u64) -> IdentityReport {
    tally_range(0..=max_n / 2, |half, t| {
        let n = 2 * half;
        let even = run_lengths(&n.into()).continuant();
        let odd = run_lengths(&(n + 1).into()).continuant();
        compare(t, vec![n], even, odd);
    })
    .into_report("K(runs(n)) = K(runs(n+1)), n even")
}

/// `carlitz_sum(n) = stern(n+1)` for `n ≤ max_n`.
pub fn check_carlitz(max_n: u64) -> IdentityReport {
    tally_range(0..=max_n, |n, t| {
        compare(t, vec![n], carlitz_sum(n), stern(&(n + 1).into()));
    })
    .into_report("carlitz_sum(n) = stern(n+1)")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
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

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Proposition,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Eq2,
        Suite::Eq3,
        Suite::Carlitz,
        Suite::Remark,
        Suite::Lucas,
        Suite::Glaisher,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Proposition => "proposition",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Eq2 => "eq2",
            Suite::Eq3 => "eq3",
            Suite::Carlitz => "carlitz",
            Suite::Remark => "remark",
            Suite::Lucas => "lucas",
            Suite::Glaisher => "glaisher",
        }
    }

    /// Run every check of this suite over indices up to `max_n`.
    pub fn run(self, max_n: u64) -> SuiteReport {
        let identities = match self {
            Suite::Proposition => vec![check_parity_reduction(max_n)],
            Suite::Thm1 => vec![
                check_d_fast_vs_brute(max_n),
                check_d_fast_vs_recurrence(max_n),
                check_d_fast_vs_linrep(max_n),
            ],
            Suite::Thm2 => vec![check_r0(), check_row_sum_closed(max_n)],
            Suite::Eq2 => vec![check_brute_doubling(max_n)],
            Suite::Eq3 => vec![check_fast_doubling(max_n), check_odd_stern(max_n)],
            Suite::Carlitz => vec![check_carlitz(max_n)],
            Suite::Remark => verify_remark(max_n).identities,
            Suite::Lucas => vec![check_lucas(max_n)],
            Suite::Glaisher => vec![check_glaisher(max_n)],
        };
        SuiteReport {
            suite: self,
            max_n,
            identities,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite {:?}", self.0)
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: u64,
    pub identities: Vec<IdentityReport>,
}

impl SuiteReport {
    pub fn is_clean(&self) -> bool {
        self.identities.iter().all(IdentityReport::is_clean)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (max_n = {})", self.suite, self.max_n)?;
        for id in &self.identities {
            writeln!(f, "  {id}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.suites.iter().all(SuiteReport::is_clean)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for suite in &self.suites {
            write!(f, "{suite}")?;
        }
        let status = if self.is_clean() {
            "all identities hold"
        } else {
            "COUNTEREXAMPLES FOUND"
        };
        writeln!(f, "{status}")
    }
}

pub fn run(suites: &[Suite], max_n: u64) -> VerifyReport {
    VerifyReport {
        suites: suites.iter().map(|s| s.run(max_n)).collect(),
    }
}
