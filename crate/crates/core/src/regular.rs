//! `d(n)` as a 2-regular sequence.
//!
//! Four linear identities determine every `d(n)` from `d(0)`:
//!
//! ```text
//! d(2n+1) = d(2n)
//! d(4n+2) = 3·d(2n) − d(4n)
//! d(8n)   = −d(2n) + 2·d(4n)
//! d(8n+4) = 4·d(2n) − d(4n)
//! ```
//!
//! This module evaluates them two ways: a memoized recursion over the
//! identities, and a 2×2 matrix linear representation on the state
//! `v(n) = (d(2n), d(4n))`, whose matrices are derived from the identity
//! table rather than written by hand. [`verify_remark`] audits the table
//! against [`d_fast`].

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::continuant::d_fast;
use crate::verify::{Counterexample, IdentityReport, Tally};

/// `d(scale·n + offset) = Σ coeff · d(term_scale · n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Identity {
    pub name: &'static str,
    pub scale: u64,
    pub offset: u64,
    pub terms: &'static [(i64, u64)],
}

impl Identity {
    /// Smallest index `scale·n + offset` for which this identity is applied
    /// to the given `n`.
    pub fn lhs_index(&self, n: u64) -> u64 {
        self.scale * n + self.offset
    }

    fn matches(&self, index: u64) -> Option<u64> {
        (index % self.scale == self.offset).then(|| index / self.scale)
    }

    fn rhs<F: FnMut(u64) -> BigInt>(&self, n: u64, mut d: F) -> BigInt {
        self.terms
            .iter()
            .map(|&(c, s)| BigInt::from(c) * d(s * n))
            .sum()
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

pub const TWO_REGULAR_IDENTITIES: [Identity; 4] = [
    Identity {
        name: "d(2n+1) = d(2n)",
        scale: 2,
        offset: 1,
        terms: &[(1, 2)],
    },
    Identity {
        name: "d(4n+2) = 3d(2n) - d(4n)",
        scale: 4,
        offset: 2,
        terms: &[(3, 2), (-1, 4)],
    },
    Identity {
        name: "d(8n) = -d(2n) + 2d(4n)",
        scale: 8,
        offset: 0,
        terms: &[(-1, 2), (2, 4)],
    },
    Identity {
        name: "d(8n+4) = 4d(2n) - d(4n)",
        scale: 8,
        offset: 4,
        terms: &[(4, 2), (-1, 4)],
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("index {index} is neither a base case nor reduced by any identity")]
    Uncovered { index: u64 },
    #[error("negative readout {value} at index {index}")]
    NegativeReadout { index: u64, value: BigInt },
}

/// Memoized evaluator of `d(n)` using only [`TWO_REGULAR_IDENTITIES`] and a set
/// of base values taken from [`d_fast`].
///
/// The memo table is owned by the evaluator; use one evaluator per thread.
#[derive(Debug, Clone)]
pub struct RecurrenceEvaluator {
    memo: HashMap<u64, BigInt>,
}

impl RecurrenceEvaluator {
    pub const DEFAULT_BASES: [u64; 3] = [0, 2, 4];

    pub fn new() -> Self {
        Self::with_bases(&Self::DEFAULT_BASES)
    }

    pub fn with_bases(bases: &[u64]) -> Self {
        let memo = bases
            .iter()
            .map(|&b| (b, BigInt::from(d_fast(&BigUint::from(b)))))
            .collect();
        RecurrenceEvaluator { memo }
    }

    pub fn eval(&mut self, n: u64) -> Result<BigUint, RecurrenceError> {
        let value = self.eval_signed(n)?;
        match value.sign() {
            Sign::Minus => Err(RecurrenceError::NegativeReadout { index: n, value }),
            _ => Ok(value.magnitude().clone()),
        }
    }

    fn eval_signed(&mut self, n: u64) -> Result<BigInt, RecurrenceError> {
        if let Some(v) = self.memo.get(&n) {
            return Ok(v.clone());
        }
        let (identity, m) = TWO_REGULAR_IDENTITIES
            .iter()
            .find_map(|id| id.matches(n).map(|m| (id, m)))
            .ok_or(RecurrenceError::Uncovered { index: n })?;
        let mut value = BigInt::zero();
        for &(c, s) in identity.terms {
            let index = s * m;
            if index >= n {
                return Err(RecurrenceError::Uncovered { index: n });
            }
            value += BigInt::from(c) * self.eval_signed(index)?;
        }
        self.memo.insert(n, value.clone());
        Ok(value)
    }
}

impl Default for RecurrenceEvaluator {
    fn default() -> Self {
        Self::new()
    }
}

/// `d(n)` from the identities alone, with fresh memo state.
pub fn d_recurrence(n: u64) -> Result<BigUint, RecurrenceError> {
    RecurrenceEvaluator::new().eval(n)
}

pub type Vector2 = [BigInt; 2];
pub type Matrix2 = [[BigInt; 2]; 2];

/// Linear representation `v(2n+b) = M_b · v(n)` with `v(0) = v0`.
///
/// `d(n)` is read from component `readout` of `v(n >> index_shift)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinRep {
    pub v0: Vector2,
    pub m0: Matrix2,
    pub m1: Matrix2,
    pub readout: usize,
    pub index_shift: u32,
}

impl LinRep {
    /// The state vector `v(n)`, one matrix-vector product per bit of `n`.
    pub fn state(&self, n: &BigUint) -> Vector2 {
        let mut v = self.v0.clone();
        for i in (0..n.bits()).rev() {
            let m = if n.bit(i) { &self.m1 } else { &self.m0 };
            v = [
                &m[0][0] * &v[0] + &m[0][1] * &v[1],
                &m[1][0] * &v[0] + &m[1][1] * &v[1],
            ];
        }
        v
    }
}

/// Basis of the state vector: `v(n) = (d(2n), d(4n))`.
const STATE_SCALES: [u64; 2] = [2, 4];

/// Coefficients of `d(scale·n + offset)` in the state basis, either because
/// it is itself a basis element or because an identity rewrites it.
fn express(scale: u64, offset: u64) -> Option<Vector2> {
    let mut row: Vector2 = [BigInt::zero(), BigInt::zero()];
    if offset == 0 {
        if let Some(pos) = STATE_SCALES.iter().position(|&s| s == scale) {
            row[pos] = 1.into();
            return Some(row);
        }
    }
    let identity = TWO_REGULAR_IDENTITIES
        .iter()
        .find(|id| id.scale == scale && id.offset == offset)?;
    for &(c, s) in identity.terms {
        let pos = STATE_SCALES.iter().position(|&b| b == s)?;
        row[pos] += c;
    }
    Some(row)
}

/// Build the representation from [`TWO_REGULAR_IDENTITIES`].
///
/// Component `i` of `v(2n+b)` is `d(2s·n + s·b)` with `s = STATE_SCALES[i]`;
/// each such index is either a basis element or the left side of an
/// identity whose right side lives in the basis. Since `d(2m+1) = d(2m)`,
/// `d(n)` is component 0 of `v(⌊n/2⌋)`.
pub fn derive_linrep() -> LinRep {
    let matrix = |bit: u64| -> Matrix2 {
        STATE_SCALES.map(|s| {
            express(2 * s, s * bit).unwrap_or_else(|| {
                panic!(
                    "identity table does not close over d({}n+{})",
                    2 * s,
                    s * bit
                )
            })
        })
    };
    let d0 = BigInt::from(d_fast(&BigUint::zero()));
    LinRep {
        v0: [d0.clone(), d0],
        m0: matrix(0),
        m1: matrix(1),
        readout: 0,
        index_shift: 1,
    }
}

/// `d(n)` from a linear representation.
///
/// ```
/// use barry_core::regular::{derive_linrep, linrep_eval};
///
/// let rep = derive_linrep();
/// assert_eq!(linrep_eval(&rep, &3615u32.into()).unwrap(), 68u32.into());
/// ```
pub fn linrep_eval(rep: &LinRep, n: &BigUint) -> Result<BigUint, RecurrenceError> {
    let state = rep.state(&(n >> rep.index_shift));
    let value = state[rep.readout].clone();
    if value.is_negative() {
        let index = u64::try_from(n).unwrap_or(u64::MAX);
        return Err(RecurrenceError::NegativeReadout { index, value });
    }
    Ok(value.magnitude().clone())
}

/// Outcome of checking every identity in [`TWO_REGULAR_IDENTITIES`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemarkReport {
    pub max_n: u64,
    pub identities: Vec<IdentityReport>,
}

impl RemarkReport {
    pub fn is_clean(&self) -> bool {
        self.identities.iter().all(IdentityReport::is_clean)
    }
}

/// Check each identity at every `n` whose left-hand index is at most
/// `max_n`, taking [`d_fast`] as ground truth.
pub fn verify_remark(max_n: u64) -> RemarkReport {
    verify_identities(&TWO_REGULAR_IDENTITIES, max_n)
}

/// [`verify_remark`] for an arbitrary identity table.
pub fn verify_identities(table: &[Identity], max_n: u64) -> RemarkReport {
    let d: Vec<BigInt> = (0..=max_n)
        .map(|i| BigInt::from(d_fast(&BigUint::from(i))))
        .collect();
    let identities = table
        .iter()
        .map(|id| {
            let mut tally = Tally::default();
            let mut n = 0;
            while id.lhs_index(n) <= max_n {
                let lhs = &d[id.lhs_index(n) as usize];
                let rhs = id.rhs(n, |i| d[i as usize].clone());
                tally.record(lhs == &rhs, || Counterexample::new(vec![n], lhs, &rhs));
                n += 1;
            }
            tally.into_report(id.name)
        })
        .collect();
    RemarkReport { max_n, identities }
}
