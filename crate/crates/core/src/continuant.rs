//! Binary run lengths and continuants.
//!
//! The diagonal sum `d(n)` equals the continuant of the run lengths of the
//! binary expansion of `n`, which gives an evaluation path linear in the
//! bit length of `n` rather than in `n` itself.

use std::fmt;
use std::mem;
use std::num::ParseIntError;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::DomainError;

/// Lengths of the maximal blocks of equal bits in a binary expansion,
/// most significant block first.
///
/// For `n ≥ 1` the first block is a block of ones and blocks alternate;
/// `n = 0` has no blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RunLengths {
    lengths: Vec<u64>,
    source_even: bool,
}

impl RunLengths {
    pub fn of(n: &BigUint) -> Self {
        let bits = n.bits();
        let mut lengths = Vec::new();
        let mut i = bits;
        while i > 0 {
            let value = n.bit(i - 1);
            let mut len = 0;
            while i > 0 && n.bit(i - 1) == value {
                len += 1;
                i -= 1;
            }
            lengths.push(len);
        }
        RunLengths {
            lengths,
            source_even: !n.bit(0),
        }
    }

    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// True when the source integer was even, i.e. the last block is zeros
    /// (or there are no blocks at all).
    pub fn source_is_even(&self) -> bool {
        self.source_even
    }

    /// Rebuild the integer by laying the blocks back down, ones first.
    pub fn to_nat(&self) -> BigUint {
        let mut n = BigUint::zero();
        for (i, &len) in self.lengths.iter().enumerate() {
            n <<= len;
            if i % 2 == 0 {
                n += (BigUint::one() << len) - 1u32;
            }
        }
        n
    }

    pub fn continuant(&self) -> BigUint {
        continuant_unchecked(&self.lengths)
    }
}

impl fmt::Display for RunLengths {
    /// Comma-separated decimal lengths, e.g. `3,4,5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.lengths)
    }
}

fn write_csv(f: &mut fmt::Formatter<'_>, values: &[u64]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// A sequence of partial quotients as written on the command line
/// (`3,4,5`; the empty string is the empty sequence).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PartialQuotients(pub Vec<u64>);

impl FromStr for PartialQuotients {
    type Err = ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(PartialQuotients(Vec::new()));
        }
        s.split(',')
            .map(|part| part.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map(PartialQuotients)
    }
}

impl fmt::Display for PartialQuotients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

/// Run lengths of the binary expansion of `n`, most significant first.
///
/// ```
/// use barry_core::continuant::run_lengths;
///
/// // 3615 = 0b111000011111
/// assert_eq!(run_lengths(&3615u32.into()).lengths(), &[3, 4, 5]);
/// assert!(run_lengths(&0u32.into()).is_empty());
/// ```
pub fn run_lengths(n: &BigUint) -> RunLengths {
    RunLengths::of(n)
}

/// The continuant `K(m₀, …, m_k)`, i.e. the numerator of the continued
/// fraction `[m₀; m₁, …, m_k]`, with `K() = 1`.
///
/// Uses `K_j = m_j·K_{j−1} + K_{j−2}` with two rolling accumulators.
pub fn continuant(quotients: &[u64]) -> Result<BigUint, DomainError> {
    if let Some(position) = quotients.iter().position(|&m| m == 0) {
        return Err(DomainError::ZeroPartialQuotient { position });
    }
    Ok(continuant_unchecked(quotients))
}

fn continuant_unchecked(quotients: &[u64]) -> BigUint {
    let mut prev = BigUint::zero(); // K_{-2}
    let mut cur = BigUint::one(); // K_{-1}
    for &m in quotients {
        let next = &cur * m + &prev;
        prev = mem::replace(&mut cur, next);
    }
    cur
}

/// `d(n)` as the continuant of the run lengths of `n`.
///
/// ```
/// use barry_core::continuant::d_fast;
///
/// assert_eq!(d_fast(&6u32.into()), 3u32.into());
/// assert_eq!(d_fast(&3615u32.into()), 68u32.into());
/// ```
pub fn d_fast(n: &BigUint) -> BigUint {
    RunLengths::of(n).continuant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    use crate::triangle::diag_sum_brute;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Numerator of `[m₀; m₁, …, m_k]` by exact rational evaluation from
    /// the tail. Consecutive continuants are coprime, so the reduced
    /// numerator is the continuant.
    fn cf_numerator(m: &[u64]) -> BigUint {
        let Some((&last, init)) = m.split_last() else {
            return BigUint::one();
        };
        let mut x = BigRational::from_integer(BigInt::from(last));
        for &a in init.iter().rev() {
            x = BigRational::from_integer(BigInt::from(a)) + x.recip();
        }
        x.numer().to_biguint().unwrap()
    }

    #[test]
    fn run_length_examples() {
        assert_eq!(run_lengths(&big(3615)).lengths(), &[3, 4, 5]);
        assert_eq!(run_lengths(&big(1)).lengths(), &[1]);
        assert_eq!(run_lengths(&big(0)).lengths(), &[] as &[u64]);
        assert_eq!(run_lengths(&big(6)).lengths(), &[2, 1]);
        assert!(run_lengths(&big(6)).source_is_even());
        assert!(!run_lengths(&big(3615)).source_is_even());
        assert_eq!(run_lengths(&big(3615)).to_string(), "3,4,5");
    }

    #[test]
    fn continuant_examples() {
        assert_eq!(continuant(&[3, 4, 5]).unwrap(), big(68));
        assert_eq!(cf_numerator(&[3, 4, 5]), big(68));
        assert_eq!(continuant(&[2, 1]).unwrap(), big(3));
        assert_eq!(cf_numerator(&[2, 1]), big(3));
        assert_eq!(continuant(&[]).unwrap(), big(1));
        assert_eq!(continuant(&[7]).unwrap(), big(7));
        assert_eq!(
            continuant(&[2, 0, 3]),
            Err(DomainError::ZeroPartialQuotient { position: 1 })
        );
    }

    #[test]
    fn d_fast_examples() {
        assert_eq!(d_fast(&big(6)), big(3));
        assert_eq!(d_fast(&big(0)), big(1));
        assert_eq!(d_fast(&big(8)), big(4));
        assert_eq!(d_fast(&big(3615)), diag_sum_brute(3615));
    }

    #[test]
    fn all_ones_gives_fibonacci() {
        let (mut f_k, mut f_k1) = (BigUint::zero(), BigUint::one()); // F(0), F(1)
        for k in 0..=300usize {
            assert_eq!(continuant(&vec![1; k]).unwrap(), f_k1, "k = {k}");
            let next = &f_k + &f_k1;
            f_k = mem::replace(&mut f_k1, next);
        }
    }

    #[test]
    fn parse_partial_quotients() {
        assert_eq!(
            "3,4,5".parse::<PartialQuotients>().unwrap().0,
            vec![3, 4, 5]
        );
        assert_eq!(" 3, 4 ".parse::<PartialQuotients>().unwrap().0, vec![3, 4]);
        assert!("".parse::<PartialQuotients>().unwrap().0.is_empty());
        assert!("3,-1".parse::<PartialQuotients>().is_err());
        assert!("3,,4".parse::<PartialQuotients>().is_err());
        assert_eq!(PartialQuotients(vec![1, 2]).to_string(), "1,2");
    }

    proptest! {
        #[test]
        fn continuant_matches_rational_oracle(m in prop::collection::vec(1u64..50, 0..12)) {
            prop_assert_eq!(continuant(&m).unwrap(), cf_numerator(&m));
        }

        #[test]
        fn continuant_is_reversal_invariant(m in prop::collection::vec(1u64..1000, 0..20)) {
            let rev: Vec<u64> = m.iter().rev().copied().collect();
            prop_assert_eq!(continuant(&m).unwrap(), continuant(&rev).unwrap());
        }

        #[test]
        fn run_lengths_round_trip(n in any::<u128>()) {
            let n = BigUint::from(n);
            let runs = run_lengths(&n);
            prop_assert!(runs.lengths().iter().all(|&m| m >= 1));
            prop_assert_eq!(runs.lengths().iter().sum::<u64>(), n.bits());
            prop_assert_eq!(runs.to_nat(), n);
        }
    }
}
