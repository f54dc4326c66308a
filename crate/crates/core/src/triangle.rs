//! Barry's modified Pascal triangle
//!
//! ```text
//! T(n, k) = Σ_{0 ≤ j ≤ n−k, j even} C(k, j) · C(n−k, j),    0 ≤ k ≤ n
//! ```
//!
//! together with its reduction modulo 2, the row sums `r(n)` and diagonal
//! sums `d(n)` of the parity triangle, and the bitwise Lucas kernels that
//! make the parity triangle cheap.
//!
//! Parity entries never touch the defining sum: `T(n, k) mod 2` equals
//! `C(n, k) mod 2` when `n + k` is even and `C(n−1, k) mod 2` otherwise,
//! and `C(n, k)` is odd exactly when the bits of `k` are a subset of the
//! bits of `n`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::DomainError;

fn check_column(n: u64, k: u64) -> Result<(), DomainError> {
    if k > n {
        Err(DomainError::ColumnOutOfRange { n, k })
    } else {
        Ok(())
    }
}

/// Exact value of `T(n, k)`.
///
/// The product `C(k, j)·C(n−k, j)` is carried from one `j` to the next with
/// the multiplicative step `(k−j)(n−k−j) / (j+1)²`, so each entry costs
/// `O(min(k, n−k))` big-integer operations and no factorials are formed.
///
/// ```
/// use barry_core::triangle::t_exact;
///
/// assert_eq!(t_exact(8, 4).unwrap(), 38u32.into());
/// assert!(t_exact(3, 4).is_err());
/// ```
pub fn t_exact(n: u64, k: u64) -> Result<BigUint, DomainError> {
    check_column(n, k)?;
    let (a, b) = (k, n - k);
    let top = a.min(b);

    let mut sum = BigUint::zero();
    let mut product = BigUint::one(); // C(a, j) · C(b, j) at j = 0
    for j in 0..=top {
        if j % 2 == 0 {
            sum += &product;
        }
        if j < top {
            product *= (a - j) as u128 * (b - j) as u128;
            let step = (j + 1) as u128;
            product /= step * step;
        }
    }
    Ok(sum)
}

/// Parity of the ordinary binomial coefficient `C(n, k)`, by Lucas'
/// congruence at `p = 2`: odd iff every set bit of `k` is also set in `n`.
///
/// Returns `false` for `k > n`, where `C(n, k) = 0`.
#[inline]
pub fn binom_parity(n: u64, k: u64) -> bool {
    k & !n == 0
}

/// The integer whose binary digit `i` is `min(ε_i(n), ε_i(k))`.
#[inline]
pub fn digit_and(n: u64, k: u64) -> u64 {
    n & k
}

/// `T(n, k) mod 2`, computed from the parity-reduction rule.
///
/// ```
/// use barry_core::triangle::t_parity;
///
/// // row 8 of the parity triangle is 1 1 0 1 0 1 0 1 1
/// let row: Vec<bool> = (0..=8).map(|k| t_parity(8, k).unwrap()).collect();
/// assert_eq!(row, [true, true, false, true, false, true, false, true, true]);
/// ```
pub fn t_parity(n: u64, k: u64) -> Result<bool, DomainError> {
    check_column(n, k)?;
    Ok(t_parity_unchecked(n, k))
}

#[inline]
fn t_parity_unchecked(n: u64, k: u64) -> bool {
    if (n + k) % 2 == 0 {
        binom_parity(n, k)
    } else {
        // n + k odd forces k < n, so n − 1 ≥ k
        binom_parity(n - 1, k)
    }
}

/// Whether a row holds exact values of `T(n, ·)` or their residues mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowMode {
    Exact,
    Parity,
}

/// One row `T(n, 0), …, T(n, n)` of the triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRow {
    pub n: u64,
    pub entries: Vec<BigUint>,
    pub mode: RowMode,
}

impl TriangleRow {
    pub fn new(n: u64, mode: RowMode) -> Self {
        match mode {
            RowMode::Exact => row_exact(n),
            RowMode::Parity => row_parity(n),
        }
    }

    /// Sum of the entries.
    pub fn sum(&self) -> BigUint {
        self.entries.iter().sum()
    }
}

impl fmt::Display for TriangleRow {
    /// Entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Row `n` of the exact triangle, from the defining sum.
pub fn row_exact(n: u64) -> TriangleRow {
    let entries = (0..=n).map(|k| t_exact(n, k).expect("k <= n")).collect();
    TriangleRow {
        n,
        entries,
        mode: RowMode::Exact,
    }
}

/// Row `n` of the parity triangle.
pub fn row_parity(n: u64) -> TriangleRow {
    let entries = (0..=n)
        .map(|k| BigUint::from(t_parity_unchecked(n, k) as u8))
        .collect();
    TriangleRow {
        n,
        entries,
        mode: RowMode::Parity,
    }
}

/// Rows `0, 1, 2, …` generated one at a time.
pub fn rows(mode: RowMode) -> impl Iterator<Item = TriangleRow> {
    (0u64..).map(move |n| TriangleRow::new(n, mode))
}

/// `r(n)`: number of odd entries in row `n`, by direct count.
pub fn row_sum_brute(n: u64) -> BigUint {
    let count = (0..=n).filter(|&k| t_parity_unchecked(n, k)).count();
    BigUint::from(count)
}

/// `r(n)` in closed form:
///
/// ```text
/// r(n) = 2^{s₂(n)}                     n odd
/// r(n) = 2^{s₂(n)} + 2^{s₂(n−2)}       n even, n ≥ 2
/// r(0) = 1
/// ```
///
/// where `s₂` is the binary digit sum. Work is proportional to the bit
/// length of `n`.
pub fn row_sum_closed(n: &BigUint) -> BigUint {
    let pow2 = |m: &BigUint| BigUint::one() << m.count_ones();
    if n.bit(0) {
        pow2(n)
    } else if n.is_zero() {
        BigUint::one()
    } else {
        pow2(n) + pow2(&(n - 2u32))
    }
}

/// `d(n)`: odd entries on the `n`-th rising diagonal,
/// `Σ_{k ≤ ⌊n/2⌋} (T(n−k, k) mod 2)`. Linear in `n`.
pub fn diag_sum_brute(n: u64) -> BigUint {
    let count = (0..=n / 2)
        .filter(|&k| t_parity_unchecked(n - k, k))
        .count();
    BigUint::from(count)
}
