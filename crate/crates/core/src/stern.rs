//! Stern's diatomic sequence: `s(0) = 0`, `s(1) = 1`, `s(2n) = s(n)`,
//! `s(2n+1) = s(n) + s(n+1)`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::triangle::binom_parity;

/// `s(n)` by a single most-significant-first scan over the bits of `n`.
///
/// The state is the pair `(s(m), s(m+1))` for the prefix `m` read so far,
/// starting from `m = 0`. Appending a 0 bit maps it to
/// `(s(m), s(m) + s(m+1))`, the Stern–Brocot matrix `L = [[1,0],[1,1]]`;
/// appending a 1 bit maps it to `(s(m) + s(m+1), s(m+1))`, the matrix
/// `R = [[1,1],[0,1]]`.
///
/// ```
/// use barry_core::stern::stern;
///
/// let s: Vec<u32> = (0u32..8).map(|n| stern(&n.into()).try_into().unwrap()).collect();
/// assert_eq!(s, [0, 1, 1, 2, 1, 3, 2, 3]);
/// ```
pub fn stern(n: &BigUint) -> BigUint {
    let mut lo = BigUint::zero();
    let mut hi = BigUint::one();
    for i in (0..n.bits()).rev() {
        if n.bit(i) {
            lo += &hi;
        } else {
            hi += &lo;
        }
    }
    lo
}

/// Carlitz's sum `Σ_{k ≤ ⌊n/2⌋} (C(n−k, k) mod 2)`, which equals `s(n+1)`.
pub fn carlitz_sum(n: u64) -> BigUint {
    let count = (0..=n / 2).filter(|&k| binom_parity(n - k, k)).count();
    BigUint::from(count)
}
