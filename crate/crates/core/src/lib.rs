//! Barry's modified Pascal triangle and the sequences read off its parity
//! triangle.
//!
//! The triangle is
//!
//! ```text
//! T(n, k) = Σ_{0 ≤ j ≤ n−k, j even} C(k, j) · C(n−k, j)
//! ```
//!
//! The crate evaluates the diagonal sums `d(n)` of `T mod 2` three
//! independent ways (summing the triangle, the continuant of the binary run
//! lengths of `n`, and a 2-regular linear representation) and the row sums
//! `r(n)` both by counting and in closed form. [`verify`] checks the
//! identities that connect them over index ranges, and [`bfile`] reads and
//! writes OEIS b-files.
//!
//! ```
//! use barry_core::{continuant::d_fast, triangle::diag_sum_brute};
//! use num_bigint::BigUint;
//!
//! for n in 0..200u64 {
//!     assert_eq!(d_fast(&BigUint::from(n)), diag_sum_brute(n));
//! }
//! ```

pub mod bfile;
pub mod continuant;
mod error;
pub mod regular;
pub mod stern;
pub mod triangle;
pub mod verify;

pub use error::DomainError;

pub use num_bigint::BigUint;

// Chapters of the guide in book/, compiled as doctests so the snippets stay
// in sync with the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/triangle.md")]
    pub mod triangle {}
    #[doc = include_str!("../../../book/src/diagonal-sums.md")]
    pub mod diagonal_sums {}
    #[doc = include_str!("../../../book/src/stern.md")]
    pub mod stern {}
    #[doc = include_str!("../../../book/src/regular.md")]
    pub mod regular {}
    #[doc = include_str!("../../../book/src/row-sums.md")]
    pub mod row_sums {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
