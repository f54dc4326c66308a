use thiserror::Error;

/// An argument outside the domain of a sequence or triangle operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("column index k = {k} exceeds row index n = {n} (need 0 <= k <= n)")]
    ColumnOutOfRange { n: u64, k: u64 },
    #[error("partial quotient at position {position} is 0 (entries must be >= 1)")]
    ZeroPartialQuotient { position: usize },
}
