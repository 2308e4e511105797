use thiserror::Error;

/// Errors raised by the linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("prime mismatch: {left} vs {right}")]
    PrimeMismatch { left: u32, right: u32 },
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },
    #[error("entry {value} out of range for GF({p})")]
    EntryOutOfRange { value: u64, p: u32 },
    #[error("basis rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },
}

pub type Result<T> = std::result::Result<T, LinalgError>;
