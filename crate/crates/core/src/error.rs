use crate::partition::Partition;

/// Errors surfaced by the engine.
///
/// `Verification` is special: it means an internal identity that the engine
/// is supposed to reproduce failed to hold, which falsifies either the build
/// or the transcribed statement it checks. Callers treat it as fatal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a partition: parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("{lambda} has more than {n} rows: zero representation of U({n})")]
    TooManyRows { lambda: Partition, n: usize },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("polynomial is not symmetric: orbit of exponent {exponent:?} has unequal coefficients")]
    NotSymmetric { exponent: Vec<u32> },

    #[error("coefficient of {lambda} in the {side} square is odd: character split is inconsistent")]
    InexactHalving { lambda: Partition, side: &'static str },

    #[error("negative multiplicity {mult} for {lambda} in the {side} square")]
    NegativeMultiplicity {
        lambda: Partition,
        mult: String,
        side: &'static str,
    },

    #[error("invalid configuration: need m >= 2 and k >= 1, got m={m}, k={k}")]
    InvalidConfig { m: u32, k: u32 },

    #[error("verification failure in {stage}: {detail}")]
    Verification { stage: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
