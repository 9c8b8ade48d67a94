use crate::label::VertexLabel;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {0} is not in the diagram")]
    UnknownVertex(VertexLabel),
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("duplicate label {0}")]
    DuplicateLabel(VertexLabel),
    #[error("pair {0}-{1} given more than once")]
    DuplicatePair(VertexLabel, VertexLabel),
    #[error("self loop at {0}")]
    SelfLoop(VertexLabel),
    #[error("pair {0}-{1} needs b_forward > 0 > b_backward")]
    BadPair(VertexLabel, VertexLabel),
    #[error("no positive symmetrizer: ratio constraints disagree around a cycle through {0}")]
    NoSymmetrizer(VertexLabel),
    #[error("matrix is not skew-symmetrizable by the given symmetrizer at ({0},{1})")]
    NotSkewSymmetrizable(VertexLabel, VertexLabel),
    #[error("c-row of {0} has mixed signs")]
    MixedSign(VertexLabel),
    #[error("c-row of {0} is zero")]
    ZeroRow(VertexLabel),
    #[error("mutation at {0} yields an irrational weight")]
    NonIntegerWeight(VertexLabel),
    #[error("integer overflow while mutating at {0}")]
    Overflow(VertexLabel),
    #[error("{kind} index {k} out of range")]
    OutOfRange { kind: &'static str, k: i64 },
    #[error("exhaustive enumeration is limited to rank <= 4 (got {0})")]
    RankTooLarge(usize),
    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
