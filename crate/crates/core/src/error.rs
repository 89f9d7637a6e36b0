use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("unsupported field size {0}")]
    UnsupportedField(u32),
    #[error("no embedding defined from GF({sub}) into GF({ext})")]
    NoEmbeddingDefined { sub: u32, ext: u32 },
    #[error("zero input")]
    ZeroInput,
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("code has dimension 0")]
    EmptyCode,
    #[error("codes are not strictly nested")]
    NotNested,
    #[error("enumeration needs {needed} steps, cap is {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("order {order} out of range 0..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("code length {len} exceeds the configured maximum {max}")]
    LengthCapExceeded { len: u128, max: usize },
    #[error("code is not Hermitian self-orthogonal")]
    NotSelfOrthogonal,
    #[error("record parameters are not exact")]
    InexactParameters,
    #[error("witness is invalid: {0}")]
    WitnessInvalid(String),
    #[error("no codeword of weight {weight} ({})", if *.proven { "proven absent" } else { "scan was capped" })]
    NotFound { weight: usize, proven: bool },
    #[error("witness search failed for weight {0}")]
    WitnessSearchFailed(usize),
    #[error("no point bijection GF({q})^{m} -> GF({ext})")]
    PointOrderMismatch { q: u32, m: usize, ext: u32 },
}
