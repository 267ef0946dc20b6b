use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator index {index} outside alphabet of rank {rank}")]
    LetterOutOfRange { index: u32, rank: usize },
    #[error("alphabet mismatch: rank {left} vs rank {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("cannot parse word token `{0}`")]
    Parse(String),
    #[error("genus {genus} too small for {what}")]
    GenusTooSmall { genus: u32, what: &'static str },
    #[error("unsupported surface: {0}")]
    Surface(String),
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error("curve is not simple: {0}")]
    NotSimple(String),
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("index {index} out of range for length {len}")]
    Index { index: usize, len: usize },
    #[error("subword mismatch at position {0}")]
    SubwordMismatch(usize),
    #[error("mapping class does not fix {0}")]
    NotFixed(String),
    #[error("relator check failed: {0}")]
    Relator(String),
    #[error("signature: {0}")]
    Signature(String),
    #[error("invariant: {0}")]
    Invariant(String),
    #[error("no section recorded")]
    NoSection,
    #[error("stage `{stage}` failed: {reason}")]
    Stage { stage: String, reason: String },
    #[error("schema: {0}")]
    Schema(String),
    #[error("word budget of {0} letters exceeded")]
    Budget(usize),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
