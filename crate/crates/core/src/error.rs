use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),

    /// A row or column of the table repeats a value: `table[a][b] == table[a][c]`
    /// (rows) or `table[b][a] == table[c][a]` (columns).
    #[error("latin-square axiom violated in {axis} {line}: entries at {first} and {second} are both {value}")]
    NotBijectiveRow {
        axis: &'static str,
        line: usize,
        first: usize,
        second: usize,
        value: usize,
    },

    #[error("identity axiom violated: no element e with e*x = x*e = x for all x")]
    NoIdentity,

    #[error("associativity violated: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },

    #[error("group of order {order} exceeds the configured maximum {max}")]
    GroupTooLarge { order: usize, max: usize },

    #[error("unsupported group spec `{0}`")]
    UnsupportedSpec(String),

    #[error("character table diagonalization failed: {0}")]
    DiagonalizationFailed(String),

    #[error("invalid character table: {0}")]
    InvalidCharacterTable(String),

    #[error("partition is not subtractable: deficit in parts equal to {part}")]
    NotSubtractable { part: usize },

    #[error("cannot pad a partition of size {size} to {n}")]
    PadTooSmall { size: usize, n: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("sequence {0:?} is not a cycle of the permutation")]
    NotACycle(Vec<usize>),

    #[error("support point {point} lies outside [1, {n}]")]
    SupportExceedsN { point: usize, n: usize },

    #[error("not a bijection of its support: {0}")]
    InvalidPartialPermutation(String),

    #[error("index {index} out of range for {count} {what}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        count: usize,
    },

    #[error("family kinds differ (class-indexed vs character-indexed)")]
    BasisMismatch,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("class of size {size} exceeds the streaming cap {cap}")]
    CapExceeded { size: u64, cap: u64 },

    #[error("family {which} is not proper (identity-class entry has parts equal to 1)")]
    NotProper { which: String },

    #[error("guardrail exceeded: {0}")]
    GuardrailExceeded(String),
}
