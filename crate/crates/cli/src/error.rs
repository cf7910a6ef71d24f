use thiserror::Error;
use wreath_core::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("group file: {0}")]
    GroupFile(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

/// Distinct exit codes per failure class.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const GROUP: i32 = 3;
    pub const INVALID_INPUT: i32 = 4;
    pub const NOT_PROPER: i32 = 5;
    pub const SIZE_MISMATCH: i32 = 6;
    pub const CAP_EXCEEDED: i32 = 7;
    pub const CONFIG: i32 = 8;
    pub const IO: i32 = 9;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                CoreError::MalformedTable(_)
                | CoreError::NotBijectiveRow { .. }
                | CoreError::NoIdentity
                | CoreError::NotAssociative { .. }
                | CoreError::GroupTooLarge { .. }
                | CoreError::UnsupportedSpec(_)
                | CoreError::DiagonalizationFailed(_)
                | CoreError::InvalidCharacterTable(_) => exit::GROUP,
                CoreError::NotProper { .. } => exit::NOT_PROPER,
                CoreError::SizeMismatch { .. } | CoreError::PadTooSmall { .. } => exit::SIZE_MISMATCH,
                CoreError::CapExceeded { .. } | CoreError::GuardrailExceeded(_) | CoreError::Overflow(_) => {
                    exit::CAP_EXCEEDED
                }
                CoreError::NotSubtractable { .. }
                | CoreError::NotACycle(_)
                | CoreError::SupportExceedsN { .. }
                | CoreError::InvalidPartialPermutation(_)
                | CoreError::IndexOutOfRange { .. }
                | CoreError::BasisMismatch => exit::INVALID_INPUT,
            },
            CliError::Usage(_) => exit::USAGE,
            CliError::Config(_) => exit::CONFIG,
            CliError::GroupFile(_) => exit::GROUP,
            CliError::Io(_) => exit::IO,
            CliError::VerificationFailed(_) => exit::VERIFICATION_FAILED,
        }
    }
}
