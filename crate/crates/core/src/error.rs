use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An integer parameter exceeds what the exact layer is prepared to expand.
    #[error("{what} = {value} exceeds the supported maximum {max}")]
    Range { what: &'static str, value: u64, max: u64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("s = {s} is outside the domain of {id} ({domain})")]
    OutsideDomain { id: String, s: u32, domain: String },
    #[error("atom {0} has no numeric evaluator")]
    UnsupportedAtom(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}
