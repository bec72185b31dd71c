use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A brute-force enumeration would visit more items than the configured cap allows.
    #[error("enumeration cap exceeded while enumerating {what}: {size} items > cap {cap}")]
    EnumerationCapExceeded { what: String, size: u128, cap: u64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("backend mismatch: {0}")]
    BackendMismatch(String),

    #[error("predicate undefined on the zero object")]
    ZeroObject,

    #[error("quiver contains an oriented cycle")]
    CyclicQuiver,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("object {0} does not belong to the universe")]
    NotInUniverse(String),

    #[error("universe is not closed: {0}")]
    UniverseNotClosed(String),

    #[error("support is not well defined: {0}")]
    IllDefinedSupport(String),

    #[error("not a lattice: {0}")]
    NotALattice(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, size: u128, cap: u64) -> Self {
        Error::EnumerationCapExceeded {
            what: what.into(),
            size,
            cap,
        }
    }

    /// Checks `size <= cap`, otherwise returns the cap error.
    pub(crate) fn check_cap(what: impl FnOnce() -> String, size: u128, cap: u64) -> Result<()> {
        if size > cap as u128 {
            Err(Error::cap(what(), size, cap))
        } else {
            Ok(())
        }
    }
}
