use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    /// A requested size exceeds a configured resource ceiling.
    #[error("{what} = {requested} exceeds the ceiling {limit}")]
    Ceiling {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("word {0} is not geodesic")]
    NotGeodesic(String),

    #[error("word {0} does not trace a closed path")]
    NotClosed(String),

    #[error("word {0} does not trace a simple path")]
    NotSimple(String),

    #[error("no swap pattern at position {0}")]
    NoSwap(usize),

    #[error("polyomino is invalid: {0}")]
    InvalidPolyomino(&'static str),

    #[error("no dead-end completion of {word} with area up to {max_area}")]
    CompletionNotFound { word: String, max_area: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal error: {0}")]
    Internal(&'static str),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::Ceiling { .. } | Error::CompletionNotFound { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_ceiling(what: &'static str, requested: u64, limit: u64) -> Result<()> {
    if requested > limit {
        Err(Error::Ceiling {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
