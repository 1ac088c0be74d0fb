use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A closed-form operation was called outside the parameter range where
    /// its formula is defined.
    #[error("{op}: requires {condition}")]
    Domain {
        op: &'static str,
        condition: &'static str,
    },

    #[error("invalid rational {0:?} (expected \"p/q\" or an integer)")]
    ParseRational(String),

    #[error("malformed structure tensor: {0}")]
    MalformedTensor(String),

    #[error("value assignment repeats the point {0}")]
    RepeatedPoint(String),

    #[error("operation needs algebra parameters but the structure tensor has none")]
    MissingParams,

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
