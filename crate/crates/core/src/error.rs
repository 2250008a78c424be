use thiserror::Error;

pub type Result<T, E = ScatorError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScatorError {
    /// A division precondition failed: some scalar component (or sum of them)
    /// vanished.
    #[error("{op}: {what} is zero")]
    Domain { op: &'static str, what: &'static str },
    #[error("light-like scators are not invertible")]
    NotInvertible,
    #[error("element is not in the image of the embedding")]
    NotInImage,
}

impl ScatorError {
    pub(crate) fn domain(op: &'static str, what: &'static str) -> Self {
        ScatorError::Domain { op, what }
    }
}
