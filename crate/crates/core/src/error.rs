use thiserror::Error;

/// Failures raised by the library.
///
/// The variants split into caller mistakes ([`Error::Input`],
/// [`Error::InvalidClass`], [`Error::EmptyClass`]) and broken internal
/// invariants ([`Error::Internal`], [`Error::Overflow`]). The CLI maps the
/// first group to exit code 2 and the second to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid {field}: {reason}")]
    Input { field: &'static str, reason: String },

    #[error("invalid curve class: {0}")]
    InvalidClass(String),

    #[error("empty curve class: {0}")]
    EmptyClass(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn input(field: &'static str, reason: impl Into<String>) -> Self {
        Error::Input {
            field,
            reason: reason.into(),
        }
    }

    /// True for errors caused by the inputs rather than by the library.
    pub fn is_input(&self) -> bool {
        matches!(
            self,
            Error::Input { .. } | Error::InvalidClass(_) | Error::EmptyClass(_)
        )
    }

    /// Process exit code for this error: 2 for input errors, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.is_input() {
            2
        } else {
            3
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
