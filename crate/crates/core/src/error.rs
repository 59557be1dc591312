use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coefficient at index {index}")]
    NonFiniteCoefficient { index: usize },

    /// A scalar parameter fell outside its admissible range.
    #[error("{name} = {value} outside {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("test set is empty")]
    EmptyTestSet,

    #[error("power iteration did not converge within {max_iter} iterations")]
    NoConvergence { max_iter: usize },

    /// No closed-form finite-section matrix exists for this kernel kind.
    /// Currently unreachable: every kernel has one.
    #[error("no finite-section matrix for kernel {kind}")]
    UnsupportedKernel { kind: &'static str },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            expected,
        }
    }
}
