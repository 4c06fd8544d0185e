use core::fmt;

/// Errors reported by the library. Mathematical outcomes (a degenerate direct sum, a failed
/// identity check) are regular results, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DimensionMismatch { expected: usize, found: usize },
    /// Exhaustive enumeration would exceed the supported size.
    EnumerationBound { bits: usize, limit: usize },
    DegenerateForm,
    NotIsotropic,
    /// The claimed subalgebra is not contained in the ambient one.
    NotContained,
    NotOrthogonal,
    ParameterCount { expected: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::EnumerationBound { bits, limit } => {
                write!(f, "enumeration needs 2^{bits} candidates, limit is 2^{limit}")
            }
            Error::DegenerateForm => f.write_str("quadratic form is degenerate"),
            Error::NotIsotropic => f.write_str("subspace is not isotropic"),
            Error::NotContained => f.write_str("subalgebra is not contained in the ambient algebra"),
            Error::NotOrthogonal => f.write_str("matrix does not preserve the form"),
            Error::ParameterCount { expected, found } => {
                write!(f, "expected {expected} parameters, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}
