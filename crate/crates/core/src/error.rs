use core::fmt;

/// Errors raised while validating input data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A partition must have at least one part.
    EmptyInput,
    /// Partition parts must be positive.
    NonPositivePart { index: usize },
    /// Partition parts must be weakly decreasing.
    NotWeaklyDecreasing { index: usize },
    /// A multiplicity grid must be rectangular.
    RaggedRows { row: usize },
    /// Multiplicities are restricted to {0, 1, 2}.
    UnsupportedMultiplicity { row: usize, col: usize, value: u8 },
    /// Every ruling line of the grid must carry at least one point.
    EmptyRow { row: usize },
    /// Every ruling line of the grid must carry at least one point.
    EmptyColumn { col: usize },
    /// A scheme must contain at least one point.
    EmptyScheme,
    /// Mapping cone step index out of range.
    StepOutOfRange { step: usize, corners: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "partition must be nonempty"),
            Error::NonPositivePart { index } => {
                write!(f, "partition part {index} must be positive")
            }
            Error::NotWeaklyDecreasing { index } => {
                write!(f, "partition parts must be weakly decreasing (violated at part {index})")
            }
            Error::RaggedRows { row } => {
                write!(f, "multiplicity grid row {row} has a different length")
            }
            Error::UnsupportedMultiplicity { row, col, value } => {
                write!(f, "multiplicity {value} at ({row},{col}) is outside {{0,1,2}}")
            }
            Error::EmptyRow { row } => write!(f, "grid row {row} carries no point"),
            Error::EmptyColumn { col } => write!(f, "grid column {col} carries no point"),
            Error::EmptyScheme => write!(f, "scheme must contain at least one point"),
            Error::StepOutOfRange { step, corners } => {
                write!(f, "step {step} out of range (scheme has {corners} corners)")
            }
        }
    }
}

impl core::error::Error for Error {}
