use thiserror::Error;

/// Which of the two octonion-like seminorms is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Seminorm {
    /// ‖·‖₁: scalar part plus the u₇ part of XX†.
    First,
    /// ‖·‖₂: scalar part minus the u₇ part of XX†.
    Second,
}

impl Seminorm {
    pub const BOTH: [Seminorm; 2] = [Seminorm::First, Seminorm::Second];

    /// Weight applied to the u₇ coefficient: +1 or -1.
    pub fn weight(self) -> i64 {
        match self {
            Seminorm::First => 1,
            Seminorm::Second => -1,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Seminorm::First => 1,
            Seminorm::Second => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} generators vs {right}")]
    DimensionMismatch { left: u8, right: u8 },

    #[error("orientation mismatch: lambda {left} vs {right}")]
    OrientationMismatch { left: i8, right: i8 },

    #[error("element is singular: seminorm {} vanishes", .which.index())]
    SingularElement { which: Seminorm },

    #[error("left-multiplication matrix is singular")]
    SingularMatrix,

    #[error("real and dual parts are not orthogonal (defect {defect:?})")]
    NotOrthogonal { defect: Vec<String> },

    #[error("associator denominator vanished at basis triple {0:?}")]
    ZeroDenominator((usize, usize, usize)),

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
