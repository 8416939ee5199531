//! Which of the two algebras an operation refers to.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::table::{Basis, Orientation, StructureTable};
use crate::{octonion, sedenion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraKind {
    #[serde(rename = "octonion-like")]
    OctonionLike,
    #[serde(rename = "sedenion-like")]
    SedenionLike,
}

impl AlgebraKind {
    pub const BOTH: [AlgebraKind; 2] = [AlgebraKind::OctonionLike, AlgebraKind::SedenionLike];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::OctonionLike => "octonion-like",
            AlgebraKind::SedenionLike => "sedenion-like",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            AlgebraKind::OctonionLike => octonion::DIM,
            AlgebraKind::SedenionLike => sedenion::DIM,
        }
    }

    /// Generator count of the ambient Clifford algebra.
    pub fn generators(self) -> u8 {
        match self {
            AlgebraKind::OctonionLike => octonion::GENERATORS,
            AlgebraKind::SedenionLike => sedenion::GENERATORS,
        }
    }

    pub fn names(self) -> &'static [&'static str] {
        match self {
            AlgebraKind::OctonionLike => &octonion::NAMES,
            AlgebraKind::SedenionLike => &sedenion::NAMES,
        }
    }

    pub fn basis(self) -> &'static Basis {
        match self {
            AlgebraKind::OctonionLike => octonion::basis(),
            AlgebraKind::SedenionLike => sedenion::basis(),
        }
    }

    pub fn table(self, orientation: Orientation) -> &'static StructureTable {
        match self {
            AlgebraKind::OctonionLike => octonion::structure_table(orientation),
            AlgebraKind::SedenionLike => sedenion::structure_table(orientation),
        }
    }

    pub fn is_real_unit(self, i: usize) -> bool {
        match self {
            AlgebraKind::OctonionLike => octonion::is_real_unit(i),
            AlgebraKind::SedenionLike => sedenion::is_real_unit(i),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "octonion-like" => Ok(AlgebraKind::OctonionLike),
            "sedenion-like" => Ok(AlgebraKind::SedenionLike),
            other => Err(Error::Input(format!("unknown algebra {other:?}"))),
        }
    }
}
