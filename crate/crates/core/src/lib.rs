//! Octonion-like (8-dimensional) and sedenion-like (16-dimensional)
//! associative algebras, built as even subalgebras of Cl(4,0) and Cl(5,0)
//! from a generic blade engine, with exact-arithmetic verification of
//! their identities, norms, Hopf maps and gradings.

pub mod algebra;
pub mod clifford;
pub mod error;
pub mod grading;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod numeric;
pub mod octonion;
pub mod sampling;
pub mod scalar;
pub mod sedenion;
pub mod table;
pub mod transcribed;
pub mod verify;

pub use algebra::AlgebraKind;
pub use clifford::{Blade, Multivector, Sign, SignedBlade};
pub use error::{Error, Result, Seminorm};
pub use octonion::OctonionLike;
pub use scalar::{Rational, Scalar};
pub use sedenion::{DualSplit, SedenionLike};
pub use table::{Orientation, StructureTable, TableEntry};
