//! Exact computations for tilting-type predicates over bound quiver algebras.

pub mod algebra;
pub mod approx;
pub mod classifier;
pub mod complex;
pub mod corpus;
pub mod decompose;
pub mod error;
pub mod field;
pub mod format;
pub mod homological;
pub mod matrix;
pub mod module;
pub mod projective;
pub mod universe;
pub mod verdict;

pub use algebra::{build_algebra, Algebra, Arrow, Path, Quiver, Relation};
pub use error::{Error, ParseErrorKind, Result};
pub use field::{Field, Fp};
pub use matrix::Matrix;
pub use module::{Module, ModuleMap};
pub use verdict::Tri;

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
