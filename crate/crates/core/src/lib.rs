//! Exact computations with primitive axial algebras of Jordan type 1/2.
//!
//! The crate builds Matsuo algebras of 3-transposition groups, certifies axes
//! and their fusion law, computes the Frobenius form, classifies the
//! subalgebras generated by two axes, decides their solidity and decides
//! whether an algebra is Jordan. All arithmetic is exact.

pub mod algebra;
pub mod error;
pub mod jordan;
pub mod linalg;
pub mod lines;
pub mod matsuo;
pub mod scalars;
pub mod solidity;

pub use algebra::{Algebra, AnyAlgebra, AxialAlgebra, AxisRecord, CertifiedAlgebra, FrobeniusForm};
pub use error::{
    AlgebraError, Error, GroupError, JordanError, LineError, ScalarError, SolidityError,
};
pub use scalars::{
    DualNumbers, Extends, Field, FieldSpec, PrimeField, QuadExt, Rationals, Ring, Sqrt,
};
