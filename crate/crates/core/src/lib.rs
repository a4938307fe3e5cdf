//! Tableau models for polynomial representations of the symplectic,
//! orthogonal and Pin groups, with exact verification oracles.
//!
//! * [`alphabet`], [`shape`], [`filling`], [`formal`]: value types.
//! * [`enumerate`]: semistandard fillings and basis predicates.
//! * [`relations`]: alternating, exchange and group relation vectors.
//! * [`straighten`]: rewriting fillings into basis combinations.
//! * [`tensor`]: relation spans by exact sparse elimination.
//! * [`lie`]: Weyl dimensions, characters and branching.
//! * [`verify`]: the verification tasks behind the command line tool.

pub mod alphabet;
pub mod echelon;
pub mod enumerate;
pub mod error;
pub mod filling;
pub mod formal;
pub mod group;
pub mod laurent;
pub mod lie;
pub mod relations;
pub mod shape;
pub mod straighten;
pub mod tensor;
pub mod verify;

pub use alphabet::{Alphabet, AlphabetKind, Symbol};
pub use enumerate::{
    enumerate_basis, enumerate_basis_with, is_basis_member, is_basis_member_with, weight_polynomial,
    weight_polynomial_with, BasisFamily, FamilyOptions,
};
pub use error::{Error, Result};
pub use filling::{Filling, FillingJson, Weight};
pub use formal::{FormalSum, Rational};
pub use group::Group;
pub use laurent::LaurentPoly;
pub use shape::{BoxPos, Partition, Shape};
pub use straighten::{Method, StraightenReport, Straightener};
pub use tensor::{OracleConfig, RelationSpan, SpanCache};
