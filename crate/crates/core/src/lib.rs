//! Finite pseudo-BCK algebras with very true operators: certification,
//! operator enumeration, deductive systems and quotients, homomorphisms,
//! the FLw class tower and pseudo-valuations.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod classes;
pub mod deduction;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod laws;
pub mod morphisms;
pub mod operators;
pub mod subset;
pub mod theorems;
pub mod valuations;

pub use algebra::{validate, validate_with, Algebra, Elem, Limits, RawAlgebra};
pub use error::{Error, Result, Verdict, Violation};
pub use operators::UnaryMap;
pub use subset::Subset;
