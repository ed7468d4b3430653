//! Finite-dimensional modules over bound quiver algebras over prime fields,
//! torsion pairs, cotilting modules and the simple objects of cotilting hearts.

pub mod algebra;
pub mod cotilting;
pub mod decompose;
pub mod error;
pub mod field;
pub mod heart;
pub mod homology;
pub mod lattice;
pub mod matrix;
pub mod module;
pub mod torsion;
pub mod universe;

pub use error::{Error, Result};
