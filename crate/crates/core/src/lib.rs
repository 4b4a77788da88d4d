//! Finite-dimensional bound quiver algebras over the rationals, their module
//! categories, stratified structure, tilting theory and Serre functors.

pub mod algebra;
pub mod derived;
pub mod error;
pub mod homological;
pub mod json;
pub mod linalg;
pub mod module;
pub mod serre;
pub mod split;
pub mod strat;
pub mod tilting;
pub mod zoo;

pub use error::{Error, Result};
