//! Exact combinatorics of blocks of category O for the classical
//! root-reductive Lie algebras gl(∞), so(∞) and sp(∞): root data, Weyl group
//! actions, truncated characters, Kazhdan–Lusztig polynomials and the
//! multiplicity formulas built from them.

pub mod charring;
pub mod error;
pub mod kl;
pub mod lie_data;
pub mod mult;
pub mod rational;
pub mod weyl;

pub use error::{Error, Result};
pub use lie_data::{LieType, Root, Weight};
