//! String cones, string and Lusztig polytopes, and `A_{n-1}` branching for
//! the classical Lie algebras of types B, C and D.

pub mod audit;
pub mod branching;
pub mod cones;
pub mod error;
pub mod oracle;
pub mod polytopes;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{CartanMatrix, EpsVector, Family, LieType, Rational, RootSystem, Weight};
pub use weyl::{ReducedWord, SignedPermutation};
