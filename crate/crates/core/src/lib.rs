//! Colored U-turn lattice models for `Sp(2n)` and `SO(2n+1)`.
//!
//! The crate computes exact partition functions of the atom and character
//! families of the model, compares them with Demazure atoms and characters,
//! checks the Yang–Baxter, reflection and unitarity identities of the
//! R-matrices, and realizes the bijections between states, Proctor patterns
//! and King/Sundaram tableaux together with the right-key map.

pub mod algebra;
pub mod demazure;
pub mod error;
pub mod model;
pub mod partition;
pub mod patterns;
pub mod weyl;
pub mod ybe;

pub use algebra::{Exponents, LaurentPolynomial, Variables};
pub use demazure::{CartanData, CartanType};
pub use error::{Error, Result};
pub use model::{Family, Model, State};
pub use partition::Partition;
pub use patterns::{Half, Letter, ProctorPattern, Tableau};
pub use weyl::{ColorPalette, SignedPermutation, Spin, WeylGroup};
