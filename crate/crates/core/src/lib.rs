//! Combinatorics of integral blocks of BGG category O.
//!
//! A block is described by a Cartan type and a wall set. From the
//! Kazhdan-Lusztig polynomials of the Weyl group this crate derives graded
//! Verma multiplicities, graded Verma flags of projective and tilting
//! modules, the grading layers of tilting modules, their Loewy lengths and
//! a rigidity verdict for each tilting module. Every identity the theory
//! predicts between these numbers is available as a checked invariant
//! through [`oracle::verify_block`].

pub mod block;
pub mod coxeter;
pub mod error;
pub mod kl;
pub mod oracle;
pub mod poly;
pub mod tilting;

pub use block::{Block, GradedFlag, LayeredCharacter};
pub use coxeter::{CartanDatum, Elem, GroupTable};
pub use error::{Error, Result};
pub use kl::{KlEngine, KlTable};
pub use poly::{LaurentV, PolynomialQ};
