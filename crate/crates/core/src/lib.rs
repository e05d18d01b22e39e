//! Transmission permutations and their combinatorics.
//!
//! The central type is [`Perm`], a bijection of the integers that is either
//! a finite perturbation of a shift (period 0) or an extended `k`-affine
//! permutation. On top of it the crate provides slipface functions, Bruhat
//! order, the Demazure product computed by min-plus multiplication,
//! reduced and Hecke word enumeration, the Brill-Noether and splitting-type
//! permutations, and the combinatorial model of line bundles on chains of
//! genus-1 curves.

pub mod acceptance;
pub mod bntheory;
pub mod corpus;
pub mod curves;
pub mod demazure;
pub mod error;
pub mod format;
pub mod oracle;
pub mod perm;
pub mod words;

pub use error::{Error, Result};
pub use perm::{InversionClass, Perm};
