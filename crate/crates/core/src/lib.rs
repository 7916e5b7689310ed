//! Affine Hecke algebras, their polynomial and metaplectic representations,
//! and Whittaker-function identities, computed exactly.

pub mod coeffring;
pub mod error;
pub mod hecke;
pub mod params;
pub mod qpoly;
pub mod reps;
pub mod rootsys;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
