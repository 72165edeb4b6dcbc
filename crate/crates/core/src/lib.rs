//! Interval-preserving monotone maps between finite Boolean lattices.
//!
//! The crate covers the cube category of such maps: canonical forms,
//! composition through the distributive lattice operad, tensor normal
//! forms, epi-mono factorizations with explicit sections, Boolean complexes
//! of finite posets with their subdivisions and triangulations, and integer
//! homology. Every fast decision procedure has a brute-force counterpart
//! that the test suite checks it against.

mod error;

pub mod cli;
pub mod complex;
pub mod homology;
pub mod json;
pub mod morphism;
pub mod normal_form;
pub mod operad;
pub mod order;

pub use error::{Error, Result};
