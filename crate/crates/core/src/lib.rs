//! Finite Dung-style argument systems.
//!
//! The crate covers the admissible, preferred and stable semantics, the
//! decision problems built on them (including the variants that come with
//! a credulous-acceptance vector), the 3-CNF reduction gadget and its
//! verification harness, encoding schemes for extension families,
//! exact minimal-formula lengths for tiny systems, and a brute-force
//! realisability survey.
//!
//! Everything exponential is paired with an independent brute-force route
//! so the two can be checked against each other at small sizes.
#![no_std]
extern crate alloc;

pub mod decisions;
pub mod encodings;
pub mod error;
pub mod generators;
pub mod realisable;
pub mod reduction;
pub mod search;
pub mod semantics;
pub mod set;
pub mod system;

pub use decisions::AcceptanceVector;
pub use error::{Error, Result};
pub use set::{ArgSet, ExtensionFamily, Semantics, MAX_ARGS};
pub use system::ArgumentSystem;
