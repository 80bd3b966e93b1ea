//! Exact algebra for plane polynomial maps `F = (P, Q)`: pencil analysis,
//! blow-up resolution of `(P : Q)`, non-proper value sets and the
//! predicate checks built on them.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod exact;
pub mod harness;
pub mod pencil;
pub mod properness;
pub mod resolution;
pub mod sample;

pub use error::{Error, Result};
