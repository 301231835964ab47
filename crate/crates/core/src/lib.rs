//! Exact kernels for studying the cogrowth series of the virtually Heisenberg
//! group `vH = H3(Z) ⋊ C2` with generating multiset `{x, x⁻¹, 8·t}`.
//!
//! The crate is `no_std` (it needs `alloc`). Thread pools, file formats and
//! the command-line front end live in the `cogrowth` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod dioph;
pub mod heis;
pub mod path;
pub mod series;
pub mod subword;
pub mod theorem;
pub mod walk;
