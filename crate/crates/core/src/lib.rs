//! Construction and analysis of large 3-connected 2-crossing-critical graphs.
//!
//! The crate builds graphs from tile signatures over the alphabet
//! `{L, d, A, B, D, H, I, V}`, computes exact domination and independence
//! numbers with verifiable witnesses, evaluates the sharp closed-form bounds
//! for both invariants, and certifies 3-connectivity and 2-crossing-criticality
//! at desk scale.
//!
//! The crate is `no_std` (requires `alloc`); all IO, file formats and the CLI
//! live in the companion `twocc` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod catalog;
pub mod criticality;
pub mod exact;
pub mod families;
pub mod graph;
pub mod planarity;
pub mod rng;
pub mod signature;
pub mod tilealg;

mod iso;
mod unionfind;

pub use catalog::Catalog;
pub use graph::{LabeledGraph, Multigraph, VertexSet};
pub use signature::Signature;
