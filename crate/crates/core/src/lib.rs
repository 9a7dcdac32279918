//! Exact computations with Frobenius-decorated Heisenberg string diagrams.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
extern crate alloc;

pub mod coeff_ring;
pub mod linalg;
pub mod partitions_symfunc;
pub mod frobenius;
pub mod heisenberg;
pub mod diagram_engine;
pub mod annular_trace;
