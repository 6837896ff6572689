//! Spectral extremal checks for chorded cycles in graphs of fixed size.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! computation: graph construction and canonical forms, spectral radii and
//! exact characteristic polynomials, chorded-cycle detection, and the
//! exhaustive enumeration used to verify the extremal characterizations.
//! IO, JSON, the worker pool and the command line live in the
//! `chorded-spectra` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod canon;
pub mod cycles;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod lab;
pub mod spectral;
pub mod structure;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use cycles::{
    chorded_cycle_oracle, find_s_chorded_k_cycle, has_chorded_cycle, has_k_minus_chorded_cycle,
    validate_witness, CycleWitness,
};
pub use enumerate::{EnumerationLimits, EnumerationMode, Enumerator, GraphClass};
pub use families::{copies, disjoint_union, family, join, FamilySpec, Fixture};
pub use graph::{Graph, GraphError};
pub use graph6::{graph6_decode, graph6_encode, Graph6Error};
pub use lab::{ExtremalReport, LabError, VerdictReport};
pub use spectral::{spectral_radius, SpectralResult};
pub use structure::{blocks, k_core, BlockDecomposition};
