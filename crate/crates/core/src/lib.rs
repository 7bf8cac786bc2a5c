//! Exact computations for affine embeddings of `G/Ru(P)`.
//!
//! The crate is organized bottom-up:
//!
//! * [`rootsys`]: Cartan data, weights, pairings and Weyl group actions.
//! * [`dynkin`]: node sets and graph algorithms on Dynkin diagrams.
//! * [`repcalc`]: Weyl dimensions, Freudenthal multiplicities and Klimyk
//!   tensor products for `G` and for its standard Levi subgroups.
//! * [`conegeom`]: double description of rational polyhedral cones and their
//!   face lattices.
//! * [`orbits`]: orbit classification, modality, finiteness and smoothness of
//!   canonical and general affine embeddings.
//! * [`tangent`]: the minimal ambient module at the fixed point of the
//!   canonical embedding, with a brute-force L-generation oracle.
//!
//! Everything is exact: weights and cones live over arbitrary-precision
//! rationals, dimensions are arbitrary-precision integers. The crate is
//! `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod conegeom;
pub mod dynkin;
mod error;
mod lattice;
pub mod linalg;
pub mod orbits;
pub mod repcalc;
pub mod rootsys;
pub mod tangent;


pub use dynkin::NodeSet;
pub use error::{Error, Result};
pub use linalg::Q;
pub use orbits::{OrbitDatum, OrbitKey, OrbitPoset};
pub use repcalc::IsotypicSummand;
pub use conegeom::{Cone, Face, FaceSpans};


pub use rootsys::{Basis, RootSystem, SimpleType, Weight};
pub use tangent::{SummandReport, TangentReport};

