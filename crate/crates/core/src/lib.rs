//! Facial edge colorings of plane multigraphs.
//!
//! Plane graphs are stored combinatorially as rotation systems over darts
//! (half-edges). On top of that representation this crate provides
//!
//! * [`embed`]: the embedding itself, facial walks, facial distance and the
//!   surgeries (deletion, identification, contraction) used by reductions,
//! * [`facial`]: ℓ-facial adjacency, colorings and their verification,
//! * [`listcolor`]: list coloring with free-vertex cores and Gallai trees,
//! * [`exact`]: exact ℓ-facial chromatic index by branch and bound,
//! * [`reduce`]: reducible configurations and a constructive 7-coloring
//!   engine for ℓ = 2,
//! * [`discharge`]: exact-rational charges and the R1–R4 redistribution,
//! * [`generate`]: deterministic graph families and seeded random plane
//!   multigraphs.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod color;
pub mod discharge;
pub mod embed;
pub mod exact;
pub mod facial;
pub mod generate;
pub mod listcolor;
pub mod reduce;

pub use color::{Color, ColorSet};
pub use embed::{Dart, EdgeId, EmbedError, FaceId, PlaneGraph, RotationSpec, VertexId};
pub use facial::Coloring;
