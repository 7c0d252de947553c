//! Exact quandle cohomology and cocycle state-sum invariants.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable values; IO, JSON and threading live in the
//! `quandle-lab` companion crate.
//!
//! * [`algebra`]: integer matrices with Smith/Hermite forms, Howell form over
//!   `Z/m`, group rings `Z[A]` for cyclic `A`, finite groups.
//! * [`quandle`]: finite quandles as operation tables, constructors and
//!   homomorphism search.
//! * [`cohomology`]: rack/degenerate/quandle chain complexes, (co)homology
//!   groups with representative cocycles, coboundary solving, pullbacks and
//!   the group-cocycle bridge.
//! * [`knots`]: braid closures, colorings and 2-cocycle state-sums.
//! * [`surfaces`]: surface-braid presentations and 3-cocycle state-sums.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod cohomology;
pub mod knots;
pub mod quandle;
pub mod surfaces;

pub use algebra::{Coefficients, FiniteGroup, GroupRingElement, IntegerMatrix};
pub use cohomology::{Cochain, CohomologyGroup, Theory};
pub use knots::BraidWord;
pub use quandle::{Quandle, QuandleHom};
pub use surfaces::SurfaceBraidPresentation;
