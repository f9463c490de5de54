//! Combinatorial link diagrams and delta-move machinery.
//!
//! The crate works on oriented planar diagrams given as PD codes. On top of
//! the diagram layer it computes linking matrices, Conway polynomials, Arf
//! invariants, the self-delta classification pair and a Kauffman bracket
//! fingerprint; it detects and applies Reidemeister and delta moves on
//! trigons; and it combines parity and inequality constraints with pathway
//! evidence into bounds on delta distances and splitting numbers.
//!
//! Everything here is pure computation over immutable values and only needs
//! `alloc`. File formats, the shipped catalog and the command line live in
//! the `deltalink` crate.
#![no_std]

extern crate alloc;

pub mod analysis;
pub mod catalog;
pub mod diagram;
pub mod invariants;
pub mod moves;
pub mod poly;

mod dsu;

pub use analysis::{DistanceBound, MoveClass};
pub use catalog::{Catalog, CatalogEntry, KnownValues};
pub use diagram::{Crossing, DiagramError, LinkDiagram, Sign};
pub use invariants::{ConwayEngine, FamilyKey, Fingerprint, LinkingMatrix};
pub use moves::{MoveKind, MoveSite};
pub use poly::{ConwayPoly, Laurent};
