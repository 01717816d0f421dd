//! Invariants and exact Lagrangian fillability for Legendrian 4-plat fronts.
//!
//! A 4-plat front is encoded by a band tuple like `[3,(6,2),2,(2,0),4]`. From
//! the tuple the crate computes classical invariants, normal rulings, the
//! Chekanov-Eliashberg differential over Z/2 with its augmentations and
//! linearized homology, decides fillability by the band criterion, and builds
//! replay-validated filling and positivity-reduction transcripts.

pub mod cobordism;
pub mod dga;
pub mod fillability;
pub mod front;
pub mod gf2;
pub mod linearization;
pub mod rulings;
pub mod tuple;

pub use front::{build_front, FrontDiagram};
pub use tuple::{enumerate_knot_tuples, enumerate_tuples, PlatTuple};
