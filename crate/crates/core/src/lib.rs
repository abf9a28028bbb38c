//! EFX orientations of graph instances with symmetric additive valuations.
//!
//! Agents are vertices and items are edges; an item may only go to one of its
//! two endpoints. The crate verifies orientations, shrinks instances with
//! answer-preserving reductions, decides binary instances through several
//! structural solvers, and generates instances from SAT and multicolored
//! independent set.

pub mod cli;
pub mod model;
pub mod preprocess;
pub mod reductions;
pub mod rooting;
pub mod solvers;
pub mod structure;

pub use model::{Instance, Orientation, Value, VerifyReport};
