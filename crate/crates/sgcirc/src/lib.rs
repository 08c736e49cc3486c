//! Exact circular coloring of signed graphs.
//!
//! Everything is exact rational arithmetic: circular chromatic numbers are
//! computed as reduced fractions, colorings are certified by a verifier that
//! runs two independent formulations of the edge constraints, and every
//! constructive procedure re-verifies its own output before returning it.

pub mod bounds;
pub mod circle;
pub mod colorer;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod json;
pub mod rational;
pub mod solver;

pub use circle::{antipodal, circ_dist, transform_4eps, verify_coloring, Coloring, Verdict};
pub use error::{Error, Result};
pub use graph::{Sign, SignedGraph, SwitchSet};
pub use rational::Rational;
