//! Gems: edge-colored multigraphs encoding compact PL manifolds.
//!
//! A gem of dimension d is a multigraph with a proper edge coloring by
//! `{0, …, d}` in which every color except the last is a perfect matching;
//! vertices missing a d-colored edge form the boundary. This crate provides
//! the data model and censuses ([`graph`]), boundary graphs ([`boundary`]),
//! regular genus ([`genus`]), crystallization verification and gem-complexity
//! bound certificates for dimension 3 ([`recognition`]), graph surgery
//! ([`moves`]), generators for standard crystallization families
//! ([`constructions`]), and a text file format ([`format`]).

pub mod boundary;
pub mod error;
pub mod genus;
pub mod graph;
pub mod halfint;
mod unionfind;

pub use boundary::BoundaryGraph;
pub use error::{GemError, Result};
pub use genus::{regular_genus, CyclicPermutation, GenusReport};
pub use graph::{Census, ColoredGraph, ComplexSummary, VertexStats};
pub use halfint::HalfInteger;
