//! Polytopality of graphs.
//!
//! This crate decides, bounds, or refutes whether a graph is the graph of a
//! convex polytope. It combines:
//!
//! - necessary conditions (connectivity, principal subdivisions, separation),
//! - the exact dimension-3 decision (planarity + 3-connectivity) and its
//!   consequences,
//! - simple-polytopality obstructions from short induced cycles and an
//!   exhaustive facet-complex search,
//! - exact rational constructions (convex hulls, products, joins,
//!   truncations, regular subdivisions and lifted products) that confirm
//!   realizable dimensions with verified skeletons.
//!
//! Entry points: [`obstructions::polytopality_range`] for the full report,
//! [`geometry`] for witness constructions, and the `polygraph` binary for the
//! command-line surface. The `examples/` directory has one runnable example
//! per major capability.

pub mod cli;
pub mod geometry;
pub mod graph;
pub mod obstructions;
pub mod simple_check;

pub use graph::Graph;
