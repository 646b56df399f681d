//! Signed edge-dominated graphs.
//!
//! A weighting `f: E -> {+1, -1}` of a simple graph is a *signed edge
//! domination function* when every edge's closed neighborhood has weight
//! sum at least one. This crate builds the graph families used to study the
//! minimum total weight `g(n)` of such pairs, checks the numeric bounds around
//! it, and computes `g(n)` exactly for small `n`.

pub mod blowup;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod optimization;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Edge, SedReport, Sign, SignedGraph};
