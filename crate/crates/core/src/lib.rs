//! Exact point visibility graphs and their colourings.
//!
//! The crate builds visibility graphs of planar point sets with exact
//! rational arithmetic, decides 2-, 3- and 4-colourability in polynomial
//! time, compiles 3-CNF formulas into point sets whose visibility graphs are
//! 5-colourable exactly when the formula is satisfiable, and reconstructs a
//! visibility graph with clique number 4 and chromatic number 6.

pub mod error;
pub mod example_g6;
pub mod four_colour;
pub mod geometry;
pub mod graph;
pub mod layout;
pub mod sat_reduction;
pub mod svg;
pub mod three_colour;

pub use error::{Error, Result};
