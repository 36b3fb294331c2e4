//! Right-triangle contact representations of plane triangulations.
//!
//! The crate builds RT-representations from Schnyder woods, decides whether
//! two representations are connected by a piecewise linear morph and, if so,
//! computes one with exact rational coordinates.

pub mod cli;
pub mod error;
pub mod io;
pub mod plane_graph;
pub mod schnyder;
pub mod lattice;
pub mod morph;
pub mod rt;

pub use error::{Error, Result};
pub use plane_graph::{build_triangulation, GraphSpec, PlaneTriangulation, Triangle3};
