//! Spectral analysis of the distance Seidel matrix `D^S(G) = J - I - 2D` of
//! connected graphs: exact characteristic polynomials, numeric spectra,
//! energy, closed-form families, eigenvalue bounds, graph operations with
//! predicted spectra, and catalog scans.

pub mod bounds;
pub mod cli;
pub mod eigen;
pub mod error;
pub mod families;
pub mod graph;
pub mod matrix;
pub mod ops;
pub mod poly;
pub mod scan;
pub mod seidel;

pub use error::{Error, Result};
pub use graph::Graph;
