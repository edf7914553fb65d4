//! Eccentricity matrices of graphs and of central-graph constructions.

pub mod ecc;
pub mod error;
pub mod graph;
pub mod ops;
pub mod spectral;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::Graph;
