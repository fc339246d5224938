//! Oriented k-forcing: the k-color change rule on oriented graphs, exact
//! solvers for the forcing number and its extremes over orientations, bounds
//! with certificates, constructions, and an executable check catalog.

pub mod bounds;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod forcing;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use forcing::{closure, forcing_chains, is_forcing_set, step, ChainForest, ForcingTrace};
pub use graph::{Graph, OrientedGraph, VertexSet};
