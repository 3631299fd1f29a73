//! Structure theory of finite lattices around semidistributivity: the
//! kappa correspondence between join and meet irreducibles, minimal
//! pairs and their cycles, crowns, breadth, dismantlability and
//! planarity, generators for snakes and doubling constructions, and a
//! free-lattice term engine built on Whitman's decision procedure.
//!
//! Lattices are immutable once constructed and every analysis is a pure
//! function, so values can be shared freely across threads. Term stores
//! are cheap to create and self-contained; concurrent term work uses one
//! store per thread with identical results.

mod error;

pub mod analysis;
pub mod construct;
pub mod freelattice;
pub mod io;
pub mod lattice;
pub mod minpairs;

pub use error::LatticeError;
pub use lattice::{Element, ElementSet, FiniteLattice};
