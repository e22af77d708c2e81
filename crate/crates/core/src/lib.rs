//! Binary Steinhaus triangles and Steinhaus graphs.
//!
//! - [`gf2`]: packed GF(2) vectors and matrices, rank, inversion, solves,
//!   block forward substitution.
//! - [`binomial`]: exact binomials, binomial submatrices and determinants.
//! - [`triangle`]: the triangle value type, side formulas and symmetries.
//! - [`generating`]: generating index sets, enumeration, orbits, and the
//!   index set `A_n` with its block structure.
//! - [`graph`]: Steinhaus graphs, simple graphs and the universal embedding.

pub mod binomial;
pub mod error;
pub mod generating;
pub mod gf2;
pub mod graph;
pub mod triangle;

pub use error::{Error, Result};
pub use generating::{DelahanIndexSet, IndexSet};
pub use gf2::{BitMatrix, BitRow, BlockPartition};
pub use graph::{embed, extract, graph_from_seq, SimpleGraph, SteinhausGraph};
pub use triangle::{triangular_number, SteinhausTriangle, Symmetry, TrianglePos};
