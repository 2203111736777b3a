//! Exact hypergraph and CW-hypergraph Laplacians.
//!
//! Powers of the even Laplacian I·Iᵗ count vertex walks, powers of the odd
//! Laplacian Iᵗ·I count edge walks, and for CW-hypergraphs the signed
//! versions I_d·I_dᵗ and I_dᵗ·I_d give signed sums over walks between d- and
//! (d+1)-cells. [`enumerate`] re-derives every such value by brute force.

pub mod enumerate;
pub mod error;
pub mod evolve;
pub mod formats;
pub mod laplacian;
pub mod model;
pub mod walkcount;

pub use error::{Error, ParseError, ParseErrorKind, Result, SourceLocation};
pub use laplacian::{ExactMatrix, Family, Parity};
pub use model::{CwHypergraph, Hypergraph, Incidence, Instance, Sign, ValidationReport};
pub use walkcount::{CountResult, WalkKind, WalkQuery};
