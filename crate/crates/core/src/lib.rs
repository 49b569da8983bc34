//! Exact Hankel determinants of Catalan-like number triangles.
//!
//! The crate computes the admissible triangle `a(n,k)` of a weight sequence,
//! Hankel determinants of its (possibly backward) shifted columns over the
//! integers or over `Z[c]`, truncated power series built from the Motzkin-type
//! generating function, and checkers that evaluate the known determinant
//! identities instance by instance with counterexample witnesses.

pub mod cli;
pub mod error;
pub mod hankel;
pub mod polyfam;
pub mod ring;
pub mod sequences;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use hankel::{det_fraction_free, hankel_det, hankel_matrix, hankel_sequence, HankelSpec, SquareMatrix};
pub use ring::{Poly, Ring};
pub use sequences::{paths_oracle, AdmissibleTable, WeightSpec};
pub use series::TruncatedSeries;
