//! Exact computations with Z-graded Lie superalgebras.
//!
//! Everything is done over `Q` or `Q(a)` ([`field::Scalar`]): Cartan prolongs
//! ([`prolong`]), the Spencer complex and `H^{k,2}` ([`spencer`]), the `g_0`-module
//! structure of the cohomology ([`modules`]) and the involutivity test ([`involutivity`]).
//! [`registry`] lists the named cases and [`report`] turns a run into JSON.

pub mod error;
pub mod field;
pub mod linalg;
pub mod superspace;
pub mod algebra;
pub mod classical;
pub mod cartan_matrix;
pub mod grading;
pub mod prolong;
pub mod vectorial;
pub mod modules;
pub mod spencer;
pub mod involutivity;
pub mod registry;
pub mod report;

pub use error::{Error, Result};
pub use field::Scalar;
