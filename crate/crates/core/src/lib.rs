//! Exact operator algebra for the planar toric code and the Cantor-space
//! calculus of its diagonal subalgebra.

pub mod config;
pub mod error;
pub mod gf2;
pub mod groupoid;
pub mod lattice;
pub mod oracle;
pub mod pauli;
pub mod report;
pub mod scalar;
pub mod toric;

pub use error::{Error, Result};
