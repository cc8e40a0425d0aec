//! Exact computations with rings, modules, general bilinear forms and involutions.
//!
//! All arithmetic is exact, over `Q` or a prime field. Modules are right modules:
//! an algebra element `a` acts on a module by a matrix `rho(a)` applied to column
//! vectors, so `x·(ab)` is computed as `rho(b) * rho(a) * x`. Endomorphisms are
//! applied on the left.

pub mod algebra;
pub mod error;
pub mod forms;
pub mod involution;
pub mod linalg;
pub mod module;
pub mod posets;
pub mod search;
pub mod steinitz;

pub use error::{Error, Result};
pub use linalg::{Field, Matrix, Scalar, Vector};
