//! Exact arithmetic for class groups of modules and the rational polyhedral
//! cones they span.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`]: integer matrices, Smith normal form and finitely generated
//!   abelian groups.
//! * [`linalg`]: exact rational vectors and matrices.
//! * [`cone`]: polyhedral cones over the rationals (double description).
//! * [`classes`]: module classes with rank and determinant functionals,
//!   duals, syzygy recursions and pushforwards.
//! * [`theorems`]: validators that emit [`theorems::TheoremReport`]s.
//! * [`catalog`]: bundled ring descriptors and class data.
//! * [`format`]: the text file format shared by inputs and reports.
//! * [`oracle`]: an independent Fourier-Motzkin feasibility check.
//! * [`repro`]: the reproducible criterion suite behind `conelab repro`.

pub mod catalog;
pub mod check;
pub mod classes;
pub mod cone;
pub mod error;
pub mod format;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod repro;
pub mod theorems;

pub use error::{Error, Result};
