//! Hilbert series of subalgebras of Grassmannian cohomology rings generated
//! in low degree, with exact q-series, Schur and k-Schur calculus, and a
//! verification harness for the associated identities and conjectures.

pub mod cli;
pub mod error;
pub mod grassmann;
pub mod harness;
pub mod kschur;
pub mod lagrangian;
pub mod linalg;
pub mod partition;
pub mod qseries;
pub mod schur;

pub use error::{Error, Result};
pub use partition::{Partition, StrictPartition};
pub use qseries::QPoly;
pub use schur::{Rect, SymVector};
